//! The joint kernel of the annihilators in a Verma module up to weight 4.

use svmod::catalog;
use svmod::induced::Induced;

fn main() {
    let ind = Induced::new(catalog::verma());
    let space = ind.singular_space(4).unwrap();
    println!("kernel dimension {}", space.basis.len());
    for (w, d) in &space.piece_dims {
        println!("  weight {w}: {d}");
    }
}
