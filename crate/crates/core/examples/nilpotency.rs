//! Nilpotency indices of annihilators and freeness of creation operators.

use svmod::catalog;
use svmod::induced::Induced;
use svmod::{Generator, LinComb};

fn main() {
    let ind = Induced::new(catalog::verma());
    let v = LinComb::basis(ind.key_of(&[Generator::l(-1), Generator::l(-1)], ()).unwrap());
    for g in [Generator::m(1), Generator::y(0), Generator::l(1), Generator::l(2)] {
        println!("{g}: {:?}", ind.nilpotency_probe(&g, &v, 12).unwrap());
    }
    for g in [Generator::m(-1), Generator::y(-1), Generator::l(-1)] {
        println!("{g} on the cyclic vector: {:?}", ind.nilpotency_probe(&g, &ind.cyclic(), 6).unwrap());
    }
}
