//! A Verma module: actions on `L_{-1}^2 ⊗ v` and its reduction back to `v`.

use svmod::catalog;
use svmod::induced::{to_records, Induced};
use svmod::{Generator, LinComb};

fn main() {
    let ind = Induced::new(catalog::verma());
    let v = LinComb::basis(ind.key_of(&[Generator::l(-1), Generator::l(-1)], ()).unwrap());
    let lowered = ind.act(&Generator::l(1), &v).unwrap();
    println!("L_1 . v = {}", serde_json::to_string(&to_records(&lowered)).unwrap());

    let (w, trace) = ind.reduce_to_base(&v).unwrap();
    for step in &trace {
        println!("apply {} -> degree {}", step.applied, serde_json::to_string(&step.actual).unwrap());
    }
    println!("lands on {:?} times the cyclic vector", w.coeff(&()));
}
