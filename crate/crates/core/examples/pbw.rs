//! Normal forms in the enveloping algebra under both generator orders.

use svmod::pbw::{normal_product, straighten, NormalMonomial, PbwOrder};
use svmod::Generator;

fn main() {
    let word = [Generator::l(1), Generator::y(-1), Generator::m(-2), Generator::l(-1)];
    for order in [PbwOrder::Induced, PbwOrder::Quotient] {
        let nf = straighten(&word, order).expect("one algebra");
        println!("{order:?}: {}", serde_json::to_string(&to_pairs(&nf)).unwrap());
    }
    let m = NormalMonomial::from_word(&[Generator::l(-1)], 0);
    let p = normal_product(&m, &Generator::m(2), PbwOrder::Induced).unwrap();
    println!("M_2 * L_-1 -> {}", serde_json::to_string(&to_pairs(&p)).unwrap());
}

fn to_pairs(v: &svmod::LinComb<NormalMonomial>) -> Vec<(NormalMonomial, svmod::Scalar)> {
    v.iter().map(|(m, c)| (m.clone(), c.clone())).collect()
}
