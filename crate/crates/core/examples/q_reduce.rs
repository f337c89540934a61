//! Reduction inside a quotient module with nonempty free sets in every family.

use svmod::catalog;
use svmod::{LinComb, Scalar};

fn main() {
    let q = catalog::q_3_2_2();
    println!("free L: {:?}, free Y: {:?}, free M: {:?}", q.bar_lambda(), q.bar_mu(), q.bar_nu());
    let mut key = q.unit();
    key.i.0[1] = 1;
    key.j.0[0] = 2;
    key.k.0[1] = 1;
    let v = LinComb::single(key, Scalar::one());
    let (end, steps) = q.q_reduce(&v).unwrap();
    for s in &steps {
        println!("case {} via {}: {}", s.case, s.applied, serde_json::to_string(&s.actual).unwrap());
    }
    println!("result {:?}", end.coeff(&q.unit()));
}
