//! A Whittaker module: the character on the generating vector and the full
//! reduction of an induced vector to a multiple of it.

use svmod::base::BaseModule;
use svmod::catalog;
use svmod::induced::Induced;
use svmod::{Generator, LinComb, Scalar};

fn main() {
    let q = catalog::whittaker();
    let u = q.unit();
    for g in [Generator::l(1), Generator::y(0), Generator::m(1), Generator::m(2)] {
        println!("{g} acts on the generating vector by {:?}", q.act_sub(&g, &u).unwrap().coeff(&u));
    }

    let ind = Induced::new(q.clone());
    let key = ind.key_of(&[Generator::l(-2), Generator::y(-2), Generator::m(-3)], u.clone()).unwrap();
    let v = LinComb::single(key, Scalar::ratio(3, 2));
    let (w, trace) = ind.reduce_to_base(&v).unwrap();
    println!("{} steps into the base module", trace.len());
    let (end, steps) = q.q_reduce(&w).unwrap();
    println!("{} more steps to {:?}", steps.len(), end.coeff(&u));
}
