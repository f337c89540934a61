//! W(2,2): the t = 0 criterion, the pairing computed by the engine, and the
//! reduction in a quotient base.

use svmod::catalog;
use svmod::induced::Induced;
use svmod::w22::{pairing_condition_check, t0_condition_check, w_reduce, WOneDim};
use svmod::{Generator, LinComb, Scalar};

fn main() {
    for (h, c) in [(-1, 1), (1, 1), (1, 0), (0, 5)] {
        let (h, c) = (Scalar::int(h), Scalar::int(c));
        println!("(h,c)=({h},{c}): literal {:?}, pairing {:?}", t0_condition_check(&h, &c), pairing_condition_check(&h, &c));
    }

    let ind = Induced::new(WOneDim::new_unchecked(Scalar::one(), Scalar::one(), Scalar::one()));
    let v = LinComb::basis(ind.key_of(&[Generator::wl(-5)], ()).unwrap());
    println!("W_5 L_-5 v = {:?}", ind.act(&Generator::w(5), &v).unwrap());

    let ind = Induced::new(catalog::w_quotient(2, 2));
    let key = ind.key_of(&[Generator::wl(-1), Generator::wl(-2), Generator::w(-3)], ind.base().unit()).unwrap();
    let (w, trace) = w_reduce(&ind, &LinComb::basis(key)).unwrap();
    for s in &trace {
        println!("apply {}", s.applied);
    }
    println!("base vector {:?}", w);
}
