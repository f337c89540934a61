//! Named module instances used by the property runner, the examples and the
//! acceptance tests.

use std::collections::{BTreeMap, BTreeSet};

use crate::base::{make_whittaker, OneDim, QModule, QSpec};
use crate::scalar::Scalar;
use crate::w22::{WOneDim, WQSpec, WQ};

fn s(n: i64) -> Scalar {
    Scalar::int(n)
}

/// One-dimensional base with `L_0 ↦ 1`, `M_0 ↦ 1`, `C ↦ 0`.
pub fn verma() -> OneDim {
    OneDim::new(s(1), s(1), s(0)).expect("nu0 is nonzero")
}

/// Whittaker base with every parameter equal to one and `c = 0`.
pub fn whittaker() -> QModule {
    make_whittaker([s(1), s(1)], [s(1), s(1)], s(1), s(1), s(0)).expect("valid Whittaker data")
}

/// `d1 = d2 = 0`, `t = 2` with `S_λ = {2}`, `S_μ = {1}`, `S_{ν,0} = {1}`,
/// `S_{ν,1} = {0, 2}` and all nonzero values equal to one.
pub fn q_t2_spec() -> QSpec {
    QSpec {
        d1: 0,
        d2: 0,
        t: 2,
        c: s(0),
        s_lambda: [2].into(),
        s_mu: [1].into(),
        s_nu0: [1].into(),
        s_nu1: [0, 2].into(),
        lambda: [(2, s(1))].into(),
        mu: [(1, s(1))].into(),
        nu: [(0, s(1)), (1, s(0)), (2, s(1))].into(),
    }
}

pub fn q_t2() -> QModule {
    QModule::new(q_t2_spec()).expect("valid data")
}

/// Quotient parameters that violate condition (I) at the pair `(1, 2)`.
pub fn condition_i_violation() -> QSpec {
    QSpec {
        d1: 0,
        d2: 0,
        t: 3,
        c: s(0),
        s_lambda: [1, 2].into(),
        s_mu: BTreeSet::new(),
        s_nu0: BTreeSet::new(),
        s_nu1: [0, 3].into(),
        lambda: BTreeMap::new(),
        mu: BTreeMap::new(),
        nu: [(0, s(1)), (3, s(1))].into(),
    }
}

/// `d1 = 1`, `d2 = 0`, `t = 2`: free `L_0`, `M_{-1}`, `M_1`, and `Y_{1/2}`.
pub fn q_1_0_2_spec() -> QSpec {
    QSpec {
        d1: 1,
        d2: 0,
        t: 2,
        c: s(0),
        s_lambda: [1, 2, 3].into(),
        s_mu: [2].into(),
        s_nu0: BTreeSet::new(),
        s_nu1: [0, 2].into(),
        lambda: [(1, s(2)), (2, s(3)), (3, s(0))].into(),
        mu: [(2, s(3))].into(),
        nu: [(0, s(1)), (2, s(3))].into(),
    }
}

pub fn q_1_0_2() -> QModule {
    QModule::new(q_1_0_2_spec()).expect("valid data")
}

/// `d1 = 3`, `d2 = 2`, `t = 2` with nonempty free sets in all three families.
pub fn q_3_2_2_spec() -> QSpec {
    QSpec {
        d1: 3,
        d2: 2,
        t: 2,
        c: Scalar::ratio(1, 2),
        s_lambda: [2, 4, 5].into(),
        s_mu: [2, 3, 4].into(),
        s_nu0: [1].into(),
        s_nu1: [-1, 0, 2].into(),
        lambda: [(2, s(3)), (4, s(5)), (5, s(6))].into(),
        mu: [(2, s(3)), (3, s(4)), (4, s(0))].into(),
        nu: [(-1, s(2)), (0, s(1)), (1, s(0)), (2, s(3))].into(),
    }
}

pub fn q_3_2_2() -> QModule {
    QModule::new(q_3_2_2_spec()).expect("valid data")
}

/// One-dimensional W(2,2) base with `ξ = 1`, `h_W = 1`, `c_W = 12`.
pub fn w_onedim() -> WOneDim {
    WOneDim::new(s(1), s(1), s(12)).expect("pairing condition holds")
}

/// W(2,2) quotient base with `S_λ = {1..t+d}`; `λ_i = 1` for `i ≤ 2` with
/// `2i ≤ t+d+1`, zero otherwise; `ω_t = 1`, `c_W = 0`.
pub fn w_quotient_spec(d: u32, t: u32) -> WQSpec {
    let top = (t + d) as i64;
    let s_lambda: BTreeSet<i64> = (1..=top).collect();
    let lambda = s_lambda
        .iter()
        .map(|&i| (i, if 2 * i <= top + 1 && i <= 2 { s(1) } else { s(0) }))
        .collect();
    WQSpec { d, t, s_lambda, lambda, omega_t: s(1), c_w: s(0) }
}

pub fn w_quotient(d: u32, t: u32) -> WQ {
    WQ::new(w_quotient_spec(d, t)).expect("valid data")
}
