//! Base modules over `𝒲_d` and the W(2,2) versions of degree, reduction and
//! the `t = 0` arithmetic criterion.
//!
//! Induced modules reuse [`Induced`]: the first slot of an [`IndKey`] holds
//! `W_{-d-s}` and the `Y` slot is always empty.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::base::{mt_injectivity_probe, BaseModule, Subalgebra};
use crate::error::{Error, Result};
use crate::generator::{Algebra, Family, Generator};
use crate::induced::{deg, IndKey, IndVector, Induced, Step};
use crate::lincomb::LinComb;
use crate::multi_index::{FiniteTuple, MultiIndex, WPair};
use crate::pbw::{Absorber, Engine, PbwOrder, Rank};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum T0Verdict {
    Pass,
    Fail { n: i64 },
}

impl T0Verdict {
    pub fn passed(self) -> bool {
        self == T0Verdict::Pass
    }
}

/// Decides `2 h_W + (n² - 1)/12 · c_W ≠ 0` for all nonzero integers `n`.
///
/// The smallest positive violating `n` is returned on failure.
pub fn t0_condition_check(h_w: &Scalar, c_w: &Scalar) -> T0Verdict {
    if c_w.is_zero() {
        return if h_w.is_zero() { T0Verdict::Fail { n: 1 } } else { T0Verdict::Pass };
    }
    // n² = 1 - 24 h_W / c_W
    let n2 = Scalar::one() - Scalar::int(24) * h_w / c_w;
    if !n2.is_integer() || n2.is_negative() || n2.is_zero() {
        return T0Verdict::Pass;
    }
    let value = n2.numer().clone();
    let root = value.sqrt();
    if &root * &root == value {
        let n = i64::try_from(root.abs()).expect("root fits in i64 for practical inputs");
        T0Verdict::Fail { n }
    } else {
        T0Verdict::Pass
    }
}

/// The nonvanishing condition produced by the brackets themselves:
/// `W_n L_{-n} ⊗ v = -n (2 h_W - (n² - 1)/12 · c_W) v` on a one-dimensional base.
pub fn pairing_condition_check(h_w: &Scalar, c_w: &Scalar) -> T0Verdict {
    t0_condition_check(h_w, &-c_w)
}

/// The one-dimensional `𝒲_0`-module with `t = 0`: `L_0 ↦ ξ`, `W_0 ↦ h_W`,
/// `C_W ↦ c_W`, positive modes act by zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WOneDim {
    pub xi: Scalar,
    pub h_w: Scalar,
    pub c_w: Scalar,
}

impl WOneDim {
    /// Requires `W_n L_{-n}` to act by a nonzero scalar for every `n ≥ 1`.
    pub fn new(xi: Scalar, h_w: Scalar, c_w: Scalar) -> Result<Self> {
        if let T0Verdict::Fail { n } = pairing_condition_check(&h_w, &c_w) {
            return Err(Error::InvalidParams(format!("W_{n} L_{{-{n}}} acts by zero for h_W={h_w}, c_W={c_w}")));
        }
        Ok(WOneDim { xi, h_w, c_w })
    }

    /// Skips the pairing check.
    pub fn new_unchecked(xi: Scalar, h_w: Scalar, c_w: Scalar) -> Self {
        WOneDim { xi, h_w, c_w }
    }
}

impl BaseModule for WOneDim {
    type Key = ();

    fn subalgebra(&self) -> Subalgebra {
        Subalgebra::W22 { d: 0 }
    }

    fn t(&self) -> u32 {
        0
    }

    fn cyclic(&self) {}

    fn act_sub(&self, g: &Generator, _key: &()) -> Result<LinComb<()>> {
        self.check_member(g)?;
        let s = match (g.family, g.index) {
            (Family::C, _) => &self.c_w,
            (Family::L, 0) => &self.xi,
            (Family::W, 0) => &self.h_w,
            _ => return Ok(LinComb::new()),
        };
        Ok(LinComb::single((), s.clone()))
    }
}

/// A Whittaker-type quotient of `U(𝒲_d)` with `t ≥ 1`: `L_i ↦ λ_i` on `S_λ`,
/// `L_i ↦ 0` above `t + d`, `W_t ↦ ω_t`, `W_k ↦ 0` above `t`, `C_W ↦ c_W`.
/// The free generators are `L_p` for `p ∈ {0..t+d} ∖ S_λ` and `W_{-d}, …, W_{t-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WQSpec {
    pub d: u32,
    pub t: u32,
    pub s_lambda: BTreeSet<i64>,
    #[serde(default)]
    pub lambda: BTreeMap<i64, Scalar>,
    pub omega_t: Scalar,
    pub c_w: Scalar,
}

impl WQSpec {
    pub fn validate(&self) -> Result<()> {
        let top = (self.t + self.d) as i64;
        if self.t == 0 {
            return Err(Error::InvalidSpec("the quotient base needs t >= 1".into()));
        }
        if let Some(x) = self.s_lambda.iter().find(|&&x| x < 1 || x > top) {
            return Err(Error::InvalidSpec(format!("s_lambda contains {x}, outside 1..={top}")));
        }
        if let Some(k) = self.lambda.keys().find(|k| !self.s_lambda.contains(k)) {
            return Err(Error::InvalidSpec(format!("lambda has a value at {k} outside s_lambda")));
        }
        if self.omega_t.is_zero() {
            return Err(Error::InvalidSpec("omega_t must be nonzero".into()));
        }
        for &i in &self.s_lambda {
            for &j in self.s_lambda.range(i + 1..) {
                let ok = i + j > top || (self.s_lambda.contains(&(i + j)) && self.lambda_of(i + j).is_zero());
                if !ok {
                    return Err(Error::InvalidSpec(format!("L_{i}, L_{j} break the character")));
                }
            }
        }
        Ok(())
    }

    pub fn lambda_of(&self, i: i64) -> Scalar {
        self.lambda.get(&i).cloned().unwrap_or_else(Scalar::zero)
    }
}

/// Basis key of [`WQ`]: exponents of the free `L_p` then of `W_{-d}, …, W_{t-1}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct WKey {
    pub i: FiniteTuple,
    pub j: FiniteTuple,
}

#[derive(Clone, Debug)]
pub struct WQ {
    spec: WQSpec,
    free_l: Vec<i64>,
    pos_l: BTreeMap<i64, usize>,
}

impl WQ {
    pub fn new(spec: WQSpec) -> Result<Self> {
        spec.validate()?;
        let free_l: Vec<i64> = (0..=(spec.t + spec.d) as i64)
            .filter(|p| !spec.s_lambda.contains(p))
            .collect();
        let pos_l = free_l.iter().enumerate().map(|(n, &p)| (p, n)).collect();
        let wq = WQ { spec, free_l, pos_l };
        let sample: Vec<LinComb<WKey>> = wq.small_sample().into_iter().map(LinComb::basis).collect();
        if !mt_injectivity_probe(&wq, &sample)?.injective {
            return Err(Error::InvalidSpec("W_t is not injective on the probe sample".into()));
        }
        Ok(wq)
    }

    pub fn spec(&self) -> &WQSpec {
        &self.spec
    }

    fn n_w(&self) -> usize {
        (self.spec.t + self.spec.d) as usize
    }

    fn w_floor(&self) -> i64 {
        -(self.spec.d as i64)
    }

    pub fn unit(&self) -> WKey {
        WKey {
            i: FiniteTuple::zeros(self.free_l.len()),
            j: FiniteTuple::zeros(self.n_w()),
        }
    }

    /// The unit and every single free generator.
    pub fn small_sample(&self) -> Vec<WKey> {
        let mut out = vec![self.unit()];
        for n in 0..self.free_l.len() {
            let mut k = self.unit();
            k.i.0[n] = 1;
            out.push(k);
        }
        for n in 0..self.n_w() {
            let mut k = self.unit();
            k.j.0[n] = 1;
            out.push(k);
        }
        out
    }

    fn is_free(&self, g: &Generator) -> bool {
        match g.family {
            Family::L => self.pos_l.contains_key(&g.index),
            Family::W => g.index >= self.w_floor() && g.index < self.spec.t as i64,
            _ => false,
        }
    }

    fn character(&self, g: &Generator) -> Scalar {
        match g.family {
            Family::L => self.spec.lambda_of(g.index),
            Family::W if g.index == self.spec.t as i64 => self.spec.omega_t.clone(),
            Family::C => self.spec.c_w.clone(),
            _ => Scalar::zero(),
        }
    }

    fn key_to_word(&self, key: &WKey) -> Vec<Generator> {
        let mut word = Vec::new();
        for (e, &p) in key.i.0.iter().zip(&self.free_l) {
            word.extend(std::iter::repeat(Generator::wl(p)).take(*e as usize));
        }
        for (n, e) in key.j.0.iter().enumerate() {
            word.extend(std::iter::repeat(Generator::w(self.w_floor() + n as i64)).take(*e as usize));
        }
        word
    }

    fn word_to_key(&self, word: &[Generator]) -> WKey {
        let mut key = self.unit();
        for g in word {
            match g.family {
                Family::L => key.i.0[self.pos_l[&g.index]] += 1,
                _ => key.j.0[(g.index - self.w_floor()) as usize] += 1,
            }
        }
        key
    }
}

impl Absorber for WQ {
    type Key = ();

    fn algebra(&self) -> Algebra {
        Algebra::W22
    }

    fn rank(&self, g: &Generator) -> Result<Option<Rank>> {
        self.check_member(g)?;
        Ok(if self.is_free(g) { PbwOrder::Quotient.rank(g) } else { None })
    }

    fn absorb(&self, g: &Generator, _key: &()) -> Result<LinComb<()>> {
        Ok(LinComb::single((), self.character(g)))
    }
}

impl BaseModule for WQ {
    type Key = WKey;

    fn subalgebra(&self) -> Subalgebra {
        Subalgebra::W22 { d: self.spec.d }
    }

    fn t(&self) -> u32 {
        self.spec.t
    }

    fn cyclic(&self) -> WKey {
        self.unit()
    }

    fn act_sub(&self, g: &Generator, key: &WKey) -> Result<LinComb<WKey>> {
        self.check_member(g)?;
        let engine = Engine::new(self);
        let out = engine.left_mul(g, &self.key_to_word(key), &())?;
        Ok(out.into_iter().map(|((w, ()), c)| (self.word_to_key(&w), c)).collect())
    }
}

/// `(i, j)` with `i` over `W_{-d-s}` and `j` over `L_{-s}`.
pub fn pair_of(triple: &(MultiIndex, MultiIndex, MultiIndex)) -> WPair {
    (triple.0.clone(), triple.2.clone())
}

/// The principal-order maximum of the support, as a pair.
pub fn w_deg<K: Ord + Clone>(v: &IndVector<K>) -> Result<WPair> {
    Ok(pair_of(&deg(v)?))
}

/// One reduction step on a W(2,2) induced module: `W_{ĵ+t}` while the `L`
/// slot is nonzero, then `L_{î+t+d}`.
pub fn w_claim_step<V: BaseModule>(ind: &Induced<V>, v: &IndVector<V::Key>) -> Result<(Generator, IndVector<V::Key>, WPair)> {
    ensure_w(ind)?;
    let (g, out, predicted) = ind.claim31_step(v)?;
    Ok((g, out, pair_of(&predicted)))
}

/// A reduction step with degrees as pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WStep {
    pub applied: Generator,
    pub predicted: WPair,
    pub actual: WPair,
}

impl From<Step> for WStep {
    fn from(s: Step) -> Self {
        WStep {
            applied: s.applied,
            predicted: pair_of(&s.predicted),
            actual: pair_of(&s.actual),
        }
    }
}

pub fn w_reduce<V: BaseModule>(ind: &Induced<V>, v: &IndVector<V::Key>) -> Result<(LinComb<V::Key>, Vec<WStep>)> {
    ensure_w(ind)?;
    let (w, trace) = ind.reduce_to_base(v)?;
    Ok((w, trace.into_iter().map(WStep::from).collect()))
}

fn ensure_w<V: BaseModule>(ind: &Induced<V>) -> Result<()> {
    match ind.subalgebra() {
        Subalgebra::W22 { .. } => Ok(()),
        Subalgebra::Sv { .. } => Err(Error::AlgebraMismatch("sv".into(), "w22".into())),
    }
}

/// Serialized term of a W(2,2) induced vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WRecord<K> {
    #[serde(default)]
    pub w: MultiIndex,
    #[serde(default)]
    pub l: MultiIndex,
    pub v: K,
    pub coeff: Scalar,
}

pub fn to_w_records<K: Ord + Clone>(v: &IndVector<K>) -> Vec<WRecord<K>> {
    v.iter()
        .map(|(k, c)| WRecord { w: k.m.clone(), l: k.l.clone(), v: k.v.clone(), coeff: c.clone() })
        .collect()
}

pub fn from_w_records<K: Ord + Clone>(records: Vec<WRecord<K>>) -> IndVector<K> {
    records
        .into_iter()
        .map(|r| (IndKey { m: r.w, y: MultiIndex::zero(), l: r.l, v: r.v }, r.coeff))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::int(n)
    }

    #[test]
    fn t0_examples() {
        assert_eq!(t0_condition_check(&s(-1), &s(1)), T0Verdict::Fail { n: 5 });
        assert_eq!(t0_condition_check(&s(1), &s(0)), T0Verdict::Pass);
        assert_eq!(t0_condition_check(&s(0), &s(7)), T0Verdict::Fail { n: 1 });
        assert_eq!(t0_condition_check(&s(0), &s(0)), T0Verdict::Fail { n: 1 });
        assert_eq!(t0_condition_check(&s(1), &s(1)), T0Verdict::Pass);
        assert_eq!(t0_condition_check(&Scalar::ratio(-1, 2), &Scalar::ratio(1, 4)), T0Verdict::Fail { n: 7 });
    }

    #[test]
    fn pairing_is_the_bracket() {
        let v = WOneDim::new(s(0), s(1), s(12)).unwrap();
        let ind = Induced::new(v.clone());
        for n in 1..6 {
            let key = ind.key_of(&[Generator::wl(-n)], ()).unwrap();
            let out = ind.act(&Generator::w(n), &LinComb::basis(key)).unwrap();
            let expect = Scalar::int(-n) * (s(2) * &v.h_w - Scalar::ratio(n * n - 1, 12) * &v.c_w);
            assert_eq!(out.coeff(&IndKey::base(())), expect);
        }
    }

    #[test]
    fn literal_pass_can_still_vanish() {
        // (h_W, c_W) = (1, 1) passes the literal criterion, yet W_5 kills L_{-5} ⊗ v.
        assert!(t0_condition_check(&s(1), &s(1)).passed());
        assert_eq!(pairing_condition_check(&s(1), &s(1)), T0Verdict::Fail { n: 5 });
        assert!(WOneDim::new(s(0), s(1), s(1)).is_err());
        let ind = Induced::new(WOneDim::new_unchecked(s(0), s(1), s(1)));
        let key = ind.key_of(&[Generator::wl(-5)], ()).unwrap();
        assert!(ind.act(&Generator::w(5), &LinComb::basis(key)).unwrap().is_zero());
    }

    #[test]
    fn one_dim_actions() {
        let ind = Induced::new(WOneDim::new(s(3), s(1), s(0)).unwrap());
        let v = LinComb::basis(ind.key_of(&[Generator::wl(-1)], ()).unwrap());
        assert_eq!(ind.act(&Generator::wl(1), &v).unwrap(), ind.cyclic().scaled(&s(-6)));
        assert_eq!(ind.act(&Generator::cw(), &v).unwrap(), LinComb::new());
        assert!(ind.act(&Generator::w(1), &ind.cyclic()).unwrap().is_zero());
    }

    #[test]
    fn w_steps() {
        let ind = Induced::new(WOneDim::new(s(0), s(1), s(12)).unwrap());
        let v = LinComb::basis(ind.key_of(&[Generator::wl(-1)], ()).unwrap());
        let (g, out, pred) = w_claim_step(&ind, &v).unwrap();
        assert_eq!(g, Generator::w(1));
        assert_eq!(pred, (MultiIndex::zero(), MultiIndex::zero()));
        assert_eq!(out, ind.cyclic().scaled(&s(-2)));
        let (_, trace) = w_reduce(&ind, &ind.cyclic()).unwrap();
        assert!(trace.is_empty());
        let v = LinComb::basis(ind.key_of(&[Generator::w(-2)], ()).unwrap());
        let (g, out, _) = w_claim_step(&ind, &v).unwrap();
        assert_eq!(g, Generator::wl(2));
        // [L_2, W_{-2}] = -4 W_0 + C_W / 2 with h_W = 1, c_W = 12.
        assert_eq!(out, ind.cyclic().scaled(&s(2)));
    }

    fn wq(d: u32, t: u32) -> WQ {
        let top = (t + d) as i64;
        let s_lambda: BTreeSet<i64> = (1..=top).collect();
        let lambda = s_lambda.iter().map(|&i| (i, if 2 * i <= top + 1 && i <= 2 { s(1) } else { s(0) })).collect();
        WQ::new(WQSpec { d, t, s_lambda, lambda, omega_t: s(1), c_w: s(0) }).unwrap()
    }

    #[test]
    fn quotient_base() {
        let q = wq(1, 1);
        assert_eq!(q.free_l, vec![0]);
        let u = q.unit();
        assert_eq!(q.act_sub(&Generator::w(1), &u).unwrap(), LinComb::basis(u.clone()));
        assert!(q.act_sub(&Generator::w(2), &u).unwrap().is_zero());
        let ind = Induced::new(q);
        let v = LinComb::basis(ind.key_of(&[Generator::wl(-1)], ind.base().unit()).unwrap());
        let (g, _, pred) = w_claim_step(&ind, &v).unwrap();
        assert_eq!(g, Generator::w(2));
        assert_eq!(pred, (MultiIndex::zero(), MultiIndex::zero()));
        let q22 = wq(2, 2);
        assert_eq!(q22.small_sample().len(), 1 + 1 + 4);
    }

    #[test]
    fn quotient_validation() {
        let bad = WQSpec {
            d: 1,
            t: 2,
            s_lambda: [1, 2].into(),
            lambda: [(1, s(1))].into(),
            omega_t: s(1),
            c_w: s(0),
        };
        assert!(WQ::new(bad).is_err());
        let zero_omega = WQSpec { d: 0, t: 1, s_lambda: [1].into(), lambda: BTreeMap::new(), omega_t: s(0), c_w: s(0) };
        assert!(WQ::new(zero_omega).is_err());
    }
}
