//! Induced modules `Ind(V) = U(𝔤) ⊗_{U(𝔭)} V` over a base module `V`.
//!
//! A basis key `(i, j, k) ⊗ v` stands for `M^i Y^j L^k ⊗ v`, where slot
//! position `s` of `i` is `M_{-d1-s}`, of `j` is `Y_{-d2-s+1/2}` and of `k` is
//! `L_{-s}`. For W(2,2) the first slot holds `W_{-d-s}` and `j` stays empty.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::base::{BaseModule, Subalgebra};
use crate::error::{Error, Result};
use crate::generator::{Algebra, Family, Generator};
use crate::linalg::to_matrix;
use crate::lincomb::LinComb;
use crate::multi_index::{partitions, principal_cmp_sv, MultiIndex, SvTriple};
use crate::pbw::{Absorber, Engine, PbwOrder, Rank, Word};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct IndKey<K> {
    pub m: MultiIndex,
    pub y: MultiIndex,
    pub l: MultiIndex,
    pub v: K,
}

impl<K> IndKey<K> {
    pub fn base(v: K) -> Self {
        IndKey {
            m: MultiIndex::zero(),
            y: MultiIndex::zero(),
            l: MultiIndex::zero(),
            v,
        }
    }

    pub fn triple(&self) -> SvTriple {
        (self.m.clone(), self.y.clone(), self.l.clone())
    }

    pub fn is_base(&self) -> bool {
        self.m.is_zero() && self.y.is_zero() && self.l.is_zero()
    }

    /// Total slot weight `w(i) + w(j) + w(k)`.
    pub fn weight(&self) -> u64 {
        self.m.weight() + self.y.weight() + self.l.weight()
    }
}

pub type IndVector<K> = LinComb<IndKey<K>>;

/// Serialized form of one term of an [`IndVector`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IndRecord<K> {
    #[serde(default)]
    pub m: MultiIndex,
    #[serde(default)]
    pub y: MultiIndex,
    #[serde(default)]
    pub l: MultiIndex,
    pub v: K,
    pub coeff: Scalar,
}

pub fn to_records<K: Ord + Clone>(v: &IndVector<K>) -> Vec<IndRecord<K>> {
    v.iter()
        .map(|(k, c)| IndRecord {
            m: k.m.clone(),
            y: k.y.clone(),
            l: k.l.clone(),
            v: k.v.clone(),
            coeff: c.clone(),
        })
        .collect()
}

pub fn from_records<K: Ord + Clone>(records: Vec<IndRecord<K>>) -> IndVector<K> {
    records
        .into_iter()
        .map(|r| (IndKey { m: r.m, y: r.y, l: r.l, v: r.v }, r.coeff))
        .collect()
}

/// One reduction step: the generator applied and the degrees before checking.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    pub applied: Generator,
    pub predicted: SvTriple,
    pub actual: SvTriple,
}

/// `Ind(V)` for a base module `V`.
#[derive(Clone, Debug)]
pub struct Induced<V> {
    base: V,
}

impl<V: BaseModule> Absorber for Induced<V> {
    type Key = V::Key;

    fn algebra(&self) -> Algebra {
        self.base.subalgebra().algebra()
    }

    fn rank(&self, g: &Generator) -> Result<Option<Rank>> {
        Ok(if self.base.subalgebra().contains(g) {
            None
        } else {
            PbwOrder::Induced.rank(g)
        })
    }

    fn absorb(&self, g: &Generator, key: &V::Key) -> Result<LinComb<V::Key>> {
        self.base.act_sub(g, key)
    }
}

fn zero_triple() -> SvTriple {
    (MultiIndex::zero(), MultiIndex::zero(), MultiIndex::zero())
}

impl<V: BaseModule> Induced<V> {
    pub fn new(base: V) -> Self {
        Induced { base }
    }

    pub fn base(&self) -> &V {
        &self.base
    }

    pub fn subalgebra(&self) -> Subalgebra {
        self.base.subalgebra()
    }

    /// `1 ⊗ cyclic`.
    pub fn cyclic(&self) -> IndVector<V::Key> {
        LinComb::basis(IndKey::base(self.base.cyclic()))
    }

    /// The family stored in the first slot: `M` or `W`.
    fn head(&self) -> Family {
        match self.subalgebra() {
            Subalgebra::Sv { .. } => Family::M,
            Subalgebra::W22 { .. } => Family::W,
        }
    }

    fn slot_families(&self) -> [(Family, usize); 3] {
        [(self.head(), 0), (Family::Y, 1), (Family::L, 2)]
    }

    /// The generator at slot position `s` of the first, second or third slot.
    pub fn slot_generator(&self, slot: usize, s: u32) -> Generator {
        self.subalgebra().slot_generator(self.slot_families()[slot].0, s)
    }

    fn key_to_word(&self, key: &IndKey<V::Key>) -> Word {
        let sub = self.subalgebra();
        let mut word = Vec::new();
        for (family, idx) in self.slot_families() {
            let mi = [&key.m, &key.y, &key.l][idx];
            for (s, e) in mi.iter().rev() {
                word.extend(std::iter::repeat(sub.slot_generator(family, s)).take(e as usize));
            }
        }
        word
    }

    fn word_to_key(&self, word: &[Generator], v: V::Key) -> IndKey<V::Key> {
        let sub = self.subalgebra();
        let mut key = IndKey::base(v);
        for g in word {
            let s = sub.slot(g).expect("free generators lie outside the subalgebra");
            match g.family {
                Family::M | Family::W => key.m.add_eps(s),
                Family::Y => key.y.add_eps(s),
                _ => key.l.add_eps(s),
            }
        }
        key
    }

    /// Builds a key from generators outside the subalgebra, in any order of
    /// families; each must be a free generator.
    pub fn key_of(&self, gens: &[Generator], v: V::Key) -> Result<IndKey<V::Key>> {
        let sub = self.subalgebra();
        for g in gens {
            if sub.slot(g).is_none() {
                return Err(Error::InvalidSpec(format!("{g} is not a creation operator")));
            }
        }
        Ok(self.word_to_key(gens, v))
    }

    /// `g · v`.
    pub fn act(&self, g: &Generator, v: &IndVector<V::Key>) -> Result<IndVector<V::Key>> {
        let engine = Engine::new(self);
        self.act_with(&engine, g, v)
    }

    fn act_with(&self, engine: &Engine<'_, Self>, g: &Generator, v: &IndVector<V::Key>) -> Result<IndVector<V::Key>> {
        let mut out = LinComb::new();
        for (key, c) in v {
            let word = self.key_to_word(key);
            for ((w, k), d) in engine.left_mul(g, &word, &key.v)? {
                out.add_term(self.word_to_key(&w, k), d * c);
            }
        }
        Ok(out)
    }

    /// `x · v` for an element `x` of the algebra.
    pub fn act_element(&self, x: &LinComb<Generator>, v: &IndVector<V::Key>) -> Result<IndVector<V::Key>> {
        let engine = Engine::new(self);
        let mut out = LinComb::new();
        for (g, c) in x {
            out.add_scaled(&self.act_with(&engine, g, v)?, c);
        }
        Ok(out)
    }

    /// `g_1 g_2 ⋯ g_n · v`, rightmost first.
    pub fn act_word(&self, word: &[Generator], v: &IndVector<V::Key>) -> Result<IndVector<V::Key>> {
        let engine = Engine::new(self);
        let mut acc = v.clone();
        for g in word.iter().rev() {
            acc = self.act_with(&engine, g, &acc)?;
        }
        Ok(acc)
    }

    /// The next lowering-step generator for a vector of degree `deg`, and the
    /// degree it is expected to produce. `None` on the base part.
    pub fn claim_generator(&self, deg: &SvTriple) -> Result<Option<(Generator, SvTriple)>> {
        let (i, j, k) = deg;
        let t = self.base.t() as i64;
        let sub = self.subalgebra();
        if !k.is_zero() {
            let k_hat = k.min_position().unwrap() as i64;
            let g = Generator { algebra: sub.algebra(), family: self.head(), index: k_hat + t };
            return Ok(Some((g, (i.clone(), j.clone(), k.dprime_drop()?))));
        }
        if !j.is_zero() {
            let Subalgebra::Sv { d2, .. } = sub else {
                return Err(Error::InvalidSpec("Y slot used outside the Schrödinger-Virasoro algebra".into()));
            };
            let j_hat = j.min_position().unwrap() as i64;
            let g = Generator::y(j_hat + t + d2 as i64 - 1);
            return Ok(Some((g, (i.clone(), j.dprime_drop()?, MultiIndex::zero()))));
        }
        if !i.is_zero() {
            let i_hat = i.max_position().unwrap() as i64;
            let d = -sub.floor(self.head());
            let g = Generator { algebra: sub.algebra(), family: Family::L, index: i_hat + t + d };
            return Ok(Some((g, (i.prime_drop()?, MultiIndex::zero(), MultiIndex::zero()))));
        }
        Ok(None)
    }

    /// Applies the generator chosen from the degree of `v` and checks that the
    /// degree drops as predicted.
    pub fn claim31_step(&self, v: &IndVector<V::Key>) -> Result<(Generator, IndVector<V::Key>, SvTriple)> {
        let d = deg(v)?;
        let (g, predicted) = self
            .claim_generator(&d)?
            .ok_or_else(|| Error::InvalidSpec("vector already lies in the base module".into()))?;
        let result = self.act(&g, v)?;
        if result.is_zero() {
            return Err(Error::ZeroIntermediate(format!("{g} annihilated the vector")));
        }
        let actual = deg(&result)?;
        if actual != predicted {
            return Err(Error::PredictionMismatch {
                applied: g.to_string(),
                predicted: format!("{predicted:?}"),
                actual: format!("{actual:?}"),
            });
        }
        Ok((g, result, predicted))
    }

    /// Repeats [`Self::claim31_step`] until the vector lies in `1 ⊗ V`.
    pub fn reduce_to_base(&self, v: &IndVector<V::Key>) -> Result<(LinComb<V::Key>, Vec<Step>)> {
        let (i, j, k) = deg(v)?;
        let bound = (i.total() + j.total() + k.total()) as usize;
        let mut v = v.clone();
        let mut trace = Vec::new();
        while deg(&v)? != zero_triple() {
            if trace.len() >= bound {
                return Err(Error::StepBoundExceeded(trace.len()));
            }
            let (g, next, predicted) = self.claim31_step(&v)?;
            let actual = deg(&next)?;
            trace.push(Step { applied: g, predicted, actual });
            v = next;
        }
        let w = v.into_iter().map(|(key, c)| (key.v, c)).collect();
        Ok((w, trace))
    }

    /// Smallest `N ≤ max_n` with `g^N v = 0`.
    pub fn nilpotency_probe(&self, g: &Generator, v: &IndVector<V::Key>, max_n: usize) -> Result<Option<usize>> {
        let engine = Engine::new(self);
        let mut acc = v.clone();
        for n in 0..=max_n {
            if acc.is_zero() {
                return Ok(Some(n));
            }
            if n < max_n {
                acc = self.act_with(&engine, g, &acc)?;
            }
        }
        Ok(None)
    }
}

/// Keys with a nonzero coefficient, as triples.
pub fn supp<K: Ord + Clone>(v: &IndVector<K>) -> BTreeSet<SvTriple> {
    v.keys().map(|k| k.triple()).collect()
}

/// The maximal triple of the support in the principal order.
pub fn deg<K: Ord + Clone>(v: &IndVector<K>) -> Result<SvTriple> {
    v.keys()
        .map(|k| k.triple())
        .max_by(principal_cmp_sv)
        .ok_or(Error::ZeroVector)
}

/// Every triple of total slot weight `w`.
pub fn graded_piece_basis(w: u32) -> Vec<SvTriple> {
    let parts: Vec<Vec<MultiIndex>> = (0..=w).map(partitions).collect();
    let mut out = Vec::new();
    for a in 0..=w {
        for b in 0..=w - a {
            let c = w - a - b;
            for i in &parts[a as usize] {
                for j in &parts[b as usize] {
                    for k in &parts[c as usize] {
                        out.push((i.clone(), j.clone(), k.clone()));
                    }
                }
            }
        }
    }
    out.sort_by(principal_cmp_sv);
    out
}

/// The joint kernel of the positive annihilators on the span of keys of
/// total slot weight at most `wmax`.
#[derive(Clone, Debug)]
pub struct SingularSpace {
    pub basis: Vec<IndVector<()>>,
    /// `(w, dim)`: kernel dimension restricted to the weight-`w` piece.
    pub piece_dims: Vec<(u32, usize)>,
}

impl<V: BaseModule<Key = ()>> Induced<V> {
    /// Annihilation operators that can act nontrivially below weight `wmax`.
    pub fn annihilators(&self, wmax: u32) -> Vec<Generator> {
        let sub = self.subalgebra();
        let t = self.base.t();
        let w = wmax as i64;
        let mut ops = Vec::new();
        let families: &[Family] = match sub {
            Subalgebra::Sv { .. } => &[Family::M, Family::Y, Family::L],
            Subalgebra::W22 { .. } => &[Family::W, Family::L],
        };
        for &family in families {
            for index in -1..=w {
                let g = Generator { algebra: sub.algebra(), family, index };
                if sub.contains(&g) && sub.beyond(t, &g) && g.degree2() <= 2 * w {
                    ops.push(g);
                }
            }
        }
        ops
    }

    fn kernel_on(&self, keys: &[SvTriple], ops: &[Generator]) -> Result<Vec<IndVector<()>>> {
        let to_key = |(m, y, l): &SvTriple| IndKey { m: m.clone(), y: y.clone(), l: l.clone(), v: () };
        let mut images: Vec<LinComb<(usize, IndKey<()>)>> = Vec::with_capacity(keys.len());
        for key in keys {
            let v = LinComb::basis(to_key(key));
            let mut img = LinComb::new();
            for (n, g) in ops.iter().enumerate() {
                for (k, c) in &self.act(g, &v)? {
                    img.add_term((n, k.clone()), c.clone());
                }
            }
            images.push(img);
        }
        // Rows of `to_matrix` are images; the operator matrix is its transpose.
        let (image_rows, _) = to_matrix(&images);
        Ok(image_rows
            .transpose()
            .kernel()
            .into_iter()
            .map(|x| {
                keys.iter()
                    .zip(x)
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (to_key(k), c))
                    .collect()
            })
            .collect())
    }

    /// Vectors of total slot weight at most `wmax` killed by every
    /// `M_i, Y_{a+1/2}, L_k` beyond the window of `V`.
    pub fn singular_space(&self, wmax: u32) -> Result<SingularSpace> {
        let ops = self.annihilators(wmax);
        let mut all = Vec::new();
        let mut piece_dims = Vec::new();
        for w in 0..=wmax {
            let piece = graded_piece_basis(w);
            let piece: Vec<SvTriple> = match self.subalgebra() {
                Subalgebra::Sv { .. } => piece,
                Subalgebra::W22 { .. } => piece.into_iter().filter(|t| t.1.is_zero()).collect(),
            };
            piece_dims.push((w, self.kernel_on(&piece, &ops)?.len()));
            all.extend(piece);
        }
        Ok(SingularSpace {
            basis: self.kernel_on(&all, &ops)?,
            piece_dims,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::OneDim;

    fn verma(h: i64) -> Induced<OneDim> {
        Induced::new(OneDim::new(Scalar::int(h), Scalar::one(), Scalar::zero()).unwrap())
    }

    fn key(ind: &Induced<OneDim>, gens: &[Generator]) -> IndVector<()> {
        LinComb::basis(ind.key_of(gens, ()).unwrap())
    }

    #[test]
    fn virasoro_lowering() {
        let ind = verma(3);
        let v = key(&ind, &[Generator::l(-1)]);
        assert_eq!(ind.act(&Generator::l(1), &v).unwrap(), ind.cyclic().scaled(&Scalar::int(-6)));
    }

    #[test]
    fn m0_is_scalar() {
        let ind = Induced::new(OneDim::new(Scalar::one(), Scalar::int(7), Scalar::zero()).unwrap());
        let v = key(&ind, &[Generator::l(-1), Generator::y(-2), Generator::m(-1)]);
        assert_eq!(ind.act(&Generator::m(0), &v).unwrap(), v.scaled(&Scalar::int(7)));
    }

    #[test]
    fn y_pair_hits_m_t() {
        let ind = verma(1);
        let v = key(&ind, &[Generator::y(-1)]);
        // [Y_{1/2}, Y_{-1/2}] = -M_0, and M_0 acts by nu0 = 1.
        assert_eq!(ind.act(&Generator::y(0), &v).unwrap(), ind.cyclic().scaled(&Scalar::int(-1)));
    }

    #[test]
    fn l_on_m_slot() {
        let ind = verma(1);
        let v = key(&ind, &[Generator::m(-2)]);
        assert_eq!(ind.act(&Generator::l(2), &v).unwrap(), ind.cyclic().scaled(&Scalar::int(-2)));
    }

    #[test]
    fn slots_and_degrees() {
        let ind = verma(1);
        let k = ind.key_of(&[Generator::m(-1)], ()).unwrap();
        assert_eq!(k.m, MultiIndex::eps(1));
        let mut v = key(&ind, &[Generator::l(-3)]);
        v.add_assign(&key(&ind, &[Generator::m(-1), Generator::y(-2)]));
        assert_eq!(deg(&v).unwrap(), (MultiIndex::zero(), MultiIndex::zero(), MultiIndex::eps(3)));
        assert!(supp(&LinComb::<IndKey<()>>::new()).is_empty());
        assert_eq!(deg(&LinComb::<IndKey<()>>::new()), Err(Error::ZeroVector));
    }

    #[test]
    fn claim_steps() {
        let ind = verma(1);
        let (g, out, pred) = ind.claim31_step(&key(&ind, &[Generator::l(-2)])).unwrap();
        assert_eq!(g, Generator::m(2));
        assert_eq!(out, ind.cyclic().scaled(&Scalar::int(-2)));
        assert_eq!(pred, zero_triple());
        let (g, out, _) = ind.claim31_step(&key(&ind, &[Generator::y(-1)])).unwrap();
        assert_eq!(g, Generator::y(0));
        assert_eq!(out, ind.cyclic().scaled(&Scalar::int(-1)));
        let (g, out, _) = ind.claim31_step(&key(&ind, &[Generator::m(-2)])).unwrap();
        assert_eq!(g, Generator::l(2));
        assert_eq!(out, ind.cyclic().scaled(&Scalar::int(-2)));
    }

    #[test]
    fn reduce_two_l() {
        let ind = verma(1);
        let v = key(&ind, &[Generator::l(-1), Generator::l(-1)]);
        let (w, trace) = ind.reduce_to_base(&v).unwrap();
        assert_eq!(trace.len(), 2);
        assert_eq!(trace[0].actual.2, MultiIndex::eps(1));
        assert!(trace[1].actual.2.is_zero());
        assert!(!w.is_zero());
        let (w, trace) = ind.reduce_to_base(&ind.cyclic()).unwrap();
        assert!(trace.is_empty());
        assert_eq!(w, LinComb::basis(()));
    }

    #[test]
    fn nilpotency() {
        let ind = verma(1);
        assert_eq!(ind.nilpotency_probe(&Generator::m(1), &ind.cyclic(), 6).unwrap(), Some(1));
        let v = key(&ind, &[Generator::l(-1)]);
        assert_eq!(ind.nilpotency_probe(&Generator::m(1), &v, 6).unwrap(), Some(2));
        assert_eq!(ind.nilpotency_probe(&Generator::m(-1), &ind.cyclic(), 8).unwrap(), None);
    }

    #[test]
    fn records_round_trip() {
        let ind = verma(1);
        let mut v = key(&ind, &[Generator::l(-1), Generator::m(-2)]);
        v.add_term(IndKey::base(()), Scalar::ratio(-3, 4));
        let text = serde_json::to_string(&to_records(&v)).unwrap();
        let back: Vec<IndRecord<()>> = serde_json::from_str(&text).unwrap();
        assert_eq!(from_records(back), v);
    }

    #[test]
    fn piece_sizes() {
        assert_eq!(graded_piece_basis(0), vec![zero_triple()]);
        assert_eq!(graded_piece_basis(1).len(), 3);
        assert_eq!(graded_piece_basis(2).len(), 9);
        assert!(graded_piece_basis(3).iter().all(|(a, b, c)| a.weight() + b.weight() + c.weight() == 3));
    }

    #[test]
    fn singular_small() {
        let ind = verma(1);
        let s = ind.singular_space(0).unwrap();
        assert_eq!(s.basis.len(), 1);
        let s = ind.singular_space(2).unwrap();
        assert_eq!(s.basis.len(), 1);
        assert_eq!(s.piece_dims, vec![(0, 1), (1, 0), (2, 0)]);
    }
}
