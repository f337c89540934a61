//! Normal ordering in the universal enveloping algebra, and the
//! left-multiplication engine shared by every module action.
//!
//! A vector is a combination of `(word, key)` pairs: `word` is an ascending
//! product of "free" generators and `key` a basis element of whatever absorbs
//! the remaining generators (a base module, a character, or a central power).
//! Left multiplication commutes the new generator rightward with
//! `g f = f g + [g, f]` until it either fits in canonical position or reaches
//! the right end and is absorbed.

use std::cell::RefCell;
use std::collections::HashMap;
use std::hash::Hash;

use serde::{Serialize, Serializer};

use crate::bracket::bracket;
use crate::error::{Error, Result};
use crate::generator::{same_algebra, Algebra, Family, Generator};
use crate::lincomb::LinComb;
use crate::scalar::Scalar;

/// Position of a free generator in a canonical order.
pub type Rank = (u8, i64);

/// An ascending product of free generators.
pub type Word = Vec<Generator>;

/// The two canonical generator orders.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PbwOrder {
    /// `M < Y < L` (and `W < L`): the shape of induced-module monomials.
    Induced,
    /// `L < Y < M` (and `L < W`): the shape of quotient-module monomials.
    Quotient,
}

impl PbwOrder {
    /// Rank of a non-central generator; indices ascend within a family.
    pub fn rank(self, g: &Generator) -> Option<Rank> {
        use Family::*;
        let family = match (self, g.family) {
            (_, C) => return None,
            (PbwOrder::Induced, M | W) => 0,
            (PbwOrder::Induced, Y) => 1,
            (PbwOrder::Induced, L) => 2,
            (PbwOrder::Quotient, L) => 0,
            (PbwOrder::Quotient, Y) => 1,
            (PbwOrder::Quotient, M | W) => 2,
        };
        Some((family, g.index))
    }
}

/// Whatever sits to the right of the free part.
pub trait Absorber {
    type Key: Ord + Clone + Hash;

    fn algebra(&self) -> Algebra;

    /// `Ok(Some(rank))` for a free generator, `Ok(None)` for one the absorber
    /// handles, `Err` for a generator that may not act at all.
    fn rank(&self, g: &Generator) -> Result<Option<Rank>>;

    /// Action of a non-free generator on a key.
    fn absorb(&self, g: &Generator, key: &Self::Key) -> Result<LinComb<Self::Key>>;
}

type Memo<K> = HashMap<(Generator, Word, K), LinComb<(Word, K)>>;

/// Left multiplication with a per-engine product cache.
pub struct Engine<'a, A: Absorber> {
    absorber: &'a A,
    memo: RefCell<Memo<A::Key>>,
}

impl<'a, A: Absorber> Engine<'a, A> {
    pub fn new(absorber: &'a A) -> Self {
        Engine {
            absorber,
            memo: RefCell::new(HashMap::new()),
        }
    }

    fn free_rank(&self, g: &Generator) -> Result<Rank> {
        self.absorber
            .rank(g)?
            .ok_or_else(|| Error::InvalidSpec(format!("{g} is not a free generator")))
    }

    /// `g · (word ⊗ key)`.
    pub fn left_mul(&self, g: &Generator, word: &[Generator], key: &A::Key) -> Result<LinComb<(Word, A::Key)>> {
        if g.algebra != self.absorber.algebra() {
            return Err(Error::AlgebraMismatch(
                g.algebra.name().into(),
                self.absorber.algebra().name().into(),
            ));
        }
        if g.is_central() {
            let absorbed = self.absorber.absorb(g, key)?;
            return Ok(absorbed.map_keys(|k| (word.to_vec(), k.clone())));
        }
        let rank = self.absorber.rank(g)?;
        let Some((first, rest)) = word.split_first() else {
            return Ok(match rank {
                Some(_) => LinComb::basis((vec![*g], key.clone())),
                None => self.absorber.absorb(g, key)?.map_keys(|k| (Vec::new(), k.clone())),
            });
        };
        if let Some(r) = rank {
            if r <= self.free_rank(first)? {
                let mut prepended = Vec::with_capacity(word.len() + 1);
                prepended.push(*g);
                prepended.extend_from_slice(word);
                return Ok(LinComb::basis((prepended, key.clone())));
            }
        }
        let memo_key = (*g, word.to_vec(), key.clone());
        if let Some(hit) = self.memo.borrow().get(&memo_key) {
            return Ok(hit.clone());
        }
        // g f rest = f (g rest) + [g, f] rest
        let mut out = LinComb::new();
        for ((w, k), c) in &self.left_mul(g, rest, key)? {
            out.add_scaled(&self.left_mul(first, w, k)?, c);
        }
        for (h, c) in &bracket(g, first)? {
            out.add_scaled(&self.left_mul(h, rest, key)?, c);
        }
        self.memo.borrow_mut().insert(memo_key, out.clone());
        Ok(out)
    }

    /// `g · v` for a combination `v`.
    pub fn left_mul_comb(&self, g: &Generator, v: &LinComb<(Word, A::Key)>) -> Result<LinComb<(Word, A::Key)>> {
        let mut out = LinComb::new();
        for ((w, k), c) in v {
            out.add_scaled(&self.left_mul(g, w, k)?, c);
        }
        Ok(out)
    }
}

/// A normal-ordered monomial of the enveloping algebra: ascending
/// `(generator, exponent)` runs and a power of the central element.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NormalMonomial {
    pub factors: Vec<(Generator, u32)>,
    pub central: u32,
}

impl NormalMonomial {
    pub fn unit() -> Self {
        Self::default()
    }

    /// Run-length form of an ascending word.
    pub fn from_word(word: &[Generator], central: u32) -> Self {
        let mut factors: Vec<(Generator, u32)> = Vec::new();
        for g in word {
            match factors.last_mut() {
                Some((h, e)) if h == g => *e += 1,
                _ => factors.push((*g, 1)),
            }
        }
        NormalMonomial { factors, central }
    }

    pub fn word(&self) -> Word {
        self.factors
            .iter()
            .flat_map(|(g, e)| std::iter::repeat(*g).take(*e as usize))
            .collect()
    }

    /// Sum of generator degrees, doubled to stay integral.
    pub fn degree2(&self) -> i64 {
        self.factors.iter().map(|(g, e)| g.degree2() * *e as i64).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty() && self.central == 0
    }
}

impl Serialize for NormalMonomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut runs: Vec<(serde_json::Value, u32)> =
            self.factors.iter().map(|(g, e)| (g.to_json(), *e)).collect();
        if self.central > 0 {
            let c = Generator { algebra: self.algebra(), family: Family::C, index: 0 };
            runs.push((c.to_json(), self.central));
        }
        runs.serialize(serializer)
    }
}

impl NormalMonomial {
    fn algebra(&self) -> Algebra {
        self.factors.first().map(|(g, _)| g.algebra).unwrap_or(Algebra::Sv)
    }
}

/// The enveloping algebra itself: every non-central generator is free and the
/// key counts powers of the central element.
struct Enveloping {
    algebra: Algebra,
    order: PbwOrder,
}

impl Absorber for Enveloping {
    type Key = u32;

    fn algebra(&self) -> Algebra {
        self.algebra
    }

    fn rank(&self, g: &Generator) -> Result<Option<Rank>> {
        Ok(self.order.rank(g))
    }

    fn absorb(&self, g: &Generator, key: &u32) -> Result<LinComb<u32>> {
        debug_assert!(g.is_central());
        Ok(LinComb::basis(key + 1))
    }
}

fn collect_monomials(v: LinComb<(Word, u32)>) -> LinComb<NormalMonomial> {
    v.into_iter()
        .map(|((w, c), s)| (NormalMonomial::from_word(&w, c), s))
        .collect()
}

fn check_word(word: &[Generator]) -> Result<Option<Algebra>> {
    let Some(first) = word.first() else { return Ok(None) };
    for g in word {
        same_algebra(first, g)?;
    }
    Ok(Some(first.algebra))
}

/// Normal form of a word in the enveloping algebra.
pub fn straighten(word: &[Generator], order: PbwOrder) -> Result<LinComb<NormalMonomial>> {
    let Some(algebra) = check_word(word)? else {
        return Ok(LinComb::basis(NormalMonomial::unit()));
    };
    let env = Enveloping { algebra, order };
    let engine = Engine::new(&env);
    let mut acc: LinComb<(Word, u32)> = LinComb::basis((Vec::new(), 0));
    for g in word.iter().rev() {
        acc = engine.left_mul_comb(g, &acc)?;
    }
    Ok(collect_monomials(acc))
}

/// `g · m` for a normal monomial `m`.
pub fn normal_product(m: &NormalMonomial, g: &Generator, order: PbwOrder) -> Result<LinComb<NormalMonomial>> {
    let mut word = m.word();
    word.insert(0, *g);
    check_word(&word)?;
    let env = Enveloping { algebra: g.algebra, order };
    let engine = Engine::new(&env);
    Ok(collect_monomials(engine.left_mul(g, &m.word(), &m.central)?))
}

/// Whether a word is already in canonical order under `order`.
pub fn is_normal(word: &[Generator], order: PbwOrder) -> bool {
    word.iter().all(|g| !g.is_central())
        && word.windows(2).all(|p| order.rank(&p[0]) <= order.rank(&p[1]))
}

/// The unit of the enveloping algebra.
pub fn unit() -> LinComb<NormalMonomial> {
    LinComb::single(NormalMonomial::unit(), Scalar::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator as G;

    fn mono(gs: &[(Generator, u32)]) -> NormalMonomial {
        NormalMonomial { factors: gs.to_vec(), central: 0 }
    }

    #[test]
    fn virasoro_swap() {
        let out = straighten(&[G::l(1), G::l(-1)], PbwOrder::Induced).unwrap();
        let mut want = LinComb::basis(mono(&[(G::l(-1), 1), (G::l(1), 1)]));
        want.add_term(mono(&[(G::l(0), 1)]), Scalar::int(-2));
        assert_eq!(out, want);
    }

    #[test]
    fn commuting_reorder() {
        let out = straighten(&[G::m(5), G::m(3)], PbwOrder::Induced).unwrap();
        assert_eq!(out, LinComb::basis(mono(&[(G::m(3), 1), (G::m(5), 1)])));
    }

    #[test]
    fn y_pair_produces_m() {
        let out = straighten(&[G::y(0), G::y(-2)], PbwOrder::Induced).unwrap();
        let mut want = LinComb::basis(mono(&[(G::y(-2), 1), (G::y(0), 1)]));
        want.add_term(mono(&[(G::m(-1), 1)]), Scalar::int(-2));
        assert_eq!(out, want);
    }

    #[test]
    fn empty_word_is_unit() {
        assert_eq!(straighten(&[], PbwOrder::Induced).unwrap(), unit());
    }

    #[test]
    fn central_term_is_kept() {
        let out = straighten(&[G::l(2), G::l(-2)], PbwOrder::Induced).unwrap();
        let central = NormalMonomial { factors: vec![], central: 1 };
        assert_eq!(out.coeff(&central), Scalar::ratio(1, 2));
        assert_eq!(out.coeff(&mono(&[(G::l(0), 1)])), Scalar::int(-4));
    }

    #[test]
    fn normal_product_examples() {
        // M_2 already precedes L_{-1}; the bracket only shows up in L_{-1} M_2.
        let out = normal_product(&mono(&[(G::l(-1), 1)]), &G::m(2), PbwOrder::Induced).unwrap();
        assert_eq!(out, LinComb::basis(mono(&[(G::m(2), 1), (G::l(-1), 1)])));
        let out = normal_product(&mono(&[(G::m(2), 1)]), &G::l(-1), PbwOrder::Induced).unwrap();
        let mut want = LinComb::basis(mono(&[(G::m(2), 1), (G::l(-1), 1)]));
        want.add_term(mono(&[(G::m(1), 1)]), Scalar::int(2));
        assert_eq!(out, want);
        let out = normal_product(&NormalMonomial::unit(), &G::l(5), PbwOrder::Induced).unwrap();
        assert_eq!(out, LinComb::basis(mono(&[(G::l(5), 1)])));
        let out = normal_product(&mono(&[(G::m(3), 1)]), &G::m(3), PbwOrder::Induced).unwrap();
        assert_eq!(out, LinComb::basis(mono(&[(G::m(3), 2)])));
    }

    #[test]
    fn quotient_order() {
        let out = straighten(&[G::m(1), G::l(1)], PbwOrder::Quotient).unwrap();
        let mut want = LinComb::basis(mono(&[(G::l(1), 1), (G::m(1), 1)]));
        want.add_term(mono(&[(G::m(2), 1)]), Scalar::int(-1));
        assert_eq!(out, want);
    }

    #[test]
    fn normal_word_is_fixed() {
        let w = [G::m(-3), G::y(-1), G::y(0), G::l(-2), G::l(-2), G::l(4)];
        assert!(is_normal(&w, PbwOrder::Induced));
        let out = straighten(&w, PbwOrder::Induced).unwrap();
        assert_eq!(out, LinComb::basis(NormalMonomial::from_word(&w, 0)));
    }

    #[test]
    fn mixed_algebras_rejected() {
        assert!(straighten(&[G::l(1), G::wl(1)], PbwOrder::Induced).is_err());
    }

    #[test]
    fn serialized_runs() {
        let m = NormalMonomial { factors: vec![(G::l(-1), 2)], central: 1 };
        assert_eq!(
            serde_json::to_string(&m).unwrap(),
            r#"[[{"f":"L","n":-1},2],[{"f":"C"},1]]"#
        );
    }
}
