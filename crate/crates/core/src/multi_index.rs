//! The monoid of almost-everywhere-zero exponent sequences, its weight, and
//! the total orders used to define degrees.
//!
//! A [`MultiIndex`] `i = (…, i_2, i_1)` is stored sparsely as `position -> exponent`
//! with positions starting at 1 and no zero exponents.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex {
    entries: BTreeMap<u32, u32>,
}

impl MultiIndex {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `ε_s`.
    pub fn eps(s: u32) -> Self {
        Self::from_pairs([(s, 1)])
    }

    /// Build from `(position, exponent)` pairs; repeated positions add up, zero
    /// exponents are skipped. Panics on position 0.
    pub fn from_pairs<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Self {
        let mut out = Self::zero();
        for (s, e) in pairs {
            assert!(s >= 1, "multi-index positions start at 1");
            if e > 0 {
                *out.entries.entry(s).or_insert(0) += e;
            }
        }
        out
    }

    pub fn get(&self, s: u32) -> u32 {
        self.entries.get(&s).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// `(position, exponent)` pairs in increasing position.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (u32, u32)> + '_ {
        self.entries.iter().map(|(&s, &e)| (s, e))
    }

    /// `w(i) = Σ s · i_s`.
    pub fn weight(&self) -> u64 {
        self.entries.iter().map(|(&s, &e)| s as u64 * e as u64).sum()
    }

    /// Sum of all exponents.
    pub fn total(&self) -> u64 {
        self.entries.values().map(|&e| e as u64).sum()
    }

    /// Largest position with a nonzero entry.
    pub fn max_position(&self) -> Option<u32> {
        self.entries.keys().next_back().copied()
    }

    /// Smallest position with a nonzero entry.
    pub fn min_position(&self) -> Option<u32> {
        self.entries.keys().next().copied()
    }

    pub fn add_eps(&mut self, s: u32) {
        assert!(s >= 1, "multi-index positions start at 1");
        *self.entries.entry(s).or_insert(0) += 1;
    }

    /// Remove one unit at position `s`; `false` if that entry was already zero.
    pub fn sub_eps(&mut self, s: u32) -> bool {
        match self.entries.get_mut(&s) {
            Some(e) => {
                *e -= 1;
                if *e == 0 {
                    self.entries.remove(&s);
                }
                true
            }
            None => false,
        }
    }

    /// `i' = i - ε_p` with `p` the largest nonzero position.
    pub fn prime_drop(&self) -> Result<Self> {
        let p = self.max_position().ok_or(Error::ZeroMultiIndex)?;
        let mut out = self.clone();
        out.sub_eps(p);
        Ok(out)
    }

    /// `i'' = i - ε_q` with `q` the smallest nonzero position.
    pub fn dprime_drop(&self) -> Result<Self> {
        let q = self.min_position().ok_or(Error::ZeroMultiIndex)?;
        let mut out = self.clone();
        out.sub_eps(q);
        Ok(out)
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .iter()
            .map(|(s, e)| if e == 1 { format!("e{s}") } else { format!("{e}e{s}") })
            .collect();
        write!(f, "{}", parts.join("+"))
    }
}

impl Serialize for MultiIndex {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<[u32; 2]> = self.iter().map(|(s, e)| [s, e]).collect();
        pairs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MultiIndex {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let pairs: Vec<[u32; 2]> = Vec::deserialize(deserializer)?;
        if pairs.iter().any(|p| p[0] == 0) {
            return Err(serde::de::Error::custom("multi-index positions start at 1"));
        }
        Ok(MultiIndex::from_pairs(pairs.into_iter().map(|p| (p[0], p[1]))))
    }
}

fn union_positions(j: &MultiIndex, i: &MultiIndex) -> Vec<u32> {
    let mut all: Vec<u32> = j.entries.keys().chain(i.entries.keys()).copied().collect();
    all.sort_unstable();
    all.dedup();
    all
}

fn first_difference<I: Iterator<Item = u32>>(j: &MultiIndex, i: &MultiIndex, positions: I) -> Ordering {
    positions
        .map(|s| j.get(s).cmp(&i.get(s)))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// Lexicographic order: the highest differing position decides.
pub fn lex_cmp(j: &MultiIndex, i: &MultiIndex) -> Ordering {
    first_difference(j, i, union_positions(j, i).into_iter().rev())
}

/// Reverse lexicographic order: the lowest differing position decides.
pub fn revlex_cmp(j: &MultiIndex, i: &MultiIndex) -> Ordering {
    first_difference(j, i, union_positions(j, i).into_iter())
}

/// `j > i` in the lexicographic order.
pub fn lex_gt(j: &MultiIndex, i: &MultiIndex) -> bool {
    lex_cmp(j, i) == Ordering::Greater
}

/// `j ≻ i` in the reverse lexicographic order.
pub fn revlex_succ(j: &MultiIndex, i: &MultiIndex) -> bool {
    revlex_cmp(j, i) == Ordering::Greater
}

/// The comparison of `(k, w(k))` with `(n, w(n))`: weight first, reverse
/// lexicographic order on equal weight.
pub fn weighted_cmp(k: &MultiIndex, n: &MultiIndex) -> Ordering {
    k.weight().cmp(&n.weight()).then_with(|| revlex_cmp(k, n))
}

/// A key `(i, j, k)` of the induced-module basis `M^i Y^j L^k`.
pub type SvTriple = (MultiIndex, MultiIndex, MultiIndex);

/// A key `(i, j)` of the W(2,2) induced-module basis `W^i L^j`.
pub type WPair = (MultiIndex, MultiIndex);

/// Principal total order on triples: `k` (weighted), then `j` (weighted), then `i` (lex).
pub fn principal_cmp_sv(a: &SvTriple, b: &SvTriple) -> Ordering {
    weighted_cmp(&a.2, &b.2)
        .then_with(|| weighted_cmp(&a.1, &b.1))
        .then_with(|| lex_cmp(&a.0, &b.0))
}

/// Principal total order on pairs: `j` (weighted), then `i` (lex).
pub fn principal_cmp_w22(a: &WPair, b: &WPair) -> Ordering {
    weighted_cmp(&a.1, &b.1).then_with(|| lex_cmp(&a.0, &b.0))
}

/// Every multi-index of weight `n`, i.e. the partitions of `n`.
pub fn partitions(n: u32) -> Vec<MultiIndex> {
    fn go(rest: u32, max_part: u32, acc: &mut MultiIndex, out: &mut Vec<MultiIndex>) {
        if rest == 0 {
            out.push(acc.clone());
            return;
        }
        for part in (1..=max_part.min(rest)).rev() {
            acc.add_eps(part);
            go(rest - part, part, acc, out);
            acc.sub_eps(part);
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut MultiIndex::zero(), &mut out);
    out
}

/// A fixed-length exponent tuple `(i_1, …, i_m)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FiniteTuple(pub Vec<u32>);

impl FiniteTuple {
    pub fn zeros(len: usize) -> Self {
        FiniteTuple(vec![0; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// First (1-based) position with a nonzero entry.
    pub fn min_position(&self) -> Option<usize> {
        self.0.iter().position(|&e| e != 0).map(|p| p + 1)
    }

    /// Position-1-first lexicographic comparison.
    pub fn try_cmp(&self, other: &Self) -> Result<Ordering> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch(self.len(), other.len()));
        }
        Ok(self.0.cmp(&other.0))
    }
}

// Only tuples of one length are ever compared inside a container; for those
// this is the position-1-first lexicographic order.
impl Ord for FiniteTuple {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl PartialOrd for FiniteTuple {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `i > j` in the position-1-first lexicographic order on `ℕ^m`.
pub fn q_tuple_gt(i: &FiniteTuple, j: &FiniteTuple) -> Result<bool> {
    Ok(i.try_cmp(j)? == Ordering::Greater)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mi(pairs: &[(u32, u32)]) -> MultiIndex {
        MultiIndex::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn weights() {
        assert_eq!(MultiIndex::zero().weight(), 0);
        assert_eq!(MultiIndex::eps(3).weight(), 3);
        assert_eq!(mi(&[(1, 1), (2, 2)]).weight(), 5);
    }

    #[test]
    fn drops() {
        let i = mi(&[(3, 1), (1, 2)]);
        assert_eq!(i.prime_drop().unwrap(), mi(&[(1, 2)]));
        assert_eq!(i.dprime_drop().unwrap(), mi(&[(3, 1), (1, 1)]));
        assert_eq!(MultiIndex::eps(1).prime_drop().unwrap(), MultiIndex::zero());
        assert_eq!(MultiIndex::zero().prime_drop(), Err(Error::ZeroMultiIndex));
        assert_eq!(MultiIndex::zero().dprime_drop(), Err(Error::ZeroMultiIndex));
    }

    #[test]
    fn lex_and_revlex() {
        let e2 = MultiIndex::eps(2);
        let two_e1 = mi(&[(1, 2)]);
        assert!(lex_gt(&e2, &two_e1));
        assert!(!lex_gt(&two_e1, &e2));
        assert!(!lex_gt(&e2, &e2));
        assert!(revlex_succ(&two_e1, &e2));
        assert!(!revlex_succ(&e2, &two_e1));
        assert!(!revlex_succ(&MultiIndex::zero(), &MultiIndex::zero()));
    }

    #[test]
    fn principal_sv() {
        let z = MultiIndex::zero;
        let a = (z(), z(), MultiIndex::eps(3));
        let b = (z(), z(), mi(&[(1, 2)]));
        assert_eq!(principal_cmp_sv(&a, &b), Ordering::Greater);
        let c = (z(), z(), MultiIndex::eps(2));
        assert_eq!(principal_cmp_sv(&b, &c), Ordering::Greater);
        let d = (MultiIndex::eps(1), z(), z());
        let e = (z(), MultiIndex::eps(1), z());
        assert_eq!(principal_cmp_sv(&d, &e), Ordering::Less);
        assert_eq!(principal_cmp_sv(&d, &d.clone()), Ordering::Equal);
    }

    #[test]
    fn principal_w22() {
        let z = MultiIndex::zero;
        assert_eq!(
            principal_cmp_w22(&(z(), MultiIndex::eps(2)), &(z(), mi(&[(1, 2)]))),
            Ordering::Less
        );
        assert_eq!(
            principal_cmp_w22(&(MultiIndex::eps(5), z()), &(z(), MultiIndex::eps(1))),
            Ordering::Less
        );
        let x = (MultiIndex::eps(2), MultiIndex::eps(1));
        assert_eq!(principal_cmp_w22(&x, &x), Ordering::Equal);
    }

    #[test]
    fn tuples() {
        let t = |v: &[u32]| FiniteTuple(v.to_vec());
        assert!(q_tuple_gt(&t(&[1, 0]), &t(&[0, 9])).unwrap());
        assert!(!q_tuple_gt(&t(&[0, 0]), &t(&[0, 0])).unwrap());
        assert!(q_tuple_gt(&t(&[0, 2]), &t(&[0, 1])).unwrap());
        assert_eq!(q_tuple_gt(&t(&[0]), &t(&[0, 1])), Err(Error::LengthMismatch(1, 2)));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        assert!(partitions(6).iter().all(|p| p.weight() == 6));
    }

    #[test]
    fn serde_shape() {
        let i = mi(&[(3, 1), (1, 2)]);
        assert_eq!(serde_json::to_string(&i).unwrap(), "[[1,2],[3,1]]");
        let back: MultiIndex = serde_json::from_str("[[3,1],[1,2]]").unwrap();
        assert_eq!(back, i);
        assert!(serde_json::from_str::<MultiIndex>("[[0,1]]").is_err());
    }
}
