//! Quotients `Q = U(𝒢_{d1,d2}) / I` of the enveloping algebra by the left ideal
//! generated by `L_i - λ_i`, `Y_{j-1/2} - μ_j`, `M_k - ν_k`, `C - c` for every
//! generator outside the free sets `S̄_λ`, `S̄_μ`, `S̄_ν`.
//!
//! A basis of `Q` is `L^i Y^j M^k` over the free generators in ascending index
//! order, keyed by [`QKey`].

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::{BaseModule, Subalgebra, SubalgebraParams};
use crate::error::{Error, Result};
use crate::generator::{Family, Generator};
use crate::lincomb::LinComb;
use crate::multi_index::FiniteTuple;
use crate::pbw::{Absorber, Engine, PbwOrder, Rank};
use crate::scalar::Scalar;

/// The data `(t, d1, d2, S_λ, S_μ, S_{ν,0}, S_{ν,1}, λ, μ, ν, c)`.
///
/// Scalars missing from `lambda`, `mu`, `nu` are zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QSpec {
    pub d1: u32,
    pub d2: u32,
    pub t: u32,
    pub c: Scalar,
    pub s_lambda: BTreeSet<i64>,
    pub s_mu: BTreeSet<i64>,
    pub s_nu0: BTreeSet<i64>,
    pub s_nu1: BTreeSet<i64>,
    #[serde(default)]
    pub lambda: BTreeMap<i64, Scalar>,
    #[serde(default)]
    pub mu: BTreeMap<i64, Scalar>,
    #[serde(default)]
    pub nu: BTreeMap<i64, Scalar>,
}

fn range_check(name: &str, set: &BTreeSet<i64>, lo: i64, hi: i64) -> Result<()> {
    match set.iter().find(|&&x| x < lo || x > hi) {
        Some(x) => Err(Error::InvalidSpec(format!("{name} contains {x}, outside {lo}..={hi}"))),
        None => Ok(()),
    }
}

fn keys_check(name: &str, map: &BTreeMap<i64, Scalar>, allowed: &BTreeSet<i64>) -> Result<()> {
    match map.keys().find(|k| !allowed.contains(k)) {
        Some(k) => Err(Error::InvalidSpec(format!("{name} has a value at {k} outside its set"))),
        None => Ok(()),
    }
}

impl QSpec {
    pub fn validate(&self) -> Result<()> {
        Subalgebra::sv(self.d1, self.d2).map_err(|e| Error::InvalidSpec(e.to_string()))?;
        let (t, d1, d2) = (self.t as i64, self.d1 as i64, self.d2 as i64);
        range_check("s_lambda", &self.s_lambda, 1, t + d1)?;
        range_check("s_mu", &self.s_mu, -d2 + 1, t + d2)?;
        range_check("s_nu0", &self.s_nu0, -d1, t)?;
        range_check("s_nu1", &self.s_nu1, -d1, t)?;
        if let Some(x) = self.s_nu0.intersection(&self.s_nu1).next() {
            return Err(Error::InvalidSpec(format!("s_nu0 and s_nu1 share {x}")));
        }
        if !self.s_nu1.contains(&0) || !self.s_nu1.contains(&t) {
            return Err(Error::InvalidSpec("s_nu1 must contain 0 and t".into()));
        }
        keys_check("lambda", &self.lambda, &self.s_lambda)?;
        keys_check("mu", &self.mu, &self.s_mu)?;
        keys_check("nu", &self.nu, &self.s_nu())?;
        for k in self.s_nu() {
            if self.nu_of(k).is_zero() == self.s_nu1.contains(&k) {
                return Err(Error::InvalidSpec(format!("nu_{k} must be nonzero exactly on s_nu1")));
            }
        }
        Ok(())
    }

    pub fn params(&self) -> SubalgebraParams {
        SubalgebraParams {
            d1: self.d1,
            d2: self.d2,
            t: self.t,
            nu0: self.nu_of(0),
            c: self.c.clone(),
        }
    }

    pub fn s_nu(&self) -> BTreeSet<i64> {
        self.s_nu0.union(&self.s_nu1).copied().collect()
    }

    /// `S̄_λ = {0..t+d1} ∖ S_λ`, ascending.
    pub fn bar_lambda(&self) -> Vec<i64> {
        (0..=(self.t + self.d1) as i64).filter(|i| !self.s_lambda.contains(i)).collect()
    }

    /// `S̄_μ = {-d2+1..t+d2} ∖ S_μ`, ascending: the free `Y_{q-1/2}` inside `𝒢_{d1,d2}`.
    pub fn bar_mu(&self) -> Vec<i64> {
        (-(self.d2 as i64) + 1..=(self.t + self.d2) as i64)
            .filter(|j| !self.s_mu.contains(j))
            .collect()
    }

    /// `S̄_ν = {-d1..t} ∖ S_ν`, ascending.
    pub fn bar_nu(&self) -> Vec<i64> {
        let s_nu = self.s_nu();
        (-(self.d1 as i64)..=self.t as i64).filter(|k| !s_nu.contains(k)).collect()
    }

    pub fn lambda_of(&self, i: i64) -> Scalar {
        self.lambda.get(&i).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn mu_of(&self, j: i64) -> Scalar {
        self.mu.get(&j).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn nu_of(&self, k: i64) -> Scalar {
        self.nu.get(&k).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Evaluates conditions (I) through (VII).
    pub fn verify_conditions(&self) -> Result<ConditionReport> {
        self.validate()?;
        let searcher = Searcher::new(self);
        let mut entries = vec![
            self.check_i(),
            self.check_ii(),
            self.check_iii(),
            self.check_iv(),
        ];
        for cond in [Search::V, Search::VI, Search::VII] {
            entries.push(searcher.verdict(cond));
        }
        Ok(ConditionReport { entries })
    }

    fn pairwise<I, F>(name: &'static str, pairs: I, ok: F) -> ConditionVerdict
    where
        I: IntoIterator<Item = (i64, i64)>,
        F: Fn(i64, i64) -> bool,
    {
        let witness = pairs.into_iter().find(|&(i, j)| !ok(i, j));
        ConditionVerdict {
            condition: name,
            pass: witness.is_none(),
            witness: witness.map(|(i, j)| vec![i, j]),
            choices: Vec::new(),
        }
    }

    fn check_i(&self) -> ConditionVerdict {
        let bound = (self.t + self.d1) as i64;
        let pairs = unordered_pairs(&self.s_lambda);
        Self::pairwise("I", pairs, |i, j| {
            i + j > bound || (self.s_lambda.contains(&(i + j)) && self.lambda_of(i + j).is_zero())
        })
    }

    fn check_ii(&self) -> ConditionVerdict {
        let bound = (self.t + self.d2) as i64;
        let pairs = self
            .s_lambda
            .iter()
            .flat_map(|&i| self.s_mu.iter().map(move |&j| (i, j)))
            .filter(|&(i, j)| i != 2 * j - 1);
        Self::pairwise("II", pairs, |i, j| {
            i + j > bound || (self.s_mu.contains(&(i + j)) && self.mu_of(i + j).is_zero())
        })
    }

    fn check_iii(&self) -> ConditionVerdict {
        let t = self.t as i64;
        let pairs = unordered_pairs(&self.s_mu);
        Self::pairwise("III", pairs, |i, j| {
            i + j - 1 > t || (self.s_nu0.contains(&(i + j - 1)) && self.nu_of(i + j - 1).is_zero())
        })
    }

    fn check_iv(&self) -> ConditionVerdict {
        let t = self.t as i64;
        let s_nu = self.s_nu();
        let pairs: Vec<(i64, i64)> = self
            .s_lambda
            .iter()
            .flat_map(|&i| s_nu.iter().filter(|&&j| j != 0).map(move |&j| (i, j)))
            .collect();
        Self::pairwise("IV", pairs, |i, j| {
            i + j > t || (self.s_nu0.contains(&(i + j)) && self.nu_of(i + j).is_zero())
        })
    }
}

fn unordered_pairs(set: &BTreeSet<i64>) -> Vec<(i64, i64)> {
    let v: Vec<i64> = set.iter().copied().collect();
    let mut out = Vec::new();
    for (a, &i) in v.iter().enumerate() {
        for &j in &v[a + 1..] {
            out.push((i, j));
        }
    }
    out
}

/// Which part of the existential condition was satisfied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Clause {
    /// `j` lies strictly below the endpoint and every free `j′` above it up to the endpoint lands in `S_{ν,0}`.
    Main,
    /// `j` is the endpoint itself, so `i + j = t ∈ S_{ν,1}`.
    Endpoint,
}

/// The element chosen for one `j` in (V), (VI) or (VII).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Choice {
    pub j: i64,
    pub i: i64,
    pub clause: Clause,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionVerdict {
    pub condition: &'static str,
    pub pass: bool,
    /// The violating pair for (I)-(IV), or the uncovered `j` for (V)-(VII).
    pub witness: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub choices: Vec<Choice>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ConditionReport {
    pub entries: Vec<ConditionVerdict>,
}

impl ConditionReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn get(&self, condition: &str) -> Option<&ConditionVerdict> {
        self.entries.iter().find(|e| e.condition == condition)
    }
}

/// The three existential conditions, which also drive the reduction steps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Search {
    V,
    VI,
    VII,
}

struct Searcher<'a> {
    spec: &'a QSpec,
    bar_lambda: Vec<i64>,
    bar_mu: Vec<i64>,
    bar_nu: Vec<i64>,
}

impl<'a> Searcher<'a> {
    fn new(spec: &'a QSpec) -> Self {
        Searcher {
            spec,
            bar_lambda: spec.bar_lambda(),
            bar_mu: spec.bar_mu(),
            bar_nu: spec.bar_nu(),
        }
    }

    fn domain(&self, cond: Search) -> &[i64] {
        match cond {
            Search::V => &self.bar_lambda,
            Search::VI => &self.bar_mu,
            Search::VII => &self.bar_nu,
        }
    }

    fn candidates(&self, cond: Search) -> Vec<i64> {
        match cond {
            Search::V => self.spec.s_nu().into_iter().filter(|&i| i != 0).collect(),
            Search::VI => self.spec.s_mu.iter().copied().collect(),
            Search::VII => self.spec.s_lambda.iter().copied().collect(),
        }
    }

    fn admissible(&self, cond: Search, i: i64, j: i64) -> Option<Clause> {
        let off = if cond == Search::VI { 1 } else { 0 };
        let t = self.spec.t as i64;
        let sum = i + j - off;
        if !(self.bar_nu.contains(&sum) || self.spec.s_nu1.contains(&sum)) {
            return None;
        }
        let end = t - i + off;
        let blocked = self
            .domain(cond)
            .iter()
            .any(|&jp| j < jp && jp <= end && !self.spec.s_nu0.contains(&(i + jp - off)));
        if blocked {
            return None;
        }
        Some(if j == end { Clause::Endpoint } else { Clause::Main })
    }

    /// Smallest admissible `i` for `j`.
    fn find(&self, cond: Search, j: i64) -> Option<Choice> {
        self.candidates(cond)
            .into_iter()
            .find_map(|i| self.admissible(cond, i, j).map(|clause| Choice { j, i, clause }))
    }

    fn verdict(&self, cond: Search) -> ConditionVerdict {
        let name = match cond {
            Search::V => "V",
            Search::VI => "VI",
            Search::VII => "VII",
        };
        let mut choices = Vec::new();
        for &j in self.domain(cond) {
            match self.find(cond, j) {
                Some(c) => choices.push(c),
                None => {
                    return ConditionVerdict {
                        condition: name,
                        pass: false,
                        witness: Some(vec![j]),
                        choices,
                    }
                }
            }
        }
        ConditionVerdict {
            condition: name,
            pass: true,
            witness: None,
            choices,
        }
    }
}

/// Basis key of `Q`: exponents over `S̄_λ`, `S̄_μ`, `S̄_ν` in ascending order.
///
/// The derived order compares `i`, then `j`, then `k`, each from position 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct QKey {
    pub i: FiniteTuple,
    pub j: FiniteTuple,
    pub k: FiniteTuple,
}

/// One step of the reduction to degree zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QStep {
    pub case: u8,
    /// The generator `g` of the applied element `g - χ(g)`.
    pub applied: Generator,
    pub predicted: QKey,
    pub actual: QKey,
}

/// The module `Q` of a validated [`QSpec`].
#[derive(Clone, Debug)]
pub struct QModule {
    spec: QSpec,
    bar_lambda: Vec<i64>,
    bar_mu: Vec<i64>,
    bar_nu: Vec<i64>,
    pos_lambda: BTreeMap<i64, usize>,
    pos_mu: BTreeMap<i64, usize>,
    pos_nu: BTreeMap<i64, usize>,
}

fn positions(v: &[i64]) -> BTreeMap<i64, usize> {
    v.iter().enumerate().map(|(p, &x)| (x, p)).collect()
}

impl QModule {
    /// Validates the data. Conditions (I)-(VII) are not required here; see
    /// [`QSpec::verify_conditions`].
    pub fn new(spec: QSpec) -> Result<Self> {
        spec.validate()?;
        let bar_lambda = spec.bar_lambda();
        let bar_mu = spec.bar_mu();
        let bar_nu = spec.bar_nu();
        Ok(QModule {
            pos_lambda: positions(&bar_lambda),
            pos_mu: positions(&bar_mu),
            pos_nu: positions(&bar_nu),
            bar_lambda,
            bar_mu,
            bar_nu,
            spec,
        })
    }

    pub fn spec(&self) -> &QSpec {
        &self.spec
    }

    pub fn bar_lambda(&self) -> &[i64] {
        &self.bar_lambda
    }

    pub fn bar_mu(&self) -> &[i64] {
        &self.bar_mu
    }

    pub fn bar_nu(&self) -> &[i64] {
        &self.bar_nu
    }

    pub fn unit(&self) -> QKey {
        QKey {
            i: FiniteTuple::zeros(self.bar_lambda.len()),
            j: FiniteTuple::zeros(self.bar_mu.len()),
            k: FiniteTuple::zeros(self.bar_nu.len()),
        }
    }

    /// Key of a single free generator, e.g. `L_0` or `Y_{3/2}`.
    pub fn generator_key(&self, g: &Generator) -> Option<QKey> {
        let mut key = self.unit();
        self.bump(&mut key, g)?;
        Some(key)
    }

    fn bump(&self, key: &mut QKey, g: &Generator) -> Option<()> {
        let (tuple, pos) = match g.family {
            Family::L => (&mut key.i, self.pos_lambda.get(&g.index)?),
            Family::Y => (&mut key.j, self.pos_mu.get(&(g.index + 1))?),
            Family::M => (&mut key.k, self.pos_nu.get(&g.index)?),
            _ => return None,
        };
        tuple.0[*pos] += 1;
        Some(())
    }

    fn check_lengths(&self, key: &QKey) -> Result<()> {
        let u = self.unit();
        for (a, b) in [(&key.i, &u.i), (&key.j, &u.j), (&key.k, &u.k)] {
            if a.len() != b.len() {
                return Err(Error::LengthMismatch(a.len(), b.len()));
            }
        }
        Ok(())
    }

    fn key_to_word(&self, key: &QKey) -> Vec<Generator> {
        let mut word = Vec::new();
        let parts: [(&FiniteTuple, &[i64], fn(i64) -> Generator); 3] = [
            (&key.i, &self.bar_lambda, Generator::l),
            (&key.j, &self.bar_mu, |q| Generator::y(q - 1)),
            (&key.k, &self.bar_nu, Generator::m),
        ];
        for (tuple, indices, make) in parts {
            for (e, &x) in tuple.0.iter().zip(indices) {
                word.extend(std::iter::repeat(make(x)).take(*e as usize));
            }
        }
        word
    }

    fn word_to_key(&self, word: &[Generator]) -> QKey {
        let mut key = self.unit();
        for g in word {
            self.bump(&mut key, g).expect("engine output uses free generators only");
        }
        key
    }

    fn is_free(&self, g: &Generator) -> bool {
        match g.family {
            Family::L => self.pos_lambda.contains_key(&g.index),
            Family::Y => self.pos_mu.contains_key(&(g.index + 1)),
            Family::M => self.pos_nu.contains_key(&g.index),
            _ => false,
        }
    }

    /// `χ(g)` for a generator of the ideal's span.
    pub fn character(&self, g: &Generator) -> Scalar {
        match g.family {
            Family::L => self.spec.lambda_of(g.index),
            Family::Y => self.spec.mu_of(g.index + 1),
            Family::M => self.spec.nu_of(g.index),
            Family::C => self.spec.c.clone(),
            Family::W => Scalar::zero(),
        }
    }

    /// `g · key` in `Q`.
    pub fn q_act(&self, g: &Generator, key: &QKey) -> Result<LinComb<QKey>> {
        self.check_member(g)?;
        self.check_lengths(key)?;
        let engine = Engine::new(self);
        let word = self.key_to_word(key);
        let out = engine.left_mul(g, &word, &())?;
        Ok(out.into_iter().map(|((w, ()), c)| (self.word_to_key(&w), c)).collect())
    }

    /// `(g - χ(g)) · v`.
    fn shifted_act(&self, g: &Generator, v: &LinComb<QKey>) -> Result<LinComb<QKey>> {
        let mut out = self.act_sub_vec(g, v)?;
        out.add_scaled(v, &(-self.character(g)));
        Ok(out)
    }

    /// Upper bound on reduction steps from a vector of degree `key`: every
    /// `L` or `Y` unit takes one step and may create one `M` unit, and every
    /// `M` unit moves up through `S̄_ν` at most `|S̄_ν|` times.
    pub fn step_bound(&self, key: &QKey) -> u64 {
        let (a, b, c) = (key.i.total(), key.j.total(), key.k.total());
        a + b + (a + b + c) * self.bar_nu.len() as u64
    }

    /// Applies the reduction elements until the degree is zero.
    pub fn q_reduce(&self, v: &LinComb<QKey>) -> Result<(LinComb<QKey>, Vec<QStep>)> {
        let searcher = Searcher::new(&self.spec);
        let mut v = v.clone();
        let start = q_deg(&v)?;
        let bound = self.step_bound(&start);
        let mut trace = Vec::new();
        loop {
            let deg = q_deg(&v)?;
            if deg == self.unit() {
                return Ok((v, trace));
            }
            if trace.len() as u64 >= bound {
                return Err(Error::StepBoundExceeded(trace.len()));
            }
            let (case, cond, x, tuple_index) = if !deg.i.is_zero() {
                (1, Search::V, deg.i.min_position().unwrap(), &self.bar_lambda)
            } else if !deg.j.is_zero() {
                (2, Search::VI, deg.j.min_position().unwrap(), &self.bar_mu)
            } else {
                (3, Search::VII, deg.k.min_position().unwrap(), &self.bar_nu)
            };
            let jx = tuple_index[x - 1];
            let choice = searcher
                .find(cond, jx)
                .ok_or_else(|| Error::NoReductionElement(format!("no element for {jx} in case {case}")))?;
            let y = choice.i;
            let (g, target) = match case {
                1 => (Generator::m(y), jx + y),
                2 => (Generator::y(y - 1), jx + y - 1),
                _ => (Generator::l(y), jx + y),
            };
            let mut predicted = deg.clone();
            match case {
                1 => predicted.i.0[x - 1] -= 1,
                2 => predicted.j.0[x - 1] -= 1,
                _ => predicted.k.0[x - 1] -= 1,
            }
            if let Some(&s) = self.pos_nu.get(&target) {
                predicted.k.0[s] += 1;
            }
            let next = self.shifted_act(&g, &v)?;
            if next.is_zero() {
                return Err(Error::ZeroIntermediate(format!("{g} - χ annihilated the vector")));
            }
            let actual = q_deg(&next)?;
            if actual != predicted {
                return Err(Error::PredictionMismatch {
                    applied: g.to_string(),
                    predicted: format!("{predicted:?}"),
                    actual: format!("{actual:?}"),
                });
            }
            trace.push(QStep { case, applied: g, predicted, actual });
            v = next;
        }
    }
}

/// The maximal key of `v` in the order of [`QKey`].
pub fn q_deg(v: &LinComb<QKey>) -> Result<QKey> {
    v.keys().next_back().cloned().ok_or(Error::ZeroVector)
}

impl Absorber for QModule {
    type Key = ();

    fn algebra(&self) -> crate::generator::Algebra {
        crate::generator::Algebra::Sv
    }

    fn rank(&self, g: &Generator) -> Result<Option<Rank>> {
        self.check_member(g)?;
        Ok(if self.is_free(g) { PbwOrder::Quotient.rank(g) } else { None })
    }

    fn absorb(&self, g: &Generator, _key: &()) -> Result<LinComb<()>> {
        Ok(LinComb::single((), self.character(g)))
    }
}

impl BaseModule for QModule {
    type Key = QKey;

    fn subalgebra(&self) -> Subalgebra {
        Subalgebra::Sv { d1: self.spec.d1, d2: self.spec.d2 }
    }

    fn t(&self) -> u32 {
        self.spec.t
    }

    fn cyclic(&self) -> QKey {
        self.unit()
    }

    fn act_sub(&self, g: &Generator, key: &QKey) -> Result<LinComb<QKey>> {
        self.q_act(g, key)
    }
}

/// The quotient with `t = d1 = d2 = 1`, free generators `L_0`, `Y_{-1/2}`,
/// `M_{-1}`: a Whittaker-type module.
pub fn make_whittaker(
    lambda: [Scalar; 2],
    mu: [Scalar; 2],
    nu0: Scalar,
    nu1: Scalar,
    c: Scalar,
) -> Result<QModule> {
    if nu0.is_zero() || nu1.is_zero() {
        return Err(Error::InvalidParams("Whittaker data needs nu0, nu1 != 0".into()));
    }
    let [l1, l2] = lambda;
    let [m1, m2] = mu;
    QModule::new(QSpec {
        d1: 1,
        d2: 1,
        t: 1,
        c,
        s_lambda: [1, 2].into(),
        s_mu: [1, 2].into(),
        s_nu0: BTreeSet::new(),
        s_nu1: [0, 1].into(),
        lambda: [(1, l1), (2, l2)].into(),
        mu: [(1, m1), (2, m2)].into(),
        nu: [(0, nu0), (1, nu1)].into(),
    })
}
