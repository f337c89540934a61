//! Randomized property suites with reproducible per-trial streams.
//!
//! Trial `n` of a case draws from a ChaCha8 stream seeded by the run seed and
//! the case name, with stream number `n`, so the outcome does not depend on
//! scheduling. Trials run on the rayon pool and are collected in index order.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::base::{BaseModule, OneDim, QKey, QModule, Subalgebra};
use crate::bracket::{bracket, bracket_elements};
use crate::catalog;
use crate::error::{Error, Result};
use crate::generator::{Algebra, Family, Generator};
use crate::induced::{deg, IndKey, IndVector, Induced};
use crate::lincomb::LinComb;
use crate::multi_index::MultiIndex;
use crate::pbw::{straighten, NormalMonomial, PbwOrder};
use crate::scalar::Scalar;
use crate::w22::{pairing_condition_check, t0_condition_check, w_reduce, T0Verdict, WKey, WOneDim, WQ};

pub const SUITES: [&str; 8] = [
    "jacobi",
    "module-axiom",
    "claim31",
    "reduction",
    "nilpotency",
    "singular",
    "w22",
    "confluence",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub case: String,
    pub trial: usize,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub pass: bool,
    pub failures: Vec<Failure>,
}

impl SuiteReport {
    fn from_failures(failures: Vec<Failure>) -> Self {
        SuiteReport { pass: failures.is_empty(), failures }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedReport {
    pub suite: String,
    pub pass: bool,
    pub failures: Vec<Failure>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AllReport {
    pub pass: bool,
    pub failures: Vec<Failure>,
    pub suites: Vec<NamedReport>,
}

/// The stream for trial `trial` of `case` under `seed`.
pub fn trial_rng(seed: u64, case: &str, trial: usize) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    for (slot, b) in key[8..].iter_mut().zip(case.bytes()) {
        *slot = b;
    }
    let mut rng = ChaCha8Rng::from_seed(key);
    rng.set_stream(trial as u64);
    rng
}

/// Runs `trials` independent checks of one case, keeping failures in trial order.
pub fn run_case<F>(case: &str, seed: u64, trials: usize, check: F) -> Vec<Failure>
where
    F: Fn(&mut ChaCha8Rng) -> std::result::Result<(), String> + Sync,
{
    (0..trials)
        .into_par_iter()
        .filter_map(|n| {
            let mut rng = trial_rng(seed, case, n);
            check(&mut rng).err().map(|detail| Failure { case: case.to_string(), trial: n, detail })
        })
        .collect()
}

fn single<F: FnOnce() -> std::result::Result<(), String>>(case: &str, check: F) -> Vec<Failure> {
    check()
        .err()
        .map(|detail| Failure { case: case.to_string(), trial: 0, detail })
        .into_iter()
        .collect()
}

// ----------------------------------------------------------------------------
// Random data

/// Base modules that can produce random basis keys.
pub trait Sample: BaseModule + Sync {
    fn sample_key(&self, rng: &mut ChaCha8Rng) -> Self::Key;
}

impl Sample for OneDim {
    fn sample_key(&self, _rng: &mut ChaCha8Rng) {}
}

impl Sample for WOneDim {
    fn sample_key(&self, _rng: &mut ChaCha8Rng) {}
}

fn sprinkle(rng: &mut ChaCha8Rng, entries: &mut [u32]) {
    for e in entries {
        if rng.gen_bool(0.3) {
            *e = rng.gen_range(1..=2);
        }
    }
}

impl Sample for QModule {
    fn sample_key(&self, rng: &mut ChaCha8Rng) -> QKey {
        let mut k = self.unit();
        if rng.gen_bool(0.5) {
            sprinkle(rng, &mut k.i.0);
            sprinkle(rng, &mut k.j.0);
            sprinkle(rng, &mut k.k.0);
        }
        k
    }
}

impl Sample for WQ {
    fn sample_key(&self, rng: &mut ChaCha8Rng) -> WKey {
        let mut k = self.unit();
        if rng.gen_bool(0.5) {
            sprinkle(rng, &mut k.i.0);
            sprinkle(rng, &mut k.j.0);
        }
        k
    }
}

/// A nonzero rational with small numerator and denominator.
pub fn random_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    let mut n = rng.gen_range(-5..=4);
    if n >= 0 {
        n += 1;
    }
    Scalar::ratio(n, rng.gen_range(1..=3))
}

/// A generator with index in `lo..=hi`; the central element appears with
/// probability 1/20.
pub fn random_generator(rng: &mut ChaCha8Rng, algebra: Algebra, lo: i64, hi: i64) -> Generator {
    if rng.gen_ratio(1, 20) {
        return match algebra {
            Algebra::Sv => Generator::c(),
            Algebra::W22 => Generator::cw(),
        };
    }
    let n = rng.gen_range(lo..=hi);
    match algebra {
        Algebra::Sv => match rng.gen_range(0..3) {
            0 => Generator::m(n),
            1 => Generator::y(n),
            _ => Generator::l(n),
        },
        Algebra::W22 => {
            if rng.gen_bool(0.5) {
                Generator::w(n)
            } else {
                Generator::wl(n)
            }
        }
    }
}

/// Every generator with index in `lo..=hi`, plus the central element.
pub fn generators(algebra: Algebra, lo: i64, hi: i64) -> Vec<Generator> {
    let mut out = Vec::new();
    for n in lo..=hi {
        match algebra {
            Algebra::Sv => out.extend([Generator::m(n), Generator::y(n), Generator::l(n)]),
            Algebra::W22 => out.extend([Generator::w(n), Generator::wl(n)]),
        }
    }
    out.push(match algebra {
        Algebra::Sv => Generator::c(),
        Algebra::W22 => Generator::cw(),
    });
    out
}

/// A basis key of total slot weight at most `wmax` over a random base key;
/// half of the keys have weight exactly `wmax`, split into parts of size at most 3.
pub fn random_key<V: Sample>(ind: &Induced<V>, rng: &mut ChaCha8Rng, wmax: u32) -> IndKey<V::Key> {
    let slots: &[usize] = match ind.subalgebra() {
        Subalgebra::Sv { .. } => &[0, 1, 2],
        Subalgebra::W22 { .. } => &[0, 2],
    };
    let mut key = IndKey::base(ind.base().sample_key(rng));
    let mut left = if rng.gen_bool(0.5) { wmax } else { rng.gen_range(0..=wmax) };
    while left > 0 {
        let s = rng.gen_range(1..=left.min(3));
        let target: &mut MultiIndex = match slots.choose(rng).copied().unwrap_or(0) {
            0 => &mut key.m,
            1 => &mut key.y,
            _ => &mut key.l,
        };
        target.add_eps(s);
        left -= s;
    }
    key
}

/// A nonzero vector with at most `support` terms of slot weight at most `wmax`.
pub fn random_vector<V: Sample>(ind: &Induced<V>, rng: &mut ChaCha8Rng, support: usize, wmax: u32) -> IndVector<V::Key> {
    loop {
        let n = rng.gen_range(1..=support);
        let v: IndVector<V::Key> = (0..n).map(|_| (random_key(ind, rng, wmax), random_scalar(rng))).collect();
        if !v.is_zero() {
            return v;
        }
    }
}

/// `t + d1` (or `t + d`): the top index of the window where `V` is not killed.
fn top<V: BaseModule>(ind: &Induced<V>) -> i64 {
    let sub = ind.subalgebra();
    let d = match sub {
        Subalgebra::Sv { d1, .. } => d1,
        Subalgebra::W22 { d } => d,
    };
    (ind.base().t() + d) as i64
}

// ----------------------------------------------------------------------------
// Brackets

fn jacobi_defect(x: &Generator, y: &Generator, z: &Generator) -> Result<LinComb<Generator>> {
    let bx = LinComb::basis(*x);
    let by = LinComb::basis(*y);
    let bz = LinComb::basis(*z);
    let mut sum = bracket_elements(&bracket(x, y)?, &bz)?;
    sum.add_assign(&bracket_elements(&bracket(y, z)?, &bx)?);
    sum.add_assign(&bracket_elements(&bracket(z, x)?, &by)?);
    Ok(sum)
}

fn antisymmetry_defect(x: &Generator, y: &Generator) -> Result<LinComb<Generator>> {
    Ok(bracket(x, y)?.plus(&bracket(y, x)?))
}

/// `[x,y] + [y,x]` over every pair with indices in `lo..=hi`.
pub fn antisymmetry_exhaustive(algebra: Algebra, lo: i64, hi: i64) -> Vec<Failure> {
    let gens = generators(algebra, lo, hi);
    let mut out = Vec::new();
    for x in &gens {
        for y in &gens {
            match antisymmetry_defect(x, y) {
                Ok(d) if d.is_zero() => {}
                Ok(d) => out.push(failure("antisymmetry", format!("[{x},{y}] + [{y},{x}] = {d:?}"))),
                Err(e) => out.push(failure("antisymmetry", e.to_string())),
            }
        }
    }
    out
}

/// The Jacobi identity over every triple with indices in `lo..=hi`.
pub fn jacobi_exhaustive(algebra: Algebra, lo: i64, hi: i64) -> Vec<Failure> {
    let gens = generators(algebra, lo, hi);
    gens.par_iter()
        .flat_map_iter(|x| {
            let gens = &gens;
            gens.iter().flat_map(move |y| {
                gens.iter().filter_map(move |z| match jacobi_defect(x, y, z) {
                    Ok(d) if d.is_zero() => None,
                    Ok(d) => Some(failure("jacobi", format!("({x},{y},{z}) leaves {d:?}"))),
                    Err(e) => Some(failure("jacobi", e.to_string())),
                })
            })
        })
        .collect()
}

fn failure(case: &str, detail: String) -> Failure {
    Failure { case: case.to_string(), trial: 0, detail }
}

fn random_bracket_case(seed: u64, trials: usize, algebra: Algebra) -> Vec<Failure> {
    let case = format!("jacobi/{}", algebra.name());
    run_case(&case, seed, trials, |rng| {
        let x = random_generator(rng, algebra, -6, 6);
        let y = random_generator(rng, algebra, -6, 6);
        let z = random_generator(rng, algebra, -6, 6);
        let anti = antisymmetry_defect(&x, &y).map_err(|e| e.to_string())?;
        if !anti.is_zero() {
            return Err(format!("[{x},{y}] + [{y},{x}] = {anti:?}"));
        }
        let jac = jacobi_defect(&x, &y, &z).map_err(|e| e.to_string())?;
        if !jac.is_zero() {
            return Err(format!("({x},{y},{z}) leaves {jac:?}"));
        }
        Ok(())
    })
}

pub fn jacobi_suite(seed: u64, trials: usize) -> Vec<Failure> {
    let mut out = random_bracket_case(seed, trials, Algebra::Sv);
    out.extend(random_bracket_case(seed, trials, Algebra::W22));
    out
}

// ----------------------------------------------------------------------------
// Confluence

/// Which inversion the rewriting oracle resolves next.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
    Random(u64),
}

pub const STRATEGIES: [Strategy; 5] = [
    Strategy::Leftmost,
    Strategy::Rightmost,
    Strategy::Random(1),
    Strategy::Random(2),
    Strategy::Random(3),
];

/// Normal form by repeatedly rewriting one adjacent inversion `a b` into
/// `b a + [a, b]`, with the central element collected separately.
///
/// This shares only the bracket table and the generator order with
/// [`straighten`].
pub fn rewrite_normal_form(word: &[Generator], order: PbwOrder, strategy: Strategy) -> Result<LinComb<NormalMonomial>> {
    let mut rng = ChaCha8Rng::seed_from_u64(match strategy {
        Strategy::Random(s) => s,
        _ => 0,
    });
    let central = word.iter().filter(|g| g.is_central()).count() as u32;
    let stripped: Vec<Generator> = word.iter().copied().filter(|g| !g.is_central()).collect();
    let mut pending = vec![(stripped, central, Scalar::one())];
    let mut done = LinComb::new();
    while let Some((w, c, coeff)) = pending.pop() {
        let inversions: Vec<usize> = (0..w.len().saturating_sub(1))
            .filter(|&p| order.rank(&w[p]) > order.rank(&w[p + 1]))
            .collect();
        let Some(&p) = (match strategy {
            Strategy::Leftmost => inversions.first(),
            Strategy::Rightmost => inversions.last(),
            Strategy::Random(_) => inversions.choose(&mut rng),
        }) else {
            done.add_term(NormalMonomial::from_word(&w, c), coeff);
            continue;
        };
        let mut swapped = w.clone();
        swapped.swap(p, p + 1);
        pending.push((swapped, c, coeff.clone()));
        for (h, d) in &bracket(&w[p], &w[p + 1])? {
            let mut shorter: Vec<Generator> = w[..p].to_vec();
            let mut cc = c;
            if h.is_central() {
                cc += 1;
            } else {
                shorter.push(*h);
            }
            shorter.extend_from_slice(&w[p + 2..]);
            pending.push((shorter, cc, &coeff * d));
        }
    }
    Ok(done)
}

/// A word of length `0..=max_len` with indices in `lo..=hi`.
pub fn random_word(rng: &mut ChaCha8Rng, algebra: Algebra, max_len: usize, lo: i64, hi: i64) -> Vec<Generator> {
    let n = rng.gen_range(0..=max_len);
    (0..n).map(|_| random_generator(rng, algebra, lo, hi)).collect()
}

/// Compares [`straighten`] with the rewriting oracle under every strategy.
pub fn check_confluence(word: &[Generator], order: PbwOrder) -> std::result::Result<(), String> {
    let engine = straighten(word, order).map_err(|e| e.to_string())?;
    for strategy in STRATEGIES {
        let oracle = rewrite_normal_form(word, order, strategy).map_err(|e| e.to_string())?;
        if oracle != engine {
            return Err(format!("{word:?} under {order:?}/{strategy:?}: engine {engine:?}, oracle {oracle:?}"));
        }
    }
    Ok(())
}

pub fn confluence_suite(seed: u64, trials: usize) -> Vec<Failure> {
    let mut out = Vec::new();
    for algebra in [Algebra::Sv, Algebra::W22] {
        for order in [PbwOrder::Induced, PbwOrder::Quotient] {
            let case = format!("confluence/{}/{order:?}", algebra.name());
            out.extend(run_case(&case, seed, trials, |rng| {
                let word = random_word(rng, algebra, 5, -4, 4);
                check_confluence(&word, order)
            }));
        }
    }
    out
}

// ----------------------------------------------------------------------------
// Module axiom

/// `x(yv) - y(xv) = [x,y]v` for random `x`, `y` with indices in
/// `-5..=top+3` and random `v` of support at most 3 and weight at most 5.
pub fn module_axiom_case<V: Sample>(case: &str, ind: &Induced<V>, seed: u64, trials: usize) -> Vec<Failure> {
    let algebra = ind.subalgebra().algebra();
    let hi = top(ind) + 3;
    run_case(case, seed, trials, |rng| {
        let x = random_generator(rng, algebra, -5, hi);
        let y = random_generator(rng, algebra, -5, hi);
        let v = random_vector(ind, rng, 3, 5);
        module_axiom_defect(ind, &x, &y, &v).map_err(|e| e.to_string()).and_then(|d| {
            if d.is_zero() {
                Ok(())
            } else {
                Err(format!("x={x} y={y} v={v:?} defect {d:?}"))
            }
        })
    })
}

pub fn module_axiom_defect<V: BaseModule>(
    ind: &Induced<V>,
    x: &Generator,
    y: &Generator,
    v: &IndVector<V::Key>,
) -> Result<IndVector<V::Key>> {
    let xy = ind.act(x, &ind.act(y, v)?)?;
    let yx = ind.act(y, &ind.act(x, v)?)?;
    let rhs = ind.act_element(&bracket(x, y)?, v)?;
    Ok(xy.minus(&yx).minus(&rhs))
}

pub fn module_axiom_suite(seed: u64, trials: usize) -> Vec<Failure> {
    let mut out = module_axiom_case("module-axiom/verma", &Induced::new(catalog::verma()), seed, trials);
    out.extend(module_axiom_case("module-axiom/whittaker", &Induced::new(catalog::whittaker()), seed, trials));
    out.extend(module_axiom_case("module-axiom/q-t2", &Induced::new(catalog::q_t2()), seed, trials));
    out
}

// ----------------------------------------------------------------------------
// Reduction

/// Runs the reduction from random vectors; every step checks its predicted
/// degree and the step count stays within the sum of the leading entries.
pub fn claim31_case<V: Sample>(case: &str, ind: &Induced<V>, seed: u64, trials: usize) -> Vec<Failure> {
    run_case(case, seed, trials, |rng| {
        let v = random_vector(ind, rng, 3, 5);
        reduce_checked(ind, &v).map(|_| ())
    })
}

/// [`Induced::reduce_to_base`] plus the independent checks on its output.
pub fn reduce_checked<V: BaseModule>(ind: &Induced<V>, v: &IndVector<V::Key>) -> std::result::Result<LinComb<V::Key>, String> {
    let (i, j, k) = deg(v).map_err(|e| e.to_string())?;
    let bound = (i.total() + j.total() + k.total()) as usize;
    let (w, trace) = ind.reduce_to_base(v).map_err(|e| format!("v={v:?}: {e}"))?;
    if trace.len() > bound {
        return Err(format!("v={v:?}: {} steps exceed the bound {bound}", trace.len()));
    }
    if let Some(s) = trace.iter().find(|s| s.predicted != s.actual) {
        return Err(format!("v={v:?}: step {s:?} mismatched"));
    }
    if w.is_zero() {
        return Err(format!("v={v:?}: reduced to zero"));
    }
    Ok(w)
}

pub fn claim31_suite(seed: u64, trials: usize) -> Vec<Failure> {
    let mut out = claim31_case("claim31/0,0,0", &Induced::new(catalog::verma()), seed, trials);
    out.extend(claim31_case("claim31/1,1,1", &Induced::new(catalog::whittaker()), seed, trials));
    out.extend(claim31_case("claim31/1,0,2", &Induced::new(catalog::q_1_0_2()), seed, trials));
    out.extend(claim31_case("claim31/3,2,2", &Induced::new(catalog::q_3_2_2()), seed, trials));
    out.extend(claim31_case("claim31/0,0,2", &Induced::new(catalog::q_t2()), seed, trials));
    out
}

/// Reduces a random vector of `Ind(Q)` into `Q` and then to a multiple of the
/// generating vector.
pub fn q_chain_case(case: &str, q: QModule, seed: u64, trials: usize) -> Vec<Failure> {
    let ind = Induced::new(q);
    run_case(case, seed, trials, |rng| {
        let v = random_vector(&ind, rng, 3, 5);
        let w = reduce_checked(&ind, &v)?;
        let (end, steps) = ind.base().q_reduce(&w).map_err(|e| format!("w={w:?}: {e}"))?;
        if let Some(s) = steps.iter().find(|s| s.predicted != s.actual) {
            return Err(format!("w={w:?}: step {s:?} mismatched"));
        }
        let unit = ind.base().unit();
        if end.is_zero() || end.keys().any(|k| *k != unit) {
            return Err(format!("w={w:?}: ended at {end:?}"));
        }
        Ok(())
    })
}

/// Random vectors of `Q` reduced to a multiple of the generating vector.
pub fn q_reduce_case(case: &str, q: &QModule, seed: u64, trials: usize) -> Vec<Failure> {
    run_case(case, seed, trials, |rng| {
        let v = random_q_vector(q, rng);
        let (end, steps) = q.q_reduce(&v).map_err(|e| format!("v={v:?}: {e}"))?;
        if let Some(s) = steps.iter().find(|s| s.predicted != s.actual) {
            return Err(format!("v={v:?}: step {s:?} mismatched"));
        }
        if end.is_zero() || end.keys().any(|k| *k != q.unit()) {
            return Err(format!("v={v:?}: ended at {end:?}"));
        }
        Ok(())
    })
}

/// A nonzero vector of `Q` with at most four terms.
pub fn random_q_vector(q: &QModule, rng: &mut ChaCha8Rng) -> LinComb<QKey> {
    loop {
        let n = rng.gen_range(1..=4);
        let v: LinComb<QKey> = (0..n).map(|_| (q.sample_key(rng), random_scalar(rng))).collect();
        if !v.is_zero() {
            return v;
        }
    }
}

pub fn reduction_suite(seed: u64, trials: usize) -> Vec<Failure> {
    let mut out = claim31_case("reduction/verma", &Induced::new(catalog::verma()), seed, trials);
    out.extend(q_chain_case("reduction/whittaker", catalog::whittaker(), seed, trials));
    out.extend(q_chain_case("reduction/q-t2", catalog::q_t2(), seed, trials));
    for (name, q) in [
        ("q-reduce/q-t2", catalog::q_t2()),
        ("q-reduce/1,0,2", catalog::q_1_0_2()),
        ("q-reduce/3,2,2", catalog::q_3_2_2()),
        ("q-reduce/whittaker", catalog::whittaker()),
    ] {
        out.extend(q_reduce_case(name, &q, seed, trials));
    }
    out
}

// ----------------------------------------------------------------------------
// Nilpotency and freeness

/// A generator above the window where `V` is not killed.
fn random_annihilator<V: BaseModule>(ind: &Induced<V>, rng: &mut ChaCha8Rng) -> Generator {
    let t = ind.base().t() as i64;
    let top = top(ind);
    let shift = rng.gen_range(1..=3);
    match ind.subalgebra() {
        Subalgebra::Sv { d2, .. } => match rng.gen_range(0..3) {
            0 => Generator::m(t + shift),
            1 => Generator::y(t + d2 as i64 - 1 + shift),
            _ => Generator::l(top + shift),
        },
        Subalgebra::W22 { .. } => {
            if rng.gen_bool(0.5) {
                Generator::w(t + shift)
            } else {
                Generator::wl(top + shift)
            }
        }
    }
}

/// Generators whose powers never kill `1 ⊗ cyclic`: the first slot of every
/// family.
pub fn free_generators(sub: Subalgebra) -> Vec<Generator> {
    match sub {
        Subalgebra::Sv { .. } => vec![
            sub.slot_generator(Family::M, 1),
            sub.slot_generator(Family::Y, 1),
            sub.slot_generator(Family::L, 1),
        ],
        Subalgebra::W22 { .. } => vec![sub.slot_generator(Family::W, 1), sub.slot_generator(Family::L, 1)],
    }
}

/// Annihilators reach zero within `max_n` steps on random vectors of weight
/// at most `wmax`; the first-slot creation operators never kill the cyclic
/// vector within `max_n` steps.
pub fn nilpotency_case<V: Sample>(case: &str, ind: &Induced<V>, seed: u64, trials: usize, wmax: u32, max_n: usize) -> Vec<Failure> {
    let mut out = run_case(case, seed, trials, |rng| {
        let v = random_vector(ind, rng, 3, wmax);
        let g = random_annihilator(ind, rng);
        match ind.nilpotency_probe(&g, &v, max_n) {
            Ok(Some(_)) => Ok(()),
            Ok(None) => Err(format!("{g} did not kill {v:?} within {max_n} steps")),
            Err(e) => Err(e.to_string()),
        }
    });
    out.extend(single(&format!("{case}/free"), || {
        for g in free_generators(ind.subalgebra()) {
            match ind.nilpotency_probe(&g, &ind.cyclic(), max_n) {
                Ok(None) => {}
                Ok(Some(n)) => return Err(format!("{g}^{n} killed the cyclic vector")),
                Err(e) => return Err(e.to_string()),
            }
        }
        Ok(())
    }));
    out
}

pub fn nilpotency_suite(seed: u64, trials: usize) -> Vec<Failure> {
    let mut out = nilpotency_case("nilpotency/0,0,0", &Induced::new(catalog::verma()), seed, trials, 2, 6);
    out.extend(nilpotency_case("nilpotency/1,1,1", &Induced::new(catalog::whittaker()), seed, trials, 2, 6));
    out.extend(nilpotency_case("nilpotency/1,0,2", &Induced::new(catalog::q_1_0_2()), seed, trials, 2, 6));
    out.extend(nilpotency_case("nilpotency/3,2,2", &Induced::new(catalog::q_3_2_2()), seed, trials, 2, 6));
    out.extend(nilpotency_case("nilpotency/0,0,2", &Induced::new(catalog::q_t2()), seed, trials, 2, 6));
    out
}

// ----------------------------------------------------------------------------
// Singular vectors

/// The singular space of a one-dimensional base up to `wmax` is the base
/// itself.
pub fn check_singular_trivial(base: OneDim, wmax: u32) -> std::result::Result<(), String> {
    let ind = Induced::new(base.clone());
    let space = ind.singular_space(wmax).map_err(|e| e.to_string())?;
    if space.basis.len() != 1 || space.basis[0].keys().any(|k| !k.is_base()) {
        return Err(format!("{base:?}: basis {:?}", space.basis));
    }
    if let Some((w, d)) = space.piece_dims.iter().find(|(w, d)| *w > 0 && *d > 0) {
        return Err(format!("{base:?}: piece {w} has kernel dimension {d}"));
    }
    Ok(())
}

pub fn singular_suite(seed: u64, trials: usize) -> Vec<Failure> {
    let mut out = single("singular/verma", || check_singular_trivial(catalog::verma(), 4));
    out.extend(run_case("singular/random", seed, trials, |rng| {
        let xi = if rng.gen_bool(0.3) { Scalar::zero() } else { random_scalar(rng) };
        let c = if rng.gen_bool(0.3) { Scalar::zero() } else { random_scalar(rng) };
        let base = OneDim::new(xi, random_scalar(rng), c).map_err(|e| e.to_string())?;
        check_singular_trivial(base, 3)
    }));
    out
}

// ----------------------------------------------------------------------------
// W(2,2)

/// Brute force of the literal condition over `1 ≤ |n| ≤ bound` with exact
/// integer arithmetic: `24 a q + (n² - 1) p b = 0` for `h = a/b`, `c = p/q`.
pub fn t0_brute_force(h_w: &Scalar, c_w: &Scalar, bound: i64) -> Option<i64> {
    let parts = |s: &Scalar| -> (i128, i128) {
        (i128::try_from(s.numer()).expect("small numerator"), i128::try_from(s.denom()).expect("small denominator"))
    };
    let (a, b) = parts(h_w);
    let (p, q) = parts(c_w);
    (1..=bound).find(|&n| {
        let n = n as i128;
        24 * a * q + (n * n - 1) * p * b == 0
    })
}

/// A random `(h_W, c_W)`; a third of them are built to vanish at some `n`.
pub fn random_t0_pair(rng: &mut ChaCha8Rng) -> (Scalar, Scalar) {
    let c = if rng.gen_ratio(1, 10) { Scalar::zero() } else { random_scalar(rng) };
    if rng.gen_ratio(1, 3) {
        let n = rng.gen_range(1..=60);
        let h = -(Scalar::int(n * n - 1) * &c / Scalar::int(24));
        (h, c)
    } else {
        let h = if rng.gen_ratio(1, 10) { Scalar::zero() } else { random_scalar(rng) };
        (h, c)
    }
}

pub fn t0_agreement(h_w: &Scalar, c_w: &Scalar, bound: i64) -> std::result::Result<(), String> {
    let exact = t0_condition_check(h_w, c_w);
    let brute = t0_brute_force(h_w, c_w, bound);
    let agree = match (exact, brute) {
        (T0Verdict::Pass, None) => true,
        (T0Verdict::Fail { n }, Some(m)) => n == m,
        _ => false,
    };
    if agree {
        Ok(())
    } else {
        Err(format!("(h,c)=({h_w},{c_w}): exact {exact:?}, brute force {brute:?}"))
    }
}

/// `W_n (L_{-n} ⊗ v)` computed by the engine against the closed form behind
/// [`pairing_condition_check`].
pub fn pairing_agreement(h_w: &Scalar, c_w: &Scalar, n_max: i64) -> std::result::Result<(), String> {
    let ind = Induced::new(WOneDim::new_unchecked(Scalar::one(), h_w.clone(), c_w.clone()));
    let mut vanishes = None;
    for n in 1..=n_max {
        let v = LinComb::basis(ind.key_of(&[Generator::wl(-n)], ()).map_err(|e| e.to_string())?);
        let got = ind.act(&Generator::w(n), &v).map_err(|e| e.to_string())?;
        let form = Scalar::int(-n) * (Scalar::int(2) * h_w - Scalar::int(n * n - 1) * c_w / Scalar::int(12));
        if got != ind.cyclic().scaled(&form) {
            return Err(format!("n={n}: engine {got:?}, closed form {form}"));
        }
        if got.is_zero() && vanishes.is_none() {
            vanishes = Some(n);
        }
    }
    let verdict = pairing_condition_check(h_w, c_w);
    match (verdict, vanishes) {
        (T0Verdict::Fail { n }, Some(m)) if n == m => Ok(()),
        (T0Verdict::Fail { n }, None) if n > n_max => Ok(()),
        (T0Verdict::Pass, None) => Ok(()),
        _ => Err(format!("(h,c)=({h_w},{c_w}): pairing check {verdict:?}, engine vanishes at {vanishes:?}")),
    }
}

pub fn w22_suite(seed: u64, trials: usize) -> Vec<Failure> {
    let mut out = random_bracket_case(seed, trials, Algebra::W22);
    let onedim = Induced::new(catalog::w_onedim());
    let q11 = Induced::new(catalog::w_quotient(1, 1));
    let q22 = Induced::new(catalog::w_quotient(2, 2));
    out.extend(module_axiom_case("w22/module-axiom/0,0", &onedim, seed, trials));
    out.extend(module_axiom_case("w22/module-axiom/1,1", &q11, seed, trials));
    out.extend(module_axiom_case("w22/module-axiom/2,2", &q22, seed, trials));
    out.extend(w_reduce_case("w22/reduce/0,0", &onedim, seed, trials));
    out.extend(w_reduce_case("w22/reduce/1,1", &q11, seed, trials));
    out.extend(w_reduce_case("w22/reduce/2,2", &q22, seed, trials));
    out.extend(nilpotency_case("w22/nilpotency/0,0", &onedim, seed, trials, 2, 6));
    out.extend(nilpotency_case("w22/nilpotency/1,1", &q11, seed, trials, 2, 6));
    out.extend(nilpotency_case("w22/nilpotency/2,2", &q22, seed, trials, 2, 6));
    out.extend(run_case("w22/t0", seed, trials, |rng| {
        let (h, c) = random_t0_pair(rng);
        t0_agreement(&h, &c, 10_000)
    }));
    out.extend(run_case("w22/pairing", seed, trials.min(50), |rng| {
        let (h, c) = random_t0_pair(rng);
        pairing_agreement(&h, &c, 8)
    }));
    out
}

/// W(2,2) reduction with the same checks as [`reduce_checked`].
pub fn w_reduce_case<V: Sample>(case: &str, ind: &Induced<V>, seed: u64, trials: usize) -> Vec<Failure> {
    run_case(case, seed, trials, |rng| {
        let v = random_vector(ind, rng, 3, 5);
        let (i, _, k) = deg(&v).map_err(|e| e.to_string())?;
        let bound = (i.total() + k.total()) as usize;
        let (w, trace) = w_reduce(ind, &v).map_err(|e| format!("v={v:?}: {e}"))?;
        if trace.len() > bound || trace.iter().any(|s| s.predicted != s.actual) || w.is_zero() {
            return Err(format!("v={v:?}: trace {trace:?}, end {w:?}"));
        }
        Ok(())
    })
}

// ----------------------------------------------------------------------------
// Runner

pub fn default_trials(suite: &str) -> usize {
    match suite {
        "jacobi" => 1000,
        "module-axiom" => 200,
        "claim31" => 100,
        "reduction" => 100,
        "nilpotency" => 100,
        "singular" => 4,
        "w22" => 100,
        "confluence" => 200,
        _ => 0,
    }
}

pub fn run_suite(suite: &str, seed: u64, trials: Option<usize>) -> Result<SuiteReport> {
    let n = trials.unwrap_or_else(|| default_trials(suite));
    let failures = match suite {
        "jacobi" => jacobi_suite(seed, n),
        "module-axiom" => module_axiom_suite(seed, n),
        "claim31" => claim31_suite(seed, n),
        "reduction" => reduction_suite(seed, n),
        "nilpotency" => nilpotency_suite(seed, n),
        "singular" => singular_suite(seed, n),
        "w22" => w22_suite(seed, n),
        "confluence" => confluence_suite(seed, n),
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    Ok(SuiteReport::from_failures(failures))
}

pub fn run_all(seed: u64, trials: Option<usize>) -> AllReport {
    let suites: Vec<NamedReport> = SUITES
        .iter()
        .map(|name| {
            let r = run_suite(name, seed, trials).expect("known suite");
            NamedReport { suite: name.to_string(), pass: r.pass, failures: r.failures }
        })
        .collect();
    let failures: Vec<Failure> = suites.iter().flat_map(|s| s.failures.iter().cloned()).collect();
    AllReport { pass: failures.is_empty(), failures, suites }
}
