//! Acceptance criteria. Each criterion prints one line with its verdict and
//! pinned limits; the process exits nonzero if any criterion fails.
//!
//! All arithmetic is exact, so every equality check has tolerance zero.
//! Every random draw uses seed 42.

use std::time::{Duration, Instant};

use svmod::base::BaseModule;
use svmod::catalog;
use svmod::induced::Induced;
use svmod::pbw::PbwOrder;
use svmod::props::{self, Failure, Sample};
use svmod::w22::{t0_condition_check, T0Verdict};
use svmod::{Algebra, Scalar};

const SEED: u64 = 42;

struct Outcome {
    failures: Vec<Failure>,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { failures: Vec::new(), notes: Vec::new() }
    }

    fn extend(&mut self, f: Vec<Failure>) {
        self.failures.extend(f);
    }

    fn require(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(Failure { case: "check".into(), trial: 0, detail: what.into() });
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }
}

fn run(n: u32, title: &str, limit: Option<Duration>, body: impl FnOnce(&mut Outcome)) -> bool {
    let start = Instant::now();
    let mut out = Outcome::new();
    body(&mut out);
    let elapsed = start.elapsed();
    let in_time = limit.map_or(true, |l| elapsed < l);
    let pass = out.failures.is_empty() && in_time;
    let limit_text = limit.map_or(String::new(), |l| format!(" limit {}s", l.as_secs()));
    println!(
        "criterion {n} {}: {title} [{:.1}s{limit_text}] {}",
        if pass { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        out.notes.join("; "),
    );
    for f in out.failures.iter().take(5) {
        println!("    {} #{}: {}", f.case, f.trial, f.detail);
    }
    if !in_time {
        println!("    over the time limit");
    }
    pass
}

fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

fn brackets(o: &mut Outcome) {
    for algebra in [Algebra::Sv, Algebra::W22] {
        o.extend(props::antisymmetry_exhaustive(algebra, -10, 10));
        o.extend(props::jacobi_exhaustive(algebra, -6, 6));
    }
    o.note("all pairs in [-10,10], all triples in [-6,6], both algebras, exact zero");
}

fn confluence(o: &mut Outcome) {
    let mut words = 0;
    for algebra in [Algebra::Sv, Algebra::W22] {
        for order in [PbwOrder::Induced, PbwOrder::Quotient] {
            let case = format!("confluence/{}/{order:?}", algebra.name());
            o.extend(props::run_case(&case, SEED, 500, |rng| {
                let word = props::random_word(rng, algebra, 5, -4, 4);
                props::check_confluence(&word, order)
            }));
            words += 500;
        }
    }
    o.note(format!("{words} words, length <= 5, indices in [-4,4], 5 strategies each"));
}

fn module_axiom(o: &mut Outcome) {
    o.extend(props::module_axiom_case("verma", &Induced::new(catalog::verma()), SEED, 1000));
    o.extend(props::module_axiom_case("whittaker", &Induced::new(catalog::whittaker()), SEED, 1000));
    o.extend(props::module_axiom_case("q-t2", &Induced::new(catalog::q_t2()), SEED, 1000));
    o.note("1000 trials x {Verma, Whittaker, t=2 quotient}, exact equality");
}

fn claim31<V: Sample>(o: &mut Outcome, name: &str, base: V) {
    o.extend(props::claim31_case(name, &Induced::new(base), SEED, 500));
}

fn claim31_all(o: &mut Outcome) {
    claim31(o, "0,0,0", catalog::verma());
    claim31(o, "1,1,1", catalog::whittaker());
    claim31(o, "1,0,2", catalog::q_1_0_2());
    claim31(o, "3,2,2", catalog::q_3_2_2());
    claim31(o, "0,0,2", catalog::q_t2());
    o.note("500 vectors x (d1,d2,t) in {(0,0,0),(1,1,1),(1,0,2),(3,2,2),(0,0,2)}, zero mismatches");
}

fn simplicity(o: &mut Outcome) {
    o.extend(props::claim31_case("verma", &Induced::new(catalog::verma()), SEED, 200));
    o.extend(props::claim31_case("whittaker", &Induced::new(catalog::whittaker()), SEED, 200));
    o.extend(props::claim31_case("q-t2", &Induced::new(catalog::q_t2()), SEED, 200));
    o.note("200 vectors x {Verma, Whittaker, t=2 quotient}, nonzero base vector within the entry-sum bound");
}

fn nilpotency(o: &mut Outcome) {
    o.extend(props::nilpotency_case("0,0,0", &Induced::new(catalog::verma()), SEED, 100, 2, 6));
    o.extend(props::nilpotency_case("1,1,1", &Induced::new(catalog::whittaker()), SEED, 100, 2, 6));
    o.extend(props::nilpotency_case("1,0,2", &Induced::new(catalog::q_1_0_2()), SEED, 100, 2, 6));
    o.extend(props::nilpotency_case("3,2,2", &Induced::new(catalog::q_3_2_2()), SEED, 100, 2, 6));
    o.extend(props::nilpotency_case("0,0,2", &Induced::new(catalog::q_t2()), SEED, 100, 2, 6));
    o.note("100 vectors of slot weight <= 2 per configuration, N <= 6; first-slot M, Y, L never kill 1 (x) v within 6");
}

fn singular(o: &mut Outcome) {
    let space = Induced::new(catalog::verma()).singular_space(4);
    match space {
        Ok(space) => {
            o.require(space.basis.len() == 1 && space.basis[0].keys().all(|k| k.is_base()), format!("basis {:?}", space.basis));
            for (w, d) in &space.piece_dims {
                o.require(*w == 0 || *d == 0, format!("piece {w} has kernel dimension {d}"));
            }
            let dims: Vec<String> = space.piece_dims.iter().map(|(w, d)| format!("{w}:{d}")).collect();
            o.note(format!("kernel dimension 1, per piece {}", dims.join(" ")));
        }
        Err(e) => o.require(false, e.to_string()),
    }
}

fn verifier(o: &mut Outcome) {
    let report = catalog::q_t2_spec().verify_conditions().expect("valid parameters");
    o.require(report.entries.len() == 7 && report.all_pass(), format!("t=2 spec: {report:?}"));
    let bad = catalog::condition_i_violation().verify_conditions().expect("valid parameters");
    let i = bad.get("I").expect("condition I reported");
    o.require(!i.pass && i.witness == Some(vec![1, 2]), format!("condition I: {i:?}"));
    for (name, q) in [
        ("q-t2", catalog::q_t2()),
        ("1,0,2", catalog::q_1_0_2()),
        ("3,2,2", catalog::q_3_2_2()),
        ("whittaker", catalog::whittaker()),
    ] {
        o.extend(props::q_reduce_case(name, &q, SEED, 200));
    }
    o.note("t=2 parameters pass I-VII; violation witness (1,2); 200 quotient vectors x 4 parameter sets reach degree 0 with every step as predicted");
}

fn w_mirror<V: Sample>(o: &mut Outcome, name: &str, base: V) {
    let ind = Induced::new(base);
    o.extend(props::module_axiom_case(&format!("{name}/axiom"), &ind, SEED, 1000));
    o.extend(props::w_reduce_case(&format!("{name}/claim"), &ind, SEED, 500));
    o.extend(props::w_reduce_case(&format!("{name}/simple"), &ind, SEED + 1, 200));
    o.extend(props::nilpotency_case(&format!("{name}/nilpotency"), &ind, SEED, 100, 2, 6));
}

fn w22(o: &mut Outcome) {
    o.extend(props::antisymmetry_exhaustive(Algebra::W22, -10, 10));
    o.extend(props::jacobi_exhaustive(Algebra::W22, -6, 6));
    let onedim = catalog::w_onedim();
    o.require(onedim.t() == 0, "t = 0 base");
    w_mirror(o, "0,0", onedim);
    w_mirror(o, "1,1", catalog::w_quotient(1, 1));
    w_mirror(o, "2,2", catalog::w_quotient(2, 2));
    o.extend(props::run_case("t0-brute-force", SEED, 100, |rng| {
        let (h, c) = props::random_t0_pair(rng);
        props::t0_agreement(&h, &c, 10_000)
    }));
    o.extend(props::run_case("pairing", SEED, 50, |rng| {
        let (h, c) = props::random_t0_pair(rng);
        props::pairing_agreement(&h, &c, 8)
    }));
    let v = t0_condition_check(&Scalar::int(-1), &Scalar::int(1));
    o.require(v == T0Verdict::Fail { n: 5 }, format!("(-1,1) gave {v:?}"));
    let v = t0_condition_check(&Scalar::int(1), &Scalar::int(1));
    o.require(v == T0Verdict::Pass, format!("(1,1) gave {v:?}"));
    o.note("(d,t) in {(0,0),(1,1),(2,2)}: axiom 1000, claim 500, reduction 200, nilpotency 100; t0 check equals brute force |n| <= 10^4 on 100 pairs; (-1,1) fail n=5, (1,1) pass");
}

fn main() {
    let results = [
        run(1, "bracket axioms", secs(30), brackets),
        run(2, "PBW confluence", secs(60), confluence),
        run(3, "module axiom on induced modules", secs(300), module_axiom),
        run(4, "degree prediction of each reduction step", None, claim31_all),
        run(5, "reduction to the base module", None, simplicity),
        run(6, "local nilpotency and freeness", None, nilpotency),
        run(7, "singular vectors of the Verma module", secs(60), singular),
        run(8, "condition verifier and quotient reduction", None, verifier),
        run(9, "W(2,2) mirror", None, w22),
    ];
    let passed = results.iter().filter(|&&p| p).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed != results.len() {
        std::process::exit(1);
    }
}
