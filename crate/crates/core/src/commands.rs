//! The command layer behind the `svmod` binary: bracket evaluation, condition
//! reports, scenario reduction and property runs, each producing JSON.

use serde::Deserialize;
use serde_json::{json, Value};

use crate::base::{make_whittaker, BaseModule, OneDim, QKey, QModule, QSpec};
use crate::bracket::bracket;
use crate::error::{Error, Result};
use crate::generator::{Algebra, Generator};
use crate::induced::{from_records, to_records, IndRecord, IndVector, Induced};
use crate::lincomb::LinComb;
use crate::props;
use crate::scalar::Scalar;
use crate::w22::{from_w_records, to_w_records, w_reduce, WKey, WOneDim, WQSpec, WQ};

/// Process exit status for a command outcome.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Success = 0,
    Failure = 1,
    BadInput = 2,
}

impl Exit {
    /// Input and validation errors are `BadInput`; errors raised while
    /// computing are `Failure`.
    pub fn of(e: &Error) -> Exit {
        match e {
            Error::Parse(_)
            | Error::InvalidSpec(_)
            | Error::InvalidParams(_)
            | Error::NotInSubalgebra(_)
            | Error::AlgebraMismatch(..)
            | Error::LengthMismatch(..)
            | Error::UnknownSuite(_) => Exit::BadInput,
            _ => Exit::Failure,
        }
    }
}

fn parse_err(e: serde_json::Error) -> Error {
    if e.line() == 0 {
        Error::Parse(e.to_string())
    } else {
        Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column()))
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

/// `[g, h]` as a list of `{"g": generator, "c": coefficient}`.
pub fn bracket_json(algebra: Algebra, g: &str, h: &str) -> Result<Value> {
    let g = Generator::parse_json(algebra, g)?;
    let h = Generator::parse_json(algebra, h)?;
    let terms: Vec<Value> = bracket(&g, &h)?
        .iter()
        .map(|(x, c)| json!({ "g": x.to_json(), "c": c }))
        .collect();
    Ok(Value::Array(terms))
}

/// The condition report for a quotient parameter document, and whether every condition
/// holds.
pub fn verify_q(text: &str) -> Result<(Value, bool)> {
    let spec: QSpec = serde_json::from_str(text).map_err(parse_err)?;
    let report = spec.verify_conditions()?;
    Ok((to_value(&report), report.all_pass()))
}

fn zero() -> Scalar {
    Scalar::zero()
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct OneDimDoc {
    xi: Scalar,
    nu0: Scalar,
    #[serde(default = "zero")]
    c: Scalar,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct WhittakerDoc {
    lambda: [Scalar; 2],
    mu: [Scalar; 2],
    nu0: Scalar,
    nu1: Scalar,
    #[serde(default = "zero")]
    c: Scalar,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct WOneDimDoc {
    xi: Scalar,
    h_w: Scalar,
    #[serde(default = "zero")]
    c_w: Scalar,
}

/// Splits a base document into its `kind` and the remaining fields.
fn split_kind(base: &Value) -> Result<(String, Value)> {
    let mut obj = base
        .as_object()
        .cloned()
        .ok_or_else(|| Error::Parse("base must be an object".into()))?;
    let kind = obj
        .remove("kind")
        .and_then(|k| k.as_str().map(str::to_string))
        .ok_or_else(|| Error::Parse("base needs a string field \"kind\"".into()))?;
    Ok((kind, Value::Object(obj)))
}

fn from_doc<T: serde::de::DeserializeOwned>(v: Value) -> Result<T> {
    serde_json::from_value(v).map_err(parse_err)
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Scenario {
    algebra: String,
    base: Value,
    vector: Value,
    #[serde(default)]
    action: Vec<Value>,
}

fn parse_action(algebra: Algebra, action: &[Value]) -> Result<Vec<Generator>> {
    action.iter().map(|g| Generator::from_json(algebra, g)).collect()
}

/// Loads the vector and applies the optional action word, rightmost first.
fn prepare<V: BaseModule>(
    ind: &Induced<V>,
    vector: IndVector<V::Key>,
    action: &[Generator],
    check_key: impl Fn(&V::Key) -> Result<()>,
) -> Result<IndVector<V::Key>> {
    let sub = ind.subalgebra();
    for key in vector.keys() {
        check_key(&key.v)?;
        if sub.algebra() == Algebra::W22 && !key.y.is_zero() {
            return Err(Error::InvalidSpec("W(2,2) vectors have no Y slot".into()));
        }
    }
    let v = ind.act_word(action, &vector)?;
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(v)
}

fn base_records<K: serde::Serialize + Ord + Clone>(w: &LinComb<K>) -> Value {
    Value::Array(w.iter().map(|(k, c)| json!({ "v": k, "coeff": c })).collect())
}

fn reduce_sv<V: BaseModule>(ind: Induced<V>, sc: &Scenario, check_key: impl Fn(&V::Key) -> Result<()>) -> Result<(Value, LinComb<V::Key>)> {
    let records: Vec<IndRecord<V::Key>> = serde_json::from_value(sc.vector.clone()).map_err(parse_err)?;
    let v = prepare(&ind, from_records(records), &parse_action(Algebra::Sv, &sc.action)?, check_key)?;
    let (w, trace) = ind.reduce_to_base(&v)?;
    let out = json!({
        "vector": to_records(&v),
        "trace": trace,
        "base_vector": base_records(&w),
    });
    Ok((out, w))
}

fn q_key_check(q: &QModule) -> impl Fn(&QKey) -> Result<()> + '_ {
    move |k| {
        let u = q.unit();
        for (a, b) in [(&k.i, &u.i), (&k.j, &u.j), (&k.k, &u.k)] {
            if a.len() != b.len() {
                return Err(Error::LengthMismatch(a.len(), b.len()));
            }
        }
        Ok(())
    }
}

fn reduce_q(q: QModule, sc: &Scenario) -> Result<Value> {
    let check = q_key_check(&q);
    let ind = Induced::new(q.clone());
    let (mut out, w) = reduce_sv(ind, sc, check)?;
    let (end, steps) = q.q_reduce(&w)?;
    out["q_trace"] = to_value(&steps);
    out["final"] = base_records(&end);
    Ok(out)
}

/// Reduces the scenario's vector to the base module and, for quotient bases,
/// on to a multiple of the generating vector. Returns the trace document.
pub fn reduce(text: &str) -> Result<Value> {
    let sc: Scenario = serde_json::from_str(text).map_err(parse_err)?;
    let (kind, doc) = split_kind(&sc.base)?;
    match (Algebra::parse(&sc.algebra)?, kind.as_str()) {
        (Algebra::Sv, "onedim") => {
            let d: OneDimDoc = from_doc(doc)?;
            let ind = Induced::new(OneDim::new(d.xi, d.nu0, d.c)?);
            Ok(reduce_sv(ind, &sc, |_| Ok(()))?.0)
        }
        (Algebra::Sv, "qspec") => reduce_q(QModule::new(from_doc(doc)?)?, &sc),
        (Algebra::Sv, "whittaker") => {
            let d: WhittakerDoc = from_doc(doc)?;
            reduce_q(make_whittaker(d.lambda, d.mu, d.nu0, d.nu1, d.c)?, &sc)
        }
        (Algebra::W22, "onedim") => {
            let d: WOneDimDoc = from_doc(doc)?;
            reduce_w(Induced::new(WOneDim::new(d.xi, d.h_w, d.c_w)?), &sc, |_| Ok(()))
        }
        (Algebra::W22, "quotient") => {
            let wq = WQ::new(from_doc::<WQSpec>(doc)?)?;
            let u = wq.unit();
            reduce_w(Induced::new(wq), &sc, move |k: &WKey| {
                if k.i.len() != u.i.len() {
                    return Err(Error::LengthMismatch(k.i.len(), u.i.len()));
                }
                if k.j.len() != u.j.len() {
                    return Err(Error::LengthMismatch(k.j.len(), u.j.len()));
                }
                Ok(())
            })
        }
        (algebra, other) => Err(Error::Parse(format!("unknown base kind {other:?} for {}", algebra.name()))),
    }
}

fn reduce_w<V: BaseModule>(ind: Induced<V>, sc: &Scenario, check_key: impl Fn(&V::Key) -> Result<()>) -> Result<Value> {
    let records = serde_json::from_value(sc.vector.clone()).map_err(parse_err)?;
    let v = prepare(&ind, from_w_records(records), &parse_action(Algebra::W22, &sc.action)?, check_key)?;
    let (w, trace) = w_reduce(&ind, &v)?;
    Ok(json!({
        "vector": to_w_records(&v),
        "trace": trace,
        "base_vector": base_records(&w),
    }))
}

/// Runs one suite, or every suite for `"all"`, and reports whether all passed.
pub fn props_json(suite: &str, seed: u64, trials: Option<usize>) -> Result<(Value, bool)> {
    if suite == "all" {
        let r = props::run_all(seed, trials);
        return Ok((to_value(&r), r.pass));
    }
    let r = props::run_suite(suite, seed, trials)?;
    Ok((to_value(&r), r.pass))
}
