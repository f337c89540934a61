//! Basis elements of the Schrödinger-Virasoro algebra and of W(2,2).

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Algebra {
    /// Schrödinger-Virasoro: `M_m`, `Y_{m+1/2}`, `L_m`, `C`.
    Sv,
    /// W(2,2): `L_m`, `W_m`, `C_W`.
    W22,
}

impl Algebra {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "sv" => Ok(Algebra::Sv),
            "w22" => Ok(Algebra::W22),
            other => Err(Error::Parse(format!("unknown algebra {other:?}"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Algebra::Sv => "sv",
            Algebra::W22 => "w22",
        }
    }
}

/// Family tag. Declaration order is the serialization rank `M < Y < L < W < C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    M,
    Y,
    L,
    W,
    C,
}

impl Family {
    pub fn letter(self) -> &'static str {
        match self {
            Family::M => "M",
            Family::Y => "Y",
            Family::L => "L",
            Family::W => "W",
            Family::C => "C",
        }
    }
}

/// A basis element. For `Y` the stored index `a` denotes `Y_{a+1/2}`; for every
/// other family it is the subscript itself. Central elements carry index 0.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Generator {
    pub algebra: Algebra,
    pub family: Family,
    pub index: i64,
}

impl Generator {
    pub const fn sv(family: Family, index: i64) -> Self {
        Generator {
            algebra: Algebra::Sv,
            family,
            index,
        }
    }

    pub const fn w22(family: Family, index: i64) -> Self {
        Generator {
            algebra: Algebra::W22,
            family,
            index,
        }
    }

    pub const fn m(n: i64) -> Self {
        Self::sv(Family::M, n)
    }

    /// `Y_{a+1/2}`.
    pub const fn y(a: i64) -> Self {
        Self::sv(Family::Y, a)
    }

    pub const fn l(n: i64) -> Self {
        Self::sv(Family::L, n)
    }

    pub const fn c() -> Self {
        Self::sv(Family::C, 0)
    }

    pub const fn wl(n: i64) -> Self {
        Self::w22(Family::L, n)
    }

    pub const fn w(n: i64) -> Self {
        Self::w22(Family::W, n)
    }

    pub const fn cw() -> Self {
        Self::w22(Family::C, 0)
    }

    pub fn is_central(&self) -> bool {
        self.family == Family::C
    }

    /// The grading degree: `n` for `M_n, L_n, W_n`, `a + 1/2` for `Y_{a+1/2}`, 0 for centrals.
    pub fn degree(&self) -> Scalar {
        match self.family {
            Family::C => Scalar::zero(),
            Family::Y => Scalar::ratio(2 * self.index + 1, 2),
            _ => Scalar::int(self.index),
        }
    }

    /// Twice the degree, as an integer.
    pub fn degree2(&self) -> i64 {
        match self.family {
            Family::C => 0,
            Family::Y => 2 * self.index + 1,
            _ => 2 * self.index,
        }
    }

    pub fn to_json(&self) -> Value {
        match self.family {
            Family::C => json!({ "f": "C" }),
            Family::Y => json!({ "f": "Y", "a": self.index }),
            f => json!({ "f": f.letter(), "n": self.index }),
        }
    }

    /// Parse `{"f":"L","n":-2}`, `{"f":"Y","a":-3}` or `{"f":"C"}` for the given algebra.
    pub fn from_json(algebra: Algebra, v: &Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Parse(format!("generator must be an object, got {v}")))?;
        let f = obj
            .get("f")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse(format!("generator without family: {v}")))?;
        let int = |key: &str| -> Result<i64> {
            obj.get(key)
                .and_then(Value::as_i64)
                .ok_or_else(|| Error::Parse(format!("generator {v} needs integer field {key:?}")))
        };
        let family = match (algebra, f) {
            (_, "C") => return Ok(Generator { algebra, family: Family::C, index: 0 }),
            (Algebra::Sv, "M") => Family::M,
            (Algebra::Sv, "Y") => return Ok(Generator::y(int("a")?)),
            (_, "L") => Family::L,
            (Algebra::W22, "W") => Family::W,
            _ => {
                return Err(Error::Parse(format!(
                    "family {f:?} does not exist in {}",
                    algebra.name()
                )))
            }
        };
        Ok(Generator {
            algebra,
            family,
            index: int("n")?,
        })
    }

    pub fn parse_json(algebra: Algebra, s: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json(algebra, &v)
    }
}

/// The LinComb key order: algebra, then family rank, then index.
impl Ord for Generator {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.algebra, self.family, self.index).cmp(&(other.algebra, other.family, other.index))
    }
}

impl PartialOrd for Generator {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.algebra, self.family) {
            (Algebra::Sv, Family::C) => write!(f, "C"),
            (Algebra::W22, Family::C) => write!(f, "C_W"),
            (_, Family::Y) => {
                let n2 = 2 * self.index + 1;
                write!(f, "Y_{{{n2}/2}}")
            }
            (_, fam) => write!(f, "{}_{{{}}}", fam.letter(), self.index),
        }
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Generator {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

pub(crate) fn same_algebra(a: &Generator, b: &Generator) -> Result<()> {
    if a.algebra != b.algebra {
        return Err(Error::AlgebraMismatch(a.to_string(), b.to_string()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees() {
        assert_eq!(Generator::l(-3).degree(), Scalar::int(-3));
        assert_eq!(Generator::y(-2).degree(), Scalar::ratio(-3, 2));
        assert_eq!(Generator::c().degree(), Scalar::zero());
        assert_eq!(Generator::w(4).degree(), Scalar::int(4));
    }

    #[test]
    fn json_shapes() {
        assert_eq!(Generator::l(-2).to_json().to_string(), r#"{"f":"L","n":-2}"#);
        assert_eq!(Generator::y(-3).to_json().to_string(), r#"{"f":"Y","a":-3}"#);
        let y = Generator::parse_json(Algebra::Sv, r#"{"f":"Y","a":-3}"#).unwrap();
        assert_eq!(y, Generator::y(-3));
        assert_eq!(y.to_string(), "Y_{-5/2}");
        let cw = Generator::parse_json(Algebra::W22, r#"{"f":"C"}"#).unwrap();
        assert_eq!(cw, Generator::cw());
        assert!(Generator::parse_json(Algebra::W22, r#"{"f":"M","n":1}"#).is_err());
        assert!(Generator::parse_json(Algebra::Sv, r#"{"f":"L"}"#).is_err());
    }

    #[test]
    fn key_order() {
        let mut v = vec![Generator::c(), Generator::l(0), Generator::y(5), Generator::m(9), Generator::m(-1)];
        v.sort();
        assert_eq!(v, vec![Generator::m(-1), Generator::m(9), Generator::y(5), Generator::l(0), Generator::c()]);
    }
}
