//! Base modules: the modules over a positive-part subalgebra from which
//! induced modules are built.

use std::fmt;
use std::hash::Hash;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generator::{Algebra, Family, Generator};
use crate::lincomb::LinComb;
use crate::linalg::span_rank;
use crate::scalar::Scalar;

pub mod qspec;

pub use qspec::{make_whittaker, QKey, QModule, QSpec};

/// The subalgebras `𝒢_{d1,d2}` and `𝒲_d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "algebra", rename_all = "lowercase")]
pub enum Subalgebra {
    Sv { d1: u32, d2: u32 },
    W22 { d: u32 },
}

impl Subalgebra {
    pub fn sv(d1: u32, d2: u32) -> Result<Self> {
        if d1 + 1 < 2 * d2 {
            return Err(Error::InvalidParams(format!("need d1 >= 2*d2 - 1, got d1={d1}, d2={d2}")));
        }
        Ok(Subalgebra::Sv { d1, d2 })
    }

    pub fn algebra(self) -> Algebra {
        match self {
            Subalgebra::Sv { .. } => Algebra::Sv,
            Subalgebra::W22 { .. } => Algebra::W22,
        }
    }

    /// Families that have induced-module slots.
    fn floors(self) -> &'static [Family] {
        match self {
            Subalgebra::Sv { .. } => &[Family::M, Family::Y, Family::L],
            Subalgebra::W22 { .. } => &[Family::W, Family::L],
        }
    }

    /// Smallest index of `family` inside the subalgebra.
    pub fn floor(self, family: Family) -> i64 {
        match (self, family) {
            (Subalgebra::Sv { d1, .. }, Family::M) => -(d1 as i64),
            (Subalgebra::Sv { d2, .. }, Family::Y) => -(d2 as i64),
            (Subalgebra::W22 { d }, Family::W) => -(d as i64),
            _ => 0,
        }
    }

    pub fn contains(self, g: &Generator) -> bool {
        g.algebra == self.algebra()
            && (g.is_central() || (self.floors().contains(&g.family) && g.index >= self.floor(g.family)))
    }

    /// Slot position `s ≥ 1` of a generator outside the subalgebra.
    pub fn slot(self, g: &Generator) -> Option<u32> {
        if g.algebra != self.algebra() || g.is_central() || self.contains(g) || !self.floors().contains(&g.family) {
            return None;
        }
        Some((self.floor(g.family) - g.index) as u32)
    }

    /// The generator at slot position `s ≥ 1` of `family`.
    pub fn slot_generator(self, family: Family, s: u32) -> Generator {
        Generator {
            algebra: self.algebra(),
            family,
            index: self.floor(family) - s as i64,
        }
    }

    /// Whether `g` lies above the window where a base module with parameter
    /// `t` may act nontrivially.
    pub fn beyond(self, t: u32, g: &Generator) -> bool {
        let t = t as i64;
        match (self, g.family) {
            (Subalgebra::Sv { .. }, Family::M) | (Subalgebra::W22 { .. }, Family::W) => g.index > t,
            (Subalgebra::Sv { d2, .. }, Family::Y) => g.index > t + d2 as i64 - 1,
            (Subalgebra::Sv { d1, .. }, Family::L) => g.index > t + d1 as i64,
            (Subalgebra::W22 { d }, Family::L) => g.index > t + d as i64,
            _ => false,
        }
    }

    /// `M_t` or `W_t`.
    pub fn injective_generator(self, t: u32) -> Generator {
        match self {
            Subalgebra::Sv { .. } => Generator::m(t as i64),
            Subalgebra::W22 { .. } => Generator::w(t as i64),
        }
    }
}

/// `𝒢_{d1,d2}` together with `t` and the scalars of `M_0` and `C`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubalgebraParams {
    pub d1: u32,
    pub d2: u32,
    pub t: u32,
    pub nu0: Scalar,
    pub c: Scalar,
}

impl SubalgebraParams {
    pub fn new(d1: u32, d2: u32, t: u32, nu0: Scalar, c: Scalar) -> Result<Self> {
        Subalgebra::sv(d1, d2)?;
        if t == 0 && nu0.is_zero() {
            return Err(Error::InvalidParams("t = 0 requires nu0 != 0".into()));
        }
        Ok(SubalgebraParams { d1, d2, t, nu0, c })
    }

    pub fn subalgebra(&self) -> Subalgebra {
        Subalgebra::Sv { d1: self.d1, d2: self.d2 }
    }
}

/// A module over a positive-part subalgebra, given by its action on basis keys.
pub trait BaseModule {
    type Key: Ord + Clone + Hash + fmt::Debug + Serialize + DeserializeOwned;

    fn subalgebra(&self) -> Subalgebra;

    /// The `t` with `M_t` (or `W_t`) injective and everything beyond killing V.
    fn t(&self) -> u32;

    fn cyclic(&self) -> Self::Key;

    /// Action of a generator of the subalgebra on a basis key.
    fn act_sub(&self, g: &Generator, key: &Self::Key) -> Result<LinComb<Self::Key>>;

    fn act_sub_vec(&self, g: &Generator, v: &LinComb<Self::Key>) -> Result<LinComb<Self::Key>> {
        let mut out = LinComb::new();
        for (k, c) in v {
            out.add_scaled(&self.act_sub(g, k)?, c);
        }
        Ok(out)
    }

    fn check_member(&self, g: &Generator) -> Result<()> {
        if self.subalgebra().contains(g) {
            Ok(())
        } else {
            Err(Error::NotInSubalgebra(g.to_string()))
        }
    }
}

/// The one-dimensional `𝒢_{0,0}`-module: `L_0 ↦ ξ`, `M_0 ↦ ν0`, `C ↦ c`,
/// positive modes act by zero. Its induced module is a Verma module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OneDim {
    pub xi: Scalar,
    pub nu0: Scalar,
    pub c: Scalar,
}

impl OneDim {
    pub fn new(xi: Scalar, nu0: Scalar, c: Scalar) -> Result<Self> {
        if nu0.is_zero() {
            return Err(Error::InvalidParams("one-dimensional base needs nu0 != 0".into()));
        }
        Ok(OneDim { xi, nu0, c })
    }

    pub fn params(&self) -> SubalgebraParams {
        SubalgebraParams {
            d1: 0,
            d2: 0,
            t: 0,
            nu0: self.nu0.clone(),
            c: self.c.clone(),
        }
    }
}

impl BaseModule for OneDim {
    type Key = ();

    fn subalgebra(&self) -> Subalgebra {
        Subalgebra::Sv { d1: 0, d2: 0 }
    }

    fn t(&self) -> u32 {
        0
    }

    fn cyclic(&self) {}

    fn act_sub(&self, g: &Generator, _key: &()) -> Result<LinComb<()>> {
        self.check_member(g)?;
        let s = match (g.family, g.index) {
            (Family::C, _) => &self.c,
            (Family::L, 0) => &self.xi,
            (Family::M, 0) => &self.nu0,
            _ => return Ok(LinComb::new()),
        };
        Ok(LinComb::single((), s.clone()))
    }
}

/// Outcome of probing injectivity of `M_t` (or `W_t`) on a finite sample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InjectivityVerdict {
    pub injective: bool,
    pub sample_rank: usize,
    pub image_rank: usize,
    /// Index into the sample of a vector sent to zero, if any.
    pub killed: Option<usize>,
}

/// Applies `M_t` (or `W_t`) to every sample vector and compares ranks exactly.
pub fn mt_injectivity_probe<V: BaseModule>(base: &V, sample: &[LinComb<V::Key>]) -> Result<InjectivityVerdict> {
    let g = base.subalgebra().injective_generator(base.t());
    let images: Vec<LinComb<V::Key>> = sample
        .iter()
        .map(|v| base.act_sub_vec(&g, v))
        .collect::<Result<_>>()?;
    let killed = sample
        .iter()
        .zip(&images)
        .position(|(v, img)| !v.is_zero() && img.is_zero());
    let sample_rank = span_rank(sample);
    let image_rank = span_rank(&images);
    Ok(InjectivityVerdict {
        injective: killed.is_none() && sample_rank == image_rank,
        sample_rank,
        image_rank,
        killed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn verma() -> OneDim {
        OneDim::new(Scalar::one(), Scalar::one(), Scalar::zero()).unwrap()
    }

    #[test]
    fn onedim_relations() {
        let v = verma();
        assert_eq!(v.act_sub(&Generator::l(0), &()).unwrap(), LinComb::basis(()));
        assert!(v.act_sub(&Generator::l(3), &()).unwrap().is_zero());
        assert!(v.act_sub(&Generator::y(2), &()).unwrap().is_zero());
        let w = OneDim::new(Scalar::one(), Scalar::int(5), Scalar::zero()).unwrap();
        assert_eq!(w.act_sub(&Generator::m(0), &()).unwrap(), LinComb::single((), Scalar::int(5)));
        assert!(v.act_sub(&Generator::l(-1), &()).is_err());
    }

    #[test]
    fn onedim_needs_nu0() {
        assert!(OneDim::new(Scalar::one(), Scalar::zero(), Scalar::zero()).is_err());
        assert!(SubalgebraParams::new(0, 0, 0, Scalar::zero(), Scalar::zero()).is_err());
        assert!(SubalgebraParams::new(0, 2, 1, Scalar::zero(), Scalar::zero()).is_err());
        assert!(SubalgebraParams::new(3, 2, 2, Scalar::one(), Scalar::zero()).is_ok());
    }

    #[test]
    fn slots() {
        let s = Subalgebra::Sv { d1: 1, d2: 1 };
        assert!(s.contains(&Generator::m(-1)));
        assert!(!s.contains(&Generator::m(-2)));
        assert_eq!(s.slot(&Generator::m(-3)), Some(2));
        assert_eq!(s.slot(&Generator::y(-2)), Some(1));
        assert_eq!(s.slot(&Generator::l(-1)), Some(1));
        assert_eq!(s.slot(&Generator::l(0)), None);
        assert_eq!(s.slot_generator(Family::Y, 1), Generator::y(-2));
        let w = Subalgebra::W22 { d: 2 };
        assert_eq!(w.slot(&Generator::w(-3)), Some(1));
        assert_eq!(w.slot_generator(Family::L, 4), Generator::wl(-4));
        assert!(w.contains(&Generator::cw()));
        assert!(!w.contains(&Generator::c()));
    }

    #[test]
    fn beyond_window() {
        let s = Subalgebra::Sv { d1: 3, d2: 2 };
        assert!(s.beyond(2, &Generator::m(3)));
        assert!(!s.beyond(2, &Generator::m(2)));
        assert!(s.beyond(2, &Generator::y(4)));
        assert!(!s.beyond(2, &Generator::y(3)));
        assert!(s.beyond(2, &Generator::l(6)));
        assert!(!s.beyond(2, &Generator::l(5)));
    }

    #[test]
    fn onedim_injective() {
        let v = verma();
        let verdict = mt_injectivity_probe(&v, &[LinComb::basis(())]).unwrap();
        assert!(verdict.injective);
    }
}
