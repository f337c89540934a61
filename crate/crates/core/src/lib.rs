pub mod base;
pub mod bracket;
pub mod catalog;
pub mod commands;
pub mod error;
pub mod generator;
pub mod induced;
pub mod lincomb;
pub mod linalg;
pub mod multi_index;
pub mod pbw;
pub mod props;
pub mod scalar;
pub mod w22;

pub use error::{Error, Result};
pub use generator::{Algebra, Family, Generator};
pub use lincomb::LinComb;
pub use multi_index::{FiniteTuple, MultiIndex};
pub use scalar::Scalar;
