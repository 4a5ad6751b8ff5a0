pub mod algebra;
pub mod cover;
pub mod error;
pub mod picard;
pub mod strata;

pub use algebra::{MPoly, QPoly, Rational, UPoly, Vars};
pub use error::AlgebraError;
