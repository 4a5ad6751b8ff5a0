//! Exact polynomial algebra over ℚ.

mod gcd;
mod mpoly;
mod qpoly;
mod resultant;
mod upoly;

pub type Rational = num_rational::BigRational;

pub use gcd::{
    content, mpoly_gcd, poly_gcd, primitive_part, squarefree_decomposition, SquarefreeDecomposition,
};
pub use mpoly::{MPoly, Monomial, Vars};
pub use qpoly::QPoly;
pub use resultant::{
    discriminant, generic_discriminant, power_sum_discriminant, power_sums, resultant,
    sylvester_matrix, sylvester_resultant,
};
pub use upoly::UPoly;

/// `Rational` from a pair of machine integers.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
