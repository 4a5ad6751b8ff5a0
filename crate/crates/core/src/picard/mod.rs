//! Divisor-class calculus over `ℚ[n, g]`.
//!
//! Classes on the base moduli space are vectors over `{λ, δ, φ}` (plus an
//! optional `λ̂` slot) whose coordinates are polynomials in the formal sheet
//! count `n` and base genus `g`. Expressions on the universal base curve and
//! on the universal spectral curve are truncated polynomial rings in the
//! relevant divisor symbols; the pushforward rules below turn their
//! degree-two parts into base classes.

mod class;
pub mod closed_form;
mod derive;
mod expr;
mod verify;

use thiserror::Error;

pub use class::{coeff_vars, BaseClass, BaseSymbol, CoeffNG};
pub use derive::{
    class_of_b, derive_b_self_intersection, derive_hodge_hat, derive_omega_squared,
    derive_psi_b_hat, derive_strata_classes, normalize, pushforward_base, pushforward_cover,
    strata_divisor_upstairs, StrataClasses, Stratum,
};
pub use expr::{CoverExpr, CoverMonomial, Cycle, Expr, FiberExpr, FiberMonomial, Monomial};
pub use verify::{identity_suite, phi_variants, verify_identity, IdentityCheck, IdentityReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PicardError {
    /// Only classes of codimension two on the total space push forward to
    /// divisors on the base.
    #[error("term of fiber degree {0} cannot be pushed forward to a divisor class")]
    FiberDegree(u32),
    #[error("product of degree {0} exceeds the relative dimension")]
    DimensionExceeded(u32),
    #[error("expression contains B̂·B̂; normalize it first")]
    Unnormalized,
}
