//! Spectral families `F(t, z)` over one chart: the discriminant curve
//! `W(z)`, its multiple zeros, and ramification bookkeeping.

mod classify;
mod family;
mod genus;
mod residue;

use num_bigint::BigInt;
use thiserror::Error;

use crate::error::AlgebraError;

pub use classify::{
    branch_locus, classify_branch_point, classify_family, multiplicity_audit, ramification_profile,
    shift_criteria, AuditEntry, AuditReport, BranchPointRecord, BranchTag, Locus, Predicate,
    ShiftVerdict,
};
pub use family::{discriminant_family, FamilySpec, SpectralFamily};
pub use genus::{riemann_hurwitz, simple_branching};
pub use residue::{dynamic, locus_cmp, AlgebraicContext, Dyn, Split, TPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("a spectral family needs at least two sheets, got {0}")]
    TooFewSheets(usize),
    #[error("expected {expected} coefficients, got {got}")]
    CoefficientCount { expected: usize, got: usize },
    #[error("W vanishes identically: the spectral curve is not reduced")]
    NonReduced,
    #[error("W does not vanish on the locus {0}")]
    NotAZero(String),
    #[error("modulus {0} is not squarefree")]
    NotSquarefree(String),
    #[error("modulus must have positive degree")]
    ConstantModulus,
    #[error("total branching number {0} is odd")]
    OddBranching(BigInt),
    #[error("{0}")]
    InvalidInput(String),
    #[error("elimination and shift criteria disagree at {0}")]
    CriteriaDisagree(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
