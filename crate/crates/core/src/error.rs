use thiserror::Error;

/// Failures raised by the exact-algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("variable universes differ: [{left}] vs [{right}]")]
    VarsMismatch { left: String, right: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("division is not exact")]
    NotDivisible,
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero polynomial where a nonzero one is required")]
    ZeroInput,
    #[error("polynomial is not monic in `{0}`")]
    NotMonic(String),
    #[error("main variables differ: `{0}` vs `{1}`")]
    MainVarMismatch(String, String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
