use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use crate::cover::CoverError;

/// Genus of an `n`-sheeted cover of a genus-`g` curve with total branching
/// number `b`: `n(g - 1) + 1 + b/2`.
pub fn riemann_hurwitz(
    n: impl Into<BigInt>,
    g: impl Into<BigInt>,
    b: impl Into<BigInt>,
) -> Result<BigInt, CoverError> {
    let (n, g, b) = (n.into(), g.into(), b.into());
    if n < BigInt::from(1) {
        return Err(CoverError::InvalidInput(format!(
            "sheet count {n} must be positive"
        )));
    }
    if g.is_negative() {
        return Err(CoverError::InvalidInput(format!(
            "genus {g} must be non-negative"
        )));
    }
    if b.is_negative() {
        return Err(CoverError::InvalidInput(format!(
            "branching number {b} must be non-negative"
        )));
    }
    if b.is_odd() {
        return Err(CoverError::OddBranching(b));
    }
    Ok(n * (g - 1) + 1 + b / 2)
}

/// `2n(n - 1)(g - 1)`: the branching number when every zero of `W` is simple.
pub fn simple_branching(n: impl Into<BigInt>, g: impl Into<BigInt>) -> BigInt {
    let (n, g) = (n.into(), g.into());
    BigInt::from(2) * &n * (&n - 1) * (g - 1)
}
