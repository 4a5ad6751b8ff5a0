use serde::{Deserialize, Serialize};

use crate::algebra::{rat, MPoly};
use crate::picard::class::{coeff_vars, BaseClass, BaseSymbol, CoeffNG};
use crate::picard::expr::{CoverExpr, CoverMonomial, Cycle, Expr, FiberExpr, FiberMonomial};
use crate::picard::PicardError;

fn poly(s: &str) -> CoeffNG {
    MPoly::parse(s, &coeff_vars()).expect("valid literal")
}

/// `π_*` from the universal base curve:
/// `ψ² ↦ 12λ - δ`, `ψ·pull(α) ↦ (2g - 2)α`, `pull(α)·pull(β) ↦ 0`.
pub fn pushforward_base(e: &FiberExpr) -> Result<BaseClass, PicardError> {
    let mut out = BaseClass::zero();
    for (m, c) in e.terms() {
        out = out.add(&push_fiber_monomial(m)?.scale(c));
    }
    Ok(out)
}

fn push_fiber_monomial(m: &FiberMonomial) -> Result<BaseClass, PicardError> {
    use crate::picard::expr::Monomial;
    if m.degree() != 2 {
        return Err(PicardError::FiberDegree(m.degree()));
    }
    Ok(match (m.psi, m.pulls.as_slice()) {
        (2, []) => BaseClass::from_strs("12", "-1", "0"),
        (1, [a]) => BaseClass::basis(*a).scale(&poly("2*g - 2")),
        _ => BaseClass::zero(),
    })
}

/// The branching divisor `B = n(n-1)(ψ - pull(φ))` on the base curve.
pub fn class_of_b() -> FiberExpr {
    FiberExpr::psi()
        .sub(&FiberExpr::pull(BaseSymbol::Phi))
        .scale(&poly("n^2 - n"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Stratum {
    Boundary,
    Maxwell,
    Caustic,
}

impl Stratum {
    pub const ALL: [Stratum; 3] = [Stratum::Boundary, Stratum::Maxwell, Stratum::Caustic];

    pub(crate) fn suffix(self) -> &'static str {
        match self {
            Stratum::Boundary => "b",
            Stratum::Maxwell => "m",
            Stratum::Caustic => "c",
        }
    }

    /// `(a, b)`: the section defining the stratum maps the `a`-th power of
    /// the tautological bundle to the `b`-th power of `p*ω`.
    pub fn weights(self) -> (CoeffNG, CoeffNG) {
        match self {
            Stratum::Boundary => (poly("n"), poly("n + 1")),
            Stratum::Maxwell => (poly("n^2 - 5*n + 6"), poly("n^2 - 5*n + 6")),
            Stratum::Caustic => (poly("n - 2"), poly("n - 2")),
        }
    }

    /// Points of the stratum counted by the pushforward of its upstairs class.
    pub fn sheets_over(self) -> i64 {
        match self {
            Stratum::Maxwell => 2,
            _ => 1,
        }
    }

    pub fn upstairs(self) -> CoverExpr {
        let (a, b) = self.weights();
        strata_divisor_upstairs(&a, &b)
    }
}

/// `(b·Ψ - a·pull(φ))·B̂`.
pub fn strata_divisor_upstairs(a: &CoeffNG, b: &CoeffNG) -> CoverExpr {
    CoverExpr::psi()
        .scale(b)
        .sub(&CoverExpr::pull(BaseSymbol::Phi).scale(a))
        .mul(&CoverExpr::b_hat())
        .expect("degree two")
}

/// Eliminates `B̂²` through `2B̂² = -Ψ·B̂ + D̂b + D̂c`.
pub fn normalize(e: &CoverExpr) -> CoverExpr {
    let rel = CoverExpr::psi()
        .mul(&CoverExpr::b_hat())
        .expect("degree two")
        .neg()
        .add(&CoverExpr::d_hat(Stratum::Boundary))
        .add(&CoverExpr::d_hat(Stratum::Caustic))
        .scale_rat(&rat(1, 2));
    let mut out = CoverExpr::zero();
    for (m, c) in e.terms() {
        let piece = if m.b_hat == 2 {
            rel.scale(c)
        } else {
            Expr::term(m.clone(), c.clone()).expect("already bounded")
        };
        out = out.add(&piece);
    }
    out
}

/// `π̂_*` from the spectral universal curve, on normalized input.
///
/// `p_*B̂ = B` with `p` of degree `n`, so by the projection formula
/// `π̂_*(p*X) = n·π_*X` and `π̂_*(p*X·B̂) = π_*(X·B)`. A stratum cycle pushes
/// forward as its upstairs class; the nodal cycle gives `nδ + Db`.
pub fn pushforward_cover(e: &CoverExpr) -> Result<BaseClass, PicardError> {
    let mut out = BaseClass::zero();
    for (m, c) in e.terms() {
        out = out.add(&push_cover_monomial(m)?.scale(c));
    }
    Ok(out)
}

fn push_cover_monomial(m: &CoverMonomial) -> Result<BaseClass, PicardError> {
    use crate::picard::expr::Monomial;
    if m.b_hat >= 2 {
        return Err(PicardError::Unnormalized);
    }
    if m.degree() != 2 {
        return Err(PicardError::FiberDegree(m.degree()));
    }
    if let Some(cycle) = m.cycle {
        return match cycle {
            Cycle::Stratum(s) => pushforward_cover(&s.upstairs()),
            Cycle::Nodal => Ok(BaseClass::basis(BaseSymbol::Delta)
                .scale(&poly("n"))
                .add(&pushforward_cover(&Stratum::Boundary.upstairs())?)),
        };
    }
    let below = FiberExpr::term(
        FiberMonomial {
            psi: m.psi,
            pulls: m.pulls.clone(),
        },
        MPoly::one(&coeff_vars()),
    )?;
    if m.b_hat == 1 {
        pushforward_base(&below.mul(&class_of_b())?)
    } else {
        Ok(pushforward_base(&below)?.scale(&poly("n")))
    }
}

/// Classes of the three strata of the universal discriminant and of the
/// whole discriminant `DW = Db + 2Dm + 3Dc`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrataClasses {
    pub db: BaseClass,
    pub dm: BaseClass,
    pub dc: BaseClass,
    pub dw: BaseClass,
}

impl StrataClasses {
    pub fn get(&self, s: Stratum) -> &BaseClass {
        match s {
            Stratum::Boundary => &self.db,
            Stratum::Maxwell => &self.dm,
            Stratum::Caustic => &self.dc,
        }
    }
}

pub fn derive_strata_classes() -> StrataClasses {
    let push = |s: Stratum| {
        pushforward_cover(&s.upstairs())
            .expect("upstairs classes have degree two")
            .scale_rat(&rat(1, s.sheets_over()))
    };
    let db = push(Stratum::Boundary);
    let dm = push(Stratum::Maxwell);
    let dc = push(Stratum::Caustic);
    let dw = db
        .add(&dm.scale_rat(&rat(2, 1)))
        .add(&dc.scale_rat(&rat(3, 1)));
    StrataClasses { db, dm, dc, dw }
}

/// `π̂_*(Ψ·B̂)`.
pub fn derive_psi_b_hat() -> BaseClass {
    let e = CoverExpr::psi()
        .mul(&CoverExpr::b_hat())
        .expect("degree two");
    pushforward_cover(&e).expect("normal form")
}

/// `π̂_*(B̂·B̂)`.
pub fn derive_b_self_intersection() -> BaseClass {
    let b = CoverExpr::b_hat();
    let sq = b.mul(&b).expect("degree two");
    pushforward_cover(&normalize(&sq)).expect("normal form")
}

/// `c₁(ω_π̂) = Ψ + B̂`.
fn omega_hat() -> CoverExpr {
    CoverExpr::psi().add(&CoverExpr::b_hat())
}

/// `π̂_* c₁(ω_π̂)²`.
pub fn derive_omega_squared() -> BaseClass {
    let w = omega_hat();
    let sq = w.mul(&w).expect("degree two");
    pushforward_cover(&normalize(&sq)).expect("normal form")
}

/// `λ̂ = (1/12)·π̂_*(c₁(ω_π̂)² + V_nodal)`, in the `{λ, δ, φ}` basis.
pub fn derive_hodge_hat() -> BaseClass {
    let w = omega_hat();
    let e = w.mul(&w).expect("degree two").add(&CoverExpr::v_nodal());
    pushforward_cover(&normalize(&e))
        .expect("normal form")
        .scale_rat(&rat(1, 12))
}
