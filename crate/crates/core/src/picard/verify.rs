use std::fmt;

use crate::picard::class::{BaseClass, BaseSymbol, CoeffNG};
use crate::picard::closed_form;
use crate::picard::derive::{
    derive_b_self_intersection, derive_hodge_hat, derive_omega_squared, derive_psi_b_hat,
    derive_strata_classes,
};

/// Outcome of an exact comparison; `diffs` holds `lhs - rhs` per basis
/// vector where it is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub equal: bool,
    pub diffs: Vec<(BaseSymbol, CoeffNG)>,
}

pub fn verify_identity(lhs: &BaseClass, rhs: &BaseClass) -> IdentityReport {
    let d = lhs.sub(rhs);
    let diffs: Vec<(BaseSymbol, CoeffNG)> = d.nonzero().map(|(s, c)| (s, c.clone())).collect();
    IdentityReport {
        equal: diffs.is_empty(),
        diffs,
    }
}

impl IdentityReport {
    pub fn diff_class(&self) -> BaseClass {
        self.diffs.iter().fold(BaseClass::zero(), |acc, (s, c)| {
            acc.add(&BaseClass::basis(*s).scale(c))
        })
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.equal {
            return write!(f, "equal");
        }
        write!(f, "differ by {}", self.diff_class())
    }
}

/// A named comparison between an engine derivation and a closed form.
#[derive(Debug, Clone)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub derived: BaseClass,
    pub expected: BaseClass,
    pub report: IdentityReport,
}

impl IdentityCheck {
    fn new(name: &'static str, derived: BaseClass, expected: BaseClass) -> Self {
        // expected minus derived
        let report = verify_identity(&expected, &derived);
        IdentityCheck {
            name,
            derived,
            expected,
            report,
        }
    }
}

/// Every derivation against its closed form. All must be equal.
pub fn identity_suite() -> Vec<IdentityCheck> {
    let s = derive_strata_classes();
    vec![
        IdentityCheck::new("psi_b_hat", derive_psi_b_hat(), closed_form::psi_b_hat()),
        IdentityCheck::new("Db", s.db.clone(), closed_form::boundary_class()),
        IdentityCheck::new("Dm", s.dm.clone(), closed_form::maxwell_class()),
        IdentityCheck::new("Dc", s.dc.clone(), closed_form::caustic_class()),
        IdentityCheck::new("DW", s.dw, closed_form::discriminant_class()),
        IdentityCheck::new(
            "b_hat_squared",
            derive_b_self_intersection(),
            closed_form::b_hat_squared(),
        ),
        IdentityCheck::new(
            "omega_squared",
            derive_omega_squared(),
            closed_form::omega_squared(),
        ),
        IdentityCheck::new("lambda_hat", derive_hodge_hat(), closed_form::hodge_hat()),
    ]
}

/// The engine's Maxwell and caustic classes against the `+4(g - 1)φ`
/// variants. Expected to differ.
pub fn phi_variants() -> Vec<IdentityCheck> {
    let s = derive_strata_classes();
    vec![
        IdentityCheck::new("Dm", s.dm, closed_form::variant_maxwell()),
        IdentityCheck::new("Dc", s.dc, closed_form::variant_caustic()),
    ]
}
