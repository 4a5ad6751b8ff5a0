//! Multiple zeros of `W` and what the spectral curve does over them.
//!
//! At a zero `α` of `W` (a rational point or the roots of a squarefree
//! factor, handled by dynamic evaluation) with `G = gcd_t(F, ∂ₜF)`:
//!
//! * caustic: `gcd_t(F, ∂ₜF, ∂ₜₜF)` is nontrivial (a root of order ≥ 3);
//! * Maxwell: `deg G ≥ 2` and `G` squarefree (two distinct double roots);
//! * boundary: `deg G = 1` with root `v0` and `∂_zF(v0, α) = 0`, so the
//!   curve is singular at the double point;
//! * non-nodal: that singular point has a degenerate Hessian.
//!
//! A zero of order one is `Simple`. A zero of order two with exactly one of
//! the first three predicates and a nodal singularity (if any) gets that tag;
//! everything else is `Degenerate`.

use serde::{Deserialize, Serialize};

use crate::algebra::{generic_discriminant, QPoly, Rational};
use crate::cover::family::{discriminant_family, SpectralFamily};
use crate::cover::residue::{dynamic, locus_cmp, AlgebraicContext, Dyn, TPoly};
use crate::cover::CoverError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BranchTag {
    Simple,
    Boundary,
    Maxwell,
    Caustic,
    Degenerate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Predicate {
    Boundary,
    Maxwell,
    Caustic,
    NonNodal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchPointRecord {
    /// Monic squarefree `m(z)`; `z - z0` for a rational point.
    #[serde(with = "locus_text")]
    pub locus: QPoly,
    pub w_multiplicity: usize,
    pub tag: BranchTag,
    /// Root multiplicities of `F(·, α)`, largest first.
    pub profile: Vec<usize>,
    pub fired: Vec<Predicate>,
}

mod locus_text {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::algebra::{MPoly, QPoly, Vars};

    pub fn serialize<S: Serializer>(p: &QPoly, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&p.display("z"))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<QPoly, D::Error> {
        let text = String::deserialize(d)?;
        MPoly::parse(&text, &Vars::new(["z"]))
            .and_then(|p| QPoly::from_mpoly(&p, "z"))
            .map_err(serde::de::Error::custom)
    }
}

/// Where to look: a rational `z0`, or the roots of a squarefree `m(z)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Locus {
    Point(Rational),
    Factor(QPoly),
}

impl Locus {
    fn context(&self) -> Result<AlgebraicContext, CoverError> {
        match self {
            Locus::Point(z0) => Ok(AlgebraicContext::at_point(z0)),
            Locus::Factor(m) => AlgebraicContext::new(m),
        }
    }
}

/// `F` and the derivatives the criteria need, coefficients in `t` low first.
struct Local {
    f: Vec<QPoly>,
    fz: Vec<QPoly>,
    fzz: Vec<QPoly>,
    w: QPoly,
}

impl Local {
    fn new(fam: &SpectralFamily) -> Result<Self, CoverError> {
        let w = discriminant_family(fam);
        if w.is_zero() {
            return Err(CoverError::NonReduced);
        }
        let f = fam.t_coeffs();
        let fz: Vec<QPoly> = f.iter().map(QPoly::derivative).collect();
        let fzz = fz.iter().map(QPoly::derivative).collect();
        Ok(Local { f, fz, fzz, w })
    }
}

#[derive(Debug, Clone)]
struct Analysis {
    order: usize,
    profile: Vec<usize>,
    boundary: bool,
    maxwell: bool,
    caustic: bool,
    non_nodal: bool,
    /// Root of `G` (or of the triple factor) as a residue, when unique.
    special_root: Option<QPoly>,
    g: TPoly,
}

fn order_of_w(ctx: &AlgebraicContext, w: &QPoly) -> Dyn<usize> {
    let mut wk = w.clone();
    let mut k = 0;
    while ctx.is_zero(&wk)? {
        k += 1;
        wk = wk.derivative();
    }
    Ok(k)
}

fn profile_at(ctx: &AlgebraicContext, f: &TPoly) -> Dyn<Vec<usize>> {
    let mut profile = Vec::new();
    for (fac, m) in f.squarefree(ctx)? {
        for _ in 0..fac.degree().unwrap_or(0) {
            profile.push(m);
        }
    }
    profile.sort_unstable_by(|a, b| b.cmp(a));
    Ok(profile)
}

fn analyze(ctx: &AlgebraicContext, local: &Local) -> Dyn<Analysis> {
    let order = order_of_w(ctx, &local.w)?;
    let f = TPoly::new(ctx, &local.f);
    if order <= 1 {
        // ord W ≥ Σ (mᵢ - 1), so a simple zero carries exactly one double root
        let n = local.f.len() - 1;
        let profile = match order {
            0 => Vec::new(),
            _ => std::iter::once(2)
                .chain(std::iter::repeat_n(1, n - 2))
                .collect(),
        };
        return Ok(Analysis {
            order,
            profile,
            boundary: false,
            maxwell: false,
            caustic: false,
            non_nodal: false,
            special_root: None,
            g: TPoly::one(),
        });
    }
    let ft = f.derivative(ctx);
    let ftt = ft.derivative(ctx);
    let profile = profile_at(ctx, &f)?;
    let g = f.gcd(ctx, &ft)?;
    let dg = g.degree().unwrap_or(0);
    let mut special_root = None;

    let triple = if dg >= 1 {
        g.gcd(ctx, &ftt)?
    } else {
        TPoly::one()
    };
    let caustic = triple.degree().unwrap_or(0) >= 1;
    if triple.degree() == Some(1) {
        special_root = Some(ctx.reduce(&triple.coeff(0).neg()));
    }
    let g_squarefree = dg >= 1 && g.gcd(ctx, &g.derivative(ctx))?.degree() == Some(0);
    let maxwell = dg >= 2 && g_squarefree;

    let mut boundary = false;
    let mut non_nodal = false;
    if dg == 1 {
        let v0 = ctx.reduce(&g.coeff(0).neg());
        let fz = TPoly::new(ctx, &local.fz);
        boundary = ctx.is_zero(&fz.eval(ctx, &v0))?;
        if boundary {
            let fzz = TPoly::new(ctx, &local.fzz);
            let ftz = fz.derivative(ctx);
            let a = ftt.eval(ctx, &v0);
            let b = ftz.eval(ctx, &v0);
            let c = fzz.eval(ctx, &v0);
            let hess = ctx.reduce(&ctx.mul(&a, &c).sub(&ctx.mul(&b, &b)));
            non_nodal = ctx.is_zero(&hess)?;
        }
        special_root = Some(v0);
    }
    Ok(Analysis {
        order,
        profile,
        boundary,
        maxwell,
        caustic,
        non_nodal,
        special_root,
        g,
    })
}

fn decide(a: &Analysis) -> (BranchTag, Vec<Predicate>) {
    let mut fired = Vec::new();
    if a.boundary {
        fired.push(Predicate::Boundary);
    }
    if a.maxwell {
        fired.push(Predicate::Maxwell);
    }
    if a.caustic {
        fired.push(Predicate::Caustic);
    }
    if a.non_nodal {
        fired.push(Predicate::NonNodal);
    }
    let main = [a.boundary, a.maxwell, a.caustic]
        .iter()
        .filter(|&&x| x)
        .count();
    let tag = match a.order {
        1 => BranchTag::Simple,
        2 if main == 1 && !a.non_nodal => {
            if a.boundary {
                BranchTag::Boundary
            } else if a.maxwell {
                BranchTag::Maxwell
            } else {
                BranchTag::Caustic
            }
        }
        _ => BranchTag::Degenerate,
    };
    (tag, fired)
}

/// Outcome of the criteria read off after shifting `t ↦ t + v0` so that the
/// double root sits at `t = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShiftVerdict {
    /// Shifted `qn` vanishes to order ≥ 2 at `z0`.
    pub boundary: bool,
    /// `Discr` of the shifted `P(n-2)` vanishes at `z0`.
    pub maxwell: bool,
    /// Shifted `q(n-2)` vanishes at `z0`.
    pub caustic: bool,
}

/// Shift-based criteria at a rational point with a rational double root `v0`.
pub fn shift_criteria(fam: &SpectralFamily, z0: &Rational, v0: &Rational) -> ShiftVerdict {
    let n = fam.n();
    let shifted = fam.shifted(&QPoly::constant(v0.clone()));
    let q = shifted.coeffs();
    let boundary = q[n - 1].order_at(z0).is_none_or(|k| k >= 2);
    let caustic = n >= 3 && q[n - 3].eval(z0) == Rational::from_integer(0.into());
    let maxwell = n >= 4 && {
        let vals: Vec<Rational> = q[..n - 2].iter().map(|c| c.eval(z0)).collect();
        generic_discriminant(n - 2).eval(&vals) == Rational::from_integer(0.into())
    };
    ShiftVerdict {
        boundary,
        maxwell,
        caustic,
    }
}

fn residue_value(r: &QPoly) -> Rational {
    r.coeff(0)
}

fn cross_check(
    fam: &SpectralFamily,
    ctx: &AlgebraicContext,
    a: &Analysis,
    tag: BranchTag,
) -> Result<(), CoverError> {
    let Some(z0) = ctx.point() else {
        return Ok(());
    };
    let v0 = match tag {
        BranchTag::Boundary | BranchTag::Caustic => a.special_root.as_ref().map(residue_value),
        BranchTag::Maxwell => {
            let g = QPoly::new(a.g.coeffs().iter().map(residue_value).collect());
            g.rational_roots().and_then(|r| r.into_iter().next())
        }
        _ => None,
    };
    let Some(v0) = v0 else {
        return Ok(());
    };
    let verdict = shift_criteria(fam, &z0, &v0);
    let ours = ShiftVerdict {
        boundary: a.boundary,
        maxwell: a.maxwell,
        caustic: a.caustic,
    };
    if verdict != ours {
        return Err(CoverError::CriteriaDisagree(ctx.modulus().display("z")));
    }
    Ok(())
}

/// Squarefree decomposition of `W` with rational roots split off as linear
/// factors. Sorted by [`locus_cmp`].
pub fn branch_locus(fam: &SpectralFamily) -> Result<Vec<(QPoly, usize)>, CoverError> {
    let w = discriminant_family(fam);
    if w.is_zero() {
        return Err(CoverError::NonReduced);
    }
    let (_, parts) = w.squarefree();
    let mut out = Vec::new();
    for (fac, mult) in parts {
        let mut rest = fac.clone();
        for r in fac.rational_roots().unwrap_or_default() {
            let lin = QPoly::linear(&r);
            rest = rest.exact_div(&lin).expect("root divides");
            out.push((lin, mult));
        }
        if rest.degree().unwrap_or(0) > 0 {
            out.push((rest.monic(), mult));
        }
    }
    out.sort_by(|a, b| locus_cmp(&a.0, &b.0));
    Ok(out)
}

/// One record per piece of the locus that dynamic evaluation separates.
pub fn classify_branch_point(
    fam: &SpectralFamily,
    locus: &Locus,
) -> Result<Vec<BranchPointRecord>, CoverError> {
    let local = Local::new(fam)?;
    let ctx = locus.context()?;
    let mut out = Vec::new();
    for (piece, a) in dynamic(&ctx, |c| analyze(c, &local)) {
        if a.order == 0 {
            return Err(CoverError::NotAZero(piece.modulus().display("z")));
        }
        let (tag, fired) = decide(&a);
        cross_check(fam, &piece, &a, tag)?;
        out.push(BranchPointRecord {
            locus: piece.modulus().clone(),
            w_multiplicity: a.order,
            tag,
            profile: a.profile,
            fired,
        });
    }
    Ok(out)
}

/// Records for every zero of `W`, in locus order.
pub fn classify_family(fam: &SpectralFamily) -> Result<Vec<BranchPointRecord>, CoverError> {
    let mut out = Vec::new();
    for (m, _) in branch_locus(fam)? {
        out.extend(classify_branch_point(fam, &Locus::Factor(m))?);
    }
    out.sort_by(|a, b| locus_cmp(&a.locus, &b.locus));
    Ok(out)
}

/// Root multiplicities of `F(·, α)` for each piece of the locus.
pub fn ramification_profile(
    fam: &SpectralFamily,
    locus: &Locus,
) -> Result<Vec<(QPoly, Vec<usize>)>, CoverError> {
    let ctx = locus.context()?;
    let f = fam.t_coeffs();
    Ok(dynamic(&ctx, |c| profile_at(c, &TPoly::new(c, &f)))
        .into_iter()
        .map(|(c, p)| (c.modulus().clone(), p))
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditEntry {
    #[serde(with = "locus_text")]
    pub locus: QPoly,
    pub tag: BranchTag,
    pub order: usize,
    /// The order of `W` is exactly two.
    pub ok: bool,
}

/// Tally of the multiple zeros of `W`. Point counts are over ℂ, so a locus
/// of degree `d` counts `d` times.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub entries: Vec<AuditEntry>,
    pub degenerate: Vec<BranchPointRecord>,
    pub boundary_points: usize,
    pub maxwell_points: usize,
    pub caustic_points: usize,
    /// `boundary + 2·maxwell + 3·caustic`.
    pub weighted_total: usize,
    /// `Σ ord(W)` over all zeros, against `deg W`.
    pub order_sum: usize,
    pub w_degree: usize,
}

impl AuditReport {
    pub fn is_clean(&self) -> bool {
        self.entries.iter().all(|e| e.ok) && self.order_sum == self.w_degree
    }
}

pub fn multiplicity_audit(fam: &SpectralFamily) -> Result<AuditReport, CoverError> {
    let records = classify_family(fam)?;
    let w = discriminant_family(fam);
    let mut report = AuditReport {
        entries: Vec::new(),
        degenerate: Vec::new(),
        boundary_points: 0,
        maxwell_points: 0,
        caustic_points: 0,
        weighted_total: 0,
        order_sum: 0,
        w_degree: w.degree().unwrap_or(0),
    };
    for r in records {
        let d = r.locus.degree().unwrap_or(0);
        report.order_sum += r.w_multiplicity * d;
        match r.tag {
            BranchTag::Simple => {}
            BranchTag::Degenerate => report.degenerate.push(r),
            tag => {
                match tag {
                    BranchTag::Boundary => report.boundary_points += d,
                    BranchTag::Maxwell => report.maxwell_points += d,
                    _ => report.caustic_points += d,
                }
                report.entries.push(AuditEntry {
                    ok: r.w_multiplicity == 2,
                    locus: r.locus,
                    tag,
                    order: r.w_multiplicity,
                });
            }
        }
    }
    report.weighted_total =
        report.boundary_points + 2 * report.maxwell_points + 3 * report.caustic_points;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn fam(c: &[&str]) -> SpectralFamily {
        SpectralFamily::parse(c, None).unwrap()
    }

    #[test]
    fn golden_tags() {
        let node = classify_family(&fam(&["0", "-z^2"])).unwrap();
        assert_eq!(node.len(), 1);
        assert_eq!(node[0].tag, BranchTag::Boundary);
        assert_eq!(node[0].profile, vec![2]);

        let maxwell = classify_family(&fam(&["-2", "1 - 2*z", "2*z", "z^2 - z"])).unwrap();
        assert_eq!(maxwell.len(), 2);
        // F = (t² - t - z)² - z
        assert_eq!(maxwell[0].locus, QPoly::x());
        assert_eq!(maxwell[0].tag, BranchTag::Maxwell);
        assert_eq!(maxwell[0].profile, vec![2, 2]);
        assert_eq!(maxwell[1].locus, QPoly::linear(&rat(1, 4)));
        assert_eq!(maxwell[1].tag, BranchTag::Boundary);
        assert_eq!(maxwell[1].profile, vec![2, 1, 1]);

        let cusp = classify_family(&fam(&["0", "0", "-z"])).unwrap();
        assert_eq!(cusp[0].tag, BranchTag::Caustic);
        assert_eq!(cusp[0].profile, vec![3]);

        let simple = classify_family(&fam(&["0", "-z"])).unwrap();
        assert_eq!(simple[0].tag, BranchTag::Simple);
        assert_eq!(simple[0].w_multiplicity, 1);
    }

    #[test]
    fn irrational_locus() {
        let recs = classify_family(&fam(&["0", "0", "2 - z^2"])).unwrap();
        assert_eq!(recs.len(), 1);
        assert_eq!(recs[0].locus, QPoly::from_ints(&[-2, 0, 1]));
        assert_eq!(recs[0].tag, BranchTag::Caustic);
        assert_eq!(recs[0].profile, vec![3]);
    }

    #[test]
    fn mixed_locus_splits() {
        // W = -27 z⁴ (z - 1)²
        let f = fam(&["0", "0", "z^2 - z^3"]);
        let recs =
            classify_branch_point(&f, &Locus::Factor(QPoly::from_ints(&[0, -1, 1]))).unwrap();
        assert_eq!(recs.len(), 2);
        assert_eq!(
            (recs[0].tag, recs[0].w_multiplicity),
            (BranchTag::Degenerate, 4)
        );
        assert_eq!(
            (recs[1].tag, recs[1].w_multiplicity),
            (BranchTag::Caustic, 2)
        );
        let err = classify_branch_point(&f, &Locus::Factor(QPoly::from_ints(&[-3, 0, 1])));
        assert!(matches!(err, Err(CoverError::NotAZero(_))));
    }

    #[test]
    fn profiles() {
        let f = fam(&["0", "-z"]);
        let p = ramification_profile(&f, &Locus::Point(rat(1, 1))).unwrap();
        assert_eq!(p, vec![(QPoly::linear(&rat(1, 1)), vec![1, 1])]);
    }

    #[test]
    fn audits() {
        let a = multiplicity_audit(&fam(&["-2", "1 - 2*z", "2*z", "z^2 - z"])).unwrap();
        assert_eq!((a.maxwell_points, a.boundary_points), (1, 1));
        assert_eq!(a.weighted_total, 3);
        assert!(a.is_clean());
        let a = multiplicity_audit(&fam(&["0", "-z"])).unwrap();
        assert!(a.entries.is_empty() && a.degenerate.is_empty());
    }

    #[test]
    fn cusp_curve_is_degenerate() {
        let recs = classify_family(&fam(&["0", "-z^3"])).unwrap();
        assert_eq!(recs[0].tag, BranchTag::Degenerate);
        assert_eq!(recs[0].w_multiplicity, 3);
    }
}
