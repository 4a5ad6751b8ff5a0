mod common;

use common::*;
use hitchin_core::algebra::{MPoly, Monomial, Rational};
use hitchin_core::picard::{
    closed_form, coeff_vars, derive_b_self_intersection, derive_hodge_hat, derive_omega_squared,
    derive_strata_classes, pushforward_base, pushforward_cover, BaseClass, BaseSymbol, CoeffNG,
    CoverExpr, FiberExpr, PicardError, Stratum,
};
use num_traits::Zero;
use rand::Rng;

const BASE: [BaseSymbol; 3] = [BaseSymbol::Lambda, BaseSymbol::Delta, BaseSymbol::Phi];

fn random_coeff(g: &mut impl Rng) -> CoeffNG {
    let v = coeff_vars();
    MPoly::from_terms(
        &v,
        (0..3).map(|_| {
            (
                Monomial::from_exps(vec![g.gen_range(0..3), g.gen_range(0..2)]),
                small_rational(g),
            )
        }),
    )
}

fn random_symbol(g: &mut impl Rng) -> BaseSymbol {
    BASE[g.gen_range(0..3)]
}

fn random_fiber(g: &mut impl Rng) -> FiberExpr {
    let psi = FiberExpr::psi();
    let monos = [
        psi.mul(&psi).unwrap(),
        psi.mul(&FiberExpr::pull(random_symbol(g))).unwrap(),
        FiberExpr::pull(random_symbol(g))
            .mul(&FiberExpr::pull(random_symbol(g)))
            .unwrap(),
    ];
    monos.iter().fold(FiberExpr::zero(), |acc, m| {
        acc.add(&m.scale(&random_coeff(g)))
    })
}

fn random_cover(g: &mut impl Rng) -> CoverExpr {
    let b = CoverExpr::b_hat();
    let monos = [
        CoverExpr::psi().mul(&CoverExpr::psi()).unwrap(),
        CoverExpr::psi().mul(&b).unwrap(),
        CoverExpr::pull(random_symbol(g)).mul(&b).unwrap(),
        CoverExpr::psi()
            .mul(&CoverExpr::pull(random_symbol(g)))
            .unwrap(),
        CoverExpr::d_hat(Stratum::ALL[g.gen_range(0..3)]),
        CoverExpr::v_nodal(),
    ];
    monos.iter().fold(CoverExpr::zero(), |acc, m| {
        acc.add(&m.scale(&random_coeff(g)))
    })
}

#[test]
fn pushforwards_are_linear() {
    let mut g = rng(53);
    for _ in 0..40 {
        let (x, y) = (random_fiber(&mut g), random_fiber(&mut g));
        let (a, b) = (random_coeff(&mut g), random_coeff(&mut g));
        let lhs = pushforward_base(&x.scale(&a).add(&y.scale(&b))).unwrap();
        let rhs = pushforward_base(&x)
            .unwrap()
            .scale(&a)
            .add(&pushforward_base(&y).unwrap().scale(&b));
        assert_eq!(lhs, rhs);

        let (x, y) = (random_cover(&mut g), random_cover(&mut g));
        let lhs = pushforward_cover(&x.scale(&a).add(&y.scale(&b))).unwrap();
        let rhs = pushforward_cover(&x)
            .unwrap()
            .scale(&a)
            .add(&pushforward_cover(&y).unwrap().scale(&b));
        assert_eq!(lhs, rhs);
    }
}

fn p(s: &str) -> CoeffNG {
    MPoly::parse(s, &coeff_vars()).unwrap()
}

#[test]
fn projection_formula() {
    // fiber degrees: Ψ has 2g - 2 on each of n sheets, B̂ maps onto B of
    // degree n(n-1)(2g-2)
    let deg_psi = p("2*n*g - 2*n");
    let deg_b = p("2*n^2*g - 2*n^2 - 2*n*g + 2*n");
    for sym in BASE {
        let a = CoverExpr::pull(sym);
        assert_eq!(
            pushforward_cover(&a.mul(&CoverExpr::b_hat()).unwrap()).unwrap(),
            BaseClass::basis(sym).scale(&deg_b)
        );
        assert_eq!(
            pushforward_cover(&a.mul(&CoverExpr::psi()).unwrap()).unwrap(),
            BaseClass::basis(sym).scale(&deg_psi)
        );
        let psi_b = CoverExpr::psi().mul(&CoverExpr::b_hat()).unwrap();
        assert_eq!(a.mul(&psi_b), Err(PicardError::DimensionExceeded(3)));
    }
    // degree-zero part of ω²: an unramified pullback of ψ²
    let psi = CoverExpr::psi();
    assert_eq!(
        pushforward_cover(&psi.mul(&psi).unwrap()).unwrap(),
        BaseClass::from_strs("12*n", "-n", "0")
    );
}

fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

#[test]
fn specialization_commutes_with_combination() {
    let s = derive_strata_classes();
    let hodge = derive_hodge_hat();
    let omega = derive_omega_squared();
    for n in 3..=6 {
        for gg in 2..=4 {
            let (nv, gv) = (int(n), int(gg));
            let at = |c: &BaseClass| c.specialize(&nv, &gv);
            let combined = at(&s.db)
                .add(&at(&s.dm).scale_rat(&int(2)))
                .add(&at(&s.dc).scale_rat(&int(3)));
            assert_eq!(at(&s.dw), combined);
            let nodal = BaseClass::basis(BaseSymbol::Delta)
                .scale_rat(&nv)
                .add(&at(&s.db));
            assert_eq!(
                at(&hodge),
                at(&omega)
                    .add(&nodal)
                    .scale_rat(&Rational::new(1.into(), 12.into()))
            );
            assert_eq!(at(&hodge), at(&closed_form::hodge_hat()));
        }
    }
}

#[test]
fn hodge_hat_is_integral() {
    let h = derive_hodge_hat();
    for n in 1..=12 {
        for gg in 0..=12 {
            let c = h.specialize(&int(n), &int(gg));
            for sym in BASE {
                let v = c.coord(sym).constant_value().unwrap_or_else(Rational::zero);
                assert!(v.is_integer(), "n = {n}, g = {gg}, {sym:?} = {v}");
            }
        }
    }
}

#[test]
fn small_cases() {
    let at = |c: &BaseClass, n: i64, gg: i64| c.specialize(&int(n), &int(gg));
    assert_eq!(
        at(&derive_hodge_hat(), 3, 2),
        BaseClass::from_strs("51", "-4", "-13")
    );
    assert_eq!(
        at(&derive_hodge_hat(), 1, 3),
        BaseClass::basis(BaseSymbol::Lambda)
    );
    let s = derive_strata_classes();
    assert_eq!(at(&s.dc, 3, 2), BaseClass::from_strs("72", "-6", "-24"));
    // no Maxwell or caustic points with two sheets
    assert!(at(&s.dm, 2, 5).is_zero() && at(&s.dc, 2, 5).is_zero());
    let b2 = at(&derive_b_self_intersection(), 2, 3);
    let half_db = at(&s.db, 2, 3).scale_rat(&Rational::new(1.into(), 2.into()));
    let expect = BaseClass::from_strs("-12", "1", "4").add(&half_db);
    assert_eq!(b2, expect);
    assert!(derive_hodge_hat().coord(BaseSymbol::LambdaHat).is_zero());
}

#[test]
fn ill_posed_pushforwards_are_rejected() {
    assert_eq!(
        pushforward_base(&FiberExpr::pull(BaseSymbol::Phi)),
        Err(PicardError::FiberDegree(1))
    );
    assert_eq!(
        pushforward_cover(&CoverExpr::one()),
        Err(PicardError::FiberDegree(0))
    );
    let b = CoverExpr::b_hat();
    assert_eq!(
        pushforward_cover(&b.mul(&b).unwrap()),
        Err(PicardError::Unnormalized)
    );
}
