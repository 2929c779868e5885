mod common;

use momentforge::field::{FiniteField, PrimeField, Rationals};
use momentforge::pencil::{
    classify, classify_mod_p, delta_polys, families, invariants, parse_pencil_spec, CaseKind, Pencil, PencilError,
};
use momentforge::polyalg::{discriminant, BiPoly, QPoly};
use num_rational::BigRational;
use proptest::prelude::*;

fn pencil_strategy() -> impl Strategy<Value = Pencil> {
    (prop::array::uniform4(-4i64..=4), prop::array::uniform4(-4i64..=4))
        .prop_filter_map("zero polynomial", |(a, b)| Pencil::from_ints(a, b).ok())
}

/// The conic in `(s1, s2)` with `s0 = 1`, as a polynomial in `s2` whose
/// coefficients are polynomials in `s1`.
fn conic_in_s2(pencil: &Pencil) -> [QPoly; 3] {
    let c = invariants(pencil).conic;
    let r = |x: &BigRational| x.clone();
    [
        QPoly::new(&Rationals, vec![r(&c.f), r(&c.d), r(&c.a)]),
        QPoly::new(&Rationals, vec![r(&c.e), r(&c.b)]),
        QPoly::new(&Rationals, vec![r(&c.c)]),
    ]
}

proptest! {
    #[test]
    fn resultant_identity(pencil in pencil_strategy()) {
        let inv = invariants(&pencil);
        if let Some(ok) = inv.resultant_identity_holds() {
            prop_assert!(ok, "{}", pencil);
        }
    }

    /// Independent oracle for the conic discriminant: the discriminant in
    /// `s2` is a quadratic in `s1`, whose own discriminant is the iterated
    /// discriminant, computed here with generic polynomial arithmetic.
    #[test]
    fn conic_discriminant_by_iteration(pencil in pencil_strategy()) {
        let [c0, c1, c2] = conic_in_s2(&pencil);
        let inner = c1.mul(&Rationals, &c1).sub(&Rationals, &c2.mul(&Rationals, &c0).scale(&Rationals, &BigRational::from_integer(4.into())));
        let coeff = |i| inner.coeff(&Rationals, i);
        let outer = coeff(1) * coeff(1) - BigRational::from_integer(4.into()) * coeff(2) * coeff(0);
        let inv = invariants(&pencil);
        let expected = BigRational::from_integer((-16).into()) * inv.mu(2, 3) * &inv.resultant;
        prop_assert_eq!(outer, expected);
        prop_assert!(inv.conic_identity_holds());
    }

    #[test]
    fn s_diagonal_matches_closed_form(pencil in pencil_strategy()) {
        prop_assert!(invariants(&pencil).s_forms_agree());
    }

    /// `Delta(x1, x2) = P(x1) Q(x2) - P(x2) Q(x1)` is antisymmetric and
    /// `Delta~ = Delta / (x1 - x2)` is symmetric.
    #[test]
    fn delta_symmetry(pencil in pencil_strategy()) {
        let d = delta_polys(&pencil);
        prop_assert!(d.delta_tilde.is_symmetric());
        prop_assert_eq!(d.delta.swap(), BiPoly::zero(&Rationals).sub(&Rationals, &d.delta));
    }

    #[test]
    fn text_and_json_round_trip(pencil in pencil_strategy()) {
        prop_assert_eq!(parse_pencil_spec(&pencil.to_string()).unwrap(), pencil.clone());
        let json = serde_json::to_string(&pencil.to_json()).unwrap();
        prop_assert_eq!(parse_pencil_spec(&json).unwrap(), pencil);
    }

    /// Over `Q` the label is stable under scaling `P` and `Q` by nonzero
    /// constants.
    #[test]
    fn classification_is_scale_invariant(pencil in pencil_strategy(), s in 1i64..5, t in -5i64..-1) {
        let a: [i64; 4] = std::array::from_fn(|i| pencil.a()[i].to_integer().try_into().unwrap());
        let b: [i64; 4] = std::array::from_fn(|i| pencil.b()[i].to_integer().try_into().unwrap());
        let scaled = Pencil::from_ints(a.map(|c| c * s), b.map(|c| c * t)).unwrap();
        prop_assert_eq!(classify(&pencil).map(|l| l.kind), classify(&scaled).map(|l| l.kind));
    }
}

#[test]
fn every_kind_is_reachable() {
    let found = common::pencils_by_kind(7, 1);
    for kind in CaseKind::ALL {
        assert!(found.contains_key(&kind), "{kind:?}");
    }
}

#[test]
fn typical_means_generic_conditions() {
    let mut rng = common::rng(11);
    for _ in 0..200 {
        let pencil = common::random_pencil(&mut rng, 4);
        let Ok(label) = classify(&pencil) else { continue };
        if !label.typical {
            continue;
        }
        let inv = invariants(&pencil);
        assert!(!label.c1 && !label.c2 && !label.c3);
        assert_ne!(inv.resultant, BigRational::from_integer(0.into()));
        assert!(inv.disc_s.as_ref().is_some_and(|d| *d != BigRational::from_integer(0.into())));
        let s = discriminant(&Rationals, &inv.s).unwrap();
        assert_eq!(Some(s), inv.disc_s);
    }
}

#[test]
fn family_pencils_are_typical_with_expected_factor_counts() {
    let int = |n: i64| BigRational::from_integer(n.into());
    let cases = [
        (families::bias_minus_three(&int(2), &int(0)).unwrap(), 2),
        (families::bias_minus_four(&int(3), &int(0)).unwrap(), 4),
        (families::bias_minus_five(), 4),
    ];
    for (pencil, factors) in cases {
        assert!(classify(&pencil).unwrap().typical, "{pencil}");
        let s = invariants(&pencil).s;
        assert_eq!(momentforge::polyalg::rational_irreducible_factor_count(&s).unwrap(), factors);
    }
}

#[test]
fn reduction_classification() {
    let pencil = families::bias_minus_five();
    // 13 divides a denominator.
    assert!(matches!(
        classify_mod_p(&pencil, &PrimeField::new(13).unwrap()),
        Err(PencilError::Reduction { p: 13 })
    ));
    let f17 = PrimeField::new(17).unwrap();
    assert!(classify_mod_p(&pencil, &f17).unwrap().typical);
    assert_eq!(f17.order(), 17);
}

#[test]
fn malformed_specs() {
    for spec in ["", "P=1,2,3;Q=1,2,3,4", "P=1,2,3,4", "P=a,0,0,1;Q=1,0,0,0", "P=0,0,0,0;Q=1,0,0,0", "@/nonexistent"] {
        assert!(parse_pencil_spec(spec).is_err(), "{spec:?}");
    }
    assert!(parse_pencil_spec("P=1/2,0,0,1;Q=0,0,1,-3/4").is_ok());
}
