mod common;

use momentforge::counting::{
    c_side_grid, count_bundle, count_c_side, count_delta_side, delta_side_grid, quotient_identity_check,
    reconstruct_l, second_moment_brute, second_moment_fast, smooth_counts, threefold_count_brute, trace_a, traces,
    CountError, Method,
};
use momentforge::field::{Field, FiniteField, PrimeField};
use momentforge::pencil::{classify_mod_p, families, Pencil};
use proptest::prelude::*;

fn pencil_strategy() -> impl Strategy<Value = Pencil> {
    (prop::array::uniform4(-3i64..=3), prop::array::uniform4(-3i64..=3))
        .prop_filter_map("zero polynomial", |(a, b)| Pencil::from_ints(a, b).ok())
}

fn odd_order() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![3u64, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 31, 37, 41, 43, 47, 49, 53])
}

fn field(q: u64) -> Field {
    Field::with_order(q).unwrap().with_residue_table()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn fast_equals_brute(pencil in pencil_strategy(), q in odd_order()) {
        let f = field(q);
        prop_assert_eq!(second_moment_fast(&pencil, &f).unwrap(), second_moment_brute(&pencil, &f).unwrap().1);
    }

    #[test]
    fn fast_counts_equal_grid_counts(pencil in pencil_strategy(), q in odd_order()) {
        let f = field(q);
        prop_assert_eq!(count_delta_side(&pencil, &f).unwrap(), delta_side_grid(&pencil, &f).unwrap());
        prop_assert_eq!(count_c_side(&pencil, &f).unwrap(), c_side_grid(&pencil, &f).unwrap());
    }

    #[test]
    fn bundles_are_consistent(pencil in pencil_strategy(), q in odd_order()) {
        let f = field(q);
        let brute = count_bundle(&pencil, &f, Method::Brute).unwrap();
        let fast = count_bundle(&pencil, &f, Method::Fast).unwrap();
        prop_assert!(brute.is_consistent() && fast.is_consistent());
        prop_assert_eq!((brute.m2, brute.a_inf, brute.c, brute.c_tilde), (fast.m2, fast.a_inf, fast.c, fast.c_tilde));
    }

    /// `|a_k| <= q` for every fiber, and the tabulated `a_inf` agrees with
    /// the single-fiber count.
    #[test]
    fn traces_are_bounded(pencil in pencil_strategy(), q in odd_order()) {
        let f = field(q);
        let (finite, a_inf) = traces(&pencil, &f).unwrap();
        prop_assert_eq!(finite.len() as u64, q);
        prop_assert!(finite.iter().chain([&a_inf]).all(|a| a.unsigned_abs() <= q));
        prop_assert_eq!(trace_a(&pencil, &f, None).unwrap(), a_inf);
    }

    #[test]
    fn smooth_moment_identity_at_typical_primes(pencil in pencil_strategy(), p in prop::sample::select(vec![5u64, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43])) {
        let f = PrimeField::new(p).unwrap();
        prop_assume!(classify_mod_p(&pencil, &f).is_ok_and(|l| l.typical));
        let sc = smooth_counts(&pencil, &f).unwrap();
        let (_, m2_tilde) = second_moment_brute(&pencil, &f).unwrap();
        let s = count_delta_side(&pencil, &f).unwrap().s as i64;
        let pi = p as i64;
        prop_assert_eq!(m2_tilde, pi * (sc.c_bar as i64 - sc.delta_bar as i64 + pi - s));
        prop_assert!(sc.d * sc.d <= 16 * pi);
        prop_assert_eq!(quotient_identity_check(&pencil, &f), Ok(true));
    }
}

#[test]
fn threefold_count_small_fields() {
    let mut rng = common::rng(21);
    for _ in 0..5 {
        let pencil = common::random_pencil(&mut rng, 3);
        for q in [3u64, 4, 5, 7, 8, 9] {
            let f = field(q);
            let m = threefold_count_brute(&pencil, &f).unwrap();
            let m2_tilde = if q % 2 == 1 { second_moment_brute(&pencil, &f).unwrap().1 } else { 0 };
            assert_eq!(m as i64, (q * q * q + q * q) as i64 + m2_tilde, "q={q} {pencil}");
        }
    }
}

#[test]
fn oracle_bound_is_enforced() {
    let pencil = families::bias_minus_five();
    let f = PrimeField::new(37).unwrap();
    assert!(matches!(threefold_count_brute(&pencil, &f), Err(CountError::OracleBound { q: 37, .. })));
    let f = PrimeField::new(503).unwrap();
    assert!(matches!(delta_side_grid(&pencil, &f), Err(CountError::OracleBound { .. })));
}

#[test]
fn even_characteristic_is_refused_where_characters_are_needed() {
    let pencil = families::bias_minus_five();
    let f = Field::new(2, 3).unwrap();
    assert!(matches!(second_moment_fast(&pencil, &f), Err(CountError::EvenCharacteristic { q: 8 })));
}

/// Genus 1 and genus 2 L-polynomials from `F_p` and `F_{p^2}` counts obey the
/// Weil bounds, and the genus-3 polynomial of `C_bar` from three extensions
/// does too.
#[test]
fn l_polynomials_from_extension_counts() {
    let pencil = families::bias_minus_five();
    let typical = [17u64, 19, 23, 29, 31, 37]
        .into_iter()
        .filter(|&p| classify_mod_p(&pencil, &PrimeField::new(p).unwrap()).is_ok_and(|l| l.typical));
    for p in typical.take(3) {
        let counts: Vec<_> = (1..=3)
            .map(|k| smooth_counts(&pencil, &Field::new(p, k).unwrap().with_residue_table()).unwrap())
            .collect();
        let g1 = reconstruct_l(p, &[counts[0].delta_bar]).unwrap();
        assert!(g1.is_weil(1e-9));
        assert_eq!(g1.point_count(2), counts[1].delta_bar.into());
        assert_eq!(g1.point_count(3), counts[2].delta_bar.into());
        let g2 = reconstruct_l(p, &[counts[0].c2, counts[1].c2]).unwrap();
        assert!(g2.is_weil(1e-9), "p={p}");
        assert_eq!(g2.point_count(3), counts[2].c2.into());
        let g3 = reconstruct_l(p, &[counts[0].c_bar, counts[1].c_bar, counts[2].c_bar]).unwrap();
        assert!(g3.is_weil(1e-9), "p={p}");
    }
}

#[test]
fn fast_path_at_a_large_prime() {
    let pencil = families::bias_minus_five();
    let f = PrimeField::new(10_007).unwrap();
    let fast = second_moment_fast(&pencil, &f).unwrap();
    assert_eq!(fast, second_moment_brute(&pencil, &f).unwrap().1);
    assert_eq!(f.order(), 10_007);
}
