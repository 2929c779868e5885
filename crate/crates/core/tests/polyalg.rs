use momentforge::field::{PrimeField, Rationals};
use momentforge::polyalg::{
    count_roots_by_evaluation, count_roots_by_gcd, discriminant, rational_irreducible_factor_count, rational_roots,
    resultant, QPoly,
};
use num_rational::BigRational;
use proptest::prelude::*;

fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn poly(max_deg: usize) -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-6i64..=6, 1..=max_deg + 1).prop_map(|c| QPoly::from_ints(&c))
}

/// `prod (a_i - b_j)` for polynomials given by their rational roots.
fn root_product(a: &[i64], b: &[i64]) -> BigRational {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| int(x - y)))
        .fold(int(1), |acc, d| acc * d)
}

proptest! {
    #[test]
    fn resultant_of_split_polynomials(a in prop::collection::vec(-5i64..=5, 1..4), b in prop::collection::vec(-5i64..=5, 1..4)) {
        let f = QPoly::from_roots(&a.iter().map(|&r| int(r)).collect::<Vec<_>>());
        let g = QPoly::from_roots(&b.iter().map(|&r| int(r)).collect::<Vec<_>>());
        prop_assert_eq!(resultant(&Rationals, &f, &g).unwrap(), root_product(&a, &b));
    }

    #[test]
    fn discriminant_of_split_polynomials(a in prop::collection::vec(-5i64..=5, 2..5)) {
        let f = QPoly::from_roots(&a.iter().map(|&r| int(r)).collect::<Vec<_>>());
        let mut expected = int(1);
        for i in 0..a.len() {
            for j in i + 1..a.len() {
                expected *= int((a[i] - a[j]) * (a[i] - a[j]));
            }
        }
        prop_assert_eq!(discriminant(&Rationals, &f).unwrap(), expected);
    }

    #[test]
    fn resultant_is_multiplicative(f in poly(3), g in poly(3), h in poly(2)) {
        prop_assume!(f.degree().unwrap_or(0) > 0 && g.degree().unwrap_or(0) > 0 && h.degree().unwrap_or(0) > 0);
        let gh = g.mul(&Rationals, &h);
        let lhs = resultant(&Rationals, &f, &gh).unwrap();
        let rhs = resultant(&Rationals, &f, &g).unwrap() * resultant(&Rationals, &f, &h).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn root_counts_agree(f in poly(4), p in prop::sample::select(vec![3u64, 5, 7, 11, 13, 101])) {
        let field = PrimeField::new(p).unwrap();
        if let Some(r) = f.reduce(&field) {
            prop_assume!(!r.is_zero());
            prop_assert_eq!(count_roots_by_gcd(&field, &r).unwrap(), count_roots_by_evaluation(&field, &r).unwrap());
        }
    }

    #[test]
    fn rational_roots_are_exact(roots in prop::collection::vec((-9i64..=9, 1i64..=4), 1..4), extra in 1i64..5) {
        // Up to two rational roots get an irreducible quadratic factor x^2 + extra.
        let rs: Vec<BigRational> = roots.iter().map(|&(n, d)| BigRational::new(n.into(), d.into())).collect();
        let mut f = QPoly::from_roots(&rs);
        if rs.len() <= 2 {
            f = f.mul(&Rationals, &QPoly::from_ints(&[extra, 0, 1]));
        }
        let mut expected = rs.clone();
        expected.sort();
        expected.dedup();
        let mut found = rational_roots(&f);
        found.sort();
        prop_assert_eq!(found, expected.clone());
        let quad = usize::from(rs.len() <= 2);
        prop_assert_eq!(rational_irreducible_factor_count(&f).unwrap(), expected.len() + quad);
    }
}

#[test]
fn factor_counts_of_quartics() {
    // (x^2 + 1)(x^2 - 2): two irreducible quadratics.
    let f = QPoly::from_ints(&[-2, 0, -1, 0, 1]);
    assert_eq!(rational_irreducible_factor_count(&f).unwrap(), 2);
    // x^4 + 1 is irreducible over Q.
    assert_eq!(rational_irreducible_factor_count(&QPoly::from_ints(&[1, 0, 0, 0, 1])).unwrap(), 1);
    // x^4 - 1 = (x - 1)(x + 1)(x^2 + 1).
    assert_eq!(rational_irreducible_factor_count(&QPoly::from_ints(&[-1, 0, 0, 0, 1])).unwrap(), 3);
}
