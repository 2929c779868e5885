use momentforge::field::{char_sum_quadratic, is_prime, primes_up_to, Field, FieldOps, FiniteField, PrimeField, Ring};
use proptest::prelude::*;

fn orders() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![3u64, 5, 7, 9, 11, 13, 25, 27, 49, 121, 125, 169, 343, 1331])
}

proptest! {
    #[test]
    fn field_axioms(q in orders(), i in any::<u64>(), j in any::<u64>(), k in any::<u64>()) {
        let f = Field::with_order(q).unwrap();
        let (a, b, c) = (f.element(i % q), f.element(j % q), f.element(k % q));
        prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        prop_assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
        prop_assert!(f.is_zero(&f.add(&a, &f.neg(&a))));
        if let Some(inv) = f.inv(&a) {
            prop_assert_eq!(f.mul(&a, &inv), f.one());
        } else {
            prop_assert!(f.is_zero(&a));
        }
        // Frobenius fixes exactly the prime field and a^q = a everywhere.
        prop_assert_eq!(f.pow(&a, q), a);
    }

    #[test]
    fn character_is_euler_criterion(q in orders(), i in any::<u64>()) {
        let f = Field::with_order(q).unwrap().with_residue_table();
        let a = f.element(i % q);
        let euler = f.pow(&a, (q - 1) / 2);
        let expected = if f.is_zero(&a) { 0 } else if euler == f.one() { 1 } else { -1 };
        prop_assert_eq!(f.chi(&a), expected);
        match f.sqrt(&a) {
            Some(r) => prop_assert_eq!(f.mul(&r, &r), a),
            None => prop_assert_eq!(expected, -1),
        }
    }

    #[test]
    fn tabled_and_untabled_prime_fields_agree(p in prop::sample::select(vec![3u64, 101, 997, 7919]), x in any::<u64>()) {
        let t = PrimeField::new(p).unwrap();
        let u = PrimeField::without_table(p).unwrap();
        let a = t.element(x % p);
        prop_assert_eq!(t.chi(&a), u.chi(&a));
        prop_assert_eq!(t.sqrt(&a).is_some(), u.sqrt(&a).is_some());
    }
}

#[test]
fn quadratic_character_sum_matches_literal_sum() {
    for q in [3u64, 5, 9, 25, 27] {
        let f = Field::with_order(q).unwrap().with_residue_table();
        let elems: Vec<_> = f.elements().collect();
        for a in &elems {
            for b in &elems {
                for c in &elems {
                    let literal: i64 = elems
                        .iter()
                        .map(|t| i64::from(f.chi(&f.add(&f.mul(&f.add(&f.mul(a, t), b), t), c))))
                        .sum();
                    assert_eq!(char_sum_quadratic(&f, a, b, c).unwrap(), literal, "q={q}");
                }
            }
        }
    }
}

#[test]
fn even_characteristic_counts_only() {
    let f4 = Field::new(2, 2).unwrap();
    assert_eq!(f4.elements().count(), 4);
    let x = f4.element(3);
    assert!(f4.quadratic_character(&x).is_err());
    assert!(char_sum_quadratic(&f4, &x, &x, &x).is_err());
    // Squaring is a bijection, so every element has one root.
    assert!(f4.elements().all(|v| f4.square_root_count(&v) == 1));
}

#[test]
fn primality_agrees_with_sieve() {
    let sieve = primes_up_to(20_000);
    let by_test: Vec<u64> = (0..=20_000).filter(|&n| is_prime(n)).collect();
    assert_eq!(sieve, by_test);
    assert!(is_prime(18_446_744_073_709_551_557));
    assert!(!is_prime(3_215_031_751));
}

#[test]
fn invalid_orders_are_rejected() {
    for q in [0u64, 1, 6, 12, 16, 100] {
        assert!(Field::with_order(q).is_err(), "{q}");
    }
    assert!(PrimeField::new(15).is_err());
}

#[test]
fn division_in_extension() {
    let f = Field::new(5, 3).unwrap();
    let a = f.element(17);
    let b = f.element(99);
    let q = f.div(&a, &b).unwrap();
    assert_eq!(f.mul(&q, &b), a);
}
