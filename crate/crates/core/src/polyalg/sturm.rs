//! Real-root counting and isolation over the rationals.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::QPoly;
use crate::field::Rationals;

/// Sturm sequence `f, f', -rem(f, f'), ..`.
pub fn sturm_sequence(f: &QPoly) -> Vec<QPoly> {
    let mut seq = vec![f.clone()];
    if f.is_constant() {
        return seq;
    }
    seq.push(f.derivative(&Rationals));
    loop {
        let n = seq.len();
        let (_, r) = seq[n - 2]
            .div_rem(&Rationals, &seq[n - 1])
            .expect("nonzero divisor");
        if r.is_zero() {
            return seq;
        }
        seq.push(r.neg(&Rationals));
    }
}

fn count_sign_changes(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut changes = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

fn sign(x: &BigRational) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

fn changes_at(seq: &[QPoly], x: &BigRational) -> usize {
    count_sign_changes(seq.iter().map(|p| sign(&p.eval(&Rationals, x))))
}

fn changes_at_infinity(seq: &[QPoly], positive: bool) -> usize {
    count_sign_changes(seq.iter().map(|p| {
        let lc = p.leading_coeff().map(sign).unwrap_or(0);
        let odd = p.degree().unwrap_or(0) % 2 == 1;
        if !positive && odd {
            -lc
        } else {
            lc
        }
    }))
}

/// Number of distinct real roots of `f` in `(a, b]`.
pub fn count_real_roots_in(f: &QPoly, a: &BigRational, b: &BigRational) -> usize {
    let seq = sturm_sequence(f);
    changes_at(&seq, a).saturating_sub(changes_at(&seq, b))
}

/// Number of distinct real roots of `f`.
pub fn count_real_roots(f: &QPoly) -> usize {
    let seq = sturm_sequence(f);
    changes_at_infinity(&seq, false).saturating_sub(changes_at_infinity(&seq, true))
}

/// Cauchy bound: every root has absolute value below `1 + max |a_i / a_n|`.
pub fn root_bound(f: &QPoly) -> BigRational {
    let lc = f.leading_coeff().expect("nonzero polynomial").abs();
    let n = f.coeffs().len();
    let max = f.coeffs()[..n - 1]
        .iter()
        .map(|c| c.abs() / &lc)
        .fold(BigRational::zero(), |m, c| if c > m { c } else { m });
    max + BigRational::one()
}

/// Disjoint intervals `(a, b]`, each containing exactly one real root of the
/// nonzero polynomial `f`, in increasing order.
pub fn isolate_real_roots(f: &QPoly) -> Vec<(BigRational, BigRational)> {
    if f.is_constant() {
        return Vec::new();
    }
    let seq = sturm_sequence(f);
    let bound = root_bound(f);
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((a, b)) = stack.pop() {
        let n = changes_at(&seq, &a).saturating_sub(changes_at(&seq, &b));
        match n {
            0 => {}
            1 => out.push((a, b)),
            _ => {
                let mid = (&a + &b) / BigRational::from_integer(2.into());
                stack.push((mid.clone(), b));
                stack.push((a, mid));
            }
        }
    }
    out.sort();
    out
}

/// Shrinks an isolating interval `(a, b]` of a root of `f` below `width`.
pub fn refine_root(
    f: &QPoly,
    mut a: BigRational,
    mut b: BigRational,
    width: &BigRational,
) -> (BigRational, BigRational) {
    let seq = sturm_sequence(f);
    let two = BigRational::from_integer(2.into());
    while &(&b - &a) >= width {
        let mid = (&a + &b) / &two;
        if changes_at(&seq, &a) > changes_at(&seq, &mid) {
            b = mid;
        } else {
            a = mid;
        }
    }
    (a, b)
}

/// The rational with the smallest denominator in the closed interval
/// `[a, b]`, via continued fractions.
pub fn simplest_rational_between(a: &BigRational, b: &BigRational) -> BigRational {
    let fa = a.floor();
    if &fa == a {
        return fa;
    }
    let next = &fa + BigRational::one();
    if &next <= b {
        return next;
    }
    let inner = simplest_rational_between(&(b - &fa).recip(), &(a - &fa).recip());
    fa + inner.recip()
}
