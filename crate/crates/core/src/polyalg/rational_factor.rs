//! Rational roots and irreducible-factor counts over `Q` in degree `<= 4`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::sturm::{isolate_real_roots, refine_root, simplest_rational_between};
use super::{PolyError, QPoly};
use crate::field::Rationals;

/// `Some(r)` with `r >= 0` and `r^2 = x` when `x` is the square of a rational.
pub fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    (&n * &n == *x.numer() && &d * &d == *x.denom()).then(|| BigRational::new(n, d))
}

/// Distinct rational roots of a nonzero polynomial, in increasing order.
///
/// Each real root of the squarefree part is isolated with a Sturm sequence
/// and refined below `1 / (2 L^2)`, where `L` is the leading coefficient of
/// the primitive integer form. A rational root `a/b` has `b | L`, and two
/// distinct fractions with denominators at most `L` are at least `1/L^2`
/// apart, so the simplest rational in the refined interval is the only
/// candidate; it is then confirmed by exact evaluation.
pub fn rational_roots(f: &QPoly) -> Vec<BigRational> {
    if f.is_constant() {
        return Vec::new();
    }
    let g = f.squarefree_part(&Rationals);
    let lc = g.primitive_integer().pop().expect("nonconstant");
    let width = BigRational::new(BigInt::from(1), BigInt::from(2) * &lc * &lc);
    let mut roots = Vec::new();
    for (a, b) in isolate_real_roots(&g) {
        if g.eval(&Rationals, &b).is_zero() {
            roots.push(b);
            continue;
        }
        let (a, b) = refine_root(&g, a, b, &width);
        let r = simplest_rational_between(&a, &b);
        if g.eval(&Rationals, &r).is_zero() {
            roots.push(r);
        }
    }
    roots
}

/// Whether a monic quartic without rational roots splits over `Q` into two
/// quadratics, tested on the depressed form `y^4 + P y^2 + Q y + R` through
/// the resolvent cubic `z^3 + 2P z^2 + (P^2 - 4R) z - Q^2` (whose roots are
/// the squares of the linear coefficients of the candidate factors).
fn quartic_splits(f: &QPoly) -> bool {
    let f = f.monic(&Rationals);
    let c = |i: usize| f.coeff(&Rationals, i);
    let (a, b, cc, e) = (c(3), c(2), c(1), c(0));
    let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
    let a2 = &a * &a;
    let p = &b - &a2 * r(3, 8);
    let q = &cc - &a * &b * r(1, 2) + &a2 * &a * r(1, 8);
    let rr = &e - &a * &cc * r(1, 4) + &a2 * &b * r(1, 16) - &a2 * &a2 * r(3, 256);
    if q.is_zero() {
        // Biquadratic: (y^2 + t)(y^2 + u) or (y^2 + s y + t)(y^2 - s y + t).
        let disc = &p * &p - &rr * r(4, 1);
        if rational_sqrt(&disc).is_some() {
            return true;
        }
        return match rational_sqrt(&rr) {
            Some(t) => [t.clone(), -t].into_iter().any(|t| {
                let s2 = &t * r(2, 1) - &p;
                s2.is_positive() && rational_sqrt(&s2).is_some()
            }),
            None => false,
        };
    }
    let resolvent = QPoly::new(
        &Rationals,
        vec![-(&q * &q), &p * &p - &rr * r(4, 1), &p * r(2, 1), r(1, 1)],
    );
    rational_roots(&resolvent)
        .iter()
        .any(|z| z.is_positive() && rational_sqrt(z).is_some())
}

/// Number of distinct irreducible factors of `f` over `Q`, ignoring
/// multiplicities and scalars; `1 <= deg f <= 4`.
pub fn rational_irreducible_factor_count(f: &QPoly) -> Result<usize, PolyError> {
    match f.degree() {
        Some(d) if (1..=4).contains(&d) => {}
        Some(d) => return Err(PolyError::DegreeOutOfRange(d)),
        None => return Err(PolyError::ZeroPolynomial),
    }
    let g = f.squarefree_part(&Rationals);
    let roots = rational_roots(&g);
    let linear = QPoly::from_roots(&roots);
    let rest = g.div_exact(&Rationals, &linear)?;
    let extra = match rest.degree() {
        Some(0) => 0,
        Some(2) | Some(3) => 1,
        Some(4) => {
            if quartic_splits(&rest) {
                2
            } else {
                1
            }
        }
        other => unreachable!("residual degree {other:?} after removing rational roots"),
    };
    Ok(roots.len() + extra)
}
