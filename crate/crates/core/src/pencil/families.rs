//! Explicit typical pencils whose second-moment bias is `-3`, `-4` and `-5`.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Pencil, PencilError};

fn r(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `P = x^3 - (53/16) x^2 + (37/16) x`, for which `S` splits into four
/// rational linear factors and the fiber at infinity is elliptic.
pub fn bias_minus_five() -> Pencil {
    Pencil::new(
        [int(0), r(37, 16), r(-53, 16), int(1)],
        [r(-576, 65), int(0), r(5744, 2405), r(-1008, 2405)],
    )
    .expect("nonzero polynomials")
}

/// `P = x (x - 1)^2` (singular fiber at infinity), with `S` splitting into
/// four factors for generic `s`. Requires `s != 0`.
pub fn bias_minus_four(s: &BigRational, b1: &BigRational) -> Result<Pencil, PencilError> {
    if s.is_zero() {
        return Err(PencilError::Parse("family parameter s must be nonzero".into()));
    }
    let s2 = s * s;
    let b0 = int(2) * (s + int(4)) * (s + int(4)) / (int(25) * s);
    let b2 = -(int(20) * b1 * s + &s2 + int(28) * s + int(16)) / (int(10) * s);
    let b3 = (int(20) * b1 * s + &s2 + int(38) * s + int(16)) / (int(20) * s);
    Pencil::new([int(0), int(1), int(-2), int(1)], [b0, b1.clone(), b2, b3])
}

/// `P = x (x - 1)(x - s)`, with `S` a product of two irreducible quadratics
/// for generic `s`. Requires `s != 0` and `s^2 + 3s + 4 != 0`.
pub fn bias_minus_three(s: &BigRational, b1: &BigRational) -> Result<Pencil, PencilError> {
    let q = s * s + int(3) * s + int(4);
    if s.is_zero() || q.is_zero() {
        return Err(PencilError::Parse("family parameter s is degenerate".into()));
    }
    let den = s * &q;
    let s2 = s * s;
    let s3 = &s2 * s;
    let b0 = (s + BigRational::one()) / &q;
    let b2 = -(b1 * &s3 + int(4) * b1 * &s2 + int(7) * b1 * s + int(4) * b1 - &s2 - int(4) * s - int(1)) / &den;
    let b3 = (b1 * &s2 + int(3) * b1 * s + int(4) * b1 + &s2 + s - int(1)) / &den;
    Pencil::new(
        [int(0), s.clone(), -(s + BigRational::one()), int(1)],
        [b0, b1.clone(), b2, b3],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pencil::{classify, delta_infinity_flag, invariants};
    use crate::polyalg::{rational_irreducible_factor_count, QPoly};

    #[test]
    fn minus_five_family() {
        let p = bias_minus_five();
        assert!(classify(&p).unwrap().typical);
        assert_eq!(delta_infinity_flag(&p), 1);
        let inv = invariants(&p);
        // S = (x - 3)(x - 2)(5x + 37)(13x - 6) / 65
        let expected = QPoly::from_roots(&[int(3), int(2), r(-37, 5), r(6, 13)]);
        assert_eq!(inv.s, expected);
        assert_eq!(rational_irreducible_factor_count(&inv.s), Ok(4));
        assert_eq!(inv.disc_p, Some(r(603_729, 65_536)));
    }

    #[test]
    fn minus_four_family() {
        let p = bias_minus_four(&int(3), &int(0)).unwrap();
        assert!(classify(&p).unwrap().typical);
        assert_eq!(delta_infinity_flag(&p), 0);
        assert_eq!(rational_irreducible_factor_count(&invariants(&p).s), Ok(4));
    }

    #[test]
    fn minus_three_family() {
        let p = bias_minus_three(&int(2), &int(0)).unwrap();
        assert!(classify(&p).unwrap().typical);
        assert_eq!(delta_infinity_flag(&p), 1);
        assert_eq!(rational_irreducible_factor_count(&invariants(&p).s), Ok(2));
    }
}
