use std::fmt;

use super::{PolyError, UniPoly};
use crate::field::FieldOps;

/// Determinant by Gaussian elimination over a field.
pub fn determinant<F: FieldOps>(field: &F, mut m: Vec<Vec<F::Scalar>>) -> F::Scalar {
    let n = m.len();
    let mut det = field.one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !field.is_zero(&m[r][col])) else {
            return field.zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = field.neg(&det);
        }
        det = field.mul(&det, &m[col][col]);
        let inv = field.inv(&m[col][col]).expect("pivot is nonzero");
        for r in (col + 1)..n {
            if field.is_zero(&m[r][col]) {
                continue;
            }
            let factor = field.mul(&m[r][col], &inv);
            for c in col..n {
                let sub = field.mul(&factor, &m[col][c]);
                m[r][c] = field.sub(&m[r][c], &sub);
            }
        }
    }
    det
}

/// Sylvester matrix of `f` and `g` viewed as polynomials of formal degrees
/// `m` and `n`: `n` shifted rows of `f` followed by `m` shifted rows of `g`,
/// coefficients listed from the top degree down.
pub fn sylvester_matrix<F: FieldOps>(
    field: &F,
    f: &UniPoly<F::Scalar>,
    m: usize,
    g: &UniPoly<F::Scalar>,
    n: usize,
) -> Vec<Vec<F::Scalar>>
where
    F::Scalar: Clone + PartialEq + fmt::Debug,
{
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (poly, deg, copies) in [(f, m, n), (g, n, m)] {
        for shift in 0..copies {
            let mut row = vec![field.zero(); size];
            for k in 0..=deg {
                row[shift + deg - k] = poly.coeff(field, k);
            }
            rows.push(row);
        }
    }
    rows
}

/// Resultant with respect to formal degrees `m >= deg f`, `n >= deg g`.
pub fn resultant_with_degrees<F: FieldOps>(
    field: &F,
    f: &UniPoly<F::Scalar>,
    m: usize,
    g: &UniPoly<F::Scalar>,
    n: usize,
) -> Result<F::Scalar, PolyError> {
    if f.is_zero() && g.is_zero() {
        return Err(PolyError::BothZero);
    }
    if f.degree().unwrap_or(0) > m || g.degree().unwrap_or(0) > n {
        return Err(PolyError::DegreeOverflow);
    }
    Ok(determinant(field, sylvester_matrix(field, f, m, g, n)))
}

/// `Res(f, g)` with respect to the actual degrees, via the Sylvester
/// determinant. It vanishes iff `f` and `g` share a root in the algebraic
/// closure (or one of them is zero).
pub fn resultant<F: FieldOps>(
    field: &F,
    f: &UniPoly<F::Scalar>,
    g: &UniPoly<F::Scalar>,
) -> Result<F::Scalar, PolyError> {
    match (f.degree(), g.degree()) {
        (None, None) => Err(PolyError::BothZero),
        (None, _) | (_, None) => Ok(field.zero()),
        (Some(m), Some(n)) => resultant_with_degrees(field, f, m, g, n),
    }
}

/// `(-1)^(n(n-1)/2) Res(f, f') / lc(f)` for `deg f = n >= 1`.
pub fn discriminant<F: FieldOps>(field: &F, f: &UniPoly<F::Scalar>) -> Result<F::Scalar, PolyError> {
    let n = match f.degree() {
        Some(n) if n >= 1 => n,
        _ => return Err(PolyError::ConstantPolynomial),
    };
    let fp = f.derivative(field);
    let res = resultant_with_degrees(field, f, n, &fp, n - 1)?;
    let lc = f.leading_coeff().expect("nonzero");
    let d = field.div(&res, lc).expect("nonzero leading coefficient");
    Ok(if (n * (n - 1) / 2) % 2 == 1 {
        field.neg(&d)
    } else {
        d
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::polyalg::QPoly;
    use num_rational::BigRational;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn small_resultants() {
        let x = QPoly::from_ints(&[0, 1]);
        let g = QPoly::from_ints(&[1, 0, 0, 1]);
        assert_eq!(resultant(&Rationals, &x, &g).unwrap(), q(1, 1));
        assert_eq!(resultant(&Rationals, &g, &g).unwrap(), q(0, 1));
        let a = QPoly::from_ints(&[-2, 1]);
        let b = QPoly::from_ints(&[-5, 1]);
        // Res(f, g) = prod g(roots of f) for monic f: g(2) = -3.
        assert_eq!(resultant(&Rationals, &a, &b).unwrap(), q(-3, 1));
        assert_eq!(
            resultant(&Rationals, &QPoly::zero(), &QPoly::zero()),
            Err(PolyError::BothZero)
        );
    }

    #[test]
    fn discriminants() {
        assert_eq!(discriminant(&Rationals, &QPoly::from_ints(&[1, 0, 1])).unwrap(), q(-4, 1));
        assert_eq!(discriminant(&Rationals, &QPoly::from_ints(&[1, -2, 1])).unwrap(), q(0, 1));
        // x^3 + a x + b: -4a^3 - 27b^2.
        assert_eq!(
            discriminant(&Rationals, &QPoly::from_ints(&[3, 2, 0, 1])).unwrap(),
            q(-4 * 8 - 27 * 9, 1)
        );
        assert_eq!(
            discriminant(&Rationals, &QPoly::from_ints(&[7])),
            Err(PolyError::ConstantPolynomial)
        );
        let p = QPoly::new(&Rationals, vec![q(0, 1), q(37, 16), q(-53, 16), q(1, 1)]);
        assert_eq!(discriminant(&Rationals, &p).unwrap(), q(603_729, 65_536));
    }
}
