use std::fmt;

use num_rational::BigRational;

use super::{PolyError, UniPoly};
use crate::field::{FieldOps, FiniteField, Ring};

/// Largest supported degree in each variable.
pub const BIPOLY_MAX_DEG: usize = 4;
const DIM: usize = BIPOLY_MAX_DEG + 1;

/// A polynomial in `x1, x2` of bidegree at most `(4, 4)`, stored as a dense
/// coefficient grid: `coeff(i, j)` multiplies `x1^i x2^j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BiPoly<S> {
    c: Vec<S>,
}

impl<S: Clone + PartialEq + fmt::Debug> BiPoly<S> {
    pub fn zero<R: Ring<Scalar = S>>(ring: &R) -> Self {
        Self {
            c: vec![ring.zero(); DIM * DIM],
        }
    }

    /// Builds from `(i, j, coefficient)` terms; repeated monomials add up.
    pub fn from_terms<R: Ring<Scalar = S>>(
        ring: &R,
        terms: impl IntoIterator<Item = (usize, usize, S)>,
    ) -> Result<Self, PolyError> {
        let mut out = Self::zero(ring);
        for (i, j, v) in terms {
            if i > BIPOLY_MAX_DEG || j > BIPOLY_MAX_DEG {
                return Err(PolyError::DegreeOverflow);
            }
            let slot = &mut out.c[i * DIM + j];
            *slot = ring.add(slot, &v);
        }
        Ok(out)
    }

    /// `f(x1) * g(x2)`.
    pub fn outer<R: Ring<Scalar = S>>(
        ring: &R,
        f: &UniPoly<S>,
        g: &UniPoly<S>,
    ) -> Result<Self, PolyError> {
        let terms = f.coeffs().iter().enumerate().flat_map(|(i, a)| {
            g.coeffs()
                .iter()
                .enumerate()
                .map(move |(j, b)| (i, j, ring.mul(a, b)))
        });
        Self::from_terms(ring, terms)
    }

    /// The polynomial `x1 - x2`.
    pub fn x1_minus_x2<R: Ring<Scalar = S>>(ring: &R) -> Self {
        Self::from_terms(ring, [(1, 0, ring.one()), (0, 1, ring.neg(&ring.one()))])
            .expect("within bounds")
    }

    pub fn coeff(&self, i: usize, j: usize) -> &S {
        &self.c[i * DIM + j]
    }

    pub fn is_zero<R: Ring<Scalar = S>>(&self, ring: &R) -> bool {
        self.c.iter().all(|v| ring.is_zero(v))
    }

    /// Nonzero terms `(i, j, coefficient)`.
    pub fn terms<'a, R: Ring<Scalar = S>>(
        &'a self,
        ring: &'a R,
    ) -> impl Iterator<Item = (usize, usize, &'a S)> + 'a {
        self.c
            .iter()
            .enumerate()
            .filter(move |(_, v)| !ring.is_zero(v))
            .map(|(n, v)| (n / DIM, n % DIM, v))
    }

    /// `(deg_x1, deg_x2)`, or `None` for the zero polynomial.
    pub fn bidegree<R: Ring<Scalar = S>>(&self, ring: &R) -> Option<(usize, usize)> {
        self.terms(ring).fold(None, |acc, (i, j, _)| match acc {
            None => Some((i, j)),
            Some((a, b)) => Some((a.max(i), b.max(j))),
        })
    }

    pub fn add<R: Ring<Scalar = S>>(&self, ring: &R, other: &Self) -> Self {
        Self {
            c: self.c.iter().zip(&other.c).map(|(a, b)| ring.add(a, b)).collect(),
        }
    }

    pub fn sub<R: Ring<Scalar = S>>(&self, ring: &R, other: &Self) -> Self {
        Self {
            c: self.c.iter().zip(&other.c).map(|(a, b)| ring.sub(a, b)).collect(),
        }
    }

    pub fn mul<R: Ring<Scalar = S>>(&self, ring: &R, other: &Self) -> Result<Self, PolyError> {
        let mut terms = Vec::new();
        for (i, j, a) in self.terms(ring) {
            for (k, l, b) in other.terms(ring) {
                terms.push((i + k, j + l, ring.mul(a, b)));
            }
        }
        Self::from_terms(ring, terms)
    }

    /// Exchanges `x1` and `x2`.
    pub fn swap(&self) -> Self {
        let mut c = self.c.clone();
        for i in 0..DIM {
            for j in 0..DIM {
                c[i * DIM + j] = self.c[j * DIM + i].clone();
            }
        }
        Self { c }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.swap()
    }

    pub fn eval<R: Ring<Scalar = S>>(&self, ring: &R, x1: &S, x2: &S) -> S {
        let mut acc = ring.zero();
        for i in (0..DIM).rev() {
            let row = (0..DIM)
                .rev()
                .fold(ring.zero(), |r, j| ring.add(&ring.mul(&r, x2), self.coeff(i, j)));
            acc = ring.add(&ring.mul(&acc, x1), &row);
        }
        acc
    }

    /// The restriction `f(x, x)`.
    pub fn diagonal<R: Ring<Scalar = S>>(&self, ring: &R) -> UniPoly<S> {
        let mut coeffs = vec![ring.zero(); 2 * DIM - 1];
        for (i, j, v) in self.terms(ring) {
            coeffs[i + j] = ring.add(&coeffs[i + j], v);
        }
        UniPoly::new(ring, coeffs)
    }

    /// `f(x1, x2)` as a polynomial in `x1` for a fixed value of `x2`.
    pub fn specialize_x2<R: Ring<Scalar = S>>(&self, ring: &R, x2: &S) -> UniPoly<S> {
        let coeffs = (0..DIM)
            .map(|i| {
                (0..DIM)
                    .rev()
                    .fold(ring.zero(), |r, j| ring.add(&ring.mul(&r, x2), self.coeff(i, j)))
            })
            .collect();
        UniPoly::new(ring, coeffs)
    }

    /// Leading term in lex order with `x1 > x2`.
    fn leading<R: Ring<Scalar = S>>(&self, ring: &R) -> Option<(usize, usize)> {
        (0..DIM)
            .rev()
            .flat_map(|i| (0..DIM).rev().map(move |j| (i, j)))
            .find(|&(i, j)| !ring.is_zero(self.coeff(i, j)))
    }

    /// Exact quotient `self / den`.
    ///
    /// Runs the lex-order division algorithm and fails with
    /// [`PolyError::InexactDivision`] as soon as a leading term of the
    /// remainder is not divisible by the leading term of `den`.
    pub fn divide_exact<F: FieldOps<Scalar = S>>(
        &self,
        field: &F,
        den: &Self,
    ) -> Result<Self, PolyError> {
        let (di, dj) = den.leading(field).ok_or(PolyError::DivisionByZero)?;
        let lc_inv = field.inv(den.coeff(di, dj)).ok_or(PolyError::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quot = Self::zero(field);
        while let Some((i, j)) = rem.leading(field) {
            if i < di || j < dj {
                return Err(PolyError::InexactDivision);
            }
            let c = field.mul(rem.coeff(i, j), &lc_inv);
            let (si, sj) = (i - di, j - dj);
            quot.c[si * DIM + sj] = c.clone();
            for (a, b, v) in den.terms(field) {
                let slot = &mut rem.c[(a + si) * DIM + (b + sj)];
                *slot = field.sub(slot, &field.mul(&c, v));
            }
        }
        Ok(quot)
    }
}

impl BiPoly<BigRational> {
    /// Reduction modulo the characteristic of `field`; `None` when a
    /// denominator is divisible by it.
    pub fn reduce<F: FiniteField>(&self, field: &F) -> Option<BiPoly<F::Elem>> {
        let c = self
            .c
            .iter()
            .map(|v| field.from_rational(v))
            .collect::<Option<Vec<_>>>()?;
        Some(BiPoly { c })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn bp(terms: &[(usize, usize, i64)]) -> BiPoly<BigRational> {
        BiPoly::from_terms(&Rationals, terms.iter().map(|&(i, j, v)| (i, j, q(v)))).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let num = bp(&[(2, 0, 1), (0, 2, -1)]);
        let den = BiPoly::x1_minus_x2(&Rationals);
        assert_eq!(num.divide_exact(&Rationals, &den).unwrap(), bp(&[(1, 0, 1), (0, 1, 1)]));
    }

    #[test]
    fn inexact_division_is_reported() {
        let num = bp(&[(2, 0, 1), (0, 2, 1)]);
        let den = BiPoly::x1_minus_x2(&Rationals);
        assert_eq!(num.divide_exact(&Rationals, &den), Err(PolyError::InexactDivision));
    }

    #[test]
    fn overflow_is_reported() {
        let a = bp(&[(3, 0, 1)]);
        assert_eq!(a.mul(&Rationals, &a), Err(PolyError::DegreeOverflow));
    }

    #[test]
    fn evaluation_and_diagonal() {
        let f = bp(&[(0, 0, 1), (2, 1, -1), (1, 2, -1)]);
        assert_eq!(f.eval(&Rationals, &q(2), &q(3)), q(1 - 12 - 18));
        assert_eq!(f.diagonal(&Rationals), crate::polyalg::QPoly::from_ints(&[1, 0, 0, -2]));
        assert_eq!(
            f.specialize_x2(&Rationals, &q(3)).eval(&Rationals, &q(2)),
            f.eval(&Rationals, &q(2), &q(3))
        );
        assert!(f.is_symmetric());
        assert_eq!(f.bidegree(&Rationals), Some((2, 2)));
    }
}
