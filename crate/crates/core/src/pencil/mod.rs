//! Pencils of cubics `y^2 = P(x) k + Q(x)` and their invariants.

mod classify;
pub mod families;
mod invariants;
mod parse;

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::field::{FiniteField, Rationals};
use crate::polyalg::{discriminant, BiPoly, PolyError, QPoly};

pub use classify::{classify, classify_mod_p, classify_over, CaseKind, CaseLabel};
pub use invariants::{invariants, ConicCoefficients, Minors, PencilInvariants};
pub use parse::{parse_pencil_spec, PencilJson};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PencilError {
    #[error("P and Q must both be nonzero")]
    ZeroPolynomial,
    #[error("malformed pencil spec: {0}")]
    Parse(String),
    #[error("cannot reduce the pencil modulo {p}: it divides a coefficient denominator")]
    Reduction { p: u64 },
    #[error("P and Q share a quadratic factor, so every fiber is a singular cubic")]
    SingularFamily,
    #[error("classification needs odd characteristic, got {p}")]
    EvenCharacteristic { p: u64 },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// The pencil `F_k: y^2 = P(x) k + Q(x)` with `P = sum a_i x^i` and
/// `Q = sum b_i x^i`, `deg P, deg Q <= 3`, rational coefficients.
///
/// Coefficient arrays are indexed by degree (`a[0]` is the constant term of
/// `P`); the text form lists them degree-3 first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pencil {
    a: [BigRational; 4],
    b: [BigRational; 4],
}

/// A pencil with coefficients reduced into a finite field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReducedPencil<E> {
    pub a: [E; 4],
    pub b: [E; 4],
}

impl Pencil {
    pub fn new(a: [BigRational; 4], b: [BigRational; 4]) -> Result<Self, PencilError> {
        if a.iter().all(Zero::is_zero) || b.iter().all(Zero::is_zero) {
            return Err(PencilError::ZeroPolynomial);
        }
        Ok(Self { a, b })
    }

    /// Integer coefficients, constant term first.
    pub fn from_ints(a: [i64; 4], b: [i64; 4]) -> Result<Self, PencilError> {
        let conv = |v: [i64; 4]| v.map(|c| BigRational::from_integer(c.into()));
        Self::new(conv(a), conv(b))
    }

    /// Coefficients of `P`, constant term first.
    pub fn a(&self) -> &[BigRational; 4] {
        &self.a
    }

    /// Coefficients of `Q`, constant term first.
    pub fn b(&self) -> &[BigRational; 4] {
        &self.b
    }

    pub fn p_poly(&self) -> QPoly {
        QPoly::new(&Rationals, self.a.to_vec())
    }

    pub fn q_poly(&self) -> QPoly {
        QPoly::new(&Rationals, self.b.to_vec())
    }

    /// Reduction into `field`; `None` when its characteristic divides a
    /// denominator.
    pub fn reduce<F: FiniteField>(&self, field: &F) -> Option<ReducedPencil<F::Elem>> {
        let conv = |v: &[BigRational; 4]| -> Option<[F::Elem; 4]> {
            Some([
                field.from_rational(&v[0])?,
                field.from_rational(&v[1])?,
                field.from_rational(&v[2])?,
                field.from_rational(&v[3])?,
            ])
        };
        Some(ReducedPencil {
            a: conv(&self.a)?,
            b: conv(&self.b)?,
        })
    }

    /// Like [`Pencil::reduce`], reporting failure as an error.
    pub fn reduce_or_err<F: FiniteField>(
        &self,
        field: &F,
    ) -> Result<ReducedPencil<F::Elem>, PencilError> {
        self.reduce(field).ok_or(PencilError::Reduction {
            p: field.characteristic(),
        })
    }

    /// Least common multiple of all coefficient denominators.
    pub fn denominator_lcm(&self) -> num_bigint::BigInt {
        use num_integer::Integer;
        self.a
            .iter()
            .chain(&self.b)
            .fold(num_bigint::BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }
}

impl fmt::Display for Pencil {
    /// Canonical text form `P=a3,a2,a1,a0;Q=b3,b2,b1,b0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[BigRational; 4]| {
            v.iter()
                .rev()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "P={};Q={}", join(&self.a), join(&self.b))
    }
}

/// `Delta(x1, x2) = P(x1) Q(x2) - P(x2) Q(x1)`, its cofactor
/// `Delta~ = Delta / (x1 - x2)` and the diagonal `S(x) = Delta~(x, x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaPolys {
    pub delta: BiPoly<BigRational>,
    pub delta_tilde: BiPoly<BigRational>,
    pub s: QPoly,
}

pub fn delta_polys(pencil: &Pencil) -> DeltaPolys {
    let (p, q) = (pencil.p_poly(), pencil.q_poly());
    let pq = BiPoly::outer(&Rationals, &p, &q).expect("cubic bidegree fits");
    let delta = pq.sub(&Rationals, &pq.swap());
    let delta_tilde = delta
        .divide_exact(&Rationals, &BiPoly::x1_minus_x2(&Rationals))
        .expect("Delta is antisymmetric, hence divisible by x1 - x2");
    let s = delta_tilde.diagonal(&Rationals);
    DeltaPolys {
        delta,
        delta_tilde,
        s,
    }
}

/// `1` when the fiber at infinity `y^2 = P(x)` is an elliptic curve
/// (`deg P = 3` and `disc P != 0`), else `0`.
pub fn delta_infinity_flag(pencil: &Pencil) -> u8 {
    let p = pencil.p_poly();
    if p.degree() != Some(3) {
        return 0;
    }
    let disc = discriminant(&Rationals, &p).expect("cubic");
    u8::from(!disc.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example_delta_polys() {
        let pencil = Pencil::from_ints([0, 1, 0, 0], [1, 0, 0, 1]).unwrap();
        let d = delta_polys(&pencil);
        let expected = BiPoly::from_terms(
            &Rationals,
            [(0, 0, 1), (2, 1, -1), (1, 2, -1)]
                .map(|(i, j, c)| (i, j, BigRational::from_integer(c.into()))),
        )
        .unwrap();
        assert_eq!(d.delta_tilde, expected);
        assert_eq!(d.s, QPoly::from_ints(&[1, 0, 0, -2]));
        assert!(d.delta_tilde.is_symmetric());
        let x1mx2 = BiPoly::x1_minus_x2(&Rationals);
        assert_eq!(x1mx2.mul(&Rationals, &d.delta_tilde).unwrap(), d.delta);
    }

    #[test]
    fn proportional_delta_vanishes() {
        let pencil = Pencil::from_ints([1, 2, 0, 1], [2, 4, 0, 2]).unwrap();
        let d = delta_polys(&pencil);
        assert!(d.delta.is_zero(&Rationals));
        assert!(d.s.is_zero());
    }

    #[test]
    fn zero_polynomials_rejected() {
        assert_eq!(
            Pencil::from_ints([0; 4], [1, 0, 0, 0]),
            Err(PencilError::ZeroPolynomial)
        );
    }

    #[test]
    fn infinity_flag() {
        assert_eq!(delta_infinity_flag(&Pencil::from_ints([0, 1, -2, 1], [1; 4]).unwrap()), 0);
        assert_eq!(delta_infinity_flag(&Pencil::from_ints([1, 0, 1, 0], [1; 4]).unwrap()), 0);
        assert_eq!(delta_infinity_flag(&Pencil::from_ints([1, 0, 0, 1], [1; 4]).unwrap()), 1);
    }
}
