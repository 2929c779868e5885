use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::PolyError;
use crate::field::{FieldOps, FiniteField, Rationals, Ring};

/// A univariate polynomial with coefficients in a [`Ring`], constant term
/// first. Trailing zero coefficients are never stored, so the zero polynomial
/// has an empty coefficient vector and [`UniPoly::degree`] returns `None`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UniPoly<S> {
    coeffs: Vec<S>,
}

/// Polynomials over the rationals.
pub type QPoly = UniPoly<BigRational>;

impl<S: Clone + PartialEq + fmt::Debug> UniPoly<S> {
    pub fn new<R: Ring<Scalar = S>>(ring: &R, mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| ring.is_zero(c)) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant<R: Ring<Scalar = S>>(ring: &R, c: S) -> Self {
        Self::new(ring, vec![c])
    }

    /// `c * x^n`.
    pub fn monomial<R: Ring<Scalar = S>>(ring: &R, c: S, n: usize) -> Self {
        let mut coeffs = vec![ring.zero(); n];
        coeffs.push(c);
        Self::new(ring, coeffs)
    }

    /// The polynomial `x`.
    pub fn x<R: Ring<Scalar = S>>(ring: &R) -> Self {
        Self::monomial(ring, ring.one(), 1)
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff<R: Ring<Scalar = S>>(&self, ring: &R, i: usize) -> S {
        self.coeffs.get(i).cloned().unwrap_or_else(|| ring.zero())
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Option<&S> {
        self.coeffs.last()
    }

    pub fn eval<R: Ring<Scalar = S>>(&self, ring: &R, x: &S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(ring.zero(), |acc, c| ring.add(&ring.mul(&acc, x), c))
    }

    pub fn add<R: Ring<Scalar = S>>(&self, ring: &R, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| ring.add(&self.coeff(ring, i), &other.coeff(ring, i)))
            .collect();
        Self::new(ring, coeffs)
    }

    pub fn sub<R: Ring<Scalar = S>>(&self, ring: &R, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| ring.sub(&self.coeff(ring, i), &other.coeff(ring, i)))
            .collect();
        Self::new(ring, coeffs)
    }

    pub fn neg<R: Ring<Scalar = S>>(&self, ring: &R) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| ring.neg(c)).collect(),
        }
    }

    pub fn mul<R: Ring<Scalar = S>>(&self, ring: &R, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![ring.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = ring.add(&coeffs[i + j], &ring.mul(a, b));
            }
        }
        Self::new(ring, coeffs)
    }

    pub fn scale<R: Ring<Scalar = S>>(&self, ring: &R, c: &S) -> Self {
        Self::new(ring, self.coeffs.iter().map(|a| ring.mul(a, c)).collect())
    }

    pub fn derivative<R: Ring<Scalar = S>>(&self, ring: &R) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| ring.mul(&ring.from_i64(i as i64), c))
            .collect();
        Self::new(ring, coeffs)
    }

    /// Applies a coefficient map, e.g. reduction modulo a prime.
    pub fn map<T, R2>(&self, ring: &R2, f: impl Fn(&S) -> T) -> UniPoly<T>
    where
        T: Clone + PartialEq + fmt::Debug,
        R2: Ring<Scalar = T>,
    {
        UniPoly::new(ring, self.coeffs.iter().map(f).collect())
    }

    /// Euclidean division over a field.
    pub fn div_rem<F: FieldOps<Scalar = S>>(
        &self,
        field: &F,
        divisor: &Self,
    ) -> Result<(Self, Self), PolyError> {
        let dd = divisor.degree().ok_or(PolyError::DivisionByZero)?;
        let lc_inv = field
            .inv(divisor.leading_coeff().unwrap())
            .ok_or(PolyError::DivisionByZero)?;
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&n| n >= dd) else {
            return Ok((Self::zero(), self.clone()));
        };
        let mut quot = vec![field.zero(); nd - dd + 1];
        for top in (dd..=nd).rev() {
            let c = field.mul(&rem[top], &lc_inv);
            if field.is_zero(&c) {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                let slot = &mut rem[top - dd + j];
                *slot = field.sub(slot, &field.mul(&c, dc));
            }
            quot[top - dd] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(field, quot), Self::new(field, rem)))
    }

    /// Quotient of an exact division; errors when the remainder is nonzero.
    pub fn div_exact<F: FieldOps<Scalar = S>>(
        &self,
        field: &F,
        divisor: &Self,
    ) -> Result<Self, PolyError> {
        let (q, r) = self.div_rem(field, divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(PolyError::InexactDivision)
        }
    }

    pub fn monic<F: FieldOps<Scalar = S>>(&self, field: &F) -> Self {
        match self.leading_coeff().and_then(|lc| field.inv(lc)) {
            Some(inv) => self.scale(field, &inv),
            None => self.clone(),
        }
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd<F: FieldOps<Scalar = S>>(&self, field: &F, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(field, &b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic(field)
    }

    /// `f / gcd(f, f')`: the product of the distinct irreducible factors of
    /// `f` (characteristic zero, or characteristic exceeding the degree).
    pub fn squarefree_part<F: FieldOps<Scalar = S>>(&self, field: &F) -> Self {
        if self.is_constant() {
            return self.clone();
        }
        let g = self.gcd(field, &self.derivative(field));
        self.div_exact(field, &g).expect("gcd divides").monic(field)
    }

    /// `base^e mod modulus`.
    pub fn pow_mod<F: FieldOps<Scalar = S>>(
        &self,
        field: &F,
        mut e: u64,
        modulus: &Self,
    ) -> Result<Self, PolyError> {
        let mut base = self.div_rem(field, modulus)?.1;
        let mut acc = Self::constant(field, field.one()).div_rem(field, modulus)?.1;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(field, &base).div_rem(field, modulus)?.1;
            }
            base = base.mul(field, &base).div_rem(field, modulus)?.1;
            e >>= 1;
        }
        Ok(acc)
    }
}

impl QPoly {
    /// Polynomial with integer coefficients, constant term first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(
            &Rationals,
            coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect(),
        )
    }

    /// Product of `(x - r)` over the given rational roots.
    pub fn from_roots(roots: &[BigRational]) -> Self {
        roots.iter().fold(Self::constant(&Rationals, BigRational::one()), |acc, r| {
            acc.mul(&Rationals, &Self::new(&Rationals, vec![-r.clone(), BigRational::one()]))
        })
    }

    /// The primitive integer polynomial with positive leading coefficient
    /// that is a rational multiple of `self`.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        use num_integer::Integer;
        if self.is_zero() {
            return Vec::new();
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().unwrap().is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        ints.into_iter().map(|c| c / &content * &sign).collect()
    }

    /// Reduction modulo the characteristic of `field`; `None` when a
    /// denominator is divisible by it.
    pub fn reduce<F: FiniteField>(&self, field: &F) -> Option<UniPoly<F::Elem>> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| field.from_rational(c))
            .collect::<Option<Vec<_>>>()?;
        Some(UniPoly::new(field, coeffs))
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let unit = abs.is_one();
            match (i, unit) {
                (0, _) => write!(f, "{abs}")?,
                (_, true) => {}
                (_, false) if abs.is_integer() => write!(f, "{abs}*")?,
                (_, false) => write!(f, "({abs})*")?,
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn arithmetic_and_division() {
        let f = QPoly::from_ints(&[-1, 0, 1]);
        let g = QPoly::from_ints(&[1, 1]);
        let (quot, rem) = f.div_rem(&Rationals, &g).unwrap();
        assert_eq!(quot, QPoly::from_ints(&[-1, 1]));
        assert!(rem.is_zero());
        assert_eq!(quot.mul(&Rationals, &g), f);
        assert_eq!(f.derivative(&Rationals), QPoly::from_ints(&[0, 2]));
        assert_eq!(f.eval(&Rationals, &q(3, 2)), q(5, 4));
        assert_eq!(QPoly::zero().degree(), None);
        assert_eq!(f.sub(&Rationals, &f), QPoly::zero());
    }

    #[test]
    fn gcd_and_squarefree() {
        let a = QPoly::from_ints(&[-1, 1]);
        let b = QPoly::from_ints(&[2, 1]);
        let f = a.mul(&Rationals, &a).mul(&Rationals, &b);
        assert_eq!(f.squarefree_part(&Rationals), a.mul(&Rationals, &b));
        assert_eq!(f.gcd(&Rationals, &a.mul(&Rationals, &a)), a.mul(&Rationals, &a));
    }

    #[test]
    fn primitive_integer_form() {
        let f = QPoly::new(&Rationals, vec![q(1, 2), q(-3, 4), q(-1, 6)]);
        let ints: Vec<i64> = f
            .primitive_integer()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect();
        assert_eq!(ints, vec![-6, 9, 2]);
    }

    #[test]
    fn display() {
        let f = QPoly::new(&Rationals, vec![q(1, 2), q(-2, 1), q(0, 1), q(1, 1)]);
        assert_eq!(f.to_string(), "x^3 - 2*x + 1/2");
        assert_eq!(QPoly::from_ints(&[0, -1]).to_string(), "-x");
    }

    #[test]
    fn pow_mod_over_finite_field() {
        let f = PrimeField::new(7).unwrap();
        let m = UniPoly::new(&f, vec![1, 0, 1]);
        // x^2 = -1, so x^7 = x * (x^2)^3 = -x.
        let r = UniPoly::x(&f).pow_mod(&f, 7, &m).unwrap();
        assert_eq!(r, UniPoly::new(&f, vec![0, 6]));
    }
}
