//! Finite-field arithmetic.
//!
//! Two concrete field types implement [`FiniteField`]:
//!
//! * [`Field`]: `F_{p^k}` for `k <= 3`, elements are coefficient vectors over
//!   `F_p` reduced modulo a fixed irreducible polynomial. The quadratic
//!   character is computed by exponentiation unless a residue table was
//!   requested.
//! * [`PrimeField`]: `F_p` with `u64` elements and, for `p < 2^20`, a
//!   precomputed residue/square-root table. This is the hot path for prime
//!   sweeps.
//!
//! Both share the [`Ring`]/[`FieldOps`] vocabulary used by the polynomial code,
//! which is also implemented by [`Rationals`].

mod arith;
mod charsum;
mod ext;
mod prime;

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub use arith::{is_prime, mod_inverse, mul_mod, odd_primes_up_to, pow_mod, primes_up_to};
pub use charsum::char_sum_quadratic;
pub use ext::{Field, FieldElement};
pub use prime::PrimeField;

/// Largest field order for which a residue table is built.
pub const RESIDUE_TABLE_LIMIT: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("unsupported extension degree {0} (supported: 1..=3)")]
    UnsupportedDegree(u32),
    #[error("field order {p}^{k} is too large")]
    TooLarge { p: u64, k: u32 },
    #[error("{0} is not a prime power p^k with k <= 3")]
    NotPrimePower(u64),
    #[error("the quadratic character is undefined in characteristic 2")]
    EvenCharacteristic,
}

/// `q = p^k` with `p` prime and `1 <= k <= 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimePower {
    p: u64,
    k: u32,
    q: u64,
}

impl PrimePower {
    /// Largest characteristic accepted; keeps every product of two reduced
    /// residues inside a `u64`.
    pub const MAX_P: u64 = u32::MAX as u64;

    pub fn new(p: u64, k: u32) -> Result<Self, FieldError> {
        if !(1..=3).contains(&k) {
            return Err(FieldError::UnsupportedDegree(k));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if p > Self::MAX_P {
            return Err(FieldError::TooLarge { p, k });
        }
        let q = p
            .checked_pow(k)
            .filter(|q| *q <= 1 << 40)
            .ok_or(FieldError::TooLarge { p, k })?;
        Ok(Self { p, k, q })
    }

    /// Decomposes a field order `q` as `p^k`.
    pub fn from_order(q: u64) -> Result<Self, FieldError> {
        for k in (1..=3u32).rev() {
            let root = (q as f64).powf(1.0 / k as f64).round() as u64;
            for p in root.saturating_sub(1)..=root + 1 {
                if p >= 2 && p.checked_pow(k) == Some(q) && is_prime(p) {
                    return Self::new(p, k);
                }
            }
        }
        Err(FieldError::NotPrimePower(q))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn is_odd(&self) -> bool {
        self.p != 2
    }
}

impl fmt::Display for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 1 {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}^{}", self.p, self.k)
        }
    }
}

/// A commutative ring with explicit context, so that finite-field elements do
/// not have to carry their modulus around.
pub trait Ring {
    type Scalar: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Scalar;
    fn one(&self) -> Self::Scalar;
    fn add(&self, a: &Self::Scalar, b: &Self::Scalar) -> Self::Scalar;
    fn sub(&self, a: &Self::Scalar, b: &Self::Scalar) -> Self::Scalar;
    fn mul(&self, a: &Self::Scalar, b: &Self::Scalar) -> Self::Scalar;
    fn neg(&self, a: &Self::Scalar) -> Self::Scalar;
    fn is_zero(&self, a: &Self::Scalar) -> bool;
    fn from_i64(&self, n: i64) -> Self::Scalar;
}

/// A [`Ring`] in which every nonzero element is invertible.
pub trait FieldOps: Ring {
    fn inv(&self, a: &Self::Scalar) -> Option<Self::Scalar>;

    fn div(&self, a: &Self::Scalar, b: &Self::Scalar) -> Option<Self::Scalar> {
        self.inv(b).map(|b| self.mul(a, &b))
    }
}

/// The field of rational numbers, with [`BigRational`] scalars.
#[derive(Debug, Clone, Copy, Default)]
pub struct Rationals;

impl Ring for Rationals {
    type Scalar = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }
}

impl FieldOps for Rationals {
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
}

/// A finite field `F_q`.
///
/// Elements are small `Copy` values; all operations go through the field so
/// that elements stay context free. Element indices run over `0..q` and give
/// a canonical enumeration order (base-`p` digits of the coefficient vector).
pub trait FiniteField: FieldOps<Scalar = <Self as FiniteField>::Elem> + Send + Sync {
    type Elem: Copy + Eq + Hash + fmt::Debug + Send + Sync;

    fn prime_power(&self) -> PrimePower;

    /// Element with the given index, `index < q`.
    fn element(&self, index: u64) -> Self::Elem;

    fn index_of(&self, x: &Self::Elem) -> u64;

    /// Image of the integer `n mod p` in the field.
    fn from_u64(&self, n: u64) -> Self::Elem;

    /// Quadratic character in odd characteristic (`0` at `0`).
    ///
    /// Callers must not use this in characteristic 2; see
    /// [`FiniteField::quadratic_character`] for the checked version.
    fn chi(&self, x: &Self::Elem) -> i32;

    /// A square root of `x`, choosing the root with the smaller index.
    fn sqrt(&self, x: &Self::Elem) -> Option<Self::Elem>;

    fn characteristic(&self) -> u64 {
        self.prime_power().p()
    }

    fn order(&self) -> u64 {
        self.prime_power().q()
    }

    fn degree(&self) -> u32 {
        self.prime_power().k()
    }

    fn is_odd(&self) -> bool {
        self.prime_power().is_odd()
    }

    fn elements(&self) -> impl Iterator<Item = Self::Elem> + '_ {
        (0..self.order()).map(move |i| self.element(i))
    }

    fn pow(&self, x: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = *x;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Reduction of a rational number; `None` when `p` divides the
    /// denominator.
    fn from_rational(&self, r: &BigRational) -> Option<Self::Elem> {
        let p = BigInt::from(self.characteristic());
        let den = r.denom().mod_floor(&p).to_u64().unwrap_or(0);
        if den == 0 {
            return None;
        }
        let num = r.numer().mod_floor(&p).to_u64().unwrap_or(0);
        let den_inv = mod_inverse(den, self.characteristic())?;
        Some(self.from_u64(mul_mod(num, den_inv, self.characteristic())))
    }

    /// Checked quadratic character.
    fn quadratic_character(&self, x: &Self::Elem) -> Result<i32, FieldError> {
        if !self.is_odd() {
            return Err(FieldError::EvenCharacteristic);
        }
        Ok(self.chi(x))
    }

    /// Number of `y` with `y^2 = x`: `1 + chi(x)` in odd characteristic and
    /// always `1` in characteristic 2.
    fn square_root_count(&self, x: &Self::Elem) -> u64 {
        if self.is_odd() {
            (1 + self.chi(x)) as u64
        } else {
            1
        }
    }
}

/// Reduces a rational to a signed residue class representative, used when
/// printing reduced invariants.
pub fn rational_mod_p(r: &BigRational, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let den = r.denom().mod_floor(&pb).to_u64()?;
    let inv = mod_inverse(den, p)?;
    let num = if r.numer().is_negative() {
        r.numer().mod_floor(&pb)
    } else {
        r.numer() % &pb
    };
    Some(mul_mod(num.to_u64()?, inv, p))
}
