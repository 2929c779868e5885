//! Exact running sums of rationals with small prime-sized denominators.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// `num / den` kept unreduced except for the denominators' common factors,
/// so each addition costs a linear pass over the digits instead of a gcd.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactSum {
    num: BigInt,
    den: BigInt,
}

impl Default for ExactSum {
    fn default() -> Self {
        Self {
            num: BigInt::zero(),
            den: BigInt::one(),
        }
    }
}

impl ExactSum {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `n / d`, `d > 0`.
    pub fn add(&mut self, n: impl Into<BigInt>, d: u64) {
        assert!(d > 0, "denominator must be positive");
        let r = (&self.den % d).to_u64().expect("remainder below d");
        let g = r.gcd(&d);
        let m = d / g;
        let den_over_g = &self.den / g;
        self.num = &self.num * m + n.into() * den_over_g;
        self.den *= m;
    }

    pub fn add_integer(&mut self, n: impl Into<BigInt>) {
        self.num += n.into() * &self.den;
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.num.clone(), self.den.clone())
    }

    /// Nearest `f64` to `self / count`.
    pub fn mean_f64(&self, count: u64) -> f64 {
        ratio_to_f64(&self.num, &(&self.den * count))
    }
}

/// `num / den` as an `f64`, accurate for arbitrarily large operands.
pub fn ratio_to_f64(num: &BigInt, den: &BigInt) -> f64 {
    if num.is_zero() {
        return 0.0;
    }
    let negative = num.is_negative() != den.is_negative();
    let (n, d) = (num.abs(), den.abs());
    // Scale so the integer quotient carries about 64 significant bits.
    let shift = d.bits() as i64 - n.bits() as i64 + 64;
    let quotient = if shift >= 0 {
        (n << shift as u64) / d
    } else {
        n / (d << (-shift) as u64)
    };
    let value = quotient.to_f64().unwrap_or(f64::INFINITY) * 2f64.powi(-shift as i32);
    if negative {
        -value
    } else {
        value
    }
}

/// Decimal rendering with `digits` significant digits, no exponent.
pub fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x.is_finite() { "0".into() } else { x.to_string() };
    }
    let magnitude = x.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    // Rounding can carry into a new leading digit (9.99.. -> 10.0..).
    let rounded: f64 = s.parse().unwrap_or(x);
    if rounded != 0.0 && rounded.abs().log10().floor() as i64 > magnitude && decimals > 0 {
        return format!("{x:.prec$}", prec = decimals - 1);
    }
    s
}
