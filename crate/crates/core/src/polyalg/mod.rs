//! Exact polynomial arithmetic over `Q` and over finite fields.

mod bipoly;
mod rational_factor;
mod resultant;
pub mod sturm;
mod unipoly;

use thiserror::Error;

use crate::field::FiniteField;

pub use bipoly::{BiPoly, BIPOLY_MAX_DEG};
pub use rational_factor::{rational_irreducible_factor_count, rational_roots, rational_sqrt};
pub use resultant::{determinant, discriminant, resultant, resultant_with_degrees, sylvester_matrix};
pub use unipoly::{QPoly, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("resultant of two zero polynomials is undefined")]
    BothZero,
    #[error("operation needs a nonzero polynomial")]
    ZeroPolynomial,
    #[error("operation needs a nonconstant polynomial")]
    ConstantPolynomial,
    #[error("degree {0} outside the supported range 1..=4")]
    DegreeOutOfRange(usize),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("degree exceeds the supported bound")]
    DegreeOverflow,
}

/// Field orders below this bound count roots by evaluating at every element.
pub const ROOT_COUNT_EVAL_LIMIT: u64 = 1 << 16;

/// `#{a in F_q : f(a) = 0}` for nonzero `f`.
///
/// Evaluates at every element when `q < 2^16`, otherwise takes the degree of
/// `gcd(f, x^q - x)`.
pub fn count_distinct_roots<F: FiniteField>(
    field: &F,
    f: &UniPoly<F::Elem>,
) -> Result<usize, PolyError> {
    if field.order() < ROOT_COUNT_EVAL_LIMIT {
        count_roots_by_evaluation(field, f)
    } else {
        count_roots_by_gcd(field, f)
    }
}

pub fn count_roots_by_evaluation<F: FiniteField>(
    field: &F,
    f: &UniPoly<F::Elem>,
) -> Result<usize, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    Ok(field
        .elements()
        .filter(|x| field.is_zero(&f.eval(field, x)))
        .count())
}

pub fn count_roots_by_gcd<F: FiniteField>(
    field: &F,
    f: &UniPoly<F::Elem>,
) -> Result<usize, PolyError> {
    let deg = f.degree().ok_or(PolyError::ZeroPolynomial)?;
    if deg == 0 {
        return Ok(0);
    }
    let x = UniPoly::x(field);
    let xq = x.pow_mod(field, field.order(), f)?;
    let g = f.gcd(field, &xq.sub(field, &x));
    Ok(g.degree().unwrap_or(0))
}
