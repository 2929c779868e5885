//! Closed form of `sum_t chi(a t^2 + b t + c)`.

use super::{FieldError, FiniteField};

/// `sum_{t in F_q} chi(alpha t^2 + beta t + gamma)` from the four-branch table
/// indexed by `alpha = 0` and `disc = 4 alpha gamma - beta^2 = 0`:
///
/// | `alpha` | `disc` | value              |
/// |---------|--------|--------------------|
/// | `!= 0`  | `!= 0` | `-chi(alpha)`      |
/// | `!= 0`  | `= 0`  | `(q-1) chi(alpha)` |
/// | `= 0`   | `!= 0` | `-chi(alpha) = 0`  |
/// | `= 0`   | `= 0`  | `q chi(gamma)`     |
///
/// With `alpha = 0` and `disc != 0` the summand is a non-constant linear
/// polynomial, which takes every value once, so the sum is indeed `0`.
pub fn char_sum_quadratic<F: FiniteField>(
    field: &F,
    alpha: &F::Elem,
    beta: &F::Elem,
    gamma: &F::Elem,
) -> Result<i64, FieldError> {
    if !field.is_odd() {
        return Err(FieldError::EvenCharacteristic);
    }
    let q = field.order() as i64;
    let four_ac = field.mul(&field.from_u64(4), &field.mul(alpha, gamma));
    let disc = field.sub(&four_ac, &field.mul(beta, beta));
    let chi_a = field.chi(alpha) as i64;
    Ok(match (field.is_zero(alpha), field.is_zero(&disc)) {
        (false, false) => -chi_a,
        (false, true) => (q - 1) * chi_a,
        (true, false) => -chi_a,
        (true, true) => q * field.chi(gamma) as i64,
    })
}
