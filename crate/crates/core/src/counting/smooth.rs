//! Counts on the smooth models of `Delta~` and of its double cover
//! `y^2 = W(x1) W(x2)`, and on the quotient conic.
//!
//! `W` is `P` when `deg P = 3` in the reduction and `Q` otherwise. When `W`
//! has a double root `a` (simple root `b`) the cover is replaced by the
//! birational model `y^2 = (x1 - b)(x2 - b)`.

use serde::Serialize;

use super::fast::{assemble, delta_tilde_scan, horner, p_weight, pointwise, PreparedPencil, Weight};
use super::{require_odd, CountError};
use crate::field::FiniteField;
use crate::pencil::{classify_over, ConicCoefficients, Minors, Pencil};

/// Smooth-model counts at a typical reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SmoothCounts {
    /// Smooth model of `Delta~`: affine zeros plus the points over its two
    /// nodes at infinity.
    pub delta_bar: u64,
    /// Smooth model of the double cover of `Delta~`.
    pub c_bar: u64,
    /// `#C2 = #C_bar - #Delta_bar + q + 1`.
    pub c2: u64,
    /// `d = q + 1 - #C2 = -(#C_bar - #Delta_bar)`.
    pub d: i64,
    /// `#C_bar - #Delta_bar` from the affine counts and the node sum alone,
    /// with no contribution from infinity.
    pub affine_difference: i64,
    /// `phi(mu13^2 - 4 mu03 mu23)`.
    pub phi_d: i32,
}

/// Everything the smooth path computes, including the fast-formula counts
/// from the same pass.
#[derive(Debug, Clone)]
pub(crate) struct SmoothPass {
    pub smooth: SmoothCounts,
    pub m2_tilde: i64,
    pub a_inf: i64,
    pub n_s: u64,
}

fn not_typical<F: FiniteField>(field: &F, label: String) -> CountError {
    CountError::NotTypical {
        q: field.order(),
        label,
    }
}

pub(crate) fn smooth_pass<F: FiniteField>(
    field: &F,
    prepared: &PreparedPencil,
) -> Result<SmoothPass, CountError> {
    require_odd(field)?;
    let r = prepared.reduce(field)?;
    let label = classify_over(field, &r.a, &r.b).map_err(|e| not_typical(field, e.to_string()))?;
    if !label.typical {
        return Err(not_typical(field, label.to_string()));
    }
    let point = pointwise(field, &r);
    let (w, other, roots, total) = if field.is_zero(&r.a[3]) {
        (r.b, r.a, &point.q_roots, point.sum_phi_q)
    } else {
        (r.a, r.b, &point.p_roots, point.sum_phi_p)
    };
    let dw = [
        w[1],
        field.mul(&field.from_i64(2), &w[2]),
        field.mul(&field.from_i64(3), &w[3]),
    ];
    let other_at = |x: &F::Elem| horner(field, &other, x);
    let double: Vec<_> = roots
        .iter()
        .filter(|x| field.is_zero(&horner(field, &dw, x)))
        .copied()
        .collect();
    let (weight, node_sum) = match (double.as_slice(), roots.len()) {
        ([], _) => {
            let mut node = 0i64;
            for (i, r1) in roots.iter().enumerate() {
                for (j, r2) in roots.iter().enumerate() {
                    if i != j {
                        node += i64::from(field.chi(&field.mul(&other_at(r1), &other_at(r2))));
                    }
                }
            }
            (Weight { coeffs: w, total }, node)
        }
        ([a], 2) => {
            let b = *roots.iter().find(|x| *x != a).expect("two distinct roots");
            let linear = [field.neg(&b), field.one(), field.zero(), field.zero()];
            let node = 2 * i64::from(field.chi(&field.mul(&other_at(a), &other_at(&b))));
            (Weight { coeffs: linear, total: 0 }, node)
        }
        _ => return Err(not_typical(field, "W has a triple root".into())),
    };
    let pw = p_weight::<F>(&r, &point);
    let (zeros, sums) = delta_tilde_scan(field, &r, &[pw, weight]);
    let minors = Minors::new(field, &r.a, &r.b);
    let phi_d = field.chi(&minors.d(field));
    let infinity = 2 * (1 + phi_d) as u64;
    let c_bar_affine = (zeros as i64 + sums[1] + node_sum) as u64;
    let affine_difference = c_bar_affine as i64 - zeros as i64;
    let delta_bar = zeros + infinity;
    let c_bar = c_bar_affine + infinity;
    let q = field.order();
    let c2 = c_bar + q + 1 - delta_bar;
    let fc = assemble(field, point, zeros, sums[0]);
    Ok(SmoothPass {
        smooth: SmoothCounts {
            delta_bar,
            c_bar,
            c2,
            d: (q + 1) as i64 - c2 as i64,
            affine_difference,
            phi_d,
        },
        m2_tilde: fc.m2_tilde,
        a_inf: fc.a_inf,
        n_s: fc.side.s,
    })
}

/// `(#Delta_bar, #C_bar, #C2, d)` at a typical reduction.
pub fn smooth_counts<F: FiniteField>(pencil: &Pencil, field: &F) -> Result<SmoothCounts, CountError> {
    Ok(smooth_pass(field, &PreparedPencil::new(pencil))?.smooth)
}

/// Projective points of `A s1^2 + B s1 s2 + C s2^2 + D s1 s0 + E s2 s0 + F s0^2`.
pub fn conic_point_count<F: FiniteField>(field: &F, conic: &ConicCoefficients<F::Elem>) -> u64 {
    let q = field.order();
    // Roots of a t^2 + b t + c in F_q, or q when the polynomial vanishes.
    let quadratic_roots = |a: &F::Elem, b: &F::Elem, c: &F::Elem| -> u64 {
        if !field.is_zero(a) {
            let disc = field.sub(&field.mul(b, b), &field.mul(&field.from_i64(4), &field.mul(a, c)));
            (1 + field.chi(&disc)) as u64
        } else if !field.is_zero(b) {
            1
        } else if field.is_zero(c) {
            q
        } else {
            0
        }
    };
    let affine: u64 = field
        .elements()
        .map(|s1| {
            let lin = field.add(&field.mul(&conic.b, &s1), &conic.e);
            let cst = field.add(
                &field.mul(&s1, &field.add(&field.mul(&conic.a, &s1), &conic.d)),
                &conic.f,
            );
            quadratic_roots(&conic.c, &lin, &cst)
        })
        .sum();
    // s0 = 0: (s1 : 1) with A s1^2 + B s1 + C = 0, and (1 : 0) when A = 0.
    let at_infinity = quadratic_roots(&conic.a, &conic.b, &conic.c) + u64::from(field.is_zero(&conic.a));
    affine + at_infinity
}

/// `#C4`, the projective points of the conic that `Delta~` defines in the
/// symmetric coordinates `s1 = x1 + x2`, `s2 = x1 x2`; a typical reduction
/// gives `q + 1`.
pub fn quotient_conic_count<F: FiniteField>(pencil: &Pencil, field: &F) -> Result<u64, CountError> {
    require_odd(field)?;
    let r = pencil.reduce_or_err(field)?;
    let label = classify_over(field, &r.a, &r.b).map_err(|e| not_typical(field, e.to_string()))?;
    if !label.typical {
        return Err(not_typical(field, label.to_string()));
    }
    let conic = Minors::new(field, &r.a, &r.b).conic(field);
    Ok(conic_point_count(field, &conic))
}

/// `#C_bar + 2 #C4 = #C1 + #C2 + #C3` with `#C1 = #Delta_bar` and
/// `#C3 = q + 1`.
pub fn quotient_identity_check<F: FiniteField>(pencil: &Pencil, field: &F) -> Result<bool, CountError> {
    let sc = smooth_counts(pencil, field)?;
    let c4 = quotient_conic_count(pencil, field)?;
    let q = field.order();
    Ok(sc.c_bar + 2 * c4 == sc.delta_bar + sc.c2 + q + 1)
}
