//! The `O(q)` pass over the zeros of `Delta~`.
//!
//! For each `x2` the cofactor `Delta~(x1, x2) = A x1^2 + B x1 + C` is a
//! polynomial of degree at most 2 in `x1`. Its roots are kept in homogeneous
//! form `(u, v)` with `x1 = u / v`, so that a character value
//! `phi(w(x1))` for a cubic `w` is read off as `phi(w^(u, v) v)` without any
//! inversion.

use num_rational::BigRational;

use super::{require_odd, CountError};
use crate::field::FiniteField;
use crate::pencil::{classify, delta_polys, CaseLabel, Pencil, PencilError};
use crate::polyalg::{BiPoly, QPoly};

/// Counts on the discriminant side.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DeltaSide {
    /// Affine zeros of `Delta = P(x1) Q(x2) - P(x2) Q(x1)`.
    pub delta: u64,
    /// Affine zeros of `Delta~ = Delta / (x1 - x2)`.
    pub delta_tilde: u64,
    /// Zeros of `S(x) = Delta~(x, x)`.
    pub s: u64,
    /// Zeros of `P`.
    pub p: u64,
    /// Common zeros of `P` and `S`.
    pub p_and_s: u64,
}

/// A pencil together with the rational polynomials every pass reduces.
#[derive(Debug, Clone)]
pub struct PreparedPencil {
    pencil: Pencil,
    delta_tilde: BiPoly<BigRational>,
    s: QPoly,
    label: Result<CaseLabel, PencilError>,
}

impl PreparedPencil {
    pub fn new(pencil: &Pencil) -> Self {
        let dp = delta_polys(pencil);
        Self {
            pencil: pencil.clone(),
            delta_tilde: dp.delta_tilde,
            s: dp.s,
            label: classify(pencil),
        }
    }

    pub fn pencil(&self) -> &Pencil {
        &self.pencil
    }

    /// `S(x) = Delta~(x, x)` over `Q`.
    pub fn s(&self) -> &QPoly {
        &self.s
    }

    /// Classification over `Q`.
    pub fn label(&self) -> &Result<CaseLabel, PencilError> {
        &self.label
    }

    pub(crate) fn reduce<F: FiniteField>(&self, field: &F) -> Result<Reduced<F::Elem>, CountError> {
        let err = || PencilError::Reduction {
            p: field.characteristic(),
        };
        let r = self.pencil.reduce(field).ok_or_else(err)?;
        let mut dt = [[field.zero(); 3]; 3];
        for (i, row) in dt.iter_mut().enumerate() {
            for (j, c) in row.iter_mut().enumerate() {
                *c = field.from_rational(self.delta_tilde.coeff(i, j)).ok_or_else(err)?;
            }
        }
        let mut s = [field.zero(); 5];
        for (i, c) in self.s.coeffs().iter().enumerate() {
            s[i] = field.from_rational(c).ok_or_else(err)?;
        }
        Ok(Reduced {
            a: r.a,
            b: r.b,
            dt,
            s,
        })
    }
}

/// Reduced coefficients: `P`, `Q`, `Delta~` (`dt[i][j]` multiplies
/// `x1^i x2^j`) and `S`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Reduced<E> {
    pub a: [E; 4],
    pub b: [E; 4],
    pub dt: [[E; 3]; 3],
    pub s: [E; 5],
}

#[inline]
pub(crate) fn horner<F: FiniteField>(field: &F, c: &[F::Elem], x: &F::Elem) -> F::Elem {
    let mut acc = field.zero();
    for ci in c.iter().rev() {
        acc = field.add(&field.mul(&acc, x), ci);
    }
    acc
}

/// Pointwise data from a single sweep over `F_q`.
#[derive(Debug, Clone)]
pub(crate) struct Pointwise<E> {
    pub n_p: u64,
    pub n_s: u64,
    pub n_ps: u64,
    /// `sum_x phi(P(x))`, i.e. `-a_inf`.
    pub sum_phi_p: i64,
    pub sum_phi_q: i64,
    /// `sum over zeros of P of phi(Q(x))`.
    pub p_root_char: i64,
    /// Roots of `P` and `Q` in `F_q`, at most three each; empty when the
    /// polynomial reduces to zero.
    pub p_roots: Vec<E>,
    pub q_roots: Vec<E>,
}

pub(crate) fn pointwise<F: FiniteField>(field: &F, r: &Reduced<F::Elem>) -> Pointwise<F::Elem> {
    let p_zero = r.a.iter().all(|c| field.is_zero(c));
    let q_zero = r.b.iter().all(|c| field.is_zero(c));
    let mut out = Pointwise {
        n_p: 0,
        n_s: 0,
        n_ps: 0,
        sum_phi_p: 0,
        sum_phi_q: 0,
        p_root_char: 0,
        p_roots: Vec::new(),
        q_roots: Vec::new(),
    };
    for x in field.elements() {
        let pv = horner(field, &r.a, &x);
        let qv = horner(field, &r.b, &x);
        let on_s = field.is_zero(&horner(field, &r.s, &x));
        let on_p = field.is_zero(&pv);
        out.n_s += u64::from(on_s);
        out.sum_phi_p += i64::from(field.chi(&pv));
        let phi_q = i64::from(field.chi(&qv));
        out.sum_phi_q += phi_q;
        if on_p {
            out.n_p += 1;
            out.n_ps += u64::from(on_s);
            out.p_root_char += phi_q;
            if !p_zero {
                out.p_roots.push(x);
            }
        }
        if field.is_zero(&qv) && !q_zero {
            out.q_roots.push(x);
        }
    }
    out
}

/// A cubic weight `w` (formal degree 3) together with `sum_x phi(w(x))`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Weight<E> {
    pub coeffs: [E; 4],
    pub total: i64,
}

/// Zeros of `Delta~` and, for every weight, `sum phi(w(x1) w(x2))` over
/// those zeros.
pub(crate) fn delta_tilde_scan<F: FiniteField>(
    field: &F,
    r: &Reduced<F::Elem>,
    weights: &[Weight<F::Elem>],
) -> (u64, Vec<i64>) {
    let q = field.order();
    let two = field.from_i64(2);
    let four = field.from_i64(4);
    let mut zeros = 0u64;
    let mut sums = vec![0i64; weights.len()];
    let mut at_x2 = vec![0i64; weights.len()];
    // phi(w(u / v)) = phi(w^(u, v) v) for v != 0, w^ the degree-3 form.
    let weighted = |u: &F::Elem, v: &F::Elem, w: &Weight<F::Elem>| -> i64 {
        let u2 = field.mul(u, u);
        let v2 = field.mul(v, v);
        let hom = [
            field.mul(&w.coeffs[0], &field.mul(&v2, v)),
            field.mul(&w.coeffs[1], &field.mul(u, &v2)),
            field.mul(&w.coeffs[2], &field.mul(&u2, v)),
            field.mul(&w.coeffs[3], &field.mul(&u2, u)),
        ];
        let sum = hom.iter().fold(field.zero(), |acc, t| field.add(&acc, t));
        i64::from(field.chi(&field.mul(&sum, v)))
    };
    for x2 in field.elements() {
        let a = horner(field, &r.dt[2], &x2);
        let b = horner(field, &r.dt[1], &x2);
        let c = horner(field, &r.dt[0], &x2);
        for (slot, w) in at_x2.iter_mut().zip(weights) {
            *slot = i64::from(field.chi(&horner(field, &w.coeffs, &x2)));
        }
        let mut add_root = |u: F::Elem, v: F::Elem| {
            zeros += 1;
            for ((sum, w), wx2) in sums.iter_mut().zip(weights).zip(&at_x2) {
                if *wx2 != 0 {
                    *sum += wx2 * weighted(&u, &v, w);
                }
            }
        };
        if !field.is_zero(&a) {
            let disc = field.sub(&field.mul(&b, &b), &field.mul(&four, &field.mul(&a, &c)));
            let v = field.mul(&two, &a);
            let minus_b = field.neg(&b);
            if field.is_zero(&disc) {
                add_root(minus_b, v);
            } else if let Some(root) = field.sqrt(&disc) {
                add_root(field.add(&minus_b, &root), v);
                add_root(field.sub(&minus_b, &root), v);
            }
        } else if !field.is_zero(&b) {
            add_root(field.neg(&c), b);
        } else if field.is_zero(&c) {
            zeros += q;
            for ((sum, w), wx2) in sums.iter_mut().zip(weights).zip(&at_x2) {
                *sum += wx2 * w.total;
            }
        }
    }
    (zeros, sums)
}

/// Everything the fast formula needs from one pencil over one field.
#[derive(Debug, Clone)]
pub(crate) struct FastCounts {
    pub side: DeltaSide,
    pub c: u64,
    pub c_tilde: u64,
    pub a_inf: i64,
    pub m2_tilde: i64,
}

pub(crate) fn assemble<F: FiniteField>(
    field: &F,
    point: Pointwise<F::Elem>,
    delta_tilde: u64,
    p_weight_sum: i64,
) -> FastCounts {
    let q = field.order();
    let c_tilde = (delta_tilde as i64 + p_weight_sum) as u64;
    let side = DeltaSide {
        delta: q + delta_tilde - point.n_s,
        delta_tilde,
        s: point.n_s,
        p: point.n_p,
        p_and_s: point.n_ps,
    };
    // Diagonal: y^2 = P(x)^2 has 2 - [P(x) = 0] solutions; zeros of Delta~
    // on the diagonal are counted once.
    let c = c_tilde + (2 * q - point.n_p) - (2 * point.n_s - point.n_ps);
    let m2_tilde = q as i64 * (c as i64 - side.delta as i64 + point.p_root_char * point.p_root_char);
    FastCounts {
        a_inf: -point.sum_phi_p,
        side,
        c,
        c_tilde,
        m2_tilde,
    }
}

pub(crate) fn p_weight<F: FiniteField>(r: &Reduced<F::Elem>, point: &Pointwise<F::Elem>) -> Weight<F::Elem> {
    Weight {
        coeffs: r.a,
        total: point.sum_phi_p,
    }
}

pub(crate) fn fast_counts<F: FiniteField>(
    field: &F,
    prepared: &PreparedPencil,
) -> Result<FastCounts, CountError> {
    require_odd(field)?;
    let r = prepared.reduce(field)?;
    let point = pointwise(field, &r);
    let (zeros, sums) = delta_tilde_scan(field, &r, &[p_weight::<F>(&r, &point)]);
    Ok(assemble(field, point, zeros, sums[0]))
}

/// `(#Delta, #Delta~, #S, #P, #(P and S))` in `O(q)`.
pub fn count_delta_side<F: FiniteField>(pencil: &Pencil, field: &F) -> Result<DeltaSide, CountError> {
    Ok(fast_counts(field, &PreparedPencil::new(pencil))?.side)
}

/// `(#C, #C~)` in `O(q)`.
pub fn count_c_side<F: FiniteField>(pencil: &Pencil, field: &F) -> Result<(u64, u64), CountError> {
    let fc = fast_counts(field, &PreparedPencil::new(pencil))?;
    Ok((fc.c, fc.c_tilde))
}

/// `M~2 = q (-#Delta + #C + (sum over zeros of P of phi(Q))^2)` in `O(q)`.
pub fn second_moment_fast<F: FiniteField>(pencil: &Pencil, field: &F) -> Result<i64, CountError> {
    Ok(fast_counts(field, &PreparedPencil::new(pencil))?.m2_tilde)
}
