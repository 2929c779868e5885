//! Enumeration oracles. Everything here counts points directly from the
//! defining equations and shares no code with the fast path beyond field
//! arithmetic.

use super::{check_bound, CountError, DeltaSide, GRID_QMAX, THREEFOLD_QMAX};
use crate::field::FiniteField;
use crate::pencil::{delta_polys, Pencil, ReducedPencil};

/// `#{y : y^2 = v}` for every `v`, indexed by element index, built by
/// squaring every element.
struct SquareCounts(Vec<u8>);

impl SquareCounts {
    fn new<F: FiniteField>(field: &F) -> Self {
        let mut counts = vec![0u8; field.order() as usize];
        for y in field.elements() {
            counts[field.index_of(&field.mul(&y, &y)) as usize] += 1;
        }
        Self(counts)
    }

    fn get<F: FiniteField>(&self, field: &F, v: &F::Elem) -> u64 {
        u64::from(self.0[field.index_of(v) as usize])
    }
}

fn eval3<F: FiniteField>(field: &F, c: &[F::Elem; 4], x: &F::Elem) -> F::Elem {
    let mut acc = c[3];
    for i in (0..3).rev() {
        acc = field.add(&field.mul(&acc, x), &c[i]);
    }
    acc
}

/// Values of `P` and `Q` at every element, in index order.
fn tabulate<F: FiniteField>(field: &F, r: &ReducedPencil<F::Elem>) -> (Vec<F::Elem>, Vec<F::Elem>) {
    field
        .elements()
        .map(|x| (eval3(field, &r.a, &x), eval3(field, &r.b, &x)))
        .unzip()
}

/// `a_k = q - #{(x, y) : y^2 = P(x) k + Q(x)}`; `k = None` is the fiber at
/// infinity `y^2 = P(x)`.
pub fn trace_a<F: FiniteField>(
    pencil: &Pencil,
    field: &F,
    k: Option<F::Elem>,
) -> Result<i64, CountError> {
    let r = pencil.reduce_or_err(field)?;
    let sq = SquareCounts::new(field);
    let count: u64 = field
        .elements()
        .map(|x| {
            let p = eval3(field, &r.a, &x);
            let v = match &k {
                Some(k) => field.add(&field.mul(&p, k), &eval3(field, &r.b, &x)),
                None => p,
            };
            sq.get(field, &v)
        })
        .sum();
    Ok(field.order() as i64 - count as i64)
}

/// All traces: `a_k` for `k` in element-index order, then `a_inf`.
pub fn traces<F: FiniteField>(pencil: &Pencil, field: &F) -> Result<(Vec<i64>, i64), CountError> {
    let r = pencil.reduce_or_err(field)?;
    let sq = SquareCounts::new(field);
    let (pv, qv) = tabulate(field, &r);
    let q = field.order() as i64;
    let finite = field
        .elements()
        .map(|k| {
            let n: u64 = pv
                .iter()
                .zip(&qv)
                .map(|(p, b)| sq.get(field, &field.add(&field.mul(p, &k), b)))
                .sum();
            q - n as i64
        })
        .collect();
    let at_inf: u64 = pv.iter().map(|p| sq.get(field, p)).sum();
    Ok((finite, q - at_inf as i64))
}

/// `(M2, M~2)` from every trace, `O(q^2)`.
pub fn second_moment_brute<F: FiniteField>(
    pencil: &Pencil,
    field: &F,
) -> Result<(i64, i64), CountError> {
    let (finite, a_inf) = traces(pencil, field)?;
    let m2: i64 = finite.iter().map(|a| a * a).sum();
    Ok((m2, m2 + a_inf * a_inf))
}

/// `#M(F_q)` by enumerating the affine slice `(P1 k + Q1)(P2 k + Q2) = y^2`
/// over `(x1, x2, k)` and the slice at infinity `P1 P2 = y^2`.
pub fn threefold_count_brute<F: FiniteField>(pencil: &Pencil, field: &F) -> Result<u64, CountError> {
    check_bound(field.order(), THREEFOLD_QMAX)?;
    let r = pencil.reduce_or_err(field)?;
    let sq = SquareCounts::new(field);
    let (pv, qv) = tabulate(field, &r);
    let ks: Vec<F::Elem> = field.elements().collect();
    let mut total = 0u64;
    for (p1, q1) in pv.iter().zip(&qv) {
        for (p2, q2) in pv.iter().zip(&qv) {
            for k in &ks {
                let f1 = field.add(&field.mul(p1, k), q1);
                let f2 = field.add(&field.mul(p2, k), q2);
                total += sq.get(field, &field.mul(&f1, &f2));
            }
            total += sq.get(field, &field.mul(p1, p2));
        }
    }
    Ok(total)
}

/// `(#Delta, #Delta~, #S, #P, #(P and S))` by evaluating `Delta` and
/// `Delta~` on the whole grid, `O(q^2)`.
pub fn delta_side_grid<F: FiniteField>(pencil: &Pencil, field: &F) -> Result<DeltaSide, CountError> {
    check_bound(field.order(), GRID_QMAX)?;
    let r = pencil.reduce_or_err(field)?;
    let dt = delta_polys(pencil)
        .delta_tilde
        .reduce(field)
        .ok_or(crate::pencil::PencilError::Reduction {
            p: field.characteristic(),
        })?;
    let (pv, qv) = tabulate(field, &r);
    let xs: Vec<F::Elem> = field.elements().collect();
    let mut out = DeltaSide::default();
    for (i, x1) in xs.iter().enumerate() {
        for (j, x2) in xs.iter().enumerate() {
            let delta = field.sub(&field.mul(&pv[i], &qv[j]), &field.mul(&pv[j], &qv[i]));
            out.delta += u64::from(field.is_zero(&delta));
            out.delta_tilde += u64::from(field.is_zero(&dt.eval(field, x1, x2)));
        }
        let on_s = field.is_zero(&dt.eval(field, x1, x1));
        let on_p = field.is_zero(&pv[i]);
        out.s += u64::from(on_s);
        out.p += u64::from(on_p);
        out.p_and_s += u64::from(on_s && on_p);
    }
    Ok(out)
}

/// `(#C, #C~)`: points `(x1, x2, y)` with `P(x1) P(x2) = y^2` over the zeros
/// of `Delta` and of `Delta~` respectively, `O(q^2)`.
pub fn c_side_grid<F: FiniteField>(pencil: &Pencil, field: &F) -> Result<(u64, u64), CountError> {
    check_bound(field.order(), GRID_QMAX)?;
    let r = pencil.reduce_or_err(field)?;
    let dt = delta_polys(pencil)
        .delta_tilde
        .reduce(field)
        .ok_or(crate::pencil::PencilError::Reduction {
            p: field.characteristic(),
        })?;
    let sq = SquareCounts::new(field);
    let (pv, qv) = tabulate(field, &r);
    let xs: Vec<F::Elem> = field.elements().collect();
    let (mut c, mut c_tilde) = (0, 0);
    for (i, x1) in xs.iter().enumerate() {
        for (j, x2) in xs.iter().enumerate() {
            let fiber = sq.get(field, &field.mul(&pv[i], &pv[j]));
            let delta = field.sub(&field.mul(&pv[i], &qv[j]), &field.mul(&pv[j], &qv[i]));
            if field.is_zero(&delta) {
                c += fiber;
            }
            if field.is_zero(&dt.eval(field, x1, x2)) {
                c_tilde += fiber;
            }
        }
    }
    Ok((c, c_tilde))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Field, PrimeField};

    fn worked() -> Pencil {
        Pencil::from_ints([0, 1, 0, 0], [1, 0, 0, 1]).unwrap()
    }

    #[test]
    fn worked_example_traces() {
        let f3 = PrimeField::new(3).unwrap();
        let (finite, a_inf) = traces(&worked(), &f3).unwrap();
        assert_eq!(finite, vec![0, 0, -3]);
        assert_eq!(a_inf, 0);
        assert_eq!(trace_a(&worked(), &f3, Some(2)).unwrap(), -3);
        assert_eq!(trace_a(&worked(), &f3, None).unwrap(), 0);
        assert_eq!(second_moment_brute(&worked(), &f3).unwrap(), (9, 9));
        assert_eq!(threefold_count_brute(&worked(), &f3).unwrap(), 45);
    }

    #[test]
    fn worked_example_grid() {
        let f3 = PrimeField::new(3).unwrap();
        let ds = delta_side_grid(&worked(), &f3).unwrap();
        assert_eq!((ds.delta, ds.delta_tilde, ds.s, ds.p, ds.p_and_s), (3, 1, 1, 1, 0));
        assert_eq!(c_side_grid(&worked(), &f3).unwrap(), (5, 2));
    }

    #[test]
    fn even_characteristic_traces_vanish() {
        let pencil = Pencil::from_ints([1, 2, 0, 1], [3, 0, 1, 1]).unwrap();
        for k in 1..=3 {
            let f = Field::new(2, k).unwrap();
            assert_eq!(second_moment_brute(&pencil, &f).unwrap(), (0, 0));
            let q = f.order();
            assert_eq!(threefold_count_brute(&pencil, &f).unwrap(), q * q * q + q * q);
        }
    }

    #[test]
    fn oracle_bound_is_enforced() {
        let f = PrimeField::new(37).unwrap();
        assert!(matches!(
            threefold_count_brute(&worked(), &f),
            Err(CountError::OracleBound { q: 37, .. })
        ));
    }
}
