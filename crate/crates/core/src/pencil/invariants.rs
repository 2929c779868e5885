use num_rational::BigRational;
use num_traits::Zero;

use super::{delta_polys, Pencil};
use crate::field::{Rationals, Ring};
use crate::polyalg::{discriminant, resultant_with_degrees, QPoly, UniPoly};

/// The 2x2 minors `mu(i, j) = a_i b_j - a_j b_i` of the coefficient matrix,
/// over any ring. `mu(j, i) = -mu(i, j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Minors<S> {
    m: [[S; 4]; 4],
}

/// Coefficients of the conic `A s1^2 + B s1 s2 + C s2^2 + D s1 + E s2 + F`
/// obtained by writing `Delta~` in the symmetric functions `s1 = x1 + x2`,
/// `s2 = x1 x2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConicCoefficients<S> {
    pub a: S,
    pub b: S,
    pub c: S,
    pub d: S,
    pub e: S,
    pub f: S,
}

impl<S: Clone + PartialEq + std::fmt::Debug> Minors<S> {
    pub fn new<R: Ring<Scalar = S>>(ring: &R, a: &[S; 4], b: &[S; 4]) -> Self {
        let m = std::array::from_fn(|i| {
            std::array::from_fn(|j| ring.sub(&ring.mul(&a[i], &b[j]), &ring.mul(&a[j], &b[i])))
        });
        Self { m }
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.m[i][j]
    }

    pub fn all_zero<R: Ring<Scalar = S>>(&self, ring: &R) -> bool {
        self.m.iter().flatten().all(|v| ring.is_zero(v))
    }

    /// `d = mu13^2 - 4 mu03 mu23`.
    pub fn d<R: Ring<Scalar = S>>(&self, ring: &R) -> S {
        let mu = |i, j| self.get(i, j).clone();
        ring.sub(
            &ring.mul(&mu(1, 3), &mu(1, 3)),
            &ring.mul(&ring.from_i64(4), &ring.mul(&mu(0, 3), &mu(2, 3))),
        )
    }

    /// `Res(P, Q)` for `P, Q` of formal degree 3, as a polynomial in the
    /// minors.
    pub fn resultant_formula<R: Ring<Scalar = S>>(&self, ring: &R) -> S {
        let mu = |i, j| self.get(i, j).clone();
        let k = |n| ring.from_i64(n);
        let (m01, m02, m03, m12, m13, m23) = (mu(0, 1), mu(0, 2), mu(0, 3), mu(1, 2), mu(1, 3), mu(2, 3));
        let m03sq = ring.mul(&m03, &m03);
        let t1 = ring.neg(&ring.mul(&m03sq, &m03));
        let t2 = ring.mul(&m12, &m03sq);
        let t3 = ring.neg(&ring.mul(&m01, &ring.mul(&m13, &m13)));
        let inner = ring.sub(
            &ring.mul(&m01, &ring.add(&ring.mul(&k(3), &m03), &m12)),
            &ring.mul(&m02, &m02),
        );
        let t4 = ring.mul(&inner, &m23);
        ring.add(&ring.add(&t1, &t2), &ring.add(&t3, &t4))
    }

    /// The cubic scalar whose vanishing defines condition `C3`:
    /// `mu12^3 + 27 mu01 mu13^2 + 27 (mu02^2 - mu01 mu12) mu23
    ///  - 9 mu03 (mu12^2 + 9 mu01 mu23)`.
    pub fn c3_scalar<R: Ring<Scalar = S>>(&self, ring: &R) -> S {
        let mu = |i, j| self.get(i, j).clone();
        let k = |n| ring.from_i64(n);
        let (m01, m02, m03, m12, m13, m23) = (mu(0, 1), mu(0, 2), mu(0, 3), mu(1, 2), mu(1, 3), mu(2, 3));
        let t1 = ring.mul(&m12, &ring.mul(&m12, &m12));
        let t2 = ring.mul(&k(27), &ring.mul(&m01, &ring.mul(&m13, &m13)));
        let t3 = ring.mul(
            &k(27),
            &ring.mul(&ring.sub(&ring.mul(&m02, &m02), &ring.mul(&m01, &m12)), &m23),
        );
        let t4 = ring.mul(
            &ring.mul(&k(9), &m03),
            &ring.add(&ring.mul(&m12, &m12), &ring.mul(&k(9), &ring.mul(&m01, &m23))),
        );
        ring.sub(&ring.add(&ring.add(&t1, &t2), &t3), &t4)
    }

    /// `S(x) = Delta~(x, x)` from the closed form
    /// `mu32 x^4 + 2 mu31 x^3 + (mu21 + 3 mu30) x^2 + 2 mu20 x + mu10`.
    pub fn s_closed_form<R: Ring<Scalar = S>>(&self, ring: &R) -> UniPoly<S> {
        let mu = |i, j| self.get(i, j).clone();
        let two = ring.from_i64(2);
        let three = ring.from_i64(3);
        UniPoly::new(
            ring,
            vec![
                mu(1, 0),
                ring.mul(&two, &mu(2, 0)),
                ring.add(&mu(2, 1), &ring.mul(&three, &mu(3, 0))),
                ring.mul(&two, &mu(3, 1)),
                mu(3, 2),
            ],
        )
    }

    /// `T(x) = -mu03 - mu13 x - mu23 x^2`.
    pub fn t_poly<R: Ring<Scalar = S>>(&self, ring: &R) -> UniPoly<S> {
        UniPoly::new(
            ring,
            vec![
                ring.neg(self.get(0, 3)),
                ring.neg(self.get(1, 3)),
                ring.neg(self.get(2, 3)),
            ],
        )
    }

    /// The cubic `S~(x) = s0 + s1 x + s2 x^2 + s3 x^3` whose resultant with
    /// `T` is `-mu23^3 Res(P, Q)^2`.
    pub fn s_tilde<R: Ring<Scalar = S>>(&self, ring: &R) -> UniPoly<S> {
        let mu = |i, j| self.get(i, j).clone();
        let k = |n| ring.from_i64(n);
        let mul = |a: &S, b: &S| ring.mul(a, b);
        let (m01, m02, m03, m12, m13, m23) = (mu(0, 1), mu(0, 2), mu(0, 3), mu(1, 2), mu(1, 3), mu(2, 3));
        let m03sq = mul(&m03, &m03);
        let m13sq = mul(&m13, &m13);
        let m23sq = mul(&m23, &m23);
        let s0 = ring.add(
            &mul(&ring.sub(&mul(&k(2), &m03), &m12), &m03sq),
            &mul(&ring.sub(&mul(&m02, &m02), &mul(&k(3), &mul(&m01, &m03))), &m23),
        );
        let s1 = ring.sub(
            &ring.sub(
                &mul(&k(3), &mul(&m13, &m03sq)),
                &mul(&m01, &mul(&m13, &m23)),
            ),
            &mul(
                &mul(&k(2), &m02),
                &ring.sub(&m13sq, &mul(&m12, &m23)),
            ),
        );
        let s2 = ring.add(
            &ring.sub(
                &ring.neg(&mul(&m12, &m13sq)),
                &mul(&k(4), &mul(&m01, &m23sq)),
            ),
            &mul(
                &ring.add(&ring.add(&mul(&k(3), &m03sq), &mul(&m12, &m12)), &mul(&m02, &m13)),
                &m23,
            ),
        );
        let s3 = ring.sub(
            &ring.add(
                &ring.neg(&mul(&m13, &m13sq)),
                &mul(&mul(&m23, &ring.sub(&m12, &mul(&k(3), &mu(3, 0)))), &m13),
            ),
            &mul(&k(2), &mul(&m02, &m23sq)),
        );
        UniPoly::new(ring, vec![s0, s1, s2, s3])
    }

    /// `Delta~` in the coordinates `s1 = x1 + x2`, `s2 = x1 x2`.
    pub fn conic<R: Ring<Scalar = S>>(&self, ring: &R) -> ConicCoefficients<S> {
        let mu = |i, j| self.get(i, j).clone();
        ConicCoefficients {
            a: mu(3, 0),
            b: mu(3, 1),
            c: mu(3, 2),
            d: mu(2, 0),
            e: ring.add(&ring.add(&ring.mul(&ring.from_i64(2), &mu(0, 3)), &mu(2, 1)), &mu(3, 0)),
            f: mu(1, 0),
        }
    }
}

impl<S: Clone + PartialEq + std::fmt::Debug> ConicCoefficients<S> {
    /// `4ACF + BDE - AE^2 - CD^2 - FB^2`, four times the determinant of the
    /// symmetric matrix of the homogenised conic; nonzero iff the conic is
    /// nondegenerate. For the conic of a pencil it equals `-Res(P, Q)`.
    pub fn determinant_form<R: Ring<Scalar = S>>(&self, ring: &R) -> S {
        let m = |x: &S, y: &S| ring.mul(x, y);
        let four_acf = m(&ring.from_i64(4), &m(&self.a, &m(&self.c, &self.f)));
        let bde = m(&self.b, &m(&self.d, &self.e));
        let ae2 = m(&self.a, &m(&self.e, &self.e));
        let cd2 = m(&self.c, &m(&self.d, &self.d));
        let fb2 = m(&self.f, &m(&self.b, &self.b));
        ring.sub(&ring.sub(&ring.sub(&ring.add(&four_acf, &bde), &ae2), &cd2), &fb2)
    }

    /// Iterated discriminant `disc_s1(disc_s2(conic))`, which equals
    /// `-16 C (4ACF + BDE - AE^2 - CD^2 - FB^2)`. For the conic of a pencil
    /// this is `-16 mu23 Res(P, Q)`.
    pub fn discriminant<R: Ring<Scalar = S>>(&self, ring: &R) -> S {
        let scale = ring.mul(&ring.from_i64(-16), &self.c);
        ring.mul(&scale, &self.determinant_form(ring))
    }

    /// Evaluates the dehomogenised conic at `(s1, s2)`.
    pub fn eval<R: Ring<Scalar = S>>(&self, ring: &R, s1: &S, s2: &S) -> S {
        let m = |x: &S, y: &S| ring.mul(x, y);
        let terms = [
            m(&self.a, &m(s1, s1)),
            m(&self.b, &m(s1, s2)),
            m(&self.c, &m(s2, s2)),
            m(&self.d, s1),
            m(&self.e, s2),
            self.f.clone(),
        ];
        terms.iter().fold(ring.zero(), |acc, t| ring.add(&acc, t))
    }
}

/// Exact invariants of a pencil over `Q`.
#[derive(Debug, Clone)]
pub struct PencilInvariants {
    pub minors: Minors<BigRational>,
    /// `mu13^2 - 4 mu03 mu23`.
    pub d: BigRational,
    /// `Res(P, Q)` from the Sylvester determinant in formal degree 3.
    pub resultant: BigRational,
    pub t: QPoly,
    pub s_tilde: QPoly,
    /// `S` from the closed form in the minors.
    pub s: QPoly,
    /// `S` as the diagonal of `Delta~`.
    pub s_diagonal: QPoly,
    /// `None` when `S` is constant.
    pub disc_s: Option<BigRational>,
    pub disc_p: Option<BigRational>,
    pub disc_q: Option<BigRational>,
    pub c3_scalar: BigRational,
    pub conic: ConicCoefficients<BigRational>,
    pub conic_discriminant: BigRational,
    /// `Res(S~, T)` in formal degrees `(3, 2)`, computed when `mu23 != 0`.
    pub resultant_st: Option<BigRational>,
}

impl PencilInvariants {
    pub fn mu(&self, i: usize, j: usize) -> &BigRational {
        self.minors.get(i, j)
    }

    /// `Res(S~, T) = -mu23^3 Res(P, Q)^2`, when `mu23 != 0`.
    pub fn resultant_identity_holds(&self) -> Option<bool> {
        let lhs = self.resultant_st.as_ref()?;
        let m23 = self.mu(2, 3);
        let rhs = -(m23 * m23 * m23) * &self.resultant * &self.resultant;
        Some(*lhs == rhs)
    }

    /// The two computations of `S` agree.
    pub fn s_forms_agree(&self) -> bool {
        self.s == self.s_diagonal
    }

    /// Conic discriminant equals `-16 mu23 Res(P, Q)`.
    pub fn conic_identity_holds(&self) -> bool {
        let rhs = BigRational::from_integer((-16).into()) * self.mu(2, 3) * &self.resultant;
        self.conic_discriminant == rhs
    }
}

fn disc_if_nonconstant(f: &QPoly) -> Option<BigRational> {
    discriminant(&Rationals, f).ok()
}

/// Computes every invariant exactly over `Q`.
pub fn invariants(pencil: &Pencil) -> PencilInvariants {
    let q = Rationals;
    let minors = Minors::new(&q, pencil.a(), pencil.b());
    let (p_poly, q_poly) = (pencil.p_poly(), pencil.q_poly());
    let resultant = resultant_with_degrees(&q, &p_poly, 3, &q_poly, 3).expect("P, Q nonzero");
    let t = minors.t_poly(&q);
    let s_tilde = minors.s_tilde(&q);
    let resultant_st = (!minors.get(2, 3).is_zero())
        .then(|| resultant_with_degrees(&q, &s_tilde, 3, &t, 2).expect("T nonzero"));
    let s = minors.s_closed_form(&q);
    let conic = minors.conic(&q);
    PencilInvariants {
        d: minors.d(&q),
        resultant,
        s_diagonal: delta_polys(pencil).s,
        disc_s: disc_if_nonconstant(&s),
        disc_p: disc_if_nonconstant(&p_poly),
        disc_q: disc_if_nonconstant(&q_poly),
        c3_scalar: minors.c3_scalar(&q),
        conic_discriminant: conic.discriminant(&q),
        conic,
        t,
        s_tilde,
        s,
        resultant_st,
        minors,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example() {
        let pencil = Pencil::from_ints([0, 1, 0, 0], [1, 0, 0, 1]).unwrap();
        let inv = invariants(&pencil);
        assert!(inv.s_forms_agree());
        assert_eq!(inv.resultant, inv.minors.resultant_formula(&Rationals));
        assert_eq!(inv.resultant, BigRational::from_integer(1.into()));
        assert_eq!(inv.resultant_identity_holds(), None);
        assert!(inv.conic_identity_holds());
    }

    #[test]
    fn proportional_minors_vanish() {
        let pencil = Pencil::from_ints([1, 2, 3, 4], [1, 2, 3, 4]).unwrap();
        let inv = invariants(&pencil);
        assert!(inv.minors.all_zero(&Rationals));
        assert!(inv.resultant.is_zero());
    }

    #[test]
    fn resultant_identity_on_sample() {
        let pencil = Pencil::from_ints([1, -2, 3, 1], [2, 1, -1, 3]).unwrap();
        let inv = invariants(&pencil);
        assert_eq!(inv.resultant_identity_holds(), Some(true));
        assert!(inv.conic_identity_holds());
        assert!(inv.s_forms_agree());
    }
}
