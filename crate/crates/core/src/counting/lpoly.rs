//! Zeta-function numerators reconstructed from point counts.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::CountError;
use crate::field::Rationals;
use crate::polyalg::sturm::{count_real_roots, count_real_roots_in, isolate_real_roots, refine_root};
use crate::polyalg::QPoly;

/// `L(T) = 1 + c1 T + ... + c_{2g} T^{2g}`, the numerator of the zeta
/// function of a genus-`g` curve over `F_q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LPolynomial {
    pub genus: usize,
    pub q: u64,
    /// `c0 = 1, c1, ..., c_{2g}`.
    pub coeffs: Vec<BigInt>,
}

fn rat(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Reconstructs `L` from `counts[i] = #C(F_{q^(i+1)})`, `i < g`, using
/// Newton's identities for `c1..cg` and the functional equation
/// `c_{2g-k} = q^(g-k) c_k` for the rest.
pub fn reconstruct_l(q: u64, counts: &[u64]) -> Result<LPolynomial, CountError> {
    let g = counts.len();
    if !(1..=3).contains(&g) || q < 2 {
        return Err(CountError::BadLInput(format!("genus {g}, q = {q}")));
    }
    let qb = BigInt::from(q);
    // Power sums of the Frobenius roots: s_i = q^i + 1 - N_i.
    let s: Vec<BigRational> = counts
        .iter()
        .enumerate()
        .map(|(i, n)| rat(qb.pow(i as u32 + 1) + 1 - BigInt::from(*n)))
        .collect();
    let mut c = vec![BigRational::one()];
    for k in 1..=g {
        let acc = (1..=k).fold(BigRational::zero(), |acc, i| acc + &s[i - 1] * &c[k - i]);
        c.push(-acc / rat(k as u64));
    }
    let mut coeffs = Vec::with_capacity(2 * g + 1);
    for (k, ck) in c.iter().enumerate() {
        if !ck.is_integer() {
            return Err(CountError::NonIntegral {
                index: k,
                value: ck.to_string(),
            });
        }
        coeffs.push(ck.to_integer());
    }
    for k in (0..g).rev() {
        coeffs.push(&coeffs[k] * qb.pow((g - k) as u32));
    }
    Ok(LPolynomial { genus: g, q, coeffs })
}

impl LPolynomial {
    /// `#C(F_{q^n}) = q^n + 1 - sum alpha_i^n`, from the power sums of the
    /// reciprocal roots.
    pub fn point_count(&self, n: u32) -> BigInt {
        let g = 2 * self.genus;
        // Newton's identities run forward: s_n = -n c_n - sum_{i<n} s_i c_{n-i}.
        let c = |k: usize| -> BigInt {
            if k <= g {
                self.coeffs[k].clone()
            } else {
                BigInt::zero()
            }
        };
        let mut s: Vec<BigInt> = Vec::new();
        for m in 1..=n as usize {
            let mut v = -BigInt::from(m) * c(m);
            for i in 1..m {
                v -= &s[i - 1] * c(m - i);
            }
            s.push(v);
        }
        BigInt::from(self.q).pow(n) + 1 - &s[n as usize - 1]
    }

    /// The real polynomial `h` of degree `g` with
    /// `T^(2g) L(1/T) = T^g h(T + q/T)`.
    pub fn real_weil_polynomial(&self) -> QPoly {
        let g = self.genus;
        let r = Rationals;
        let q = rat(self.q);
        // T^j + q^j T^-j as a polynomial in w = T + q/T.
        let mut u: Vec<QPoly> = vec![QPoly::constant(&r, rat(2)), QPoly::x(&r)];
        for j in 1..g {
            let next = QPoly::x(&r)
                .mul(&r, &u[j])
                .sub(&r, &u[j - 1].scale(&r, &q));
            u.push(next);
        }
        // Coefficient of T^j in T^-g * T^(2g) L(1/T) is c_{g-j}.
        let mut h = QPoly::constant(&r, BigRational::from_integer(self.coeffs[g].clone()));
        for j in 1..=g {
            let e = BigRational::from_integer(self.coeffs[g - j].clone());
            h = h.add(&r, &u[j].scale(&r, &e));
        }
        h
    }

    /// Exact Weil check: `h` has only real roots, all in `[-2 sqrt q, 2 sqrt q]`.
    pub fn satisfies_weil_exact(&self) -> bool {
        let h = self.real_weil_polynomial();
        let r = Rationals;
        let distinct = h.squarefree_part(&r).degree().unwrap_or(0);
        if count_real_roots(&h) != distinct {
            return false;
        }
        // h(w) = E(w^2) + w O(w^2); the roots of E(z)^2 - z O(z)^2 are the
        // squares of the roots of h.
        let coeffs = h.coeffs();
        let even: Vec<_> = coeffs.iter().step_by(2).cloned().collect();
        let odd: Vec<_> = coeffs.iter().skip(1).step_by(2).cloned().collect();
        let e = QPoly::new(&r, even);
        let o = QPoly::new(&r, odd);
        let g2 = e.mul(&r, &e).sub(&r, &QPoly::x(&r).mul(&r, &o.mul(&r, &o)));
        if g2.is_constant() {
            return true;
        }
        let bound = rat(4 * self.q);
        count_real_roots_in(&g2, &rat(-1), &bound) == count_real_roots(&g2)
    }

    /// Reciprocal roots `alpha` as `(re, im)` pairs, from the real roots `w`
    /// of `h` via `alpha^2 - w alpha + q = 0`. `None` when `h` has non-real
    /// roots.
    pub fn frobenius_roots(&self) -> Option<Vec<(f64, f64)>> {
        let h = self.real_weil_polynomial();
        let r = Rationals;
        let sf = h.squarefree_part(&r);
        let width = BigRational::new(BigInt::one(), BigInt::from(10u64).pow(30));
        let intervals = isolate_real_roots(&sf);
        if intervals.len() != sf.degree().unwrap_or(0) {
            return None;
        }
        let q = self.q as f64;
        let mut roots = Vec::new();
        for (a, b) in intervals {
            let (a, b) = refine_root(&sf, a, b, &width);
            let w = ((a + b) / rat(2)).to_f64()?;
            let disc = w * w - 4.0 * q;
            if disc <= 0.0 {
                let im = (-disc).sqrt() / 2.0;
                roots.push((w / 2.0, im));
                roots.push((w / 2.0, -im));
            } else {
                let sq = disc.sqrt();
                roots.push(((w + sq) / 2.0, 0.0));
                roots.push(((w - sq) / 2.0, 0.0));
            }
        }
        Some(roots)
    }

    /// `max | |alpha| - sqrt q |` over the reciprocal roots.
    pub fn max_modulus_deviation(&self) -> Option<f64> {
        let sqrt_q = (self.q as f64).sqrt();
        self.frobenius_roots().map(|roots| {
            roots
                .iter()
                .map(|(re, im)| (re.hypot(*im) - sqrt_q).abs())
                .fold(0.0, f64::max)
        })
    }

    /// Functional equation `c_{2g-k} = q^(g-k) c_k`.
    pub fn is_symmetric(&self) -> bool {
        let g = self.genus;
        let q = BigInt::from(self.q);
        (0..g).all(|k| self.coeffs[2 * g - k] == &self.coeffs[k] * q.pow((g - k) as u32))
    }

    /// Exact and numeric Weil checks together, numeric tolerance `tol`.
    pub fn is_weil(&self, tol: f64) -> bool {
        self.is_symmetric()
            && self.satisfies_weil_exact()
            && self.max_modulus_deviation().is_some_and(|d| d <= tol)
    }

    /// `|c1| <= 2g sqrt q`, the trace bound, exactly.
    pub fn trace_within_bound(&self) -> bool {
        let c1 = self.coeffs[1].abs();
        let g = BigInt::from(2 * self.genus as u64);
        &c1 * &c1 <= &g * &g * BigInt::from(self.q)
    }
}
