//! Prime fields with `u64` elements.

use super::arith::{mod_inverse, mul_mod, pow_mod};
use super::ext::legendre;
use super::{FieldError, FieldOps, FiniteField, PrimePower, Ring, RESIDUE_TABLE_LIMIT};

/// `F_p` with elements stored as reduced residues in `0..p`.
///
/// For `p < 2^20` the constructor precomputes the quadratic character and a
/// canonical square root of every residue.
#[derive(Debug, Clone)]
pub struct PrimeField {
    pp: PrimePower,
    chi: Option<Vec<i8>>,
    root: Option<Vec<u32>>,
    /// `p - 1 = 2^s * t` and a non-residue, for Tonelli-Shanks.
    s: u32,
    t: u64,
    nonresidue: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        let mut f = Self::without_table(p)?;
        if f.pp.is_odd() && p < RESIDUE_TABLE_LIMIT {
            let mut chi = vec![-1i8; p as usize];
            let mut root = vec![0u32; p as usize];
            for y in 0..=(p / 2) {
                let sq = mul_mod(y, y, p) as usize;
                chi[sq] = 1;
                root[sq] = y as u32;
            }
            chi[0] = 0;
            f.chi = Some(chi);
            f.root = Some(root);
        }
        Ok(f)
    }

    /// Same field, computing characters by exponentiation.
    pub fn without_table(p: u64) -> Result<Self, FieldError> {
        let pp = PrimePower::new(p, 1)?;
        let (mut s, mut t, mut nonresidue) = (0, 0, 0);
        if pp.is_odd() {
            s = (p - 1).trailing_zeros();
            t = (p - 1) >> s;
            nonresidue = (2..p).find(|&a| legendre(a, p) == -1).unwrap();
        }
        Ok(Self {
            pp,
            chi: None,
            root: None,
            s,
            t,
            nonresidue,
        })
    }

    pub fn p(&self) -> u64 {
        self.pp.p()
    }

    pub fn has_residue_table(&self) -> bool {
        self.chi.is_some()
    }

    fn tonelli_shanks(&self, a: u64) -> Option<u64> {
        let p = self.pp.p();
        if a == 0 {
            return Some(0);
        }
        if legendre(a, p) != 1 {
            return None;
        }
        let mut m = self.s;
        let mut c = pow_mod(self.nonresidue, self.t, p);
        let mut t = pow_mod(a, self.t, p);
        let mut r = pow_mod(a, self.t.div_ceil(2), p);
        while t != 1 {
            let mut i = 0;
            let mut t2 = t;
            while t2 != 1 {
                t2 = mul_mod(t2, t2, p);
                i += 1;
            }
            let mut b = c;
            for _ in 0..(m - i - 1) {
                b = mul_mod(b, b, p);
            }
            m = i;
            c = mul_mod(b, b, p);
            t = mul_mod(t, c, p);
            r = mul_mod(r, b, p);
        }
        Some(r.min(p - r))
    }
}

impl Ring for PrimeField {
    type Scalar = u64;

    #[inline]
    fn zero(&self) -> u64 {
        0
    }

    #[inline]
    fn one(&self) -> u64 {
        1
    }

    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.pp.p() {
            s - self.pp.p()
        } else {
            s
        }
    }

    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.pp.p() - b
        }
    }

    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.pp.p()
    }

    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.pp.p() - a
        }
    }

    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.pp.p() as i64) as u64
    }
}

impl FieldOps for PrimeField {
    fn inv(&self, a: &u64) -> Option<u64> {
        mod_inverse(*a, self.pp.p())
    }
}

impl FiniteField for PrimeField {
    type Elem = u64;

    fn prime_power(&self) -> PrimePower {
        self.pp
    }

    #[inline]
    fn element(&self, index: u64) -> u64 {
        index
    }

    #[inline]
    fn index_of(&self, x: &u64) -> u64 {
        *x
    }

    #[inline]
    fn from_u64(&self, n: u64) -> u64 {
        n % self.pp.p()
    }

    #[inline]
    fn chi(&self, x: &u64) -> i32 {
        match &self.chi {
            Some(t) => t[*x as usize] as i32,
            None => legendre(*x, self.pp.p()),
        }
    }

    fn sqrt(&self, x: &u64) -> Option<u64> {
        if !self.pp.is_odd() {
            return Some(*x);
        }
        match (&self.chi, &self.root) {
            (Some(chi), Some(root)) => (chi[*x as usize] >= 0).then(|| root[*x as usize] as u64),
            _ => self.tonelli_shanks(*x),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::Field;
    use super::*;

    #[test]
    fn products_fit_for_large_primes() {
        // Largest prime below 2^32: products of residues stay below 2^64.
        let f = PrimeField::new(4_294_967_291).unwrap();
        let a = f.from_i64(-1);
        assert_eq!(f.mul(&a, &a), 1);
        assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
    }

    #[test]
    fn agrees_with_general_field() {
        for p in [2u64, 3, 5, 7, 11, 13, 97, 101] {
            let pf = PrimeField::new(p).unwrap();
            let slow = PrimeField::without_table(p).unwrap();
            let gf = Field::new(p, 1).unwrap();
            for a in 0..p {
                let ga = gf.element(a);
                if p != 2 {
                    assert_eq!(pf.chi(&a), gf.chi(&ga));
                    assert_eq!(slow.chi(&a), pf.chi(&a));
                }
                assert_eq!(pf.sqrt(&a), gf.sqrt(&ga).map(|r| gf.index_of(&r)));
                assert_eq!(slow.sqrt(&a), pf.sqrt(&a));
                for b in 0..p {
                    assert_eq!(pf.mul(&a, &b), gf.index_of(&gf.mul(&ga, &gf.element(b))));
                    assert_eq!(pf.sub(&a, &b), gf.index_of(&gf.sub(&ga, &gf.element(b))));
                }
            }
        }
    }

    #[test]
    fn tonelli_shanks_on_large_prime() {
        let p = 1_000_003;
        let f = PrimeField::without_table(p).unwrap();
        assert!(!f.has_residue_table());
        for a in [2u64, 3, 5, 17, 123_456, 999_999] {
            match f.sqrt(&a) {
                Some(r) => {
                    assert_eq!(f.mul(&r, &r), a);
                    assert!(r <= p / 2);
                }
                None => assert_eq!(f.chi(&a), -1),
            }
        }
    }
}
