//! General finite fields `F_{p^k}`, `k <= 3`.

use std::fmt;

use super::arith::{mod_inverse, mul_mod, pow_mod};
use super::{FieldError, FieldOps, FiniteField, PrimePower, Ring, RESIDUE_TABLE_LIMIT};

/// An element of `F_{p^k}` as coefficients `c0 + c1*a + c2*a^2` of the
/// generator `a`; unused coefficients are zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElement {
    c: [u64; 3],
}

impl FieldElement {
    pub fn coeffs(&self) -> [u64; 3] {
        self.c
    }

    pub fn from_coeffs(c: [u64; 3]) -> Self {
        Self { c }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .c
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match i {
                0 => c.to_string(),
                1 => format!("{c}*a"),
                _ => format!("{c}*a^{i}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join("+"))
        }
    }
}

#[derive(Debug, Clone)]
struct ResidueTable {
    chi: Vec<i8>,
    root: Vec<u64>,
}

/// `F_{p^k}` with a deterministic defining polynomial: the first monic
/// irreducible of degree `k` when the lower coefficients `(c0, c1, ..)` are
/// scanned in increasing base-`p` order.
#[derive(Debug, Clone)]
pub struct Field {
    pp: PrimePower,
    /// Lower coefficients of the monic modulus `x^k + m[k-1] x^{k-1} + .. + m[0]`.
    modulus: [u64; 3],
    /// `q - 1 = 2^s * t` with `t` odd.
    two_adicity: (u32, u64),
    nonresidue: FieldElement,
    table: Option<ResidueTable>,
}

impl Field {
    pub fn new(p: u64, k: u32) -> Result<Self, FieldError> {
        let pp = PrimePower::new(p, k)?;
        let modulus = if k == 1 {
            [0; 3]
        } else {
            (0..p.pow(k))
                .map(|n| digits(n, p))
                .find(|m| is_irreducible(m, p, k))
                .expect("an irreducible polynomial of every degree exists")
        };
        let mut field = Self {
            pp,
            modulus,
            two_adicity: (0, 0),
            nonresidue: FieldElement::default(),
            table: None,
        };
        if pp.is_odd() {
            let q1 = pp.q() - 1;
            let s = q1.trailing_zeros();
            field.two_adicity = (s, q1 >> s);
            field.nonresidue = (1..pp.q())
                .map(|i| field.element(i))
                .find(|x| field.euler(x) != 1)
                .expect("odd-order fields contain non-residues");
        }
        Ok(field)
    }

    /// The field of order `q`.
    pub fn with_order(q: u64) -> Result<Self, FieldError> {
        let pp = PrimePower::from_order(q)?;
        Self::new(pp.p(), pp.k())
    }

    /// Precomputes the quadratic character and square roots of every element.
    /// Only built when `q < 2^20`; otherwise the field is returned unchanged.
    pub fn with_residue_table(mut self) -> Self {
        let q = self.pp.q();
        if !self.pp.is_odd() || q >= RESIDUE_TABLE_LIMIT {
            return self;
        }
        let mut chi = vec![-1i8; q as usize];
        let mut root = vec![u64::MAX; q as usize];
        for i in 0..q {
            let y = self.element(i);
            let sq = self.index_of(&self.mul(&y, &y)) as usize;
            if root[sq] == u64::MAX {
                root[sq] = i;
                chi[sq] = 1;
            }
        }
        chi[0] = 0;
        self.table = Some(ResidueTable { chi, root });
        self
    }

    pub fn has_residue_table(&self) -> bool {
        self.table.is_some()
    }

    /// Coefficients of the monic modulus, constant term first, length `k + 1`.
    pub fn modulus(&self) -> Vec<u64> {
        let k = self.pp.k() as usize;
        let mut m = self.modulus[..k].to_vec();
        if k == 1 {
            m[0] = 0;
        }
        m.push(1);
        m
    }

    fn euler(&self, x: &FieldElement) -> i32 {
        if self.is_zero(x) {
            return 0;
        }
        let r = self.pow(x, (self.pp.q() - 1) / 2);
        if r == self.one() {
            1
        } else {
            -1
        }
    }

    fn tonelli_shanks(&self, x: &FieldElement) -> Option<FieldElement> {
        if self.is_zero(x) {
            return Some(*x);
        }
        if self.euler(x) != 1 {
            return None;
        }
        let (s, t) = self.two_adicity;
        let mut m = s;
        let mut c = self.pow(&self.nonresidue, t);
        let mut tt = self.pow(x, t);
        let mut r = self.pow(x, t.div_ceil(2));
        let one = self.one();
        while tt != one {
            let mut i = 0;
            let mut t2 = tt;
            while t2 != one {
                t2 = self.mul(&t2, &t2);
                i += 1;
            }
            let mut b = c;
            for _ in 0..(m - i - 1) {
                b = self.mul(&b, &b);
            }
            m = i;
            c = self.mul(&b, &b);
            tt = self.mul(&tt, &c);
            r = self.mul(&r, &b);
        }
        Some(r)
    }

    fn canonical_root(&self, r: FieldElement) -> FieldElement {
        let neg = self.neg(&r);
        if self.index_of(&neg) < self.index_of(&r) {
            neg
        } else {
            r
        }
    }
}

fn digits(mut n: u64, p: u64) -> [u64; 3] {
    let mut c = [0; 3];
    for d in c.iter_mut() {
        *d = n % p;
        n /= p;
    }
    c
}

/// A monic polynomial of degree 2 or 3 over `F_p` is irreducible iff it has
/// no root.
fn is_irreducible(lower: &[u64; 3], p: u64, k: u32) -> bool {
    (0..p).all(|x| {
        let mut acc = 1u64;
        for i in (0..k as usize).rev() {
            acc = (mul_mod(acc, x, p) + lower[i]) % p;
        }
        acc != 0
    })
}

/// Below this bound every intermediate of [`Field::mul_small`] fits in a
/// `u64`.
const SMALL_P: u64 = 1 << 20;

impl Field {
    fn mul_small(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let p = self.pp.p();
        let k = self.pp.k() as usize;
        let mut prod = [0u64; 5];
        for i in 0..k {
            for j in 0..k {
                prod[i + j] += a.c[i] * b.c[j];
            }
        }
        for top in (k..2 * k - 1).rev() {
            let t = prod[top] % p;
            prod[top] = 0;
            if t == 0 {
                continue;
            }
            for j in 0..k {
                prod[top - k + j] += t * (p - self.modulus[j]);
            }
        }
        FieldElement {
            c: [prod[0] % p, prod[1] % p, if k > 2 { prod[2] % p } else { 0 }],
        }
    }
}

impl Ring for Field {
    type Scalar = FieldElement;

    fn zero(&self) -> FieldElement {
        FieldElement::default()
    }

    fn one(&self) -> FieldElement {
        FieldElement { c: [1, 0, 0] }
    }

    fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let p = self.pp.p();
        let mut c = [0; 3];
        for i in 0..3 {
            let s = a.c[i] + b.c[i];
            c[i] = if s >= p { s - p } else { s };
        }
        FieldElement { c }
    }

    fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let p = self.pp.p();
        let mut c = [0; 3];
        for i in 0..3 {
            c[i] = if a.c[i] >= b.c[i] {
                a.c[i] - b.c[i]
            } else {
                a.c[i] + p - b.c[i]
            };
        }
        FieldElement { c }
    }

    fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let p = self.pp.p();
        let k = self.pp.k() as usize;
        if k == 1 {
            return FieldElement {
                c: [mul_mod(a.c[0], b.c[0], p), 0, 0],
            };
        }
        if p < SMALL_P {
            return self.mul_small(a, b);
        }
        let mut prod = [0u64; 5];
        for i in 0..k {
            for j in 0..k {
                prod[i + j] = (prod[i + j] + mul_mod(a.c[i], b.c[j], p)) % p;
            }
        }
        for top in (k..2 * k - 1).rev() {
            let t = prod[top];
            if t == 0 {
                continue;
            }
            prod[top] = 0;
            for j in 0..k {
                let sub = mul_mod(t, self.modulus[j], p);
                let slot = &mut prod[top - k + j];
                *slot = (*slot + p - sub) % p;
            }
        }
        FieldElement {
            c: [prod[0], prod[1], if k > 2 { prod[2] } else { 0 }],
        }
    }

    fn neg(&self, a: &FieldElement) -> FieldElement {
        self.sub(&self.zero(), a)
    }

    fn is_zero(&self, a: &FieldElement) -> bool {
        a.c == [0; 3]
    }

    fn from_i64(&self, n: i64) -> FieldElement {
        let p = self.pp.p() as i64;
        self.from_u64(n.rem_euclid(p) as u64)
    }
}

impl FieldOps for Field {
    fn inv(&self, a: &FieldElement) -> Option<FieldElement> {
        if self.is_zero(a) {
            return None;
        }
        if self.pp.k() == 1 {
            return mod_inverse(a.c[0], self.pp.p()).map(|x| FieldElement { c: [x, 0, 0] });
        }
        Some(self.pow(a, self.pp.q() - 2))
    }
}

impl FiniteField for Field {
    type Elem = FieldElement;

    fn prime_power(&self) -> PrimePower {
        self.pp
    }

    fn element(&self, index: u64) -> FieldElement {
        FieldElement {
            c: digits(index, self.pp.p()),
        }
    }

    fn index_of(&self, x: &FieldElement) -> u64 {
        let p = self.pp.p();
        x.c[0] + p * (x.c[1] + p * x.c[2])
    }

    fn from_u64(&self, n: u64) -> FieldElement {
        FieldElement {
            c: [n % self.pp.p(), 0, 0],
        }
    }

    fn chi(&self, x: &FieldElement) -> i32 {
        match &self.table {
            Some(t) => t.chi[self.index_of(x) as usize] as i32,
            None => self.euler(x),
        }
    }

    fn sqrt(&self, x: &FieldElement) -> Option<FieldElement> {
        if !self.pp.is_odd() {
            // Squaring is a bijection in characteristic 2.
            return Some(self.pow(x, self.pp.q() / 2));
        }
        match &self.table {
            Some(t) => {
                let r = t.root[self.index_of(x) as usize];
                (r != u64::MAX).then(|| self.canonical_root(self.element(r)))
            }
            None => self.tonelli_shanks(x).map(|r| self.canonical_root(r)),
        }
    }
}

/// Euler's criterion in `F_p`, exposed for cross-checks.
pub(crate) fn legendre(a: u64, p: u64) -> i32 {
    let a = a % p;
    if a == 0 {
        return 0;
    }
    if pow_mod(a, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}
