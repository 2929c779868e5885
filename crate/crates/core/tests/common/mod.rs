#![allow(dead_code)]

use std::collections::BTreeMap;

use momentforge::pencil::{classify, CaseKind, Pencil};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Pencil with integer coefficients drawn uniformly from `-bound..=bound`.
pub fn random_pencil(rng: &mut impl Rng, bound: i64) -> Pencil {
    loop {
        let mut draw = || std::array::from_fn(|_| rng.gen_range(-bound..=bound));
        if let Ok(p) = Pencil::from_ints(draw(), draw()) {
            return p;
        }
    }
}

/// Sparse pencil: each coefficient is zero with probability 1/2, otherwise in
/// `-2..=2`. Sparse pencils reach the degenerate cases.
pub fn sparse_pencil(rng: &mut impl Rng) -> Pencil {
    loop {
        let mut draw = || {
            std::array::from_fn(|_| if rng.gen_bool(0.5) { 0 } else { rng.gen_range(-2..=2) })
        };
        if let Ok(p) = Pencil::from_ints(draw(), draw()) {
            return p;
        }
    }
}

/// Pencil that is typical over `Q`.
pub fn random_typical_pencil(rng: &mut impl Rng, bound: i64) -> Pencil {
    loop {
        let p = random_pencil(rng, bound);
        if classify(&p).is_ok_and(|l| l.typical) {
            return p;
        }
    }
}

/// `(x - r) u(x)` and `(x - r) v(x)` for random quadratics `u`, `v`.
pub fn shared_root_pencil(rng: &mut impl Rng) -> Pencil {
    loop {
        let r = rng.gen_range(-2..=2i64);
        let mut times_linear = || {
            let u: [i64; 3] = std::array::from_fn(|_| rng.gen_range(-2..=2));
            [-r * u[0], u[0] - r * u[1], u[1] - r * u[2], u[2]]
        };
        if let Ok(p) = Pencil::from_ints(times_linear(), times_linear()) {
            return p;
        }
    }
}

/// At least `per_kind` pencils of every classification kind, found by a
/// seeded search over sparse pencils.
pub fn pencils_by_kind(seed: u64, per_kind: usize) -> BTreeMap<CaseKind, Vec<Pencil>> {
    let mut rng = rng(seed);
    let mut found: BTreeMap<CaseKind, Vec<Pencil>> = BTreeMap::new();
    for i in 0..200_000 {
        let p = if i % 4 == 3 { shared_root_pencil(&mut rng) } else { sparse_pencil(&mut rng) };
        if let Ok(label) = classify(&p) {
            let bucket = found.entry(label.kind).or_default();
            if bucket.len() < per_kind {
                bucket.push(p);
            }
        }
        if CaseKind::ALL.iter().all(|k| found.get(k).is_some_and(|v| v.len() >= per_kind)) {
            break;
        }
    }
    found
}
