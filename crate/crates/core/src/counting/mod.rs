//! Point counts on the fibers of a pencil, the threefold `M`, and the curves
//! attached to the discriminant locus.
//!
//! Three routes are available and cross-checked against each other:
//!
//! * [`brute`](self::second_moment_brute) oracles that enumerate points
//!   directly (`O(q^2)` or `O(q^3)`);
//! * the `O(q)` [`second_moment_fast`] pass, which enumerates the zeros of
//!   `Delta~` row by row and assembles the second moment from curve counts;
//! * [`smooth_counts`] for the smooth models of `Delta~` and its double
//!   cover, valid when the reduction is typical.
//!
//! Traces use the affine convention `a_k = q - #{(x, y) : y^2 = P(x) k + Q(x)}`
//! and `a_inf = q - #{(x, y) : y^2 = P(x)}`.

mod brute;
mod fast;
mod lpoly;
mod smooth;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::field::{FieldError, FiniteField};
use crate::pencil::{classify_mod_p, CaseLabel, Pencil, PencilError};

pub use brute::{
    c_side_grid, delta_side_grid, second_moment_brute, threefold_count_brute, trace_a, traces,
};
pub use fast::{count_c_side, count_delta_side, second_moment_fast, DeltaSide, PreparedPencil};
pub use lpoly::{reconstruct_l, LPolynomial};
pub(crate) use fast::fast_counts;
pub(crate) use smooth::smooth_pass;
pub use smooth::{
    conic_point_count, quotient_conic_count, quotient_identity_check, smooth_counts, SmoothCounts,
};

/// Default bound on `q` for the `O(q^3)` threefold oracle.
pub const THREEFOLD_QMAX: u64 = 31;
/// Default bound on `q` for the `O(q^2)` grid oracles.
pub const GRID_QMAX: u64 = 499;
/// Environment variable that raises both oracle bounds.
pub const ORACLE_QMAX_ENV: &str = "MOMENTFORGE_ORACLE_QMAX";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("q = {q} exceeds the oracle bound {bound} (raise it with MOMENTFORGE_ORACLE_QMAX)")]
    OracleBound { q: u64, bound: u64 },
    #[error("this count needs odd characteristic, got q = {q}")]
    EvenCharacteristic { q: u64 },
    #[error("the reduction at q = {q} is not typical ({label})")]
    NotTypical { q: u64, label: String },
    #[error("L-polynomial coefficient c{index} = {value} is not an integer")]
    NonIntegral { index: usize, value: String },
    #[error("L-polynomial reconstruction needs genus 1..=3 and one count per extension degree, got {0}")]
    BadLInput(String),
    #[error(transparent)]
    Pencil(#[from] PencilError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Effective oracle bound: the default, or the environment override when it
/// is larger.
pub fn oracle_bound(default: u64) -> u64 {
    std::env::var(ORACLE_QMAX_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<u64>().ok())
        .map_or(default, |v| v.max(default))
}

pub(crate) fn check_bound(q: u64, default: u64) -> Result<(), CountError> {
    let bound = oracle_bound(default);
    if q > bound {
        return Err(CountError::OracleBound { q, bound });
    }
    Ok(())
}

pub(crate) fn require_odd<F: FiniteField>(field: &F) -> Result<(), CountError> {
    if !field.is_odd() {
        return Err(CountError::EvenCharacteristic { q: field.order() });
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Brute,
    Fast,
    Smooth,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Fast => "fast",
            Method::Smooth => "smooth",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "brute" => Ok(Method::Brute),
            "fast" => Ok(Method::Fast),
            "smooth" => Ok(Method::Smooth),
            _ => Err(format!("unknown method {s:?} (expected brute, fast or smooth)")),
        }
    }
}

/// Every count attached to a pencil over one field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountBundle {
    pub q: u64,
    pub a_inf: i64,
    pub m2: i64,
    pub m2_tilde: i64,
    pub delta: u64,
    pub delta_tilde: u64,
    pub s: u64,
    pub p: u64,
    pub p_and_s: u64,
    pub c: u64,
    pub c_tilde: u64,
    /// Smooth-model counts, present for the smooth method.
    pub smooth: Option<SmoothCounts>,
    pub method: Method,
    /// Classification of the reduction; `None` when it is undefined (even
    /// characteristic or a singular family).
    pub case: Option<CaseLabel>,
}

impl CountBundle {
    /// `M~2 = M2 + a_inf^2` and `#Delta = q + #Delta~ - #S`.
    pub fn is_consistent(&self) -> bool {
        self.m2_tilde == self.m2 + self.a_inf * self.a_inf
            && self.delta + self.s == self.q + self.delta_tilde
    }
}

/// All counts of `pencil` over `field` by the chosen method.
///
/// The brute method enumerates every count directly and is limited by the
/// grid oracle bound; the fast method uses the `O(q)` pass; the smooth method
/// adds the smooth-model counts and needs a typical reduction.
pub fn count_bundle<F: FiniteField>(
    pencil: &Pencil,
    field: &F,
    method: Method,
) -> Result<CountBundle, CountError> {
    require_odd(field)?;
    let case = classify_mod_p(pencil, field).ok();
    let (m2, m2_tilde, a_inf, ds, c, c_tilde) = if method == Method::Brute {
        let (m2, m2_tilde) = second_moment_brute(pencil, field)?;
        let a_inf = trace_a(pencil, field, None)?;
        let (c, c_tilde) = c_side_grid(pencil, field)?;
        (m2, m2_tilde, a_inf, delta_side_grid(pencil, field)?, c, c_tilde)
    } else {
        let fc = fast::fast_counts(field, &PreparedPencil::new(pencil))?;
        let m2 = fc.m2_tilde - fc.a_inf * fc.a_inf;
        (m2, fc.m2_tilde, fc.a_inf, fc.side, fc.c, fc.c_tilde)
    };
    let smooth = match method {
        Method::Smooth => Some(smooth_counts(pencil, field)?),
        _ => None,
    };
    Ok(CountBundle {
        q: field.order(),
        a_inf,
        m2,
        m2_tilde,
        delta: ds.delta,
        delta_tilde: ds.delta_tilde,
        s: ds.s,
        p: ds.p,
        p_and_s: ds.p_and_s,
        c,
        c_tilde,
        smooth,
        method,
        case,
    })
}
