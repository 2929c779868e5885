//! Stratified second moments over primes and their averages.
//!
//! At a typical prime `M2 = f4 + f3 + f2` with `f4 = p^2`,
//! `f3 = -p d_p` and `f2 = -p #S(F_p) - a_inf^2`. The bias is the average of
//! `f2(p) / p`, predicted to be `-m - delta` where `m` counts the irreducible
//! factors of `S` over `Q` and `delta = 1` iff the fiber at infinity is
//! elliptic.

mod exact;
mod output;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::counting::{CountError, PreparedPencil};
use crate::field::{odd_primes_up_to, FiniteField, PrimeField, Ring};
use crate::pencil::{delta_infinity_flag, CaseKind, CaseLabel, Pencil, PencilError};
use crate::polyalg::{count_roots_by_gcd, discriminant, rational_irreducible_factor_count, QPoly};

pub use exact::{format_significant, ratio_to_f64, ExactSum};
pub use output::{render_rows, write_csv, RenderedRow, CSV_HEADER};

/// Default upper bound for sweeps.
pub const SWEEP_LIMIT: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BiasError {
    #[error("no included primes to average over")]
    Empty,
    #[error("sweep bound {x} exceeds the limit {limit}")]
    LimitExceeded { x: u64, limit: u64 },
    #[error("P and Q are proportional ({0}); the family is isotrivial and has no sweep")]
    Proportional(CaseKind),
    #[error("the bias prediction needs a typical pencil, got {0}")]
    NotTypical(String),
    #[error("the Chebotarev average needs a nonconstant polynomial")]
    ConstantPolynomial,
    #[error(transparent)]
    Pencil(#[from] PencilError),
    #[error(transparent)]
    Count(#[from] CountError),
}

/// One prime of a sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub p: u64,
    /// Classification of the reduction, when it is defined.
    pub case: Option<CaseLabel>,
    pub excluded: bool,
    pub reason: Option<String>,
    pub m2: Option<i64>,
    pub m2_tilde: Option<i64>,
    pub a_inf: Option<i64>,
    /// Trace of the genus-2 curve, at typical reductions.
    pub d_p: Option<i64>,
    pub n_s: Option<u64>,
    pub f4: i64,
    pub f3: Option<i64>,
    pub f2: Option<i64>,
}

impl SweepRow {
    /// `M2 = f4 + f3 + f2`, when all terms are known.
    pub fn stratification_holds(&self) -> Option<bool> {
        Some(self.m2? == self.f4 + self.f3? + self.f2?)
    }

    fn excluded(p: u64, case: Option<CaseLabel>, reason: String) -> Self {
        Self {
            p,
            case,
            excluded: true,
            reason: Some(reason),
            m2: None,
            m2_tilde: None,
            a_inf: None,
            d_p: None,
            n_s: None,
            f4: (p * p) as i64,
            f3: None,
            f2: None,
        }
    }
}

/// The row for one odd prime. Primes where the reduction fails or is
/// classified differently from the pencil over `Q` are flagged as excluded.
pub fn stratify(prepared: &PreparedPencil, p: u64) -> Result<SweepRow, BiasError> {
    let field = PrimeField::new(p).map_err(CountError::from)?;
    if !field.is_odd() {
        return Err(CountError::EvenCharacteristic { q: p }.into());
    }
    let global = prepared.label().clone()?;
    let Some(reduced) = prepared.pencil().reduce(&field) else {
        return Ok(SweepRow::excluded(p, None, "p divides a coefficient denominator".into()));
    };
    let label = match crate::pencil::classify_over(&field, &reduced.a, &reduced.b) {
        Ok(label) => label,
        Err(e) => return Ok(SweepRow::excluded(p, None, e.to_string())),
    };
    let pp = p as i64;
    let mut row = SweepRow {
        p,
        case: Some(label),
        excluded: label != global,
        reason: (label != global).then(|| format!("reduction is {label}, pencil is {global}")),
        m2: None,
        m2_tilde: None,
        a_inf: None,
        d_p: None,
        n_s: None,
        f4: pp * pp,
        f3: None,
        f2: None,
    };
    let (m2_tilde, a_inf, n_s) = if label.typical {
        let pass = crate::counting::smooth_pass(&field, prepared)?;
        row.d_p = Some(pass.smooth.d);
        row.f3 = Some(-pp * pass.smooth.d);
        (pass.m2_tilde, pass.a_inf, pass.n_s)
    } else {
        let fc = crate::counting::fast_counts(&field, prepared)?;
        (fc.m2_tilde, fc.a_inf, fc.side.s)
    };
    row.m2_tilde = Some(m2_tilde);
    row.m2 = Some(m2_tilde - a_inf * a_inf);
    row.a_inf = Some(a_inf);
    row.n_s = Some(n_s);
    row.f2 = Some(-pp * n_s as i64 - a_inf * a_inf);
    Ok(row)
}

/// Rows for every odd prime `p <= x` in ascending order, computed on
/// `workers` threads (all available cores when `None`). The output does not
/// depend on the number of workers.
pub fn sweep(pencil: &Pencil, x: u64, workers: Option<usize>) -> Result<Vec<SweepRow>, BiasError> {
    sweep_with_limit(pencil, x, workers, SWEEP_LIMIT)
}

pub fn sweep_with_limit(
    pencil: &Pencil,
    x: u64,
    workers: Option<usize>,
    limit: u64,
) -> Result<Vec<SweepRow>, BiasError> {
    if x > limit {
        return Err(BiasError::LimitExceeded { x, limit });
    }
    let prepared = PreparedPencil::new(pencil);
    let global = prepared.label().clone()?;
    if global.kind.is_proportional() {
        return Err(BiasError::Proportional(global.kind));
    }
    let primes = odd_primes_up_to(x);
    let run = || -> Result<Vec<SweepRow>, BiasError> {
        primes.par_iter().map(|&p| stratify(&prepared, p)).collect()
    };
    match workers {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .expect("thread pool")
            .install(run),
        None => run(),
    }
}

/// Averages over the included rows of a sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct BiasReport {
    /// Largest prime considered.
    pub x: u64,
    pub total_primes: u64,
    pub included: u64,
    /// Included rows with a genus-2 trace (typical reductions).
    pub with_trace: u64,
    /// Mean of `f3 / p^(3/2)` over rows with a trace.
    pub avg3: Option<f64>,
    /// Largest `|f3| / p^(3/2)`.
    pub max_abs_f3: Option<f64>,
    /// Mean of `f2 / p`.
    pub avg2: BigRational,
    /// Mean of `#S(F_p)`.
    pub avg_s: BigRational,
    /// Mean of `a_inf^2 / p`.
    pub avg_a_inf2: BigRational,
    /// `-m - delta`, when the pencil is typical.
    pub predicted: Option<i64>,
    pub excluded: Vec<(u64, String)>,
}

impl BiasReport {
    /// `avg2 = -avgS - avg_a_inf^2`, exactly.
    pub fn identity_holds(&self) -> bool {
        self.avg2 == -(&self.avg_s + &self.avg_a_inf2)
    }

    pub fn avg2_f64(&self) -> f64 {
        ratio_to_f64(self.avg2.numer(), self.avg2.denom())
    }

    pub fn avg_s_f64(&self) -> f64 {
        ratio_to_f64(self.avg_s.numer(), self.avg_s.denom())
    }

    pub fn avg_a_inf2_f64(&self) -> f64 {
        ratio_to_f64(self.avg_a_inf2.numer(), self.avg_a_inf2.denom())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let fmt = |x: f64| format_significant(x, 12);
        serde_json::json!({
            "x": self.x,
            "total_primes": self.total_primes,
            "included": self.included,
            "with_trace": self.with_trace,
            "avg3": self.avg3.map(fmt),
            "max_abs_f3": self.max_abs_f3.map(fmt),
            "avg2": fmt(self.avg2_f64()),
            "avgS": fmt(self.avg_s_f64()),
            "avg_a_inf2": fmt(self.avg_a_inf2_f64()),
            "avg2_exact_identity": self.identity_holds(),
            "predicted": self.predicted,
            "excluded": self.excluded.iter().map(|(p, r)| serde_json::json!({"p": p, "reason": r})).collect::<Vec<_>>(),
        })
    }
}

/// Averages over the included rows; `x` is taken from the last row.
pub fn averages(rows: &[SweepRow]) -> Result<BiasReport, BiasError> {
    let mut included = 0u64;
    let mut with_trace = 0u64;
    let mut f3_sum = 0f64;
    let mut max_f3 = 0f64;
    let (mut f2, mut s, mut a2) = (ExactSum::new(), ExactSum::new(), ExactSum::new());
    let mut excluded = Vec::new();
    for row in rows {
        let (false, Some(f2_row), Some(n_s), Some(a_inf)) = (row.excluded, row.f2, row.n_s, row.a_inf)
        else {
            excluded.push((row.p, row.reason.clone().unwrap_or_default()));
            continue;
        };
        included += 1;
        f2.add(f2_row, row.p);
        s.add_integer(n_s);
        a2.add(a_inf * a_inf, row.p);
        if let Some(f3) = row.f3 {
            with_trace += 1;
            let v = f3 as f64 / (row.p as f64).powf(1.5);
            f3_sum += v;
            max_f3 = max_f3.max(v.abs());
        }
    }
    if included == 0 {
        return Err(BiasError::Empty);
    }
    let n = BigRational::from_integer(included.into());
    Ok(BiasReport {
        x: rows.last().map_or(0, |r| r.p),
        total_primes: rows.len() as u64,
        included,
        with_trace,
        avg3: (with_trace > 0).then(|| f3_sum / with_trace as f64),
        max_abs_f3: (with_trace > 0).then_some(max_f3),
        avg2: f2.to_rational() / &n,
        avg_s: s.to_rational() / &n,
        avg_a_inf2: a2.to_rational() / &n,
        predicted: None,
        excluded,
    })
}

/// `-m - delta` for a typical pencil.
pub fn predicted_bias(pencil: &Pencil) -> Result<i64, BiasError> {
    let label = crate::pencil::classify(pencil)?;
    if !label.typical {
        return Err(BiasError::NotTypical(label.to_string()));
    }
    let s = crate::pencil::delta_polys(pencil).s;
    let m = rational_irreducible_factor_count(&s).map_err(PencilError::from)?;
    Ok(-(m as i64) - i64::from(delta_infinity_flag(pencil)))
}

/// Sweep and averages in one call, with the prediction filled in when the
/// pencil is typical.
pub fn bias_report(pencil: &Pencil, x: u64, workers: Option<usize>) -> Result<(Vec<SweepRow>, BiasReport), BiasError> {
    let rows = sweep(pencil, x, workers)?;
    let mut report = averages(&rows)?;
    report.x = x;
    report.predicted = predicted_bias(pencil).ok();
    Ok((rows, report))
}

/// Mean number of distinct roots of `f` modulo `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChebotarevAverage {
    pub primes: u64,
    pub total_roots: u64,
}

impl ChebotarevAverage {
    pub fn mean(&self) -> f64 {
        if self.primes == 0 {
            return f64::NAN;
        }
        self.total_roots as f64 / self.primes as f64
    }
}

/// Average of the number of distinct roots of `f mod p` over odd primes
/// `p <= x` that divide neither the leading coefficient nor the
/// discriminant of the primitive squarefree part of `f`.
pub fn chebotarev_average(f: &QPoly, x: u64) -> Result<ChebotarevAverage, BiasError> {
    if f.is_constant() {
        return Err(BiasError::ConstantPolynomial);
    }
    let r = crate::field::Rationals;
    let sf = f.squarefree_part(&r);
    let ints = sf.primitive_integer();
    let g = QPoly::new(&r, ints.iter().map(|c| BigRational::from_integer(c.clone())).collect());
    let lc = ints.last().cloned().unwrap_or_default();
    let bad: BigInt = if g.degree() == Some(1) {
        lc
    } else {
        lc * discriminant(&r, &g).map_err(PencilError::from)?.to_integer()
    };
    let mut out = ChebotarevAverage {
        primes: 0,
        total_roots: 0,
    };
    for p in odd_primes_up_to(x) {
        if (&bad % p).is_zero() {
            continue;
        }
        let field = PrimeField::without_table(p).map_err(CountError::from)?;
        let reduced = g.reduce(&field).expect("integer coefficients");
        out.primes += 1;
        out.total_roots += count_roots_by_gcd(&field, &reduced).map_err(PencilError::from)? as u64;
    }
    Ok(out)
}

/// `M~2` of the pencil `y^2 = (x^3 + 1) k + 1` at an odd prime `p != 3`:
/// `p^2 (2 + (-3/p)) - p (1 + (-3/p))`.
pub fn case8_second_moment(p: u64) -> i64 {
    let chi = PrimeField::without_table(p)
        .map(|f| f.chi(&f.from_i64(-3)))
        .unwrap_or(0) as i64;
    let pp = p as i64;
    pp * pp * (2 + chi) - pp * (1 + chi)
}

/// Mean over included rows of `(M~2 - p^2 (2 + (-3/p))) / p`, the lower-order
/// term under the stratification with leading term `p^2 (2 + (-3/p))`.
pub fn case8_residual_average(rows: &[SweepRow]) -> Result<BigRational, BiasError> {
    let mut sum = ExactSum::new();
    let mut n = 0u64;
    for row in rows.iter().filter(|r| !r.excluded && r.p != 3) {
        let Some(m2t) = row.m2_tilde else { continue };
        let f = PrimeField::without_table(row.p).map_err(CountError::from)?;
        let chi = f.chi(&f.from_i64(-3)) as i64;
        let pp = row.p as i64;
        sum.add(m2t - pp * pp * (2 + chi), row.p);
        n += 1;
    }
    if n == 0 {
        return Err(BiasError::Empty);
    }
    Ok(sum.to_rational() / BigRational::from_integer(n.into()))
}
