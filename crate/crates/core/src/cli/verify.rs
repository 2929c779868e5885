//! The identity suite behind `momentforge verify`.
//!
//! Every check compares a closed form against an independent count or an
//! exact computation over `Q`, and tallies passes, failures and skips.

use serde::Serialize;

use crate::counting::{
    c_side_grid, count_delta_side, delta_side_grid, oracle_bound, quotient_conic_count, reconstruct_l, second_moment_brute,
    second_moment_fast, smooth_counts, threefold_count_brute, CountError, GRID_QMAX, THREEFOLD_QMAX,
};
use crate::field::{is_prime, Field, FiniteField, PrimeField, PrimePower};
use crate::pencil::{classify_mod_p, invariants, Pencil};

/// Largest `p^3` for which the genus-3 L-polynomial is reconstructed.
const CUBIC_EXTENSION_MAX: u64 = 30_000;

/// Runs `$body` with `$f` bound to a field of order `$q`: a [`PrimeField`]
/// for primes, a tabled [`Field`] otherwise.
macro_rules! with_field {
    ($q:expr, |$f:ident| $body:expr) => {{
        let pp = PrimePower::from_order($q)?;
        if pp.k() == 1 {
            let $f = PrimeField::new(pp.p())?;
            $body
        } else {
            let $f = Field::new(pp.p(), pp.k())?.with_residue_table();
            $body
        }
    }};
}
pub(crate) use with_field;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckTally {
    pub name: &'static str,
    pub statement: &'static str,
    pub passed: u64,
    pub failed: u64,
    pub skipped: u64,
    /// One line per failure, naming the field.
    pub failures: Vec<String>,
}

impl CheckTally {
    fn new(name: &'static str, statement: &'static str) -> Self {
        Self {
            name,
            statement,
            passed: 0,
            failed: 0,
            skipped: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, context: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            self.failures.push(context());
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub pencil: String,
    pub qmax: u64,
    /// Field orders visited, ascending.
    pub orders: Vec<u64>,
    pub checks: Vec<CheckTally>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.failed == 0)
    }

    pub fn check(&self, name: &str) -> Option<&CheckTally> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Prime powers `q = p^k <= qmax` with `k <= 3`.
pub fn field_orders(qmax: u64) -> Vec<u64> {
    (2..=qmax)
        .filter(|&q| PrimePower::from_order(q).is_ok_and(|pp| pp.k() <= 3))
        .collect()
}

struct Suite {
    threefold: CheckTally,
    curve_formula: CheckTally,
    curve_defect: CheckTally,
    resultant: CheckTally,
    conic: CheckTally,
    s_diagonal: CheckTally,
    smooth_moment: CheckTally,
    quotient_identity: CheckTally,
    quotient_conic: CheckTally,
    weil_bounds: CheckTally,
    l_polynomials: CheckTally,
}

impl Suite {
    fn new() -> Self {
        Self {
            threefold: CheckTally::new("threefold-count", "#M = q^3 + q^2 + M~2"),
            curve_formula: CheckTally::new(
                "curve-formula",
                "M~2 = q(-#Delta + #C + (sum over P = 0 of phi(Q))^2), against the brute-force sum",
            ),
            curve_defect: CheckTally::new(
                "curve-defect",
                "#C - #Delta = #C~ - #Delta~ + q - #S - #P + #(P and S), from grid counts",
            ),
            resultant: CheckTally::new("resultant-identity", "Res(S~, T) = -mu23^3 Res(P, Q)^2 over Q"),
            conic: CheckTally::new("conic-discriminant", "disc(conic) = -16 mu23 Res(P, Q) over Q"),
            s_diagonal: CheckTally::new("s-diagonal", "S(x) = Delta~(x, x) matches the closed form in the minors"),
            smooth_moment: CheckTally::new(
                "smooth-moment",
                "M~2 / q = #C_bar - #Delta_bar + q - #S at typical reductions",
            ),
            quotient_identity: CheckTally::new(
                "quotient-identity",
                "#C_bar + 2 #C4 = #C1 + #C2 + #C3 at typical reductions",
            ),
            quotient_conic: CheckTally::new("quotient-conic", "#C4 = q + 1 at typical reductions"),
            weil_bounds: CheckTally::new(
                "weil-bounds",
                "|q + 1 - #Delta_bar| <= 2 sqrt q and |d| <= 4 sqrt q at typical reductions",
            ),
            l_polynomials: CheckTally::new(
                "l-polynomials",
                "genus 1, 2, 3 L-polynomials from extension counts are integral with roots of modulus sqrt p",
            ),
        }
    }

    fn into_checks(self) -> Vec<CheckTally> {
        vec![
            self.threefold,
            self.curve_formula,
            self.curve_defect,
            self.resultant,
            self.conic,
            self.s_diagonal,
            self.smooth_moment,
            self.quotient_identity,
            self.quotient_conic,
            self.weil_bounds,
            self.l_polynomials,
        ]
    }
}

fn skip_typical(suite: &mut Suite) {
    for c in [
        &mut suite.smooth_moment,
        &mut suite.quotient_identity,
        &mut suite.quotient_conic,
        &mut suite.weil_bounds,
    ] {
        c.skipped += 1;
    }
}

fn per_field<F: FiniteField>(suite: &mut Suite, pencil: &Pencil, field: &F) -> Result<(), CountError> {
    let q = field.order();
    let reduces = pencil.reduce(field).is_some();
    if q <= oracle_bound(THREEFOLD_QMAX) && reduces {
        let m = threefold_count_brute(pencil, field)?;
        let m2_tilde = if field.is_odd() {
            second_moment_brute(pencil, field)?.1
        } else {
            0
        };
        let m2_tilde = u64::try_from(m2_tilde as i128 + (q * q * q + q * q) as i128).ok();
        suite.threefold.record(Some(m) == m2_tilde, || format!("q = {q}: #M = {m}"));
    } else {
        suite.threefold.skipped += 1;
    }
    if !field.is_odd() || !reduces {
        suite.curve_formula.skipped += 1;
        suite.curve_defect.skipped += 1;
        skip_typical(suite);
        return Ok(());
    }

    let (_, brute) = second_moment_brute(pencil, field)?;
    let fast = second_moment_fast(pencil, field)?;
    suite
        .curve_formula
        .record(fast == brute, || format!("q = {q}: fast {fast}, brute {brute}"));

    if q <= oracle_bound(GRID_QMAX) {
        let ds = delta_side_grid(pencil, field)?;
        let (c, c_tilde) = c_side_grid(pencil, field)?;
        let lhs = c as i64 - ds.delta as i64;
        let rhs = c_tilde as i64 - ds.delta_tilde as i64 + q as i64 - ds.s as i64 - ds.p as i64 + ds.p_and_s as i64;
        suite.curve_defect.record(lhs == rhs, || format!("q = {q}: {lhs} != {rhs}"));
    } else {
        suite.curve_defect.skipped += 1;
    }

    if !classify_mod_p(pencil, field).is_ok_and(|l| l.typical) {
        skip_typical(suite);
        return Ok(());
    }
    let sc = smooth_counts(pencil, field)?;
    let s = count_delta_side(pencil, field)?.s;
    let rhs = (sc.c_bar as i64 - sc.delta_bar as i64 + q as i64 - s as i64) * q as i64;
    suite
        .smooth_moment
        .record(rhs == brute, || format!("q = {q}: q(#C_bar - #Delta_bar + q - #S) = {rhs}, M~2 = {brute}"));
    let c4 = quotient_conic_count(pencil, field)?;
    suite.quotient_conic.record(c4 == q + 1, || format!("q = {q}: #C4 = {c4}"));
    suite
        .quotient_identity
        .record(sc.c_bar + 2 * c4 == sc.delta_bar + sc.c2 + q + 1, || format!("q = {q}"));
    let root_q = (q as f64).sqrt();
    let t1 = (q + 1) as f64 - sc.delta_bar as f64;
    suite.weil_bounds.record(t1.abs() <= 2.0 * root_q && (sc.d as f64).abs() <= 4.0 * root_q, || {
        format!("q = {q}: Delta_bar trace {t1}, d = {}", sc.d)
    });
    Ok(())
}

/// Genus 1, 2 and 3 L-polynomials of `Delta_bar`, `C2` and `C_bar` at a
/// typical prime.
fn l_polynomials(suite: &mut Suite, pencil: &Pencil, p: u64) -> Result<(), CountError> {
    let mut delta_bar = Vec::new();
    let mut c2 = Vec::new();
    let mut c_bar = Vec::new();
    let depth = if p * p * p <= CUBIC_EXTENSION_MAX { 3 } else { 2 };
    for k in 1..=depth {
        let sc = if k == 1 {
            smooth_counts(pencil, &PrimeField::new(p)?)?
        } else {
            smooth_counts(pencil, &Field::new(p, k)?.with_residue_table())?
        };
        delta_bar.push(sc.delta_bar);
        c2.push(sc.c2);
        c_bar.push(sc.c_bar);
    }
    for (genus, counts) in [(1, &delta_bar[..1]), (2, &c2[..2])] {
        let ok = reconstruct_l(p, counts).is_ok_and(|l| l.genus == genus && l.is_weil(1e-9));
        suite.l_polynomials.record(ok, || format!("p = {p}: genus {genus}"));
    }
    // The genus-1 polynomial from one count must also predict the second.
    let l1 = reconstruct_l(p, &delta_bar[..1])?;
    suite.l_polynomials.record(
        l1.point_count(2) == delta_bar[1].into(),
        || format!("p = {p}: #Delta_bar over F_p^2"),
    );
    if depth == 3 {
        let ok = reconstruct_l(p, &c_bar).is_ok_and(|l| l.genus == 3 && l.is_weil(1e-9));
        suite.l_polynomials.record(ok, || format!("p = {p}: genus 3"));
    } else {
        suite.l_polynomials.skipped += 1;
    }
    Ok(())
}

/// Runs every check over all fields of order at most `qmax`.
pub fn verify_suite(pencil: &Pencil, qmax: u64) -> crate::Result<VerifyReport> {
    let mut suite = Suite::new();
    let inv = invariants(pencil);
    match inv.resultant_identity_holds() {
        Some(ok) => suite.resultant.record(ok, || "over Q".into()),
        None => suite.resultant.skipped += 1,
    }
    suite.conic.record(inv.conic_identity_holds(), || "over Q".into());
    suite.s_diagonal.record(inv.s_forms_agree(), || "over Q".into());

    let orders = field_orders(qmax);
    for &q in &orders {
        with_field!(q, |field| per_field(&mut suite, pencil, &field)?);
        if is_prime(q) && q > 2 {
            let typical = classify_mod_p(pencil, &PrimeField::new(q)?).is_ok_and(|l| l.typical);
            if typical && pencil.reduce(&PrimeField::new(q)?).is_some() {
                l_polynomials(&mut suite, pencil, q)?;
            }
        }
    }
    Ok(VerifyReport {
        pencil: pencil.to_string(),
        qmax,
        orders,
        checks: suite.into_checks(),
    })
}
