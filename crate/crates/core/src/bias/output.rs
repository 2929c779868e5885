//! CSV and JSON rendering of sweep rows.

use std::io::Write;

use serde::Serialize;

use super::{format_significant, ExactSum, SweepRow};

pub const CSV_HEADER: [&str; 14] = [
    "p",
    "case",
    "excluded",
    "M2",
    "Mtilde2",
    "a_inf",
    "d_p",
    "N_S",
    "f4",
    "f3",
    "f2",
    "avg3_running",
    "avg2_running",
    "avgS_running",
];

/// A sweep row with its running averages rendered to 12 significant digits.
/// Integers are kept verbatim; missing values are empty in CSV and `null` in
/// JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RenderedRow {
    pub p: u64,
    pub case: String,
    pub excluded: bool,
    #[serde(rename = "M2")]
    pub m2: Option<i64>,
    #[serde(rename = "Mtilde2")]
    pub m2_tilde: Option<i64>,
    pub a_inf: Option<i64>,
    pub d_p: Option<i64>,
    #[serde(rename = "N_S")]
    pub n_s: Option<u64>,
    pub f4: i64,
    pub f3: Option<i64>,
    pub f2: Option<i64>,
    pub avg3_running: Option<String>,
    pub avg2_running: Option<String>,
    #[serde(rename = "avgS_running")]
    pub avg_s_running: Option<String>,
}

/// Attaches running averages over the included rows seen so far.
pub fn render_rows(rows: &[SweepRow]) -> Vec<RenderedRow> {
    let fmt = |x: f64| format_significant(x, 12);
    let mut n = 0u64;
    let mut n3 = 0u64;
    let mut f3_sum = 0f64;
    let (mut f2, mut s) = (ExactSum::new(), 0u64);
    let mut out = Vec::with_capacity(rows.len());
    for row in rows {
        if let (false, Some(f2_row), Some(n_s)) = (row.excluded, row.f2, row.n_s) {
            n += 1;
            f2.add(f2_row, row.p);
            s += n_s;
            if let Some(f3) = row.f3 {
                n3 += 1;
                f3_sum += f3 as f64 / (row.p as f64).powf(1.5);
            }
        }
        out.push(RenderedRow {
            p: row.p,
            case: row.case.map_or_else(String::new, |c| c.kind.name().to_string()),
            excluded: row.excluded,
            m2: row.m2,
            m2_tilde: row.m2_tilde,
            a_inf: row.a_inf,
            d_p: row.d_p,
            n_s: row.n_s,
            f4: row.f4,
            f3: row.f3,
            f2: row.f2,
            avg3_running: (n3 > 0).then(|| fmt(f3_sum / n3 as f64)),
            avg2_running: (n > 0).then(|| fmt(f2.mean_f64(n))),
            avg_s_running: (n > 0).then(|| fmt(s as f64 / n as f64)),
        });
    }
    out
}

/// Writes the header and one line per row.
pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in render_rows(rows) {
        w.serialize(row)?;
    }
    w.flush()
}
