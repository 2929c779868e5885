//! The `momentforge` command line.
//!
//! Exit codes: 0 on success, 1 on invalid input, 2 when an identity check
//! fails.

mod verify;

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::bias::{bias_report, chebotarev_average, sweep, write_csv, BiasReport};
use crate::counting::{count_bundle, second_moment_brute, threefold_count_brute, CountBundle, Method};
use crate::field::{Field, FiniteField, PrimeField, PrimePower};
use crate::pencil::{classify, classify_mod_p, delta_infinity_flag, delta_polys, invariants, parse_pencil_spec, CaseLabel, Pencil};
use crate::polyalg::rational_irreducible_factor_count;

pub use verify::{field_orders, verify_suite, CheckTally, VerifyReport};
use verify::with_field;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_IDENTITY: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "momentforge", version, about = "Second moments of pencils of cubics over finite fields")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct PencilArg {
    /// `P=a3,a2,a1,a0;Q=b3,b2,b1,b0`, an inline JSON object, or `@file.json`.
    #[arg(long)]
    pencil: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify the pencil over Q, or its reduction modulo a prime.
    Classify {
        #[command(flatten)]
        pencil: PencilArg,
        /// Classify the reduction modulo this odd prime.
        #[arg(long = "mod")]
        modulus: Option<u64>,
    },
    /// Print the minors, S, resultants and the predicted bias.
    Invariants {
        #[command(flatten)]
        pencil: PencilArg,
    },
    /// Second moment and curve counts over one field.
    Moment {
        #[command(flatten)]
        pencil: PencilArg,
        /// Field order, a power p^k with k <= 3.
        #[arg(long)]
        q: u64,
        #[arg(long, default_value = "fast")]
        method: Method,
    },
    /// Run every identity check over all fields of order up to qmax.
    Verify {
        #[command(flatten)]
        pencil: PencilArg,
        #[arg(long, default_value_t = 31)]
        qmax: u64,
    },
    /// Per-prime stratification for all primes up to xmax, written as CSV
    /// (JSON with --json).
    Sweep {
        #[command(flatten)]
        pencil: PencilArg,
        #[arg(long)]
        xmax: u64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Predicted and empirical bias up to xmax.
    Bias {
        #[command(flatten)]
        pencil: PencilArg,
        #[arg(long)]
        xmax: u64,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Brute-force oracles.
    Oracle {
        #[command(subcommand)]
        oracle: OracleCommand,
    },
}

#[derive(Debug, Subcommand)]
enum OracleCommand {
    /// Count the threefold M over F_q and compare with q^3 + q^2 + M~2.
    Threefold {
        #[command(flatten)]
        pencil: PencilArg,
        #[arg(long)]
        q: u64,
    },
}

/// Parses `argv` (program name first), runs the command on stdout/stderr and
/// returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// [`run`] with explicit output streams.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INVALID
        }
    }
}

fn parse_pencil(arg: &PencilArg) -> crate::Result<Pencil> {
    Ok(parse_pencil_spec(&arg.pencil)?)
}

fn emit(out: &mut dyn Write, value: &serde_json::Value) -> crate::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(std::io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn execute(cli: &Cli, out: &mut dyn Write) -> crate::Result<i32> {
    match &cli.command {
        Command::Classify { pencil, modulus } => {
            let pencil = parse_pencil(pencil)?;
            let label = match modulus {
                Some(p) => classify_mod_p(&pencil, &PrimeField::new(*p)?)?,
                None => classify(&pencil)?,
            };
            print_label(cli.json, out, &pencil, *modulus, &label)?;
        }
        Command::Invariants { pencil } => {
            let pencil = parse_pencil(pencil)?;
            print_invariants(cli.json, out, &pencil)?;
        }
        Command::Moment { pencil, q, method } => {
            let pencil = parse_pencil(pencil)?;
            let bundle = with_field!(*q, |field| count_bundle(&pencil, &field, *method)?);
            print_bundle(cli.json, out, &pencil, &bundle)?;
        }
        Command::Verify { pencil, qmax } => {
            let pencil = parse_pencil(pencil)?;
            let report = verify_suite(&pencil, *qmax)?;
            if cli.json {
                emit(out, &serde_json::to_value(&report).expect("serializable"))?;
            } else {
                print_verify(out, &report)?;
            }
            return Ok(if report.all_passed() { EXIT_OK } else { EXIT_IDENTITY });
        }
        Command::Sweep { pencil, xmax, out: path, workers } => {
            let pencil = parse_pencil(pencil)?;
            let rows = sweep(&pencil, *xmax, *workers)?;
            let mut file = BufWriter::new(File::create(path)?);
            if cli.json {
                let rendered = crate::bias::render_rows(&rows);
                serde_json::to_writer_pretty(&mut file, &rendered).map_err(std::io::Error::from)?;
                writeln!(file)?;
            } else {
                write_csv(&rows, &mut file)?;
            }
            file.flush()?;
            let excluded = rows.iter().filter(|r| r.excluded).count();
            let broken: Vec<u64> = rows
                .iter()
                .filter(|r| r.stratification_holds() == Some(false))
                .map(|r| r.p)
                .collect();
            writeln!(
                out,
                "wrote {} rows ({} excluded) to {}",
                rows.len(),
                excluded,
                path.display()
            )?;
            if !broken.is_empty() {
                writeln!(out, "stratification M2 = f4 + f3 + f2 fails at p = {broken:?}")?;
                return Ok(EXIT_IDENTITY);
            }
        }
        Command::Bias { pencil, xmax, workers } => {
            let pencil = parse_pencil(pencil)?;
            let (_, report) = bias_report(&pencil, *xmax, *workers)?;
            let cheb = chebotarev_average(&delta_polys(&pencil).s, *xmax).ok();
            print_bias(cli.json, out, &report, cheb.map(|c| c.mean()))?;
            if !report.identity_holds() {
                return Ok(EXIT_IDENTITY);
            }
        }
        Command::Oracle {
            oracle: OracleCommand::Threefold { pencil, q },
        } => {
            let pencil = parse_pencil(pencil)?;
            let (m, m2_tilde) = with_field!(*q, |field| {
                let m = threefold_count_brute(&pencil, &field)?;
                let m2_tilde = if field.is_odd() { second_moment_brute(&pencil, &field)?.1 } else { 0 };
                (m, m2_tilde)
            });
            let expected = (q * q * q + q * q) as i64 + m2_tilde;
            let holds = m as i64 == expected;
            if cli.json {
                emit(
                    out,
                    &json!({"q": q, "threefold": m, "Mtilde2": m2_tilde, "q3_q2_plus_Mtilde2": expected, "holds": holds}),
                )?;
            } else {
                writeln!(out, "#M(F_{q}) = {m}")?;
                writeln!(out, "q^3 + q^2 + M~2 = {expected}  (M~2 = {m2_tilde})")?;
                writeln!(out, "{}", if holds { "identity holds" } else { "IDENTITY FAILS" })?;
            }
            if !holds {
                return Ok(EXIT_IDENTITY);
            }
        }
    }
    Ok(EXIT_OK)
}

fn label_json(label: &CaseLabel) -> serde_json::Value {
    json!({
        "case": label.kind.name(),
        "row": label.kind.row(),
        "c1": label.c1,
        "c2": label.c2,
        "c3": label.c3,
        "typical": label.typical,
    })
}

fn print_label(
    as_json: bool,
    out: &mut dyn Write,
    pencil: &Pencil,
    modulus: Option<u64>,
    label: &CaseLabel,
) -> crate::Result<()> {
    if as_json {
        let mut v = label_json(label);
        v["pencil"] = json!(pencil.to_string());
        v["mod"] = json!(modulus);
        return emit(out, &v);
    }
    writeln!(out, "{}", label.kind)?;
    writeln!(
        out,
        "mu23 = 0: {}, d = 0: {}, cubic scalar = 0: {}, typical: {}",
        label.c1, label.c2, label.c3, label.typical
    )?;
    Ok(())
}

fn print_invariants(as_json: bool, out: &mut dyn Write, pencil: &Pencil) -> crate::Result<()> {
    let inv = invariants(pencil);
    let label = classify(pencil).ok();
    let m = rational_irreducible_factor_count(&inv.s).ok();
    let delta = delta_infinity_flag(pencil);
    let predicted = label.filter(|l| l.typical).and(m).map(|m| -(m as i64) - i64::from(delta));
    let opt = |v: &Option<num_rational::BigRational>| v.as_ref().map(ToString::to_string);
    let mut minors = serde_json::Map::new();
    for i in 0..4 {
        for j in i + 1..4 {
            minors.insert(format!("mu{i}{j}"), json!(inv.mu(i, j).to_string()));
        }
    }
    let v = json!({
        "pencil": pencil.to_string(),
        "minors": minors,
        "d": inv.d.to_string(),
        "resultant": inv.resultant.to_string(),
        "S": inv.s.to_string(),
        "S_tilde": inv.s_tilde.to_string(),
        "T": inv.t.to_string(),
        "disc_S": opt(&inv.disc_s),
        "disc_P": opt(&inv.disc_p),
        "disc_Q": opt(&inv.disc_q),
        "conic_discriminant": inv.conic_discriminant.to_string(),
        "resultant_ST": opt(&inv.resultant_st),
        "resultant_identity": inv.resultant_identity_holds(),
        "conic_identity": inv.conic_identity_holds(),
        "m": m,
        "delta": delta,
        "case": label.map(|l| l.kind.name()),
        "typical": label.map(|l| l.typical),
        "predicted_bias": predicted,
    });
    if as_json {
        return emit(out, &v);
    }
    for (key, value) in v.as_object().expect("object") {
        let shown = match value {
            serde_json::Value::String(s) => s.clone(),
            serde_json::Value::Object(map) => map
                .iter()
                .map(|(k, v)| format!("{k}={}", v.as_str().unwrap_or_default()))
                .collect::<Vec<_>>()
                .join(" "),
            serde_json::Value::Null => "-".into(),
            other => other.to_string(),
        };
        writeln!(out, "{key:<20} {shown}")?;
    }
    Ok(())
}

fn print_bundle(as_json: bool, out: &mut dyn Write, pencil: &Pencil, b: &CountBundle) -> crate::Result<()> {
    if as_json {
        let mut v = serde_json::to_value(b).expect("serializable");
        v["pencil"] = json!(pencil.to_string());
        v["case"] = b.case.as_ref().map_or(serde_json::Value::Null, label_json);
        return emit(out, &v);
    }
    writeln!(out, "q = {}  method = {}", b.q, b.method)?;
    if let Some(case) = &b.case {
        writeln!(out, "case      {case}")?;
    }
    writeln!(out, "M~2       {}", b.m2_tilde)?;
    writeln!(out, "M2        {}", b.m2)?;
    writeln!(out, "a_inf     {}", b.a_inf)?;
    writeln!(out, "#Delta    {}", b.delta)?;
    writeln!(out, "#Delta~   {}", b.delta_tilde)?;
    writeln!(out, "#S        {}", b.s)?;
    writeln!(out, "#P        {}", b.p)?;
    writeln!(out, "#(P & S)  {}", b.p_and_s)?;
    writeln!(out, "#C        {}", b.c)?;
    writeln!(out, "#C~       {}", b.c_tilde)?;
    if let Some(sc) = &b.smooth {
        writeln!(out, "#Delta_bar {}", sc.delta_bar)?;
        writeln!(out, "#C_bar    {}", sc.c_bar)?;
        writeln!(out, "#C2       {}", sc.c2)?;
        writeln!(out, "d         {}", sc.d)?;
    }
    Ok(())
}

fn print_verify(out: &mut dyn Write, report: &VerifyReport) -> crate::Result<()> {
    writeln!(out, "pencil {}  fields q <= {} ({} orders)", report.pencil, report.qmax, report.orders.len())?;
    for c in &report.checks {
        let status = if c.failed > 0 {
            "FAIL"
        } else if c.passed == 0 {
            "skip"
        } else {
            "ok"
        };
        writeln!(
            out,
            "{status:<5}{:<20} pass {:>3}  fail {:>3}  skip {:>3}  {}",
            c.name, c.passed, c.failed, c.skipped, c.statement
        )?;
        for f in &c.failures {
            writeln!(out, "       {f}")?;
        }
    }
    Ok(())
}

fn print_bias(as_json: bool, out: &mut dyn Write, report: &BiasReport, cheb: Option<f64>) -> crate::Result<()> {
    let fmt = |x: f64| crate::bias::format_significant(x, 12);
    if as_json {
        let mut v = report.to_json();
        v["chebotarev_average"] = json!(cheb.map(fmt));
        return emit(out, &v);
    }
    match report.predicted {
        Some(b) => writeln!(out, "predicted bias (-m - delta)  {b}")?,
        None => writeln!(out, "predicted bias               - (pencil is not typical)")?,
    }
    writeln!(out, "primes <= {}                {} ({} included)", report.x, report.total_primes, report.included)?;
    writeln!(out, "avg f2/p                     {}", fmt(report.avg2_f64()))?;
    writeln!(out, "avg #S                       {}", fmt(report.avg_s_f64()))?;
    writeln!(out, "avg a_inf^2/p                {}", fmt(report.avg_a_inf2_f64()))?;
    if let Some(a3) = report.avg3 {
        writeln!(out, "avg f3/p^1.5                 {}", fmt(a3))?;
    }
    if let Some(c) = cheb {
        writeln!(out, "mean roots of S mod p        {}", fmt(c))?;
    }
    writeln!(
        out,
        "avg2 = -avgS - avg a_inf^2   {}",
        if report.identity_holds() { "exact" } else { "FAILS" }
    )?;
    if !report.excluded.is_empty() {
        let ps: Vec<String> = report.excluded.iter().map(|(p, _)| p.to_string()).collect();
        writeln!(out, "excluded primes              {}", ps.join(" "))?;
    }
    Ok(())
}
