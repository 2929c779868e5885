//! A short prime sweep: per-prime stratification, running averages and the
//! predicted bias.

use momentforge::bias::{bias_report, chebotarev_average, write_csv};
use momentforge::pencil::{delta_polys, families};

fn main() -> momentforge::Result<()> {
    let pencil = families::bias_minus_five();
    let x = 20_000;
    let (rows, report) = bias_report(&pencil, x, None)?;
    let mut csv = Vec::new();
    write_csv(&rows[..8], &mut csv)?;
    print!("{}", String::from_utf8_lossy(&csv));
    println!("...");
    println!("predicted  {:?}", report.predicted);
    println!("avg2       {:.5}", report.avg2_f64());
    println!("avgS       {:.5}", report.avg_s_f64());
    println!("avg a^2/p  {:.5}", report.avg_a_inf2_f64());
    println!("avg3       {:.5}", report.avg3.unwrap_or(f64::NAN));
    println!("identity   {}", report.identity_holds());
    let cheb = chebotarev_average(&delta_polys(&pencil).s, x)?;
    println!("roots of S {:.5} over {} primes", cheb.mean(), cheb.primes);
    Ok(())
}
