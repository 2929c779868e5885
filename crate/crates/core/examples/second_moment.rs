//! The second moment by brute force, by the O(q) curve formula, and with
//! smooth-model counts, over prime and extension fields.

use momentforge::counting::{count_bundle, Method};
use momentforge::field::{Field, PrimeField};
use momentforge::pencil::families;

fn main() -> momentforge::Result<()> {
    let pencil = families::bias_minus_five();
    println!("{:>5} {:>10} {:>10} {:>6} {:>6}", "q", "brute", "fast", "#S", "d");
    for q in [17u64, 23, 29, 31, 49, 121, 289] {
        let field = Field::with_order(q)?.with_residue_table();
        let brute = count_bundle(&pencil, &field, Method::Brute)?;
        let fast = count_bundle(&pencil, &field, Method::Fast)?;
        let d = count_bundle(&pencil, &field, Method::Smooth)
            .ok()
            .and_then(|b| b.smooth)
            .map_or("-".to_string(), |s| s.d.to_string());
        println!("{q:>5} {:>10} {:>10} {:>6} {d:>6}", brute.m2_tilde, fast.m2_tilde, fast.s);
    }
    // The fast path alone reaches much larger primes.
    let field = PrimeField::new(100_003)?;
    let t = std::time::Instant::now();
    let fast = count_bundle(&pencil, &field, Method::Smooth)?;
    println!(
        "p = 100003: M~2 = {}, d = {} ({:.1} ms)",
        fast.m2_tilde,
        fast.smooth.unwrap().d,
        t.elapsed().as_secs_f64() * 1e3
    );
    Ok(())
}
