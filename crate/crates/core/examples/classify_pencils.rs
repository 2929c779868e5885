//! Classify a handful of pencils over Q and modulo small primes.

use momentforge::field::PrimeField;
use momentforge::pencil::{classify, classify_mod_p, families, parse_pencil_spec};

fn main() -> momentforge::Result<()> {
    let pencils = [
        ("worked example", parse_pencil_spec("P=0,0,1,0;Q=1,0,0,1")?),
        ("x^3 + 1 against 1", parse_pencil_spec("P=1,0,0,1;Q=0,0,0,1")?),
        ("shared root", parse_pencil_spec("P=0,1,2,0;Q=0,1,1,-2")?),
        ("bias -5 family", families::bias_minus_five()),
    ];
    for (name, pencil) in &pencils {
        let over_q = classify(pencil)?;
        println!("{name:<18} {pencil}");
        println!("  over Q: {over_q}");
        let mod_p: Vec<String> = [5u64, 7, 11, 13, 17]
            .iter()
            .map(|&p| match classify_mod_p(pencil, &PrimeField::new(p).unwrap()) {
                Ok(label) => format!("{p}:{}", label.kind),
                Err(_) => format!("{p}:-"),
            })
            .collect();
        println!("  mod p:  {}", mod_p.join(" "));
    }
    Ok(())
}
