//! Zeta numerators of the genus 1, 2 and 3 curves attached to a typical
//! pencil, reconstructed from counts over F_p, F_p^2 and F_p^3.

use momentforge::counting::{reconstruct_l, smooth_counts};
use momentforge::field::Field;
use momentforge::pencil::families;

fn main() -> momentforge::Result<()> {
    let pencil = families::bias_minus_five();
    let p = 17;
    let counts = (1..=3)
        .map(|k| smooth_counts(&pencil, &Field::new(p, k)?.with_residue_table()).map_err(Into::into))
        .collect::<momentforge::Result<Vec<_>>>()?;
    let curves = [
        ("Delta_bar", counts.iter().map(|c| c.delta_bar).take(1).collect::<Vec<_>>()),
        ("C2", counts.iter().map(|c| c.c2).take(2).collect()),
        ("C_bar", counts.iter().map(|c| c.c_bar).collect()),
    ];
    for (name, n) in curves {
        let l = reconstruct_l(p, &n)?;
        let coeffs: Vec<String> = l.coeffs.iter().map(ToString::to_string).collect();
        println!("{name:<10} genus {} L = [{}]", l.genus, coeffs.join(", "));
        println!(
            "           Weil: {}, max | |alpha| - sqrt p | = {:.2e}",
            l.is_weil(1e-9),
            l.max_modulus_deviation().unwrap_or(f64::NAN)
        );
    }
    Ok(())
}
