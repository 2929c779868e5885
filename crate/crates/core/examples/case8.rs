//! The pencil y^2 = (x^3 + 1) k + 1: brute-force second moments against the
//! closed form p^2 (2 + (-3/p)) - p (1 + (-3/p)).

use momentforge::bias::case8_second_moment;
use momentforge::counting::second_moment_brute;
use momentforge::field::{odd_primes_up_to, PrimeField};
use momentforge::pencil::Pencil;

fn main() -> momentforge::Result<()> {
    let pencil = Pencil::from_ints([1, 0, 0, 1], [1, 0, 0, 0])?;
    for p in odd_primes_up_to(50).into_iter().filter(|&p| p != 3) {
        let (_, brute) = second_moment_brute(&pencil, &PrimeField::new(p)?)?;
        println!("p = {p:>2}: brute {brute:>5}, closed form {:>5}", case8_second_moment(p));
    }
    Ok(())
}
