//! The closed form of sum_t chi(a t^2 + b t + c) against the literal sum.

use momentforge::field::{char_sum_quadratic, Field, FiniteField, Ring};

fn main() -> momentforge::Result<()> {
    for q in [3u64, 5, 7, 9, 25] {
        let f = Field::with_order(q)?.with_residue_table();
        let elems: Vec<_> = f.elements().collect();
        let mut mismatches = 0;
        for a in &elems {
            for b in &elems {
                for c in &elems {
                    let literal: i64 = elems
                        .iter()
                        .map(|t| i64::from(f.chi(&f.add(&f.mul(&f.add(&f.mul(a, t), b), t), c))))
                        .sum();
                    if char_sum_quadratic(&f, a, b, c)? != literal {
                        mismatches += 1;
                    }
                }
            }
        }
        println!("q = {q:>2}: {} triples, {mismatches} mismatches", q * q * q);
    }
    Ok(())
}
