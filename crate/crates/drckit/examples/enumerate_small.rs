//! Exhaustively enumerate the small strong projection algebras and
//! DRC-restriction semigroups, with and without isomorphism dedup.
//!
//! ```text
//! cargo run --release --example enumerate_small
//! ```

use drckit::algebra::enumerate_strong_algebras;
use drckit::semigroup::{classify_special, enumerate_drc_restriction_semigroups};

fn main() -> drckit::Result<()> {
    println!("strong projection algebras:");
    for n in 1..=4 {
        let all = enumerate_strong_algebras(n, false)?;
        let reps = enumerate_strong_algebras(n, true)?;
        let commutative = all.iter().filter(|a| a.classify().commutative).count();
        println!(
            "  order {n}: {:4} labeled, {:3} up to isomorphism, {commutative} commutative",
            all.len(),
            reps.len()
        );
    }

    println!("\nDRC-restriction semigroups:");
    for n in 1..=4 {
        let all = enumerate_drc_restriction_semigroups(n, false)?;
        let reps = enumerate_drc_restriction_semigroups(n, true)?;
        let mut restriction = 0;
        let mut p_restriction = 0;
        let mut regular = 0;
        for s in &reps {
            let f = classify_special(s)?;
            restriction += f.restriction as usize;
            p_restriction += f.p_restriction as usize;
            regular += f.generalized_regular_circ as usize;
        }
        println!(
            "  order {n}: {:4} labeled, {:3} up to isomorphism \
             (restriction {restriction}, P-restriction {p_restriction}, \
             generalized regular ° {regular})",
            all.len(),
            reps.len()
        );
    }
    Ok(())
}
