//! Extend a projection-algebra homomorphism `P → P(S)` to an evaluator on
//! chain-semigroup classes, the universal property of the free object.
//!
//! ```text
//! cargo run --example extend_homomorphism
//! ```

use drckit::algebra::{enumerate_homomorphisms, enumerate_strong_algebras};
use drckit::chain::{normalize_word, seeded_words, HomExtension};
use drckit::semigroup::enumerate_drc_restriction_semigroups;

fn main() -> drckit::Result<()> {
    let alg = enumerate_strong_algebras(3, true)?
        .into_iter()
        .find(|a| !a.classify().commutative)
        .expect("noncommutative strong algebra of order 3");
    println!(
        "source algebra: × = {:?}, ⋆ = {:?}",
        alg.times_table(),
        alg.star_table()
    );

    let mut shown = 0;
    for target in enumerate_drc_restriction_semigroups(4, true)? {
        let (pal, carrier) = target.projection_algebra()?;
        let homs = enumerate_homomorphisms(&alg, &pal);
        if homs.is_empty() || carrier.len() < 2 {
            continue;
        }
        println!(
            "\ntarget of order {} with projections {carrier:?}: {} homomorphisms",
            target.len(),
            homs.len()
        );
        for map in homs.iter().take(2) {
            let phi: Vec<usize> = map.iter().map(|&i| carrier[i]).collect();
            let ext = HomExtension::new(&alg, &phi, &target)?;
            println!("  φ = {phi:?}");
            for word in seeded_words(alg.len(), 3, 5, 7) {
                let path = normalize_word(&alg, &word)?;
                let direct = ext.eval_letters(&word);
                let through_normal_form = ext.eval_path(&path);
                println!(
                    "    word {word:?} → path {:?} → element {through_normal_form} (direct product {direct})",
                    path.seq()
                );
                assert_eq!(direct, through_normal_form);
            }
        }
        shown += 1;
        if shown == 2 {
            break;
        }
    }
    Ok(())
}
