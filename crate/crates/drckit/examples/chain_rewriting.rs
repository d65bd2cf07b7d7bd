//! Rewrite words over the projection alphabet into path normal form and
//! semi-decide the chain congruence by bounded bidirectional search.
//!
//! ```text
//! cargo run --example chain_rewriting
//! ```

use drckit::algebra::enumerate_strong_algebras;
use drckit::chain::{
    elementary_moves, is_admissible, normalize_word, paths_equivalent, Budget, Equivalence,
};
use drckit::paths::PPath;

fn main() -> drckit::Result<()> {
    // pick an algebra whose admissible triples swap two distinct middles
    let alg = enumerate_strong_algebras(3, true)?
        .into_iter()
        .find(|a| {
            (0..a.len()).any(|e| {
                (0..a.len()).any(|p| {
                    (0..a.len()).any(|f| is_admissible(a, e, p, f) && a.star(e, p) != a.times(p, f))
                })
            })
        })
        .expect("an order-3 algebra with a nontrivial swap");
    println!(
        "algebra: × = {:?}, ⋆ = {:?}\n",
        alg.times_table(),
        alg.star_table()
    );

    println!("admissible triples (e, p, f) with a nontrivial swap:");
    for e in 0..alg.len() {
        for p in 0..alg.len() {
            for f in 0..alg.len() {
                if is_admissible(&alg, e, p, f) && alg.star(e, p) != alg.times(p, f) {
                    println!(
                        "  ({e}, {p}, {f})  rewrites ({e}, {}, {f}) ↔ ({e}, {}, {f})",
                        alg.star(e, p),
                        alg.times(p, f)
                    );
                }
            }
        }
    }

    // an arbitrary word folds to a path of the same length
    let word = vec![2, 0, 1, 2];
    let path = normalize_word(&alg, &word)?;
    println!("\nword {word:?} normalizes to the path {:?}", path.seq());

    // one-step rewrites of a path
    let start = PPath::new(&alg, path.seq())?;
    println!("one-step rewrites of {:?}:", start.seq());
    for next in elementary_moves(&alg, &start) {
        println!("  {:?}", next.seq());
    }

    // bounded search: equal, refuted, and budget-limited verdicts
    let doubled = normalize_word(&alg, &[2, 2])?;
    let single = normalize_word(&alg, &[2])?;
    let verdict = paths_equivalent(
        &alg,
        &doubled,
        &single,
        Budget::default_for(&doubled, &single),
    );
    println!("\n[2,2] ≈ [2]? {verdict:?}");

    let other = normalize_word(&alg, &[0])?;
    let verdict = paths_equivalent(&alg, &single, &other, Budget::default_for(&single, &other));
    println!("[2] ≈ [0]? {verdict:?} (sound refutation: endpoints differ)");

    let long = normalize_word(&alg, &[2, 2, 2])?;
    let tight = Budget::default_for(&long, &single).with_states(2);
    match paths_equivalent(&alg, &long, &single, tight) {
        Equivalence::Unknown => println!("[2,2,2] ≈ [2] under a 2-state budget: UNKNOWN"),
        v => println!("[2,2,2] ≈ [2] under a 2-state budget: {v:?}"),
    }
    let roomy = Budget::default_for(&long, &single);
    println!(
        "[2,2,2] ≈ [2] under the default budget: {:?}",
        paths_equivalent(&alg, &long, &single, roomy)
    );

    // the chain congruence is finer than the fundamental one: these two have
    // the same signature, so NO is impossible, yet no rewrite sequence shows
    // up within budget; the honest verdict stays UNKNOWN
    let (sym, p, q) = enumerate_strong_algebras(3, true)?
        .into_iter()
        .find_map(|a| {
            if !a.classify().symmetric {
                return None;
            }
            let pair = (0..a.len())
                .flat_map(|p| (0..a.len()).map(move |q| (p, q)))
                .find(|&(p, q)| p != q && a.friendly(p, q) && a.friendly(q, p))?;
            Some((a, pair.0, pair.1))
        })
        .expect("a symmetric algebra of order 3 with a nontrivial friendly pair");
    let zigzag = PPath::new(&sym, &[p, q, p, q])?;
    let short = PPath::new(&sym, &[p, q])?;
    println!(
        "\nover the symmetric algebra × = {:?}:\n[{p},{q},{p},{q}] ≈ [{p},{q}]? {:?} (same signature, search exhausted)",
        sym.times_table(),
        paths_equivalent(&sym, &zigzag, &short, Budget::default_for(&zigzag, &short))
    );
    Ok(())
}
