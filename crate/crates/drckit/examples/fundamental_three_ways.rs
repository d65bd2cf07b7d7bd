//! Build the projection-generated fundamental semigroup of a strong
//! projection algebra three independent ways and confirm they agree:
//!
//! 1. signatures of chain-semigroup classes,
//! 2. partial projection-algebra isomorphisms between downsets,
//! 3. pairs of total composite maps.
//!
//! ```text
//! cargo run --release --example fundamental_three_ways
//! ```

use drckit::algebra::enumerate_strong_algebras;
use drckit::chain::build_fundamental;
use drckit::munn::{build_e_of_smp, build_pair_model};
use drckit::semigroup::find_iso_221;

fn main() -> drckit::Result<()> {
    for n in 1..=3 {
        for alg in enumerate_strong_algebras(n, true)? {
            let by_signatures = build_fundamental(&alg)?;
            let by_partial_isos = build_e_of_smp(&alg)?;
            let by_map_pairs = build_pair_model(&alg)?;
            let orders = (
                by_signatures.semigroup.len(),
                by_partial_isos.semigroup.len(),
                by_map_pairs.semigroup.len(),
            );
            let iso_a = find_iso_221(&by_signatures.semigroup, &by_partial_isos.semigroup);
            let iso_b = find_iso_221(&by_signatures.semigroup, &by_map_pairs.semigroup);
            println!(
                "algebra order {n}, × = {:?}: model orders {:?}, isomorphic: {}",
                alg.times_table(),
                orders,
                iso_a.is_some() && iso_b.is_some()
            );
            assert_eq!(orders.0, orders.1);
            assert_eq!(orders.0, orders.2);
        }
    }

    // a closer look at one noncommutative case
    let alg = enumerate_strong_algebras(3, true)?
        .into_iter()
        .find(|a| !a.classify().commutative)
        .unwrap();
    let model = build_fundamental(&alg)?;
    println!(
        "\nrepresentative paths of the fundamental model over × = {:?}:",
        alg.times_table()
    );
    for (i, rep) in model.reps.iter().enumerate() {
        println!(
            "  element {i}: path {:?}, ⁺ = {}, * = {}",
            rep.seq(),
            model.semigroup.plus(i),
            model.semigroup.star(i)
        );
    }
    println!("fundamental: {}", model.semigroup.is_fundamental()?);
    println!(
        "projection-generated: {}",
        model.semigroup.is_projection_generated()?
    );
    Ok(())
}
