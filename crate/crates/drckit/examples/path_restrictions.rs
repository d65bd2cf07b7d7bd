//! Walk the path category of a strong projection algebra: compose paths,
//! restrict them on both sides, compare them in the path order, and read off
//! the Θ/Δ composites.
//!
//! ```text
//! cargo run --example path_restrictions
//! ```

use drckit::algebra::enumerate_strong_algebras;
use drckit::paths::{
    compose, delta_of_path, enumerate_paths, left_restrict, path_leq, right_restrict,
    theta_of_path, PPath,
};

fn main() -> drckit::Result<()> {
    // a noncommutative strong algebra has nontrivial ℱ-chains
    let alg = enumerate_strong_algebras(3, true)?
        .into_iter()
        .find(|a| !a.classify().commutative)
        .expect("noncommutative strong algebra of order 3");
    println!("working over the algebra with tables");
    println!("  × = {:?}", alg.times_table());
    println!("  ⋆ = {:?}", alg.star_table());

    let paths = enumerate_paths(&alg, 3);
    println!("{} paths of length ≤ 3\n", paths.len());

    let longest = paths.iter().rev().find(|p| p.len() == 3).unwrap();
    println!(
        "a path 𝔭 = {:?} with d = {}, r = {}",
        longest.seq(),
        longest.dom(),
        longest.cod()
    );

    for q in 0..alg.len() {
        if alg.leq(q, longest.dom()) {
            let l = left_restrict(&alg, q, longest)?;
            println!("  left restriction at {q}: {:?}", l.seq());
            // a left restriction is also a right restriction at its range
            assert_eq!(right_restrict(&alg, longest, l.cod())?, l);
        }
    }

    // the order compares a path with its restrictions
    let below: Vec<&PPath> = paths
        .iter()
        .filter(|p| path_leq(&alg, p, longest))
        .collect();
    println!(
        "  paths below 𝔭: {:?}",
        below.iter().map(|p| p.seq()).collect::<Vec<_>>()
    );

    // Θ and Δ are mutually inverse between the endpoint downsets
    let theta = theta_of_path(&alg, longest);
    let delta = delta_of_path(&alg, longest);
    println!("  Θ_𝔭 = {theta:?}");
    println!("  Δ_𝔭 = {delta:?}");
    for x in alg.downset(longest.dom()) {
        assert_eq!(delta[theta[x]], x);
    }
    println!("  Δ_𝔭 inverts Θ_𝔭 on {:?}", alg.downset(longest.dom()));

    // composition concatenates on the junction
    let p = PPath::new(&alg, &longest.seq()[..2])?;
    let q = PPath::new(&alg, &longest.seq()[1..])?;
    println!(
        "  {:?} ∘ {:?} = {:?}",
        p.seq(),
        q.seq(),
        compose(&alg, &p, &q)?.seq()
    );
    Ok(())
}
