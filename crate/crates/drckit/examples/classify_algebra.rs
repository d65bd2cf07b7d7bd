//! Classify projection algebras given by their `×` and `⋆` tables.
//!
//! ```text
//! cargo run --example classify_algebra
//! ```

use drckit::algebra::ProjectionAlgebra;

fn report(name: &str, alg: &ProjectionAlgebra) {
    let c = alg.classify();
    println!("{name} (order {}):", alg.len());
    println!(
        "  left {} / right {} / two-sided {}",
        c.left, c.right, c.two_sided
    );
    println!(
        "  strong {} / symmetric {} / commutative {}",
        c.strong, c.symmetric, c.commutative
    );
    match &c.first_violation {
        Some(v) => println!("  first violation: ({}) at {:?}", v.axiom, v.witness),
        None => println!("  no violations"),
    }
    println!();
}

fn main() -> drckit::Result<()> {
    // a chain meet-semilattice: the best-behaved projection algebra
    let chain = ProjectionAlgebra::chain_semilattice(3);
    report("3-chain semilattice", &chain);

    // the order on a two-sided algebra, and the maps θ_p and δ_p
    println!("order of the 3-chain: pairs (e, f) with e ≤ f");
    for e in 0..3 {
        for f in 0..3 {
            if chain.leq(e, f) {
                print!("  ({e}, {f})");
            }
        }
    }
    println!(
        "\nθ_1 = {:?}, δ_1 = {:?}",
        chain.theta_map(1),
        chain.delta_map(1)
    );
    println!("downset of 1 = {:?}\n", chain.downset(1));

    // a deliberately broken table: 0×1 = 1 wrecks the left axioms
    let broken = ProjectionAlgebra::new(2, vec![0, 1, 0, 0], vec![0, 0, 0, 0])?;
    report("broken table", &broken);

    // a noncommutative strong algebra found by enumeration
    let exotic = drckit::algebra::enumerate_strong_algebras(3, true)?
        .into_iter()
        .find(|alg| !alg.classify().commutative)
        .expect("the order-3 corpus has noncommutative strong algebras");
    report("noncommutative strong algebra of order 3", &exotic);
    println!("its ℱ relation:");
    for p in 0..exotic.len() {
        for q in 0..exotic.len() {
            if exotic.friendly(p, q) {
                print!("  {p} ℱ {q}");
            }
        }
    }
    println!();
    Ok(())
}
