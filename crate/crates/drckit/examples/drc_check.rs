//! Verify the DRC and DRC-ample axioms on bi-unary semigroups, derive their
//! projection algebras, and compute μ, quotients, and special-class flags.
//!
//! ```text
//! cargo run --example drc_check
//! ```

use drckit::algebra::ProjectionAlgebra;
use drckit::semigroup::{classify_special, BiUnarySemigroup};

fn inspect(name: &str, s: &BiUnarySemigroup) -> drckit::Result<()> {
    println!("{name} (order {}):", s.len());
    let drc = s.check_drc()?;
    println!(
        "  DRC axioms: {}",
        if drc.ok {
            "pass".into()
        } else {
            format!("{:?}", drc.witness)
        }
    );
    if !drc.ok {
        println!();
        return Ok(());
    }
    let ample = s.check_ample()?;
    println!(
        "  ample conditions: {}",
        if ample.ok {
            "pass".into()
        } else {
            format!("{:?}", ample.witness)
        }
    );
    if !ample.ok {
        println!();
        return Ok(());
    }
    let (alg, carrier) = s.projection_algebra()?;
    println!(
        "  projections {carrier:?}, strong algebra: {}",
        alg.classify().strong
    );
    let mu = s.mu()?;
    println!("  μ-blocks: {:?}", mu.blocks);
    println!("  fundamental: {}", s.is_fundamental()?);
    println!("  projection-generated: {}", s.is_projection_generated()?);
    let flags = classify_special(s)?;
    println!(
        "  restriction {} / P-restriction {} / generalized regular ° {}",
        flags.restriction, flags.p_restriction, flags.generalized_regular_circ
    );
    if let Some(circ) = flags.circ {
        println!("  ° table: {circ:?}");
    }
    println!();
    Ok(())
}

fn main() -> drckit::Result<()> {
    let chain = BiUnarySemigroup::from_semilattice(&ProjectionAlgebra::chain_semilattice(3));
    inspect("3-chain semilattice", &chain)?;

    let group = BiUnarySemigroup::cyclic_group(3);
    inspect("cyclic group of order 3 with trivial unaries", &group)?;

    // the Clifford semigroup {zero} ∪ C2: fundamental would fail since the
    // group part collapses under μ
    let clifford = BiUnarySemigroup::new(
        3,
        vec![0, 0, 0, 0, 1, 2, 0, 2, 1],
        vec![0, 1, 1],
        vec![0, 1, 1],
    )?;
    inspect("Clifford semigroup 0 ∪ C2", &clifford)?;
    let mu = clifford.mu()?;
    let quotient = clifford.quotient(&mu)?;
    println!(
        "quotient of the Clifford semigroup by μ has order {}",
        quotient.len()
    );

    // a table that is associative but fails a DRC axiom
    let bad = BiUnarySemigroup::new(2, vec![0, 0, 0, 1], vec![1, 1], vec![0, 1])?;
    inspect("broken unary tables", &bad)?;
    Ok(())
}
