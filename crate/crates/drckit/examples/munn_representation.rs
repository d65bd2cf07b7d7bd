//! The fundamental representation `a ↦ ν_a` into the Munn-style semigroup of
//! partial isomorphisms: kernel, fundamental quotients, and the pair form.
//!
//! ```text
//! cargo run --example munn_representation
//! ```

use drckit::munn::{gamma, pair_repr, phi_s, smp_product, PartialIso};
use drckit::semigroup::{enumerate_drc_restriction_semigroups, BiUnarySemigroup};

fn main() -> drckit::Result<()> {
    // the Clifford semigroup {zero} ∪ C2 is not fundamental: the group part
    // is collapsed by μ
    let clifford = BiUnarySemigroup::new(
        3,
        vec![0, 0, 0, 0, 1, 2, 0, 2, 1],
        vec![0, 1, 1],
        vec![0, 1, 1],
    )?;
    let repr = phi_s(&clifford)?;
    println!("Clifford semigroup 0 ∪ C2:");
    for (a, nu) in repr.images.iter().enumerate() {
        println!("  ν_{a}: {}↓ → {}↓ via {:?}", nu.p, nu.q, nu.pairs);
    }
    println!("  kernel blocks {:?}", repr.kernel.blocks);
    println!("  μ blocks      {:?}", clifford.mu()?.blocks);
    println!("  fundamental: {}\n", clifford.is_fundamental()?);

    // γ maps and the semigroup product of partial isomorphisms
    let (alg, _) = clifford.projection_algebra()?;
    for p in 0..alg.len() {
        for q in 0..alg.len() {
            if alg.friendly(p, q) && p != q {
                let g = gamma(&alg, p, q)?;
                println!(
                    "γ_{{{p},{q}}} = {:?}, inverse {:?}",
                    g.pairs,
                    g.inverse().pairs
                );
            }
        }
    }
    let id0 = PartialIso::identity(&alg, 0);
    let id1 = PartialIso::identity(&alg, 1);
    println!(
        "id₀ • id₁ = {:?} (a γ map between the meet and join)\n",
        smp_product(&alg, &id0, &id1)
    );

    // the pair representation is injective and multiplicative
    let (theta, delta) = pair_repr(&alg, &id1);
    println!("pair form of id₁: θ-side {theta:?}, δ-side {delta:?}\n");

    // survey: how many small DRC-restriction semigroups are fundamental?
    for n in 1..=4 {
        let reps = enumerate_drc_restriction_semigroups(n, true)?;
        let fundamental = reps.iter().filter(|s| s.is_fundamental().unwrap()).count();
        println!(
            "order {n}: {fundamental} of {} isomorphism classes are fundamental",
            reps.len()
        );
    }
    Ok(())
}
