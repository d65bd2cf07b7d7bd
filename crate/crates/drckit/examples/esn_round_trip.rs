//! The two functors between DRC-restriction semigroups and chain projection
//! ordered categories, composed both ways on concrete data.
//!
//! ```text
//! cargo run --example esn_round_trip
//! ```

use drckit::category::{classify_cpoc, from_semigroup, round_trip_category, to_semigroup};
use drckit::semigroup::{classify_special, enumerate_drc_restriction_semigroups};

fn main() -> drckit::Result<()> {
    for n in 1..=3 {
        for s in enumerate_drc_restriction_semigroups(n, true)? {
            let c = from_semigroup(&s)?;
            let report = c.check_axioms();
            let back = to_semigroup(&c)?;
            let cat_ok = round_trip_category(&c)?.is_ok();
            let sflags = classify_special(&s)?;
            let cflags = classify_cpoc(&c)?;
            println!("order {n}, mul = {:?}:", s.mul_table());
            println!(
                "  axioms pass {}, S(C(S)) = S: {}, C(S(C)) = C: {}",
                report.all_pass(),
                back == s,
                cat_ok
            );
            println!(
                "  flags: groupoid {} ↔ generalized regular ° {} | symmetric {} ↔ P-restriction {} | commutative {} ↔ restriction {}",
                cflags.groupoid,
                sflags.generalized_regular_circ,
                cflags.symmetric,
                sflags.p_restriction,
                cflags.commutative,
                sflags.restriction
            );
            assert!(report.all_pass() && back == s && cat_ok);
        }
    }

    // peek inside one category: composition is partial, the product is total
    let s = enumerate_drc_restriction_semigroups(3, true)?
        .into_iter()
        .find(|s| s.projections().len() == 2)
        .unwrap();
    let c = from_semigroup(&s)?;
    println!(
        "\na category with {} arrows and objects {:?}:",
        c.arrow_count(),
        c.objects()
    );
    println!(
        "  partial composition defined on {} pairs",
        c.comp_table().len()
    );
    for a in 0..c.arrow_count() {
        for b in 0..c.arrow_count() {
            let bullet = drckit::category::bullet(&c, a, b)?;
            assert_eq!(bullet, s.mul(a, b));
        }
    }
    println!("  the sandwich product reproduces the multiplication table");
    println!("  ε table holds {} paths", c.eval_table().len());
    Ok(())
}
