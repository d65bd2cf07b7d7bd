//! Structural laws verified over exhaustively enumerated instances: small
//! strong projection algebras and small DRC-restriction semigroups.

use std::sync::OnceLock;

use drckit::algebra::{
    compose_maps, enumerate_homomorphisms, enumerate_strong_algebras, is_homomorphism,
    ProjectionAlgebra,
};
use drckit::category::{from_semigroup, to_semigroup};
use drckit::chain::{
    build_fundamental, chain_product, elementary_moves, fundamental_signature, is_admissible,
    normalize_word, paths_equivalent, seeded_words, Budget, Equivalence, HomExtension,
};
use drckit::munn::{build_e_of_smp, gamma, pair_repr, phi_s, smp_product, PartialIso};
use drckit::paths::{
    compose, delta_of_path, enumerate_paths, left_restrict, path_leq, right_restrict,
    theta_of_path, PPath,
};
use drckit::semigroup::{
    classify_special, enumerate_associative_tables, enumerate_drc_restriction_semigroups,
    BiUnarySemigroup,
};

fn strong_algebras() -> &'static Vec<ProjectionAlgebra> {
    static CACHE: OnceLock<Vec<ProjectionAlgebra>> = OnceLock::new();
    CACHE.get_or_init(|| {
        (1..=3)
            .flat_map(|n| enumerate_strong_algebras(n, false).unwrap())
            .collect()
    })
}

fn drc_restriction_semigroups() -> &'static Vec<BiUnarySemigroup> {
    static CACHE: OnceLock<Vec<BiUnarySemigroup>> = OnceLock::new();
    CACHE.get_or_init(|| {
        (1..=4)
            .flat_map(|n| enumerate_drc_restriction_semigroups(n, false).unwrap())
            .collect()
    })
}

/// All DRC semigroups (ample or not) of order up to 3, built from the raw
/// associative tables with unary candidates.
fn drc_semigroups() -> &'static Vec<BiUnarySemigroup> {
    static CACHE: OnceLock<Vec<BiUnarySemigroup>> = OnceLock::new();
    CACHE.get_or_init(|| {
        let mut out = Vec::new();
        for n in 1..=3usize {
            for mul in enumerate_associative_tables(n) {
                let m = |a: usize, b: usize| mul[a * n + b];
                let plus_c: Vec<Vec<usize>> = (0..n)
                    .map(|x| (0..n).filter(|&e| m(e, e) == e && m(e, x) == x).collect())
                    .collect();
                let star_c: Vec<Vec<usize>> = (0..n)
                    .map(|x| (0..n).filter(|&f| m(f, f) == f && m(x, f) == x).collect())
                    .collect();
                if plus_c.iter().any(|c| c.is_empty()) || star_c.iter().any(|c| c.is_empty()) {
                    continue;
                }
                let mut stack = vec![(Vec::new(), Vec::new())];
                for x in 0..n {
                    let mut next = Vec::new();
                    for (p, s) in &stack {
                        for &pc in &plus_c[x] {
                            for &sc in &star_c[x] {
                                let mut p2 = p.clone();
                                let mut s2 = s.clone();
                                p2.push(pc);
                                s2.push(sc);
                                next.push((p2, s2));
                            }
                        }
                    }
                    stack = next;
                }
                for (plus, star) in stack {
                    let s = BiUnarySemigroup::new(n, mul.clone(), plus, star).unwrap();
                    if s.is_drc() {
                        out.push(s);
                    }
                }
            }
        }
        out
    })
}

fn bounded_paths(alg: &ProjectionAlgebra, len: usize) -> Vec<PPath> {
    enumerate_paths(alg, len)
}

// ---------------------------------------------------------------- algebra

#[test]
fn theta_delta_land_below_and_are_friendly() {
    // qδ_p ≤ p, pθ_q ≤ q, and (qδ_p) ℱ (pθ_q)
    for alg in strong_algebras() {
        for p in 0..alg.len() {
            for q in 0..alg.len() {
                let qdp = alg.times(p, q);
                let ptq = alg.star(p, q);
                assert!(alg.leq(qdp, p));
                assert!(alg.leq(ptq, q));
                assert!(alg.friendly(qdp, ptq));
            }
        }
    }
}

#[test]
fn theta_absorption_below() {
    // p ≤ q forces θ_p = θ_pθ_q = θ_qθ_p = θ_pδ_q, and dually for δ
    for alg in strong_algebras() {
        for p in 0..alg.len() {
            for q in 0..alg.len() {
                if !alg.leq(p, q) {
                    continue;
                }
                let (tp, tq) = (alg.theta_map(p), alg.theta_map(q));
                let (dp, dq) = (alg.delta_map(p), alg.delta_map(q));
                assert_eq!(tp, compose_maps(&tp, &tq));
                assert_eq!(tp, compose_maps(&tq, &tp));
                assert_eq!(tp, compose_maps(&tp, &dq));
                assert_eq!(dp, compose_maps(&dp, &dq));
                assert_eq!(dp, compose_maps(&dq, &dp));
                assert_eq!(dp, compose_maps(&dp, &tq));
            }
        }
    }
}

#[test]
fn map_conjugation_identities() {
    // δ_{pθ_s} = δ_sδ_pθ_s and θ_{pδ_s} = θ_sθ_pδ_s
    for alg in strong_algebras() {
        for p in 0..alg.len() {
            for s in 0..alg.len() {
                let lhs = alg.delta_map(alg.star(p, s));
                let rhs = compose_maps(
                    &compose_maps(&alg.delta_map(s), &alg.delta_map(p)),
                    &alg.theta_map(s),
                );
                assert_eq!(lhs, rhs);
                let lhs = alg.theta_map(alg.times(s, p));
                let rhs = compose_maps(
                    &compose_maps(&alg.theta_map(s), &alg.theta_map(p)),
                    &alg.delta_map(s),
                );
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn theta_delta_images_are_downsets() {
    for alg in strong_algebras() {
        for p in 0..alg.len() {
            let mut ti: Vec<usize> = alg.theta_map(p);
            let mut di: Vec<usize> = alg.delta_map(p);
            ti.sort_unstable();
            ti.dedup();
            di.sort_unstable();
            di.dedup();
            assert_eq!(ti, alg.downset(p));
            assert_eq!(di, alg.downset(p));
        }
    }
}

#[test]
fn downsets_are_subalgebras() {
    for alg in strong_algebras() {
        for e in 0..alg.len() {
            let down = alg.downset(e);
            for &x in &down {
                for &y in &down {
                    assert!(down.binary_search(&alg.times(x, y)).is_ok());
                    assert!(down.binary_search(&alg.star(x, y)).is_ok());
                }
            }
        }
    }
}

#[test]
fn natural_order_is_a_partial_order() {
    for alg in strong_algebras() {
        for a in 0..alg.len() {
            assert!(alg.leq(a, a));
            for b in 0..alg.len() {
                if alg.leq(a, b) && alg.leq(b, a) {
                    assert_eq!(a, b);
                }
                for c in 0..alg.len() {
                    if alg.leq(a, b) && alg.leq(b, c) {
                        assert!(alg.leq(a, c));
                    }
                }
            }
        }
    }
}

#[test]
fn classification_is_monotone() {
    for alg in strong_algebras() {
        let c = alg.classify();
        assert!(c.strong && c.two_sided && c.left && c.right);
    }
}

#[test]
fn homomorphisms_preserve_order_and_friendliness() {
    let algs = strong_algebras();
    for src in algs.iter().filter(|a| a.len() <= 2) {
        for dst in algs.iter().filter(|a| a.len() <= 3) {
            for map in enumerate_homomorphisms(src, dst) {
                for p in 0..src.len() {
                    for q in 0..src.len() {
                        if src.leq(p, q) {
                            assert!(dst.leq(map[p], map[q]));
                        }
                        if src.friendly(p, q) {
                            assert!(dst.friendly(map[p], map[q]));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn strong_algebra_count_of_order_two_matches_naive_enumeration() {
    // golden value: 3 labeled strong algebras on two elements
    let fast = enumerate_strong_algebras(2, false).unwrap();
    assert_eq!(fast.len(), 3);
    // independent re-implementation: scan all 16 × 16 table pairs
    let mut naive = Vec::new();
    for t in 0..16usize {
        for s in 0..16usize {
            let times: Vec<usize> = (0..4).map(|i| (t >> i) & 1).collect();
            let star: Vec<usize> = (0..4).map(|i| (s >> i) & 1).collect();
            let alg = ProjectionAlgebra::new(2, times, star).unwrap();
            if alg.classify().strong {
                naive.push(alg);
            }
        }
    }
    naive.sort();
    assert_eq!(fast, naive);
}

#[test]
fn commutative_strong_algebras_are_meet_semilattices() {
    for alg in strong_algebras() {
        if !alg.classify().commutative {
            continue;
        }
        for x in 0..alg.len() {
            for y in 0..alg.len() {
                assert_eq!(alg.times(x, y), alg.times(y, x));
                assert_eq!(alg.times(x, y), alg.star(x, y));
                for z in 0..alg.len() {
                    assert_eq!(alg.times(alg.times(x, y), z), alg.times(x, alg.times(y, z)));
                }
            }
        }
    }
}

// -------------------------------------------------------------- semigroup

#[test]
fn products_sit_below_their_factors_projections() {
    // (ab)⁺ ω a⁺ and (ab)* ω b*
    for s in drc_semigroups() {
        for a in 0..s.len() {
            for b in 0..s.len() {
                let p = s.plus(s.mul(a, b));
                let q = s.plus(a);
                assert_eq!(s.mul(s.mul(q, p), q), p);
                let p = s.star(s.mul(a, b));
                let q = s.star(b);
                assert_eq!(s.mul(s.mul(q, p), q), p);
            }
        }
    }
}

#[test]
fn rho_sigma_bijectivity_characterizes_restriction() {
    // ρ_a: ⟨a⁺⟩ → ⟨a*⟩, x ↦ (xa)*; σ_a: y ↦ (ay)⁺; mutually inverse on every
    // element iff the DRC semigroup satisfies the ample conditions
    for s in drc_semigroups() {
        let ps = s.projections();
        let omega = |e: usize, f: usize| s.mul(s.mul(f, e), f) == e;
        let mutually_inverse = (0..s.len()).all(|a| {
            let dom: Vec<usize> = ps
                .iter()
                .copied()
                .filter(|&x| omega(x, s.plus(a)))
                .collect();
            let ran: Vec<usize> = ps
                .iter()
                .copied()
                .filter(|&y| omega(y, s.star(a)))
                .collect();
            dom.iter().all(|&x| {
                let y = s.star(s.mul(x, a));
                ran.contains(&y) && s.plus(s.mul(a, y)) == x
            }) && ran.iter().all(|&y| {
                let x = s.plus(s.mul(a, y));
                dom.contains(&x) && s.star(s.mul(x, a)) == y
            })
        });
        let ample = s.check_ample().unwrap().ok;
        assert_eq!(mutually_inverse, ample, "mismatch on {s:?}");
    }
}

#[test]
fn left_and_right_orders_agree_exactly_on_restriction_semigroups() {
    for s in drc_semigroups() {
        let omega = |e: usize, f: usize| s.mul(s.mul(f, e), f) == e;
        let leq_r = |a: usize, b: usize| s.mul(s.plus(a), b) == a && omega(s.plus(a), s.plus(b));
        let leq_l = |a: usize, b: usize| s.mul(b, s.star(a)) == a && omega(s.star(a), s.star(b));
        let agree = (0..s.len()).all(|a| (0..s.len()).all(|b| leq_r(a, b) == leq_l(a, b)));
        assert_eq!(agree, s.check_ample().unwrap().ok, "mismatch on {s:?}");
    }
}

#[test]
fn natural_order_on_projections_is_omega() {
    // e ≤ f iff fef = e for projections
    for s in drc_restriction_semigroups() {
        let ps = s.projections();
        for &e in &ps {
            for &f in &ps {
                let omega = s.mul(s.mul(f, e), f) == e;
                assert_eq!(s.natural_leq(e, f).unwrap(), omega);
            }
        }
    }
}

#[test]
fn some_drc_semigroup_fails_ample_with_witness() {
    let bad = drc_semigroups()
        .iter()
        .find(|s| !s.check_ample().unwrap().ok)
        .expect("the order-3 corpus contains non-ample DRC semigroups");
    assert!(bad.check_ample().unwrap().witness.is_some());
}

#[test]
fn mu_equivalences_of_proposition_style_hold() {
    // a μ b ⟺ ν_a = ν_b ⟺ μ_a = μ_b ⟺ (Θ_a, Δ_a) = (Θ_b, Δ_b)
    for s in drc_restriction_semigroups() {
        let ps = s.projections();
        let mu = s.mu().unwrap();
        for a in 0..s.len() {
            for b in 0..s.len() {
                let nu_eq = s.plus(a) == s.plus(b)
                    && ps
                        .iter()
                        .filter(|&&x| s.mul(s.mul(s.plus(a), x), s.plus(a)) == x)
                        .all(|&x| s.star(s.mul(x, a)) == s.star(s.mul(x, b)));
                let mu_eq = s.star(a) == s.star(b)
                    && ps
                        .iter()
                        .filter(|&&y| s.mul(s.mul(s.star(a), y), s.star(a)) == y)
                        .all(|&y| s.plus(s.mul(a, y)) == s.plus(s.mul(b, y)));
                let theta_eq = ps.iter().all(|&p| {
                    s.star(s.mul(p, a)) == s.star(s.mul(p, b))
                        && s.plus(s.mul(a, p)) == s.plus(s.mul(b, p))
                });
                let related = mu.class_of[a] == mu.class_of[b];
                assert_eq!(related, nu_eq && s.star(a) == s.star(b));
                assert_eq!(related, mu_eq && s.plus(a) == s.plus(b));
                assert_eq!(
                    related,
                    theta_eq && s.plus(a) == s.plus(b) && s.star(a) == s.star(b)
                );
            }
        }
    }
}

#[test]
fn circ_satisfies_the_generalized_regular_identities() {
    for s in drc_restriction_semigroups() {
        let flags = classify_special(s).unwrap();
        assert!(
            !flags.restriction || flags.p_restriction,
            "hierarchy violated"
        );
        let Some(circ) = flags.circ else { continue };
        let c = |x: usize| circ[x];
        for x in 0..s.len() {
            assert_eq!(s.mul(s.mul(x, c(x)), x), x);
            assert_eq!(c(c(x)), x);
            for y in 0..s.len() {
                let xy = s.mul(x, y);
                assert_eq!(c(xy), s.mul(s.mul(c(xy), x), c(x)));
                assert_eq!(c(xy), s.mul(s.mul(c(y), y), c(xy)));
                assert_eq!(s.mul(c(xy), x), c(s.mul(s.mul(c(x), x), y)));
            }
        }
    }
}

#[test]
fn projection_generated_iff_every_element_is_a_chain_product() {
    // E(S) coincides with the products of ℱ-chains of projections
    for s in drc_restriction_semigroups() {
        let (e_of_s, carrier) = s.projection_generated_sub().unwrap();
        let ps = s.projections();
        let friendly = |e: usize, f: usize| s.plus(s.mul(e, f)) == e && s.star(s.mul(e, f)) == f;
        // reachable fold values over ℱ-chains
        let mut reach: Vec<(usize, usize)> = ps.iter().map(|&p| (p, p)).collect();
        let mut seen = reach.clone();
        while let Some((last, value)) = reach.pop() {
            for &q in &ps {
                if friendly(last, q) {
                    let next = (q, s.mul(value, q));
                    if !seen.contains(&next) {
                        seen.push(next);
                        reach.push(next);
                    }
                }
            }
        }
        let mut image: Vec<usize> = seen.iter().map(|&(_, v)| v).collect();
        image.sort_unstable();
        image.dedup();
        assert_eq!(image, carrier, "im ε ≠ E(S) for {s:?}");
        let _ = e_of_s;
    }
}

// ------------------------------------------------------------------ paths

#[test]
fn restriction_of_composition_splits() {
    // _r↿(𝔭∘𝔮) = _r↿𝔭 ∘ _s↿𝔮 with s = r(_r↿𝔭), and its right dual
    for alg in strong_algebras() {
        let paths = bounded_paths(alg, 3);
        for p in &paths {
            for q in &paths {
                if p.cod() != q.dom() {
                    continue;
                }
                let pq = compose(alg, p, q).unwrap();
                for r in 0..alg.len() {
                    if !alg.leq(r, p.dom()) {
                        continue;
                    }
                    let rp = left_restrict(alg, r, p).unwrap();
                    let sq = left_restrict(alg, rp.cod(), q).unwrap();
                    assert_eq!(
                        left_restrict(alg, r, &pq).unwrap(),
                        compose(alg, &rp, &sq).unwrap()
                    );
                }
                for l in 0..alg.len() {
                    if !alg.leq(l, q.cod()) {
                        continue;
                    }
                    let ql = right_restrict(alg, q, l).unwrap();
                    let pt = right_restrict(alg, p, ql.dom()).unwrap();
                    assert_eq!(
                        right_restrict(alg, &pq, l).unwrap(),
                        compose(alg, &pt, &ql).unwrap()
                    );
                }
            }
        }
    }
}

#[test]
fn left_restriction_is_a_right_restriction() {
    // _r↿𝔭 = 𝔭↾_{r(_r↿𝔭)}
    for alg in strong_algebras() {
        for p in bounded_paths(alg, 3) {
            for r in 0..alg.len() {
                if !alg.leq(r, p.dom()) {
                    continue;
                }
                let lr = left_restrict(alg, r, &p).unwrap();
                assert_eq!(lr, right_restrict(alg, &p, lr.cod()).unwrap());
            }
        }
    }
}

#[test]
fn path_order_is_a_partial_order_with_unique_restrictions() {
    for alg in strong_algebras().iter().filter(|a| a.len() <= 3) {
        let paths = bounded_paths(alg, 3);
        for p in &paths {
            assert!(path_leq(alg, p, p));
            for q in &paths {
                if path_leq(alg, p, q) && path_leq(alg, q, p) {
                    assert_eq!(p, q);
                }
                for m in &paths {
                    if path_leq(alg, p, q) && path_leq(alg, q, m) {
                        assert!(path_leq(alg, p, m));
                    }
                }
            }
        }
        // uniqueness: for q and r ≤ d(q), exactly one u ≤ q with d(u) = r
        for q in &paths {
            for r in 0..alg.len() {
                if !alg.leq(r, q.dom()) {
                    continue;
                }
                let matches: Vec<&PPath> = paths
                    .iter()
                    .filter(|u| u.dom() == r && path_leq(alg, u, q))
                    .collect();
                assert_eq!(matches.len(), 1);
                assert_eq!(*matches[0], left_restrict(alg, r, q).unwrap());
            }
        }
    }
}

#[test]
fn theta_delta_composites_invert_on_downsets() {
    // Θ_𝔭Δ_𝔭 = θ_{d(𝔭)} and Δ_𝔭Θ_𝔭 = δ_{r(𝔭)}
    for alg in strong_algebras() {
        for p in bounded_paths(alg, 3) {
            let theta = theta_of_path(alg, &p);
            let delta = delta_of_path(alg, &p);
            assert_eq!(compose_maps(&theta, &delta), alg.theta_map(p.dom()));
            assert_eq!(compose_maps(&delta, &theta), alg.delta_map(p.cod()));
        }
    }
}

#[test]
fn theta_of_composition_composes() {
    for alg in strong_algebras() {
        let paths = bounded_paths(alg, 3);
        for p in &paths {
            for q in &paths {
                if p.cod() != q.dom() {
                    continue;
                }
                let pq = compose(alg, p, q).unwrap();
                assert_eq!(
                    theta_of_path(alg, &pq),
                    compose_maps(&theta_of_path(alg, p), &theta_of_path(alg, q))
                );
                assert_eq!(
                    delta_of_path(alg, &pq),
                    compose_maps(&delta_of_path(alg, q), &delta_of_path(alg, p))
                );
            }
        }
    }
}

#[test]
fn nu_is_an_isomorphism_onto_the_range_downset() {
    for alg in strong_algebras() {
        for p in bounded_paths(alg, 3) {
            let theta = theta_of_path(alg, &p);
            let pairs: Vec<(usize, usize)> = alg
                .downset(p.dom())
                .into_iter()
                .map(|x| (x, theta[x]))
                .collect();
            let iso = PartialIso {
                p: p.dom(),
                q: p.cod(),
                pairs,
            };
            assert!(iso.is_valid(alg), "ν of {:?} not an isomorphism", p);
        }
    }
}

#[test]
fn g1_identity_on_paths() {
    // δ_{qν_𝔠} = Δ_𝔠 δ_q Θ_𝔠 for q ≤ d(𝔠)
    for alg in strong_algebras() {
        for c in bounded_paths(alg, 3) {
            let theta = theta_of_path(alg, &c);
            let delta = delta_of_path(alg, &c);
            for q in 0..alg.len() {
                if !alg.leq(q, c.dom()) {
                    continue;
                }
                let lhs = alg.delta_map(theta[q]);
                let rhs = compose_maps(&compose_maps(&delta, &alg.delta_map(q)), &theta);
                assert_eq!(lhs, rhs);
            }
        }
    }
}

// ------------------------------------------------------------------ chain

#[test]
fn admissible_triples_generate_valid_paths() {
    for alg in strong_algebras() {
        for e in 0..alg.len() {
            for p in 0..alg.len() {
                for f in 0..alg.len() {
                    if is_admissible(alg, e, p, f) {
                        assert!(PPath::new(alg, &[e, alg.star(e, p), f]).is_ok());
                        assert!(PPath::new(alg, &[e, alg.times(p, f), f]).is_ok());
                    }
                }
            }
        }
    }
}

#[test]
fn moves_preserve_endpoints_and_signature() {
    for alg in strong_algebras() {
        for p in bounded_paths(alg, 4) {
            let sig = fundamental_signature(alg, &p);
            for next in elementary_moves(alg, &p) {
                assert_eq!(next.dom(), p.dom());
                assert_eq!(next.cod(), p.cod());
                assert_eq!(fundamental_signature(alg, &next), sig);
            }
        }
    }
}

#[test]
fn signature_agrees_with_the_map_pair() {
    // equal signatures ⟺ equal (Θ-composite, Δ-composite) pairs
    for alg in strong_algebras() {
        let paths = bounded_paths(alg, 3);
        for a in &paths {
            for b in &paths {
                let sig_eq = fundamental_signature(alg, a) == fundamental_signature(alg, b);
                let pair_eq = theta_of_path(alg, a) == theta_of_path(alg, b)
                    && delta_of_path(alg, a) == delta_of_path(alg, b);
                assert_eq!(sig_eq, pair_eq, "{:?} vs {:?}", a, b);
            }
        }
    }
}

#[test]
fn chain_product_respects_certified_equivalence() {
    // replacing a factor by a certified-equivalent one keeps the signature of
    // the product
    for alg in strong_algebras().iter().filter(|a| a.len() == 2) {
        let paths = bounded_paths(alg, 3);
        for a in &paths {
            for a2 in elementary_moves(alg, a) {
                assert_eq!(
                    paths_equivalent(alg, a, &a2, Budget::default_for(a, &a2)),
                    Equivalence::Yes
                );
                for b in &paths {
                    let s1 = fundamental_signature(alg, &chain_product(alg, a, b));
                    let s2 = fundamental_signature(alg, &chain_product(alg, &a2, b));
                    assert_eq!(s1, s2);
                    let s1 = fundamental_signature(alg, &chain_product(alg, b, a));
                    let s2 = fundamental_signature(alg, &chain_product(alg, b, &a2));
                    assert_eq!(s1, s2);
                }
            }
        }
    }
}

#[test]
fn chain_product_is_associative_at_signature_level() {
    for alg in strong_algebras() {
        let paths = bounded_paths(alg, 2);
        for a in &paths {
            for b in &paths {
                for c in &paths {
                    let left = chain_product(alg, &chain_product(alg, a, b), c);
                    let right = chain_product(alg, a, &chain_product(alg, b, c));
                    assert_eq!(
                        fundamental_signature(alg, &left),
                        fundamental_signature(alg, &right)
                    );
                }
            }
        }
    }
}

#[test]
fn unary_operations_of_chain_classes() {
    // [𝔭]⁺ = [p₁] and [𝔭]* = [p_k] seen through the fundamental model
    for alg in strong_algebras().iter().filter(|a| a.len() <= 2) {
        let model = build_fundamental(alg).unwrap();
        for (i, rep) in model.reps.iter().enumerate() {
            assert_eq!(model.semigroup.plus(i), model.generators[rep.dom()]);
            assert_eq!(model.semigroup.star(i), model.generators[rep.cod()]);
        }
    }
}

#[test]
fn hom_extension_is_constant_on_certified_classes() {
    for alg in strong_algebras().iter().filter(|a| a.len() <= 2) {
        for target in drc_restriction_semigroups().iter().filter(|s| s.len() <= 3) {
            let (pal, carrier) = target.projection_algebra().unwrap();
            for map in enumerate_homomorphisms(alg, &pal) {
                let phi: Vec<usize> = map.iter().map(|&i| carrier[i]).collect();
                let ext = HomExtension::new(alg, &phi, target).unwrap();
                for p in bounded_paths(alg, 3) {
                    let v = ext.eval_path(&p);
                    // commutes with the unary operations
                    assert_eq!(target.plus(v), phi[p.dom()]);
                    assert_eq!(target.star(v), phi[p.cod()]);
                    for next in elementary_moves(alg, &p) {
                        assert_eq!(ext.eval_path(&next), v);
                    }
                }
            }
        }
    }
}

#[test]
fn normalized_words_match_direct_products_in_the_fundamental_model() {
    for alg in strong_algebras() {
        let model = build_fundamental(alg).unwrap();
        let fold = |letters: &[usize]| {
            let mut acc = model.generators[letters[0]];
            for &p in &letters[1..] {
                acc = model.semigroup.mul(acc, model.generators[p]);
            }
            acc
        };
        for word in seeded_words(alg.len(), 100, 6, 0xabcd) {
            let path = normalize_word(alg, &word).unwrap();
            let sig = fundamental_signature(alg, &path);
            let idx = model.sigs.iter().position(|s| *s == sig).unwrap();
            assert_eq!(idx, fold(&word));
        }
    }
}

// ------------------------------------------------------------------- munn

/// All partial isomorphisms between downsets of `alg`, by brute force.
fn all_partial_isos(alg: &ProjectionAlgebra) -> Vec<PartialIso> {
    let mut out = Vec::new();
    for p in 0..alg.len() {
        for q in 0..alg.len() {
            let dom = alg.downset(p);
            let cod = alg.downset(q);
            if dom.len() != cod.len() {
                continue;
            }
            let mut perm: Vec<usize> = (0..cod.len()).collect();
            loop {
                let pairs: Vec<(usize, usize)> = dom
                    .iter()
                    .zip(perm.iter())
                    .map(|(&a, &i)| (a, cod[i]))
                    .collect();
                let iso = PartialIso { p, q, pairs };
                if iso.is_valid(alg) {
                    out.push(iso);
                }
                if !next_perm(&mut perm) {
                    break;
                }
            }
        }
    }
    out
}

fn next_perm(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

#[test]
fn munn_groupoid_has_two_sided_inverses() {
    for alg in strong_algebras() {
        for iso in all_partial_isos(alg) {
            let inv = iso.inverse();
            assert!(inv.is_valid(alg));
            assert_eq!(
                smp_product(alg, &iso, &inv),
                PartialIso::identity(alg, iso.p)
            );
            assert_eq!(
                smp_product(alg, &inv, &iso),
                PartialIso::identity(alg, iso.q)
            );
        }
    }
}

#[test]
fn restriction_of_iso_lands_in_the_right_hom_set() {
    // α|_{x↓} ∈ M(x, xα)
    for alg in strong_algebras() {
        for iso in all_partial_isos(alg) {
            for &x in &iso.domain() {
                let y = iso.apply(x).unwrap();
                let pairs: Vec<(usize, usize)> = alg
                    .downset(x)
                    .into_iter()
                    .map(|t| (t, iso.apply(t).unwrap()))
                    .collect();
                let restricted = PartialIso { p: x, q: y, pairs };
                assert!(restricted.is_valid(alg));
            }
        }
    }
}

#[test]
fn gamma_is_a_valid_isomorphism_with_delta_inverse() {
    for alg in strong_algebras() {
        for p in 0..alg.len() {
            for q in 0..alg.len() {
                if !alg.friendly(p, q) {
                    continue;
                }
                let g = gamma(alg, p, q).unwrap();
                assert!(g.is_valid(alg));
                let beta: Vec<(usize, usize)> = alg
                    .downset(q)
                    .into_iter()
                    .map(|y| (y, alg.times(p, y)))
                    .collect();
                assert_eq!(g.inverse().pairs, beta);
            }
        }
    }
}

#[test]
fn smp_product_is_associative_on_all_isos() {
    for alg in strong_algebras().iter().filter(|a| a.len() <= 2) {
        let isos = all_partial_isos(alg);
        for a in &isos {
            for b in &isos {
                for c in &isos {
                    let left = smp_product(alg, &smp_product(alg, a, b), c);
                    let right = smp_product(alg, a, &smp_product(alg, b, c));
                    assert_eq!(left, right);
                }
            }
        }
    }
}

#[test]
fn pair_representation_is_injective_and_multiplicative() {
    for alg in strong_algebras() {
        let isos = all_partial_isos(alg);
        for a in &isos {
            for b in &isos {
                if a != b {
                    assert_ne!(pair_repr(alg, a), pair_repr(alg, b));
                }
                let (ta, da) = pair_repr(alg, a);
                let (tb, db) = pair_repr(alg, b);
                let (tp, dp) = pair_repr(alg, &smp_product(alg, a, b));
                assert_eq!(tp, compose_maps(&ta, &tb));
                assert_eq!(dp, compose_maps(&db, &da));
            }
        }
    }
}

#[test]
fn groupoid_composition_is_the_product_on_meeting_endpoints() {
    for alg in strong_algebras().iter().filter(|a| a.len() <= 2) {
        let isos = all_partial_isos(alg);
        for a in &isos {
            for b in &isos {
                match drckit::munn::groupoid_compose(a, b) {
                    Ok(c) => {
                        assert_eq!(a.q, b.p);
                        assert_eq!(c, smp_product(alg, a, b));
                    }
                    Err(_) => assert_ne!(a.q, b.p),
                }
            }
        }
    }
}

#[test]
fn fundamental_model_is_fundamental_and_projection_generated() {
    for alg in strong_algebras() {
        let model = build_fundamental(alg).unwrap();
        let s = &model.semigroup;
        assert!(s.is_drc_restriction());
        assert!(s.is_fundamental().unwrap());
        assert!(s.is_projection_generated().unwrap());
        assert!(s.mu().unwrap().is_identity());
    }
}

#[test]
fn munn_semigroup_properties() {
    for alg in strong_algebras().iter().filter(|a| a.len() <= 2) {
        let model = build_e_of_smp(alg).unwrap();
        let s = &model.semigroup;
        assert!(s.check_drc().unwrap().ok);
        assert!(s.check_ample().unwrap().ok);
        assert!(s.is_fundamental().unwrap());
        assert!(s.is_projection_generated().unwrap());
    }
}

#[test]
fn image_of_phi_is_full_when_fundamental() {
    for s in drc_restriction_semigroups().iter().filter(|s| s.len() <= 3) {
        let repr = phi_s(s).unwrap();
        assert_eq!(repr.kernel.is_identity(), s.is_fundamental().unwrap());
        let (alg, carrier) = s.projection_algebra().unwrap();
        for (pos, _) in carrier.iter().enumerate() {
            let id = PartialIso::identity(&alg, pos);
            assert!(
                repr.images.contains(&id),
                "image misses id on downset {pos}"
            );
        }
        // homomorphism property
        for a in 0..s.len() {
            for b in 0..s.len() {
                assert_eq!(
                    repr.images[s.mul(a, b)],
                    smp_product(&alg, &repr.images[a], &repr.images[b])
                );
            }
        }
    }
}

// --------------------------------------------------------------- category

#[test]
fn nu_of_composition_composes_in_categories() {
    for s in drc_restriction_semigroups().iter().filter(|s| s.len() <= 3) {
        let c = from_semigroup(s).unwrap();
        for a in 0..c.arrow_count() {
            let ta = c.theta_on_objects(a).unwrap();
            let da = c.delta_on_objects(a).unwrap();
            for b in 0..c.arrow_count() {
                if c.cod(a) != c.dom(b) {
                    continue;
                }
                let ab = c.compose(a, b).unwrap();
                let tb = c.theta_on_objects(b).unwrap();
                let db = c.delta_on_objects(b).unwrap();
                assert_eq!(c.theta_on_objects(ab).unwrap(), compose_maps(&ta, &tb));
                assert_eq!(c.delta_on_objects(ab).unwrap(), compose_maps(&db, &da));
            }
        }
    }
}

#[test]
fn theta_of_bullet_product_composes() {
    for s in drc_restriction_semigroups().iter().filter(|s| s.len() <= 3) {
        let c = from_semigroup(s).unwrap();
        for a in 0..c.arrow_count() {
            for b in 0..c.arrow_count() {
                let ab = drckit::category::bullet(&c, a, b).unwrap();
                assert_eq!(ab, s.mul(a, b));
                let ta = c.theta_on_objects(a).unwrap();
                let tb = c.theta_on_objects(b).unwrap();
                assert_eq!(c.theta_on_objects(ab).unwrap(), compose_maps(&ta, &tb));
            }
        }
    }
}

#[test]
fn order_of_regenerated_semigroup_is_the_category_order() {
    for s in drc_restriction_semigroups().iter().filter(|s| s.len() <= 3) {
        let c = from_semigroup(s).unwrap();
        let t = to_semigroup(&c).unwrap();
        for a in 0..t.len() {
            for b in 0..t.len() {
                assert_eq!(t.natural_leq(a, b).unwrap(), c.leq(a, b));
            }
        }
    }
}

#[test]
fn lambda_rho_agree_and_equal_the_sandwich_product() {
    for s in drc_restriction_semigroups().iter().filter(|s| s.len() <= 3) {
        let c = from_semigroup(s).unwrap();
        let objects = c.objects().to_vec();
        for b in 0..c.arrow_count() {
            for (e, f) in c.linked_pairs(b).unwrap() {
                let (lam, rho) = c.lambda_rho(e, b, f).unwrap();
                assert_eq!(lam, rho);
                let ebf = s.mul(s.mul(objects[e], b), objects[f]);
                assert_eq!(lam, ebf);
            }
        }
    }
}

#[test]
fn homomorphisms_into_projection_algebras_extend() {
    // the universal-property direction: the extension exists and agrees with
    // letter-by-letter products for every word, certified via normalize
    for alg in strong_algebras().iter().filter(|a| a.len() <= 2) {
        for s in drc_restriction_semigroups().iter().filter(|s| s.len() <= 3) {
            let (pal, carrier) = s.projection_algebra().unwrap();
            for map in enumerate_homomorphisms(alg, &pal) {
                let phi: Vec<usize> = map.iter().map(|&i| carrier[i]).collect();
                let ext = HomExtension::new(alg, &phi, s).unwrap();
                for word in seeded_words(alg.len(), 50, 5, 0x77) {
                    let path = normalize_word(alg, &word).unwrap();
                    assert_eq!(ext.eval_path(&path), ext.eval_letters(&word));
                }
            }
        }
    }
}

#[test]
fn homomorphism_check_rejects_non_homomorphisms() {
    let two = ProjectionAlgebra::chain_semilattice(2);
    let three = ProjectionAlgebra::chain_semilattice(3);
    assert!(is_homomorphism(&two, &three, &[0, 2]).unwrap());
    assert!(is_homomorphism(&two, &three, &[2, 0]).is_ok());
    assert!(!is_homomorphism(&two, &three, &[2, 0]).unwrap());
}
