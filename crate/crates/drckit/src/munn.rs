//! Partial projection-algebra isomorphisms between downsets and the
//! fundamental model they carry.
//!
//! `M(p,q)` holds the isomorphisms `p↓ → q↓`; composition where ranges meet
//! domains makes `M(P)` a groupoid, and the induced semigroup product
//! `α•β = αθ_{q⋆s}β` restricted to `((q×s)α⁻¹)↓` makes it a DRC-restriction
//! semigroup whose projection-generated part is the fundamental quotient of
//! the chain semigroup.

use std::collections::BTreeMap;

use crate::algebra::{compose_maps, ProjectionAlgebra};
use crate::error::{Error, Result};
use crate::semigroup::{BiUnarySemigroup, Partition};

/// A projection-algebra isomorphism `p↓ → q↓`, stored as sorted
/// `(input, output)` pairs. Equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialIso {
    pub p: usize,
    pub q: usize,
    pub pairs: Vec<(usize, usize)>,
}

impl PartialIso {
    /// The identity on `p↓`.
    pub fn identity(alg: &ProjectionAlgebra, p: usize) -> Self {
        Self {
            p,
            q: p,
            pairs: alg.downset(p).into_iter().map(|x| (x, x)).collect(),
        }
    }

    pub fn apply(&self, x: usize) -> Option<usize> {
        self.pairs
            .binary_search_by_key(&x, |&(a, _)| a)
            .ok()
            .map(|i| self.pairs[i].1)
    }

    pub fn inverse(&self) -> Self {
        let mut pairs: Vec<(usize, usize)> = self.pairs.iter().map(|&(a, b)| (b, a)).collect();
        pairs.sort_unstable();
        Self {
            p: self.q,
            q: self.p,
            pairs,
        }
    }

    pub fn domain(&self) -> Vec<usize> {
        self.pairs.iter().map(|&(a, _)| a).collect()
    }

    /// Checks membership in `M(p,q)`: a bijection `p↓ → q↓` preserving both
    /// operations of the downset subalgebras.
    pub fn is_valid(&self, alg: &ProjectionAlgebra) -> bool {
        let dom = alg.downset(self.p);
        let cod = alg.downset(self.q);
        if self.domain() != dom {
            return false;
        }
        let mut image: Vec<usize> = self.pairs.iter().map(|&(_, b)| b).collect();
        image.sort_unstable();
        if image != cod {
            return false;
        }
        for &(x, xm) in &self.pairs {
            for &(y, ym) in &self.pairs {
                if self.apply(alg.times(x, y)) != Some(alg.times(xm, ym))
                    || self.apply(alg.star(x, y)) != Some(alg.star(xm, ym))
                {
                    return false;
                }
            }
        }
        true
    }
}

/// `γ_{p,q} = θ_q` restricted to `p↓`, for `p ℱ q`; its inverse is `δ_p`
/// restricted to `q↓`.
pub fn gamma(alg: &ProjectionAlgebra, p: usize, q: usize) -> Result<PartialIso> {
    if !alg.friendly(p, q) {
        return Err(Error::Precondition(format!("{p} ℱ {q} is required")));
    }
    let pairs = alg
        .downset(p)
        .into_iter()
        .map(|x| (x, alg.star(x, q)))
        .collect();
    Ok(PartialIso { p, q, pairs })
}

/// The groupoid composition: plain composition of maps, defined exactly when
/// the range of `a` meets the domain of `b`.
pub fn groupoid_compose(a: &PartialIso, b: &PartialIso) -> Result<PartialIso> {
    if a.q != b.p {
        return Err(Error::UndefinedComposition(format!(
            "range {} does not meet domain {}",
            a.q, b.p
        )));
    }
    let pairs = a
        .pairs
        .iter()
        .map(|&(x, y)| (x, b.apply(y).expect("ran α = dom β")))
        .collect();
    Ok(PartialIso {
        p: a.p,
        q: b.q,
        pairs,
    })
}

/// The semigroup product `α•β = αθ_{q⋆s}β` on `((q×s)α⁻¹)↓`, for
/// `α ∈ M(p,q)`, `β ∈ M(s,t)`. When `q = s` this is plain composition.
pub fn smp_product(alg: &ProjectionAlgebra, a: &PartialIso, b: &PartialIso) -> PartialIso {
    let q = a.q;
    let s = b.p;
    let meet = alg.times(q, s); // q×s ≤ q
    let join = alg.star(q, s); // q⋆s ≤ s
    let new_dom = a.inverse().apply(meet).expect("q×s lies in the range of α");
    let pairs: Vec<(usize, usize)> = alg
        .downset(new_dom)
        .into_iter()
        .map(|x| {
            let y = a.apply(x).expect("x ≤ (q×s)α⁻¹ ≤ p");
            let z = alg.star(y, join);
            (x, b.apply(z).expect("y⋆(q⋆s) ≤ q⋆s ≤ s"))
        })
        .collect();
    let new_cod = b.apply(join).expect("q⋆s ≤ s");
    PartialIso {
        p: new_dom,
        q: new_cod,
        pairs,
    }
}

/// `α⁺ = id_{dom α}` and `α* = id_{ran α}`.
pub fn smp_plus(alg: &ProjectionAlgebra, a: &PartialIso) -> PartialIso {
    PartialIso::identity(alg, a.p)
}

pub fn smp_star(alg: &ProjectionAlgebra, a: &PartialIso) -> PartialIso {
    PartialIso::identity(alg, a.q)
}

/// The projection-generated part of the Munn semigroup, as a bi-unary
/// semigroup over the closure of the downset identities under `•`.
#[derive(Debug, Clone)]
pub struct MunnModel {
    pub semigroup: BiUnarySemigroup,
    /// The partial isomorphism carried by each element, in element order.
    pub elems: Vec<PartialIso>,
    /// Element index of `id_{p↓}` per projection `p`.
    pub generators: Vec<usize>,
}

/// Worklist closure of `{id_{p↓}}` under [`smp_product`]; generator order is
/// ascending projection index, discovery order is deterministic.
pub fn build_e_of_smp(alg: &ProjectionAlgebra) -> Result<MunnModel> {
    if !alg.is_strong() {
        return Err(Error::Precondition(
            "the Munn model is defined over strong projection algebras".into(),
        ));
    }
    let mut index: BTreeMap<PartialIso, usize> = BTreeMap::new();
    let mut elems: Vec<PartialIso> = Vec::new();
    let mut generators = Vec::with_capacity(alg.len());
    for p in 0..alg.len() {
        let id = PartialIso::identity(alg, p);
        generators.push(elems.len());
        index.insert(id.clone(), elems.len());
        elems.push(id);
    }
    let mut frontier: Vec<usize> = (0..elems.len()).collect();
    while !frontier.is_empty() {
        let mut fresh = Vec::new();
        let known = elems.len();
        for a in 0..known {
            for b in 0..known {
                if !frontier.contains(&a) && !frontier.contains(&b) {
                    continue;
                }
                let prod = smp_product(alg, &elems[a], &elems[b]);
                if !index.contains_key(&prod) {
                    let id = elems.len();
                    index.insert(prod.clone(), id);
                    elems.push(prod);
                    fresh.push(id);
                }
            }
        }
        frontier = fresh;
    }
    let k = elems.len();
    let mut mul = vec![0; k * k];
    for a in 0..k {
        for b in 0..k {
            mul[a * k + b] = index[&smp_product(alg, &elems[a], &elems[b])];
        }
    }
    let plus: Vec<usize> = elems.iter().map(|e| generators[e.p]).collect();
    let star: Vec<usize> = elems.iter().map(|e| generators[e.q]).collect();
    let semigroup = BiUnarySemigroup::new(k, mul, plus, star)?;
    Ok(MunnModel {
        semigroup,
        elems,
        generators,
    })
}

/// The fundamental representation `a ↦ ν_a` of a DRC-restriction semigroup.
#[derive(Debug, Clone)]
pub struct Representation {
    /// `ν_a: (a⁺)↓ → (a*)↓, x ↦ (xa)*` per element, as maps on the
    /// projection algebra of the source.
    pub images: Vec<PartialIso>,
    /// Its kernel partition; equals `μ` exactly.
    pub kernel: Partition,
}

/// Computes `φ_S` together with its kernel. The downsets live in the
/// projection algebra `P(S)` re-indexed by ascending projection.
pub fn phi_s(s: &BiUnarySemigroup) -> Result<Representation> {
    if !s.is_drc_restriction() {
        return Err(Error::Precondition(
            "the fundamental representation requires a DRC-restriction semigroup".into(),
        ));
    }
    let (alg, carrier) = s.projection_algebra()?;
    let pos = |e: usize| carrier.binary_search(&e).unwrap();
    let mut images = Vec::with_capacity(s.len());
    for a in 0..s.len() {
        let p = pos(s.plus(a));
        let q = pos(s.star(a));
        let pairs: Vec<(usize, usize)> = alg
            .downset(p)
            .into_iter()
            .map(|x| (x, pos(s.star(s.mul(carrier[x], a)))))
            .collect();
        let nu = PartialIso { p, q, pairs };
        assert!(
            nu.is_valid(&alg),
            "ν is an isomorphism on DRC-restriction input"
        );
        images.push(nu);
    }
    let kernel = Partition::from_relation(s.len(), |a, b| images[a] == images[b]);
    Ok(Representation { images, kernel })
}

/// The pair representation `α ↦ (θ_p α, δ_q α⁻¹)` as total maps on `P`.
pub fn pair_repr(alg: &ProjectionAlgebra, a: &PartialIso) -> (Vec<usize>, Vec<usize>) {
    let theta_side = compose_maps(
        &alg.theta_map(a.p),
        &(0..alg.len())
            .map(|x| a.apply(x).unwrap_or(usize::MAX))
            .collect::<Vec<_>>(),
    );
    let inv = a.inverse();
    let delta_side = compose_maps(
        &alg.delta_map(a.q),
        &(0..alg.len())
            .map(|x| inv.apply(x).unwrap_or(usize::MAX))
            .collect::<Vec<_>>(),
    );
    (theta_side, delta_side)
}

/// One element of the pair-representation closure: endpoints plus the two
/// composite maps `θ_{p₁}…θ_{p_k}` and `δ_{p_k}…δ_{p₁}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MapPair {
    pub d: usize,
    pub r: usize,
    pub theta: Vec<usize>,
    pub delta: Vec<usize>,
}

/// The projection-generated semigroup in the pair representation.
#[derive(Debug, Clone)]
pub struct PairModel {
    pub semigroup: BiUnarySemigroup,
    pub elems: Vec<MapPair>,
    pub generators: Vec<usize>,
}

/// Closure of `{(θ_p, δ_p)}` under the componentwise product
/// `(T_a;T_b, D_b;D_a)`, with endpoints tracked as `d(ab) = d(b)Δ_a`,
/// `r(ab) = r(a)Θ_b`. This route never touches paths or partial maps.
pub fn build_pair_model(alg: &ProjectionAlgebra) -> Result<PairModel> {
    if !alg.is_strong() {
        return Err(Error::Precondition(
            "the pair model is defined over strong projection algebras".into(),
        ));
    }
    let product = |a: &MapPair, b: &MapPair| MapPair {
        d: a.delta[b.d],
        r: b.theta[a.r],
        theta: compose_maps(&a.theta, &b.theta),
        delta: compose_maps(&b.delta, &a.delta),
    };
    let mut index: BTreeMap<MapPair, usize> = BTreeMap::new();
    let mut elems: Vec<MapPair> = Vec::new();
    let mut generators = Vec::with_capacity(alg.len());
    for p in 0..alg.len() {
        let gen = MapPair {
            d: p,
            r: p,
            theta: alg.theta_map(p),
            delta: alg.delta_map(p),
        };
        generators.push(elems.len());
        index.insert(gen.clone(), elems.len());
        elems.push(gen);
    }
    let mut frontier: Vec<usize> = (0..elems.len()).collect();
    while !frontier.is_empty() {
        let mut fresh = Vec::new();
        let known = elems.len();
        for a in 0..known {
            for b in 0..known {
                if !frontier.contains(&a) && !frontier.contains(&b) {
                    continue;
                }
                let prod = product(&elems[a], &elems[b]);
                if !index.contains_key(&prod) {
                    let id = elems.len();
                    index.insert(prod.clone(), id);
                    elems.push(prod);
                    fresh.push(id);
                }
            }
        }
        frontier = fresh;
    }
    let k = elems.len();
    let mut mul = vec![0; k * k];
    for a in 0..k {
        for b in 0..k {
            mul[a * k + b] = index[&product(&elems[a], &elems[b])];
        }
    }
    let plus: Vec<usize> = elems.iter().map(|e| generators[e.d]).collect();
    let star: Vec<usize> = elems.iter().map(|e| generators[e.r]).collect();
    let semigroup = BiUnarySemigroup::new(k, mul, plus, star)?;
    Ok(PairModel {
        semigroup,
        elems,
        generators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> ProjectionAlgebra {
        ProjectionAlgebra::chain_semilattice(n)
    }

    #[test]
    fn gamma_at_equal_points_is_identity() {
        let alg = chain(3);
        for p in 0..3 {
            assert_eq!(gamma(&alg, p, p).unwrap(), PartialIso::identity(&alg, p));
        }
        assert!(gamma(&alg, 0, 1).is_err());
    }

    #[test]
    fn product_of_identities_is_gamma() {
        let alg = chain(3);
        for p in 0..3 {
            for q in 0..3 {
                let prod = smp_product(
                    &alg,
                    &PartialIso::identity(&alg, p),
                    &PartialIso::identity(&alg, q),
                );
                let expected = gamma(&alg, alg.times(p, q), alg.star(p, q)).unwrap();
                assert_eq!(prod, expected);
            }
        }
    }

    #[test]
    fn alpha_times_inverse_is_plus() {
        let alg = chain(3);
        for p in 0..3 {
            for q in 0..3 {
                if !alg.friendly(p, q) {
                    continue;
                }
                let g = gamma(&alg, p, q).unwrap();
                assert_eq!(smp_product(&alg, &g, &g.inverse()), smp_plus(&alg, &g));
                assert_eq!(smp_product(&alg, &g.inverse(), &g), smp_star(&alg, &g));
            }
        }
    }

    #[test]
    fn munn_model_of_chain_is_the_chain() {
        let model = build_e_of_smp(&chain(3)).unwrap();
        assert_eq!(model.semigroup.len(), 3);
        assert!(model.semigroup.is_drc_restriction());
        assert!(model.semigroup.is_fundamental().unwrap());
        assert!(model.semigroup.is_projection_generated().unwrap());
    }

    #[test]
    fn phi_of_projection_is_identity_map() {
        let s = BiUnarySemigroup::from_semilattice(&chain(3));
        let repr = phi_s(&s).unwrap();
        let (alg, _) = s.projection_algebra().unwrap();
        for p in 0..3 {
            assert_eq!(repr.images[p], PartialIso::identity(&alg, p));
        }
        assert!(repr.kernel.is_identity());
    }

    #[test]
    fn pair_repr_of_identity() {
        let alg = chain(3);
        let id = PartialIso::identity(&alg, 1);
        let (t, d) = pair_repr(&alg, &id);
        assert_eq!(t, alg.theta_map(1));
        assert_eq!(d, alg.delta_map(1));
    }

    #[test]
    fn pair_model_of_chain_matches() {
        let model = build_pair_model(&chain(3)).unwrap();
        assert_eq!(model.semigroup.len(), 3);
        assert!(model.semigroup.is_drc_restriction());
    }

    #[test]
    fn groupoid_composition_agrees_with_the_product_when_defined() {
        let alg = chain(3);
        for p in 0..3 {
            for q in 0..3 {
                let a = PartialIso::identity(&alg, p);
                let b = PartialIso::identity(&alg, q);
                match groupoid_compose(&a, &b) {
                    Ok(c) => {
                        assert_eq!(p, q);
                        assert_eq!(c, smp_product(&alg, &a, &b));
                    }
                    Err(_) => assert_ne!(p, q),
                }
            }
        }
    }
}
