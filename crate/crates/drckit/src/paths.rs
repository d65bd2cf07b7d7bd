//! `P`-paths over a strong projection algebra and their category structure.
//!
//! A path is a nonempty sequence of projections whose consecutive entries are
//! in the relation `ℱ` (`p×q = p`, `p⋆q = q`). Composition concatenates on a
//! shared junction; left and right restriction push a smaller projection
//! through the sequence with `θ` and `δ`.

use crate::algebra::{compose_maps, ProjectionAlgebra};
use crate::error::{Error, Result};

/// A validated `P`-path. Paths are stored unreduced: `(p, p)` is a different
/// path from `(p)`, and collapsing the two is the business of the chain
/// congruence, not of this module.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PPath(Vec<usize>);

impl PPath {
    pub fn new(alg: &ProjectionAlgebra, seq: &[usize]) -> Result<Self> {
        if seq.is_empty() {
            return Err(Error::Malformed("a path must be nonempty".into()));
        }
        if seq.iter().any(|&p| p >= alg.len()) {
            return Err(Error::Malformed("path entry out of range".into()));
        }
        for w in seq.windows(2) {
            if !alg.friendly(w[0], w[1]) {
                return Err(Error::Malformed(format!(
                    "consecutive entries {} and {} are not ℱ-related",
                    w[0], w[1]
                )));
            }
        }
        Ok(Self(seq.to_vec()))
    }

    /// The length-1 path at a projection.
    pub fn object(alg: &ProjectionAlgebra, p: usize) -> Result<Self> {
        Self::new(alg, &[p])
    }

    pub(crate) fn from_vec_unchecked(seq: Vec<usize>) -> Self {
        Self(seq)
    }

    pub fn seq(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Domain `d(𝔭) = p₁`.
    pub fn dom(&self) -> usize {
        self.0[0]
    }

    /// Range `r(𝔭) = p_k`.
    pub fn cod(&self) -> usize {
        *self.0.last().unwrap()
    }
}

/// `𝔭 ∘ 𝔮`: concatenation sharing the junction `r(𝔭) = d(𝔮)`.
pub fn compose(alg: &ProjectionAlgebra, p: &PPath, q: &PPath) -> Result<PPath> {
    let _ = alg;
    if p.cod() != q.dom() {
        return Err(Error::UndefinedComposition(format!(
            "r = {} does not meet d = {}",
            p.cod(),
            q.dom()
        )));
    }
    let mut seq = p.0.clone();
    seq.extend_from_slice(&q.0[1..]);
    Ok(PPath(seq))
}

/// Left restriction `_q↿𝔭` for `q ≤ d(𝔭)`: `q₁ = q`, `qᵢ = q_{i-1} ⋆ pᵢ`.
pub fn left_restrict(alg: &ProjectionAlgebra, q: usize, p: &PPath) -> Result<PPath> {
    if !alg.leq(q, p.dom()) {
        return Err(Error::Precondition(format!(
            "{} is not below the domain {}",
            q,
            p.dom()
        )));
    }
    let mut seq = Vec::with_capacity(p.len());
    let mut cur = q;
    seq.push(cur);
    for &pi in &p.0[1..] {
        cur = alg.star(cur, pi);
        seq.push(cur);
    }
    debug_assert!(seq.windows(2).all(|w| alg.friendly(w[0], w[1])));
    Ok(PPath(seq))
}

/// Right restriction `𝔭↾_q` for `q ≤ r(𝔭)`: `q_k = q`, `qᵢ = pᵢ × q_{i+1}`.
pub fn right_restrict(alg: &ProjectionAlgebra, p: &PPath, q: usize) -> Result<PPath> {
    if !alg.leq(q, p.cod()) {
        return Err(Error::Precondition(format!(
            "{} is not below the range {}",
            q,
            p.cod()
        )));
    }
    let mut seq = vec![0; p.len()];
    let mut cur = q;
    *seq.last_mut().unwrap() = cur;
    for i in (0..p.len() - 1).rev() {
        cur = alg.times(p.0[i], cur);
        seq[i] = cur;
    }
    debug_assert!(seq.windows(2).all(|w| alg.friendly(w[0], w[1])));
    Ok(PPath(seq))
}

/// The path order: `𝔭 ≤ 𝔮` iff `𝔭` is the left restriction of `𝔮` at `d(𝔭)`.
pub fn path_leq(alg: &ProjectionAlgebra, p: &PPath, q: &PPath) -> bool {
    if p.len() != q.len() || !alg.leq(p.dom(), q.dom()) {
        return false;
    }
    left_restrict(alg, p.dom(), q)
        .map(|r| r == *p)
        .unwrap_or(false)
}

/// `Θ_𝔭 = θ_{p₁} θ_{p₂} … θ_{p_k}` as a total map on the carrier.
pub fn theta_of_path(alg: &ProjectionAlgebra, p: &PPath) -> Vec<usize> {
    let mut map: Vec<usize> = (0..alg.len()).collect();
    for &pi in p.seq() {
        map = compose_maps(&map, &alg.theta_map(pi));
    }
    map
}

/// `Δ_𝔭 = δ_{p_k} δ_{p_{k-1}} … δ_{p₁}` as a total map on the carrier.
pub fn delta_of_path(alg: &ProjectionAlgebra, p: &PPath) -> Vec<usize> {
    let mut map: Vec<usize> = (0..alg.len()).collect();
    for &pi in p.seq().iter().rev() {
        map = compose_maps(&map, &alg.delta_map(pi));
    }
    map
}

/// `ν_𝔭`: the restriction of `Θ_𝔭` to `d(𝔭)↓`, as sorted `(input, output)`
/// pairs.
pub fn nu_of_path(alg: &ProjectionAlgebra, p: &PPath) -> Vec<(usize, usize)> {
    let theta = theta_of_path(alg, p);
    alg.downset(p.dom())
        .into_iter()
        .map(|x| (x, theta[x]))
        .collect()
}

/// `μ_𝔭`: the restriction of `Δ_𝔭` to `r(𝔭)↓`.
pub fn mu_of_path(alg: &ProjectionAlgebra, p: &PPath) -> Vec<(usize, usize)> {
    let delta = delta_of_path(alg, p);
    alg.downset(p.cod())
        .into_iter()
        .map(|x| (x, delta[x]))
        .collect()
}

/// Every `P`-path of length at most `max_len`, in length-then-lexicographic
/// order.
pub fn enumerate_paths(alg: &ProjectionAlgebra, max_len: usize) -> Vec<PPath> {
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<usize>> = (0..alg.len()).map(|p| vec![p]).collect();
    for _ in 0..max_len {
        out.extend(frontier.iter().cloned().map(PPath));
        let mut next = Vec::new();
        for seq in &frontier {
            let last = *seq.last().unwrap();
            for q in 0..alg.len() {
                if alg.friendly(last, q) {
                    let mut longer = seq.clone();
                    longer.push(q);
                    next.push(longer);
                }
            }
        }
        frontier = next;
    }
    out
}
