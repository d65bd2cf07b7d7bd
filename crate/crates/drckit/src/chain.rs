//! The chain semigroup of a strong projection algebra.
//!
//! Paths are rewritten by two move families: collapsing or duplicating a
//! `(p, p)` factor, and swapping the middle of an admissible-triple factor
//! `(e, e⋆p, f) ↔ (e, p×f, f)`. Equality of the generated congruence classes
//! is only semi-decided by bounded search; the quotient by the maximum
//! projection-separating congruence is finite and is built explicitly from
//! signatures.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use crate::algebra::{is_homomorphism, ProjectionAlgebra};
use crate::error::{Error, Result};
use crate::paths::{left_restrict, right_restrict, PPath};
use crate::semigroup::BiUnarySemigroup;

/// `(e, p, f)` with `f = (e⋆p)⋆f` and `e = e×(p×f)`.
pub fn is_admissible(alg: &ProjectionAlgebra, e: usize, p: usize, f: usize) -> bool {
    alg.star(alg.star(e, p), f) == f && alg.times(e, alg.times(p, f)) == e
}

/// All paths reachable from `p` by one rewrite move, sorted and deduplicated.
///
/// Moves: drop one of a doubled entry, duplicate any entry, and for every
/// admissible triple `(e, w, f)` witnessed inside a length-3 window, swap the
/// middle between `e⋆w` and `w×f`.
pub fn elementary_moves(alg: &ProjectionAlgebra, path: &PPath) -> Vec<PPath> {
    let seq = path.seq();
    let k = seq.len();
    let mut out = BTreeSet::new();
    // contract (p, p) -> (p)
    if k >= 2 {
        for i in 0..k - 1 {
            if seq[i] == seq[i + 1] {
                let mut s = seq.to_vec();
                s.remove(i + 1);
                out.insert(PPath::from_vec_unchecked(s));
            }
        }
    }
    // expand (p) -> (p, p)
    for i in 0..k {
        let mut s = seq.to_vec();
        s.insert(i + 1, seq[i]);
        out.insert(PPath::from_vec_unchecked(s));
    }
    // admissible-triple swaps on windows (e, m, f)
    if k >= 3 {
        for i in 0..k - 2 {
            let (e, m, f) = (seq[i], seq[i + 1], seq[i + 2]);
            for w in 0..alg.len() {
                if !is_admissible(alg, e, w, f) {
                    continue;
                }
                if m == alg.star(e, w) {
                    let mut s = seq.to_vec();
                    s[i + 1] = alg.times(w, f);
                    out.insert(PPath::from_vec_unchecked(s));
                }
                if m == alg.times(w, f) {
                    let mut s = seq.to_vec();
                    s[i + 1] = alg.star(e, w);
                    out.insert(PPath::from_vec_unchecked(s));
                }
            }
        }
    }
    out.remove(path);
    out.into_iter().collect()
}

/// The `μ`-class data of a path: its first entry together with the composite
/// `θ_{p₂}…θ_{p_k}` restricted to `p₁↓`. Equal signatures are exactly
/// equality in the fundamental quotient; rewrite moves never change them.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FundamentalSignature {
    pub d: usize,
    /// Sorted `(input, output)` pairs over `d↓`.
    pub map: Vec<(usize, usize)>,
}

impl FundamentalSignature {
    /// The range is forced: it is the image of `d`.
    pub fn cod(&self) -> usize {
        self.map.iter().find(|&&(x, _)| x == self.d).unwrap().1
    }
}

pub fn fundamental_signature(alg: &ProjectionAlgebra, path: &PPath) -> FundamentalSignature {
    let d = path.dom();
    let map = alg
        .downset(d)
        .into_iter()
        .map(|x| {
            let mut cur = x;
            for &p in &path.seq()[1..] {
                cur = alg.star(cur, p);
            }
            (x, cur)
        })
        .collect();
    FundamentalSignature { d, map }
}

/// Three-valued verdict of the bounded congruence search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Equivalence {
    Yes,
    No,
    Unknown,
}

/// Limits for the bidirectional search over rewrite moves.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    /// Cap on the length of intermediate paths.
    pub max_len: usize,
    /// Cap on the total number of distinct paths visited.
    pub max_states: usize,
}

impl Budget {
    pub const DEFAULT_MAX_STATES: usize = 1_000_000;

    /// Default: intermediate length `max(len p, len q) + 4`, one million
    /// states.
    pub fn default_for(p: &PPath, q: &PPath) -> Self {
        Budget {
            max_len: p.len().max(q.len()) + 4,
            max_states: Self::DEFAULT_MAX_STATES,
        }
    }

    pub fn with_states(self, max_states: usize) -> Self {
        Budget { max_states, ..self }
    }
}

/// Bounded semi-decision of `𝔭 ≈ 𝔮`.
///
/// `Yes` is certified by a move sequence found within budget. `No` is
/// returned only on sound refutations: mismatched endpoints or mismatched
/// signatures. An exhausted search yields `Unknown`, never `No`.
pub fn paths_equivalent(
    alg: &ProjectionAlgebra,
    p: &PPath,
    q: &PPath,
    budget: Budget,
) -> Equivalence {
    if p == q {
        return Equivalence::Yes;
    }
    if p.dom() != q.dom() || p.cod() != q.cod() {
        return Equivalence::No;
    }
    if fundamental_signature(alg, p) != fundamental_signature(alg, q) {
        return Equivalence::No;
    }
    // bidirectional BFS; owners: 0 = from p, 1 = from q
    let mut owner: HashMap<PPath, u8> = HashMap::new();
    let mut queue: VecDeque<PPath> = VecDeque::new();
    owner.insert(p.clone(), 0);
    owner.insert(q.clone(), 1);
    queue.push_back(p.clone());
    queue.push_back(q.clone());
    let mut visited = 2usize;
    while let Some(cur) = queue.pop_front() {
        let side = owner[&cur];
        for next in elementary_moves(alg, &cur) {
            if next.len() > budget.max_len {
                continue;
            }
            match owner.get(&next) {
                Some(&s) if s != side => return Equivalence::Yes,
                Some(_) => {}
                None => {
                    if visited >= budget.max_states {
                        return Equivalence::Unknown;
                    }
                    visited += 1;
                    owner.insert(next.clone(), side);
                    queue.push_back(next);
                }
            }
        }
    }
    // the capped component is exhausted; longer detours might still connect
    Equivalence::Unknown
}

/// Rewrites a word over the generator alphabet into an equivalent `P`-path
/// word of the same length: fold each new letter `q` against the current last
/// entry `r` as `(r×q, r⋆q)` and propagate `x ↦ x × next` back through the
/// prefix.
pub fn normalize_word(alg: &ProjectionAlgebra, word: &[usize]) -> Result<PPath> {
    if word.is_empty() {
        return Err(Error::Malformed("a word must be nonempty".into()));
    }
    if word.iter().any(|&p| p >= alg.len()) {
        return Err(Error::Malformed("word letter out of range".into()));
    }
    let mut seq = vec![word[0]];
    for &q in &word[1..] {
        let r = *seq.last().unwrap();
        *seq.last_mut().unwrap() = alg.times(r, q);
        for i in (0..seq.len() - 1).rev() {
            seq[i] = alg.times(seq[i], seq[i + 1]);
        }
        seq.push(alg.star(r, q));
    }
    PPath::new(alg, &seq)
}

/// The product `[𝔭]•[𝔮]` of chain-semigroup classes, computed on
/// representatives: right-restrict `𝔭` at `r(𝔭)×d(𝔮)`, left-restrict `𝔮` at
/// `r(𝔭)⋆d(𝔮)`, and concatenate (no junction is shared; the length adds).
pub fn chain_product(alg: &ProjectionAlgebra, p: &PPath, q: &PPath) -> PPath {
    let a = alg.times(p.cod(), q.dom());
    let b = alg.star(p.cod(), q.dom());
    let left = right_restrict(alg, p, a).expect("r(p)×d(q) ≤ r(p)");
    let right = left_restrict(alg, b, q).expect("r(p)⋆d(q) ≤ d(q)");
    let mut seq = left.seq().to_vec();
    seq.extend_from_slice(right.seq());
    debug_assert!(alg.friendly(left.cod(), right.dom()));
    PPath::from_vec_unchecked(seq)
}

/// The fundamental quotient of the chain semigroup, built as a closure over
/// signatures with canonical path representatives kept alongside.
#[derive(Debug, Clone)]
pub struct FundamentalModel {
    pub semigroup: BiUnarySemigroup,
    /// Representative path per element, in element order.
    pub reps: Vec<PPath>,
    /// Signature per element, in element order.
    pub sigs: Vec<FundamentalSignature>,
    /// Element index of the generator class `[p]` per projection `p`.
    pub generators: Vec<usize>,
}

/// Worklist closure of the generator signatures `{(p, id_{p↓})}` under the
/// representative-level product. Termination: there are finitely many
/// `(projection, map)` pairs.
pub fn build_fundamental(alg: &ProjectionAlgebra) -> Result<FundamentalModel> {
    if !alg.is_strong() {
        return Err(Error::Precondition(
            "the fundamental model is defined over strong projection algebras".into(),
        ));
    }
    let mut index: BTreeMap<FundamentalSignature, usize> = BTreeMap::new();
    let mut reps: Vec<PPath> = Vec::new();
    let mut sigs: Vec<FundamentalSignature> = Vec::new();
    let mut generators = Vec::with_capacity(alg.len());
    for p in 0..alg.len() {
        let rep = PPath::object(alg, p)?;
        let sig = fundamental_signature(alg, &rep);
        let id = reps.len();
        index.insert(sig.clone(), id);
        reps.push(rep);
        sigs.push(sig);
        generators.push(id);
    }
    let mut frontier: Vec<usize> = (0..reps.len()).collect();
    while !frontier.is_empty() {
        let mut fresh = Vec::new();
        let known: Vec<usize> = (0..reps.len()).collect();
        for &a in &known {
            for &b in &known {
                if !frontier.contains(&a) && !frontier.contains(&b) {
                    continue;
                }
                let prod = chain_product(alg, &reps[a], &reps[b]);
                let sig = fundamental_signature(alg, &prod);
                if !index.contains_key(&sig) {
                    let id = reps.len();
                    index.insert(sig.clone(), id);
                    reps.push(prod);
                    sigs.push(sig);
                    fresh.push(id);
                }
            }
        }
        frontier = fresh;
    }
    let k = reps.len();
    let mut mul = vec![0; k * k];
    for a in 0..k {
        for b in 0..k {
            let sig = fundamental_signature(alg, &chain_product(alg, &reps[a], &reps[b]));
            mul[a * k + b] = index[&sig];
        }
    }
    let plus: Vec<usize> = reps.iter().map(|r| generators[r.dom()]).collect();
    let star: Vec<usize> = reps.iter().map(|r| generators[r.cod()]).collect();
    let semigroup = BiUnarySemigroup::new(k, mul, plus, star)?;
    Ok(FundamentalModel {
        semigroup,
        reps,
        sigs,
        generators,
    })
}

/// The extension of a projection-algebra homomorphism `φ: P → P(S)` to an
/// evaluator on chain-semigroup classes: a class is sent to the product of
/// the `φ`-images along any representative.
pub struct HomExtension<'a> {
    target: &'a BiUnarySemigroup,
    phi: Vec<usize>,
}

impl<'a> HomExtension<'a> {
    /// `phi` maps each projection of `alg` to an element of `target`, which
    /// must be a projection there, and must respect `×` and `⋆` through the
    /// `(ef)⁺` / `(ef)*` operations of the target.
    pub fn new(
        alg: &ProjectionAlgebra,
        phi: &[usize],
        target: &'a BiUnarySemigroup,
    ) -> Result<Self> {
        if !target.is_drc_restriction() {
            return Err(Error::Precondition(
                "homomorphism extension targets a DRC-restriction semigroup".into(),
            ));
        }
        let (pal, carrier) = target.projection_algebra()?;
        if phi.len() != alg.len() {
            return Err(Error::Precondition(
                "map length must match the source".into(),
            ));
        }
        let mut as_positions = Vec::with_capacity(phi.len());
        for &v in phi {
            match carrier.binary_search(&v) {
                Ok(pos) => as_positions.push(pos),
                Err(_) => {
                    return Err(Error::Precondition(format!(
                        "{v} is not a projection of the target"
                    )))
                }
            }
        }
        if !is_homomorphism(alg, &pal, &as_positions)? {
            return Err(Error::Precondition(
                "the map is not a projection-algebra homomorphism".into(),
            ));
        }
        Ok(Self {
            target,
            phi: phi.to_vec(),
        })
    }

    /// `[p₁,…,p_k] ↦ (p₁φ)(p₂φ)…(p_kφ)`.
    pub fn eval_path(&self, path: &PPath) -> usize {
        self.eval_letters(path.seq())
    }

    /// The direct generator-product of a word, without normalization.
    pub fn eval_letters(&self, letters: &[usize]) -> usize {
        let mut acc = self.phi[letters[0]];
        for &p in &letters[1..] {
            acc = self.target.mul(acc, self.phi[p]);
        }
        acc
    }
}

/// Seeded word generator for tests and examples: a plain xorshift so that
/// corpora are reproducible without extra dependencies.
pub fn seeded_words(n_letters: usize, count: usize, max_len: usize, seed: u64) -> Vec<Vec<usize>> {
    let mut state = seed | 1;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    (0..count)
        .map(|_| {
            let len = (next() as usize % max_len) + 1;
            (0..len).map(|_| next() as usize % n_letters).collect()
        })
        .collect()
}
