//! Finite two-sided projection algebras given by operation tables.
//!
//! Elements are dense indices `0..n`. Both binary operations are stored as
//! row-major `n x n` tables with the row being the left operand, so
//! `times[e][f]` is `e × f` and `star[e][f]` is `e ⋆ f`.

use crate::error::{Error, Result};

/// A finite set with two binary operations `×` and `⋆`.
///
/// No axioms are assumed at construction beyond closure; use [`classify`]
/// (or the fast `is_*` helpers) to find out what the tables satisfy.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectionAlgebra {
    n: usize,
    times: Vec<usize>,
    star: Vec<usize>,
}

/// Outcome of running every axiom family over all element tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub left: bool,
    pub right: bool,
    pub two_sided: bool,
    pub strong: bool,
    pub symmetric: bool,
    pub commutative: bool,
    /// Least failing `(axiom, tuple)`, minimized by tuple first, then by the
    /// axiom's place in [`AXIOM_IDS`].
    pub first_violation: Option<Violation>,
}

/// A concrete witness against one axiom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub axiom: &'static str,
    /// The variables of the axiom, in the order they appear in its statement.
    pub witness: Vec<usize>,
}

/// Axiom ids in the order used for witness tie-breaking.
pub const AXIOM_IDS: [&str; 16] = [
    "L1", "L2", "L3", "L4", "R1", "R2", "R3", "R4", "P3.1", "P3.2", "P4.1", "P4.2", "SP1", "SP2",
    "SYM", "COM",
];

const AXIOM_ARITY: [usize; 16] = [1, 2, 3, 3, 1, 2, 3, 3, 3, 3, 2, 2, 3, 3, 2, 2];

impl ProjectionAlgebra {
    /// Builds an algebra from row-major tables, rejecting out-of-range entries.
    pub fn new(n: usize, times: Vec<usize>, star: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Malformed("carrier must be nonempty".into()));
        }
        if times.len() != n * n || star.len() != n * n {
            return Err(Error::Malformed(format!(
                "tables must have {} entries, got {} and {}",
                n * n,
                times.len(),
                star.len()
            )));
        }
        for &v in times.iter().chain(star.iter()) {
            if v >= n {
                return Err(Error::Malformed(format!(
                    "table entry {v} out of range for carrier of size {n}"
                )));
            }
        }
        Ok(Self { n, times, star })
    }

    /// Builds from nested rows (`times[e][f] = e × f`).
    pub fn from_rows(times: &[Vec<usize>], star: &[Vec<usize>]) -> Result<Self> {
        let n = times.len();
        let flat = |rows: &[Vec<usize>]| -> Result<Vec<usize>> {
            let mut out = Vec::with_capacity(n * n);
            for row in rows {
                if row.len() != n {
                    return Err(Error::Malformed("ragged table".into()));
                }
                out.extend_from_slice(row);
            }
            Ok(out)
        };
        Self::new(n, flat(times)?, flat(star)?)
    }

    /// The one-element algebra.
    pub fn one_element() -> Self {
        Self {
            n: 1,
            times: vec![0],
            star: vec![0],
        }
    }

    /// Chain meet-semilattice on `0 < 1 < … < n-1` with `× = ⋆ = min`.
    pub fn chain_semilattice(n: usize) -> Self {
        assert!(n > 0);
        let mut t = vec![0; n * n];
        for e in 0..n {
            for f in 0..n {
                t[e * n + f] = e.min(f);
            }
        }
        Self {
            n,
            times: t.clone(),
            star: t,
        }
    }

    /// Semilattice with `× = ⋆` given by an arbitrary meet table.
    pub fn semilattice(n: usize, meet: Vec<usize>) -> Result<Self> {
        Self::new(n, meet.clone(), meet)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn times(&self, e: usize, f: usize) -> usize {
        self.times[e * self.n + f]
    }

    #[inline]
    pub fn star(&self, e: usize, f: usize) -> usize {
        self.star[e * self.n + f]
    }

    pub fn times_table(&self) -> &[usize] {
        &self.times
    }

    pub fn star_table(&self) -> &[usize] {
        &self.star
    }

    /// The natural order: `e ≤ f` iff `e = f × e`.
    #[inline]
    pub fn leq(&self, e: usize, f: usize) -> bool {
        self.times(f, e) == e
    }

    /// `θ_p`: the map `q ↦ q ⋆ p` as a full table on the carrier.
    pub fn theta_map(&self, p: usize) -> Vec<usize> {
        (0..self.n).map(|q| self.star(q, p)).collect()
    }

    /// `δ_p`: the map `q ↦ p × q` as a full table on the carrier.
    pub fn delta_map(&self, p: usize) -> Vec<usize> {
        (0..self.n).map(|q| self.times(p, q)).collect()
    }

    /// The relation `p ℱ q`, i.e. `p × q = p` and `p ⋆ q = q`.
    #[inline]
    pub fn friendly(&self, p: usize, q: usize) -> bool {
        self.times(p, q) == p && self.star(p, q) == q
    }

    /// `e↓ = { x : x ≤ e }` in ascending order.
    pub fn downset(&self, e: usize) -> Vec<usize> {
        (0..self.n).filter(|&x| self.leq(x, e)).collect()
    }

    /// Relabels the carrier along a bijection (`perm[old] = new`).
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let n = self.n;
        let mut inv = vec![0; n];
        for (old, &new) in perm.iter().enumerate() {
            inv[new] = old;
        }
        let mut times = vec![0; n * n];
        let mut star = vec![0; n * n];
        for e in 0..n {
            for f in 0..n {
                times[e * n + f] = perm[self.times(inv[e], inv[f])];
                star[e * n + f] = perm[self.star(inv[e], inv[f])];
            }
        }
        Self { n, times, star }
    }

    fn axiom_holds(&self, idx: usize, e: usize, f: usize, g: usize) -> bool {
        let t = |a, b| self.times(a, b);
        let s = |a, b| self.star(a, b);
        match idx {
            0 => t(e, e) == e,
            1 => t(t(e, f), e) == t(e, f),
            2 => t(e, t(f, g)) == t(t(e, f), t(f, g)),
            3 => t(t(e, f), g) == t(t(e, f), t(e, g)),
            4 => s(e, e) == e,
            5 => s(f, e) == s(e, s(f, e)),
            6 => s(s(g, f), e) == s(s(g, f), s(f, e)),
            7 => s(g, s(f, e)) == s(s(g, e), s(f, e)),
            8 => s(s(e, t(f, g)), g) == s(s(e, f), g),
            9 => t(g, t(s(g, f), e)) == t(g, t(f, e)),
            10 => s(t(e, f), e) == t(e, f),
            11 => t(f, s(e, f)) == s(e, f),
            12 => t(e, s(t(t(e, f), g), f)) == t(t(e, f), g),
            13 => s(t(f, s(g, s(f, e))), e) == s(g, s(f, e)),
            14 => t(e, f) == s(f, e),
            15 => t(e, f) == t(f, e),
            _ => unreachable!(),
        }
    }

    /// Least tuple violating the axiom at position `idx` of [`AXIOM_IDS`].
    pub fn classify_axiom_witness(&self, idx: usize) -> Option<Vec<usize>> {
        self.least_violation(idx)
    }

    fn least_violation(&self, idx: usize) -> Option<Vec<usize>> {
        let n = self.n;
        let arity = AXIOM_ARITY[idx];
        match arity {
            1 => (0..n)
                .find(|&e| !self.axiom_holds(idx, e, 0, 0))
                .map(|e| vec![e]),
            2 => {
                for e in 0..n {
                    for f in 0..n {
                        if !self.axiom_holds(idx, e, f, 0) {
                            return Some(vec![e, f]);
                        }
                    }
                }
                None
            }
            _ => {
                for e in 0..n {
                    for f in 0..n {
                        for g in 0..n {
                            if !self.axiom_holds(idx, e, f, g) {
                                return Some(vec![e, f, g]);
                            }
                        }
                    }
                }
                None
            }
        }
    }

    /// Runs every axiom family and reports flags plus the least witness.
    ///
    /// The witness comes from the first failing family in the order left,
    /// right, two-sided, strong, symmetric, commutative; within a family it
    /// is the least by tuple first, then by axiom position.
    pub fn classify(&self) -> Classification {
        let fails: Vec<Option<Vec<usize>>> = (0..16).map(|i| self.least_violation(i)).collect();
        let ok = |i: usize| fails[i].is_none();
        let left = (0..4).all(ok);
        let right = (4..8).all(ok);
        let two_sided = left && right && (8..12).all(ok);
        let strong = two_sided && ok(12) && ok(13);
        let symmetric = strong && ok(14);
        let commutative = strong && ok(15);
        let families: [&[usize]; 6] = [
            &[0, 1, 2, 3],
            &[4, 5, 6, 7],
            &[8, 9, 10, 11],
            &[12, 13],
            &[14],
            &[15],
        ];
        let mut first: Option<(Vec<usize>, usize)> = None;
        for family in families {
            for &i in family {
                if let Some(w) = &fails[i] {
                    let mut padded = w.clone();
                    padded.resize(3, 0);
                    let key = (padded, i);
                    if first.as_ref().is_none_or(|best| key < *best) {
                        first = Some(key);
                    }
                }
            }
            if first.is_some() {
                break;
            }
        }
        let first_violation = first.map(|(_, i)| Violation {
            axiom: AXIOM_IDS[i],
            witness: fails[i].clone().unwrap(),
        });
        Classification {
            left,
            right,
            two_sided,
            strong,
            symmetric,
            commutative,
            first_violation,
        }
    }

    /// `(L1)–(L4)` for `×`, with early exit.
    pub fn is_left(&self) -> bool {
        let n = self.n;
        for e in 0..n {
            if self.times(e, e) != e {
                return false;
            }
        }
        for e in 0..n {
            for f in 0..n {
                let ef = self.times(e, f);
                if self.times(ef, e) != ef {
                    return false;
                }
                for g in 0..n {
                    if self.times(e, self.times(f, g)) != self.times(ef, self.times(f, g)) {
                        return false;
                    }
                    if self.times(ef, g) != self.times(ef, self.times(e, g)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `(R1)–(R4)` for `⋆`, with early exit.
    pub fn is_right(&self) -> bool {
        let n = self.n;
        for e in 0..n {
            if self.star(e, e) != e {
                return false;
            }
        }
        for e in 0..n {
            for f in 0..n {
                let fe = self.star(f, e);
                if self.star(e, fe) != fe {
                    return false;
                }
                for g in 0..n {
                    if self.star(self.star(g, f), e) != self.star(self.star(g, f), self.star(f, e))
                    {
                        return false;
                    }
                    if self.star(g, self.star(f, e)) != self.star(self.star(g, e), self.star(f, e))
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `(P1)–(P4)`.
    pub fn is_two_sided(&self) -> bool {
        if !self.is_left() || !self.is_right() {
            return false;
        }
        let n = self.n;
        for e in 0..n {
            for f in 0..n {
                if self.star(self.times(e, f), e) != self.times(e, f) {
                    return false;
                }
                if self.times(f, self.star(e, f)) != self.star(e, f) {
                    return false;
                }
                for g in 0..n {
                    if self.star(self.star(e, self.times(f, g)), g) != self.star(self.star(e, f), g)
                    {
                        return false;
                    }
                    if self.times(g, self.times(self.star(g, f), e))
                        != self.times(g, self.times(f, e))
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `(P1)–(P4)` plus `(SP1)–(SP2)`.
    pub fn is_strong(&self) -> bool {
        if !self.is_two_sided() {
            return false;
        }
        let n = self.n;
        for e in 0..n {
            for f in 0..n {
                for g in 0..n {
                    if !self.axiom_holds(12, e, f, g) || !self.axiom_holds(13, e, f, g) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Applies `map` after `first`, composing left to right.
pub fn compose_maps(first: &[usize], then: &[usize]) -> Vec<usize> {
    first.iter().map(|&x| then[x]).collect()
}

/// Checks `(x×y)ψ = xψ × yψ` and `(x⋆y)ψ = xψ ⋆ yψ` over all pairs.
pub fn is_homomorphism(
    src: &ProjectionAlgebra,
    dst: &ProjectionAlgebra,
    map: &[usize],
) -> Result<bool> {
    if map.len() != src.len() {
        return Err(Error::Malformed(format!(
            "homomorphism map has length {}, source has {} elements",
            map.len(),
            src.len()
        )));
    }
    if map.iter().any(|&v| v >= dst.len()) {
        return Err(Error::Malformed("homomorphism value out of range".into()));
    }
    for x in 0..src.len() {
        for y in 0..src.len() {
            if map[src.times(x, y)] != dst.times(map[x], map[y]) {
                return Ok(false);
            }
            if map[src.star(x, y)] != dst.star(map[x], map[y]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All homomorphisms `src → dst` in lexicographic order of the value table.
pub fn enumerate_homomorphisms(
    src: &ProjectionAlgebra,
    dst: &ProjectionAlgebra,
) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut map = vec![0usize; src.len()];
    loop {
        if is_homomorphism(src, dst, &map).unwrap() {
            out.push(map.clone());
        }
        // odometer increment
        let mut i = src.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            map[i] += 1;
            if map[i] < dst.len() {
                break;
            }
            map[i] = 0;
        }
    }
}

const DEFAULT_ENUM_LIMIT: usize = 4;

/// All strong projection algebras on `0..n`, in lexicographic table order.
///
/// With `dedup` set, keeps one lexicographically-least representative per
/// isomorphism class (a carrier bijection commuting with both tables).
pub fn enumerate_strong_algebras(n: usize, dedup: bool) -> Result<Vec<ProjectionAlgebra>> {
    enumerate_strong_algebras_with_limit(n, dedup, DEFAULT_ENUM_LIMIT)
}

/// As [`enumerate_strong_algebras`] but with a caller-chosen size guard.
pub fn enumerate_strong_algebras_with_limit(
    n: usize,
    dedup: bool,
    limit: usize,
) -> Result<Vec<ProjectionAlgebra>> {
    if n == 0 || n > limit {
        return Err(Error::ResourceLimit(format!(
            "strong-algebra enumeration guarded at 1..={limit}, asked for {n}"
        )));
    }
    let lefts = enumerate_left_tables(n);
    // Right algebras are exactly the transposes of left tables: with
    // m(e,f) = f ⋆ e, axioms (R1)-(R4) become (L1)-(L4) for m.
    let mut rights: Vec<Vec<usize>> = lefts.iter().map(|t| transpose(t, n)).collect();
    rights.sort();
    let mut out = Vec::new();
    for times in &lefts {
        for star in &rights {
            let alg = ProjectionAlgebra {
                n,
                times: times.clone(),
                star: star.clone(),
            };
            if pair_axioms_hold(&alg) && strong_axioms_hold(&alg) {
                out.push(alg);
            }
        }
    }
    if dedup {
        out.retain(is_canonical);
    }
    Ok(out)
}

fn transpose(t: &[usize], n: usize) -> Vec<usize> {
    let mut out = vec![0; n * n];
    for e in 0..n {
        for f in 0..n {
            out[e * n + f] = t[f * n + e];
        }
    }
    out
}

fn pair_axioms_hold(alg: &ProjectionAlgebra) -> bool {
    let n = alg.len();
    for e in 0..n {
        for f in 0..n {
            if !alg.axiom_holds(10, e, f, 0) || !alg.axiom_holds(11, e, f, 0) {
                return false;
            }
        }
    }
    for e in 0..n {
        for f in 0..n {
            for g in 0..n {
                if !alg.axiom_holds(8, e, f, g) || !alg.axiom_holds(9, e, f, g) {
                    return false;
                }
            }
        }
    }
    true
}

fn strong_axioms_hold(alg: &ProjectionAlgebra) -> bool {
    let n = alg.len();
    for e in 0..n {
        for f in 0..n {
            for g in 0..n {
                if !alg.axiom_holds(12, e, f, g) || !alg.axiom_holds(13, e, f, g) {
                    return false;
                }
            }
        }
    }
    true
}

/// True when no relabeling produces a lexicographically smaller table pair.
pub fn is_canonical(alg: &ProjectionAlgebra) -> bool {
    let n = alg.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let key = (alg.times.clone(), alg.star.clone());
    loop {
        let relabeled = alg.relabel(&perm);
        if (relabeled.times, relabeled.star) < key {
            return false;
        }
        if !next_permutation(&mut perm) {
            return true;
        }
    }
}

pub(crate) fn next_permutation(perm: &mut [usize]) -> bool {
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

/// All `×`-tables on `0..n` satisfying `(L1)–(L4)`, by backtracking with
/// partial-table pruning; output in lexicographic order.
pub fn enumerate_left_tables(n: usize) -> Vec<Vec<usize>> {
    const UNSET: usize = usize::MAX;
    let mut table = vec![UNSET; n * n];
    for e in 0..n {
        table[e * n + e] = e; // (L1)
    }
    let mut out = Vec::new();
    fill(&mut table, n, 0, &mut out);
    return out;

    fn fill(table: &mut [usize], n: usize, pos: usize, out: &mut Vec<Vec<usize>>) {
        if pos == n * n {
            out.push(table.to_vec());
            return;
        }
        if table[pos] != UNSET {
            if partial_ok(table, n) {
                fill(table, n, pos + 1, out);
            }
            return;
        }
        for v in 0..n {
            table[pos] = v;
            if partial_ok(table, n) {
                fill(table, n, pos + 1, out);
            }
        }
        table[pos] = UNSET;
    }

    fn partial_ok(t: &[usize], n: usize) -> bool {
        let get = |a: usize, b: usize| -> Option<usize> {
            let v = t[a * n + b];
            (v != UNSET).then_some(v)
        };
        for e in 0..n {
            for f in 0..n {
                let Some(ef) = get(e, f) else { continue };
                if let Some(v) = get(ef, e) {
                    if v != ef {
                        return false; // (L2)
                    }
                }
                for g in 0..n {
                    // (L3) e×(f×g) = (e×f)×(f×g)
                    if let Some(fg) = get(f, g) {
                        if let (Some(a), Some(b)) = (get(e, fg), get(ef, fg)) {
                            if a != b {
                                return false;
                            }
                        }
                    }
                    // (L4) (e×f)×g = (e×f)×(e×g)
                    if let (Some(a), Some(eg)) = (get(ef, g), get(e, g)) {
                        if let Some(b) = get(ef, eg) {
                            if a != b {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }
}
