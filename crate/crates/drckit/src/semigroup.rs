//! Finite bi-unary semigroups `(S, ·, ⁺, *)` given by tables.
//!
//! The Cayley table is row-major with the row as the left factor. DRC and
//! DRC-ample axioms are verified pointwise; everything downstream (natural
//! order, `μ`, quotients, special classes) refuses to run on inputs that do
//! not pass the relevant checks.

use crate::algebra::ProjectionAlgebra;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BiUnarySemigroup {
    n: usize,
    mul: Vec<usize>,
    plus: Vec<usize>,
    star: Vec<usize>,
}

/// Verdict of a pointwise axiom check, with the least witness on failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub ok: bool,
    /// `(axiom id, witness tuple)`, minimized by tuple then axiom order.
    pub witness: Option<(&'static str, Vec<usize>)>,
}

/// A partition of the carrier into congruence blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    /// `class_of[x]` is the index of the block containing `x`.
    pub class_of: Vec<usize>,
    /// Blocks in ascending order of their least elements.
    pub blocks: Vec<Vec<usize>>,
}

impl Partition {
    /// Builds the partition induced by an equivalence given as a predicate.
    pub fn from_relation(n: usize, related: impl Fn(usize, usize) -> bool) -> Self {
        let mut class_of = vec![usize::MAX; n];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let id = blocks.len();
            let mut block = vec![x];
            class_of[x] = id;
            for y in x + 1..n {
                if class_of[y] == usize::MAX && related(x, y) {
                    class_of[y] = id;
                    block.push(y);
                }
            }
            blocks.push(block);
        }
        Self { class_of, blocks }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            class_of: (0..n).collect(),
            blocks: (0..n).map(|x| vec![x]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 1)
    }

    /// True when every block of `self` is contained in a block of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        self.class_of.iter().enumerate().all(|(x, _)| {
            let b = self.class_of[x];
            self.blocks[b]
                .iter()
                .all(|&y| other.class_of[y] == other.class_of[x])
        })
    }
}

const DRC_AXIOMS: [&str; 10] = [
    "i", "ii", "iii", "iv", "v", "i'", "ii'", "iii'", "iv'", "v'",
];

impl BiUnarySemigroup {
    pub fn new(n: usize, mul: Vec<usize>, plus: Vec<usize>, star: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Malformed("carrier must be nonempty".into()));
        }
        if mul.len() != n * n || plus.len() != n || star.len() != n {
            return Err(Error::Malformed(
                "table shapes do not match carrier size".into(),
            ));
        }
        if mul
            .iter()
            .chain(plus.iter())
            .chain(star.iter())
            .any(|&v| v >= n)
        {
            return Err(Error::Malformed("table entry out of range".into()));
        }
        Ok(Self { n, mul, plus, star })
    }

    /// A meet-semilattice viewed as a bi-unary semigroup (`x⁺ = x* = x`).
    pub fn from_semilattice(alg: &ProjectionAlgebra) -> Self {
        let n = alg.len();
        let mut mul = vec![0; n * n];
        for e in 0..n {
            for f in 0..n {
                mul[e * n + f] = alg.times(e, f);
            }
        }
        Self {
            n,
            mul,
            plus: (0..n).collect(),
            star: (0..n).collect(),
        }
    }

    /// The cyclic group of order `k` with trivial unary operations.
    pub fn cyclic_group(k: usize) -> Self {
        let mut mul = vec![0; k * k];
        for a in 0..k {
            for b in 0..k {
                mul[a * k + b] = (a + b) % k;
            }
        }
        Self {
            n: k,
            mul,
            plus: vec![0; k],
            star: vec![0; k],
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b]
    }

    #[inline]
    pub fn plus(&self, a: usize) -> usize {
        self.plus[a]
    }

    #[inline]
    pub fn star(&self, a: usize) -> usize {
        self.star[a]
    }

    pub fn mul_table(&self) -> &[usize] {
        &self.mul
    }

    pub fn plus_table(&self) -> &[usize] {
        &self.plus
    }

    pub fn star_table(&self) -> &[usize] {
        &self.star
    }

    /// Least triple breaking associativity, if any.
    pub fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    fn drc_axiom_holds(&self, idx: usize, x: usize, y: usize) -> bool {
        let m = |a, b| self.mul(a, b);
        let p = |a| self.plus(a);
        let s = |a| self.star(a);
        match idx {
            0 => m(p(x), x) == x,
            1 => p(m(x, y)) == p(m(x, p(y))),
            2 => p(m(x, y)) == m(m(p(x), p(m(x, y))), p(x)),
            3 => p(p(x)) == p(x),
            4 => s(p(x)) == p(x),
            5 => m(x, s(x)) == x,
            6 => s(m(x, y)) == s(m(s(x), y)),
            7 => s(m(x, y)) == m(m(s(y), s(m(x, y))), s(y)),
            8 => s(s(x)) == s(x),
            9 => p(s(x)) == s(x),
            _ => unreachable!(),
        }
    }

    const DRC_ARITY: [usize; 10] = [1, 2, 2, 1, 1, 1, 2, 2, 1, 1];

    /// Least tuple violating the named DRC axiom (`"i"`, `"ii'"`, …).
    pub fn drc_axiom_witness(&self, id: &str) -> Option<Vec<usize>> {
        let idx = DRC_AXIOMS.iter().position(|&a| a == id)?;
        self.least_drc_violation(idx)
    }

    fn least_drc_violation(&self, idx: usize) -> Option<Vec<usize>> {
        if Self::DRC_ARITY[idx] == 1 {
            return (0..self.n)
                .find(|&x| !self.drc_axiom_holds(idx, x, 0))
                .map(|x| vec![x]);
        }
        for x in 0..self.n {
            for y in 0..self.n {
                if !self.drc_axiom_holds(idx, x, y) {
                    return Some(vec![x, y]);
                }
            }
        }
        None
    }

    /// The ten DRC axioms. Non-associative tables are rejected first with a
    /// structural error rather than an axiom witness.
    pub fn check_drc(&self) -> Result<CheckOutcome> {
        if let Some(w) = self.associativity_witness() {
            return Err(Error::Malformed(format!(
                "multiplication is not associative, witness {:?}",
                w
            )));
        }
        let mut best: Option<(Vec<usize>, usize)> = None;
        for idx in 0..DRC_AXIOMS.len() {
            if let Some(w) = self.least_drc_violation(idx) {
                let mut padded = w;
                padded.resize(2, 0);
                let key = (padded, idx);
                if best.as_ref().is_none_or(|b| key < *b) {
                    best = Some(key);
                }
            }
        }
        Ok(match best {
            None => CheckOutcome {
                ok: true,
                witness: None,
            },
            Some((_, idx)) => CheckOutcome {
                ok: false,
                witness: Some((DRC_AXIOMS[idx], self.least_drc_violation(idx).unwrap())),
            },
        })
    }

    pub fn is_drc(&self) -> bool {
        self.associativity_witness().is_none()
            && (0..10).all(|idx| {
                (0..self.n).all(|x| (0..self.n).all(|y| self.drc_axiom_holds(idx, x, y)))
            })
    }

    /// Sorted carrier of `P(S) = { x⁺ }`.
    pub fn projections(&self) -> Vec<usize> {
        let mut ps: Vec<usize> = self.plus.clone();
        ps.sort_unstable();
        ps.dedup();
        ps
    }

    /// DRC-ample conditions `(vi)`, `(vi)'`, quantifying the inner variable
    /// over projections only.
    pub fn check_ample(&self) -> Result<CheckOutcome> {
        let drc = self.check_drc()?;
        if !drc.ok {
            return Err(Error::Precondition(format!(
                "ample check requires a DRC semigroup; axiom ({}) fails at {:?}",
                drc.witness.as_ref().unwrap().0,
                drc.witness.as_ref().unwrap().1
            )));
        }
        let ps = self.projections();
        let mut best: Option<(Vec<usize>, usize)> = None;
        for x in 0..self.n {
            for &e in &ps {
                // (vi): x(ex)* = (ex⁺)*x
                if self.mul(x, self.star(self.mul(e, x)))
                    != self.mul(self.star(self.mul(e, self.plus(x))), x)
                {
                    let key = (vec![x, e], 0);
                    if best.as_ref().is_none_or(|b| key < *b) {
                        best = Some(key);
                    }
                }
                // (vi)': (xe)⁺x = x(x*e)⁺
                if self.mul(self.plus(self.mul(x, e)), x)
                    != self.mul(x, self.plus(self.mul(self.star(x), e)))
                {
                    let key = (vec![x, e], 1);
                    if best.as_ref().is_none_or(|b| key < *b) {
                        best = Some(key);
                    }
                }
            }
        }
        Ok(match best {
            None => CheckOutcome {
                ok: true,
                witness: None,
            },
            Some((w, which)) => CheckOutcome {
                ok: false,
                witness: Some((if which == 0 { "vi" } else { "vi'" }, w)),
            },
        })
    }

    pub fn is_drc_restriction(&self) -> bool {
        self.is_drc() && self.check_ample().map(|o| o.ok).unwrap_or(false)
    }

    fn require_drc_restriction(&self, what: &str) -> Result<()> {
        if !self.is_drc_restriction() {
            return Err(Error::Contract(format!(
                "{what} requires a DRC-restriction semigroup"
            )));
        }
        Ok(())
    }

    /// The projection algebra `(P(S), ×, ⋆)` with `e×f = (ef)⁺` and
    /// `e⋆f = (ef)*`, together with the embedding of its carrier into `S`.
    pub fn projection_algebra(&self) -> Result<(ProjectionAlgebra, Vec<usize>)> {
        let drc = self.check_drc()?;
        if !drc.ok {
            return Err(Error::Precondition(
                "projection algebra is defined for DRC semigroups only".into(),
            ));
        }
        let ps = self.projections();
        let k = ps.len();
        let pos = |e: usize| ps.binary_search(&e).unwrap();
        let mut times = vec![0; k * k];
        let mut star = vec![0; k * k];
        for (i, &e) in ps.iter().enumerate() {
            for (j, &f) in ps.iter().enumerate() {
                times[i * k + j] = pos(self.plus(self.mul(e, f)));
                star[i * k + j] = pos(self.star(self.mul(e, f)));
            }
        }
        Ok((ProjectionAlgebra::new(k, times, star)?, ps))
    }

    /// Natural order `a ≤ b ⟺ a = a⁺b = ba*` of a DRC-restriction semigroup.
    pub fn natural_leq(&self, a: usize, b: usize) -> Result<bool> {
        self.require_drc_restriction("the natural order")?;
        Ok(self.natural_leq_unchecked(a, b))
    }

    #[inline]
    pub(crate) fn natural_leq_unchecked(&self, a: usize, b: usize) -> bool {
        self.mul(self.plus(a), b) == a && self.mul(b, self.star(a)) == a
    }

    /// The maximum projection-separating (2,1,1)-congruence, by its defining
    /// conditions: `a μ b` iff `a⁺=b⁺`, `a*=b*`, and `(ap)⁺=(bp)⁺`,
    /// `(pa)*=(pb)*` for every projection `p`.
    pub fn mu(&self) -> Result<Partition> {
        self.require_drc_restriction("μ")?;
        let ps = self.projections();
        let related = |a: usize, b: usize| {
            self.plus(a) == self.plus(b)
                && self.star(a) == self.star(b)
                && ps.iter().all(|&p| {
                    self.plus(self.mul(a, p)) == self.plus(self.mul(b, p))
                        && self.star(self.mul(p, a)) == self.star(self.mul(p, b))
                })
        };
        let part = Partition::from_relation(self.n, related);
        assert!(self.is_221_congruence(&part));
        assert!(self.is_projection_separating(&part));
        Ok(part)
    }

    /// Compatibility of a partition with `·`, `⁺` and `*`.
    pub fn is_221_congruence(&self, part: &Partition) -> bool {
        if part.class_of.len() != self.n {
            return false;
        }
        let cls = &part.class_of;
        for a in 0..self.n {
            for b in 0..self.n {
                if cls[a] != cls[b] {
                    continue;
                }
                if cls[self.plus(a)] != cls[self.plus(b)] || cls[self.star(a)] != cls[self.star(b)]
                {
                    return false;
                }
                for c in 0..self.n {
                    if cls[self.mul(a, c)] != cls[self.mul(b, c)]
                        || cls[self.mul(c, a)] != cls[self.mul(c, b)]
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_projection_separating(&self, part: &Partition) -> bool {
        let ps = self.projections();
        ps.iter().all(|&p| {
            ps.iter()
                .all(|&q| p == q || part.class_of[p] != part.class_of[q])
        })
    }

    /// Quotient by a (2,1,1)-congruence; blocks are indexed by their least
    /// elements in ascending order.
    pub fn quotient(&self, part: &Partition) -> Result<BiUnarySemigroup> {
        if !self.is_221_congruence(part) {
            return Err(Error::Contract(
                "quotient requires a (2,1,1)-congruence".into(),
            ));
        }
        let k = part.blocks.len();
        let rep = |cls: usize| part.blocks[cls][0];
        let mut mul = vec![0; k * k];
        let mut plus = vec![0; k];
        let mut star = vec![0; k];
        for i in 0..k {
            plus[i] = part.class_of[self.plus(rep(i))];
            star[i] = part.class_of[self.star(rep(i))];
            for j in 0..k {
                mul[i * k + j] = part.class_of[self.mul(rep(i), rep(j))];
            }
        }
        BiUnarySemigroup::new(k, mul, plus, star)
    }

    /// `μ` is the identity relation.
    pub fn is_fundamental(&self) -> Result<bool> {
        Ok(self.mu()?.is_identity())
    }

    /// `E(S)`: the multiplicative closure of `P(S)`, returned as a semigroup
    /// on the closure carrier plus that carrier (ascending element indices).
    pub fn projection_generated_sub(&self) -> Result<(BiUnarySemigroup, Vec<usize>)> {
        self.require_drc_restriction("E(S)")?;
        let mut carrier = self.projections();
        loop {
            let mut grew = false;
            let snapshot = carrier.clone();
            for &a in &snapshot {
                for &b in &snapshot {
                    let c = self.mul(a, b);
                    if carrier.binary_search(&c).is_err() {
                        carrier.push(c);
                        carrier.sort_unstable();
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        // closed under the unary operations automatically; keep it checked
        for &a in &carrier {
            if carrier.binary_search(&self.plus(a)).is_err()
                || carrier.binary_search(&self.star(a)).is_err()
            {
                return Err(Error::Contract(
                    "projection-generated subsemigroup is not closed under the unary operations"
                        .into(),
                ));
            }
        }
        let pos = |x: usize| carrier.binary_search(&x).unwrap();
        let k = carrier.len();
        let mut mul = vec![0; k * k];
        let mut plus = vec![0; k];
        let mut star = vec![0; k];
        for (i, &a) in carrier.iter().enumerate() {
            plus[i] = pos(self.plus(a));
            star[i] = pos(self.star(a));
            for (j, &b) in carrier.iter().enumerate() {
                mul[i * k + j] = pos(self.mul(a, b));
            }
        }
        Ok((BiUnarySemigroup::new(k, mul, plus, star)?, carrier))
    }

    pub fn is_projection_generated(&self) -> Result<bool> {
        Ok(self.projection_generated_sub()?.0.len() == self.n)
    }
}

/// Special-class flags for a DRC-restriction semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialFlags {
    /// `(ef)⁺ = ef = fe = (fe)*` for all projections.
    pub restriction: bool,
    /// `(ef)⁺ = efe = (fe)*` for all projections.
    pub p_restriction: bool,
    /// Every `x` has a (then unique) `x°` with `x⁺ = xx°`, `x* = x°x`,
    /// `x* = x°⁺`, `x⁺ = x°*`.
    pub generalized_regular_circ: bool,
    /// The `°` table when `generalized_regular_circ` holds.
    pub circ: Option<Vec<usize>>,
}

/// Detects the restriction / P-restriction / generalized regular `°` classes.
pub fn classify_special(s: &BiUnarySemigroup) -> Result<SpecialFlags> {
    if !s.is_drc_restriction() {
        return Err(Error::Precondition(
            "special-class flags are defined for DRC-restriction semigroups".into(),
        ));
    }
    let ps = s.projections();
    let mut restriction = true;
    let mut p_restriction = true;
    for &e in &ps {
        for &f in &ps {
            let ef = s.mul(e, f);
            let fe = s.mul(f, e);
            if !(s.plus(ef) == ef && ef == fe && fe == s.star(fe)) {
                restriction = false;
            }
            if !(s.plus(ef) == s.mul(s.mul(e, f), e) && s.mul(s.mul(e, f), e) == s.star(fe)) {
                p_restriction = false;
            }
        }
    }
    let mut circ = Vec::with_capacity(s.len());
    let mut total = true;
    for x in 0..s.len() {
        let mut found = None;
        for y in 0..s.len() {
            if s.mul(x, y) == s.plus(x)
                && s.mul(y, x) == s.star(x)
                && s.plus(y) == s.star(x)
                && s.star(y) == s.plus(x)
            {
                found = Some(y);
                break; // unique when it exists
            }
        }
        match found {
            Some(y) => circ.push(y),
            None => {
                total = false;
                break;
            }
        }
    }
    Ok(SpecialFlags {
        restriction,
        p_restriction,
        generalized_regular_circ: total,
        circ: total.then_some(circ),
    })
}

const DEFAULT_SEMIGROUP_LIMIT: usize = 4;
const DEFAULT_CONGRUENCE_LIMIT: usize = 5;

/// All DRC-restriction semigroups on `0..n`, lexicographic in
/// `(mul, plus, star)`; with `dedup`, one least representative per
/// isomorphism class.
pub fn enumerate_drc_restriction_semigroups(
    n: usize,
    dedup: bool,
) -> Result<Vec<BiUnarySemigroup>> {
    enumerate_drc_restriction_semigroups_with_limit(n, dedup, DEFAULT_SEMIGROUP_LIMIT)
}

pub fn enumerate_drc_restriction_semigroups_with_limit(
    n: usize,
    dedup: bool,
    limit: usize,
) -> Result<Vec<BiUnarySemigroup>> {
    if n == 0 || n > limit {
        return Err(Error::ResourceLimit(format!(
            "semigroup enumeration guarded at 1..={limit}, asked for {n}"
        )));
    }
    let mut out = Vec::new();
    for mul in enumerate_associative_tables(n) {
        // x⁺ must be an idempotent left identity for x, dually for x*.
        let mut plus_cands: Vec<Vec<usize>> = Vec::with_capacity(n);
        let mut star_cands: Vec<Vec<usize>> = Vec::with_capacity(n);
        let m = |a: usize, b: usize| mul[a * n + b];
        for x in 0..n {
            plus_cands.push((0..n).filter(|&e| m(e, e) == e && m(e, x) == x).collect());
            star_cands.push((0..n).filter(|&f| m(f, f) == f && m(x, f) == x).collect());
        }
        if plus_cands.iter().any(|c| c.is_empty()) || star_cands.iter().any(|c| c.is_empty()) {
            continue;
        }
        for plus in cartesian(&plus_cands) {
            for star in cartesian(&star_cands) {
                let s = BiUnarySemigroup {
                    n,
                    mul: mul.clone(),
                    plus: plus.clone(),
                    star: star.clone(),
                };
                if s.is_drc() && s.check_ample().map(|o| o.ok).unwrap_or(false) {
                    out.push(s);
                }
            }
        }
    }
    if dedup {
        out.retain(is_canonical_semigroup);
    }
    Ok(out)
}

fn cartesian(cands: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for c in cands {
        let mut next = Vec::with_capacity(out.len() * c.len());
        for partial in &out {
            for &v in c {
                let mut row = partial.clone();
                row.push(v);
                next.push(row);
            }
        }
        out = next;
    }
    out
}

/// All associative `n × n` tables, by cell-wise backtracking with incremental
/// associativity pruning; lexicographic output order.
pub fn enumerate_associative_tables(n: usize) -> Vec<Vec<usize>> {
    const UNSET: usize = usize::MAX;
    let mut table = vec![UNSET; n * n];
    let mut out = Vec::new();
    fill(&mut table, n, 0, &mut out);
    return out;

    fn fill(table: &mut [usize], n: usize, pos: usize, out: &mut Vec<Vec<usize>>) {
        if pos == n * n {
            out.push(table.to_vec());
            return;
        }
        for v in 0..n {
            table[pos] = v;
            if partial_assoc(table, n) {
                fill(table, n, pos + 1, out);
            }
        }
        table[pos] = UNSET;
    }

    fn partial_assoc(t: &[usize], n: usize) -> bool {
        let get = |a: usize, b: usize| -> Option<usize> {
            let v = t[a * n + b];
            (v != UNSET).then_some(v)
        };
        for a in 0..n {
            for b in 0..n {
                let Some(ab) = get(a, b) else { continue };
                for c in 0..n {
                    let (Some(bc), Some(l)) = (get(b, c), get(ab, c)) else {
                        continue;
                    };
                    if let Some(r) = get(a, bc) {
                        if l != r {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

fn is_canonical_semigroup(s: &BiUnarySemigroup) -> bool {
    let n = s.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let key = (s.mul.clone(), s.plus.clone(), s.star.clone());
    loop {
        let r = relabel_semigroup(s, &perm);
        if (r.mul, r.plus, r.star) < key {
            return false;
        }
        if !crate::algebra::next_permutation(&mut perm) {
            return true;
        }
    }
}

/// Relabels the carrier along a bijection (`perm[old] = new`).
pub fn relabel_semigroup(s: &BiUnarySemigroup, perm: &[usize]) -> BiUnarySemigroup {
    let n = s.len();
    let mut inv = vec![0; n];
    for (old, &new) in perm.iter().enumerate() {
        inv[new] = old;
    }
    let mut mul = vec![0; n * n];
    let mut plus = vec![0; n];
    let mut star = vec![0; n];
    for a in 0..n {
        plus[a] = perm[s.plus(inv[a])];
        star[a] = perm[s.star(inv[a])];
        for b in 0..n {
            mul[a * n + b] = perm[s.mul(inv[a], inv[b])];
        }
    }
    BiUnarySemigroup { n, mul, plus, star }
}

/// All partitions of `0..n` compatible with `·`, `⁺`, `*`, guarded at `n ≤ 5`.
pub fn enumerate_221_congruences(s: &BiUnarySemigroup) -> Result<Vec<Partition>> {
    enumerate_221_congruences_with_limit(s, DEFAULT_CONGRUENCE_LIMIT)
}

pub fn enumerate_221_congruences_with_limit(
    s: &BiUnarySemigroup,
    limit: usize,
) -> Result<Vec<Partition>> {
    let n = s.len();
    if n > limit {
        return Err(Error::ResourceLimit(format!(
            "congruence enumeration guarded at n ≤ {limit}, carrier has {n}"
        )));
    }
    let mut out = Vec::new();
    let mut assignment = vec![0usize; n];
    enumerate_partitions(&mut assignment, 1, 1, &mut |assignment| {
        let part = Partition::from_relation(n, |a, b| assignment[a] == assignment[b]);
        if s.is_221_congruence(&part) {
            out.push(part);
        }
    });
    Ok(out)
}

/// Restricted-growth-string walk over set partitions.
fn enumerate_partitions(
    assignment: &mut Vec<usize>,
    pos: usize,
    max_used: usize,
    visit: &mut impl FnMut(&[usize]),
) {
    if pos == assignment.len() {
        visit(assignment);
        return;
    }
    for v in 0..=max_used {
        assignment[pos] = v;
        enumerate_partitions(assignment, pos + 1, max_used.max(v + 1), visit);
    }
}

/// Searches for a (2,1,1)-isomorphism, exploiting that for the semigroups we
/// compare every element is a product of projections: any isomorphism is the
/// unique multiplicative extension of a projection-algebra isomorphism.
pub fn find_iso_221(a: &BiUnarySemigroup, b: &BiUnarySemigroup) -> Option<Vec<usize>> {
    if a.len() != b.len() {
        return None;
    }
    let pa = a.projections();
    let pb = b.projections();
    if pa.len() != pb.len() {
        return None;
    }
    let mut perm: Vec<usize> = (0..pa.len()).collect();
    loop {
        let sigma: Vec<(usize, usize)> = pa
            .iter()
            .enumerate()
            .map(|(i, &p)| (p, pb[perm[i]]))
            .collect();
        if let Some(map) = extend_projection_map(a, b, &sigma) {
            return Some(map);
        }
        if !crate::algebra::next_permutation(&mut perm) {
            return None;
        }
    }
}

fn extend_projection_map(
    a: &BiUnarySemigroup,
    b: &BiUnarySemigroup,
    sigma: &[(usize, usize)],
) -> Option<Vec<usize>> {
    let n = a.len();
    let mut map = vec![usize::MAX; n];
    for &(p, q) in sigma {
        map[p] = q;
    }
    // close under multiplication; inputs are projection-generated
    let mut changed = true;
    while changed {
        changed = false;
        for x in 0..n {
            if map[x] == usize::MAX {
                continue;
            }
            for y in 0..n {
                if map[y] == usize::MAX {
                    continue;
                }
                let xy = a.mul(x, y);
                let img = b.mul(map[x], map[y]);
                if map[xy] == usize::MAX {
                    map[xy] = img;
                    changed = true;
                } else if map[xy] != img {
                    return None;
                }
            }
        }
    }
    if map.contains(&usize::MAX) {
        return None; // not projection-generated: extension underdetermined
    }
    let mut seen = vec![false; n];
    for &v in &map {
        if seen[v] {
            return None;
        }
        seen[v] = true;
    }
    for x in 0..n {
        if map[a.plus(x)] != b.plus(map[x]) || map[a.star(x)] != b.star(map[x]) {
            return None;
        }
        for y in 0..n {
            if map[a.mul(x, y)] != b.mul(map[x], map[y]) {
                return None;
            }
        }
    }
    Some(map)
}
