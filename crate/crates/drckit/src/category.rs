//! Finite chain projection ordered categories as explicit data.
//!
//! Arrows are indices; composition is a partial table, the order a boolean
//! matrix, and the evaluation map a finite table over object paths (longer
//! evaluations are composed from length-2 pieces). `from_semigroup` and
//! `to_semigroup` realize the two functors between these categories and
//! DRC-restriction semigroups; `round_trip_category` checks both composites
//! on concrete data.

use std::collections::BTreeMap;

use crate::algebra::ProjectionAlgebra;
use crate::error::{Error, Result};
use crate::semigroup::BiUnarySemigroup;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteOrderedCategory {
    arrows: usize,
    comp: BTreeMap<(usize, usize), usize>,
    dom: Vec<usize>,
    cod: Vec<usize>,
    leq: Vec<bool>,
    objects: Vec<usize>,
    obj_times: Vec<usize>,
    obj_star: Vec<usize>,
    eval: BTreeMap<Vec<usize>, usize>,
}

/// One line of an axiom report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomEntry {
    pub id: &'static str,
    pub ok: bool,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub entries: Vec<AxiomEntry>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.ok)
    }

    pub fn first_failure(&self) -> Option<&AxiomEntry> {
        self.entries.iter().find(|e| !e.ok)
    }
}

impl FiniteOrderedCategory {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        arrows: usize,
        comp: BTreeMap<(usize, usize), usize>,
        dom: Vec<usize>,
        cod: Vec<usize>,
        leq_pairs: &[(usize, usize)],
        objects: Vec<usize>,
        obj_times: Vec<usize>,
        obj_star: Vec<usize>,
        eval: BTreeMap<Vec<usize>, usize>,
    ) -> Result<Self> {
        if arrows == 0 {
            return Err(Error::Malformed(
                "a category needs at least one arrow".into(),
            ));
        }
        if dom.len() != arrows || cod.len() != arrows {
            return Err(Error::Malformed("d/r rows must cover every arrow".into()));
        }
        let check_arrow = |x: usize| -> Result<()> {
            if x >= arrows {
                return Err(Error::Malformed(format!("arrow index {x} out of range")));
            }
            Ok(())
        };
        for &x in dom.iter().chain(cod.iter()) {
            check_arrow(x)?;
        }
        for (&(a, b), &c) in &comp {
            check_arrow(a)?;
            check_arrow(b)?;
            check_arrow(c)?;
        }
        let mut leq = vec![false; arrows * arrows];
        for &(a, b) in leq_pairs {
            check_arrow(a)?;
            check_arrow(b)?;
            leq[a * arrows + b] = true;
        }
        let k = objects.len();
        if obj_times.len() != k * k || obj_star.len() != k * k {
            return Err(Error::Malformed(
                "object tables must be square over the objects".into(),
            ));
        }
        let mut sorted = objects.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != k {
            return Err(Error::Malformed("duplicate object".into()));
        }
        for &o in &objects {
            check_arrow(o)?;
        }
        for &v in obj_times.iter().chain(obj_star.iter()) {
            check_arrow(v)?;
            if objects.binary_search(&v).is_err() {
                return Err(Error::Malformed(format!(
                    "object table entry {v} is not an object"
                )));
            }
        }
        for (path, &a) in &eval {
            if path.is_empty() {
                return Err(Error::Malformed("empty path in evaluation table".into()));
            }
            check_arrow(a)?;
            for &p in path {
                if objects.binary_search(&p).is_err() {
                    return Err(Error::Malformed(format!(
                        "evaluation path entry {p} is not an object"
                    )));
                }
            }
        }
        Ok(Self {
            arrows,
            comp,
            dom,
            cod,
            leq,
            objects: sorted,
            obj_times,
            obj_star,
            eval,
        })
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows
    }

    pub fn dom(&self, a: usize) -> usize {
        self.dom[a]
    }

    pub fn cod(&self, a: usize) -> usize {
        self.cod[a]
    }

    pub fn dom_row(&self) -> &[usize] {
        &self.dom
    }

    pub fn cod_row(&self) -> &[usize] {
        &self.cod
    }

    pub fn comp_table(&self) -> &BTreeMap<(usize, usize), usize> {
        &self.comp
    }

    pub fn eval_table(&self) -> &BTreeMap<Vec<usize>, usize> {
        &self.eval
    }

    pub fn objects(&self) -> &[usize] {
        &self.objects
    }

    pub fn obj_times_table(&self) -> &[usize] {
        &self.obj_times
    }

    pub fn obj_star_table(&self) -> &[usize] {
        &self.obj_star
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.arrows + b]
    }

    pub fn leq_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.arrows {
            for b in 0..self.arrows {
                if self.leq(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn compose(&self, a: usize, b: usize) -> Option<usize> {
        self.comp.get(&(a, b)).copied()
    }

    fn object_pos(&self, o: usize) -> Option<usize> {
        self.objects.binary_search(&o).ok()
    }

    /// `p × q` on objects, as an arrow id.
    pub fn obj_times(&self, p: usize, q: usize) -> Option<usize> {
        let (i, j) = (self.object_pos(p)?, self.object_pos(q)?);
        Some(self.obj_times[i * self.objects.len() + j])
    }

    /// `p ⋆ q` on objects, as an arrow id.
    pub fn obj_star(&self, p: usize, q: usize) -> Option<usize> {
        let (i, j) = (self.object_pos(p)?, self.object_pos(q)?);
        Some(self.obj_star[i * self.objects.len() + j])
    }

    /// The object algebra over positions, plus the position → arrow map.
    pub fn object_algebra(&self) -> Result<(ProjectionAlgebra, Vec<usize>)> {
        let k = self.objects.len();
        let to_pos = |v: usize| {
            self.object_pos(v)
                .ok_or_else(|| Error::Malformed("object table entry is not an object".into()))
        };
        let mut times = vec![0; k * k];
        let mut star = vec![0; k * k];
        for i in 0..k * k {
            times[i] = to_pos(self.obj_times[i])?;
            star[i] = to_pos(self.obj_star[i])?;
        }
        Ok((
            ProjectionAlgebra::new(k, times, star)?,
            self.objects.clone(),
        ))
    }

    /// The unique `u ≤ a` with `d(u) = p`, when it exists and is unique.
    pub fn left_restriction(&self, p: usize, a: usize) -> Option<usize> {
        let mut found = None;
        for u in 0..self.arrows {
            if self.leq(u, a) && self.dom[u] == p {
                if found.is_some() {
                    return None;
                }
                found = Some(u);
            }
        }
        found
    }

    /// The unique `v ≤ a` with `r(v) = q`, when it exists and is unique.
    pub fn right_restriction(&self, a: usize, q: usize) -> Option<usize> {
        let mut found = None;
        for v in 0..self.arrows {
            if self.leq(v, a) && self.cod[v] == q {
                if found.is_some() {
                    return None;
                }
                found = Some(v);
            }
        }
        found
    }

    /// Evaluates a path of objects, composing stored length-2 values when the
    /// path itself is not materialized.
    pub fn eval_extend(&self, path: &[usize]) -> Result<usize> {
        if let Some(&a) = self.eval.get(path) {
            return Ok(a);
        }
        if path.len() == 1 {
            return Ok(path[0]);
        }
        let mut acc: Option<usize> = None;
        for w in path.windows(2) {
            let piece = *self.eval.get(w).ok_or_else(|| {
                Error::Malformed(format!("evaluation of ({}, {}) is not stored", w[0], w[1]))
            })?;
            acc = Some(match acc {
                None => piece,
                Some(a) => self.compose(a, piece).ok_or_else(|| {
                    Error::UndefinedComposition(format!(
                        "while evaluating a path, {a} ∘ {piece} is undefined"
                    ))
                })?,
            });
        }
        Ok(acc.unwrap())
    }

    /// `Θ_a` on object positions: `x ↦ r(_{x⋆d(a)}↿a)`.
    fn theta_obj(&self, alg: &ProjectionAlgebra, a: usize) -> Option<Vec<usize>> {
        let d = self.object_pos(self.dom[a])?;
        (0..alg.len())
            .map(|x| {
                let t = alg.star(x, d);
                let u = self.left_restriction(self.objects[t], a)?;
                self.object_pos(self.cod[u])
            })
            .collect()
    }

    /// `Δ_a` on object positions: `x ↦ d(a↾_{r(a)×x})`.
    fn delta_obj(&self, alg: &ProjectionAlgebra, a: usize) -> Option<Vec<usize>> {
        let r = self.object_pos(self.cod[a])?;
        (0..alg.len())
            .map(|x| {
                let t = alg.times(r, x);
                let v = self.right_restriction(a, self.objects[t])?;
                self.object_pos(self.dom[v])
            })
            .collect()
    }

    /// `Θ_a` over object positions (see [`FiniteOrderedCategory::object_algebra`]).
    pub fn theta_on_objects(&self, a: usize) -> Result<Vec<usize>> {
        let (alg, _) = self.object_algebra()?;
        self.theta_obj(&alg, a)
            .ok_or_else(|| Error::Contract("a restriction needed by Θ is missing".into()))
    }

    /// `Δ_a` over object positions.
    pub fn delta_on_objects(&self, a: usize) -> Result<Vec<usize>> {
        let (alg, _) = self.object_algebra()?;
        self.delta_obj(&alg, a)
            .ok_or_else(|| Error::Contract("a restriction needed by Δ is missing".into()))
    }

    /// All `b`-linked pairs `(e, f)` as object positions: `f = eΘ_bθ_f` and
    /// `e = fΔ_bδ_e`.
    pub fn linked_pairs(&self, b: usize) -> Result<Vec<(usize, usize)>> {
        let (alg, _) = self.object_algebra()?;
        let theta = self
            .theta_obj(&alg, b)
            .ok_or_else(|| Error::Contract("restriction missing".into()))?;
        let delta = self
            .delta_obj(&alg, b)
            .ok_or_else(|| Error::Contract("restriction missing".into()))?;
        let mut out = Vec::new();
        for e in 0..alg.len() {
            for f in 0..alg.len() {
                if alg.star(theta[e], f) == f && alg.times(e, delta[f]) == e {
                    out.push((e, f));
                }
            }
        }
        Ok(out)
    }

    /// `λ(e,b,f)` and `ρ(e,b,f)` for a `b`-linked pair of object positions.
    pub fn lambda_rho(&self, e: usize, b: usize, f: usize) -> Result<(usize, usize)> {
        let (alg, _) = self.object_algebra()?;
        let theta = self
            .theta_obj(&alg, b)
            .ok_or_else(|| Error::Contract("restriction missing".into()))?;
        let delta = self
            .delta_obj(&alg, b)
            .ok_or_else(|| Error::Contract("restriction missing".into()))?;
        let dpos = self
            .object_pos(self.dom[b])
            .ok_or_else(|| Error::Malformed("d(b) is not an object".into()))?;
        let rpos = self
            .object_pos(self.cod[b])
            .ok_or_else(|| Error::Malformed("r(b) is not an object".into()))?;
        let lam = self
            .linked_composite(e, alg.star(e, dpos), b, theta[e], f)
            .ok_or_else(|| Error::Contract("λ is undefined".into()))?;
        let rho = self
            .linked_composite(e, delta[f], b, alg.times(rpos, f), f)
            .ok_or_else(|| Error::Contract("ρ is undefined".into()))?;
        Ok((lam, rho))
    }

    /// Runs the full axiom battery; entries appear in a fixed order.
    pub fn check_axioms(&self) -> AxiomReport {
        let mut entries = Vec::new();
        let m = self.arrows;
        let mut push = |id: &'static str, witness: Option<String>| {
            entries.push(AxiomEntry {
                id,
                ok: witness.is_none(),
                witness,
            });
        };

        // OBJ: objects are exactly {d(x)} = {r(x)}, with d(p)=r(p)=p
        let obj_witness = (|| {
            for x in 0..m {
                if self.object_pos(self.dom[x]).is_none() {
                    return Some(format!(
                        "d({x}) = {} is not listed as an object",
                        self.dom[x]
                    ));
                }
                if self.object_pos(self.cod[x]).is_none() {
                    return Some(format!(
                        "r({x}) = {} is not listed as an object",
                        self.cod[x]
                    ));
                }
            }
            for &p in &self.objects {
                if self.dom[p] != p || self.cod[p] != p {
                    return Some(format!(
                        "object {p} has d = {}, r = {}",
                        self.dom[p], self.cod[p]
                    ));
                }
            }
            None
        })();
        push("OBJ", obj_witness);

        // C1: x∘y defined iff r(x)=d(y); endpoints of composites
        let c1 = (|| {
            for x in 0..m {
                for y in 0..m {
                    let defined = self.comp.contains_key(&(x, y));
                    let should = self.cod[x] == self.dom[y];
                    if defined != should {
                        return Some(format!(
                            "composition of ({x}, {y}) {} defined",
                            if defined { "should not be" } else { "is not" }
                        ));
                    }
                    if let Some(z) = self.compose(x, y) {
                        if self.dom[z] != self.dom[x] || self.cod[z] != self.cod[y] {
                            return Some(format!("endpoints of {x} ∘ {y} are wrong"));
                        }
                    }
                }
            }
            None
        })();
        push("C1", c1);

        // C2: associativity where defined
        let c2 = (|| {
            for x in 0..m {
                for y in 0..m {
                    let Some(xy) = self.compose(x, y) else {
                        continue;
                    };
                    for z in 0..m {
                        let Some(yz) = self.compose(y, z) else {
                            continue;
                        };
                        if self.compose(xy, z) != self.compose(x, yz) {
                            return Some(format!("({x} ∘ {y}) ∘ {z} ≠ {x} ∘ ({y} ∘ {z})"));
                        }
                    }
                }
            }
            None
        })();
        push("C2", c2);

        // C3: d(x) ∘ x = x = x ∘ r(x)
        let c3 = (|| {
            for x in 0..m {
                if self.compose(self.dom[x], x) != Some(x)
                    || self.compose(x, self.cod[x]) != Some(x)
                {
                    return Some(format!("identity law fails at {x}"));
                }
            }
            None
        })();
        push("C3", c3);

        // ORD: ≤ is a partial order
        let ord = (|| {
            for a in 0..m {
                if !self.leq(a, a) {
                    return Some(format!("≤ is not reflexive at {a}"));
                }
                for b in 0..m {
                    if a != b && self.leq(a, b) && self.leq(b, a) {
                        return Some(format!("≤ is not antisymmetric at ({a}, {b})"));
                    }
                    for c in 0..m {
                        if self.leq(a, b) && self.leq(b, c) && !self.leq(a, c) {
                            return Some(format!("≤ is not transitive at ({a}, {b}, {c})"));
                        }
                    }
                }
            }
            None
        })();
        push("ORD", ord);

        // O1
        let o1 = (|| {
            for a in 0..m {
                for b in 0..m {
                    if self.leq(a, b)
                        && (!self.leq(self.dom[a], self.dom[b])
                            || !self.leq(self.cod[a], self.cod[b]))
                    {
                        return Some(format!("endpoints of {a} ≤ {b} are not ordered"));
                    }
                }
            }
            None
        })();
        push("O1", o1);

        // O2
        let o2 = (|| {
            for a in 0..m {
                for b in 0..m {
                    if !self.leq(a, b) {
                        continue;
                    }
                    for c in 0..m {
                        for d in 0..m {
                            if !self.leq(c, d) {
                                continue;
                            }
                            if self.cod[a] != self.dom[c] || self.cod[b] != self.dom[d] {
                                continue;
                            }
                            let (Some(ac), Some(bd)) = (self.compose(a, c), self.compose(b, d))
                            else {
                                return Some(format!("({a},{c}) or ({b},{d}) not composable"));
                            };
                            if !self.leq(ac, bd) {
                                return Some(format!("{a}∘{c} ≰ {b}∘{d}"));
                            }
                        }
                    }
                }
            }
            None
        })();
        push("O2", o2);

        // O3 / O4: existence and uniqueness of restrictions
        let o3 = (|| {
            for a in 0..m {
                for &p in &self.objects {
                    if !self.leq(p, self.dom[a]) {
                        continue;
                    }
                    let count = (0..m)
                        .filter(|&u| self.leq(u, a) && self.dom[u] == p)
                        .count();
                    if count != 1 {
                        return Some(format!(
                            "{count} arrows below {a} with domain {p} (need exactly 1)"
                        ));
                    }
                }
            }
            None
        })();
        push("O3", o3);
        let o4 = (|| {
            for a in 0..m {
                for &q in &self.objects {
                    if !self.leq(q, self.cod[a]) {
                        continue;
                    }
                    let count = (0..m)
                        .filter(|&v| self.leq(v, a) && self.cod[v] == q)
                        .count();
                    if count != 1 {
                        return Some(format!(
                            "{count} arrows below {a} with range {q} (need exactly 1)"
                        ));
                    }
                }
            }
            None
        })();
        push("O4", o4);

        let alg_and_pos = self.object_algebra();

        // WPO: on objects, ≤ agrees with the object-algebra order
        let wpo = (|| {
            let (alg, _) = alg_and_pos.as_ref().ok()?;
            for (i, &p) in self.objects.iter().enumerate() {
                for (j, &q) in self.objects.iter().enumerate() {
                    if self.leq(p, q) != alg.leq(i, j) {
                        return Some(format!("≤ and ≤_P disagree at objects ({p}, {q})"));
                    }
                }
            }
            None
        })();
        push("WPO", wpo);

        // PALG: the object algebra is a strong projection algebra
        let palg = match alg_and_pos.as_ref() {
            Err(e) => Some(format!("object algebra is malformed: {e}")),
            Ok((alg, _)) => {
                let c = alg.classify();
                if c.strong {
                    None
                } else {
                    let v = c.first_violation.unwrap();
                    Some(format!("axiom {} fails at {:?}", v.axiom, v.witness))
                }
            }
        };
        push("PALG", palg);

        // G1 (via G1d): ν_a is a projection-algebra isomorphism d(a)↓ → r(a)↓
        let g1 = (|| {
            let (alg, _) = alg_and_pos.as_ref().ok()?;
            for a in 0..m {
                let Some(dpos) = self.object_pos(self.dom[a]) else {
                    return Some(format!("d({a}) is not an object"));
                };
                let Some(rpos) = self.object_pos(self.cod[a]) else {
                    return Some(format!("r({a}) is not an object"));
                };
                let down = alg.downset(dpos);
                let mut image = Vec::new();
                for &x in &down {
                    let Some(u) = self.left_restriction(self.objects[x], a) else {
                        return Some(format!("restriction of {a} at {} missing", self.objects[x]));
                    };
                    let Some(y) = self.object_pos(self.cod[u]) else {
                        return Some(format!("r of restriction of {a} is not an object"));
                    };
                    image.push(y);
                }
                let mut sorted = image.clone();
                sorted.sort_unstable();
                sorted.dedup();
                if sorted != alg.downset(rpos) {
                    return Some(format!("ν_{a} is not onto r({a})↓"));
                }
                let value = |x: usize| image[down.binary_search(&x).unwrap()];
                for &x in &down {
                    for &y in &down {
                        if value(alg.times(x, y)) != alg.times(value(x), value(y))
                            || value(alg.star(x, y)) != alg.star(value(x), value(y))
                        {
                            return Some(format!("ν_{a} is not a homomorphism"));
                        }
                    }
                }
            }
            None
        })();
        push("G1", g1);

        // EVAL: ε is stored on every object and every ℱ-related 2-path
        let eval_dom = (|| {
            let (alg, _) = alg_and_pos.as_ref().ok()?;
            for (i, &p) in self.objects.iter().enumerate() {
                if !self.eval.contains_key(&vec![p]) {
                    return Some(format!("ε({p}) is not stored"));
                }
                for (j, &q) in self.objects.iter().enumerate() {
                    if alg.friendly(i, j) && !self.eval.contains_key(&vec![p, q]) {
                        return Some(format!("ε({p}, {q}) is not stored"));
                    }
                }
            }
            for path in self.eval.keys() {
                for w in path.windows(2) {
                    let (Some(i), Some(j)) = (self.object_pos(w[0]), self.object_pos(w[1])) else {
                        return Some("stored path over non-objects".into());
                    };
                    if !alg.friendly(i, j) {
                        return Some(format!("stored path has non-ℱ step ({}, {})", w[0], w[1]));
                    }
                }
            }
            None
        })();
        push("EVAL", eval_dom);

        // E1
        let e1 = (|| {
            for &p in &self.objects {
                if self.eval.get(&vec![p]) != Some(&p) {
                    return Some(format!("ε({p}) ≠ {p}"));
                }
                if let Some(&v) = self.eval.get(&vec![p, p]) {
                    if v != p {
                        return Some(format!("ε({p}, {p}) ≠ {p}"));
                    }
                }
            }
            None
        })();
        push("E1", e1);

        // E2
        let e2 = (|| {
            for (path, &a) in &self.eval {
                if self.dom[a] != path[0] || self.cod[a] != *path.last().unwrap() {
                    return Some(format!("endpoints of ε{path:?} are wrong"));
                }
            }
            None
        })();
        push("E2", e2);

        // E3: stored values agree with composites of length-2 pieces
        let e3 = (|| {
            for (path, &a) in &self.eval {
                if path.len() < 3 {
                    continue;
                }
                match self.eval_compose_pieces(path) {
                    Ok(v) if v == a => {}
                    Ok(v) => return Some(format!("ε{path:?} = {a} but the pieces compose to {v}")),
                    Err(e) => return Some(format!("ε{path:?}: {e}")),
                }
            }
            None
        })();
        push("E3", e3);

        // E4, checked in the equivalent restriction form: for stored paths
        // and t ≤ d(𝔭), ε(_t↿𝔭) = _t↿ε(𝔭); dually on the right.
        let e4 = (|| {
            let (alg, _) = alg_and_pos.as_ref().ok()?;
            for (path, &a) in &self.eval {
                let ppos: Option<Vec<usize>> = path.iter().map(|&p| self.object_pos(p)).collect();
                let ppos = ppos?;
                for t in 0..alg.len() {
                    if alg.leq(t, ppos[0]) {
                        let mut restricted = vec![t];
                        for &pi in &ppos[1..] {
                            restricted.push(alg.star(*restricted.last().unwrap(), pi));
                        }
                        let key: Vec<usize> = restricted.iter().map(|&x| self.objects[x]).collect();
                        let lhs = self.eval_extend(&key).ok()?;
                        let rhs = self.left_restriction(self.objects[t], a)?;
                        if lhs != rhs {
                            return Some(format!(
                                "ε of the left restriction of {path:?} at {} differs",
                                self.objects[t]
                            ));
                        }
                    }
                    let rlast = *ppos.last().unwrap();
                    if alg.leq(t, rlast) {
                        let mut restricted = vec![t];
                        for &pi in ppos[..ppos.len() - 1].iter().rev() {
                            restricted.push(alg.times(pi, *restricted.last().unwrap()));
                        }
                        restricted.reverse();
                        let key: Vec<usize> = restricted.iter().map(|&x| self.objects[x]).collect();
                        let lhs = self.eval_extend(&key).ok()?;
                        let rhs = self.right_restriction(a, self.objects[t])?;
                        if lhs != rhs {
                            return Some(format!(
                                "ε of the right restriction of {path:?} at {} differs",
                                self.objects[t]
                            ));
                        }
                    }
                }
            }
            None
        })();
        push("E4", e4);

        // G2: λ = ρ on all linked pairs
        let g2 = (|| {
            let (alg, _) = alg_and_pos.as_ref().ok()?;
            for b in 0..m {
                let theta = self.theta_obj(alg, b)?;
                let delta = self.delta_obj(alg, b)?;
                for e in 0..alg.len() {
                    for f in 0..alg.len() {
                        if alg.star(theta[e], f) != f || alg.times(e, delta[f]) != e {
                            continue; // not a b-linked pair
                        }
                        let dpos = self.object_pos(self.dom[b])?;
                        let rpos = self.object_pos(self.cod[b])?;
                        let e1 = alg.star(e, dpos);
                        let f1 = theta[e];
                        let e2 = delta[f];
                        let f2 = alg.times(rpos, f);
                        let lam = self.linked_composite(e, e1, b, f1, f);
                        let rho = self.linked_composite(e, e2, b, f2, f);
                        match (lam, rho) {
                            (Some(l), Some(r)) if l == r => {}
                            (l, r) => {
                                return Some(format!(
                                    "λ/ρ mismatch at arrow {b}, pair ({}, {}): {:?} vs {:?}",
                                    self.objects[e], self.objects[f], l, r
                                ))
                            }
                        }
                    }
                }
            }
            None
        })();
        push("G2", g2);

        AxiomReport { entries }
    }

    fn eval_compose_pieces(&self, path: &[usize]) -> Result<usize> {
        let mut acc: Option<usize> = None;
        for w in path.windows(2) {
            let piece = *self
                .eval
                .get(w)
                .ok_or_else(|| Error::Malformed(format!("missing 2-path ({}, {})", w[0], w[1])))?;
            acc = Some(match acc {
                None => piece,
                Some(a) => self
                    .compose(a, piece)
                    .ok_or_else(|| Error::UndefinedComposition("piece mismatch".into()))?,
            });
        }
        acc.ok_or_else(|| Error::Malformed("path too short".into()))
    }

    /// `ε(e, e') ∘ (_{e'}↿b) ∘ ε(f', f)` with positions as inputs.
    fn linked_composite(
        &self,
        e: usize,
        e_mid: usize,
        b: usize,
        f_mid: usize,
        f: usize,
    ) -> Option<usize> {
        let left = self
            .eval_extend(&[self.objects[e], self.objects[e_mid]])
            .ok()?;
        let mid = self.left_restriction(self.objects[e_mid], b)?;
        let right = self
            .eval_extend(&[self.objects[f_mid], self.objects[f]])
            .ok()?;
        self.compose(self.compose(left, mid)?, right)
    }
}

pub const DEFAULT_EVAL_LEN: usize = 6;

/// The chain projection ordered category of a DRC-restriction semigroup:
/// arrows are elements, `x ∘ y = xy` exactly when `x* = y⁺`, `d = ⁺`,
/// `r = *`, the order is the natural order, restrictions are `ex` and `xf`,
/// and `ε` sends a projection path to its product.
pub fn from_semigroup(s: &BiUnarySemigroup) -> Result<FiniteOrderedCategory> {
    from_semigroup_with(s, DEFAULT_EVAL_LEN)
}

pub fn from_semigroup_with(
    s: &BiUnarySemigroup,
    max_eval_len: usize,
) -> Result<FiniteOrderedCategory> {
    if !s.is_drc_restriction() {
        return Err(Error::Precondition(
            "only DRC-restriction semigroups give chain projection ordered categories".into(),
        ));
    }
    let n = s.len();
    let mut comp = BTreeMap::new();
    for x in 0..n {
        for y in 0..n {
            if s.star(x) == s.plus(y) {
                comp.insert((x, y), s.mul(x, y));
            }
        }
    }
    let dom: Vec<usize> = (0..n).map(|x| s.plus(x)).collect();
    let cod: Vec<usize> = (0..n).map(|x| s.star(x)).collect();
    let mut leq_pairs = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if s.natural_leq_unchecked(a, b) {
                leq_pairs.push((a, b));
            }
        }
    }
    let objects = s.projections();
    let k = objects.len();
    let mut obj_times = vec![0; k * k];
    let mut obj_star = vec![0; k * k];
    for (i, &e) in objects.iter().enumerate() {
        for (j, &f) in objects.iter().enumerate() {
            obj_times[i * k + j] = s.plus(s.mul(e, f));
            obj_star[i * k + j] = s.star(s.mul(e, f));
        }
    }
    // materialize ε on ℱ-paths of bounded length
    let friendly = |e: usize, f: usize| s.plus(s.mul(e, f)) == e && s.star(s.mul(e, f)) == f;
    let mut eval: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut frontier: Vec<(Vec<usize>, usize)> = objects.iter().map(|&p| (vec![p], p)).collect();
    for _ in 0..max_eval_len {
        for (path, value) in &frontier {
            eval.insert(path.clone(), *value);
        }
        let mut next = Vec::new();
        for (path, value) in &frontier {
            let last = *path.last().unwrap();
            for &q in &objects {
                if friendly(last, q) {
                    let mut longer = path.clone();
                    longer.push(q);
                    next.push((longer, s.mul(*value, q)));
                }
            }
        }
        frontier = next;
    }
    FiniteOrderedCategory::new(
        n, comp, dom, cod, &leq_pairs, objects, obj_times, obj_star, eval,
    )
}

/// The DRC-restriction semigroup on the arrows of a chain projection ordered
/// category: `a • b = a↾_{r(a)×d(b)} ∘ ε(r(a)×d(b), r(a)⋆d(b)) ∘ _{r(a)⋆d(b)}↿b`,
/// with `a⁺ = d(a)` and `a* = r(a)`.
pub fn to_semigroup(c: &FiniteOrderedCategory) -> Result<BiUnarySemigroup> {
    let report = c.check_axioms();
    if let Some(bad) = report.first_failure() {
        return Err(Error::Contract(format!(
            "category fails axiom {}: {}",
            bad.id,
            bad.witness.clone().unwrap_or_default()
        )));
    }
    let m = c.arrow_count();
    let mut mul = vec![0; m * m];
    for a in 0..m {
        for b in 0..m {
            mul[a * m + b] = bullet(c, a, b)?;
        }
    }
    BiUnarySemigroup::new(m, mul, c.dom_row().to_vec(), c.cod_row().to_vec())
}

/// The `•` product of two arrows; callers must have validated `c`.
pub fn bullet(c: &FiniteOrderedCategory, a: usize, b: usize) -> Result<usize> {
    let p = c.cod(a);
    let q = c.dom(b);
    let meet = c
        .obj_times(p, q)
        .ok_or_else(|| Error::Malformed(format!("objects {p}, {q} missing from tables")))?;
    let join = c
        .obj_star(p, q)
        .ok_or_else(|| Error::Malformed(format!("objects {p}, {q} missing from tables")))?;
    let left = c
        .right_restriction(a, meet)
        .ok_or_else(|| Error::Contract(format!("right restriction of {a} at {meet} missing")))?;
    let mid = c.eval_extend(&[meet, join])?;
    let right = c
        .left_restriction(join, b)
        .ok_or_else(|| Error::Contract(format!("left restriction of {b} at {join} missing")))?;
    let first = c
        .compose(left, mid)
        .ok_or_else(|| Error::UndefinedComposition("a↾ ∘ ε".into()))?;
    c.compose(first, right)
        .ok_or_else(|| Error::UndefinedComposition("(a↾ ∘ ε) ∘ ↿b".into()))
}

/// Verifies `C(S(C)) = C` field by field, reporting the first mismatch.
pub fn round_trip_category(c: &FiniteOrderedCategory) -> Result<std::result::Result<(), String>> {
    let s = to_semigroup(c)?;
    let regenerated = from_semigroup_with(&s, 2)?;
    if regenerated.dom_row() != c.dom_row() {
        return Ok(Err("d rows differ".into()));
    }
    if regenerated.cod_row() != c.cod_row() {
        return Ok(Err("r rows differ".into()));
    }
    if regenerated.comp_table() != c.comp_table() {
        return Ok(Err("composition tables differ".into()));
    }
    if regenerated.leq_pairs() != c.leq_pairs() {
        return Ok(Err("orders differ".into()));
    }
    if regenerated.objects() != c.objects() {
        return Ok(Err("object sets differ".into()));
    }
    if regenerated.obj_times_table() != c.obj_times_table()
        || regenerated.obj_star_table() != c.obj_star_table()
    {
        return Ok(Err("object tables differ".into()));
    }
    // ε agreement on every stored path: the product of the objects in S(C)
    for (path, &want) in c.eval_table() {
        let mut acc = path[0];
        for &p in &path[1..] {
            acc = s.mul(acc, p);
        }
        if acc != want {
            return Ok(Err(format!(
                "ε{path:?} = {want} but the product gives {acc}"
            )));
        }
    }
    Ok(Ok(()))
}

/// Structure flags of a valid chain projection ordered category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CpocFlags {
    /// Every arrow has a two-sided inverse.
    pub groupoid: bool,
    /// The object algebra is symmetric and `ε(p,q,p) = p` whenever `p ℱ q`.
    pub symmetric: bool,
    /// The object algebra is commutative.
    pub commutative: bool,
}

pub fn classify_cpoc(c: &FiniteOrderedCategory) -> Result<CpocFlags> {
    let (alg, _) = c.object_algebra()?;
    let m = c.arrow_count();
    let groupoid = (0..m).all(|a| {
        (0..m).any(|b| c.compose(a, b) == Some(c.dom(a)) && c.compose(b, a) == Some(c.cod(a)))
    });
    let cls = alg.classify();
    let mut symmetric = cls.symmetric;
    if symmetric {
        'outer: for i in 0..alg.len() {
            for j in 0..alg.len() {
                if alg.friendly(i, j) {
                    let (p, q) = (c.objects()[i], c.objects()[j]);
                    if c.eval_extend(&[p, q, p]).ok() != Some(p) {
                        symmetric = false;
                        break 'outer;
                    }
                }
            }
        }
    }
    Ok(CpocFlags {
        groupoid,
        symmetric,
        commutative: cls.commutative,
    })
}
