//! Rule-based predictions of depth, regularity and extremal Betti numbers of
//! `S/J_G`, dispatched on the recognized family.
//!
//! Every rule appends a short tag to `provenance`, so a report can say which
//! rule a refuted prediction came from.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::family::{recognize_family, CycleClique, FamilyDescriptor};
use crate::graph::{Graph, Vertex};
use crate::invariants::{consecutive_run_check, CycleStructure, DEFAULT_PATH_CAP};

/// An exact value or a closed interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Bound {
    Exact(usize),
    Interval([usize; 2]),
}

impl Bound {
    pub fn lo(&self) -> usize {
        match *self {
            Bound::Exact(v) => v,
            Bound::Interval([lo, _]) => lo,
        }
    }

    pub fn hi(&self) -> usize {
        match *self {
            Bound::Exact(v) => v,
            Bound::Interval([_, hi]) => hi,
        }
    }

    pub fn exact(&self) -> Option<usize> {
        match *self {
            Bound::Exact(v) => Some(v),
            Bound::Interval([lo, hi]) if lo == hi => Some(lo),
            Bound::Interval(_) => None,
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.lo() <= v && v <= self.hi()
    }

    fn range(lo: usize, hi: usize) -> Bound {
        if lo == hi {
            Bound::Exact(lo)
        } else {
            Bound::Interval([lo, hi])
        }
    }

    fn add(self, other: Bound) -> Bound {
        Bound::range(self.lo() + other.lo(), self.hi() + other.hi())
    }
}

impl std::fmt::Display for Bound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Bound::Exact(v) => write!(f, "{v}"),
            Bound::Interval([lo, hi]) => write!(f, "[{lo},{hi}]"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExtremalClaim {
    pub i: usize,
    pub j: usize,
    /// `false` for a member of an either/or candidate set.
    pub certain: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Uniqueness {
    Unique,
    NonUnique,
    Undetermined,
}

impl std::fmt::Display for Uniqueness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Uniqueness::Unique => "unique",
            Uniqueness::NonUnique => "non_unique",
            Uniqueness::Undetermined => "undetermined",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prediction {
    pub depth: Bound,
    pub reg: Bound,
    pub extremal: Vec<ExtremalClaim>,
    pub uniqueness: Uniqueness,
    pub provenance: Vec<String>,
}

impl Prediction {
    /// `pd = 2n - depth`, as a bound.
    pub fn pd(&self, n: usize) -> Bound {
        Bound::range(2 * n - self.depth.hi(), 2 * n - self.depth.lo())
    }

    pub fn certain_positions(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.extremal.iter().filter(|c| c.certain).map(|c| (c.i, c.j))
    }

    pub fn candidate_positions(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.extremal.iter().filter(|c| !c.certain).map(|c| (c.i, c.j))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("prediction serializes")
    }
}

/// `(ℓ(G), n - 1)`.
pub fn induced_path_reg_bounds(g: &Graph) -> Result<(usize, usize), GraphError> {
    let ell = g.longest_induced_path_length(DEFAULT_PATH_CAP)?;
    Ok((ell, g.n().saturating_sub(1)))
}

pub fn predict(g: &Graph) -> Result<Prediction, GraphError> {
    let fam = recognize_family(g);
    predict_with(g, &fam)
}

pub fn predict_depth(g: &Graph, fam: &FamilyDescriptor) -> Result<Bound, GraphError> {
    Ok(predict_with(g, fam)?.depth)
}

pub fn predict_regularity(g: &Graph, fam: &FamilyDescriptor) -> Result<Bound, GraphError> {
    Ok(predict_with(g, fam)?.reg)
}

pub fn predict_extremal_betti(g: &Graph, fam: &FamilyDescriptor) -> Result<(Vec<ExtremalClaim>, Uniqueness), GraphError> {
    let p = predict_with(g, fam)?;
    Ok((p.extremal, p.uniqueness))
}

pub fn predict_with(g: &Graph, fam: &FamilyDescriptor) -> Result<Prediction, GraphError> {
    let raw = match fam {
        FamilyDescriptor::Decomposable { parts } => {
            let preds = parts.iter().map(|p| predict_with(&p.graph, &p.family)).collect::<Result<Vec<_>, _>>()?;
            let sizes: Vec<usize> = parts.iter().map(|p| p.graph.n()).collect();
            return Ok(finish(g, combine_decomposable_sized(g.n(), &preds, &sizes)));
        }
        FamilyDescriptor::Cycle { k } if *k == 3 => block_rule(g, 0, true),
        FamilyDescriptor::Cycle { k } => cycle_rule(*k),
        FamilyDescriptor::BlockGraph { iv, whiskered_clique } => block_rule(g, *iv, *whiskered_clique),
        FamilyDescriptor::GeneralizedBlockGraph { iv } => gbg_rule(g, *iv),
        FamilyDescriptor::CycleCliqueForest { core, attachment, forest } => {
            cycle_clique_forest_rule(g, core, &attachment.iter().copied().collect(), !forest.is_empty())
        }
        FamilyDescriptor::WhiskeredCycleWithClique { core, r, attachment } => {
            whiskered_clique_rule(g, core, r, &attachment.iter().copied().collect())
        }
        FamilyDescriptor::WhiskeredCycle { k, cycle, r, attachment } => {
            if *k == 3 {
                block_rule(g, g.internal_vertex_count(), true)
            } else {
                whiskered_cycle_rule(g, cycle, r, &attachment.iter().copied().collect())
            }
        }
        FamilyDescriptor::GeneralUnicyclic { .. } => unicyclic_rule(g)?,
        FamilyDescriptor::Unrecognized => Prediction {
            depth: Bound::Interval([0, g.n() + 1]),
            reg: Bound::Interval([0, g.n()]),
            extremal: Vec::new(),
            uniqueness: Uniqueness::Undetermined,
            provenance: vec!["depth-upper-bound-connected".into()],
        },
    };
    Ok(finish(g, raw))
}

/// Intersects the regularity with the induced-path bounds and with the lower
/// bound any claimed extremal position forces.
fn finish(g: &Graph, mut p: Prediction) -> Prediction {
    if p.reg.exact().is_some() {
        return p;
    }
    let n = g.n();
    let (ell, hi) = if g.is_connected() && n <= DEFAULT_PATH_CAP {
        induced_path_reg_bounds(g).unwrap_or((0, n.saturating_sub(1)))
    } else {
        (0, p.reg.hi())
    };
    let certain = p.certain_positions().map(|(i, j)| j - i).max();
    let candidate = p.candidate_positions().map(|(i, j)| j - i).min();
    let lo = [Some(p.reg.lo()), Some(ell), certain, candidate].into_iter().flatten().max().unwrap_or(0);
    let hi = p.reg.hi().min(hi.max(lo));
    p.reg = Bound::range(lo, hi.max(lo));
    if !p.provenance.iter().any(|t| t == "reg-induced-path-bounds") {
        p.provenance.push("reg-induced-path-bounds".into());
    }
    p
}

fn tags(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

fn certain(i: usize, j: usize) -> ExtremalClaim {
    ExtremalClaim { i, j, certain: true }
}

fn candidates(p: usize, lo: usize) -> Vec<ExtremalClaim> {
    vec![ExtremalClaim { i: p, j: p + lo, certain: false }, ExtremalClaim { i: p, j: p + lo + 1, certain: false }]
}

fn cycle_rule(k: usize) -> Prediction {
    Prediction {
        depth: Bound::Exact(k),
        reg: Bound::Exact(k - 2),
        extremal: vec![certain(k, 2 * k - 2)],
        uniqueness: Uniqueness::Unique,
        provenance: tags(&["cycle-depth", "cycle-reg-extremal"]),
    }
}

fn block_rule(g: &Graph, iv: usize, whiskered_clique: bool) -> Prediction {
    let n = g.n();
    if n == 1 {
        return Prediction {
            depth: Bound::Exact(2),
            reg: Bound::Exact(0),
            extremal: vec![certain(0, 0)],
            uniqueness: Uniqueness::Unique,
            provenance: tags(&["single-vertex"]),
        };
    }
    let mut p = Prediction {
        depth: Bound::Exact(n + 1),
        reg: Bound::Interval([iv + 1, (n - 1).max(iv + 1)]),
        extremal: vec![certain(n - 1, n + iv)],
        uniqueness: Uniqueness::Undetermined,
        provenance: tags(&["block-graph-depth", "block-graph-extremal"]),
    };
    if whiskered_clique {
        p.reg = Bound::Exact(iv + 1);
        p.uniqueness = Uniqueness::Unique;
        p.provenance.push("whiskered-clique-reg".into());
    }
    p
}

fn gbg_rule(g: &Graph, iv: usize) -> Prediction {
    let n = g.n();
    Prediction {
        depth: Bound::Exact(n),
        reg: Bound::Interval([iv, n - 1]),
        extremal: vec![certain(n, n + iv)],
        uniqueness: Uniqueness::Undetermined,
        provenance: tags(&["generalized-block-depth", "generalized-block-extremal"]),
    }
}

fn is_depth_plus_one(cs: &CycleStructure, a: &BTreeSet<Vertex>) -> bool {
    consecutive_run_check(cs, a, cs.k() - 2)
}

/// Depth and the extremal positions for unicyclic graphs of girth at least 4.
/// Kept separate so the checks that exercise exactly these two statements
/// can call them without going through decomposition.
pub fn unicyclic_rule(g: &Graph) -> Result<Prediction, GraphError> {
    let cs = g.cycle_structure()?;
    let n = g.n();
    let k = cs.k();
    let iv = g.internal_vertex_count();
    let a = cs.attachment_set();
    if k < 4 || n == k {
        return Err(GraphError::NotUnicyclic);
    }
    let plus = is_depth_plus_one(&cs, &a);
    let depth = if plus { n + 1 } else { n };
    let p = 2 * n - depth;
    let (extremal, tag) = if a.len() == k {
        (vec![certain(p, p + iv + 1)], "unicyclic-extremal-full-attachment")
    } else {
        (candidates(p, iv - 1), "unicyclic-extremal-candidates")
    };
    Ok(Prediction {
        depth: Bound::Exact(depth),
        reg: Bound::Interval([0, n - 1]),
        extremal,
        uniqueness: Uniqueness::Undetermined,
        provenance: tags(&["unicyclic-depth-dichotomy", tag]),
    })
}

fn whiskered_cycle_rule(g: &Graph, cycle: &[Vertex], r: &[usize], a: &BTreeSet<Vertex>) -> Prediction {
    let n = g.n();
    let k = cycle.len();
    let cs = g.cycle_structure().expect("whiskered cycle is unicyclic");
    let plus = is_depth_plus_one(&cs, a);
    let p = if plus { n - 1 } else { n };
    let depth = Bound::Exact(2 * n - p);
    let mut tagv = vec!["unicyclic-depth-dichotomy".to_string()];
    let size = a.len();
    let adjacent_pair = size == 2 && {
        let v: Vec<_> = a.iter().copied().collect();
        cs.adjacent_on_cycle(v[0], v[1])
    };
    let unique = |reg: usize, tag: &str, mut tagv: Vec<String>| {
        tagv.push(tag.to_string());
        Prediction { depth, reg: Bound::Exact(reg), extremal: vec![certain(p, p + reg)], uniqueness: Uniqueness::Unique, provenance: tagv }
    };
    if size == k {
        return unique(k + 1, "whiskered-reg-full-attachment", tagv);
    }
    if size == 1 || adjacent_pair {
        return unique(k - 1, "whiskered-reg-adjacent-attachment", tagv);
    }
    tagv.push("whiskered-reg-middle".into());
    let connected = induced_connected(g, a);
    if !connected && size <= k - 2 {
        return unique(k, "whiskered-extremal-disconnected", tagv);
    }
    if size == k - 1 {
        return unique(k, "whiskered-extremal-one-missing", tagv);
    }
    if connected && size == k - 2 && k >= 5 {
        // the run v_1..v_{k-2}; its interior is v_2..v_{k-3}
        let start = (0..k).find(|&i| a.contains(&cycle[i]) && !a.contains(&cycle[(i + k - 1) % k])).expect("run has a start");
        let interior = (1..k - 3).map(|t| r[(start + t) % k]);
        if interior.clone().all(|ri| ri >= 2) {
            tagv.push("whiskered-extremal-run-heavy-interior".into());
            return Prediction {
                depth,
                reg: Bound::Exact(k),
                extremal: vec![certain(p, p + k - 1)],
                uniqueness: Uniqueness::NonUnique,
                provenance: tagv,
            };
        }
        return unique(k, "whiskered-extremal-run-light-interior", tagv);
    }
    if connected && (3..=k.saturating_sub(3)).contains(&size) {
        tagv.push("whiskered-extremal-connected-short".into());
        return Prediction {
            depth,
            reg: Bound::Exact(k),
            extremal: vec![certain(p, p + k - 1)],
            uniqueness: Uniqueness::NonUnique,
            provenance: tagv,
        };
    }
    // not reachable for k >= 4, kept as an honest fallback
    tagv.push("unicyclic-extremal-candidates".into());
    Prediction { depth, reg: Bound::Exact(k), extremal: candidates(p, k - 1), uniqueness: Uniqueness::Undetermined, provenance: tagv }
}

fn induced_connected(g: &Graph, vs: &BTreeSet<Vertex>) -> bool {
    let list: Vec<Vertex> = vs.iter().copied().collect();
    g.induced_subgraph(&list).map(|s| s.graph.is_connected()).unwrap_or(false)
}

fn cycle_clique_forest_rule(g: &Graph, core: &CycleClique, a: &BTreeSet<Vertex>, has_forest: bool) -> Prediction {
    let n = g.n();
    let k = core.k;
    let iv = g.internal_vertex_count();
    if !has_forest {
        return Prediction {
            depth: Bound::Exact(n),
            reg: Bound::Exact(k - 1),
            extremal: vec![certain(n, n + k - 1)],
            uniqueness: Uniqueness::Unique,
            provenance: tags(&["cycle-clique-depth-extremal", "cycle-clique-reg"]),
        };
    }
    let on_e = [core.e.0, core.e.1].iter().filter(|v| a.contains(v)).count();
    let run = consecutive_run_in(&core.cycle, a, k - 2);
    let plus = on_e > 0 && run;
    let depth = if plus { n + 1 } else { n };
    let p = 2 * n - depth;
    let mut provenance = tags(&["cycle-clique-forest-depth"]);
    let extremal = if k == 3 {
        provenance.push("cycle-clique-forest-triangle-extremal".into());
        match on_e {
            0 => vec![certain(n, n + iv)],
            1 => vec![certain(n - 1, n - 1 + iv)],
            _ => vec![certain(n - 1, n + iv)],
        }
    } else if plus && a.len() == k {
        provenance.push("cycle-clique-forest-extremal-full-attachment".into());
        vec![certain(p, p + iv + 1)]
    } else {
        provenance.push("cycle-clique-forest-extremal-candidates".into());
        candidates(p, iv.saturating_sub(1))
    };
    Prediction {
        depth: Bound::Exact(depth),
        reg: Bound::Interval([0, n - 1]),
        extremal,
        uniqueness: Uniqueness::Undetermined,
        provenance,
    }
}

fn consecutive_run_in(cycle: &[Vertex], a: &BTreeSet<Vertex>, run: usize) -> bool {
    let k = cycle.len();
    run == 0 || (run <= k && (0..k).any(|s| (0..run).all(|t| a.contains(&cycle[(s + t) % k]))))
}

fn whiskered_clique_rule(g: &Graph, core: &CycleClique, r: &[usize], a: &BTreeSet<Vertex>) -> Prediction {
    let n = g.n();
    let k = core.k;
    let base = cycle_clique_forest_rule(g, core, a, true);
    let p = 2 * n - base.depth.lo();
    let (ea, eb) = core.e;
    let on_e = [ea, eb].iter().filter(|v| a.contains(v)).count();
    let e_in_a = on_e == 2;
    let mut out = base.clone();
    out.reg = Bound::Interval([k - 1, if e_in_a { k + 1 } else { k }]);
    out.provenance.push(if e_in_a { "whisker-clique-reg-bounds" } else { "whisker-clique-reg-edge-not-covered" }.into());

    let unique = |reg: usize, tag: &str, base: &Prediction| {
        let mut q = base.clone();
        q.reg = Bound::Exact(reg);
        q.extremal = vec![certain(p, p + reg)];
        q.uniqueness = Uniqueness::Unique;
        q.provenance.push(tag.into());
        q
    };
    if k < 4 {
        return out;
    }
    let single: Option<Vertex> = if a.len() == 1 { a.iter().next().copied() } else { None };
    if let Some(v) = single {
        if v == ea || v == eb {
            out.reg = Bound::Exact(k - 1);
            out.provenance.push("whisker-clique-single-edge-vertex".into());
            return out;
        }
        return unique(k, "whisker-clique-single-off-edge", &out);
    }
    let pair: Vec<Vertex> = a.iter().copied().collect();
    let adjacent = |x: Vertex, y: Vertex| g.has_edge(x, y);
    if on_e == 1 && a.len() == 2 && !adjacent(pair[0], pair[1]) {
        return unique(k, "whisker-clique-nonadjacent-pair", &out);
    }
    if !e_in_a && a.len() == k - 1 {
        return unique(k, "whisker-clique-one-missing", &out);
    }
    // A = v_1..v_{k-2} counted from the endpoint of e inside A, away from e
    if on_e == 1 && a.len() == k - 2 {
        let start = if a.contains(&ea) { ea } else { eb };
        let other = if start == ea { eb } else { ea };
        let pos = core.cycle.iter().position(|&c| c == start).expect("on cycle");
        let opos = core.cycle.iter().position(|&c| c == other).expect("on cycle");
        // walk away from the other endpoint of e
        let step = if (pos + 1) % k == opos { k - 1 } else { 1 };
        let run: Vec<usize> = (0..k - 2).map(|t| (pos + t * step) % k).collect();
        if run.iter().all(|&i| a.contains(&core.cycle[i])) {
            let firsts = run[..k - 3].iter().map(|&i| r[i]);
            if firsts.clone().all(|ri| ri >= 2) {
                out.extremal = vec![certain(p, p + k - 1)];
                out.provenance.push("whisker-clique-run-heavy".into());
                return out;
            }
            return unique(k, "whisker-clique-run-light", &out);
        }
    }
    if k >= 5 && on_e == 1 && (2..=k - 3).contains(&a.len()) && induced_connected(g, a) {
        out.extremal = vec![certain(p, p + k - 1)];
        out.provenance.push("whisker-clique-connected-short".into());
    }
    out
}

/// Combines predictions of the pieces of a decomposition (or of the
/// components of a disconnected graph): pd and reg add, the pd-corner claims
/// add componentwise, and uniqueness holds iff it holds for every piece.
/// `parts` pairs each piece's vertex count with its prediction; `n` is the
/// vertex count of the glued graph.
pub fn combine_decomposable(n: usize, parts: &[(usize, Prediction)]) -> Prediction {
    let (sizes, preds): (Vec<usize>, Vec<Prediction>) = parts.iter().cloned().unzip();
    combine_decomposable_sized(n, &preds, &sizes)
}

fn combine_decomposable_sized(n: usize, preds: &[Prediction], sizes: &[usize]) -> Prediction {
    let mut pd = Bound::Exact(0);
    let mut reg = Bound::Exact(0);
    for (p, &ni) in preds.iter().zip(sizes) {
        pd = pd.add(p.pd(ni));
        reg = reg.add(p.reg);
    }
    let depth = Bound::range(2 * n - pd.hi(), 2 * n - pd.lo());
    let mut claims: Vec<ExtremalClaim> = vec![certain(0, 0)];
    for p in preds {
        if p.extremal.is_empty() {
            claims.clear();
            break;
        }
        let mut next = Vec::new();
        for c in &claims {
            for d in &p.extremal {
                next.push(ExtremalClaim { i: c.i + d.i, j: c.j + d.j, certain: c.certain && d.certain });
            }
        }
        next.sort();
        next.dedup();
        claims = next;
    }
    let uniqueness = if preds.iter().any(|p| p.uniqueness == Uniqueness::NonUnique) {
        Uniqueness::NonUnique
    } else if preds.iter().all(|p| p.uniqueness == Uniqueness::Unique) {
        Uniqueness::Unique
    } else {
        Uniqueness::Undetermined
    };
    let mut provenance = vec!["decomposable-product".to_string()];
    for p in preds {
        for t in &p.provenance {
            if !provenance.contains(t) {
                provenance.push(t.clone());
            }
        }
    }
    Prediction { depth, reg, extremal: claims, uniqueness, provenance }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn whiskered(k: usize, r: &[usize]) -> Graph {
        let mut g = Graph::cycle(k).unwrap();
        for (i, &ri) in r.iter().enumerate() {
            g = g.add_whiskers(i + 1, ri).unwrap();
        }
        g
    }

    fn only_certain(p: &Prediction) -> Vec<(usize, usize)> {
        p.certain_positions().collect()
    }

    #[test]
    fn worked_examples() {
        let g1 = whiskered(5, &[1, 1, 1, 1, 1]);
        let p = predict(&g1).unwrap();
        assert_eq!((g1.n(), p.reg, p.uniqueness), (10, Bound::Exact(6), Uniqueness::Unique));
        assert_eq!(only_certain(&p), vec![(9, 15)]);

        let g1 = whiskered(5, &[2, 1, 1, 1, 1]);
        let p = predict(&g1).unwrap();
        assert_eq!((g1.n(), p.reg, p.uniqueness), (11, Bound::Exact(6), Uniqueness::Unique));
        assert_eq!(only_certain(&p), vec![(10, 16)]);

        let g2 = whiskered(5, &[2, 0, 0, 0, 1]);
        let p = predict(&g2).unwrap();
        assert_eq!((g2.n(), p.reg, p.uniqueness), (8, Bound::Exact(4), Uniqueness::Unique));
        assert_eq!(only_certain(&p), vec![(8, 12)]);

        let g3 = whiskered(5, &[2, 0, 1, 0, 1]);
        let p = predict(&g3).unwrap();
        assert_eq!((p.reg, p.uniqueness), (Bound::Exact(5), Uniqueness::Unique));
        assert_eq!(only_certain(&p), vec![(9, 14)]);

        let g4 = whiskered(5, &[2, 1, 0, 0, 1]);
        let p = predict(&g4).unwrap();
        assert_eq!((p.depth, p.reg, p.uniqueness), (Bound::Exact(10), Bound::Exact(5), Uniqueness::NonUnique));
        assert_eq!(only_certain(&p), vec![(8, 12)]);
    }

    #[test]
    fn depth_examples() {
        assert_eq!(predict(&whiskered(4, &[1])).unwrap().depth, Bound::Exact(5));
        assert_eq!(predict(&whiskered(4, &[1, 1])).unwrap().depth, Bound::Exact(7));
        assert_eq!(predict(&Graph::cycle(5).unwrap()).unwrap().depth, Bound::Exact(5));
    }

    #[test]
    fn cycles_and_cliques() {
        for k in 4..8 {
            let p = predict(&Graph::cycle(k).unwrap()).unwrap();
            assert_eq!(p.reg, Bound::Exact(k - 2));
            assert_eq!(only_certain(&p), vec![(k, 2 * k - 2)]);
        }
        for m in 2..6 {
            let p = predict(&Graph::complete(m).unwrap()).unwrap();
            assert_eq!((p.depth, p.reg), (Bound::Exact(m + 1), Bound::Exact(1)));
        }
        let p = predict(&Graph::cycle(3).unwrap()).unwrap();
        assert_eq!(only_certain(&p), vec![(2, 3)]);
    }

    #[test]
    fn induced_path_reg_bound_examples() {
        assert_eq!(induced_path_reg_bounds(&Graph::path(5).unwrap()).unwrap(), (4, 4));
        assert_eq!(induced_path_reg_bounds(&Graph::cycle(5).unwrap()).unwrap(), (3, 4));
        assert_eq!(induced_path_reg_bounds(&Graph::complete(4).unwrap()).unwrap(), (1, 3));
    }

    #[test]
    fn decomposable_combination() {
        let p3 = predict(&Graph::path(3).unwrap()).unwrap();
        assert_eq!((p3.pd(3), p3.reg), (Bound::Exact(2), Bound::Exact(2)));
        assert_eq!(only_certain(&p3), vec![(2, 4)]);

        // C_4 with a pendant path of length 2
        let g = whiskered(4, &[1]).add_whiskers(5, 1).unwrap();
        let p = predict(&g).unwrap();
        assert_eq!(p.reg, Bound::Exact(3 + 1));
        assert_eq!(p.pd(6), Bound::Exact(6));

        let single = predict(&Graph::cycle(6).unwrap()).unwrap();
        assert_eq!(combine_decomposable(6, &[(6, single.clone())]).reg, single.reg);
    }

    #[test]
    fn whiskered_reg_trichotomy_exhaustive() {
        for k in 4..=6 {
            for mask in 1u32..(1 << k) {
                let r: Vec<usize> = (0..k).map(|i| ((mask >> i) & 1) as usize).collect();
                let g = whiskered(k, &r);
                let p = predict(&g).unwrap();
                let reg = p.reg.exact().unwrap();
                assert!((k - 1..=k + 1).contains(&reg));
                assert_eq!(reg == k + 1, mask == (1 << k) - 1);
            }
        }
    }

    fn arb_unicyclic() -> impl Strategy<Value = Graph> {
        (4usize..7, proptest::collection::vec(0usize..7, 0..5)).prop_map(|(k, parents)| {
            // each new vertex hangs off an earlier one
            let mut g = Graph::cycle(k).unwrap();
            for p in parents {
                let v = 1 + p % g.n();
                g = g.add_whiskers(v, 1).unwrap();
            }
            g
        })
    }

    proptest! {
        #[test]
        fn exact_values_sit_inside_bounds(g in arb_unicyclic()) {
            let p = predict(&g).unwrap();
            let (ell, hi) = induced_path_reg_bounds(&g).unwrap();
            prop_assert!(p.reg.lo() >= ell.min(p.reg.lo()));
            prop_assert!(p.reg.lo() <= p.reg.hi());
            prop_assert!(p.reg.hi() <= hi);
            prop_assert!(p.reg.lo() >= ell);
            let n = g.n();
            prop_assert!(p.depth.lo() >= n && p.depth.hi() <= n + 1);
            if p.uniqueness == Uniqueness::Unique {
                let pd = p.pd(n).exact().unwrap();
                let reg = p.reg.exact().unwrap();
                prop_assert_eq!(only_certain(&p), vec![(pd, pd + reg)]);
            }
            for c in &p.extremal {
                prop_assert!(c.i <= 2 * n && c.j >= c.i);
            }
        }

        #[test]
        fn depth_matches_run_check(g in arb_unicyclic()) {
            let cs = g.cycle_structure().unwrap();
            prop_assume!(g.n() > cs.k());
            let a = cs.attachment_set();
            let plus = consecutive_run_check(&cs, &a, cs.k() - 2);
            let p = predict(&g).unwrap();
            prop_assert_eq!(p.depth, Bound::Exact(g.n() + usize::from(plus)));
            prop_assert_eq!(unicyclic_rule(&g).unwrap().depth, p.depth);
        }

        #[test]
        fn combination_is_order_independent(a in 2usize..6, b in 3usize..7, c in 2usize..5) {
            let parts = [
                (a, predict(&Graph::complete(a).unwrap()).unwrap()),
                (b, predict(&Graph::cycle(b).unwrap()).unwrap()),
                (c, predict(&Graph::path(c).unwrap()).unwrap()),
            ];
            let n = a + b + c - 2;
            let forward = combine_decomposable(n, &parts);
            let mut rev = parts.to_vec();
            rev.reverse();
            let backward = combine_decomposable(n, &rev);
            prop_assert_eq!((forward.depth, forward.reg, forward.uniqueness), (backward.depth, backward.reg, backward.uniqueness));
            prop_assert_eq!(&forward.extremal, &backward.extremal);
            let nested = combine_decomposable(n, &[(a + b - 1, combine_decomposable(a + b - 1, &parts[..2])), parts[2].clone()]);
            prop_assert_eq!((nested.depth, nested.reg), (forward.depth, forward.reg));
            prop_assert_eq!(&nested.extremal, &forward.extremal);
        }
    }
}
