//! Combinatorial invariants: cliques, internal vertices, girth, blocks,
//! induced paths, the cycle of a unicyclic graph, and decomposition at
//! simplicial cut vertices.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::graph::{bit, mask_iter, Graph, Subgraph, Vertex};

/// Default cap for the exhaustive longest-induced-path search.
pub const DEFAULT_PATH_CAP: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphInvariants {
    pub iv: usize,
    pub girth: Option<usize>,
    pub ell: usize,
    pub is_block_graph: bool,
    pub is_generalized_block_graph: bool,
}

impl GraphInvariants {
    pub fn compute(g: &Graph, path_cap: usize) -> Result<Self, GraphError> {
        Ok(GraphInvariants {
            iv: g.internal_vertex_count(),
            girth: g.girth(),
            ell: g.longest_induced_path_length(path_cap)?,
            is_block_graph: g.is_block_graph(),
            is_generalized_block_graph: g.is_generalized_block_graph(),
        })
    }
}

/// The unique cycle of a unicyclic graph with its attached trees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleStructure {
    /// `v_1, ..., v_k` in cyclic order. `v_1` is the smallest label on the
    /// cycle and `v_2` the smaller of its two cycle neighbours.
    pub cycle: Vec<Vertex>,
    /// Cycle vertex -> neighbours off the cycle (roots of attached trees).
    pub attachments: BTreeMap<Vertex, BTreeSet<Vertex>>,
}

impl CycleStructure {
    pub fn k(&self) -> usize {
        self.cycle.len()
    }

    /// The set `A` of cycle vertices carrying at least one tree.
    pub fn attachment_set(&self) -> BTreeSet<Vertex> {
        self.attachments.iter().filter(|(_, s)| !s.is_empty()).map(|(&v, _)| v).collect()
    }

    /// Position (0-based) of a vertex along the cycle.
    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.cycle.iter().position(|&c| c == v)
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.position(v).is_some()
    }

    /// Whether two cycle vertices are consecutive on the cycle.
    pub fn adjacent_on_cycle(&self, a: Vertex, b: Vertex) -> bool {
        match (self.position(a), self.position(b)) {
            (Some(i), Some(j)) => {
                let k = self.k();
                (i + 1) % k == j || (j + 1) % k == i
            }
            _ => false,
        }
    }
}

/// True iff some window of `run` cyclically consecutive cycle vertices lies
/// entirely in `a`. A window longer than the cycle never fits; `run == 0`
/// always does.
pub fn consecutive_run_check(cycle: &CycleStructure, a: &BTreeSet<Vertex>, run: usize) -> bool {
    let k = cycle.k();
    if run == 0 {
        return true;
    }
    if run > k {
        return false;
    }
    let inside: Vec<bool> = cycle.cycle.iter().map(|v| a.contains(v)).collect();
    // longest cyclic streak, capped at k
    let mut best = 0;
    let mut cur = 0;
    for i in 0..2 * k {
        if inside[i % k] {
            cur += 1;
            best = best.max(cur);
        } else {
            cur = 0;
        }
    }
    best.min(k) >= run
}

/// Blocks (maximal nontrivial 2-connected pieces or bridges) and cut vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<Vec<Vertex>>,
    pub cut_vertices: Vec<Vertex>,
}

/// Result of repeatedly splitting at simplicial cut vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub parts: Vec<Subgraph>,
    /// The vertices the parts were glued along, one per split.
    pub glue: Vec<Vertex>,
}

impl Decomposition {
    /// Rebuilds the edge set of the original graph from the parts.
    pub fn recompose_edges(&self) -> BTreeSet<(Vertex, Vertex)> {
        let mut out = BTreeSet::new();
        for p in &self.parts {
            for (u, v) in p.graph.edges() {
                let (a, b) = (p.labels[u - 1], p.labels[v - 1]);
                out.insert((a.min(b), a.max(b)));
            }
        }
        out
    }
}

fn to_vertices(mask: u64) -> Vec<Vertex> {
    mask_iter(mask).map(|i| i + 1).collect()
}

impl Graph {
    /// Maximal cliques as bit masks (Bron–Kerbosch with pivoting). Isolated
    /// vertices form singleton cliques.
    pub(crate) fn maximal_clique_masks(&self) -> Vec<u64> {
        let mut out = Vec::new();
        self.bron_kerbosch(0, self.all_mask(), 0, &mut out);
        out.sort_unstable();
        out
    }

    fn bron_kerbosch(&self, r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
        if p == 0 && x == 0 {
            out.push(r);
            return;
        }
        let pivot = mask_iter(p | x)
            .max_by_key(|&u| (self.nbr_mask(u) & p).count_ones())
            .expect("p | x is nonempty");
        for v in mask_iter(p & !self.nbr_mask(pivot)) {
            let nb = self.nbr_mask(v);
            self.bron_kerbosch(r | bit(v), p & nb, x & nb, out);
            p &= !bit(v);
            x |= bit(v);
        }
    }

    pub fn maximal_cliques(&self) -> Vec<Vec<Vertex>> {
        self.maximal_clique_masks().into_iter().map(to_vertices).collect()
    }

    /// A vertex is simplicial iff its neighbourhood is a clique, i.e. it lies
    /// in exactly one maximal clique.
    pub fn is_simplicial(&self, v: Vertex) -> bool {
        self.is_clique_mask(self.nbr_mask(v - 1))
    }

    /// Number of internal (non-simplicial) vertices, `iv(G)`.
    pub fn internal_vertex_count(&self) -> usize {
        self.vertices().filter(|&v| !self.is_simplicial(v)).count()
    }

    pub fn internal_vertices(&self) -> Vec<Vertex> {
        self.vertices().filter(|&v| !self.is_simplicial(v)).collect()
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.n();
        let mut best: Option<usize> = None;
        for s in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            let mut queue = std::collections::VecDeque::new();
            dist[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for w in mask_iter(self.nbr_mask(u)) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Connected with exactly as many edges as vertices.
    pub fn is_unicyclic(&self) -> bool {
        self.n() >= 3 && self.is_connected() && self.num_edges() == self.n()
    }

    pub fn cycle_structure(&self) -> Result<CycleStructure, GraphError> {
        if !self.is_unicyclic() {
            return Err(GraphError::NotUnicyclic);
        }
        // strip leaves until only the cycle is left
        let mut core = self.all_mask();
        loop {
            let leaves: u64 = mask_iter(core)
                .filter(|&u| (self.nbr_mask(u) & core).count_ones() <= 1)
                .fold(0, |m, u| m | bit(u));
            if leaves == 0 {
                break;
            }
            core &= !leaves;
        }
        let start = core.trailing_zeros() as usize;
        let mut cycle = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next = mask_iter(self.nbr_mask(cur) & core)
                .find(|&w| w != prev)
                .expect("every core vertex has two core neighbours");
            if next == start {
                break;
            }
            // mask_iter yields the smaller neighbour first, fixing v_2
            cycle.push(next);
            prev = cur;
            cur = next;
        }
        let attachments = cycle
            .iter()
            .map(|&c| (c + 1, to_vertices(self.nbr_mask(c) & !core).into_iter().collect()))
            .collect();
        Ok(CycleStructure { cycle: cycle.into_iter().map(|c| c + 1).collect(), attachments })
    }

    fn blocks_of(&self, comp: u64, blocks: &mut Vec<u64>, cuts: &mut u64) {
        if comp.count_ones() < 2 {
            return;
        }
        for v in mask_iter(comp) {
            let rest = self.components_within(comp & !bit(v));
            if rest.len() > 1 {
                *cuts |= bit(v);
                for piece in rest {
                    self.blocks_of(piece | bit(v), blocks, cuts);
                }
                return;
            }
        }
        blocks.push(comp);
    }

    pub(crate) fn block_masks(&self) -> (Vec<u64>, u64) {
        let mut blocks = Vec::new();
        let mut cuts = 0;
        for comp in self.components_within(self.all_mask()) {
            self.blocks_of(comp, &mut blocks, &mut cuts);
        }
        blocks.sort_unstable();
        blocks.dedup();
        (blocks, cuts)
    }

    pub fn blocks_and_cut_vertices(&self) -> BlockDecomposition {
        let (blocks, cuts) = self.block_masks();
        BlockDecomposition { blocks: blocks.into_iter().map(to_vertices).collect(), cut_vertices: to_vertices(cuts) }
    }

    pub fn is_cut_vertex(&self, v: Vertex) -> bool {
        let before = self.components_within(self.all_mask()).len();
        let after = self.components_within(self.all_mask() & !bit(v - 1)).len();
        after > before
    }

    /// Chordality by greedy simplicial elimination.
    pub fn is_chordal(&self) -> bool {
        let mut left = self.all_mask();
        while left != 0 {
            let simp = mask_iter(left).find(|&u| self.is_clique_mask(self.nbr_mask(u) & left));
            match simp {
                Some(u) => left &= !bit(u),
                None => return false,
            }
        }
        true
    }

    /// Connected, and every block is a complete graph.
    pub fn is_block_graph(&self) -> bool {
        if self.n() == 0 || !self.is_connected() {
            return false;
        }
        let (blocks, _) = self.block_masks();
        blocks.iter().all(|&b| self.is_clique_mask(b))
    }

    /// Connected chordal graph in which any three maximal cliques with a
    /// common vertex have all three pairwise intersections equal.
    pub fn is_generalized_block_graph(&self) -> bool {
        if self.n() == 0 || !self.is_connected() || !self.is_chordal() {
            return false;
        }
        let cl = self.maximal_clique_masks();
        for a in 0..cl.len() {
            for b in a + 1..cl.len() {
                let ab = cl[a] & cl[b];
                if ab == 0 {
                    continue;
                }
                for c in b + 1..cl.len() {
                    if ab & cl[c] != 0 && (ab != cl[a] & cl[c] || ab != cl[b] & cl[c]) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `ℓ(G)`: number of edges of a longest induced path, by exhaustive search.
    pub fn longest_induced_path_length(&self, cap: usize) -> Result<usize, GraphError> {
        if self.n() > cap {
            return Err(GraphError::CapExceeded { what: "longest induced path search", n: self.n(), cap });
        }
        let mut best = 0;
        for s in 0..self.n() {
            self.extend_induced_path(bit(s), s, 0, &mut best);
        }
        Ok(best)
    }

    fn extend_induced_path(&self, path: u64, last: usize, len: usize, best: &mut usize) {
        *best = (*best).max(len);
        for w in mask_iter(self.nbr_mask(last) & !path) {
            if self.nbr_mask(w) & path == bit(last) {
                self.extend_induced_path(path | bit(w), w, len + 1, best);
            }
        }
    }

    /// Splits `G` at cut vertices that are simplicial on both sides until
    /// every part is indecomposable. Parts are listed by smallest vertex.
    pub fn decompose_at_simplicial_cut_vertices(&self) -> Decomposition {
        let mut todo = vec![self.all_mask()];
        let mut done = Vec::new();
        let mut glue = Vec::new();
        while let Some(part) = todo.pop() {
            match self.simplicial_split(part) {
                Some((v, left, right)) => {
                    glue.push(v + 1);
                    todo.push(left);
                    todo.push(right);
                }
                None => done.push(part),
            }
        }
        done.sort_unstable_by_key(|&m| to_vertices(m));
        glue.sort_unstable();
        let parts = done
            .into_iter()
            .map(|m| self.induced_subgraph(&to_vertices(m)).expect("mask vertices are valid"))
            .collect();
        Decomposition { parts, glue }
    }

    fn simplicial_split(&self, part: u64) -> Option<(usize, u64, u64)> {
        for v in mask_iter(part) {
            let comps = self.components_within(part & !bit(v));
            if comps.len() != 2 {
                continue;
            }
            let nb = self.nbr_mask(v);
            if comps.iter().all(|&c| self.is_clique_mask(nb & c)) {
                return Some((v, comps[0] | bit(v), comps[1] | bit(v)));
            }
        }
        None
    }
}
