//! Simple undirected graphs on the vertex set `1..=n`.
//!
//! Vertices are 1-based everywhere in the public API. Internally each vertex
//! owns a `u64` adjacency mask (bit `i` is vertex `i + 1`), which caps graphs
//! at 64 vertices. That is far beyond what the algebra can handle anyway.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// A vertex label in `1..=n`.
pub type Vertex = usize;

pub const MAX_VERTICES: usize = 64;

/// Simple undirected graph. Immutable once built; every constructor returns a
/// fresh value.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
}

#[inline]
pub(crate) fn bit(v0: usize) -> u64 {
    1u64 << v0
}

/// Iterate the set bits of a mask as 0-based indices.
pub(crate) fn mask_iter(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(Graph { adj: vec![0; n] })
    }

    /// Builds a graph from 1-based edge pairs. Loops, out-of-range endpoints
    /// and repeated edges are rejected.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::Loop(u));
            }
            if g.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.insert_edge(u - 1, v - 1);
        }
        Ok(g)
    }

    pub(crate) fn from_masks(adj: Vec<u64>) -> Self {
        debug_assert!(adj.len() <= MAX_VERTICES);
        Graph { adj }
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.insert_edge(u, v);
            }
        }
        Ok(g)
    }

    /// Path on `n` vertices `1 - 2 - ... - n` (length `n - 1`).
    pub fn path(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for u in 1..n {
            g.insert_edge(u - 1, u);
        }
        Ok(g)
    }

    /// The cycle `C_k` with edges `{i, i+1}` and `{1, k}`.
    pub fn cycle(k: usize) -> Result<Self, GraphError> {
        if k < 3 {
            return Err(GraphError::CycleTooShort(k));
        }
        let mut g = Graph::path(k)?;
        g.insert_edge(0, k - 1);
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.n()
    }

    /// All edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.num_edges());
        for u in 0..self.n() {
            for v in mask_iter(self.adj[u] >> (u + 1)) {
                out.push((u + 1, u + v + 2));
            }
        }
        out
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u >= 1 && v >= 1 && u <= self.n() && v <= self.n() && self.adj[u - 1] & bit(v - 1) != 0
    }

    pub fn neighbors(&self, v: Vertex) -> Vec<Vertex> {
        mask_iter(self.adj[v - 1]).map(|i| i + 1).collect()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v == 0 || v > self.n() {
            Err(GraphError::InvalidVertex { v, n: self.n() })
        } else {
            Ok(())
        }
    }

    /// Neighborhood mask of the 0-based vertex `v0`.
    #[inline]
    pub(crate) fn nbr_mask(&self, v0: usize) -> u64 {
        self.adj[v0]
    }

    pub(crate) fn all_mask(&self) -> u64 {
        if self.n() == 64 {
            u64::MAX
        } else {
            bit(self.n()) - 1
        }
    }

    fn insert_edge(&mut self, u0: usize, v0: usize) {
        self.adj[u0] |= bit(v0);
        self.adj[v0] |= bit(u0);
    }

    fn push_vertex(&mut self) -> Result<usize, GraphError> {
        if self.n() == MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n: self.n() + 1, max: MAX_VERTICES });
        }
        self.adj.push(0);
        Ok(self.n() - 1)
    }

    /// `G ∪ W^r(v)`: `r` new pendant vertices `n+1..=n+r`, all adjacent to `v`.
    pub fn add_whiskers(&self, v: Vertex, r: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        let mut g = self.clone();
        for _ in 0..r {
            let u = g.push_vertex()?;
            g.insert_edge(u, v - 1);
        }
        Ok(g)
    }

    /// `G_v`: completes `N(v) ∪ {v}` into a clique.
    pub fn neighborhood_completion(&self, v: Vertex) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        let mut g = self.clone();
        let nb = self.adj[v - 1];
        for u in mask_iter(nb) {
            g.adj[u] |= nb & !bit(u);
        }
        Ok(g)
    }

    /// The induced subgraph on `keep`, relabeled to `1..=keep.len()` in the
    /// order given.
    pub fn induced_subgraph(&self, keep: &[Vertex]) -> Result<Subgraph, GraphError> {
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            self.check_vertex(v)?;
            if pos[v - 1] != usize::MAX {
                return Err(GraphError::DuplicateVertex(v));
            }
            pos[v - 1] = i;
        }
        let mut adj = vec![0u64; keep.len()];
        for (i, &v) in keep.iter().enumerate() {
            for u in mask_iter(self.adj[v - 1]) {
                if pos[u] != usize::MAX {
                    adj[i] |= bit(pos[u]);
                }
            }
        }
        Ok(Subgraph { graph: Graph::from_masks(adj), labels: keep.to_vec() })
    }

    /// `G \ v`, the induced subgraph on the remaining vertices (in increasing
    /// label order).
    pub fn delete_vertex(&self, v: Vertex) -> Result<Subgraph, GraphError> {
        self.check_vertex(v)?;
        let keep: Vec<Vertex> = self.vertices().filter(|&u| u != v).collect();
        self.induced_subgraph(&keep)
    }

    /// Relabels vertices: vertex `v` becomes `perm[v - 1]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Graph, GraphError> {
        if perm.len() != self.n() {
            return Err(GraphError::BadPermutation);
        }
        let mut seen = 0u64;
        for &p in perm {
            self.check_vertex(p)?;
            if seen & bit(p - 1) != 0 {
                return Err(GraphError::BadPermutation);
            }
            seen |= bit(p - 1);
        }
        let mut adj = vec![0u64; self.n()];
        for u in 0..self.n() {
            for w in mask_iter(self.adj[u]) {
                adj[perm[u] - 1] |= bit(perm[w] - 1);
            }
        }
        Ok(Graph::from_masks(adj))
    }

    /// Clique sum `G1 ∪_{K_m} G2`. `identified` pairs a vertex of `g1` with
    /// the vertex of `g2` it is glued to; both sides must be cliques of the
    /// same size. Vertices of `g1` keep their labels, the remaining vertices
    /// of `g2` follow as `n1+1, n1+2, ...` in increasing order.
    pub fn clique_sum(g1: &Graph, g2: &Graph, identified: &[(Vertex, Vertex)]) -> Result<Graph, GraphError> {
        let mut map = vec![0usize; g2.n()];
        let mut s1 = 0u64;
        let mut s2 = 0u64;
        for &(a, b) in identified {
            g1.check_vertex(a)?;
            g2.check_vertex(b)?;
            if s1 & bit(a - 1) != 0 {
                return Err(GraphError::DuplicateVertex(a));
            }
            if s2 & bit(b - 1) != 0 {
                return Err(GraphError::DuplicateVertex(b));
            }
            s1 |= bit(a - 1);
            s2 |= bit(b - 1);
            map[b - 1] = a;
        }
        if !g1.is_clique_mask(s1) || !g2.is_clique_mask(s2) {
            return Err(GraphError::NotAClique);
        }
        let mut g = g1.clone();
        for b in 0..g2.n() {
            if s2 & bit(b) == 0 {
                let u = g.push_vertex()?;
                map[b] = u + 1;
            }
        }
        for (u, v) in g2.edges() {
            let (a, b) = (map[u - 1] - 1, map[v - 1] - 1);
            g.insert_edge(a, b);
        }
        Ok(g)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        Graph::clique_sum(self, other, &[])
    }

    pub(crate) fn is_clique_mask(&self, mask: u64) -> bool {
        mask_iter(mask).all(|u| self.adj[u] & mask == mask & !bit(u))
    }

    pub fn is_clique(&self, vs: &[Vertex]) -> bool {
        let mut mask = 0;
        for &v in vs {
            if v == 0 || v > self.n() {
                return false;
            }
            mask |= bit(v - 1);
        }
        self.is_clique_mask(mask)
    }

    /// Connected components of the subgraph induced on `within`, as masks.
    pub(crate) fn components_within(&self, within: u64) -> Vec<u64> {
        let mut rest = within;
        let mut out = Vec::new();
        while rest != 0 {
            let start = rest & rest.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let mut next = 0;
                for u in mask_iter(frontier) {
                    next |= self.adj[u];
                }
                next &= within & !comp;
                comp |= next;
                frontier = next;
            }
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    /// Connected components as sorted vertex lists.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        self.components_within(self.all_mask())
            .into_iter()
            .map(|m| mask_iter(m).map(|i| i + 1).collect())
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.components_within(self.all_mask()).len() == 1
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

/// An induced subgraph together with the original label of each new vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    /// `labels[i]` is the original label of vertex `i + 1`.
    pub labels: Vec<Vertex>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[Vertex; 2]>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GraphJson { n: self.n(), edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = GraphJson::deserialize(d)?;
        let edges: Vec<(Vertex, Vertex)> = raw.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::from_edges(raw.n, &edges).map_err(serde::de::Error::custom)
    }
}

impl Graph {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Graph, GraphError> {
        serde_json::from_str(s).map_err(|e| GraphError::Json(e.to_string()))
    }

    /// Edge set as a set of sorted pairs, handy for comparisons.
    pub fn edge_set(&self) -> BTreeSet<(Vertex, Vertex)> {
        self.edges().into_iter().collect()
    }
}
