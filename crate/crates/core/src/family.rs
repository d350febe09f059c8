//! Structural recognition of the graph families the predictor has rules for.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::graph::{bit, mask_iter, Graph, Subgraph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Part {
    /// Original labels of the part's vertices, ascending.
    pub labels: Vec<Vertex>,
    #[serde(skip)]
    pub graph: Graph,
    pub family: FamilyDescriptor,
}

/// `C_k` glued to `K_m` along the cycle edge `e`, in the graph's own labels.
/// `cycle[0]` and `cycle[1]` are the endpoints of `e`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleClique {
    pub k: usize,
    pub m: usize,
    pub cycle: Vec<Vertex>,
    pub e: (Vertex, Vertex),
    pub clique: Vec<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilyDescriptor {
    Cycle {
        k: usize,
    },
    /// Every block complete. `whiskered_clique` marks a complete graph with
    /// pendant vertices hung on its vertices.
    BlockGraph {
        iv: usize,
        whiskered_clique: bool,
    },
    GeneralizedBlockGraph {
        iv: usize,
    },
    CycleCliqueForest {
        core: CycleClique,
        /// Cycle vertices carrying a tree.
        attachment: Vec<Vertex>,
        /// Vertex of the core -> its neighbours outside the core.
        forest: BTreeMap<Vertex, Vec<Vertex>>,
    },
    WhiskeredCycle {
        k: usize,
        cycle: Vec<Vertex>,
        /// `r[i]` whiskers on `cycle[i]`.
        r: Vec<usize>,
        attachment: Vec<Vertex>,
    },
    WhiskeredCycleWithClique {
        core: CycleClique,
        r: Vec<usize>,
        attachment: Vec<Vertex>,
    },
    GeneralUnicyclic {
        k: usize,
        cycle: Vec<Vertex>,
        attachment: Vec<Vertex>,
    },
    /// Glued along simplicial vertices, or a disjoint union.
    Decomposable {
        parts: Vec<Part>,
    },
    Unrecognized,
}

impl FamilyDescriptor {
    pub fn tag(&self) -> &'static str {
        match self {
            FamilyDescriptor::Cycle { .. } => "cycle",
            FamilyDescriptor::BlockGraph { .. } => "block_graph",
            FamilyDescriptor::GeneralizedBlockGraph { .. } => "generalized_block_graph",
            FamilyDescriptor::CycleCliqueForest { .. } => "cycle_clique_forest",
            FamilyDescriptor::WhiskeredCycle { .. } => "whiskered_cycle",
            FamilyDescriptor::WhiskeredCycleWithClique { .. } => "whiskered_cycle_with_clique",
            FamilyDescriptor::GeneralUnicyclic { .. } => "general_unicyclic",
            FamilyDescriptor::Decomposable { .. } => "decomposable",
            FamilyDescriptor::Unrecognized => "unrecognized",
        }
    }

    /// Cycle length when the family has a distinguished cycle.
    pub fn cycle_length(&self) -> Option<usize> {
        match self {
            FamilyDescriptor::Cycle { k }
            | FamilyDescriptor::WhiskeredCycle { k, .. }
            | FamilyDescriptor::GeneralUnicyclic { k, .. } => Some(*k),
            FamilyDescriptor::CycleCliqueForest { core, .. } | FamilyDescriptor::WhiskeredCycleWithClique { core, .. } => {
                Some(core.k)
            }
            FamilyDescriptor::Decomposable { parts } => parts.iter().find_map(|p| p.family.cycle_length()),
            _ => None,
        }
    }
}

/// Picks the most specific family. Disconnected graphs and graphs with a
/// simplicial cut vertex come back as [`FamilyDescriptor::Decomposable`]
/// when every piece is recognized.
pub fn recognize_family(g: &Graph) -> FamilyDescriptor {
    if g.n() == 0 {
        return FamilyDescriptor::Unrecognized;
    }
    if !g.is_connected() {
        let parts = g
            .components()
            .into_iter()
            .map(|c| part_of(g.induced_subgraph(&c).expect("component vertices are valid")))
            .collect();
        return FamilyDescriptor::Decomposable { parts };
    }
    if g.is_unicyclic() && g.num_edges() == g.n() && g.vertices().all(|v| g.degree(v) == 2) {
        return FamilyDescriptor::Cycle { k: g.n() };
    }
    let d = g.decompose_at_simplicial_cut_vertices();
    if d.parts.len() > 1 {
        let parts: Vec<Part> = d.parts.into_iter().map(part_of).collect();
        if parts.iter().all(|p| p.family != FamilyDescriptor::Unrecognized) {
            return FamilyDescriptor::Decomposable { parts };
        }
    }
    recognize_indecomposable(g)
}

fn part_of(sub: Subgraph) -> Part {
    let family = recognize_family(&sub.graph);
    Part { labels: sub.labels, graph: sub.graph, family }
}

fn recognize_indecomposable(g: &Graph) -> FamilyDescriptor {
    if g.is_unicyclic() {
        let cs = g.cycle_structure().expect("unicyclic");
        let k = cs.k();
        let attachment: Vec<Vertex> = cs.attachment_set().into_iter().collect();
        let on_cycle: BTreeSet<Vertex> = cs.cycle.iter().copied().collect();
        let whiskered = g.vertices().filter(|v| !on_cycle.contains(v)).all(|v| g.degree(v) == 1);
        if whiskered {
            let r = cs.cycle.iter().map(|c| cs.attachments[c].len()).collect();
            return FamilyDescriptor::WhiskeredCycle { k, cycle: cs.cycle, r, attachment };
        }
        if k == 3 {
            return FamilyDescriptor::BlockGraph { iv: g.internal_vertex_count(), whiskered_clique: false };
        }
        return FamilyDescriptor::GeneralUnicyclic { k, cycle: cs.cycle, attachment };
    }
    if let Some((core, core_mask)) = cycle_clique_core(g) {
        let mut forest: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
        for v in mask_iter(core_mask) {
            let out: Vec<Vertex> = mask_iter(g.nbr_mask(v) & !core_mask).map(|w| w + 1).collect();
            if !out.is_empty() {
                forest.insert(v + 1, out);
            }
        }
        let attachment: Vec<Vertex> = core.cycle.iter().copied().filter(|c| forest.contains_key(c)).collect();
        let pendant_only = forest.iter().all(|(v, out)| core.cycle.contains(v) && out.iter().all(|&w| g.degree(w) == 1));
        if pendant_only && !attachment.is_empty() {
            let r = core.cycle.iter().map(|c| forest.get(c).map_or(0, Vec::len)).collect();
            return FamilyDescriptor::WhiskeredCycleWithClique { core, r, attachment };
        }
        return FamilyDescriptor::CycleCliqueForest { core, attachment, forest };
    }
    if g.is_block_graph() {
        return FamilyDescriptor::BlockGraph { iv: g.internal_vertex_count(), whiskered_clique: is_whiskered_clique(g) };
    }
    if g.is_generalized_block_graph() {
        return FamilyDescriptor::GeneralizedBlockGraph { iv: g.internal_vertex_count() };
    }
    FamilyDescriptor::Unrecognized
}

/// A complete graph (possibly `K_1` or `K_2`) with pendant vertices attached.
pub fn is_whiskered_clique(g: &Graph) -> bool {
    if !g.is_connected() {
        return false;
    }
    let all = g.all_mask();
    let leaves = mask_iter(all).filter(|&u| g.nbr_mask(u).count_ones() == 1).fold(0u64, |m, u| m | bit(u));
    let rest = all & !leaves;
    if rest == 0 {
        // K_1 or K_2
        return g.n() <= 2;
    }
    g.is_clique_mask(rest) && mask_iter(leaves).all(|u| g.nbr_mask(u) & rest != 0)
}

/// Finds `C_k ∪_e K_m` (`m >= 3`) as the 2-core of `g`, with every other
/// vertex in trees hanging off it.
fn cycle_clique_core(g: &Graph) -> Option<(CycleClique, u64)> {
    let mut core = g.all_mask();
    loop {
        let leaves = mask_iter(core)
            .filter(|&u| (g.nbr_mask(u) & core).count_ones() <= 1)
            .fold(0u64, |m, u| m | bit(u));
        if leaves == 0 {
            break;
        }
        core &= !leaves;
    }
    if core == 0 {
        return None;
    }
    let edges_in = |mask: u64| -> usize { mask_iter(mask).map(|u| (g.nbr_mask(u) & mask).count_ones() as usize).sum::<usize>() / 2 };
    let core_edges = edges_in(core);
    let h = g.induced_subgraph(&mask_iter(core).map(|u| u + 1).collect::<Vec<_>>()).ok()?;
    for q_local in h.graph.maximal_clique_masks() {
        if q_local.count_ones() < 3 {
            continue;
        }
        let q = mask_iter(q_local).fold(0u64, |m, i| m | bit(h.labels[i] - 1));
        let rest = core & !q;
        if rest == 0 {
            continue;
        }
        let m = q.count_ones() as usize;
        let k = rest.count_ones() as usize + 2;
        if core_edges != m * (m - 1) / 2 + k - 1 {
            continue;
        }
        for a in mask_iter(q) {
            for b in mask_iter(q & !bit(a)).filter(|&b| b > a) {
                let cyc = rest | bit(a) | bit(b);
                let others = q & !bit(a) & !bit(b);
                if mask_iter(rest).any(|u| g.nbr_mask(u) & others != 0) {
                    continue;
                }
                if !mask_iter(cyc).all(|u| (g.nbr_mask(u) & cyc).count_ones() == 2) || edges_in(cyc) != k {
                    continue;
                }
                if g.components_within(cyc).len() != 1 {
                    continue;
                }
                let mut cycle = vec![a, b];
                while cycle.len() < k {
                    let (prev, cur) = (cycle[cycle.len() - 2], cycle[cycle.len() - 1]);
                    let next = mask_iter(g.nbr_mask(cur) & cyc).find(|&w| w != prev)?;
                    cycle.push(next);
                }
                let cc = CycleClique {
                    k,
                    m,
                    cycle: cycle.into_iter().map(|u| u + 1).collect(),
                    e: (a + 1, b + 1),
                    clique: mask_iter(q).map(|u| u + 1).collect(),
                };
                return Some((cc, core));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn whiskered(k: usize, r: &[usize]) -> Graph {
        let mut g = Graph::cycle(k).unwrap();
        for (i, &ri) in r.iter().enumerate() {
            g = g.add_whiskers(i + 1, ri).unwrap();
        }
        g
    }

    #[test]
    fn recognizes_cycles_and_whiskered_cycles() {
        assert_eq!(recognize_family(&Graph::cycle(6).unwrap()), FamilyDescriptor::Cycle { k: 6 });
        match recognize_family(&whiskered(4, &[1, 2, 0, 0])) {
            FamilyDescriptor::WhiskeredCycle { k, r, attachment, .. } => {
                assert_eq!(k, 4);
                assert_eq!(r, vec![1, 2, 0, 0]);
                assert_eq!(attachment, vec![1, 2]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn recognizes_cycle_clique_forest() {
        // C_5 with K_3 on the edge {1,2}, then a path 3-7-8 hanging off v_3
        let h = Graph::clique_sum(&Graph::cycle(5).unwrap(), &Graph::complete(3).unwrap(), &[(1, 1), (2, 2)]).unwrap();
        assert_eq!(h.n(), 6);
        let g = h.add_whiskers(3, 1).unwrap().add_whiskers(7, 1).unwrap();
        // the pendant path makes 7 a simplicial cut vertex, so test the core first
        match recognize_indecomposable(&g) {
            FamilyDescriptor::CycleCliqueForest { core, attachment, .. } => {
                assert_eq!((core.k, core.m), (5, 3));
                assert_eq!(core.e, (1, 2));
                assert_eq!(attachment, vec![3]);
            }
            other => panic!("{other:?}"),
        }
        match recognize_family(&h) {
            FamilyDescriptor::CycleCliqueForest { core, forest, .. } => {
                assert_eq!(core.clique, vec![1, 2, 6]);
                assert!(forest.is_empty());
            }
            other => panic!("{other:?}"),
        }
        match recognize_family(&h.add_whiskers(4, 2).unwrap()) {
            FamilyDescriptor::WhiskeredCycleWithClique { r, attachment, core } => {
                assert_eq!(core.cycle[..2], [1, 2]);
                assert_eq!(attachment, vec![4]);
                assert_eq!(r.iter().sum::<usize>(), 2);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn decomposable_and_block() {
        match recognize_family(&Graph::path(4).unwrap()) {
            FamilyDescriptor::Decomposable { parts } => assert_eq!(parts.len(), 3),
            other => panic!("{other:?}"),
        }
        let star = Graph::from_edges(4, &[(1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(recognize_family(&star), FamilyDescriptor::BlockGraph { iv: 1, whiskered_clique: true });
        assert_eq!(recognize_family(&Graph::complete(4).unwrap()), FamilyDescriptor::BlockGraph { iv: 0, whiskered_clique: true });
        let two_triangles = Graph::clique_sum(&Graph::cycle(3).unwrap(), &Graph::complete(3).unwrap(), &[(1, 1), (2, 2)]).unwrap();
        assert_eq!(recognize_family(&two_triangles).tag(), "cycle_clique_forest");
        let spider = Graph::from_edges(7, &[(1, 2), (2, 3), (1, 4), (4, 5), (1, 6), (6, 7)]).unwrap();
        assert_eq!(recognize_family(&spider).tag(), "decomposable");
    }
}
