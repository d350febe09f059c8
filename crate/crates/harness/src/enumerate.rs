//! Isomorphism-class enumeration of unicyclic graphs and whiskered cycles.

use std::collections::BTreeMap;

use belab_core::canon::{canonical_form, MAX_CANON_VERTICES};
use belab_core::{Graph, GraphError};

/// A graph together with a recipe that rebuilds it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphCase {
    pub graph: Graph,
    pub recipe: String,
}

impl GraphCase {
    pub fn new(graph: Graph, recipe: impl Into<String>) -> GraphCase {
        GraphCase { graph, recipe: recipe.into() }
    }
}

/// One representative per isomorphism class of connected unicyclic graphs
/// with `n <= max_n` and girth in `girth_min..=girth_max`, ordered by `n`,
/// girth and canonical certificate. Each graph is a cycle grown one leaf at
/// a time; the recipe lists where the leaves went, e.g. `C4+1+5`.
pub fn enumerate_unicyclic(max_n: usize, girth_min: usize, girth_max: usize) -> Result<Vec<GraphCase>, GraphError> {
    if max_n > MAX_CANON_VERTICES {
        return Err(GraphError::TooManyVertices { n: max_n, max: MAX_CANON_VERTICES });
    }
    let mut out = Vec::new();
    for k in girth_min.max(3)..=girth_max.min(max_n) {
        let mut layer: BTreeMap<u128, GraphCase> = BTreeMap::new();
        let c = Graph::cycle(k)?;
        layer.insert(canonical_form(&c)?.certificate, GraphCase::new(c, format!("C{k}")));
        for n in k..=max_n {
            out.extend(layer.values().cloned());
            if n == max_n {
                break;
            }
            let mut next: BTreeMap<u128, GraphCase> = BTreeMap::new();
            for case in layer.values() {
                for v in 1..=n {
                    let g = case.graph.add_whiskers(v, 1)?;
                    let cert = canonical_form(&g)?.certificate;
                    next.entry(cert).or_insert_with(|| GraphCase::new(g, format!("{}+{v}", case.recipe)));
                }
            }
            layer = next;
        }
    }
    out.sort_by_key(|c| (c.graph.n(), c.graph.girth().unwrap_or(0), canonical_form(&c.graph).map(|f| f.certificate).unwrap_or(0)));
    Ok(out)
}

/// Every tree on `1..=max_n` vertices up to isomorphism, grown leaf by leaf.
pub fn enumerate_trees(max_n: usize) -> Result<Vec<GraphCase>, GraphError> {
    let mut out = Vec::new();
    let mut layer: BTreeMap<u128, GraphCase> = BTreeMap::new();
    let k1 = Graph::empty(1)?;
    layer.insert(canonical_form(&k1)?.certificate, GraphCase::new(k1, "K1"));
    for n in 1..=max_n {
        out.extend(layer.values().cloned());
        if n == max_n {
            break;
        }
        let mut next = BTreeMap::new();
        for case in layer.values() {
            for v in 1..=n {
                let g = case.graph.add_whiskers(v, 1)?;
                let cert = canonical_form(&g)?.certificate;
                next.entry(cert).or_insert_with(|| GraphCase::new(g, format!("{}+{v}", case.recipe)));
            }
        }
        layer = next;
    }
    Ok(out)
}

/// Every connected graph on `1..=max_n` vertices up to isomorphism. Each one
/// has a vertex whose removal keeps it connected, so growing the previous
/// layer by a vertex with every nonempty neighbourhood reaches all of them.
pub fn enumerate_connected(max_n: usize) -> Result<Vec<GraphCase>, GraphError> {
    let mut out = Vec::new();
    if max_n == 0 {
        return Ok(out);
    }
    let mut layer: BTreeMap<u128, GraphCase> = BTreeMap::new();
    layer.insert(0, GraphCase::new(Graph::empty(1)?, "connected n=1"));
    for n in 1..=max_n {
        out.extend(layer.values().cloned());
        if n == max_n {
            break;
        }
        let mut next = BTreeMap::new();
        for case in layer.values() {
            let old = case.graph.edges();
            for s in 1u32..(1 << n) {
                let mut edges = old.clone();
                edges.extend((1..=n).filter(|v| s >> (v - 1) & 1 == 1).map(|v| (v, n + 1)));
                let cf = canonical_form(&Graph::from_edges(n + 1, &edges)?)?;
                let id = next.len();
                next.entry(cf.certificate).or_insert_with(|| GraphCase::new(cf.graph, format!("connected n={} #{id}", n + 1)));
            }
        }
        layer = next;
    }
    Ok(out)
}

pub fn whiskered_cycle(k: usize, r: &[usize]) -> Result<Graph, GraphError> {
    let mut g = Graph::cycle(k)?;
    for (i, &c) in r.iter().enumerate() {
        if c > 0 {
            g = g.add_whiskers(i + 1, c)?;
        }
    }
    Ok(g)
}

pub fn whisker_recipe(k: usize, r: &[usize]) -> String {
    let parts: Vec<String> = r.iter().map(|x| x.to_string()).collect();
    format!("C{k} r=({})", parts.join(","))
}

/// Largest image of `r` under rotations and reflections of the cycle.
fn dihedral_max(r: &[usize]) -> Vec<usize> {
    let k = r.len();
    let mut best = r.to_vec();
    for s in 0..k {
        let rot: Vec<usize> = (0..k).map(|i| r[(i + s) % k]).collect();
        let refl: Vec<usize> = (0..k).map(|i| r[(s + k - i) % k]).collect();
        best = best.max(rot).max(refl);
    }
    best
}

/// Whisker vectors `(r_1..r_k)` with `sum r_i = budget`, one per dihedral
/// class, as the lexicographically largest member of the class (so the
/// heaviest vertex is `v_1`).
pub fn whisker_vectors(k: usize, budget: usize) -> Vec<Vec<usize>> {
    fn rec(k: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            if left == 0 && dihedral_max(cur) == *cur {
                out.push(cur.clone());
            }
            return;
        }
        for x in (0..=left).rev() {
            cur.push(x);
            rec(k, left - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k >= 3 {
        rec(k, budget, &mut Vec::new(), &mut out);
    }
    out
}

pub fn enumerate_whiskered_cycles(k: usize, budget: usize) -> Result<Vec<GraphCase>, GraphError> {
    if k < 3 {
        return Err(GraphError::CycleTooShort(k));
    }
    whisker_vectors(k, budget).into_iter().map(|r| Ok(GraphCase::new(whiskered_cycle(k, &r)?, whisker_recipe(k, &r)))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_unicyclic_classes() {
        let all = enumerate_unicyclic(4, 3, 4).unwrap();
        let recipes: Vec<&str> = all.iter().map(|c| c.recipe.as_str()).collect();
        assert_eq!(recipes, vec!["C3", "C3+1", "C4"]);
        assert_eq!(enumerate_unicyclic(3, 3, 16).unwrap().len(), 1);
        let c5 = enumerate_unicyclic(5, 5, 5).unwrap();
        assert_eq!(c5.len(), 1);
        assert_eq!(c5[0].graph, Graph::cycle(5).unwrap());
    }

    #[test]
    fn whisker_classes() {
        assert_eq!(whisker_vectors(4, 1), vec![vec![1, 0, 0, 0]]);
        assert_eq!(whisker_vectors(4, 2), vec![vec![2, 0, 0, 0], vec![1, 1, 0, 0], vec![1, 0, 1, 0]]);
        assert_eq!(whisker_vectors(5, 5).iter().filter(|r| r.iter().all(|&x| x == 1)).count(), 1);
        assert!(enumerate_whiskered_cycles(2, 1).is_err());
    }

    #[test]
    fn trees_and_connected_counts() {
        // unlabelled trees: 1, 1, 1, 2, 3, 6, 11
        let trees = enumerate_trees(7).unwrap();
        let counts: Vec<usize> = (1..=7).map(|n| trees.iter().filter(|c| c.graph.n() == n).count()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11]);
        // connected graphs: 1, 1, 2, 6, 21, 112, 853
        let conn = enumerate_connected(7).unwrap();
        let counts: Vec<usize> = (1..=7).map(|n| conn.iter().filter(|c| c.graph.n() == n).count()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112, 853]);
    }

    /// Every labelled edge set, filtered by connectivity and deduplicated by
    /// brute-force isomorphism rather than certificates.
    fn brute_connected(n: usize) -> Vec<Graph> {
        let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect();
        let perms = permutations(n);
        let mut reps: Vec<Graph> = Vec::new();
        for bits in 0u32..(1 << pairs.len()) {
            let edges: Vec<(usize, usize)> = pairs.iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, &e)| e).collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            if g.is_connected() && !reps.iter().any(|r| r.num_edges() == g.num_edges() && perms.iter().any(|p| g.relabel(p).unwrap() == *r)) {
                reps.push(g);
            }
        }
        reps
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, n);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn connected_classes_match_brute_force() {
        let conn = enumerate_connected(5).unwrap();
        for n in 1..=5 {
            let ours: Vec<&Graph> = conn.iter().filter(|c| c.graph.n() == n).map(|c| &c.graph).collect();
            let brute = brute_connected(n);
            assert_eq!(ours.len(), brute.len());
            for g in brute {
                assert_eq!(ours.iter().filter(|h| belab_core::canon::is_isomorphic(h, &g).unwrap()).count(), 1);
            }
        }
    }

    #[test]
    fn unicyclic_classes_match_brute_force() {
        // brute-force isomorphism classes of all labelled graphs on 3 and 4
        // vertices, keeping the unicyclic ones
        let ours = enumerate_unicyclic(4, 3, 4).unwrap();
        let mut brute = brute_connected(3);
        brute.extend(brute_connected(4));
        brute.retain(|g| g.is_unicyclic());
        assert_eq!(ours.len(), brute.len());
        for g in brute {
            assert_eq!(ours.iter().filter(|c| belab_core::canon::is_isomorphic(&c.graph, &g).unwrap()).count(), 1);
        }
    }

    #[test]
    fn unicyclic_counts() {
        // unicyclic graphs per vertex count: 1, 2, 5, 13, 33, 89
        let all = enumerate_unicyclic(8, 3, 8).unwrap();
        let counts: Vec<usize> = (3..=8).map(|n| all.iter().filter(|c| c.graph.n() == n).count()).collect();
        assert_eq!(counts, vec![1, 2, 5, 13, 33, 89]);
        assert!(all.iter().all(|c| c.graph.is_unicyclic()));
    }
}
