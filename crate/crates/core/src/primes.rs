//! Minimal primes of `J_G` via the cut point property.
//!
//! For `T ⊆ [n]` let `c(T)` be the number of components of `G` minus `T`.
//! `P_T(G)` is minimal iff `T = ∅` or removing any `i ∈ T` from `T`
//! lowers `c`. Each prime has dimension `n - |T| + c(T)`.

use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::graph::{bit, mask_iter, Graph, Vertex};

/// Subsets are enumerated exhaustively, so keep `n` modest.
pub const MAX_PRIME_VERTICES: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeComponent {
    #[serde(rename = "T")]
    pub t: Vec<Vertex>,
    /// Vertex sets of the components of `G` restricted to the complement of `T`.
    pub components: Vec<Vec<Vertex>>,
    pub dim_contribution: usize,
}

impl PrimeComponent {
    pub fn c(&self) -> usize {
        self.components.len()
    }
}

fn check_cap(g: &Graph) -> Result<(), GraphError> {
    if g.n() > MAX_PRIME_VERTICES {
        return Err(GraphError::CapExceeded { what: "minimal prime enumeration", n: g.n(), cap: MAX_PRIME_VERTICES });
    }
    Ok(())
}

fn count_components(g: &Graph, t: u64) -> usize {
    g.components_within(g.all_mask() & !t).len()
}

fn has_cut_point_property(g: &Graph, t: u64) -> bool {
    let c = count_components(g, t);
    mask_iter(t).all(|i| count_components(g, t & !bit(i)) < c)
}

/// All `T` (including `∅`) with the cut point property, ordered by size and
/// then lexicographically.
pub fn cutsets_with_cutpoint_property(g: &Graph) -> Result<Vec<Vec<Vertex>>, GraphError> {
    check_cap(g)?;
    // Every member of T must be a cut vertex of G[T̄ ∪ {i}]; in particular a
    // vertex whose neighbourhood is a clique never qualifies.
    let candidates: Vec<usize> = (0..g.n()).filter(|&i| !g.is_clique_mask(g.nbr_mask(i))).collect();
    let mut out: Vec<u64> = Vec::new();
    for sub in 0u64..(1u64 << candidates.len()) {
        let t = mask_iter(sub).fold(0u64, |m, idx| m | bit(candidates[idx]));
        if has_cut_point_property(g, t) {
            out.push(t);
        }
    }
    let mut sets: Vec<Vec<Vertex>> = out.into_iter().map(|t| mask_iter(t).map(|i| i + 1).collect()).collect();
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(sets)
}

pub fn minimal_primes(g: &Graph) -> Result<Vec<PrimeComponent>, GraphError> {
    let n = g.n();
    cutsets_with_cutpoint_property(g)?
        .into_iter()
        .map(|t| {
            let tm = t.iter().fold(0u64, |m, &v| m | bit(v - 1));
            let components: Vec<Vec<Vertex>> = g
                .components_within(g.all_mask() & !tm)
                .into_iter()
                .map(|c| mask_iter(c).map(|i| i + 1).collect())
                .collect();
            let dim_contribution = n - t.len() + components.len();
            Ok(PrimeComponent { t, components, dim_contribution })
        })
        .collect()
}

/// `dim S/J_G`, the largest dimension of a minimal prime.
pub fn krull_dimension(g: &Graph) -> Result<usize, GraphError> {
    Ok(minimal_primes(g)?.iter().map(|p| p.dim_contribution).max().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(cutsets_with_cutpoint_property(&k4).unwrap(), vec![Vec::<Vertex>::new()]);
        assert_eq!(krull_dimension(&k4).unwrap(), 5);

        let p3 = Graph::path(3).unwrap();
        assert_eq!(cutsets_with_cutpoint_property(&p3).unwrap(), vec![vec![], vec![2]]);
        assert_eq!(krull_dimension(&p3).unwrap(), 4);

        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(cutsets_with_cutpoint_property(&c4).unwrap(), vec![vec![], vec![1, 3], vec![2, 4]]);
        let dims: Vec<usize> = minimal_primes(&c4).unwrap().iter().map(|p| p.dim_contribution).collect();
        assert_eq!(dims, vec![5, 4, 4]);

        let k2 = Graph::complete(2).unwrap();
        let primes = minimal_primes(&k2).unwrap();
        assert_eq!(primes.len(), 1);
        assert_eq!(primes[0].components, vec![vec![1, 2]]);
    }

    #[test]
    fn json_shape() {
        let p = &minimal_primes(&Graph::path(3).unwrap()).unwrap()[1];
        assert_eq!(serde_json::to_string(p).unwrap(), r#"{"T":[2],"components":[[1],[3]],"dim_contribution":4}"#);
    }

    /// Brute force over every subset, no pruning, recounting components by
    /// a separate union-find.
    fn brute_cutsets(g: &Graph) -> Vec<Vec<Vertex>> {
        let n = g.n();
        let comps = |t: &[Vertex]| -> usize {
            let mut parent: Vec<usize> = (0..=n).collect();
            fn find(p: &mut Vec<usize>, x: usize) -> usize {
                if p[x] != x {
                    let r = find(p, p[x]);
                    p[x] = r;
                }
                p[x]
            }
            for (u, v) in g.edges() {
                if !t.contains(&u) && !t.contains(&v) {
                    let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                    parent[a] = b;
                }
            }
            (1..=n).filter(|v| !t.contains(v)).filter(|&v| find(&mut parent, v) == v).count()
        };
        let mut out = Vec::new();
        for s in 0u32..(1 << n) {
            let t: Vec<Vertex> = (1..=n).filter(|v| s & (1 << (v - 1)) != 0).collect();
            let c = comps(&t);
            let ok = t.iter().all(|&i| {
                let smaller: Vec<Vertex> = t.iter().copied().filter(|&x| x != i).collect();
                comps(&smaller) < c
            });
            if ok {
                out.push(t);
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    #[test]
    fn pruned_enumeration_matches_brute_force() {
        let mut graphs = vec![
            Graph::cycle(5).unwrap().add_whiskers(1, 1).unwrap(),
            Graph::cycle(6).unwrap(),
            Graph::path(6).unwrap(),
            Graph::clique_sum(&Graph::cycle(4).unwrap(), &Graph::complete(3).unwrap(), &[(1, 1), (2, 2)]).unwrap(),
        ];
        let mut g = Graph::cycle(5).unwrap();
        for v in [1, 1, 2, 2, 5] {
            g = g.add_whiskers(v, 1).unwrap();
        }
        graphs.push(g);
        for g in graphs {
            assert_eq!(cutsets_with_cutpoint_property(&g).unwrap(), brute_cutsets(&g), "{g:?}");
        }
    }
}
