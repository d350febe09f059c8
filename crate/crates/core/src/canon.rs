//! Canonical labelling by colour refinement and individualisation.
//!
//! Every leaf of the search tree gives a relabelling; the canonical form is
//! the one whose upper-triangle adjacency bits are largest. Twins in the
//! target cell are interchangeable, so only one of them is branched on.

use crate::error::GraphError;
use crate::graph::{bit, mask_iter, Graph, Vertex};

/// Largest `n` whose upper triangle fits in the `u128` certificate.
pub const MAX_CANON_VERTICES: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub graph: Graph,
    /// `perm[v - 1]` is the canonical label of vertex `v`.
    pub perm: Vec<Vertex>,
    pub certificate: u128,
}

impl CanonicalForm {
    /// Stable string key: vertex count plus certificate in hex.
    pub fn hash(&self) -> String {
        format!("n{:02}-{:032x}", self.graph.n(), self.certificate)
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, GraphError> {
    let n = g.n();
    if n > MAX_CANON_VERTICES {
        return Err(GraphError::CapExceeded { what: "canonical labelling", n, cap: MAX_CANON_VERTICES });
    }
    let colors = refine(g, vec![0; n]);
    let mut best: Option<(u128, Vec<u32>)> = None;
    search(g, colors, &mut best);
    let (certificate, colors) = best.unwrap_or((0, Vec::new()));
    let perm: Vec<Vertex> = colors.iter().map(|&c| c as usize + 1).collect();
    let graph = g.relabel(&perm)?;
    Ok(CanonicalForm { graph, perm, certificate })
}

pub fn canonical_hash(g: &Graph) -> Result<String, GraphError> {
    Ok(canonical_form(g)?.hash())
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool, GraphError> {
    Ok(a.n() == b.n() && canonical_form(a)?.certificate == canonical_form(b)?.certificate)
}

fn search(g: &Graph, colors: Vec<u32>, best: &mut Option<(u128, Vec<u32>)>) {
    let n = g.n();
    let mut sizes = vec![0usize; n];
    for &c in &colors {
        sizes[c as usize] += 1;
    }
    // smallest non-singleton cell, ties broken by colour
    let target = (0..n).filter(|&c| sizes[c] > 1).min_by_key(|&c| (sizes[c], c));
    let Some(target) = target else {
        let cert = certificate(g, &colors);
        if best.as_ref().is_none_or(|(b, _)| cert > *b) {
            *best = Some((cert, colors));
        }
        return;
    };
    let cell: Vec<usize> = (0..n).filter(|&u| colors[u] as usize == target).collect();
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cell {
        if tried.iter().any(|&u| are_twins(g, u, v)) {
            continue;
        }
        tried.push(v);
        let split: Vec<(u32, u32)> = (0..n).map(|u| (colors[u], u32::from(u != v || colors[u] as usize != target))).collect();
        let next = refine(g, rank(&split));
        search(g, next, best);
    }
}

fn are_twins(g: &Graph, u: usize, w: usize) -> bool {
    g.nbr_mask(u) & !bit(w) == g.nbr_mask(w) & !bit(u)
}

/// Dense ranks of arbitrary ordered keys.
fn rank<K: Ord + Clone>(keys: &[K]) -> Vec<u32> {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter().map(|k| sorted.binary_search(k).expect("key present") as u32).collect()
}

/// Iterated 1-dimensional refinement up to an equitable colouring.
fn refine(g: &Graph, mut colors: Vec<u32>) -> Vec<u32> {
    let n = g.n();
    let mut classes = count_classes(&colors);
    loop {
        let keys: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|u| {
                let mut nb: Vec<u32> = mask_iter(g.nbr_mask(u)).map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[u], nb)
            })
            .collect();
        let next = rank(&keys);
        let next_classes = count_classes(&next);
        colors = next;
        if next_classes == classes {
            return colors;
        }
        classes = next_classes;
    }
}

fn count_classes(colors: &[u32]) -> usize {
    colors.iter().map(|&c| c as usize + 1).max().unwrap_or(0)
}

fn certificate(g: &Graph, pos: &[u32]) -> u128 {
    let n = g.n();
    let mut inv = vec![0usize; n];
    for (u, &p) in pos.iter().enumerate() {
        inv[p as usize] = u;
    }
    let mut cert = 0u128;
    for i in 0..n {
        for j in i + 1..n {
            cert <<= 1;
            if g.nbr_mask(inv[i]) & bit(inv[j]) != 0 {
                cert |= 1;
            }
        }
    }
    cert
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn all_perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in all_perms(n - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, n);
                out.push(q);
            }
        }
        out
    }

    fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
        a.n() == b.n()
            && a.num_edges() == b.num_edges()
            && all_perms(a.n()).into_iter().any(|p| a.relabel(&p).unwrap() == *b)
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut i = 0;
                for u in 1..=n {
                    for v in u + 1..=n {
                        if bits[i] {
                            edges.push((u, v));
                        }
                        i += 1;
                    }
                }
                Graph::from_edges(n, &edges).unwrap()
            })
        })
    }

    #[test]
    fn whiskers_do_not_blow_up() {
        let mut g = Graph::cycle(4).unwrap();
        for _ in 0..12 {
            g = g.add_whiskers(1, 1).unwrap();
        }
        assert_eq!(g.n(), 16);
        let cf = canonical_form(&g).unwrap();
        assert_eq!(cf.graph.num_edges(), 16);
    }

    #[test]
    fn rejects_large_graphs() {
        assert!(canonical_form(&Graph::path(17).unwrap()).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn relabelling_keeps_the_form(g in arb_graph(9), seed in any::<u64>()) {
            let n = g.n();
            let mut perm: Vec<usize> = (1..=n).collect();
            let mut s = seed;
            for i in (1..n).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (s >> 33) as usize % (i + 1));
            }
            let h = g.relabel(&perm).unwrap();
            let (a, b) = (canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
            prop_assert_eq!(a.certificate, b.certificate);
            prop_assert_eq!(&a.graph, &b.graph);
            prop_assert_eq!(g.relabel(&a.perm).unwrap(), a.graph);
        }

        #[test]
        fn certificate_decides_isomorphism(
            (n, a_bits, flips, perm_seed) in (1usize..=6).prop_flat_map(|n| {
                let m = n * (n - 1) / 2;
                (Just(n), proptest::collection::vec(any::<bool>(), m), proptest::collection::vec(0..m.max(1), 0..3), any::<u64>())
            })
        ) {
            // b is a relabelled copy of a with up to two edges toggled, so
            // both isomorphic and non-isomorphic pairs show up often
            let mut b_bits = a_bits.clone();
            for f in flips {
                if f < b_bits.len() {
                    b_bits[f] = !b_bits[f];
                }
            }
            let build = |bits: &[bool]| {
                let mut edges = Vec::new();
                let mut i = 0;
                for u in 1..=n {
                    for v in u + 1..=n {
                        if bits[i] {
                            edges.push((u, v));
                        }
                        i += 1;
                    }
                }
                Graph::from_edges(n, &edges).unwrap()
            };
            let a = build(&a_bits);
            let perms = all_perms(n);
            let b = build(&b_bits).relabel(&perms[(perm_seed % perms.len() as u64) as usize]).unwrap();
            prop_assert_eq!(is_isomorphic(&a, &b).unwrap(), brute_isomorphic(&a, &b));
        }
    }
}
