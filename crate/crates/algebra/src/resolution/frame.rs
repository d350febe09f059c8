//! Schreyer frames: a (usually non-minimal) free resolution of `S/I` built
//! level by level from a Gröbner basis.
//!
//! Level 0 is the single generator of `S`. Level 1 is the Gröbner basis.
//! An element of level `L + 1` is born from an element `e_j` of level `L`
//! and a minimal generator `q` of `(lcm(m_k, m_j) / m_j : k < j, same
//! parent)`; its lead term is `q e_j`. Its full vector comes from reducing
//! `q d(e_j)` to zero by the elements of level `L`, whose vectors form a
//! Gröbner basis for the induced (Schreyer) order.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::AlgebraError;
use crate::monomial::Mon;
use crate::poly::{MultiDegree, Poly, PolyRing};

pub const DEFAULT_FRAME_BUDGET: u64 = 20_000_000;

/// `c * m * e_idx` in the previous level's free module.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VecTerm {
    pub c: u32,
    pub m: Mon,
    pub idx: u32,
}

#[derive(Clone, Debug)]
pub struct FrameElem {
    /// Lead monomial relative to the parent basis element.
    pub lead: Mon,
    pub parent: u32,
    /// `lead * total(parent)`; fixes the degree and multidegree.
    pub total: Mon,
    pub degree: u32,
    /// Image under the differential, descending in the Schreyer order.
    pub vector: Vec<VecTerm>,
}

#[derive(Clone, Debug)]
pub struct Frame {
    pub ring: PolyRing,
    pub levels: Vec<Vec<FrameElem>>,
}

type Key = ([u64; 5], u32);

#[derive(PartialEq, Eq)]
struct HeapItem {
    key: Key,
    m: Mon,
    idx: u32,
    c: u32,
    stream: u32,
    pos: u32,
}

impl Ord for HeapItem {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key.cmp(&other.key)
    }
}

impl PartialOrd for HeapItem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

struct Stream {
    c: u32,
    m: Mon,
    source: u32,
}

impl Frame {
    pub fn length(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn size(&self) -> usize {
        self.levels.iter().map(|l| l.len()).sum()
    }

    pub fn multidegree(&self, level: usize, idx: usize) -> MultiDegree {
        self.ring.multidegree(&self.levels[level][idx].total)
    }

    /// Builds the frame of `S / (gb)` for a reduced Gröbner basis.
    pub fn build(ring: &PolyRing, gb: &[Poly], budget: u64) -> Result<Frame, AlgebraError> {
        Frame::build_to(ring, gb, budget, usize::MAX)
    }

    /// Same as `build` but stops after `max_length` levels past `S`.
    pub fn build_to(ring: &PolyRing, gb: &[Poly], budget: u64, max_length: usize) -> Result<Frame, AlgebraError> {
        let level0 = vec![FrameElem { lead: Mon::ONE, parent: 0, total: Mon::ONE, degree: 0, vector: Vec::new() }];
        let mut first: Vec<FrameElem> = gb
            .iter()
            .map(|g| FrameElem {
                lead: g.lm(),
                parent: 0,
                total: g.lm(),
                degree: g.lm().degree(),
                vector: g.terms.iter().map(|t| VecTerm { c: t.c, m: t.m, idx: 0 }).collect(),
            })
            .collect();
        first.sort_by(|a, b| (a.degree, a.lead.sort_key(ring.order)).cmp(&(b.degree, b.lead.sort_key(ring.order))));
        let mut frame = Frame { ring: ring.clone(), levels: vec![level0] };
        if first.is_empty() || max_length == 0 {
            return Ok(frame);
        }
        frame.levels.push(first);
        let mut total = 1 + frame.levels[1].len() as u64;
        while frame.levels.len() <= max_length {
            let next = frame.next_level()?;
            if next.is_empty() {
                break;
            }
            total += next.len() as u64;
            if total > budget {
                return Err(AlgebraError::BudgetExceeded { what: "resolution frame elements", limit: budget });
            }
            frame.levels.push(next);
        }
        Ok(frame)
    }

    fn next_level(&self) -> Result<Vec<FrameElem>, AlgebraError> {
        let order = self.ring.order;
        let cur = self.levels.last().expect("at least one level");
        let mut out: Vec<FrameElem> = Vec::new();
        let mut group_start = 0usize;
        for j in 0..cur.len() {
            if j > 0 && cur[j].parent != cur[j - 1].parent {
                group_start = j;
            }
            let mj = cur[j].lead;
            let mut quots: Vec<Mon> = (group_start..j).map(|k| cur[k].lead.div(&cur[k].lead.gcd(&mj))).collect();
            quots.sort_by_key(|q| (q.degree(), q.sort_key(order)));
            quots.dedup();
            let mut minimal: Vec<Mon> = Vec::new();
            for q in quots {
                if !minimal.iter().any(|p| p.divides(&q)) {
                    minimal.push(q);
                }
            }
            for q in minimal {
                out.push(FrameElem {
                    lead: q,
                    parent: j as u32,
                    total: q.mul(&cur[j].total),
                    degree: q.degree() + cur[j].degree,
                    vector: Vec::new(),
                });
            }
        }
        // vectors: reduce q d(e_j) to zero
        let level = self.levels.len();
        // level-L elements grouped by parent, an index into level L-1
        let mut ranges = vec![(0usize, 0usize); self.levels[level - 2].len()];
        let mut s = 0;
        while s < cur.len() {
            let p = cur[s].parent as usize;
            let mut e = s;
            while e < cur.len() && cur[e].parent as usize == p {
                e += 1;
            }
            ranges[p] = (s, e);
            s = e;
        }
        for elem in out.iter_mut() {
            elem.vector = self.syzygy(level, elem.lead, elem.parent, &ranges)?;
        }
        Ok(out)
    }

    /// Vector of the new element with lead `q e_j` at level `level`.
    fn syzygy(&self, level: usize, q: Mon, j: u32, ranges: &[(usize, usize)]) -> Result<Vec<VecTerm>, AlgebraError> {
        let ring = &self.ring;
        let f = &ring.field;
        let order = ring.order;
        let cur = &self.levels[level - 1];
        let prev_totals = &self.levels[level - 2];
        let key = |m: &Mon, idx: u32| -> Key { (m.mul(&prev_totals[idx as usize].total).sort_key(order), idx) };

        let mut result = vec![VecTerm { c: 1, m: q, idx: j }];
        let mut streams = vec![Stream { c: 1, m: q, source: j }];
        let mut heap: BinaryHeap<HeapItem> = BinaryHeap::new();
        let push = |heap: &mut BinaryHeap<HeapItem>, streams: &[Stream], s: u32, pos: u32| {
            let st = &streams[s as usize];
            let v = &cur[st.source as usize].vector;
            if let Some(t) = v.get(pos as usize) {
                let m = t.m.mul(&st.m);
                heap.push(HeapItem { key: key(&m, t.idx), m, idx: t.idx, c: f.mul(t.c, st.c), stream: s, pos });
            }
        };
        push(&mut heap, &streams, 0, 0);
        while let Some(top) = heap.pop() {
            let mut c = top.c;
            push(&mut heap, &streams, top.stream, top.pos + 1);
            while heap.peek().is_some_and(|h| h.key == top.key) {
                let h = heap.pop().expect("peeked");
                c = f.add(c, h.c);
                push(&mut heap, &streams, h.stream, h.pos + 1);
            }
            if c == 0 {
                continue;
            }
            let (s, e) = ranges.get(top.idx as usize).copied().unwrap_or((0, 0));
            let reducer = (s..e).find(|&l| cur[l].lead.divides(&top.m));
            let Some(l) = reducer else {
                return Err(AlgebraError::Inconsistent(format!("syzygy reduction stuck at level {level}")));
            };
            let mult = top.m.div(&cur[l].lead);
            let neg = f.neg(c);
            result.push(VecTerm { c: neg, m: mult, idx: l as u32 });
            streams.push(Stream { c: neg, m: mult, source: l as u32 });
            // position 0 cancels the current lead exactly
            push(&mut heap, &streams, streams.len() as u32 - 1, 1);
        }
        Ok(result)
    }

    /// `d_{L-1}(d_L(e)) = 0` for every element of every level `L >= 2`.
    pub fn check_complex(&self) -> Result<(), AlgebraError> {
        let ring = &self.ring;
        for level in 2..self.levels.len() {
            for (i, e) in self.levels[level].iter().enumerate() {
                let mut acc: Vec<VecTerm> = Vec::new();
                for t in &e.vector {
                    for u in &self.levels[level - 1][t.idx as usize].vector {
                        acc.push(VecTerm { c: ring.field.mul(t.c, u.c), m: t.m.mul(&u.m), idx: u.idx });
                    }
                }
                acc.sort_by(|a, b| (a.idx, a.m).cmp(&(b.idx, b.m)));
                let mut k = 0;
                while k < acc.len() {
                    let mut c = 0;
                    let mut l = k;
                    while l < acc.len() && acc[l].idx == acc[k].idx && acc[l].m == acc[k].m {
                        c = ring.field.add(c, acc[l].c);
                        l += 1;
                    }
                    if c != 0 {
                        return Err(AlgebraError::Inconsistent(format!("d∘d is nonzero at level {level}, element {i}")));
                    }
                    k = l;
                }
            }
        }
        Ok(())
    }

    /// Vector of an element as polynomial entries `(row, entry)`, rows ascending.
    pub fn column(&self, level: usize, idx: usize) -> Vec<(u32, Poly)> {
        let mut by_row: std::collections::BTreeMap<u32, Vec<crate::poly::Term>> = Default::default();
        for t in &self.levels[level][idx].vector {
            by_row.entry(t.idx).or_default().push(crate::poly::Term { c: t.c, m: t.m });
        }
        by_row.into_iter().map(|(r, terms)| (r, Poly::from_terms(&self.ring, terms))).collect()
    }
}

/// Generators of the syzygy module of a Gröbner basis, as the second level
/// of its frame; each vector `(c, m, k)` stands for `c m e_k`.
pub fn schreyer_syzygies(ring: &PolyRing, gb: &[Poly], budget: u64) -> Result<Vec<FrameElem>, AlgebraError> {
    let mut frame = Frame::build_to(ring, gb, budget, 2)?;
    Ok(if frame.levels.len() > 2 { frame.levels.swap_remove(2) } else { Vec::new() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::binomial_edge_ideal;
    use belab_core::Graph;

    fn gb_of(g: &Graph) -> (PolyRing, Vec<Poly>) {
        let ring = PolyRing::with_defaults(g.n()).unwrap();
        let mut i = binomial_edge_ideal(g, &ring).unwrap();
        let gb = i.groebner_basis(10_000).unwrap().to_vec();
        (ring, gb)
    }

    fn evaluate(ring: &PolyRing, gb: &[Poly], syz: &FrameElem) -> Poly {
        let mut acc = Poly::zero();
        for t in &syz.vector {
            acc = acc.add_scaled(ring, &gb[t.idx as usize], t.c, &t.m);
        }
        acc
    }

    #[test]
    fn syzygies_of_small_ideals() {
        let (ring, gb) = gb_of(&Graph::complete(2).unwrap());
        assert!(schreyer_syzygies(&ring, &gb, 1000).unwrap().is_empty());

        // coprime leads: one Koszul syzygy g e_1 - f e_2
        let (ring, gb) = gb_of(&Graph::path(3).unwrap());
        let syz = schreyer_syzygies(&ring, &gb, 1000).unwrap();
        assert_eq!(syz.len(), 1);
        assert_eq!(syz[0].degree, 4);
        assert!(evaluate(&ring, &gb, &syz[0]).is_zero());

        let (ring, gb) = gb_of(&Graph::complete(3).unwrap());
        let syz = schreyer_syzygies(&ring, &gb, 1000).unwrap();
        assert_eq!(syz.len(), 2);
        for s in &syz {
            assert_eq!(s.degree, 3);
        }
    }

    #[test]
    fn every_syzygy_annihilates_the_basis() {
        for g in [Graph::cycle(5).unwrap(), Graph::cycle(4).unwrap().add_whiskers(1, 2).unwrap()] {
            let (ring, gb) = gb_of(&g);
            let frame = Frame::build(&ring, &gb, 1_000_000).unwrap();
            let polys: Vec<Poly> = frame.levels[1]
                .iter()
                .map(|e| Poly { terms: e.vector.iter().map(|t| crate::poly::Term { c: t.c, m: t.m }).collect() })
                .collect();
            for s in &frame.levels[2] {
                assert!(evaluate(&ring, &polys, s).is_zero());
            }
            frame.check_complex().unwrap();
        }
    }

    #[test]
    fn frame_budget_is_an_error() {
        let (ring, gb) = gb_of(&Graph::cycle(6).unwrap());
        assert!(matches!(Frame::build(&ring, &gb, 10), Err(AlgebraError::BudgetExceeded { .. })));
    }

    #[test]
    fn leads_decrease_along_vectors() {
        let (ring, gb) = gb_of(&Graph::cycle(5).unwrap());
        let frame = Frame::build(&ring, &gb, 1_000_000).unwrap();
        for l in 2..frame.levels.len() {
            for e in &frame.levels[l] {
                let keys: Vec<Key> = e
                    .vector
                    .iter()
                    .map(|t| (t.m.mul(&frame.levels[l - 1][t.idx as usize].total).sort_key(ring.order), t.idx))
                    .collect();
                assert!(keys.windows(2).all(|w| w[0] > w[1]));
                assert_eq!(e.vector[0].m, e.lead);
                assert_eq!(e.vector[0].idx, e.parent);
            }
        }
    }
}
