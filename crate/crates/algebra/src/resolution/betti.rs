//! Betti tables and the invariants read off them.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::linalg::rank;
use crate::poly::MultiDegree;
use crate::resolution::frame::Frame;

/// `(i, j) -> beta_{i,j}` with `j` the absolute internal degree; zero
/// entries are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    pub entries: BTreeMap<(usize, usize), u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: usize,
    pub beta: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTableJson {
    pub n: usize,
    pub char: u32,
    pub order: String,
    pub table: Vec<BettiEntry>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, i: usize, j: usize, beta: u64) {
        if beta > 0 {
            *self.entries.entry((i, j)).or_insert(0) += beta;
        }
    }

    pub fn pd(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn reg(&self) -> usize {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }

    pub fn total(&self, i: usize) -> u64 {
        self.entries.iter().filter(|(&(k, _), _)| k == i).map(|(_, b)| b).sum()
    }

    /// `sum_i (-1)^i sum_j beta_{i,j} t^j`, the graded Euler characteristic.
    pub fn euler_numerator(&self) -> Vec<i64> {
        let max_j = self.entries.keys().map(|&(_, j)| j).max().unwrap_or(0);
        let mut out = vec![0i64; max_j + 1];
        for (&(i, j), &b) in &self.entries {
            out[j] += if i % 2 == 0 { b as i64 } else { -(b as i64) };
        }
        while out.len() > 1 && *out.last().unwrap() == 0 {
            out.pop();
        }
        out
    }

    pub fn to_json(&self, n: usize, char: u32, order: &str) -> BettiTableJson {
        BettiTableJson {
            n,
            char,
            order: order.to_string(),
            table: self.entries.iter().map(|(&(i, j), &beta)| BettiEntry { i, j, beta }).collect(),
        }
    }

    pub fn from_json(json: &BettiTableJson) -> BettiTable {
        let mut t = BettiTable::default();
        for e in &json.table {
            t.add(e.i, e.j, e.beta);
        }
        t
    }

    pub fn polynomial(&self) -> BettiPolynomial {
        BettiPolynomial(self.entries.iter().map(|(&k, &b)| (k, b as i64)).collect())
    }
}

/// Macaulay2-style display: columns are `i`, rows are `j - i`.
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (pd, reg) = (self.pd(), self.reg());
        write!(f, "      ")?;
        for i in 0..=pd {
            write!(f, "{i:>6}")?;
        }
        writeln!(f)?;
        write!(f, "total:")?;
        for i in 0..=pd {
            write!(f, "{:>6}", self.total(i))?;
        }
        writeln!(f)?;
        for r in 0..=reg {
            write!(f, "{r:>5}:")?;
            for i in 0..=pd {
                match self.get(i, i + r) {
                    0 => write!(f, "{:>6}", ".")?,
                    b => write!(f, "{b:>6}")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// `sum beta_{i,j} s^i t^j` with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiPolynomial(pub BTreeMap<(usize, usize), i64>);

impl BettiPolynomial {
    pub fn one() -> BettiPolynomial {
        BettiPolynomial([((0, 0), 1)].into_iter().collect())
    }

    pub fn mul(&self, other: &BettiPolynomial) -> BettiPolynomial {
        let mut out: BTreeMap<(usize, usize), i64> = BTreeMap::new();
        for (&(i, j), &a) in &self.0 {
            for (&(k, l), &b) in &other.0 {
                *out.entry((i + k, j + l)).or_insert(0) += a * b;
            }
        }
        out.retain(|_, c| *c != 0);
        BettiPolynomial(out)
    }
}

impl fmt::Display for BettiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(&(i, j), &c)| {
                let mut s = if c == 1 && (i, j) != (0, 0) { String::new() } else { c.to_string() };
                if i > 0 {
                    s.push_str(if i == 1 { "s" } else { "s^" });
                    if i > 1 {
                        s.push_str(&i.to_string());
                    }
                }
                if j > 0 {
                    s.push_str(if j == 1 { "t" } else { "t^" });
                    if j > 1 {
                        s.push_str(&j.to_string());
                    }
                }
                s
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedInvariants {
    pub pd: usize,
    pub reg: usize,
    pub depth: usize,
    pub dim: Option<usize>,
    /// Extremal positions `(i, j)` with `j` the internal degree.
    pub extremal: Vec<(usize, usize)>,
    /// The corner at `pd` and the corner at `reg`.
    pub distinguished: [(usize, usize); 2],
    pub unique_extremal: bool,
}

/// Extremal positions straight from the definition: `beta_{i,i+r}` is
/// extremal when it is nonzero and every `beta_{k,k+l}` with `k >= i`,
/// `l >= r`, `(k, l) != (i, r)` vanishes.
pub fn extremal_positions(bt: &BettiTable) -> Vec<(usize, usize)> {
    let coords: Vec<(usize, usize)> = bt.entries.keys().map(|&(i, j)| (i, j - i)).collect();
    coords
        .iter()
        .filter(|&&(i, r)| !coords.iter().any(|&(k, l)| (k, l) != (i, r) && k >= i && l >= r))
        .map(|&(i, r)| (i, i + r))
        .collect()
}

pub fn derived_invariants(bt: &BettiTable, n: usize, dim: Option<usize>) -> DerivedInvariants {
    let (pd, reg) = (bt.pd(), bt.reg());
    let top_r = bt.entries.keys().filter(|&&(i, _)| i == pd).map(|&(i, j)| j - i).max().unwrap_or(0);
    let reg_i = bt.entries.keys().filter(|&&(i, j)| j - i == reg).map(|&(i, _)| i).max().unwrap_or(0);
    DerivedInvariants {
        pd,
        reg,
        depth: 2 * n - pd,
        dim,
        extremal: extremal_positions(bt),
        distinguished: [(pd, pd + top_r), (reg_i, reg_i + reg)],
        unique_extremal: bt.get(pd, pd + reg) > 0,
    }
}

/// Minimal Betti numbers of the module resolved by a (possibly non-minimal)
/// frame: `beta_{L,a} = f_{L,a} - rank c_L(a) - rank c_{L+1}(a)` where
/// `c_L(a)` is the constant part of `d_L` in multidegree `a`.
pub fn betti_from_frame(frame: &Frame) -> BettiTable {
    let ring = &frame.ring;
    let levels = frame.levels.len();
    let mut counts: Vec<HashMap<MultiDegree, u64>> = vec![HashMap::new(); levels + 1];
    let mut ranks: Vec<HashMap<MultiDegree, u64>> = vec![HashMap::new(); levels + 1];
    let mut degree_of: HashMap<MultiDegree, usize> = HashMap::new();
    for (l, elems) in frame.levels.iter().enumerate() {
        for e in elems {
            let md = ring.multidegree(&e.total);
            *counts[l].entry(md).or_insert(0) += 1;
            degree_of.insert(md, e.degree as usize);
        }
    }
    for l in 1..levels {
        // constant entries grouped by multidegree of the column
        let mut blocks: HashMap<MultiDegree, (Vec<u32>, Vec<(u32, u32, u32)>)> = HashMap::new();
        for (ci, e) in frame.levels[l].iter().enumerate() {
            let consts: Vec<&crate::resolution::frame::VecTerm> = e.vector.iter().filter(|t| t.m.is_one()).collect();
            if consts.is_empty() {
                continue;
            }
            let md = ring.multidegree(&e.total);
            let block = blocks.entry(md).or_default();
            block.0.push(ci as u32);
            for t in consts {
                block.1.push((ci as u32, t.idx, t.c));
            }
        }
        for (md, (cols, entries)) in blocks {
            let mut row_ids: Vec<u32> = entries.iter().map(|e| e.1).collect();
            row_ids.sort_unstable();
            row_ids.dedup();
            let mut mat = vec![vec![0u32; row_ids.len()]; cols.len()];
            for (c, r, v) in entries {
                let ci = cols.binary_search(&c).expect("column listed");
                let ri = row_ids.binary_search(&r).expect("row listed");
                mat[ci][ri] = v;
            }
            let rk = rank(&ring.field, mat) as u64;
            if rk > 0 {
                ranks[l].insert(md, rk);
            }
        }
    }
    let mut bt = BettiTable::default();
    for l in 0..levels {
        for (md, &f) in &counts[l] {
            let b = f - ranks[l].get(md).copied().unwrap_or(0) - ranks[l + 1].get(md).copied().unwrap_or(0);
            bt.add(l, degree_of[md], b);
        }
    }
    bt
}

/// Ranks of the frame's free modules, `(i, j) -> f_{i,j}`.
pub fn frame_ranks(frame: &Frame) -> BettiTable {
    let mut bt = BettiTable::default();
    for (l, elems) in frame.levels.iter().enumerate() {
        for e in elems {
            bt.add(l, e.degree as usize, 1);
        }
    }
    bt
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(entries: &[(usize, usize, u64)]) -> BettiTable {
        let mut bt = BettiTable::default();
        for &(i, j, b) in entries {
            bt.add(i, j, b);
        }
        bt
    }

    #[test]
    fn single_edge_invariants() {
        let bt = table(&[(0, 0, 1), (1, 2, 1)]);
        let d = derived_invariants(&bt, 2, Some(3));
        assert_eq!((d.pd, d.reg, d.depth), (1, 1, 3));
        assert_eq!(d.extremal, vec![(1, 2)]);
        assert!(d.unique_extremal);
        assert_eq!(d.distinguished, [(1, 2), (1, 2)]);
        assert_eq!(bt.polynomial().to_string(), "1 + st^2");
    }

    #[test]
    fn two_corners() {
        // staircase with corners at (i, r) = (2, 3) and (4, 1)
        let bt = table(&[(0, 0, 1), (1, 2, 3), (2, 5, 1), (3, 4, 2), (4, 5, 7), (2, 4, 1)]);
        let d = derived_invariants(&bt, 5, None);
        assert_eq!((d.pd, d.reg), (4, 3));
        assert_eq!(d.extremal, vec![(2, 5), (4, 5)]);
        assert_eq!(d.distinguished, [(4, 5), (2, 5)]);
        assert!(!d.unique_extremal);
    }

    #[test]
    fn euler_and_json() {
        let bt = table(&[(0, 0, 1), (1, 2, 3), (2, 3, 2)]);
        assert_eq!(bt.euler_numerator(), vec![1, 0, -3, 2]);
        let json = bt.to_json(3, 32003, "degrevlex");
        let text = serde_json::to_string(&json).unwrap();
        assert_eq!(
            text,
            r#"{"n":3,"char":32003,"order":"degrevlex","table":[{"i":0,"j":0,"beta":1},{"i":1,"j":2,"beta":3},{"i":2,"j":3,"beta":2}]}"#
        );
        assert_eq!(BettiTable::from_json(&serde_json::from_str(&text).unwrap()), bt);
        assert!(bt.to_string().contains("total:"));
    }

    #[test]
    fn polynomial_product() {
        let k2 = table(&[(0, 0, 1), (1, 2, 1)]).polynomial();
        let p3 = k2.mul(&k2);
        assert_eq!(p3.to_string(), "1 + 2st^2 + s^2t^4");
        assert_eq!(p3.mul(&BettiPolynomial::one()), p3);
    }
}
