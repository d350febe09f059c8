//! Explicit minimization: split off `0 -> S e_c -> S f_r -> 0` for every
//! unit entry `u = d_L[r, c]`.
//!
//! With `f'_r = d_L(e_c)` and `e'_{c'} = e_{c'} - (b_r / u) e_c` the
//! differential `d_L` loses row `r` and column `c`, every other column
//! becomes `b - (b_r / u) a`, and the neighbouring differentials just drop
//! column `r` of `d_{L-1}` and row `c` of `d_{L+1}`.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::AlgebraError;
use crate::poly::{Poly, PolyRing};
use crate::resolution::{FreeModule, GradedMatrix, Resolution};

fn is_unit(p: &Poly) -> bool {
    p.len() == 1 && p.terms[0].m.is_one()
}

fn lowest_unit(col: &BTreeMap<u32, Poly>) -> Option<(u32, u32)> {
    col.iter().find(|(_, p)| is_unit(p)).map(|(&r, p)| (r, p.terms[0].c))
}

/// Returns the minimal resolution. Each differential is processed once, in
/// order; within it, columns by ascending degree, then column index, then
/// row index.
pub fn minimize(res: &Resolution) -> Resolution {
    minimize_impl(res, false).expect("unchecked minimization cannot fail")
}

/// Like `minimize`, but re-verifies the whole complex (degrees and
/// `d∘d = 0`) after each differential is processed.
pub fn minimize_checked(res: &Resolution) -> Result<Resolution, AlgebraError> {
    let out = minimize_impl(res, true)?;
    if out.unit_entry_count() != 0 {
        return Err(AlgebraError::Inconsistent("unit entries left after minimization".into()));
    }
    Ok(out)
}

fn minimize_impl(res: &Resolution, verify: bool) -> Result<Resolution, AlgebraError> {
    let ring = &res.ring;
    let len = res.differentials.len();
    let mut alive: Vec<Vec<bool>> = res.modules.iter().map(|m| vec![true; m.rank()]).collect();
    let mut mats: Vec<Vec<BTreeMap<u32, Poly>>> =
        res.differentials.iter().map(|d| d.cols.iter().map(|c| c.iter().cloned().collect()).collect()).collect();

    for l in 1..=len {
        let (before, after) = alive.split_at_mut(l);
        let rows_alive = &mut before[l - 1];
        let cols_alive = &mut after[0];
        let mat = &mut mats[l - 1];
        for (c, col) in mat.iter_mut().enumerate() {
            if cols_alive[c] {
                col.retain(|r, _| rows_alive[*r as usize]);
            } else {
                col.clear();
            }
        }
        let mut row_index: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); rows_alive.len()];
        for (c, col) in mat.iter().enumerate() {
            for &r in col.keys() {
                row_index[r as usize].insert(c as u32);
            }
        }
        let degrees = &res.modules[l].twists;
        let mut by_degree: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        for c in 0..mat.len() {
            if cols_alive[c] {
                by_degree.entry(degrees[c]).or_default().push(c as u32);
            }
        }
        for (_, cols) in by_degree {
            let mut candidates: BTreeSet<u32> = cols.iter().copied().filter(|&c| lowest_unit(&mat[c as usize]).is_some()).collect();
            while let Some(c) = candidates.pop_first() {
                let Some((r, u)) = lowest_unit(&mat[c as usize]) else {
                    continue;
                };
                let pivot_col = std::mem::take(&mut mat[c as usize]);
                cols_alive[c as usize] = false;
                rows_alive[r as usize] = false;
                for &rr in pivot_col.keys() {
                    row_index[rr as usize].remove(&c);
                }
                let inv_u = ring.field.inv(u);
                let touched: Vec<u32> = row_index[r as usize].iter().copied().collect();
                for c2 in touched {
                    let col2 = &mut mat[c2 as usize];
                    let Some(b) = col2.get(&r).cloned() else {
                        continue;
                    };
                    let factor = b.scale(ring, ring.field.neg(inv_u));
                    for (&rr, a) in &pivot_col {
                        let add = a.mul(ring, &factor);
                        let entry = col2.entry(rr).or_default();
                        *entry = entry.add(ring, &add);
                        if entry.is_zero() {
                            col2.remove(&rr);
                            row_index[rr as usize].remove(&c2);
                        } else {
                            row_index[rr as usize].insert(c2);
                        }
                    }
                    debug_assert!(!col2.contains_key(&r));
                    if degrees[c2 as usize] == degrees[c as usize] && lowest_unit(col2).is_some() {
                        candidates.insert(c2);
                    }
                }
                row_index[r as usize].clear();
            }
        }
        if l >= 2 {
            // dropped rows of d_l are dropped columns of d_{l-1}
            for (c, col) in mats[l - 2].iter_mut().enumerate() {
                if !alive[l - 1][c] {
                    col.clear();
                }
            }
        }
        if verify {
            // later differentials still carry rows that were just dropped
            let mut snapshot = mats.clone();
            for (k, mat) in snapshot.iter_mut().enumerate().skip(l) {
                for col in mat.iter_mut() {
                    col.retain(|r, _| alive[k][*r as usize]);
                }
            }
            rebuild(ring, res, &alive, &snapshot).check()?;
        }
    }
    Ok(rebuild(ring, res, &alive, &mats))
}

fn rebuild(ring: &PolyRing, res: &Resolution, alive: &[Vec<bool>], mats: &[Vec<BTreeMap<u32, Poly>>]) -> Resolution {
    let renumber: Vec<Vec<Option<u32>>> = alive
        .iter()
        .map(|a| {
            let mut k = 0;
            a.iter()
                .map(|&x| {
                    x.then(|| {
                        k += 1;
                        k - 1
                    })
                })
                .collect()
        })
        .collect();
    let modules: Vec<FreeModule> = res
        .modules
        .iter()
        .zip(alive)
        .map(|(m, a)| FreeModule { twists: m.twists.iter().zip(a).filter(|(_, &x)| x).map(|(&t, _)| t).collect() })
        .collect();
    let mut differentials = Vec::new();
    for (l, mat) in mats.iter().enumerate() {
        let cols: Vec<Vec<(u32, Poly)>> = mat
            .iter()
            .enumerate()
            .filter(|(c, _)| alive[l + 1][*c])
            .map(|(_, col)| col.iter().map(|(&r, p)| (renumber[l][r as usize].expect("row alive"), p.clone())).collect())
            .collect();
        differentials.push(GradedMatrix { source: modules[l + 1].clone(), target: modules[l].clone(), cols });
    }
    let mut out = Resolution { ring: ring.clone(), modules, differentials, minimal: true };
    while out.modules.len() > 1 && out.modules.last().is_some_and(|m| m.rank() == 0) {
        out.modules.pop();
        out.differentials.pop();
    }
    out
}

pub(crate) fn unit_entries(res: &Resolution) -> usize {
    res.differentials.iter().flat_map(|d| d.cols.iter()).flat_map(|c| c.iter()).filter(|(_, p)| is_unit(p)).count()
}
