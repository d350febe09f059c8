//! Free resolutions of `S/I` and their Betti tables.

pub mod betti;
pub mod frame;
pub mod minimize;

use std::collections::BTreeMap;

use crate::error::AlgebraError;
use crate::groebner::Ideal;
use crate::poly::{Poly, PolyRing};

pub use betti::{betti_from_frame, derived_invariants, extremal_positions, frame_ranks, BettiPolynomial, BettiTable, BettiTableJson, DerivedInvariants};
pub use frame::{Frame, DEFAULT_FRAME_BUDGET};
pub use minimize::{minimize, minimize_checked};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FreeModule {
    /// Absolute degree of each basis element.
    pub twists: Vec<u32>,
}

impl FreeModule {
    pub fn rank(&self) -> usize {
        self.twists.len()
    }
}

/// Sparse columns `(row, entry)`; entry `(r, c)` is homogeneous of degree
/// `source.twists[c] - target.twists[r]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMatrix {
    pub source: FreeModule,
    pub target: FreeModule,
    pub cols: Vec<Vec<(u32, Poly)>>,
}

#[derive(Clone, Debug)]
pub struct Resolution {
    pub ring: PolyRing,
    /// `F_0, F_1, ...`
    pub modules: Vec<FreeModule>,
    /// `d_1, d_2, ...` with `d_i : F_i -> F_{i-1}`.
    pub differentials: Vec<GradedMatrix>,
    pub minimal: bool,
}

impl Resolution {
    pub fn from_frame(frame: &Frame) -> Resolution {
        let modules: Vec<FreeModule> =
            frame.levels.iter().map(|l| FreeModule { twists: l.iter().map(|e| e.degree).collect() }).collect();
        let differentials = (1..frame.levels.len())
            .map(|l| GradedMatrix {
                source: modules[l].clone(),
                target: modules[l - 1].clone(),
                cols: (0..frame.levels[l].len()).map(|c| frame.column(l, c)).collect(),
            })
            .collect();
        Resolution { ring: frame.ring.clone(), modules, differentials, minimal: false }
    }

    pub fn length(&self) -> usize {
        self.differentials.len()
    }

    /// Ranks of the free modules by degree; the Betti table once minimal.
    pub fn ranks(&self) -> BettiTable {
        let mut bt = BettiTable::default();
        for (i, m) in self.modules.iter().enumerate() {
            for &t in &m.twists {
                bt.add(i, t as usize, 1);
            }
        }
        bt
    }

    pub fn unit_entry_count(&self) -> usize {
        minimize::unit_entries(self)
    }

    /// Entries homogeneous of the right degree and `d_i d_{i+1} = 0`.
    pub fn check(&self) -> Result<(), AlgebraError> {
        let ring = &self.ring;
        for (l, d) in self.differentials.iter().enumerate() {
            for (c, col) in d.cols.iter().enumerate() {
                for (r, p) in col {
                    let want = d.source.twists[c] as i64 - d.target.twists[*r as usize] as i64;
                    if p.is_zero() || !p.is_homogeneous() || p.degree().map(|x| x as i64) != Some(want) {
                        return Err(AlgebraError::Inconsistent(format!("entry ({r}, {c}) of d_{} has the wrong degree", l + 1)));
                    }
                }
            }
        }
        for l in 1..self.differentials.len() {
            let (lower, upper) = (&self.differentials[l - 1], &self.differentials[l]);
            for (c, col) in upper.cols.iter().enumerate() {
                let mut acc: BTreeMap<u32, Poly> = BTreeMap::new();
                for (k, p) in col {
                    for (r, q) in &lower.cols[*k as usize] {
                        let e = acc.entry(*r).or_default();
                        *e = e.add(ring, &p.mul(ring, q));
                    }
                }
                if acc.values().any(|p| !p.is_zero()) {
                    return Err(AlgebraError::Inconsistent(format!("d_{} d_{} is nonzero on column {c}", l, l + 1)));
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Budgets {
    pub pairs: u64,
    pub frame: u64,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets { pairs: crate::groebner::DEFAULT_PAIR_BUDGET, frame: DEFAULT_FRAME_BUDGET }
    }
}

/// Schreyer frame of `S/I` (not minimal in general).
pub fn free_resolution_frame(ideal: &mut Ideal, budgets: Budgets) -> Result<Frame, AlgebraError> {
    let ring = ideal.ring.clone();
    let gb = ideal.groebner_basis(budgets.pairs)?.to_vec();
    Frame::build(&ring, &gb, budgets.frame)
}

pub fn free_resolution(ideal: &mut Ideal, budgets: Budgets) -> Result<Resolution, AlgebraError> {
    Ok(Resolution::from_frame(&free_resolution_frame(ideal, budgets)?))
}

/// Graded Euler characteristic of the table against the Hilbert numerator
/// of the initial ideal.
pub fn hilbert_consistency_check(bt: &BettiTable, ideal: &mut Ideal, pair_budget: u64) -> Result<bool, AlgebraError> {
    Ok(bt.euler_numerator() == ideal.initial_ideal(pair_budget)?.hilbert_numerator())
}
