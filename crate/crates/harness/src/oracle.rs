//! The algebraic oracle: Gröbner basis, Schreyer frame, Betti table, plus
//! the soundness checks that run on every invocation.

use std::time::Instant;

use belab_algebra::resolution::{
    betti_from_frame, derived_invariants, frame_ranks, minimize_checked, BettiTable, Budgets, DerivedInvariants, Frame, Resolution,
};
use belab_algebra::{binomial_edge_ideal, AlgebraError, MonOrder, PolyRing, DEFAULT_CHAR};
use belab_core::canon::canonical_form;
use belab_core::invariants::DEFAULT_PATH_CAP;
use belab_core::primes::krull_dimension;
use belab_core::Graph;
use sha2::{Digest, Sha256};

use crate::cache::{cache_key, Cache, CacheEntry, TOOL_VERSION};
use crate::error::HarnessError;

/// Resolutions above this many vertices need `force`.
pub const DEFAULT_MAX_UNFORCED_N: usize = 9;

#[derive(Clone, Debug)]
pub struct OracleConfig {
    pub p: u32,
    pub order: MonOrder,
    pub budgets: Budgets,
    pub force: bool,
    pub max_unforced_n: usize,
    pub cache: Option<Cache>,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            p: DEFAULT_CHAR,
            order: MonOrder::Degrevlex,
            budgets: Budgets::default(),
            force: false,
            max_unforced_n: DEFAULT_MAX_UNFORCED_N,
            cache: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct OracleResult {
    pub betti: BettiTable,
    pub invariants: DerivedInvariants,
    pub cached: bool,
    pub ms: u128,
}

impl OracleResult {
    /// SHA-256 of the table JSON.
    pub fn digest(&self, n: usize, p: u32, order: MonOrder) -> String {
        betti_digest(&self.betti, n, p, order)
    }
}

pub fn betti_digest(bt: &BettiTable, n: usize, p: u32, order: MonOrder) -> String {
    let json = serde_json::to_string(&bt.to_json(n, p, order.name())).expect("table serializes");
    hex::encode(Sha256::digest(json.as_bytes()))
}

#[derive(Clone, Debug)]
pub enum OracleOutcome {
    Computed(OracleResult),
    Skipped(String),
}

fn inconsistent(what: impl Into<String>) -> HarnessError {
    HarnessError::Consistency(what.into())
}

/// Resolves `S/J_G` and checks the result. Budget overruns become
/// `Skipped`; failed checks are errors.
pub fn run_oracle(g: &Graph, cfg: &OracleConfig) -> Result<OracleOutcome, HarnessError> {
    let n = g.n();
    if n > cfg.max_unforced_n && !cfg.force {
        return Ok(OracleOutcome::Skipped(format!("n = {n} > {} without force", cfg.max_unforced_n)));
    }
    let start = Instant::now();
    let canon = canonical_form(g)?;
    let key = cache_key(&canon.hash(), cfg.p, cfg.order);
    let ring = PolyRing::new(n, cfg.p, cfg.order)?;
    let mut ideal = binomial_edge_ideal(&canon.graph, &ring)?;

    let cached = cfg.cache.as_ref().and_then(|c| c.get(&key)).map(|e| BettiTable::from_json(&e.betti));
    let (betti, was_cached) = match cached {
        Some(bt) => (bt, true),
        None => {
            let frame = match resolve(&mut ideal, cfg.budgets) {
                Ok(f) => f,
                Err(AlgebraError::BudgetExceeded { what, limit }) => {
                    return Ok(OracleOutcome::Skipped(format!("budget: {what} passed {limit}")));
                }
                Err(e) => return Err(e.into()),
            };
            let bt = frame_checks(&frame, &mut ideal, cfg.budgets)?;
            if let Some(cache) = &cfg.cache {
                let entry = CacheEntry { version: TOOL_VERSION.to_string(), key: key.clone(), betti: bt.to_json(n, cfg.p, cfg.order.name()) };
                if let Err(e) = cache.put(&entry) {
                    log::warn!("cache write for {key} failed: {e}");
                }
            }
            (bt, false)
        }
    };
    let invariants = table_checks(&canon.graph, &betti, &mut ideal, cfg.budgets)?;
    Ok(OracleOutcome::Computed(OracleResult { betti, invariants, cached: was_cached, ms: start.elapsed().as_millis() }))
}

fn resolve(ideal: &mut belab_algebra::Ideal, budgets: Budgets) -> Result<Frame, AlgebraError> {
    let ring = ideal.ring.clone();
    let gb = ideal.groebner_basis(budgets.pairs)?.to_vec();
    Frame::build(&ring, &gb, budgets.frame)
}

/// Checks that need the resolution itself: `d∘d = 0` on the frame, explicit
/// minimization (rechecked after each differential) leaves no unit entries
/// and agrees with the rank computation, and the frame's Euler
/// characteristic is the Hilbert numerator.
fn frame_checks(frame: &Frame, ideal: &mut belab_algebra::Ideal, budgets: Budgets) -> Result<BettiTable, HarnessError> {
    frame.check_complex()?;
    let bt = betti_from_frame(frame);
    let minimal = minimize_checked(&Resolution::from_frame(frame))?;
    if minimal.unit_entry_count() != 0 {
        return Err(inconsistent("minimized resolution still has unit entries"));
    }
    if minimal.ranks() != bt {
        return Err(inconsistent("explicit minimization disagrees with the rank computation"));
    }
    let numerator = ideal.initial_ideal(budgets.pairs)?.hilbert_numerator();
    if frame_ranks(frame).euler_numerator() != numerator {
        return Err(inconsistent("frame Euler characteristic differs from the Hilbert numerator"));
    }
    Ok(bt)
}

/// Checks on the table alone, run on cache hits too.
fn table_checks(g: &Graph, bt: &BettiTable, ideal: &mut belab_algebra::Ideal, budgets: Budgets) -> Result<DerivedInvariants, HarnessError> {
    let n = g.n();
    let lead = ideal.initial_ideal(budgets.pairs)?;
    if bt.euler_numerator() != lead.hilbert_numerator() {
        return Err(inconsistent("alternating Betti sum differs from the initial-ideal K-polynomial"));
    }
    if bt.get(0, 0) != 1 || bt.entries.keys().any(|&(i, j)| (i == 0 && j != 0) || j < i) {
        return Err(inconsistent("table is not that of a cyclic quotient"));
    }
    let dim = krull_dimension(g)?;
    if dim != lead.krull_dim() {
        return Err(inconsistent(format!("dimension via primes {dim} != initial-ideal dimension {}", lead.krull_dim())));
    }
    let inv = derived_invariants(bt, n, Some(dim));
    if inv.pd > 2 * n || inv.depth + inv.pd != 2 * n {
        return Err(inconsistent("depth + pd != 2n"));
    }
    if inv.depth > dim {
        return Err(inconsistent(format!("depth {} exceeds dim {dim}", inv.depth)));
    }
    if inv.unique_extremal != (bt.get(inv.pd, inv.pd + inv.reg) > 0) {
        return Err(inconsistent("uniqueness flag disagrees with the corner entry"));
    }
    if g.is_connected() && n >= 2 {
        if inv.depth > n + 1 {
            return Err(inconsistent(format!("depth {} exceeds n + 1", inv.depth)));
        }
        let ell = g.longest_induced_path_length(DEFAULT_PATH_CAP)?;
        if inv.reg < ell || inv.reg > n - 1 {
            return Err(inconsistent(format!("reg {} outside [{ell}, {}]", inv.reg, n - 1)));
        }
    }
    Ok(inv)
}
