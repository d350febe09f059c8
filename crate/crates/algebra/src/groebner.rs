//! Buchberger's algorithm with the normal selection strategy, the coprime
//! criterion and the chain criterion.

use std::collections::{BTreeSet, HashSet};

use belab_core::Graph;

use crate::error::AlgebraError;
use crate::hilbert::MonomialIdeal;
use crate::monomial::Mon;
use crate::poly::{Poly, PolyRing, Term};

pub const DEFAULT_PAIR_BUDGET: u64 = 2_000_000;

#[derive(Clone, Debug)]
pub struct Ideal {
    pub ring: PolyRing,
    pub generators: Vec<Poly>,
    gb: Option<Vec<Poly>>,
}

impl Ideal {
    pub fn new(ring: PolyRing, generators: Vec<Poly>) -> Ideal {
        Ideal { ring, generators, gb: None }
    }

    /// Computes (once) and returns the reduced Gröbner basis.
    pub fn groebner_basis(&mut self, pair_budget: u64) -> Result<&[Poly], AlgebraError> {
        if self.gb.is_none() {
            self.gb = Some(buchberger(&self.ring, &self.generators, pair_budget)?);
        }
        Ok(self.gb.as_deref().expect("just computed"))
    }

    pub fn cached_gb(&self) -> Option<&[Poly]> {
        self.gb.as_deref()
    }

    pub fn initial_ideal(&mut self, pair_budget: u64) -> Result<MonomialIdeal, AlgebraError> {
        let nvars = self.ring.num_vars();
        let gb = self.groebner_basis(pair_budget)?;
        Ok(MonomialIdeal::new(nvars, gb.iter().map(|g| g.lm()).collect()))
    }
}

/// `J_G`, one generator `x_i y_j - x_j y_i` per edge `i < j`.
pub fn binomial_edge_ideal(g: &Graph, ring: &PolyRing) -> Result<Ideal, AlgebraError> {
    if g.n() != ring.n {
        return Err(AlgebraError::SizeMismatch { ring: ring.n, graph: g.n() });
    }
    let f = &ring.field;
    let gens = g
        .edges()
        .into_iter()
        .map(|(i, j)| {
            Poly::from_terms(
                ring,
                vec![Term { c: 1, m: ring.x(i).mul(&ring.y(j)) }, Term { c: f.neg(1), m: ring.x(j).mul(&ring.y(i)) }],
            )
        })
        .collect();
    Ok(Ideal::new(ring.clone(), gens))
}

fn find_reducer(basis: &[Poly], m: &Mon) -> Option<usize> {
    basis.iter().position(|g| !g.is_zero() && g.lm().divides(m))
}

/// Full multivariate division; the remainder has no term divisible by any
/// leading monomial of `basis`.
pub fn normal_form(ring: &PolyRing, f: &Poly, basis: &[Poly]) -> Poly {
    let field = &ring.field;
    let mut p = f.clone();
    let mut rem: Vec<Term> = Vec::new();
    while let Some(&t) = p.terms.first() {
        match find_reducer(basis, &t.m) {
            Some(k) => {
                let g = &basis[k];
                let c = field.neg(field.mul(t.c, field.inv(g.lc())));
                p = p.add_scaled(ring, g, c, &t.m.div(&g.lm()));
            }
            None => {
                rem.push(t);
                p.terms.remove(0);
            }
        }
    }
    Poly { terms: rem }
}

pub fn s_polynomial(ring: &PolyRing, f: &Poly, g: &Poly) -> Poly {
    let l = f.lm().lcm(&g.lm());
    let field = &ring.field;
    let a = f.mul_term(ring, field.inv(f.lc()), &l.div(&f.lm()));
    let b = g.mul_term(ring, field.inv(g.lc()), &l.div(&g.lm()));
    a.sub(ring, &b)
}

/// Reduced Gröbner basis, sorted by ascending leading monomial. Every
/// S-polynomial of the result and every input generator is re-reduced
/// afterwards; a nonzero remainder is reported as an internal error.
pub fn buchberger(ring: &PolyRing, generators: &[Poly], pair_budget: u64) -> Result<Vec<Poly>, AlgebraError> {
    let mut basis: Vec<Poly> = Vec::new();
    let mut pending: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let mut pending_set: HashSet<(usize, usize)> = HashSet::new();

    let add = |h: Poly, basis: &mut Vec<Poly>, pending: &mut BTreeSet<(u32, usize, usize)>, pending_set: &mut HashSet<(usize, usize)>| {
        let k = basis.len();
        for (i, g) in basis.iter().enumerate() {
            let d = g.lm().lcm(&h.lm()).degree();
            pending.insert((d, i, k));
            pending_set.insert((i, k));
        }
        basis.push(h);
    };

    for g in generators {
        let h = normal_form(ring, g, &basis);
        if !h.is_zero() {
            add(h.monic(ring), &mut basis, &mut pending, &mut pending_set);
        }
    }

    let mut processed = 0u64;
    while let Some(&key) = pending.iter().next() {
        pending.remove(&key);
        let (_, i, j) = key;
        pending_set.remove(&(i, j));
        let (li, lj) = (basis[i].lm(), basis[j].lm());
        if li.coprime(&lj) {
            continue;
        }
        let l = li.lcm(&lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lm().divides(&l)
                && !pending_set.contains(&(i.min(k), i.max(k)))
                && !pending_set.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        processed += 1;
        if processed > pair_budget {
            return Err(AlgebraError::BudgetExceeded { what: "S-pair reductions", limit: pair_budget });
        }
        let h = normal_form(ring, &s_polynomial(ring, &basis[i], &basis[j]), &basis);
        if !h.is_zero() {
            add(h.monic(ring), &mut basis, &mut pending, &mut pending_set);
        }
    }

    let reduced = reduce_basis(ring, basis);
    verify_groebner(ring, &reduced, generators)?;
    Ok(reduced)
}

/// Minimal, interreduced, monic, sorted ascending by leading monomial.
pub fn reduce_basis(ring: &PolyRing, mut basis: Vec<Poly>) -> Vec<Poly> {
    basis.retain(|g| !g.is_zero());
    basis.sort_by(|a, b| ring.cmp(&a.lm(), &b.lm()));
    basis.dedup_by(|a, b| a.lm() == b.lm());
    let mut minimal: Vec<Poly> = Vec::new();
    for g in basis {
        if !minimal.iter().any(|h| h.lm().divides(&g.lm())) {
            minimal.push(g);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Poly> = minimal.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, g)| g.clone()).collect();
        out.push(normal_form(ring, &minimal[k], &others).monic(ring));
    }
    out
}

pub fn is_reduced(ring: &PolyRing, basis: &[Poly]) -> bool {
    basis.iter().enumerate().all(|(k, g)| {
        g.lc() == 1
            && g.terms.iter().all(|t| basis.iter().enumerate().all(|(i, h)| i == k || !h.lm().divides(&t.m)))
            && g.terms.windows(2).all(|w| ring.cmp(&w[0].m, &w[1].m).is_gt())
    })
}

/// Post-hoc Buchberger criterion plus membership of the original generators.
pub fn verify_groebner(ring: &PolyRing, basis: &[Poly], generators: &[Poly]) -> Result<(), AlgebraError> {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if basis[i].lm().coprime(&basis[j].lm()) {
                continue;
            }
            if !normal_form(ring, &s_polynomial(ring, &basis[i], &basis[j]), basis).is_zero() {
                return Err(AlgebraError::Inconsistent(format!("S-polynomial of basis elements {i} and {j} does not reduce to 0")));
            }
        }
    }
    for (k, g) in generators.iter().enumerate() {
        if !normal_form(ring, g, basis).is_zero() {
            return Err(AlgebraError::Inconsistent(format!("generator {k} is not in the ideal of the basis")));
        }
    }
    Ok(())
}
