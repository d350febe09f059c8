//! Sparse polynomials in `K[x_1..x_n, y_1..y_n]`.
//!
//! Variable `x_i` is index `i - 1` and `y_i` is index `n + i - 1`, so the
//! order is `x_1 > ... > x_n > y_1 > ... > y_n` for both supported orders.

use std::cmp::Ordering;
use std::fmt::Write as _;

use crate::error::AlgebraError;
use crate::field::{Field, DEFAULT_CHAR};
use crate::monomial::{Mon, MonOrder, MAX_VARS};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    pub n: usize,
    pub field: Field,
    pub order: MonOrder,
}

impl PolyRing {
    pub fn new(n: usize, p: u32, order: MonOrder) -> Result<PolyRing, AlgebraError> {
        if 2 * n > MAX_VARS {
            return Err(AlgebraError::TooManyVariables(2 * n));
        }
        Ok(PolyRing { n, field: Field::new(p)?, order })
    }

    pub fn with_defaults(n: usize) -> Result<PolyRing, AlgebraError> {
        PolyRing::new(n, DEFAULT_CHAR, MonOrder::Degrevlex)
    }

    pub fn num_vars(&self) -> usize {
        2 * self.n
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    /// `x_i`, 1-based.
    pub fn x(&self, i: usize) -> Mon {
        assert!((1..=self.n).contains(&i));
        Mon::var(i - 1)
    }

    /// `y_i`, 1-based.
    pub fn y(&self, i: usize) -> Mon {
        assert!((1..=self.n).contains(&i));
        Mon::var(self.n + i - 1)
    }

    #[inline]
    pub fn cmp(&self, a: &Mon, b: &Mon) -> Ordering {
        a.cmp_in(b, self.order)
    }

    pub fn var_name(&self, v: usize) -> String {
        if v < self.n {
            format!("x{}", v + 1)
        } else {
            format!("y{}", v - self.n + 1)
        }
    }

    pub fn format_mon(&self, m: &Mon) -> String {
        let mut out = String::new();
        for v in 0..self.num_vars() {
            let e = m.exp(v);
            if e == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push('*');
            }
            out.push_str(&self.var_name(v));
            if e > 1 {
                write!(out, "^{e}").unwrap();
            }
        }
        out
    }

    /// Multidegree `(vertex degrees, x-degree)` of a monomial; the grading
    /// under which binomial edge ideals are homogeneous.
    pub fn multidegree(&self, m: &Mon) -> MultiDegree {
        let mut v = [0u8; 16];
        let mut xdeg = 0u32;
        for i in 0..self.n {
            let (a, b) = (m.exp(i), m.exp(self.n + i));
            v[i] = a + b;
            xdeg += a as u32;
        }
        MultiDegree { vertex: v, xdeg: xdeg as u16 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiDegree {
    pub vertex: [u8; 16],
    pub xdeg: u16,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Term {
    pub c: u32,
    pub m: Mon,
}

/// Terms strictly descending in the ring's order, no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    pub terms: Vec<Term>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn lm(&self) -> Mon {
        self.terms[0].m
    }

    pub fn lc(&self) -> u32 {
        self.terms[0].c
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges, drops zeros.
    pub fn from_terms(ring: &PolyRing, mut terms: Vec<Term>) -> Poly {
        terms.retain(|t| t.c != 0);
        terms.sort_by(|a, b| ring.cmp(&b.m, &a.m));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.m == t.m => {
                    last.c = ring.field.add(last.c, t.c);
                    if last.c == 0 {
                        out.pop();
                    }
                }
                _ => out.push(t),
            }
        }
        Poly { terms: out }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].m.degree() == w[1].m.degree())
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.m.degree()).max()
    }

    pub fn scale(&self, ring: &PolyRing, c: u32) -> Poly {
        if c == 0 {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|t| Term { c: ring.field.mul(t.c, c), m: t.m }).collect() }
    }

    pub fn monic(&self, ring: &PolyRing) -> Poly {
        match self.lead() {
            None => Poly::zero(),
            Some(t) => self.scale(ring, ring.field.inv(t.c)),
        }
    }

    pub fn neg(&self, ring: &PolyRing) -> Poly {
        Poly { terms: self.terms.iter().map(|t| Term { c: ring.field.neg(t.c), m: t.m }).collect() }
    }

    pub fn add(&self, ring: &PolyRing, other: &Poly) -> Poly {
        self.add_scaled(ring, other, 1, &Mon::ONE)
    }

    pub fn sub(&self, ring: &PolyRing, other: &Poly) -> Poly {
        self.add_scaled(ring, other, ring.field.neg(1), &Mon::ONE)
    }

    /// `self + c * m * other`, a single merge pass.
    pub fn add_scaled(&self, ring: &PolyRing, other: &Poly, c: u32, m: &Mon) -> Poly {
        let f = &ring.field;
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (a, b) = (&self.terms, &other.terms);
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() {
                out.extend_from_slice(&a[i..]);
                break;
            }
            let bm = b[j].m.mul(m);
            if i == a.len() {
                out.push(Term { c: f.mul(b[j].c, c), m: bm });
                j += 1;
                continue;
            }
            match ring.cmp(&a[i].m, &bm) {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term { c: f.mul(b[j].c, c), m: bm });
                    j += 1;
                }
                Ordering::Equal => {
                    let s = f.add(a[i].c, f.mul(b[j].c, c));
                    if s != 0 {
                        out.push(Term { c: s, m: bm });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.retain(|t| t.c != 0);
        Poly { terms: out }
    }

    pub fn mul_term(&self, ring: &PolyRing, c: u32, m: &Mon) -> Poly {
        if c == 0 {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|t| Term { c: ring.field.mul(t.c, c), m: t.m.mul(m) }).collect() }
    }

    pub fn mul(&self, ring: &PolyRing, other: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for t in &other.terms {
            acc = acc.add_scaled(ring, self, t.c, &t.m);
        }
        acc
    }

    /// Re-sorts after a change of order.
    pub fn reorder(&self, ring: &PolyRing) -> Poly {
        Poly::from_terms(ring, self.terms.clone())
    }

    /// `c*x1^a*y3^b` style, with a signed coefficient and terms joined by ` + `.
    pub fn format(&self, ring: &PolyRing) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|t| {
                let c = ring.field.to_signed(t.c);
                if t.m.is_one() {
                    format!("{c}")
                } else {
                    format!("{c}*{}", ring.format_mon(&t.m))
                }
            })
            .collect();
        parts.join(" + ")
    }

    pub fn parse(ring: &PolyRing, s: &str) -> Result<Poly, AlgebraError> {
        let bad = || AlgebraError::Parse(s.to_string());
        let s = s.trim();
        if s == "0" {
            return Ok(Poly::zero());
        }
        let mut terms = Vec::new();
        for part in s.split(" + ") {
            let mut factors = part.trim().split('*');
            let c: i64 = factors.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            let mut exps = vec![0u8; ring.num_vars()];
            for f in factors {
                let (name, e) = match f.split_once('^') {
                    Some((name, e)) => (name, e.parse::<u8>().map_err(|_| bad())?),
                    None => (f, 1),
                };
                let (kind, idx) = name.split_at(1);
                let idx: usize = idx.parse().map_err(|_| bad())?;
                if idx == 0 || idx > ring.n {
                    return Err(bad());
                }
                let v = match kind {
                    "x" => idx - 1,
                    "y" => ring.n + idx - 1,
                    _ => return Err(bad()),
                };
                exps[v] = exps[v].checked_add(e).ok_or_else(bad)?;
            }
            terms.push(Term { c: ring.field.from_i64(c), m: Mon::from_exponents(&exps)? });
        }
        Ok(Poly::from_terms(ring, terms))
    }
}

/// One polynomial per line, in the given order.
pub fn dump(ring: &PolyRing, polys: &[Poly]) -> String {
    let mut out = String::new();
    for p in polys {
        out.push_str(&p.format(ring));
        out.push('\n');
    }
    out
}

pub fn parse_dump(ring: &PolyRing, text: &str) -> Result<Vec<Poly>, AlgebraError> {
    text.lines().filter(|l| !l.trim().is_empty()).map(|l| Poly::parse(ring, l)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring(n: usize) -> PolyRing {
        PolyRing::with_defaults(n).unwrap()
    }

    fn arb_poly(n: usize) -> impl Strategy<Value = Vec<(i64, Vec<u8>)>> {
        proptest::collection::vec((-5i64..5, proptest::collection::vec(0u8..3, 2 * n)), 0..6)
    }

    fn build(r: &PolyRing, raw: &[(i64, Vec<u8>)]) -> Poly {
        Poly::from_terms(r, raw.iter().map(|(c, e)| Term { c: r.field.from_i64(*c), m: Mon::from_exponents(e).unwrap() }).collect())
    }

    #[test]
    fn format_round_trip() {
        let r = ring(3);
        let f = Poly::parse(&r, "1*x1*y2 + -1*x2*y1").unwrap();
        assert_eq!(f.len(), 2);
        // degrevlex: x2*y1 is larger since y2 is the later variable
        assert_eq!(f.format(&r), "-1*x2*y1 + 1*x1*y2");
        assert_eq!(Poly::parse(&r, &f.format(&r)).unwrap(), f);
        assert_eq!(Poly::parse(&r, "3*x1^2*y3").unwrap().format(&r), "3*x1^2*y3");
        assert!(Poly::parse(&r, "1*z1").is_err());
        assert!(Poly::parse(&r, "1*x4").is_err());
    }

    #[test]
    fn multidegree_of_generator() {
        let r = ring(4);
        let m = r.x(1).mul(&r.y(3));
        let d = r.multidegree(&m);
        assert_eq!(&d.vertex[..4], &[1, 0, 1, 0]);
        assert_eq!(d.xdeg, 1);
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(2), b in arb_poly(2), c in arb_poly(2)) {
            let r = ring(2);
            let (a, b, c) = (build(&r, &a), build(&r, &b), build(&r, &c));
            prop_assert_eq!(a.add(&r, &b), b.add(&r, &a));
            prop_assert_eq!(a.mul(&r, &b), b.mul(&r, &a));
            prop_assert_eq!(a.mul(&r, &b.add(&r, &c)), a.mul(&r, &b).add(&r, &a.mul(&r, &c)));
            prop_assert!(a.sub(&r, &a).is_zero());
            for w in a.mul(&r, &b).terms.windows(2) {
                prop_assert_eq!(r.cmp(&w[0].m, &w[1].m), Ordering::Greater);
            }
            prop_assert_eq!(Poly::parse(&r, &a.format(&r)).unwrap(), a);
        }
    }
}
