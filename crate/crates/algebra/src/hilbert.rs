//! Monomial ideals: Hilbert series numerators and Krull dimension.

use crate::monomial::Mon;

/// Minimally generated monomial ideal in `nvars` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    pub nvars: usize,
    pub gens: Vec<Mon>,
}

fn minimalize(mut gens: Vec<Mon>) -> Vec<Mon> {
    gens.sort_by_key(|m| (m.degree(), *m));
    gens.dedup();
    let mut out: Vec<Mon> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<Mon>) -> MonomialIdeal {
        MonomialIdeal { nvars, gens: minimalize(gens) }
    }

    pub fn contains(&self, m: &Mon) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Numerator `K(t)` of the Hilbert series `K(t) / (1 - t)^nvars` of
    /// `S / I`; index `k` holds the coefficient of `t^k`.
    pub fn hilbert_numerator(&self) -> Vec<i64> {
        let mut out = numerator(self.gens.clone());
        while out.len() > 1 && *out.last().unwrap() == 0 {
            out.pop();
        }
        out
    }

    /// Smallest number of variables meeting every generator's support.
    pub fn height(&self) -> usize {
        let supports: Vec<u32> = self.gens.iter().map(|g| g.support()).collect();
        if supports.contains(&0) {
            // the unit ideal; treat as height nvars so dim comes out 0
            return self.nvars;
        }
        let mut best = self.nvars;
        cover(&supports, 0, 0, &mut best);
        best
    }

    pub fn krull_dim(&self) -> usize {
        self.nvars - self.height()
    }
}

fn cover(supports: &[u32], chosen: u32, size: usize, best: &mut usize) {
    if size >= *best {
        return;
    }
    // the uncovered generator with the fewest variables gives the narrowest branch
    let open = supports.iter().filter(|&&s| s & chosen == 0).min_by_key(|s| s.count_ones());
    match open {
        None => *best = size,
        Some(&s) => {
            let mut rest = s;
            while rest != 0 {
                let v = rest.trailing_zeros();
                rest &= rest - 1;
                cover(supports, chosen | (1 << v), size + 1, best);
            }
        }
    }
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] += y;
    }
    out
}

fn one_minus_t_pow(d: u32) -> Vec<i64> {
    let mut v = vec![0i64; d as usize + 1];
    v[0] += 1;
    v[d as usize] -= 1;
    v
}

/// Pivot recursion `N(I) = N(I + (x)) + t N(I : x)` on a variable shared by
/// several generators; pairwise coprime generators are the base case.
fn numerator(gens: Vec<Mon>) -> Vec<i64> {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return vec![1];
    }
    let mut counts = [0u32; 32];
    for g in &gens {
        let mut s = g.support();
        while s != 0 {
            counts[s.trailing_zeros() as usize] += 1;
            s &= s - 1;
        }
    }
    let (pivot, &count) = counts.iter().enumerate().max_by_key(|&(v, c)| (*c, std::cmp::Reverse(v))).unwrap();
    if count <= 1 {
        return gens.iter().fold(vec![1], |acc, g| poly_mul(&acc, &one_minus_t_pow(g.degree())));
    }
    let x = Mon::var(pivot);
    let mut plus: Vec<Mon> = gens.iter().copied().filter(|g| g.exp(pivot) == 0).collect();
    plus.push(x);
    let colon: Vec<Mon> = gens.iter().map(|g| if g.exp(pivot) > 0 { g.div(&x) } else { *g }).collect();
    let mut shifted = vec![0i64];
    shifted.extend(numerator(colon));
    poly_add(&numerator(plus), &shifted)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mon(exps: &[u8]) -> Mon {
        Mon::from_exponents(exps).unwrap()
    }

    /// Counts standard monomials degree by degree and compares with the
    /// series expansion of `K(t) / (1 - t)^nvars`.
    fn brute_hilbert_function(ideal: &MonomialIdeal, max_deg: usize) -> Vec<i64> {
        let n = ideal.nvars;
        let mut counts = vec![0i64; max_deg + 1];
        fn rec(v: usize, n: usize, left: usize, cur: &mut Vec<u8>, ideal: &MonomialIdeal, counts: &mut Vec<i64>, max: usize) {
            if v == n {
                let m = Mon::from_exponents(cur).unwrap();
                if !ideal.contains(&m) {
                    counts[max - left] += 1;
                }
                return;
            }
            for e in 0..=left {
                cur[v] = e as u8;
                rec(v + 1, n, left - e, cur, ideal, counts, max);
            }
            cur[v] = 0;
        }
        let mut cur = vec![0u8; n];
        rec(0, n, max_deg, &mut cur, ideal, &mut counts, max_deg);
        counts
    }

    fn series(num: &[i64], nvars: usize, max_deg: usize) -> Vec<i64> {
        // multiply by 1/(1-t)^nvars = prefix sums nvars times
        let mut s = vec![0i64; max_deg + 1];
        for (i, c) in num.iter().enumerate() {
            if i <= max_deg {
                s[i] = *c;
            }
        }
        for _ in 0..nvars {
            for i in 1..=max_deg {
                s[i] += s[i - 1];
            }
        }
        s
    }

    #[test]
    fn principal_ideal() {
        let i = MonomialIdeal::new(4, vec![mon(&[1, 0, 0, 1])]);
        assert_eq!(i.hilbert_numerator(), vec![1, 0, -1]);
        assert_eq!(i.krull_dim(), 3);
    }

    #[test]
    fn matches_brute_force() {
        let cases = vec![
            MonomialIdeal::new(4, vec![mon(&[1, 1, 0, 0]), mon(&[0, 1, 1, 0]), mon(&[0, 0, 1, 1])]),
            MonomialIdeal::new(4, vec![mon(&[2, 0, 0, 0]), mon(&[1, 1, 0, 0]), mon(&[0, 3, 1, 0])]),
            MonomialIdeal::new(5, vec![mon(&[1, 0, 1, 0, 1]), mon(&[0, 1, 1, 1, 0]), mon(&[1, 1, 0, 0, 0]), mon(&[0, 0, 0, 2, 1])]),
            MonomialIdeal::new(3, vec![]),
        ];
        for i in cases {
            let num = i.hilbert_numerator();
            assert_eq!(series(&num, i.nvars, 7), brute_hilbert_function(&i, 7), "{i:?}");
        }
    }

    #[test]
    fn height_by_cover() {
        // path x1x2, x2x3, x3x4: cover {x2, x3}
        let i = MonomialIdeal::new(4, vec![mon(&[1, 1, 0, 0]), mon(&[0, 1, 1, 0]), mon(&[0, 0, 1, 1])]);
        assert_eq!(i.height(), 2);
        assert_eq!(i.krull_dim(), 2);
        assert_eq!(MonomialIdeal::new(3, vec![]).krull_dim(), 3);
    }
}
