//! Packed exponent vectors: 8 bits per variable, up to 32 variables.
//!
//! Exponents are kept at most 127 so the top bit of every byte is free for
//! the SWAR tricks in `divides`, `lcm` and `gcd`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;

pub const MAX_VARS: usize = 32;
pub const MAX_EXPONENT: u8 = 127;

const HIGH: u64 = 0x8080_8080_8080_8080;
const ONES: u64 = 0x0101_0101_0101_0101;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Mon(pub [u64; 4]);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonOrder {
    #[default]
    Degrevlex,
    Lex,
}

impl MonOrder {
    pub fn name(self) -> &'static str {
        match self {
            MonOrder::Degrevlex => "degrevlex",
            MonOrder::Lex => "lex",
        }
    }
}

impl std::str::FromStr for MonOrder {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "degrevlex" | "grevlex" => Ok(MonOrder::Degrevlex),
            "lex" => Ok(MonOrder::Lex),
            _ => Err(AlgebraError::Parse(s.to_string())),
        }
    }
}

impl fmt::Display for MonOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[inline]
fn byte_ge_mask(a: u64, b: u64) -> u64 {
    // high bit of each byte set where a_i >= b_i, widened to the full byte
    let m = ((a | HIGH).wrapping_sub(b)) & HIGH;
    (m >> 7).wrapping_mul(0xff)
}

impl Mon {
    pub const ONE: Mon = Mon([0; 4]);

    pub fn from_exponents(exps: &[u8]) -> Result<Mon, AlgebraError> {
        if exps.len() > MAX_VARS {
            return Err(AlgebraError::TooManyVariables(exps.len()));
        }
        let mut m = Mon::ONE;
        for (v, &e) in exps.iter().enumerate() {
            if e > MAX_EXPONENT {
                return Err(AlgebraError::ExponentOverflow);
            }
            m.0[v / 8] |= (e as u64) << (8 * (v % 8));
        }
        Ok(m)
    }

    pub fn var(v: usize) -> Mon {
        assert!(v < MAX_VARS);
        let mut m = Mon::ONE;
        m.0[v / 8] = 1u64 << (8 * (v % 8));
        m
    }

    #[inline]
    pub fn exp(&self, v: usize) -> u8 {
        (self.0[v / 8] >> (8 * (v % 8))) as u8
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u8> {
        (0..nvars).map(|v| self.exp(v)).collect()
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.0 == [0; 4]
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|w| (w.wrapping_mul(ONES) >> 56) as u32).sum()
    }

    /// Product, or an error if an exponent would pass 127.
    #[inline]
    pub fn checked_mul(&self, other: &Mon) -> Result<Mon, AlgebraError> {
        let mut out = [0u64; 4];
        let mut over = 0u64;
        for i in 0..4 {
            out[i] = self.0[i].wrapping_add(other.0[i]);
            over |= out[i];
        }
        if over & HIGH != 0 {
            return Err(AlgebraError::ExponentOverflow);
        }
        Ok(Mon(out))
    }

    /// Product for the hot paths. Exponents there stay tiny; the check is
    /// one mask so it stays on in release builds.
    #[inline]
    pub fn mul(&self, other: &Mon) -> Mon {
        match self.checked_mul(other) {
            Ok(m) => m,
            Err(_) => panic!("monomial exponent overflow"),
        }
    }

    #[inline]
    pub fn divides(&self, other: &Mon) -> bool {
        (0..4).all(|i| ((other.0[i] | HIGH).wrapping_sub(self.0[i])) & HIGH == HIGH)
    }

    /// `self / other`; the caller guarantees `other | self`, so no byte borrows.
    #[inline]
    pub fn div(&self, other: &Mon) -> Mon {
        debug_assert!(other.divides(self));
        let mut out = [0u64; 4];
        for i in 0..4 {
            out[i] = self.0[i].wrapping_sub(other.0[i]);
        }
        Mon(out)
    }

    #[inline]
    pub fn lcm(&self, other: &Mon) -> Mon {
        let mut out = [0u64; 4];
        for i in 0..4 {
            let m = byte_ge_mask(self.0[i], other.0[i]);
            out[i] = (self.0[i] & m) | (other.0[i] & !m);
        }
        Mon(out)
    }

    #[inline]
    pub fn gcd(&self, other: &Mon) -> Mon {
        let mut out = [0u64; 4];
        for i in 0..4 {
            let m = byte_ge_mask(self.0[i], other.0[i]);
            out[i] = (other.0[i] & m) | (self.0[i] & !m);
        }
        Mon(out)
    }

    #[inline]
    pub fn coprime(&self, other: &Mon) -> bool {
        self.gcd(other).is_one()
    }

    /// Bitmask of the variables that occur.
    pub fn support(&self) -> u32 {
        let mut s = 0u32;
        for v in 0..MAX_VARS {
            if self.exp(v) != 0 {
                s |= 1 << v;
            }
        }
        s
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|w| w & !ONES == 0)
    }

    /// Key whose plain tuple order agrees with `cmp_in(.., order)`.
    #[inline]
    pub fn sort_key(&self, order: MonOrder) -> [u64; 5] {
        let w = &self.0;
        match order {
            // byte-swapped words put x_1 in the most significant byte
            MonOrder::Lex => [w[0].swap_bytes(), w[1].swap_bytes(), w[2].swap_bytes(), w[3].swap_bytes(), 0],
            // little-endian words already put later variables higher; negate
            // so that more of a late variable compares smaller
            MonOrder::Degrevlex => [self.degree() as u64, !w[3], !w[2], !w[1], !w[0]],
        }
    }

    #[inline]
    pub fn cmp_in(&self, other: &Mon, order: MonOrder) -> Ordering {
        match order {
            MonOrder::Degrevlex => self.cmp_degrevlex(other),
            MonOrder::Lex => self.cmp_lex(other),
        }
    }

    #[inline]
    pub fn cmp_lex(&self, other: &Mon) -> Ordering {
        for i in 0..4 {
            let x = self.0[i] ^ other.0[i];
            if x != 0 {
                let sh = (x.trailing_zeros() / 8) * 8;
                return ((self.0[i] >> sh) as u8).cmp(&((other.0[i] >> sh) as u8));
            }
        }
        Ordering::Equal
    }

    #[inline]
    pub fn cmp_degrevlex(&self, other: &Mon) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        for i in (0..4).rev() {
            let x = self.0[i] ^ other.0[i];
            if x != 0 {
                let sh = ((63 - x.leading_zeros()) / 8) * 8;
                // more of the last variable means smaller
                return ((other.0[i] >> sh) as u8).cmp(&((self.0[i] >> sh) as u8));
            }
        }
        Ordering::Equal
    }
}

impl fmt::Debug for Mon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let exps: Vec<String> = (0..MAX_VARS).filter(|&v| self.exp(v) > 0).map(|v| format!("v{v}^{}", self.exp(v))).collect();
        if exps.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&exps.join("*"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_exps() -> impl Strategy<Value = Vec<u8>> {
        proptest::collection::vec(0u8..6, MAX_VARS)
    }

    fn naive_degrevlex(a: &[u8], b: &[u8]) -> Ordering {
        let (da, db): (u32, u32) = (a.iter().map(|&e| e as u32).sum(), b.iter().map(|&e| e as u32).sum());
        if da != db {
            return da.cmp(&db);
        }
        for v in (0..a.len()).rev() {
            if a[v] != b[v] {
                return b[v].cmp(&a[v]);
            }
        }
        Ordering::Equal
    }

    #[test]
    fn variable_order() {
        // x1 > x2 > ... in both orders
        for v in 0..MAX_VARS - 1 {
            assert_eq!(Mon::var(v).cmp_lex(&Mon::var(v + 1)), Ordering::Greater);
            assert_eq!(Mon::var(v).cmp_degrevlex(&Mon::var(v + 1)), Ordering::Greater);
        }
        // x1*x3 < x2^2 in degrevlex because x3 is the later variable
        let a = Mon::var(0).mul(&Mon::var(2));
        let b = Mon::var(1).mul(&Mon::var(1));
        assert_eq!(a.cmp_degrevlex(&b), Ordering::Less);
        assert_eq!(a.cmp_lex(&b), Ordering::Greater);
    }

    #[test]
    fn overflow_is_detected() {
        let a = Mon::from_exponents(&[100]).unwrap();
        assert!(a.checked_mul(&a).is_err());
        assert!(Mon::from_exponents(&[128]).is_err());
        assert!(Mon::from_exponents(&[0; 33]).is_err());
    }

    proptest! {
        #[test]
        fn matches_naive(a in arb_exps(), b in arb_exps()) {
            let (ma, mb) = (Mon::from_exponents(&a).unwrap(), Mon::from_exponents(&b).unwrap());
            prop_assert_eq!(ma.divides(&mb), a.iter().zip(&b).all(|(x, y)| x <= y));
            let l: Vec<u8> = a.iter().zip(&b).map(|(x, y)| *x.max(y)).collect();
            let g: Vec<u8> = a.iter().zip(&b).map(|(x, y)| *x.min(y)).collect();
            prop_assert_eq!(ma.lcm(&mb).exponents(MAX_VARS), l);
            prop_assert_eq!(ma.gcd(&mb).exponents(MAX_VARS), g);
            prop_assert_eq!(ma.degree(), a.iter().map(|&e| e as u32).sum::<u32>());
            prop_assert_eq!(ma.cmp_lex(&mb), a.cmp(&b));
            prop_assert_eq!(ma.cmp_degrevlex(&mb), naive_degrevlex(&a, &b));
            for o in [MonOrder::Lex, MonOrder::Degrevlex] {
                prop_assert_eq!(ma.sort_key(o).cmp(&mb.sort_key(o)), ma.cmp_in(&mb, o));
            }
            let p = ma.mul(&mb);
            prop_assert_eq!(p.div(&mb), ma);
            prop_assert_eq!(p.div(&ma), mb);
        }

        #[test]
        fn orders_are_multiplicative(a in arb_exps(), b in arb_exps(), c in arb_exps()) {
            let (ma, mb, mc) = (Mon::from_exponents(&a).unwrap(), Mon::from_exponents(&b).unwrap(), Mon::from_exponents(&c).unwrap());
            for o in [MonOrder::Lex, MonOrder::Degrevlex] {
                prop_assert_eq!(ma.cmp_in(&mb, o), ma.mul(&mc).cmp_in(&mb.mul(&mc), o));
            }
        }
    }
}
