//! Prime fields `F_p` for `p < 2^16`, so products fit comfortably in `u64`.

use crate::error::AlgebraError;

pub const DEFAULT_CHAR: u32 = 32003;

#[derive(Clone, Debug)]
pub struct Field {
    p: u32,
    inv: Vec<u32>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p
    }
}

impl Eq for Field {}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

impl Field {
    pub fn new(p: u32) -> Result<Field, AlgebraError> {
        if !is_prime(p) || p >= 1 << 16 {
            return Err(AlgebraError::NotPrime(p));
        }
        // inverses by the recurrence inv[i] = -(p / i) * inv[p mod i]
        let mut inv = vec![0u32; p as usize];
        if p > 1 {
            inv[1] = 1;
        }
        for i in 2..p as u64 {
            let q = p as u64 / i;
            let r = p as u64 % i;
            inv[i as usize] = ((p as u64 - q) * inv[r as usize] as u64 % p as u64) as u32;
        }
        Ok(Field { p, inv })
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        (a as u64 * b as u64 % self.p as u64) as u32
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        debug_assert!(a != 0, "inverse of zero");
        self.inv[a as usize]
    }

    /// Reduces a signed integer into `0..p`.
    pub fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    /// Symmetric representative in `(-p/2, p/2]`, used when printing.
    pub fn to_signed(&self, a: u32) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses() {
        for p in [2u32, 3, 5, 7, 101, 32003] {
            let f = Field::new(p).unwrap();
            for a in 1..p.min(2000) {
                assert_eq!(f.mul(a, f.inv(a)), 1, "p={p} a={a}");
            }
        }
        assert!(Field::new(32001).is_err());
        assert!(Field::new(1).is_err());
        assert!(Field::new(65537).is_err());
    }

    #[test]
    fn signed_round_trip() {
        let f = Field::new(7).unwrap();
        for v in -20i64..20 {
            assert_eq!(f.from_i64(f.to_signed(f.from_i64(v))), f.from_i64(v));
        }
        assert_eq!(f.to_signed(6), -1);
    }
}
