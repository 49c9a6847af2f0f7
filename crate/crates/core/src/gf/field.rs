use std::fmt;

use crate::error::{Error, Result};

/// Largest prime below 2^16; entries stay in `u32` and products in `u64`.
pub const MAX_MODULUS: u32 = 65521;

/// A prime field GF(q). Elements are `u32` values in `[0, q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Field {
    q: u32,
}

fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn new(q: u32) -> Result<Field> {
        if q > MAX_MODULUS || !is_prime(q as u64) {
            return Err(Error::NotPrime(q as u64));
        }
        Ok(Field { q })
    }

    #[inline]
    pub fn q(self) -> u32 {
        self.q
    }

    #[inline]
    pub fn reduce(self, a: i64) -> u32 {
        a.rem_euclid(self.q as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.q {
            s - self.q
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.q - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.q - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.q as u64) as u32
    }

    pub fn pow(self, mut a: u32, mut e: u64) -> u32 {
        let mut acc = 1 % self.q;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self, a: u32) -> Option<u32> {
        if a.is_multiple_of(self.q) {
            None
        } else {
            Some(self.pow(a, self.q as u64 - 2))
        }
    }

    /// Sum of products of paired coordinates.
    #[inline]
    pub fn dot(self, a: &[u32], b: &[u32]) -> u32 {
        let q = self.q as u64;
        let mut acc: u64 = 0;
        for (&x, &y) in a.iter().zip(b) {
            acc += x as u64 * y as u64;
            if acc >= 1 << 62 {
                acc %= q;
            }
        }
        (acc % q) as u32
    }

    /// `q^e`, or `None` on overflow.
    pub fn checked_power(self, e: usize) -> Option<u128> {
        (self.q as u128).checked_pow(e.try_into().ok()?)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}
