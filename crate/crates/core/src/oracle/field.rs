use serde::Serialize;

use crate::error::{Error, Result};

/// The prime field `F_p` for a prime `p <= 31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PrimeField {
    p: u8,
}

impl PrimeField {
    pub const MAX_P: u32 = 31;

    pub fn new(p: u32) -> Result<Self> {
        let prime = p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0);
        if !prime || p > Self::MAX_P {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p: p as u8 })
    }

    pub fn p(&self) -> u32 {
        self.p as u32
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        ((a as u16 + b as u16) % self.p as u16) as u8
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        ((a as u16 + self.p as u16 - b as u16) % self.p as u16) as u8
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.sub(0, a)
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        ((a as u16 * b as u16) % self.p as u16) as u8
    }

    pub fn pow(&self, a: u8, mut e: u32) -> u8 {
        let (mut base, mut acc) = (a % self.p, 1 % self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for 0.
    pub fn inv(&self, a: u8) -> Option<u8> {
        (a % self.p != 0).then(|| self.pow(a, self.p as u32 - 2))
    }

    pub fn reduce(&self, a: i64) -> u8 {
        a.rem_euclid(self.p as i64) as u8
    }

    /// Smallest generator of the multiplicative group.
    pub fn primitive_root(&self) -> u8 {
        let order = self.p as u32 - 1;
        (1..self.p)
            .find(|&g| (1..order).all(|k| order % k != 0 || self.pow(g, k) != 1))
            .expect("F_p^* is cyclic")
    }

    /// Nonzero elements `1..p`.
    pub fn units(&self) -> impl Iterator<Item = u8> {
        1..self.p
    }
}
