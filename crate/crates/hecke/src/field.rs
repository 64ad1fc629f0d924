use crate::error::{HeckeError, Result};

/// The prime field `F_p`; scalars are residues in `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !mseg_core::params::is_prime(p) || p > u32::MAX as u64 {
            return Err(HeckeError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn elem(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.p - a) % self.p
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, a: u64, mut e: u64) -> u64 {
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

    pub fn inv(&self, a: u64) -> Option<u64> {
        (a % self.p != 0).then(|| self.pow(a, self.p - 2))
    }

    /// `a^e` for a signed exponent; `a` must be nonzero when `e < 0`.
    pub fn zpow(&self, a: u64, e: i64) -> Option<u64> {
        if e >= 0 {
            Some(self.pow(a, e as u64))
        } else {
            self.inv(a).map(|b| self.pow(b, e.unsigned_abs()))
        }
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: u64) -> Option<u64> {
        if a % self.p == 0 {
            return None;
        }
        let mut k = 1;
        let mut x = a % self.p;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
        }
        Some(k)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = u64> {
        1..self.p
    }

    /// All elements of exact multiplicative order `k`.
    pub fn elements_of_order(&self, k: u64) -> Vec<u64> {
        self.nonzero().filter(|&a| self.order(a) == Some(k)).collect()
    }

    /// Smallest `k >= 1` with `1 + ξ + ... + ξ^{k-1} = 0`.
    pub fn e_invariant(&self, xi: u64) -> u64 {
        let (mut k, mut sum, mut power) = (1, 1 % self.p, 1 % self.p);
        while sum != 0 {
            power = self.mul(power, xi);
            sum = self.add(sum, power);
            k += 1;
        }
        k
    }

    /// Whether `b/a` lies in `ξ^ℤ`.
    pub fn same_coset(&self, a: u64, b: u64, xi: u64) -> bool {
        let Some(ai) = self.inv(a) else {
            return false;
        };
        let ratio = self.mul(b, ai);
        let mut x = 1;
        loop {
            if x == ratio {
                return true;
            }
            x = self.mul(x, xi);
            if x == 1 {
                return false;
            }
        }
    }
}
