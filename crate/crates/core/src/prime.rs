use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A rational prime, checked on construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    pub fn is_odd(self) -> bool {
        self.0 != 2
    }

    /// `p^e`, or `None` on overflow.
    pub fn checked_pow(self, e: u32) -> Option<u64> {
        self.0.checked_pow(e)
    }

    /// Returns `Some(a)` when `n = p^a`.
    pub fn log_exact(self, mut n: u64) -> Option<u32> {
        if n == 0 {
            return None;
        }
        let mut a = 0;
        while n.is_multiple_of(self.0) {
            n /= self.0;
            a += 1;
        }
        (n == 1).then_some(a)
    }

    /// Base-p digits of `m`, least significant first. Zero has no digits.
    pub fn digits(self, mut m: u64) -> Vec<u64> {
        let mut out = Vec::new();
        while m > 0 {
            out.push(m % self.0);
            m /= self.0;
        }
        out
    }
}

impl TryFrom<u64> for Prime {
    type Error = Error;

    fn try_from(p: u64) -> Result<Self> {
        Prime::new(p)
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
