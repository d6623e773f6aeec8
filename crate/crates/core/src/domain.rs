use std::fmt;

use crate::error::{Error, Result};

/// The index group: a prime cyclic group `Z/pZ` (odd `p`) in centered
/// representation `{-(p-1)/2, ..., (p-1)/2}`, or the integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Domain {
    modulus: Option<i64>,
}

impl Domain {
    pub const INTEGERS: Domain = Domain { modulus: None };

    pub fn cyclic(p: i64) -> Result<Self> {
        if p < 3 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Domain { modulus: Some(p) })
    }

    pub fn modulus(&self) -> Option<i64> {
        self.modulus
    }

    pub fn is_cyclic(&self) -> bool {
        self.modulus.is_some()
    }

    /// `(p-1)/2` for cyclic domains.
    pub fn half_width(&self) -> Option<i64> {
        self.modulus.map(|p| (p - 1) / 2)
    }

    pub fn contains(&self, index: i64) -> bool {
        match self.half_width() {
            Some(h) => (-h..=h).contains(&index),
            None => true,
        }
    }

    pub fn check(&self, index: i64) -> Result<i64> {
        if self.contains(index) {
            Ok(index)
        } else {
            Err(Error::IndexOutOfRange { index, domain: self.to_string() })
        }
    }

    /// Maps an arbitrary integer to its centered representative.
    pub fn reduce(&self, index: i64) -> i64 {
        match self.modulus {
            Some(p) => {
                let h = (p - 1) / 2;
                (index + h).rem_euclid(p) - h
            }
            None => index,
        }
    }

    pub(crate) fn reduce_wide(&self, index: i128) -> i64 {
        match self.modulus {
            Some(p) => {
                let p = p as i128;
                let h = (p - 1) / 2;
                ((index + h).rem_euclid(p) - h) as i64
            }
            None => i64::try_from(index).expect("integer index overflow"),
        }
    }

    /// All indices of a cyclic domain in ascending order.
    pub fn indices(&self) -> Option<std::ops::RangeInclusive<i64>> {
        self.half_width().map(|h| -h..=h)
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.modulus {
            Some(p) => write!(f, "Z/{p}Z"),
            None => write!(f, "Z"),
        }
    }
}

/// Deterministic trial division.
pub fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d <= n / d {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Position of `z` in the sequence `0, +1, -1, +2, -2, ...`.
pub fn plus_rank(z: i64) -> u64 {
    match z {
        0 => 0,
        z if z > 0 => 2 * z as u64 - 1,
        z => 2 * z.unsigned_abs(),
    }
}

/// Inverse of [`plus_rank`].
pub fn plus_position(rank: u64) -> i64 {
    if rank == 0 {
        0
    } else if rank % 2 == 1 {
        rank.div_ceil(2) as i64
    } else {
        -((rank / 2) as i64)
    }
}
