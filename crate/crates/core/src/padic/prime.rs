use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A rational prime, checked on construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn is_odd(self) -> bool {
        self.0 != 2
    }

    /// `p^n`, or an error if it does not fit in a `u64`.
    pub fn pow(self, n: u32) -> Result<u64> {
        self.0
            .checked_pow(n)
            .ok_or_else(|| Error::Precondition(format!("{}^{n} overflows u64", self.0)))
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl TryFrom<u64> for Prime {
    type Error = Error;
    fn try_from(p: u64) -> Result<Self> {
        Prime::new(p)
    }
}

impl From<Prime> for u64 {
    fn from(p: Prime) -> u64 {
        p.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_primes_only() {
        let primes: Vec<u64> = (0..40).filter(|&n| Prime::new(n).is_ok()).collect();
        assert_eq!(primes, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert_eq!(Prime::new(1), Err(Error::NotPrime(1)));
        assert!(Prime::new(7919).is_ok());
        assert!(Prime::new(7917).is_err());
    }

    #[test]
    fn powers() {
        let p = Prime::new(5).unwrap();
        assert_eq!(p.pow(3).unwrap(), 125);
        assert!(p.pow(40).is_err());
        assert!(!Prime::new(2).unwrap().is_odd());
    }
}
