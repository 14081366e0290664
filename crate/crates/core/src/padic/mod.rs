//! p-adic side: valuations, finite-precision p-adic scalars, Riemann-sum
//! approximants of the bosonic and fermionic integrals, and the q-deformed
//! (Carlitz) Bernoulli numbers.

mod prime;
mod q;
mod scalar;

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

pub use prime::Prime;
pub use q::{carlitz_beta, q_bracket, q_integral_approx, CarlitzCache, QParameter};
pub use scalar::{Agreement, PadicScalar};

use crate::bernoulli_euler::{bernoulli_number, euler_number};
use crate::error::{Error, Result};
use crate::power_sums::{alt_power_sum_direct, power_sum_direct};
use crate::rational::{split_prime_power, Rational};

/// A p-adic valuation; the zero element has infinite valuation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Valuation::Finite(a), Valuation::Finite(b)) => a.cmp(b),
            (Valuation::Finite(_), Valuation::Infinite) => Ordering::Less,
            (Valuation::Infinite, Valuation::Finite(_)) => Ordering::Greater,
            (Valuation::Infinite, Valuation::Infinite) => Ordering::Equal,
        }
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Valuation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Valuation::Finite(v) => serializer.serialize_i64(*v),
            Valuation::Infinite => serializer.serialize_str("inf"),
        }
    }
}

/// `v_p(r)`, infinite for zero.
pub fn valuation_of_rational(r: &Rational, p: Prime) -> Valuation {
    if r.is_zero() {
        return Valuation::Infinite;
    }
    let (vn, _) = split_prime_power(r.numer(), p.get());
    let (vd, _) = split_prime_power(r.denom(), p.get());
    Valuation::Finite(vn as i64 - vd as i64)
}

/// Largest `p^N` the Riemann-sum approximants will sum over.
pub const MAX_TERMS: u64 = 1 << 26;

fn terms(p: Prime, big_n: u32) -> Result<u64> {
    let t = p.pow(big_n)?;
    if t > MAX_TERMS {
        return Err(Error::Precondition(format!(
            "{p}^{big_n} terms exceeds the limit of {MAX_TERMS}"
        )));
    }
    Ok(t)
}

/// `p^-N * sum_{x < p^N} x^n`, which tends p-adically to `B_n`.
pub fn volkenborn_approx(n: u32, p: Prime, big_n: u32) -> Result<Rational> {
    let t = terms(p, big_n)?;
    Ok(power_sum_direct(n, t - 1) / Rational::from(t))
}

/// `sum_{x < p^N} (-1)^x x^n`, which tends p-adically to `E_n` for odd `p`.
pub fn fermionic_approx(n: u32, p: Prime, big_n: u32) -> Result<Rational> {
    if !p.is_odd() {
        return Err(Error::Precondition(
            "the fermionic approximant needs an odd prime".into(),
        ));
    }
    let t = terms(p, big_n)?;
    Ok(alt_power_sum_direct(n, t - 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ConvergenceKind {
    Volkenborn,
    Fermionic,
}

/// `v_p(approx_N - limit)` for `N = 1..=n_max`.
pub fn convergence_report(
    kind: ConvergenceKind,
    n: u32,
    p: Prime,
    n_max: u32,
) -> Result<Vec<(u32, Valuation)>> {
    type Approximant = fn(u32, Prime, u32) -> Result<Rational>;
    let (limit, approx): (Rational, Approximant) = match kind {
        ConvergenceKind::Volkenborn => (bernoulli_number(n as usize), volkenborn_approx),
        ConvergenceKind::Fermionic => (euler_number(n as usize), fermionic_approx),
    };
    (1..=n_max)
        .map(|big_n| {
            let a = approx(n, p, big_n)?;
            Ok((big_n, valuation_of_rational(&(a - &limit), p)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn valuations() {
        assert_eq!(valuation_of_rational(&Rational::new(9, 2), p(3)), Valuation::Finite(2));
        assert_eq!(
            valuation_of_rational(&Rational::new(-691, 2730), p(5)),
            Valuation::Finite(-1)
        );
        assert_eq!(valuation_of_rational(&Rational::zero(), p(7)), Valuation::Infinite);
        assert!(Valuation::Finite(1_000_000) < Valuation::Infinite);
        assert_eq!(serde_json::to_string(&Valuation::Infinite).unwrap(), r#""inf""#);
    }

    #[test]
    fn approximants() {
        // (0 + 1 + 4) / 3
        assert_eq!(volkenborn_approx(2, p(3), 1).unwrap(), Rational::new(5, 3));
        assert_eq!(volkenborn_approx(0, p(5), 3).unwrap(), Rational::one());
        // 0 - 1 + 2
        assert_eq!(fermionic_approx(1, p(3), 1).unwrap(), Rational::from(1i64));
        assert!(matches!(fermionic_approx(1, p(2), 3), Err(Error::Precondition(_))));
        assert!(volkenborn_approx(1, p(2), 40).is_err());
    }

    #[test]
    fn approximants_converge() {
        for prime in [2u64, 3, 5] {
            let r = convergence_report(ConvergenceKind::Volkenborn, 2, p(prime), 4).unwrap();
            assert!(r.windows(2).all(|w| w[0].1 < w[1].1), "{prime}: {r:?}");
        }
        let r = convergence_report(ConvergenceKind::Fermionic, 3, p(3), 4).unwrap();
        assert!(r.windows(2).all(|w| w[0].1 < w[1].1), "{r:?}");
    }
}
