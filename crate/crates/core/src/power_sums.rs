//! Power sums `S_k(n) = sum_{l=0}^{n} l^k` and alternating power sums
//! `T_k(n) = sum_{l=0}^{n} (-1)^l l^k`, directly and in closed form.
//!
//! `0^0 = 1` throughout, so `S_0(n) = n + 1`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::bernoulli_euler::{bernoulli_number, bernoulli_polynomial, euler_number, euler_polynomial};
use crate::error::{Error, Result};
use crate::rational::Rational;

fn int_pow(l: u64, k: u32) -> BigInt {
    // num's pow already gives 0^0 = 1.
    num_traits::pow(BigInt::from(l), k as usize)
}

/// `S_k(n)` by direct summation.
pub fn power_sum_direct(k: u32, n: u64) -> Rational {
    let s = (0..=n).fold(BigInt::zero(), |acc, l| acc + int_pow(l, k));
    Rational::from(s)
}

/// `T_k(n)` by direct summation.
pub fn alt_power_sum_direct(k: u32, n: u64) -> Rational {
    let s = (0..=n).fold(BigInt::zero(), |acc, l| {
        if l % 2 == 0 {
            acc + int_pow(l, k)
        } else {
            acc - int_pow(l, k)
        }
    });
    Rational::from(s)
}

/// `(B_k(n) - B_k) / k`, which equals `S_{k-1}(n-1)`.
pub fn power_sum_closed(k: u32, n: u64) -> Result<Rational> {
    if k == 0 {
        return Err(Error::UndefinedDivision("closed power sum needs k >= 1".into()));
    }
    if n == 0 {
        return Err(Error::Precondition("closed power sum needs n >= 1".into()));
    }
    let k = k as usize;
    let diff = bernoulli_polynomial(k).eval(&Rational::from(n)) - bernoulli_number(k);
    Ok(diff / Rational::from(k as u64))
}

/// `(E_k(n) + E_k) / 2` for odd `n`, which equals `T_k(n-1)`.
///
/// Even `n` is rejected: the underlying fermionic shift identity only takes
/// this symmetric form for odd shifts.
pub fn alt_power_sum_closed(k: u32, n: u64) -> Result<Rational> {
    if n.is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "alternating closed form needs odd n, got {n}"
        )));
    }
    let k = k as usize;
    let sum = euler_polynomial(k).eval(&Rational::from(n)) + euler_number(k);
    Ok(sum / Rational::from(2u64))
}
