//! Exact arithmetic for Bernoulli and Euler numbers and polynomials, power
//! sums, the bosonic (Volkenborn) and fermionic p-adic invariant integrals,
//! Carlitz q-Bernoulli numbers, and evaluation-based verifiers for the
//! symmetry identities these integrals produce.
//!
//! Everything is exact: scalars are [`Rational`]s, generating functions are
//! [`TruncatedSeries`] over the rationals, and the q-deformed path works in
//! [`PadicScalar`] arithmetic with explicit precision tracking.
//!
//! Conventions worth knowing up front:
//! - `B_1 = -1/2` (generating function `t/(e^t - 1)`).
//! - "Euler number" means `E_n = E_n(0)`, the Euler polynomial at zero
//!   (`1, -1/2, 0, 1/4, ...`), not the integer secant numbers.
//! - `0^0 = 1` in every power sum.

pub mod bernoulli_euler;
pub mod combinat;
mod error;
pub mod identities;
pub mod padic;
pub mod polynomial;
pub mod power_sums;
pub mod rational;
pub mod series;

pub use bernoulli_euler::{
    bernoulli_number, bernoulli_polynomial, bosonic_integral, euler_number, euler_polynomial,
    fermionic_integral, verify_shift_bosonic, verify_shift_fermionic, BernoulliCache, EulerCache,
};
pub use combinat::{binomial, factorial};
pub use error::{Error, Result};
pub use identities::{ReportParams, Side, SymmetryParams, VerificationReport};
pub use padic::{PadicScalar, Prime, QParameter, Valuation};
pub use polynomial::Polynomial;
pub use power_sums::{alt_power_sum_closed, alt_power_sum_direct, power_sum_closed, power_sum_direct};
pub use rational::Rational;
pub use series::TruncatedSeries;
