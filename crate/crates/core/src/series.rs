//! Truncated formal power series over the rationals.
//!
//! A [`TruncatedSeries`] of order `K` is an element of `Q[t] / (t^(K+1))`:
//! exactly `K + 1` coefficients, with every product truncated past `t^K`.
//! This is where all the exponential generating functions live.
//!
//! Division handles the usual case in generating-function identities where
//! numerator and denominator both vanish at `t = 0`: both sides are shifted
//! down by the denominator's valuation and the remaining unit is inverted
//! term by term (see [`TruncatedSeries::div_exact`]).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinat::factorial;
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Rational>", into = "Vec<Rational>")]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Pads with zeros or truncates so that exactly `order + 1` coefficients
    /// remain.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<Rational>) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        TruncatedSeries { coeffs }
    }

    /// Builds the series `sum_k f(k) t^k` up to `t^order`.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rational) -> Self {
        TruncatedSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    /// Builds the exponential generating function `sum_k a_k t^k / k!`.
    pub fn egf(order: usize, mut a: impl FnMut(usize) -> Rational) -> Self {
        let mut fact = Rational::one();
        TruncatedSeries::from_fn(order, |k| {
            if k > 0 {
                fact *= &Rational::from(k as u64);
            }
            a(k) / &fact
        })
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries::from_coeffs(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        TruncatedSeries::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        TruncatedSeries::from_coeffs(order, vec![c])
    }

    /// `c * t^k` (zero if `k > order`).
    pub fn monomial(c: Rational, k: usize, order: usize) -> Self {
        let mut s = TruncatedSeries::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// `e^(c t)`: coefficient `k` is `c^k / k!`.
    pub fn exp(c: &Rational, order: usize) -> Self {
        let mut term = Rational::one();
        TruncatedSeries::from_fn(order, |k| {
            if k > 0 {
                term = &term * c / Rational::from(k as u64);
            }
            term.clone()
        })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    /// `k! * coeff(k)` for every `k`: the sequence this series is the
    /// exponential generating function of.
    pub fn egf_coefficients(&self) -> Vec<Rational> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * Rational::from(factorial(k as u64)))
            .collect()
    }

    /// Index of the first nonzero coefficient, `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    /// Reduce to a lower order. Asking for a higher order is an error since
    /// the missing coefficients are unknown.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: order,
            });
        }
        Ok(TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncatedSeries::from_fn(self.order(), |k| {
            (0..=k).map(|i| &self.coeffs[i] * &other.coeffs[k - i]).sum()
        }))
    }

    /// Exact quotient `self / den` when `den` vanishes to order exactly
    /// `t_shift` at zero and `self` vanishes to at least that order.
    ///
    /// Both operands are divided by `t^t_shift` first, so the result has order
    /// `self.order() - t_shift` and satisfies `q * den = self` modulo
    /// `t^(self.order() - t_shift + 1)`.
    pub fn div_exact(&self, den: &Self, t_shift: usize) -> Result<Self> {
        self.check_order(den)?;
        if t_shift > self.order() {
            return Err(Error::Precondition(format!(
                "shift {t_shift} exceeds series order {}",
                self.order()
            )));
        }
        match den.valuation() {
            Some(v) if v == t_shift => {}
            found => {
                return Err(Error::DegenerateDivisor(match found {
                    Some(v) => format!("expected valuation {t_shift}, found {v}"),
                    None => "zero series".into(),
                }))
            }
        }
        if let Some(v) = self.valuation() {
            if v < t_shift {
                return Err(Error::NotDivisible {
                    needed: t_shift,
                    found: v,
                });
            }
        }
        let num = &self.coeffs[t_shift..];
        let den = &den.coeffs[t_shift..];
        let lead = den[0].recip()?;
        let mut q: Vec<Rational> = Vec::with_capacity(num.len());
        for k in 0..num.len() {
            let mut acc = num[k].clone();
            for i in 1..=k {
                acc -= &(&den[i] * &q[k - i]);
            }
            q.push(acc * &lead);
        }
        Ok(TruncatedSeries { coeffs: q })
    }
}

/// `e^(c t)` to order `order`.
pub fn series_exp(c: &Rational, order: usize) -> TruncatedSeries {
    TruncatedSeries::exp(c, order)
}

pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
    a.mul(b)
}

pub fn series_div_exact(
    num: &TruncatedSeries,
    den: &TruncatedSeries,
    t_shift: usize,
) -> Result<TruncatedSeries> {
    num.div_exact(den, t_shift)
}

impl TryFrom<Vec<Rational>> for TruncatedSeries {
    type Error = Error;

    fn try_from(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Precondition("a series needs at least one coefficient".into()));
        }
        Ok(TruncatedSeries { coeffs })
    }
}

impl From<TruncatedSeries> for Vec<Rational> {
    fn from(s: TruncatedSeries) -> Self {
        s.coeffs
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries{:?} + O(t^{})", self.coeffs, self.order() + 1)
    }
}
