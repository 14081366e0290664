//! Finite-precision p-adic numbers.
//!
//! A nonzero [`PadicScalar`] stands for the ball `p^v * u + O(p^(v + r))`
//! where `u` is a unit known modulo `p^r`; `r` is the relative precision and
//! `v + r` the absolute precision. Precision is propagated as follows:
//!
//! - sums keep the smaller absolute precision of the operands, and fail with
//!   [`Error::PrecisionExhausted`] if every known digit cancels;
//! - products and quotients keep the smaller relative precision, so dividing
//!   by something of valuation `v` lowers the absolute precision by `v`.
//!
//! Exact zero is a separate value with infinite valuation.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Prime, Valuation};
use crate::error::{Error, Result};
use crate::rational::{split_prime_power, Rational};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PadicScalar {
    p: Prime,
    /// `None` for exact zero.
    valuation: Option<i64>,
    /// In `[1, p^precision)` and prime to `p`; zero for exact zero.
    unit: BigInt,
    precision: u32,
}

/// How far two p-adic values are known to agree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Agreement {
    /// The valuation of the difference is determined.
    Exact(Valuation),
    /// Every known digit agrees: the difference has valuation at least this.
    AtLeast(i64),
}

impl Agreement {
    /// The largest valuation the difference is guaranteed to have.
    pub fn lower_bound(self) -> Valuation {
        match self {
            Agreement::Exact(v) => v,
            Agreement::AtLeast(a) => Valuation::Finite(a),
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, Agreement::Exact(_))
    }

    /// True when the known digits cannot tell the two values apart.
    pub fn is_indistinguishable(self) -> bool {
        matches!(self, Agreement::AtLeast(_) | Agreement::Exact(Valuation::Infinite))
    }
}

fn modulus(p: Prime, r: u32) -> BigInt {
    num_traits::pow(BigInt::from(p.get()), r as usize)
}

fn p_pow(p: Prime, e: u64) -> BigInt {
    num_traits::pow(BigInt::from(p.get()), e as usize)
}

fn check_precision(precision: u32) -> Result<()> {
    if precision == 0 {
        return Err(Error::Precondition("p-adic precision must be at least 1".into()));
    }
    Ok(())
}

impl PadicScalar {
    pub fn zero(p: Prime, precision: u32) -> Self {
        PadicScalar {
            p,
            valuation: None,
            unit: BigInt::zero(),
            precision,
        }
    }

    pub fn one(p: Prime, precision: u32) -> Result<Self> {
        Self::from_rational(&Rational::one(), p, precision)
    }

    /// Rounds an exact rational to `precision` significant digits.
    pub fn from_rational(r: &Rational, p: Prime, precision: u32) -> Result<Self> {
        check_precision(precision)?;
        if r.is_zero() {
            return Ok(Self::zero(p, precision));
        }
        let (vn, num) = split_prime_power(r.numer(), p.get());
        let (vd, den) = split_prime_power(r.denom(), p.get());
        let m = modulus(p, precision);
        let inv = den
            .modinv(&m)
            .expect("cofactor is prime to p, hence invertible");
        Ok(PadicScalar {
            p,
            valuation: Some(vn as i64 - vd as i64),
            unit: (num * inv).mod_floor(&m),
            precision,
        })
    }

    pub fn from_integer(n: impl Into<BigInt>, p: Prime, precision: u32) -> Result<Self> {
        Self::from_rational(&Rational::from_integer(n), p, precision)
    }

    fn from_parts(p: Prime, valuation: i64, unit: BigInt, precision: u32) -> Self {
        debug_assert!(precision >= 1);
        debug_assert!(!unit.is_zero() && !(&unit % p.get()).is_zero());
        PadicScalar {
            p,
            valuation: Some(valuation),
            unit,
            precision,
        }
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn valuation(&self) -> Valuation {
        self.valuation.map_or(Valuation::Infinite, Valuation::Finite)
    }

    pub fn unit(&self) -> &BigInt {
        &self.unit
    }

    /// Relative precision: number of significant p-adic digits.
    pub fn precision(&self) -> u32 {
        self.precision
    }

    /// `valuation + precision`; `None` for exact zero.
    pub fn absolute_precision(&self) -> Option<i64> {
        self.valuation.map(|v| v + self.precision as i64)
    }

    pub fn is_exact_zero(&self) -> bool {
        self.valuation.is_none()
    }

    /// Drops digits beyond `precision` significant ones. Never adds digits.
    pub fn with_precision(&self, precision: u32) -> Result<Self> {
        check_precision(precision)?;
        let r = precision.min(self.precision);
        Ok(PadicScalar {
            unit: self.unit.mod_floor(&modulus(self.p, r)),
            precision: r,
            ..self.clone()
        })
    }

    /// The rational `p^v * unit` this value is rounded to.
    pub fn representative(&self) -> Rational {
        match self.valuation {
            None => Rational::zero(),
            Some(v) => {
                let scale = Rational::from(p_pow(self.p, v.unsigned_abs()));
                let u = Rational::from(self.unit.clone());
                if v >= 0 {
                    u * scale
                } else {
                    u / scale
                }
            }
        }
    }

    fn same_prime(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            return Err(Error::Precondition(format!(
                "mixing {}-adic and {}-adic values",
                self.p, other.p
            )));
        }
        Ok(())
    }

    pub fn neg(&self) -> Self {
        if self.is_exact_zero() {
            return self.clone();
        }
        let m = modulus(self.p, self.precision);
        PadicScalar {
            unit: (-&self.unit).mod_floor(&m),
            ..self.clone()
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_prime(other)?;
        let (va, vb) = match (self.valuation, other.valuation) {
            (None, _) => return Ok(other.clone()),
            (_, None) => return Ok(self.clone()),
            (Some(a), Some(b)) => (a, b),
        };
        let abs = (va + self.precision as i64).min(vb + other.precision as i64);
        let vmin = va.min(vb);
        let m = modulus(self.p, (abs - vmin) as u32);
        let lift = |u: &BigInt, v: i64| u * p_pow(self.p, (v - vmin) as u64);
        let sum = (lift(&self.unit, va) + lift(&other.unit, vb)).mod_floor(&m);
        if sum.is_zero() {
            return Err(Error::PrecisionExhausted(format!(
                "sum cancels to O({}^{abs})",
                self.p
            )));
        }
        let (w, unit) = split_prime_power(&sum, self.p.get());
        let w = w as i64;
        Ok(Self::from_parts(self.p, vmin + w, unit, (abs - vmin - w) as u32))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_prime(other)?;
        let (va, vb) = match (self.valuation, other.valuation) {
            (Some(a), Some(b)) => (a, b),
            _ => return Ok(Self::zero(self.p, self.precision.min(other.precision))),
        };
        let r = self.precision.min(other.precision);
        let unit = (&self.unit * &other.unit).mod_floor(&modulus(self.p, r));
        Ok(Self::from_parts(self.p, va + vb, unit, r))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.same_prime(other)?;
        let vb = other
            .valuation
            .ok_or_else(|| Error::UndefinedDivision("p-adic division by exact zero".into()))?;
        let va = match self.valuation {
            None => return Ok(self.clone()),
            Some(a) => a,
        };
        let r = self.precision.min(other.precision);
        let m = modulus(self.p, r);
        let inv = other.unit.modinv(&m).expect("units are invertible");
        let unit = (&self.unit * inv).mod_floor(&m);
        Ok(Self::from_parts(self.p, va - vb, unit, r))
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = Self::one(self.p, self.precision)?;
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Valuation of `self - other`, as far as the known digits determine it.
    pub fn agreement(&self, other: &Self) -> Result<Agreement> {
        self.same_prime(other)?;
        if self.is_exact_zero() && other.is_exact_zero() {
            return Ok(Agreement::Exact(Valuation::Infinite));
        }
        match self.sub(other) {
            Ok(d) => Ok(Agreement::Exact(d.valuation())),
            Err(Error::PrecisionExhausted(_)) => {
                let abs = [self.absolute_precision(), other.absolute_precision()]
                    .into_iter()
                    .flatten()
                    .min()
                    .expect("at least one side is inexact");
                Ok(Agreement::AtLeast(abs))
            }
            Err(e) => Err(e),
        }
    }

    /// Valuation of `self - r` for an exact rational `r`.
    pub fn agreement_with_rational(&self, r: &Rational) -> Agreement {
        let diff = self.representative() - r;
        let vd = super::valuation_of_rational(&diff, self.p);
        match self.absolute_precision() {
            None => Agreement::Exact(vd),
            Some(abs) if vd >= Valuation::Finite(abs) => Agreement::AtLeast(abs),
            Some(_) => Agreement::Exact(vd),
        }
    }
}

impl fmt::Debug for PadicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.valuation {
            None => write!(f, "0 ({}-adic, exact)", self.p),
            Some(v) => write!(
                f,
                "{}^{} * {} + O({}^{})",
                self.p,
                v,
                self.unit,
                self.p,
                v + self.precision as i64
            ),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    p: u64,
    val: serde_json::Value,
    unit: String,
    prec: u32,
}

impl Serialize for PadicScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let val = match self.valuation {
            None => serde_json::Value::from("inf"),
            Some(v) => serde_json::Value::from(v),
        };
        Wire {
            p: self.p.get(),
            val,
            unit: self.unit.to_string(),
            prec: self.precision,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PadicScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let w = Wire::deserialize(deserializer)?;
        let p = Prime::new(w.p).map_err(D::Error::custom)?;
        let unit: BigInt = w.unit.parse().map_err(D::Error::custom)?;
        if w.val.as_str() == Some("inf") {
            if !unit.is_zero() {
                return Err(D::Error::custom("exact zero must have unit 0"));
            }
            return Ok(PadicScalar::zero(p, w.prec));
        }
        let v = w
            .val
            .as_i64()
            .ok_or_else(|| D::Error::custom("val must be an integer or \"inf\""))?;
        if w.prec == 0 {
            return Err(D::Error::custom("prec must be positive"));
        }
        let m = modulus(p, w.prec);
        if unit.is_negative() || unit >= m || (&unit % p.get()).is_zero() {
            return Err(D::Error::custom("unit must lie in [1, p^prec) and be prime to p"));
        }
        Ok(PadicScalar::from_parts(p, v, unit, w.prec))
    }
}
