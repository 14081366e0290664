//! Verifiers for the symmetry identities of the bosonic and fermionic
//! integrals.
//!
//! Every verifier evaluates both sides exactly and returns a
//! [`VerificationReport`]. The two sides of a symmetry identity are the same
//! expression with `(w1, w2)` exchanged; the series verifiers compare a
//! closed-form quotient of exponentials (built with
//! [`TruncatedSeries::div_exact`]) against coefficient-wise expansions, which
//! share no code with it.
//!
//! Euler-side identities need odd weights and reject even ones with
//! [`Error::Precondition`].

mod report;

pub use report::{ReportParams, Side, SymmetryParams, VerificationReport};

use crate::bernoulli_euler::{bernoulli_number, bernoulli_polynomial, euler_number, euler_polynomial};
use crate::combinat::binomial;
use crate::error::{Error, Result};
use crate::power_sums::{alt_power_sum_direct, power_sum_direct};
use crate::rational::Rational;
use crate::series::TruncatedSeries;

fn binom(n: usize, k: usize) -> Rational {
    Rational::from(binomial(n as u64, k as u64))
}

fn int(w: u64) -> Rational {
    Rational::from(w)
}

fn require_positive(w: u64, name: &str) -> Result<()> {
    if w == 0 {
        return Err(Error::Precondition(format!("{name} must be at least 1")));
    }
    Ok(())
}

fn require_odd(w: u64, name: &str) -> Result<()> {
    if w.is_multiple_of(2) {
        return Err(Error::Precondition(format!("{name} must be odd, got {w}")));
    }
    Ok(())
}

fn alternate(l: u64, x: Rational) -> Rational {
    if l.is_multiple_of(2) {
        x
    } else {
        -x
    }
}

// ---------------------------------------------------------------------------
// Bosonic side
// ---------------------------------------------------------------------------

/// `sum_{i=0}^{n} C(n,i) B_i(w2 x) S_{n-i}(w1-1) w1^(i-1) w2^(n-i)`
fn power_sum_expansion(n: usize, w1: u64, w2: u64, x: &Rational) -> Rational {
    let y = int(w2) * x;
    (0..=n)
        .map(|i| {
            binom(n, i)
                * bernoulli_polynomial(i).eval(&y)
                * power_sum_direct((n - i) as u32, w1 - 1)
                * int(w1).pow(i as i32 - 1)
                * int(w2).pow((n - i) as i32)
        })
        .sum()
}

/// `w1^(n-1) sum_{i=0}^{w1-1} B_n(w2 x + (w2/w1) i)`
fn shifted_bernoulli_sum(n: usize, w1: u64, w2: u64, x: &Rational) -> Rational {
    let b = bernoulli_polynomial(n);
    let base = int(w2) * x;
    let step = Rational::new(w2 as i64, w1 as i64);
    let s: Rational = (0..w1).map(|i| b.eval(&(&base + &step * int(i)))).sum();
    s * int(w1).pow(n as i32 - 1)
}

/// Power-sum symmetry of Bernoulli polynomials:
/// `sum_i C(n,i) B_i(w2 x) S_{n-i}(w1-1) w1^(i-1) w2^(n-i)` is symmetric in
/// `(w1, w2)`.
pub fn bernoulli_power_sum_symmetry(params: &SymmetryParams) -> Result<VerificationReport> {
    let SymmetryParams { n, w1, w2, x } = params;
    require_positive(*w1, "w1")?;
    require_positive(*w2, "w2")?;
    Ok(VerificationReport::new(
        "bernoulli_power_sum_symmetry",
        ReportParams::Symmetry(params.clone()),
        power_sum_expansion(*n, *w1, *w2, x),
        power_sum_expansion(*n, *w2, *w1, x),
    ))
}

/// The generating-function form of [`bernoulli_power_sum_symmetry`].
///
/// `lhs` is the exponential generating function of the `(w1, w2)` expansion,
/// `rhs` the closed form
/// `t e^(w1 w2 x t) (e^(w1 w2 t) - 1) / ((e^(w1 t) - 1)(e^(w2 t) - 1))`,
/// and `alt` the `(w2, w1)` expansion.
pub fn bernoulli_power_sum_series(
    w1: u64,
    w2: u64,
    x: &Rational,
    order: usize,
) -> Result<VerificationReport> {
    require_positive(w1, "w1")?;
    require_positive(w2, "w2")?;
    let expansion = |a, b| TruncatedSeries::egf(order, |n| power_sum_expansion(n, a, b, x));

    // Numerator and denominator both vanish to second order at t = 0.
    let k = order + 2;
    let w = int(w1 * w2);
    let expm1 = |c: &Rational| {
        TruncatedSeries::exp(c, k)
            .sub(&TruncatedSeries::one(k))
            .expect("same order")
    };
    let t = TruncatedSeries::monomial(Rational::one(), 1, k);
    let num = t
        .mul(&TruncatedSeries::exp(&(&w * x), k))?
        .mul(&expm1(&w))?;
    let den = expm1(&int(w1)).mul(&expm1(&int(w2)))?;
    let closed = num.div_exact(&den, 2)?;

    Ok(VerificationReport::new(
        "bernoulli_power_sum_series",
        ReportParams::Series {
            w1,
            w2,
            x: Some(x.clone()),
            order,
        },
        expansion(w1, w2),
        closed,
    )
    .with_alt(expansion(w2, w1)))
}

/// `B_n = 1/(w1 (1 - w1^n)) sum_{k=0}^{n-1} w1^k C(n,k) B_k S_{n-k}(w1-1)`
/// (Deeba-Rodriguez). Needs `n >= 1` and `w1 >= 2`.
pub fn deeba_rodriguez(n: usize, w1: u64) -> Result<Rational> {
    if w1 <= 1 {
        return Err(Error::UndefinedDivision(format!(
            "w1 = {w1} makes w1 (1 - w1^n) vanish"
        )));
    }
    if n == 0 {
        return Err(Error::UndefinedDivision("n = 0 makes 1 - w1^n vanish".into()));
    }
    let w = int(w1);
    let s: Rational = (0..n)
        .map(|k| {
            w.pow(k as i32)
                * binom(n, k)
                * bernoulli_number(k)
                * power_sum_direct((n - k) as u32, w1 - 1)
        })
        .sum();
    Ok(s / (&w * (Rational::one() - w.pow(n as i32))))
}

/// Shifted-sum symmetry of Bernoulli polynomials:
/// `w1^(n-1) sum_{i<w1} B_n(w2 x + (w2/w1) i)` is symmetric in `(w1, w2)`.
pub fn bernoulli_shifted_sum_symmetry(params: &SymmetryParams) -> Result<VerificationReport> {
    let SymmetryParams { n, w1, w2, x } = params;
    require_positive(*w1, "w1")?;
    require_positive(*w2, "w2")?;
    Ok(VerificationReport::new(
        "bernoulli_shifted_sum_symmetry",
        ReportParams::Symmetry(params.clone()),
        shifted_bernoulli_sum(*n, *w1, *w2, x),
        shifted_bernoulli_sum(*n, *w2, *w1, x),
    ))
}

/// `B_n(w1 x) = w1^(n-1) sum_{i<w1} B_n(x + i/w1)`.
pub fn bernoulli_multiplication(n: usize, w1: u64, x: &Rational) -> Result<VerificationReport> {
    require_positive(w1, "w1")?;
    let b = bernoulli_polynomial(n);
    let lhs = b.eval(&(int(w1) * x));
    let rhs = (0..w1)
        .map(|i| b.eval(&(x + Rational::new(i as i64, w1 as i64))))
        .sum::<Rational>()
        * int(w1).pow(n as i32 - 1);
    Ok(VerificationReport::new(
        "bernoulli_multiplication",
        ReportParams::Symmetry(SymmetryParams::new(n, w1, 1, x.clone())),
        lhs,
        rhs,
    ))
}

// ---------------------------------------------------------------------------
// Fermionic side
// ---------------------------------------------------------------------------

/// `sum_{i=0}^{n} C(n,i) E_i(w2 x) T_{n-i}(w1-1) w1^i w2^(n-i)`
fn alternating_sum_expansion(n: usize, w1: u64, w2: u64, x: &Rational) -> Rational {
    let y = int(w2) * x;
    (0..=n)
        .map(|i| {
            binom(n, i)
                * euler_polynomial(i).eval(&y)
                * alt_power_sum_direct((n - i) as u32, w1 - 1)
                * int(w1).pow(i as i32)
                * int(w2).pow((n - i) as i32)
        })
        .sum()
}

/// `w1^n sum_{l<w1} (-1)^l E_n(w2 x + (w2/w1) l)`
fn shifted_euler_sum(n: usize, w1: u64, w2: u64, x: &Rational) -> Rational {
    let e = euler_polynomial(n);
    let base = int(w2) * x;
    let step = Rational::new(w2 as i64, w1 as i64);
    let s: Rational = (0..w1)
        .map(|l| alternate(l, e.eval(&(&base + &step * int(l)))))
        .sum();
    s * int(w1).pow(n as i32)
}

/// Alternating-power-sum symmetry of Euler polynomials, odd `w1, w2`:
/// `sum_i C(n,i) E_i(w2 x) T_{n-i}(w1-1) w1^i w2^(n-i)` is symmetric.
pub fn euler_alternating_sum_symmetry(params: &SymmetryParams) -> Result<VerificationReport> {
    let SymmetryParams { n, w1, w2, x } = params;
    require_odd(*w1, "w1")?;
    require_odd(*w2, "w2")?;
    Ok(VerificationReport::new(
        "euler_alternating_sum_symmetry",
        ReportParams::Symmetry(params.clone()),
        alternating_sum_expansion(*n, *w1, *w2, x),
        alternating_sum_expansion(*n, *w2, *w1, x),
    ))
}

/// `E_n(w1 x) = sum_i C(n,i) E_i(x) T_{n-i}(w1-1) w1^i`, odd `w1`.
pub fn euler_dilation_expansion(n: usize, w1: u64, x: &Rational) -> Result<VerificationReport> {
    require_odd(w1, "w1")?;
    let lhs = euler_polynomial(n).eval(&(int(w1) * x));
    let rhs: Rational = (0..=n)
        .map(|i| {
            binom(n, i)
                * euler_polynomial(i).eval(x)
                * alt_power_sum_direct((n - i) as u32, w1 - 1)
                * int(w1).pow(i as i32)
        })
        .sum();
    Ok(VerificationReport::new(
        "euler_dilation_expansion",
        ReportParams::Symmetry(SymmetryParams::new(n, w1, 1, x.clone())),
        lhs,
        rhs,
    ))
}

/// `E_n = 1/(1 - w1^n) sum_{i=0}^{n-1} C(n,i) E_i T_{n-i}(w1-1) w1^i` for odd
/// `w1 >= 3` and `n >= 1`.
pub fn euler_number_from_alternating_sums(n: usize, w1: u64) -> Result<Rational> {
    require_odd(w1, "w1")?;
    if w1 == 1 {
        return Err(Error::UndefinedDivision("w1 = 1 makes 1 - w1^n vanish".into()));
    }
    if n == 0 {
        return Err(Error::UndefinedDivision("n = 0 makes 1 - w1^n vanish".into()));
    }
    let w = int(w1);
    let s: Rational = (0..n)
        .map(|i| {
            binom(n, i)
                * euler_number(i)
                * alt_power_sum_direct((n - i) as u32, w1 - 1)
                * w.pow(i as i32)
        })
        .sum();
    Ok(s / (Rational::one() - w.pow(n as i32)))
}

/// Shifted alternating-sum symmetry of Euler polynomials, odd `w1, w2`:
/// `w1^n sum_{l<w1} (-1)^l E_n(w2 x + (w2/w1) l)` is symmetric.
pub fn euler_shifted_sum_symmetry(params: &SymmetryParams) -> Result<VerificationReport> {
    let SymmetryParams { n, w1, w2, x } = params;
    require_odd(*w1, "w1")?;
    require_odd(*w2, "w2")?;
    Ok(VerificationReport::new(
        "euler_shifted_sum_symmetry",
        ReportParams::Symmetry(params.clone()),
        shifted_euler_sum(*n, *w1, *w2, x),
        shifted_euler_sum(*n, *w2, *w1, x),
    ))
}

/// `E_n(w1 x) = w1^n sum_{l<w1} (-1)^l E_n(x + l/w1)`, odd `w1`.
pub fn euler_multiplication(n: usize, w1: u64, x: &Rational) -> Result<VerificationReport> {
    require_odd(w1, "w1")?;
    let e = euler_polynomial(n);
    let lhs = e.eval(&(int(w1) * x));
    let rhs = (0..w1)
        .map(|l| alternate(l, e.eval(&(x + Rational::new(l as i64, w1 as i64)))))
        .sum::<Rational>()
        * int(w1).pow(n as i32);
    Ok(VerificationReport::new(
        "euler_multiplication",
        ReportParams::Symmetry(SymmetryParams::new(n, w1, 1, x.clone())),
        lhs,
        rhs,
    ))
}

// ---------------------------------------------------------------------------
// Generating-function ratios
// ---------------------------------------------------------------------------

/// `sum_k B_k (c t)^k / k!`, i.e. `c t / (e^(c t) - 1)` assembled from the
/// Bernoulli table.
fn bernoulli_egf(c: u64, order: usize) -> TruncatedSeries {
    let c = int(c);
    TruncatedSeries::egf(order, |k| bernoulli_number(k) * c.pow(k as i32))
}

/// Double bosonic integral over the single one:
/// `B(w1 t) B(w2 t) / B(w1 w2 t)` from Bernoulli tables (`lhs`) against
/// `t (e^(w1 w2 t) - 1) / ((e^(w1 t) - 1)(e^(w2 t) - 1))` (`rhs`).
pub fn bosonic_ratio_series(w1: u64, w2: u64, order: usize) -> Result<VerificationReport> {
    require_positive(w1, "w1")?;
    require_positive(w2, "w2")?;
    let lhs = bernoulli_egf(w1, order)
        .mul(&bernoulli_egf(w2, order))?
        .div_exact(&bernoulli_egf(w1 * w2, order), 0)?;

    let k = order + 2;
    let expm1 = |c: u64| {
        TruncatedSeries::exp(&int(c), k)
            .sub(&TruncatedSeries::one(k))
            .expect("same order")
    };
    let t = TruncatedSeries::monomial(Rational::one(), 1, k);
    let rhs = t
        .mul(&expm1(w1 * w2))?
        .div_exact(&expm1(w1).mul(&expm1(w2))?, 2)?;

    Ok(VerificationReport::new(
        "bosonic_ratio_series",
        ReportParams::Series {
            w1,
            w2,
            x: None,
            order,
        },
        lhs,
        rhs,
    ))
}

/// `2 e^(w1 w2 x t) (e^(w1 w2 t) + 1) / ((e^(w1 t) + 1)(e^(w2 t) + 1))` for
/// odd `w1, w2` (`lhs`), against the alternating-power-sum expansion (`rhs`)
/// and the shifted-Euler-sum expansion (`alt`).
pub fn fermionic_ratio_series(
    w1: u64,
    w2: u64,
    x: &Rational,
    order: usize,
) -> Result<VerificationReport> {
    require_odd(w1, "w1")?;
    require_odd(w2, "w2")?;
    let w = int(w1 * w2);
    let exp1p = |c: &Rational| {
        TruncatedSeries::exp(c, order)
            .add(&TruncatedSeries::one(order))
            .expect("same order")
    };
    let num = TruncatedSeries::exp(&(&w * x), order)
        .mul(&exp1p(&w))?
        .scale(&int(2));
    let den = exp1p(&int(w1)).mul(&exp1p(&int(w2)))?;
    let closed = num.div_exact(&den, 0)?;

    let by_power_sums = TruncatedSeries::egf(order, |n| alternating_sum_expansion(n, w1, w2, x));
    let by_shifts = TruncatedSeries::egf(order, |n| shifted_euler_sum(n, w1, w2, x));

    Ok(VerificationReport::new(
        "fermionic_ratio_series",
        ReportParams::Series {
            w1,
            w2,
            x: Some(x.clone()),
            order,
        },
        closed,
        by_power_sums,
    )
    .with_alt(by_shifts))
}
