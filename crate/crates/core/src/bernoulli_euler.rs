//! Bernoulli and Euler numbers and polynomials, and the two integral
//! operators on polynomials they define.
//!
//! The bosonic (Volkenborn) integral sends `x^n` to `B_n`; the fermionic
//! integral sends `x^n` to `E_n = E_n(0)`. Both are extended linearly to
//! polynomial integrands, which is the only class of integrand handled here.
//!
//! Numbers come from the triangular recurrences
//!
//! ```text
//! sum_{k=0}^{n} C(n+1, k) B_k = 0          (n >= 1),  B_0 = 1
//! 2 E_n + sum_{k=0}^{n-1} C(n, k) E_k = 0  (n >= 1),  E_0 = 1
//! ```
//!
//! which fix the conventions `B_1 = -1/2` and `E_1 = -1/2`.

use std::sync::{LazyLock, RwLock};

use crate::combinat::binomial;
use crate::identities::{ReportParams, VerificationReport};
use crate::polynomial::Polynomial;
use crate::rational::Rational;

fn binom(n: usize, k: usize) -> Rational {
    Rational::from(binomial(n as u64, k as u64))
}

/// Grow-on-demand memo table. Entries are written once; a reader that loses
/// the race to extend the table sees the winner's values, which are the same
/// because the recurrence is deterministic.
struct Memo {
    values: RwLock<Vec<Rational>>,
    next: fn(&[Rational]) -> Rational,
}

impl Memo {
    fn new(next: fn(&[Rational]) -> Rational) -> Self {
        Memo {
            values: RwLock::new(Vec::new()),
            next,
        }
    }

    fn upto(&self, n: usize) -> Vec<Rational> {
        {
            let values = self.values.read().expect("memo lock poisoned");
            if values.len() > n {
                return values[..=n].to_vec();
            }
        }
        let mut values = self.values.write().expect("memo lock poisoned");
        while values.len() <= n {
            let v = (self.next)(&values);
            values.push(v);
        }
        values[..=n].to_vec()
    }

    fn get(&self, n: usize) -> Rational {
        {
            let values = self.values.read().expect("memo lock poisoned");
            if let Some(v) = values.get(n) {
                return v.clone();
            }
        }
        self.upto(n).pop().expect("upto returns n + 1 values")
    }
}

fn next_bernoulli(prev: &[Rational]) -> Rational {
    let n = prev.len();
    if n == 0 {
        return Rational::one();
    }
    let s: Rational = prev.iter().enumerate().map(|(k, b)| binom(n + 1, k) * b).sum();
    -s / Rational::from((n + 1) as u64)
}

fn next_euler(prev: &[Rational]) -> Rational {
    let n = prev.len();
    if n == 0 {
        return Rational::one();
    }
    let s: Rational = prev.iter().enumerate().map(|(k, e)| binom(n, k) * e).sum();
    -s / Rational::from(2u64)
}

/// Table of `B_n`, thread-safe.
pub struct BernoulliCache(Memo);

impl BernoulliCache {
    pub fn new() -> Self {
        BernoulliCache(Memo::new(next_bernoulli))
    }

    pub fn get(&self, n: usize) -> Rational {
        self.0.get(n)
    }

    /// `B_0, ..., B_n`.
    pub fn upto(&self, n: usize) -> Vec<Rational> {
        self.0.upto(n)
    }
}

impl Default for BernoulliCache {
    fn default() -> Self {
        Self::new()
    }
}

/// Table of `E_n = E_n(0)`, thread-safe.
pub struct EulerCache(Memo);

impl EulerCache {
    pub fn new() -> Self {
        EulerCache(Memo::new(next_euler))
    }

    pub fn get(&self, n: usize) -> Rational {
        self.0.get(n)
    }

    pub fn upto(&self, n: usize) -> Vec<Rational> {
        self.0.upto(n)
    }
}

impl Default for EulerCache {
    fn default() -> Self {
        Self::new()
    }
}

static BERNOULLI: LazyLock<BernoulliCache> = LazyLock::new(BernoulliCache::new);
static EULER: LazyLock<EulerCache> = LazyLock::new(EulerCache::new);

/// `B_n`, the coefficient of `t^n / n!` in `t / (e^t - 1)`. Note `B_1 = -1/2`.
pub fn bernoulli_number(n: usize) -> Rational {
    BERNOULLI.get(n)
}

/// `E_n = E_n(0)`, the coefficient of `t^n / n!` in `2 / (e^t + 1)`.
///
/// These are *not* the integer secant numbers: `E_1 = -1/2`, `E_2 = 0`,
/// `E_3 = 1/4`, and every even index past zero vanishes.
pub fn euler_number(n: usize) -> Rational {
    EULER.get(n)
}

fn appell(numbers: &[Rational]) -> Polynomial {
    let n = numbers.len() - 1;
    Polynomial::new((0..=n).map(|j| binom(n, j) * &numbers[n - j]).collect())
}

/// `B_n(x) = sum_k C(n, k) B_k x^(n-k)`.
pub fn bernoulli_polynomial(n: usize) -> Polynomial {
    appell(&BERNOULLI.upto(n))
}

/// `E_n(x) = sum_k C(n, k) E_k x^(n-k)`, generating function
/// `2 e^(xt) / (e^t + 1)`.
pub fn euler_polynomial(n: usize) -> Polynomial {
    appell(&EULER.upto(n))
}

fn integrate(p: &Polynomial, moments: Vec<Rational>) -> Rational {
    p.coefficients().iter().zip(&moments).map(|(c, m)| c * m).sum()
}

/// Volkenborn integral of a polynomial: `x^n -> B_n`, extended linearly.
pub fn bosonic_integral(p: &Polynomial) -> Rational {
    match p.degree() {
        None => Rational::zero(),
        Some(d) => integrate(p, BERNOULLI.upto(d)),
    }
}

/// Fermionic integral of a polynomial: `x^n -> E_n`, extended linearly.
pub fn fermionic_integral(p: &Polynomial) -> Rational {
    match p.degree() {
        None => Rational::zero(),
        Some(d) => integrate(p, EULER.upto(d)),
    }
}

/// Checks `I(f(x + n)) = I(f) + sum_{i<n} f'(i)` for the bosonic integral.
pub fn verify_shift_bosonic(p: &Polynomial, n: u64) -> VerificationReport {
    let lhs = bosonic_integral(&p.shift(&Rational::from(n)));
    let dp = p.derivative();
    let rhs = bosonic_integral(p)
        + (0..n).map(|i| dp.eval(&Rational::from(i))).sum::<Rational>();
    VerificationReport::new(
        "shift_bosonic",
        ReportParams::Shift { poly: p.clone(), n },
        lhs,
        rhs,
    )
}

/// Checks `I(f(x + n)) + (-1)^(n-1) I(f) = 2 sum_{l<n} (-1)^(n-1-l) f(l)`
/// for the fermionic integral.
pub fn verify_shift_fermionic(p: &Polynomial, n: u64) -> VerificationReport {
    let sign = |e: u64| if e.is_multiple_of(2) { Rational::one() } else { -Rational::one() };
    let lhs = fermionic_integral(&p.shift(&Rational::from(n)))
        + sign(n + 1) * fermionic_integral(p);
    let rhs: Rational = (0..n)
        .map(|l| sign(n - 1 - l) * p.eval(&Rational::from(l)))
        .sum::<Rational>()
        * Rational::from(2u64);
    VerificationReport::new(
        "shift_fermionic",
        ReportParams::Shift { poly: p.clone(), n },
        lhs,
        rhs,
    )
}
