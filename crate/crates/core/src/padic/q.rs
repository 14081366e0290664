//! q-deformed path: q-brackets, q-Riemann sums and the Carlitz recursion.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{Prime, PadicScalar, Valuation};
use crate::combinat::binomial;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A p-adic `q` with `|1 - q|_p < 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct QParameter {
    q: PadicScalar,
}

impl QParameter {
    /// Accepts `q` when `q - 1` has positive valuation, or when `q` is
    /// indistinguishable from 1 at its precision.
    pub fn new(q: PadicScalar) -> Result<Self> {
        let one = PadicScalar::one(q.prime(), q.precision())?;
        match q.sub(&one) {
            Ok(d) if d.valuation() >= Valuation::Finite(1) => Ok(QParameter { q }),
            Ok(d) => Err(Error::Precondition(format!(
                "q - 1 must have positive valuation, got {}",
                d.valuation()
            ))),
            Err(Error::PrecisionExhausted(_)) => Ok(QParameter { q }),
            Err(e) => Err(e),
        }
    }

    /// `q = 1 + p^j` carried to `precision` digits.
    pub fn one_plus_prime_power(p: Prime, j: u32, precision: u32) -> Result<Self> {
        if j == 0 {
            return Err(Error::Precondition("q = 1 + p^j needs j >= 1".into()));
        }
        let pj = num_traits::pow(BigInt::from(p.get()), j as usize);
        let q = PadicScalar::from_rational(&Rational::from(pj + 1), p, precision)?;
        QParameter::new(q)
    }

    pub fn value(&self) -> &PadicScalar {
        &self.q
    }

    pub fn prime(&self) -> Prime {
        self.q.prime()
    }

    pub fn precision(&self) -> u32 {
        self.q.precision()
    }

    fn with_precision(&self, precision: u32) -> Result<Self> {
        Ok(QParameter {
            q: self.q.with_precision(precision)?,
        })
    }
}

/// Integer arithmetic modulo `p^r`, used for sums of p-adic integers where
/// intermediate cancellation must not cost precision.
struct Residues {
    p: Prime,
    r: u32,
    m: BigInt,
    q: BigInt,
}

impl Residues {
    /// `q` is a unit, so its digits modulo `p^precision` are its unit part.
    fn new(q: &QParameter) -> Self {
        let p = q.prime();
        let r = q.precision();
        Residues {
            p,
            r,
            m: num_traits::pow(BigInt::from(p.get()), r as usize),
            q: q.value().unit().clone(),
        }
    }

    fn reduce(&self, n: BigInt) -> BigInt {
        n.mod_floor(&self.m)
    }

    /// `(q^x, [x]_q)` by binary splitting: `[2a] = [a](1 + q^a)`,
    /// `[a + 1] = 1 + q[a]`.
    fn power_and_bracket(&self, x: u64) -> (BigInt, BigInt) {
        let mut qx = BigInt::one();
        let mut br = BigInt::zero();
        for bit in (0..u64::BITS - x.leading_zeros()).rev() {
            br = self.reduce(&br * (BigInt::one() + &qx));
            qx = self.reduce(&qx * &qx);
            if (x >> bit) & 1 == 1 {
                br = self.reduce(BigInt::one() + &self.q * br);
                qx = self.reduce(&qx * &self.q);
            }
        }
        (qx, br)
    }

    /// The residue as a scalar known to absolute precision `r`.
    fn to_scalar(&self, n: &BigInt) -> Result<PadicScalar> {
        if n.is_zero() {
            return Err(Error::PrecisionExhausted(format!(
                "value vanishes modulo {}^{}",
                self.p, self.r
            )));
        }
        let x = PadicScalar::from_rational(&Rational::from(n.clone()), self.p, self.r)?;
        let v = x.valuation().finite().expect("nonzero") as u32;
        x.with_precision(self.r - v)
    }
}

/// `[x]_q = 1 + q + ... + q^(x-1)`; exact zero for `x = 0`.
///
/// Fails with precision exhaustion when `[x]_q` vanishes to the precision of
/// `q`, which needs `v_p(x) >= precision`.
pub fn q_bracket(x: u64, q: &QParameter) -> Result<PadicScalar> {
    if x == 0 {
        return Ok(PadicScalar::zero(q.prime(), q.precision()));
    }
    let res = Residues::new(q);
    res.to_scalar(&res.power_and_bracket(x).1)
}

/// `[p^N]_q^-1 * sum_{x < p^N} [x]_q^m q^x`, with `q` rounded to `precision`
/// digits. Tends to `beta_{m,q}` as `N` grows.
pub fn q_integral_approx(m: u32, q: &QParameter, big_n: u32, precision: u32) -> Result<PadicScalar> {
    let q = q.with_precision(precision)?;
    let res = Residues::new(&q);
    let terms = super::terms(q.prime(), big_n)?;
    let mut sum = BigInt::zero();
    let mut qx = BigInt::one();
    let mut br = BigInt::zero();
    for _ in 0..terms {
        // [0]_q^0 = 1 like every other 0^0 here.
        let term = if m == 0 {
            qx.clone()
        } else {
            num_traits::pow(br.clone(), m as usize) * &qx
        };
        sum = res.reduce(sum + term);
        br = res.reduce(BigInt::one() + &res.q * br);
        qx = res.reduce(qx * &res.q);
    }
    let normalizer = res.to_scalar(&br)?;
    res.to_scalar(&sum)?.div(&normalizer)
}

/// Memoized `beta_{m,q}` for one `q`, filled by the Carlitz recursion
/// `beta_k = (delta_{k,1} - q sum_{i<k} C(k,i) q^i beta_i) / (q^(k+1) - 1)`.
pub struct CarlitzCache {
    q: QParameter,
    values: RwLock<Vec<PadicScalar>>,
}

impl CarlitzCache {
    pub fn new(q: QParameter) -> Result<Self> {
        let one = PadicScalar::one(q.prime(), q.precision())?;
        Ok(CarlitzCache {
            q,
            values: RwLock::new(vec![one]),
        })
    }

    pub fn q(&self) -> &QParameter {
        &self.q
    }

    pub fn get(&self, m: usize) -> Result<PadicScalar> {
        if let Some(b) = self.values.read().expect("cache poisoned").get(m) {
            return Ok(b.clone());
        }
        let mut values = self.values.write().expect("cache poisoned");
        while values.len() <= m {
            let next = self.next(&values)?;
            values.push(next);
        }
        Ok(values[m].clone())
    }

    fn next(&self, prev: &[PadicScalar]) -> Result<PadicScalar> {
        let k = prev.len();
        let q = self.q.value();
        let (p, prec) = (q.prime(), q.precision());
        let scalar = |r: Rational| PadicScalar::from_rational(&r, p, prec);

        let one = PadicScalar::one(p, prec)?;
        let denom = q.pow(k as u32 + 1)?.sub(&one).map_err(|_| {
            Error::DegenerateDivisor(format!("q^{} - 1 vanishes at the precision of q", k + 1))
        })?;
        let mut sum = PadicScalar::zero(p, prec);
        let mut qi = one.clone();
        for (i, beta) in prev.iter().enumerate() {
            let c = scalar(Rational::from(binomial(k as u64, i as u64)))?;
            sum = sum.add(&c.mul(&qi)?.mul(beta)?)?;
            qi = qi.mul(q)?;
        }
        let mut numer = q.mul(&sum)?.neg();
        if k == 1 {
            numer = numer.add(&one)?;
        }
        numer.div(&denom)
    }
}

/// `beta_{m,q}`, the Carlitz q-Bernoulli number.
pub fn carlitz_beta(m: usize, q: &QParameter) -> Result<PadicScalar> {
    CarlitzCache::new(q.clone())?.get(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::{valuation_of_rational, Agreement};
    use proptest::prelude::*;

    fn prime(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn q1p(p: u64, j: u32, prec: u32) -> QParameter {
        QParameter::one_plus_prime_power(prime(p), j, prec).unwrap()
    }

    fn agrees(x: &PadicScalar, r: &Rational) -> bool {
        x.agreement_with_rational(r).is_indistinguishable()
    }

    #[test]
    fn q_parameter_validation() {
        let bad = PadicScalar::from_rational(&Rational::from(2i64), prime(5), 6).unwrap();
        assert!(matches!(QParameter::new(bad), Err(Error::Precondition(_))));
        let one = PadicScalar::one(prime(5), 6).unwrap();
        assert!(QParameter::new(one).is_ok());
        assert!(QParameter::one_plus_prime_power(prime(5), 0, 6).is_err());
    }

    #[test]
    fn brackets() {
        let q = q1p(5, 1, 8);
        assert!(q_bracket(0, &q).unwrap().is_exact_zero());
        assert!(agrees(&q_bracket(1, &q).unwrap(), &Rational::one()));
        assert!(agrees(&q_bracket(3, &q).unwrap(), &Rational::from(43i64)));
        // [25]_q = (6^25 - 1) / 5 has valuation 2.
        let b = q_bracket(25, &q).unwrap();
        assert_eq!(b.valuation(), Valuation::Finite(2));
        let exact = (Rational::from(6i64).pow(25) - Rational::one()) / Rational::from(5i64);
        assert!(agrees(&b, &exact));
    }

    /// `[x]_q` straight from the geometric sum in exact rationals.
    fn bracket_oracle(x: u64, q: &Rational) -> Rational {
        (0..x).map(|i| q.pow(i as i32)).sum()
    }

    proptest! {
        #[test]
        fn bracket_addition_law(x in 0u64..=50, y in 0u64..=50, p in prop::sample::select(vec![3u64, 5, 7]), j in 1u32..3) {
            let q = q1p(p, j, 20);
            let lhs = q_bracket(x + y, &q).unwrap();
            let qx = q.value().pow(x as u32).unwrap();
            let rhs = q_bracket(x, &q).unwrap().add(&qx.mul(&q_bracket(y, &q).unwrap()).unwrap());
            match rhs {
                Ok(rhs) => prop_assert!(lhs.agreement(&rhs).unwrap().is_indistinguishable()),
                Err(e) => prop_assert!(x + y == 0, "{e}"),
            }
            let qr = Rational::from(p.pow(j) as i64 + 1);
            if x > 0 {
                prop_assert!(agrees(&q_bracket(x, &q).unwrap(), &bracket_oracle(x, &qr)));
            }
        }
    }

    /// `beta_{m,q}` from Carlitz's closed form
    /// `(1-q)^-m sum_{i<=m} (-1)^i C(m,i) (i+1) / [i+1]_q`, in exact rationals.
    fn carlitz_oracle(m: u32, q: &Rational) -> Rational {
        let s: Rational = (0..=m)
            .map(|i| {
                let sign = if i % 2 == 0 { Rational::one() } else { -Rational::one() };
                sign * Rational::from(binomial(m as u64, i as u64))
                    * Rational::from(i as i64 + 1)
                    / bracket_oracle(i as u64 + 1, q)
            })
            .sum();
        s / (Rational::one() - q).pow(m as i32)
    }

    #[test]
    fn carlitz_low_orders() {
        let q = q1p(5, 1, 20);
        assert!(agrees(&carlitz_beta(0, &q).unwrap(), &Rational::one()));
        assert!(agrees(&carlitz_beta(1, &q).unwrap(), &Rational::new(-1, 7)));
    }

    #[test]
    fn carlitz_matches_closed_form() {
        for (p, j) in [(3u64, 1u32), (3, 2), (5, 1), (7, 1), (2, 2)] {
            let q = q1p(p, j, 40);
            let qr = Rational::from(p.pow(j) as i64 + 1);
            let cache = CarlitzCache::new(q).unwrap();
            for m in 0..=8 {
                let beta = cache.get(m).unwrap();
                let exact = carlitz_oracle(m as u32, &qr);
                assert!(agrees(&beta, &exact), "p={p} j={j} m={m}: {beta:?} vs {exact}");
            }
        }
    }

    #[test]
    fn carlitz_recursion_needs_q_not_one() {
        let one = QParameter::new(PadicScalar::one(prime(5), 6).unwrap()).unwrap();
        assert!(matches!(carlitz_beta(1, &one), Err(Error::DegenerateDivisor(_))));
        assert!(carlitz_beta(0, &one).is_ok());
    }

    #[test]
    fn q_integral_examples() {
        let q = q1p(5, 1, 8);
        let zero = q_integral_approx(0, &q, 2, 8).unwrap();
        assert!(agrees(&zero, &Rational::one()));

        let beta1 = carlitz_beta(1, &q1p(5, 1, 32)).unwrap();
        let approx = q_integral_approx(1, &q, 2, 8).unwrap();
        // The Riemann sum misses beta_1 by about p^N.
        match approx.agreement(&beta1).unwrap() {
            Agreement::Exact(v) => assert!(v >= Valuation::Finite(2), "{v}"),
            Agreement::AtLeast(_) => {}
        }

        let q3 = q1p(3, 1, 10);
        let beta3 = carlitz_beta(3, &q1p(3, 1, 32)).unwrap();
        let approx = q_integral_approx(3, &q3, 3, 10).unwrap();
        let v = approx.agreement(&beta3).unwrap().lower_bound();
        assert!(v >= Valuation::Finite(2), "{v}");
    }

    #[test]
    fn q_integral_tends_to_bernoulli_for_q_near_one() {
        // With q = 1 + p^j the q-sum differs from the ordinary Riemann sum
        // by O(p^j), so for large j it reproduces the Volkenborn approximant.
        let p = prime(3);
        let q = q1p(3, 12, 20);
        let a = q_integral_approx(2, &q, 2, 20).unwrap();
        let exact = crate::padic::volkenborn_approx(2, p, 2).unwrap();
        let v = a.agreement_with_rational(&exact).lower_bound();
        assert!(v >= Valuation::Finite(8), "{v}");
        assert_eq!(valuation_of_rational(&exact, p), Valuation::Finite(-1));
    }
}
