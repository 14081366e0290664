//! Dense univariate polynomials with rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::combinat::binomial;
use crate::rational::Rational;

/// Coefficient `i` multiplies `x^i`. Trailing zeros are always trimmed, so the
/// zero polynomial is the empty list and has no degree.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "Vec<Rational>", into = "Vec<Rational>")]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::new(vec![c])
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Polynomial::monomial(Rational::one(), 1)
    }

    /// `c * x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Polynomial::new(coeffs)
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Polynomial {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from(i as u64))
                .collect(),
        )
    }

    /// `q(x) = p(x + a)`.
    ///
    /// Coefficient `j` of the result is `sum_{i >= j} p_i C(i, j) a^(i-j)`.
    pub fn shift(&self, a: &Rational) -> Polynomial {
        let n = self.coeffs.len();
        let powers: Vec<Rational> = std::iter::successors(Some(Rational::one()), |p| Some(p * a))
            .take(n)
            .collect();
        let out = (0..n)
            .map(|j| {
                (j..n)
                    .map(|i| {
                        &self.coeffs[i]
                            * &powers[i - j]
                            * Rational::from(binomial(i as u64, j as u64))
                    })
                    .sum()
            })
            .collect();
        Polynomial::new(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }
}

/// `p(x + a)`; see [`Polynomial::shift`].
pub fn poly_shift(p: &Polynomial, a: &Rational) -> Polynomial {
    p.shift(a)
}

impl From<Vec<Rational>> for Polynomial {
    fn from(coeffs: Vec<Rational>) -> Self {
        Polynomial::new(coeffs)
    }
}

impl From<Polynomial> for Vec<Rational> {
    fn from(p: Polynomial) -> Self {
        p.coeffs
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Polynomial {
    /// Descending powers, e.g. `x^3 - 3/2*x^2 + 3/4*x - 1/8`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let x = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            if i == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{x}")?;
            } else {
                write!(f, "{mag}*{x}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(cs: &[(i64, i64)]) -> Polynomial {
        Polynomial::new(cs.iter().map(|&(n, d)| Rational::new(n, d)).collect())
    }

    #[test]
    fn trims_trailing_zeros() {
        let p = poly(&[(1, 1), (0, 1), (0, 1)]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(poly(&[(0, 1)]).degree(), None);
        assert!(Polynomial::zero().is_zero());
    }

    #[test]
    fn shift_square_by_one() {
        let x2 = Polynomial::monomial(Rational::one(), 2);
        assert_eq!(x2.shift(&Rational::one()), poly(&[(1, 1), (2, 1), (1, 1)]));
    }

    #[test]
    fn shift_by_zero_is_identity() {
        let p = poly(&[(3, 7), (-2, 1), (0, 1), (5, 3)]);
        assert_eq!(p.shift(&Rational::zero()), p);
    }

    #[test]
    fn shift_cube_by_minus_half() {
        // (x - 1/2)^3 expanded by hand with C(3, k).
        let x3 = Polynomial::monomial(Rational::one(), 3);
        let expected = poly(&[(-1, 8), (3, 4), (-3, 2), (1, 1)]);
        assert_eq!(x3.shift(&Rational::new(-1, 2)), expected);
    }

    #[test]
    fn display_and_serde() {
        let p = poly(&[(-1, 8), (3, 4), (-3, 2), (1, 1)]);
        assert_eq!(p.to_string(), "x^3 - 3/2*x^2 + 3/4*x - 1/8");
        assert_eq!(poly(&[(1, 6), (-1, 1), (1, 1)]).to_string(), "x^2 - x + 1/6");
        assert_eq!(poly(&[(0, 1), (-1, 1)]).to_string(), "-x");
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"["-1/8","3/4","-3/2","1"]"#);
        let back: Polynomial = serde_json::from_str(r#"["1","0","0"]"#).unwrap();
        assert_eq!(back, Polynomial::one());
    }

    #[test]
    fn derivative_of_cubic() {
        let p = poly(&[(5, 1), (1, 2), (0, 1), (2, 3)]);
        assert_eq!(p.derivative(), poly(&[(1, 2), (0, 1), (2, 1)]));
        assert!(Polynomial::one().derivative().is_zero());
    }

    fn rational() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..12).prop_map(|(n, d)| Rational::new(n, d))
    }

    fn polynomial() -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec(rational(), 0..=11).prop_map(Polynomial::new)
    }

    proptest! {
        #[test]
        fn shift_round_trip(p in polynomial(), a in rational()) {
            prop_assert_eq!(p.shift(&a).shift(&-&a), p);
        }

        #[test]
        fn shift_agrees_with_pointwise_evaluation(p in polynomial(), a in rational(), x in rational()) {
            prop_assert_eq!(p.shift(&a).eval(&x), p.eval(&(&x + &a)));
        }

        #[test]
        fn product_evaluates_pointwise(p in polynomial(), q in polynomial(), x in rational()) {
            prop_assert_eq!((&p * &q).eval(&x), p.eval(&x) * q.eval(&x));
            prop_assert_eq!((&p - &q).eval(&x), p.eval(&x) - q.eval(&x));
        }
    }
}
