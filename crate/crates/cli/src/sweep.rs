//! Verification sweeps: the identity registry and the parameter grid.

use std::fmt::Write as _;

use volkenborn::identities::{self, ReportParams, Side, SymmetryParams, VerificationReport};
use volkenborn::{bernoulli_number, euler_number, Polynomial, Rational};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    PowerSumSymmetry,
    ShiftedSumSymmetry,
    BernoulliMultiplication,
    PowerSumSeries,
    BosonicRatioSeries,
    BernoulliFromPowerSums,
    AlternatingSumSymmetry,
    ShiftedAlternatingSymmetry,
    EulerDilation,
    EulerMultiplication,
    EulerFromAlternatingSums,
    FermionicRatioSeries,
    ShiftBosonic,
    ShiftFermionic,
}

/// How an identity's grid is laid out.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Shape {
    /// `(n, w1, w2, x)`
    Symmetry,
    /// `(n, w1, x)`
    SingleWeight,
    /// `(w1, w2, x)` at a fixed series order.
    Series { uses_x: bool },
    /// `(n, w1)` for a formula that reproduces a cached number.
    Formula,
    /// Monomials `x^k`, `k <= n_max`, shifted by `1..=w_max`.
    Shift,
}

const REGISTRY: &[(Identity, &str, &[&str])] = &[
    (Identity::PowerSumSymmetry, "power-sum-symmetry", &["corollary2"]),
    (Identity::ShiftedSumSymmetry, "shifted-sum-symmetry", &["corollary4"]),
    (Identity::BernoulliMultiplication, "bernoulli-multiplication", &[]),
    (Identity::PowerSumSeries, "power-sum-series", &["theorem1"]),
    (Identity::BosonicRatioSeries, "bosonic-ratio-series", &[]),
    (Identity::BernoulliFromPowerSums, "bernoulli-from-power-sums", &["deeba-rodriguez"]),
    (Identity::AlternatingSumSymmetry, "alternating-sum-symmetry", &["theorem5"]),
    (Identity::ShiftedAlternatingSymmetry, "shifted-alternating-symmetry", &["theorem7"]),
    (Identity::EulerDilation, "euler-dilation", &["eq30"]),
    (Identity::EulerMultiplication, "euler-multiplication", &[]),
    (Identity::EulerFromAlternatingSums, "euler-from-alternating-sums", &["corollary6"]),
    (Identity::FermionicRatioSeries, "fermionic-ratio-series", &[]),
    (Identity::ShiftBosonic, "shift-bosonic", &[]),
    (Identity::ShiftFermionic, "shift-fermionic", &[]),
];

impl Identity {
    pub fn parse(name: &str) -> Result<Self, CliError> {
        let key = name.trim().to_ascii_lowercase().replace('_', "-");
        REGISTRY
            .iter()
            .find(|(_, n, aliases)| *n == key || aliases.contains(&key.as_str()))
            .map(|(id, _, _)| *id)
            .ok_or_else(|| {
                CliError::Usage(format!(
                    "unknown identity {name:?}; known identities: {}",
                    Identity::names().join(", ")
                ))
            })
    }

    pub fn names() -> Vec<String> {
        REGISTRY
            .iter()
            .map(|(_, n, aliases)| {
                if aliases.is_empty() {
                    n.to_string()
                } else {
                    format!("{n} ({})", aliases.join(", "))
                }
            })
            .collect()
    }

    pub fn name(self) -> &'static str {
        REGISTRY.iter().find(|(id, _, _)| *id == self).expect("registered").1
    }

    /// Identities whose weights must be odd.
    pub fn odd_weights(self) -> bool {
        matches!(
            self,
            Identity::AlternatingSumSymmetry
                | Identity::ShiftedAlternatingSymmetry
                | Identity::EulerDilation
                | Identity::EulerMultiplication
                | Identity::EulerFromAlternatingSums
                | Identity::FermionicRatioSeries
        )
    }

    fn shape(self) -> Shape {
        use Identity::*;
        match self {
            PowerSumSymmetry | ShiftedSumSymmetry | AlternatingSumSymmetry | ShiftedAlternatingSymmetry => {
                Shape::Symmetry
            }
            BernoulliMultiplication | EulerDilation | EulerMultiplication => Shape::SingleWeight,
            PowerSumSeries | FermionicRatioSeries => Shape::Series { uses_x: true },
            BosonicRatioSeries => Shape::Series { uses_x: false },
            BernoulliFromPowerSums | EulerFromAlternatingSums => Shape::Formula,
            ShiftBosonic | ShiftFermionic => Shape::Shift,
        }
    }

    /// Smallest weight the identity is defined for.
    fn min_weight(self) -> u64 {
        match self {
            Identity::BernoulliFromPowerSums => 2,
            Identity::EulerFromAlternatingSums => 3,
            _ => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    JsonLines,
    Csv,
}

#[derive(Clone, Debug)]
pub struct SweepSpec {
    pub identity: Identity,
    pub n_max: usize,
    pub w_max: u64,
    pub x_list: Vec<Rational>,
    pub odd_only: bool,
    pub order: usize,
    pub format: OutputFormat,
}

impl SweepSpec {
    /// Rejects sweeps whose grid cannot be built as asked.
    pub fn validate(&self) -> Result<(), CliError> {
        if self.identity.odd_weights() && !self.odd_only && self.w_max.is_multiple_of(2) {
            return Err(CliError::Usage(format!(
                "{} needs odd weights but --w-max {} is even; pass --odd-only to sweep the odd weights below it",
                self.identity.name(),
                self.w_max
            )));
        }
        if self.w_max == 0 {
            return Err(CliError::Usage("--w-max must be at least 1".into()));
        }
        if self.x_list.is_empty() {
            return Err(CliError::Usage("at least one --x value is needed".into()));
        }
        if self.format == OutputFormat::Csv
            && matches!(self.identity.shape(), Shape::Series { .. } | Shape::Shift)
        {
            return Err(CliError::Usage(format!(
                "csv output is for number grids; use json-lines for {}",
                self.identity.name()
            )));
        }
        Ok(())
    }

    fn weights(&self) -> Vec<u64> {
        let odd = self.odd_only || self.identity.odd_weights();
        (self.identity.min_weight()..=self.w_max)
            .filter(|w| !odd || w % 2 == 1)
            .collect()
    }

    /// Every report in grid order: lexicographic in `(n, w1, w2, x-index)`.
    pub fn run(&self) -> Result<Vec<VerificationReport>, CliError> {
        let ws = self.weights();
        let xs = &self.x_list;
        let id = self.identity;
        let mut out = Vec::new();
        match id.shape() {
            Shape::Symmetry => {
                for n in 0..=self.n_max {
                    for &w1 in &ws {
                        for &w2 in &ws {
                            for x in xs {
                                out.push(symmetry(id, &SymmetryParams::new(n, w1, w2, x.clone()))?);
                            }
                        }
                    }
                }
            }
            Shape::SingleWeight => {
                for n in 0..=self.n_max {
                    for &w in &ws {
                        for x in xs {
                            out.push(single_weight(id, n, w, x)?);
                        }
                    }
                }
            }
            Shape::Series { uses_x } => {
                for &w1 in &ws {
                    for &w2 in &ws {
                        if uses_x {
                            for x in xs {
                                out.push(series(id, w1, w2, Some(x), self.order)?);
                            }
                        } else {
                            out.push(series(id, w1, w2, None, self.order)?);
                        }
                    }
                }
            }
            Shape::Formula => {
                for n in 1..=self.n_max {
                    for &w in &ws {
                        out.push(formula(id, n, w)?);
                    }
                }
            }
            Shape::Shift => {
                for k in 0..=self.n_max {
                    let f = Polynomial::monomial(Rational::one(), k);
                    for s in 1..=self.w_max {
                        out.push(match id {
                            Identity::ShiftBosonic => volkenborn::verify_shift_bosonic(&f, s),
                            _ => volkenborn::verify_shift_fermionic(&f, s),
                        });
                    }
                }
            }
        }
        Ok(out)
    }
}

fn symmetry(id: Identity, p: &SymmetryParams) -> Result<VerificationReport, CliError> {
    let r = match id {
        Identity::PowerSumSymmetry => identities::bernoulli_power_sum_symmetry(p),
        Identity::ShiftedSumSymmetry => identities::bernoulli_shifted_sum_symmetry(p),
        Identity::AlternatingSumSymmetry => identities::euler_alternating_sum_symmetry(p),
        _ => identities::euler_shifted_sum_symmetry(p),
    };
    Ok(r?)
}

fn single_weight(id: Identity, n: usize, w: u64, x: &Rational) -> Result<VerificationReport, CliError> {
    let r = match id {
        Identity::BernoulliMultiplication => identities::bernoulli_multiplication(n, w, x),
        Identity::EulerDilation => identities::euler_dilation_expansion(n, w, x),
        _ => identities::euler_multiplication(n, w, x),
    };
    Ok(r?)
}

fn series(
    id: Identity,
    w1: u64,
    w2: u64,
    x: Option<&Rational>,
    order: usize,
) -> Result<VerificationReport, CliError> {
    let r = match (id, x) {
        (Identity::PowerSumSeries, Some(x)) => identities::bernoulli_power_sum_series(w1, w2, x, order),
        (Identity::FermionicRatioSeries, Some(x)) => identities::fermionic_ratio_series(w1, w2, x, order),
        _ => identities::bosonic_ratio_series(w1, w2, order),
    };
    Ok(r?)
}

fn formula(id: Identity, n: usize, w: u64) -> Result<VerificationReport, CliError> {
    let (name, derived, cached) = match id {
        Identity::BernoulliFromPowerSums => (
            "bernoulli_from_power_sums",
            identities::deeba_rodriguez(n, w)?,
            bernoulli_number(n),
        ),
        _ => (
            "euler_from_alternating_sums",
            identities::euler_number_from_alternating_sums(n, w)?,
            euler_number(n),
        ),
    };
    Ok(VerificationReport::new(name, ReportParams::Formula { n, w1: w }, derived, cached))
}

pub const CSV_HEADER: &str = "identity,n,w1,w2,x,lhs,rhs,pass";

fn scalar(s: &Side) -> String {
    match s {
        Side::Scalar(r) => r.to_string(),
        Side::Series(_) => unreachable!("csv is rejected for series identities"),
    }
}

pub fn csv_row(r: &VerificationReport) -> String {
    let mut row = String::new();
    let (n, w1, w2, x) = match r.params() {
        ReportParams::Symmetry(p) => (p.n.to_string(), p.w1.to_string(), p.w2.to_string(), p.x.to_string()),
        ReportParams::Formula { n, w1 } => (n.to_string(), w1.to_string(), String::new(), String::new()),
        _ => unreachable!("csv is rejected for series and shift identities"),
    };
    write!(
        row,
        "{},{n},{w1},{w2},{x},{},{},{}",
        r.identity(),
        scalar(r.lhs()),
        scalar(r.rhs()),
        r.pass()
    )
    .unwrap();
    row
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(id: Identity, n_max: usize, w_max: u64, odd_only: bool) -> SweepSpec {
        SweepSpec {
            identity: id,
            n_max,
            w_max,
            x_list: vec![Rational::zero()],
            odd_only,
            order: 6,
            format: OutputFormat::JsonLines,
        }
    }

    #[test]
    fn names_and_aliases_resolve() {
        assert_eq!(Identity::parse("corollary2").unwrap(), Identity::PowerSumSymmetry);
        assert_eq!(Identity::parse("power_sum_symmetry").unwrap(), Identity::PowerSumSymmetry);
        assert_eq!(Identity::parse("THEOREM5").unwrap(), Identity::AlternatingSumSymmetry);
        assert!(Identity::parse("theorem99").is_err());
        for (id, name, _) in REGISTRY {
            assert_eq!(Identity::parse(name).unwrap(), *id);
        }
    }

    #[test]
    fn euler_side_weights_are_odd() {
        let s = spec(Identity::AlternatingSumSymmetry, 2, 5, false);
        assert_eq!(s.weights(), [1, 3, 5]);
        assert!(spec(Identity::AlternatingSumSymmetry, 2, 4, false).validate().is_err());
        let s = spec(Identity::AlternatingSumSymmetry, 2, 4, true);
        s.validate().unwrap();
        assert_eq!(s.weights(), [1, 3]);
        assert_eq!(spec(Identity::PowerSumSymmetry, 2, 4, false).weights(), [1, 2, 3, 4]);
        assert_eq!(spec(Identity::EulerFromAlternatingSums, 2, 9, false).weights(), [3, 5, 7, 9]);
    }

    #[test]
    fn grid_order() {
        let mut s = spec(Identity::PowerSumSymmetry, 1, 2, false);
        s.x_list = vec![Rational::zero(), Rational::one()];
        let reports = s.run().unwrap();
        let keys: Vec<_> = reports
            .iter()
            .map(|r| match r.params() {
                ReportParams::Symmetry(p) => (p.n, p.w1, p.w2, p.x.clone()),
                _ => unreachable!(),
            })
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(keys.len(), 2 * 2 * 2 * 2);
    }

    #[test]
    fn every_identity_passes_a_small_grid() {
        for (id, _, _) in REGISTRY {
            let reports = spec(*id, 3, 3, false).run().unwrap();
            assert!(!reports.is_empty(), "{id:?}");
            assert!(reports.iter().all(|r| r.pass()), "{id:?}");
        }
    }
}
