use serde::{Serialize, Serializer};

use crate::polynomial::Polynomial;
use crate::rational::Rational;
use crate::series::TruncatedSeries;

/// Coefficient index, weights and polynomial argument shared by the symmetry
/// identities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetryParams {
    pub n: usize,
    pub w1: u64,
    pub w2: u64,
    pub x: Rational,
}

impl SymmetryParams {
    pub fn new(n: usize, w1: u64, w2: u64, x: Rational) -> Self {
        SymmetryParams { n, w1, w2, x }
    }

    pub fn swapped(&self) -> Self {
        SymmetryParams {
            w1: self.w2,
            w2: self.w1,
            ..self.clone()
        }
    }
}

/// The parameters a report was produced for.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ReportParams {
    Symmetry(SymmetryParams),
    Series {
        w1: u64,
        w2: u64,
        #[serde(skip_serializing_if = "Option::is_none")]
        x: Option<Rational>,
        order: usize,
    },
    Shift {
        poly: Polynomial,
        n: u64,
    },
    Formula {
        n: usize,
        w1: u64,
    },
}

/// One side of an identity: a number, or a generating function truncated at
/// a common order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Side {
    Scalar(Rational),
    Series(TruncatedSeries),
}

impl Serialize for Side {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Side::Scalar(r) => r.serialize(serializer),
            Side::Series(s) => s.serialize(serializer),
        }
    }
}

impl From<Rational> for Side {
    fn from(r: Rational) -> Self {
        Side::Scalar(r)
    }
}

impl From<TruncatedSeries> for Side {
    fn from(s: TruncatedSeries) -> Self {
        Side::Series(s)
    }
}

/// Both sides of an identity plus the verdict.
///
/// `pass` is derived, never supplied: it holds exactly when every side present
/// is structurally equal to `lhs`. Serializes to one JSON object
/// `{identity, params, lhs, rhs, pass}`, with an extra `alt` key for the
/// three-way series checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    identity: String,
    params: ReportParams,
    lhs: Side,
    rhs: Side,
    #[serde(skip_serializing_if = "Option::is_none")]
    alt: Option<Side>,
    pass: bool,
}

impl VerificationReport {
    pub fn new(
        identity: impl Into<String>,
        params: ReportParams,
        lhs: impl Into<Side>,
        rhs: impl Into<Side>,
    ) -> Self {
        let (lhs, rhs) = (lhs.into(), rhs.into());
        let pass = lhs == rhs;
        VerificationReport {
            identity: identity.into(),
            params,
            lhs,
            rhs,
            alt: None,
            pass,
        }
    }

    /// Adds a third independently computed side that must also agree.
    pub fn with_alt(mut self, alt: impl Into<Side>) -> Self {
        let alt = alt.into();
        self.pass = self.lhs == self.rhs && self.lhs == alt;
        self.alt = Some(alt);
        self
    }

    pub fn identity(&self) -> &str {
        &self.identity
    }

    pub fn params(&self) -> &ReportParams {
        &self.params
    }

    pub fn lhs(&self) -> &Side {
        &self.lhs
    }

    pub fn rhs(&self) -> &Side {
        &self.rhs
    }

    pub fn alt(&self) -> Option<&Side> {
        self.alt.as_ref()
    }

    pub fn pass(&self) -> bool {
        self.pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }
}
