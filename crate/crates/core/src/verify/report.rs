use std::fmt;

use serde::{Deserialize, Serialize};

use crate::tensor::{Scalar, Tensor2, Tensor3};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Symbolic,
    Numeric,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
}

/// A nonzero residual coefficient. `index` lists `(row, col)` per leg.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub index: Vec<usize>,
    pub value: String,
}

impl Witness {
    pub fn from_tensor2<S: Scalar + fmt::Display>(t: &Tensor2<S>) -> Option<Witness> {
        t.witness().map(|(k, v)| Witness { index: k.to_vec(), value: v.to_string() })
    }

    pub fn from_tensor3<S: Scalar + fmt::Display>(t: &Tensor3<S>) -> Option<Witness> {
        t.witness().map(|(k, v)| Witness { index: k.to_vec(), value: v.to_string() })
    }
}

/// Rows then columns: `(i,k,m|j,l,p)=value`.
impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.index.iter().step_by(2).map(|x| x.to_string()).collect();
        let cols: Vec<String> = self.index.iter().skip(1).step_by(2).map(|x| x.to_string()).collect();
        write!(f, "({}|{})={}", rows.join(","), cols.join(","), self.value)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub identity: String,
    pub mode: Mode,
    pub result: Outcome,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rejected: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_abs_residual: Option<f64>,
    /// Residual divided by `max(1, largest intermediate coefficient)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_rel_residual: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<serde_json::Value>,
}

impl VerifyReport {
    /// Symbolic report: pass iff there is no witness.
    pub fn symbolic(identity: &str, witness: Option<Witness>) -> Self {
        VerifyReport {
            identity: identity.to_string(),
            mode: Mode::Symbolic,
            result: if witness.is_none() { Outcome::Pass } else { Outcome::Fail },
            witness,
            samples: None,
            rejected: None,
            max_abs_residual: None,
            max_rel_residual: None,
            tolerance: None,
            detail: None,
            provenance: None,
        }
    }

    pub fn from_residual2<S: Scalar + fmt::Display>(identity: &str, t: &Tensor2<S>) -> Self {
        Self::symbolic(identity, Witness::from_tensor2(t))
    }

    pub fn from_residual3<S: Scalar + fmt::Display>(identity: &str, t: &Tensor3<S>) -> Self {
        Self::symbolic(identity, Witness::from_tensor3(t))
    }

    pub fn passed(&self) -> bool {
        self.result == Outcome::Pass
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn with_provenance(mut self, p: serde_json::Value) -> Self {
        self.provenance = Some(p);
        self
    }

    /// First failing report of a sequence, else a pass under `identity`.
    pub fn combine(identity: &str, parts: Vec<VerifyReport>) -> Self {
        let details: Vec<String> = parts.iter().map(|p| format!("{}: {}", p.identity, outcome_word(p.result))).collect();
        let failed = parts.into_iter().find(|p| !p.passed());
        let mut out = match failed {
            Some(f) => {
                let mut r = f;
                r.identity = identity.to_string();
                r
            }
            None => Self::symbolic(identity, None),
        };
        out.detail = Some(details.join("; "));
        out
    }
}

fn outcome_word(o: Outcome) -> &'static str {
    match o {
        Outcome::Pass => "pass",
        Outcome::Fail => "fail",
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{:?}] {}", self.identity, self.mode, outcome_word(self.result).to_uppercase())?;
        if let Some(w) = &self.witness {
            write!(f, " witness {w}")?;
        }
        if let (Some(s), Some(r)) = (self.samples, self.max_abs_residual) {
            write!(f, " samples={s} max_abs_residual={r:.3e}")?;
        }
        if let Some(r) = self.max_rel_residual {
            write!(f, " max_rel_residual={r:.3e}")?;
        }
        Ok(())
    }
}
