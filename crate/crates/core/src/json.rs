//! The canonical JSON form of a graded decomposition:
//! `{"lambda":[a,b],"mu":[c,d],"summands":[{"nu":[e,f],"coeffs":[..]}]}`,
//! with summands sorted by (lowest degree, ν).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qseries::{GradedDecomposition, QPolynomial};
use crate::weights::DominantWeight;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SummandJson {
    pub nu: DominantWeight,
    pub coeffs: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DecompositionJson {
    pub lambda: DominantWeight,
    pub mu: DominantWeight,
    pub summands: Vec<SummandJson>,
}

impl DecompositionJson {
    pub fn new(lambda: DominantWeight, mu: DominantWeight, d: &GradedDecomposition) -> Self {
        let summands = d
            .sorted()
            .into_iter()
            .map(|(nu, p)| SummandJson {
                nu,
                coeffs: p.coeffs().to_vec(),
            })
            .collect();
        DecompositionJson { lambda, mu, summands }
    }

    pub fn decomposition(&self) -> GradedDecomposition {
        GradedDecomposition::from_summands(
            self.summands
                .iter()
                .map(|s| (s.nu, QPolynomial::from_coeffs(s.coeffs.clone()))),
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    /// Parses and re-canonicalizes, so that `parse(s).to_json()` is the
    /// canonical form of `s`.
    pub fn parse(s: &str) -> Result<Self> {
        let raw: DecompositionJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(DecompositionJson::new(raw.lambda, raw.mu, &raw.decomposition()))
    }
}
