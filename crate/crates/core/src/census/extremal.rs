//! Selecting graphs of a solved corpus by their domination numbers.

use serde::{Deserialize, Serialize};

use super::{Corpus, GraphRecord};
use crate::embedding::{CanonicalCode, PlaneTriangulation};
use crate::error::{Error, Result};
use crate::solvers::{exact_gamma, DominationCertificate};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Predicate {
    /// `γ_c ≠ γ`.
    GammaCDiffersFromGamma,
    /// `γ_c - γ >= d`.
    GapAtLeast(usize),
    /// `γ_c = c`.
    GammaCEquals(usize),
    /// Any graph of the corpus.
    All,
}

impl Predicate {
    pub fn needs_gamma(self) -> bool {
        matches!(self, Predicate::GammaCDiffersFromGamma | Predicate::GapAtLeast(_))
    }

    fn holds(self, gamma: Option<usize>, gamma_c: usize) -> Result<bool> {
        let need = || gamma.ok_or(Error::UncomputedField("gamma"));
        Ok(match self {
            Predicate::GammaCDiffersFromGamma => need()? != gamma_c,
            Predicate::GapAtLeast(d) => gamma_c >= need()? + d,
            Predicate::GammaCEquals(c) => gamma_c == c,
            Predicate::All => true,
        })
    }
}

/// A graph with both domination numbers certified.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalRecord {
    pub code: CanonicalCode,
    pub n: usize,
    pub max_degree: usize,
    pub gamma: DominationCertificate,
    pub gamma_c: DominationCertificate,
}

impl ExtremalRecord {
    pub fn triangulation(&self) -> Result<PlaneTriangulation> {
        self.code.decode()
    }

    /// `γ ≤ γ_c ≤ n - Δ` and both witnesses re-verify on the decoded graph.
    pub fn verify(&self) -> Result<bool> {
        let g = self.triangulation()?.underlying_graph();
        Ok(self.gamma.verifies_domination(&g)
            && self.gamma_c.verifies_connected_domination(&g)
            && self.gamma.value <= self.gamma_c.value
            && self.gamma_c.value + self.max_degree <= self.n)
    }

    fn from_graph_record(r: &GraphRecord) -> Result<Self> {
        let gamma = match &r.gamma {
            Some(c) => c.clone(),
            None => exact_gamma(&r.code.decode()?.underlying_graph())?,
        };
        Ok(ExtremalRecord {
            code: r.code.clone(),
            n: r.n,
            max_degree: r.max_degree,
            gamma,
            gamma_c: r.gamma_c.clone(),
        })
    }
}

/// Every graph satisfying `predicate`, in corpus order. Predicates on `γ`
/// need a corpus built with `γ`; for the others `γ` is solved for the
/// matches only.
pub fn find_extremal(corpus: &Corpus, predicate: Predicate) -> Result<Vec<ExtremalRecord>> {
    let mut out = Vec::new();
    for r in &corpus.records {
        if predicate.holds(r.gamma.as_ref().map(|c| c.value), r.gamma_c.value)? {
            out.push(ExtremalRecord::from_graph_record(r)?);
        }
    }
    Ok(out)
}
