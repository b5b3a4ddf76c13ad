//! Property checks over a solved corpus.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{Corpus, GraphRecord};
use crate::embedding::CanonicalCode;
use crate::solvers::{bfs_tree_cds, exact_gamma_c};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    /// Stored certificates are valid (connected) dominating sets.
    WitnessesValid,
    /// `γ <= γ_c` (only where `γ` was computed).
    GammaAtMostGammaC,
    /// `γ_c <= n - Δ`.
    GammaCAtMostNMinusDelta,
    /// The BFS-tree set is a connected dominating set of size `<= n - Δ`.
    BfsTreeBound,
    /// `γ_c <= ⌊n/3⌋` for `9 <= n <= 13`.
    ThirdOfOrder,
    /// `Δ = n - 4` implies `γ_c ∈ {2, 3}` for `n <= 13`.
    DegreeNMinusFour,
    /// The census value matches the subset-search solver.
    SolversAgree,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyViolation {
    pub property: Property,
    pub n: usize,
    pub code: CanonicalCode,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    /// Graphs each property was evaluated on (vacuous cases excluded).
    pub checked: BTreeMap<Property, u64>,
    pub violations: Vec<PropertyViolation>,
    pub max_gamma_c: BTreeMap<usize, usize>,
}

impl PropertyReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn checked(&self, p: Property) -> u64 {
        self.checked.get(&p).copied().unwrap_or(0)
    }

    pub fn violations_of(&self, p: Property) -> impl Iterator<Item = &PropertyViolation> {
        self.violations.iter().filter(move |v| v.property == p)
    }

    fn merge(mut self, other: PropertyReport) -> PropertyReport {
        for (p, c) in other.checked {
            *self.checked.entry(p).or_insert(0) += c;
        }
        self.violations.extend(other.violations);
        for (n, m) in other.max_gamma_c {
            let e = self.max_gamma_c.entry(n).or_insert(0);
            *e = (*e).max(m);
        }
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Re-solve with the subset search for orders up to this value.
    pub cross_check_up_to: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { cross_check_up_to: 10 }
    }
}

fn check_one(r: &GraphRecord, opts: VerifyOptions) -> PropertyReport {
    let mut rep = PropertyReport::default();
    let t = r.code.decode().expect("corpus codes decode");
    let g = t.underlying_graph();
    let n = r.n;
    let delta = r.max_degree;
    let gc = r.gamma_c.value;
    let mut check = |p: Property, ok: bool, detail: String| {
        *rep.checked.entry(p).or_insert(0) += 1;
        if !ok {
            rep.violations.push(PropertyViolation {
                property: p,
                n,
                code: r.code.clone(),
                detail,
            });
        }
    };

    let mut ok = r.gamma_c.verifies_connected_domination(&g);
    if let Some(gm) = &r.gamma {
        ok &= gm.verifies_domination(&g);
    }
    check(Property::WitnessesValid, ok, "stored witness fails to re-verify".into());
    if let Some(gm) = &r.gamma {
        check(
            Property::GammaAtMostGammaC,
            gm.value <= gc,
            format!("γ = {} > γ_c = {gc}", gm.value),
        );
    }
    check(
        Property::GammaCAtMostNMinusDelta,
        gc + delta <= n,
        format!("γ_c = {gc} > n - Δ = {}", n - delta),
    );
    let bfs = bfs_tree_cds(&g).expect("triangulations are connected");
    check(
        Property::BfsTreeBound,
        bfs.verifies_connected_domination(&g) && bfs.value + delta <= n,
        format!("BFS set of size {} against n - Δ = {}", bfs.value, n - delta),
    );
    if (9..=13).contains(&n) {
        check(Property::ThirdOfOrder, gc <= n / 3, format!("γ_c = {gc} > ⌊n/3⌋ = {}", n / 3));
    }
    if n <= 13 && delta + 4 == n {
        check(
            Property::DegreeNMinusFour,
            gc == 2 || gc == 3,
            format!("Δ = n - 4 but γ_c = {gc}"),
        );
    }
    if n <= opts.cross_check_up_to {
        let exact = exact_gamma_c(&g).expect("triangulations are connected").value;
        check(
            Property::SolversAgree,
            exact == gc,
            format!("census γ_c = {gc}, subset search γ_c = {exact}"),
        );
    }
    rep.max_gamma_c.insert(n, gc);
    rep
}

/// Checks every graph of the corpus; violations are listed in corpus order.
pub fn verify_corpus(corpus: &Corpus, opts: VerifyOptions) -> PropertyReport {
    corpus
        .records
        .par_iter()
        .map(|r| check_one(r, opts))
        .collect::<Vec<_>>()
        .into_iter()
        .fold(PropertyReport::default(), PropertyReport::merge)
}
