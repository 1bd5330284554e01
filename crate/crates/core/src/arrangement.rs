//! Exact rational geometry of power-basis ("Vandermonde") hyperplane
//! arrangements in projective space: one hyperplane per vertex label, with
//! coefficient row (1, a, a^2, ..., a^{n+1}) at a rational node a. General
//! position and stratum dimensions are certified by exact rank computations,
//! never assumed from node distinctness.

use std::collections::BTreeSet;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::complex::SimplicialComplex;
use crate::rational::{rational_from_i64, Rational, RationalMatrix};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArrangementError {
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("duplicate node {0}")]
    DuplicateNode(String),
    #[error("need one node per label: {labels} labels, {nodes} nodes")]
    NodeCountMismatch { labels: usize, nodes: usize },
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("label subset must be nonempty")]
    EmptySubset,
    #[error("at least one hyperplane is required")]
    NoLabels,
    #[error("coefficient row for `{label}` has {got} entries, expected {expected}")]
    RowShape {
        label: String,
        got: usize,
        expected: usize,
    },
    #[error("hyperplanes {0:?} are not in general position")]
    NotGeneralPosition(Vec<String>),
    #[error("stratum certification failed for subset {subset:?}: expected {expected}, got {got}")]
    Certification {
        subset: Vec<String>,
        expected: String,
        got: String,
    },
}

/// Hyperplanes `H_i` in P^{n+1} indexed by sorted labels; `coeffs[i]` is the
/// length-(n+2) coefficient vector of `H_i`.
#[derive(Clone, Debug)]
pub struct Arrangement {
    n: usize,
    labels: Vec<String>,
    nodes: Option<Vec<Rational>>,
    coeffs: Vec<Vec<Rational>>,
}

/// Exact projective dimension of an intersection of hyperplanes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum StratumDim {
    Empty,
    Dim(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneralPositionReport {
    pub in_general_position: bool,
    pub witness: Option<Vec<String>>,
}

/// Controls how `initial_dual_complex` certifies strata: exhaustively up to
/// `exhaustive_limit` subsets, else `samples` seeded random subsets.
#[derive(Clone, Debug)]
pub struct CertificationConfig {
    pub exhaustive_limit: u64,
    pub samples: u32,
    pub seed: u64,
}

impl Default for CertificationConfig {
    fn default() -> Self {
        CertificationConfig {
            exhaustive_limit: 200_000,
            samples: 2_000,
            seed: 0,
        }
    }
}

impl Arrangement {
    /// Builds the arrangement with coefficient rows (1, a_i, ..., a_i^{n+1}).
    /// Default nodes are 0, 1, ..., |labels|-1.
    pub fn build(
        labels: &[String],
        n: usize,
        nodes: Option<Vec<Rational>>,
    ) -> Result<Self, ArrangementError> {
        if labels.is_empty() {
            return Err(ArrangementError::NoLabels);
        }
        let mut sorted = labels.to_vec();
        sorted.sort();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(ArrangementError::DuplicateLabel(w[0].clone()));
            }
        }
        let nodes = match nodes {
            Some(nodes) => {
                if nodes.len() != sorted.len() {
                    return Err(ArrangementError::NodeCountMismatch {
                        labels: sorted.len(),
                        nodes: nodes.len(),
                    });
                }
                let mut seen = BTreeSet::new();
                for v in &nodes {
                    if !seen.insert(v.clone()) {
                        return Err(ArrangementError::DuplicateNode(v.to_string()));
                    }
                }
                nodes
            }
            None => (0..sorted.len() as i64).map(rational_from_i64).collect(),
        };
        let coeffs = nodes
            .iter()
            .map(|a| {
                let mut row = Vec::with_capacity(n + 2);
                let mut acc = rational_from_i64(1);
                for _ in 0..n + 2 {
                    row.push(acc.clone());
                    acc *= a;
                }
                row
            })
            .collect();
        Ok(Arrangement {
            n,
            labels: sorted,
            nodes: Some(nodes),
            coeffs,
        })
    }

    /// Caller-supplied coefficient rows (general position NOT assumed; use
    /// `verify_general_position`). Rows must have n+2 entries each.
    pub fn from_coefficient_rows(
        labels: &[String],
        n: usize,
        rows: Vec<Vec<Rational>>,
    ) -> Result<Self, ArrangementError> {
        if labels.is_empty() {
            return Err(ArrangementError::NoLabels);
        }
        let mut order: Vec<usize> = (0..labels.len()).collect();
        order.sort_by(|&a, &b| labels[a].cmp(&labels[b]));
        let sorted: Vec<String> = order.iter().map(|&i| labels[i].clone()).collect();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(ArrangementError::DuplicateLabel(w[0].clone()));
            }
        }
        if rows.len() != labels.len() {
            return Err(ArrangementError::NodeCountMismatch {
                labels: labels.len(),
                nodes: rows.len(),
            });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n + 2 {
                return Err(ArrangementError::RowShape {
                    label: labels[i].clone(),
                    got: row.len(),
                    expected: n + 2,
                });
            }
        }
        let coeffs = order.iter().map(|&i| rows[i].clone()).collect();
        Ok(Arrangement {
            n,
            labels: sorted,
            nodes: None,
            coeffs,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension of the ambient projective space, n+1.
    pub fn ambient_dim(&self) -> usize {
        self.n + 1
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn nodes(&self) -> Option<&[Rational]> {
        self.nodes.as_deref()
    }

    pub fn coefficient_row(&self, label: &str) -> Option<&[Rational]> {
        let i = self.labels.iter().position(|l| l == label)?;
        Some(&self.coeffs[i])
    }

    fn subset_matrix(&self, subset: &[String]) -> Result<RationalMatrix, ArrangementError> {
        if subset.is_empty() {
            return Err(ArrangementError::EmptySubset);
        }
        let mut rows = Vec::with_capacity(subset.len());
        for l in subset {
            let row = self
                .coefficient_row(l)
                .ok_or_else(|| ArrangementError::UnknownLabel(l.clone()))?;
            rows.push(row.to_vec());
        }
        Ok(RationalMatrix::from_rows(rows))
    }

    /// True iff every subset of min(|I|, n+2) coefficient rows has full rank,
    /// by exact elimination. Returns the first offending subset otherwise.
    pub fn verify_general_position(&self) -> GeneralPositionReport {
        let size = self.labels.len().min(self.n + 2);
        for subset in self.labels.iter().cloned().combinations(size) {
            let m = self
                .subset_matrix(&subset)
                .expect("labels come from the arrangement");
            if m.rank() != size {
                return GeneralPositionReport {
                    in_general_position: false,
                    witness: Some(subset),
                };
            }
        }
        GeneralPositionReport {
            in_general_position: true,
            witness: None,
        }
    }

    /// Exact projective dimension of the intersection of the hyperplanes in
    /// `subset`: n+1-rank, or `Empty` when the forms span everything.
    pub fn stratum_dimension(&self, subset: &[String]) -> Result<StratumDim, ArrangementError> {
        let rank = self.subset_matrix(subset)?.rank();
        if rank >= self.n + 2 {
            Ok(StratumDim::Empty)
        } else {
            Ok(StratumDim::Dim(self.n + 1 - rank))
        }
    }

    /// A rational point on the stratum (projective coordinates, first nonzero
    /// coordinate 1) whenever its dimension is >= 0.
    pub fn rational_point(
        &self,
        subset: &[String],
    ) -> Result<Option<Vec<Rational>>, ArrangementError> {
        Ok(self.subset_matrix(subset)?.nullspace_vector())
    }

    /// The dual complex of the arrangement: the n-skeleton of the full
    /// simplex on the labels, certified against `stratum_dimension` over all
    /// subsets of size <= n+2 (sampled above the configured limit).
    pub fn initial_dual_complex(&self) -> Result<SimplicialComplex, ArrangementError> {
        self.initial_dual_complex_with(&CertificationConfig::default())
    }

    pub fn initial_dual_complex_with(
        &self,
        cfg: &CertificationConfig,
    ) -> Result<SimplicialComplex, ArrangementError> {
        let gp = self.verify_general_position();
        if !gp.in_general_position {
            return Err(ArrangementError::NotGeneralPosition(
                gp.witness.unwrap_or_default(),
            ));
        }
        let max_size = (self.n + 2).min(self.labels.len());
        let total: u64 = (1..=max_size)
            .map(|k| binomial(self.labels.len() as u64, k as u64))
            .sum();
        if total <= cfg.exhaustive_limit {
            for k in 1..=max_size {
                for subset in self.labels.iter().cloned().combinations(k) {
                    self.certify_subset(&subset)?;
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            let sizes: Vec<usize> = (1..=max_size).collect();
            for _ in 0..cfg.samples {
                let k = *sizes.choose(&mut rng).expect("nonempty");
                let subset: Vec<String> = {
                    let mut pool: Vec<String> = self.labels.to_vec();
                    pool.shuffle(&mut rng);
                    pool.truncate(k);
                    pool.sort();
                    pool
                };
                self.certify_subset(&subset)?;
            }
        }
        Ok(SimplicialComplex::full_skeleton(&self.labels, self.n)
            .expect("labels are sorted and distinct"))
    }

    fn certify_subset(&self, subset: &[String]) -> Result<(), ArrangementError> {
        let got = self.stratum_dimension(subset)?;
        let expected = if subset.len() <= self.n + 1 {
            StratumDim::Dim(self.n + 1 - subset.len())
        } else {
            StratumDim::Empty
        };
        if got != expected {
            return Err(ArrangementError::Certification {
                subset: subset.to_vec(),
                expected: format!("{expected:?}"),
                got: format!("{got:?}"),
            });
        }
        // rationality bookkeeping: nonempty strata contain a rational point
        if expected != StratumDim::Empty && self.rational_point(subset)?.is_none() {
            return Err(ArrangementError::Certification {
                subset: subset.to_vec(),
                expected: "a rational point".into(),
                got: "no kernel vector".into(),
            });
        }
        Ok(())
    }

    /// Summary block for traces and CLI output.
    pub fn summary(&self) -> ArrangementSummary {
        ArrangementSummary {
            labels: self.labels.clone(),
            construction_dim: self.n,
            ambient_dim: self.n + 1,
            nodes: self
                .nodes
                .as_ref()
                .map(|ns| ns.iter().map(|v| v.to_string()).collect()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArrangementSummary {
    pub labels: Vec<String>,
    pub construction_dim: usize,
    pub ambient_dim: usize,
    pub nodes: Option<Vec<String>>,
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}
