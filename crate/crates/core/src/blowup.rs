//! Iterated blow-up of minimal strata realizing a prescribed dual complex.
//!
//! Starting from the arrangement model whose dual complex is the full
//! n-skeleton on the vertex set, step r removes every (n-r+1)-element label
//! subset that survives as a stratum but spans no cell of the target complex.
//! Such subsets always index maximal cells (asserted at every step), so each
//! removal is a star removal of a single top cell; after n steps the dual
//! complex equals the target exactly.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::arrangement::{Arrangement, ArrangementError, ArrangementSummary, CertificationConfig};
use crate::complex::{Cell, FVector, SimplicialComplex};
use crate::rational::Rational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BlowupError {
    #[error("input complex is empty")]
    EmptyInput,
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("ambient override {given} is below the complex dimension {dim}")]
    AmbientTooSmall { given: usize, dim: usize },
    #[error("step {r} out of range 0..{n}")]
    StepOutOfRange { r: usize, n: usize },
    #[error("embedding violated at step {r}: {violation}")]
    Embedding {
        r: usize,
        violation: EmbeddingViolation,
    },
    #[error(
        "center {0:?} is not a maximal cell of the model; this contradicts the step invariant"
    )]
    NonMaximalCenter(Cell),
    #[error("dimension schedule broken after step {r}: {witness:?}")]
    DimensionSchedule { r: usize, witness: Cell },
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EmbeddingViolation {
    #[error("vertex sets differ at `{0}`")]
    VertexMismatch(String),
    #[error("cell {0:?} of the complex is not a stratum")]
    MissingStratum(Cell),
    #[error("stratum {stratum:?} of dimension >= {min_dim} is not a cell of the complex")]
    ExtraStratum { stratum: Cell, min_dim: usize },
}

/// Symbolic simple-normal-crossing configuration: surviving strata are keyed
/// by their label subsets (every surviving subset indexes exactly one
/// stratum, since blow-ups of linear subspaces stay irreducible).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SncModel {
    labels: Vec<String>,
    n: usize,
    strata: BTreeSet<Cell>,
    history: Vec<BlowupStep>,
}

/// Geometric ledger entry for one blown-up stratum: the labels name the
/// linear subspace `∩ H_i`, which is rational by construction (an iterated
/// blow-up of a rational linear space).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CenterRecord {
    pub labels: Cell,
    pub stratum_dimension: usize,
    pub rational: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlowupStep {
    pub r: usize,
    pub center_dimension: usize,
    pub centers: Vec<CenterRecord>,
    pub cells_removed: usize,
    pub f_before: FVector,
    pub f_after: FVector,
}

/// Full record of one construction run, serializable as the trace artifact.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlowupTrace {
    pub input: SimplicialComplex,
    pub arrangement: ArrangementSummary,
    pub steps: Vec<BlowupStep>,
    pub final_complex: SimplicialComplex,
    pub certified: bool,
}

impl SncModel {
    /// Initial model: all label subsets of size <= n+1 survive.
    pub fn initial(labels: &[String], n: usize) -> Result<Self, BlowupError> {
        let skeleton = SimplicialComplex::full_skeleton(labels, n).map_err(|e| match e {
            crate::complex::ComplexError::DuplicateLabel(l) => BlowupError::DuplicateLabel(l),
            _ => BlowupError::EmptyInput,
        })?;
        Ok(SncModel {
            labels: skeleton.vertices().to_vec(),
            n,
            strata: skeleton.cells().cloned().collect(),
            history: Vec::new(),
        })
    }

    /// Initial model certified against the arrangement's strata.
    pub fn from_arrangement(
        a: &Arrangement,
        cfg: &CertificationConfig,
    ) -> Result<Self, BlowupError> {
        let skeleton = a.initial_dual_complex_with(cfg)?;
        Ok(SncModel {
            labels: skeleton.vertices().to_vec(),
            n: a.n(),
            strata: skeleton.cells().cloned().collect(),
            history: Vec::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn strata(&self) -> impl Iterator<Item = &Cell> {
        self.strata.iter()
    }

    pub fn history(&self) -> &[BlowupStep] {
        &self.history
    }

    pub fn is_stratum(&self, subset: &Cell) -> bool {
        self.strata.contains(subset)
    }

    fn is_maximal_stratum(&self, subset: &Cell) -> bool {
        !self
            .strata
            .iter()
            .any(|s| s.len() > subset.len() && subset.iter().all(|v| s.binary_search(v).is_ok()))
    }

    /// The dual complex: one (|J|-1)-cell per surviving stratum J.
    pub fn dual_complex(&self) -> SimplicialComplex {
        SimplicialComplex::from_facets(self.strata.iter().cloned().collect::<Vec<_>>())
            .expect("strata are face-closed")
    }
}

/// Verifies the step-r embedding: vertex sets agree, every cell of `c` is a
/// stratum, and every stratum of dimension >= n-r+1 is a cell of `c`.
pub fn check_embedding(
    c: &SimplicialComplex,
    m: &SncModel,
    r: usize,
) -> Result<(), EmbeddingViolation> {
    for v in c.vertices() {
        if !m.labels.contains(v) {
            return Err(EmbeddingViolation::VertexMismatch(v.clone()));
        }
    }
    for v in &m.labels {
        if !c.vertices().contains(v) {
            return Err(EmbeddingViolation::VertexMismatch(v.clone()));
        }
    }
    for cell in c.cells() {
        if !m.strata.contains(cell) {
            return Err(EmbeddingViolation::MissingStratum(cell.clone()));
        }
    }
    let min_size = m.n.saturating_sub(r) + 2; // dimension >= n-r+1
    for s in &m.strata {
        if s.len() >= min_size && !c.contains(s) {
            return Err(EmbeddingViolation::ExtraStratum {
                stratum: s.clone(),
                min_dim: min_size - 1,
            });
        }
    }
    Ok(())
}

/// All (n-r+1)-element subsets that survive as strata but span no cell of
/// `c`. Each is asserted to be a maximal cell of the current dual complex.
pub fn excess_cells(
    m: &SncModel,
    c: &SimplicialComplex,
    r: usize,
) -> Result<Vec<Cell>, BlowupError> {
    if r >= m.n {
        return Err(BlowupError::StepOutOfRange { r, n: m.n });
    }
    check_embedding(c, m, r).map_err(|violation| BlowupError::Embedding { r, violation })?;
    let size = m.n - r + 1;
    let mut excess = Vec::new();
    for s in &m.strata {
        if s.len() == size && !c.contains(s) {
            if !m.is_maximal_stratum(s) {
                return Err(BlowupError::NonMaximalCenter(s.clone()));
            }
            excess.push(s.clone());
        }
    }
    Ok(excess)
}

/// One induction step: blows up the strata indexed by the excess subsets,
/// removing exactly those cells from the dual complex.
pub fn blowup_step(m: &SncModel, c: &SimplicialComplex, r: usize) -> Result<SncModel, BlowupError> {
    let centers = excess_cells(m, c, r)?;
    let f_before = m.dual_complex().f_vector();
    let mut next = m.clone();
    for center in &centers {
        // centers are maximal, so the star is the center itself
        next.strata.remove(center);
    }
    let f_after = next.dual_complex().f_vector();
    let step = BlowupStep {
        r,
        center_dimension: r,
        centers: centers
            .iter()
            .map(|labels| CenterRecord {
                labels: labels.clone(),
                stratum_dimension: r,
                rational: true,
            })
            .collect(),
        cells_removed: centers.len(),
        f_before,
        f_after,
    };
    next.history.push(step);
    // dimension schedule: cells of dimension >= n-r now agree with `c`
    let min_size = m.n - r + 1;
    for s in &next.strata {
        if s.len() >= min_size && !c.contains(s) {
            return Err(BlowupError::DimensionSchedule {
                r,
                witness: s.clone(),
            });
        }
    }
    for cell in c.cells() {
        if cell.len() >= min_size && !next.strata.contains(cell) {
            return Err(BlowupError::DimensionSchedule {
                r,
                witness: cell.clone(),
            });
        }
    }
    Ok(next)
}

/// Runs the whole construction: builds the arrangement on the vertex set of
/// `c` (ambient P^{n+1}, default n = dim c), runs steps r = 0..n, and
/// certifies that the final dual complex equals `c` as labeled complexes.
pub fn run_construction(
    c: &SimplicialComplex,
    ambient: Option<usize>,
) -> Result<BlowupTrace, BlowupError> {
    run_construction_with(c, ambient, None, &CertificationConfig::default())
}

pub fn run_construction_with(
    c: &SimplicialComplex,
    ambient: Option<usize>,
    nodes: Option<Vec<Rational>>,
    cfg: &CertificationConfig,
) -> Result<BlowupTrace, BlowupError> {
    let dim = c.dim().ok_or(BlowupError::EmptyInput)?;
    let n = match ambient {
        Some(n) if n < dim => return Err(BlowupError::AmbientTooSmall { given: n, dim }),
        Some(n) => n,
        None => dim,
    };
    let arrangement = Arrangement::build(c.vertices(), n, nodes)?;
    let mut model = SncModel::from_arrangement(&arrangement, cfg)?;
    for r in 0..n {
        model = blowup_step(&model, c, r)?;
    }
    let final_complex = model.dual_complex();
    let certified = final_complex.isomorphic_labeled(c);
    Ok(BlowupTrace {
        input: c.clone(),
        arrangement: arrangement.summary(),
        steps: model.history.clone(),
        final_complex,
        certified,
    })
}
