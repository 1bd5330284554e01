//! Symbolic chart algebra for the local singularity models.
//!
//! Only two equation shapes ever occur (plus split factors), so models are
//! closed-shape records rather than polynomial rings:
//!
//! - snc pair: smooth ambient, divisor `y_1⋯y_r = 0`;
//! - nodal pair: ambient `y_1⋯y_r = y_n·y_{n+1}`, divisor
//!   `y_1⋯y_r = y_{n+1} = 0`.
//!
//! Blowing up a divisor component of a nodal pair yields one snc chart and
//! one nodal chart of arity r-1 with the blown-up branch split off as a
//! transverse direct factor. Iterating resolves the pair in exactly r steps
//! while the local dual complex (the simplex on the branch labels) never
//! changes; `small_resolution_trace` certifies this on the chart tree.

use serde::Serialize;
use thiserror::Error;

use crate::complex::SimplicialComplex;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LocalModelError {
    #[error("a nodal pair needs at least one divisor branch")]
    ZeroBranches,
    #[error("component blow-up requires a nodal pair, got an snc pair")]
    NotNodal,
    #[error("center index {center} out of range 1..={branches}")]
    CenterOutOfRange { center: usize, branches: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ModelKind {
    Snc,
    Nodal,
}

/// A product-local chart: equation branches, branches split off as transverse
/// direct factors, and a count of extra smooth factors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalModel {
    kind: ModelKind,
    branches: Vec<String>,
    split_branches: Vec<String>,
    smooth_factors: usize,
}

impl LocalModel {
    /// Smooth ambient with divisor `y_1⋯y_r = 0`; r = 0 is a smooth ambient
    /// with empty divisor.
    pub fn snc_pair(r: usize) -> Self {
        LocalModel {
            kind: ModelKind::Snc,
            branches: (1..=r).map(|i| format!("y{i}")).collect(),
            split_branches: Vec::new(),
            smooth_factors: 0,
        }
    }

    /// Ambient `y_1⋯y_r = y_n·y_{n+1}` with divisor `y_1⋯y_r = y_{n+1} = 0`.
    pub fn nodal_pair(r: usize) -> Result<Self, LocalModelError> {
        if r == 0 {
            return Err(LocalModelError::ZeroBranches);
        }
        Ok(LocalModel {
            kind: ModelKind::Nodal,
            branches: (1..=r).map(|i| format!("y{i}")).collect(),
            split_branches: Vec::new(),
            smooth_factors: 0,
        })
    }

    pub fn kind(&self) -> ModelKind {
        self.kind
    }

    /// Number of equation branches (the r in the chart equations).
    pub fn arity(&self) -> usize {
        self.branches.len()
    }

    pub fn is_snc(&self) -> bool {
        self.kind == ModelKind::Snc
    }

    pub fn equation_branches(&self) -> &[String] {
        &self.branches
    }

    pub fn split_branches(&self) -> &[String] {
        &self.split_branches
    }

    pub fn smooth_factors(&self) -> usize {
        self.smooth_factors
    }

    /// All divisor branch labels visible in this chart.
    pub fn branch_labels(&self) -> Vec<String> {
        let mut all: Vec<String> = self
            .branches
            .iter()
            .chain(self.split_branches.iter())
            .cloned()
            .collect();
        all.sort();
        all
    }

    /// The ambient of a nodal pair with one branch (`y_1 = y_n·y_{n+1}`) is a
    /// smooth graph hypersurface; snc ambients are smooth by definition.
    pub fn ambient_smooth(&self) -> bool {
        match self.kind {
            ModelKind::Snc => true,
            ModelKind::Nodal => self.branches.len() <= 1,
        }
    }

    /// Display form of the chart equations.
    pub fn equation(&self) -> String {
        let prod = if self.branches.is_empty() {
            "1".to_string()
        } else {
            self.branches.join("*")
        };
        let split = if self.split_branches.is_empty() {
            String::new()
        } else {
            format!("  x split({})", self.split_branches.join(","))
        };
        let smooth = if self.smooth_factors == 0 {
            String::new()
        } else {
            format!("  x A^{}", self.smooth_factors)
        };
        match self.kind {
            ModelKind::Snc => format!("divisor ({prod} = 0) in smooth ambient{split}{smooth}"),
            ModelKind::Nodal => format!(
                "divisor ({prod} = y_(n+1) = 0) in ambient ({prod} = y_n*y_(n+1)){split}{smooth}"
            ),
        }
    }

    /// The local dual complex: branches pairwise meet along the singular
    /// locus, so it is the full simplex on the branch labels.
    pub fn local_dual_complex(&self) -> SimplicialComplex {
        let labels = self.branch_labels();
        if labels.is_empty() {
            return SimplicialComplex::empty();
        }
        let k = labels.len() - 1;
        SimplicialComplex::full_skeleton(&labels, k).expect("labels distinct")
    }
}

/// The two charts of blowing up Z = D ∩ H in the model D = (y_1⋯y_r = 0),
/// H = (y_n = 0): the t-chart solves the ambient as a graph (smooth away
/// from the divisor), the s-chart is the nodal pair of the same arity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZBlowupCharts {
    pub smooth_chart: SmoothChartRecord,
    pub nodal_chart: LocalModel,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmoothChartRecord {
    pub equation: String,
    pub complement_smooth: bool,
}

pub fn z_blowup_model(r: usize) -> Result<ZBlowupCharts, LocalModelError> {
    if r == 0 {
        return Err(LocalModelError::ZeroBranches);
    }
    let prod = (1..=r)
        .map(|i| format!("y{i}"))
        .collect::<Vec<_>>()
        .join("*");
    Ok(ZBlowupCharts {
        smooth_chart: SmoothChartRecord {
            equation: format!("y_n = {prod}*(s/t), divisor (t = 0)"),
            complement_smooth: true,
        },
        nodal_chart: LocalModel::nodal_pair(r)?,
    })
}

/// Blows up the highest-index equation branch of a nodal pair. Chart 1 is an
/// snc pair with that single branch; chart 2 keeps the remaining branches in
/// nodal form, with the blown-up branch split off as a direct factor.
pub fn component_blowup(model: &LocalModel) -> Result<[LocalModel; 2], LocalModelError> {
    if model.kind != ModelKind::Nodal {
        return Err(LocalModelError::NotNodal);
    }
    let mut rest = model.branches.clone();
    let blown = rest.pop().expect("nodal pairs have at least one branch");
    let chart1 = LocalModel {
        kind: ModelKind::Snc,
        branches: vec![blown.clone()],
        split_branches: model.split_branches.clone(),
        smooth_factors: model.smooth_factors,
    };
    let mut split = model.split_branches.clone();
    split.push(blown);
    let chart2 = LocalModel {
        kind: if rest.is_empty() {
            ModelKind::Snc
        } else {
            ModelKind::Nodal
        },
        branches: rest,
        split_branches: split,
        smooth_factors: model.smooth_factors + 1,
    };
    Ok([chart1, chart2])
}

/// Node of the resolution chart tree; leaves carry no blown-up component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChartNode {
    pub model: LocalModel,
    pub blown_up: Option<String>,
    pub children: Vec<ChartNode>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResolutionCertificate {
    pub all_leaves_snc: bool,
    pub labels_preserved: bool,
    pub dual_complex_unchanged: bool,
}

impl ResolutionCertificate {
    pub fn holds(&self) -> bool {
        self.all_leaves_snc && self.labels_preserved && self.dual_complex_unchanged
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResolutionTrace {
    pub tree: ChartNode,
    pub depth: usize,
    pub leaves: usize,
    pub certificate: ResolutionCertificate,
}

/// Iterates `component_blowup` along the nodal chart until every leaf is an
/// snc pair: depth exactly r, r+1 leaves, and the local dual complex (the
/// simplex on the root's branch labels) unchanged.
pub fn small_resolution_trace(model: &LocalModel) -> Result<ResolutionTrace, LocalModelError> {
    if model.kind != ModelKind::Nodal {
        return Err(LocalModelError::NotNodal);
    }
    let tree = resolve(model)?;
    let depth = tree_depth(&tree);
    let mut leaves = Vec::new();
    collect_leaves(&tree, &mut leaves);
    let all_leaves_snc = leaves.iter().all(|m| m.is_snc());
    let labels_preserved = labels_preserved(&tree);
    let root_dual = model.local_dual_complex();
    let resolved_dual = {
        let facets: Vec<Vec<String>> = leaves.iter().map(|m| m.branch_labels()).collect();
        SimplicialComplex::from_facets(facets).expect("branch labels distinct per chart")
    };
    let dual_complex_unchanged = resolved_dual.isomorphic_labeled(&root_dual);
    Ok(ResolutionTrace {
        depth,
        leaves: leaves.len(),
        certificate: ResolutionCertificate {
            all_leaves_snc,
            labels_preserved,
            dual_complex_unchanged,
        },
        tree,
    })
}

fn resolve(model: &LocalModel) -> Result<ChartNode, LocalModelError> {
    if model.is_snc() {
        return Ok(ChartNode {
            model: model.clone(),
            blown_up: None,
            children: Vec::new(),
        });
    }
    let blown = model.branches.last().cloned();
    let [chart1, chart2] = component_blowup(model)?;
    let children = vec![resolve(&chart1)?, resolve(&chart2)?];
    Ok(ChartNode {
        model: model.clone(),
        blown_up: blown,
        children,
    })
}

fn tree_depth(node: &ChartNode) -> usize {
    node.children
        .iter()
        .map(|c| 1 + tree_depth(c))
        .max()
        .unwrap_or(0)
}

fn collect_leaves<'a>(node: &'a ChartNode, out: &mut Vec<&'a LocalModel>) {
    if node.children.is_empty() {
        out.push(&node.model);
    } else {
        for c in &node.children {
            collect_leaves(c, out);
        }
    }
}

/// Internal nodes must see every branch label again in the union of their
/// chart children.
fn labels_preserved(node: &ChartNode) -> bool {
    if node.children.is_empty() {
        return true;
    }
    let mut union: Vec<String> = node
        .children
        .iter()
        .flat_map(|c| c.model.branch_labels())
        .collect();
    union.sort();
    union.dedup();
    union == node.model.branch_labels() && node.children.iter().all(labels_preserved)
}

/// Before/after branch bookkeeping of one blow-up chart of a stratum inside
/// the snc model (x_1⋯x_n = 0) with center (x_1 = … = x_r = 0), chart U_r:
/// the equation becomes x'_1⋯x'_{r-1}·x_{r+1}⋯x_n = 0, dropping exactly the
/// branch x_r. For r = 1 the center is a whole divisor component and the
/// formula degenerates to the strict transform, which still drops x_1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChartDelta {
    pub chart: usize,
    pub center: Vec<String>,
    pub before: Vec<String>,
    pub after: Vec<String>,
    pub dropped: String,
    pub equation_before: String,
    pub equation_after: String,
}

pub fn strata_blowup_chart(
    n_branches: usize,
    r_center: usize,
) -> Result<ChartDelta, LocalModelError> {
    if r_center == 0 || r_center > n_branches {
        return Err(LocalModelError::CenterOutOfRange {
            center: r_center,
            branches: n_branches,
        });
    }
    let name = |i: usize| format!("x{i}");
    let before: Vec<String> = (1..=n_branches).map(name).collect();
    let center: Vec<String> = (1..=r_center).map(name).collect();
    let mut after_terms: Vec<String> = (1..r_center).map(|i| format!("x{i}'")).collect();
    after_terms.extend((r_center + 1..=n_branches).map(name));
    let after: Vec<String> = (1..=n_branches)
        .filter(|&i| i != r_center)
        .map(name)
        .collect();
    let eq = |terms: &[String]| {
        if terms.is_empty() {
            "(1 = 0): empty divisor, chart smooth".to_string()
        } else {
            format!("({} = 0)", terms.join("*"))
        }
    };
    Ok(ChartDelta {
        chart: r_center,
        center,
        equation_before: eq(&before),
        equation_after: eq(&after_terms),
        before,
        after,
        dropped: name(r_center),
    })
}
