//! Presentation complexes of finitely presented groups and the coning
//! pipeline feeding the rational-acyclicity gate.
//!
//! The 2-complex of a presentation is a bouquet of circles (one per
//! generator, each subdivided into three edges so fan triangles never
//! identify all their vertices) with one fanned polygon per relator; each
//! letter traverses the three edges of its circle, so a relator of effective
//! length l attaches a 3l-gon made of 3l triangles. The fundamental group is
//! the presented group by construction and is never computed.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::complex::SimplicialComplex;
use crate::delta::{barycentric_subdivision, DeltaComplex, DeltaError};
use crate::homology::{
    homology, smith_normal_form, ChainComplex, HomologyError, HomologyProfile, IntegerMatrix,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("generator names must be single lowercase ascii letters, got `{0}`")]
    BadGeneratorName(String),
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("relator {0} is empty")]
    EmptyRelator(usize),
    #[error("unknown generator `{0}` in relator")]
    UnknownGenerator(String),
    #[error("generator index {0} out of range")]
    GeneratorIndex(usize),
    #[error("exponents must be +1 or -1")]
    BadExponent,
    #[error("cycle has {got} coefficients, the complex has {expected} 2-cells")]
    CycleLength { got: usize, expected: usize },
    #[error("cycle coefficients must lie in {{-1, 0, 1}}")]
    CycleCoefficient,
    #[error("chain is not a cycle: boundary is nonzero")]
    NotACycle,
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Delta(#[from] DeltaError),
}

/// Finite presentation: generators and relator words over them. A letter is
/// (generator index, exponent ±1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Vec<(usize, i8)>>,
}

impl Presentation {
    pub fn new(
        generators: Vec<String>,
        relators: Vec<Vec<(usize, i8)>>,
    ) -> Result<Self, GroupError> {
        let mut seen = std::collections::BTreeSet::new();
        for g in &generators {
            if !seen.insert(g.clone()) {
                return Err(GroupError::DuplicateGenerator(g.clone()));
            }
        }
        for (i, rel) in relators.iter().enumerate() {
            if rel.is_empty() {
                return Err(GroupError::EmptyRelator(i));
            }
            for &(g, e) in rel {
                if g >= generators.len() {
                    return Err(GroupError::GeneratorIndex(g));
                }
                if e != 1 && e != -1 {
                    return Err(GroupError::BadExponent);
                }
            }
        }
        Ok(Presentation {
            generators,
            relators,
        })
    }

    /// Parses words like `abAB`: lowercase = generator, uppercase = inverse.
    /// Generators must be single lowercase ascii letters.
    pub fn parse(generators: &[String], words: &[String]) -> Result<Self, GroupError> {
        for g in generators {
            let ok = g.len() == 1 && g.chars().all(|c| c.is_ascii_lowercase());
            if !ok {
                return Err(GroupError::BadGeneratorName(g.clone()));
            }
        }
        let index = |c: char| -> Result<usize, GroupError> {
            generators
                .iter()
                .position(|g| g.starts_with(c))
                .ok_or_else(|| GroupError::UnknownGenerator(c.to_string()))
        };
        let mut relators = Vec::new();
        for (i, w) in words.iter().enumerate() {
            if w.is_empty() {
                return Err(GroupError::EmptyRelator(i));
            }
            let mut rel = Vec::new();
            for c in w.chars() {
                if c.is_ascii_lowercase() {
                    rel.push((index(c)?, 1i8));
                } else if c.is_ascii_uppercase() {
                    rel.push((index(c.to_ascii_lowercase())?, -1i8));
                } else {
                    return Err(GroupError::UnknownGenerator(c.to_string()));
                }
            }
            relators.push(rel);
        }
        Presentation::new(generators.to_vec(), relators)
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Vec<(usize, i8)>] {
        &self.relators
    }

    /// Relator exponent-sum matrix (generators x relators).
    pub fn exponent_matrix(&self) -> IntegerMatrix {
        let mut m = IntegerMatrix::zero(self.generators.len(), self.relators.len());
        for (j, rel) in self.relators.iter().enumerate() {
            for &(g, e) in rel {
                m.add_assign(g, j, &BigInt::from(e));
            }
        }
        m
    }

    /// Abelianization from the Smith form of the exponent matrix: the
    /// independent oracle for H1 of the presentation complex.
    pub fn abelianization(&self) -> Abelianization {
        let snf = smith_normal_form(&self.exponent_matrix());
        Abelianization {
            rank: self.generators.len() - snf.rank,
            torsion: snf.factors.into_iter().filter(|f| !f.is_one()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Abelianization {
    pub rank: usize,
    #[serde(serialize_with = "crate::io::serialize_factors")]
    pub torsion: Vec<BigInt>,
}

/// The 2-complex of a presentation plus the bookkeeping needed to write
/// 2-cycles on it: per relator, the fan triangles in rim order with the
/// traversal sign of each rim segment.
#[derive(Clone, Debug)]
pub struct PresentationComplex {
    pub delta: DeltaComplex,
    pub relator_fans: Vec<RelatorFan>,
}

#[derive(Clone, Debug)]
pub struct RelatorFan {
    pub apex: usize,
    /// (2-cell id, rim traversal sign) in rim order.
    pub triangles: Vec<(usize, i8)>,
}

/// Builds the presentation 2-complex. Relators shorter than 3 letters are
/// padded with a trailing g·g⁻¹ backtrack, which leaves the homotopy type
/// unchanged.
pub fn presentation_complex(p: &Presentation) -> PresentationComplex {
    build_complex(p, true)
}

/// Same construction without padding; used to check that padding is
/// homologically invisible.
pub fn presentation_complex_unpadded(p: &Presentation) -> PresentationComplex {
    build_complex(p, false)
}

fn build_complex(p: &Presentation, pad: bool) -> PresentationComplex {
    let mut b = DeltaComplex::builder();
    let base = b.add_vertex("base");
    // circle for generator g: base -> g.1 -> g.2 -> base
    let mut circle_edges: Vec<[usize; 3]> = Vec::new();
    let mut circle_ends: Vec<[(usize, usize); 3]> = Vec::new();
    for g in &p.generators {
        let v1 = b.add_vertex(format!("{g}.1"));
        let v2 = b.add_vertex(format!("{g}.2"));
        // edge faces are [endpoint, startpoint]
        let e0 = b.add_cell(vec![v1, base]).expect("vertices exist");
        let e1 = b.add_cell(vec![v2, v1]).expect("vertices exist");
        let e2 = b.add_cell(vec![base, v2]).expect("vertices exist");
        circle_edges.push([e0, e1, e2]);
        circle_ends.push([(base, v1), (v1, v2), (v2, base)]);
    }
    let mut relator_fans = Vec::new();
    for (ri, rel) in p.relators.iter().enumerate() {
        let mut word = rel.clone();
        if pad {
            while word.len() < 3 {
                let (g, _) = *word.last().expect("relators are nonempty");
                word.push((g, 1));
                word.push((g, -1));
            }
        }
        // expand letters into oriented rim segments
        let mut rim: Vec<(usize, bool)> = Vec::new(); // (edge id, forward)
        let mut rim_start: Vec<usize> = Vec::new(); // path vertex at each position
        for &(g, e) in &word {
            if e == 1 {
                for i in 0..3 {
                    rim.push((circle_edges[g][i], true));
                    rim_start.push(circle_ends[g][i].0);
                }
            } else {
                for i in (0..3).rev() {
                    rim.push((circle_edges[g][i], false));
                    rim_start.push(circle_ends[g][i].1);
                }
            }
        }
        let apex = b.add_vertex(format!("r{ri}.apex"));
        let spokes: Vec<usize> = rim_start
            .iter()
            .map(|&v| b.add_cell(vec![v, apex]).expect("vertices exist"))
            .collect();
        let len = rim.len();
        let mut triangles = Vec::new();
        for (j, &(eid, fwd)) in rim.iter().enumerate() {
            let s_here = spokes[j];
            let s_next = spokes[(j + 1) % len];
            // triangle (apex, start, end) of the edge's own orientation:
            // faces [edge, spoke to end, spoke to start]
            let (d1, d2) = if fwd {
                (s_next, s_here)
            } else {
                (s_here, s_next)
            };
            let t = b
                .add_cell(vec![eid, d1, d2])
                .expect("fan faces are consistent");
            triangles.push((t, if fwd { 1i8 } else { -1i8 }));
        }
        relator_fans.push(RelatorFan { apex, triangles });
    }
    PresentationComplex {
        delta: b.build(),
        relator_fans,
    }
}

impl PresentationComplex {
    /// The ±1 fan-triangle chain of a relator; a 2-cycle exactly when the
    /// relator's exponent sums vanish for every generator (e.g. commutators).
    pub fn relator_chain(&self, relator: usize) -> TwoCycle {
        let two_cells = self.delta.cells_of_dim(2);
        let mut coeff = vec![0i8; two_cells.len()];
        for &(t, sign) in &self.relator_fans[relator].triangles {
            let pos = two_cells
                .iter()
                .position(|&id| id == t)
                .expect("fan triangle");
            coeff[pos] = sign;
        }
        TwoCycle {
            coefficients: coeff,
        }
    }
}

/// Coefficients in {-1, 0, +1} on the 2-cells of a Δ-complex, indexed in the
/// canonical 2-cell order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCycle {
    pub coefficients: Vec<i8>,
}

impl TwoCycle {
    /// Verifies over the integers that the chain has zero boundary.
    pub fn validate(&self, dc: &DeltaComplex) -> Result<(), GroupError> {
        let n2 = dc.cell_count(2);
        if self.coefficients.len() != n2 {
            return Err(GroupError::CycleLength {
                got: self.coefficients.len(),
                expected: n2,
            });
        }
        if self.coefficients.iter().any(|&c| !(-1..=1).contains(&c)) {
            return Err(GroupError::CycleCoefficient);
        }
        if n2 == 0 {
            return Ok(());
        }
        let d2 = dc.boundary_matrix(2)?;
        let v: Vec<BigInt> = self.coefficients.iter().map(|&c| BigInt::from(c)).collect();
        if d2.apply(&v).iter().any(|x| !x.is_zero()) {
            return Err(GroupError::NotACycle);
        }
        Ok(())
    }
}

/// Cones off each 2-cycle: per cycle, a fresh apex plus spokes over the
/// vertices, cone triangles over the edges, and one 3-cell per supported
/// 2-cell of the cycle's support closure. Kills the spanned H2 classes; for
/// cycles whose support carries 1-homology into the complex (non-spherical
/// classes, outside the attachment's hypothesis) it also flattens that image.
pub fn cone_off(dc: &DeltaComplex, cycles: &[TwoCycle]) -> Result<DeltaComplex, GroupError> {
    for c in cycles {
        c.validate(dc)?;
    }
    // rebuild the complex, then append one cone per cycle
    let mut b = DeltaComplex::builder();
    let mut remap: Vec<usize> = vec![0; dc.total_cells()];
    let dim = dc.dim().unwrap_or(0);
    for k in 0..=dim {
        for &id in dc.cells_of_dim(k) {
            let new = if k == 0 {
                b.add_vertex(dc.vertex_label(id).expect("vertex").to_string())
            } else {
                let faces = dc.faces(id).iter().map(|&f| remap[f]).collect();
                b.add_cell(faces).expect("source complex is consistent")
            };
            remap[id] = new;
        }
    }
    for (ci, cycle) in cycles.iter().enumerate() {
        let two_cells = dc.cells_of_dim(2).to_vec();
        let support: Vec<usize> = two_cells
            .iter()
            .enumerate()
            .filter(|(i, _)| cycle.coefficients[*i] != 0)
            .map(|(_, &id)| id)
            .collect();
        if support.is_empty() {
            continue;
        }
        let mut edge_set: Vec<usize> = Vec::new();
        let mut vertex_set: Vec<usize> = Vec::new();
        for &t in &support {
            for &e in dc.faces(t) {
                if !edge_set.contains(&e) {
                    edge_set.push(e);
                }
                for &v in dc.faces(e) {
                    if !vertex_set.contains(&v) {
                        vertex_set.push(v);
                    }
                }
            }
        }
        edge_set.sort_unstable();
        vertex_set.sort_unstable();
        let apex = b.add_vertex(format!("cone{ci}.apex"));
        let spoke: std::collections::BTreeMap<usize, usize> = vertex_set
            .iter()
            .map(|&v| (v, b.add_cell(vec![remap[v], apex]).expect("spoke")))
            .collect();
        let cone_tri: std::collections::BTreeMap<usize, usize> = edge_set
            .iter()
            .map(|&e| {
                let ends = dc.faces(e); // [end, start]
                let t = b
                    .add_cell(vec![remap[e], spoke[&ends[0]], spoke[&ends[1]]])
                    .expect("cone triangle");
                (e, t)
            })
            .collect();
        for &t in &support {
            let f = dc.faces(t);
            b.add_cell(vec![
                remap[t],
                cone_tri[&f[0]],
                cone_tri[&f[1]],
                cone_tri[&f[2]],
            ])
            .expect("cone cell");
        }
    }
    Ok(b.build())
}

/// Low-degree slice of a homology profile.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LowDegreeHomology {
    pub b1: usize,
    pub b2: usize,
    #[serde(serialize_with = "crate::io::serialize_factors")]
    pub torsion1: Vec<BigInt>,
    #[serde(serialize_with = "crate::io::serialize_factors")]
    pub torsion2: Vec<BigInt>,
}

/// H1 and H2 of a Δ-complex (degrees above the complex dimension are zero).
pub fn h1_h2(dc: &DeltaComplex) -> Result<LowDegreeHomology, GroupError> {
    let profile = homology(dc)?;
    let get = |v: &Vec<usize>, k: usize| v.get(k).copied().unwrap_or(0);
    Ok(LowDegreeHomology {
        b1: get(&profile.betti, 1),
        b2: get(&profile.betti, 2),
        torsion1: profile.torsion.get(1).cloned().unwrap_or_default(),
        torsion2: profile.torsion.get(2).cloned().unwrap_or_default(),
    })
}

/// Full report of the rational-superperfectness pipeline.
#[derive(Clone, Debug, Serialize)]
pub struct QSuperperfectReport {
    pub generators: Vec<String>,
    pub relator_count: usize,
    pub c2_profile: HomologyProfile,
    pub c3_profile: Option<HomologyProfile>,
    /// b1(C2) = 0 and b2 of the final complex = 0.
    pub q_superperfect_proxy: bool,
    /// Rational acyclicity of the final complex (C3 when cycles were coned).
    pub q_acyclic: bool,
    /// H3 of C3 vanishes (only present after coning).
    pub h3_zero: Option<bool>,
    /// Double barycentric subdivision of the final complex, ready for the
    /// realization pipeline.
    #[serde(skip)]
    pub simplicial: SimplicialComplex,
}

pub fn q_superperfect_report(
    p: &Presentation,
    cycles: Option<&[TwoCycle]>,
) -> Result<QSuperperfectReport, GroupError> {
    let pc = presentation_complex(p);
    let c2_profile = homology(&pc.delta)?;
    let (final_delta, c3_profile) = match cycles {
        Some(cycles) if !cycles.is_empty() => {
            let c3 = cone_off(&pc.delta, cycles)?;
            let profile = homology(&c3)?;
            (c3, Some(profile))
        }
        _ => (pc.delta.clone(), None),
    };
    let final_profile = c3_profile.as_ref().unwrap_or(&c2_profile);
    let b2_final = final_profile.betti.get(2).copied().unwrap_or(0);
    let q_superperfect_proxy = c2_profile.betti.get(1).copied().unwrap_or(0) == 0 && b2_final == 0;
    let q_acyclic = final_profile.is_q_acyclic();
    let h3_zero = c3_profile.as_ref().map(|p| {
        p.betti.get(3).copied().unwrap_or(0) == 0 && p.torsion.get(3).is_none_or(|t| t.is_empty())
    });
    let simplicial = barycentric_subdivision(&final_delta, 2)?;
    Ok(QSuperperfectReport {
        generators: p.generators.clone(),
        relator_count: p.relators.len(),
        c2_profile,
        c3_profile,
        q_superperfect_proxy,
        q_acyclic,
        h3_zero,
        simplicial,
    })
}
