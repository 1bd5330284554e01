//! JSON file schemas.
//!
//! Simplicial complexes serialize as `{"vertices": [...], "facets": [[...]]}`
//! with faces implied by closure; the writer emits maximal cells only,
//! sorted. Δ-complexes serialize as `{"cells": [{"id", "dim", "label"} |
//! {"id", "dim", "faces"}]}`.

use num_bigint::BigInt;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};

use crate::complex::SimplicialComplex;
use crate::delta::{DeltaComplex, DeltaError};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SimplicialComplexFile {
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<String>>,
}

impl From<SimplicialComplex> for SimplicialComplexFile {
    fn from(c: SimplicialComplex) -> Self {
        SimplicialComplexFile {
            vertices: c.vertices().to_vec(),
            facets: c.facets(),
        }
    }
}

impl TryFrom<SimplicialComplexFile> for SimplicialComplex {
    type Error = crate::complex::ComplexError;

    fn try_from(f: SimplicialComplexFile) -> Result<Self, Self::Error> {
        SimplicialComplex::from_parts(f.vertices, f.facets)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DeltaCellFile {
    pub id: usize,
    pub dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub faces: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DeltaComplexFile {
    pub cells: Vec<DeltaCellFile>,
}

impl From<DeltaComplex> for DeltaComplexFile {
    fn from(d: DeltaComplex) -> Self {
        let mut cells = Vec::with_capacity(d.total_cells());
        let dim = d.dim();
        if let Some(dim) = dim {
            for k in 0..=dim {
                for &id in d.cells_of_dim(k) {
                    cells.push(DeltaCellFile {
                        id,
                        dim: k,
                        label: d.vertex_label(id).map(|s| s.to_string()),
                        faces: if k == 0 {
                            None
                        } else {
                            Some(d.faces(id).to_vec())
                        },
                    });
                }
            }
        }
        DeltaComplexFile { cells }
    }
}

impl TryFrom<DeltaComplexFile> for DeltaComplex {
    type Error = DeltaError;

    fn try_from(f: DeltaComplexFile) -> Result<Self, Self::Error> {
        // ids in the file may be sparse; rebuild densely in (dim, id) order
        let mut cells = f.cells;
        cells.sort_by_key(|c| (c.dim, c.id));
        {
            let mut seen = std::collections::BTreeSet::new();
            for c in &cells {
                if !seen.insert(c.id) {
                    return Err(DeltaError::DuplicateId(c.id));
                }
            }
        }
        let mut remap = std::collections::BTreeMap::new();
        let mut b = DeltaComplex::builder();
        for c in &cells {
            let new = match (&c.label, &c.faces) {
                (Some(l), None) if c.dim == 0 => b.add_vertex(l.clone()),
                (None, None) if c.dim == 0 => b.add_vertex(format!("v{}", c.id)),
                (_, Some(faces)) => {
                    let mapped: Result<Vec<usize>, DeltaError> = faces
                        .iter()
                        .map(|f| remap.get(f).copied().ok_or(DeltaError::UnknownFace(*f)))
                        .collect();
                    b.add_cell(mapped?)?
                }
                _ => {
                    return Err(DeltaError::MissingFaces {
                        cell: c.id,
                        dim: c.dim,
                    })
                }
            };
            remap.insert(c.id, new);
        }
        Ok(b.build())
    }
}

/// Either complex kind, detected from the JSON shape.
#[derive(Clone, Debug)]
pub enum ComplexInput {
    Simplicial(SimplicialComplex),
    Delta(DeltaComplex),
}

pub fn parse_complex_json(text: &str) -> Result<ComplexInput, String> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| format!("invalid JSON: {e}"))?;
    if value.get("cells").is_some() {
        let d: DeltaComplex = serde_json::from_value(value)
            .map_err(|e| format!("invalid delta-complex file: {e}"))?;
        Ok(ComplexInput::Delta(d))
    } else if value.get("facets").is_some() || value.get("vertices").is_some() {
        let c: SimplicialComplex = serde_json::from_value(value)
            .map_err(|e| format!("invalid simplicial-complex file: {e}"))?;
        Ok(ComplexInput::Simplicial(c))
    } else {
        Err("expected a simplicial complex (vertices/facets) or a delta complex (cells)".into())
    }
}

/// Two-cycle coefficient vectors over the 2-cells of a Δ-complex, in
/// canonical 2-cell order.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CyclesFile {
    pub cycles: Vec<Vec<i8>>,
}

pub fn serialize_factors<S: Serializer>(v: &Vec<BigInt>, s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for f in v {
        seq.serialize_element(&f.to_string())?;
    }
    seq.end()
}

pub fn serialize_torsion<S: Serializer>(v: &Vec<Vec<BigInt>>, s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for inner in v {
        let strings: Vec<String> = inner.iter().map(|f| f.to_string()).collect();
        seq.serialize_element(&strings)?;
    }
    seq.end()
}
