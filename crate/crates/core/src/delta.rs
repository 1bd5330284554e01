//! Δ-complexes: ordered-cell complexes with explicit face assignments.
//!
//! Cells reference faces by id, so identified faces (needed for presentation
//! complexes and doubled cells) are representable. The builder checks the
//! simplicial compatibility of face assignments, which is what makes the
//! boundary operator square to zero.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{Cell, FVector, SimplicialComplex};
use crate::io::DeltaComplexFile;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DeltaError {
    #[error("face id {0} does not exist")]
    UnknownFace(usize),
    #[error("cell of dimension {dim} needs {expected} faces, got {got}")]
    WrongFaceCount {
        dim: usize,
        expected: usize,
        got: usize,
    },
    #[error("face {face} has dimension {got}, expected {expected}")]
    WrongFaceDimension {
        face: usize,
        got: usize,
        expected: usize,
    },
    #[error("face assignments of cell {cell} violate the simplicial identity at ({i},{j})")]
    InconsistentFaces { cell: usize, i: usize, j: usize },
    #[error("cell {0} does not subdivide to a simplex with distinct vertices")]
    DegenerateCell(usize),
    #[error("cells {0} and {1} share a vertex set; the complex is not simplicial")]
    NotSimplicial(usize, usize),
    #[error("rounds must be 1 or 2, got {0}")]
    BadRounds(u8),
    #[error("duplicate cell id {0}")]
    DuplicateId(usize),
    #[error("cell {cell} of dimension {dim} is missing its faces")]
    MissingFaces { cell: usize, dim: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DeltaCellData {
    Vertex(String),
    /// Ordered faces; entry i is the face obtained by deleting vertex i.
    Faces(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaCell {
    pub id: usize,
    pub data: DeltaCellData,
}

impl DeltaCell {
    pub fn dim(&self) -> usize {
        match &self.data {
            DeltaCellData::Vertex(_) => 0,
            DeltaCellData::Faces(f) => f.len() - 1,
        }
    }
}

/// Δ-complex with cells indexed by dense ids (id = position in `cells`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "DeltaComplexFile", try_from = "DeltaComplexFile")]
pub struct DeltaComplex {
    cells: Vec<DeltaCell>,
    by_dim: Vec<Vec<usize>>,
}

pub struct DeltaBuilder {
    cells: Vec<DeltaCell>,
    by_dim: Vec<Vec<usize>>,
}

impl Default for DeltaBuilder {
    fn default() -> Self {
        Self::new()
    }
}

impl DeltaBuilder {
    pub fn new() -> Self {
        DeltaBuilder {
            cells: Vec::new(),
            by_dim: Vec::new(),
        }
    }

    pub fn add_vertex(&mut self, label: impl Into<String>) -> usize {
        let id = self.cells.len();
        self.cells.push(DeltaCell {
            id,
            data: DeltaCellData::Vertex(label.into()),
        });
        self.slot(0).push(id);
        id
    }

    /// Adds a k-cell (k = faces.len() - 1 >= 1), validating that the faces
    /// exist, have dimension k-1, and compose consistently:
    /// `face_i(face_j(c)) == face_{j-1}(face_i(c))` for i < j.
    pub fn add_cell(&mut self, faces: Vec<usize>) -> Result<usize, DeltaError> {
        let id = self.cells.len();
        if faces.len() < 2 {
            return Err(DeltaError::WrongFaceCount {
                dim: 1,
                expected: 2,
                got: faces.len(),
            });
        }
        let dim = faces.len() - 1;
        for &f in &faces {
            if f >= self.cells.len() {
                return Err(DeltaError::UnknownFace(f));
            }
            let fd = self.cells[f].dim();
            if fd != dim - 1 {
                return Err(DeltaError::WrongFaceDimension {
                    face: f,
                    got: fd,
                    expected: dim - 1,
                });
            }
        }
        if dim >= 2 {
            for j in 0..faces.len() {
                for i in 0..j {
                    let fj = self.faces_of(faces[j]);
                    let fi = self.faces_of(faces[i]);
                    if fj[i] != fi[j - 1] {
                        return Err(DeltaError::InconsistentFaces { cell: id, i, j });
                    }
                }
            }
        }
        self.cells.push(DeltaCell {
            id,
            data: DeltaCellData::Faces(faces),
        });
        self.slot(dim).push(id);
        Ok(id)
    }

    fn faces_of(&self, id: usize) -> &[usize] {
        match &self.cells[id].data {
            DeltaCellData::Vertex(_) => &[],
            DeltaCellData::Faces(f) => f,
        }
    }

    fn slot(&mut self, dim: usize) -> &mut Vec<usize> {
        while self.by_dim.len() <= dim {
            self.by_dim.push(Vec::new());
        }
        &mut self.by_dim[dim]
    }

    pub fn build(self) -> DeltaComplex {
        DeltaComplex {
            cells: self.cells,
            by_dim: self.by_dim,
        }
    }
}

impl DeltaComplex {
    pub fn builder() -> DeltaBuilder {
        DeltaBuilder::new()
    }

    pub fn dim(&self) -> Option<usize> {
        (0..self.by_dim.len())
            .rev()
            .find(|&k| !self.by_dim[k].is_empty())
    }

    pub fn cell_count(&self, k: usize) -> usize {
        self.by_dim.get(k).map_or(0, |v| v.len())
    }

    pub fn total_cells(&self) -> usize {
        self.cells.len()
    }

    /// Ids of the k-cells in insertion order (the canonical order).
    pub fn cells_of_dim(&self, k: usize) -> &[usize] {
        self.by_dim.get(k).map_or(&[], |v| v.as_slice())
    }

    pub fn cell(&self, id: usize) -> &DeltaCell {
        &self.cells[id]
    }

    pub fn dim_of(&self, id: usize) -> usize {
        self.cells[id].dim()
    }

    pub fn faces(&self, id: usize) -> &[usize] {
        match &self.cells[id].data {
            DeltaCellData::Vertex(_) => &[],
            DeltaCellData::Faces(f) => f,
        }
    }

    pub fn vertex_label(&self, id: usize) -> Option<&str> {
        match &self.cells[id].data {
            DeltaCellData::Vertex(l) => Some(l),
            DeltaCellData::Faces(_) => None,
        }
    }

    pub fn f_vector(&self) -> FVector {
        let d = match self.dim() {
            None => return FVector(Vec::new()),
            Some(d) => d,
        };
        FVector((0..=d).map(|k| self.cell_count(k)).collect())
    }

    /// The sub-cell of `id` spanned by the vertex-index subset `keep`
    /// (sorted). Deletes missing indices from the top down; well-defined by
    /// the simplicial identity.
    pub fn resolve(&self, id: usize, keep: &[u8]) -> usize {
        let mut cur = id;
        let dim = self.dim_of(id);
        for idx in (0..=dim as u8).rev() {
            if !keep.contains(&idx) {
                cur = self.faces(cur)[idx as usize];
            }
        }
        cur
    }

    /// Vertex ids of a cell, in vertex order (may repeat for identified faces).
    pub fn vertex_ids_of(&self, id: usize) -> Vec<usize> {
        let dim = self.dim_of(id);
        (0..=dim as u8).map(|i| self.resolve(id, &[i])).collect()
    }

    /// Builds a Δ-complex from a simplicial complex, cells in lexicographic
    /// order per dimension. Returns the id of each original cell.
    pub fn from_simplicial(c: &SimplicialComplex) -> (DeltaComplex, BTreeMap<Cell, usize>) {
        let mut b = DeltaBuilder::new();
        let mut ids: BTreeMap<Cell, usize> = BTreeMap::new();
        let dim = c.dim();
        if let Some(dim) = dim {
            for k in 0..=dim {
                for cell in c.cells_of_dim(k) {
                    let id = if k == 0 {
                        b.add_vertex(cell[0].clone())
                    } else {
                        let faces: Vec<usize> = (0..=k)
                            .map(|i| {
                                let mut f = (*cell).clone();
                                f.remove(i);
                                ids[&f]
                            })
                            .collect();
                        b.add_cell(faces)
                            .expect("faces of a simplicial cell are consistent")
                    };
                    ids.insert((*cell).clone(), id);
                }
            }
        }
        (b.build(), ids)
    }

    /// One round of barycentric subdivision; the result is again a Δ-complex
    /// whose j-cells are chains of iterated faces. Vertices of the result are
    /// labeled `c{id}` after the cell of `self` they sit on.
    pub fn barycentric(&self) -> DeltaComplex {
        let mut b = DeltaBuilder::new();
        // key: (owning cell, chain of vertex-index subsets, top = full)
        let mut ids: BTreeMap<(usize, Vec<Vec<u8>>), usize> = BTreeMap::new();
        let dim = match self.dim() {
            None => return b.build(),
            Some(d) => d,
        };
        for id in 0..self.cells.len() {
            let m = self.dim_of(id) as u8;
            let full: Vec<u8> = (0..=m).collect();
            let new = b.add_vertex(format!("c{id}"));
            ids.insert((id, vec![full]), new);
        }
        for j in 1..=dim {
            // deterministic sweep: cells in id order, chains in lex order
            for id in 0..self.cells.len() {
                let m = self.dim_of(id);
                if m < j {
                    continue;
                }
                let full: Vec<u8> = (0..=m as u8).collect();
                for chain in chains_below(&full, j) {
                    let mut key_chain = chain.clone();
                    key_chain.push(full.clone());
                    let faces: Vec<usize> = (0..=j)
                        .map(|i| self.subdivided_face(&key_chain, id, i, &ids))
                        .collect();
                    let new = b.add_cell(faces).expect("subdivision faces are consistent");
                    ids.insert((id, key_chain), new);
                }
            }
        }
        b.build()
    }

    /// Face i of the sd-cell (id, chain): drop chain[i]; when the top is
    /// dropped the cell relocates to the sub-cell spanned by the new top.
    fn subdivided_face(
        &self,
        chain: &[Vec<u8>],
        id: usize,
        i: usize,
        ids: &BTreeMap<(usize, Vec<Vec<u8>>), usize>,
    ) -> usize {
        let j = chain.len() - 1;
        if i < j {
            let mut sub: Vec<Vec<u8>> = Vec::with_capacity(j);
            for (t, part) in chain.iter().enumerate() {
                if t != i {
                    sub.push(part.clone());
                }
            }
            ids[&(id, sub)]
        } else {
            let new_top = &chain[j - 1];
            let target = self.resolve(id, new_top);
            // reindex earlier chain entries through new_top
            let pos: BTreeMap<u8, u8> = new_top
                .iter()
                .enumerate()
                .map(|(p, &v)| (v, p as u8))
                .collect();
            let sub: Vec<Vec<u8>> = chain[..j]
                .iter()
                .map(|part| part.iter().map(|v| pos[v]).collect())
                .collect();
            ids[&(target, sub)]
        }
    }

    /// Interprets the Δ-complex as a simplicial complex when every cell has
    /// distinct vertices and distinct cells have distinct vertex sets.
    pub fn to_simplicial(&self) -> Result<SimplicialComplex, DeltaError> {
        let mut facets: Vec<Vec<String>> = Vec::new();
        let mut seen: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for id in 0..self.cells.len() {
            let mut vs = self.vertex_ids_of(id);
            vs.sort_unstable();
            if vs.windows(2).any(|w| w[0] == w[1]) {
                return Err(DeltaError::DegenerateCell(id));
            }
            if let Some(&other) = seen.get(&vs) {
                return Err(DeltaError::NotSimplicial(other, id));
            }
            seen.insert(vs.clone(), id);
            facets.push(
                vs.iter()
                    .map(|&v| self.vertex_label(v).expect("vertex cell").to_string())
                    .collect(),
            );
        }
        Ok(SimplicialComplex::from_facets(facets).expect("labels are distinct per cell"))
    }
}

/// Strictly increasing chains of nonempty proper subsets below `top`, of
/// length `len`, in lexicographic order.
fn chains_below(top: &[u8], len: usize) -> Vec<Vec<Vec<u8>>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for sub in proper_nonempty_subsets(top) {
        for mut chain in chains_below(&sub, len - 1) {
            chain.push(sub.clone());
            out.push(chain);
        }
    }
    out
}

fn proper_nonempty_subsets(set: &[u8]) -> Vec<Vec<u8>> {
    let n = set.len();
    let mut out = Vec::new();
    for mask in 1u32..((1u32 << n) - 1) {
        let sub: Vec<u8> = (0..n)
            .filter(|&i| mask & (1 << i) != 0)
            .map(|i| set[i])
            .collect();
        out.push(sub);
    }
    out.sort();
    out
}

/// Order-complex subdivision bridging Δ-complexes into the simplicial
/// pipeline; `rounds = 2` is guaranteed simplicial even with identified
/// faces, `rounds = 1` suffices for complexes that are already simplicial.
pub fn barycentric_subdivision(
    d: &DeltaComplex,
    rounds: u8,
) -> Result<SimplicialComplex, DeltaError> {
    match rounds {
        1 => d.barycentric().to_simplicial(),
        2 => d.barycentric().barycentric().to_simplicial(),
        r => Err(DeltaError::BadRounds(r)),
    }
}
