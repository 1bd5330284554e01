//! Double-cover surgery on dual complexes: every top-dimensional cell gets
//! two copies sharing the same boundary (the two preimages of a
//! zero-dimensional stratum under a ramified double cover), and deleting one
//! copy per pair restores the original complex. Lower-dimensional cells stay
//! unique because their strata remain connected under the cover.

use std::collections::BTreeMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::complex::{Cell, SimplicialComplex};
use crate::delta::{DeltaComplex, DeltaError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SurgeryError {
    #[error("the empty complex cannot be doubled")]
    EmptyComplex,
    #[error("choice map is missing top cell {0:?}")]
    IncompleteChoice(Cell),
    #[error("choice for {cell:?} must be 0 or 1, got {got}")]
    BadChoice { cell: Cell, got: usize },
    #[error("choice map mentions unknown top cell {0:?}")]
    UnknownChoice(Cell),
    #[error(transparent)]
    Delta(#[from] DeltaError),
}

/// A complex with its top-dimensional cells doubled, realized as a
/// Δ-complex. `copies[cell]` are the ids of the two copies.
#[derive(Clone, Debug)]
pub struct DoubledComplex {
    base: SimplicialComplex,
    doubled_dim: usize,
    delta: DeltaComplex,
    copies: BTreeMap<Cell, [usize; 2]>,
}

impl DoubledComplex {
    pub fn base(&self) -> &SimplicialComplex {
        &self.base
    }

    pub fn doubled_dim(&self) -> usize {
        self.doubled_dim
    }

    pub fn delta(&self) -> &DeltaComplex {
        &self.delta
    }

    pub fn copies(&self) -> &BTreeMap<Cell, [usize; 2]> {
        &self.copies
    }
}

/// Doubles every cell of top dimension d = dim C, boundaries shared.
pub fn double_cover_complex(c: &SimplicialComplex) -> Result<DoubledComplex, SurgeryError> {
    let d = c.dim().ok_or(SurgeryError::EmptyComplex)?;
    let mut b = DeltaComplex::builder();
    let mut ids: BTreeMap<Cell, usize> = BTreeMap::new();
    let mut copies: BTreeMap<Cell, [usize; 2]> = BTreeMap::new();
    for k in 0..=d {
        for cell in c.cells_of_dim(k) {
            if k == 0 {
                let id = b.add_vertex(cell[0].clone());
                if d == 0 {
                    // copies carry the same label; ids keep them apart
                    let twin = b.add_vertex(cell[0].clone());
                    copies.insert((*cell).clone(), [id, twin]);
                }
                ids.insert((*cell).clone(), id);
                continue;
            }
            let faces: Vec<usize> = (0..=k)
                .map(|i| {
                    let mut f = (*cell).clone();
                    f.remove(i);
                    ids[&f]
                })
                .collect();
            let id = b.add_cell(faces.clone())?;
            ids.insert((*cell).clone(), id);
            if k == d {
                let twin = b.add_cell(faces)?;
                copies.insert((*cell).clone(), [id, twin]);
            }
        }
    }
    Ok(DoubledComplex {
        base: c.clone(),
        doubled_dim: d,
        delta: b.build(),
        copies,
    })
}

/// Deletes the non-chosen copy of every doubled cell; `None` chooses copy 0
/// everywhere. The result is simplicial and equals the base complex.
pub fn select_preimages(
    dc: &DoubledComplex,
    choice: Option<&BTreeMap<Cell, usize>>,
) -> Result<SimplicialComplex, SurgeryError> {
    if let Some(map) = choice {
        for key in map.keys() {
            if !dc.copies.contains_key(key) {
                return Err(SurgeryError::UnknownChoice(key.clone()));
            }
        }
        for cell in dc.copies.keys() {
            match map.get(cell) {
                None => return Err(SurgeryError::IncompleteChoice(cell.clone())),
                Some(&i) if i > 1 => {
                    return Err(SurgeryError::BadChoice {
                        cell: cell.clone(),
                        got: i,
                    })
                }
                Some(_) => {}
            }
        }
    }
    let chosen = |cell: &Cell| -> usize {
        let i = choice.map_or(0, |m| m[cell]);
        dc.copies[cell][i]
    };
    let delta = &dc.delta;
    let dropped: Vec<usize> = dc
        .copies
        .iter()
        .map(|(cell, pair)| {
            let keep = chosen(cell);
            if pair[0] == keep {
                pair[1]
            } else {
                pair[0]
            }
        })
        .collect();
    // rebuild the surviving cells through their resolved vertex sets
    let mut facets: Vec<Vec<String>> = Vec::new();
    let dim = delta.dim().expect("doubled complexes are nonempty");
    for k in 0..=dim {
        for &id in delta.cells_of_dim(k) {
            if dropped.contains(&id) {
                continue;
            }
            let labels: Vec<String> = delta
                .vertex_ids_of(id)
                .into_iter()
                .map(|v| delta.vertex_label(v).expect("vertex cell").to_string())
                .collect();
            facets.push(labels);
        }
    }
    Ok(SimplicialComplex::from_facets(facets).expect("copies share simplicial boundaries"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RoundtripReport {
    pub holds: bool,
    pub choices_checked: u64,
    pub exhaustive: bool,
}

/// Checks double_cover_complex followed by select_preimages against the
/// identity, exhaustively over all 2^t choice maps when t <= 10 top cells,
/// else over 1024 seeded random choices.
pub fn verify_roundtrip(c: &SimplicialComplex) -> Result<RoundtripReport, SurgeryError> {
    verify_roundtrip_seeded(c, 0)
}

pub fn verify_roundtrip_seeded(
    c: &SimplicialComplex,
    seed: u64,
) -> Result<RoundtripReport, SurgeryError> {
    let dc = double_cover_complex(c)?;
    let tops: Vec<Cell> = dc.copies.keys().cloned().collect();
    let exhaustive = tops.len() <= 10;
    let mut holds = true;
    let mut checked = 0u64;
    let try_choice = |bits: &dyn Fn(usize) -> usize| -> Result<bool, SurgeryError> {
        let map: BTreeMap<Cell, usize> = tops
            .iter()
            .enumerate()
            .map(|(i, c)| (c.clone(), bits(i)))
            .collect();
        let out = select_preimages(&dc, Some(&map))?;
        Ok(out.isomorphic_labeled(c))
    };
    if exhaustive {
        for mask in 0u64..(1u64 << tops.len()) {
            checked += 1;
            if !try_choice(&|i| ((mask >> i) & 1) as usize)? {
                holds = false;
                break;
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..1024 {
            let mask: Vec<usize> = (0..tops.len()).map(|_| rng.gen_range(0..2usize)).collect();
            checked += 1;
            if !try_choice(&|i| mask[i])? {
                holds = false;
                break;
            }
        }
    }
    Ok(RoundtripReport {
        holds,
        choices_checked: checked,
        exhaustive,
    })
}
