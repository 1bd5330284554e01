//! Finite simplicial complexes over opaque string labels.
//!
//! Cells are stored explicitly in every dimension (not facet-only) so that
//! star removal and membership tests are direct set operations. All
//! enumerations run in lexicographic order of sorted label vectors, which
//! fixes sign conventions and makes every operation bit-deterministic.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::io::SimplicialComplexFile;

/// A cell is a sorted, duplicate-free, nonempty vector of vertex labels.
pub type Cell = Vec<String>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("cell {0:?} is not in the complex")]
    MissingCell(Cell),
    #[error("label `{0}` collides with an existing vertex")]
    LabelCollision(String),
    #[error("cells must be nonempty")]
    EmptyCell,
    #[error("operation requires a nonempty complex")]
    EmptyComplex,
}

/// Face-closed finite simplicial complex with labeled vertices.
///
/// Invariants (maintained by every constructor and operation):
/// - every nonempty subset of a cell is a cell,
/// - every vertex occurs as a singleton cell and every cell only mentions
///   known vertices,
/// - `vertices` is sorted and duplicate-free.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "SimplicialComplexFile", try_from = "SimplicialComplexFile")]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    cells: BTreeSet<Cell>,
}

/// Cell counts per dimension; `counts[k]` is the number of k-cells.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FVector(pub Vec<usize>);

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().map(|c| c.to_string()).join(","))
    }
}

impl FVector {
    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }
}

fn normalize_cell(cell: &[String]) -> Result<Cell, ComplexError> {
    if cell.is_empty() {
        return Err(ComplexError::EmptyCell);
    }
    let mut c: Cell = cell.to_vec();
    c.sort();
    for w in c.windows(2) {
        if w[0] == w[1] {
            return Err(ComplexError::DuplicateLabel(w[0].clone()));
        }
    }
    Ok(c)
}

fn proper_subsets(cell: &[String]) -> Vec<Cell> {
    let mut out = Vec::new();
    for k in 1..cell.len() {
        for sub in cell.iter().cloned().combinations(k) {
            out.push(sub);
        }
    }
    out
}

impl SimplicialComplex {
    /// The complex with no vertices and no cells. Legal input only to
    /// `f_vector` and the isomorphism checks.
    pub fn empty() -> Self {
        SimplicialComplex {
            vertices: Vec::new(),
            cells: BTreeSet::new(),
        }
    }

    /// Builds the face closure of the given cells; vertices are inferred.
    pub fn from_facets<I, C>(facets: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = C>,
        C: AsRef<[String]>,
    {
        Self::from_parts(Vec::new(), facets)
    }

    /// Builds the face closure of `facets` with an explicit vertex list;
    /// vertices that occur in no facet become isolated singleton cells.
    pub fn from_parts<I, C>(vertices: Vec<String>, facets: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = C>,
        C: AsRef<[String]>,
    {
        let mut cells = BTreeSet::new();
        let mut verts: BTreeSet<String> = BTreeSet::new();
        {
            let mut seen = BTreeSet::new();
            for v in &vertices {
                if !seen.insert(v.clone()) {
                    return Err(ComplexError::DuplicateLabel(v.clone()));
                }
            }
        }
        verts.extend(vertices.iter().cloned());
        for facet in facets {
            let cell = normalize_cell(facet.as_ref())?;
            verts.extend(cell.iter().cloned());
            for sub in proper_subsets(&cell) {
                cells.insert(sub);
            }
            cells.insert(cell);
        }
        for v in &verts {
            cells.insert(vec![v.clone()]);
        }
        Ok(SimplicialComplex {
            vertices: verts.into_iter().collect(),
            cells,
        })
    }

    /// Convenience constructor from `&str` facets.
    pub fn from_str_facets(facets: &[&[&str]]) -> Result<Self, ComplexError> {
        Self::from_facets(
            facets
                .iter()
                .map(|f| f.iter().map(|s| s.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        )
    }

    /// The k-skeleton of the full simplex on `labels`: every subset of size
    /// at most k+1 is a cell.
    pub fn full_skeleton(labels: &[String], k: usize) -> Result<Self, ComplexError> {
        let mut seen = BTreeSet::new();
        for l in labels {
            if !seen.insert(l.clone()) {
                return Err(ComplexError::DuplicateLabel(l.clone()));
            }
        }
        let sorted: Vec<String> = seen.iter().cloned().collect();
        let mut cells = BTreeSet::new();
        let top = (k + 1).min(sorted.len());
        for size in 1..=top {
            for sub in sorted.iter().cloned().combinations(size) {
                cells.insert(sub);
            }
        }
        Ok(SimplicialComplex {
            vertices: sorted,
            cells,
        })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    /// All cells in lexicographic order of sorted label vectors.
    pub fn cells(&self) -> impl Iterator<Item = &Cell> {
        self.cells.iter()
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn cells_of_dim(&self, k: usize) -> Vec<&Cell> {
        self.cells.iter().filter(|c| c.len() == k + 1).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Dimension of the complex; `None` when empty.
    pub fn dim(&self) -> Option<usize> {
        self.cells.iter().map(|c| c.len() - 1).max()
    }

    pub fn contains(&self, cell: &[String]) -> bool {
        match normalize_cell(cell) {
            Ok(c) => self.cells.contains(&c),
            Err(_) => false,
        }
    }

    pub fn f_vector(&self) -> FVector {
        let dim = match self.dim() {
            None => return FVector(Vec::new()),
            Some(d) => d,
        };
        let mut counts = vec![0usize; dim + 1];
        for c in &self.cells {
            counts[c.len() - 1] += 1;
        }
        FVector(counts)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().euler_characteristic()
    }

    /// Maximal cells, in lexicographic order.
    pub fn facets(&self) -> Vec<Cell> {
        self.cells
            .iter()
            .filter(|c| {
                !self
                    .cells
                    .iter()
                    .any(|d| d.len() > c.len() && is_subset(c, d))
            })
            .cloned()
            .collect()
    }

    /// All cells having `sigma` as a face (including `sigma` itself).
    pub fn star(&self, sigma: &[String]) -> Result<Vec<Cell>, ComplexError> {
        let s = self.require_cell(sigma)?;
        Ok(self
            .cells
            .iter()
            .filter(|c| is_subset(&s, c))
            .cloned()
            .collect())
    }

    /// The link of `sigma`: all cells disjoint from `sigma` whose union with
    /// `sigma` is a cell. Face-closed; may be empty (link of a facet).
    pub fn link(&self, sigma: &[String]) -> Result<SimplicialComplex, ComplexError> {
        let s = self.require_cell(sigma)?;
        let mut cells = BTreeSet::new();
        let mut verts = BTreeSet::new();
        for c in &self.cells {
            if is_subset(&s, c) && c.len() > s.len() {
                let rest: Cell = c.iter().filter(|v| !s.contains(v)).cloned().collect();
                verts.extend(rest.iter().cloned());
                cells.insert(rest);
            }
        }
        Ok(SimplicialComplex {
            vertices: verts.into_iter().collect(),
            cells,
        })
    }

    /// Cells of dimension at most k.
    pub fn skeleton(&self, k: usize) -> SimplicialComplex {
        let cells: BTreeSet<Cell> = self
            .cells
            .iter()
            .filter(|c| c.len() <= k + 1)
            .cloned()
            .collect();
        let verts: BTreeSet<String> = cells.iter().flat_map(|c| c.iter().cloned()).collect();
        SimplicialComplex {
            vertices: verts.into_iter().collect(),
            cells,
        }
    }

    /// Removes every cell having `sigma` as a face. The result is face-closed;
    /// vertices of `sigma` disappear when `sigma` is a singleton.
    pub fn remove_star(&self, sigma: &[String]) -> Result<SimplicialComplex, ComplexError> {
        let s = self.require_cell(sigma)?;
        let cells: BTreeSet<Cell> = self
            .cells
            .iter()
            .filter(|c| !is_subset(&s, c))
            .cloned()
            .collect();
        let verts: BTreeSet<String> = cells.iter().flat_map(|c| c.iter().cloned()).collect();
        Ok(SimplicialComplex {
            vertices: verts.into_iter().collect(),
            cells,
        })
    }

    /// Stellar subdivision at `sigma` with fresh vertex `w`: the star of
    /// `sigma` is replaced by the cone from `w` over (boundary of sigma) *
    /// link(sigma). Preserves the Euler characteristic and homology.
    pub fn stellar_subdivision(
        &self,
        sigma: &[String],
        w: &str,
    ) -> Result<SimplicialComplex, ComplexError> {
        let s = self.require_cell(sigma)?;
        if self.vertices.iter().any(|v| v == w) {
            return Err(ComplexError::LabelCollision(w.to_string()));
        }
        let mut cells: BTreeSet<Cell> = self
            .cells
            .iter()
            .filter(|c| !is_subset(&s, c))
            .cloned()
            .collect();
        // faces of sigma, proper and possibly empty
        let mut tau_list: Vec<Cell> = vec![Vec::new()];
        tau_list.extend(proper_subsets(&s));
        // link cells, possibly empty
        let mut rho_list: Vec<Cell> = vec![Vec::new()];
        for c in &self.cells {
            if is_subset(&s, c) && c.len() > s.len() {
                rho_list.push(c.iter().filter(|v| !s.contains(v)).cloned().collect());
            }
        }
        for tau in &tau_list {
            for rho in &rho_list {
                let mut cell: Cell = Vec::with_capacity(1 + tau.len() + rho.len());
                cell.push(w.to_string());
                cell.extend(tau.iter().cloned());
                cell.extend(rho.iter().cloned());
                cell.sort();
                cells.insert(cell);
            }
        }
        let verts: BTreeSet<String> = cells.iter().flat_map(|c| c.iter().cloned()).collect();
        Ok(SimplicialComplex {
            vertices: verts.into_iter().collect(),
            cells,
        })
    }

    /// Checks the structural invariants; used by tests and the JSON reader.
    pub fn is_valid(&self) -> bool {
        let vset: BTreeSet<&String> = self.vertices.iter().collect();
        if vset.len() != self.vertices.len() {
            return false;
        }
        for v in &self.vertices {
            if !self.cells.contains(&vec![v.clone()]) {
                return false;
            }
        }
        for c in &self.cells {
            if c.is_empty() || c.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
            if c.iter().any(|v| !vset.contains(v)) {
                return false;
            }
            for sub in proper_subsets(c) {
                if !self.cells.contains(&sub) {
                    return false;
                }
            }
        }
        true
    }

    fn require_cell(&self, sigma: &[String]) -> Result<Cell, ComplexError> {
        let s = normalize_cell(sigma)?;
        if !self.cells.contains(&s) {
            return Err(ComplexError::MissingCell(s));
        }
        Ok(s)
    }
}

fn is_subset(small: &[String], big: &[String]) -> bool {
    // both sorted
    let mut it = big.iter();
    'outer: for s in small {
        for b in it.by_ref() {
            match b.cmp(s) {
                std::cmp::Ordering::Less => continue,
                std::cmp::Ordering::Equal => continue 'outer,
                std::cmp::Ordering::Greater => return false,
            }
        }
        return false;
    }
    true
}

// ---------------------------------------------------------------------------
// normal pseudomanifold check
// ---------------------------------------------------------------------------

/// Outcome of the normal-pseudomanifold test with the first violated
/// condition as certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum PseudomanifoldVerdict {
    Normal,
    /// A maximal cell of dimension below the complex dimension.
    NotPure {
        witness: Cell,
    },
    /// A (d-1)-cell contained in `count` != 2 top cells.
    RidgeCount {
        witness: Cell,
        count: usize,
    },
    /// The facet-ridge adjacency graph is disconnected.
    NotStronglyConnected {
        witness: Cell,
    },
    /// A cell of dimension <= d-2 with disconnected link.
    DisconnectedLink {
        witness: Cell,
    },
}

impl PseudomanifoldVerdict {
    pub fn is_normal(&self) -> bool {
        matches!(self, PseudomanifoldVerdict::Normal)
    }
}

impl SimplicialComplex {
    /// True iff the complex is pure, every ridge lies in exactly two facets,
    /// the complex is strongly connected, and links of cells of codimension
    /// >= 2 are connected. Conditions are checked in that order and the first
    /// > violation is reported.
    pub fn is_normal_pseudomanifold(&self) -> Result<PseudomanifoldVerdict, ComplexError> {
        let d = self.dim().ok_or(ComplexError::EmptyComplex)?;
        // purity
        for f in self.facets() {
            if f.len() - 1 < d {
                return Ok(PseudomanifoldVerdict::NotPure { witness: f });
            }
        }
        // ridge degree
        if d >= 1 {
            for ridge in self.cells_of_dim(d - 1) {
                let count = self
                    .cells
                    .iter()
                    .filter(|c| c.len() == d + 1 && is_subset(ridge, c))
                    .count();
                if count != 2 {
                    return Ok(PseudomanifoldVerdict::RidgeCount {
                        witness: (*ridge).clone(),
                        count,
                    });
                }
            }
        }
        // strong connectivity through ridges
        let tops: Vec<&Cell> = self.cells.iter().filter(|c| c.len() == d + 1).collect();
        if tops.len() > 1 {
            if d == 0 {
                return Ok(PseudomanifoldVerdict::NotStronglyConnected {
                    witness: tops[1].clone(),
                });
            }
            let index: BTreeMap<&Cell, usize> =
                tops.iter().enumerate().map(|(i, c)| (*c, i)).collect();
            let mut ridge_map: BTreeMap<Cell, Vec<usize>> = BTreeMap::new();
            for (i, t) in tops.iter().enumerate() {
                for ridge in t.iter().cloned().combinations(d) {
                    ridge_map.entry(ridge).or_default().push(i);
                }
            }
            let mut seen = vec![false; tops.len()];
            let mut queue = VecDeque::from([0usize]);
            seen[0] = true;
            while let Some(i) = queue.pop_front() {
                for ridge in tops[i].iter().cloned().combinations(d) {
                    for &j in &ridge_map[&ridge] {
                        if !seen[j] {
                            seen[j] = true;
                            queue.push_back(j);
                        }
                    }
                }
            }
            if let Some(missing) = seen.iter().position(|s| !s) {
                let _ = index;
                return Ok(PseudomanifoldVerdict::NotStronglyConnected {
                    witness: tops[missing].clone(),
                });
            }
        }
        // link connectivity for codimension >= 2
        if d >= 2 {
            for k in 0..=d - 2 {
                for cell in self.cells_of_dim(k) {
                    let link = self.link(cell)?;
                    if !link.is_empty() && !link_connected(&link) {
                        return Ok(PseudomanifoldVerdict::DisconnectedLink {
                            witness: (*cell).clone(),
                        });
                    }
                }
            }
        }
        Ok(PseudomanifoldVerdict::Normal)
    }
}

fn link_connected(c: &SimplicialComplex) -> bool {
    if c.vertices.is_empty() {
        return true;
    }
    let idx: BTreeMap<&String, usize> =
        c.vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut adj = vec![Vec::new(); c.vertices.len()];
    for cell in &c.cells {
        if cell.len() == 2 {
            let a = idx[&cell[0]];
            let b = idx[&cell[1]];
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    let mut seen = vec![false; c.vertices.len()];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    while let Some(i) = queue.pop_front() {
        for &j in &adj[i] {
            if !seen[j] {
                seen[j] = true;
                queue.push_back(j);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

// ---------------------------------------------------------------------------
// isomorphism
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsoMode {
    Labeled,
    Unlabeled,
}

/// Labeled mode compares label-cell sets for equality; unlabeled mode searches
/// for a vertex bijection carrying cells onto cells.
pub fn isomorphic(a: &SimplicialComplex, b: &SimplicialComplex, mode: IsoMode) -> bool {
    match mode {
        IsoMode::Labeled => a.isomorphic_labeled(b),
        IsoMode::Unlabeled => a.isomorphic_unlabeled(b).is_some(),
    }
}

impl SimplicialComplex {
    pub fn isomorphic_labeled(&self, other: &SimplicialComplex) -> bool {
        self.vertices == other.vertices && self.cells == other.cells
    }

    /// Backtracking search for a vertex bijection carrying cells to cells,
    /// pruned by f-vectors and per-vertex degree profiles. Returns the
    /// bijection when one exists. Exponential in the worst case; inputs here
    /// never exceed a few dozen vertices.
    pub fn isomorphic_unlabeled(
        &self,
        other: &SimplicialComplex,
    ) -> Option<BTreeMap<String, String>> {
        if self.f_vector() != other.f_vector() {
            return None;
        }
        if self.is_empty() {
            return Some(BTreeMap::new());
        }
        let profile = |c: &SimplicialComplex, v: &String| -> Vec<usize> {
            let dim = c.dim().unwrap_or(0);
            let mut p = vec![0usize; dim + 1];
            for cell in &c.cells {
                if cell.contains(v) {
                    p[cell.len() - 1] += 1;
                }
            }
            p
        };
        let mine: Vec<(String, Vec<usize>)> = self
            .vertices
            .iter()
            .map(|v| (v.clone(), profile(self, v)))
            .collect();
        let theirs: Vec<(String, Vec<usize>)> = other
            .vertices
            .iter()
            .map(|v| (v.clone(), profile(other, v)))
            .collect();
        {
            let mut a: Vec<_> = mine.iter().map(|(_, p)| p.clone()).collect();
            let mut b: Vec<_> = theirs.iter().map(|(_, p)| p.clone()).collect();
            a.sort();
            b.sort();
            if a != b {
                return None;
            }
        }
        let mut assignment: Vec<Option<usize>> = vec![None; mine.len()];
        let mut used = vec![false; theirs.len()];
        fn extend(
            i: usize,
            mine: &[(String, Vec<usize>)],
            theirs: &[(String, Vec<usize>)],
            a: &SimplicialComplex,
            b: &SimplicialComplex,
            assignment: &mut Vec<Option<usize>>,
            used: &mut Vec<bool>,
        ) -> bool {
            if i == mine.len() {
                return true;
            }
            for j in 0..theirs.len() {
                if used[j] || mine[i].1 != theirs[j].1 {
                    continue;
                }
                assignment[i] = Some(j);
                used[j] = true;
                if consistent(i, mine, theirs, a, b, assignment)
                    && extend(i + 1, mine, theirs, a, b, assignment, used)
                {
                    return true;
                }
                assignment[i] = None;
                used[j] = false;
            }
            false
        }
        fn consistent(
            upto: usize,
            mine: &[(String, Vec<usize>)],
            theirs: &[(String, Vec<usize>)],
            a: &SimplicialComplex,
            b: &SimplicialComplex,
            assignment: &[Option<usize>],
        ) -> bool {
            // every cell of `a` within the assigned vertices must map to a cell of `b`
            let map: BTreeMap<&String, &String> = assignment
                .iter()
                .enumerate()
                .filter_map(|(i, j)| j.map(|j| (&mine[i].0, &theirs[j].0)))
                .collect();
            let placed: BTreeSet<&String> = map.keys().copied().collect();
            for cell in &a.cells {
                if cell.iter().all(|v| placed.contains(v))
                    && cell.iter().any(|v| v == &mine[upto].0)
                {
                    let image: Vec<String> = cell.iter().map(|v| map[v].clone()).collect();
                    if !b.contains(&image) {
                        return false;
                    }
                }
            }
            true
        }
        if extend(0, &mine, &theirs, self, other, &mut assignment, &mut used) {
            // cell -> cell both ways holds because the f-vectors agree and the
            // forward map is injective on cells
            Some(
                assignment
                    .iter()
                    .enumerate()
                    .map(|(i, j)| (mine[i].0.clone(), theirs[j.unwrap()].0.clone()))
                    .collect(),
            )
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn cell(names: &[&str]) -> Vec<String> {
        labels(names)
    }

    #[test]
    fn full_skeleton_counts() {
        let k3 = SimplicialComplex::full_skeleton(&labels(&["a", "b", "c"]), 1).unwrap();
        assert_eq!(k3.f_vector(), FVector(vec![3, 3]));
        let t = SimplicialComplex::full_skeleton(&labels(&["a", "b", "c", "d"]), 2).unwrap();
        assert_eq!(t.f_vector(), FVector(vec![4, 6, 4]));
        let big =
            SimplicialComplex::full_skeleton(&labels(&["a", "b", "c", "d", "e", "f", "g"]), 2)
                .unwrap();
        assert_eq!(big.f_vector(), FVector(vec![7, 21, 35]));
    }

    #[test]
    fn full_skeleton_binomial_property() {
        let ls = labels(&["a", "b", "c", "d", "e", "f"]);
        for k in 0..4 {
            let s = SimplicialComplex::full_skeleton(&ls, k).unwrap();
            let f = s.f_vector();
            for (j, &count) in f.0.iter().enumerate() {
                let expected = binomial(6, j + 1);
                assert_eq!(count, expected, "k={k} j={j}");
            }
            assert_eq!(f.0.len(), (k + 1).min(6));
        }
    }

    fn binomial(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn full_skeleton_rejects_duplicates() {
        let err = SimplicialComplex::full_skeleton(&labels(&["a", "a"]), 1);
        assert_eq!(err, Err(ComplexError::DuplicateLabel("a".into())));
    }

    #[test]
    fn remove_star_top_cell() {
        let full = SimplicialComplex::from_str_facets(&[&["a", "b", "c"]]).unwrap();
        let hollow = full.remove_star(&cell(&["a", "b", "c"])).unwrap();
        assert_eq!(hollow.f_vector(), FVector(vec![3, 3]));
        assert!(hollow.is_valid());
    }

    #[test]
    fn remove_star_edge_gives_path() {
        let k3 = SimplicialComplex::full_skeleton(&labels(&["a", "b", "c"]), 1).unwrap();
        let path = k3.remove_star(&cell(&["a", "c"])).unwrap();
        assert_eq!(path.f_vector(), FVector(vec![3, 2]));
        assert!(path.contains(&cell(&["a", "b"])));
        assert!(path.contains(&cell(&["b", "c"])));
        assert!(!path.contains(&cell(&["a", "c"])));
    }

    #[test]
    fn remove_star_missing_cell() {
        let k3 = SimplicialComplex::full_skeleton(&labels(&["a", "b", "c"]), 1).unwrap();
        assert!(matches!(
            k3.remove_star(&cell(&["a", "b", "c"])),
            Err(ComplexError::MissingCell(_))
        ));
    }

    #[test]
    fn remove_star_no_remaining_superset() {
        let s = SimplicialComplex::full_skeleton(&labels(&["a", "b", "c", "d", "e"]), 3).unwrap();
        let sigma = cell(&["b", "d"]);
        let out = s.remove_star(&sigma).unwrap();
        for c in out.cells() {
            assert!(!(sigma.iter().all(|v| c.contains(v))));
        }
        assert!(out.is_valid());
    }

    #[test]
    fn stellar_subdivision_edge_of_hollow_triangle() {
        let hollow =
            SimplicialComplex::from_str_facets(&[&["a", "b"], &["b", "c"], &["a", "c"]]).unwrap();
        let out = hollow.stellar_subdivision(&cell(&["a", "b"]), "w").unwrap();
        assert_eq!(out.f_vector(), FVector(vec![4, 4]));
        assert!(out.contains(&cell(&["a", "w"])));
        assert!(out.contains(&cell(&["b", "w"])));
        assert!(!out.contains(&cell(&["a", "b"])));
        assert_eq!(out.euler_characteristic(), hollow.euler_characteristic());
    }

    #[test]
    fn stellar_subdivision_top_cell_cones() {
        let full = SimplicialComplex::from_str_facets(&[&["a", "b", "c"]]).unwrap();
        let out = full
            .stellar_subdivision(&cell(&["a", "b", "c"]), "w")
            .unwrap();
        assert_eq!(out.f_vector(), FVector(vec![4, 6, 3]));
        for t in [["a", "b", "w"], ["b", "c", "w"], ["a", "c", "w"]] {
            assert!(out.contains(&cell(&t)));
        }
        assert_eq!(out.euler_characteristic(), 1);
    }

    #[test]
    fn stellar_subdivision_boundary_tetrahedron() {
        let t = SimplicialComplex::full_skeleton(&labels(&["a", "b", "c", "d"]), 2).unwrap();
        let out = t.stellar_subdivision(&cell(&["a", "b", "c"]), "w").unwrap();
        assert_eq!(out.f_vector(), FVector(vec![5, 9, 6]));
        assert_eq!(out.euler_characteristic(), 2);
    }

    #[test]
    fn stellar_subdivision_label_collision() {
        let full = SimplicialComplex::from_str_facets(&[&["a", "b", "c"]]).unwrap();
        assert_eq!(
            full.stellar_subdivision(&cell(&["a", "b"]), "c"),
            Err(ComplexError::LabelCollision("c".into()))
        );
    }

    #[test]
    fn link_and_skeleton() {
        let t = SimplicialComplex::full_skeleton(&labels(&["a", "b", "c", "d"]), 2).unwrap();
        let link = t.link(&cell(&["a"])).unwrap();
        assert_eq!(link.f_vector(), FVector(vec![3, 3]));
        let full3 = SimplicialComplex::full_skeleton(&labels(&["a", "b", "c", "d"]), 3).unwrap();
        let k4 = full3.skeleton(1);
        assert_eq!(k4.f_vector(), FVector(vec![4, 6]));
    }

    #[test]
    fn link_of_facet_is_empty() {
        let full = SimplicialComplex::from_str_facets(&[&["a", "b", "c"]]).unwrap();
        let link = full.link(&cell(&["a", "b", "c"])).unwrap();
        assert!(link.is_empty());
        assert_eq!(link.f_vector(), FVector(vec![]));
        assert!(link.is_valid());
    }

    #[test]
    fn skeleton_above_dimension_is_identity() {
        let t = SimplicialComplex::full_skeleton(&labels(&["a", "b", "c", "d"]), 2).unwrap();
        assert!(t.skeleton(5).isomorphic_labeled(&t));
        assert!(t.skeleton(2).isomorphic_labeled(&t));
    }

    #[test]
    fn stellar_subdivision_at_a_vertex_renames_it() {
        let k3 = SimplicialComplex::full_skeleton(&labels(&["a", "b", "c"]), 1).unwrap();
        let out = k3.stellar_subdivision(&cell(&["a"]), "w").unwrap();
        assert_eq!(out.f_vector(), FVector(vec![3, 3]));
        assert!(out.contains(&cell(&["b", "w"])));
        assert!(!out.vertices().contains(&"a".to_string()));
    }

    #[test]
    fn star_of_vertex() {
        let k3 = SimplicialComplex::full_skeleton(&labels(&["a", "b", "c"]), 1).unwrap();
        let star = k3.star(&cell(&["a"])).unwrap();
        assert_eq!(
            star,
            vec![cell(&["a"]), cell(&["a", "b"]), cell(&["a", "c"])]
        );
    }

    #[test]
    fn pseudomanifold_path_fails_ridge_count() {
        let path = SimplicialComplex::from_str_facets(&[&["a", "b"], &["b", "c"]]).unwrap();
        let verdict = path.is_normal_pseudomanifold().unwrap();
        assert_eq!(
            verdict,
            PseudomanifoldVerdict::RidgeCount {
                witness: cell(&["a"]),
                count: 1
            }
        );
    }

    #[test]
    fn pseudomanifold_two_triangles_sharing_vertex() {
        let c = SimplicialComplex::from_str_facets(&[&["a", "b", "c"], &["a", "d", "e"]]).unwrap();
        let verdict = c.is_normal_pseudomanifold().unwrap();
        assert!(!verdict.is_normal());
        assert!(matches!(verdict, PseudomanifoldVerdict::RidgeCount { .. }));
    }

    #[test]
    fn pseudomanifold_pinched_sphere_disconnected_link() {
        // Triangulated cylinder with both boundary circles coned to the same
        // apex v: pure, all ridges in two facets, strongly connected, but the
        // link of v is two disjoint circles.
        let c = SimplicialComplex::from_str_facets(&[
            &["a0", "a1", "b1"],
            &["a0", "b0", "b1"],
            &["a1", "a2", "b2"],
            &["a1", "b1", "b2"],
            &["a0", "a2", "b0"],
            &["a2", "b0", "b2"],
            &["v", "a0", "a1"],
            &["v", "a1", "a2"],
            &["v", "a0", "a2"],
            &["v", "b0", "b1"],
            &["v", "b1", "b2"],
            &["v", "b0", "b2"],
        ])
        .unwrap();
        let verdict = c.is_normal_pseudomanifold().unwrap();
        assert_eq!(
            verdict,
            PseudomanifoldVerdict::DisconnectedLink {
                witness: cell(&["v"])
            }
        );
    }

    #[test]
    fn isomorphic_labeled_vs_relabeled() {
        let k3 = SimplicialComplex::full_skeleton(&labels(&["a", "b", "c"]), 1).unwrap();
        let relabeled =
            SimplicialComplex::from_str_facets(&[&["x", "y"], &["y", "z"], &["x", "z"]]).unwrap();
        assert!(!isomorphic(&k3, &relabeled, IsoMode::Labeled));
        let map = k3.isomorphic_unlabeled(&relabeled).unwrap();
        assert_eq!(map.len(), 3);
        let path = SimplicialComplex::from_str_facets(&[&["a", "b"], &["b", "c"]]).unwrap();
        assert!(!isomorphic(&path, &k3, IsoMode::Unlabeled));
    }

    #[test]
    fn empty_complex_fvector_and_iso() {
        let e = SimplicialComplex::empty();
        assert_eq!(e.f_vector(), FVector(vec![]));
        assert!(isomorphic(
            &e,
            &SimplicialComplex::empty(),
            IsoMode::Labeled
        ));
        assert!(isomorphic(
            &e,
            &SimplicialComplex::empty(),
            IsoMode::Unlabeled
        ));
    }
}
