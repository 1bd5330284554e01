//! Integral and rational homology via Smith normal form.
//!
//! Boundary matrices carry arbitrary-precision entries; the Smith reduction
//! uses minimal-absolute-value pivoting to limit coefficient growth and
//! always tracks the unimodular transforms so tests can re-multiply. The
//! certified path never takes modular shortcuts.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::complex::SimplicialComplex;
use crate::delta::DeltaComplex;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HomologyError {
    #[error("boundary degree {k} out of range 1..={dim}")]
    DegreeOutOfRange { k: usize, dim: usize },
    #[error("homology of the empty complex is undefined")]
    EmptyComplex,
}

/// Dense matrix over arbitrary-precision integers, row major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntegerMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl IntegerMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Self::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(v));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_assign(&mut self, i: usize, j: usize, v: &BigInt) {
        self.data[i * self.cols + j] += v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntegerMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = a * other.get(k, j);
                    out.add_assign(i, j, &v);
                }
            }
        }
        out
    }

    /// Matrix-vector product over the integers.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += q * row[src]
    fn row_op(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let v = q * self.get(src, j);
            self.add_assign(dst, j, &v);
        }
    }

    fn col_op(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let v = q * self.get(i, src);
            self.add_assign(i, dst, &v);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j).clone();
            self.set(i, j, v);
        }
    }
}

/// Result of the Smith reduction: `d = p * m * q` with unimodular `p`, `q`,
/// `d` diagonal with `factors[0] | factors[1] | ...`.
pub struct SmithNormalForm {
    pub factors: Vec<BigInt>,
    pub rank: usize,
    pub d: IntegerMatrix,
    pub p: IntegerMatrix,
    pub q: IntegerMatrix,
}

/// Diagonalizes an integer matrix by unimodular row/column operations with
/// minimal-absolute-value pivoting.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithNormalForm {
    let mut d = m.clone();
    let mut p = IntegerMatrix::identity(m.rows());
    let mut q = IntegerMatrix::identity(m.cols());
    let n = m.rows().min(m.cols());
    let mut k = 0;
    while k < n {
        let pivot = match min_abs_entry(&d, k) {
            None => break,
            Some(p) => p,
        };
        d.swap_rows(k, pivot.0);
        p.swap_rows(k, pivot.0);
        d.swap_cols(k, pivot.1);
        q.swap_cols(k, pivot.1);
        // clear column k then row k; imperfect quotients leave smaller
        // remainders that the next sweep picks as pivots
        let mut dirty = false;
        for i in (k + 1)..d.rows() {
            if !d.get(i, k).is_zero() {
                let quot = d.get(i, k) / d.get(k, k);
                let neg = -quot;
                d.row_op(i, k, &neg);
                p.row_op(i, k, &neg);
                if !d.get(i, k).is_zero() {
                    dirty = true;
                }
            }
        }
        for j in (k + 1)..d.cols() {
            if !d.get(k, j).is_zero() {
                let quot = d.get(k, j) / d.get(k, k);
                let neg = -quot;
                d.col_op(j, k, &neg);
                q.col_op(j, k, &neg);
                if !d.get(k, j).is_zero() {
                    dirty = true;
                }
            }
        }
        if dirty {
            continue;
        }
        // divisibility: pivot must divide the remaining submatrix
        let pv = d.get(k, k).clone();
        let mut fixed = true;
        'scan: for i in (k + 1)..d.rows() {
            for j in (k + 1)..d.cols() {
                if !(d.get(i, j) % &pv).is_zero() {
                    let one = BigInt::one();
                    d.row_op(k, i, &one);
                    p.row_op(k, i, &one);
                    fixed = false;
                    break 'scan;
                }
            }
        }
        if !fixed {
            continue;
        }
        if d.get(k, k).is_negative() {
            d.negate_row(k);
            p.negate_row(k);
        }
        k += 1;
    }
    let mut factors = Vec::new();
    for i in 0..n {
        let v = d.get(i, i);
        if v.is_zero() {
            break;
        }
        factors.push(v.clone());
    }
    let rank = factors.len();
    SmithNormalForm {
        factors,
        rank,
        d,
        p,
        q,
    }
}

fn min_abs_entry(d: &IntegerMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in k..d.rows() {
        for j in k..d.cols() {
            let v = d.get(i, j);
            if v.is_zero() {
                continue;
            }
            let a = v.abs();
            match &best {
                Some((_, _, b)) if *b <= a => {}
                _ => best = Some((i, j, a)),
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

// ---------------------------------------------------------------------------
// chain complexes
// ---------------------------------------------------------------------------

/// Anything with integral boundary operators; implemented by
/// [`SimplicialComplex`] (alternating signs from the sorted vertex order)
/// and [`DeltaComplex`] (signs from the ordered face lists).
pub trait ChainComplex {
    fn complex_dim(&self) -> Option<usize>;
    fn chain_rank(&self, k: usize) -> usize;
    fn boundary_matrix(&self, k: usize) -> Result<IntegerMatrix, HomologyError>;
}

impl ChainComplex for SimplicialComplex {
    fn complex_dim(&self) -> Option<usize> {
        self.dim()
    }

    fn chain_rank(&self, k: usize) -> usize {
        self.cells_of_dim(k).len()
    }

    fn boundary_matrix(&self, k: usize) -> Result<IntegerMatrix, HomologyError> {
        let dim = self.dim().ok_or(HomologyError::EmptyComplex)?;
        if k < 1 || k > dim {
            return Err(HomologyError::DegreeOutOfRange { k, dim });
        }
        let lower = self.cells_of_dim(k - 1);
        let upper = self.cells_of_dim(k);
        let index: std::collections::BTreeMap<&Vec<String>, usize> =
            lower.iter().enumerate().map(|(i, c)| (*c, i)).collect();
        let mut m = IntegerMatrix::zero(lower.len(), upper.len());
        for (j, cell) in upper.iter().enumerate() {
            for i in 0..=k {
                let mut face = (*cell).clone();
                face.remove(i);
                let sign = if i % 2 == 0 {
                    BigInt::one()
                } else {
                    -BigInt::one()
                };
                m.add_assign(index[&face], j, &sign);
            }
        }
        Ok(m)
    }
}

impl ChainComplex for DeltaComplex {
    fn complex_dim(&self) -> Option<usize> {
        self.dim()
    }

    fn chain_rank(&self, k: usize) -> usize {
        self.cell_count(k)
    }

    fn boundary_matrix(&self, k: usize) -> Result<IntegerMatrix, HomologyError> {
        let dim = self.dim().ok_or(HomologyError::EmptyComplex)?;
        if k < 1 || k > dim {
            return Err(HomologyError::DegreeOutOfRange { k, dim });
        }
        let lower = self.cells_of_dim(k - 1);
        let upper = self.cells_of_dim(k);
        let index: std::collections::BTreeMap<usize, usize> =
            lower.iter().enumerate().map(|(i, &id)| (id, i)).collect();
        let mut m = IntegerMatrix::zero(lower.len(), upper.len());
        for (j, &id) in upper.iter().enumerate() {
            for (i, &f) in self.faces(id).iter().enumerate() {
                let sign = if i % 2 == 0 {
                    BigInt::one()
                } else {
                    -BigInt::one()
                };
                m.add_assign(index[&f], j, &sign);
            }
        }
        Ok(m)
    }
}

/// Unreduced Betti numbers and invariant factors per dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyProfile {
    pub betti: Vec<usize>,
    #[serde(serialize_with = "crate::io::serialize_torsion")]
    pub torsion: Vec<Vec<BigInt>>,
}

impl HomologyProfile {
    /// Unreduced profile of a contractible-like complex: (1, 0, ..., 0).
    pub fn is_q_acyclic(&self) -> bool {
        self.betti.first() == Some(&1) && self.betti.iter().skip(1).all(|&b| b == 0)
    }

    pub fn is_connected(&self) -> bool {
        self.betti.first() == Some(&1)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

/// Unreduced homology over Z: Betti numbers and torsion from the Smith
/// normal forms of the boundary operators.
pub fn homology(c: &impl ChainComplex) -> Result<HomologyProfile, HomologyError> {
    let dim = c.complex_dim().ok_or(HomologyError::EmptyComplex)?;
    let mut ranks = vec![0usize; dim + 2];
    let mut torsion = vec![Vec::new(); dim + 1];
    for k in 1..=dim {
        let snf = smith_normal_form(&c.boundary_matrix(k)?);
        ranks[k] = snf.rank;
        torsion[k - 1] = snf.factors.into_iter().filter(|f| !f.is_one()).collect();
    }
    let betti = (0..=dim)
        .map(|k| c.chain_rank(k) - ranks[k] - ranks[k + 1])
        .collect();
    Ok(HomologyProfile { betti, torsion })
}

/// True iff the unreduced rational homology is that of a point.
pub fn is_q_acyclic(c: &impl ChainComplex) -> Result<bool, HomologyError> {
    Ok(homology(c)?.is_q_acyclic())
}

pub fn is_connected(c: &impl ChainComplex) -> Result<bool, HomologyError> {
    Ok(homology(c)?.is_connected())
}
