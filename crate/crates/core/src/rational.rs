//! Exact rational linear algebra: Gaussian elimination rank, nullspace, and
//! linear solving over `BigRational`. Kept separate from the Smith normal
//! form so the two can certify each other.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::homology::IntegerMatrix;

pub type Rational = BigRational;

/// Dense matrix of exact fractions, row major. `num_rational` keeps entries
/// in lowest terms with positive denominators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        RationalMatrix {
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn from_integer(m: &IntegerMatrix) -> Self {
        let mut out = Self::zero(m.rows(), m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                out.set(i, j, Rational::from_integer(m.get(i, j).clone()));
            }
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    /// Rank by fraction-exact Gaussian elimination with largest-magnitude
    /// pivoting (keeps intermediate fractions tame).
    pub fn rank(&self) -> usize {
        self.reduce().1
    }

    /// Row echelon reduction; returns (reduced copy, rank, pivot columns).
    fn reduce(&self) -> (RationalMatrix, usize, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let mut best: Option<(usize, Rational)> = None;
            for i in row..m.rows {
                let v = m.get(i, col);
                if v.is_zero() {
                    continue;
                }
                let a = v.abs();
                match &best {
                    Some((_, b)) if *b >= a => {}
                    _ => best = Some((i, a)),
                }
            }
            let Some((pivot_row, _)) = best else { continue };
            m.swap_rows(row, pivot_row);
            let pivot = m.get(row, col).clone();
            for j in col..m.cols {
                let v = m.get(row, j) / &pivot;
                m.set(row, j, v);
            }
            for i in 0..m.rows {
                if i == row || m.get(i, col).is_zero() {
                    continue;
                }
                let factor = m.get(i, col).clone();
                for j in col..m.cols {
                    let v = m.get(i, j) - &factor * m.get(row, j);
                    m.set(i, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, row, pivots)
    }

    /// A nonzero rational vector in the kernel, if one exists; entries
    /// normalized so the first nonzero coordinate is 1.
    pub fn nullspace_vector(&self) -> Option<Vec<Rational>> {
        let (rref, rank, pivots) = self.reduce();
        if rank == self.cols {
            return None;
        }
        let free = (0..self.cols).find(|c| !pivots.contains(c))?;
        let mut v = vec![Rational::zero(); self.cols];
        v[free] = Rational::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -rref.get(r, free).clone();
        }
        let first = v.iter().find(|x| !x.is_zero())?.clone();
        for x in &mut v {
            *x = &*x / &first;
        }
        Some(v)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

/// Parse helpers for node lists like `0,1,2` or `1/2,-3,7/4`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().ok()?;
            Some(Rational::from_integer(n))
        }
    }
}

pub fn rational_from_i64(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}
