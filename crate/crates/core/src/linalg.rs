//! Exact dense linear algebra over the Gaussian rationals, plus symbolic
//! determinants of matrices with polynomial entries.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::combstruct::k_subsets;
use crate::number::{self, c_is_zero, norm_sqr, ComplexRational, Rational};
use crate::poly::Polynomial;
use crate::{Error, Result};

/// Dense row-major matrix of Gaussian rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<ComplexRational>,
}

/// Square matrices are [`Matrix`] values with `rows == cols`.
pub type SquareMatrix = Matrix;

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<ComplexRational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<ComplexRational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Real integer matrix, for tests and examples.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| number::cint(x, 0)).collect()).collect(),
        )
        .expect("rectangular")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![number::cint(0, 0); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = number::cint(1, 0);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &ComplexRational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: ComplexRational) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row_vectors(&self) -> Vec<Vec<ComplexRational>> {
        self.entries.chunks(self.cols.max(1)).map(<[_]>::to_vec).collect()
    }

    pub fn conj_transpose(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j).conj());
            }
        }
        m
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && *self == self.conj_transpose()
    }

    pub fn is_skew_hermitian(&self) -> bool {
        self.is_square() && {
            let adj = self.conj_transpose();
            self.entries.iter().zip(&adj.entries).all(|(a, b)| c_is_zero(&(a + b)))
        }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                entries.push(self.get(i, j).clone());
            }
        }
        Matrix { rows: rows.len(), cols: cols.len(), entries }
    }

    pub fn principal_submatrix(&self, set: &[usize]) -> Self {
        self.submatrix(set, set)
    }

    /// Determinant by Gaussian elimination; the empty matrix has determinant 1.
    pub fn det(&self) -> ComplexRational {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.entries.clone();
        let mut det = number::cint(1, 0);
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !c_is_zero(&a[r * n + col])) else {
                return number::cint(0, 0);
            };
            if pivot != col {
                for k in 0..n {
                    a.swap(pivot * n + k, col * n + k);
                }
                det = -det;
            }
            let p = a[col * n + col].clone();
            det = &det * &p;
            let p_inv = inverse(&p);
            for r in col + 1..n {
                let f = &a[r * n + col] * &p_inv;
                if c_is_zero(&f) {
                    continue;
                }
                for k in col..n {
                    let delta = &f * &a[col * n + k];
                    a[r * n + k] = &a[r * n + k] - &delta;
                }
            }
        }
        det
    }

    /// `E_k`: the sum of all `k × k` principal minors, `k = 0..=n`. These are
    /// the elementary symmetric functions of the eigenvalues.
    pub fn principal_minor_sums(&self) -> Vec<ComplexRational> {
        let n = self.rows;
        (0..=n)
            .map(|k| {
                k_subsets(n, k)
                    .iter()
                    .fold(number::cint(0, 0), |acc, s| acc + self.principal_submatrix(s).det())
            })
            .collect()
    }

    /// Positive semidefiniteness of a Hermitian matrix: all eigenvalues are
    /// real, so they are non-negative iff every `E_k ≥ 0`.
    pub fn is_psd_hermitian(&self) -> Result<bool> {
        if !self.is_hermitian() {
            return Err(Error::NotHermitian);
        }
        Ok(self.principal_minor_sums().iter().all(|e| !e.re.is_negative()))
    }
}

fn inverse(c: &ComplexRational) -> ComplexRational {
    let n = norm_sqr(c);
    let conj = c.conj();
    number::cx(&conj.re / &n, &conj.im / &n)
}

/// Rank of a rational matrix given by rows.
pub fn rational_rank(rows: &[Vec<Rational>]) -> usize {
    let mut a: Vec<Vec<Rational>> = rows.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else { continue };
        a.swap(rank, pivot);
        let inv = a[rank][col].recip();
        for r in 0..a.len() {
            if r == rank || a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] * &inv;
            let pivot = a[rank].clone();
            for (x, p) in a[r][col..cols].iter_mut().zip(&pivot[col..cols]) {
                *x -= &f * p;
            }
        }
        rank += 1;
    }
    rank
}

/// Determinant of a square matrix of polynomials (all in the same variable
/// count), by Laplace expansion along rows memoized over the set of columns
/// still available.
pub fn polynomial_det(entries: &[Vec<Polynomial>], nvars: usize) -> Result<Polynomial> {
    let n = entries.len();
    if entries.iter().any(|row| row.len() != n) {
        return Err(Error::ShapeMismatch("polynomial matrix is not square".into()));
    }
    if n > 16 {
        return Err(Error::SizeGuard { what: "matrix size", limit: 16, found: n });
    }
    if let Some(p) = entries.iter().flatten().find(|p| p.nvars() != nvars) {
        return Err(Error::DimensionMismatch { expected: nvars, found: p.nvars() });
    }
    // memo[mask] = det of rows (n - popcount(mask))..n restricted to columns in mask
    let mut memo: BTreeMap<u32, Polynomial> = BTreeMap::new();
    memo.insert(0, Polynomial::one(nvars));
    for size in 1..=n {
        let row = n - size;
        for cols in k_subsets(n, size) {
            let mask: u32 = cols.iter().map(|&c| 1u32 << c).sum();
            let mut acc = Polynomial::zero(nvars);
            for (pos, &c) in cols.iter().enumerate() {
                let entry = &entries[row][c];
                if entry.is_zero() {
                    continue;
                }
                let minor = &memo[&(mask & !(1 << c))];
                if minor.is_zero() {
                    continue;
                }
                let term = entry * minor;
                acc = if pos % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            memo.insert(mask, acc);
        }
        // masks of size - 1 are no longer needed
        memo.retain(|m, _| m.count_ones() as usize >= size);
    }
    let full = (1u32 << n) - 1;
    Ok(memo.remove(&full).expect("full column set computed"))
}
