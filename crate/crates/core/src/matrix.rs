//! Dense matrices over `F_p`: row reduction, kernels, and induced maps on quotients.

use std::fmt;

use crate::error::LinearError;
use crate::fp::{Fp, Prime};

/// Column vector of residues. The modulus travels with the surrounding matrix.
pub type Vector = Vec<u32>;

/// Row-major dense matrix over a prime field.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    p: Prime,
    data: Vec<u32>,
}

/// Reduced row-echelon form together with rank and pivot columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn new(p: Prime, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self, LinearError> {
        if data.len() != rows * cols {
            return Err(LinearError::BadLength {
                rows,
                cols,
                found: data.len(),
            });
        }
        if let Some(&value) = data.iter().find(|&&v| v >= p.get()) {
            return Err(LinearError::EntryOutOfRange {
                value,
                modulus: p.get(),
            });
        }
        Ok(Matrix {
            rows,
            cols,
            p,
            data,
        })
    }

    /// Builds from rows; every row must have `cols` entries.
    pub fn from_rows(p: Prime, cols: usize, rows: &[Vec<u32>]) -> Result<Self, LinearError> {
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(LinearError::DimensionMismatch(format!(
                "row of length {} in a matrix with {} columns",
                r.len(),
                cols
            )));
        }
        Matrix::new(p, rows.len(), cols, rows.concat())
    }

    pub fn zeros(p: Prime, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            p,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: Prime, n: usize) -> Self {
        let mut m = Matrix::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(p: Prime, rows: usize, columns: &[Vector]) -> Self {
        let mut m = Matrix::zeros(p, rows, columns.len());
        for (c, v) in columns.iter().enumerate() {
            for (r, &x) in v.iter().take(rows).enumerate() {
                m.data[r * columns.len() + c] = x;
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn modulus(&self) -> Prime {
        self.p
    }

    #[inline]
    pub fn raw(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn get(&self, r: usize, c: usize) -> Fp {
        Fp::new(self.raw(r, c) as u64, self.p)
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.p.get();
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.raw(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.p, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.raw(r, c);
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, LinearError> {
        if self.cols != other.rows || self.p != other.p {
            return Err(LinearError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.p, self.rows, other.cols);
        let p = self.p.get() as u64;
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = 0u64;
                for k in 0..self.cols {
                    acc += self.raw(r, k) as u64 * other.raw(k, c) as u64;
                }
                out.data[r * other.cols + c] = (acc % p) as u32;
            }
        }
        Ok(out)
    }

    /// `self · v`; panics if `v.len() != cols`.
    pub fn mul_vec(&self, v: &[u32]) -> Vector {
        assert_eq!(v.len(), self.cols, "vector length");
        let p = self.p.get() as u64;
        (0..self.rows)
            .map(|r| {
                let acc: u64 = (0..self.cols)
                    .map(|c| self.raw(r, c) as u64 * v[c] as u64)
                    .sum();
                (acc % p) as u32
            })
            .collect()
    }

    /// `self - λ·I` for square matrices.
    pub fn shift_diagonal(&self, lambda: u32) -> Matrix {
        assert_eq!(self.rows, self.cols, "square matrix");
        let mut m = self.clone();
        for i in 0..self.rows {
            let v = m.raw(i, i);
            m.data[i * self.cols + i] = self.p.sub(v, lambda % self.p.get());
        }
        m
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(p: Prime, cols: usize, parts: &[&Matrix]) -> Matrix {
        let mut data = Vec::new();
        let mut rows = 0;
        for m in parts {
            assert_eq!(m.cols, cols, "column count");
            data.extend_from_slice(&m.data);
            rows += m.rows;
        }
        Matrix {
            rows,
            cols,
            p,
            data,
        }
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(self.p, self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.data[r * m.cols + c] = self.raw(r, c);
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                m.data[(self.rows + r) * m.cols + self.cols + c] = other.raw(r, c);
            }
        }
        m
    }

    pub fn rref(&self) -> Rref {
        let p = self.p;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| m.raw(r, col) != 0) else {
                continue;
            };
            m.swap_rows(pr, row);
            let inv = p.inv(m.raw(row, col)).expect("nonzero pivot");
            for c in col..m.cols {
                let v = m.raw(row, c);
                m.data[row * m.cols + c] = p.mul(v, inv);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.raw(r, col);
                if factor == 0 {
                    continue;
                }
                for c in col..m.cols {
                    let v = m.raw(r, c);
                    let s = p.mul(factor, m.raw(row, c));
                    m.data[r * m.cols + c] = p.sub(v, s);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref {
            matrix: m,
            rank: pivots.len(),
            pivots,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of `{v : self·v = 0}`, one vector per free column in increasing order.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let Rref { matrix, pivots, .. } = self.rref();
        let p = self.p;
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![0; self.cols];
                v[free] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = p.neg(matrix.raw(r, free));
                }
                v
            })
            .collect()
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(self.p, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.data[r * 2 * n + c] = self.raw(r, c);
            }
            aug.data[r * 2 * n + n + r] = 1;
        }
        let red = aug.rref();
        if red.rank < n || !red.pivots.iter().copied().take(n).eq(0..n) {
            return None;
        }
        let mut inv = Matrix::zeros(self.p, n, n);
        for r in 0..n {
            for c in 0..n {
                inv.data[r * n + c] = red.matrix.raw(r, n + c);
            }
        }
        Some(inv)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:?}", self.row(r))?;
        }
        write!(f, "]")
    }
}

/// A subspace of `F_p^n` held in reduced echelon form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    p: Prime,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(p: Prime, ambient: usize, vectors: &[Vector]) -> Self {
        let m = Matrix::new(p, vectors.len(), ambient, vectors.concat()).expect("vector lengths");
        let red = m.rref();
        let basis = Matrix {
            rows: red.rank,
            cols: ambient,
            p,
            data: red.matrix.data[..red.rank * ambient].to_vec(),
        };
        Subspace {
            ambient,
            p,
            basis,
            pivots: red.pivots,
        }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Residue of `v` after clearing the pivot coordinates.
    pub fn reduce(&self, v: &[u32]) -> Vector {
        let mut x = v.to_vec();
        for (r, &pc) in self.pivots.iter().enumerate() {
            let factor = x[pc];
            if factor == 0 {
                continue;
            }
            for (c, xc) in x.iter_mut().enumerate() {
                *xc = self.p.sub(*xc, self.p.mul(factor, self.basis.raw(r, c)));
            }
        }
        x
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Coordinates that survive in the quotient `F_p^n / self`, ascending.
    pub fn complement(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    /// Coordinates of the class of `v` in the quotient, w.r.t. `complement()`.
    pub fn project(&self, v: &[u32]) -> Vector {
        let x = self.reduce(v);
        self.complement().into_iter().map(|c| x[c]).collect()
    }
}

/// Map induced by `m` from `source/source_sub` to `target/target_sub`.
///
/// `m` has shape `target.ambient × source.ambient`. Quotient coordinates are the
/// non-pivot coordinates of the echelon bases, in increasing order.
pub fn quotient_action(
    m: &Matrix,
    source_sub: &[Vector],
    target_sub: &[Vector],
) -> Result<Matrix, LinearError> {
    let p = m.modulus();
    let src = Subspace::span(p, m.cols(), source_sub);
    let tgt = Subspace::span(p, m.rows(), target_sub);
    for b in source_sub {
        if !tgt.contains(&m.mul_vec(b)) {
            return Err(LinearError::NotInvariant);
        }
    }
    let src_comp = src.complement();
    let rows = m.rows() - tgt.dim();
    let columns: Vec<Vector> = src_comp
        .iter()
        .map(|&c| tgt.project(&m.column(c)))
        .collect();
    Ok(Matrix::from_columns(p, rows, &columns))
}
