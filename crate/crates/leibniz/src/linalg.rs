//! Deterministic exact linear algebra over the rationals.
//!
//! Everything downstream (cocycle spaces, coboundary spaces, derivation
//! algebras, span tests) reduces to the operations in this module: reduced
//! row echelon form, rank, kernel bases and span membership, all computed
//! with [`Rational`] entries and no rounding.
//!
//! Two reduction engines are provided. [`Matrix::rref`] is a plain dense
//! Gauss–Jordan elimination with the first nonzero entry in column order as
//! the pivot. [`RowReducer`] accepts rows one at a time (sparse or dense) and
//! produces the same canonical RREF without ever materialising the full
//! matrix; the differential matrices of larger algebras are funnelled through
//! it. Since the RREF of a row space is unique, both paths agree exactly.

use num_traits::{One, Zero};

use crate::error::AlgebraError;
use crate::rational::Rational;

/// Dense row-major matrix of rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    /// Builds a matrix from a row-major entry vector.
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self, AlgebraError> {
        if entries.len() != rows * cols {
            return Err(AlgebraError::DimensionMismatch {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        Ok(Matrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rational::one();
        }
        m
    }

    /// Builds a matrix from equal-length rows.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, AlgebraError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        for r in &rows {
            if r.len() != ncols {
                return Err(AlgebraError::DimensionMismatch {
                    expected: ncols,
                    got: r.len(),
                });
            }
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Rational {
        &mut self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *t.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        t
    }

    /// Matrix product `self · rhs`.
    pub fn multiply(&self, rhs: &Matrix) -> Result<Matrix, AlgebraError> {
        if self.cols != rhs.rows {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.cols,
                got: rhs.rows,
            });
        }
        let mut out = Matrix::zero(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.at(k, c);
                    if !b.is_zero() {
                        let v = out.at(r, c) + a * b;
                        *out.at_mut(r, c) = v;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Rational]) -> Result<Vec<Rational>, AlgebraError> {
        if v.len() != self.cols {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        let mut out = vec![Rational::zero(); self.rows];
        for (r, slot) in out.iter_mut().enumerate() {
            let row = self.row(r);
            let mut acc = Rational::zero();
            for (a, b) in row.iter().zip(v) {
                if !a.is_zero() && !b.is_zero() {
                    acc += a * b;
                }
            }
            *slot = acc;
        }
        Ok(out)
    }

    /// Reduced row echelon form together with the pivot columns.
    ///
    /// Pivoting is deterministic: for each column, the first row (top to
    /// bottom) with a nonzero entry is chosen, and the pivot row is
    /// normalised to a leading one before eliminating the rest of the column.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..m.cols {
            if pivot_row >= m.rows {
                break;
            }
            let Some(src) = (pivot_row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(src, pivot_row);
            let inv = {
                let p = m.at(pivot_row, col).clone();
                p.recip()
            };
            for c in col..m.cols {
                if !m.at(pivot_row, c).is_zero() {
                    let v = m.at(pivot_row, c) * &inv;
                    *m.at_mut(pivot_row, c) = v;
                }
            }
            for r in 0..m.rows {
                if r == pivot_row || m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col).clone();
                for c in col..m.cols {
                    if !m.at(pivot_row, c).is_zero() {
                        let v = m.at(r, c) - &factor * m.at(pivot_row, c);
                        *m.at_mut(r, c) = v;
                    }
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    /// Number of pivots of the reduced row echelon form.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{v : m·v = 0}`, free variables in
    /// ascending column order, normalised to a [`VectorSpaceBasis`].
    pub fn kernel_basis(&self) -> VectorSpaceBasis {
        let (rref, pivots) = self.rref();
        let sparse_rows: Vec<SparseRow> = (0..pivots.len())
            .map(|r| {
                (0..rref.cols)
                    .filter(|&c| !rref.at(r, c).is_zero())
                    .map(|c| (c, rref.at(r, c).clone()))
                    .collect()
            })
            .collect();
        kernel_from_rref(self.cols, &sparse_rows, &pivots)
    }

    /// Determinant of a square matrix, by fraction Gaussian elimination.
    pub fn determinant(&self) -> Result<Rational, AlgebraError> {
        if self.rows != self.cols {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.rows,
                got: self.cols,
            });
        }
        let mut m = self.clone();
        let mut det = Rational::one();
        for col in 0..m.cols {
            let Some(src) = (col..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                return Ok(Rational::zero());
            };
            if src != col {
                m.swap_rows(src, col);
                det = -det;
            }
            let pivot = m.at(col, col).clone();
            det *= &pivot;
            for r in col + 1..m.rows {
                if m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col) / &pivot;
                for c in col..m.cols {
                    if !m.at(col, c).is_zero() {
                        let v = m.at(r, c) - &factor * m.at(col, c);
                        *m.at_mut(r, c) = v;
                    }
                }
            }
        }
        Ok(det)
    }

    /// Inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zero(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                *aug.at_mut(r, c) = self.at(r, c).clone();
            }
            *aug.at_mut(r, n + r) = Rational::one();
        }
        let (red, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        let mut inv = Matrix::zero(n, n);
        for r in 0..n {
            for c in 0..n {
                *inv.at_mut(r, c) = red.at(r, n + c).clone();
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

/// Sparse row: `(column, value)` pairs with strictly increasing columns and
/// nonzero values.
pub type SparseRow = Vec<(usize, Rational)>;

fn dense_to_sparse(v: &[Rational]) -> SparseRow {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(c, x)| (c, x.clone()))
        .collect()
}

fn sparse_to_dense(cols: usize, row: &SparseRow) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); cols];
    for (c, x) in row {
        v[*c] = x.clone();
    }
    v
}

/// `dst -= factor * src` on sparse rows.
fn sparse_axpy(dst: &SparseRow, factor: &Rational, src: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(dst.len() + src.len());
    let (mut i, mut j) = (0, 0);
    while i < dst.len() || j < src.len() {
        match (dst.get(i), src.get(j)) {
            (Some((c1, v1)), Some((c2, v2))) if c1 == c2 => {
                let v = v1 - factor * v2;
                if !v.is_zero() {
                    out.push((*c1, v));
                }
                i += 1;
                j += 1;
            }
            (Some((c1, v1)), Some((c2, _))) if c1 < c2 => {
                out.push((*c1, v1.clone()));
                i += 1;
            }
            (Some(_), Some((c2, v2))) => {
                out.push((*c2, -(factor * v2)));
                j += 1;
            }
            (Some((c1, v1)), None) => {
                out.push((*c1, v1.clone()));
                i += 1;
            }
            (None, Some((c2, v2))) => {
                out.push((*c2, -(factor * v2)));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Incremental row-space reduction.
///
/// Rows are pushed one at a time; each is reduced against the pivot rows
/// accumulated so far and inserted if independent. [`RowReducer::finish`]
/// back-substitutes to the canonical RREF of the accumulated row space,
/// which equals `Matrix::rref` of the stacked rows.
#[derive(Debug, Default)]
pub struct RowReducer {
    cols: usize,
    rows: Vec<SparseRow>,
    pivot_of_col: Vec<Option<usize>>,
}

impl RowReducer {
    pub fn new(cols: usize) -> Self {
        RowReducer {
            cols,
            rows: Vec::new(),
            pivot_of_col: vec![None; cols],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn push_dense(&mut self, row: &[Rational]) {
        assert_eq!(row.len(), self.cols, "row length mismatch");
        self.push_sparse(dense_to_sparse(row));
    }

    pub fn push_sparse(&mut self, mut row: SparseRow) {
        debug_assert!(row.windows(2).all(|w| w[0].0 < w[1].0));
        loop {
            let Some((lead, coeff)) = row.first().cloned() else {
                return;
            };
            match self.pivot_of_col[lead] {
                Some(r) => row = sparse_axpy(&row, &coeff, &self.rows[r]),
                None => {
                    // New pivot: normalise to a leading one.
                    let inv = coeff.recip();
                    for (_, v) in row.iter_mut() {
                        *v *= &inv;
                    }
                    self.pivot_of_col[lead] = Some(self.rows.len());
                    self.rows.push(row);
                    return;
                }
            }
        }
    }

    /// Canonical RREF rows (sorted by pivot column) and pivot columns.
    pub fn finish(self) -> (Vec<SparseRow>, Vec<usize>) {
        let RowReducer {
            cols,
            mut rows,
            pivot_of_col,
        } = self;
        let mut pivots: Vec<usize> = (0..cols).filter(|&c| pivot_of_col[c].is_some()).collect();
        // Back-substitute in descending pivot order; rows already finished
        // have zeros at every pivot column except their own, so one pass per
        // row suffices.
        let mut finished: Vec<Option<SparseRow>> = vec![None; cols];
        for &p in pivots.iter().rev() {
            let idx = pivot_of_col[p].unwrap();
            let mut row = std::mem::take(&mut rows[idx]);
            let hits: Vec<(usize, Rational)> = row
                .iter()
                .filter(|(c, _)| *c != p && finished[*c].is_some())
                .cloned()
                .collect();
            for (c, v) in hits {
                row = sparse_axpy(&row, &v, finished[c].as_ref().unwrap());
            }
            finished[p] = Some(row);
        }
        pivots.sort_unstable();
        let rows = pivots
            .iter()
            .map(|&p| finished[p].take().unwrap())
            .collect();
        (rows, pivots)
    }

    /// Finishes the reduction and packages the row space as a basis.
    pub fn into_row_space_basis(self) -> VectorSpaceBasis {
        let cols = self.cols;
        let (rows, pivots) = self.finish();
        VectorSpaceBasis::from_rref_rows(cols, rows, pivots)
    }

    /// Finishes the reduction and returns a basis of the kernel of the
    /// matrix formed by every pushed row.
    pub fn into_kernel_basis(self) -> VectorSpaceBasis {
        let cols = self.cols;
        let (rows, pivots) = self.finish();
        kernel_from_rref(cols, &rows, &pivots)
    }
}

/// Kernel basis from RREF rows: one vector per free column, ascending.
fn kernel_from_rref(cols: usize, rows: &[SparseRow], pivots: &[usize]) -> VectorSpaceBasis {
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let mut reducer = RowReducer::new(cols);
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v: SparseRow = Vec::new();
        for (row, &p) in rows.iter().zip(pivots) {
            if let Ok(idx) = row.binary_search_by_key(&free, |(c, _)| *c) {
                v.push((p, -row[idx].1.clone()));
            }
        }
        v.push((free, Rational::one()));
        v.sort_unstable_by_key(|(c, _)| *c);
        reducer.push_sparse(v);
    }
    reducer.into_row_space_basis()
}

/// A subspace of `ℚ^ambient_dim`, stored as the unique RREF basis: leading
/// entries are one and pivot columns strictly increase row by row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorSpaceBasis {
    ambient_dim: usize,
    vectors: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl VectorSpaceBasis {
    pub fn empty(ambient_dim: usize) -> Self {
        VectorSpaceBasis {
            ambient_dim,
            vectors: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// Normalises arbitrary spanning vectors to the canonical basis.
    pub fn from_vectors<I>(ambient_dim: usize, vectors: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = Vec<Rational>>,
    {
        let mut reducer = RowReducer::new(ambient_dim);
        for v in vectors {
            if v.len() != ambient_dim {
                return Err(AlgebraError::DimensionMismatch {
                    expected: ambient_dim,
                    got: v.len(),
                });
            }
            reducer.push_dense(&v);
        }
        Ok(reducer.into_row_space_basis())
    }

    fn from_rref_rows(ambient_dim: usize, rows: Vec<SparseRow>, pivots: Vec<usize>) -> Self {
        let vectors = rows
            .iter()
            .map(|r| sparse_to_dense(ambient_dim, r))
            .collect();
        VectorSpaceBasis {
            ambient_dim,
            vectors,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vec<Rational>] {
        &self.vectors
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after subtracting its projection on the basis.
    /// The result is zero exactly when `v` lies in the span.
    pub fn reduce(&self, v: &[Rational]) -> Result<Vec<Rational>, AlgebraError> {
        if v.len() != self.ambient_dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.ambient_dim,
                got: v.len(),
            });
        }
        let mut rem = v.to_vec();
        for (row, &p) in self.vectors.iter().zip(&self.pivots) {
            if rem[p].is_zero() {
                continue;
            }
            let factor = rem[p].clone();
            for (c, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    let v = &rem[c] - &factor * x;
                    rem[c] = v;
                }
            }
        }
        Ok(rem)
    }

    /// Exact span membership, decided by whether appending `v` raises the
    /// rank of the basis matrix.
    pub fn in_span(&self, v: &[Rational]) -> Result<bool, AlgebraError> {
        Ok(self.reduce(v)?.iter().all(Rational::is_zero))
    }

    /// Coordinates of `v` in this basis, or `None` when `v` is outside the
    /// span. Since the basis is in RREF, the coordinate of the `i`-th basis
    /// vector is just the entry of `v` at the `i`-th pivot column.
    pub fn coordinates(&self, v: &[Rational]) -> Result<Option<Vec<Rational>>, AlgebraError> {
        if !self.in_span(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }
}
