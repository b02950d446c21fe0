//! Dense exact linear algebra over a finite field.
//!
//! Matrices are immutable values tied to a [`FieldSpec`]; every operation
//! returns a fresh matrix. Elimination uses deterministic pivoting (first
//! nonzero entry scanning columns left-to-right, rows top-to-bottom), so
//! reduced forms and nullspace bases are canonical.

use std::fmt;

use thiserror::Error;

use crate::gf::{FieldElement, FieldError, FieldSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatError {
    #[error("matrices belong to different fields")]
    FieldMismatch,
    #[error("dimension mismatch: {lhs_rows}x{lhs_cols} incompatible with {rhs_rows}x{rhs_cols}")]
    DimensionMismatch {
        lhs_rows: usize,
        lhs_cols: usize,
        rhs_rows: usize,
        rhs_cols: usize,
    },
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// A rows x cols matrix over a fixed finite field, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct MatrixFq {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

/// Output of [`MatrixFq::rref`]: `u * m = r` with `u` invertible,
/// `r` the unique reduced row echelon form, `pivots` the pivot columns
/// in increasing order, and `rank = pivots.len()`.
#[derive(Clone, Debug)]
pub struct RrefResult {
    pub r: MatrixFq,
    pub rank: usize,
    pub pivots: Vec<usize>,
    pub u: MatrixFq,
}

impl MatrixFq {
    pub fn new(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        data: Vec<FieldElement>,
    ) -> MatrixFq {
        assert_eq!(data.len(), rows * cols, "entry count must equal rows*cols");
        MatrixFq {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Builds a matrix from integer encodings, validating each against the field.
    pub fn from_values(field: &FieldSpec, rows: &[Vec<u64>]) -> Result<MatrixFq, MatError> {
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * ncols);
        for row in rows {
            assert_eq!(row.len(), ncols, "ragged rows");
            for &v in row {
                data.push(field.element(v)?);
            }
        }
        Ok(MatrixFq::new(field.clone(), rows.len(), ncols, data))
    }

    pub fn zeros(field: &FieldSpec, rows: usize, cols: usize) -> MatrixFq {
        MatrixFq::new(
            field.clone(),
            rows,
            cols,
            vec![FieldElement::ZERO; rows * cols],
        )
    }

    pub fn identity(field: &FieldSpec, n: usize) -> MatrixFq {
        let mut m = MatrixFq::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = FieldElement::ONE;
        }
        m
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> FieldElement {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j]
    }

    fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> MatrixFq {
        let mut out = MatrixFq::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.at(i, j));
            }
        }
        out
    }

    /// Entrywise conjugation; requires a field of square order.
    pub fn conjugated(&self) -> Result<MatrixFq, MatError> {
        let mut out = self.clone();
        for e in &mut out.data {
            *e = self.field.conjugate(*e)?;
        }
        Ok(out)
    }

    pub fn mul(&self, other: &MatrixFq) -> Result<MatrixFq, MatError> {
        if self.field != other.field {
            return Err(MatError::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(MatError::DimensionMismatch {
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: other.rows,
                rhs_cols: other.cols,
            });
        }
        let f = &self.field;
        let mut out = MatrixFq::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.at(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.at(i, j);
                    out.set(i, j, f.add(cur, f.mul(a, other.at(l, j))));
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &MatrixFq) -> Result<MatrixFq, MatError> {
        if self.field != other.field {
            return Err(MatError::FieldMismatch);
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(MatError::DimensionMismatch {
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: other.rows,
                rhs_cols: other.cols,
            });
        }
        let mut out = self.clone();
        for (e, o) in out.data.iter_mut().zip(&other.data) {
            *e = self.field.add(*e, *o);
        }
        Ok(out)
    }

    /// Vertical concatenation: `self` on top of `other`.
    pub fn stack(&self, other: &MatrixFq) -> Result<MatrixFq, MatError> {
        if self.field != other.field {
            return Err(MatError::FieldMismatch);
        }
        if self.cols != other.cols {
            return Err(MatError::DimensionMismatch {
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: other.rows,
                rhs_cols: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(MatrixFq::new(
            self.field.clone(),
            self.rows + other.rows,
            self.cols,
            data,
        ))
    }

    /// Horizontal concatenation: `self` to the left of `other`.
    pub fn hstack(&self, other: &MatrixFq) -> Result<MatrixFq, MatError> {
        if self.field != other.field {
            return Err(MatError::FieldMismatch);
        }
        if self.rows != other.rows {
            return Err(MatError::DimensionMismatch {
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: other.rows,
                rhs_cols: other.cols,
            });
        }
        let mut out = MatrixFq::zeros(&self.field, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.at(i, j));
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.at(i, j));
            }
        }
        Ok(out)
    }

    /// The submatrix keeping the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> MatrixFq {
        let mut out = MatrixFq::zeros(&self.field, self.rows, cols.len());
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                out.set(i, jj, self.at(i, j));
            }
        }
        out
    }

    /// The submatrix keeping the given rows, in the given order.
    pub fn select_rows(&self, rows: &[usize]) -> MatrixFq {
        let mut out = MatrixFq::zeros(&self.field, rows.len(), self.cols);
        for (ii, &i) in rows.iter().enumerate() {
            for j in 0..self.cols {
                out.set(ii, j, self.at(i, j));
            }
        }
        out
    }

    /// Reduced row echelon form with its witnessing row transform.
    ///
    /// The pivot rule is fixed: scan columns left to right and take the
    /// topmost unused row with a nonzero entry. That makes `r`, `pivots`
    /// and hence every nullspace basis derived from them canonical.
    pub fn rref(&self) -> RrefResult {
        let f = &self.field;
        let mut r = self.clone();
        let mut u = MatrixFq::identity(f, self.rows);
        let mut pivots = Vec::new();
        let mut pr = 0usize;
        for col in 0..self.cols {
            if pr == self.rows {
                break;
            }
            let Some(prow) = (pr..self.rows).find(|&i| !r.at(i, col).is_zero()) else {
                continue;
            };
            if prow != pr {
                r.swap_rows(prow, pr);
                u.swap_rows(prow, pr);
            }
            let inv = f.inv(r.at(pr, col)).expect("pivot entry is nonzero");
            r.scale_row(pr, inv);
            u.scale_row(pr, inv);
            for i in 0..self.rows {
                if i == pr {
                    continue;
                }
                let c = r.at(i, col);
                if c.is_zero() {
                    continue;
                }
                r.sub_scaled_row(i, pr, c);
                u.sub_scaled_row(i, pr, c);
            }
            pivots.push(col);
            pr += 1;
        }
        RrefResult {
            r,
            rank: pr,
            pivots,
            u,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Determinant by Gaussian elimination. The empty matrix has
    /// determinant one.
    pub fn det(&self) -> Result<FieldElement, MatError> {
        if self.rows != self.cols {
            return Err(MatError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let f = &self.field;
        let n = self.rows;
        let mut m = self.clone();
        let mut acc = FieldElement::ONE;
        for col in 0..n {
            let Some(prow) = (col..n).find(|&i| !m.at(i, col).is_zero()) else {
                return Ok(FieldElement::ZERO);
            };
            if prow != col {
                m.swap_rows(prow, col);
                acc = f.neg(acc);
            }
            let pivot = m.at(col, col);
            acc = f.mul(acc, pivot);
            let inv = f.inv(pivot).expect("pivot entry is nonzero");
            for i in col + 1..n {
                let c = m.at(i, col);
                if c.is_zero() {
                    continue;
                }
                let factor = f.mul(c, inv);
                m.sub_scaled_row(i, col, factor);
            }
        }
        Ok(acc)
    }

    /// A canonical basis of the right kernel `{x : M x^T = 0}`, one basis
    /// vector per row. The basis is derived from the RREF: free columns in
    /// increasing order, each vector carrying 1 in its free position and
    /// the negated column of R in the pivot positions. Returns a matrix
    /// with zero rows when the kernel is trivial.
    pub fn nullspace(&self) -> MatrixFq {
        let f = &self.field;
        let RrefResult { r, rank, pivots, .. } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = MatrixFq::zeros(f, free.len(), self.cols);
        for (vi, &fc) in free.iter().enumerate() {
            out.set(vi, fc, FieldElement::ONE);
            for (prow, &pc) in pivots.iter().enumerate().take(rank) {
                out.set(vi, pc, f.neg(r.at(prow, fc)));
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, i: usize, c: FieldElement) {
        for j in 0..self.cols {
            let v = self.at(i, j);
            self.set(i, j, self.field.mul(v, c));
        }
    }

    /// row_i -= c * row_src
    fn sub_scaled_row(&mut self, i: usize, src: usize, c: FieldElement) {
        for j in 0..self.cols {
            let v = self.field.sub(self.at(i, j), self.field.mul(c, self.at(src, j)));
            self.set(i, j, v);
        }
    }
}

impl fmt::Debug for MatrixFq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatrixFq {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Display for MatrixFq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}
