//! Dense rational matrices with exact elimination.

use std::fmt;
use std::ops::{Index, IndexMut};

use serde::Serialize;

use super::{Rational, Subspace};
use crate::{Error, Result};

/// Dense row-major matrix over ℚ.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        for row in &rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch {
                    context: "matrix row",
                    expected: c,
                    found: row.len(),
                });
            }
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds an `rows × cols` matrix entry by entry.
    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    /// Convenience constructor from integer literals, mostly for tests.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        Matrix::from_fn(r, c, |i, j| Rational::from_int(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    /// Row-major flattening; the coordinate embedding used for operator
    /// subspaces in ℚ^(n²).
    pub fn flatten(&self) -> Vec<Rational> {
        self.entries.clone()
    }

    pub fn from_flat(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                context: "matrix entries",
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(Matrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |r, c| &self[(r, c)] * s)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other)?;
        Ok(Matrix::from_fn(self.rows, self.cols, |r, c| {
            &self[(r, c)] + &other[(r, c)]
        }))
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other)?;
        Ok(Matrix::from_fn(self.rows, self.cols, |r, c| {
            &self[(r, c)] - &other[(r, c)]
        }))
    }

    fn check_same_shape(&self, other: &Matrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                context: "matrix shape",
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        Ok(())
    }

    /// Matrix product, skipping zero entries; the structure matrices handled
    /// here are sparse in practice even though storage is dense.
    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                context: "matrix product",
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a * b;
                    out[(i, j)] += &prod;
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                context: "matrix-vector product",
                expected: self.cols,
                found: v.len(),
            });
        }
        let mut out = vec![Rational::zero(); self.rows];
        for (r, out_r) in out.iter_mut().enumerate() {
            for c in 0..self.cols {
                let a = &self[(r, c)];
                if a.is_zero() || v[c].is_zero() {
                    continue;
                }
                let prod = a * &v[c];
                *out_r += &prod;
            }
        }
        Ok(out)
    }

    /// Commutator `self∘other − other∘self`.
    pub fn commutator(&self, other: &Matrix) -> Result<Matrix> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Anticommutator `self∘other + other∘self`.
    pub fn anticommutator(&self, other: &Matrix) -> Result<Matrix> {
        self.mul(other)?.add(&other.mul(self)?)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                context: "vertical stack",
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }

    /// In-place reduction to reduced row echelon form. Pivoting is
    /// deterministic: the first nonzero entry in column order. Returns the
    /// pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(found) =
                (pivot_row..self.rows).find(|&r| !self[(r, col)].is_zero())
            else {
                continue;
            };
            self.swap_rows(pivot_row, found);
            let inv = self[(pivot_row, col)].recip();
            for c in col..self.cols {
                let v = &self[(pivot_row, c)] * &inv;
                self[(pivot_row, c)] = v;
            }
            for r in 0..self.rows {
                if r == pivot_row || self[(r, col)].is_zero() {
                    continue;
                }
                let factor = self[(r, col)].clone();
                for c in col..self.cols {
                    let v = &self[(r, c)] - &(&factor * &self[(pivot_row, c)]);
                    self[(r, c)] = v;
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Row rank by exact elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    /// Canonical basis of the kernel `{v : self·v = 0}`.
    ///
    /// The basis produced by back-substituting the reduced echelon form is
    /// re-canonicalized through [`Subspace`], so equal kernels always store
    /// identical bases.
    pub fn nullspace(&self) -> Subspace {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = Some(row);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut vec = vec![Rational::zero(); self.cols];
            vec[free] = Rational::one();
            for (col, slot) in pivot_set.iter().enumerate() {
                if let Some(row) = slot {
                    vec[col] = -&m[(*row, free)];
                }
            }
            basis.push(vec);
        }
        Subspace::from_spanning(self.cols, basis)
    }

    /// One exact solution of `self·x = b` if the system is consistent.
    /// Free variables are set to zero in echelon order, so the choice is
    /// deterministic.
    pub fn solve(&self, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                context: "solve right-hand side",
                expected: self.rows,
                found: b.len(),
            });
        }
        let mut aug = Matrix::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self[(r, c)].clone()
            } else {
                b[r].clone()
            }
        });
        let pivots = aug.rref_in_place();
        // pivot in the rhs column means the system is inconsistent
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = aug[(row, self.cols)].clone();
        }
        Ok(Some(x))
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        debug_assert!(r < self.rows && c < self.cols);
        &self.entries[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.entries[r * self.cols + c]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_identity_and_zero() {
        assert_eq!(Matrix::identity(3).rank(), 3);
        assert_eq!(Matrix::zeros(4, 2).rank(), 0);
    }

    #[test]
    fn nullspace_single_equation() {
        // [1 1] -> span{(1, -1)}
        let m = Matrix::from_i64(&[&[1, 1]]);
        let ns = m.nullspace();
        assert_eq!(ns.dim(), 1);
        assert_eq!(
            ns.basis()[0],
            vec![Rational::one(), Rational::from_int(-1)]
        );
    }

    #[test]
    fn nullspace_identity_is_zero() {
        let ns = Matrix::identity(5).nullspace();
        assert_eq!(ns.dim(), 0);
    }

    #[test]
    fn solve_identity() {
        let b = vec![Rational::new(2, 3), Rational::from_int(-5)];
        let x = Matrix::identity(2).solve(&b).unwrap().unwrap();
        assert_eq!(x, b);
    }

    #[test]
    fn solve_underdetermined_free_vars_zero() {
        // [1 1]·x = (2) -> (2, 0) under the free-variable-zero rule
        let m = Matrix::from_i64(&[&[1, 1]]);
        let x = m.solve(&[Rational::from_int(2)]).unwrap().unwrap();
        assert_eq!(x, vec![Rational::from_int(2), Rational::zero()]);
    }

    #[test]
    fn solve_inconsistent() {
        // zero row with nonzero rhs
        let m = Matrix::from_i64(&[&[1, 0], &[0, 0]]);
        let sol = m
            .solve(&[Rational::from_int(1), Rational::from_int(1)])
            .unwrap();
        assert!(sol.is_none());
    }

    #[test]
    fn solve_rhs_length_checked() {
        let m = Matrix::identity(2);
        assert!(m.solve(&[Rational::one()]).is_err());
    }

    #[test]
    fn product_and_commutator() {
        let a = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        let b = Matrix::from_i64(&[&[0, 0], &[1, 0]]);
        let h = a.commutator(&b).unwrap();
        assert_eq!(h, Matrix::from_i64(&[&[1, 0], &[0, -1]]));
        assert_eq!(
            a.anticommutator(&b).unwrap(),
            Matrix::identity(2)
        );
    }

    #[test]
    fn rank_plus_nullity_small_fixed() {
        let m = Matrix::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(m.rank() + m.nullspace().dim(), m.cols());
        for v in m.nullspace().basis() {
            assert!(m.mul_vec(v).unwrap().iter().all(Rational::is_zero));
        }
    }
}
