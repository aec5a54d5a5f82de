//! Square matrices over Laurent polynomial rings.

use std::fmt;

use crate::error::{BraidError, Result};
use crate::laurent::{Exponent, Laurent, LaurentPoly};

#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix<E: Exponent> {
    dim: usize,
    entries: Vec<Laurent<E>>,
}

/// Reduced Burau matrices.
pub type BurauMatrix = PolyMatrix<i32>;
/// Lawrence–Krammer matrices over `Z[q^±1, t^±1]`.
pub type PolyMatrix2 = PolyMatrix<(i32, i32)>;

/// Nonzero `(row, value)` entries of one column.
pub type SparseColumn<E> = Vec<(usize, Laurent<E>)>;

/// A matrix that agrees with the identity outside the listed columns.
/// Each listed column is given by its nonzero `(row, value)` entries.
#[derive(Clone, Debug)]
pub struct SparseColumns<E: Exponent> {
    pub dim: usize,
    pub columns: Vec<(usize, SparseColumn<E>)>,
}

impl<E: Exponent> SparseColumns<E> {
    pub fn to_dense(&self) -> PolyMatrix<E> {
        let mut m = PolyMatrix::identity(self.dim);
        for (c, col) in &self.columns {
            for r in 0..self.dim {
                *m.get_mut(r, *c) = Laurent::zero();
            }
            for (r, v) in col {
                *m.get_mut(*r, *c) = v.clone();
            }
        }
        m
    }
}

impl<E: Exponent> PolyMatrix<E> {
    pub fn zero(dim: usize) -> Self {
        PolyMatrix {
            dim,
            entries: vec![Laurent::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = Laurent::one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> &Laurent<E> {
        &self.entries[r * self.dim + c]
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut Laurent<E> {
        &mut self.entries[r * self.dim + c]
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * n + j].add_product(a, b);
                    }
                }
            }
        }
        out
    }

    /// `self ← self · g` for a sparse `g`; only the listed columns change.
    pub fn mul_sparse_right(&mut self, g: &SparseColumns<E>) {
        assert_eq!(self.dim, g.dim, "dimension mismatch");
        let n = self.dim;
        let new_cols: Vec<(usize, Vec<Laurent<E>>)> = g
            .columns
            .iter()
            .map(|(c, col)| {
                let mut fresh = vec![Laurent::zero(); n];
                for (r, v) in col {
                    for (i, slot) in fresh.iter_mut().enumerate() {
                        let a = self.get(i, *r);
                        if !a.is_zero() {
                            slot.add_product(a, v);
                        }
                    }
                }
                (*c, fresh)
            })
            .collect();
        for (c, col) in new_cols {
            for (i, v) in col.into_iter().enumerate() {
                self.entries[i * n + c] = v;
            }
        }
    }
}

impl<E: Exponent> fmt::Debug for PolyMatrix<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[Laurent<E>]> = self.entries.chunks(self.dim.max(1)).collect();
        f.debug_list().entries(rows).finish()
    }
}

impl BurauMatrix {
    /// Determinant by fraction-free (Bareiss) elimination; every division
    /// is exact.
    pub fn determinant(&self) -> Result<LaurentPoly> {
        let n = self.dim;
        if n == 0 {
            return Ok(LaurentPoly::one());
        }
        let mut a: Vec<Vec<LaurentPoly>> = self.entries.chunks(n).map(|r| r.to_vec()).collect();
        let mut sign = 1;
        let mut prev = LaurentPoly::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return Ok(LaurentPoly::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.div_exact(&prev).map_err(|e| {
                        BraidError::Internal(format!("Bareiss step not exact: {e}"))
                    })?;
                }
                a[i][k] = LaurentPoly::zero();
            }
            prev = a[k][k].clone();
        }
        Ok(a[n - 1][n - 1].scale(sign))
    }
}
