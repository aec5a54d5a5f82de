//! Lawrence–Krammer representation `B_n → GL(n(n-1)/2, Z[q^±1, t^±1])`.
//!
//! Basis vectors `x_{i,j}` for `1 <= i < j <= n`. The generator `σ_k` acts
//! by
//!
//! ```text
//! x_{k,k+1}              ↦ t q² x_{k,k+1}
//! x_{i,k}     (i < k)    ↦ (1 - q) x_{i,k} + q x_{i,k+1}
//! x_{i,k+1}   (i < k)    ↦ x_{i,k} + t q^{k-i+1} (q - 1) x_{k,k+1}
//! x_{k,j}     (j > k+1)  ↦ t q (q - 1) x_{k,k+1} + q x_{k+1,j}
//! x_{k+1,j}   (j > k+1)  ↦ x_{k,j} + (1 - q) x_{k+1,j}
//! x_{i,j}     (i<k<k+1<j)↦ x_{i,j} + t q^{k-i} (q - 1)² x_{k,k+1}
//! ```
//!
//! and fixes every other basis vector. Matrices hold images as columns and
//! a word maps to the left-to-right product of its letters' matrices. No
//! variable is ever specialised to a number.

use crate::error::{BraidError, Result};
use crate::laurent::LaurentPoly2;
use crate::matrix::{PolyMatrix2, SparseColumns};
use crate::word::{BraidWord, Letter};

/// Largest strand count `lk_matrix` accepts (dimension 28).
pub const DEFAULT_MAX_STRANDS: usize = 8;

fn dim(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Position of `x_{i,j}` (1-based, `i < j`) in the basis.
fn basis_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i < j && j <= n);
    // rows 1..i-1 contribute (n - r) entries each
    let before: usize = (1..i).map(|r| n - r).sum();
    before + (j - i - 1)
}

fn qt(c: i128, a: i32, b: i32) -> LaurentPoly2 {
    LaurentPoly2::qt(c, a, b)
}

/// `Σ c q^a t^b` from `(c, a, b)` triples.
fn poly(terms: &[(i128, i32, i32)]) -> LaurentPoly2 {
    LaurentPoly2::from_terms(terms.iter().map(|&(c, a, b)| ((a, b), c)))
}

/// Sparse matrix of `σ_k^{±1}` on `n` strands.
pub fn generator_matrix(n: usize, letter: Letter) -> SparseColumns<(i32, i32)> {
    let k = letter.index();
    assert!(k >= 1 && k < n, "σ_{k} not in B_{n}");
    let idx = |i: usize, j: usize| basis_index(n, i, j);
    let e = idx(k, k + 1);
    let mut columns = Vec::new();
    let positive = letter.is_positive();

    // x_{k,k+1}
    columns.push((
        e,
        vec![(e, if positive { qt(1, 2, 1) } else { qt(1, -2, -1) })],
    ));

    for i in 1..k {
        let a = idx(i, k);
        let b = idx(i, k + 1);
        let d = (k - i + 1) as i32;
        if positive {
            // c = t q^d (q - 1)
            let c = poly(&[(1, d + 1, 1), (-1, d, 1)]);
            columns.push((
                a,
                vec![(a, poly(&[(1, 0, 0), (-1, 1, 0)])), (b, qt(1, 1, 0))],
            ));
            columns.push((b, vec![(a, LaurentPoly2::one()), (e, c)]));
        } else {
            // σ^{-1} a = b - c t^{-1} q^{-2} e
            // σ^{-1} b = q^{-1} a + (1 - q^{-1}) b + (q^{-1} - 1) c t^{-1} q^{-2} e
            let c_u = poly(&[(1, d - 1, 0), (-1, d - 2, 0)]); // c t^{-1} q^{-2}
            let neg_c_u = &LaurentPoly2::zero() - &c_u;
            columns.push((a, vec![(b, LaurentPoly2::one()), (e, neg_c_u)]));
            let factor = poly(&[(1, -1, 0), (-1, 0, 0)]); // q^{-1} - 1
            columns.push((
                b,
                vec![
                    (a, qt(1, -1, 0)),
                    (b, poly(&[(1, 0, 0), (-1, -1, 0)])),
                    (e, &factor * &c_u),
                ],
            ));
        }
    }

    for j in k + 2..=n {
        let a = idx(k, j);
        let b = idx(k + 1, j);
        if positive {
            // d = t q (q - 1)
            let d = poly(&[(1, 2, 1), (-1, 1, 1)]);
            columns.push((a, vec![(e, d), (b, qt(1, 1, 0))]));
            columns.push((
                b,
                vec![
                    (a, LaurentPoly2::one()),
                    (b, poly(&[(1, 0, 0), (-1, 1, 0)])),
                ],
            ));
        } else {
            // d t^{-1} q^{-2} = q^{-1} (q - 1) = 1 - q^{-1}
            let d_u = poly(&[(1, 0, 0), (-1, -1, 0)]);
            // σ^{-1} b = q^{-1} a - q^{-1} d_u e
            // σ^{-1} a = b - (1 - q) σ^{-1} b
            let a_coef_e = &(&poly(&[(1, 0, 0), (-1, 1, 0)]) * &d_u) * &qt(1, -1, 0);
            columns.push((
                a,
                vec![(b, LaurentPoly2::one()), (a, d_u.clone()), (e, a_coef_e)],
            ));
            let neg = &LaurentPoly2::zero() - &(&d_u * &qt(1, -1, 0));
            columns.push((b, vec![(a, qt(1, -1, 0)), (e, neg)]));
        }
    }

    for i in 1..k {
        for j in k + 2..=n {
            let x = idx(i, j);
            let d = (k - i) as i32;
            // f = t q^d (q - 1)^2
            let f = poly(&[(1, d + 2, 1), (-2, d + 1, 1), (1, d, 1)]);
            let coef = if positive {
                f
            } else {
                // -f t^{-1} q^{-2}
                poly(&[(-1, d, 0), (2, d - 1, 0), (-1, d - 2, 0)])
            };
            columns.push((x, vec![(x, LaurentPoly2::one()), (e, coef)]));
        }
    }

    SparseColumns {
        dim: dim(n),
        columns,
    }
}

/// The Lawrence–Krammer matrix of `w`, for `w.strands() <= max_strands`.
pub fn lk_matrix_bounded(w: &BraidWord, max_strands: usize) -> Result<PolyMatrix2> {
    let n = w.strands();
    if n > max_strands {
        return Err(BraidError::Capacity(format!(
            "Lawrence-Krammer matrices limited to {max_strands} strands (dimension {}), got B_{n}",
            dim(max_strands)
        )));
    }
    let mut m = PolyMatrix2::identity(dim(n));
    for &l in w.letters() {
        m.mul_sparse_right(&generator_matrix(n, l));
    }
    Ok(m)
}

pub fn lk_matrix(w: &BraidWord) -> Result<PolyMatrix2> {
    lk_matrix_bounded(w, DEFAULT_MAX_STRANDS)
}
