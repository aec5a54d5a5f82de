//! Invariants of braid closures: reduced Burau matrices, the Alexander
//! polynomial, component count, the genus of positive braid knots, and the
//! surface slope of the conjugate twisted torus knot family.

use crate::error::{BraidError, Result};
use crate::laurent::LaurentPoly;
use crate::matrix::{BurauMatrix, SparseColumns};
use crate::word::{BraidWord, Letter};

/// Reduced Burau image of one letter, `(n-1) × (n-1)`.
///
/// Convention: `σ_i` is the identity except for row `i` (1-based), which
/// reads `[… t, -t, 1 …]` in columns `i-1, i, i+1` (entries falling
/// outside the matrix are dropped).
pub fn burau_generator(n: usize, letter: Letter) -> SparseColumns<i32> {
    let dim = n - 1;
    let r = letter.index() - 1;
    let t = LaurentPoly::t();
    let t_inv = LaurentPoly::monomial(1, -1);
    let one = LaurentPoly::one();
    let mut columns = Vec::new();
    if letter.is_positive() {
        if r >= 1 {
            columns.push((r - 1, vec![(r - 1, one.clone()), (r, t.clone())]));
        }
        columns.push((r, vec![(r, -&t)]));
        if r + 1 < dim {
            columns.push((r + 1, vec![(r + 1, one.clone()), (r, one)]));
        }
    } else {
        // row r of the inverse reads [1, -t^{-1}, t^{-1}]
        if r >= 1 {
            columns.push((r - 1, vec![(r - 1, one.clone()), (r, one)]));
        }
        columns.push((r, vec![(r, -&t_inv)]));
        if r + 1 < dim {
            columns.push((r + 1, vec![(r + 1, LaurentPoly::one()), (r, t_inv)]));
        }
    }
    SparseColumns { dim, columns }
}

/// Reduced Burau matrix of `w`: the left-to-right product over its letters.
pub fn reduced_burau(w: &BraidWord) -> BurauMatrix {
    let n = w.strands();
    let mut m = BurauMatrix::identity(n - 1);
    for &l in w.letters() {
        m.mul_sparse_right(&burau_generator(n, l));
    }
    m
}

/// Number of components of the closure.
pub fn component_count(w: &BraidWord) -> usize {
    w.underlying_permutation().cycle_count()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlexanderResult {
    /// Normalised: lowest exponent 0, positive leading coefficient.
    pub poly: LaurentPoly,
    pub monic: bool,
    pub degree_span: i32,
}

/// Fixes the `±t^k` ambiguity: lowest exponent 0, leading coefficient > 0.
pub fn normalize_alexander(p: &LaurentPoly) -> LaurentPoly {
    let Some(lo) = p.min_degree() else {
        return LaurentPoly::zero();
    };
    let shifted = p.shift(-lo);
    if shifted.leading_coeff() < 0 {
        -shifted
    } else {
        shifted
    }
}

/// Alexander polynomial of the closure of `w`, which must be a knot:
/// `det(I - B(w)) · (1 - t) / (1 - t^n)` with `B` the reduced Burau matrix.
pub fn alexander(w: &BraidWord) -> Result<AlexanderResult> {
    let components = component_count(w);
    if components != 1 {
        return Err(BraidError::NotAKnot { components });
    }
    let n = w.strands();
    let b = reduced_burau(w);
    let mut i_minus_b = BurauMatrix::identity(n - 1);
    for r in 0..n - 1 {
        for c in 0..n - 1 {
            let v = i_minus_b.get(r, c) - b.get(r, c);
            *i_minus_b.get_mut(r, c) = v;
        }
    }
    let det = i_minus_b.determinant()?;
    let one_minus_t = LaurentPoly::from_coeffs(0, &[1, -1]);
    let one_minus_tn = &LaurentPoly::one() - &LaurentPoly::monomial(1, n as i32);
    let poly = (&det * &one_minus_t)
        .div_exact(&one_minus_tn)
        .map_err(|e| {
            BraidError::Internal(format!(
                "(1 - t^{n}) does not divide the Burau determinant: {e}"
            ))
        })?;
    let poly = normalize_alexander(&poly);
    if poly.is_zero() {
        return Err(BraidError::Internal(format!(
            "zero Alexander polynomial for {w}"
        )));
    }
    Ok(AlexanderResult {
        monic: poly.leading_coeff() == 1,
        degree_span: poly.degree_span(),
        poly,
    })
}

/// Seifert genus of the closure of a positive braid word whose closure is a
/// knot: `(crossings - strands + 1) / 2`.
pub fn positive_braid_genus(w: &BraidWord) -> Result<i64> {
    if !w.is_positive() {
        return Err(BraidError::Precondition(format!(
            "{w} is not a positive word"
        )));
    }
    let components = component_count(w);
    if components != 1 {
        return Err(BraidError::NotAKnot { components });
    }
    let twice = w.len() as i64 - w.strands() as i64 + 1;
    debug_assert!(twice % 2 == 0);
    Ok(twice / 2)
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Surface slope `k q² + m q - m²` of the pair `K(kq+m, q, m, -1)`,
/// `K(kq+q-m, q, q-m, -1)`.
pub fn surface_slope(k: i64, q: i64, m: i64) -> Result<i64> {
    if q < 2 || k < 2 || m < 1 || m > q - 1 {
        return Err(BraidError::param(format!(
            "surface slope needs q >= 2, k >= 2, 1 <= m <= q-1 (got k={k}, q={q}, m={m})"
        )));
    }
    if gcd(q, m) != 1 {
        return Err(BraidError::param(format!(
            "gcd(q, m) = gcd({q}, {m}) must be 1"
        )));
    }
    Ok(k * q * q + m * q - m * m)
}
