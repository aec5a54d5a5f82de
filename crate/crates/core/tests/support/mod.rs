//! Independent polynomial arithmetic shared by the oracle and acceptance
//! targets. Nothing here calls into the library except `BraidWord` access.
#![allow(dead_code)]

use std::collections::BTreeMap;

use braidforge::word::BraidWord;

/// Laurent polynomial as exponent -> coefficient, zero terms removed.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly(BTreeMap<i32, i128>);

impl Poly {
    fn mono(c: i128, e: i32) -> Poly {
        let mut m = BTreeMap::new();
        if c != 0 {
            m.insert(e, c);
        }
        Poly(m)
    }

    fn add(&self, o: &Poly) -> Poly {
        let mut m = self.0.clone();
        for (&e, &c) in &o.0 {
            *m.entry(e).or_insert(0) += c;
        }
        m.retain(|_, c| *c != 0);
        Poly(m)
    }

    fn neg(&self) -> Poly {
        Poly(self.0.iter().map(|(&e, &c)| (e, -c)).collect())
    }

    fn mul(&self, o: &Poly) -> Poly {
        let mut m = BTreeMap::new();
        for (&a, &x) in &self.0 {
            for (&b, &y) in &o.0 {
                *m.entry(a + b).or_insert(0) += x * y;
            }
        }
        m.retain(|_, c| *c != 0);
        Poly(m)
    }

    /// Dense coefficients from the lowest exponent up; sign fixed so the
    /// top coefficient is positive.
    fn normalized(&self) -> Vec<i128> {
        let lo = *self.0.keys().next().expect("nonzero");
        let hi = *self.0.keys().next_back().unwrap();
        let mut v: Vec<i128> = (lo..=hi).map(|e| *self.0.get(&e).unwrap_or(&0)).collect();
        if *v.last().unwrap() < 0 {
            v.iter_mut().for_each(|c| *c = -*c);
        }
        v
    }
}

/// Exact division of dense integer polynomials (lowest degree first).
fn divide(num: &[i128], den: &[i128]) -> Vec<i128> {
    let mut rem = num.to_vec();
    let dl = den.len();
    let lead = den[dl - 1];
    let mut quot = vec![0; rem.len() + 1 - dl];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dl - 1];
        assert_eq!(c % lead, 0, "inexact division");
        let f = c / lead;
        quot[i] = f;
        for j in 0..dl {
            rem[i + j] -= f * den[j];
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "nonzero remainder");
    while quot.len() > 1 && quot[quot.len() - 1] == 0 {
        quot.pop();
    }
    quot
}

fn poly_from_dense(v: &[i128]) -> Poly {
    let mut p = Poly::default();
    for (e, &c) in v.iter().enumerate() {
        p = p.add(&Poly::mono(c, e as i32));
    }
    p
}

/// `(t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1))`.
pub fn torus_alexander(p: usize, q: usize) -> Vec<i128> {
    let binom = |d: usize| {
        let mut v = vec![0i128; d + 1];
        v[0] = -1;
        v[d] = 1;
        v
    };
    let num = poly_from_dense(&binom(p * q)).mul(&poly_from_dense(&binom(1)));
    let den = poly_from_dense(&binom(p)).mul(&poly_from_dense(&binom(q)));
    divide(&num.normalized(), &den.normalized())
}

/// Unreduced Burau matrix: `σ_i` acts on rows/columns `i-1, i` by
/// `[[1-t, t], [1, 0]]`, `σ_i^{-1}` by `[[0, 1], [t^-1, 1-t^-1]]`.
fn unreduced_burau(w: &BraidWord) -> Vec<Vec<Poly>> {
    let n = w.strands();
    let mut m: Vec<Vec<Poly>> = (0..n)
        .map(|r| (0..n).map(|c| Poly::mono((r == c) as i128, 0)).collect())
        .collect();
    for l in w.letters() {
        let i = l.index() - 1;
        let block = if l.is_positive() {
            [
                [Poly::mono(1, 0).add(&Poly::mono(-1, 1)), Poly::mono(1, 1)],
                [Poly::mono(1, 0), Poly::default()],
            ]
        } else {
            [
                [Poly::default(), Poly::mono(1, 0)],
                [Poly::mono(1, -1), Poly::mono(1, 0).add(&Poly::mono(-1, -1))],
            ]
        };
        for row in m.iter_mut() {
            let a = row[i].clone();
            let b = row[i + 1].clone();
            row[i] = a.mul(&block[0][0]).add(&b.mul(&block[1][0]));
            row[i + 1] = a.mul(&block[0][1]).add(&b.mul(&block[1][1]));
        }
    }
    m
}

/// Cofactor expansion along the first row.
fn cofactor_det(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::mono(1, 0);
    }
    let mut acc = Poly::default();
    for c in 0..n {
        if m[0][c].0.is_empty() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != c)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = m[0][c].mul(&cofactor_det(&minor));
        acc = if c % 2 == 0 {
            acc.add(&term)
        } else {
            acc.add(&term.neg())
        };
    }
    acc
}

/// Principal `(n-1)`-minor of `I - B(w)`; for a knot closure this is the
/// Alexander polynomial up to a unit.
pub fn burau_minor_alexander(w: &BraidWord) -> Vec<i128> {
    let n = w.strands();
    let b = unreduced_burau(w);
    let minor: Vec<Vec<Poly>> = (0..n - 1)
        .map(|r| {
            (0..n - 1)
                .map(|c| Poly::mono((r == c) as i128, 0).add(&b[r][c].neg()))
                .collect()
        })
        .collect();
    cofactor_det(&minor).normalized()
}
