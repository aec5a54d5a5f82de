//! Left-greedy Garside normal form in `B_n`.
//!
//! Every braid is written uniquely as `Δ^inf · A_1 ⋯ A_k` where the `A_j`
//! are permutation braids, none trivial or equal to `Δ`, and every adjacent
//! pair is left-weighted. Identity of normal forms decides the word problem.

use std::fmt;

use crate::error::{BraidError, Result};
use crate::perm::Permutation;
use crate::word::{BraidWord, Letter};

/// A positive braid in which every pair of strands crosses at most once,
/// identified with its permutation (start position -> end position).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PermutationBraid {
    perm: Permutation,
}

impl PermutationBraid {
    pub fn from_permutation(perm: Permutation) -> Self {
        PermutationBraid { perm }
    }

    pub fn identity(n: usize) -> Self {
        PermutationBraid {
            perm: Permutation::identity(n),
        }
    }

    /// The half twist `Δ`: every pair of strands crosses once.
    pub fn delta(n: usize) -> Self {
        PermutationBraid {
            perm: Permutation::from_images_unchecked((0..n).rev().collect()),
        }
    }

    pub fn generator(n: usize, i: usize) -> Self {
        PermutationBraid {
            perm: Permutation::transposition(n, i),
        }
    }

    pub fn strands(&self) -> usize {
        self.perm.degree()
    }

    pub fn permutation(&self) -> &Permutation {
        &self.perm
    }

    /// Number of crossings.
    pub fn len(&self) -> usize {
        self.perm.inversions()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity()
    }

    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    pub fn is_delta(&self) -> bool {
        let n = self.strands();
        self.perm
            .images()
            .iter()
            .enumerate()
            .all(|(s, &x)| x == n - 1 - s)
    }

    /// `σ_i` is a left divisor (1-based `i`).
    fn starts_with(&self, i: usize) -> bool {
        let img = self.perm.images();
        img[i - 1] > img[i]
    }

    /// Starting set: generators that can begin a positive word for `self`.
    pub fn starting_set(&self) -> Vec<usize> {
        (1..self.strands())
            .filter(|&i| self.starts_with(i))
            .collect()
    }

    /// Finishing set: generators that can end a positive word for `self`.
    pub fn finishing_set(&self) -> Vec<usize> {
        let inv = self.perm.inverse();
        let inv = inv.images();
        (1..self.strands())
            .filter(|&i| inv[i - 1] > inv[i])
            .collect()
    }

    /// Right complement `∂A` with `A · ∂A = Δ`.
    pub fn right_complement(&self) -> Self {
        let n = self.strands();
        let inv = self.perm.inverse();
        let images = (0..n).map(|j| n - 1 - inv.apply(j)).collect();
        PermutationBraid {
            perm: Permutation::from_images_unchecked(images),
        }
    }

    /// Conjugation by `Δ`: `σ_i ↦ σ_{n-i}`.
    pub fn flip(&self) -> Self {
        let n = self.strands();
        let images = (0..n).map(|s| n - 1 - self.perm.apply(n - 1 - s)).collect();
        PermutationBraid {
            perm: Permutation::from_images_unchecked(images),
        }
    }

    /// A positive word for this permutation braid, taking the smallest
    /// available starting generator at every step.
    pub fn to_letters(&self) -> Vec<Letter> {
        let mut rest = self.perm.images().to_vec();
        let mut out = Vec::with_capacity(self.len());
        'outer: loop {
            for i in 1..rest.len() {
                if rest[i - 1] > rest[i] {
                    rest.swap(i - 1, i);
                    out.push(Letter::pos(i));
                    continue 'outer;
                }
            }
            break;
        }
        out
    }

    pub fn to_word(&self) -> BraidWord {
        BraidWord::from_parts_unchecked(self.strands(), self.to_letters())
    }
}

/// Moves generators from the front of `b` to the back of `a` until the pair
/// is left-weighted. Returns whether anything moved.
fn left_weight(a: &mut [usize], b: &mut [usize]) -> bool {
    // `a` and `b` are image lists (start -> end).
    let n = a.len();
    let mut moved = false;
    loop {
        let mut inv_a = vec![0; n];
        for (s, &x) in a.iter().enumerate() {
            inv_a[x] = s;
        }
        let candidate = (1..n).find(|&i| b[i - 1] > b[i] && inv_a[i - 1] < inv_a[i]);
        match candidate {
            Some(i) => {
                // a <- a σ_i : the strands ending at positions i-1, i swap.
                let (s0, s1) = (inv_a[i - 1], inv_a[i]);
                a[s0] = i;
                a[s1] = i - 1;
                // b <- σ_i^{-1} b
                b.swap(i - 1, i);
                moved = true;
            }
            None => return moved,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    strands: usize,
    inf: i64,
    factors: Vec<PermutationBraid>,
}

impl NormalForm {
    pub fn strands(&self) -> usize {
        self.strands
    }

    /// Power of `Δ` in front.
    pub fn inf(&self) -> i64 {
        self.inf
    }

    /// Supremum: `inf + canonical length`.
    pub fn sup(&self) -> i64 {
        self.inf + self.factors.len() as i64
    }

    pub fn factors(&self) -> &[PermutationBraid] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    /// Spells `Δ^inf A_1 ⋯ A_k` as a word.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let delta = PermutationBraid::delta(n).to_word();
        let mut letters = delta.power(self.inf).into_letters();
        for f in &self.factors {
            letters.extend(f.to_letters());
        }
        BraidWord::from_parts_unchecked(n, letters)
    }

    /// Checks the defining conditions of a left normal form.
    pub fn is_valid(&self) -> bool {
        let trivial = self
            .factors
            .iter()
            .any(|f| f.strands() != self.strands || f.is_identity() || f.is_delta());
        if trivial {
            return false;
        }
        self.factors.windows(2).all(|pair| {
            let fin = pair[0].finishing_set();
            pair[1].starting_set().iter().all(|i| fin.contains(i))
        })
    }
}

/// `inf=<k>; factors=[<images>; <images>; ...]` with 1-based one-line images.
impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "inf={}; factors=[", self.inf)?;
        for (k, factor) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{}", factor.perm)?;
        }
        f.write_str("]")
    }
}

/// Accumulates a positive product of permutation braids in left normal form.
struct Accumulator {
    n: usize,
    absorbed: i64,
    factors: Vec<Vec<usize>>,
}

impl Accumulator {
    fn new(n: usize) -> Self {
        Accumulator {
            n,
            absorbed: 0,
            factors: Vec::new(),
        }
    }

    fn is_delta(&self, f: &[usize]) -> bool {
        f.iter().enumerate().all(|(s, &x)| x == self.n - 1 - s)
    }

    fn is_identity(f: &[usize]) -> bool {
        f.iter().enumerate().all(|(s, &x)| s == x)
    }

    /// Right-multiplies by a permutation braid and restores left-weightedness
    /// with one right-to-left sliding pass.
    fn push(&mut self, simple: Vec<usize>) {
        if Self::is_identity(&simple) {
            return;
        }
        self.factors.push(simple);
        let mut j = self.factors.len() - 1;
        while j > 0 {
            let (left, right) = self.factors.split_at_mut(j);
            if !left_weight(&mut left[j - 1], &mut right[0]) {
                break;
            }
            j -= 1;
        }
        while self.factors.last().is_some_and(|f| Self::is_identity(f)) {
            self.factors.pop();
        }
        let leading = self.factors.iter().take_while(|f| self.is_delta(f)).count();
        if leading > 0 {
            self.factors.drain(..leading);
            self.absorbed += leading as i64;
        }
    }
}

/// Computes the left normal form of `w`.
pub fn normal_form(w: &BraidWord) -> NormalForm {
    let n = w.strands();
    let letters = w.letters();

    // σ_i^{-1} = ∂(σ_i) Δ^{-1}; every Δ^{-1} is moved to the front, flipping
    // each factor it passes.
    let negatives = letters.iter().filter(|l| !l.is_positive()).count();
    let mut flips_after = negatives;
    let mut acc = Accumulator::new(n);
    for &l in letters {
        let base = PermutationBraid::generator(n, l.index());
        let simple = if l.is_positive() {
            base
        } else {
            base.right_complement()
        };
        let simple = if flips_after % 2 == 1 {
            simple.flip()
        } else {
            simple
        };
        if !l.is_positive() {
            flips_after -= 1;
        }
        acc.push(simple.perm.images().to_vec());
    }

    let nf = NormalForm {
        strands: n,
        inf: acc.absorbed - negatives as i64,
        factors: acc
            .factors
            .into_iter()
            .map(|images| {
                PermutationBraid::from_permutation(Permutation::from_images_unchecked(images))
            })
            .collect(),
    };
    debug_assert!(nf.is_valid(), "normal form invariant broken for {w}");
    nf
}

/// Decides equality in `B_n`.
pub fn equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    if a.strands() != b.strands() {
        return Err(BraidError::StrandMismatch {
            left: a.strands(),
            right: b.strands(),
        });
    }
    Ok(normal_form(a) == normal_form(b))
}

/// Whether `w` commutes with every generator of `B_n`.
pub fn is_central_power(w: &BraidWord) -> bool {
    let n = w.strands();
    (1..n).all(|i| {
        let g = BraidWord::from_parts_unchecked(n, vec![Letter::pos(i)]);
        let left = w.concat(&g).expect("same strands");
        let right = g.concat(w).expect("same strands");
        normal_form(&left) == normal_form(&right)
    })
}
