//! Braid words: signed generator letters over a fixed strand count.
//!
//! A [`BraidWord`] is pure syntax. Nothing here applies braid relations
//! beyond free cancellation; equality in `B_n` is decided by
//! [`crate::garside`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{BraidError, Result};
use crate::perm::Permutation;

/// A generator `σ_i` (`sign = 1`) or its inverse (`sign = -1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    index: usize,
    sign: i8,
}

impl Letter {
    pub fn new(index: usize, sign: i8) -> Result<Self> {
        if index == 0 {
            return Err(BraidError::param("generator index must be >= 1"));
        }
        if sign != 1 && sign != -1 {
            return Err(BraidError::param(format!(
                "letter sign must be +1 or -1, got {sign}"
            )));
        }
        Ok(Letter { index, sign })
    }

    /// `σ_i`. Panics if `i == 0`.
    pub fn pos(index: usize) -> Self {
        assert!(index >= 1, "generator index must be >= 1");
        Letter { index, sign: 1 }
    }

    /// `σ_i^{-1}`. Panics if `i == 0`.
    pub fn neg(index: usize) -> Self {
        assert!(index >= 1, "generator index must be >= 1");
        Letter { index, sign: -1 }
    }

    /// From the signed-integer text form: `i` is `σ_i`, `-i` is `σ_i^{-1}`.
    pub fn from_signed(v: i64) -> Result<Self> {
        if v == 0 {
            return Err(BraidError::param("0 is not a generator"));
        }
        Letter::new(v.unsigned_abs() as usize, if v > 0 { 1 } else { -1 })
    }

    pub fn index(self) -> usize {
        self.index
    }

    pub fn sign(self) -> i8 {
        self.sign
    }

    pub fn is_positive(self) -> bool {
        self.sign > 0
    }

    pub fn inverse(self) -> Self {
        Letter {
            index: self.index,
            sign: -self.sign,
        }
    }

    pub fn to_signed(self) -> i64 {
        self.index as i64 * self.sign as i64
    }

    /// Far commutation `σ_i σ_j = σ_j σ_i` applies when `|i - j| >= 2`.
    pub fn commutes_with(self, other: Letter) -> bool {
        self.index.abs_diff(other.index) >= 2
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_signed())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    /// The empty word (identity) in `B_strands`.
    pub fn identity(strands: usize) -> Result<Self> {
        if strands < 2 {
            return Err(BraidError::param(format!(
                "strand count must be >= 2, got {strands}"
            )));
        }
        Ok(BraidWord {
            strands,
            letters: Vec::new(),
        })
    }

    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        let mut w = BraidWord::identity(strands)?;
        if let Some(bad) = letters.iter().find(|l| l.index >= strands) {
            return Err(BraidError::param(format!(
                "generator σ_{} does not exist in B_{strands}",
                bad.index
            )));
        }
        w.letters = letters;
        Ok(w)
    }

    /// Builds a word from signed integers (`-2` is `σ_2^{-1}`).
    pub fn from_signed(strands: usize, letters: &[i64]) -> Result<Self> {
        let letters = letters
            .iter()
            .map(|&v| Letter::from_signed(v))
            .collect::<Result<Vec<_>>>()?;
        BraidWord::new(strands, letters)
    }

    pub(crate) fn from_parts_unchecked(strands: usize, letters: Vec<Letter>) -> Self {
        debug_assert!(strands >= 2 && letters.iter().all(|l| l.index < strands));
        BraidWord { strands, letters }
    }

    /// A single generator `σ_i^{sign}`.
    pub fn generator(strands: usize, index: usize, sign: i8) -> Result<Self> {
        BraidWord::new(strands, vec![Letter::new(index, sign)?])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn to_signed(&self) -> Vec<i64> {
        self.letters.iter().map(|l| l.to_signed()).collect()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| l.is_positive())
    }

    /// Letters reversed, signs kept.
    pub fn rev(&self) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.reverse();
        BraidWord::from_parts_unchecked(self.strands, letters)
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        check_strands(self, other)?;
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord::from_parts_unchecked(self.strands, letters))
    }

    /// Concatenates a sequence of words on a common strand count.
    pub fn concat_all<'a, I>(strands: usize, parts: I) -> Result<BraidWord>
    where
        I: IntoIterator<Item = &'a BraidWord>,
    {
        let mut out = BraidWord::identity(strands)?;
        for part in parts {
            check_strands(&out, part)?;
            out.letters.extend_from_slice(&part.letters);
        }
        Ok(out)
    }

    /// Free-group inverse: reverse order, flip every sign.
    pub fn invert(&self) -> BraidWord {
        let letters = self.letters.iter().rev().map(|l| l.inverse()).collect();
        BraidWord::from_parts_unchecked(self.strands, letters)
    }

    pub fn power(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let reps = k.unsigned_abs() as usize;
        let mut letters = Vec::with_capacity(base.len() * reps);
        for _ in 0..reps {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord::from_parts_unchecked(self.strands, letters)
    }

    /// Cancels adjacent `σ_i σ_i^{-1}` pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match stack.last() {
                Some(&top) if top == l.inverse() => {
                    stack.pop();
                }
                _ => stack.push(l),
            }
        }
        BraidWord::from_parts_unchecked(self.strands, stack)
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign as i64).sum()
    }

    /// Image in the symmetric group. `σ_i` is the transposition `(i, i+1)`
    /// and the first letter acts first, so the result sends a strand's
    /// starting position to its final position.
    pub fn underlying_permutation(&self) -> Permutation {
        let mut track: Vec<usize> = (0..self.strands).collect(); // position -> start
        for l in &self.letters {
            track.swap(l.index - 1, l.index);
        }
        // track[pos] = start; we want start -> pos
        Permutation::from_images_unchecked(track).inverse()
    }

    /// Same element with a different strand count (`strands` must cover
    /// every letter).
    pub fn with_strands(&self, strands: usize) -> Result<BraidWord> {
        BraidWord::new(strands, self.letters.clone())
    }
}

fn check_strands(a: &BraidWord, b: &BraidWord) -> Result<()> {
    if a.strands != b.strands {
        return Err(BraidError::StrandMismatch {
            left: a.strands,
            right: b.strands,
        });
    }
    Ok(())
}

/// Text format: `Bn:` followed by space-separated signed generators.
impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}:", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = BraidError;

    fn from_str(s: &str) -> Result<Self> {
        let mut tokens = s.split_whitespace();
        let header = tokens.next().ok_or_else(|| BraidError::Parse {
            position: 0,
            token: String::new(),
            message: "missing `Bn:` header".into(),
        })?;
        let bad_header = |message: &str| BraidError::Parse {
            position: 0,
            token: header.to_string(),
            message: message.to_string(),
        };
        let digits = header
            .strip_prefix('B')
            .and_then(|h| h.strip_suffix(':'))
            .ok_or_else(|| bad_header("missing `Bn:` header"))?;
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad_header("strand count must be a decimal integer"));
        }
        let strands: usize = digits
            .parse()
            .map_err(|_| bad_header("strand count out of range"))?;
        if strands < 2 {
            return Err(bad_header("strand count must be >= 2"));
        }

        let mut letters = Vec::new();
        for (k, tok) in tokens.enumerate() {
            let position = k + 1;
            let err = |message: String| BraidError::Parse {
                position,
                token: tok.to_string(),
                message,
            };
            let v: i64 = tok.parse().map_err(|_| err("not an integer".into()))?;
            if v == 0 {
                return Err(err("0 is not a generator".into()));
            }
            if v.unsigned_abs() >= strands as u64 {
                return Err(err(format!("|{v}| must be < {strands}")));
            }
            letters.push(Letter::from_signed(v).map_err(|e| err(e.to_string()))?);
        }
        Ok(BraidWord { strands, letters })
    }
}

impl Serialize for BraidWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BraidWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
