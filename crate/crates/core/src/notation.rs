//! Block notation for ascending generator runs.
//!
//! `Π_s^l = σ_l σ_{l+1} ⋯ σ_s` and `Δ_s^l = Π_s^l Π_{s-1}^l ⋯ Π_l^l`.
//! With `l = 1` these are the usual `Π_s` and the half twist `Δ_s`.

use crate::error::{BraidError, Result};
use crate::word::{BraidWord, Letter};

fn check_range(what: &str, l: usize, s: usize, strands: usize) -> Result<()> {
    if l < 1 || l > s || s + 1 > strands {
        return Err(BraidError::param(format!(
            "{what}(l={l}, s={s}) needs 1 <= l <= s <= {}",
            strands.saturating_sub(1)
        )));
    }
    Ok(())
}

pub(crate) fn pi_letters(l: usize, s: usize) -> impl DoubleEndedIterator<Item = Letter> {
    (l..=s).map(Letter::pos)
}

pub(crate) fn delta_letters(l: usize, s: usize) -> impl Iterator<Item = Letter> {
    (l..=s).rev().flat_map(move |top| pi_letters(l, top))
}

/// `Π_s^l` in `B_strands`.
pub fn pi_word(l: usize, s: usize, strands: usize) -> Result<BraidWord> {
    check_range("Pi", l, s, strands)?;
    BraidWord::new(strands, pi_letters(l, s).collect())
}

/// `Δ_s^l` in `B_strands`.
pub fn delta_word(l: usize, s: usize, strands: usize) -> Result<BraidWord> {
    check_range("Delta", l, s, strands)?;
    BraidWord::new(strands, delta_letters(l, s).collect())
}

/// `Δ_s^l`, with the empty word when `l > s` (so `Δ_0` is the identity).
pub fn delta_or_empty(l: usize, s: usize, strands: usize) -> Result<BraidWord> {
    if l == 0 || s >= strands {
        return Err(BraidError::param(format!(
            "Delta(l={l}, s={s}) out of range for B_{strands}"
        )));
    }
    if l > s {
        return BraidWord::identity(strands);
    }
    delta_word(l, s, strands)
}

/// One token of a block expression; every token carries an integer exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Token {
    Pi {
        l: usize,
        s: usize,
        exp: i64,
    },
    Delta {
        l: usize,
        s: usize,
        exp: i64,
    },
    Sigma {
        i: usize,
        exp: i64,
    },
    /// `(rev e)^exp`: the reversed expansion of `e`, then raised to `exp`.
    Rev {
        inner: PiDeltaExpr,
        exp: i64,
    },
}

/// A product of tokens, read left to right.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PiDeltaExpr {
    pub tokens: Vec<Token>,
}

impl PiDeltaExpr {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn pi(mut self, l: usize, s: usize, exp: i64) -> Self {
        self.tokens.push(Token::Pi { l, s, exp });
        self
    }

    pub fn delta(mut self, l: usize, s: usize, exp: i64) -> Self {
        self.tokens.push(Token::Delta { l, s, exp });
        self
    }

    pub fn sigma(mut self, i: usize, exp: i64) -> Self {
        self.tokens.push(Token::Sigma { i, exp });
        self
    }

    pub fn rev(mut self, inner: PiDeltaExpr, exp: i64) -> Self {
        self.tokens.push(Token::Rev { inner, exp });
        self
    }

    /// Expands to a word without simplification.
    pub fn expand(&self, strands: usize) -> Result<BraidWord> {
        let mut parts = Vec::with_capacity(self.tokens.len());
        for token in &self.tokens {
            let part = match token {
                Token::Pi { l, s, exp } => pi_word(*l, *s, strands)?.power(*exp),
                Token::Delta { l, s, exp } => delta_word(*l, *s, strands)?.power(*exp),
                Token::Sigma { i, exp } => BraidWord::generator(strands, *i, 1)?.power(*exp),
                Token::Rev { inner, exp } => inner.expand(strands)?.rev().power(*exp),
            };
            parts.push(part);
        }
        BraidWord::concat_all(strands, &parts)
    }
}

pub fn expand(e: &PiDeltaExpr, strands: usize) -> Result<BraidWord> {
    e.expand(strands)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    #[test]
    fn pi_examples() {
        assert_eq!(pi_word(1, 3, 4).unwrap(), w("B4: 1 2 3"));
        assert_eq!(pi_word(2, 2, 3).unwrap(), w("B3: 2"));
        assert_eq!(pi_word(1, 1, 2).unwrap(), w("B2: 1"));
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta_word(1, 2, 3).unwrap(), w("B3: 1 2 1"));
        assert_eq!(delta_word(1, 1, 2).unwrap(), w("B2: 1"));
        assert_eq!(delta_word(3, 4, 5).unwrap(), w("B5: 3 4 3"));
    }

    #[test]
    fn out_of_range_blocks() {
        assert!(pi_word(0, 2, 4).is_err());
        assert!(pi_word(3, 2, 4).is_err());
        assert!(pi_word(1, 4, 4).is_err());
        assert!(delta_word(2, 1, 4).is_err());
    }

    #[test]
    fn degenerate_delta_is_identity() {
        assert!(delta_or_empty(2, 1, 2).unwrap().is_empty());
        assert!(delta_or_empty(1, 0, 3).unwrap().is_empty());
        assert!(delta_or_empty(1, 3, 3).is_err());
    }

    #[test]
    fn block_lengths() {
        for strands in 2..9 {
            for s in 1..strands {
                for l in 1..=s {
                    let k = s - l + 1;
                    assert_eq!(pi_word(l, s, strands).unwrap().len(), k);
                    assert_eq!(delta_word(l, s, strands).unwrap().len(), k * (k + 1) / 2);
                }
            }
        }
    }

    #[test]
    fn expand_examples() {
        let e = PiDeltaExpr::new()
            .rev(PiDeltaExpr::new().pi(1, 4, 1), 3)
            .rev(PiDeltaExpr::new().pi(1, 1, 1), -2);
        let word = e.expand(5).unwrap();
        assert_eq!(word.len(), 14);
        assert_eq!(word, w("B5: 4 3 2 1 4 3 2 1 4 3 2 1 -1 -1"));

        assert_eq!(
            PiDeltaExpr::new().delta(1, 2, 1).expand(3).unwrap(),
            w("B3: 1 2 1")
        );
        assert!(PiDeltaExpr::new().pi(1, 2, 0).expand(3).unwrap().is_empty());
        assert!(PiDeltaExpr::new().pi(1, 3, 1).expand(3).is_err());
        assert_eq!(
            PiDeltaExpr::new().sigma(2, -2).expand(3).unwrap(),
            w("B3: -2 -2")
        );
    }
}
