//! Local rewriting of braid words with a transcript.
//!
//! Besides the elementary moves (free cancellation, far commutation, the
//! braid relation) there are three block rules, valid in any `B_n` with
//! `s <= n - 1`:
//!
//! ```text
//! A(l,s), l < s:          σ_l⁻¹ Π_s^{l+1} Π_s^l      ⇒ Π_s^{l+1} Π_{s-1}^l
//! B(l,s), l < s:          σ_l⁻¹ Π_s^{l+1} Π_{s-1}^l  ⇒ Π_s^{l+1} Π_{s-1}^l σ_s⁻¹
//! C(t,l,s), l < t <= s:   σ_t^{±1} Π_s^l             ⇒ Π_s^l σ_{t-1}^{±1}
//! ```
//!
//! A [`Rewriter`] in verifying mode re-checks `equal()` against its starting
//! word after every step.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{BraidError, Result};
use crate::garside::equal;
use crate::notation::pi_letters;
use crate::word::{BraidWord, Letter};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rule {
    A {
        l: usize,
        s: usize,
    },
    B {
        l: usize,
        s: usize,
    },
    C {
        t: usize,
        l: usize,
        s: usize,
        inverse: bool,
    },
}

impl Rule {
    /// Checks the index preconditions and that the rule fits in `B_strands`.
    pub fn check(&self, strands: usize) -> Result<()> {
        let (ok, s) = match *self {
            Rule::A { l, s } | Rule::B { l, s } => (1 <= l && l < s, s),
            Rule::C { t, l, s, .. } => (1 <= l && l < t && t <= s, s),
        };
        if !ok {
            return Err(BraidError::param(format!(
                "rule {self} violates its index bounds"
            )));
        }
        if s + 1 > strands {
            return Err(BraidError::param(format!(
                "rule {self} does not fit in B_{strands}"
            )));
        }
        Ok(())
    }

    pub fn lhs(&self) -> Vec<Letter> {
        match *self {
            Rule::A { l, s } => std::iter::once(Letter::neg(l))
                .chain(pi_letters(l + 1, s))
                .chain(pi_letters(l, s))
                .collect(),
            Rule::B { l, s } => std::iter::once(Letter::neg(l))
                .chain(pi_letters(l + 1, s))
                .chain(pi_letters(l, s - 1))
                .collect(),
            Rule::C { t, l, s, inverse } => {
                let head = if inverse {
                    Letter::neg(t)
                } else {
                    Letter::pos(t)
                };
                std::iter::once(head).chain(pi_letters(l, s)).collect()
            }
        }
    }

    pub fn rhs(&self) -> Vec<Letter> {
        match *self {
            Rule::A { l, s } => pi_letters(l + 1, s).chain(pi_letters(l, s - 1)).collect(),
            Rule::B { l, s } => pi_letters(l + 1, s)
                .chain(pi_letters(l, s - 1))
                .chain(std::iter::once(Letter::neg(s)))
                .collect(),
            Rule::C { t, l, s, inverse } => {
                let tail = if inverse {
                    Letter::neg(t - 1)
                } else {
                    Letter::pos(t - 1)
                };
                pi_letters(l, s).chain(std::iter::once(tail)).collect()
            }
        }
    }

    /// Both sides as words in `B_{s+1}`, the smallest group containing them.
    pub fn instantiate(&self) -> Result<(BraidWord, BraidWord)> {
        let strands = self.max_index() + 1;
        self.check(strands)?;
        Ok((
            BraidWord::new(strands, self.lhs())?,
            BraidWord::new(strands, self.rhs())?,
        ))
    }

    fn max_index(&self) -> usize {
        match *self {
            Rule::A { s, .. } | Rule::B { s, .. } | Rule::C { s, .. } => s,
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Rule::A { l, s } => write!(f, "A(l={l},s={s})"),
            Rule::B { l, s } => write!(f, "B(l={l},s={s})"),
            Rule::C {
                t,
                l,
                s,
                inverse: false,
            } => write!(f, "C(t={t},l={l},s={s})"),
            Rule::C {
                t,
                l,
                s,
                inverse: true,
            } => write!(f, "Cinv(t={t},l={l},s={s})"),
        }
    }
}

/// Every instance of rules A and B with `1 <= l < s <= smax` and of rule C
/// (both signs) with `1 <= l < t <= s <= smax`.
pub fn all_rules(smax: usize) -> Vec<Rule> {
    let mut rules = Vec::new();
    for s in 2..=smax {
        for l in 1..s {
            rules.push(Rule::A { l, s });
            rules.push(Rule::B { l, s });
        }
    }
    for s in 2..=smax {
        for l in 1..s {
            for t in l + 1..=s {
                for inverse in [false, true] {
                    rules.push(Rule::C { t, l, s, inverse });
                }
            }
        }
    }
    rules
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub smax: usize,
    pub checked: usize,
    /// Rules whose two sides are not equal; empty on success.
    pub failures: Vec<String>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `equal(lhs, rhs)` for every rule in [`all_rules`].
pub fn lemma_suite(smax: usize) -> Result<LemmaReport> {
    let rules = all_rules(smax);
    let mut failures = Vec::new();
    for rule in &rules {
        let (lhs, rhs) = rule.instantiate()?;
        if !equal(&lhs, &rhs)? {
            failures.push(rule.to_string());
        }
    }
    Ok(LemmaReport {
        smax,
        checked: rules.len(),
        failures,
    })
}

fn letter_text(l: Letter) -> String {
    l.to_signed().to_string()
}

/// A mutable word plus the list of steps applied to it.
#[derive(Debug, Clone)]
pub struct Rewriter {
    strands: usize,
    letters: Vec<Letter>,
    transcript: Vec<String>,
    /// Starting word, kept only in verifying mode.
    original: Option<BraidWord>,
}

impl Rewriter {
    pub fn new(w: &BraidWord) -> Self {
        Rewriter {
            strands: w.strands(),
            letters: w.letters().to_vec(),
            transcript: Vec::new(),
            original: None,
        }
    }

    pub fn verifying(w: &BraidWord) -> Self {
        Rewriter {
            original: Some(w.clone()),
            ..Self::new(w)
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn word(&self) -> BraidWord {
        BraidWord::from_parts_unchecked(self.strands, self.letters.clone())
    }

    pub fn transcript(&self) -> &[String] {
        &self.transcript
    }

    pub fn into_parts(self) -> (BraidWord, Vec<String>) {
        (
            BraidWord::from_parts_unchecked(self.strands, self.letters),
            self.transcript,
        )
    }

    fn window(&self, pos: usize, len: usize, what: &str) -> Result<&[Letter]> {
        self.letters.get(pos..pos + len).ok_or_else(|| {
            BraidError::Rewrite(format!(
                "{what} at position {pos} needs {len} letters, word has {}",
                self.letters.len()
            ))
        })
    }

    fn splice(&mut self, pos: usize, len: usize, with: Vec<Letter>, step: String) -> Result<()> {
        self.letters.splice(pos..pos + len, with);
        if let Some(original) = &self.original {
            if !equal(original, &self.word())? {
                return Err(BraidError::Internal(format!(
                    "step {step} changed the braid"
                )));
            }
        }
        self.transcript.push(step);
        Ok(())
    }

    pub fn apply(&mut self, rule: Rule, pos: usize) -> Result<()> {
        rule.check(self.strands)?;
        let lhs = rule.lhs();
        let found = self.window(pos, lhs.len(), &rule.to_string())?;
        if found != lhs.as_slice() {
            return Err(BraidError::Rewrite(format!(
                "rule {rule} does not match at position {pos}"
            )));
        }
        self.splice(pos, lhs.len(), rule.rhs(), format!("{rule}@{pos}"))
    }

    /// Removes the inverse pair at `pos, pos+1`.
    pub fn cancel(&mut self, pos: usize) -> Result<()> {
        let w = self.window(pos, 2, "cancel")?;
        let (a, b) = (w[0], w[1]);
        if a.inverse() != b {
            return Err(BraidError::Rewrite(format!(
                "no inverse pair at position {pos}"
            )));
        }
        let step = format!("cancel({},{})@{pos}", letter_text(a), letter_text(b));
        self.splice(pos, 2, Vec::new(), step)
    }

    /// Swaps the far-apart letters at `pos, pos+1`.
    pub fn commute(&mut self, pos: usize) -> Result<()> {
        let w = self.window(pos, 2, "commute")?;
        let (a, b) = (w[0], w[1]);
        if !a.commutes_with(b) || a.index() == b.index() {
            return Err(BraidError::Rewrite(format!(
                "letters {} and {} at position {pos} do not commute",
                letter_text(a),
                letter_text(b)
            )));
        }
        let step = format!("commute({},{})@{pos}", letter_text(a), letter_text(b));
        self.splice(pos, 2, vec![b, a], step)
    }

    /// `x y x ⇒ y x y` for adjacent indices and a common sign.
    pub fn braid_relation(&mut self, pos: usize) -> Result<()> {
        let w = self.window(pos, 3, "braid relation")?;
        let (a, b, c) = (w[0], w[1], w[2]);
        if a != c || a.sign() != b.sign() || a.index().abs_diff(b.index()) != 1 {
            return Err(BraidError::Rewrite(format!(
                "no braid relation pattern at position {pos}"
            )));
        }
        let step = format!(
            "braid({},{},{})@{pos}",
            letter_text(a),
            letter_text(b),
            letter_text(c)
        );
        self.splice(pos, 3, vec![b, a, b], step)
    }

    /// Inserts `x x⁻¹` before position `pos`.
    pub fn insert_inverse_pair(&mut self, pos: usize, x: Letter) -> Result<()> {
        if pos > self.letters.len() || x.index() + 1 > self.strands {
            return Err(BraidError::Rewrite(format!(
                "cannot insert {} at position {pos}",
                letter_text(x)
            )));
        }
        let step = format!(
            "insert({},{})@{pos}",
            letter_text(x),
            letter_text(x.inverse())
        );
        self.splice(pos, 0, vec![x, x.inverse()], step)
    }

    /// Moves the letter at `pos` by `delta` places using far commutations
    /// only; returns its new position.
    pub fn shift(&mut self, pos: usize, delta: isize) -> Result<usize> {
        let mut at = pos;
        for _ in 0..delta.unsigned_abs() {
            if delta > 0 {
                self.commute(at)?;
                at += 1;
            } else {
                let left = at.checked_sub(1).ok_or_else(|| {
                    BraidError::Rewrite(format!("cannot shift letter at {pos} by {delta}"))
                })?;
                self.commute(left)?;
                at = left;
            }
        }
        Ok(at)
    }

    /// Adds a free-form line (bookkeeping, not a move).
    pub fn note(&mut self, line: impl Into<String>) {
        self.transcript.push(line.into());
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    fn sides(rule: Rule) -> (String, String) {
        let (a, b) = rule.instantiate().unwrap();
        (a.to_string(), b.to_string())
    }

    #[test]
    fn rule_a_instances() {
        assert_eq!(
            sides(Rule::A { l: 1, s: 2 }),
            ("B3: -1 2 1 2".into(), "B3: 2 1".into())
        );
        assert_eq!(
            sides(Rule::A { l: 2, s: 3 }),
            ("B4: -2 3 2 3".into(), "B4: 3 2".into())
        );
        assert_eq!(
            sides(Rule::A { l: 1, s: 3 }),
            ("B4: -1 2 3 1 2 3".into(), "B4: 2 3 1 2".into())
        );
    }

    #[test]
    fn rule_b_instances() {
        assert_eq!(
            sides(Rule::B { l: 1, s: 2 }),
            ("B3: -1 2 1".into(), "B3: 2 1 -2".into())
        );
        assert_eq!(
            sides(Rule::B { l: 2, s: 3 }),
            ("B4: -2 3 2".into(), "B4: 3 2 -3".into())
        );
        assert_eq!(
            sides(Rule::B { l: 1, s: 3 }),
            ("B4: -1 2 3 1 2".into(), "B4: 2 3 1 2 -3".into())
        );
    }

    #[test]
    fn rule_c_instances() {
        let c = |t, l, s, inverse| sides(Rule::C { t, l, s, inverse });
        assert_eq!(c(2, 1, 2, false), ("B3: 2 1 2".into(), "B3: 1 2 1".into()));
        assert_eq!(
            c(3, 1, 3, false),
            ("B4: 3 1 2 3".into(), "B4: 1 2 3 2".into())
        );
        assert_eq!(c(2, 1, 2, true), ("B3: -2 1 2".into(), "B3: 1 2 -1".into()));
    }

    #[test]
    fn rule_bounds() {
        assert!(Rule::A { l: 2, s: 2 }.check(5).is_err());
        assert!(Rule::C {
            t: 1,
            l: 1,
            s: 3,
            inverse: false
        }
        .check(5)
        .is_err());
        assert!(Rule::C {
            t: 4,
            l: 1,
            s: 3,
            inverse: false
        }
        .check(5)
        .is_err());
        assert!(Rule::B { l: 1, s: 4 }.check(4).is_err());
        assert!(Rule::B { l: 1, s: 4 }.check(5).is_ok());
    }

    #[test]
    fn lemma_suite_small() {
        let report = lemma_suite(4).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
        // A and B: 6 each; C: 1 + 3 + 6 triples (l < t <= s), both signs
        assert_eq!(report.checked, 12 + 2 * (1 + 3 + 6));
    }

    #[test]
    fn rewriter_moves_and_transcript() {
        let start = w("B4: 1 -1 3 1 2 1");
        let mut rw = Rewriter::verifying(&start);
        rw.cancel(0).unwrap();
        rw.commute(0).unwrap();
        rw.commute(0).unwrap();
        rw.braid_relation(1).unwrap();
        rw.insert_inverse_pair(0, Letter::pos(2)).unwrap();
        assert_eq!(rw.word().to_string(), "B4: 2 -2 3 2 1 2");
        assert_eq!(
            rw.transcript(),
            [
                "cancel(1,-1)@0",
                "commute(3,1)@0",
                "commute(1,3)@0",
                "braid(1,2,1)@1",
                "insert(2,-2)@0"
            ]
        );
        assert!(rw.commute(0).is_err());
        assert!(rw.cancel(1).is_err());
        assert!(rw.braid_relation(0).is_err());
    }

    #[test]
    fn apply_checks_pattern() {
        let mut rw = Rewriter::verifying(&w("B3: 1 -1 2 1 2 2"));
        assert!(matches!(
            rw.apply(Rule::A { l: 1, s: 2 }, 0),
            Err(BraidError::Rewrite(_))
        ));
        rw.apply(Rule::A { l: 1, s: 2 }, 1).unwrap();
        assert_eq!(rw.word().to_string(), "B3: 1 2 1 2");
        assert_eq!(rw.transcript(), ["A(l=1,s=2)@1"]);
        assert!(rw.apply(Rule::A { l: 1, s: 2 }, 3).is_err());
    }

    #[test]
    fn shift_uses_far_commutations() {
        let mut rw = Rewriter::new(&w("B6: 1 3 4 5"));
        assert_eq!(rw.shift(0, 3).unwrap(), 3);
        assert_eq!(rw.word().to_string(), "B6: 3 4 5 1");
        assert_eq!(rw.shift(3, -3).unwrap(), 0);
        assert_eq!(rw.transcript().len(), 6);
        let mut rw = Rewriter::new(&w("B4: 1 2"));
        assert!(rw.shift(0, 1).is_err());
    }
}
