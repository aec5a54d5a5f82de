//! Twisted torus knot braids and their positive forms.
//!
//! `K(p,q,r,n)` is the closure of `(σ_{q-1} ⋯ σ_1)^p (σ_{r-1} ⋯ σ_1)^{nr}` in
//! `B_q`. For `n < 0` the reversed word `(Π_{r-1})^{-|n|r} (Π_{q-1})^p` is
//! rewritten into a positive word, either directly from the closed form or
//! step by step with rules A, B and C.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{BraidError, Result};
use crate::garside::equal;
use crate::invariants::{alexander, component_count};
use crate::notation::pi_letters;
use crate::rewrite::{Rewriter, Rule};
use crate::word::{BraidWord, Letter};

/// Longest word any constructor here will build.
pub const MAX_LETTERS: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TTKParams {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    /// Signed number of full twists on the `r` strands.
    pub n: i64,
}

impl TTKParams {
    /// Checks `q >= 2` and `r <= p + q`.
    pub fn new(p: usize, q: usize, r: usize, n: i64) -> Result<Self> {
        if q < 2 {
            return Err(BraidError::param(format!("q must be at least 2, got {q}")));
        }
        if r > p + q {
            return Err(BraidError::param(format!(
                "r = {r} exceeds p + q = {}",
                p + q
            )));
        }
        Ok(TTKParams { p, q, r, n })
    }

    /// The braid form needs `r < p` and `r < q`.
    pub fn check_braid_form(&self) -> Result<()> {
        if self.r >= self.q || self.r >= self.p {
            return Err(BraidError::Unsupported(format!(
                "{self}: the braid form needs r < p and r < q"
            )));
        }
        Ok(())
    }

    pub fn twist_count(&self) -> usize {
        self.n.unsigned_abs() as usize
    }

    /// `n < 0`, `r < q` and `|n| q < p`.
    pub fn in_theorem_scope(&self) -> bool {
        self.n < 0 && self.r < self.q && self.twist_count() * self.q < self.p
    }

    pub fn raw_length(&self) -> usize {
        self.p * (self.q - 1) + self.twist_count() * self.r * self.r.saturating_sub(1)
    }
}

impl fmt::Display for TTKParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K({},{},{},{})", self.p, self.q, self.r, self.n)
    }
}

fn check_capacity(len: usize) -> Result<()> {
    if len > MAX_LETTERS {
        return Err(BraidError::Capacity(format!(
            "word of {len} letters exceeds the limit of {MAX_LETTERS}"
        )));
    }
    Ok(())
}

/// `(σ_{q-1} ⋯ σ_1)^p (σ_{r-1} ⋯ σ_1)^{nr}` in `B_q`.
pub fn ttk_braid(params: &TTKParams) -> Result<BraidWord> {
    params.check_braid_form()?;
    check_capacity(params.raw_length())?;
    let TTKParams { p, q, r, n } = *params;
    let mut letters = Vec::with_capacity(params.raw_length());
    for _ in 0..p {
        letters.extend(pi_letters(1, q - 1).rev());
    }
    if r >= 2 {
        let twist: Vec<Letter> = pi_letters(1, r - 1).rev().collect();
        let inverse: Vec<Letter> = twist.iter().rev().map(|l| l.inverse()).collect();
        let block = if n >= 0 { &twist } else { &inverse };
        for _ in 0..params.twist_count() * r {
            letters.extend_from_slice(block);
        }
    }
    BraidWord::new(q, letters)
}

/// `rev` of the raw braid: `(Π_{r-1})^{-nr} (Π_{q-1})^p`.
pub fn reversed_raw(params: &TTKParams) -> Result<BraidWord> {
    Ok(ttk_braid(params)?.rev())
}

/// True iff no generator index occurs with both signs.
pub fn is_homogeneous(w: &BraidWord) -> bool {
    let mut seen = vec![0i8; w.strands()];
    for l in w.letters() {
        let slot = &mut seen[l.index()];
        if *slot == 0 {
            *slot = l.sign();
        } else if *slot != l.sign() {
            return false;
        }
    }
    true
}

/// `Π^r_{q-1} Π^{r-1}_{q-2} ⋯ Π_{q-r}`: `r` blocks of `q - r` letters.
fn twist_prefix(q: usize, r: usize) -> impl Iterator<Item = Letter> {
    (0..r).flat_map(move |j| pi_letters(r - j, q - 1 - j))
}

/// [`twist_prefix`] as a word in `B_q`; needs `r < q`.
pub(crate) fn twist_prefix_word(q: usize, r: usize) -> BraidWord {
    debug_assert!(r < q);
    BraidWord::from_parts_unchecked(q, twist_prefix(q, r).collect())
}

fn check_positivization(p: usize, q: usize, r: usize) -> Result<()> {
    if q < 2 || r < 1 || r >= q || r >= p {
        return Err(BraidError::Unsupported(format!(
            "positive form needs 1 <= r < q and r < p (got p={p}, q={q}, r={r})"
        )));
    }
    Ok(())
}

/// Closed-form positive word equal to `(Π_{r-1})^{-r} (Π_{q-1})^p`:
/// `Π^r_{q-1} Π^{r-1}_{q-2} ⋯ Π_{q-r} (Π_{q-1})^{p-r}`.
pub fn positive_word_n1(p: usize, q: usize, r: usize) -> Result<BraidWord> {
    check_positivization(p, q, r)?;
    check_capacity(p * (q - 1))?;
    let letters = twist_prefix(q, r)
        .chain((0..p - r).flat_map(|_| pi_letters(1, q - 1)))
        .collect();
    BraidWord::new(q, letters)
}

/// Closed-form positive word equal to `(Π_{r-1})^{-nr} (Π_{q-1})^p` for
/// `n >= 1` and `nq < p`:
/// `(Π^r_{q-1} ⋯ Π_{q-r} (Π_{q-1})^{q-r})^n (Π_{q-1})^{p-nq}`.
pub fn positive_word_general(p: usize, q: usize, r: usize, n: usize) -> Result<BraidWord> {
    check_positivization(p, q, r)?;
    if n < 1 || n.saturating_mul(q) >= p {
        return Err(BraidError::Unsupported(format!(
            "positive form needs n >= 1 and nq < p (got n={n}, q={q}, p={p})"
        )));
    }
    check_capacity(p * (q - 1))?;
    let mut letters = Vec::new();
    for _ in 0..n {
        letters.extend(twist_prefix(q, r));
        for _ in 0..q - r {
            letters.extend(pi_letters(1, q - 1));
        }
    }
    for _ in 0..p - n * q {
        letters.extend(pi_letters(1, q - 1));
    }
    BraidWord::new(q, letters)
}

/// Consumes the `r` copies of `(Π_{r-1})^{-1}` starting at `base`, which
/// are followed by at least `r + 1` copies of `Π_{q-1}`.
fn replay_single(rw: &mut Rewriter, q: usize, r: usize, base: usize) -> Result<()> {
    let b = q - r;
    for l in 0..r {
        let a = base + (r - l - 1) * (r - 1);
        // letter j of the copy is σ_{r-1-j}⁻¹; it commutes past blocks 0..j
        for j in (0..r - 1).rev() {
            rw.shift(a + j, (j.min(l) * b) as isize)?;
        }
        for k in 0..r - 1 - l {
            rw.cancel(a + l * b + r - 2 - k)?;
        }
        if l >= 1 {
            rw.apply(Rule::A { l: r - l, s: q - l }, a + (l - 1) * (1 + b))?;
            for k in (0..l - 1).rev() {
                let tail = a + (k + 1) + (l + 1) * b;
                rw.shift(tail, -(((l - 1 - k) * b) as isize))?;
                rw.apply(
                    Rule::A {
                        l: r - 1 - k,
                        s: q - 1 - k,
                    },
                    a + k * (1 + b),
                )?;
            }
        }
    }
    Ok(())
}

/// Rewrites `(Π_{r-1})^{-nr} (Π_{q-1})^p`, starting at `off`, into the
/// closed form of [`positive_word_general`].
fn replay_levels(rw: &mut Rewriter, q: usize, r: usize, n: usize, off: usize) -> Result<()> {
    let b = q - r;
    replay_single(rw, q, r, off + (n - 1) * r * (r - 1))?;
    if n == 1 {
        return Ok(());
    }
    let copies = (n - 1) * r;
    for c in (0..copies).rev() {
        let a = off + c * (r - 1);
        for j in (0..r - 1).rev() {
            rw.shift(a + j, (j * b) as isize)?;
        }
        for k in (0..r - 1).rev() {
            rw.apply(
                Rule::B {
                    l: r - 1 - k,
                    s: q - 1 - k,
                },
                a + k * (1 + b),
            )?;
        }
        for k in (0..r - 1).rev() {
            rw.shift(a + (k + 2) * b + k, ((r - 2 - k) * b) as isize)?;
        }
    }
    // each σ_t⁻¹ left behind crosses q - r copies of Π_{q-1}, dropping to t - q + r
    for c in (0..copies).rev() {
        let x = off + r * b + c * (r - 1);
        for i in 0..b {
            for j in 0..r - 1 {
                let pos = x + i * (q - 1) + (r - 2) - j;
                let t = rw.letters()[pos].index();
                rw.apply(
                    Rule::C {
                        t,
                        l: 1,
                        s: q - 1,
                        inverse: true,
                    },
                    pos,
                )?;
            }
        }
    }
    replay_levels(rw, q, r, n - 1, off + r * b + b * (q - 1))
}

/// Positivises `(Π_{r-1})^{-nr} (Π_{q-1})^p` using only far commutations,
/// free cancellations and rules A, B, C. For `n = 1` this needs `r < p`,
/// for `n >= 2` it needs `nq < p`. The result is checked letter for letter
/// against the closed form.
pub fn replay_positivization(
    p: usize,
    q: usize,
    r: usize,
    n: usize,
    verify_steps: bool,
) -> Result<(BraidWord, Vec<String>)> {
    let expected = if n == 1 {
        positive_word_n1(p, q, r)?
    } else {
        positive_word_general(p, q, r, n)?
    };
    let start = reversed_raw(&TTKParams::new(p, q, r, -(n as i64))?)?;
    let mut rw = if verify_steps {
        Rewriter::verifying(&start)
    } else {
        Rewriter::new(&start)
    };
    replay_levels(&mut rw, q, r, n, 0)?;
    let (word, transcript) = rw.into_parts();
    if word != expected {
        return Err(BraidError::Internal(format!(
            "replay ended at {word}, expected {expected}"
        )));
    }
    Ok((word, transcript))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FiberStatus {
    PositiveWordProof,
    HomogeneousProof,
    NotDeterminedByWord,
    NecessaryConditionFails,
}

impl fmt::Display for FiberStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberednessCertificate {
    pub params: TTKParams,
    pub status: FiberStatus,
    /// Present for the two proof statuses.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<BraidWord>,
    pub transcript: Vec<String>,
    /// Named assertions; every one must be true.
    pub checks: BTreeMap<String, bool>,
    /// Normalised Alexander polynomial, when it was computed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alexander: Option<String>,
}

impl FiberednessCertificate {
    pub fn all_checks_pass(&self) -> bool {
        self.checks.values().all(|&ok| ok)
    }

    pub fn failed_checks(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|(_, &ok)| !ok)
            .map(|(name, _)| name.as_str())
            .collect()
    }
}

pub fn fiberedness_certificate(params: &TTKParams) -> Result<FiberednessCertificate> {
    fiberedness_certificate_with(params, false)
}

/// As [`fiberedness_certificate`]; `verify_steps` re-checks equality after
/// every rewriting step of the replay.
pub fn fiberedness_certificate_with(
    params: &TTKParams,
    verify_steps: bool,
) -> Result<FiberednessCertificate> {
    let raw = ttk_braid(params)?;
    let mut cert = FiberednessCertificate {
        params: *params,
        status: FiberStatus::NotDeterminedByWord,
        witness: None,
        transcript: Vec::new(),
        checks: BTreeMap::new(),
        alexander: None,
    };

    if params.in_theorem_scope() && params.r >= 1 {
        let (p, q, r, n) = (params.p, params.q, params.r, params.twist_count());
        let witness = positive_word_general(p, q, r, n)?;
        let rev_raw = raw.rev();
        cert.transcript.push(format!(
            "rev: {params} braid reversed to (Pi_{})^-{} (Pi_{})^{p}",
            r.saturating_sub(1),
            n * r,
            q - 1
        ));
        let replay = replay_positivization(p, q, r, n, verify_steps);
        let replay_ok = match replay {
            Ok((word, steps)) => {
                cert.transcript.extend(steps);
                word == witness
            }
            Err(e) => {
                cert.transcript.push(format!("replay failed: {e}"));
                false
            }
        };
        let expected_sum = (p * (q - 1)) as i64 - (n * r * (r - 1)) as i64;
        let checks = [
            ("witness_is_positive", witness.is_positive()),
            ("witness_is_homogeneous", is_homogeneous(&witness)),
            ("witness_equals_rev_raw", equal(&witness, &rev_raw)?),
            ("rev_witness_equals_raw", equal(&witness.rev(), &raw)?),
            (
                "exponent_sum_matches",
                witness.exponent_sum() == expected_sum,
            ),
            (
                "permutation_matches",
                witness.underlying_permutation() == rev_raw.underlying_permutation(),
            ),
            ("replay_matches_closed_form", replay_ok),
        ];
        cert.checks
            .extend(checks.into_iter().map(|(k, v)| (k.to_string(), v)));
        cert.status = FiberStatus::PositiveWordProof;
        cert.witness = Some(witness);
        return Ok(cert);
    }

    if params.n >= 0 || is_homogeneous(&raw) {
        cert.transcript
            .push(format!("raw braid of {params} is homogeneous"));
        cert.checks
            .insert("witness_is_homogeneous".into(), is_homogeneous(&raw));
        cert.status = FiberStatus::HomogeneousProof;
        cert.witness = Some(raw);
        return Ok(cert);
    }

    let components = component_count(&raw);
    if components != 1 {
        cert.transcript.push(format!(
            "closure has {components} components; Alexander test not applicable"
        ));
        return Ok(cert);
    }
    let alex = alexander(&raw)?;
    cert.alexander = Some(alex.poly.to_string());
    if alex.monic {
        cert.transcript
            .push("Alexander polynomial is monic; no conclusion".to_string());
    } else {
        cert.transcript.push(format!(
            "Alexander polynomial has leading coefficient {}; not fibered",
            alex.poly.leading_coeff()
        ));
        cert.status = FiberStatus::NecessaryConditionFails;
    }
    Ok(cert)
}
