//! Conjugacy certificates for the pairs
//! `K_1 = K(kq+m, q, m, -1)` and `K_2 = K(kq+q-m, q, q-m, -1)`.
//!
//! With `γ = rev(Δ_{m-1}) rev(Δ^{m+1}_{q-1})` the braids satisfy
//! `β_1 γ = γ β_2` in `B_q`, so the closures are the same knot.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{BraidError, Result};
use crate::garside::{equal, normal_form};
use crate::invariants::{alexander, component_count, gcd, surface_slope};
use crate::notation::delta_or_empty;
use crate::ttk::{ttk_braid, twist_prefix_word, TTKParams};
use crate::word::BraidWord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FamilyParams {
    pub k: usize,
    pub q: usize,
    pub m: usize,
}

impl FamilyParams {
    /// Checks `k >= 2`, `q >= 2`, `1 <= m <= q - 1` and `gcd(q, m) = 1`.
    pub fn new(k: usize, q: usize, m: usize) -> Result<Self> {
        if k < 2 || q < 2 || m < 1 || m >= q {
            return Err(BraidError::param(format!(
                "family needs k >= 2, q >= 2, 1 <= m <= q-1 (got k={k}, q={q}, m={m})"
            )));
        }
        if gcd(q as i64, m as i64) != 1 {
            return Err(BraidError::param(format!(
                "gcd(q, m) = gcd({q}, {m}) must be 1"
            )));
        }
        Ok(FamilyParams { k, q, m })
    }

    pub fn knot1(&self) -> TTKParams {
        let FamilyParams { k, q, m } = *self;
        TTKParams {
            p: k * q + m,
            q,
            r: m,
            n: -1,
        }
    }

    pub fn knot2(&self) -> TTKParams {
        let FamilyParams { k, q, m } = *self;
        TTKParams {
            p: k * q + q - m,
            q,
            r: q - m,
            n: -1,
        }
    }

    pub fn slope(&self) -> i64 {
        surface_slope(self.k as i64, self.q as i64, self.m as i64)
            .expect("validated family parameters")
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(k={}, q={}, m={})", self.k, self.q, self.m)
    }
}

/// `rev(Δ_{m-1}) rev(Δ^{m+1}_{q-1})` in `B_q`; a block with lower index
/// above its upper index is the identity.
pub fn gamma_word(q: usize, m: usize) -> Result<BraidWord> {
    if q < 2 || m < 1 || m >= q {
        return Err(BraidError::param(format!(
            "gamma needs q >= 2 and 1 <= m <= q-1 (got q={q}, m={m})"
        )));
    }
    let first = delta_or_empty(1, m - 1, q)?.rev();
    let second = delta_or_empty(m + 1, q - 1, q)?.rev();
    first.concat(&second)
}

/// Outcome of the two half-twist identities behind the conjugator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaIdentity {
    /// `Δ^{m+1}_{q-1} Δ_{m-1} P_1 = Δ_{q-1}`.
    pub first: bool,
    /// `P_2 Δ^{m+1}_{q-1} Δ_{m-1} = Δ_{q-1}`.
    pub second: bool,
}

impl DeltaIdentity {
    pub fn holds(&self) -> bool {
        self.first && self.second
    }
}

/// Checks both identities with `P_1 = Π^m_{q-1} ⋯ Π_{q-m}` and
/// `P_2 = Π^{q-m}_{q-1} ⋯ Π_m`.
pub fn verify_delta_identity(fam: &FamilyParams) -> Result<DeltaIdentity> {
    let FamilyParams { q, m, .. } = *fam;
    let delta = delta_or_empty(1, q - 1, q)?;
    let core = delta_or_empty(m + 1, q - 1, q)?.concat(&delta_or_empty(1, m - 1, q)?)?;
    let p1 = twist_prefix_word(q, m);
    let p2 = twist_prefix_word(q, q - m);
    Ok(DeltaIdentity {
        first: equal(&core.concat(&p1)?, &delta)?,
        second: equal(&p2.concat(&core)?, &delta)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CertStatus {
    #[serde(rename = "VALID")]
    Valid,
    #[serde(rename = "FAILED")]
    Failed,
}

impl fmt::Display for CertStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CertStatus::Valid => "VALID",
            CertStatus::Failed => "FAILED",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugacyCertificate {
    pub family: FamilyParams,
    pub status: CertStatus,
    pub beta1: BraidWord,
    pub beta2: BraidWord,
    pub gamma: BraidWord,
    /// Normal form of `β_1 γ`.
    pub nf_left: String,
    /// Normal form of `γ β_2`.
    pub nf_right: String,
    pub slope: i64,
    /// `[k, m, q - m]`; recorded, not checked.
    pub seifert_data: [usize; 3],
    /// Normalised Alexander polynomial of `β_1`.
    pub alexander: String,
    pub transcript: Vec<String>,
    pub checks: BTreeMap<String, bool>,
    /// Names of the false checks; empty iff `status` is `VALID`.
    pub failed: Vec<String>,
}

impl ConjugacyCertificate {
    pub fn is_valid(&self) -> bool {
        self.status == CertStatus::Valid
    }
}

pub fn verify_conjugacy(fam: &FamilyParams) -> Result<ConjugacyCertificate> {
    let FamilyParams { k, q, m } = *fam;
    let (knot1, knot2) = (fam.knot1(), fam.knot2());
    let beta1 = ttk_braid(&knot1)?;
    let beta2 = ttk_braid(&knot2)?;
    let gamma = gamma_word(q, m)?;
    let left = beta1.concat(&gamma)?;
    let right = gamma.concat(&beta2)?;
    let nf_left = normal_form(&left);
    let nf_right = normal_form(&right);
    let slope = fam.slope();
    let mirrored = (k * q * q + (q - m) * q) as i64 - ((q - m) * (q - m)) as i64;

    let transcript = vec![
        format!("beta1 = braid of {knot1}"),
        format!("beta2 = braid of {knot2}"),
        format!(
            "gamma = rev(Delta_{}) rev(Delta^{}_{})",
            m - 1,
            m + 1,
            q - 1
        ),
        "compare NF(beta1 gamma) with NF(gamma beta2)".to_string(),
        format!("slope = {k}*{q}^2 + {m}*{q} - {m}^2 = {slope}"),
    ];

    let mut checks = BTreeMap::new();
    checks.insert("conjugacy".to_string(), nf_left == nf_right);
    let knot_ok = component_count(&beta1) == 1 && component_count(&beta2) == 1;
    checks.insert("beta1_is_knot".to_string(), component_count(&beta1) == 1);
    checks.insert("beta2_is_knot".to_string(), component_count(&beta2) == 1);
    checks.insert(
        "exponent_sums_equal".to_string(),
        beta1.exponent_sum() == beta2.exponent_sum() && left.exponent_sum() == right.exponent_sum(),
    );
    let alex1 = if knot_ok {
        Some(alexander(&beta1)?)
    } else {
        None
    };
    let alex2 = if knot_ok {
        Some(alexander(&beta2)?)
    } else {
        None
    };
    checks.insert(
        "alexander_equal".to_string(),
        knot_ok && alex1.as_ref().map(|a| &a.poly) == alex2.as_ref().map(|a| &a.poly),
    );
    checks.insert("slope_symmetric".to_string(), slope == mirrored);
    checks.insert(
        "delta_identity".to_string(),
        verify_delta_identity(fam)?.holds(),
    );

    let failed: Vec<String> = checks
        .iter()
        .filter(|(_, &ok)| !ok)
        .map(|(name, _)| name.clone())
        .collect();
    Ok(ConjugacyCertificate {
        family: *fam,
        status: if failed.is_empty() {
            CertStatus::Valid
        } else {
            CertStatus::Failed
        },
        beta1,
        beta2,
        gamma,
        nf_left: nf_left.to_string(),
        nf_right: nf_right.to_string(),
        slope,
        seifert_data: [k, m, q - m],
        alexander: alex1.map(|a| a.poly.to_string()).unwrap_or_default(),
        transcript,
        checks,
        failed,
    })
}

/// Admissible `(k, q, m)` with `2 <= k <= k_max`, `2 <= q <= q_max`, in
/// lexicographic order.
pub fn family_params(k_max: usize, q_max: usize) -> Vec<FamilyParams> {
    let mut out = Vec::new();
    for k in 2..=k_max {
        for q in 2..=q_max {
            for m in 1..q {
                if let Ok(fam) = FamilyParams::new(k, q, m) {
                    out.push(fam);
                }
            }
        }
    }
    out
}

/// Certificates for every tuple of `params`, computed in parallel and
/// returned in input order.
pub fn certify_all(params: &[FamilyParams]) -> Result<Vec<ConjugacyCertificate>> {
    params.par_iter().map(verify_conjugacy).collect()
}

/// Certificates for all of [`family_params`]`(k_max, q_max)`.
pub fn sweep_family(k_max: usize, q_max: usize) -> Result<Vec<ConjugacyCertificate>> {
    if k_max < 2 || q_max < 2 {
        return Err(BraidError::param(format!(
            "sweep bounds must be at least 2 (got k_max={k_max}, q_max={q_max})"
        )));
    }
    certify_all(&family_params(k_max, q_max))
}

pub const CSV_HEADER: &str = "k,q,m,slope,valid,len_beta1,len_beta2,alexander_equal";

/// One sweep CSV line (no trailing newline).
pub fn csv_row(cert: &ConjugacyCertificate) -> String {
    let FamilyParams { k, q, m } = cert.family;
    format!(
        "{k},{q},{m},{},{},{},{},{}",
        cert.slope,
        cert.is_valid(),
        cert.beta1.len(),
        cert.beta2.len(),
        cert.checks.get("alexander_equal").copied().unwrap_or(false)
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(k: usize, q: usize, m: usize) -> FamilyParams {
        FamilyParams::new(k, q, m).unwrap()
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma_word(3, 1).unwrap().to_string(), "B3: 2");
        assert_eq!(gamma_word(4, 2).unwrap().to_string(), "B4: 1 3");
        assert_eq!(gamma_word(2, 1).unwrap().to_string(), "B2:");
        assert_eq!(gamma_word(5, 2).unwrap().to_string(), "B5: 1 3 4 3");
        assert!(gamma_word(3, 3).is_err());
        assert!(gamma_word(3, 0).is_err());
    }

    #[test]
    fn family_validation() {
        assert!(FamilyParams::new(2, 4, 2).is_err());
        assert!(FamilyParams::new(1, 3, 1).is_err());
        assert!(FamilyParams::new(2, 3, 3).is_err());
        let f = fam(2, 5, 2);
        assert_eq!(
            f.knot1(),
            TTKParams {
                p: 12,
                q: 5,
                r: 2,
                n: -1
            }
        );
        assert_eq!(
            f.knot2(),
            TTKParams {
                p: 13,
                q: 5,
                r: 3,
                n: -1
            }
        );
    }

    #[test]
    fn delta_identities() {
        for (q, m) in [(3, 1), (5, 2), (4, 3), (2, 1), (7, 4)] {
            assert!(
                verify_delta_identity(&fam(2, q, m)).unwrap().holds(),
                "q={q} m={m}"
            );
        }
    }

    #[test]
    fn certificates_valid() {
        let c = verify_conjugacy(&fam(2, 3, 1)).unwrap();
        assert!(c.is_valid(), "{:?}", c.failed);
        assert_eq!(c.slope, 20);
        assert_eq!(c.nf_left, c.nf_right);
        assert_eq!(c.seifert_data, [2, 1, 2]);

        let c = verify_conjugacy(&fam(2, 5, 2)).unwrap();
        assert!(c.is_valid(), "{:?}", c.failed);
        assert_eq!(c.slope, 56);
        assert_eq!(csv_row(&c), "2,5,2,56,true,50,58,true");
    }

    #[test]
    fn wrong_conjugator_is_detected() {
        let f = fam(2, 5, 2);
        let c = verify_conjugacy(&f).unwrap();
        let bad = c.beta1.concat(&c.beta1).unwrap();
        assert_ne!(
            normal_form(&bad.concat(&c.gamma).unwrap()),
            normal_form(&c.gamma.concat(&c.beta2).unwrap())
        );
    }

    #[test]
    fn enumeration_order_and_counts() {
        let all = family_params(3, 6);
        // admissible (q, m) for q <= 6: 1 + 2 + 2 + 4 + 2
        assert_eq!(all.len(), 2 * 11);
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        assert_eq!(family_params(2, 2), vec![fam(2, 2, 1)]);
        assert!(sweep_family(1, 4).is_err());
    }

    #[test]
    fn json_round_trip() {
        let c = verify_conjugacy(&fam(3, 4, 3)).unwrap();
        let text = serde_json::to_string(&c).unwrap();
        assert!(text.contains("\"status\":\"VALID\""));
        let back: ConjugacyCertificate = serde_json::from_str(&text).unwrap();
        assert_eq!(back, c);
    }
}
