//! Exact braid-word computation in the braid groups `B_n`.
//!
//! Words ([`word`]) and block notation ([`notation`]) are plain syntax.
//! Equality is decided by Garside normal forms ([`garside`]), with the
//! Lawrence–Krammer representation ([`lk`]) as an independent check. On top
//! sit twisted torus knot braids and their positivisation ([`ttk`],
//! [`rewrite`]), closure invariants ([`invariants`]) and conjugacy
//! certificates ([`conjugacy`]).

pub mod cli;
pub mod conjugacy;
pub mod error;
pub mod garside;
pub mod invariants;
pub mod laurent;
pub mod lk;
pub mod matrix;
pub mod notation;
pub mod perm;
pub mod rewrite;
pub mod ttk;
pub mod word;

pub use conjugacy::{gamma_word, verify_conjugacy, ConjugacyCertificate, FamilyParams};
pub use error::{BraidError, Result};
pub use garside::{equal, normal_form, NormalForm, PermutationBraid};
pub use invariants::{alexander, component_count, surface_slope, AlexanderResult};
pub use notation::{delta_word, pi_word, PiDeltaExpr};
pub use ttk::{fiberedness_certificate, ttk_braid, FiberStatus, FiberednessCertificate, TTKParams};
pub use word::{BraidWord, Letter};
