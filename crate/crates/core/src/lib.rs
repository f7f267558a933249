//! Non-k-th powers in finite groups.
//!
//! Groups are dense Cayley tables ([`FiniteGroup`]). On top of them this
//! crate computes the k-th power map ([`power`]), higher structure such as
//! Sylow subgroups and Frobenius kernels ([`structure`]), builds corpora of
//! small groups ([`families`]), and checks known inequalities about the
//! number of non-powers across a corpus ([`verifier`]).

pub mod arith;
pub mod bitset;
pub mod config;
pub mod error;
pub mod families;
pub mod group;
pub mod io;
pub mod power;
pub mod report;
pub mod structure;
pub mod verifier;

pub use error::{Error, Result};
pub use families::{builtin_corpus, make, FamilySpec};
pub use group::{ConjugacyClass, Elem, FiniteGroup, Limits, PermutationGenSet, Subgroup};
pub use power::{analyze_powers, non_power_profile, NonPowerProfile, PowerAnalysis};
pub use structure::{classify_new_jumps, ClassificationOutcome, FrobeniusStructure, JumpCase};
pub use verifier::{run_suite, CheckId, CheckResult, Status, VerificationReport};
