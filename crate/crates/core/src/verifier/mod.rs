//! One executable check per result about non-powers, and a parallel corpus
//! runner that aggregates them into a [`VerificationReport`].

mod checks;
mod context;
mod suite;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

pub use checks::*;
pub use context::GroupContext;
pub use suite::{run_suite, CorpusEntry, ReportConfig, Tally, VerificationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckId {
    Divisible,
    SubgroupMonotonicity,
    SylowRestricts,
    CenterBound,
    QuotientRatio,
    PgroupBound,
    Propagation,
    TheoremB,
    KToPrime,
    Newbound,
    LengthBounds,
    ExponentBound,
    OddType1,
    OddType2,
    NewJumps,
    FrobeniusSolution,
    ThetaSum,
}

/// How a check's parameter is quantified over a group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamKind {
    /// Every prime divisor of `|G|`.
    Prime,
    /// Every `k` in `1..=exponent(G)`.
    K,
    None,
}

impl CheckId {
    /// The fixed expansion of `--checks all`.
    pub const ALL: [CheckId; 17] = [
        CheckId::Divisible,
        CheckId::SubgroupMonotonicity,
        CheckId::SylowRestricts,
        CheckId::CenterBound,
        CheckId::QuotientRatio,
        CheckId::PgroupBound,
        CheckId::Propagation,
        CheckId::TheoremB,
        CheckId::KToPrime,
        CheckId::Newbound,
        CheckId::LengthBounds,
        CheckId::ExponentBound,
        CheckId::OddType1,
        CheckId::OddType2,
        CheckId::NewJumps,
        CheckId::FrobeniusSolution,
        CheckId::ThetaSum,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::Divisible => "divisible",
            CheckId::SubgroupMonotonicity => "subgroup_monotonicity",
            CheckId::SylowRestricts => "sylow_restricts",
            CheckId::CenterBound => "center_bound",
            CheckId::QuotientRatio => "quotient_ratio",
            CheckId::PgroupBound => "pgroup_bound",
            CheckId::Propagation => "propagation",
            CheckId::TheoremB => "theoremB",
            CheckId::KToPrime => "k_to_prime",
            CheckId::Newbound => "newbound",
            CheckId::LengthBounds => "length_bounds",
            CheckId::ExponentBound => "exponent_bound",
            CheckId::OddType1 => "odd_type1",
            CheckId::OddType2 => "odd_type2",
            CheckId::NewJumps => "new_jumps",
            CheckId::FrobeniusSolution => "frobenius_solution",
            CheckId::ThetaSum => "theta_sum",
        }
    }

    pub fn param_kind(self) -> ParamKind {
        match self {
            CheckId::TheoremB | CheckId::KToPrime | CheckId::QuotientRatio | CheckId::ThetaSum => ParamKind::K,
            CheckId::Newbound | CheckId::FrobeniusSolution => ParamKind::None,
            _ => ParamKind::Prime,
        }
    }

    /// Parses a comma-separated list; `all` expands to [`CheckId::ALL`].
    pub fn parse_list(s: &str) -> Result<Vec<CheckId>> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part == "all" {
                out.extend(CheckId::ALL);
            } else {
                out.push(part.parse()?);
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidParameters(format!("unknown check {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    NotApplicable,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
            Status::NotApplicable => "NOT_APPLICABLE",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check_id: String,
    pub group_label: String,
    /// `k` or `p`, when the check is parameterised.
    pub param: Option<u64>,
    pub status: Status,
    pub witness: Value,
}
