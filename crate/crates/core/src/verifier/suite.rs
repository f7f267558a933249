use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{run_check, CheckId, CheckResult, GroupContext, ParamKind, Status};
use crate::arith::prime_divisors;
use crate::group::{FiniteGroup, Limits};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportConfig {
    pub corpus: String,
    pub checks: Vec<String>,
    pub lattice_cap: usize,
    pub closure_cap: usize,
    pub associativity_full_check_cap: usize,
    /// When false, `results` lists only FAIL and SKIPPED outcomes.
    pub all_results: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub label: String,
    pub order: usize,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub na: usize,
}

impl Tally {
    fn add(&mut self, status: Status) {
        match status {
            Status::Pass => self.pass += 1,
            Status::Fail => self.fail += 1,
            Status::Skipped => self.skipped += 1,
            Status::NotApplicable => self.na += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.pass + self.fail + self.skipped + self.na
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub config: ReportConfig,
    pub corpus: Vec<CorpusEntry>,
    pub results: Vec<CheckResult>,
    pub tallies: BTreeMap<String, Tally>,
    /// How many `(G, p)` pairs landed in each `new_jumps` alternative.
    pub case_tallies: BTreeMap<String, usize>,
    /// Wall-clock time; not serialised so reports stay byte-identical.
    #[serde(skip)]
    pub runtime: Duration,
}

impl VerificationReport {
    pub fn fail_count(&self) -> usize {
        self.tallies.values().map(|t| t.fail).sum()
    }

    pub fn executed(&self) -> usize {
        self.tallies.values().map(Tally::total).sum()
    }
}

fn params(group: &FiniteGroup, id: CheckId) -> Vec<u64> {
    match id.param_kind() {
        ParamKind::Prime => prime_divisors(group.order() as u64),
        ParamKind::K => (1..=group.exponent()).collect(),
        ParamKind::None => vec![0],
    }
}

fn run_group(group: &FiniteGroup, checks: &[CheckId], limits: Limits) -> Vec<CheckResult> {
    let ctx = GroupContext::new(group, limits);
    let mut out = Vec::new();
    for &id in checks {
        for p in params(group, id) {
            out.push(run_check(&ctx, id, p));
        }
    }
    out
}

/// Runs every `(group, check, parameter)` triple on the current rayon pool.
/// Results are ordered by corpus position, then check, then parameter, so the
/// report does not depend on scheduling.
pub fn run_suite(
    corpus: &[FiniteGroup],
    checks: &[CheckId],
    limits: Limits,
    corpus_description: &str,
    all_results: bool,
) -> VerificationReport {
    let start = Instant::now();
    let per_group: Vec<Vec<CheckResult>> =
        corpus.par_iter().map(|g| run_group(g, checks, limits)).collect();

    let mut tallies: BTreeMap<String, Tally> =
        checks.iter().map(|c| (c.name().to_string(), Tally::default())).collect();
    let mut case_tallies = BTreeMap::new();
    let mut results = Vec::new();
    for r in per_group.into_iter().flatten() {
        tallies.entry(r.check_id.clone()).or_default().add(r.status);
        if r.check_id == CheckId::NewJumps.name() {
            if let Some(tag) = r.witness.get("case_tag").and_then(|t| t.as_str()) {
                *case_tallies.entry(tag.to_string()).or_insert(0) += 1;
            }
        }
        if all_results || matches!(r.status, Status::Fail | Status::Skipped) {
            results.push(r);
        }
    }

    VerificationReport {
        config: ReportConfig {
            corpus: corpus_description.to_string(),
            checks: checks.iter().map(|c| c.name().to_string()).collect(),
            lattice_cap: limits.lattice_cap,
            closure_cap: limits.closure_cap,
            associativity_full_check_cap: limits.associativity_full_check_cap,
            all_results,
        },
        corpus: corpus.iter().map(|g| CorpusEntry { label: g.label().to_string(), order: g.order() }).collect(),
        results,
        tallies,
        case_tallies,
        runtime: start.elapsed(),
    }
}
