//! Rendering of analysis and verification reports as JSON, CSV or text.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::power::{NonPowerProfile, PowerAnalysis};
use crate::verifier::VerificationReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            _ => Err(Error::InvalidParameters(format!("unknown format {s:?}"))),
        }
    }
}

/// The JSON object emitted by `analyze`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub group_label: String,
    pub order: usize,
    pub k_or_p: u64,
    pub n_k: usize,
    #[serde(rename = "type")]
    pub type_tuple: Option<Vec<usize>>,
    pub length: Option<usize>,
    pub theta_histogram: BTreeMap<usize, usize>,
}

impl AnalysisReport {
    pub fn new(g: &FiniteGroup, analysis: &PowerAnalysis, profile: Option<&NonPowerProfile>) -> Self {
        Self {
            group_label: g.label().to_string(),
            order: g.order(),
            k_or_p: analysis.k,
            n_k: analysis.n(),
            type_tuple: profile.map(NonPowerProfile::type_tuple),
            length: profile.map(NonPowerProfile::length),
            theta_histogram: analysis.theta_histogram(),
        }
    }

    pub fn render(&self, format: Format) -> Result<String> {
        Ok(match format {
            Format::Json => to_json(self)?,
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(["group_label", "order", "k_or_p", "n_k", "type", "length", "theta_histogram"])
                    .map_err(csv_err)?;
                w.write_record([
                    self.group_label.clone(),
                    self.order.to_string(),
                    self.k_or_p.to_string(),
                    self.n_k.to_string(),
                    self.type_tuple.as_ref().map(|t| join(t)).unwrap_or_default(),
                    self.length.map(|l| l.to_string()).unwrap_or_default(),
                    serde_json::to_string(&self.theta_histogram).map_err(json_err)?,
                ])
                .map_err(csv_err)?;
                finish_csv(w)?
            }
            Format::Text => {
                let mut s = format!("group {} (order {})\n", self.group_label, self.order);
                let _ = writeln!(s, "k = {}: n_k = {}", self.k_or_p, self.n_k);
                if let (Some(t), Some(m)) = (&self.type_tuple, self.length) {
                    let _ = writeln!(s, "type ({}), length {}", join(t), m);
                }
                let hist: Vec<String> = self.theta_histogram.iter().map(|(k, v)| format!("{k}:{v}")).collect();
                let _ = writeln!(s, "root multiplicities {}", hist.join(" "));
                s
            }
        })
    }
}

fn join(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn json_err(e: serde_json::Error) -> Error {
    Error::InvalidParameters(format!("serialisation failed: {e}"))
}

fn csv_err(e: csv::Error) -> Error {
    Error::InvalidParameters(format!("csv output failed: {e}"))
}

fn finish_csv(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w.into_inner().map_err(|e| Error::InvalidParameters(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::InvalidParameters(e.to_string()))
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value).map_err(json_err)?;
    s.push('\n');
    Ok(s)
}

/// Column order of the CSV verification report. `record` is `result` or
/// `tally`; unused columns are left empty.
pub const REPORT_CSV_HEADER: [&str; 10] =
    ["record", "check_id", "group_label", "param", "status", "pass", "fail", "skipped", "na", "witness"];

pub fn render_report(report: &VerificationReport, format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(report),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(REPORT_CSV_HEADER).map_err(csv_err)?;
            for r in &report.results {
                w.write_record([
                    "result",
                    &r.check_id,
                    &r.group_label,
                    &r.param.map(|p| p.to_string()).unwrap_or_default(),
                    r.status.as_str(),
                    "",
                    "",
                    "",
                    "",
                    &serde_json::to_string(&r.witness).map_err(json_err)?,
                ])
                .map_err(csv_err)?;
            }
            for (id, t) in &report.tallies {
                w.write_record([
                    "tally",
                    id,
                    "",
                    "",
                    "",
                    &t.pass.to_string(),
                    &t.fail.to_string(),
                    &t.skipped.to_string(),
                    &t.na.to_string(),
                    "",
                ])
                .map_err(csv_err)?;
            }
            finish_csv(w)
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "corpus {}: {} groups", report.config.corpus, report.corpus.len());
            let _ = writeln!(s, "{:<24} {:>8} {:>6} {:>8} {:>8}", "check", "pass", "fail", "skipped", "n/a");
            for (id, t) in &report.tallies {
                let _ = writeln!(s, "{:<24} {:>8} {:>6} {:>8} {:>8}", id, t.pass, t.fail, t.skipped, t.na);
            }
            if !report.case_tallies.is_empty() {
                let cases: Vec<String> = report.case_tallies.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let _ = writeln!(s, "new_jumps cases: {}", cases.join(" "));
            }
            for r in &report.results {
                let param = r.param.map(|p| format!(" [{p}]")).unwrap_or_default();
                let _ = writeln!(s, "{} {} {}{}: {}", r.status.as_str(), r.check_id, r.group_label, param, r.witness);
            }
            let _ = writeln!(s, "{} checks executed, {} failed, {:.2?}", report.executed(), report.fail_count(), report.runtime);
            Ok(s)
        }
    }
}
