use std::path::PathBuf;

use crate::error::{Error, Result};
use crate::group::Limits;
use crate::report::Format;

/// Environment variable that overrides `--jobs`.
pub const JOBS_ENV: &str = "NOTPOWERS_JOBS";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    pub limits: Limits,
    pub jobs: usize,
    /// `None` writes to standard output.
    pub output: Option<PathBuf>,
    pub format: Format,
}

impl Default for Config {
    fn default() -> Self {
        Self { limits: Limits::default(), jobs: default_jobs(), output: None, format: Format::Json }
    }
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

impl Config {
    pub fn validate(&self) -> Result<()> {
        let l = &self.limits;
        if l.lattice_cap == 0 || l.closure_cap == 0 || l.associativity_full_check_cap == 0 {
            return Err(Error::InvalidParameters("caps must be positive".into()));
        }
        if self.jobs == 0 {
            return Err(Error::InvalidParameters("jobs must be at least 1".into()));
        }
        Ok(())
    }
}

/// Worker count: the environment value wins over the flag, which wins over
/// the machine's available parallelism.
pub fn resolve_jobs(flag: Option<usize>, env: Option<&str>) -> Result<usize> {
    if let Some(v) = env.map(str::trim).filter(|v| !v.is_empty()) {
        return v
            .parse()
            .ok()
            .filter(|&j: &usize| j >= 1)
            .ok_or_else(|| Error::InvalidParameters(format!("{JOBS_ENV}={v:?} is not a positive integer")));
    }
    Ok(flag.unwrap_or_else(default_jobs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jobs_resolution() {
        assert_eq!(resolve_jobs(Some(3), None), Ok(3));
        assert_eq!(resolve_jobs(Some(3), Some("5")), Ok(5));
        assert!(resolve_jobs(Some(3), Some("0")).is_err());
        assert!(resolve_jobs(None, Some("many")).is_err());
        assert!(resolve_jobs(None, None).unwrap() >= 1);
    }

    #[test]
    fn validation() {
        assert!(Config::default().validate().is_ok());
        let bad = Config { jobs: 0, ..Config::default() };
        assert!(bad.validate().is_err());
    }
}
