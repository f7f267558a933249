use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use notpowers::config::{resolve_jobs, Config, JOBS_ENV};
use notpowers::io::{load_corpus, load_group, write_cayley};
use notpowers::report::{render_report, to_json, AnalysisReport, Format};
use notpowers::{analyze_powers, classify_new_jumps, non_power_profile, run_suite, CheckId, Error, Limits};

#[derive(Parser)]
#[command(name = "notpowers", version, about = "Count and verify non-k-th powers in finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    #[arg(long, default_value_t = 200)]
    lattice_cap: usize,
    #[arg(long, default_value_t = 5000)]
    closure_cap: usize,
    #[arg(long = "assoc-cap", default_value_t = 512)]
    associativity_full_check_cap: usize,
    /// Worker threads; NOTPOWERS_JOBS takes precedence.
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, default_value = "json", value_parser = parse_format)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Power map of one group for an exponent k, or type and length for a prime.
    Analyze {
        /// `family:SPEC`, `file:PATH` or a path.
        source: String,
        #[arg(long, conflicts_with = "prime", required_unless_present = "prime")]
        k: Option<u64>,
        #[arg(long)]
        prime: Option<u64>,
        #[command(flatten)]
        common: Common,
    },
    /// Run checks over a corpus.
    Verify {
        /// `builtin:N` or `dir:PATH`.
        #[arg(long)]
        corpus: String,
        /// Comma-separated check ids, or `all`.
        #[arg(long, default_value = "all")]
        checks: String,
        /// List every result, not only FAIL and SKIPPED ones.
        #[arg(long)]
        all_results: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Decide which alternative bounds n_p for an odd prime p.
    Classify {
        source: String,
        #[arg(long)]
        prime: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Print a group's Cayley table in the import format.
    Export {
        source: String,
        #[command(flatten)]
        common: Common,
    },
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

impl Common {
    fn config(&self) -> Result<Config, Error> {
        let env = std::env::var(JOBS_ENV).ok();
        let config = Config {
            limits: Limits {
                lattice_cap: self.lattice_cap,
                closure_cap: self.closure_cap,
                associativity_full_check_cap: self.associativity_full_check_cap,
            },
            jobs: resolve_jobs(self.jobs, env.as_deref())?,
            output: self.output.clone(),
            format: self.format,
        };
        config.validate()?;
        Ok(config)
    }
}

fn emit(config: &Config, text: &str) -> Result<(), Error> {
    match &config.output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::Io { path: path.display().to_string(), message: e.to_string() }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Runs a command and returns its exit code; errors map to 2.
fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Analyze { source, k, prime, common } => {
            let config = common.config()?;
            let g = load_group(&source, &config.limits)?;
            let report = match (k, prime) {
                (Some(k), None) => AnalysisReport::new(&g, &analyze_powers(&g, k)?, None),
                (None, Some(p)) => {
                    let profile = non_power_profile(&g, p)?;
                    AnalysisReport::new(&g, &analyze_powers(&g, p)?, Some(&profile))
                }
                _ => return Err(Error::InvalidParameters("give exactly one of --k and --prime".into())),
            };
            emit(&config, &report.render(config.format)?)?;
            Ok(0)
        }
        Command::Verify { corpus, checks, all_results, common } => {
            let config = common.config()?;
            let checks = CheckId::parse_list(&checks)?;
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(config.jobs)
                .build()
                .map_err(|e| Error::InvalidParameters(e.to_string()))?;
            let report = pool.install(|| -> Result<_, Error> {
                let groups = load_corpus(&corpus, &config.limits)?;
                Ok(run_suite(&groups, &checks, config.limits, &corpus, all_results))
            })?;
            emit(&config, &render_report(&report, config.format)?)?;
            if config.format != Format::Text {
                eprintln!(
                    "{} checks over {} groups, {} failed, {:.2?}",
                    report.executed(),
                    report.corpus.len(),
                    report.fail_count(),
                    report.runtime
                );
            }
            Ok(if report.fail_count() == 0 { 0 } else { 1 })
        }
        Command::Classify { source, prime, common } => {
            let config = common.config()?;
            let g = load_group(&source, &config.limits)?;
            let outcome = classify_new_jumps(&g, prime, config.limits.lattice_cap)?;
            let text = match config.format {
                Format::Text => match outcome.case {
                    Some(case) => format!(
                        "{} p={}: case {} ({}), |G|={}, n={}\n",
                        g.label(),
                        prime,
                        case.number(),
                        case.tag(),
                        outcome.order,
                        outcome.n
                    ),
                    None => format!("{} p={}: unresolved, |G|={}, n={}\n", g.label(), prime, outcome.order, outcome.n),
                },
                _ => {
                    let value = serde_json::json!({
                        "group_label": g.label(),
                        "p": outcome.p,
                        "order": outcome.order,
                        "n": outcome.n,
                        "case": outcome.case.map(|c| c.number()),
                        "case_tag": outcome.case.map(|c| c.tag()),
                        "witness": outcome.witness,
                    });
                    to_json(&value)?
                }
            };
            emit(&config, &text)?;
            Ok(if outcome.case.is_some() { 0 } else { 1 })
        }
        Command::Export { source, common } => {
            let config = common.config()?;
            let g = load_group(&source, &config.limits)?;
            emit(&config, &write_cayley(&g))?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
