//! `verify`: run the pronormality verification scenarios.
//!
//! Cap precedence, lowest to highest: built-in defaults, the
//! `VERIFY_CAP_ELEMENTS` / `VERIFY_CAP_ORDER` environment variables, the
//! `--config` file (its `[defaults]` table, then per-scenario tables), and
//! finally `--cap-elements` / `--cap-order` flags.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use pronorm::scenarios::{list_scenarios, run_all, run_scenario, Caps, CapsConfig, ScenarioError, Status};

const USAGE_ERROR: u8 = 3;

#[derive(Parser)]
#[command(name = "verify", version, about = "Run pronormality verification scenarios")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one scenario and print its JSON report.
    Run {
        id: String,
        #[command(flatten)]
        caps: CapArgs,
        /// Write the report here instead of stdout.
        #[arg(long, value_name = "FILE")]
        json: Option<PathBuf>,
    },
    /// Run every scenario (optionally filtered) and print one line each.
    All {
        /// Glob over scenario ids, e.g. `wreath-*`.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        caps: CapArgs,
        /// Also write all reports and the summary as one JSON document.
        #[arg(long, value_name = "FILE")]
        json: Option<PathBuf>,
    },
    /// List registered scenarios with their claims.
    List {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct CapArgs {
    #[arg(long, value_name = "N")]
    cap_elements: Option<u64>,
    #[arg(long, value_name = "N")]
    cap_order: Option<u64>,
    /// TOML file with `[defaults]` and `[scenarios."<id>"]` cap tables.
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
}

/// Resolves caps for each scenario id.
struct CapResolver {
    base: Caps,
    config: CapsConfig,
    flags: (Option<u64>, Option<u64>),
}

impl CapResolver {
    fn new(args: &CapArgs) -> anyhow::Result<Self> {
        let mut base = Caps::default();
        if let Some(n) = env_cap("VERIFY_CAP_ELEMENTS")? {
            base.elements = n;
        }
        if let Some(n) = env_cap("VERIFY_CAP_ORDER")? {
            base.order = n;
        }
        let config = match &args.config {
            Some(path) => load_config(path)?,
            None => CapsConfig::default(),
        };
        Ok(CapResolver { base, config, flags: (args.cap_elements, args.cap_order) })
    }

    fn caps_for(&self, id: &str) -> Caps {
        let caps = self.config.caps_for(self.base, id);
        Caps { elements: self.flags.0.unwrap_or(caps.elements), order: self.flags.1.unwrap_or(caps.order) }
    }
}

fn env_cap(name: &str) -> anyhow::Result<Option<u64>> {
    match std::env::var(name) {
        Ok(v) => Ok(Some(v.trim().parse().with_context(|| format!("{name}={v:?} is not a cap"))?)),
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(e) => bail!("{name}: {e}"),
    }
}

fn load_config(path: &Path) -> anyhow::Result<CapsConfig> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write_file(path: &Path, text: &str) -> anyhow::Result<()> {
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn status_code(status: Status) -> u8 {
    match status {
        Status::Pass | Status::Unreachable => 0,
        Status::Fail => 1,
        Status::Truncated => 2,
    }
}

/// `Ok(code)` for completed runs; `Err` means a usage error.
fn execute(command: Command) -> anyhow::Result<u8> {
    match command {
        Command::Run { id, caps, json } => {
            let resolver = CapResolver::new(&caps)?;
            let report = run_scenario(&id, resolver.caps_for(&id))?;
            match json {
                Some(path) => {
                    write_file(&path, &report.to_json())?;
                    println!("{} {:?}", report.id, report.status);
                }
                None => println!("{}", report.to_json()),
            }
            Ok(status_code(report.status))
        }
        Command::All { filter, jobs, caps, json } => {
            let resolver = CapResolver::new(&caps)?;
            let summary = run_all(filter.as_deref(), jobs, |id| resolver.caps_for(id))?;
            if summary.reports.is_empty() {
                bail!("no scenario matches the filter");
            }
            for r in &summary.reports {
                let status = serde_json::to_value(r.status)?;
                println!("{:<12} {:<40} {:>8} ms", status.as_str().unwrap_or("?"), r.id, r.wall_time_ms);
                for m in &r.mismatches {
                    println!("             mismatch: {m}");
                }
                for t in &r.truncated {
                    println!("             note: {t}");
                }
            }
            println!(
                "passed {} failed {} truncated {} unreachable {}",
                summary.passed, summary.failed, summary.truncated, summary.unreachable
            );
            if let Some(path) = json {
                write_file(&path, &serde_json::to_string_pretty(&summary)?)?;
            }
            Ok(summary.exit_code() as u8)
        }
        Command::List { json } => {
            let list = list_scenarios();
            if json {
                println!("{}", serde_json::to_string_pretty(&list)?);
            } else {
                for s in &list {
                    let tag = if s.exploratory { " [exploratory]" } else { "" };
                    println!("{}{tag}\n    {}", s.id, s.claim);
                }
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help / --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(USAGE_ERROR);
        }
    };
    match execute(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            if let Some(ScenarioError::UnknownScenario(id)) = e.downcast_ref::<ScenarioError>() {
                eprintln!("error: unknown scenario `{id}` (see `verify list`)");
            } else {
                eprintln!("error: {e:#}");
            }
            ExitCode::from(USAGE_ERROR)
        }
    }
}
