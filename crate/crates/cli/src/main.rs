use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use dp1_core::harness::{count_report, run_claims, ClaimStatus, CountOptions, VerificationReport};
use dp1_core::par::Execution;

#[derive(Parser)]
#[command(name = "dp1", about = "Exact checks and point counts for w^2 = z^3 + 49x^6 + 49y^6")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification claims and print a JSON report.
    Verify {
        #[arg(value_enum, default_value_t = Group::All)]
        group: Group,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the report here as well as to stdout.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Count points by height on the surface and the exceptional curves.
    Count {
        #[arg(long, value_delimiter = ',', default_values_t = [4.0, 16.0, 64.0])]
        heights: Vec<f64>,
        #[arg(long, default_value_t = 5)]
        curves: usize,
        /// Largest height for the brute-force surface count.
        #[arg(long, default_value_t = 16.0)]
        surface_cap: f64,
        #[arg(long)]
        sequential: bool,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Group {
    All,
    Picard,
    Identity,
    Section,
    Rank,
    Family,
}

impl Group {
    fn ids(self) -> Vec<&'static str> {
        match self {
            Group::All => dp1_core::harness::claim_ids(),
            Group::Picard => vec!["01-picard-rank"],
            Group::Identity => vec!["02-family-identities", "10-note-intermediate-line"],
            Group::Section => vec!["05-section-smooth", "09-note-w-formula"],
            Group::Rank => vec!["04-family-rank"],
            Group::Family => {
                vec!["03-family-bitangency", "06-components-exact", "07-components-numeric", "08-plane-construction"]
            }
        }
    }
}

fn write_json(text: &str, path: Option<&PathBuf>) -> Result<()> {
    println!("{text}");
    if let Some(p) = path {
        std::fs::write(p, format!("{text}\n")).with_context(|| format!("writing {}", p.display()))?;
    }
    Ok(())
}

fn summary(r: &VerificationReport) {
    for c in &r.claims {
        let s = match c.status {
            ClaimStatus::Pass => "pass",
            ClaimStatus::Fail => "FAIL",
            ClaimStatus::Flagged => "flag",
        };
        eprintln!("{s:4}  {:28} {:>7} ms  {}", c.id, c.runtime_ms, c.paper);
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Verify { group, seed, json } => {
            let report = run_claims(&group.ids(), seed)?;
            summary(&report);
            write_json(&serde_json::to_string_pretty(&report)?, json.as_ref())?;
            Ok(report.exit_code() as u8)
        }
        Command::Count { heights, curves, surface_cap, sequential, json } => {
            let opts = CountOptions { heights, curves, surface_cap };
            let exec = if sequential { Execution::Sequential } else { Execution::Parallel };
            let report = count_report(&opts, exec)?;
            write_json(&serde_json::to_string_pretty(&report)?, json.as_ref())?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
