use ccs_cli::{report, scan, verify};
use ccs_core::{Bounds, Error};
use clap::{Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

/// Finite-group toolkit: build groups from a textual grammar, analyze their
/// structure, decide and classify the characteristic-cyclic property, scan
/// metacyclic parameter grids, and run the verification suites.
#[derive(Parser)]
#[command(name = "ccs", version)]
struct Cli {
    /// Enumeration bound on the group order (falls back to CCS_BOUND, then 256).
    #[arg(long, global = true)]
    bound: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a group table and print (or write) it as JSON.
    Build {
        spec: String,
        /// Write the table to a file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Structural report: orders of the distinguished subgroups, predicate
    /// flags, and subgroup counts.
    Analyze { spec: String },
    /// CCS verdict and clause classification.
    Classify { spec: String },
    /// Compare the arithmetic validators against brute-force verdicts over a
    /// metacyclic parameter grid.
    Scan {
        /// Which family: vi or vii.
        #[arg(long)]
        clause: String,
        #[arg(long, default_value_t = 50)]
        m_max: u64,
        /// Comma-separated primes.
        #[arg(long, value_delimiter = ',', default_value = "2,3,5")]
        p_list: Vec<u64>,
        #[arg(long, default_value_t = 2)]
        alpha_max: u32,
        /// Skip rows whose group order exceeds this.
        #[arg(long)]
        order_max: Option<u64>,
    },
    /// Run a verification suite; exits nonzero on any failed invariant.
    Verify {
        /// core | aut | ccs | numberth | all
        #[arg(long)]
        suite: String,
    },
}

fn effective_bounds(flag: Option<usize>) -> Bounds {
    let from_env = std::env::var("CCS_BOUND")
        .ok()
        .and_then(|v| v.parse::<usize>().ok());
    match flag.or(from_env) {
        Some(n) => Bounds::with_max_order(n),
        None => Bounds::default(),
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::SizeLimit { .. } => 3,
        Error::ClassificationFailure(_) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let bounds = effective_bounds(cli.bound);
    let outcome = match cli.cmd {
        Cmd::Build { spec, out } => report::cmd_build(&spec, out.as_deref(), &bounds).map(|v| (v, 0)),
        Cmd::Analyze { spec } => report::cmd_analyze(&spec, &bounds).map(|v| (v, 0)),
        Cmd::Classify { spec } => report::cmd_classify(&spec, &bounds).map(|v| (v, 0)),
        Cmd::Scan {
            clause,
            m_max,
            p_list,
            alpha_max,
            order_max,
        } => clause
            .parse::<scan::ScanClause>()
            .map_err(Error::domain)
            .and_then(|clause| {
                let args = scan::ScanArgs {
                    clause,
                    m_max,
                    p_list,
                    alpha_max,
                    order_max,
                };
                scan::cmd_scan(&args, &bounds)
            })
            .map(|v| (v, 0)),
        Cmd::Verify { suite } => verify::run_suite(&suite, &bounds)
            .map(|(v, failed)| (v, if failed > 0 { 1 } else { 0 })),
    };
    match outcome {
        Ok((doc, code)) => {
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
