mod commands;
mod human;
mod report;
mod scenarios;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use brpic::groups::DEFAULT_ORDER_CAP;
use clap::{Args, Parser, Subcommand};

use report::Failure;
use scenarios::Scenario;

/// Braided autoequivalences of Drinfeld centers of finite groups.
///
/// Every command prints one JSON report on standard output. Exit status
/// is 0 on success, 1 when the computation reports a domain error and 2
/// for usage errors.
#[derive(Parser, Debug)]
#[command(name = "brpic", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Largest group order accepted.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER_CAP)]
    pub cap: usize,
    /// Cocycles take values in the m-th roots of unity (default: group exponent).
    #[arg(long, global = true)]
    pub modulus: Option<u64>,
    /// Worker threads for parallel searches.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Print a plain-text rendering instead of JSON.
    #[arg(long, global = true)]
    pub human: bool,
    /// Report elapsed time on standard error.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Character table with exact cyclotomic values.
    Chartable { group: String },
    /// Second cohomology with coefficients in roots of unity.
    H2 { group: String },
    /// Simple objects of the center, optionally with S and T.
    Center {
        group: String,
        #[arg(long)]
        modular: bool,
    },
    /// Construct, search and check braided autoequivalences.
    Autoeq {
        #[command(subcommand)]
        command: AutoeqCommand,
    },
    /// The elementary abelian model: matrices over F_p preserving the hyperbolic form.
    Fpn {
        p: u64,
        n: usize,
        #[command(subcommand)]
        command: FpnCommand,
    },
    /// Replay a named scenario and compare it with its stored fixture.
    Examples {
        name: Scenario,
        /// Overwrite the fixture with the freshly computed payload.
        #[arg(long)]
        regenerate: bool,
        /// Fixture directory (default: the one shipped with the crate).
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum AutoeqCommand {
    /// Induced by a group automorphism (index into the sorted automorphism list).
    V {
        group: String,
        #[arg(long)]
        auto: usize,
    },
    /// Automorphism followed by a cocycle twist (index into the class representatives).
    Bv {
        group: String,
        #[arg(long)]
        auto: usize,
        #[arg(long)]
        cocycle: usize,
    },
    /// Lazy cocycle on an abelian normal subgroup, completed by search.
    Ev {
        group: String,
        /// Subgroup elements, comma separated, as indices or names like "(1 2)(3 4)".
        #[arg(long, value_delimiter = ',', required = true)]
        subgroup: Vec<String>,
        #[arg(long)]
        cocycle: usize,
    },
    /// Partial dualization on an abelian normal subgroup with a complement.
    Rprime {
        group: String,
        /// Elements of the abelian normal factor, as for `ev --subgroup`.
        #[arg(long, value_delimiter = ',', required = true)]
        normal: Vec<String>,
    },
    /// Close all constructed generators under composition.
    Generate {
        group: String,
        /// Include lazy cocycles and partial dualizations on every abelian normal subgroup.
        #[arg(long)]
        all_subgroups: bool,
    },
    /// Check a mapping file against the modular data.
    Verify { mapping: PathBuf },
    /// Bimodule data (U, eta) of a construction file.
    Bimodule { construction: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum FpnCommand {
    /// Generated group order against the brute-force count.
    Orders,
    /// Generator matrices of each family.
    Generate,
    /// Factorizations b * r_d * e.
    Bruhat {
        /// Factor every element of the group.
        #[arg(long, conflicts_with = "matrix", required_unless_present = "matrix")]
        all: bool,
        /// Factor the matrix in this JSON file, {"p": .., "rows": [[..]]}.
        #[arg(long)]
        matrix: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.global.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: cannot start {jobs} workers: {e}");
            return ExitCode::from(2);
        }
    }
    let start = Instant::now();
    let outcome = match cli.command {
        Command::Chartable { group } => commands::chartable(&cli.global, &group),
        Command::H2 { group } => commands::h2(&cli.global, &group),
        Command::Center { group, modular } => commands::center(&cli.global, &group, modular),
        Command::Autoeq { command } => commands::autoeq(&cli.global, command),
        Command::Fpn { p, n, command } => commands::fpn(&cli.global, p, n, command),
        Command::Examples { name, regenerate, fixtures } => scenarios::run(&cli.global, name, regenerate, fixtures),
    };
    if cli.global.timing {
        eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
    }
    match outcome {
        Ok(report) => {
            let text = if cli.global.human { human::render(&report) } else { report.to_json() + "\n" };
            emit(&text);
            ExitCode::from(report.exit_code())
        }
        Err(Failure::Domain { report, error }) => {
            emit(&(report.error_json(&error) + "\n"));
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}\n\nFor more information, try '--help'.");
            ExitCode::from(2)
        }
    }
}

/// Write to standard output, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}
