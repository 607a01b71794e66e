//! `trw`: command-line frontend for the totally-real-units toolkit.
//!
//! Every subcommand prints a human-readable summary; `--json PATH` also
//! writes a certificate `{tool_version, command, inputs, results, failures,
//! elapsed_ms}` with sorted keys and integers as decimal strings.
//!
//! Exit codes: 0 when every check passed, 1 when checks ran with failures,
//! 2 on usage or input errors.

mod certificate;
mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use certificate::Certificate;

#[derive(Parser, Debug)]
#[command(name = "trw", version, about = "Exact checks for parametrized families of totally real units")]
struct Cli {
    /// Write a JSON certificate to PATH.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Record wall-clock time in the certificate (otherwise elapsed_ms is 0).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct FamilySource {
    /// Built-in family name (see `list-families`).
    #[arg(long)]
    pub family: Option<String>,
    /// Family definition file.
    #[arg(long, value_name = "PATH")]
    pub file: Option<PathBuf>,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Jobs {
    /// Worker threads (0 = all cores).
    #[arg(long, env = "TRW_JOBS", default_value_t = 0)]
    pub jobs: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the built-in families.
    ListFamilies,
    /// Check every instance of a family over a parameter box.
    Verify {
        #[command(flatten)]
        source: FamilySource,
        /// Parameter range `name=lo..hi`; defaults to the family's range.
        #[arg(long = "range", value_name = "NAME=LO..HI")]
        ranges: Vec<String>,
        #[command(flatten)]
        jobs: Jobs,
    },
    /// Build the nonconstant power-sum witness Q_(2Nk).
    Witness {
        #[command(flatten)]
        source: FamilySource,
        /// N, half the number of roots of unity.
        #[arg(long, default_value_t = 1)]
        torsion_half_order: usize,
    },
    /// Power sums q_1..q_m of a polynomial, or Q_m of a family.
    Powersum {
        /// Polynomial in x.
        #[arg(long, conflicts_with_all = ["family", "file"])]
        poly: Option<String>,
        #[arg(long)]
        family: Option<String>,
        #[arg(long, value_name = "PATH")]
        file: Option<PathBuf>,
        #[arg(long)]
        m: usize,
    },
    /// Monic polynomial whose roots are the N-th powers of the roots.
    Rootpower {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        n: usize,
    },
    /// Sturm chain of the squarefree part.
    Sturm {
        #[arg(long)]
        poly: String,
    },
    /// Count distinct real roots, optionally in an open interval.
    CountRoots {
        #[arg(long)]
        poly: String,
        /// Lower endpoint (integer or p/q).
        #[arg(long, requires = "hi", allow_hyphen_values = true)]
        lo: Option<String>,
        /// Upper endpoint (integer or p/q).
        #[arg(long, requires = "lo", allow_hyphen_values = true)]
        hi: Option<String>,
    },
    /// Discriminant of a monic polynomial.
    Discriminant {
        #[arg(long)]
        poly: String,
    },
    /// Square-discriminant test for a monic cubic.
    CyclicCubic {
        #[arg(long)]
        poly: String,
    },
    /// Quartic whose roots are a + b sqrt(d) +- sqrt((a + b sqrt(d))^2 + 1) and conjugates.
    GenQuartic2 {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long)]
        d: String,
    },
    /// Family prod_i (x^2 - 2 h(a, alpha_i) x - 1).
    GenUnitFamily {
        /// Polynomial in t1, t2.
        #[arg(long)]
        h: String,
        /// Minimal polynomial of alpha, in y.
        #[arg(long)]
        alpha: String,
    },
    /// Largest-first four-square decomposition.
    Foursquares {
        #[arg(long)]
        m: u64,
    },
    /// Represent m = f(a_1) + ... + f(a_s1) + s2 with s1 + s2 <= r.
    Kamke {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        r: usize,
        /// Normalize f to +-f(x + k), k >= N0, first.
        #[arg(long, value_name = "N0")]
        normalize: Option<u64>,
    },
    /// Minimal r for every m in 1..=m_max.
    KamkeScan {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        m_max: u64,
        #[arg(long)]
        r_max: usize,
        #[arg(long, value_name = "N0")]
        normalize: Option<u64>,
        #[command(flatten)]
        jobs: Jobs,
    },
    /// The set {x : phi_W(x; a, b)} over a window, with W the nonnegative integers.
    Phiw {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        #[arg(long, default_value_t = 100)]
        x_max: u64,
    },
    /// Validate a family definition file.
    Parse {
        #[arg(value_name = "PATH")]
        file: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = std::time::Instant::now();
    let outcome = match commands::run(&cli.command) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    print!("{}", outcome.text);
    let failed = !outcome.failures.is_empty();
    if let Some(path) = &cli.json {
        let elapsed_ms = if cli.timing {
            started.elapsed().as_millis() as u64
        } else {
            0
        };
        let cert = Certificate::new(cli.command.name(), outcome, elapsed_ms);
        if let Err(e) = cert.write(path) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    ExitCode::from(u8::from(failed))
}
