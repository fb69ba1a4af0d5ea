//! Command-line front end.
//!
//! Data goes to the output stream, diagnostics to the error stream. Exit
//! codes: 0 success, 1 a check failed or a counterexample was found,
//! 2 usage or input error.

pub mod views;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};

use crate::gf2n::{parse_hex, FieldSpec};
use crate::pencil::verify::DEFAULT_SEED;
use crate::pencil::{verify_note, VerifyMode, VerifyOptions};
use views::{ClassifyView, PencilScanView, TraceTableView, VerifyView};

pub use views::Format;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "binconic",
    version,
    about = "Conics and pencils of conics over GF(2^n)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// Flags shared by every command.
#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Extension degree of GF(2^n), 1..=24.
    #[arg(long)]
    pub n: u32,
    /// Irreducible modulus as hex (bit i = coefficient of x^i).
    #[arg(long)]
    pub modulus: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Seed for sampled verification.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Worker threads for verification.
    #[arg(long)]
    pub jobs: Option<usize>,
}

impl CommonArgs {
    pub fn field(&self) -> crate::Result<FieldSpec> {
        let modulus = self.modulus.as_deref().map(parse_hex).transpose()?;
        FieldSpec::new(self.n, modulus)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print D(w) for every field element.
    TraceTable {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Classify a conic given as six hex coefficients xx,yy,zz,xy,xz,yz.
    Classify {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long)]
        conic: String,
    },
    /// Classify every member of λ(x²+y²+αxy) + μ(x²+z²+βxz).
    PencilScan {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
    },
    /// Check that the third degenerate member is a real line pair for
    /// every admissible (α, β).
    VerifyNote {
        #[command(flatten)]
        common: CommonArgs,
        /// Check every ordered admissible pair (the default).
        #[arg(long, conflicts_with = "samples")]
        exhaustive: bool,
        /// Check K seeded random admissible pairs.
        #[arg(long, value_name = "K")]
        samples: Option<u64>,
        /// Emit one row per pair.
        #[arg(long)]
        per_pair: bool,
        /// Check only the trace identity, skip conic classification.
        #[arg(long)]
        algebraic_only: bool,
        /// Include elapsed time in CSV and JSON output.
        #[arg(long)]
        timing: bool,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    execute(&cli.command, out, err)
}

pub fn execute(command: &Command, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match try_execute(command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> i32 {
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Ok(()) => EXIT_OK,
        // Broken pipe and friends; nothing useful left to report.
        Err(_) => EXIT_USAGE,
    }
}

fn try_execute(command: &Command, out: &mut dyn Write, err: &mut dyn Write) -> crate::Result<i32> {
    match command {
        Command::TraceTable { common } => {
            let view = TraceTableView::new(&common.field()?);
            let code = emit(out, &view.render(common.format));
            if !view.balanced() {
                let _ = writeln!(
                    err,
                    "trace classes unbalanced: {} zero, {} one",
                    view.trace0, view.trace1
                );
                return Ok(EXIT_CHECK_FAILED);
            }
            Ok(code)
        }
        Command::Classify { common, conic } => {
            let view = ClassifyView::parse(&common.field()?, conic)?;
            Ok(emit(out, &view.render(common.format)))
        }
        Command::PencilScan {
            common,
            alpha,
            beta,
        } => {
            let view = PencilScanView::parse(&common.field()?, alpha, beta)?;
            Ok(emit(out, &view.render(common.format)))
        }
        Command::VerifyNote {
            common,
            exhaustive: _,
            samples,
            per_pair,
            algebraic_only,
            timing,
        } => {
            let field = common.field()?;
            let mode = match samples {
                Some(count) => VerifyMode::Sample {
                    count: *count,
                    seed: common.seed,
                },
                None => VerifyMode::Exhaustive,
            };
            let opts = VerifyOptions {
                mode,
                geometry: !algebraic_only,
                per_pair: *per_pair,
                jobs: common.jobs,
            };
            let report = verify_note(&field, &opts);
            let code = emit(
                out,
                &VerifyView::new(&report, *timing).render(common.format),
            );
            if report.is_vacuous() {
                let _ = writeln!(err, "vacuous pass: no admissible pairs in {field}");
            }
            if !report.passed() {
                if let Some(c) = &report.first_counterexample {
                    let _ = writeln!(
                        err,
                        "counterexample: alpha={} beta={}: {}",
                        c.alpha, c.beta, c.reason
                    );
                }
                return Ok(EXIT_CHECK_FAILED);
            }
            Ok(code)
        }
    }
}
