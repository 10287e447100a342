//! `weylcontact`: build Lie algebras, certify k-contact and Anosov data, and
//! emit JSON or Markdown reports.
//!
//! Exit status: 0 when every verdict holds, 1 when some verdict fails (the
//! report carries the witnesses), 2 on usage, parse or I/O errors.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use report::Format;

#[derive(Parser, Debug)]
#[command(name = "weylcontact", version, about = "Exact k-contact certificates for Weyl chamber actions")]
pub struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Seed for every sampled check.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write the result here (atomically) instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build or validate algebras.
    #[command(subcommand)]
    Algebra(AlgebraCmd),
    /// Restricted root decomposition and Weyl chambers.
    Roots { input: PathBuf },
    /// Verify or search for contact forms.
    #[command(subcommand)]
    Contact(ContactCmd),
    /// Hyperbolic splittings and adapted frames.
    #[command(subcommand)]
    Anosov(AnosovCmd),
    /// Central or modified extensions of a certified structure.
    Extend(ExtendArgs),
    /// Role-tagged relation tables.
    #[command(subcommand)]
    Kammeyer(KammeyerCmd),
    /// Run the full battery over the built-in algebras.
    Report,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgebraType {
    So,
    Sl,
}

#[derive(Subcommand, Debug)]
pub enum AlgebraCmd {
    /// Emit `so(k, k+n)` or `sl(n)` as JSON.
    Build {
        #[arg(long = "type", value_enum)]
        kind: AlgebraType,
        /// `k` for `so`; ignored for `sl`.
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Parse a table and check the Lie axioms.
    Load { input: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum ContactCmd {
    /// Certify the forms in `--forms` with `I` the Cartan subspace.
    Verify {
        input: PathBuf,
        #[arg(long)]
        forms: PathBuf,
    },
    /// Search for a certified form basis.
    Search {
        input: PathBuf,
        /// Number of forms; must equal the rank.
        #[arg(long)]
        count: Option<usize>,
        /// Also write the found rows as a forms file.
        #[arg(long)]
        forms_out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum AnosovCmd {
    /// Split the root spaces by the sign of `μ(x)`.
    Check {
        input: PathBuf,
        /// Cartan coordinates, e.g. "1,2" or "1/2,-3".
        #[arg(long, allow_hyphen_values = true)]
        element: String,
    },
    /// Reparameterize so all Reeb elements share a chamber.
    Adapt {
        input: PathBuf,
        #[arg(long)]
        forms: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExtendKind {
    Central,
    Modified,
}

#[derive(Args, Debug)]
pub struct ExtendArgs {
    #[arg(value_enum)]
    kind: ExtendKind,
    input: PathBuf,
    #[arg(long)]
    spec: PathBuf,
    /// Base forms; searched for when omitted.
    #[arg(long)]
    forms: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum KammeyerCmd {
    /// Check every applicable relation and constraint.
    Verify { input: PathBuf },
    /// Emit the split `sl(n)` table.
    Template {
        #[arg(long)]
        n: usize,
    },
}

fn threads_from_env() -> Result<Option<usize>, String> {
    match std::env::var("WEYLCONTACT_THREADS") {
        Err(_) => Ok(None),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(format!("WEYLCONTACT_THREADS must be a positive integer, got {s:?}")),
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let threads = match threads_from_env() {
        Ok(t) => t,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    if let Some(n) = threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::run(&cli, threads) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
