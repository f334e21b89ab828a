//! Thin command-line front end; all logic lives in [`leibniz::commands`].

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use leibniz::commands::{
    cmd_canonicalize, cmd_catalog, cmd_cohomology, cmd_table, cmd_verify, CatalogRequest, CliError,
    CohomologyRequest, Outcome, TableRequest, VerifyRequest,
};

#[derive(Parser)]
#[command(
    name = "leibniz",
    version,
    about = "Exact cohomology and deformations of Leibniz superalgebras over the rationals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a catalog algebra or deformation family member as JSON.
    Catalog {
        /// One of: nf, nf-super, mu, nu, eta.
        kind: String,
        #[arg(long)]
        n: usize,
        /// Odd dimension (nf-super only; m = n or m = n + 1).
        #[arg(long)]
        m: Option<usize>,
        /// Comma-separated rational parameters a_2,...,a_n (families only).
        #[arg(long)]
        params: Option<String>,
        /// Deformation parameter t (families only; default 1).
        #[arg(long)]
        t: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cocycle, coboundary and cohomology dimensions of an algebra.
    Cohomology {
        /// Input file, or "-" for stdin.
        #[arg(long, default_value = "-")]
        input: String,
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        parity: String,
        /// Include the RREF cocycle and coboundary bases in the output.
        #[arg(long)]
        emit_basis: bool,
        /// Bypass the dimension cap.
        #[arg(long)]
        force: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run structural checks; exit 0 only if all pass.
    Verify {
        #[arg(long, default_value = "-")]
        input: String,
        /// Comma-separated: identity, module, nilpotent, null-filiform,
        /// dsquared, integrable:<cochain-file>.
        #[arg(long)]
        checks: String,
        /// Seed for the randomized checks.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Canonical form of a single-generated Leibniz algebra.
    Canonicalize {
        #[arg(long, default_value = "-")]
        input: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Degree-2 even cohomology dimensions across a range of n, with the
    /// closed-form values side by side.
    Table {
        /// Inclusive range, e.g. 2..6.
        #[arg(long)]
        range: String,
        /// One of: nf, nn, nn1.
        #[arg(long)]
        variant: String,
        /// One of: json, csv, markdown.
        #[arg(long, default_value = "json")]
        format: String,
        /// Bypass the n cap.
        #[arg(long)]
        force: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn read_input(source: &str) -> Result<String, CliError> {
    if source == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Usage(format!("cannot read stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(source)
            .map_err(|e| CliError::Usage(format!("cannot read {source:?}: {e}")))
    }
}

fn deliver(outcome: Outcome, out: Option<PathBuf>) -> Result<i32, CliError> {
    match out {
        Some(path) => std::fs::write(&path, outcome.stdout.as_bytes())
            .map_err(|e| CliError::Usage(format!("cannot write {path:?}: {e}")))?,
        None => println!("{}", outcome.stdout),
    }
    Ok(outcome.exit)
}

fn run() -> Result<i32, CliError> {
    let cli = Cli::parse();
    match cli.command {
        Command::Catalog {
            kind,
            n,
            m,
            params,
            t,
            out,
        } => {
            let outcome = cmd_catalog(&CatalogRequest {
                kind,
                n,
                m,
                params,
                t,
            })?;
            deliver(outcome, out)
        }
        Command::Cohomology {
            input,
            degree,
            parity,
            emit_basis,
            force,
            out,
        } => {
            let text = read_input(&input)?;
            let outcome = cmd_cohomology(
                &text,
                &CohomologyRequest {
                    degree,
                    parity,
                    emit_basis,
                    force,
                },
            )?;
            deliver(outcome, out)
        }
        Command::Verify {
            input,
            checks,
            seed,
            out,
        } => {
            let text = read_input(&input)?;
            let outcome = cmd_verify(&text, &VerifyRequest { checks, seed })?;
            deliver(outcome, out)
        }
        Command::Canonicalize { input, out } => {
            let text = read_input(&input)?;
            let outcome = cmd_canonicalize(&text)?;
            deliver(outcome, out)
        }
        Command::Table {
            range,
            variant,
            format,
            force,
            out,
        } => {
            let outcome = cmd_table(&TableRequest {
                range,
                variant,
                format,
                force,
            })?;
            deliver(outcome, out)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
