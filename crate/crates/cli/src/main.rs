use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use hopfwind_cli::catalog;
use hopfwind_cli::commands::{Command, Method, Settings, Twist};
use hopfwind_cli::report::Report;

#[derive(Parser)]
#[command(name = "hopfwind", version, about = "Integrals, Nakayama automorphisms and twisted Hochschild homology of Hopf algebras")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Sub,
}

#[derive(Args)]
struct Global {
    /// Print JSON reports.
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Print human-readable reports (default).
    #[arg(long, global = true)]
    text: bool,
    /// Rewriting certificate degree; defaults to the entry's recommendation.
    #[arg(long, global = true)]
    degree_bound: Option<usize>,
    /// Filtration truncation for homology.
    #[arg(long, global = true, default_value_t = 8)]
    truncate: usize,
    /// Stabilization window for homology.
    #[arg(long, global = true, default_value_t = 3)]
    window: usize,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads when NAME is `all`.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
}

#[derive(Subcommand)]
enum Sub {
    /// List the built-in algebras.
    Catalog,
    /// Check the Hopf algebra axioms.
    Axioms { name: String },
    /// Left-integral character π₀.
    Integral {
        name: String,
        #[arg(long, value_enum, default_value_t = Method::Descent)]
        method: Method,
    },
    /// Nakayama automorphism ν = S²∘ξ.
    Nakayama { name: String },
    /// Radford's S⁴ formula (finite-dimensional entries).
    Radford { name: String },
    /// Twisted Hochschild homology and cohomology.
    Hochschild {
        name: String,
        /// `nakayama`, `identity`, or a twist file.
        #[arg(long, default_value = "nakayama")]
        twist: String,
    },
    /// Compare H^i with H_{d-i} under the Nakayama twist.
    Duality { name: String },
}

/// Writes to stdout, ignoring a closed pipe.
fn out(s: &str) {
    let _ = std::io::stdout().lock().write_all(s.as_bytes());
}

fn emit(r: &Report, json: bool) {
    if json {
        out(&format!("{}\n", r.to_json()));
    } else {
        out(&r.to_text());
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let g = &cli.global;
    let settings = Settings { degree_bound: g.degree_bound, truncate: g.truncate, window: g.window, seed: g.seed };
    let (cmd, name) = match cli.command {
        Sub::Catalog => {
            let entries = catalog::entries();
            if g.json {
                out(&format!("{}\n", serde_json::to_string_pretty(&json!({ "catalog": entries })).expect("catalog serializes")));
            } else {
                for e in entries {
                    out(&format!("{:<22} {:<11} {}\n", e.name, e.family.name(), e.params));
                }
            }
            return ExitCode::SUCCESS;
        }
        Sub::Axioms { name } => (Command::Axioms, name),
        Sub::Integral { name, method } => (Command::Integral(method), name),
        Sub::Nakayama { name } => (Command::Nakayama, name),
        Sub::Radford { name } => (Command::Radford, name),
        Sub::Hochschild { name, twist } => (Command::Hochschild(Twist::parse(&twist)), name),
        Sub::Duality { name } => (Command::Duality, name),
    };
    if name == "all" {
        let mut failed = false;
        let mut errored = false;
        for (n, out) in hopfwind_cli::run_all(&cmd, &settings, g.jobs) {
            match out {
                Ok(r) => {
                    failed |= !r.passed();
                    emit(&r, g.json);
                }
                Err(e) => {
                    errored = true;
                    eprintln!("{n}: error: {e:#}");
                }
            }
        }
        return if errored { ExitCode::from(2) } else if failed { ExitCode::from(1) } else { ExitCode::SUCCESS };
    }
    match hopfwind_cli::run_one(&cmd, &name, &settings) {
        Ok(r) => {
            emit(&r, g.json);
            if r.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
