//! `colonlab`: Gröbner primitives and colon-ideal verifiers from the command line.
//!
//! Exit status: 0 when the command's expected verdict holds (or it has none),
//! 1 on a verified failure, 2 on usage, parse or precondition errors, 3 on
//! internal errors.

mod commands;
mod input;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use colonlab_core::{Error, Ring};
use serde_json::{json, Value};

use commands::{Outcome, Verdict};
use input::{split_list, Settings};

#[derive(Debug, Parser)]
#[command(
    name = "colonlab",
    version,
    about = "Colon ideals, Hilbert functions and socles of Artinian quotients"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Options,
}

#[derive(Debug, Args)]
struct Options {
    /// Coefficient field: Q or F<p> [default: F32003]
    #[arg(long, global = true)]
    field: Option<String>,
    /// Comma-separated variable names, greatest first
    #[arg(long, global = true)]
    vars: Option<String>,
    /// Monomial order: degrevlex or lex [default: degrevlex]
    #[arg(long, global = true)]
    order: Option<String>,
    /// Comma-separated generators of the main ideal
    #[arg(long, global = true, allow_hyphen_values = true)]
    gens: Option<String>,
    /// Comma-separated generators of the second ideal
    #[arg(long, global = true, allow_hyphen_values = true)]
    ideal2: Option<String>,
    /// Polynomial to reduce (nf)
    #[arg(long, global = true, allow_hyphen_values = true)]
    poly: Option<String>,
    /// Seed for random-ci [default: 0]
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Number of random-ci cases [default: 10]
    #[arg(long, global = true)]
    count: Option<usize>,
    /// Largest generator degree for random-ci [default: 4]
    #[arg(long, global = true)]
    max_degree: Option<u32>,
    /// Read settings from a `key = value` file; flags take precedence
    #[arg(long = "in", global = true, value_name = "PATH")]
    input: Option<PathBuf>,
    /// Emit a JSON report
    #[arg(long, global = true)]
    json: bool,
    /// Report timing_ms as null for reproducible output
    #[arg(long, global = true)]
    no_timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
enum Command {
    /// Reduced Gröbner basis of --gens
    Gb,
    /// Normal form of --poly modulo --gens
    Nf,
    /// Colon ideal --gens : --ideal2
    Colon,
    /// Intersection of --gens and --ideal2
    Intersect,
    /// Length, standard monomials and Hilbert functions of the quotient by --gens
    Hilbert,
    /// Socle of the quotient by --gens
    Socle,
    /// Colon ladder for a complete intersection of n forms in n variables
    Ladder,
    /// Symmetry of the graded Hilbert function of a Gorenstein quotient
    Symmetry,
    /// Ladder versus symmetry of the --ideal2 filtration (default: maximal ideal)
    Equiv,
    /// Ladder for powers of the maximal ideal in a graded Gorenstein quotient
    Corollary,
    /// The F2 Gorenstein quotient with asymmetric Hilbert function
    Storch,
    /// Ladder on seeded random complete intersections
    RandomCi,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Gb => "gb",
            Command::Nf => "nf",
            Command::Colon => "colon",
            Command::Intersect => "intersect",
            Command::Hilbert => "hilbert",
            Command::Socle => "socle",
            Command::Ladder => "ladder",
            Command::Symmetry => "symmetry",
            Command::Equiv => "equiv",
            Command::Corollary => "corollary",
            Command::Storch => "storch",
            Command::RandomCi => "random-ci",
        }
    }
}

fn settings(opts: &Options) -> colonlab_core::Result<Settings> {
    let flags = Settings {
        field: opts.field.clone(),
        vars: opts.vars.clone(),
        order: opts.order.clone(),
        gens: opts.gens.as_deref().map(|g| split_list(g, ',')),
        ideal2: opts.ideal2.as_deref().map(|g| split_list(g, ',')),
        seed: opts.seed,
        count: opts.count,
        poly: opts.poly.clone(),
        max_degree: opts.max_degree,
    };
    match &opts.input {
        Some(path) => Ok(flags.or(Settings::from_file(path)?)),
        None => Ok(flags),
    }
}

fn run(command: Command, opts: &Options) -> colonlab_core::Result<Outcome> {
    if command == Command::Storch {
        return commands::storch();
    }
    let s = settings(opts)?;
    match command {
        Command::Gb => commands::gb(&s),
        Command::Nf => commands::nf(&s),
        Command::Colon => commands::colon_cmd(&s),
        Command::Intersect => commands::intersect(&s),
        Command::Hilbert => commands::hilbert(&s),
        Command::Socle => commands::socle(&s),
        Command::Ladder => commands::ladder(&s),
        Command::Symmetry => commands::symmetry(&s),
        Command::Equiv => commands::equiv(&s),
        Command::Corollary => commands::corollary(&s),
        Command::Storch => unreachable!("handled above"),
        Command::RandomCi => commands::random_ci(&s),
    }
}

fn ring_json(ring: &Ring) -> Value {
    json!({
        "field": ring.field().to_string(),
        "vars": ring.vars(),
        "order": ring.order().to_string(),
    })
}

fn error_kind(err: &Error) -> (&'static str, u8) {
    match err {
        Error::Usage(_) => ("usage", 2),
        Error::Precondition(_) => ("precondition", 2),
        Error::Parse { .. } => ("parse", 2),
        Error::Arithmetic(_) => ("arithmetic", 2),
        Error::Internal(_) => ("internal", 3),
    }
}

fn pretty(report: &Value) -> String {
    serde_json::to_string_pretty(report).expect("JSON values serialize")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = &cli.opts;
    let start = Instant::now();
    let outcome = run(cli.command, opts);
    let timing = if opts.no_timing {
        Value::Null
    } else {
        json!(start.elapsed().as_secs_f64() * 1e3)
    };
    let mut stdout = std::io::stdout().lock();
    match outcome {
        Ok(out) => {
            if opts.json {
                let report = json!({
                    "command": cli.command.name(),
                    "ring": ring_json(&out.ring),
                    "result": out.result,
                    "timing_ms": timing,
                });
                let _ = writeln!(stdout, "{}", pretty(&report));
            } else {
                let _ = writeln!(
                    stdout,
                    "ring: {}[{}] ordered by {}",
                    out.ring.field(),
                    out.ring.vars().join(","),
                    out.ring.order()
                );
                let _ = write!(stdout, "{}", out.text);
                if let Value::Number(ms) = &timing {
                    let _ = writeln!(stdout, "time: {:.3} ms", ms.as_f64().unwrap_or(0.0));
                }
            }
            match out.verdict {
                Verdict::None | Verdict::Holds => ExitCode::SUCCESS,
                Verdict::Fails => ExitCode::from(1),
            }
        }
        Err(err) => {
            let (kind, code) = error_kind(&err);
            if opts.json {
                let report = json!({
                    "command": cli.command.name(),
                    "error": { "kind": kind, "message": err.to_string() },
                    "timing_ms": timing,
                });
                let _ = writeln!(stdout, "{}", pretty(&report));
            }
            eprintln!("colonlab {}: {err}", cli.command.name());
            ExitCode::from(code)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn clap_definition_is_valid() {
        Cli::command().debug_assert();
    }

    #[test]
    fn flags_parse_after_subcommand() {
        let cli = Cli::try_parse_from([
            "colonlab", "ladder", "--field", "F7", "--vars", "x,y", "--gens", "-x^2,y^3", "--json",
        ])
        .unwrap();
        assert_eq!(cli.command, Command::Ladder);
        assert_eq!(cli.opts.gens.as_deref(), Some("-x^2,y^3"));
        assert!(cli.opts.json);
    }

    #[test]
    fn error_codes() {
        assert_eq!(error_kind(&Error::Usage(String::new())).1, 2);
        assert_eq!(error_kind(&Error::Internal(String::new())).1, 3);
    }
}
