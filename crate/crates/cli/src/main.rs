//! `bforms`: resultants, discriminants and symmetric products of binary
//! forms from the command line.
//!
//! Exit codes: 0 success, 1 failed check or `member` answered false,
//! 2 usage error, 3 computational error.

mod commands;
mod error;
mod input;

use std::io::Write;
use std::process::ExitCode;

use bforms::{PrimeField, Rationals};
use clap::{Args, Parser, Subcommand};

use commands::{Check, Locus, Output, ScanKind};
use error::CliError;
use input::FormSyntax;

#[derive(Parser, Debug)]
#[command(name = "bforms", version, about = "Exact resultants and discriminants of binary forms")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Work over F_p instead of the rationals.
    #[arg(long, value_name = "P", global = true)]
    field: Option<u32>,
    /// Print a JSON document instead of plain text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Args, Debug)]
struct FormFlags {
    /// Forms are homogeneous in X and Y rather than univariate in Z.
    #[arg(long)]
    homog: bool,
    /// Allow coefficient variables.
    #[arg(long)]
    symbolic: bool,
    /// Coefficient variables, comma separated, in output order.
    #[arg(long, value_delimiter = ',')]
    vars: Option<Vec<String>>,
}

impl FormFlags {
    fn syntax(&self) -> FormSyntax {
        FormSyntax { homog: self.homog, symbolic: self.symbolic, vars: self.vars.clone() }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Resultant of two forms.
    Res {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        /// Formal degree of f.
        #[arg(long)]
        n: Option<usize>,
        /// Formal degree of g.
        #[arg(long)]
        m: Option<usize>,
        #[command(flatten)]
        form: FormFlags,
    },
    /// Discriminant of a form; with --symbolic and no --form, of the generic form of degree --n.
    Disc {
        #[arg(long)]
        form: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        flags: FormFlags,
    },
    /// Sylvester matrix of two forms.
    Sylvester {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[command(flatten)]
        form: FormFlags,
    },
    /// Elementary homogeneous symmetric polynomials p0..pn.
    Ehsp {
        #[arg(long)]
        n: usize,
    },
    /// Image of a tuple of points of P^1 under the Viete map.
    Viete {
        /// Points written `a:b`, separated by commas.
        #[arg(long)]
        points: String,
    },
    /// Rewrites a symmetric polynomial in x01, x11, .. in terms of P0..Pn.
    Express {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        n: usize,
    },
    /// Membership of a point in a locus. Prints true or false; false exits with code 1.
    Member {
        #[arg(value_enum)]
        locus: Locus,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: Option<String>,
    },
    /// Runs one of the symbolic identity checks.
    Verify {
        #[arg(value_enum)]
        check: Check,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: Option<usize>,
    },
    /// Exhaustive scan over F_q; prints the report as JSON.
    Scan {
        #[arg(value_enum)]
        kind: ScanKind,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: Option<usize>,
    },
}

macro_rules! over_ring {
    ($field:expr, |$ring:ident| $body:expr) => {
        match $field {
            Some(p) => {
                let $ring = PrimeField::new(p).map_err(CliError::from)?;
                $body
            }
            None => {
                let $ring = Rationals;
                $body
            }
        }
    };
}

fn run(common: &Common, command: &Command) -> Result<Output, CliError> {
    match command {
        Command::Res { f, g, n, m, form } => over_ring!(common.field, |r| commands::res(&r, f, g, [*n, *m], &form.syntax())),
        Command::Disc { form, n, flags } => {
            over_ring!(common.field, |r| commands::disc(&r, form.as_deref(), *n, &flags.syntax()))
        }
        Command::Sylvester { f, g, n, m, form } => {
            over_ring!(common.field, |r| commands::sylvester(&r, f, g, [*n, *m], &form.syntax()))
        }
        Command::Ehsp { n } => commands::ehsp_cmd(*n),
        Command::Viete { points } => over_ring!(common.field, |r| commands::viete_cmd(&r, points)),
        Command::Express { poly, n } => over_ring!(common.field, |r| commands::express(&r, poly, *n)),
        Command::Member { locus, x, y } => over_ring!(common.field, |r| commands::member(&r, *locus, x, y.as_deref())),
        Command::Verify { check, n, m } => commands::verify(*check, *n, *m),
        Command::Scan { kind, q, n, m } => commands::scan(*kind, *q, *n, *m),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli.common, &cli.command);
    let mut stdout = std::io::stdout().lock();
    match result {
        Ok(out) => {
            let body = if cli.common.json && !matches!(cli.command, Command::Scan { .. }) {
                serde_json::to_string_pretty(&out.json).expect("json value serializes")
            } else {
                out.text
            };
            let _ = writeln!(stdout, "{body}");
            if out.negative {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("bforms: {e}");
            e.exit_code()
        }
    }
}
