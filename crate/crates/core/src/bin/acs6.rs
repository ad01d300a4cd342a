use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use acs6::angles::closed_form::Table;
use acs6::commands::{self, Format, Output};
use acs6::scan::{ParamRange, ScanSpec};

/// Orthogonal almost complex structures on R^6.
#[derive(Parser)]
#[command(name = "acs6", version)]
struct Cli {
    /// Acceptance tolerance for structure validation.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,
    /// Evaluate angle inputs with the closed-form table exactly as published.
    #[arg(long, global = true)]
    strict_closed_form: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// JSON file (stdin when omitted or `-`).
    input: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the validation report of a structure.
    Validate(Input),
    /// Re-express a structure in another encoding.
    Convert {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        format: Format,
    },
    /// Nijenhuis norm of a structure, or a CSV sweep over the angle domain.
    Nijenhuis {
        #[command(flatten)]
        input: Input,
        /// `su2xsu2`, `abelian`, or a structure-constants JSON file.
        #[arg(long, default_value = "su2xsu2")]
        algebra: String,
        #[arg(long, default_value_t = 1e-10)]
        integrability_tol: f64,
        /// Emit CSV over an angle scan instead of reading a structure.
        #[arg(long)]
        sweep: bool,
        /// Random sample size for --sweep.
        #[arg(long, default_value_t = 1000, conflicts_with = "steps")]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Full product grid with this many points per angle.
        #[arg(long)]
        steps: Option<usize>,
    },
    /// CSV of the edge E_01 over a (psi, phi) grid.
    ScanEdge {
        #[arg(long, default_value = "-pi/2:pi/2:9", allow_hyphen_values = true)]
        psi: String,
        #[arg(long, default_value = "-pi:pi:17", allow_hyphen_values = true)]
        phi: String,
    },
    /// The twelve integrable structures on su(2) x su(2).
    Catalog {
        #[arg(long, default_value_t = 1e-10)]
        integrability_tol: f64,
    },
}

fn read_input(input: &Input) -> std::io::Result<String> {
    let mut s = String::new();
    match &input.input {
        Some(p) if p.as_os_str() != "-" => s = std::fs::read_to_string(p)?,
        _ => {
            std::io::stdin().read_to_string(&mut s)?;
        }
    }
    Ok(s)
}

fn with_input(input: &Input, f: impl FnOnce(&str) -> Output) -> Output {
    match read_input(input) {
        Ok(text) => f(&text),
        Err(e) => Output { stdout: String::new(), stderr: format!("error: {e}\n"), code: commands::EXIT_MALFORMED },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let table = if cli.strict_closed_form { Table::Verbatim } else { Table::Corrected };
    let tol = cli.tol;
    let out = match &cli.command {
        Command::Validate(input) => with_input(input, |s| commands::validate(s, tol, table)),
        Command::Convert { input, format } => with_input(input, |s| commands::convert(s, *format, tol, table)),
        Command::Nijenhuis { input, algebra, integrability_tol, sweep, samples, seed, steps } => {
            if *sweep {
                let spec = match steps {
                    Some(n) => ScanSpec::full_angle_grid(*n),
                    None => ScanSpec::AngleRandom { samples: *samples, seed: *seed },
                };
                commands::nijenhuis_sweep_csv(algebra, &spec)
            } else {
                with_input(input, |s| commands::nijenhuis(algebra, s, tol, *integrability_tol, table))
            }
        }
        Command::ScanEdge { psi, phi } => match (psi.parse::<ParamRange>(), phi.parse::<ParamRange>()) {
            (Ok(psi), Ok(phi)) => commands::scan_edge(psi, phi),
            (Err(e), _) | (_, Err(e)) => commands::error_output(&e),
        },
        Command::Catalog { integrability_tol } => commands::catalog(*integrability_tol),
    };
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
