use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod output;

use output::{CliError, Format};

#[derive(Parser)]
#[command(name = "fgre", version, about = "Exact representation theory of small finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Field {
    Complex,
    Real,
}

#[derive(Subcommand)]
enum Command {
    /// Group structure.
    Group {
        #[command(subcommand)]
        command: GroupCommand,
    },
    /// Character table with Frobenius–Schur indicators.
    Chartable {
        #[arg(long, default_value = "builtin:2T")]
        group: String,
        #[arg(long, value_enum, default_value_t = Field::Complex)]
        field: Field,
        /// Re-verify row and column orthogonality before printing.
        #[arg(long)]
        check: bool,
    },
    /// Decompositions of tensor products of irreducibles.
    Tensor {
        #[arg(long, default_value = "builtin:2T")]
        group: String,
        #[arg(long, value_enum, default_value_t = Field::Real)]
        field: Field,
        /// Two row labels, e.g. `2,3`.
        #[arg(long, value_delimiter = ',', conflicts_with = "all")]
        reps: Vec<String>,
        /// Every pair of non-trivial rows.
        #[arg(long)]
        all: bool,
    },
    /// Recompute the published results and report each check.
    VerifyPaper {
        /// Run only these checks (repeat or separate with commas).
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        /// Negate one entry of a built-in matrix first, as REP:GENERATOR.
        #[arg(long, hide = true)]
        corrupt: Option<String>,
    },
    /// Central idempotents of the group algebra.
    Idempotents {
        #[arg(long, default_value = "builtin:2T")]
        group: String,
        #[arg(long, value_enum, default_value_t = Field::Real)]
        field: Field,
        /// Every idempotent of ℚG (abelian groups only).
        #[arg(long)]
        all: bool,
        /// With --all, keep only those with integer coefficients.
        #[arg(long, requires = "all")]
        integral: bool,
    },
    /// Wedderburn decomposition of the real or complex group algebra.
    Wedderburn {
        #[arg(long, default_value = "builtin:2T")]
        group: String,
        #[arg(long, value_enum, default_value_t = Field::Real)]
        field: Field,
    },
    /// Gamma matrices as left/right operators on 2×2 matrices.
    Dirac {
        #[command(subcommand)]
        command: Option<DiracCommand>,
    },
    /// Coordinates of an element of ℚQ8 in the basis 1a..1d, t..z.
    Decompose {
        #[arg(long, default_value = "builtin:Q8")]
        group: String,
        /// Expression such as `(e+i)/2`.
        #[arg(long, conflicts_with = "file")]
        element: Option<String>,
        /// Element in JSON form.
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Order of the matrix group generated by a closure set.
    Closure {
        /// Closure-set JSON file.
        #[arg(long, conflicts_with_all = ["set", "all"])]
        file: Option<PathBuf>,
        /// Built-in closure set.
        #[arg(long, conflicts_with = "all")]
        set: Option<String>,
        /// Every built-in closure set.
        #[arg(long)]
        all: bool,
        /// Element cap; overrides FGRE_CAP.
        #[arg(long)]
        cap: Option<usize>,
    },
}

#[derive(Subcommand)]
enum DiracCommand {
    /// Clifford relations, the right-multiplication group and Lie closures (the default).
    Verify,
}

#[derive(Subcommand)]
enum GroupCommand {
    /// Order, classes, element orders, center and generators.
    Info {
        #[arg(long, default_value = "builtin:2T")]
        group: String,
    },
}

fn run(cli: Cli) -> Result<(String, bool), CliError> {
    let fmt = cli.format;
    let rendered = match cli.command {
        Command::Group { command: GroupCommand::Info { group } } => commands::group_info(&group, fmt)?,
        Command::Chartable { group, field, check } => commands::chartable(&group, field, check, fmt)?,
        Command::Tensor { group, field, reps, all } => commands::tensor(&group, field, &reps, all, fmt)?,
        Command::VerifyPaper { only, corrupt } => return commands::verify_paper(&only, corrupt.as_deref(), fmt),
        Command::Idempotents { group, field, all, integral } => {
            commands::idempotents(&group, field, all, integral, fmt)?
        }
        Command::Wedderburn { group, field } => commands::wedderburn(&group, field, fmt)?,
        Command::Dirac { command: None | Some(DiracCommand::Verify) } => commands::dirac(fmt)?,
        Command::Decompose { group, element, file } => {
            commands::decompose(&group, element.as_deref(), file.as_deref(), fmt)?
        }
        Command::Closure { file, set, all, cap } => commands::closure(file.as_deref(), set.as_deref(), all, cap, fmt)?,
    };
    Ok((rendered, true))
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).map_err(|e| CliError::Usage(e.to_string()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.out.clone();
    let result = run(cli).and_then(|(text, ok)| emit(&text, out.as_ref()).map(|_| ok));
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("fgre: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
