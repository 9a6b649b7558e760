use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use prehom::homology::{Caps, Coefficients, DEFAULT_MATRIX_CAP};
use prehom::simplicial::DEFAULT_SIMPLEX_CAP;
use prehom_cli::commands::{self, parse_lengths, Pipeline};
use prehom_cli::{parse_str, CliError, Registry, Report};

/// Pre-crossed module, rack and group homology by exact integer linear algebra.
#[derive(Parser)]
#[command(name = "prehom", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Input file
    file: PathBuf,
    /// Name of the object in the input file
    #[arg(long)]
    object: String,
    /// Maximum enumerated simplices per degree
    #[arg(long, default_value_t = DEFAULT_SIMPLEX_CAP)]
    cap: usize,
    /// Maximum basis size in any degree
    #[arg(long, default_value_t = DEFAULT_MATRIX_CAP)]
    matrix_cap: usize,
}

impl Common {
    fn caps(&self) -> Caps {
        Caps { simplices: self.cap, matrix_dim: self.matrix_cap }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate every object in a file
    Validate { file: PathBuf },
    /// Homology H_0..H_M of one object through one pipeline
    Homology {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        pipeline: Pipeline,
        #[arg(long)]
        max_degree: usize,
        #[arg(long)]
        max_length: usize,
        #[arg(long, default_value = "Z")]
        coeff: Coefficients,
        /// Print only `m;coeff;betti;torsion` lines
        #[arg(long)]
        machine: bool,
    },
    /// Compare envelope (free letters), Clauwens and rack-complex homology
    CompareRa {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        max_degree: usize,
        #[arg(long)]
        max_length: usize,
    },
    /// Compare the envelope of X -> 1 with the tensor algebra on H_*(X)
    CheckTri {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        max_degree: usize,
        #[arg(long)]
        coeff: Coefficients,
        /// Truncation lengths, `2,3` or `1..4` (default: max-degree + 1)
        #[arg(long, value_parser = parse_lengths)]
        lengths: Option<Lengths>,
    },
    /// Compare the 1-coskeleton quotient with the nerve of G
    CheckCoskeleton {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        max_degree: usize,
    },
    /// Tabulate H_m over a range of truncation lengths
    Sweep {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        pipeline: Pipeline,
        #[arg(long)]
        degree: usize,
        #[arg(long, value_parser = parse_lengths)]
        lengths: Lengths,
        #[arg(long, default_value = "Z")]
        coeff: Coefficients,
    },
}

type Lengths = Vec<usize>;

fn load(file: &PathBuf) -> anyhow::Result<Registry> {
    let text = std::fs::read_to_string(file).with_context(|| format!("cannot read {}", file.display()))?;
    parse_str(&text).with_context(|| format!("in {}", file.display()))
}

fn run(command: Command) -> anyhow::Result<(Report, bool)> {
    let show = |p: &PathBuf| p.display().to_string();
    Ok(match command {
        Command::Validate { file } => (commands::validate(&load(&file)?, &show(&file)), false),
        Command::Homology { common, pipeline, max_degree, max_length, coeff, machine } => {
            let reg = load(&common.file)?;
            let r = commands::homology(
                &reg,
                &show(&common.file),
                &common.object,
                pipeline,
                max_degree,
                max_length,
                coeff,
                common.caps(),
            )?;
            (r, machine)
        }
        Command::CompareRa { common, max_degree, max_length } => {
            let reg = load(&common.file)?;
            let r = commands::compare_ra(&reg, &show(&common.file), &common.object, max_degree, max_length, common.caps())?;
            (r, false)
        }
        Command::CheckTri { common, max_degree, coeff, lengths } => {
            let reg = load(&common.file)?;
            let lengths = lengths.unwrap_or_else(|| vec![max_degree + 1]);
            let r = commands::check_tri(&reg, &show(&common.file), &common.object, max_degree, coeff, &lengths, common.caps())?;
            (r, false)
        }
        Command::CheckCoskeleton { common, max_degree } => {
            let reg = load(&common.file)?;
            (commands::check_coskeleton(&reg, &show(&common.file), &common.object, max_degree, common.caps())?, false)
        }
        Command::Sweep { common, pipeline, degree, lengths, coeff } => {
            let reg = load(&common.file)?;
            let r = commands::sweep(&reg, &show(&common.file), &common.object, pipeline, degree, &lengths, coeff, common.caps())?;
            (r, false)
        }
    })
}

fn main() -> ExitCode {
    // clap exits with 2 on usage errors, which would read as a disagreement.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return ExitCode::from(if err.use_stderr() { 1 } else { 0 });
        }
    };
    let start = Instant::now();
    match run(cli.command) {
        Ok((report, machine)) => {
            print!("{}", if machine { report.render_machine() } else { report.render() });
            eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
            ExitCode::from(report.exit_code())
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            let code = err.downcast_ref::<CliError>().map_or(1, CliError::exit_code);
            ExitCode::from(code)
        }
    }
}
