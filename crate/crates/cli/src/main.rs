//! `lrcex`: exact LR, multi-LR, parabolic Kostka and Kronecker semi-invariant
//! computations from the command line.

mod commands;
mod output;

use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use output::Format;

#[derive(Debug, Parser)]
#[command(
    name = "lrcex",
    version,
    about = "Littlewood-Richardson counterexample toolkit"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "table")]
    format: Format,

    /// Worker threads for parallel sums (default: all cores).
    #[arg(long, global = true, env = "LRCEX_THREADS")]
    threads: Option<usize>,

    /// Refuse tableau enumeration above this many skew boxes.
    #[arg(long, global = true, default_value_t = 60)]
    timeout_boxes: u64,

    /// Enumerate even above --timeout-boxes.
    #[arg(long, global = true)]
    force: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// c^{outer}_{inner1,inner2}.
    Lr(commands::LrArgs),
    /// c^{outer}_{factor1,...,factorK}.
    MultiLr(commands::MultiLrArgs),
    /// Parabolic Kostka number K_{λ,R}.
    Kostka(commands::KostkaArgs),
    /// Log-concavity records along the two counterexample families.
    Counterexample(commands::CounterexampleArgs),
    /// Quiver computations.
    #[command(subcommand)]
    Quiver(commands::QuiverCommand),
    /// Stretched values N ↦ c^{Nλ}_{Nμ,Nν} and their polynomial fit.
    Stretch(commands::StretchArgs),
    /// Two-row Horn triples for (n,n).
    Horn(commands::HornArgs),
}

#[derive(Debug, Clone, Copy)]
pub struct Guard {
    pub timeout_boxes: u64,
    pub force: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
        {
            eprintln!("lrcex: cannot configure thread pool: {e}");
            return ExitCode::from(2);
        }
    }
    let guard = Guard {
        timeout_boxes: cli.timeout_boxes,
        force: cli.force,
    };
    let start = Instant::now();
    let output = match commands::run(&cli.command, guard) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("lrcex: {e:#}");
            return ExitCode::from(2);
        }
    };
    let elapsed = start.elapsed().as_millis();
    let mut stdout = io::stdout().lock();
    if let Err(e) = output
        .render(cli.format, elapsed, &mut stdout)
        .and_then(|_| stdout.flush())
    {
        eprintln!("lrcex: {e}");
        return ExitCode::from(2);
    }
    if output.all_pass() {
        ExitCode::SUCCESS
    } else {
        for c in output.checks.iter().filter(|c| !c.pass) {
            eprintln!("lrcex: check failed: {} ({} vs {})", c.name, c.lhs, c.rhs);
        }
        ExitCode::FAILURE
    }
}
