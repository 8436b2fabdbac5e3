mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use kgsim_core::kg::Component;

use commands::CliError;

#[derive(Parser)]
#[command(
    name = "kgsim",
    version,
    about = "Klein-Gordon lattice simulator on a gate-level state vector"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ComponentArg {
    Particle,
    Antiparticle,
}

impl From<ComponentArg> for Component {
    fn from(c: ComponentArg) -> Self {
        match c {
            ComponentArg::Particle => Component::Particle,
            ComponentArg::Antiparticle => Component::AntiParticle,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run a time sweep and write trace.csv, heatmap.svg and manifest.json.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, env = "KGSIM_OUT_DIR", default_value = "kgsim-out")]
        out: PathBuf,
    },
    /// Print the synthesized evolution circuit as OpenQASM 2.0.
    Qasm {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, value_enum)]
        component: Option<ComponentArg>,
        #[arg(
            long,
            allow_negative_numbers = true,
            required_unless_present = "qft_only"
        )]
        t: Option<f64>,
        #[arg(long, default_value_t = 1)]
        r: usize,
        /// Emit only the QFT on the config's register.
        #[arg(long)]
        qft_only: bool,
    },
    /// Print `r,error` rows of Trotter error against the exact propagator.
    OracleCompare {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        r: Vec<usize>,
        /// Evolution time; defaults to the last time of the config.
        #[arg(long, allow_negative_numbers = true)]
        t: Option<f64>,
    },
    /// Print the tool version.
    Version,
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Sweep { config, out } => commands::sweep(&config, &out),
        Command::Qasm {
            config,
            component,
            t,
            r,
            qft_only,
        } => commands::qasm(&config, component.map(Into::into), t, r, qft_only),
        Command::OracleCompare { config, r, t } => commands::oracle_compare(&config, &r, t),
        Command::Version => {
            println!("kgsim {}", env!("CARGO_PKG_VERSION"));
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("kgsim: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
