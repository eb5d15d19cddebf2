use std::path::PathBuf;
use std::process::ExitCode;

use chain::FusionMode;
use chaincode::{sims, CliError, DecodeInput, McConfig, DEFAULT_P_GRID};
use clap::{Args, Parser, Subcommand, ValueEnum};
use colorcode::Color;
use serde::Serialize;

#[derive(Parser)]
#[command(name = "chaincode", version, about = "Chained triply-even codes: build, verify, simulate, decode")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Fusion {
    Edges,
    AllPairs,
}

impl From<Fusion> for FusionMode {
    fn from(f: Fusion) -> Self {
        match f {
            Fusion::Edges => FusionMode::Edges,
            Fusion::AllPairs => FusionMode::AllPairs,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum Seam {
    Red,
    Green,
    Blue,
}

impl From<Seam> for Color {
    fn from(s: Seam) -> Self {
        match s {
            Seam::Red => Color::Red,
            Seam::Green => Color::Green,
            Seam::Blue => Color::Blue,
        }
    }
}

#[derive(Args)]
struct Common {
    /// Code order.
    #[arg(long, default_value_t = 1)]
    t: usize,
    #[arg(long, value_enum, default_value_t = Fusion::Edges)]
    fusion: Fusion,
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SimArgs {
    #[command(flatten)]
    common: Common,
    /// Number of seeded runs.
    #[arg(long, default_value_t = 100)]
    shots: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Cmd {
    /// Chained code description.
    Build {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Evenness, distances and transversal rotation of a code.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Check the single color code D_t instead of T_t.
        #[arg(long)]
        single: bool,
        #[arg(long)]
        z_max: Option<usize>,
        #[arg(long)]
        x_max: Option<usize>,
    },
    /// Bell pairs between D_t and D_{t+1}.
    BellSim {
        #[command(flatten)]
        sim: SimArgs,
        #[arg(long, value_enum, default_value_t = Seam::Blue)]
        seam: Seam,
    },
    /// Lattice-surgery CNOT between two D_t blocks.
    CnotSim {
        #[command(flatten)]
        sim: SimArgs,
    },
    /// Expansion of D_t into D_{t+1}.
    ExpandSim {
        #[command(flatten)]
        sim: SimArgs,
    },
    /// Fuse D_t into T_t and revert, repeatedly.
    FuseSim {
        #[command(flatten)]
        sim: SimArgs,
        #[arg(long, default_value_t = 2)]
        rounds: usize,
    },
    /// Decode a Z-error syndrome of T_t.
    Decode {
        #[command(flatten)]
        common: Common,
        /// Hex type-F syndrome, one per bilayer.
        #[arg(long, value_delimiter = ',', conflicts_with = "error")]
        type_f: Vec<String>,
        /// Hex type-B bits.
        #[arg(long, requires = "type_f", conflicts_with = "error")]
        type_b: Option<String>,
        /// Error as an {I,Z} string or comma-separated qubit ids.
        #[arg(long)]
        error: Option<String>,
    },
    /// Monte Carlo logical error rate.
    Mc {
        #[command(flatten)]
        common: Common,
        /// One rate or a comma-separated grid.
        #[arg(long, value_delimiter = ',', default_value = "0.01")]
        p: Vec<f64>,
        #[arg(long, default_value_t = 100_000)]
        shots: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Exact and Monte Carlo rates over a grid of orders and rates.
    Mlsweep {
        /// Orders, comma-separated.
        #[arg(long, value_delimiter = ',', default_value = "1,2")]
        t: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        p: Vec<f64>,
        #[arg(long, default_value_t = 100_000)]
        shots: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Fusion::Edges)]
        fusion: Fusion,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// SVG drawing of T_t, or of D_t with --single.
    Render {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        single: bool,
    },
}

fn json<T: Serialize>(v: &T) -> Result<String, CliError> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn table<T: Serialize>(rows: &[T], format: Format) -> Result<String, CliError> {
    match format {
        Format::Csv => chaincode::to_csv(rows),
        Format::Json => json(&rows),
        Format::Svg => Err(CliError::Invalid("tables are written as csv or json".into())),
    }
}

fn run(cmd: Cmd) -> Result<(String, Option<PathBuf>), CliError> {
    Ok(match cmd {
        Cmd::Build { common, format } => {
            let text = match format {
                Format::Json => chaincode::cmd_build(common.t, common.fusion.into())?,
                Format::Svg => chaincode::cmd_render(common.t, common.fusion.into(), false)?,
                Format::Csv => return Err(CliError::Invalid("build writes json or svg".into())),
            };
            (text, common.out)
        }
        Cmd::Verify {
            common,
            single,
            z_max,
            x_max,
        } => (
            chaincode::cmd_verify(common.t, common.fusion.into(), single, (z_max, x_max))?,
            common.out,
        ),
        Cmd::BellSim { sim, seam } => (
            json(&sims::bell_sim(sim.common.t, seam.into(), sim.shots, sim.seed)?)?,
            sim.common.out,
        ),
        Cmd::CnotSim { sim } => (json(&sims::cnot_sim(sim.common.t, sim.shots, sim.seed)?)?, sim.common.out),
        Cmd::ExpandSim { sim } => (json(&sims::expand_sim(sim.common.t, sim.shots, sim.seed)?)?, sim.common.out),
        Cmd::FuseSim { sim, rounds } => (
            json(&sims::fuse_sim(sim.common.t, sim.common.fusion.into(), rounds, sim.shots, sim.seed)?)?,
            sim.common.out,
        ),
        Cmd::Decode {
            common,
            type_f,
            type_b,
            error,
        } => {
            let input = match (&error, &type_b) {
                (Some(e), _) => DecodeInput::Error(e),
                (None, Some(b)) => DecodeInput::Syndrome { type_f: &type_f, type_b: b },
                (None, None) => return Err(CliError::Invalid("give --error or --type-f with --type-b".into())),
            };
            (chaincode::cmd_decode(common.t, common.fusion.into(), input)?, common.out)
        }
        Cmd::Mc {
            common,
            p,
            shots,
            seed,
            format,
        } => {
            let rows = p
                .iter()
                .map(|&p| {
                    chaincode::run_mc(&McConfig {
                        t: common.t,
                        p,
                        shots,
                        seed,
                        fusion: common.fusion.into(),
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            (table(&rows, format)?, common.out)
        }
        Cmd::Mlsweep {
            t,
            p,
            shots,
            seed,
            fusion,
            out,
            format,
        } => {
            let ps = if p.is_empty() { DEFAULT_P_GRID.to_vec() } else { p };
            (table(&chaincode::ml_sweep(&t, &ps, shots, seed, fusion.into())?, format)?, out)
        }
        Cmd::Render { common, single } => (chaincode::cmd_render(common.t, common.fusion.into(), single)?, common.out),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(cli.cmd).and_then(|(text, out)| match out {
        Some(path) => std::fs::write(&path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("chaincode: {e}");
            ExitCode::FAILURE
        }
    }
}
