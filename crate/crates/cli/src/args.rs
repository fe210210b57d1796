use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use filament_sim::Preset;

/// Largest hierarchy depth the command line accepts.
pub const HARD_DEPTH_CAP: usize = 8;

#[derive(Debug, Parser)]
#[command(
    name = "filament",
    version,
    about = "Symbolic curve-flow hierarchies and planar filament simulation"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the planar filament fields V0..Vn and their mKdV characteristics.
    Hierarchy {
        /// Highest level to compute.
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(0..=HARD_DEPTH_CAP as i64))]
        n: u8,
        /// Refuse levels above this bound (at most 8).
        #[arg(long, default_value_t = filament_core::hamiltonian::DEFAULT_DEPTH_LIMIT as u8,
              value_parser = clap::value_parser!(u8).range(0..=HARD_DEPTH_CAP as i64))]
        depth_cap: u8,
    },
    /// Run the identity suite: commutators, Jacobi, closure, homomorphism, bi-Hamiltonian pair, involution.
    Check {
        /// Seed of the random test cases.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random cases per law.
        #[arg(long, default_value_t = 20)]
        cases: usize,
    },
    /// Variational derivative of a Lagrangian density.
    Euler {
        /// Polynomial in k, k', k'', ..., k^(m) and G.
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Antiderivative of an exact polynomial (exit 3 with the Euler witness otherwise).
    Integrate {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Lie bracket of two variation fields written "f | g" (meaning fT + gN).
    Bracket {
        #[arg(allow_hyphen_values = true)]
        v: String,
        #[arg(allow_hyphen_values = true)]
        w: String,
    },
    /// Integrate the planar filament flow (or a higher flow) and write artifacts.
    Simulate(SimulateArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(Debug, clap::Args)]
pub struct SimulateArgs {
    /// Named initial condition and default grid.
    #[arg(long, default_value = "soliton", value_parser = parse_preset)]
    pub preset: Preset,
    /// Number of grid nodes (even, at least 16).
    #[arg(long = "N", value_parser = parse_nodes)]
    pub nodes: Option<usize>,
    /// Curve length.
    #[arg(long = "L", value_parser = parse_positive)]
    pub length: Option<f64>,
    /// Time step.
    #[arg(long, value_parser = parse_positive)]
    pub dt: Option<f64>,
    /// Final time (a whole number of steps).
    #[arg(long = "T", value_parser = parse_positive)]
    pub t_final: Option<f64>,
    /// Seed of the random-smooth initial condition.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Hierarchy level of the flow (0 is the planar filament flow).
    #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=HARD_DEPTH_CAP as i64))]
    pub n: u8,
    /// Number of recorded intervals.
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u16).range(1..))]
    pub frames: u16,
    /// Output directory.
    #[arg(long, default_value = "filament-run")]
    pub out: PathBuf,
    /// Trajectory format written next to manifest.json.
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

fn parse_preset(s: &str) -> Result<Preset, String> {
    s.parse()
}

fn parse_nodes(s: &str) -> Result<usize, String> {
    let n: usize = s.parse().map_err(|e| format!("{e}"))?;
    if n < filament_sim::state::MIN_NODES || n % 2 == 1 {
        return Err(format!(
            "N must be even and at least {}",
            filament_sim::state::MIN_NODES
        ));
    }
    Ok(n)
}

fn parse_positive(s: &str) -> Result<f64, String> {
    let x: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if !(x > 0.0 && x.is_finite()) {
        return Err("must be positive and finite".into());
    }
    Ok(x)
}
