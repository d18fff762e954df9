//! Command-line flags.

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

/// Lambert-W step potential: potential shapes, reflection sweeps,
/// wavefunctions and the verification suite.
///
/// Units: only 2m/ħ² enters. The defaults m = 0.5, ħ = 1 make it 1, so
/// energies and squared wave numbers coincide.
#[derive(Debug, Parser)]
#[command(name = "lambert-step", version)]
pub struct Cli {
    /// Particle mass.
    #[arg(long, global = true, default_value_t = 0.5)]
    pub mass: f64,
    /// Reduced Planck constant.
    #[arg(long, global = true, default_value_t = 1.0)]
    pub hbar: f64,
    /// Worker threads for sweeps; output order never depends on it.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate a barrier on a uniform grid: `x,V` (plus `z` for Lambert kinds).
    Potential(PotentialArgs),
    /// Reflection coefficient sweeps, optionally against the oracle and the
    /// step and tanh barriers.
    Reflect(ReflectArgs),
    /// Exact wavefunction `c1·u1 + c2·u2` on a grid.
    Wavefunction(WavefunctionArgs),
    /// Run the acceptance checks and emit a JSON report.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PotentialKind {
    Lambert,
    Step,
    Tanh,
    Generalized,
}

#[derive(Debug, Clone, Args)]
pub struct PotentialArgs {
    #[arg(long, value_enum)]
    pub kind: PotentialKind,
    #[arg(long, default_value_t = 1.0)]
    pub v0: f64,
    /// Width of the Lambert kinds; a comma list writes one file per value.
    #[arg(long, value_delimiter = ',', default_value = "1")]
    pub sigma: Vec<f64>,
    /// Width of the tanh barrier; a comma list writes one file per value.
    #[arg(long, value_delimiter = ',', default_value = "1")]
    pub d: Vec<f64>,
    /// `1/(1+z)` coefficient of the generalized barrier.
    #[arg(long, default_value_t = 1.0)]
    pub v1: f64,
    /// `1/(1+z)³` coefficient of the generalized barrier; the `1/(1+z)²`
    /// coefficient is derived from it.
    #[arg(long, default_value_t = 0.0)]
    pub v3: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub x0: f64,
    #[arg(long, default_value_t = -10.0, allow_hyphen_values = true)]
    pub xmin: f64,
    #[arg(long, default_value_t = 10.0, allow_hyphen_values = true)]
    pub xmax: f64,
    #[arg(long, default_value_t = 1000)]
    pub n: usize,
    /// Output file; stdout when absent. With several widths the value is
    /// used as a stem: `out.csv` becomes `out_sigma1.csv`, `out_sigma2.csv`.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReflectMethod {
    Closed,
    Oracle,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Comparison {
    Step,
    Tanh,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Sweep {
    /// Vary E over `[emin, emax]` at fixed σ.
    Energy,
    /// Vary σ over `[sigma-min, sigma-max]` at fixed `--energy`.
    Sigma,
}

#[derive(Debug, Clone, Args)]
pub struct ReflectArgs {
    #[arg(long, default_value_t = 1.0)]
    pub v0: f64,
    #[arg(long, default_value_t = 1.0)]
    pub sigma: f64,
    #[arg(long, default_value_t = 1.01)]
    pub emin: f64,
    #[arg(long, default_value_t = 4.0)]
    pub emax: f64,
    #[arg(long, default_value_t = 200)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = ReflectMethod::Closed)]
    pub method: ReflectMethod,
    #[arg(long, value_enum, value_delimiter = ',')]
    pub compare: Vec<Comparison>,
    /// Tanh width; defaults to the Lambert σ of each row.
    #[arg(long)]
    pub d: Option<f64>,
    #[arg(long, value_enum, default_value_t = Sweep::Energy)]
    pub sweep: Sweep,
    /// Energy of a σ sweep.
    #[arg(long, default_value_t = 1.5)]
    pub energy: f64,
    #[arg(long, default_value_t = 0.5)]
    pub sigma_min: f64,
    #[arg(long, default_value_t = 12.0)]
    pub sigma_max: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl Default for ReflectArgs {
    fn default() -> Self {
        ReflectArgs {
            v0: 1.0,
            sigma: 1.0,
            emin: 1.01,
            emax: 4.0,
            n: 200,
            method: ReflectMethod::Closed,
            compare: Vec::new(),
            d: None,
            sweep: Sweep::Energy,
            energy: 1.5,
            sigma_min: 0.5,
            sigma_max: 12.0,
            out: None,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct WavefunctionArgs {
    #[arg(long)]
    pub e: f64,
    #[arg(long, default_value_t = 1.0)]
    pub v0: f64,
    #[arg(long, default_value_t = 1.0)]
    pub sigma: f64,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub c1_re: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub c1_im: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub c2_re: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub c2_im: f64,
    #[arg(long, default_value_t = -20.0, allow_hyphen_values = true)]
    pub xmin: f64,
    #[arg(long, default_value_t = 20.0, allow_hyphen_values = true)]
    pub xmax: f64,
    #[arg(long, default_value_t = 1000)]
    pub n: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Level {
    /// Reduced grids.
    Quick,
    Full,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Level::Quick)]
    pub level: Level,
    /// JSON report path; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}
