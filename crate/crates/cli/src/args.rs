use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "wgeom", version, about = "Maximal product-state overlap of multi-qubit pure states")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// P_max of one state, by closed form, numerical oracle, or both.
    Pmax(PmaxArgs),
    /// CSV of closed form against oracle over a parameter range.
    Sweep(SweepArgs),
    /// Print the product state nearest to a state.
    Nearest(NearestArgs),
    /// Run the self-check suite.
    Verify(VerifyArgs),
}

/// Exactly one state source.
#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct StateInput {
    /// One-parameter W state: n qubits, last coefficient q.
    #[arg(long, num_args = 2, value_names = ["N", "Q"], allow_negative_numbers = true)]
    pub wn: Option<Vec<f64>>,
    /// Four-qubit W state a|1000⟩ + b|0100⟩ + q|0010⟩ + q|0001⟩.
    #[arg(long, num_args = 2, value_names = ["A", "B"], allow_negative_numbers = true)]
    pub w4: Option<Vec<f64>>,
    /// Three-qubit W state; coefficients are rescaled to unit norm.
    #[arg(long, num_args = 3, value_names = ["A1", "A2", "A3"], allow_negative_numbers = true)]
    pub w3: Option<Vec<f64>>,
    /// State file: one `bitstring real [imag]` per line, `#` comments.
    #[arg(long, value_name = "FILE")]
    pub state: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodChoice {
    Closed,
    Oracle,
    Both,
}

#[derive(Debug, Clone, Args)]
pub struct OracleArgs {
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Random starts of the alternating oracle.
    #[arg(long, default_value_t = 32)]
    pub starts: usize,
}

#[derive(Debug, Clone, Args)]
pub struct PmaxArgs {
    #[command(flatten)]
    pub input: StateInput,
    /// `both` falls back to `oracle` when no closed form applies.
    #[arg(long, value_enum, default_value_t = MethodChoice::Both)]
    pub method: MethodChoice,
    /// Print the nearest product state.
    #[arg(long)]
    pub nearest: bool,
    /// Largest accepted |closed − oracle|.
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
    #[command(flatten)]
    pub oracle: OracleArgs,
}

#[derive(Debug, Clone, Args)]
pub struct NearestArgs {
    #[command(flatten)]
    pub input: StateInput,
    /// `both` prefers the closed-form state.
    #[arg(long, value_enum, default_value_t = MethodChoice::Both)]
    pub method: MethodChoice,
    /// Relative phase of the closed-form one-parameter nearest state.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub phi: f64,
    #[command(flatten)]
    pub oracle: OracleArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// a(|10…0⟩ + …) + q|0…01⟩ over q.
    Wn,
    /// a|1000⟩ + b|0100⟩ + q(|0010⟩ + |0001⟩) over (a, b).
    W4,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepMethod {
    Closed,
    Oracle,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Qubit count for the wn family.
    #[arg(long, default_value_t = 4)]
    pub n: usize,
    #[arg(long, default_value_t = 0.0)]
    pub q_min: f64,
    #[arg(long, default_value_t = 0.99)]
    pub q_max: f64,
    #[arg(long, default_value_t = 0.0)]
    pub a_min: f64,
    #[arg(long, default_value_t = 1.0)]
    pub a_max: f64,
    #[arg(long, default_value_t = 0.0)]
    pub b_min: f64,
    #[arg(long, default_value_t = 1.0)]
    pub b_max: f64,
    /// Points per axis, ends included.
    #[arg(long)]
    pub steps: Option<usize>,
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [SweepMethod::Closed, SweepMethod::Oracle])]
    pub methods: Vec<SweepMethod>,
    /// Output file; standard output when absent.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub oracle: OracleArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Level {
    Quick,
    Full,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Level::Quick)]
    pub level: Level,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
}
