use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use crate::io::MatrixFormat;

#[derive(Debug, Parser)]
#[command(
    name = "formstab",
    version,
    about = "Random orthogonal matrices preserving a symmetric or skew-symmetric bilinear form"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate samples A with AᵀSA = S and AᵀA = I.
    Gen(GenArgs),
    /// Certify a matrix against a form; prints the certificate as JSON.
    Verify(VerifyArgs),
    /// Generate samples and print their moment summary as JSON.
    Stats(StatsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NamedForm {
    /// I_n (needs --n).
    Identity,
    /// [[0, I_n], [−I_n, 0]] of size 2n (needs --n).
    Symplectic,
    /// diag(I_p, −I_q) (needs --p and --q).
    Indefinite,
    /// diag(1, −1, −1, −1).
    Minkowski,
}

#[derive(Debug, Clone, Args)]
#[group(skip)]
#[command(group(ArgGroup::new("source").required(true).multiple(false).args(["form", "file"])))]
pub struct FormArgs {
    /// Built-in form.
    #[arg(long, value_enum)]
    pub form: Option<NamedForm>,
    /// Form matrix file (.mtx, .csv or .json).
    #[arg(long)]
    pub file: Option<PathBuf>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub q: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct ToleranceArgs {
    /// Residual budget per dimension: certificates require residuals ≤ gen_tol·N.
    #[arg(long, env = "FORMSTAB_GEN_TOL")]
    pub gen_tol: Option<f64>,
    /// Relative tolerance for classifying a form as symmetric or skew.
    #[arg(long, env = "FORMSTAB_SYM_TOL")]
    pub sym_tol: Option<f64>,
    /// Relative invertibility threshold.
    #[arg(long, env = "FORMSTAB_INV_TOL")]
    pub inv_tol: Option<f64>,
    /// Relative eigenvalue clustering tolerance.
    #[arg(long, env = "FORMSTAB_CLUSTER_TOL")]
    pub cluster_tol: Option<f64>,
    /// Determinant budget per dimension: ||det| − 1| ≤ det_tol·N.
    #[arg(long, env = "FORMSTAB_DET_TOL")]
    pub det_tol: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct GenArgs {
    #[command(flatten)]
    pub source: FormArgs,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1)]
    pub count: usize,
    #[arg(long, value_enum, default_value_t = MatrixFormat::Mm)]
    pub format: MatrixFormat,
    /// Directory for sample_NNNN files; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Attach a certificate to every sample and fail (exit 4) if any does not pass.
    #[arg(long)]
    pub verify: bool,
    #[command(flatten)]
    pub tolerances: ToleranceArgs,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub source: FormArgs,
    /// Matrix to certify.
    #[arg(long)]
    pub matrix: PathBuf,
    #[command(flatten)]
    pub tolerances: ToleranceArgs,
}

#[derive(Debug, Clone, Args)]
pub struct StatsArgs {
    #[command(flatten)]
    pub source: FormArgs,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1000)]
    pub count: usize,
    #[command(flatten)]
    pub tolerances: ToleranceArgs,
}
