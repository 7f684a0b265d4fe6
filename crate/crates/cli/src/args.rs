use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(name = "isobisp", version, about = "Spectral transforms and simulation for isotropic planar fields")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Covariance C2(r) from a radial spectral density.
    Spectrum2cov(Spectrum2Cov),
    /// Third-order covariance from a bispectrum on a triangle grid (r2; r3; phi).
    Bisp2cov3(Transform3),
    /// Bispectrum from a third-order covariance on a triangle grid (rho2; rho3; eta).
    Cov32bisp(Transform3),
    /// Monte-Carlo moments of simulated Gaussian fields.
    Simulate(Simulate),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    /// Matérn spectrum and covariance, product-form bispectrum.
    Laplacian,
    /// Separable Gaussian test pair, exact in every direction.
    Gaussian,
    /// The zero function.
    Zero,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct Source {
    /// Built-in model, used unless --input is given.
    #[arg(long, value_enum, default_value_t = Model::Laplacian)]
    pub model: Model,
    #[arg(long, default_value_t = 1.0)]
    pub sigma: f64,
    #[arg(long, default_value_t = 1.0)]
    pub c: f64,
    /// Width parameter of the gaussian model.
    #[arg(long, default_value_t = 0.3)]
    pub alpha: f64,
    /// Tabulated input: (x, value) or (side, side, angle, value) with a header row.
    #[arg(long, requires = "tail_exponent")]
    pub input: Option<PathBuf>,
    /// Algebraic decay exponent of the tabulated function.
    #[arg(long)]
    pub tail_exponent: Option<f64>,
    /// Length past which the declared decay holds.
    #[arg(long, default_value_t = 1.0)]
    pub tail_scale: f64,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct Quadrature {
    /// Target relative accuracy [default: 1e-6 second order, 1e-4 third order].
    #[arg(long)]
    pub rel_tol: Option<f64>,
    /// Radial integration cutoff; derived from the input's decay when omitted.
    #[arg(long = "rho-max", visible_alias = "r-max")]
    pub radial_cutoff: Option<f64>,
    /// Minimum angular nodes on [0, pi].
    #[arg(long, default_value_t = 64)]
    pub angular_nodes: usize,
    /// Radial panels per decay length.
    #[arg(long, default_value_t = 2)]
    pub panels_per_unit: u32,
    /// Fixed Bessel order for series evaluations instead of ceil(z) + 40.
    #[arg(long)]
    pub lmax: Option<usize>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct Spectrum2Cov {
    #[command(flatten)]
    pub source: Source,
    #[command(flatten)]
    pub quadrature: Quadrature,
    /// Distances: comma list of values or start:stop:count ranges.
    #[arg(long, default_value = "0:10:41")]
    pub grid: String,
    /// CSV output path; a manifest is written next to it. Stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct Transform3 {
    #[command(flatten)]
    pub source: Source,
    #[command(flatten)]
    pub quadrature: Quadrature,
    /// Triangle grid "sides; sides; angles", each an axis as in --grid of
    /// spectrum2cov. Repeat to append blocks.
    #[arg(long, required = true)]
    pub grid: Vec<String>,
    /// Also run the opposite transform on a series evaluation of the output
    /// and compare with the input at the grid points read as input
    /// coordinates.
    #[arg(long)]
    pub verify_roundtrip: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct Simulate {
    #[command(flatten)]
    pub source: Source,
    /// Largest simulated wavenumber.
    #[arg(long = "rho-max", default_value_t = 20.0)]
    pub rho_max: f64,
    /// Number of midpoint wavenumber nodes.
    #[arg(long, default_value_t = 200)]
    pub nodes: usize,
    /// Highest angular order; enough for the layout radius when omitted.
    #[arg(long)]
    pub lmax: Option<usize>,
    #[arg(long, default_value_t = 500)]
    pub realizations: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Distances at which to estimate the covariance.
    #[arg(long, default_value = "0.5,1,2")]
    pub grid: String,
    /// Triangle "r1,r2,r3" for the third-moment estimate; repeatable.
    #[arg(long = "triangle", default_values = ["1,1,1", "1.5,1,0.8", "2,1.5,1"])]
    pub triangles: Vec<String>,
    /// Congruent copies of each pair and triangle in the layout.
    #[arg(long, default_value_t = 16)]
    pub copies: usize,
    /// Radius of the disc holding all sample points.
    #[arg(long, default_value_t = 5.0)]
    pub radius: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}
