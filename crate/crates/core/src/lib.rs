//! Spectral analysis of homogeneous isotropic random fields on the plane.
//!
//! Second order: the Hankel pair between a radial spectral density and the
//! covariance. Third order: the transform pair between the bispectrum and
//! the third-order covariance, both parametrized by a triangle. The Laplacian
//! field (Matérn covariance, product bispectrum) serves as the worked model,
//! and a spectral simulator produces Gaussian samples for Monte-Carlo checks.
//!
//! ```
//! use isobisp::models::{matern_cov2, matern_spectrum, LaplacianParams};
//! use isobisp::transforms::{cov2_from_spectrum, QuadratureSpec};
//!
//! let p = LaplacianParams::new(1.0, 1.0).unwrap();
//! let q = QuadratureSpec::default();
//! let c = cov2_from_spectrum(&matern_spectrum(p), 1.0, &q).unwrap();
//! assert!((c - matern_cov2(p, 1.0)).abs() < 1e-6 * c);
//! ```

pub mod error;
pub mod geometry;
pub mod kernel;
pub mod models;
pub mod quadrature;
pub mod simulate;
pub mod special;
pub mod transforms;

pub use error::{Error, Result};
pub use geometry::{AngleParam, SideTriangle, Triangle, WaveTriangle};
pub use models::LaplacianParams;
pub use quadrature::TailBound;
pub use simulate::SimConfig;
pub use transforms::{Bispectrum, IsotropicCov2, QuadratureSpec, RadialSpectrum, ThirdCov};
