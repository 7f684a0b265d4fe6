//! The Laplacian field `(c² - Δ) X = σ dW`: Matérn spectrum and covariance,
//! the product-form bispectrum, and its third-order covariance as a Fourier
//! series in the included angle. A separable Gaussian model with closed
//! forms in every direction serves as an exact test case.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geometry::third_side_unchecked;
use crate::quadrature::{GaussLegendre, TailBound};
use crate::special::{bessel_j_seq, x_k1};
use crate::transforms::{cosine_series, Bispectrum, IsotropicCov2, QuadratureSpec, RadialSpectrum, ThirdCov};

/// Noise scale `σ` and inverse correlation length `c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaplacianParams {
    pub sigma: f64,
    pub c: f64,
}

impl LaplacianParams {
    pub fn new(sigma: f64, c: f64) -> Result<Self> {
        if !(sigma > 0.0 && sigma.is_finite() && c > 0.0 && c.is_finite()) {
            return Err(Error::Config(format!("sigma = {sigma} and c = {c} must be positive")));
        }
        Ok(Self { sigma, c })
    }
}

/// `f(ρ) = σ² / (2π (ρ² + c²)²)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaternSpectrum(pub LaplacianParams);

pub fn matern_spectrum(p: LaplacianParams) -> MaternSpectrum {
    MaternSpectrum(p)
}

impl RadialSpectrum for MaternSpectrum {
    fn density(&self, rho: f64) -> f64 {
        let LaplacianParams { sigma, c } = self.0;
        let d = rho * rho + c * c;
        sigma * sigma / (2.0 * PI * d * d)
    }
    fn tail(&self) -> TailBound {
        TailBound::Algebraic { exponent: 4.0, scale: self.0.c }
    }
}

/// `C2(r) = σ² r K1(c r) / (2c)`, continuous at `r = 0` with value `σ²/(2c²)`.
pub fn matern_cov2(p: LaplacianParams, r: f64) -> f64 {
    let LaplacianParams { sigma, c } = p;
    sigma * sigma * x_k1(c * r) / (2.0 * c * c)
}

/// [`matern_cov2`] as a function argument for the transforms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaternCov2(pub LaplacianParams);

impl IsotropicCov2 for MaternCov2 {
    fn value(&self, r: f64) -> f64 {
        matern_cov2(self.0, r)
    }
    fn tail(&self) -> TailBound {
        TailBound::Exponential { scale: 1.0 / self.0.c }
    }
}

/// `S3(ρ1, ρ2, ρ3) = prod σ² / (ρk² + c²)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaplacianBispectrum(pub LaplacianParams);

pub fn laplacian_bispectrum(p: LaplacianParams) -> LaplacianBispectrum {
    LaplacianBispectrum(p)
}

impl LaplacianBispectrum {
    /// Value on three wavenumber magnitudes.
    pub fn on_sides(&self, rho1: f64, rho2: f64, rho3: f64) -> f64 {
        let LaplacianParams { sigma, c } = self.0;
        let s2 = sigma * sigma;
        let c2 = c * c;
        s2 * s2 * s2 / ((rho1 * rho1 + c2) * (rho2 * rho2 + c2) * (rho3 * rho3 + c2))
    }
}

impl Bispectrum for LaplacianBispectrum {
    fn value(&self, rho2: f64, rho3: f64, eta: f64) -> f64 {
        self.on_sides(third_side_unchecked(rho2, rho3, eta), rho2, rho3)
    }
    fn tail(&self) -> TailBound {
        TailBound::Algebraic { exponent: 2.0, scale: self.0.c }
    }
}

/// Separable Gaussian model with closed forms on both sides of each pair:
///
/// - `f(ρ) = exp(-αρ²)` and `C2(r) = (π/α) exp(-r²/(4α))`
/// - `S3 = exp(-α(ρ1² + ρ2² + ρ3²))` and
///   `C3 = π²/(3α²) exp(-(r1² + r2² + r3²)/(12α))`
///
/// Not a realizable field model (a Gaussian field has zero bispectrum); it
/// exists to check transforms against exact answers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianModel {
    pub alpha: f64,
}

impl GaussianModel {
    pub fn new(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(Error::Config(format!("alpha = {alpha} must be positive")));
        }
        Ok(Self { alpha })
    }

    pub fn cov2(&self, r: f64) -> f64 {
        PI / self.alpha * (-r * r / (4.0 * self.alpha)).exp()
    }

    pub fn bispectrum_on_sides(&self, rho1: f64, rho2: f64, rho3: f64) -> f64 {
        (-self.alpha * (rho1 * rho1 + rho2 * rho2 + rho3 * rho3)).exp()
    }

    pub fn cov3_on_sides(&self, r1: f64, r2: f64, r3: f64) -> f64 {
        let a = self.alpha;
        PI * PI / (3.0 * a * a) * (-(r1 * r1 + r2 * r2 + r3 * r3) / (12.0 * a)).exp()
    }

    pub fn spectrum(self) -> GaussianSpectrum {
        GaussianSpectrum(self)
    }
    pub fn covariance(self) -> GaussianCov2 {
        GaussianCov2(self)
    }
    pub fn bispectrum(self) -> GaussianBispectrum {
        GaussianBispectrum(self)
    }
    pub fn third_cov(self) -> GaussianCov3 {
        GaussianCov3(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianSpectrum(pub GaussianModel);

impl RadialSpectrum for GaussianSpectrum {
    fn density(&self, rho: f64) -> f64 {
        (-self.0.alpha * rho * rho).exp()
    }
    fn tail(&self) -> TailBound {
        TailBound::Gaussian { scale: 1.0 / self.0.alpha.sqrt() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianCov2(pub GaussianModel);

impl IsotropicCov2 for GaussianCov2 {
    fn value(&self, r: f64) -> f64 {
        self.0.cov2(r)
    }
    fn tail(&self) -> TailBound {
        TailBound::Gaussian { scale: 2.0 * self.0.alpha.sqrt() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianBispectrum(pub GaussianModel);

impl Bispectrum for GaussianBispectrum {
    fn value(&self, rho2: f64, rho3: f64, eta: f64) -> f64 {
        self.0.bispectrum_on_sides(third_side_unchecked(rho2, rho3, eta), rho2, rho3)
    }
    fn tail(&self) -> TailBound {
        TailBound::Gaussian { scale: 1.0 / self.0.alpha.sqrt() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianCov3(pub GaussianModel);

impl ThirdCov for GaussianCov3 {
    fn value(&self, r2: f64, r3: f64, phi: f64) -> f64 {
        self.0.cov3_on_sides(third_side_unchecked(r2, r3, phi), r2, r3)
    }
    fn tail(&self) -> TailBound {
        TailBound::Gaussian { scale: (12.0 * self.0.alpha).sqrt() }
    }
}

/// Arguments of `int_0^π cos(lη) / (b + a cos η) dη`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngularIntegralArgs {
    pub a: f64,
    pub b: f64,
    pub l: u32,
}

impl AngularIntegralArgs {
    pub fn new(a: f64, b: f64, l: u32) -> Result<Self> {
        if !(a.abs() < b.abs()) {
            return Err(Error::Domain(format!("angular integral needs |a| < |b|, got a = {a}, b = {b}")));
        }
        Ok(Self { a, b, l })
    }
}

/// `int_0^π cos(lη) / (b + a cos η) dη = π/√(b²-a²) · q^l` with
/// `q = -a / (√(b²-a²) + b)`; this ratio form has no cancellation when
/// `|a| << b`. Negative `b` is handled by flipping both signs.
pub fn angular_integral_closed(args: AngularIntegralArgs) -> Result<f64> {
    let AngularIntegralArgs { a, b, l } = AngularIntegralArgs::new(args.a, args.b, args.l)?;
    let (a, b, sign) = if b < 0.0 { (-a, -b, -1.0) } else { (a, b, 1.0) };
    let root = ((b - a) * (b + a)).sqrt();
    let q = -a / (root + b);
    Ok(sign * PI / root * q.powi(l as i32))
}

/// Radial grid shared by the Fourier-coefficient quadrature, covering
/// `[0, 2P]` with the first `inner` nodes on `[0, P]`.
struct Grid {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    inner: usize,
}

fn grid(cutoff: f64, width: f64) -> Grid {
    let panels = (cutoff / width).ceil().max(1.0) as usize;
    let breaks: Vec<f64> = (0..=2 * panels).map(|k| cutoff * k as f64 / panels as f64).collect();
    let rule = GaussLegendre::new(8);
    let mut nodes = Vec::new();
    let mut weights = Vec::new();
    rule.composite(&breaks, &mut nodes, &mut weights);
    Grid { nodes, weights, inner: panels * rule.len() }
}

/// Fourier coefficients `f_0, ..., f_L` of the third-order covariance in the
/// included angle `φ` at sides `(r2, r3)`:
///
/// `f_l = 4π ∫∫ A_l(ρ2, ρ3) Jl(ρ2 r2) Jl(ρ3 r3) σ⁶ ρ2 ρ3 / ((ρ2²+c²)(ρ3²+c²)) dρ2 dρ3`
///
/// where `A_l` is the closed angular integral with `a = -2ρ2ρ3` and
/// `b = ρ2² + ρ3² + c²`. When `lmax` is `None` the truncation rule of `q`
/// at the radial cutoff sets it.
///
/// The cutoff is verified by doubling: both grids share nodes and the
/// coefficients must agree within `rel_tol` in the L2 norm over the angle.
pub fn fourier_coeffs(
    p: LaplacianParams,
    r2: f64,
    r3: f64,
    lmax: Option<usize>,
    q: &QuadratureSpec,
) -> Result<Vec<f64>> {
    q.validate()?;
    for r in [r2, r3] {
        if !(r > 0.0 && r.is_finite()) {
            return Err(Error::Domain(format!("sides must be positive, got {r}")));
        }
    }
    let LaplacianParams { sigma, c } = p;
    let tail = laplacian_bispectrum(p).tail();
    let cutoff = q.radial_cutoff.unwrap_or_else(|| tail.cutoff(q.rel_tol, 2));
    let structure = c / q.panels_per_unit as f64;
    let g2 = grid(cutoff, structure.min(PI / r2));
    let g3 = grid(cutoff, structure.min(PI / r3));
    let lmax = lmax.unwrap_or_else(|| q.truncation.order(2.0 * cutoff * r2.max(r3)));

    let bessel_table = |g: &Grid, r: f64| -> Vec<Vec<f64>> {
        let mut seq = Vec::new();
        g.nodes
            .iter()
            .map(|&x| {
                bessel_j_seq(lmax, x * r, &mut seq);
                seq.clone()
            })
            .collect()
    };
    let j2 = bessel_table(&g2, r2);
    let j3 = bessel_table(&g3, r3);
    let s6 = sigma.powi(6);
    let c2 = c * c;

    let mut total = vec![0.0; lmax + 1];
    let mut inner = vec![0.0; lmax + 1];
    let mut row = vec![0.0; lmax + 1];
    for (i, (&x2, &w2)) in g2.nodes.iter().zip(&g2.weights).enumerate() {
        row.iter_mut().for_each(|v| *v = 0.0);
        let mut row_inner_cols = vec![0.0; lmax + 1];
        for (j, (&x3, &w3)) in g3.nodes.iter().zip(&g3.weights).enumerate() {
            let a = -2.0 * x2 * x3;
            let b = x2 * x2 + x3 * x3 + c2;
            let root = ((b - a) * (b + a)).sqrt();
            let ratio = -a / (root + b);
            let weight = w2 * w3 * x2 * x3 * s6 / ((x2 * x2 + c2) * (x3 * x3 + c2)) * PI / root;
            let mut power = weight;
            let (ja, jb) = (&j2[i], &j3[j]);
            let into_inner = j < g3.inner;
            for l in 0..=lmax {
                let v = power * ja[l] * jb[l];
                row[l] += v;
                if into_inner {
                    row_inner_cols[l] += v;
                }
                power *= ratio;
                if power == 0.0 {
                    break;
                }
            }
        }
        for l in 0..=lmax {
            total[l] += row[l];
            if i < g2.inner {
                inner[l] += row_inner_cols[l];
            }
        }
    }
    for v in total.iter_mut().chain(inner.iter_mut()) {
        *v *= 4.0 * PI;
    }
    // compare in the L2 norm over φ (Parseval): high orders that only the
    // larger grid resolves largely cancel in the function itself
    let norm = |v: &[f64]| (v[0] * v[0] + 2.0 * v[1..].iter().map(|x| x * x).sum::<f64>()).sqrt();
    let drift: Vec<f64> = total.iter().zip(&inner).map(|(a, b)| a - b).collect();
    let (magnitude, drift) = (norm(&total), norm(&drift));
    if !(drift <= q.rel_tol * magnitude + 1e3 * f64::EPSILON * magnitude) {
        return Err(Error::Convergence(format!(
            "doubling the radial cutoff {cutoff} moved the Fourier coefficients by {drift:e} (scale {magnitude:e})"
        )));
    }
    Ok(total)
}

/// Single Fourier coefficient `f_l(r2, r3)`; see [`fourier_coeffs`].
pub fn fourier_coeff(p: LaplacianParams, l: usize, r2: f64, r3: f64, q: &QuadratureSpec) -> Result<f64> {
    let coeffs = fourier_coeffs(p, r2, r3, Some(l), q)?;
    Ok(coeffs[l])
}

/// Partial Fourier sum `f_0 + 2 sum_{l=1}^{L} f_l cos(lφ)`.
pub fn cov3_series(p: LaplacianParams, r2: f64, r3: f64, phi: f64, l: usize, q: &QuadratureSpec) -> Result<f64> {
    let coeffs = fourier_coeffs(p, r2, r3, Some(l), q)?;
    Ok(cosine_series(&coeffs, phi))
}
