//! Reference computations shared by the integration tests. They avoid the
//! library's integration engines so that agreement is meaningful.
#![allow(dead_code)]

pub mod bessel_tables;

use std::f64::consts::PI;

use isobisp::quadrature::{GaussLegendre, TailBound};
use isobisp::special::jn;
use isobisp::transforms::FnTriangle;

/// Composite Gauss-Legendre on `[a, b]` with equal panels.
pub fn composite(f: impl Fn(f64) -> f64, a: f64, b: f64, panels: usize, order: usize) -> f64 {
    let rule = GaussLegendre::new(order);
    let h = (b - a) / panels as f64;
    (0..panels).map(|k| rule.integrate(a + k as f64 * h, a + (k + 1) as f64 * h, &f)).sum()
}

/// `int_0^inf J0(ρ1 t) Jl(ρ2 t) Jl(ρ3 t) t dt` for an interior triangle.
///
/// The integral converges only conditionally, so it is damped by
/// `exp(-(ε t)²)` and the damped values at `ε² = ε0², ε0²/2, ...` are
/// extrapolated to `ε = 0` with Richardson's scheme in `ε²`. The starting
/// `ε0` is a fraction of the slowest beat frequency of the three Bessel
/// factors so the damping never reaches an unresolved oscillation.
pub fn triple_bessel_oracle(rho1: f64, rho2: f64, rho3: f64, l: u32) -> f64 {
    const LEVELS: usize = 7;
    let gap = (rho1 + rho2 - rho3).min(rho1 + rho3 - rho2).min(rho2 + rho3 - rho1);
    assert!(gap > 0.0, "oracle needs an interior triangle");
    let eps0 = 0.15 * gap;
    let rho_max = rho1.max(rho2).max(rho3);
    let damped = |eps: f64| {
        let end = 7.0 / eps;
        let panels = (end * rho_max / 0.5).ceil() as usize;
        composite(
            |t| jn(0, rho1 * t) * jn(l, rho2 * t) * jn(l, rho3 * t) * t * (-(eps * t) * (eps * t)).exp(),
            0.0,
            end,
            panels,
            16,
        )
    };
    let mut table: Vec<f64> = (0..LEVELS).map(|k| damped(eps0 * 2f64.powf(-(k as f64) / 2.0))).collect();
    for m in 1..LEVELS {
        let factor = 2f64.powi(m as i32);
        table = table.windows(2).map(|w| (factor * w[1] - w[0]) / (factor - 1.0)).collect();
    }
    table[0]
}

/// Separable bispectrum with Gaussian damping in each wavenumber,
/// `S3 = exp(-α (ρ1² + ρ2² + ρ3²))`.
pub fn gaussian_bispectrum(alpha: f64) -> FnTriangle<impl Fn(f64, f64, f64) -> f64 + Sync + Copy> {
    FnTriangle {
        f: move |a: f64, b: f64, t: f64| {
            let c2 = a * a + b * b - 2.0 * a * b * t.cos();
            (-alpha * (c2 + a * a + b * b)).exp()
        },
        tail: TailBound::Gaussian { scale: 1.0 / alpha.sqrt() },
    }
}

/// The third-order covariance of [`gaussian_bispectrum`], from the 4-D
/// Fourier integral `int exp(i(x2·ω2 + x3·ω3)) S3 dω2 dω3` in closed form:
/// `π² / (3α²) · exp(-(r1² + r2² + r3²) / (12α))`.
pub fn gaussian_cov3(alpha: f64, r2: f64, r3: f64, phi: f64) -> f64 {
    let r1sq = r2 * r2 + r3 * r3 - 2.0 * r2 * r3 * phi.cos();
    PI * PI / (3.0 * alpha * alpha) * (-(r1sq + r2 * r2 + r3 * r3) / (12.0 * alpha)).exp()
}

/// The same covariance as a function argument.
pub fn gaussian_cov3_fn(alpha: f64) -> FnTriangle<impl Fn(f64, f64, f64) -> f64 + Sync + Copy> {
    FnTriangle {
        f: move |a: f64, b: f64, t: f64| gaussian_cov3(alpha, a, b, t),
        tail: TailBound::Gaussian { scale: (12.0 * alpha).sqrt() },
    }
}

/// Third-order covariance of the Laplacian field with σ = c = 1 at a few
/// triangles `(r2, r3, φ)`, from the independent spatial representation
/// `2π ∫ K0(|y|) K0(|y - x2|) K0(|y - x3|) dy` over the plane, evaluated with
/// scipy in polar coordinates around each singular point.
pub const LAPLACIAN_COV3: [(f64, f64, f64, f64); 3] = [
    (1.0, 1.0, PI / 3.0, 5.383_526_899_439_39),
    (0.5, 1.5, PI / 2.0, 3.754_575_444_534_452_4),
    (2.0, 2.0, 2.0 * PI / 3.0, 0.414_770_977_616_205_2),
];

/// Deterministic generator for picking test cases.
pub fn cases(seed: u64) -> rand_chacha::ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}
