//! Spectral synthesis of homogeneous isotropic Gaussian fields on the plane
//! and Monte-Carlo estimators of their second- and third-order moments.
//!
//! A field is represented in polar coordinates as
//! `X(r, φ) = sum_l e^{ilφ} sum_j Jl(ρ_j r) Z_{l,j}` over wavenumber nodes
//! `ρ_j`, with `Z_{-l} = (-1)^l conj(Z_l)` so that `X` is real.

use std::collections::HashMap;
use std::f64::consts::PI;

use num_complex::Complex64;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::{SideTriangle, Triangle};
use crate::special::{bessel_j_seq, TRUNCATION_MARGIN};
use crate::transforms::RadialSpectrum;

/// Relative tolerance on side lengths when matching pairs and triangles.
pub const MATCH_TOLERANCE: f64 = 1e-6;

/// Discretization and sampling parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct SimConfig {
    /// `(ρ_j, w_j)` with `w_j ≈ ρ_j Δ_j`, strictly increasing in `ρ_j`.
    pub rho_nodes: Vec<(f64, f64)>,
    pub l_max: usize,
    pub n_realizations: usize,
    pub seed: u64,
}

impl SimConfig {
    /// Midpoint nodes on `[0, rho_cutoff]` with weights `ρ_j Δ`.
    pub fn midpoint(rho_cutoff: f64, n_nodes: usize, l_max: usize, n_realizations: usize, seed: u64) -> Result<Self> {
        if !(rho_cutoff > 0.0 && rho_cutoff.is_finite()) || n_nodes == 0 {
            return Err(Error::Config(format!(
                "need a positive cutoff and at least one node, got {rho_cutoff} and {n_nodes}"
            )));
        }
        let delta = rho_cutoff / n_nodes as f64;
        let rho_nodes = (0..n_nodes)
            .map(|j| {
                let rho = (j as f64 + 0.5) * delta;
                (rho, rho * delta)
            })
            .collect();
        let cfg = Self { rho_nodes, l_max, n_realizations, seed };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.rho_nodes.is_empty() || self.n_realizations == 0 {
            return Err(Error::Config("need at least one node and one realization".into()));
        }
        let mut prev = 0.0;
        for &(rho, w) in &self.rho_nodes {
            if !(rho > prev && w > 0.0 && rho.is_finite() && w.is_finite()) {
                return Err(Error::Config(format!(
                    "wavenumber nodes must be positive, increasing and carry positive weights (at {rho}, {w})"
                )));
            }
            prev = rho;
        }
        Ok(())
    }

    fn rho_max(&self) -> f64 {
        self.rho_nodes.last().map_or(0.0, |n| n.0)
    }

    /// Smallest series order that resolves all points within `radius`.
    pub fn required_l_max(&self, radius: f64) -> usize {
        (self.rho_max() * radius).ceil() as usize + TRUNCATION_MARGIN
    }
}

/// Complex amplitudes `Z_{l,j}` for `l = 0..=l_max`; negative orders follow
/// from the reality constraint.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralCoeffs {
    pub l_max: usize,
    pub n_nodes: usize,
    /// Row-major `[l][j]`.
    pub z: Vec<Complex64>,
}

impl SpectralCoeffs {
    pub fn get(&self, l: usize, j: usize) -> Complex64 {
        self.z[l * self.n_nodes + j]
    }

    /// Amplitude at a possibly negative order.
    pub fn get_signed(&self, l: i64, j: usize) -> Complex64 {
        let z = self.get(l.unsigned_abs() as usize, j);
        if l >= 0 {
            z
        } else if l % 2 == 0 {
            z.conj()
        } else {
            -z.conj()
        }
    }
}

/// Standard normal pair from one 128-bit block of the stream (Box-Muller).
fn normal_pair(rng: &mut ChaCha8Rng) -> (f64, f64) {
    const SCALE: f64 = 1.0 / (1u64 << 53) as f64;
    let u1 = ((rng.next_u64() >> 11) + 1) as f64 * SCALE;
    let u2 = (rng.next_u64() >> 11) as f64 * SCALE;
    let radius = (-2.0 * u1.ln()).sqrt();
    let (s, c) = (2.0 * PI * u2).sin_cos();
    (radius * c, radius * s)
}

/// Draws the amplitudes of one realization. The stream is selected by the
/// realization index and the position within it by `(l, j)`, so each draw
/// depends only on `(seed, realization, l, j)` and not on `l_max`.
pub fn draw_coeffs<S: RadialSpectrum + ?Sized>(f: &S, cfg: &SimConfig, realization: u64) -> SpectralCoeffs {
    let n = cfg.rho_nodes.len();
    let variances: Vec<f64> = cfg.rho_nodes.iter().map(|&(rho, w)| 2.0 * PI * f.density(rho) * w).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(realization);
    let mut z = Vec::with_capacity((cfg.l_max + 1) * n);
    for l in 0..=cfg.l_max {
        for (j, &var) in variances.iter().enumerate() {
            // four 32-bit words per draw
            rng.set_word_pos(4 * (l as u128 * n as u128 + j as u128));
            let (a, b) = normal_pair(&mut rng);
            let v = if l == 0 {
                Complex64::new(var.sqrt() * a, 0.0)
            } else {
                let s = (0.5 * var).sqrt();
                Complex64::new(s * a, s * b)
            };
            z.push(v);
        }
    }
    SpectralCoeffs { l_max: cfg.l_max, n_nodes: n, z }
}

/// Field values at a fixed set of polar points.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldSample {
    pub points: Vec<(f64, f64)>,
    pub values: Vec<f64>,
    /// Largest imaginary part left over from the complex synthesis.
    pub max_imag: f64,
    /// Set when `l_max` is below the truncation rule for the farthest point.
    pub truncated: bool,
}

impl FieldSample {
    pub fn rms(&self) -> f64 {
        (self.values.iter().map(|v| v * v).sum::<f64>() / self.values.len().max(1) as f64).sqrt()
    }

    /// Applies `g` to every value.
    pub fn map(&self, g: impl Fn(f64) -> f64) -> FieldSample {
        FieldSample { values: self.values.iter().map(|&v| g(v)).collect(), ..self.clone() }
    }
}

/// Precomputed Bessel and phase tables for repeated synthesis at the same
/// points with the same wavenumber nodes.
pub struct Synthesizer {
    points: Vec<(f64, f64)>,
    rho: Vec<f64>,
    l_max: usize,
    /// `[p][j][l]`.
    bessel: Vec<f64>,
    /// `[p][l]`.
    phase: Vec<Complex64>,
    truncated: bool,
}

impl Synthesizer {
    pub fn new(rho: &[f64], l_max: usize, points: &[(f64, f64)]) -> Self {
        let n = rho.len();
        let mut bessel = vec![0.0; points.len() * n * (l_max + 1)];
        let mut phase = Vec::with_capacity(points.len() * (l_max + 1));
        let mut seq = Vec::new();
        let mut r_max: f64 = 0.0;
        for (p, &(r, phi)) in points.iter().enumerate() {
            r_max = r_max.max(r);
            for (j, &k) in rho.iter().enumerate() {
                bessel_j_seq(l_max, k * r, &mut seq);
                let start = (p * n + j) * (l_max + 1);
                bessel[start..start + l_max + 1].copy_from_slice(&seq);
            }
            phase.extend((0..=l_max).map(|l| Complex64::from_polar(1.0, l as f64 * phi)));
        }
        let rho_max = rho.iter().copied().fold(0.0, f64::max);
        let truncated = l_max < (rho_max * r_max).ceil() as usize + TRUNCATION_MARGIN;
        Self { points: points.to_vec(), rho: rho.to_vec(), l_max, bessel, phase, truncated }
    }

    pub fn synthesize(&self, coeffs: &SpectralCoeffs) -> Result<FieldSample> {
        let n = self.rho.len();
        if coeffs.n_nodes != n || coeffs.l_max < self.l_max {
            return Err(Error::Config(format!(
                "coefficients ({} nodes, l_max {}) do not fit the synthesizer ({n} nodes, l_max {})",
                coeffs.n_nodes, coeffs.l_max, self.l_max
            )));
        }
        let lw = self.l_max + 1;
        let mut values = Vec::with_capacity(self.points.len());
        let mut max_imag: f64 = 0.0;
        for p in 0..self.points.len() {
            let phase = &self.phase[p * lw..(p + 1) * lw];
            let mut pos = Complex64::new(0.0, 0.0);
            let mut neg = Complex64::new(0.0, 0.0);
            let mut zero = Complex64::new(0.0, 0.0);
            for j in 0..n {
                let b = &self.bessel[(p * n + j) * lw..(p * n + j + 1) * lw];
                zero += b[0] * coeffs.get(0, j);
                for l in 1..lw {
                    let z = coeffs.get(l, j);
                    pos += phase[l] * (b[l] * z);
                    // order -l: e^{-ilφ} J_{-l} Z_{-l} with both signs (-1)^l cancelling
                    neg += phase[l].conj() * (b[l] * z.conj());
                }
            }
            let total = zero + pos + neg;
            max_imag = max_imag.max(total.im.abs());
            values.push(total.re);
        }
        Ok(FieldSample { points: self.points.clone(), values, max_imag, truncated: self.truncated })
    }
}

/// One-off synthesis; prefer [`Synthesizer`] for repeated draws.
pub fn synthesize(cfg: &SimConfig, coeffs: &SpectralCoeffs, points: &[(f64, f64)]) -> Result<FieldSample> {
    let rho: Vec<f64> = cfg.rho_nodes.iter().map(|n| n.0).collect();
    Synthesizer::new(&rho, coeffs.l_max, points).synthesize(coeffs)
}

/// Covariance of the synthesized field itself: the node sum
/// `sum_j 2π f(ρ_j) w_j J0(ρ_j r)` that replaces the continuous integral.
pub fn discretized_cov2<S: RadialSpectrum + ?Sized>(f: &S, cfg: &SimConfig, r: f64) -> f64 {
    cfg.rho_nodes.iter().map(|&(rho, w)| 2.0 * PI * f.density(rho) * w * crate::special::j0(rho * r)).sum()
}

/// Mean and standard error across realizations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Moment {
    pub mean: f64,
    pub stderr: f64,
}

/// Estimate for one bin or triangle; `moment` is `None` when no matching
/// point pair or triple exists in the layout.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BinEstimate {
    pub matches: usize,
    pub moment: Option<Moment>,
}

fn cartesian(&(r, phi): &(f64, f64)) -> (f64, f64) {
    (r * phi.cos(), r * phi.sin())
}

fn distance(a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - b.0).hypot(a.1 - b.1)
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= MATCH_TOLERANCE * a.abs().max(b.abs())
}

fn shared_layout(samples: &[FieldSample]) -> Result<&[(f64, f64)]> {
    if samples.len() < 2 {
        return Err(Error::Config(format!("need at least 2 realizations, got {}", samples.len())));
    }
    let points = &samples[0].points;
    if samples.iter().any(|s| s.points != *points || s.values.len() != points.len()) {
        return Err(Error::Config("all samples must share one point layout".into()));
    }
    Ok(points)
}

/// Mean over realizations of the per-realization average of
/// `prod X(x_i)` over the matched index tuples.
fn reduce(samples: &[FieldSample], tuples: &[Vec<usize>]) -> BinEstimate {
    if tuples.is_empty() {
        return BinEstimate { matches: 0, moment: None };
    }
    let per: Vec<f64> = samples
        .iter()
        .map(|s| {
            tuples.iter().map(|t| t.iter().map(|&i| s.values[i]).product::<f64>()).sum::<f64>() / tuples.len() as f64
        })
        .collect();
    let n = per.len() as f64;
    let mean = per.iter().sum::<f64>() / n;
    let var = per.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1.0);
    BinEstimate { matches: tuples.len(), moment: Some(Moment { mean, stderr: (var / n).sqrt() }) }
}

/// Empirical covariance at each requested distance, from all point pairs
/// whose separation matches it.
pub fn estimate_cov2(samples: &[FieldSample], r_bins: &[f64]) -> Result<Vec<BinEstimate>> {
    let points = shared_layout(samples)?;
    if r_bins.iter().any(|&r| !(r > 0.0 && r.is_finite())) {
        return Err(Error::Config("distance bins must be positive".into()));
    }
    let xy: Vec<_> = points.iter().map(cartesian).collect();
    let mut tuples: Vec<Vec<Vec<usize>>> = vec![Vec::new(); r_bins.len()];
    for i in 0..xy.len() {
        for j in i + 1..xy.len() {
            let d = distance(xy[i], xy[j]);
            for (b, &r) in r_bins.iter().enumerate() {
                if close(d, r) {
                    tuples[b].push(vec![i, j]);
                }
            }
        }
    }
    Ok(tuples.iter().map(|t| reduce(samples, t)).collect())
}

/// Empirical third moment (the third cumulant of a mean-zero field) at each
/// requested triangle, from all point triples congruent to it.
pub fn estimate_cum3(samples: &[FieldSample], triangles: &[SideTriangle]) -> Result<Vec<BinEstimate>> {
    let points = shared_layout(samples)?;
    let xy: Vec<_> = points.iter().map(cartesian).collect();
    let sorted = |mut s: [f64; 3]| {
        s.sort_by(f64::total_cmp);
        s
    };
    let targets: Vec<[f64; 3]> = triangles.iter().map(|t| sorted(t.sides())).collect();
    let n = xy.len();
    let mut dist = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            dist[i * n + j] = distance(xy[i], xy[j]);
        }
    }
    let mut tuples: Vec<Vec<Vec<usize>>> = vec![Vec::new(); targets.len()];
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let s = sorted([dist[j * n + k], dist[i * n + k], dist[i * n + j]]);
                for (t, target) in targets.iter().enumerate() {
                    if s.iter().zip(target).all(|(a, b)| close(*a, *b)) {
                        tuples[t].push(vec![i, j, k]);
                    }
                }
            }
        }
    }
    Ok(tuples.iter().map(|t| reduce(samples, t)).collect())
}

/// Builds point layouts holding exact congruent copies of requested pairs
/// and triangles, spread over a disc so that copies are weakly correlated.
#[derive(Debug, Clone, Default)]
pub struct LayoutBuilder {
    points: Vec<(f64, f64)>,
    index: HashMap<(u64, u64), usize>,
}

impl LayoutBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    fn push(&mut self, x: f64, y: f64) {
        // snap to avoid near-duplicate points from rounding
        let key = ((x * 1e9).round() as i64 as u64, (y * 1e9).round() as i64 as u64);
        if self.index.contains_key(&key) {
            return;
        }
        self.index.insert(key, self.points.len());
        self.points.push((x.hypot(y), y.atan2(x).rem_euclid(2.0 * PI)));
    }

    /// Anchor and rotation of copy `k` out of `copies`, on a sunflower
    /// spiral inside `radius` with golden-angle rotations.
    fn placement(k: usize, copies: usize, radius: f64) -> ((f64, f64), f64) {
        let golden = PI * (3.0 - 5f64.sqrt());
        let rad = radius * ((k as f64 + 0.5) / copies as f64).sqrt();
        let theta = golden * k as f64;
        ((rad * theta.cos(), rad * theta.sin()), (golden * 1.618 * k as f64).rem_euclid(2.0 * PI))
    }

    /// Adds `copies` segments of length `r`, centred within `radius`.
    pub fn pairs(mut self, r: f64, copies: usize, radius: f64) -> Self {
        for k in 0..copies {
            let ((cx, cy), rot) = Self::placement(k, copies, radius);
            let (s, c) = rot.sin_cos();
            self.push(cx - 0.5 * r * c, cy - 0.5 * r * s);
            self.push(cx + 0.5 * r * c, cy + 0.5 * r * s);
        }
        self
    }

    /// Adds `copies` of the triangle with sides `r2`, `r3` enclosing `phi`
    /// at the shared vertex.
    pub fn triangles(mut self, t: &SideTriangle, copies: usize, radius: f64) -> Result<Self> {
        let phi = t.angle()?;
        for k in 0..copies {
            let ((cx, cy), rot) = Self::placement(k, copies, radius);
            let (s2, c2) = rot.sin_cos();
            let (s3, c3) = (rot + phi).sin_cos();
            self.push(cx, cy);
            self.push(cx + t.r2 * c2, cy + t.r2 * s2);
            self.push(cx + t.r3 * c3, cy + t.r3 * s3);
        }
        Ok(self)
    }

    /// Polar coordinates of all points.
    pub fn build(self) -> Vec<(f64, f64)> {
        self.points
    }
}
