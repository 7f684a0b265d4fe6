//! Second-order (Hankel) and third-order transform pairs between spectral
//! densities and covariances of isotropic fields on the plane.
//!
//! Third-order functions are addressed by two sides and their included angle.
//! Both third-order directions integrate the same kernel
//! `T(x2 y2, x3 y3, θ, angle)` against `x2 x3 dθ dx2 dx3` and differ only in
//! the constant in front: `4π` forward, `1/(4π³)` inverse.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::geometry::{included_angle, Side, SideTriangle, WaveTriangle};
use crate::quadrature::{hankel0, GaussLegendre, TailBound};
use crate::special::{bessel_j_seq, TRUNCATION_MARGIN};

/// Spectral density `f` with respect to `ρ dρ`.
pub trait RadialSpectrum: Sync {
    fn density(&self, rho: f64) -> f64;
    fn tail(&self) -> TailBound;
}

/// Isotropic second-order covariance `C2(r)`.
pub trait IsotropicCov2: Sync {
    fn value(&self, r: f64) -> f64;
    fn tail(&self) -> TailBound;
}

/// Bispectrum of an isotropic field, symmetric in the three wavenumbers.
pub trait Bispectrum: Sync {
    /// Value at the wave triangle with sides `rho2`, `rho3` enclosing `eta`.
    fn value(&self, rho2: f64, rho3: f64, eta: f64) -> f64;
    /// Decay in each wavenumber.
    fn tail(&self) -> TailBound;

    fn on_triangle(&self, t: &WaveTriangle) -> Result<f64> {
        Ok(self.value(t.rho2, t.rho3, included_angle(t, Side::First)?))
    }
}

/// Third-order covariance of an isotropic field, symmetric in the three
/// pairwise distances.
pub trait ThirdCov: Sync {
    /// Value at the triangle with sides `r2`, `r3` enclosing `phi`.
    fn value(&self, r2: f64, r3: f64, phi: f64) -> f64;
    /// Decay in each distance.
    fn tail(&self) -> TailBound;

    fn on_triangle(&self, t: &SideTriangle) -> Result<f64> {
        Ok(self.value(t.r2, t.r3, included_angle(t, Side::First)?))
    }
}

/// Adapts a closure plus tail descriptor to the function traits.
#[derive(Debug, Clone, Copy)]
pub struct FnRadial<F> {
    pub f: F,
    pub tail: TailBound,
}

impl<F: Fn(f64) -> f64 + Sync> RadialSpectrum for FnRadial<F> {
    fn density(&self, rho: f64) -> f64 {
        (self.f)(rho)
    }
    fn tail(&self) -> TailBound {
        self.tail
    }
}

impl<F: Fn(f64) -> f64 + Sync> IsotropicCov2 for FnRadial<F> {
    fn value(&self, r: f64) -> f64 {
        (self.f)(r)
    }
    fn tail(&self) -> TailBound {
        self.tail
    }
}

/// Adapts a closure `(side, side, angle) -> value` plus tail descriptor.
#[derive(Debug, Clone, Copy)]
pub struct FnTriangle<F> {
    pub f: F,
    pub tail: TailBound,
}

impl<F: Fn(f64, f64, f64) -> f64 + Sync> Bispectrum for FnTriangle<F> {
    fn value(&self, rho2: f64, rho3: f64, eta: f64) -> f64 {
        (self.f)(rho2, rho3, eta)
    }
    fn tail(&self) -> TailBound {
        self.tail
    }
}

impl<F: Fn(f64, f64, f64) -> f64 + Sync> ThirdCov for FnTriangle<F> {
    fn value(&self, r2: f64, r3: f64, phi: f64) -> f64 {
        (self.f)(r2, r3, phi)
    }
    fn tail(&self) -> TailBound {
        self.tail
    }
}

/// The zero function in every role.
#[derive(Debug, Clone, Copy, Default)]
pub struct Zero;

const ZERO_TAIL: TailBound = TailBound::Compact { support: 0.0 };

impl RadialSpectrum for Zero {
    fn density(&self, _: f64) -> f64 {
        0.0
    }
    fn tail(&self) -> TailBound {
        ZERO_TAIL
    }
}

impl IsotropicCov2 for Zero {
    fn value(&self, _: f64) -> f64 {
        0.0
    }
    fn tail(&self) -> TailBound {
        ZERO_TAIL
    }
}

impl Bispectrum for Zero {
    fn value(&self, _: f64, _: f64, _: f64) -> f64 {
        0.0
    }
    fn tail(&self) -> TailBound {
        ZERO_TAIL
    }
}

impl ThirdCov for Zero {
    fn value(&self, _: f64, _: f64, _: f64) -> f64 {
        0.0
    }
    fn tail(&self) -> TailBound {
        ZERO_TAIL
    }
}

/// How many Bessel orders a series keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TruncationRule {
    /// `L(z) = ceil(z) + margin`.
    Margin(usize),
    /// The same order everywhere, whatever the argument.
    Fixed(usize),
}

impl TruncationRule {
    pub fn order(&self, z: f64) -> usize {
        match *self {
            TruncationRule::Margin(m) => z.abs().ceil() as usize + m,
            TruncationRule::Fixed(l) => l,
        }
    }
}

impl Default for TruncationRule {
    fn default() -> Self {
        TruncationRule::Margin(TRUNCATION_MARGIN)
    }
}

/// Quadrature controls shared by all transforms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    /// Radial truncation point; derived from the tail descriptor when `None`.
    pub radial_cutoff: Option<f64>,
    /// Radial panels per tail scale length (the panel width is further capped
    /// by the kernel's half period).
    pub panels_per_unit: u32,
    /// Minimum number of angular nodes on `[0, π]`.
    pub angular_nodes: usize,
    pub rel_tol: f64,
    pub truncation: TruncationRule,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            radial_cutoff: None,
            panels_per_unit: 2,
            angular_nodes: 64,
            rel_tol: 1e-6,
            truncation: TruncationRule::default(),
        }
    }
}

impl QuadratureSpec {
    pub fn with_rel_tol(rel_tol: f64) -> Self {
        Self { rel_tol, ..Self::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.rel_tol < 1.0) {
            return Err(Error::Config(format!("rel_tol {} outside (0, 1)", self.rel_tol)));
        }
        if self.panels_per_unit == 0 || self.angular_nodes == 0 {
            return Err(Error::Config("panel and node counts must be positive".into()));
        }
        if let Some(p) = self.radial_cutoff {
            if !(p > 0.0 && p.is_finite()) {
                return Err(Error::Config(format!("radial cutoff {p} must be positive")));
            }
        }
        Ok(())
    }

    fn cutoff(&self, tail: TailBound, dims: u32) -> Result<f64> {
        let p = self.radial_cutoff.unwrap_or_else(|| tail.cutoff(self.rel_tol, dims));
        if !p.is_finite() {
            return Err(Error::Config(format!(
                "tail {tail:?} decays too slowly for a finite cutoff; set one explicitly"
            )));
        }
        Ok(p)
    }
}

fn check_length(name: &str, x: f64) -> Result<()> {
    if !(x >= 0.0 && x.is_finite()) {
        return Err(Error::Domain(format!("{name} = {x} must be finite and nonnegative")));
    }
    Ok(())
}

fn check_angle(name: &str, x: f64) -> Result<()> {
    if !(0.0..=PI).contains(&x) {
        return Err(Error::Domain(format!("{name} = {x} outside [0, pi]")));
    }
    Ok(())
}

/// `C2(r) = 2π int_0^inf J0(ρ r) f(ρ) ρ dρ`.
pub fn cov2_from_spectrum<S: RadialSpectrum + ?Sized>(f: &S, r: f64, q: &QuadratureSpec) -> Result<f64> {
    check_length("r", r)?;
    q.validate()?;
    Ok(2.0 * PI * hankel0(|rho| f.density(rho), r, f.tail(), q.rel_tol)?)
}

/// `f(ρ) = (1/2π) int_0^inf J0(ρ r) C2(r) r dr`.
pub fn spectrum_from_cov2<C: IsotropicCov2 + ?Sized>(c2: &C, rho: f64, q: &QuadratureSpec) -> Result<f64> {
    check_length("rho", rho)?;
    q.validate()?;
    Ok(hankel0(|r| c2.value(r), rho, c2.tail(), q.rel_tol)? / (2.0 * PI))
}

/// Forward third-order transform at the spatial triangle `(r2, r3, φ)`,
/// evaluated with the closed kernel.
pub fn cov3_from_bispectrum<B: Bispectrum + ?Sized>(
    s3: &B,
    r2: f64,
    r3: f64,
    phi: f64,
    q: &QuadratureSpec,
) -> Result<f64> {
    check_length("r2", r2)?;
    check_length("r3", r3)?;
    check_angle("phi", phi)?;
    q.validate()?;
    let i = kernel_integral(&|a, b, t| s3.value(a, b, t), s3.tail(), r2, r3, phi, q)?;
    Ok(4.0 * PI * i)
}

/// Inverse third-order transform at the wave triangle `(ρ2, ρ3, η)`,
/// evaluated with the closed kernel.
pub fn bispectrum_from_cov3<C: ThirdCov + ?Sized>(
    c: &C,
    rho2: f64,
    rho3: f64,
    eta: f64,
    q: &QuadratureSpec,
) -> Result<f64> {
    check_length("rho2", rho2)?;
    check_length("rho3", rho3)?;
    check_angle("eta", eta)?;
    q.validate()?;
    let i = kernel_integral(&|a, b, t| c.value(a, b, t), c.tail(), rho2, rho3, eta, q)?;
    Ok(i / (4.0 * PI * PI * PI))
}

const RADIAL_NODES: usize = 8;
// nodes per angular panel; a panel spans at most one period of the kernel
const ANGULAR_NODES: usize = 6;

/// Composite rule on `[0, 2P]` whose first `inner` nodes cover `[0, P]`.
struct RadialGrid {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    inner: usize,
}

impl RadialGrid {
    fn new(cutoff: f64, max_width: f64, rule: &GaussLegendre) -> Self {
        let panels = (cutoff / max_width).ceil().max(1.0) as usize;
        let breaks: Vec<f64> = (0..=2 * panels).map(|k| cutoff * k as f64 / panels as f64).collect();
        let mut nodes = Vec::new();
        let mut weights = Vec::new();
        rule.composite(&breaks, &mut nodes, &mut weights);
        Self { nodes, weights, inner: panels * rule.len() }
    }
}

/// Breakpoints on `[0, π]`: geometric panels `h0, h0, 2h0, 4h0, ...` until
/// the width reaches `cap`, then uniform panels no wider than `cap`.
fn angular_breaks(h0: f64, cap: f64, out: &mut Vec<f64>) {
    out.clear();
    out.push(0.0);
    let mut a = 0.0;
    if h0 < cap {
        let mut w = h0;
        while a + w < PI && w <= cap {
            a += w;
            out.push(a);
            if out.len() > 2 {
                w *= 2.0;
            }
        }
    }
    let n = ((PI - a) / cap).ceil().max(1.0) as usize;
    let step = (PI - a) / n as f64;
    for k in 1..n {
        out.push(a + step * k as f64);
    }
    out.push(PI);
}

/// `int_0^2P int_0^2P int_0^π T(x2 y2, x3 y3, θ, angle) h(x2, x3, θ) dθ x2 dx2 x3 dx3`
/// on a tensor grid, where `P` is the cutoff. The same nodes restricted to
/// `[0, P]²` give the value at half the cutoff; the two must agree within
/// `rel_tol`, otherwise the tail contract is considered violated.
fn kernel_integral(
    h: &(dyn Fn(f64, f64, f64) -> f64 + Sync),
    tail: TailBound,
    y2: f64,
    y3: f64,
    angle: f64,
    q: &QuadratureSpec,
) -> Result<f64> {
    let cutoff = q.cutoff(tail, 2)?;
    if cutoff == 0.0 {
        return Ok(0.0);
    }
    let scale = match tail {
        TailBound::Compact { support } => support / 4.0,
        t => t.scale(),
    };
    let radial_rule = GaussLegendre::new(RADIAL_NODES);
    let angular_rule = GaussLegendre::new(ANGULAR_NODES);
    let structure = scale / q.panels_per_unit as f64;
    let g2 = RadialGrid::new(cutoff, structure.min(PI / y2), &radial_rule);
    let g3 = RadialGrid::new(cutoff, structure.min(PI / y3), &radial_rule);
    // the integrand is symmetric under x2 <-> x3 when y2 = y3
    let mirrored = y2 == y3;
    let min_cap = PI * ANGULAR_NODES as f64 / q.angular_nodes as f64;
    let (s_half, c_half) = (0.5 * angle).sin_cos();

    let mut total = 0.0;
    let mut inner = 0.0;
    let mut mass = 0.0;
    let mut breaks = Vec::new();
    for (i, (&x2, &w2)) in g2.nodes.iter().zip(&g2.weights).enumerate() {
        let mut row_total = 0.0;
        let mut row_inner = 0.0;
        let mut row_mass = 0.0;
        let start = if mirrored { i } else { 0 };
        for j in start..g3.nodes.len() {
            let (x3, w3) = (g3.nodes[j], g3.weights[j]);
            let z = x2 * y2;
            let u = x3 * y3;
            let h0 = 0.25 * (scale / x2.max(x3)).min(PI);
            let cap = (2.0 * PI / z.min(u)).min(min_cap);
            angular_breaks(h0, cap, &mut breaks);
            let d2 = (z - u) * (z - u);
            let four_zu = 4.0 * z * u;
            let mut acc = 0.0;
            let mut acc_abs = 0.0;
            for pair in breaks.windows(2) {
                for (t, wt) in angular_rule.mapped(pair[0], pair[1]) {
                    let (s, c) = (0.5 * t).sin_cos();
                    // sin((t ± angle)/2)
                    let sp = s * c_half + c * s_half;
                    let sm = s * c_half - c * s_half;
                    let wp = (d2 + four_zu * sp * sp).sqrt();
                    let wm = (d2 + four_zu * sm * sm).sqrt();
                    let kernel = 0.5 * (crate::special::j0(wp) + crate::special::j0(wm));
                    let v = h(x2, x3, t);
                    acc += wt * kernel * v;
                    acc_abs += wt * v.abs();
                }
            }
            let weight = if mirrored && j != i { 2.0 } else { 1.0 } * w2 * w3 * x2 * x3;
            row_total += weight * acc;
            row_mass += weight * acc_abs;
            if i < g2.inner && j < g3.inner {
                row_inner += weight * acc;
            }
        }
        total += row_total;
        inner += row_inner;
        mass += row_mass;
    }
    if !total.is_finite() {
        return Err(Error::Convergence("non-finite integrand value".into()));
    }
    let tol = q.rel_tol * total.abs() + 1e3 * f64::EPSILON * mass;
    if (total - inner).abs() > tol {
        return Err(Error::Convergence(format!(
            "doubling the radial cutoff {cutoff} changed the value from {inner:e} to {total:e}"
        )));
    }
    Ok(total)
}

/// Fourier-series evaluation of a third-order transform. The angular
/// moments of the input function are computed once on a radial tensor grid;
/// coefficient vectors per output side are cached, so the evaluator is cheap
/// to call repeatedly at many triangles. Used as the independent path for
/// cross-checking the closed-kernel transforms, and as a fast function
/// argument when a transform feeds another.
pub struct SeriesTransform {
    nodes: Vec<f64>,
    /// `weight * x` per node.
    measure: Vec<f64>,
    /// `moments[l][i][j] = int_0^π cos(lθ) h(x_i, x_j, θ) dθ`.
    moments: Vec<Vec<f64>>,
    cutoff: f64,
    lmax: usize,
    prefactor: f64,
    truncation: TruncationRule,
    output_tail: TailBound,
    cache: Mutex<SeriesCache>,
}

/// Bit patterns of the two output sides.
type SidesKey = (u64, u64);

#[derive(Default)]
struct SeriesCache {
    /// `x_i Jl(x_i y) w_i` per `y`, flattened as `[l][i]`.
    bessel: HashMap<u64, Arc<Vec<f64>>>,
    /// `sum_i bessel[l][i] moments[l][i][j]` per `y`, as `[l][j]`.
    projected: HashMap<u64, Arc<Vec<f64>>>,
    last: Option<(SidesKey, Arc<Vec<f64>>)>,
}

impl SeriesTransform {
    /// Forward direction: a third-order covariance from a bispectrum, valid
    /// for sides up to `max_side`. `output_tail` describes the decay of the
    /// resulting covariance and is passed on to whoever integrates it.
    pub fn forward<B: Bispectrum + ?Sized>(
        s3: &B,
        max_side: f64,
        output_tail: TailBound,
        q: &QuadratureSpec,
    ) -> Result<Self> {
        Self::build(&|a, b, t| s3.value(a, b, t), s3.tail(), 4.0 * PI, max_side, output_tail, q)
    }

    /// Inverse direction: a bispectrum from a third-order covariance, valid
    /// for wavenumbers up to `max_side`.
    pub fn inverse<C: ThirdCov + ?Sized>(
        c: &C,
        max_side: f64,
        output_tail: TailBound,
        q: &QuadratureSpec,
    ) -> Result<Self> {
        Self::build(&|a, b, t| c.value(a, b, t), c.tail(), 1.0 / (4.0 * PI * PI * PI), max_side, output_tail, q)
    }

    fn build(
        h: &dyn Fn(f64, f64, f64) -> f64,
        tail: TailBound,
        prefactor: f64,
        max_side: f64,
        output_tail: TailBound,
        q: &QuadratureSpec,
    ) -> Result<Self> {
        q.validate()?;
        check_length("max_side", max_side)?;
        let cutoff = q.cutoff(tail, 2)?;
        let scale = tail.scale().max(f64::MIN_POSITIVE);
        let width = (scale / q.panels_per_unit as f64).min(PI / max_side.max(f64::MIN_POSITIVE));
        let panels = (cutoff / width).ceil().max(1.0) as usize;
        let breaks: Vec<f64> = (0..=panels).map(|k| cutoff * k as f64 / panels as f64).collect();
        let mut nodes = Vec::new();
        let mut weights = Vec::new();
        GaussLegendre::new(RADIAL_NODES).composite(&breaks, &mut nodes, &mut weights);
        let measure: Vec<f64> = nodes.iter().zip(&weights).map(|(x, w)| x * w).collect();
        let lmax = q.truncation.order(cutoff * max_side);
        let n = nodes.len();

        // Cosine moments by the trapezoidal rule, spectrally accurate for the
        // smooth even 2π-periodic extension in θ.
        let m = 2 * lmax + q.angular_nodes.max(2);
        let thetas: Vec<f64> = (0..=m).map(|k| PI * k as f64 / m as f64).collect();
        let mut moments = vec![vec![0.0; n * n]; lmax + 1];
        let mut samples = vec![0.0; m + 1];
        let mut cosines = vec![0.0; m + 1];
        for i in 0..n {
            for j in i..n {
                for (k, &t) in thetas.iter().enumerate() {
                    let end = if k == 0 || k == m { 0.5 } else { 1.0 };
                    samples[k] = end * PI / m as f64 * h(nodes[i], nodes[j], t);
                }
                // cos(lθ_k) by the Chebyshev recurrence in l
                let mut prev: Vec<f64> = vec![1.0; m + 1];
                for (k, &t) in thetas.iter().enumerate() {
                    cosines[k] = t.cos();
                }
                let two_cos: Vec<f64> = cosines.iter().map(|c| 2.0 * c).collect();
                let mut cur = cosines.clone();
                let m0: f64 = samples.iter().sum();
                moments[0][i * n + j] = m0;
                moments[0][j * n + i] = m0;
                for row in moments.iter_mut().skip(1) {
                    let v: f64 = samples.iter().zip(&cur).map(|(s, c)| s * c).sum();
                    row[i * n + j] = v;
                    row[j * n + i] = v;
                    for k in 0..=m {
                        let next = two_cos[k] * cur[k] - prev[k];
                        prev[k] = cur[k];
                        cur[k] = next;
                    }
                }
            }
        }
        if moments.iter().flatten().any(|v| !v.is_finite()) {
            return Err(Error::Convergence("non-finite angular moment".into()));
        }
        Ok(Self {
            nodes,
            measure,
            moments,
            cutoff,
            lmax,
            prefactor,
            truncation: q.truncation,
            output_tail,
            cache: Mutex::new(SeriesCache::default()),
        })
    }

    /// Radial cutoff of the internal grid.
    pub fn cutoff(&self) -> f64 {
        self.cutoff
    }

    /// Highest order kept by the precomputed moments.
    pub fn lmax(&self) -> usize {
        self.lmax
    }

    fn order_for(&self, y: f64) -> usize {
        self.truncation.order(self.cutoff * y).min(self.lmax)
    }

    fn bessel(&self, cache: &mut SeriesCache, y: f64) -> Arc<Vec<f64>> {
        let key = y.to_bits();
        if let Some(v) = cache.bessel.get(&key) {
            return v.clone();
        }
        let n = self.nodes.len();
        let lmax = self.order_for(y);
        let mut out = vec![0.0; (lmax + 1) * n];
        let mut seq = Vec::new();
        for (i, (&x, &mu)) in self.nodes.iter().zip(&self.measure).enumerate() {
            bessel_j_seq(lmax, x * y, &mut seq);
            for l in 0..=lmax {
                out[l * n + i] = mu * seq[l];
            }
        }
        let out = Arc::new(out);
        cache.bessel.insert(key, out.clone());
        out
    }

    fn projected(&self, cache: &mut SeriesCache, y: f64) -> Arc<Vec<f64>> {
        let key = y.to_bits();
        if let Some(v) = cache.projected.get(&key) {
            return v.clone();
        }
        let b = self.bessel(cache, y);
        let n = self.nodes.len();
        let lmax = b.len() / n - 1;
        let mut out = vec![0.0; (lmax + 1) * n];
        for l in 0..=lmax {
            let dst = &mut out[l * n..(l + 1) * n];
            let mom = &self.moments[l];
            for i in 0..n {
                let bi = b[l * n + i];
                if bi == 0.0 {
                    continue;
                }
                let row = &mom[i * n..(i + 1) * n];
                for (d, &mv) in dst.iter_mut().zip(row) {
                    *d += bi * mv;
                }
            }
        }
        let out = Arc::new(out);
        cache.projected.insert(key, out.clone());
        out
    }

    /// Fourier coefficients `g_l(y2, y3)`, `l = 0..=L`, with the value at
    /// angle `a` equal to `g_0 + 2 sum g_l cos(l a)`.
    pub fn coefficients(&self, y2: f64, y3: f64) -> Arc<Vec<f64>> {
        let key = (y2.to_bits(), y3.to_bits());
        let mut cache = self.cache.lock().unwrap_or_else(|e| e.into_inner());
        if let Some((k, v)) = &cache.last {
            if *k == key {
                return v.clone();
            }
        }
        let p = self.projected(&mut cache, y2);
        let b = self.bessel(&mut cache, y3);
        let n = self.nodes.len();
        let lmax = (p.len() / n).min(b.len() / n) - 1;
        let coeffs: Vec<f64> = (0..=lmax)
            .map(|l| {
                let dot: f64 = p[l * n..(l + 1) * n].iter().zip(&b[l * n..(l + 1) * n]).map(|(a, c)| a * c).sum();
                self.prefactor * dot
            })
            .collect();
        let coeffs = Arc::new(coeffs);
        cache.last = Some((key, coeffs.clone()));
        coeffs
    }

    /// Evaluates the transformed function at `(y2, y3, angle)`.
    pub fn eval(&self, y2: f64, y3: f64, angle: f64) -> f64 {
        cosine_series(&self.coefficients(y2, y3), angle)
    }
}

/// `c_0 + 2 sum_{l>=1} c_l cos(l a)` by Clenshaw summation.
pub fn cosine_series(coeffs: &[f64], angle: f64) -> f64 {
    let two_cos = 2.0 * angle.cos();
    let mut b1 = 0.0;
    let mut b2 = 0.0;
    for &c in coeffs.iter().skip(1).rev() {
        let b0 = 2.0 * c + two_cos * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    // sum_{l>=1} d_l cos(l a) = b1 cos a - b2 with d_l = 2 c_l
    let first = coeffs.first().copied().unwrap_or(0.0);
    first + b1 * angle.cos() - b2
}

impl ThirdCov for SeriesTransform {
    fn value(&self, r2: f64, r3: f64, phi: f64) -> f64 {
        self.eval(r2, r3, phi)
    }
    fn tail(&self) -> TailBound {
        self.output_tail
    }
}

impl Bispectrum for SeriesTransform {
    fn value(&self, rho2: f64, rho3: f64, eta: f64) -> f64 {
        self.eval(rho2, rho3, eta)
    }
    fn tail(&self) -> TailBound {
        self.output_tail
    }
}
