//! Quadrature building blocks: Gauss-Legendre rules, adaptive Gauss-Kronrod,
//! Wynn's epsilon extrapolation and a zero-aligned integrator for
//! `int_0^inf J0(r x) f(x) x dx`.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::special::j0;

/// Gauss-Legendre rule on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Builds the `n`-point rule by Newton iteration on `P_n`.
    pub fn new(n: usize) -> Self {
        assert!(n > 0, "Gauss-Legendre rule needs at least one node");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let nf = n as f64;
        for i in 0..n.div_ceil(2) {
            let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut dp = 1.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre_with_derivative(n, x);
            dp = if d != 0.0 { d } else { dp };
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        Self { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Nodes and weights mapped to `[a, b]`.
    pub fn mapped(&self, a: f64, b: f64) -> impl Iterator<Item = (f64, f64)> + '_ {
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        self.nodes.iter().zip(&self.weights).map(move |(&x, &w)| (mid + half * x, half * w))
    }

    pub fn integrate(&self, a: f64, b: f64, mut f: impl FnMut(f64) -> f64) -> f64 {
        self.mapped(a, b).map(|(x, w)| w * f(x)).sum()
    }

    /// Appends the nodes and weights of a composite rule over `breaks` to the
    /// output vectors.
    pub fn composite(&self, breaks: &[f64], nodes: &mut Vec<f64>, weights: &mut Vec<f64>) {
        for pair in breaks.windows(2) {
            for (x, w) in self.mapped(pair[0], pair[1]) {
                nodes.push(x);
                weights.push(w);
            }
        }
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let nf = n as f64;
    (p1, nf * (x * p1 - p0) / (x * x - 1.0))
}

const KRONROD_NODES: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const KRONROD_WEIGHTS: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
// Gauss weights for the odd-indexed Kronrod nodes (x1, x3, x5, x7=0).
const GAUSS7_WEIGHTS: [f64; 4] =
    [0.129_484_966_168_869_7, 0.279_705_391_489_276_7, 0.381_830_050_505_118_9, 0.417_959_183_673_469_4];

/// One G7-K15 panel: Kronrod value and `|K15 - G7|`.
fn gk15(f: &mut impl FnMut(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(mid);
    let mut kronrod = KRONROD_WEIGHTS[7] * fc;
    let mut gauss = GAUSS7_WEIGHTS[3] * fc;
    for i in 0..7 {
        let dx = half * KRONROD_NODES[i];
        let pair = f(mid - dx) + f(mid + dx);
        kronrod += KRONROD_WEIGHTS[i] * pair;
        if i % 2 == 1 {
            gauss += GAUSS7_WEIGHTS[i / 2] * pair;
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).abs())
}

struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

/// Result of an integration with its error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
}

/// Globally adaptive G7-K15 quadrature on `[a, b]`, bisecting the panel with
/// the largest error until `error <= max(abs_tol, rel_tol * |value|)`.
pub fn integrate_adaptive(
    mut f: impl FnMut(f64) -> f64,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
) -> Result<Estimate> {
    const MAX_PANELS: usize = 4000;
    if a == b {
        return Ok(Estimate { value: 0.0, error: 0.0 });
    }
    let (value, error) = gk15(&mut f, a, b);
    let mut heap = BinaryHeap::new();
    heap.push(Panel { a, b, value, error });
    let mut total = value;
    let mut total_err = error;
    // the error estimate cannot drop much below rounding of the panel sums
    let mut magnitude = value.abs();
    while total_err > abs_tol.max(rel_tol * total.abs()).max(50.0 * f64::EPSILON * magnitude) {
        if heap.len() >= MAX_PANELS {
            return Err(Error::Convergence(format!(
                "adaptive quadrature on [{a}, {b}] stalled at error {total_err:e}"
            )));
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // panel can no longer be split in floating point
            heap.push(worst);
            break;
        }
        let (v1, e1) = gk15(&mut f, worst.a, mid);
        let (v2, e2) = gk15(&mut f, mid, worst.b);
        total += v1 + v2 - worst.value;
        total_err += e1 + e2 - worst.error;
        magnitude += v1.abs() + v2.abs() - worst.value.abs();
        heap.push(Panel { a: worst.a, b: mid, value: v1, error: e1 });
        heap.push(Panel { a: mid, b: worst.b, value: v2, error: e2 });
    }
    // re-sum to shed accumulated rounding in the running totals
    let (value, error) = heap.iter().fold((0.0, 0.0), |(v, e), p| (v + p.value, e + p.error));
    Ok(Estimate { value, error })
}

/// Wynn's epsilon algorithm applied to a sequence of partial sums. Returns the
/// highest-order even-column estimate of the limit together with the change
/// from the previous diagonal as an error indicator.
pub fn wynn_epsilon(seq: &[f64]) -> Estimate {
    match seq.len() {
        0 => return Estimate { value: 0.0, error: f64::INFINITY },
        1 | 2 => {
            let n = seq.len();
            let err = if n == 2 { (seq[1] - seq[0]).abs() } else { f64::INFINITY };
            return Estimate { value: seq[n - 1], error: err };
        }
        _ => {}
    }
    let n = seq.len();
    let mut prev_col: Vec<f64> = seq.to_vec();
    let mut prev_prev: Vec<f64> = vec![0.0; n + 1];
    let mut best = seq[n - 1];
    let mut best_err = (seq[n - 1] - seq[n - 2]).abs();
    let mut col = 1;
    while prev_col.len() >= 2 {
        let mut next = Vec::with_capacity(prev_col.len() - 1);
        for i in 0..prev_col.len() - 1 {
            let diff = prev_col[i + 1] - prev_col[i];
            let base = if col == 1 { 0.0 } else { prev_prev[i + 1] };
            if diff == 0.0 || !diff.is_finite() {
                // table breaks down: the sequence has converged numerically
                return Estimate { value: prev_col[i + 1], error: best_err.min((prev_col[i + 1] - best).abs()) };
            }
            next.push(base + 1.0 / diff);
        }
        if col % 2 == 0 && next.len() >= 2 {
            let last = next[next.len() - 1];
            let err = (last - next[next.len() - 2]).abs();
            if last.is_finite() {
                best = last;
                best_err = err.max(f64::EPSILON * last.abs());
            }
        } else if col % 2 == 0 && next.len() == 1 && next[0].is_finite() {
            let err = (next[0] - best).abs();
            best = next[0];
            best_err = best_err.max(err);
        }
        prev_prev = prev_col;
        prev_col = next;
        col += 1;
    }
    Estimate { value: best, error: best_err }
}

/// How fast a function decays at large argument; used to pick truncation
/// points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TailBound {
    /// `|f(x)| <= A x^-exponent` for `x` beyond a few multiples of `scale`.
    Algebraic { exponent: f64, scale: f64 },
    /// `|f(x)| <= A exp(-x / scale)`.
    Exponential { scale: f64 },
    /// `|f(x)| <= A exp(-(x / scale)^2)`.
    Gaussian { scale: f64 },
    /// `f(x) = 0` for `x > support`.
    Compact { support: f64 },
}

impl TailBound {
    /// Length on which the function varies.
    pub fn scale(&self) -> f64 {
        match *self {
            TailBound::Algebraic { scale, .. } | TailBound::Exponential { scale } | TailBound::Gaussian { scale } => {
                scale
            }
            TailBound::Compact { support } => support,
        }
    }

    /// Cutoff `P` beyond which a `dims`-fold radial integral against `x dx`
    /// per variable loses less than `rel_tol / 10` of its value. For a
    /// symmetric function of `dims + 1` triangle sides an algebraic rate
    /// applies to every side.
    pub fn cutoff(&self, rel_tol: f64, dims: u32) -> f64 {
        let target = (rel_tol / 10.0).clamp(1e-300, 0.1);
        let d = dims as f64;
        match *self {
            TailBound::Algebraic { exponent, scale } => {
                // one variable: plain mass tail P^{2-p}. Triangle functions:
                // two sides grow together over a 2d-1 dimensional shell and
                // the oscillating kernel buys one more power, giving
                // P^{3 - 3p} for d = 2.
                let excess = if dims <= 1 { exponent - 2.0 } else { (d + 1.0) * exponent - (2.0 * d - 1.0) };
                if excess <= 0.0 {
                    return f64::INFINITY;
                }
                scale * (1.0 / target).powf(1.0 / excess).max(4.0)
            }
            TailBound::Exponential { scale } => scale * ((1.0 / target).ln() + 2.0 * d + 4.0),
            TailBound::Gaussian { scale } => scale * ((1.0 / target).ln() + d + 2.0).sqrt(),
            TailBound::Compact { support } => support,
        }
    }
}

/// Computes `int_0^inf J0(r x) f(x) x dx`; `tail` describes `f`.
///
/// For `r > 0` the range is split at the asymptotic zeros `(k - 1/4) pi / r`
/// of the Bessel factor. Each half period is integrated adaptively and the
/// alternating partial sums are accelerated with Wynn's epsilon algorithm.
/// Before the first zero, and for `r = 0`, panels grow geometrically from the
/// tail scale and the integration stops once the tail descriptor certifies
/// the remaining mass negligible.
pub fn hankel0(f: impl Fn(f64) -> f64, r: f64, tail: TailBound, rel_tol: f64) -> Result<f64> {
    const MAX_HALF_PERIODS: usize = 20_000;
    const WINDOW: usize = 24;
    if !(rel_tol > 0.0 && rel_tol < 1.0) {
        return Err(Error::Config(format!("rel_tol {rel_tol} outside (0, 1)")));
    }
    let inner_tol = rel_tol * 1e-3;
    let f = |x: f64| j0(r * x) * f(x) * x;
    let scale = tail.scale();
    let first_zero = if r > 0.0 { 0.75 * PI / r } else { f64::INFINITY };
    if let TailBound::Compact { support } = tail {
        if support <= first_zero {
            return integrate_geometric(&f, 0.0, support, scale, inner_tol, tail, rel_tol).map(|(v, _, _)| v);
        }
    }

    // non-oscillatory head, possibly the whole integral
    let (head, mass, converged) = integrate_geometric(&f, 0.0, first_zero, scale, inner_tol, tail, rel_tol)?;
    if converged || !first_zero.is_finite() {
        return Ok(head);
    }
    let mut mass = mass;

    // tails that vanish faster than any power are simply truncated
    let end = match tail {
        TailBound::Compact { support } => support,
        TailBound::Algebraic { .. } => f64::INFINITY,
        t => t.cutoff(rel_tol, 1).max(first_zero),
    };
    let half_period = PI / r;
    let mut partial = head;
    let mut sums: Vec<f64> = Vec::new();
    let mut last_estimate = f64::NAN;
    let mut stable = 0;
    let mut a = first_zero;
    for _ in 0..MAX_HALF_PERIODS {
        let b = (a + half_period).min(end);
        let piece = integrate_adaptive(f, a, b, inner_tol * mass, inner_tol)?;
        partial += piece.value;
        mass += piece.value.abs();
        if b >= end {
            return Ok(partial);
        }
        a = b;
        sums.push(partial);
        if sums.len() > WINDOW {
            sums.remove(0);
        }
        if sums.len() < 4 {
            continue;
        }
        let est = wynn_epsilon(&sums);
        // values far below the integrand's mass are only known absolutely
        let tol = 0.05 * rel_tol * est.value.abs() + 1e3 * f64::EPSILON * mass;
        if (est.value - last_estimate).abs() <= tol && est.error <= tol * 20.0 {
            stable += 1;
            // extrapolation needs the asymptotic regime of the tail
            if stable >= 2 && a >= 4.0 * scale {
                return Ok(est.value);
            }
        } else {
            stable = 0;
        }
        last_estimate = est.value;
    }
    Err(Error::Convergence(format!(
        "oscillatory tail of the Hankel integral at r = {r} did not settle within {MAX_HALF_PERIODS} half periods"
    )))
}

/// Integrates over `[a, b]` on panels `[0, s], [s, 2s], [2s, 4s], ...`,
/// returning the value, the absolute mass, and whether it stopped early.
/// It stops at the tail descriptor's cutoff provided the last panel there
/// contributed below `rel_tol / 100` of the mass; an integrand still
/// carrying weight well past the cutoff violates its descriptor.
fn integrate_geometric(
    f: &impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    scale: f64,
    inner_tol: f64,
    tail: TailBound,
    rel_tol: f64,
) -> Result<(f64, f64, bool)> {
    let mut lo = a;
    let mut hi = (a + scale).min(b);
    let mut total = 0.0;
    let mut mass: f64 = 0.0;
    loop {
        let piece = integrate_adaptive(f, lo, hi, inner_tol * mass, inner_tol)?;
        total += piece.value;
        mass += piece.value.abs();
        if hi >= b {
            return Ok((total, mass, false));
        }
        let quiet = piece.value.abs() <= 1e-2 * rel_tol * mass;
        let cutoff = tail.cutoff(rel_tol, 1);
        if hi >= cutoff && quiet {
            return Ok((total, mass, true));
        }
        if hi >= 16.0 * cutoff || !hi.is_finite() || hi > 1e12 * scale {
            return Err(Error::Convergence(format!(
                "integrand has not decayed by x = {hi:e}; tail descriptor violated"
            )));
        }
        lo = hi;
        hi = (2.0 * hi).min(b);
    }
}
