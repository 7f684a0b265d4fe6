//! Integer-order Bessel functions of the first kind, the modified Bessel
//! function `K1`, and the closed form of the triple-Bessel integral
//! `int_0^inf J0(rho1 t) Jl(rho2 t) Jl(rho3 t) t dt`.
//!
//! `J_n` is evaluated per region:
//! - power series where `x^2 <= n + 1` (no cancellation, handles underflow),
//! - Hankel's asymptotic expansion for large `x` when it reaches full
//!   precision before diverging,
//! - Miller's backward recurrence, normalized by `J0 + 2 sum J_2k = 1`,
//!   everywhere else.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_2_PI, PI};

use crate::error::{Error, Result};
use crate::geometry::{check_sides, kahan_area, TRIANGLE_SLACK};

/// Largest supported order magnitude for [`bessel_j`].
pub const MAX_ORDER: u32 = 512;
/// Largest supported argument for [`bessel_j`].
pub const MAX_ARGUMENT: f64 = 1e4;
/// Extra orders kept beyond `ceil(z)` when truncating Bessel series.
pub const TRUNCATION_MARGIN: usize = 40;

const ASYMPTOTIC_MIN_X: f64 = 17.0;
const RESCALE_ABOVE: f64 = 1e250;

/// Number of orders `L(z) = ceil(z) + 40` after which `J_l(z)` is negligible
/// in every Jacobi-Anger type sum.
pub fn truncation_order(z: f64) -> usize {
    z.abs().ceil() as usize + TRUNCATION_MARGIN
}

/// `J_order(x)` for `|order| <= 512` and `0 <= x <= 1e4`.
///
/// Negative orders go through `J_{-n} = (-1)^n J_n`.
pub fn bessel_j(order: i32, x: f64) -> Result<f64> {
    if order.unsigned_abs() > MAX_ORDER {
        return Err(Error::Range(format!("order {order} exceeds {MAX_ORDER}")));
    }
    if !(0.0..=MAX_ARGUMENT).contains(&x) {
        return Err(Error::Range(format!("argument {x} outside [0, {MAX_ARGUMENT}]")));
    }
    let n = order.unsigned_abs();
    let v = jn(n, x);
    Ok(if order < 0 && n % 2 == 1 { -v } else { v })
}

/// `J0` for any real argument, without range checks.
#[inline]
pub fn j0(x: f64) -> f64 {
    jn(0, x.abs())
}

/// `J_n(x)` for `x >= 0`, without range checks.
pub fn jn(n: u32, x: f64) -> f64 {
    if x == 0.0 {
        return if n == 0 { 1.0 } else { 0.0 };
    }
    let nf = n as f64;
    if x * x <= nf + 1.0 {
        return power_series(n, x);
    }
    if x >= ASYMPTOTIC_MIN_X {
        if let Some(v) = hankel_asymptotic(n, x) {
            return v;
        }
    }
    miller_single(n, x)
}

fn power_series(n: u32, x: f64) -> f64 {
    let half = 0.5 * x;
    let mut lead = 1.0;
    for k in 1..=n {
        lead *= half / k as f64;
    }
    if lead == 0.0 {
        return 0.0;
    }
    let q = -half * half;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut k = 1.0;
    loop {
        term *= q / (k * (n as f64 + k));
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() {
            break;
        }
        k += 1.0;
    }
    lead * sum
}

/// Hankel's expansion. Returns `None` when the series starts diverging before
/// the terms drop below double precision.
fn hankel_asymptotic(n: u32, x: f64) -> Option<f64> {
    let mu = 4.0 * (n as f64) * (n as f64);
    let eight_x = 8.0 * x;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term: f64 = 1.0;
    let mut prev = f64::INFINITY;
    let mut k = 1u32;
    loop {
        let odd = (2 * k - 1) as f64;
        term *= (mu - odd * odd) / (k as f64 * eight_x);
        let mag = term.abs();
        // sign pattern: k=1 -> +Q, k=2 -> -P, k=3 -> -Q, k=4 -> +P, ...
        match k % 4 {
            1 => q += term,
            2 => p -= term,
            3 => q -= term,
            _ => p += term,
        }
        if mag <= 1e-17 * (p.abs() + q.abs()) {
            break;
        }
        if mag > prev || k > 200 {
            return None;
        }
        prev = mag;
        k += 1;
    }
    // chi = x - (2n + 1) pi / 4, expanded so that x enters only via sin/cos.
    let (cos_t, sin_t) = match n % 4 {
        0 => (FRAC_1_SQRT_2, FRAC_1_SQRT_2),
        1 => (-FRAC_1_SQRT_2, FRAC_1_SQRT_2),
        2 => (-FRAC_1_SQRT_2, -FRAC_1_SQRT_2),
        _ => (FRAC_1_SQRT_2, -FRAC_1_SQRT_2),
    };
    let (sx, cx) = x.sin_cos();
    let cos_chi = cx * cos_t + sx * sin_t;
    let sin_chi = sx * cos_t - cx * sin_t;
    Some((FRAC_2_PI / x).sqrt() * (p * cos_chi - q * sin_chi))
}

fn miller_start(top: f64, x: f64) -> usize {
    let m = top.max(x) + 20.0 + 12.0 * x.max(1.0).cbrt();
    let m = m.ceil() as usize;
    m + (m & 1)
}

fn miller_single(n: u32, x: f64) -> f64 {
    let start = miller_start(n as f64, x);
    let two_over_x = 2.0 / x;
    let mut above = 0.0;
    let mut cur = 1e-280;
    let mut norm = 0.0;
    let mut wanted = 0.0;
    for k in (1..=start).rev() {
        if k as u32 == n {
            wanted = cur;
        }
        if k % 2 == 0 {
            norm += 2.0 * cur;
        }
        let below = k as f64 * two_over_x * cur - above;
        above = cur;
        cur = below;
        if cur.abs() > RESCALE_ABOVE {
            cur /= RESCALE_ABOVE;
            above /= RESCALE_ABOVE;
            norm /= RESCALE_ABOVE;
            wanted /= RESCALE_ABOVE;
        }
    }
    if n == 0 {
        wanted = cur;
    }
    norm += cur;
    wanted / norm
}

/// Fills `out` with `J_0(x), ..., J_lmax(x)` for `x >= 0`.
pub fn bessel_j_seq(lmax: usize, x: f64, out: &mut Vec<f64>) {
    out.clear();
    out.resize(lmax + 1, 0.0);
    if x == 0.0 {
        out[0] = 1.0;
        return;
    }
    if x >= ASYMPTOTIC_MIN_X && (lmax as f64) <= 0.5 * x {
        if let (Some(a0), Some(a1)) = (hankel_asymptotic(0, x), hankel_asymptotic(1, x)) {
            out[0] = a0;
            if lmax >= 1 {
                out[1] = a1;
            }
            let two_over_x = 2.0 / x;
            for k in 1..lmax {
                out[k + 1] = k as f64 * two_over_x * out[k] - out[k - 1];
            }
            return;
        }
    }
    if lmax == 0 {
        out[0] = jn(0, x);
        return;
    }
    let start = miller_start(lmax as f64, x);
    let two_over_x = 2.0 / x;
    let mut above = 0.0;
    let mut cur = 1e-280;
    let mut norm = 0.0;
    for k in (1..=start).rev() {
        if k <= lmax {
            out[k] = cur;
        }
        if k % 2 == 0 {
            norm += 2.0 * cur;
        }
        let below = k as f64 * two_over_x * cur - above;
        above = cur;
        cur = below;
        if cur.abs() > RESCALE_ABOVE {
            cur /= RESCALE_ABOVE;
            above /= RESCALE_ABOVE;
            norm /= RESCALE_ABOVE;
            if k <= lmax {
                for v in &mut out[k..] {
                    *v /= RESCALE_ABOVE;
                }
            }
        }
    }
    out[0] = cur;
    norm += cur;
    let inv = 1.0 / norm;
    for v in out.iter_mut() {
        *v *= inv;
    }
    if x >= ASYMPTOTIC_MIN_X {
        // refine against the accurate J0, J1 pair (least squares keeps this
        // stable when either one sits near a zero)
        if let (Some(a0), Some(a1)) = (hankel_asymptotic(0, x), hankel_asymptotic(1, x)) {
            let scale = (a0 * out[0] + a1 * out[1]) / (out[0] * out[0] + out[1] * out[1]);
            for v in out.iter_mut() {
                *v *= scale;
            }
        }
    }
}

/// Modified Bessel function `K1(x)` for `0 < x <= 700`.
pub fn bessel_k1(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("K1 requires x > 0, got {x}")));
    }
    if x > 700.0 {
        return Err(Error::Range(format!("K1 argument {x} above 700")));
    }
    Ok(k1_unchecked(x))
}

/// `K1(x)` via the trapezoidal rule on `int_0^inf exp(-x cosh t) cosh t dt`,
/// which converges geometrically because the integrand is analytic in a strip.
pub(crate) fn k1_unchecked(x: f64) -> f64 {
    let h = (0.6 / x.sqrt()).min(0.1);
    let mut sum = 0.5;
    let mut k = 1.0;
    loop {
        let t = k * h;
        let ch = t.cosh();
        let term = (-x * (ch - 1.0)).exp() * ch;
        sum += term;
        if term < 1e-18 * sum {
            break;
        }
        k += 1.0;
    }
    (-x).exp() * sum * h
}

/// `x K1(x)`, continuous at zero with value one.
pub fn x_k1(x: f64) -> f64 {
    if x == 0.0 {
        1.0
    } else {
        x * k1_unchecked(x)
    }
}

/// `int_0^inf J0(rho1 t) J_l(rho2 t) J_l(rho3 t) t dt` in closed form,
/// `cos(l eta) / (pi rho2 rho3 sin eta)` with `eta` the angle between the
/// sides `rho2` and `rho3`.
///
/// Zero outside the open triangle `|rho2 - rho3| < rho1 < rho2 + rho3`;
/// degenerate triangles are singular.
pub fn triple_bessel_closed(rho1: f64, rho2: f64, rho3: f64, order: u32) -> Result<f64> {
    for r in [rho1, rho2, rho3] {
        if !(r.is_finite() && r >= 0.0) {
            return Err(Error::Domain(format!("wavenumber {r} is not finite and nonnegative")));
        }
    }
    let slack = TRIANGLE_SLACK * rho1.max(rho2).max(rho3);
    let lo = (rho2 - rho3).abs();
    let hi = rho2 + rho3;
    if (rho1 - lo).abs() <= slack || (rho1 - hi).abs() <= slack {
        return Err(Error::Singular);
    }
    if rho1 < lo || rho1 > hi {
        return Ok(0.0);
    }
    check_sides([rho1, rho2, rho3])?;
    // pi rho2 rho3 sin(eta) = 2 pi area
    let area = kahan_area(rho1, rho2, rho3);
    let cos_eta = ((rho2 - rho3) * (rho2 - rho3) + 2.0 * rho2 * rho3 - rho1 * rho1) / (2.0 * rho2 * rho3);
    let eta = (4.0 * area).atan2(2.0 * rho2 * rho3 * cos_eta);
    Ok((order as f64 * eta).cos() / (2.0 * PI * area))
}
