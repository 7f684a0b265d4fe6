//! The kernel shared by the forward and inverse third-order transforms,
//! `T = (J0(w+) + J0(w-)) / 2` with `w± = |z e^{i(η±φ)} - u|`, and its
//! Fourier-Bessel series `J0(z)J0(u) + 2 sum cos(lφ) Jl(z) Jl(u) cos(lη)`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geometry::third_side_unchecked;
use crate::special::{bessel_j_seq, j0};

/// Dimensionless arguments of the kernel: `z = ρ2 r2`, `u = ρ3 r3` and the two
/// angles, each in `[0, π]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelArgs {
    pub z: f64,
    pub u: f64,
    pub eta: f64,
    pub phi: f64,
}

impl KernelArgs {
    pub fn new(z: f64, u: f64, eta: f64, phi: f64) -> Result<Self> {
        if !(z >= 0.0 && u >= 0.0 && z.is_finite() && u.is_finite()) {
            return Err(Error::Domain(format!("kernel products must be finite and nonnegative, got z={z}, u={u}")));
        }
        for angle in [eta, phi] {
            if !(0.0..=PI).contains(&angle) {
                return Err(Error::Domain(format!("kernel angle {angle} outside [0, pi]")));
            }
        }
        Ok(Self { z, u, eta, phi })
    }
}

/// Folds an angle in `[0, 2π]` back to `[0, π]` using the evenness of cosine.
#[inline]
fn fold(angle: f64) -> f64 {
    let a = angle.abs();
    if a > PI {
        2.0 * PI - a
    } else {
        a
    }
}

/// Returns `(w+, w-)`.
#[inline]
pub fn w_pm(args: &KernelArgs) -> (f64, f64) {
    let plus = third_side_unchecked(args.z, args.u, fold(args.eta + args.phi));
    let minus = third_side_unchecked(args.z, args.u, fold(args.eta - args.phi));
    (plus, minus)
}

/// Closed form of the kernel; two `J0` evaluations regardless of `z`, `u`.
#[inline]
pub fn kernel_closed(args: &KernelArgs) -> f64 {
    let (plus, minus) = w_pm(args);
    0.5 * (j0(plus) + j0(minus))
}

/// Series form of the kernel truncated after order `lmax`.
pub fn kernel_series(args: &KernelArgs, lmax: usize) -> f64 {
    let mut jz = Vec::new();
    let mut ju = Vec::new();
    bessel_j_seq(lmax, args.z, &mut jz);
    bessel_j_seq(lmax, args.u, &mut ju);
    let mut sum = 0.0;
    for l in (1..=lmax).rev() {
        let lf = l as f64;
        sum += (lf * args.phi).cos() * jz[l] * ju[l] * (lf * args.eta).cos();
    }
    jz[0] * ju[0] + 2.0 * sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::truncation_order;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn args(z: f64, u: f64, eta: f64, phi: f64) -> KernelArgs {
        KernelArgs::new(z, u, eta, phi).unwrap()
    }

    #[test]
    fn w_examples() {
        assert_eq!(w_pm(&args(1.0, 2.5, 0.0, 0.0)), (1.5, 1.5));
        let (p, m) = w_pm(&args(1.0, 2.5, 0.0, PI));
        assert_relative_eq!(p, 3.5, max_relative = 1e-15);
        assert_relative_eq!(m, 3.5, max_relative = 1e-15);
        let (p, m) = w_pm(&args(1.0, 2.0, PI / 3.0, PI / 6.0));
        assert_relative_eq!(p, 5f64.sqrt(), max_relative = 1e-15);
        assert_relative_eq!(m, (5.0 - 4.0 * (PI / 6.0).cos()).sqrt(), max_relative = 1e-15);
    }

    #[test]
    fn closed_examples() {
        assert_relative_eq!(kernel_closed(&args(4.2, 1.1, 0.0, 0.0)), j0(3.1), max_relative = 1e-14);
        assert_relative_eq!(kernel_closed(&args(0.0, 7.3, 1.0, 2.0)), j0(7.3), max_relative = 1e-14);
    }

    #[test]
    fn series_reference_point() {
        let a = args(3.7, 1.2, 2.0, 0.8);
        assert!((kernel_series(&a, 200) - kernel_closed(&a)).abs() < 1e-13);
    }

    #[test]
    fn series_zeroth_term() {
        let a = args(3.7, 1.2, 2.0, 0.8);
        assert_eq!(kernel_series(&a, 0), j0(3.7) * j0(1.2));
    }

    #[test]
    fn odd_orders_vanish_at_right_angles() {
        // with η = φ = π/2 each term carries cos²(lπ/2), zero for odd l
        let a = args(2.3, 4.1, PI / 2.0, PI / 2.0);
        let mut jz = Vec::new();
        let mut ju = Vec::new();
        bessel_j_seq(60, a.z, &mut jz);
        bessel_j_seq(60, a.u, &mut ju);
        let even: f64 = jz[0] * ju[0] + 2.0 * (1..=30).map(|k| jz[2 * k] * ju[2 * k]).sum::<f64>();
        assert!((kernel_series(&a, 60) - even).abs() < 1e-14);
    }

    #[test]
    fn rejects_bad_args() {
        assert!(KernelArgs::new(-1.0, 1.0, 0.0, 0.0).is_err());
        assert!(KernelArgs::new(1.0, 1.0, 3.5, 0.0).is_err());
    }

    proptest! {
        #[test]
        fn series_matches_closed(z in 0.0f64..50.0, u in 0.0f64..50.0, eta in 0.0..=PI, phi in 0.0..=PI) {
            let a = args(z, u, eta, phi);
            let lmax = truncation_order(z.max(u));
            prop_assert!((kernel_series(&a, lmax) - kernel_closed(&a)).abs() <= 1e-10);
        }

        #[test]
        fn symmetries(z in 0.0f64..80.0, u in 0.0f64..80.0, eta in 0.0..=PI, phi in 0.0..=PI) {
            let k = kernel_closed(&args(z, u, eta, phi));
            prop_assert!(k.abs() <= 1.0);
            prop_assert!((k - kernel_closed(&args(z, u, phi, eta))).abs() <= 1e-15);
            prop_assert!((k - kernel_closed(&args(u, z, eta, phi))).abs() <= 1e-15);
        }
    }
}
