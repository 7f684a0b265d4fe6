//! Triangle parametrizations shared by the spatial and wavenumber domains.
//!
//! A triangle is either given by its three side lengths or by two sides and
//! the angle between them. Third-order statistics of an isotropic field only
//! depend on the triangle, not on where it sits in the plane.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Relative slack used when validating (possibly degenerate) triangles.
pub const TRIANGLE_SLACK: f64 = 1e-12;

/// Names a side of a triangle by position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    First,
    Second,
    Third,
}

impl Side {
    fn index(self) -> usize {
        match self {
            Side::First => 0,
            Side::Second => 1,
            Side::Third => 2,
        }
    }
}

/// Anything with three side lengths.
pub trait Triangle {
    fn sides(&self) -> [f64; 3];
}

macro_rules! triangle_type {
    ($(#[$meta:meta])* $name:ident, $a:ident, $b:ident, $c:ident) => {
        $(#[$meta])*
        #[derive(Debug, Clone, Copy, PartialEq)]
        pub struct $name {
            pub $a: f64,
            pub $b: f64,
            pub $c: f64,
        }

        impl $name {
            /// Validates the triangle relation with a slack of
            /// [`TRIANGLE_SLACK`] times the longest side.
            pub fn new($a: f64, $b: f64, $c: f64) -> Result<Self> {
                check_sides([$a, $b, $c])?;
                Ok(Self { $a, $b, $c })
            }

            /// Builds the triangle from the two sides adjacent to the angle.
            /// The first side is the one opposite the angle.
            pub fn from_angle($b: f64, $c: f64, angle: f64) -> Result<Self> {
                let $a = third_side($b, $c, angle)?;
                Ok(Self { $a, $b, $c })
            }

            /// Angle between the second and third sides.
            pub fn angle(&self) -> Result<f64> {
                included_angle(self, Side::First)
            }
        }

        impl Triangle for $name {
            fn sides(&self) -> [f64; 3] {
                [self.$a, self.$b, self.$c]
            }
        }
    };
}

triangle_type!(
    /// Three pairwise distances between field locations.
    SideTriangle,
    r1,
    r2,
    r3
);

triangle_type!(
    /// Three wavenumber magnitudes closing to a triangle.
    WaveTriangle,
    rho1,
    rho2,
    rho3
);

/// Two sides and the angle they enclose.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleParam {
    pub side_a: f64,
    pub side_b: f64,
    pub angle: f64,
}

impl AngleParam {
    pub fn new(side_a: f64, side_b: f64, angle: f64) -> Result<Self> {
        check_length(side_a)?;
        check_length(side_b)?;
        check_angle(angle)?;
        Ok(Self { side_a, side_b, angle })
    }

    pub fn third_side(&self) -> f64 {
        third_side_unchecked(self.side_a, self.side_b, self.angle)
    }
}

fn check_length(x: f64) -> Result<()> {
    if !(x.is_finite() && x >= 0.0) {
        return Err(Error::InvalidTriangle(format!("side length {x} is not a finite nonnegative number")));
    }
    Ok(())
}

fn check_angle(angle: f64) -> Result<()> {
    if !(0.0..=PI).contains(&angle) {
        return Err(Error::Domain(format!("angle {angle} outside [0, pi]")));
    }
    Ok(())
}

/// Checks nonnegativity and the triangle relation for three lengths.
pub fn check_sides(sides: [f64; 3]) -> Result<()> {
    for s in sides {
        check_length(s)?;
    }
    let [a, b, c] = sides;
    let slack = TRIANGLE_SLACK * a.max(b).max(c);
    if a > b + c + slack || b > a + c + slack || c > a + b + slack {
        return Err(Error::InvalidTriangle(format!("sides ({a}, {b}, {c}) violate the triangle relation")));
    }
    Ok(())
}

/// Whether three lengths form a valid (possibly degenerate) triangle.
pub fn is_triangle(a: f64, b: f64, c: f64) -> bool {
    check_sides([a, b, c]).is_ok()
}

/// Length of the side opposite `angle` in the triangle with adjacent sides
/// `a` and `b`.
pub fn third_side(a: f64, b: f64, angle: f64) -> Result<f64> {
    check_length(a)?;
    check_length(b)?;
    check_angle(angle)?;
    Ok(third_side_unchecked(a, b, angle))
}

/// Law of cosines in the form `(a - b)^2 + 4ab sin^2(angle/2)`, which has no
/// cancellation for small angles.
#[inline]
pub(crate) fn third_side_unchecked(a: f64, b: f64, angle: f64) -> f64 {
    let d = a - b;
    let s = (0.5 * angle).sin();
    (d * d + 4.0 * a * b * s * s).sqrt()
}

/// Angle enclosed by the two sides adjacent to `opposite`.
///
/// Equivalent to `acos((b^2 + c^2 - a^2) / (2bc))` clamped to `[-1, 1]`, but
/// evaluated through `atan2` of Kahan's area formula so that needle-like and
/// nearly flat triangles keep full precision.
pub fn included_angle<T: Triangle + ?Sized>(t: &T, opposite: Side) -> Result<f64> {
    let sides = t.sides();
    check_sides(sides)?;
    let i = opposite.index();
    let a = sides[i];
    let b = sides[(i + 1) % 3];
    let c = sides[(i + 2) % 3];
    if b == 0.0 || c == 0.0 {
        return Err(Error::UndefinedAngle);
    }
    let four_area = 4.0 * kahan_area(a, b, c);
    let adjacent = (b - c) * (b - c) + 2.0 * b * c - a * a;
    Ok(four_area.atan2(adjacent))
}

/// Triangle area by Kahan's rearrangement of Heron's formula. Inputs within
/// the validation slack of a degenerate triangle give zero.
pub fn kahan_area(a: f64, b: f64, c: f64) -> f64 {
    let mut s = [a, b, c];
    s.sort_by(|x, y| y.total_cmp(x));
    let [a, b, c] = s;
    let p = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
    0.25 * p.max(0.0).sqrt()
}
