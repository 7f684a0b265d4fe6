//! Tabulated input functions read from CSV.
//!
//! Radial functions come as two columns `(x, value)` with increasing `x`;
//! triangle functions as four columns `(side, side, angle, value)` covering
//! a full tensor grid in any row order. A header row is required and lines
//! starting with `#` are ignored. Values are interpolated linearly. Past the
//! largest tabulated radius the function continues as `x^-p` with the
//! declared exponent `p`, separately in each radial coordinate.

use std::path::Path;

use isobisp::{Bispectrum, IsotropicCov2, RadialSpectrum, TailBound, ThirdCov};

fn read_rows(path: &Path, columns: usize) -> Result<Vec<Vec<f64>>, String> {
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| format!("{}: {e}", path.display()))?;
    let mut rows = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record.map_err(|e| format!("{}: {e}", path.display()))?;
        if record.len() != columns {
            return Err(format!("{}: row {} has {} columns, expected {columns}", path.display(), i + 1, record.len()));
        }
        let row = record
            .iter()
            .map(|f| f.parse::<f64>().ok().filter(|v| v.is_finite()))
            .collect::<Option<Vec<f64>>>()
            .ok_or_else(|| format!("{}: row {} is not numeric", path.display(), i + 1))?;
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(format!("{}: no data rows", path.display()));
    }
    Ok(rows)
}

fn check_tail(exponent: f64, scale: f64) -> Result<TailBound, String> {
    if !(exponent > 0.0 && exponent.is_finite() && scale > 0.0 && scale.is_finite()) {
        return Err(format!("tail exponent {exponent} and scale {scale} must be positive"));
    }
    Ok(TailBound::Algebraic { exponent, scale })
}

/// Interval index and fraction of `x` on a sorted axis, clamped to its ends.
fn locate(axis: &[f64], x: f64) -> (usize, f64) {
    if axis.len() == 1 || x <= axis[0] {
        return (0, 0.0);
    }
    let last = axis.len() - 1;
    if x >= axis[last] {
        return (last - 1, 1.0);
    }
    let i = axis.partition_point(|&a| a <= x) - 1;
    (i, (x - axis[i]) / (axis[i + 1] - axis[i]))
}

fn power_tail(x: f64, edge: f64, exponent: f64) -> f64 {
    if x > edge && edge > 0.0 {
        (edge / x).powf(exponent)
    } else {
        1.0
    }
}

#[derive(Debug, Clone)]
pub struct Table1 {
    x: Vec<f64>,
    y: Vec<f64>,
    exponent: f64,
    tail: TailBound,
}

impl Table1 {
    pub fn read(path: &Path, exponent: f64, scale: f64) -> Result<Self, String> {
        let rows = read_rows(path, 2)?;
        let x: Vec<f64> = rows.iter().map(|r| r[0]).collect();
        if x[0] < 0.0 || x.windows(2).any(|w| w[1] <= w[0]) {
            return Err(format!("{}: abscissae must be nonnegative and increasing", path.display()));
        }
        let y = rows.iter().map(|r| r[1]).collect();
        Ok(Self { x, y, exponent, tail: check_tail(exponent, scale)? })
    }

    pub fn eval(&self, t: f64) -> f64 {
        let (i, s) = locate(&self.x, t);
        let v = if self.x.len() == 1 { self.y[0] } else { self.y[i] + s * (self.y[i + 1] - self.y[i]) };
        v * power_tail(t, *self.x.last().unwrap(), self.exponent)
    }
}

impl RadialSpectrum for Table1 {
    fn density(&self, rho: f64) -> f64 {
        self.eval(rho)
    }
    fn tail(&self) -> TailBound {
        self.tail
    }
}

impl IsotropicCov2 for Table1 {
    fn value(&self, r: f64) -> f64 {
        self.eval(r)
    }
    fn tail(&self) -> TailBound {
        self.tail
    }
}

#[derive(Debug, Clone)]
pub struct Table3 {
    a: Vec<f64>,
    b: Vec<f64>,
    angle: Vec<f64>,
    /// `[i][j][k]` over `(a, b, angle)`.
    v: Vec<f64>,
    exponent: f64,
    tail: TailBound,
}

fn axis_of(rows: &[Vec<f64>], col: usize) -> Vec<f64> {
    let mut v: Vec<f64> = rows.iter().map(|r| r[col]).collect();
    v.sort_by(f64::total_cmp);
    v.dedup();
    v
}

impl Table3 {
    pub fn read(path: &Path, exponent: f64, scale: f64) -> Result<Self, String> {
        let rows = read_rows(path, 4)?;
        let (a, b, angle) = (axis_of(&rows, 0), axis_of(&rows, 1), axis_of(&rows, 2));
        let (na, nb, nt) = (a.len(), b.len(), angle.len());
        if a[0] < 0.0 || b[0] < 0.0 || angle[0] < 0.0 || angle[nt - 1] > std::f64::consts::PI {
            return Err(format!("{}: sides must be nonnegative and angles within [0, pi]", path.display()));
        }
        let mut v = vec![f64::NAN; na * nb * nt];
        for r in &rows {
            let i = a.partition_point(|&x| x < r[0]);
            let j = b.partition_point(|&x| x < r[1]);
            let k = angle.partition_point(|&x| x < r[2]);
            v[(i * nb + j) * nt + k] = r[3];
        }
        if rows.len() != v.len() || v.iter().any(|x| x.is_nan()) {
            return Err(format!("{}: rows must cover a {na} x {nb} x {nt} tensor grid exactly once", path.display()));
        }
        Ok(Self { a, b, angle, v, exponent, tail: check_tail(exponent, scale)? })
    }

    pub fn eval(&self, x: f64, y: f64, t: f64) -> f64 {
        let (nb, nt) = (self.b.len(), self.angle.len());
        let (i, si) = locate(&self.a, x);
        let (j, sj) = locate(&self.b, y);
        let (k, sk) = locate(&self.angle, t);
        let at = |di: usize, dj: usize, dk: usize| {
            let ii = (i + di).min(self.a.len() - 1);
            let jj = (j + dj).min(nb - 1);
            let kk = (k + dk).min(nt - 1);
            self.v[(ii * nb + jj) * nt + kk]
        };
        let mut sum = 0.0;
        for (di, wi) in [(0, 1.0 - si), (1, si)] {
            for (dj, wj) in [(0, 1.0 - sj), (1, sj)] {
                for (dk, wk) in [(0, 1.0 - sk), (1, sk)] {
                    let w = wi * wj * wk;
                    if w != 0.0 {
                        sum += w * at(di, dj, dk);
                    }
                }
            }
        }
        sum * power_tail(x, *self.a.last().unwrap(), self.exponent)
            * power_tail(y, *self.b.last().unwrap(), self.exponent)
    }
}

impl Bispectrum for Table3 {
    fn value(&self, rho2: f64, rho3: f64, eta: f64) -> f64 {
        self.eval(rho2, rho3, eta)
    }
    fn tail(&self) -> TailBound {
        self.tail
    }
}

impl ThirdCov for Table3 {
    fn value(&self, r2: f64, r3: f64, phi: f64) -> f64 {
        self.eval(r2, r3, phi)
    }
    fn tail(&self) -> TailBound {
        self.tail
    }
}
