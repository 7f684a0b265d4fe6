//! Grid specifications on the command line.
//!
//! A scalar is a decimal number or a multiple of pi such as `pi/3`, `2pi/3`
//! or `-pi`. An axis is a comma list whose items are scalars or inclusive
//! ranges `start:stop:count`. A triangle grid is three axes joined by `;`
//! and expands to their tensor product in row-major order.

use std::f64::consts::PI;

pub fn scalar(s: &str) -> Result<f64, String> {
    let s = s.trim();
    let bad = || format!("cannot read {s:?} as a number");
    let Some(at) = s.find("pi") else {
        return s.parse().map_err(|_| bad());
    };
    let coeff = match s[..at].trim().trim_end_matches('*') {
        "" | "+" => 1.0,
        "-" => -1.0,
        c => c.parse::<f64>().map_err(|_| bad())?,
    };
    let rest = s[at + 2..].trim();
    let div = match rest.strip_prefix('/') {
        Some(d) => d.trim().parse::<f64>().map_err(|_| bad())?,
        None if rest.is_empty() => 1.0,
        None => return Err(bad()),
    };
    Ok(coeff * PI / div)
}

pub fn axis(s: &str) -> Result<Vec<f64>, String> {
    let mut out = Vec::new();
    for item in s.split(',').map(str::trim).filter(|i| !i.is_empty()) {
        let parts: Vec<&str> = item.split(':').collect();
        match parts[..] {
            [x] => out.push(scalar(x)?),
            [a, b, n] => {
                let (a, b) = (scalar(a)?, scalar(b)?);
                let n: usize = n.trim().parse().map_err(|_| format!("bad point count in {item:?}"))?;
                match n {
                    0 => return Err(format!("empty range {item:?}")),
                    1 => out.push(a),
                    _ => {
                        out.extend((0..n).map(|k| if k == n - 1 { b } else { a + (b - a) * k as f64 / (n - 1) as f64 }))
                    }
                }
            }
            _ => return Err(format!("cannot read {item:?} as a value or start:stop:count")),
        }
    }
    if out.is_empty() {
        return Err(format!("empty grid {s:?}"));
    }
    Ok(out)
}

/// Rows `(side, side, angle)` of a triangle grid.
pub fn triangles(s: &str) -> Result<Vec<[f64; 3]>, String> {
    let axes: Vec<Vec<f64>> = s.split(';').map(axis).collect::<Result<_, _>>()?;
    let [a, b, t] = &axes[..] else {
        return Err(format!("triangle grid {s:?} needs three axes separated by ';'"));
    };
    Ok(a.iter().flat_map(|&x| b.iter().flat_map(move |&y| t.iter().map(move |&z| [x, y, z]))).collect())
}

/// Three side lengths `r1,r2,r3`.
pub fn sides(s: &str) -> Result<[f64; 3], String> {
    let v: Vec<f64> = s.split(',').map(scalar).collect::<Result<_, _>>()?;
    v.try_into().map_err(|_| format!("expected three side lengths in {s:?}"))
}
