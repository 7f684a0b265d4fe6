use isobisp::error::Error;
use isobisp::models::{laplacian_bispectrum, matern_cov2, matern_spectrum, GaussianModel, LaplacianParams, MaternCov2};
use isobisp::simulate::{draw_coeffs, estimate_cov2, estimate_cum3, BinEstimate, LayoutBuilder, Synthesizer};
use isobisp::transforms::{
    bispectrum_from_cov3, cov2_from_spectrum, cov3_from_bispectrum, SeriesTransform, TruncationRule, Zero,
};
use isobisp::{
    Bispectrum, IsotropicCov2, QuadratureSpec, RadialSpectrum, SideTriangle, SimConfig, TailBound, ThirdCov,
};
use serde_json::json;

use crate::args::{Model, Quadrature, Simulate, Source, Spectrum2Cov, Transform3};
use crate::grid;
use crate::output::num;
use crate::table::{Table1, Table3};

pub const OK: &str = "ok";
pub const CONVERGENCE: &str = "convergence_failure";
pub const INVALID: &str = "invalid_geometry";

/// Tabular result of a command plus whatever belongs in the manifest.
pub struct Report {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub convergence_failures: usize,
    pub invalid_rows: usize,
    pub quadrature: Option<QuadratureSpec>,
    pub summary: serde_json::Value,
}

fn row_status(e: &Error) -> &'static str {
    match e {
        // a configuration error here means no finite cutoff exists
        Error::Convergence(_) | Error::Config(_) => CONVERGENCE,
        _ => INVALID,
    }
}

fn quadrature(q: &Quadrature, default_rel_tol: f64) -> Result<QuadratureSpec, String> {
    let spec = QuadratureSpec {
        radial_cutoff: q.radial_cutoff,
        panels_per_unit: q.panels_per_unit,
        angular_nodes: q.angular_nodes,
        rel_tol: q.rel_tol.unwrap_or(default_rel_tol),
        truncation: q.lmax.map_or_else(TruncationRule::default, TruncationRule::Fixed),
    };
    spec.validate().map_err(|e| e.to_string())?;
    Ok(spec)
}

fn laplacian(s: &Source) -> Result<LaplacianParams, String> {
    LaplacianParams::new(s.sigma, s.c).map_err(|e| e.to_string())
}

fn gaussian(s: &Source) -> Result<GaussianModel, String> {
    GaussianModel::new(s.alpha).map_err(|e| e.to_string())
}

fn table_tail(s: &Source) -> f64 {
    s.tail_exponent.unwrap_or(f64::NAN)
}

fn spectrum(s: &Source) -> Result<Box<dyn RadialSpectrum>, String> {
    if let Some(path) = &s.input {
        return Ok(Box::new(Table1::read(path, table_tail(s), s.tail_scale)?));
    }
    Ok(match s.model {
        Model::Laplacian => Box::new(matern_spectrum(laplacian(s)?)),
        Model::Gaussian => Box::new(gaussian(s)?.spectrum()),
        Model::Zero => Box::new(Zero),
    })
}

/// Bispectrum and the decay of its third-order covariance.
fn bispectrum(s: &Source) -> Result<(Box<dyn Bispectrum>, TailBound), String> {
    if let Some(path) = &s.input {
        let t = Table3::read(path, table_tail(s), s.tail_scale)?;
        let tail = Bispectrum::tail(&t);
        return Ok((Box::new(t), tail));
    }
    Ok(match s.model {
        Model::Laplacian => {
            let p = laplacian(s)?;
            (Box::new(laplacian_bispectrum(p)), MaternCov2(p).tail())
        }
        Model::Gaussian => {
            let g = gaussian(s)?;
            (Box::new(g.bispectrum()), g.third_cov().tail())
        }
        Model::Zero => (Box::new(Zero), Bispectrum::tail(&Zero)),
    })
}

/// Third-order covariance and the decay of its bispectrum.
fn third_cov(s: &Source) -> Result<(Box<dyn ThirdCov>, TailBound), String> {
    if let Some(path) = &s.input {
        let t = Table3::read(path, table_tail(s), s.tail_scale)?;
        let tail = ThirdCov::tail(&t);
        return Ok((Box::new(t), tail));
    }
    Ok(match s.model {
        Model::Laplacian => {
            return Err("the laplacian third-order covariance has no closed form; tabulate it and pass --input".into())
        }
        Model::Gaussian => {
            let g = gaussian(s)?;
            (Box::new(g.third_cov()), g.bispectrum().tail())
        }
        Model::Zero => (Box::new(Zero), ThirdCov::tail(&Zero)),
    })
}

pub fn spectrum2cov(a: &Spectrum2Cov) -> Result<Report, String> {
    let q = quadrature(&a.quadrature, 1e-6)?;
    let f = spectrum(&a.source)?;
    let mut report = Report::new(vec!["r", "C2", "status"], Some(q));
    for r in grid::axis(&a.grid)? {
        let (value, status) = match cov2_from_spectrum(&*f, r, &q) {
            Ok(v) => (v, OK),
            Err(e) => (f64::NAN, row_status(&e)),
        };
        report.push(vec![num(r), num(value), status.into()], status);
    }
    report.summary = json!({ "rows": report.rows.len() });
    Ok(report)
}

/// Both third-order directions; `forward` selects bispectrum to covariance.
pub fn transform3(a: &Transform3, forward: bool) -> Result<Report, String> {
    let q = quadrature(&a.quadrature, 1e-4)?;
    let mut points = Vec::new();
    for g in &a.grid {
        points.extend(grid::triangles(g)?);
    }
    let mut header = if forward { vec!["r2", "r3", "phi", "C3"] } else { vec!["rho2", "rho3", "eta", "S3"] };
    header.push("status");
    if a.verify_roundtrip {
        header.extend(["input", "roundtrip", "roundtrip_rel_dev"]);
    }
    let mut report = Report::new(header, Some(q));

    let input = if forward {
        let (s3, tail) = bispectrum(&a.source)?;
        Input::Bispectrum(s3, tail)
    } else {
        let (c3, tail) = third_cov(&a.source)?;
        Input::ThirdCov(c3, tail)
    };

    let series = if a.verify_roundtrip {
        // the opposite transform integrates the series over the doubled
        // radial range it uses to check its own cutoff
        let back = QuadratureSpec { radial_cutoff: None, ..q };
        let built = match &input {
            Input::Bispectrum(s3, tail) => {
                SeriesTransform::forward(&**s3, 2.0 * tail.cutoff(back.rel_tol, 2), *tail, &q)
            }
            Input::ThirdCov(c3, tail) => SeriesTransform::inverse(&**c3, 2.0 * tail.cutoff(back.rel_tol, 2), *tail, &q),
        };
        Some((built.map_err(|e| format!("series evaluation for the roundtrip failed: {e}"))?, back))
    } else {
        None
    };

    let mut max_dev: f64 = 0.0;
    for [x, y, t] in points {
        let (value, mut status) = match input.transform(x, y, t, &q) {
            Ok(v) => (v, OK),
            Err(e) => (f64::NAN, row_status(&e)),
        };
        let mut row = vec![num(x), num(y), num(t), num(value), String::new()];
        if let Some((s, back)) = &series {
            let reference = if status == INVALID { f64::NAN } else { input.value(x, y, t) };
            let round = if status == INVALID {
                Err(Error::Domain(String::new()))
            } else if forward {
                bispectrum_from_cov3(s, x, y, t, back)
            } else {
                cov3_from_bispectrum(s, x, y, t, back)
            };
            let round = match round {
                Ok(v) => v,
                Err(e) => {
                    if status == OK {
                        status = row_status(&e);
                    }
                    f64::NAN
                }
            };
            let dev = ((round - reference) / reference).abs();
            if dev.is_finite() {
                max_dev = max_dev.max(dev);
            }
            row.extend([num(reference), num(round), num(dev)]);
        }
        row[4] = status.into();
        report.push(row, status);
    }
    report.summary = json!({ "rows": report.rows.len() });
    if a.verify_roundtrip {
        report.summary["roundtrip_max_rel_dev"] = json!(max_dev);
        eprintln!("roundtrip max relative deviation: {max_dev:e}");
    }
    Ok(report)
}

pub fn simulate(a: &Simulate) -> Result<Report, String> {
    let f = spectrum(&a.source)?;
    let r_bins = grid::axis(&a.grid)?;
    let triangles = a
        .triangles
        .iter()
        .map(|s| {
            let [r1, r2, r3] = grid::sides(s)?;
            SideTriangle::new(r1, r2, r3).map_err(|e| format!("triangle {s:?}: {e}"))
        })
        .collect::<Result<Vec<_>, String>>()?;
    if !(a.radius > 0.0) || a.copies == 0 {
        return Err("--radius and --copies must be positive".into());
    }
    let longest = r_bins.iter().copied().chain(triangles.iter().flat_map(|t| [t.r1, t.r2, t.r3])).fold(0.0, f64::max);
    if longest >= a.radius {
        return Err(format!("layout radius {} must exceed the longest requested distance {longest}", a.radius));
    }
    let mut layout = LayoutBuilder::new();
    for &r in &r_bins {
        layout = layout.pairs(r, a.copies, a.radius - r);
    }
    for t in &triangles {
        layout = layout.triangles(t, a.copies, a.radius - t.r2.max(t.r3)).map_err(|e| e.to_string())?;
    }
    let points = layout.build();

    let mut cfg = SimConfig::midpoint(a.rho_max, a.nodes, 0, a.realizations, a.seed).map_err(|e| e.to_string())?;
    cfg.l_max = a.lmax.unwrap_or_else(|| cfg.required_l_max(a.radius));
    let rho: Vec<f64> = cfg.rho_nodes.iter().map(|n| n.0).collect();
    let synth = Synthesizer::new(&rho, cfg.l_max, &points);
    let samples = (0..cfg.n_realizations as u64)
        .map(|k| synth.synthesize(&draw_coeffs(&*f, &cfg, k)))
        .collect::<isobisp::Result<Vec<_>>>()
        .map_err(|e| e.to_string())?;
    let truncated = samples.first().is_some_and(|s| s.truncated);
    let max_imag = samples.iter().map(|s| s.max_imag).fold(0.0, f64::max);

    let cov2_target = |r: f64| -> f64 {
        if a.source.input.is_some() {
            return cov2_from_spectrum(&*f, r, &QuadratureSpec::default()).unwrap_or(f64::NAN);
        }
        match a.source.model {
            Model::Laplacian => laplacian(&a.source).map_or(f64::NAN, |p| matern_cov2(p, r)),
            Model::Gaussian => gaussian(&a.source).map_or(f64::NAN, |g| g.cov2(r)),
            Model::Zero => 0.0,
        }
    };

    let header =
        vec!["kind", "r1", "r2", "r3", "matches", "estimate", "stderr", "target", "z", "within_3sigma", "status"];
    let mut report = Report::new(header, None);
    let (mut within, mut empty) = (0, 0);
    let mut push = |kind: &str, sides: [String; 3], est: &BinEstimate, target: f64, report: &mut Report| {
        let (estimate, stderr, z, ok, status) = match est.moment {
            Some(m) => {
                let z = (m.mean - target) / m.stderr;
                // a zero-variance estimate is within its band only when exact
                let ok = if m.stderr > 0.0 { z.abs() <= 3.0 } else { m.mean == target };
                (m.mean, m.stderr, z, ok, OK)
            }
            None => (f64::NAN, f64::NAN, f64::NAN, false, "empty"),
        };
        within += ok as usize;
        empty += (est.moment.is_none()) as usize;
        let [s1, s2, s3] = sides;
        report.rows.push(vec![
            kind.into(),
            s1,
            s2,
            s3,
            est.matches.to_string(),
            num(estimate),
            num(stderr),
            num(target),
            num(z),
            ok.to_string(),
            status.into(),
        ]);
    };
    for (r, est) in r_bins.iter().zip(estimate_cov2(&samples, &r_bins).map_err(|e| e.to_string())?) {
        push("cov2", [num(*r), String::new(), String::new()], &est, cov2_target(*r), &mut report);
    }
    for (t, est) in triangles.iter().zip(estimate_cum3(&samples, &triangles).map_err(|e| e.to_string())?) {
        push("cum3", [num(t.r1), num(t.r2), num(t.r3)], &est, 0.0, &mut report);
    }
    let bins = report.rows.len();
    report.summary = json!({
        "bins": bins,
        "within_3sigma": within,
        "empty_bins": empty,
        "pass": within == bins,
        "points": points.len(),
        "l_max": cfg.l_max,
        "l_max_truncated": truncated,
        "max_imaginary_residue": max_imag,
        "rng": "ChaCha8, stream = realization, word position from (order, node)",
    });
    Ok(report)
}

impl Report {
    fn new(header: Vec<&'static str>, quadrature: Option<QuadratureSpec>) -> Self {
        Self {
            header,
            rows: Vec::new(),
            convergence_failures: 0,
            invalid_rows: 0,
            quadrature,
            summary: serde_json::Value::Null,
        }
    }

    fn push(&mut self, row: Vec<String>, status: &str) {
        match status {
            CONVERGENCE => self.convergence_failures += 1,
            INVALID => self.invalid_rows += 1,
            _ => {}
        }
        self.rows.push(row);
    }
}

/// Input of a third-order command with the decay of its transform.
enum Input {
    Bispectrum(Box<dyn Bispectrum>, TailBound),
    ThirdCov(Box<dyn ThirdCov>, TailBound),
}

impl Input {
    fn value(&self, x: f64, y: f64, t: f64) -> f64 {
        match self {
            Input::Bispectrum(f, _) => f.value(x, y, t),
            Input::ThirdCov(f, _) => f.value(x, y, t),
        }
    }

    fn transform(&self, x: f64, y: f64, t: f64, q: &QuadratureSpec) -> isobisp::Result<f64> {
        match self {
            Input::Bispectrum(f, _) => cov3_from_bispectrum(&**f, x, y, t, q),
            Input::ThirdCov(f, _) => bispectrum_from_cov3(&**f, x, y, t, q),
        }
    }
}
