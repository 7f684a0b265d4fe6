mod args;
mod commands;
mod grid;
mod output;
mod table;

use std::process::ExitCode;

use clap::Parser;
use serde_json::json;

use args::{Cli, Command};
use commands::Report;

const EXIT_FAILURE: u8 = 1;
const EXIT_CONVERGENCE: u8 = 2;
const EXIT_GEOMETRY: u8 = 3;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // keep 2 for convergence failures
            return if e.use_stderr() { ExitCode::from(EXIT_FAILURE) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_FAILURE)
        }
    }
}

fn run(command: &Command) -> Result<u8, String> {
    let started = output::unix_now();
    let (name, parameters, out, seed, report) = match command {
        Command::Spectrum2cov(a) => ("spectrum2cov", json!(a), &a.out, None, commands::spectrum2cov(a)?),
        Command::Bisp2cov3(a) => ("bisp2cov3", json!(a), &a.out, None, commands::transform3(a, true)?),
        Command::Cov32bisp(a) => ("cov32bisp", json!(a), &a.out, None, commands::transform3(a, false)?),
        Command::Simulate(a) => ("simulate", json!(a), &a.out, Some(a.seed), commands::simulate(a)?),
    };
    let Report { header, rows, convergence_failures, invalid_rows, quadrature, summary } = report;
    let out = out.as_deref();
    output::write_csv(out, &header, &rows).map_err(|e| format!("writing output: {e}"))?;

    let manifest = json!({
        "tool": "isobisp",
        "version": env!("CARGO_PKG_VERSION"),
        "command": name,
        "parameters": parameters,
        "quadrature": quadrature.map(|q| json!({
            "rel_tol": q.rel_tol,
            "radial_cutoff": q.radial_cutoff,
            "panels_per_unit": q.panels_per_unit,
            "angular_nodes": q.angular_nodes,
            "truncation": format!("{:?}", q.truncation),
        })),
        "seed": seed,
        "output": out.map(|p| p.display().to_string()),
        "columns": header,
        "rows": rows.len(),
        "convergence_failures": convergence_failures,
        "invalid_rows": invalid_rows,
        "summary": summary,
        "started_unix_s": started,
        "finished_unix_s": output::unix_now(),
    });
    output::write_manifest(out, &manifest).map_err(|e| format!("writing manifest: {e}"))?;

    if convergence_failures > 0 {
        eprintln!("{convergence_failures} of {} rows failed to converge", rows.len());
    }
    if invalid_rows > 0 {
        eprintln!("{invalid_rows} of {} rows skipped as invalid geometry", rows.len());
        return Ok(EXIT_GEOMETRY);
    }
    Ok(if convergence_failures > 0 { EXIT_CONVERGENCE } else { 0 })
}
