//! `growthrate`: growth analysis and numeric experiments for representations
//! of products of `SL(n, R)`.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, ValueEnum};
use growth_core::growth::{analyze, AnalyzeOptions};
use growth_core::harness::{
    count_product_sl2z, count_sl2z, fit_growth, log_grid, orbit_distribution, CountSeries, HaarIntegrator, SeriesKind,
    Sl2Norm,
};
use growth_core::repexpr::parse_rep_expr;
use growth_core::repspace::Representation;
use growth_core::sinhsum::ExpSum;
use growth_core::verify::run_all;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Command {
    Analyze,
    ExpandSinh,
    HaarVolume,
    CountLattice,
    OrbitDist,
    Verify,
}

#[derive(Debug, Parser)]
#[command(name = "growthrate", version, about = "Exact growth exponents of norm balls and numeric checks")]
struct Args {
    /// Representation, e.g. "A3: std + dual(std)" or "A2: std x A2: adj".
    #[arg(long)]
    rep: Option<String>,
    #[arg(long, value_enum)]
    cmd: Command,
    /// Output directory, created if missing.
    #[arg(long, default_value = ".")]
    out: PathBuf,
    #[arg(long, default_value_t = 100.0)]
    tmin: f64,
    #[arg(long, default_value_t = 10000.0)]
    tmax: f64,
    /// Number of log-spaced radii.
    #[arg(long, default_value_t = 24)]
    steps: usize,
    /// Gauss cells per axis on each simplex of the chamber polytope.
    #[arg(long, default_value_t = 12)]
    resolution: usize,
    /// frobenius, supEntry or adjointSup.
    #[arg(long, default_value = "frobenius")]
    norm: String,
    /// Radial and angular cells of the orbit histogram.
    #[arg(long, default_value_t = 12)]
    bins: usize,
    /// Orbit vector `x,y`.
    #[arg(long, default_value = "1,0")]
    vector: String,
    #[arg(long)]
    optimize_frame: bool,
}

/// Pretty JSON with sorted keys and a trailing newline.
fn canonical_json<T: Serialize>(value: &T) -> Result<String> {
    let v: serde_json::Value = serde_json::to_value(value)?;
    Ok(serde_json::to_string_pretty(&v)? + "\n")
}

fn write(dir: &Path, name: &str, contents: &str) -> Result<()> {
    let path = dir.join(name);
    fs::write(&path, contents).with_context(|| format!("writing {}", path.display()))
}

fn series_csv(experiment: &str, fixture: &str, series: &CountSeries) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["experiment", "fixture", "T", "value"])?;
    for (t, v) in &series.rows {
        w.write_record([experiment, fixture, &t.to_string(), &v.to_string()])?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn radii(args: &Args) -> Result<Vec<f64>> {
    if !(args.tmin > 1.0 && args.tmin < args.tmax) || args.steps < 2 {
        bail!("need 1 < tmin < tmax and steps >= 2");
    }
    Ok(log_grid(args.tmin, args.tmax, args.steps))
}

fn require_rep(args: &Args) -> Result<(String, Representation)> {
    let expr = args.rep.clone().context("--rep is required for this command")?;
    let rep = parse_rep_expr(&expr).with_context(|| format!("invalid representation '{expr}'"))?;
    Ok((expr, rep))
}

fn run(args: &Args) -> Result<bool> {
    let rep = match (&args.rep, args.cmd) {
        (None, Command::Verify | Command::OrbitDist) => None,
        _ => Some(require_rep(args)?),
    };
    fs::create_dir_all(&args.out).with_context(|| format!("creating {}", args.out.display()))?;
    let out = args.out.as_path();

    match args.cmd {
        Command::Analyze => {
            let (_, rep) = rep.expect("checked above");
            let report = analyze(&rep, &AnalyzeOptions { optimize_frame: args.optimize_frame })?;
            write(out, "report.json", &canonical_json(&report)?)?;
            println!("d = {}, e = {}", report.d, report.e);
        }
        Command::ExpandSinh => {
            let (_, rep) = rep.expect("checked above");
            let es = ExpSum::expand(rep.root_system());
            write(out, "expansion.json", &canonical_json(&es)?)?;
            println!("{} terms", es.len());
        }
        Command::HaarVolume => {
            let (expr, rep) = rep.expect("checked above");
            let hi = HaarIntegrator::new(&rep)?;
            let rows = radii(args)?
                .into_iter()
                .map(|t| Ok((t, hi.volume(t, args.resolution)?)))
                .collect::<Result<Vec<_>>>()?;
            let series = CountSeries::new(SeriesKind::HaarVolume, rows)?;
            finish_series(out, "haar-volume", &expr, &series, rep.root_system().rank())?;
        }
        Command::CountLattice => {
            let (expr, rep) = rep.expect("checked above");
            let factors = rep.root_system().factors().to_vec();
            let count: Box<dyn Fn(f64) -> u64> = match factors.as_slice() {
                [2] => {
                    let norm: Sl2Norm = args.norm.parse().map_err(anyhow::Error::msg)?;
                    Box::new(move |t| count_sl2z(t, norm))
                }
                [2, 2] => Box::new(count_product_sl2z),
                _ => bail!("lattice counts are available over A2 (SL(2,Z)) and A2 x A2 (SL(2,Z)^2)"),
            };
            let rows = radii(args)?.into_iter().map(|t| (t, count(t) as f64)).collect();
            let series = CountSeries::new(SeriesKind::LatticeCount, rows)?;
            finish_series(out, "count-lattice", &expr, &series, rep.root_system().rank())?;
        }
        Command::OrbitDist => {
            if rep.as_ref().is_some_and(|(_, r)| r.root_system().factors() != [2]) {
                bail!("orbit distributions are available for SL(2,Z) only (--rep \"A2: std\")");
            }
            let v = parse_vector(&args.vector)?;
            let h = orbit_distribution(v, args.tmax, args.bins)?;
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["binCenterRadius", "binCenterAngle", "empiricalMass", "predictedMass"])?;
            for b in &h.bins {
                w.write_record([
                    b.bin_center_radius.to_string(),
                    b.bin_center_angle.to_string(),
                    b.empirical_mass.to_string(),
                    b.predicted_mass.to_string(),
                ])?;
            }
            write(out, "histogram.csv", &String::from_utf8(w.into_inner()?)?)?;
            let summary = serde_json::json!({
                "count": h.count,
                "totalVariation": h.total_variation,
                "maxRadiusRatio": h.max_radius_ratio,
                "radialBins": h.radial_bins,
                "angularBins": h.angular_bins,
                "T": args.tmax,
                "vector": v,
            });
            write(out, "orbit.json", &canonical_json(&summary)?)?;
            println!("{} points, total variation {:.4}", h.count, h.total_variation);
        }
        Command::Verify => {
            let checks = run_all();
            for c in &checks {
                println!("{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
            }
            write(out, "verify.json", &canonical_json(&checks)?)?;
            return Ok(checks.iter().all(|c| c.passed));
        }
    }
    Ok(true)
}

fn finish_series(out: &Path, experiment: &str, fixture: &str, series: &CountSeries, rank: usize) -> Result<()> {
    write(out, "series.csv", &series_csv(experiment, fixture, series)?)?;
    let fit = fit_growth(series, rank)?;
    write(out, "fit.json", &canonical_json(&fit)?)?;
    println!("dHat = {:.4}, eHat = {}", fit.d_hat, fit.e_hat);
    Ok(())
}

fn parse_vector(s: &str) -> Result<[f64; 2]> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [x, y] => Ok([x.parse()?, y.parse()?]),
        _ => bail!("expected a vector 'x,y', got '{s}'"),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
