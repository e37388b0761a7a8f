// SPDX-License-Identifier: Apache-2.0

//! Command-line front end: curve rendering, glyph pipelines, parameter
//! sweeps and coefficient/regularity tables.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 unreadable input or arguments,
//! 3 violated numerical precondition.

use std::f64::consts::TAU;
use std::fs;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use tricontour::coeffs::{growth_ratio, jacobsthal_recurrence, max_smoothness, Smoothness};
use tricontour::geometry::{curvature_radius, gamma_point, shape_metrics, WidthParam};
use tricontour::glyph::{glyph_spectra, transform_glyph, truncate_glyph, GlyphDocument};
use tricontour::operators::{cw_coefficients, OperatorConfig};
use tricontour::regularity::{diff_quotient_table, r_of_cos_partial, r_of_sin_partial, DEFAULT_EXTRA_TERMS};
use tricontour::render::{emit_graph_svg, emit_svg, RenderOptions};
use tricontour::spectral::{SampledLoop, SpectralSeries};
use tricontour::Error;

const GRAPH_DEPTH: usize = 24;
const GRAPH_POINTS: usize = 4096;
const SWEEP_SAMPLES: usize = 4096;

#[derive(Parser, Debug)]
#[command(name = "tricontour", version, about = "Constant-width Fourier series for closed contours")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Render the curve γ or print its metrics.
    Gamma(GammaArgs),
    /// Truncated Fourier series L_m of a glyph.
    Truncate(TruncateArgs),
    /// Apply Rₙ∘T to the truncated series of a glyph.
    Transform(TransformArgs),
    /// Grid of transform outputs over several a and n.
    Sweep(SweepArgs),
    /// Print Fourier or constant-width coefficients as TSV.
    Analyze(AnalyzeArgs),
    /// Coefficient tables, the difference-quotient table, R(sin)/R(cos) graphs.
    Probe(ProbeArgs),
}

#[derive(Args, Debug, Clone)]
struct Canvas {
    /// Canvas width.
    #[arg(long, default_value_t = 512.0)]
    width: f64,
    /// Canvas height.
    #[arg(long, default_value_t = 512.0)]
    height: f64,
    #[arg(long, default_value_t = 16.0)]
    margin: f64,
    #[arg(long, default_value_t = 1.5)]
    stroke: f64,
}

impl Canvas {
    fn options(&self, y_up: bool) -> RenderOptions {
        RenderOptions {
            stroke_width: self.stroke,
            width: self.width,
            height: self.height,
            margin: self.margin,
            y_up,
            ..RenderOptions::default()
        }
    }
}

#[derive(Args, Debug)]
struct GammaArgs {
    /// Shape parameter in [0, 1/3); fractions like 1/8 are accepted.
    #[arg(long, value_parser = parse_real)]
    a: f64,
    /// Write the curve as SVG.
    #[arg(long, conflicts_with = "metrics")]
    svg: Option<PathBuf>,
    /// Write the sampled curve as `re,im` CSV.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Print area, perimeter and convexity (default when no file is requested).
    #[arg(long)]
    metrics: bool,
    #[arg(long = "N", default_value_t = 1024)]
    samples: usize,
    #[command(flatten)]
    canvas: Canvas,
}

#[derive(Args, Debug)]
struct TruncateArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    m: usize,
    #[arg(long = "N", default_value_t = RenderOptions::default().samples_out)]
    samples: usize,
    #[arg(long)]
    out: PathBuf,
    #[command(flatten)]
    canvas: Canvas,
}

#[derive(Args, Debug)]
struct TransformArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, value_parser = parse_real)]
    a: f64,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[arg(long = "N", default_value_t = RenderOptions::default().samples_out)]
    samples: usize,
    #[arg(long)]
    out: PathBuf,
    #[command(flatten)]
    canvas: Canvas,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long = "in")]
    input: PathBuf,
    /// Comma-separated shape parameters.
    #[arg(long, value_parser = parse_real, value_delimiter = ',', required = true)]
    a: Vec<f64>,
    /// Inclusive range `i1..i2`, or a single order.
    #[arg(long, value_parser = parse_range)]
    n: RangeInclusive<usize>,
    #[arg(long)]
    m: usize,
    #[arg(long = "N", default_value_t = SWEEP_SAMPLES)]
    samples: usize,
    #[arg(long)]
    outdir: PathBuf,
    #[command(flatten)]
    canvas: Canvas,
}

#[derive(Args, Debug)]
struct AnalyzeArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    m: usize,
    /// With --n, print constant-width coefficients instead of Fourier ones.
    #[arg(long, value_parser = parse_real, requires = "n")]
    a: Option<f64>,
    #[arg(long, requires = "a")]
    n: Option<usize>,
    /// Largest |k| printed for constant-width coefficients (default: all).
    #[arg(long = "K")]
    max_index: Option<usize>,
    #[arg(long = "N", default_value_t = RenderOptions::default().samples_out)]
    samples: usize,
    /// Print spectral JSON (`[[k, re, im], …]`, one line per contour).
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
#[command(group(clap::ArgGroup::new("what").required(true).multiple(true).args(["coeffs", "quotient", "graphs"])))]
struct ProbeArgs {
    /// Table of (ℓ, jₗ, jₗ/jₗ₋₁) for ℓ < len.
    #[arg(long)]
    coeffs: bool,
    /// Difference quotients of R(sin) at t = π/2ⁿ for a = 1/8.
    #[arg(long)]
    quotient: bool,
    /// Write graphs of R(sin) and R(cos) as SVG.
    #[arg(long, requires = "out")]
    graphs: bool,
    #[arg(long, value_parser = parse_real, default_value = "1/8")]
    a: f64,
    #[arg(long, default_value_t = 20)]
    len: usize,
    #[arg(long, default_value_t = 20)]
    nmax: u32,
    /// Partial-sum depth for the quotient table (default: nmax + 4).
    #[arg(long)]
    terms: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    canvas: Canvas,
}

/// Decimal or `p/q`.
fn parse_real(s: &str) -> Result<f64, String> {
    let s = s.trim();
    let v = match s.split_once('/') {
        Some((p, q)) => {
            let p: f64 = p.trim().parse().map_err(|e| format!("{s:?}: {e}"))?;
            let q: f64 = q.trim().parse().map_err(|e| format!("{s:?}: {e}"))?;
            p / q
        }
        None => s.parse().map_err(|e| format!("{s:?}: {e}"))?,
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("{s:?} is not a finite number"))
    }
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let bad = |e: std::num::ParseIntError| format!("{s:?}: {e}");
    match s.split_once("..") {
        Some((lo, hi)) => {
            let lo: usize = lo.trim().parse().map_err(bad)?;
            let hi: usize = hi.trim().trim_start_matches('=').parse().map_err(bad)?;
            if lo > hi {
                return Err(format!("empty range {s:?}"));
            }
            Ok(lo..=hi)
        }
        None => {
            let v: usize = s.trim().parse().map_err(bad)?;
            Ok(v..=v)
        }
    }
}

/// `a` as it appears in sweep file names: at most 6 decimals, trailing zeros dropped.
fn format_a(a: f64) -> String {
    let s = format!("{a:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s.is_empty() { "0".to_string() } else { s.to_string() }
}

fn width(a: f64) -> Result<WidthParam, Error> {
    WidthParam::new(a)
}

fn load(path: &Path) -> Result<GlyphDocument, Error> {
    GlyphDocument::load(path)?.normalized()
}

fn write_file(path: &Path, text: &str) -> Result<(), Error> {
    fs::write(path, text).map_err(|e| Error::Io { path: path.display().to_string(), message: e.to_string() })
}

fn run(cli: Cli) -> Result<(), Error> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let io_err = |e: io::Error| Error::Io { path: "<stdout>".into(), message: e.to_string() };

    match cli.command {
        Command::Gamma(args) => {
            let a = width(args.a)?;
            let lp = SampledLoop::from_fn(args.samples, |t| gamma_point(a, t))?;
            if let Some(path) = &args.svg {
                write_file(path, &emit_svg(std::slice::from_ref(&lp), &args.canvas.options(true))?)?;
            }
            if let Some(path) = &args.csv {
                write_file(path, &lp.to_csv())?;
            }
            if args.metrics || (args.svg.is_none() && args.csv.is_none()) {
                let m = shape_metrics(a);
                let smooth = match max_smoothness(a) {
                    Smoothness::Order(k) => k.to_string(),
                    Smoothness::Infinite => "inf".to_string(),
                };
                let rows = [
                    ("a", format!("{}", a.value())),
                    ("regime", m.convexity.to_string()),
                    ("area", format!("{:.12}", m.area)),
                    ("perimeter", format!("{:.12}", m.perimeter)),
                    ("iso_ratio", format!("{:.12}", m.iso_ratio)),
                    ("min_radius", format!("{:.12}", curvature_radius(a, 0.0))),
                    ("growth_ratio", format!("{:.12}", growth_ratio(a.value()))),
                    ("max_smoothness", smooth),
                ];
                for (k, v) in rows {
                    writeln!(out, "{k:<15}{v}").map_err(io_err)?;
                }
            }
        }
        Command::Truncate(args) => {
            let doc = load(&args.input)?;
            let loops = truncate_glyph(&doc, args.m, args.samples)?;
            write_file(&args.out, &emit_svg(&loops, &args.canvas.options(!doc.y_down))?)?;
        }
        Command::Transform(args) => {
            let a = width(args.a)?;
            let doc = load(&args.input)?;
            let loops = transform_glyph(&doc, a, args.n, args.m, args.samples)?;
            write_file(&args.out, &emit_svg(&loops, &args.canvas.options(!doc.y_down))?)?;
        }
        Command::Sweep(args) => {
            let params = args.a.iter().map(|&a| width(a)).collect::<Result<Vec<_>, _>>()?;
            let doc = load(&args.input)?;
            let opts = args.canvas.options(!doc.y_down);
            fs::create_dir_all(&args.outdir).map_err(|e| Error::Io {
                path: args.outdir.display().to_string(),
                message: e.to_string(),
            })?;
            let grid: Vec<(WidthParam, usize)> =
                params.iter().flat_map(|&a| args.n.clone().map(move |n| (a, n))).collect();
            let rendered = grid
                .par_iter()
                .map(|&(a, n)| {
                    let loops = transform_glyph(&doc, a, n, args.m, args.samples)?;
                    let name = format!("a{}_n{}.svg", format_a(a.value()), n);
                    Ok((name, emit_svg(&loops, &opts)?))
                })
                .collect::<Result<Vec<_>, Error>>()?;
            for (name, svg) in rendered {
                let path = args.outdir.join(&name);
                write_file(&path, &svg)?;
                writeln!(out, "{}", path.display()).map_err(io_err)?;
            }
        }
        Command::Analyze(args) => {
            let doc = load(&args.input)?;
            let spectra = glyph_spectra(&doc, args.m, args.samples)?;
            let spectra: Vec<SpectralSeries> = match (args.a, args.n) {
                (Some(a), Some(n)) => {
                    let cfg = OperatorConfig::new(width(a)?, n);
                    let k = args.max_index.unwrap_or(usize::MAX >> 1);
                    spectra.iter().map(|s| cw_coefficients(s, &cfg, k)).collect::<Result<_, _>>()?
                }
                _ => spectra,
            };
            for (i, s) in spectra.iter().enumerate() {
                if args.json {
                    writeln!(out, "{}", s.to_json()).map_err(io_err)?;
                    continue;
                }
                if spectra.len() > 1 {
                    writeln!(out, "# contour {i}").map_err(io_err)?;
                }
                for (k, c) in s.iter() {
                    writeln!(out, "{k}\t{:e}\t{:e}", c.re, c.im).map_err(io_err)?;
                }
            }
        }
        Command::Probe(args) => {
            if args.coeffs {
                let a = width(args.a)?;
                let j = jacobsthal_recurrence(a, args.len.saturating_sub(1));
                writeln!(out, "l\tj\tratio").map_err(io_err)?;
                for (l, &v) in j.values.iter().take(args.len).enumerate() {
                    let ratio = match l {
                        0 => "NA".to_string(),
                        _ if j.values[l - 1] == 0.0 => "NA".to_string(),
                        _ => format!("{:.15}", v / j.values[l - 1]),
                    };
                    writeln!(out, "{l}\t{v:e}\t{ratio}").map_err(io_err)?;
                }
            }
            if args.quotient {
                let terms = args.terms.unwrap_or(args.nmax as usize + DEFAULT_EXTRA_TERMS);
                writeln!(out, "n\tt_n\tquotient\tbound\tholds").map_err(io_err)?;
                for row in diff_quotient_table(args.nmax, terms)? {
                    writeln!(
                        out,
                        "{}\t{:e}\t{:.12}\t{:.12}\t{}",
                        row.n,
                        row.t_n,
                        row.quotient,
                        row.bound,
                        row.satisfies_bound()
                    )
                    .map_err(io_err)?;
                }
            }
            if args.graphs {
                let a = width(args.a)?;
                let dir = args.out.as_deref().expect("clap enforces --out");
                fs::create_dir_all(dir).map_err(|e| Error::Io {
                    path: dir.display().to_string(),
                    message: e.to_string(),
                })?;
                let ts = (0..=GRAPH_POINTS).map(|i| TAU * i as f64 / GRAPH_POINTS as f64);
                let sin: Vec<_> = ts.clone().map(|t| (t, r_of_sin_partial(a, GRAPH_DEPTH, t))).collect();
                let cos: Vec<_> = ts.map(|t| (t, r_of_cos_partial(a, GRAPH_DEPTH, t))).collect();
                let mut opts = args.canvas.options(true);
                opts.width = opts.width.max(2.0 * opts.height);
                for (name, curve) in [("r_sin.svg", sin), ("r_cos.svg", cos)] {
                    let path = dir.join(name);
                    write_file(&path, &emit_graph_svg(&[curve], &opts)?)?;
                    writeln!(out, "{}", path.display()).map_err(io_err)?;
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Io { .. } => 1,
                e if e.is_parse_error() => 2,
                _ => 3,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_parsing() {
        assert_eq!(parse_real("1/8"), Ok(0.125));
        assert_eq!(parse_real("0.2"), Ok(0.2));
        assert!(parse_real("1/0").is_err());
        assert!(parse_real("abc").is_err());
    }

    #[test]
    fn range_parsing() {
        assert_eq!(parse_range("0..6"), Ok(0..=6));
        assert_eq!(parse_range("3..=6"), Ok(3..=6));
        assert_eq!(parse_range("4"), Ok(4..=4));
        assert!(parse_range("6..2").is_err());
    }

    #[test]
    fn file_name_values() {
        assert_eq!(format_a(1.0 / 24.0), "0.041667");
        assert_eq!(format_a(0.125), "0.125");
        assert_eq!(format_a(0.2), "0.2");
        assert_eq!(format_a(0.0), "0");
    }

    #[test]
    fn cli_definition() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
