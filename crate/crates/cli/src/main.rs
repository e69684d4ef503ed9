//! `metrikos`: distances, axiom certification, isometry checks, grid geodesics
//! and ball figures from the command line.
//!
//! Exit codes: 0 success, 1 certified failure, 2 usage, parse or I/O error.

mod svg;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use metrikos::balls::{ball_boundary, PlaneMetric};
use metrikos::io::{read_matrix_csv, GraphFile, PointSetFile};
use metrikos::isometry::{is_isometry, NamedMap};
use metrikos::path::{count_geodesics, grid_graph, shortest_path_distance, Polyline};
use metrikos::sample::{plane_point, sphere_point};
use metrikos::{distance, verify_axioms, Axiom, MetricSpec, Point, ToleranceConfig};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const MAX_PRINTED_WITNESSES: usize = 10;

#[derive(Parser)]
#[command(name = "metrikos", version, about = "Metric-space toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Distance between two points (or vertex / row indices).
    Dist {
        #[command(flatten)]
        metric: MetricArgs,
        #[arg(short, allow_hyphen_values = true)]
        p: String,
        #[arg(short, allow_hyphen_values = true)]
        q: String,
    },
    /// Certifies the metric axioms on a sample or a distance matrix.
    Check {
        #[command(flatten)]
        metric: MetricArgs,
        #[command(flatten)]
        sample: SampleArgs,
        #[command(flatten)]
        tol: TolArgs,
    },
    /// Draws the sphere of a plane metric as SVG.
    BallSvg {
        #[arg(long)]
        metric: String,
        #[arg(long, default_value = "0,0", allow_hyphen_values = true)]
        center: String,
        #[arg(long, default_value_t = 1.0)]
        radius: f64,
        #[arg(long, default_value_t = 256)]
        samples: usize,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tests whether a map preserves all sample distances.
    Isometry {
        /// Map as inline JSON or a path to a JSON file.
        #[arg(long)]
        map: String,
        #[command(flatten)]
        metric: MetricArgs,
        #[command(flatten)]
        sample: SampleArgs,
        #[command(flatten)]
        tol: TolArgs,
    },
    /// Shortest path length and number of shortest paths on a unit grid.
    Grid {
        #[arg(long)]
        width: usize,
        #[arg(long)]
        height: usize,
        #[arg(long, default_value = "0,0", allow_hyphen_values = true)]
        from: String,
        #[arg(long, allow_hyphen_values = true)]
        to: String,
    },
}

#[derive(Args)]
struct MetricArgs {
    /// euclidean, taxicab, chebyshev, discrete, realline, greatcircle, graph,
    /// polyline or matrix.
    #[arg(long)]
    metric: Option<String>,
    /// Distance matrix CSV (implies `--metric matrix`).
    #[arg(long)]
    matrix: Option<PathBuf>,
    /// Graph JSON for `--metric graph`.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Point-set JSON with the vertices for `--metric polyline`.
    #[arg(long)]
    polyline: Option<PathBuf>,
}

#[derive(Args)]
struct SampleArgs {
    /// Point-set JSON.
    #[arg(long)]
    points: Option<PathBuf>,
    /// Number of random points when no file is given.
    #[arg(long)]
    random: Option<usize>,
    /// Dimension of random coordinate points.
    #[arg(long, default_value_t = 2)]
    dim: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct TolArgs {
    #[arg(long, default_value_t = 1e-9)]
    abs_tol: f64,
    #[arg(long, default_value_t = 1e-12)]
    rel_tol: f64,
}

impl TolArgs {
    fn config(&self) -> Result<ToleranceConfig> {
        Ok(ToleranceConfig::new(self.abs_tol, self.rel_tol)?)
    }
}

/// Formats like C's `%.12g`.
fn num(x: f64) -> String {
    const DIGITS: i32 = 12;
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", (DIGITS - 1) as usize, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    let trim = |s: &str| {
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_owned()
        } else {
            s.to_owned()
        }
    };
    if !(-4..DIGITS).contains(&exp) {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim(mantissa), exp.abs())
    } else {
        trim(&format!("{:.*}", (DIGITS - 1 - exp) as usize, x))
    }
}

fn parse_coords(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<f64>()
                .with_context(|| format!("bad number {t:?}"))
        })
        .collect()
}

fn parse_point(s: &str) -> Result<Point> {
    Ok(Point::new(parse_coords(s)?)?)
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_points(path: &Path) -> Result<Vec<Point>> {
    Ok(PointSetFile::from_json(&read(path)?)?.into_points()?)
}

impl MetricArgs {
    fn spec(&self) -> Result<MetricSpec> {
        let tag = match (&self.metric, &self.matrix) {
            (Some(t), _) => t.as_str(),
            (None, Some(_)) => "matrix",
            (None, None) => bail!("--metric or --matrix is required"),
        };
        let need = |f: &Option<PathBuf>, flag: &str| {
            f.clone()
                .ok_or_else(|| anyhow!("--metric {tag} needs --{flag}"))
        };
        Ok(match tag {
            "euclidean" => MetricSpec::Euclidean,
            "taxicab" => MetricSpec::Taxicab,
            "chebyshev" => MetricSpec::Chebyshev,
            "discrete" => MetricSpec::Discrete,
            "realline" => MetricSpec::RealLine,
            "greatcircle" => MetricSpec::GreatCircle,
            "graph" => {
                let text = read(&need(&self.graph, "graph")?)?;
                MetricSpec::graph(GraphFile::from_json(&text)?.into_graph()?)
            }
            "polyline" => MetricSpec::polyline(Polyline::new(read_points(&need(
                &self.polyline,
                "polyline",
            )?)?)?),
            "matrix" => {
                let path = need(&self.matrix, "matrix")?;
                let file =
                    fs::File::open(&path).with_context(|| format!("reading {}", path.display()))?;
                MetricSpec::matrix(read_matrix_csv(file)?)
            }
            other => bail!("unknown metric {other:?}"),
        })
    }
}

/// Every index of a finite carrier, if the metric has one.
fn carrier_points(spec: &MetricSpec) -> Option<Vec<Point>> {
    let n = match spec {
        MetricSpec::GraphPath(g) => g.graph().vertex_count(),
        MetricSpec::PolylineArc(c) => c.len(),
        MetricSpec::Matrix(m) => m.size(),
        _ => return None,
    };
    Some((0..n).map(Point::index).collect())
}

impl SampleArgs {
    fn points(&self, spec: &MetricSpec, default_random: usize) -> Result<Vec<Point>> {
        if let Some(path) = &self.points {
            return read_points(path);
        }
        if let (Some(all), None) = (carrier_points(spec), self.random) {
            return Ok(all);
        }
        let n = self.random.unwrap_or(default_random);
        if n == 0 {
            bail!("--random must be positive");
        }
        if self.dim == 0 {
            bail!("--dim must be positive");
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let pick = |rng: &mut ChaCha8Rng| -> Point {
            match spec {
                MetricSpec::RealLine => plane_point(rng, 1, 10.0),
                MetricSpec::GreatCircle => sphere_point(rng).to_point(),
                _ => plane_point(rng, self.dim, 10.0),
            }
        };
        match carrier_points(spec) {
            Some(all) => {
                use rand::Rng;
                Ok((0..n)
                    .map(|_| all[rng.gen_range(0..all.len())].clone())
                    .collect())
            }
            None => Ok((0..n).map(|_| pick(&mut rng)).collect()),
        }
    }
}

/// Outcome of a command that ran to completion.
enum Verdict {
    Pass,
    Fail,
}

fn dist(metric: &MetricArgs, p: &str, q: &str, out: &mut impl Write) -> Result<Verdict> {
    let spec = metric.spec()?;
    let (p, q) = (parse_point(p)?, parse_point(q)?);
    writeln!(out, "{}", num(distance(&spec, &p, &q)?))?;
    Ok(Verdict::Pass)
}

fn check(
    metric: &MetricArgs,
    sample: &SampleArgs,
    tol: &TolArgs,
    out: &mut impl Write,
) -> Result<Verdict> {
    let spec = metric.spec()?;
    let points = sample.points(&spec, 64)?;
    let report = verify_axioms(&spec, &points, &tol.config()?)?;
    writeln!(out, "metric {} on {} points", spec.name(), points.len())?;
    for axiom in Axiom::ALL {
        if report.holds(axiom) {
            writeln!(out, "{axiom}: ok")?;
        } else {
            writeln!(
                out,
                "{axiom}: FAIL ({} violations)",
                report.violations(axiom)
            )?;
        }
    }
    for w in report.witnesses.iter().take(MAX_PRINTED_WITNESSES) {
        let idx: Vec<String> = w.points.iter().map(usize::to_string).collect();
        let rel = match w.axiom {
            Axiom::Symmetry => "!=",
            Axiom::Nonnegativity => "<",
            Axiom::Identity => "vs",
            Axiom::Triangle => ">",
        };
        writeln!(
            out,
            "witness {} ({}): {} {rel} {}",
            w.axiom,
            idx.join(", "),
            num(w.lhs),
            num(w.rhs)
        )?;
    }
    Ok(if report.all_ok() {
        Verdict::Pass
    } else {
        Verdict::Fail
    })
}

fn ball_svg(
    metric: &str,
    center: &str,
    radius: f64,
    samples: usize,
    out: Option<&Path>,
    stdout: &mut impl Write,
) -> Result<Verdict> {
    let shape = match metric {
        "euclidean" => PlaneMetric::Euclidean,
        "taxicab" => PlaneMetric::Taxicab,
        "chebyshev" => PlaneMetric::Chebyshev,
        other => bail!("ball-svg supports euclidean, taxicab and chebyshev, not {other:?}"),
    };
    let boundary = ball_boundary(shape, &parse_point(center)?, radius, samples)?;
    let text = svg::ball_scene(&boundary, metric, &num(radius)).render();
    match out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(Verdict::Pass)
}

fn isometry(
    map: &str,
    metric: &MetricArgs,
    sample: &SampleArgs,
    tol: &TolArgs,
    out: &mut impl Write,
) -> Result<Verdict> {
    let json = if map.trim_start().starts_with('{') {
        map.to_owned()
    } else {
        read(Path::new(map))?
    };
    let named: NamedMap = serde_json::from_str(&json).context("parsing map")?;
    let resolved = named.resolve()?;
    let spec = metric.spec()?;
    let points = sample.points(&spec, 32)?;
    let verdict = is_isometry(&resolved, &spec, &points, &tol.config()?)?;
    match verdict.witness {
        None => {
            writeln!(out, "ISOMETRY")?;
            Ok(Verdict::Pass)
        }
        Some(w) => {
            writeln!(out, "NOT ISOMETRY")?;
            writeln!(
                out,
                "witness ({}, {}): {} {} -> {}",
                w.i,
                w.j,
                spec.name(),
                num(w.before),
                num(w.after)
            )?;
            Ok(Verdict::Fail)
        }
    }
}

fn lattice_vertex(s: &str, width: usize, height: usize) -> Result<usize> {
    let c = parse_coords(s)?;
    let ok = |v: f64, n: usize| v.fract() == 0.0 && v >= 0.0 && v < n as f64;
    match c.as_slice() {
        [x, y] if ok(*x, width) && ok(*y, height) => Ok(*y as usize * width + *x as usize),
        _ => bail!("{s:?} is not a vertex of the {width}x{height} grid"),
    }
}

fn grid(
    width: usize,
    height: usize,
    from: &str,
    to: &str,
    out: &mut impl Write,
) -> Result<Verdict> {
    let g = grid_graph(width, height)?;
    let (u, v) = (
        lattice_vertex(from, width, height)?,
        lattice_vertex(to, width, height)?,
    );
    writeln!(out, "distance {}", num(shortest_path_distance(&g, u, v)?))?;
    writeln!(out, "geodesics {}", count_geodesics(&g, u, v)?)?;
    Ok(Verdict::Pass)
}

fn run(cli: Cli, out: &mut impl Write) -> Result<Verdict> {
    match cli.command {
        Command::Dist { metric, p, q } => dist(&metric, &p, &q, out),
        Command::Check {
            metric,
            sample,
            tol,
        } => check(&metric, &sample, &tol, out),
        Command::BallSvg {
            metric,
            center,
            radius,
            samples,
            out: path,
        } => ball_svg(&metric, &center, radius, samples, path.as_deref(), out),
        Command::Isometry {
            map,
            metric,
            sample,
            tol,
        } => isometry(&map, &metric, &sample, &tol, out),
        Command::Grid {
            width,
            height,
            from,
            to,
        } => grid(width, height, &from, &to, out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let result = run(cli, &mut out).and_then(|v| {
        out.flush()?;
        Ok(v)
    });
    match result {
        Ok(Verdict::Pass) => ExitCode::SUCCESS,
        Ok(Verdict::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
