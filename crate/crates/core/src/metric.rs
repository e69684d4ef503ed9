//! The metric contract: which distance to evaluate, and a certifier that checks
//! the metric axioms over a finite sample.
//!
//! A metric on a set `M` satisfies, for all `p, q, x, y, z` in `M`:
//!
//! - `d(q, p) = d(p, q) >= 0`,
//! - `d(p, q) = 0` exactly when `p = q`,
//! - `d(x, z) <= d(x, y) + d(y, z)`.
//!
//! [`verify_axioms`] checks every one of these over all pairs and ordered
//! triples of a sample and reports a witness for each failure.

use std::fmt;
use std::sync::Arc;

use crate::error::{MetricError, Result};
use crate::path::{polyline_arc_distance, GraphMetric, Polyline, WeightedGraph};
use crate::plane::{
    chebyshev_distance, discrete_distance, euclidean_distance, real_line_distance, taxicab_distance,
};
use crate::point::Point;
use crate::sphere::{great_circle_distance, SpherePoint};

/// At most this many witnesses are kept per axiom; the full count is in
/// [`AxiomReport::violations`].
pub const MAX_WITNESSES_PER_AXIOM: usize = 64;

/// Which distance function to evaluate.
///
/// Index-based carriers (`GraphPath`, `PolylineArc`, `Matrix`) take points
/// built with [`Point::index`].
#[derive(Debug, Clone, PartialEq)]
pub enum MetricSpec {
    Euclidean,
    Taxicab,
    Chebyshev,
    Discrete,
    RealLine,
    /// Arc length on the unit sphere in `R^3`.
    GreatCircle,
    GraphPath(Arc<GraphMetric>),
    PolylineArc(Arc<Polyline>),
    /// The base metric restricted to a subset of its carrier.
    Subspace {
        base: Box<MetricSpec>,
        allowed: Vec<Point>,
    },
    /// A candidate metric given by its table of values.
    Matrix(Arc<DistanceMatrix>),
}

impl MetricSpec {
    pub fn graph(g: WeightedGraph) -> Self {
        MetricSpec::GraphPath(Arc::new(GraphMetric::new(g)))
    }

    pub fn polyline(c: Polyline) -> Self {
        MetricSpec::PolylineArc(Arc::new(c))
    }

    pub fn matrix(m: DistanceMatrix) -> Self {
        MetricSpec::Matrix(Arc::new(m))
    }

    pub fn name(&self) -> &'static str {
        match self {
            MetricSpec::Euclidean => "euclidean",
            MetricSpec::Taxicab => "taxicab",
            MetricSpec::Chebyshev => "chebyshev",
            MetricSpec::Discrete => "discrete",
            MetricSpec::RealLine => "realline",
            MetricSpec::GreatCircle => "greatcircle",
            MetricSpec::GraphPath(_) => "graph",
            MetricSpec::PolylineArc(_) => "polyline",
            MetricSpec::Subspace { .. } => "subspace",
            MetricSpec::Matrix(_) => "matrix",
        }
    }

    /// Checks that `p` belongs to the set this metric is defined on.
    pub fn check_carrier(&self, p: &Point) -> Result<()> {
        let outside = |reason: String| MetricError::OutsideCarrier {
            point: p.to_string(),
            reason,
        };
        let index_below = |n: usize| -> Result<()> {
            let i = p.as_index()?;
            if i < n {
                Ok(())
            } else {
                Err(outside(format!("index must be below {n}")))
            }
        };
        match self {
            MetricSpec::Euclidean
            | MetricSpec::Taxicab
            | MetricSpec::Chebyshev
            | MetricSpec::Discrete => Ok(()),
            MetricSpec::RealLine => p.check_dim(1),
            MetricSpec::GreatCircle => SpherePoint::from_point(p).map(|_| ()),
            MetricSpec::GraphPath(g) => index_below(g.graph().vertex_count()),
            MetricSpec::PolylineArc(c) => index_below(c.len()),
            MetricSpec::Matrix(m) => index_below(m.size()),
            MetricSpec::Subspace { base, allowed } => {
                base.check_carrier(p)?;
                if allowed.iter().any(|a| a.same_as(p)) {
                    Ok(())
                } else {
                    Err(outside("not in the allowed subset".into()))
                }
            }
        }
    }
}

impl fmt::Display for MetricSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Distance between `x` and `y` under `spec`.
pub fn distance(spec: &MetricSpec, x: &Point, y: &Point) -> Result<f64> {
    spec.check_carrier(x)?;
    spec.check_carrier(y)?;
    match spec {
        MetricSpec::Euclidean => euclidean_distance(x, y),
        MetricSpec::Taxicab => taxicab_distance(x, y),
        MetricSpec::Chebyshev => chebyshev_distance(x, y),
        MetricSpec::Discrete => discrete_distance(x, y),
        MetricSpec::RealLine => real_line_distance(x.coords()[0], y.coords()[0]),
        MetricSpec::GreatCircle => Ok(great_circle_distance(
            &SpherePoint::from_point(x)?,
            &SpherePoint::from_point(y)?,
        )),
        MetricSpec::GraphPath(g) => g.distance(x.as_index()?, y.as_index()?),
        MetricSpec::PolylineArc(c) => polyline_arc_distance(c, x.as_index()?, y.as_index()?),
        MetricSpec::Matrix(m) => Ok(m.get(x.as_index()?, y.as_index()?)),
        MetricSpec::Subspace { base, .. } => distance(base, x, y),
    }
}

/// The base metric on the subset `allowed`.
pub fn restrict(spec: &MetricSpec, allowed: &[Point]) -> Result<MetricSpec> {
    if allowed.is_empty() {
        return Err(MetricError::EmptySample);
    }
    for p in allowed {
        spec.check_carrier(p)?;
    }
    Ok(MetricSpec::Subspace {
        base: Box::new(spec.clone()),
        allowed: allowed.to_vec(),
    })
}

/// Pairwise distances of `sample`, labelled by the points themselves.
pub fn matrix_from_points(spec: &MetricSpec, sample: &[Point]) -> Result<DistanceMatrix> {
    if sample.is_empty() {
        return Err(MetricError::EmptySample);
    }
    let n = sample.len();
    let mut entries = Vec::with_capacity(n * n);
    for x in sample {
        for y in sample {
            entries.push(distance(spec, x, y)?);
        }
    }
    let labels = sample.iter().map(|p| p.to_string()).collect();
    DistanceMatrix::from_flat(n, entries)?.with_labels(labels)
}

/// Absolute and relative slack for floating-point comparisons.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ToleranceConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
}

impl ToleranceConfig {
    pub fn new(abs_tol: f64, rel_tol: f64) -> Result<Self> {
        for (name, v) in [("abs_tol", abs_tol), ("rel_tol", rel_tol)] {
            if !(v.is_finite() && v >= 0.0) {
                return Err(MetricError::InvalidArgument(format!(
                    "{name} must be finite and nonnegative, got {v}"
                )));
            }
        }
        Ok(Self { abs_tol, rel_tol })
    }

    /// `abs_tol + rel_tol * max |v|` over the given magnitudes.
    pub fn slack(&self, magnitudes: &[f64]) -> f64 {
        let scale = magnitudes.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
        self.abs_tol + self.rel_tol * scale
    }
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-9,
            rel_tol: 1e-12,
        }
    }
}

/// A square table of real values.
///
/// Finiteness is enforced on construction; symmetry and the zero diagonal are
/// left for [`verify_axioms`] to judge.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    size: usize,
    entries: Vec<f64>,
    labels: Option<Vec<String>>,
}

impl DistanceMatrix {
    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        let n = rows.len();
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(MetricError::InvalidMatrix(format!(
                "row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        Self::from_flat(n, rows.into_iter().flatten().collect())
    }

    /// Row-major entries.
    pub fn from_flat(size: usize, entries: Vec<f64>) -> Result<Self> {
        if size == 0 {
            return Err(MetricError::InvalidMatrix("matrix is empty".into()));
        }
        if entries.len() != size * size {
            return Err(MetricError::InvalidMatrix(format!(
                "{} entries do not form a {size}x{size} matrix",
                entries.len()
            )));
        }
        if let Some(&bad) = entries.iter().find(|v| !v.is_finite()) {
            return Err(MetricError::NonFinite(bad));
        }
        Ok(Self {
            size,
            entries,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.size {
            return Err(MetricError::InvalidMatrix(format!(
                "{} labels for {} rows",
                labels.len(),
                self.size
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Entry `(i, j)`; panics when out of range.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        assert!(i < self.size && j < self.size, "({i}, {j}) out of range");
        self.entries[i * self.size + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.entries.chunks(self.size)
    }

    /// Sample points covering every row, for certifying the matrix as a metric.
    pub fn index_points(&self) -> Vec<Point> {
        (0..self.size).map(Point::index).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    Symmetry,
    Nonnegativity,
    Identity,
    Triangle,
}

impl Axiom {
    pub const ALL: [Axiom; 4] = [
        Axiom::Symmetry,
        Axiom::Nonnegativity,
        Axiom::Identity,
        Axiom::Triangle,
    ];

    fn slot(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Symmetry => "symmetry",
            Axiom::Nonnegativity => "nonnegativity",
            Axiom::Identity => "identity",
            Axiom::Triangle => "triangle",
        })
    }
}

/// One violation, located by sample indices.
///
/// - symmetry `[p, q]`: `lhs = d(p, q)`, `rhs = d(q, p)`
/// - nonnegativity `[p, q]`: `lhs = d(p, q)`, `rhs = 0`
/// - identity `[p, q]`: `lhs = d(p, q)`, `rhs = 0`; the points are equal but
///   the distance is not zero, or distinct with distance zero
/// - triangle `[x, y, z]`: `lhs = d(x, z)`, `rhs = d(x, y) + d(y, z)`
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub axiom: Axiom,
    pub points: Vec<usize>,
    pub lhs: f64,
    pub rhs: f64,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.points.iter().map(|i| i.to_string()).collect();
        let rel = match self.axiom {
            Axiom::Symmetry => "!=",
            Axiom::Nonnegativity => "<",
            Axiom::Identity => "vs",
            Axiom::Triangle => ">",
        };
        write!(
            f,
            "{} ({}): {} {} {}",
            self.axiom,
            idx.join(", "),
            self.lhs,
            rel,
            self.rhs
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AxiomReport {
    pub symmetry_ok: bool,
    pub nonnegativity_ok: bool,
    pub identity_ok: bool,
    pub triangle_ok: bool,
    pub witnesses: Vec<Witness>,
    violations: [usize; 4],
}

impl AxiomReport {
    pub fn all_ok(&self) -> bool {
        self.symmetry_ok && self.nonnegativity_ok && self.identity_ok && self.triangle_ok
    }

    pub fn holds(&self, axiom: Axiom) -> bool {
        self.violations(axiom) == 0
    }

    /// Total number of violations found, including any beyond the kept witnesses.
    pub fn violations(&self, axiom: Axiom) -> usize {
        self.violations[axiom.slot()]
    }

    pub fn witnesses_for(&self, axiom: Axiom) -> impl Iterator<Item = &Witness> {
        self.witnesses.iter().filter(move |w| w.axiom == axiom)
    }
}

struct ReportBuilder {
    witnesses: Vec<Witness>,
    violations: [usize; 4],
}

impl ReportBuilder {
    fn record(&mut self, axiom: Axiom, points: Vec<usize>, lhs: f64, rhs: f64) {
        let slot = axiom.slot();
        if self.violations[slot] < MAX_WITNESSES_PER_AXIOM {
            self.witnesses.push(Witness {
                axiom,
                points,
                lhs,
                rhs,
            });
        }
        self.violations[slot] += 1;
    }

    fn finish(mut self) -> AxiomReport {
        self.witnesses
            .sort_by_key(|w| (w.axiom.slot(), w.points.clone()));
        let ok = |a: Axiom| self.violations[a.slot()] == 0;
        AxiomReport {
            symmetry_ok: ok(Axiom::Symmetry),
            nonnegativity_ok: ok(Axiom::Nonnegativity),
            identity_ok: ok(Axiom::Identity),
            triangle_ok: ok(Axiom::Triangle),
            witnesses: self.witnesses,
            violations: self.violations,
        }
    }
}

/// Checks every metric axiom over `sample`, exhaustively.
///
/// Points are equal when their coordinates are equal exactly; a distance counts
/// as zero when it is at most `abs_tol`. The triangle inequality is accepted
/// with slack `abs_tol + rel_tol * max(d(x, y), d(y, z), d(x, z))`, and
/// symmetry with the same slack over the two values.
pub fn verify_axioms(
    spec: &MetricSpec,
    sample: &[Point],
    tol: &ToleranceConfig,
) -> Result<AxiomReport> {
    if sample.is_empty() {
        return Err(MetricError::EmptySample);
    }
    let n = sample.len();
    let mut d = vec![0.0; n * n];
    for (i, x) in sample.iter().enumerate() {
        for (j, y) in sample.iter().enumerate() {
            d[i * n + j] = distance(spec, x, y)?;
        }
    }
    let at = |i: usize, j: usize| d[i * n + j];

    let mut report = ReportBuilder {
        witnesses: Vec::new(),
        violations: [0; 4],
    };

    for i in 0..n {
        for j in 0..n {
            let dij = at(i, j);
            if j > i {
                let dji = at(j, i);
                if (dij - dji).abs() > tol.slack(&[dij, dji]) {
                    report.record(Axiom::Symmetry, vec![i, j], dij, dji);
                }
            }
            if dij < 0.0 {
                report.record(Axiom::Nonnegativity, vec![i, j], dij, 0.0);
            }
            let same = sample[i].same_as(&sample[j]);
            let zero = dij.abs() <= tol.abs_tol;
            if same != zero {
                report.record(Axiom::Identity, vec![i, j], dij, 0.0);
            }
        }
    }

    for x in 0..n {
        for y in 0..n {
            let dxy = at(x, y);
            for z in 0..n {
                let (dyz, dxz) = (at(y, z), at(x, z));
                let rhs = dxy + dyz;
                if dxz > rhs + tol.slack(&[dxy, dyz, dxz]) {
                    report.record(Axiom::Triangle, vec![x, y, z], dxz, rhs);
                }
            }
        }
    }

    Ok(report.finish())
}
