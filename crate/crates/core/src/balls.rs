//! Open balls `B(p, r) = { x : d(p, x) < r }` and unit-ball boundaries.
//!
//! If `q` lies in `B(p, r)` and `0 < t <= r - d(p, q)` then `B(q, t)` is inside
//! `B(p, r)`: for `x` in `B(q, t)`, `d(p, x) <= d(p, q) + d(q, x) < d(p, q) + t <= r`.

use std::f64::consts::TAU;

use crate::error::{MetricError, Result};
use crate::metric::{distance, MetricSpec};
use crate::point::Point;

/// An open ball.
#[derive(Debug, Clone, PartialEq)]
pub struct Ball {
    metric: MetricSpec,
    center: Point,
    radius: f64,
}

impl Ball {
    pub fn new(metric: MetricSpec, center: Point, radius: f64) -> Result<Self> {
        if !(radius.is_finite() && radius > 0.0) {
            return Err(MetricError::InvalidArgument(format!(
                "ball radius must be positive, got {radius}"
            )));
        }
        metric.check_carrier(&center)?;
        Ok(Self {
            metric,
            center,
            radius,
        })
    }

    pub fn metric(&self) -> &MetricSpec {
        &self.metric
    }

    pub fn center(&self) -> &Point {
        &self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn contains(&self, x: &Point) -> Result<bool> {
        ball_contains(self, x)
    }
}

/// Strict membership: `d(center, x) < radius`.
pub fn ball_contains(b: &Ball, x: &Point) -> Result<bool> {
    Ok(distance(&b.metric, &b.center, x)? < b.radius)
}

/// Result of probing `B(q, t) ⊆ B(p, r)`.
#[derive(Debug, Clone, PartialEq)]
pub struct NestingVerdict {
    pub holds: bool,
    /// Index of a probe inside `B(q, t)` but outside `B(p, r)`.
    pub violating_probe: Option<usize>,
    /// How many probes fell inside `B(q, t)`.
    pub probes_inside: usize,
}

/// Checks that every probe in `B(q, t)` also lies in `B(p, r)`.
///
/// The configuration must satisfy `d(p, q) < r` and `0 < t <= r - d(p, q)`;
/// anything else is an error, so a failing verdict can only come from a metric
/// whose triangle inequality is broken.
pub fn check_nesting(
    metric: &MetricSpec,
    p: &Point,
    r: f64,
    q: &Point,
    t: f64,
    probes: &[Point],
) -> Result<NestingVerdict> {
    let outer = Ball::new(metric.clone(), p.clone(), r)?;
    let dpq = distance(metric, p, q)?;
    if dpq >= r {
        return Err(MetricError::Precondition(format!(
            "q is not in B(p, r): d(p, q) = {dpq} >= r = {r}"
        )));
    }
    if !(t > 0.0 && t <= r - dpq) {
        return Err(MetricError::Precondition(format!(
            "need 0 < t <= r - d(p, q) = {}, got t = {t}",
            r - dpq
        )));
    }
    let inner = Ball::new(metric.clone(), q.clone(), t)?;
    let mut probes_inside = 0;
    for (k, x) in probes.iter().enumerate() {
        if !inner.contains(x)? {
            continue;
        }
        probes_inside += 1;
        if !outer.contains(x)? {
            return Ok(NestingVerdict {
                holds: false,
                violating_probe: Some(k),
                probes_inside,
            });
        }
    }
    Ok(NestingVerdict {
        holds: true,
        violating_probe: None,
        probes_inside,
    })
}

/// Plane metrics whose spheres are curves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlaneMetric {
    Euclidean,
    Taxicab,
    Chebyshev,
}

impl PlaneMetric {
    pub fn spec(self) -> MetricSpec {
        match self {
            PlaneMetric::Euclidean => MetricSpec::Euclidean,
            PlaneMetric::Taxicab => MetricSpec::Taxicab,
            PlaneMetric::Chebyshev => MetricSpec::Chebyshev,
        }
    }
}

impl TryFrom<&MetricSpec> for PlaneMetric {
    type Error = MetricError;

    fn try_from(spec: &MetricSpec) -> Result<Self> {
        match spec {
            MetricSpec::Euclidean => Ok(PlaneMetric::Euclidean),
            MetricSpec::Taxicab => Ok(PlaneMetric::Taxicab),
            MetricSpec::Chebyshev => Ok(PlaneMetric::Chebyshev),
            other => Err(MetricError::InvalidArgument(format!(
                "the {other} metric has no boundary curve in the plane"
            ))),
        }
    }
}

/// Samples of `{ x : d(center, x) = radius }`, counterclockwise from `center + (radius, 0)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryPolyline {
    pub metric: PlaneMetric,
    pub center: Point,
    pub radius: f64,
    pub samples: Vec<Point>,
}

/// Traces the sphere of radius `r` about `center`: a circle, a diamond, or a square.
///
/// The polygonal cases are walked edge by edge between exact corners; every
/// corner is always among the samples, and with `n` divisible by 8 so are the
/// edge midpoints.
pub fn ball_boundary(
    metric: PlaneMetric,
    center: &Point,
    r: f64,
    n: usize,
) -> Result<BoundaryPolyline> {
    center.check_dim(2)?;
    if !(r.is_finite() && r > 0.0) {
        return Err(MetricError::InvalidArgument(format!(
            "radius must be positive, got {r}"
        )));
    }
    if n < 8 {
        return Err(MetricError::InvalidArgument(format!(
            "need at least 8 boundary samples, got {n}"
        )));
    }
    let offsets: Vec<[f64; 2]> = match metric {
        PlaneMetric::Euclidean => (0..n)
            .map(|k| {
                let (s, c) = (TAU * k as f64 / n as f64).sin_cos();
                [r * c, r * s]
            })
            .collect(),
        PlaneMetric::Taxicab => polygon_walk(&[[r, 0.0], [0.0, r], [-r, 0.0], [0.0, -r]], n),
        // Start at (r, 0) so the order matches the other shapes.
        PlaneMetric::Chebyshev => polygon_walk(&[[r, 0.0], [r, r], [-r, r], [-r, -r], [r, -r]], n),
    };
    let c = center.coords();
    let samples = offsets
        .into_iter()
        .map(|[dx, dy]| Point::new(vec![c[0] + dx, c[1] + dy]))
        .collect::<Result<_>>()?;
    Ok(BoundaryPolyline {
        metric,
        center: center.clone(),
        radius: r,
        samples,
    })
}

/// `n` points along the closed polygon through `corners`, starting at the
/// first corner. Each edge receives its share of samples, corners included.
fn polygon_walk(corners: &[[f64; 2]], n: usize) -> Vec<[f64; 2]> {
    let edges = corners.len();
    let mut out = Vec::with_capacity(n);
    for e in 0..edges {
        let (a, b) = (corners[e], corners[(e + 1) % edges]);
        let m = n / edges + usize::from(e < n % edges);
        for j in 0..m {
            let s = j as f64 / m as f64;
            out.push([lerp(a[0], b[0], s), lerp(a[1], b[1], s)]);
        }
    }
    out
}

fn lerp(a: f64, b: f64, s: f64) -> f64 {
    if a == b {
        a
    } else {
        a + (b - a) * s
    }
}
