//! Chord and great-circle distances on the unit sphere, and the planar and
//! spatial circle constructions behind the spherical triangle inequality.
//!
//! For unit vectors `p`, `q` the chord `d = |p - q|` and the arc `d~` are tied
//! by `sin(d~ / 2) = d / 2`, so `d <= d~ <= (pi / 2) d` and the ratio `d~ / d`
//! tends to 1 as the points approach each other.

use std::f64::consts::{FRAC_PI_2, PI, SQRT_2};

use crate::error::{MetricError, Result};
use crate::plane::euclidean_distance;
use crate::point::Point;

/// Inputs whose norm is this close to 1 are renormalized; others are rejected.
pub const UNIT_NORM_TOL: f64 = 1e-9;

/// Below this, a projected offset counts as zero and the extremum is not unique.
const DEGENERATE_TOL: f64 = 1e-12;

pub(crate) type Vec3 = [f64; 3];

pub(crate) fn dot(a: Vec3, b: Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub(crate) fn cross(a: Vec3, b: Vec3) -> Vec3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub(crate) fn norm(a: Vec3) -> f64 {
    dot(a, a).sqrt()
}

fn sub(a: Vec3, b: Vec3) -> Vec3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn add_scaled(a: Vec3, s: f64, b: Vec3) -> Vec3 {
    [a[0] + s * b[0], a[1] + s * b[1], a[2] + s * b[2]]
}

fn to_vec3(p: &Point) -> Result<Vec3> {
    p.check_dim(3)?;
    let c = p.coords();
    Ok([c[0], c[1], c[2]])
}

/// A point of the unit sphere in `R^3`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpherePoint([f64; 3]);

impl SpherePoint {
    pub fn new(coords: [f64; 3]) -> Result<Self> {
        if let Some(&bad) = coords.iter().find(|c| !c.is_finite()) {
            return Err(MetricError::NonFinite(bad));
        }
        let n = norm(coords);
        if (n - 1.0).abs() > UNIT_NORM_TOL {
            return Err(MetricError::OutsideCarrier {
                point: Point::from(coords).to_string(),
                reason: format!("norm {n} is not 1"),
            });
        }
        Ok(Self(coords.map(|c| c / n)))
    }

    /// Scales any nonzero vector onto the sphere.
    pub fn from_direction(v: [f64; 3]) -> Result<Self> {
        let n = norm(v);
        if !(n.is_finite() && n > 0.0) {
            return Err(MetricError::InvalidArgument(format!(
                "cannot normalize {}",
                Point::new(v.to_vec())
                    .map(|p| p.to_string())
                    .unwrap_or_default()
            )));
        }
        Self::new(v.map(|c| c / n))
    }

    pub fn from_point(p: &Point) -> Result<Self> {
        Self::new(to_vec3(p)?)
    }

    pub fn coords(&self) -> [f64; 3] {
        self.0
    }

    pub fn to_point(&self) -> Point {
        Point::from(self.0)
    }

    pub fn antipode(&self) -> Self {
        Self(self.0.map(|c| -c))
    }
}

/// A circle in space: the points of the plane through `center` orthogonal to
/// `normal` at distance `radius` from `center`.
#[derive(Debug, Clone, PartialEq)]
pub struct Circle3D {
    center: Vec3,
    radius: f64,
    normal: Vec3,
}

impl Circle3D {
    /// `normal` may have any nonzero length; it is normalized here.
    pub fn new(center: &Point, radius: f64, normal: [f64; 3]) -> Result<Self> {
        let center = to_vec3(center)?;
        if !(radius.is_finite() && radius > 0.0) {
            return Err(MetricError::InvalidArgument(format!(
                "circle radius must be positive, got {radius}"
            )));
        }
        let normal = SpherePoint::from_direction(normal)?.coords();
        Ok(Self {
            center,
            radius,
            normal,
        })
    }

    pub fn center(&self) -> Point {
        Point::from(self.center)
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn normal(&self) -> [f64; 3] {
        self.normal
    }

    /// The circle point at angle `theta` in a fixed orthonormal frame of its plane.
    pub fn point_at(&self, theta: f64) -> Point {
        let (u, v) = plane_frame(self.normal);
        let (s, c) = theta.sin_cos();
        let p = add_scaled(
            add_scaled(self.center, self.radius * c, u),
            self.radius * s,
            v,
        );
        Point::from(p)
    }
}

/// Two unit vectors completing `n` to a right-handed orthonormal frame.
pub(crate) fn plane_frame(n: Vec3) -> (Vec3, Vec3) {
    let helper = if n[0].abs() < 0.9 {
        [1.0, 0.0, 0.0]
    } else {
        [0.0, 1.0, 0.0]
    };
    let u = cross(n, helper);
    let nu = norm(u);
    let u = u.map(|c| c / nu);
    (u, cross(n, u))
}

/// A circle in the plane.
#[derive(Debug, Clone, PartialEq)]
pub struct Circle2D {
    center: [f64; 2],
    radius: f64,
}

impl Circle2D {
    pub fn new(center: &Point, radius: f64) -> Result<Self> {
        center.check_dim(2)?;
        if !(radius.is_finite() && radius > 0.0) {
            return Err(MetricError::InvalidArgument(format!(
                "circle radius must be positive, got {radius}"
            )));
        }
        let c = center.coords();
        Ok(Self {
            center: [c[0], c[1]],
            radius,
        })
    }

    pub fn center(&self) -> Point {
        Point::from(self.center)
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }
}

/// Ambient Euclidean distance between two sphere points, in `[0, 2]`.
pub fn chord_distance(p: &SpherePoint, q: &SpherePoint) -> f64 {
    euclidean_distance(&p.to_point(), &q.to_point())
        .expect("sphere points share dimension 3")
        .min(2.0)
}

/// Length of the shorter great-circle arc, `2 asin(chord / 2)`, in `[0, pi]`.
///
/// Past a quarter turn the arc is measured as `pi` minus the arc to the
/// antipode of `q`, since near `pi` the chord barely moves with the angle.
/// Antipodal points have infinitely many connecting great circles; all of them
/// give `pi`.
pub fn great_circle_distance(p: &SpherePoint, q: &SpherePoint) -> f64 {
    let chord = chord_distance(p, q);
    if chord <= SQRT_2 {
        return chord_to_arc(chord);
    }
    PI - chord_to_arc(chord_distance(p, &q.antipode()))
}

/// Inverts `chord = 2 sin(arc / 2)` with the argument clamped to `[0, 1]`.
pub fn chord_to_arc(chord: f64) -> f64 {
    2.0 * (chord / 2.0).clamp(0.0, 1.0).asin()
}

/// `sin(t) / t`, extended continuously by 1 at zero.
pub fn sinc(t: f64) -> Result<f64> {
    if t.is_nan() || t < 0.0 {
        return Err(MetricError::InvalidArgument(format!(
            "sinc is defined here for t >= 0, got {t}"
        )));
    }
    if t == 0.0 {
        return Ok(1.0);
    }
    Ok(t.sin() / t)
}

/// Chord length below which the arc exceeds the chord by at most a factor `1 + epsilon`.
///
/// With `t` half the arc, `d~ / d = t / sin t`, which increases on `(0, pi/2]`
/// from 1 to `pi / 2`. Bisection finds the largest `t` with `t / sin t <= 1 + epsilon`
/// and the answer is the chord `2 sin t`. Once `epsilon >= pi/2 - 1` the bound holds
/// for every pair and the whole range `2` is returned.
pub fn comparability_delta(epsilon: f64) -> Result<f64> {
    if epsilon.is_nan() || epsilon <= 0.0 {
        return Err(MetricError::InvalidArgument(format!(
            "epsilon must be positive, got {epsilon}"
        )));
    }
    if epsilon >= FRAC_PI_2 - 1.0 {
        return Ok(2.0);
    }
    let target = 1.0 + epsilon;
    let ratio = |t: f64| t / t.sin();
    // ratio(lo) <= target < ratio(hi) throughout
    let (mut lo, mut hi) = (0.0_f64, FRAC_PI_2);
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if mid > 0.0 && ratio(mid) <= target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(2.0 * lo.sin())
}

/// Sends `p` radially onto the circle: `center + radius (p - center) / |p - center|`.
pub fn circular_projection(c: &Circle2D, p: &Point) -> Result<Point> {
    p.check_dim(2)?;
    let z = c.center();
    let len = euclidean_distance(p, &z)?;
    if len == 0.0 {
        return Err(MetricError::ProjectionAtCenter);
    }
    let s = c.radius / len;
    let (pc, zc) = (p.coords(), z.coords());
    Point::new(vec![
        zc[0] + s * (pc[0] - zc[0]),
        zc[1] + s * (pc[1] - zc[1]),
    ])
}

/// Nearest and farthest points of `c` from `x`.
///
/// `x` is first projected orthogonally onto the plane of the circle; the extrema
/// lie where the line through that projection and the center meets the circle.
/// When the projection is the center itself every circle point is at the same
/// distance and [`MetricError::AllEquidistant`] is returned.
pub fn circle_extremal_points(x: &Point, c: &Circle3D) -> Result<(Point, Point)> {
    let xv = to_vec3(x)?;
    let rel = sub(xv, c.center);
    let in_plane = add_scaled(rel, -dot(rel, c.normal), c.normal);
    let offset = norm(in_plane);
    if offset <= DEGENERATE_TOL * c.radius.max(1.0) {
        return Err(MetricError::AllEquidistant);
    }
    let dir = in_plane.map(|v| v / offset);
    let a = Point::from(add_scaled(c.center, c.radius, dir));
    let b = Point::from(add_scaled(c.center, -c.radius, dir));
    if euclidean_distance(x, &a)? <= euclidean_distance(x, &b)? {
        Ok((a, b))
    } else {
        Ok((b, a))
    }
}

/// The point of `A = { r' : d(q, r') = d(q, r) }` farthest from `p`.
///
/// `A` is the circle cut from the sphere by the plane orthogonal to `q` through
/// `(q . r) q`. When `q` and `r` are equal or antipodal `A` is the single point
/// `r`, which is returned. When `p` is equal or antipodal to `q` every point of
/// `A` is equally far and [`MetricError::AllEquidistant`] is returned.
///
/// The result lies on a great circle through `p` and `q`, and satisfies
/// `d~(p, r) <= d~(p, r0) <= d~(p, q) + d~(q, r)`.
pub fn r0_construction(p: &SpherePoint, q: &SpherePoint, r: &SpherePoint) -> Result<SpherePoint> {
    let (qv, rv) = (q.coords(), r.coords());
    let along = dot(qv, rv);
    let radial = add_scaled(rv, -along, qv);
    let radius = norm(radial);
    if radius <= DEGENERATE_TOL {
        return Ok(*r);
    }
    let circle = Circle3D {
        center: qv.map(|c| along * c),
        radius,
        normal: qv,
    };
    let (_, farthest) = circle_extremal_points(&p.to_point(), &circle)?;
    SpherePoint::from_point(&farthest)
}
