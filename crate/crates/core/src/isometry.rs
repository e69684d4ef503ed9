//! Symmetries of the plane and the sphere, and a sample-based isometry check.
//!
//! Translations, the reflections through the origin and the axes, and the swap
//! `(x1, x2) -> (x2, x1)` preserve the Euclidean, taxicab and Chebyshev metrics.
//! Rotations preserve only the Euclidean one. Orthogonal 3x3 maps preserve both
//! the chord and the great-circle distance on the unit sphere.

use serde::{Deserialize, Serialize};

use crate::error::{MetricError, Result};
use crate::metric::{distance, MetricSpec, ToleranceConfig};
use crate::point::Point;
use crate::sphere::{cross, dot, norm, plane_frame, SpherePoint};

/// Entrywise tolerance on `A^T A = I` for admitting a [`SphereMap`].
pub const ORTHOGONALITY_TOL: f64 = 1e-9;

/// A map of the points of some space to itself.
pub trait PointMap {
    fn apply(&self, p: &Point) -> Result<Point>;
}

/// Affine map of the plane, `x -> linear * x + offset`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneMap {
    pub linear: [[f64; 2]; 2],
    pub offset: [f64; 2],
}

impl PlaneMap {
    pub fn new(linear: [[f64; 2]; 2], offset: [f64; 2]) -> Result<Self> {
        if let Some(&bad) = linear
            .iter()
            .flatten()
            .chain(&offset)
            .find(|v| !v.is_finite())
        {
            return Err(MetricError::NonFinite(bad));
        }
        Ok(Self { linear, offset })
    }

    pub const IDENTITY: PlaneMap = PlaneMap {
        linear: [[1.0, 0.0], [0.0, 1.0]],
        offset: [0.0, 0.0],
    };

    fn linear_only(linear: [[f64; 2]; 2]) -> Self {
        Self {
            linear,
            offset: [0.0, 0.0],
        }
    }

    pub fn translation(a1: f64, a2: f64) -> Self {
        Self {
            offset: [a1, a2],
            ..Self::IDENTITY
        }
    }

    pub fn reflect_origin() -> Self {
        Self::linear_only([[-1.0, 0.0], [0.0, -1.0]])
    }

    /// `(x1, x2) -> (-x1, x2)`.
    pub fn reflect_x1() -> Self {
        Self::linear_only([[-1.0, 0.0], [0.0, 1.0]])
    }

    /// `(x1, x2) -> (x1, -x2)`.
    pub fn reflect_x2() -> Self {
        Self::linear_only([[1.0, 0.0], [0.0, -1.0]])
    }

    pub fn swap_axes() -> Self {
        Self::linear_only([[0.0, 1.0], [1.0, 0.0]])
    }

    /// Counterclockwise rotation by `theta` radians about the origin.
    pub fn rotation(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Self::linear_only([[c, -s], [s, c]])
    }

    /// `x -> 2a - x`.
    pub fn reflect_about_point(a1: f64, a2: f64) -> Self {
        Self {
            linear: [[-1.0, 0.0], [0.0, -1.0]],
            offset: [2.0 * a1, 2.0 * a2],
        }
    }

    /// Largest entrywise difference of the linear parts and offsets.
    pub fn max_deviation(&self, other: &PlaneMap) -> f64 {
        self.linear
            .iter()
            .flatten()
            .chain(&self.offset)
            .zip(other.linear.iter().flatten().chain(&other.offset))
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

impl PointMap for PlaneMap {
    fn apply(&self, p: &Point) -> Result<Point> {
        p.check_dim(2)?;
        let x = p.coords();
        let [[a, b], [c, d]] = self.linear;
        Point::new(vec![
            a * x[0] + b * x[1] + self.offset[0],
            c * x[0] + d * x[1] + self.offset[1],
        ])
    }
}

/// The map `x -> f(g(x))`.
pub fn compose(f: &PlaneMap, g: &PlaneMap) -> PlaneMap {
    let mut linear = [[0.0; 2]; 2];
    for (i, row) in linear.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v = f.linear[i][0] * g.linear[0][j] + f.linear[i][1] * g.linear[1][j];
        }
    }
    let offset = [
        f.linear[0][0] * g.offset[0] + f.linear[0][1] * g.offset[1] + f.offset[0],
        f.linear[1][0] * g.offset[0] + f.linear[1][1] * g.offset[1] + f.offset[1],
    ];
    PlaneMap { linear, offset }
}

/// An orthogonal linear map of `R^3`, restricted to the unit sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphereMap {
    linear: [[f64; 3]; 3],
}

impl SphereMap {
    pub fn new(linear: [[f64; 3]; 3]) -> Result<Self> {
        if let Some(&bad) = linear.iter().flatten().find(|v| !v.is_finite()) {
            return Err(MetricError::NonFinite(bad));
        }
        let mut worst = 0.0_f64;
        for i in 0..3 {
            for j in 0..3 {
                let col_dot: f64 = (0..3).map(|k| linear[k][i] * linear[k][j]).sum();
                let want = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((col_dot - want).abs());
            }
        }
        if worst > ORTHOGONALITY_TOL {
            return Err(MetricError::NotOrthogonal(worst));
        }
        Ok(Self { linear })
    }

    pub fn linear(&self) -> [[f64; 3]; 3] {
        self.linear
    }

    pub fn identity() -> Self {
        Self {
            linear: [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
        }
    }

    /// `x -> -x`.
    pub fn point_reflection() -> Self {
        Self {
            linear: [[-1.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, -1.0]],
        }
    }

    /// Right-handed rotation by `angle` about `axis` (any nonzero length).
    pub fn rotation(axis: [f64; 3], angle: f64) -> Result<Self> {
        let k = SpherePoint::from_direction(axis)?.coords();
        let (s, c) = angle.sin_cos();
        let t = 1.0 - c;
        let [x, y, z] = k;
        Ok(Self {
            linear: [
                [c + t * x * x, t * x * y - s * z, t * x * z + s * y],
                [t * y * x + s * z, c + t * y * y, t * y * z - s * x],
                [t * z * x - s * y, t * z * y + s * x, c + t * z * z],
            ],
        })
    }

    /// Reflection through the plane orthogonal to `normal`.
    pub fn reflection(normal: [f64; 3]) -> Result<Self> {
        let n = SpherePoint::from_direction(normal)?.coords();
        let mut linear = [[0.0; 3]; 3];
        for (i, row) in linear.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = if i == j { 1.0 } else { 0.0 } - 2.0 * n[i] * n[j];
            }
        }
        Ok(Self { linear })
    }

    /// A rotation taking `p` to `q` in the plane they span.
    ///
    /// Identity when `p = q`; for antipodal points, the half-turn about an axis
    /// orthogonal to `p`.
    pub fn carrying(p: &SpherePoint, q: &SpherePoint) -> Self {
        let (pv, qv) = (p.coords(), q.coords());
        let axis = cross(pv, qv);
        let sin = norm(axis);
        let cos = dot(pv, qv);
        if sin <= 1e-15 {
            if cos > 0.0 {
                return Self::identity();
            }
            let (u, _) = plane_frame(pv);
            return Self::rotation(u, std::f64::consts::PI).expect("unit axis");
        }
        Self::rotation(axis, sin.atan2(cos)).expect("nonzero axis")
    }

    pub fn then(&self, next: &SphereMap) -> SphereMap {
        let mut linear = [[0.0; 3]; 3];
        for (i, row) in linear.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = (0..3).map(|k| next.linear[i][k] * self.linear[k][j]).sum();
            }
        }
        SphereMap { linear }
    }

    pub fn apply_sphere(&self, p: &SpherePoint) -> SpherePoint {
        let x = p.coords();
        let y = self.linear.map(|row| dot(row, x));
        SpherePoint::new(y).expect("orthogonal maps preserve the unit norm")
    }
}

impl PointMap for SphereMap {
    fn apply(&self, p: &Point) -> Result<Point> {
        p.check_dim(3)?;
        let c = p.coords();
        let x = [c[0], c[1], c[2]];
        Point::new(self.linear.map(|row| dot(row, x)).to_vec())
    }
}

/// A map description as read from JSON, e.g. `{"map": "rotation", "theta": 0.5}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "map", rename_all = "snake_case")]
pub enum NamedMap {
    Identity,
    Translation {
        a1: f64,
        a2: f64,
    },
    ReflectOrigin,
    ReflectX1,
    ReflectX2,
    SwapAxes,
    Rotation {
        theta: f64,
    },
    ReflectAboutPoint {
        a1: f64,
        a2: f64,
    },
    /// Plane map given by its matrix and offset.
    Affine {
        linear: [[f64; 2]; 2],
        offset: [f64; 2],
    },
    /// Rotation of the sphere about `axis` by `angle`.
    SphereRotation {
        axis: [f64; 3],
        angle: f64,
    },
    /// Reflection of the sphere through the plane orthogonal to `normal`.
    SphereReflection {
        normal: [f64; 3],
    },
    /// Any orthogonal 3x3 matrix.
    Orthogonal {
        matrix: [[f64; 3]; 3],
    },
}

/// A resolved [`NamedMap`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AnyMap {
    Plane(PlaneMap),
    Sphere(SphereMap),
}

impl PointMap for AnyMap {
    fn apply(&self, p: &Point) -> Result<Point> {
        match self {
            AnyMap::Plane(m) => m.apply(p),
            AnyMap::Sphere(m) => m.apply(p),
        }
    }
}

impl NamedMap {
    pub fn resolve(&self) -> Result<AnyMap> {
        Ok(match *self {
            NamedMap::Identity => AnyMap::Plane(PlaneMap::IDENTITY),
            NamedMap::Translation { a1, a2 } => {
                AnyMap::Plane(PlaneMap::new(PlaneMap::IDENTITY.linear, [a1, a2])?)
            }
            NamedMap::ReflectOrigin => AnyMap::Plane(PlaneMap::reflect_origin()),
            NamedMap::ReflectX1 => AnyMap::Plane(PlaneMap::reflect_x1()),
            NamedMap::ReflectX2 => AnyMap::Plane(PlaneMap::reflect_x2()),
            NamedMap::SwapAxes => AnyMap::Plane(PlaneMap::swap_axes()),
            NamedMap::Rotation { theta } => {
                if !theta.is_finite() {
                    return Err(MetricError::NonFinite(theta));
                }
                AnyMap::Plane(PlaneMap::rotation(theta))
            }
            NamedMap::ReflectAboutPoint { a1, a2 } => {
                let m = PlaneMap::reflect_about_point(a1, a2);
                AnyMap::Plane(PlaneMap::new(m.linear, m.offset)?)
            }
            NamedMap::Affine { linear, offset } => AnyMap::Plane(PlaneMap::new(linear, offset)?),
            NamedMap::SphereRotation { axis, angle } => {
                if !angle.is_finite() {
                    return Err(MetricError::NonFinite(angle));
                }
                AnyMap::Sphere(SphereMap::rotation(axis, angle)?)
            }
            NamedMap::SphereReflection { normal } => AnyMap::Sphere(SphereMap::reflection(normal)?),
            NamedMap::Orthogonal { matrix } => AnyMap::Sphere(SphereMap::new(matrix)?),
        })
    }
}

/// A pair whose distance the map changed.
#[derive(Debug, Clone, PartialEq)]
pub struct IsometryWitness {
    pub i: usize,
    pub j: usize,
    pub before: f64,
    pub after: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IsometryVerdict {
    pub holds: bool,
    pub witness: Option<IsometryWitness>,
}

/// Checks `|d(f(x), f(y)) - d(x, y)| <= abs_tol + rel_tol * d(x, y)` over all
/// sample pairs. The first failing pair `(i, j)`, `i < j`, is returned as witness.
pub fn is_isometry(
    map: &impl PointMap,
    spec: &MetricSpec,
    sample: &[Point],
    tol: &ToleranceConfig,
) -> Result<IsometryVerdict> {
    let images = sample
        .iter()
        .map(|p| {
            let img = map.apply(p)?;
            spec.check_carrier(&img)?;
            Ok(img)
        })
        .collect::<Result<Vec<_>>>()?;
    for i in 0..sample.len() {
        for j in i + 1..sample.len() {
            let before = distance(spec, &sample[i], &sample[j])?;
            let after = distance(spec, &images[i], &images[j])?;
            if (after - before).abs() > tol.abs_tol + tol.rel_tol * before {
                return Ok(IsometryVerdict {
                    holds: false,
                    witness: Some(IsometryWitness {
                        i,
                        j,
                        before,
                        after,
                    }),
                });
            }
        }
    }
    Ok(IsometryVerdict {
        holds: true,
        witness: None,
    })
}
