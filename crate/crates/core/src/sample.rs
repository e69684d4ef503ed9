//! Random samplers for the carriers of the built-in metrics.
//!
//! All samplers take the generator by reference so that a seeded generator
//! gives reproducible samples.

use std::collections::HashSet;
use std::f64::consts::TAU;

use rand::Rng;

use crate::path::{Edge, Polyline, WeightedGraph};
use crate::point::Point;
use crate::sphere::SpherePoint;

/// Uniform in the cube `[-span, span)^dim`.
pub fn plane_point(rng: &mut impl Rng, dim: usize, span: f64) -> Point {
    Point::new((0..dim).map(|_| rng.gen_range(-span..span)).collect()).expect("finite coordinates")
}

/// Three independent standard normals (Box-Muller).
pub fn gaussian3(rng: &mut impl Rng) -> [f64; 3] {
    let mut g = || {
        let u: f64 = rng.gen_range(f64::EPSILON..1.0);
        let v: f64 = rng.gen();
        (-2.0 * u.ln()).sqrt() * (TAU * v).cos()
    };
    [g(), g(), g()]
}

/// Uniform on the unit sphere.
pub fn sphere_point(rng: &mut impl Rng) -> SpherePoint {
    loop {
        if let Ok(p) = SpherePoint::from_direction(gaussian3(rng)) {
            return p;
        }
    }
}

/// A point at arc distance `angle` from `p`, in a uniformly random direction.
pub fn sphere_point_at(rng: &mut impl Rng, p: &SpherePoint, angle: f64) -> SpherePoint {
    let pv = p.coords();
    loop {
        let g = gaussian3(rng);
        let along = g[0] * pv[0] + g[1] * pv[1] + g[2] * pv[2];
        let t = [
            g[0] - along * pv[0],
            g[1] - along * pv[1],
            g[2] - along * pv[2],
        ];
        let tn = (t[0] * t[0] + t[1] * t[1] + t[2] * t[2]).sqrt();
        if tn < 1e-6 {
            continue;
        }
        let (s, c) = angle.sin_cos();
        let v = [0, 1, 2].map(|k| c * pv[k] + s * t[k] / tn);
        return SpherePoint::from_direction(v).expect("nonzero combination");
    }
}

/// A connected graph on `n` vertices: a random spanning tree plus up to
/// `extra` more edges, lengths uniform in `[0.1, 5)`.
pub fn connected_graph(rng: &mut impl Rng, n: usize, extra: usize) -> WeightedGraph {
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        seen.insert((u, v));
        edges.push(Edge {
            u,
            v,
            length: rng.gen_range(0.1..5.0),
        });
    }
    for _ in 0..extra {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let (u, v) = (a.min(b), a.max(b));
        if u != v && seen.insert((u, v)) {
            edges.push(Edge {
                u,
                v,
                length: rng.gen_range(0.1..5.0),
            });
        }
    }
    WeightedGraph::new(n.max(1), edges, None).expect("valid by construction")
}

/// A polyline with `len >= 2` vertices uniform in `[-10, 10)^2`.
pub fn polyline(rng: &mut impl Rng, len: usize) -> Polyline {
    let mut pts = vec![plane_point(rng, 2, 10.0)];
    while pts.len() < len.max(2) {
        let p = plane_point(rng, 2, 10.0);
        if !p.same_as(pts.last().expect("nonempty")) {
            pts.push(p);
        }
    }
    Polyline::new(pts).expect("consecutive vertices distinct")
}
