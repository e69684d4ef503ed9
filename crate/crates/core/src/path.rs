//! Path metrics: shortest routes through weighted graphs, and arc length along
//! polylines.
//!
//! Concatenating a route from `x` to `y` with one from `y` to `z` gives a route
//! from `x` to `z`, so minimizing route length always yields the triangle
//! inequality. Graphs here are undirected with strictly positive edge lengths.

use std::cmp::{Ordering, Reverse};
use std::collections::{BinaryHeap, HashSet};
use std::sync::OnceLock;

use crate::error::{MetricError, Result};
use crate::plane::{euclidean_distance, real_line_distance};
use crate::point::Point;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub length: f64,
}

/// An undirected graph with positive edge lengths and optional planar embedding.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedGraph {
    vertex_count: usize,
    edges: Vec<Edge>,
    coords: Option<Vec<[f64; 2]>>,
    adjacency: Vec<Vec<(usize, f64)>>,
}

impl WeightedGraph {
    pub fn new(
        vertex_count: usize,
        edges: Vec<Edge>,
        coords: Option<Vec<[f64; 2]>>,
    ) -> Result<Self> {
        if vertex_count == 0 {
            return Err(MetricError::InvalidGraph("no vertices".into()));
        }
        let mut seen = HashSet::new();
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &Edge { u, v, length } in &edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(MetricError::InvalidGraph(format!(
                    "edge ({u}, {v}) references a vertex >= {vertex_count}"
                )));
            }
            if u == v {
                return Err(MetricError::InvalidGraph(format!("self-loop at {u}")));
            }
            if !(length.is_finite() && length > 0.0) {
                return Err(MetricError::InvalidGraph(format!(
                    "edge ({u}, {v}) has length {length}; lengths must be positive"
                )));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(MetricError::InvalidGraph(format!(
                    "duplicate edge ({u}, {v})"
                )));
            }
            adjacency[u].push((v, length));
            adjacency[v].push((u, length));
        }
        if let Some(c) = &coords {
            if c.len() != vertex_count {
                return Err(MetricError::InvalidGraph(format!(
                    "{} coordinates for {vertex_count} vertices",
                    c.len()
                )));
            }
            if let Some(&bad) = c.iter().flatten().find(|x| !x.is_finite()) {
                return Err(MetricError::NonFinite(bad));
            }
        }
        Ok(Self {
            vertex_count,
            edges,
            coords,
            adjacency,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn coords(&self) -> Option<&[[f64; 2]]> {
        self.coords.as_deref()
    }

    /// Embedded position of `v`, if the graph carries coordinates.
    pub fn position(&self, v: usize) -> Option<Point> {
        self.coords.as_ref()?.get(v).map(|&c| Point::from(c))
    }

    /// Vertex with the given embedded coordinates.
    pub fn vertex_at(&self, x: f64, y: f64) -> Option<usize> {
        self.coords.as_ref()?.iter().position(|&c| c == [x, y])
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(MetricError::OutsideCarrier {
                point: v.to_string(),
                reason: format!("graph has {} vertices", self.vertex_count),
            })
        }
    }

    /// Shortest distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Result<Vec<Option<f64>>> {
        self.check_vertex(source)?;
        let mut dist: Vec<Option<f64>> = vec![None; self.vertex_count];
        let mut done = vec![false; self.vertex_count];
        let mut heap = BinaryHeap::new();
        dist[source] = Some(0.0);
        heap.push(Reverse(Label(0.0, source)));
        while let Some(Reverse(Label(d, u))) = heap.pop() {
            if done[u] {
                continue;
            }
            done[u] = true;
            for &(v, len) in &self.adjacency[u] {
                let cand = d + len;
                if dist[v].is_none_or(|old| cand < old) {
                    dist[v] = Some(cand);
                    heap.push(Reverse(Label(cand, v)));
                }
            }
        }
        Ok(dist)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Label(f64, usize);

impl Eq for Label {}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Label {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0).then(self.1.cmp(&other.1))
    }
}

/// Length of a shortest path between `u` and `v`.
///
/// The search always starts from the smaller id, so `d(u, v)` and `d(v, u)` are
/// the same floating-point sum.
pub fn shortest_path_distance(g: &WeightedGraph, u: usize, v: usize) -> Result<f64> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let (a, b) = (u.min(v), u.max(v));
    g.distances_from(a)?[b].ok_or(MetricError::Disconnected(u, v))
}

/// Unit-spaced lattice `{0..width} x {0..height}`; vertex `(i, j)` has id `j * width + i`.
pub fn grid_graph(width: usize, height: usize) -> Result<WeightedGraph> {
    if width == 0 || height == 0 {
        return Err(MetricError::InvalidArgument(format!(
            "grid dimensions must be positive, got {width}x{height}"
        )));
    }
    let id = |i: usize, j: usize| j * width + i;
    let mut edges = Vec::with_capacity(2 * width * height);
    let mut coords = Vec::with_capacity(width * height);
    for j in 0..height {
        for i in 0..width {
            coords.push([i as f64, j as f64]);
            if i + 1 < width {
                edges.push(Edge {
                    u: id(i, j),
                    v: id(i + 1, j),
                    length: 1.0,
                });
            }
            if j + 1 < height {
                edges.push(Edge {
                    u: id(i, j),
                    v: id(i, j + 1),
                    length: 1.0,
                });
            }
        }
    }
    WeightedGraph::new(width * height, edges, Some(coords))
}

/// Number of distinct minimum-length paths from `u` to `v`.
///
/// Edge lengths must be positive integers so that ties between route lengths
/// are decided exactly.
pub fn count_geodesics(g: &WeightedGraph, u: usize, v: usize) -> Result<u128> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    const MAX_EXACT: f64 = 9_007_199_254_740_992.0;
    let mut adjacency: Vec<Vec<(usize, u64)>> = vec![Vec::new(); g.vertex_count];
    for e in &g.edges {
        if e.length.fract() != 0.0 || e.length > MAX_EXACT {
            return Err(MetricError::InvalidArgument(format!(
                "geodesic counting needs integer edge lengths, edge ({}, {}) has {}",
                e.u, e.v, e.length
            )));
        }
        adjacency[e.u].push((e.v, e.length as u64));
        adjacency[e.v].push((e.u, e.length as u64));
    }

    let n = g.vertex_count;
    let mut dist: Vec<Option<u64>> = vec![None; n];
    let mut count = vec![0_u128; n];
    let mut done = vec![false; n];
    let mut heap = BinaryHeap::new();
    dist[u] = Some(0);
    count[u] = 1;
    heap.push(Reverse((0_u64, u)));
    while let Some(Reverse((d, w))) = heap.pop() {
        if done[w] {
            continue;
        }
        done[w] = true;
        if w == v {
            break;
        }
        for &(x, len) in &adjacency[w] {
            let cand = d + len;
            match dist[x] {
                Some(old) if cand > old => {}
                Some(old) if cand == old => {
                    count[x] = count[x].checked_add(count[w]).ok_or_else(|| {
                        MetricError::InvalidArgument("geodesic count overflows u128".into())
                    })?;
                }
                _ => {
                    dist[x] = Some(cand);
                    count[x] = count[w];
                    heap.push(Reverse((cand, x)));
                }
            }
        }
    }
    if dist[v].is_none() {
        return Err(MetricError::Disconnected(u, v));
    }
    Ok(count[v])
}

/// Path metric of a graph with memoized single-source rows.
#[derive(Debug)]
pub struct GraphMetric {
    graph: WeightedGraph,
    rows: Vec<OnceLock<Vec<Option<f64>>>>,
}

impl GraphMetric {
    pub fn new(graph: WeightedGraph) -> Self {
        let rows = (0..graph.vertex_count).map(|_| OnceLock::new()).collect();
        Self { graph, rows }
    }

    pub fn graph(&self) -> &WeightedGraph {
        &self.graph
    }

    /// Same value as [`shortest_path_distance`], computed once per source.
    pub fn distance(&self, u: usize, v: usize) -> Result<f64> {
        self.graph.check_vertex(u)?;
        self.graph.check_vertex(v)?;
        let (a, b) = (u.min(v), u.max(v));
        let row = match self.rows[a].get() {
            Some(row) => row,
            None => {
                let row = self.graph.distances_from(a)?;
                self.rows[a].get_or_init(|| row)
            }
        };
        row[b].ok_or(MetricError::Disconnected(u, v))
    }
}

impl PartialEq for GraphMetric {
    fn eq(&self, other: &Self) -> bool {
        self.graph == other.graph
    }
}

/// A planar polyline, the discrete stand-in for a curve.
#[derive(Debug, Clone, PartialEq)]
pub struct Polyline {
    vertices: Vec<Point>,
    params: Vec<f64>,
}

impl Polyline {
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(MetricError::InvalidArgument(
                "a polyline needs at least two vertices".into(),
            ));
        }
        let mut params = Vec::with_capacity(vertices.len());
        params.push(0.0);
        for (k, pair) in vertices.windows(2).enumerate() {
            pair[0].check_dim(2)?;
            pair[1].check_dim(2)?;
            if pair[0].same_as(&pair[1]) {
                return Err(MetricError::InvalidArgument(format!(
                    "consecutive vertices {k} and {} coincide",
                    k + 1
                )));
            }
            let seg = euclidean_distance(&pair[0], &pair[1])?;
            // Round the running length up until the increment covers the segment.
            let prev = params[k];
            let mut s = prev + seg;
            while s - prev < seg {
                s = s.next_up();
            }
            params.push(s);
        }
        Ok(Self { vertices, params })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Cumulative arc length at each vertex.
    pub fn arc_parameters(&self) -> &[f64] {
        &self.params
    }

    pub fn total_length(&self) -> f64 {
        self.params[self.params.len() - 1]
    }

    /// True when no two non-adjacent segments meet.
    pub fn is_simple(&self) -> bool {
        let v: Vec<[f64; 2]> = self
            .vertices
            .iter()
            .map(|p| [p.coords()[0], p.coords()[1]])
            .collect();
        let m = v.len() - 1;
        for a in 0..m {
            for b in a + 1..m {
                let adjacent = b == a + 1;
                if adjacent {
                    // Adjacent segments share one endpoint; they only clash if they fold back.
                    if folds_back(v[a], v[a + 1], v[b + 1]) {
                        return false;
                    }
                    continue;
                }
                if segments_intersect(v[a], v[a + 1], v[b], v[b + 1]) {
                    return false;
                }
            }
        }
        true
    }
}

fn orient(a: [f64; 2], b: [f64; 2], c: [f64; 2]) -> f64 {
    (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
}

fn on_segment(a: [f64; 2], b: [f64; 2], p: [f64; 2]) -> bool {
    p[0] >= a[0].min(b[0])
        && p[0] <= a[0].max(b[0])
        && p[1] >= a[1].min(b[1])
        && p[1] <= a[1].max(b[1])
}

fn folds_back(a: [f64; 2], shared: [f64; 2], c: [f64; 2]) -> bool {
    orient(a, shared, c) == 0.0
        && (c[0] - shared[0]) * (a[0] - shared[0]) + (c[1] - shared[1]) * (a[1] - shared[1]) > 0.0
}

fn segments_intersect(p1: [f64; 2], p2: [f64; 2], q1: [f64; 2], q2: [f64; 2]) -> bool {
    let d1 = orient(q1, q2, p1);
    let d2 = orient(q1, q2, p2);
    let d3 = orient(p1, p2, q1);
    let d4 = orient(p1, p2, q2);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return true;
    }
    (d1 == 0.0 && on_segment(q1, q2, p1))
        || (d2 == 0.0 && on_segment(q1, q2, p2))
        || (d3 == 0.0 && on_segment(p1, p2, q1))
        || (d4 == 0.0 && on_segment(p1, p2, q2))
}

/// Arc length along `c` between vertices `i` and `j`.
///
/// This is the real-line distance between the cumulative arc-length
/// parameters, which makes the polyline isometric to an interval.
pub fn polyline_arc_distance(c: &Polyline, i: usize, j: usize) -> Result<f64> {
    let n = c.len();
    for k in [i, j] {
        if k >= n {
            return Err(MetricError::OutsideCarrier {
                point: k.to_string(),
                reason: format!("polyline has {n} vertices"),
            });
        }
    }
    real_line_distance(c.params[i], c.params[j])
}
