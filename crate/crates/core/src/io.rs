//! File formats.
//!
//! - point sets: `{"dim": 2, "points": [[0, 0], [1, 0.5]]}`
//! - graphs: `{"vertices": 3, "edges": [[0, 1, 1.0], [1, 2, 2.5]], "coords": [[0, 0], ...]}`
//!   (`coords` optional)
//! - distance matrices: CSV, `n` rows of `n` values, optionally preceded by a
//!   header row of labels.

use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::error::{MetricError, Result};
use crate::metric::DistanceMatrix;
use crate::path::{Edge, WeightedGraph};
use crate::point::Point;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointSetFile {
    pub dim: usize,
    pub points: Vec<Vec<f64>>,
}

impl PointSetFile {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| MetricError::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("point sets serialize")
    }

    pub fn from_points(points: &[Point]) -> Result<Self> {
        let dim = points
            .first()
            .map(Point::dim)
            .ok_or(MetricError::EmptySample)?;
        let points = points
            .iter()
            .map(|p| {
                p.check_dim(dim)?;
                Ok(p.coords().to_vec())
            })
            .collect::<Result<_>>()?;
        Ok(Self { dim, points })
    }

    /// Validates the declared dimension and finiteness.
    pub fn into_points(self) -> Result<Vec<Point>> {
        if self.dim == 0 {
            return Err(MetricError::Parse("dim must be positive".into()));
        }
        self.points
            .into_iter()
            .map(|c| {
                let p = Point::new(c)?;
                p.check_dim(self.dim)?;
                Ok(p)
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphFile {
    pub vertices: usize,
    pub edges: Vec<(usize, usize, f64)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coords: Option<Vec<[f64; 2]>>,
}

impl GraphFile {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| MetricError::Parse(e.to_string()))
    }

    pub fn into_graph(self) -> Result<WeightedGraph> {
        let edges = self
            .edges
            .into_iter()
            .map(|(u, v, length)| Edge { u, v, length })
            .collect();
        WeightedGraph::new(self.vertices, edges, self.coords)
    }
}

impl From<&WeightedGraph> for GraphFile {
    fn from(g: &WeightedGraph) -> Self {
        Self {
            vertices: g.vertex_count(),
            edges: g.edges().iter().map(|e| (e.u, e.v, e.length)).collect(),
            coords: g.coords().map(<[_]>::to_vec),
        }
    }
}

fn parse_value(field: &str) -> Option<f64> {
    field.trim().parse::<f64>().ok()
}

/// Reads a distance matrix. The first row is a header when any of its fields
/// fails to parse as a number.
pub fn read_matrix_csv(reader: impl Read) -> Result<DistanceMatrix> {
    let mut csv = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(reader);
    let mut labels = None;
    let mut rows = Vec::new();
    for (line, record) in csv.records().enumerate() {
        let record = record.map_err(|e| MetricError::Parse(e.to_string()))?;
        if record.iter().all(str::is_empty) {
            continue;
        }
        let parsed: Option<Vec<f64>> = record.iter().map(parse_value).collect();
        match parsed {
            Some(row) => {
                if let Some(&bad) = row.iter().find(|v| !v.is_finite()) {
                    return Err(MetricError::NonFinite(bad));
                }
                rows.push(row);
            }
            None if line == 0 && labels.is_none() => {
                labels = Some(record.iter().map(str::to_owned).collect::<Vec<_>>());
            }
            None => {
                return Err(MetricError::Parse(format!(
                    "record {}: non-numeric entry in {:?}",
                    line + 1,
                    record.iter().collect::<Vec<_>>()
                )))
            }
        }
    }
    let m = DistanceMatrix::from_rows(rows)?;
    match labels {
        Some(l) => m.with_labels(l),
        None => Ok(m),
    }
}

pub fn write_matrix_csv(m: &DistanceMatrix, writer: impl Write) -> Result<()> {
    let mut csv = csv::Writer::from_writer(writer);
    let io = |e: csv::Error| MetricError::Parse(e.to_string());
    if let Some(labels) = m.labels() {
        csv.write_record(labels).map_err(io)?;
    }
    for row in m.rows() {
        csv.write_record(row.iter().map(|v| v.to_string()))
            .map_err(io)?;
    }
    csv.flush().map_err(|e| MetricError::Parse(e.to_string()))
}
