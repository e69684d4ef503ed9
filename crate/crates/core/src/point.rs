use std::fmt;

use crate::error::{MetricError, Result};

/// A point of real coordinate space with finite coordinates.
///
/// Index-based carriers (graph vertices, polyline vertices, matrix labels) use
/// one-dimensional points whose coordinate is the index; see [`Point::index`].
#[derive(Debug, Clone, PartialEq)]
pub struct Point {
    coords: Vec<f64>,
}

impl Point {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(MetricError::EmptyPoint);
        }
        if let Some(&bad) = coords.iter().find(|c| !c.is_finite()) {
            return Err(MetricError::NonFinite(bad));
        }
        Ok(Self { coords })
    }

    pub fn index(i: usize) -> Self {
        Self {
            coords: vec![i as f64],
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    /// Reads the point back as a nonnegative integer index.
    pub fn as_index(&self) -> Result<usize> {
        match self.coords.as_slice() {
            [c] if *c >= 0.0 && c.fract() == 0.0 && *c <= u32::MAX as f64 => Ok(*c as usize),
            _ => Err(MetricError::OutsideCarrier {
                point: self.to_string(),
                reason: "expected a single nonnegative integer index".into(),
            }),
        }
    }

    pub(crate) fn check_dim(&self, expected: usize) -> Result<()> {
        if self.dim() == expected {
            Ok(())
        } else {
            Err(MetricError::DimensionMismatch {
                expected,
                found: self.dim(),
            })
        }
    }

    /// Exact coordinate equality, no tolerance. `0.0` and `-0.0` are the same real.
    pub fn same_as(&self, other: &Point) -> bool {
        self.coords == other.coords
    }
}

impl From<[f64; 2]> for Point {
    fn from(c: [f64; 2]) -> Self {
        Point::new(c.to_vec()).expect("finite coordinates")
    }
}

impl From<[f64; 3]> for Point {
    fn from(c: [f64; 3]) -> Self {
        Point::new(c.to_vec()).expect("finite coordinates")
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}
