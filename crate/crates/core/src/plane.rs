//! Coordinate metrics on the real line and on `R^n`.
//!
//! The plane formulas are stated for two coordinates and extend coordinatewise:
//!
//! - Euclidean: `d(p, q) = sqrt(sum (p_i - q_i)^2)`
//! - taxicab: `d'(p, q) = sum |p_i - q_i|`
//! - Chebyshev: `d''(p, q) = max |p_i - q_i|`
//!
//! A point of dimension one measures the same as [`real_line_distance`].

use crate::error::{MetricError, Result};
use crate::point::Point;

fn check_finite(x: f64) -> Result<f64> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(MetricError::NonFinite(x))
    }
}

fn same_dim(p: &Point, q: &Point) -> Result<()> {
    q.check_dim(p.dim())
}

fn abs_diffs<'a>(p: &'a Point, q: &'a Point) -> impl Iterator<Item = f64> + 'a {
    p.coords()
        .iter()
        .zip(q.coords())
        .map(|(a, b)| (a - b).abs())
}

/// `|r - t|`.
pub fn real_line_distance(r: f64, t: f64) -> Result<f64> {
    check_finite(r)?;
    check_finite(t)?;
    Ok((r - t).abs())
}

/// Euclidean distance, evaluated as a scaled hypotenuse so that coordinates
/// near `f64::MAX` do not overflow in the squares.
pub fn euclidean_distance(p: &Point, q: &Point) -> Result<f64> {
    same_dim(p, q)?;
    let scale = abs_diffs(p, q).fold(0.0_f64, f64::max);
    if scale == 0.0 {
        return Ok(0.0);
    }
    if p.dim() == 1 {
        return Ok(scale);
    }
    let sum: f64 = abs_diffs(p, q).map(|d| (d / scale) * (d / scale)).sum();
    Ok(scale * sum.sqrt())
}

pub fn taxicab_distance(p: &Point, q: &Point) -> Result<f64> {
    same_dim(p, q)?;
    Ok(abs_diffs(p, q).sum())
}

pub fn chebyshev_distance(p: &Point, q: &Point) -> Result<f64> {
    same_dim(p, q)?;
    Ok(abs_diffs(p, q).fold(0.0, f64::max))
}

/// 0 when the points coincide exactly, 1 otherwise.
pub fn discrete_distance(p: &Point, q: &Point) -> Result<f64> {
    same_dim(p, q)?;
    Ok(if p.same_as(q) { 0.0 } else { 1.0 })
}
