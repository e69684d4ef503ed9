//! Metric spaces you can run.
//!
//! The crate evaluates the classical plane metrics (Euclidean, taxicab,
//! Chebyshev), the discrete and real-line metrics, chord and great-circle
//! distances on the unit sphere, and path metrics on weighted graphs and
//! polylines. Every metric is reachable through [`MetricSpec`], and any of
//! them can be certified on a finite sample with [`verify_axioms`], which
//! reports the offending points when an axiom fails.
//!
//! ```
//! use metrikos::{distance, verify_axioms, MetricSpec, Point, ToleranceConfig};
//!
//! let p = Point::new(vec![0.0, 0.0]).unwrap();
//! let q = Point::new(vec![1.0, 1.0]).unwrap();
//! assert_eq!(distance(&MetricSpec::Taxicab, &p, &q).unwrap(), 2.0);
//!
//! let report = verify_axioms(&MetricSpec::Chebyshev, &[p, q], &ToleranceConfig::default()).unwrap();
//! assert!(report.all_ok());
//! ```

pub mod balls;
mod error;
pub mod io;
pub mod isometry;
pub mod metric;
pub mod path;
pub mod plane;
mod point;
pub mod sample;
pub mod sphere;

pub use error::{MetricError, Result};
pub use metric::{
    distance, matrix_from_points, restrict, verify_axioms, Axiom, AxiomReport, DistanceMatrix,
    MetricSpec, ToleranceConfig, Witness,
};
pub use point::Point;
