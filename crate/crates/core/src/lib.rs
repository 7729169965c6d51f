//! Convex-regularity laboratory: exact subdifferential and solution-set
//! oracles for a small catalog of convex functions, sampled estimators of
//! subregularity moduli and growth constants, proximal point solvers with
//! rate classification, and Fenchel-duality calmness checks.
//!
//! ```
//! use subreg::catalog::{BasePair, ConvexFunction};
//! use subreg::regularity::{estimate_subregularity_modulus, SampleGrid};
//!
//! let bp = BasePair::new(ConvexFunction::quadratic_1d(2.0), vec![0.0], vec![0.0], 1.0).unwrap();
//! let report = estimate_subregularity_modulus(&bp, &SampleGrid::around(&bp)).unwrap();
//! assert!((report.value - 0.5).abs() < 1e-12);
//! ```

pub mod catalog;
pub mod duality;
pub mod error;
pub mod linalg;
pub mod proximal;
pub mod regularity;
pub mod serde_ext;
pub mod tol;

pub use catalog::{BasePair, ConvexFunction, ConvexSet};
pub use error::{Error, Result};
pub use proximal::{ProxSchedule, RateClass, RateReport};
pub use regularity::{Classification, ModulusKind, ModulusReport, SampleGrid};
