//! Global numerical tolerances.

/// Membership of a point in a set (`distance <= MEMBERSHIP`).
pub const MEMBERSHIP: f64 = 1e-10;

/// Termination width for every bisection.
pub const BISECTION: f64 = 1e-12;

/// A max-affine piece is active if it is within this margin of the max.
pub const ACTIVE_MARGIN: f64 = 1e-10;

/// Slack allowed in every inequality assertion.
pub const INEQUALITY: f64 = 1e-9;

/// Denominators below this floor are not divided by.
pub const DENOMINATOR_FLOOR: f64 = 1e-12;

/// Numerators at floored samples must stay below this bound.
pub const NUMERATOR_FLOOR: f64 = 1e-8;

/// Eigenvalue cut-off used for null spaces and positive semidefiniteness.
pub const EIGEN: f64 = 1e-12;

/// Largest supported ambient dimension.
pub const MAX_DIM: usize = 4;

/// Largest supported number of polytope vertices / max-affine pieces.
pub const MAX_VERTICES: usize = 8;
