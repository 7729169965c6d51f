//! Catalog of convex functions with exact oracles, and closed convex sets.

mod base_pair;
mod function;
mod oracles;
pub(crate) mod piecewise;
mod set;

pub use base_pair::BasePair;
pub use function::{ConvexFunction, QuadraticForm};
pub use oracles::{prox, solution_set, solve_inclusion_1d, subdifferential};
pub use piecewise::Germ;
pub use set::{set_distance, set_excess, sets_equal, ConvexSet, DistanceOracle};

