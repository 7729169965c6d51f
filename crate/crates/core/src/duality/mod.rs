//! Fenchel conjugates, calmness via excess, and the parametric solution map.

mod calmness;
mod conjugate;

pub use calmness::{
    calmness_bridge, check_corollary_4_3, check_corollary_4_4, estimate_calmness_modulus,
    estimate_isolated_calmness_modulus, solution_map_eval, CalmnessBridge, Corollary43, Corollary44,
    SolutionMapSpec, SOLUTION_MAP_WINDOW,
};
pub use conjugate::{
    check_biconjugation, check_inverse_subdifferential, conjugate, grid_conjugate, shift_argument, Biconjugation,
    ConjugatePair, GridSup, InverseLaw, GRID_HALF_WIDTH, GRID_POINTS,
};
