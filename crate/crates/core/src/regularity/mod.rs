//! Sampled estimators of subregularity moduli and growth constants, exact
//! second-order moduli, and cross-checks between them.

mod checks;
mod derivative;
mod estimators;
mod grid;
mod report;

pub use checks::{
    check_contingent_link, check_hessian_link, check_prop_3_9, check_sum_rule, check_theorem_2_1, check_theorem_3_1, check_theorem_3_6, BoundCheck,
    MonotoneChain, Prop39, SecondOrderLink, SumRule,
};
pub use derivative::{
    contingent_derivative_modulus, hessian, hessian_modulus, hessian_report, sampled_contingent_modulus,
};
pub use estimators::{
    check_strong_monotone_relatedness, estimate_growth_constant, estimate_strong_growth_constant,
    estimate_strong_subregularity_modulus, estimate_subregularity_modulus, is_isolated, probe_growth,
    SWEEP_LEVELS,
};
pub(crate) use estimators::sweep_report;
pub use grid::SampleGrid;
pub use report::{classify_sweep, Classification, LedgerEntry, ModulusKind, ModulusReport, RadiusValue};
