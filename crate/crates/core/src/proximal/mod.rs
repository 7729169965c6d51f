//! Exact and generalized proximal point iterations with empirical rate
//! classification.

mod ppa;
mod rate;

pub use ppa::{run_exact_ppa, run_generalized_ppa, GeneralizedStep, Iterate, ProxSchedule, StepRule};
pub use rate::{
    classify_errors, classify_rate, classify_rate_to_set, errors_csv, iterates_csv, RateClass, RateReport,
    ERROR_FLOOR, TAIL,
};
