use super::ppa::Iterate;
use crate::catalog::ConvexSet;
use crate::linalg;
use crate::serde_ext::{ext, ext_vec};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

/// Errors below this are treated as converged.
pub const ERROR_FLOOR: f64 = 1e-14;
/// Number of trailing ratios inspected by the classifier.
pub const TAIL: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum RateClass {
    Superlinear,
    Linear { q: f64 },
    Sublinear,
    Finite,
    Diverged,
    /// Fewer than six ratios were defined.
    Degenerate,
    /// The tail matches none of the rules.
    Unclassified,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RateReport {
    #[serde(with = "ext_vec")]
    pub errors: Vec<f64>,
    #[serde(with = "ext_vec")]
    pub ratios: Vec<f64>,
    pub classification: RateClass,
    /// Mean of the trailing ratios (`NaN` when none is defined).
    #[serde(with = "ext")]
    pub fitted_q: f64,
}

fn mean(v: &[f64]) -> f64 {
    v.iter().sum::<f64>() / v.len() as f64
}

/// Classifies an error sequence `eₙ`.
///
/// In order: an exact zero is `finite`; ten consecutive increases are
/// `diverged`; fewer than six ratios are `degenerate`; a decreasing tail with
/// mean below `0.1` is `superlinear`; a tail with spread below `0.05` and
/// mean in `[0.05, 0.95]` is `linear(q)`; an error below `1e-14` is `finite`;
/// a tail mean above `0.95` is `sublinear`.
pub fn classify_errors(errors: Vec<f64>) -> RateReport {
    let mut ratios = Vec::new();
    for w in errors.windows(2) {
        if w[0] > ERROR_FLOOR {
            ratios.push(w[1] / w[0]);
        } else {
            break;
        }
    }
    let tail = &ratios[ratios.len().saturating_sub(TAIL)..];
    let fitted_q = if tail.is_empty() { f64::NAN } else { mean(tail) };
    let classification = if errors.contains(&0.0) {
        RateClass::Finite
    } else if errors.windows(11).any(|w| w.windows(2).all(|p| p[1] > p[0])) {
        RateClass::Diverged
    } else if ratios.len() < 6 {
        if errors.iter().any(|e| *e < ERROR_FLOOR) {
            RateClass::Finite
        } else {
            RateClass::Degenerate
        }
    } else {
        let decreasing = tail.windows(2).all(|p| p[1] < p[0]);
        let sd = (tail.iter().map(|q| (q - fitted_q).powi(2)).sum::<f64>() / tail.len() as f64).sqrt();
        if decreasing && fitted_q < 0.1 {
            RateClass::Superlinear
        } else if sd < 0.05 && (0.05..=0.95).contains(&fitted_q) {
            RateClass::Linear { q: fitted_q }
        } else if errors.iter().any(|e| *e < ERROR_FLOOR) {
            RateClass::Finite
        } else if fitted_q > 0.95 {
            RateClass::Sublinear
        } else {
            RateClass::Unclassified
        }
    };
    RateReport {
        errors,
        ratios,
        classification,
        fitted_q,
    }
}

/// Rate of the iterates towards `x*`.
pub fn classify_rate(iterates: &[Iterate], x_star: &[f64]) -> RateReport {
    classify_errors(iterates.iter().map(|i| linalg::dist(&i.x, x_star)).collect())
}

/// Rate of the iterates towards a solution set; a one-point set gives the
/// same errors as [`classify_rate`].
pub fn classify_rate_to_set(iterates: &[Iterate], s: &ConvexSet) -> RateReport {
    classify_errors(iterates.iter().map(|i| s.distance(&i.x)).collect())
}

fn join(x: &[f64]) -> String {
    x.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(";")
}

/// Per-run CSV `n,x,f,step,residual,error,ratio`; the ratio column is empty
/// where undefined.
pub fn iterates_csv(iterates: &[Iterate], report: &RateReport) -> String {
    let mut out = String::from("n,x,f,step,residual,error,ratio\n");
    for (i, it) in iterates.iter().enumerate() {
        let err = report.errors.get(i).copied().unwrap_or(f64::NAN);
        let ratio = if i > 0 {
            report.ratios.get(i - 1).map(|r| r.to_string()).unwrap_or_default()
        } else {
            String::new()
        };
        let _ = writeln!(out, "{},{},{},{},{},{},{}", it.n, join(&it.x), it.f, it.step, it.residual, err, ratio);
    }
    out
}

/// Plot data `n,error`.
pub fn errors_csv(report: &RateReport) -> String {
    let mut out = String::from("n,error\n");
    for (n, e) in report.errors.iter().enumerate() {
        let _ = writeln!(out, "{n},{e}");
    }
    out
}
