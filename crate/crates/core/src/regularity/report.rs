use crate::linalg::Vector;
use crate::serde_ext::{ext, ext_vec};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModulusKind {
    Subregularity,
    StrongSubregularity,
    Growth,
    StrongGrowth,
    MonotoneModulus,
    HessianModulus,
    ContingentModulus,
    Calmness,
    IsolatedCalmness,
}

impl ModulusKind {
    /// Moduli estimated as a supremum (κ-type); the others are infima (c-type).
    pub fn is_sup(self) -> bool {
        matches!(
            self,
            ModulusKind::Subregularity
                | ModulusKind::StrongSubregularity
                | ModulusKind::Calmness
                | ModulusKind::IsolatedCalmness
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    Holds,
    Fails,
    Degenerate,
}

impl Classification {
    pub fn holds(self) -> bool {
        self == Classification::Holds
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LedgerEntry {
    #[serde(with = "ext_vec")]
    pub x: Vector,
    #[serde(with = "ext")]
    pub numerator: f64,
    #[serde(with = "ext")]
    pub denominator: f64,
    #[serde(with = "ext")]
    pub ratio: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RadiusValue {
    pub radius: f64,
    #[serde(with = "ext")]
    pub value: f64,
}

/// Estimated modulus with its evidence.
///
/// `value`, `witness` and `ledger` refer to the largest radius of the sweep.
/// A sweep-based `classification` is a heuristic (`heuristic == true`); exact
/// moduli carry an empty sweep.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModulusReport {
    pub kind: ModulusKind,
    #[serde(with = "ext")]
    pub value: f64,
    pub witness: Option<Vector>,
    pub radii_sweep: Vec<RadiusValue>,
    pub classification: Classification,
    pub heuristic: bool,
    #[serde(skip, default)]
    pub ledger: Vec<LedgerEntry>,
}

impl ModulusReport {
    pub fn holds(&self) -> bool {
        self.classification.holds()
    }

    /// Sweep values, largest radius first.
    pub fn sweep_values(&self) -> Vec<f64> {
        self.radii_sweep.iter().map(|r| r.value).collect()
    }

    /// Ledger as CSV with header `x,numerator,denominator,ratio`; vector
    /// components are joined by `;`.
    pub fn ledger_csv(&self) -> String {
        let mut out = String::from("x,numerator,denominator,ratio\n");
        for e in &self.ledger {
            let x: Vec<String> = e.x.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "{},{},{},{}", x.join(";"), e.numerator, e.denominator, e.ratio);
        }
        out
    }
}

/// Heuristic decision over a sweep of radii `a, a/2, a/4, …`.
///
/// A sup-type modulus fails when it is infinite at some radius or grows by a
/// factor of at least two over three consecutive halvings. An inf-type
/// modulus fails when it vanishes at the smallest radius or shrinks by a
/// factor of at least two over three consecutive halvings.
pub fn classify_sweep(kind: ModulusKind, values: &[f64]) -> Classification {
    if values.is_empty() || values.iter().any(|v| v.is_nan()) {
        return Classification::Degenerate;
    }
    let monotone_window = |w: &[f64], up: bool| {
        w.windows(2).all(|p| if up { p[1] >= p[0] } else { p[1] <= p[0] })
    };
    if kind.is_sup() {
        if values.iter().any(|v| v.is_infinite()) {
            return Classification::Fails;
        }
        for w in values.windows(4) {
            if w[3] > 0.0 && monotone_window(w, true) && w[3] >= 2.0 * w[0] {
                return Classification::Fails;
            }
        }
    } else {
        if values[values.len() - 1] <= crate::tol::DENOMINATOR_FLOOR {
            return Classification::Fails;
        }
        for w in values.windows(4) {
            if w[0].is_finite() && monotone_window(w, false) && w[3] <= 0.5 * w[0] {
                return Classification::Fails;
            }
        }
    }
    Classification::Holds
}
