use super::{subdifferential, ConvexFunction};
use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::tol;
use serde::{Deserialize, Serialize};

/// Anchor `(x̄, ȳ*)` on the graph of `∂f`, with an analysis radius.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BasePair {
    pub f: ConvexFunction,
    pub xbar: Vector,
    pub ystar: Vector,
    pub radius: f64,
}

impl BasePair {
    /// Validates `f` and checks `ȳ* ∈ ∂f(x̄)` to [`tol::MEMBERSHIP`].
    pub fn new(f: ConvexFunction, xbar: Vector, ystar: Vector, radius: f64) -> Result<Self> {
        f.validate()?;
        f.check_dim(&xbar)?;
        f.check_dim(&ystar)?;
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::InvalidArgument(format!("radius must be positive, got {radius}")));
        }
        let sub = subdifferential(&f, &xbar)?;
        let gap = sub.distance(&ystar);
        if !(gap <= tol::MEMBERSHIP) {
            return Err(Error::InvalidBasePair(format!(
                "y* = {ystar:?} is at distance {gap} from the subdifferential at x = {xbar:?}"
            )));
        }
        Ok(BasePair {
            f,
            xbar,
            ystar,
            radius,
        })
    }

    pub fn dim(&self) -> usize {
        self.xbar.len()
    }

    pub fn with_radius(&self, radius: f64) -> Self {
        BasePair {
            radius,
            ..self.clone()
        }
    }
}
