use crate::catalog::{prox, solve_inclusion_1d, subdifferential, ConvexFunction};
use crate::error::{Error, Result};
use crate::linalg::{self, Vector};
use crate::serde_ext::ext;
use serde::{Deserialize, Serialize};

/// Rule producing the proximal parameters `λₙ`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StepRule {
    Constant { lambda: f64 },
    /// `λₙ = λ₀ / (n + 1)`.
    Harmonic { lambda0: f64 },
    Explicit { values: Vec<f64> },
}

fn default_max_iterations() -> usize {
    200
}

fn default_stop_tolerance() -> f64 {
    1e-13
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProxSchedule {
    #[serde(flatten)]
    pub rule: StepRule,
    #[serde(default = "default_max_iterations")]
    pub max_iterations: usize,
    /// Iteration stops once `‖xₙ₊₁ − xₙ‖` drops below this.
    #[serde(default = "default_stop_tolerance")]
    pub stop_tolerance: f64,
}

impl ProxSchedule {
    fn with_rule(rule: StepRule) -> Self {
        ProxSchedule {
            rule,
            max_iterations: default_max_iterations(),
            stop_tolerance: default_stop_tolerance(),
        }
    }

    pub fn constant(lambda: f64) -> Self {
        Self::with_rule(StepRule::Constant { lambda })
    }

    pub fn harmonic(lambda0: f64) -> Self {
        Self::with_rule(StepRule::Harmonic { lambda0 })
    }

    pub fn explicit(values: Vec<f64>) -> Self {
        Self::with_rule(StepRule::Explicit { values })
    }

    pub fn with_max_iterations(mut self, n: usize) -> Self {
        self.max_iterations = n;
        self
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let out: Self = serde_json::from_str(s).map_err(|e| Error::InvalidArgument(format!("schedule: {e}")))?;
        out.validate()?;
        Ok(out)
    }

    pub fn validate(&self) -> Result<()> {
        let positive = |v: f64| v > 0.0 && v.is_finite();
        let ok = match &self.rule {
            StepRule::Constant { lambda } => positive(*lambda),
            StepRule::Harmonic { lambda0 } => positive(*lambda0),
            StepRule::Explicit { values } => !values.is_empty() && values.iter().all(|v| positive(*v)),
        };
        if !ok {
            return Err(Error::InvalidArgument("proximal parameters must be positive".into()));
        }
        if self.max_iterations == 0 {
            return Err(Error::InvalidArgument("max_iterations must be at least 1".into()));
        }
        if !(self.stop_tolerance >= 0.0) {
            return Err(Error::InvalidArgument("stop_tolerance must be nonnegative".into()));
        }
        Ok(())
    }

    /// `λₙ`, or `None` once an explicit list is exhausted.
    pub fn lambda(&self, n: usize) -> Option<f64> {
        match &self.rule {
            StepRule::Constant { lambda } => Some(*lambda),
            StepRule::Harmonic { lambda0 } => Some(lambda0 / (n as f64 + 1.0)),
            StepRule::Explicit { values } => values.get(n).copied(),
        }
    }
}

/// One iterate `xₙ` with the step that produced it (zeros for `x₀`).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Iterate {
    pub n: usize,
    pub x: Vector,
    #[serde(with = "ext")]
    pub f: f64,
    pub lambda: f64,
    pub step: f64,
    /// Distance from the optimality inclusion of the step.
    pub residual: f64,
}

fn start(f: &ConvexFunction, x0: &[f64]) -> Result<Iterate> {
    if x0.iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidArgument("starting point must be finite".into()));
    }
    Ok(Iterate {
        n: 0,
        x: x0.to_vec(),
        f: f.value(x0)?,
        lambda: 0.0,
        step: 0.0,
        residual: 0.0,
    })
}

/// `xₙ₊₁ = prox(f, λₙ, xₙ)` until the step length drops below the stop
/// tolerance or `max_iterations` steps were taken.
pub fn run_exact_ppa(f: &ConvexFunction, x0: &[f64], sched: &ProxSchedule) -> Result<Vec<Iterate>> {
    sched.validate()?;
    let mut out = vec![start(f, x0)?];
    for n in 0..sched.max_iterations {
        let Some(lambda) = sched.lambda(n) else { break };
        let x = &out[n].x;
        let z = prox(f, lambda, x)?;
        let pull = linalg::scale(&linalg::sub(x, &z), lambda);
        let residual = subdifferential(f, &z)?.distance(&pull);
        let step = linalg::dist(x, &z);
        out.push(Iterate {
            n: n + 1,
            f: f.value(&z)?,
            x: z,
            lambda,
            step,
            residual,
        });
        if step < sched.stop_tolerance {
            break;
        }
    }
    Ok(out)
}

/// Scalar step function `gₙ` of the generalized iteration.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GeneralizedStep {
    /// `g(u) = λu`.
    Linear { lambda: f64 },
    /// `g(u) = λ·clamp(u, −cap, cap)`.
    Saturated { lambda: f64, cap: f64 },
}

impl GeneralizedStep {
    pub fn eval(&self, u: f64) -> f64 {
        match *self {
            GeneralizedStep::Linear { lambda } => lambda * u,
            GeneralizedStep::Saturated { lambda, cap } => lambda * u.clamp(-cap, cap),
        }
    }

    /// Lipschitz constant `λₙ`.
    pub fn lipschitz(&self) -> f64 {
        match *self {
            GeneralizedStep::Linear { lambda } | GeneralizedStep::Saturated { lambda, .. } => lambda,
        }
    }

    /// Parameter check plus `g(0) = 0` and the Lipschitz bound on a probe grid.
    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            GeneralizedStep::Linear { lambda } => lambda > 0.0 && lambda.is_finite(),
            GeneralizedStep::Saturated { lambda, cap } => {
                lambda > 0.0 && lambda.is_finite() && cap > 0.0 && cap.is_finite()
            }
        };
        if !ok {
            return Err(Error::InvalidArgument(format!("invalid step function {self:?}")));
        }
        if self.eval(0.0) != 0.0 {
            return Err(Error::InvalidArgument("step function must vanish at 0".into()));
        }
        let l = self.lipschitz();
        let probe: Vec<f64> = (-50..=50).map(|i| i as f64 / 10.0).collect();
        for w in probe.windows(2) {
            let slope = (self.eval(w[1]) - self.eval(w[0])).abs() / (w[1] - w[0]);
            if slope > l * (1.0 + 1e-12) {
                return Err(Error::InvalidArgument("step function exceeds its Lipschitz constant".into()));
            }
        }
        Ok(())
    }
}

/// One-dimensional iteration `0 ∈ gₙ(xₙ₊₁ − xₙ) + ∂f(xₙ₊₁)`, one step per
/// entry of `steps`.
pub fn run_generalized_ppa(f: &ConvexFunction, x0: f64, steps: &[GeneralizedStep]) -> Result<Vec<Iterate>> {
    if f.dim() != 1 {
        return Err(Error::Unsupported("generalized proximal iteration needs n = 1".into()));
    }
    let mut out = vec![start(f, &[x0])?];
    for (n, g) in steps.iter().enumerate() {
        g.validate()?;
        let x = out[n].x[0];
        let sub = subdifferential(f, &[x])?;
        let slope = sub.as_interval().map_or(1.0, |(l, h)| 0.0f64.clamp(l, h));
        let u = solve_inclusion_1d(f, |u| g.eval(u - x), x, slope.abs() / g.lipschitz())?;
        let residual = subdifferential(f, &[u])?.distance(&[-g.eval(u - x)]);
        out.push(Iterate {
            n: n + 1,
            x: vec![u],
            f: f.value(&[u])?,
            lambda: g.lipschitz(),
            step: (u - x).abs(),
            residual,
        });
    }
    Ok(out)
}
