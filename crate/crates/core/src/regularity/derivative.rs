//! Second-order moduli: the Hessian and the contingent derivative of `∂f`.

use super::estimators::exact_report;
use super::report::{LedgerEntry, ModulusKind, ModulusReport};
use crate::catalog::piecewise::Piecewise;
use crate::catalog::{subdifferential, BasePair, ConvexFunction};
use crate::error::{Error, Result};
use crate::linalg::{self, dot, Matrix, SymmetricEigen};
use crate::tol;

fn not_smooth(what: &str) -> Error {
    Error::Unsupported(format!("{what} is not twice differentiable at the base point"))
}

/// `∇²f(x)` for catalog entries that are twice differentiable at `x`.
pub fn hessian(f: &ConvexFunction, x: &[f64]) -> Result<Matrix> {
    f.check_dim(x)?;
    let n = x.len();
    let zero = || vec![vec![0.0; n]; n];
    Ok(match f {
        ConvexFunction::Quadratic { a, .. } => a.clone(),
        ConvexFunction::PowerEven { p } => {
            let p = *p as f64;
            vec![vec![p * (p - 1.0) * x[0].powi(p as i32 - 2)]]
        }
        ConvexFunction::Abs => {
            if x[0] == 0.0 {
                return Err(not_smooth("|x|"));
            }
            zero()
        }
        ConvexFunction::MaxAffine { .. } => match subdifferential(f, x)? {
            crate::catalog::ConvexSet::Singleton { .. } => zero(),
            _ => return Err(not_smooth("a max of affine functions")),
        },
        ConvexFunction::IndicatorBox { lo, hi } => {
            if x.iter().zip(lo.iter().zip(hi)).all(|(v, (l, h))| l < v && v < h) {
                zero()
            } else {
                return Err(not_smooth("a box indicator"));
            }
        }
        ConvexFunction::Scaled { inner, alpha } => hessian(inner, x)?
            .into_iter()
            .map(|row| row.into_iter().map(|v| alpha * v).collect())
            .collect(),
        ConvexFunction::Tilted { inner, .. } => hessian(inner, x)?,
        ConvexFunction::Sum { left, right } => {
            let a = hessian(left, x)?;
            let b = hessian(right, x)?;
            a.iter()
                .zip(&b)
                .map(|(r, s)| r.iter().zip(s).map(|(u, v)| u + v).collect())
                .collect()
        }
        ConvexFunction::Separable { parts } => {
            let mut h = zero();
            for (i, (p, xi)) in parts.iter().zip(x).enumerate() {
                h[i][i] = hessian(p, &[*xi])?[0][0];
            }
            h
        }
    })
}

/// Smallest eigenvalue of `∇²f(x̄)`.
pub fn hessian_modulus(f: &ConvexFunction, xbar: &[f64]) -> Result<f64> {
    Ok(SymmetricEigen::new(&hessian(f, xbar)?).min())
}

/// Hessian modulus packaged as a report (`holds` iff positive).
pub fn hessian_report(f: &ConvexFunction, xbar: &[f64]) -> Result<ModulusReport> {
    Ok(exact_report(ModulusKind::HessianModulus, hessian_modulus(f, xbar)?, Some(xbar.to_vec())))
}

/// Smallest `zw/w²` over directions `(w, z)` tangent to `gph ∂f` at
/// `(x̄, ȳ*)` with `w ≠ 0`, in one dimension; `None` when no such direction
/// exists.
fn branch_modulus_1d(f: &ConvexFunction, x: f64, y: f64) -> Result<Option<f64>> {
    let pw = Piecewise::of(f);
    let germ = match &pw {
        Some(pw) => pw.germ(x),
        None => None,
    };
    let Some(g) = germ else {
        // smooth entries outside the piecewise-quadratic family
        return Ok(Some(hessian(f, &[x])?[0][0]));
    };
    let near = |a: f64| (a - y).abs() <= tol::MEMBERSHIP * (1.0 + y.abs());
    let mut best: Option<f64> = None;
    if near(g.upper) {
        if let Some(s) = g.right {
            best = Some(best.map_or(s, |b: f64| b.min(s)));
        }
    }
    if near(g.lower) {
        if let Some(s) = g.left {
            best = Some(best.map_or(s, |b: f64| b.min(s)));
        }
    }
    Ok(best)
}

/// Exact modulus of the contingent derivative `D∂f(x̄|ȳ*)`: the minimum
/// eigenvalue for quadratics (and other smooth entries), the smallest slope of
/// the graph branches through `(x̄, ȳ*)` for one-dimensional polylines, and
/// the smallest component modulus for separable sums.
pub fn contingent_derivative_modulus(bp: &BasePair) -> Result<ModulusReport> {
    let value = contingent_value(&bp.f, &bp.xbar, &bp.ystar)?;
    Ok(exact_report(ModulusKind::ContingentModulus, value, Some(bp.xbar.clone())))
}

fn contingent_value(f: &ConvexFunction, x: &[f64], y: &[f64]) -> Result<f64> {
    if let Some(q) = f.as_quadratic() {
        return Ok(SymmetricEigen::new(&q.a).min());
    }
    if x.len() == 1 {
        return Ok(branch_modulus_1d(f, x[0], y[0])?.unwrap_or(f64::INFINITY));
    }
    match f {
        ConvexFunction::Separable { parts } => {
            let mut best = f64::INFINITY;
            for ((p, xi), yi) in parts.iter().zip(x).zip(y) {
                if let Some(s) = branch_modulus_1d(p, *xi, *yi)? {
                    best = best.min(s);
                }
            }
            Ok(best)
        }
        _ => hessian_modulus(f, x).map_err(|_| {
            Error::Unsupported("contingent derivative of this entry".into())
        }),
    }
}

/// Sampled fallback: graph points `(x̄ ± h·e, y)` with `y` the element of
/// `∂f(x̄ ± h·e)` nearest to `ȳ*`, kept while `‖y − ȳ*‖ ≤ √h`, along the
/// coordinate directions and the main diagonal, for `h = a·2^{-j}`,
/// `j = 20..40`. The value is the infimum of `⟨y − ȳ*, x − x̄⟩ / ‖x − x̄‖²`
/// over kept points (`+∞` when none is kept).
pub fn sampled_contingent_modulus(bp: &BasePair) -> Result<ModulusReport> {
    let n = bp.dim();
    let mut dirs: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    if n > 1 {
        dirs.push(vec![1.0 / (n as f64).sqrt(); n]);
    }
    let mut ledger = Vec::new();
    for j in 20..=40 {
        let h = bp.radius * f64::powi(2.0, -j);
        for d in &dirs {
            for sign in [1.0, -1.0] {
                let x = linalg::add(&bp.xbar, &linalg::scale(d, sign * h));
                let sub = subdifferential(&bp.f, &x)?;
                let Some(y) = sub.project(&bp.ystar) else {
                    continue;
                };
                let dy = linalg::sub(&y, &bp.ystar);
                if linalg::norm(&dy) > h.sqrt() {
                    continue;
                }
                let dx = linalg::sub(&x, &bp.xbar);
                let den = dot(&dx, &dx);
                let num = dot(&dy, &dx);
                ledger.push(LedgerEntry {
                    x,
                    numerator: num,
                    denominator: den,
                    ratio: num / den,
                });
            }
        }
    }
    let mut value = f64::INFINITY;
    let mut witness = None;
    for e in &ledger {
        if e.ratio < value {
            value = e.ratio;
            witness = Some(e.x.clone());
        }
    }
    let mut report = exact_report(ModulusKind::ContingentModulus, value, witness);
    report.heuristic = true;
    report.ledger = ledger;
    Ok(report)
}
