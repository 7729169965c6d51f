//! The catalog of convex functions on ℝⁿ (n ≤ 4).

use crate::error::{Error, Result};
use crate::linalg::{self, dot, Matrix, SymmetricEigen, Vector};
use crate::serde_ext::ext_vec;
use crate::tol;
use serde::{Deserialize, Serialize};

/// Symbolic descriptor of a proper lsc convex function with exact oracles.
///
/// JSON form: `{"kind": "quadratic", "A": [[2]], "b": [0]}`, `{"kind": "abs"}`,
/// `{"kind": "power_even", "p": 4}`, `{"kind": "max_affine", "slopes": [[0],[1]],
/// "intercepts": [0,0]}`, `{"kind": "indicator_box", "lo": [0], "hi": [1]}`,
/// `{"kind": "scaled", "inner": …, "alpha": 2}`, `{"kind": "sum", "left": …,
/// "right": …}`, `{"kind": "separable", "parts": [...]}`,
/// `{"kind": "tilted", "inner": …, "y_star": [...]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ConvexFunction {
    /// `½ xᵀAx + bᵀx + c`.
    Quadratic {
        #[serde(rename = "A")]
        a: Matrix,
        b: Vector,
        #[serde(default, skip_serializing_if = "is_zero")]
        c: f64,
    },
    /// `|x|` on ℝ.
    Abs,
    /// `x^p` on ℝ, `p` even.
    PowerEven { p: u32 },
    /// `maxᵢ ⟨aᵢ, x⟩ + βᵢ`.
    MaxAffine {
        slopes: Vec<Vector>,
        intercepts: Vector,
    },
    /// 0 on `[lo, hi]`, `+∞` outside.
    IndicatorBox {
        #[serde(with = "ext_vec")]
        lo: Vector,
        #[serde(with = "ext_vec")]
        hi: Vector,
    },
    Scaled {
        inner: Box<ConvexFunction>,
        alpha: f64,
    },
    Sum {
        left: Box<ConvexFunction>,
        right: Box<ConvexFunction>,
    },
    /// `Σᵢ fᵢ(xᵢ)` with one-dimensional parts.
    Separable { parts: Vec<ConvexFunction> },
    /// `f(x) − ⟨y*, x⟩`.
    Tilted {
        inner: Box<ConvexFunction>,
        #[serde(rename = "y_star")]
        tilt: Vector,
    },
}

fn is_zero(v: &f64) -> bool {
    *v == 0.0
}

/// Quadratic data `(A, b, c)` of `½ xᵀAx + bᵀx + c`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticForm {
    pub a: Matrix,
    pub b: Vector,
    pub c: f64,
}

impl ConvexFunction {
    pub fn quadratic(a: Matrix, b: Vector) -> Result<Self> {
        let f = ConvexFunction::Quadratic { a, b, c: 0.0 };
        f.validate()?;
        Ok(f)
    }

    /// `½ a x²` on ℝ.
    pub fn quadratic_1d(a: f64) -> Self {
        ConvexFunction::Quadratic {
            a: vec![vec![a]],
            b: vec![0.0],
            c: 0.0,
        }
    }

    /// `½ xᵀ diag(d) x`.
    pub fn diagonal_quadratic(d: &[f64]) -> Result<Self> {
        let n = d.len();
        let a = (0..n)
            .map(|i| (0..n).map(|j| if i == j { d[i] } else { 0.0 }).collect())
            .collect();
        Self::quadratic(a, vec![0.0; n])
    }

    pub fn power_even(p: u32) -> Result<Self> {
        let f = ConvexFunction::PowerEven { p };
        f.validate()?;
        Ok(f)
    }

    pub fn max_affine(slopes: Vec<Vector>, intercepts: Vector) -> Result<Self> {
        let f = ConvexFunction::MaxAffine { slopes, intercepts };
        f.validate()?;
        Ok(f)
    }

    /// `max(0, x)` on ℝ.
    pub fn positive_part() -> Self {
        ConvexFunction::MaxAffine {
            slopes: vec![vec![0.0], vec![1.0]],
            intercepts: vec![0.0, 0.0],
        }
    }

    pub fn indicator_box(lo: Vector, hi: Vector) -> Result<Self> {
        let f = ConvexFunction::IndicatorBox { lo, hi };
        f.validate()?;
        Ok(f)
    }

    pub fn scaled(inner: ConvexFunction, alpha: f64) -> Result<Self> {
        let f = ConvexFunction::Scaled {
            inner: Box::new(inner),
            alpha,
        };
        f.validate()?;
        Ok(f)
    }

    pub fn sum(left: ConvexFunction, right: ConvexFunction) -> Result<Self> {
        let f = ConvexFunction::Sum {
            left: Box::new(left),
            right: Box::new(right),
        };
        f.validate()?;
        Ok(f)
    }

    pub fn separable(parts: Vec<ConvexFunction>) -> Result<Self> {
        let f = ConvexFunction::Separable { parts };
        f.validate()?;
        Ok(f)
    }

    pub fn tilted(inner: ConvexFunction, tilt: Vector) -> Result<Self> {
        let f = ConvexFunction::Tilted {
            inner: Box::new(inner),
            tilt,
        };
        f.validate()?;
        Ok(f)
    }

    /// Parses and validates a JSON descriptor.
    pub fn from_json(s: &str) -> Result<Self> {
        let f: ConvexFunction =
            serde_json::from_str(s).map_err(|e| Error::InvalidFunction(e.to_string()))?;
        f.validate()?;
        Ok(f)
    }

    /// Ambient dimension (no validation).
    pub fn dim(&self) -> usize {
        match self {
            ConvexFunction::Quadratic { b, .. } => b.len(),
            ConvexFunction::Abs | ConvexFunction::PowerEven { .. } => 1,
            ConvexFunction::MaxAffine { slopes, .. } => slopes.first().map_or(0, Vec::len),
            ConvexFunction::IndicatorBox { lo, .. } => lo.len(),
            ConvexFunction::Scaled { inner, .. } | ConvexFunction::Tilted { inner, .. } => inner.dim(),
            ConvexFunction::Sum { left, .. } => left.dim(),
            ConvexFunction::Separable { parts } => parts.len(),
        }
    }

    /// `true` when the function is finite everywhere (no indicator inside).
    pub fn is_finite_valued(&self) -> bool {
        match self {
            ConvexFunction::IndicatorBox { .. } => false,
            ConvexFunction::Scaled { inner, .. } | ConvexFunction::Tilted { inner, .. } => {
                inner.is_finite_valued()
            }
            ConvexFunction::Sum { left, right } => left.is_finite_valued() && right.is_finite_valued(),
            ConvexFunction::Separable { parts } => parts.iter().all(ConvexFunction::is_finite_valued),
            _ => true,
        }
    }

    /// Checks every structural invariant of the catalog.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidFunction(m));
        let n = self.dim();
        if n == 0 || n > tol::MAX_DIM {
            return bad(format!("dimension {n} outside 1..={}", tol::MAX_DIM));
        }
        match self {
            ConvexFunction::Quadratic { a, b, c } => {
                if a.len() != b.len() || a.iter().any(|r| r.len() != b.len()) {
                    return bad("quadratic: A must be n×n with n = len(b)".into());
                }
                if a.iter().flatten().chain(b).any(|x| !x.is_finite()) || !c.is_finite() {
                    return bad("quadratic: entries must be finite".into());
                }
                if !linalg::is_symmetric(a, 1e-12) {
                    return bad("quadratic: A must be symmetric".into());
                }
                let min = SymmetricEigen::new(a).min();
                if min < -1e-12 {
                    return bad(format!("quadratic: A not positive semidefinite (min eigenvalue {min})"));
                }
            }
            ConvexFunction::Abs => {}
            ConvexFunction::PowerEven { p } => {
                if *p < 2 || p % 2 != 0 {
                    return bad(format!("power_even: p = {p} must be even and >= 2"));
                }
            }
            ConvexFunction::MaxAffine { slopes, intercepts } => {
                if slopes.is_empty() || slopes.len() != intercepts.len() {
                    return bad("max_affine: need equally many (>= 1) slopes and intercepts".into());
                }
                if slopes.len() > tol::MAX_VERTICES {
                    return bad(format!("max_affine: at most {} pieces", tol::MAX_VERTICES));
                }
                if slopes.iter().any(|s| s.len() != n) {
                    return bad("max_affine: slopes must share one dimension".into());
                }
                if slopes.iter().flatten().chain(intercepts).any(|x| !x.is_finite()) {
                    return bad("max_affine: entries must be finite".into());
                }
            }
            ConvexFunction::IndicatorBox { lo, hi } => {
                if lo.len() != hi.len() {
                    return bad("indicator_box: lo/hi length mismatch".into());
                }
                for (l, h) in lo.iter().zip(hi) {
                    if l.is_nan() || h.is_nan() || l > h || *l == f64::INFINITY || *h == f64::NEG_INFINITY {
                        return bad(format!("indicator_box: need lo <= hi, got [{l}, {h}]"));
                    }
                }
            }
            ConvexFunction::Scaled { inner, alpha } => {
                if !(*alpha > 0.0 && alpha.is_finite()) {
                    return bad(format!("scaled: alpha = {alpha} must be positive"));
                }
                inner.validate()?;
            }
            ConvexFunction::Sum { left, right } => {
                left.validate()?;
                right.validate()?;
                if left.dim() != right.dim() {
                    return bad(format!(
                        "sum: dimensions {} and {} differ",
                        left.dim(),
                        right.dim()
                    ));
                }
                if !left.is_finite_valued() && !right.is_finite_valued() {
                    return bad("sum: at most one summand may take the value +inf".into());
                }
            }
            ConvexFunction::Separable { parts } => {
                for part in parts {
                    part.validate()?;
                    if part.dim() != 1 {
                        return bad("separable: every part must be one-dimensional".into());
                    }
                }
            }
            ConvexFunction::Tilted { inner, tilt } => {
                inner.validate()?;
                if tilt.len() != inner.dim() || tilt.iter().any(|x| !x.is_finite()) {
                    return bad("tilted: tilt must be a finite vector of the inner dimension".into());
                }
            }
        }
        Ok(())
    }

    pub(crate) fn check_dim(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: x.len(),
            });
        }
        Ok(())
    }

    /// `f(x)`, `+∞` outside the domain.
    pub fn value(&self, x: &[f64]) -> Result<f64> {
        self.check_dim(x)?;
        Ok(self.eval(x))
    }

    pub(crate) fn eval(&self, x: &[f64]) -> f64 {
        match self {
            ConvexFunction::Quadratic { a, b, c } => {
                0.5 * dot(x, &linalg::mat_vec(a, x)) + dot(b, x) + c
            }
            ConvexFunction::Abs => x[0].abs(),
            ConvexFunction::PowerEven { p } => x[0].powi(*p as i32),
            ConvexFunction::MaxAffine { slopes, intercepts } => slopes
                .iter()
                .zip(intercepts)
                .map(|(s, b)| dot(s, x) + b)
                .fold(f64::NEG_INFINITY, f64::max),
            ConvexFunction::IndicatorBox { lo, hi } => {
                if x.iter().zip(lo.iter().zip(hi)).all(|(v, (l, h))| l <= v && v <= h) {
                    0.0
                } else {
                    f64::INFINITY
                }
            }
            ConvexFunction::Scaled { inner, alpha } => alpha * inner.eval(x),
            ConvexFunction::Sum { left, right } => left.eval(x) + right.eval(x),
            ConvexFunction::Separable { parts } => {
                parts.iter().zip(x).map(|(p, xi)| p.eval(&[*xi])).sum()
            }
            ConvexFunction::Tilted { inner, tilt } => {
                let v = inner.eval(x);
                if v.is_infinite() {
                    v
                } else {
                    v - dot(tilt, x)
                }
            }
        }
    }

    /// Collapses Sum/Scaled/Tilted trees of quadratics into one quadratic.
    pub fn as_quadratic(&self) -> Option<QuadraticForm> {
        match self {
            ConvexFunction::Quadratic { a, b, c } => Some(QuadraticForm {
                a: a.clone(),
                b: b.clone(),
                c: *c,
            }),
            ConvexFunction::PowerEven { p: 2 } => Some(QuadraticForm {
                a: vec![vec![2.0]],
                b: vec![0.0],
                c: 0.0,
            }),
            ConvexFunction::Scaled { inner, alpha } => {
                let q = inner.as_quadratic()?;
                Some(QuadraticForm {
                    a: q.a.iter().map(|r| linalg::scale(r, *alpha)).collect(),
                    b: linalg::scale(&q.b, *alpha),
                    c: q.c * alpha,
                })
            }
            ConvexFunction::Tilted { inner, tilt } => {
                let q = inner.as_quadratic()?;
                Some(QuadraticForm {
                    b: linalg::sub(&q.b, tilt),
                    ..q
                })
            }
            ConvexFunction::Sum { left, right } => {
                let l = left.as_quadratic()?;
                let r = right.as_quadratic()?;
                Some(QuadraticForm {
                    a: l.a.iter().zip(&r.a).map(|(x, y)| linalg::add(x, y)).collect(),
                    b: linalg::add(&l.b, &r.b),
                    c: l.c + r.c,
                })
            }
            ConvexFunction::Separable { parts } => {
                let n = parts.len();
                let mut a = vec![vec![0.0; n]; n];
                let mut b = vec![0.0; n];
                let mut c = 0.0;
                for (i, p) in parts.iter().enumerate() {
                    let q = p.as_quadratic()?;
                    a[i][i] = q.a[0][0];
                    b[i] = q.b[0];
                    c += q.c;
                }
                Some(QuadraticForm { a, b, c })
            }
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values() {
        let q = ConvexFunction::quadratic(vec![vec![2.0]], vec![0.0]).unwrap();
        assert_eq!(q.value(&[3.0]).unwrap(), 9.0);
        assert_eq!(ConvexFunction::Abs.value(&[-2.0]).unwrap(), 2.0);
        let ind = ConvexFunction::indicator_box(vec![0.0], vec![1.0]).unwrap();
        assert_eq!(ind.value(&[2.0]).unwrap(), f64::INFINITY);
        assert_eq!(ind.value(&[0.5]).unwrap(), 0.0);
        let t = ConvexFunction::tilted(ind, vec![3.0]).unwrap();
        assert_eq!(t.value(&[2.0]).unwrap(), f64::INFINITY);
    }

    #[test]
    fn dimension_mismatch_is_usage_error() {
        let err = ConvexFunction::Abs.value(&[1.0, 2.0]).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { expected: 1, got: 2 });
    }

    #[test]
    fn validation() {
        assert!(ConvexFunction::quadratic(vec![vec![-1.0]], vec![0.0]).is_err());
        assert!(ConvexFunction::quadratic(vec![vec![1.0, 2.0], vec![0.0, 1.0]], vec![0.0, 0.0]).is_err());
        assert!(ConvexFunction::power_even(3).is_err());
        assert!(ConvexFunction::power_even(0).is_err());
        assert!(ConvexFunction::scaled(ConvexFunction::Abs, 0.0).is_err());
        assert!(ConvexFunction::sum(ConvexFunction::Abs, ConvexFunction::positive_part()).is_ok());
        let ind = ConvexFunction::indicator_box(vec![0.0], vec![1.0]).unwrap();
        assert!(ConvexFunction::sum(ind.clone(), ind.clone()).is_err());
        assert!(ConvexFunction::sum(ind, ConvexFunction::diagonal_quadratic(&[1.0, 1.0]).unwrap()).is_err());
        assert!(ConvexFunction::diagonal_quadratic(&[1.0; 5]).is_err());
        assert!(ConvexFunction::separable(vec![ConvexFunction::diagonal_quadratic(&[1.0, 1.0]).unwrap()]).is_err());
    }

    #[test]
    fn json_descriptor() {
        let f = ConvexFunction::from_json(
            r#"{"kind":"sum","left":{"kind":"quadratic","A":[[2]],"b":[0]},
                "right":{"kind":"indicator_box","lo":["-inf"],"hi":[1]}}"#,
        )
        .unwrap();
        assert_eq!(f.value(&[2.0]).unwrap(), f64::INFINITY);
        assert_eq!(f.value(&[-1.0]).unwrap(), 1.0);
        assert!(ConvexFunction::from_json(r#"{"kind":"power_even","p":3}"#).is_err());
        let back = ConvexFunction::from_json(&serde_json::to_string(&f).unwrap()).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn quadratic_collapse() {
        let f = ConvexFunction::sum(
            ConvexFunction::quadratic_1d(2.0),
            ConvexFunction::scaled(ConvexFunction::quadratic_1d(2.0), 2.0).unwrap(),
        )
        .unwrap();
        let q = f.as_quadratic().unwrap();
        assert_eq!(q.a, vec![vec![6.0]]);
        assert!(ConvexFunction::sum(ConvexFunction::Abs, ConvexFunction::quadratic_1d(1.0))
            .unwrap()
            .as_quadratic()
            .is_none());
    }
}
