use crate::catalog::piecewise::{max_affine_envelope, Piecewise};
use crate::catalog::{solution_set, subdifferential, sets_equal, ConvexFunction};
use crate::error::{Error, Result};
use crate::linalg::{self, dot, SymmetricEigen, Vector};
use crate::tol;
use serde::{Deserialize, Serialize};

/// A catalog function together with its exact Fenchel conjugate.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConjugatePair {
    pub primal: ConvexFunction,
    pub conjugate: ConvexFunction,
}

/// Value of the grid-sup conjugate; `trusted` is false when the sup sits on
/// the boundary of the grid, where it only bounds the true value from below.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridSup {
    pub value: f64,
    pub argmax: f64,
    pub trusted: bool,
}

/// Half-width of the numeric conjugation window.
pub const GRID_HALF_WIDTH: f64 = 10.0;
/// Points of the numeric conjugation grid.
pub const GRID_POINTS: usize = 100_000;

impl ConjugatePair {
    /// `sup_{x ∈ [−10, 10]} (xy − f(x))` over `10⁵` grid points.
    pub fn numeric_fallback(&self, y: f64) -> Result<GridSup> {
        grid_conjugate(&self.primal, y)
    }
}

pub fn grid_conjugate(f: &ConvexFunction, y: f64) -> Result<GridSup> {
    if f.dim() != 1 {
        return Err(Error::Unsupported("grid conjugate needs n = 1".into()));
    }
    let h = 2.0 * GRID_HALF_WIDTH / (GRID_POINTS - 1) as f64;
    let mut best = f64::NEG_INFINITY;
    let mut arg = 0;
    for k in 0..GRID_POINTS {
        let x = -GRID_HALF_WIDTH + k as f64 * h;
        let v = x * y - f.value(&[x])?;
        if v > best {
            best = v;
            arg = k;
        }
    }
    Ok(GridSup {
        value: best,
        argmax: -GRID_HALF_WIDTH + arg as f64 * h,
        trusted: arg != 0 && arg != GRID_POINTS - 1,
    })
}

fn unsupported(what: &str) -> Error {
    Error::Unsupported(format!("conjugate of {what} is outside the catalog"))
}

/// Exact conjugate for quadratics with `A ≻ 0`, `|x|`, one-dimensional
/// max-affine functions, box indicators, bounded one-dimensional polyhedral
/// sums, and separable, scaled or tilted combinations of these.
pub fn conjugate(f: &ConvexFunction) -> Result<ConjugatePair> {
    f.validate()?;
    Ok(ConjugatePair {
        primal: f.clone(),
        conjugate: conj(f)?,
    })
}

fn conj(f: &ConvexFunction) -> Result<ConvexFunction> {
    if let Some(q) = f.as_quadratic() {
        let eig = SymmetricEigen::new(&q.a);
        if eig.min() <= tol::EIGEN {
            return Err(unsupported("a quadratic with singular A"));
        }
        let n = q.b.len();
        let mut inv = vec![vec![0.0; n]; n];
        for (lam, v) in eig.values.iter().zip(&eig.vectors) {
            for i in 0..n {
                for j in 0..n {
                    inv[i][j] += v[i] * v[j] / lam;
                }
            }
        }
        // symmetrize away rounding so validation accepts the inverse
        for i in 0..n {
            for j in 0..i {
                let m = 0.5 * (inv[i][j] + inv[j][i]);
                inv[i][j] = m;
                inv[j][i] = m;
            }
        }
        let inv_b = linalg::mat_vec(&inv, &q.b);
        return Ok(ConvexFunction::Quadratic {
            a: inv,
            b: linalg::scale(&inv_b, -1.0),
            c: 0.5 * dot(&q.b, &inv_b) - q.c,
        });
    }
    match f {
        ConvexFunction::Abs => ConvexFunction::indicator_box(vec![-1.0], vec![1.0]),
        ConvexFunction::MaxAffine { slopes, intercepts } if f.dim() == 1 => {
            let pts: Vec<(f64, f64)> = slopes.iter().map(|s| s[0]).zip(intercepts.iter().map(|b| -b)).collect();
            polyline_conjugate(&pts)
        }
        ConvexFunction::MaxAffine { .. } => Err(unsupported("a max-affine function with n ≥ 2")),
        ConvexFunction::IndicatorBox { lo, hi } => {
            let parts = lo
                .iter()
                .zip(hi)
                .map(|(l, h)| support_1d(*l, *h))
                .collect::<Result<Vec<_>>>()?;
            if parts.len() == 1 {
                Ok(parts.into_iter().next().unwrap())
            } else {
                ConvexFunction::separable(parts)
            }
        }
        ConvexFunction::Separable { parts } => {
            ConvexFunction::separable(parts.iter().map(conj).collect::<Result<Vec<_>>>()?)
        }
        ConvexFunction::Scaled { inner, alpha } => perspective(&conj(inner)?, *alpha),
        ConvexFunction::Tilted { inner, tilt } => shift_argument(&conj(inner)?, tilt),
        ConvexFunction::Sum { .. } if f.dim() == 1 => bounded_polyhedral_conjugate(f),
        _ => Err(unsupported("this entry")),
    }
}

/// `sup_x (xy − max_i(aᵢx + βᵢ))` for points `(aᵢ, −βᵢ)`: the lower convex
/// hull of the points over `[min aᵢ, max aᵢ]`, `+∞` outside.
fn polyline_conjugate(points: &[(f64, f64)]) -> Result<ConvexFunction> {
    let mut pts = points.to_vec();
    pts.sort_by(|p, q| p.0.total_cmp(&q.0).then(p.1.total_cmp(&q.1)));
    pts.dedup_by(|q, p| q.0 == p.0);
    let mut hull: Vec<(f64, f64)> = Vec::new();
    for p in pts {
        while hull.len() >= 2 {
            let (o, a) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let cross = (a.0 - o.0) * (p.1 - o.1) - (a.1 - o.1) * (p.0 - o.0);
            if cross <= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    let (amin, amax) = (hull[0].0, hull[hull.len() - 1].0);
    let (slopes, intercepts): (Vec<Vector>, Vec<f64>) = if hull.len() == 1 {
        (vec![vec![0.0]], vec![hull[0].1])
    } else {
        hull.windows(2)
            .map(|w| {
                let s = (w[1].1 - w[0].1) / (w[1].0 - w[0].0);
                (vec![s], w[0].1 - s * w[0].0)
            })
            .unzip()
    };
    let domain = ConvexFunction::indicator_box(vec![amin], vec![amax])?;
    if slopes.iter().all(|s| s[0] == 0.0) && intercepts.iter().all(|b| *b == 0.0) {
        return Ok(domain);
    }
    ConvexFunction::sum(ConvexFunction::max_affine(slopes, intercepts)?, domain)
}

/// Support function of `[lo, hi]`.
fn support_1d(lo: f64, hi: f64) -> Result<ConvexFunction> {
    let line = |s: f64| ConvexFunction::max_affine(vec![vec![s]], vec![0.0]);
    match (lo.is_finite(), hi.is_finite()) {
        (true, true) if lo == hi => line(lo),
        (true, true) => ConvexFunction::max_affine(vec![vec![lo], vec![hi]], vec![0.0, 0.0]),
        (false, true) => ConvexFunction::sum(
            line(hi)?,
            ConvexFunction::indicator_box(vec![0.0], vec![f64::INFINITY])?,
        ),
        (true, false) => ConvexFunction::sum(
            line(lo)?,
            ConvexFunction::indicator_box(vec![f64::NEG_INFINITY], vec![0.0])?,
        ),
        (false, false) => ConvexFunction::indicator_box(vec![0.0], vec![0.0]),
    }
}

/// Conjugate of a one-dimensional piecewise-linear function with bounded
/// domain: the max of `v·y − f(v)` over the vertices `v`.
fn bounded_polyhedral_conjugate(f: &ConvexFunction) -> Result<ConvexFunction> {
    let pw = Piecewise::of(f).ok_or_else(|| unsupported("this sum"))?;
    let (lo, hi) = pw.domain();
    if !(lo.is_finite() && hi.is_finite()) || pw.pieces.iter().any(|p| p.curv != 0.0) {
        return Err(unsupported("this sum"));
    }
    let mut slopes = Vec::new();
    let mut intercepts = Vec::new();
    for v in pw.kinks() {
        let fv = f.value(&[v])?;
        if fv.is_finite() {
            slopes.push(vec![v]);
            intercepts.push(-fv);
        }
    }
    // drop vertices whose line never reaches the envelope
    let lines: Vec<(f64, f64)> = slopes.iter().map(|s| s[0]).zip(intercepts.iter().copied()).collect();
    let env = max_affine_envelope(&lines);
    ConvexFunction::max_affine(env.iter().map(|e| vec![e.2]).collect(), env.iter().map(|e| e.3).collect())
}

/// `y ↦ g(y + t)`.
pub fn shift_argument(g: &ConvexFunction, t: &[f64]) -> Result<ConvexFunction> {
    Ok(match g {
        ConvexFunction::Quadratic { a, b, c } => {
            let at = linalg::mat_vec(a, t);
            ConvexFunction::Quadratic {
                a: a.clone(),
                b: linalg::add(&at, b),
                c: 0.5 * dot(t, &at) + dot(b, t) + c,
            }
        }
        ConvexFunction::MaxAffine { slopes, intercepts } => ConvexFunction::MaxAffine {
            slopes: slopes.clone(),
            intercepts: slopes.iter().zip(intercepts).map(|(s, b)| b + dot(s, t)).collect(),
        },
        ConvexFunction::IndicatorBox { lo, hi } => ConvexFunction::IndicatorBox {
            lo: lo.iter().zip(t).map(|(l, ti)| l - ti).collect(),
            hi: hi.iter().zip(t).map(|(h, ti)| h - ti).collect(),
        },
        ConvexFunction::Sum { left, right } => {
            ConvexFunction::sum(shift_argument(left, t)?, shift_argument(right, t)?)?
        }
        ConvexFunction::Separable { parts } => ConvexFunction::separable(
            parts
                .iter()
                .zip(t)
                .map(|(p, ti)| shift_argument(p, &[*ti]))
                .collect::<Result<Vec<_>>>()?,
        )?,
        ConvexFunction::Scaled { inner, alpha } => ConvexFunction::scaled(shift_argument(inner, t)?, *alpha)?,
        _ => return Err(unsupported("a shifted entry")),
    })
}

/// `y ↦ α·g(y/α)`.
fn perspective(g: &ConvexFunction, alpha: f64) -> Result<ConvexFunction> {
    Ok(match g {
        ConvexFunction::Quadratic { a, b, c } => ConvexFunction::Quadratic {
            a: a.iter().map(|r| linalg::scale(r, 1.0 / alpha)).collect(),
            b: b.clone(),
            c: alpha * c,
        },
        ConvexFunction::MaxAffine { slopes, intercepts } => ConvexFunction::MaxAffine {
            slopes: slopes.clone(),
            intercepts: linalg::scale(intercepts, alpha),
        },
        ConvexFunction::IndicatorBox { lo, hi } => ConvexFunction::IndicatorBox {
            lo: linalg::scale(lo, alpha),
            hi: linalg::scale(hi, alpha),
        },
        ConvexFunction::Sum { left, right } => {
            ConvexFunction::sum(perspective(left, alpha)?, perspective(right, alpha)?)?
        }
        ConvexFunction::Separable { parts } => ConvexFunction::separable(
            parts
                .iter()
                .map(|p| perspective(p, alpha))
                .collect::<Result<Vec<_>>>()?,
        )?,
        _ => return Err(unsupported("a scaled entry")),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Biconjugation {
    pub probes: usize,
    pub max_gap: f64,
    pub ok: bool,
}

/// Compares `f**` with `f` on the probes; matching infinities count as equal.
pub fn check_biconjugation(f: &ConvexFunction, probes: &[Vector], tol: f64) -> Result<Biconjugation> {
    let fss = conj(&conj(f)?)?;
    let mut max_gap: f64 = 0.0;
    for x in probes {
        let (a, b) = (f.value(x)?, fss.value(x)?);
        let gap = if a.is_infinite() || b.is_infinite() {
            if a == b {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            (a - b).abs()
        };
        max_gap = max_gap.max(gap);
    }
    Ok(Biconjugation {
        probes: probes.len(),
        max_gap,
        ok: max_gap <= tol,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InverseLaw {
    pub checked: usize,
    /// Duals where `(∂f)⁻¹(y*)` and `∂f*(y*)` differ.
    pub failures: Vec<Vector>,
}

impl InverseLaw {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Set equality of `(∂f)⁻¹(y*)` and `∂f*(y*)` to `1e−8` on every sample.
pub fn check_inverse_subdifferential(pair: &ConjugatePair, samples: &[Vector]) -> Result<InverseLaw> {
    let mut failures = Vec::new();
    for y in samples {
        let a = solution_set(&pair.primal, y)?;
        let b = subdifferential(&pair.conjugate, y)?;
        if !sets_equal(&a, &b, 1e-8) {
            failures.push(y.clone());
        }
    }
    Ok(InverseLaw {
        checked: samples.len(),
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_images() {
        let half_sq = ConvexFunction::quadratic_1d(1.0);
        assert_eq!(conjugate(&half_sq).unwrap().conjugate, half_sq);
        assert_eq!(
            conjugate(&ConvexFunction::Abs).unwrap().conjugate,
            ConvexFunction::indicator_box(vec![-1.0], vec![1.0]).unwrap()
        );
        assert_eq!(
            conjugate(&ConvexFunction::positive_part()).unwrap().conjugate,
            ConvexFunction::indicator_box(vec![0.0], vec![1.0]).unwrap()
        );
        let ind = ConvexFunction::indicator_box(vec![0.0], vec![1.0]).unwrap();
        assert_eq!(conjugate(&ind).unwrap().conjugate.value(&[-3.0]).unwrap(), 0.0);
        assert_eq!(conjugate(&ind).unwrap().conjugate.value(&[3.0]).unwrap(), 3.0);
    }

    #[test]
    fn singular_quadratic_is_unsupported() {
        let f = ConvexFunction::diagonal_quadratic(&[1.0, 0.0]).unwrap();
        assert!(matches!(conjugate(&f), Err(Error::Unsupported(_))));
    }

    #[test]
    fn tilted_quadratic() {
        // (½x² − 3x)* (y) = ½(y + 3)²
        let f = ConvexFunction::tilted(ConvexFunction::quadratic_1d(1.0), vec![3.0]).unwrap();
        let g = conjugate(&f).unwrap().conjugate;
        for y in [-2.0, 0.0, 1.5] {
            assert!((g.value(&[y]).unwrap() - 0.5 * (y + 3.0) * (y + 3.0)).abs() < 1e-12);
        }
    }

    #[test]
    fn half_lines_have_support_functions() {
        let f = ConvexFunction::indicator_box(vec![f64::NEG_INFINITY], vec![2.0]).unwrap();
        let g = conjugate(&f).unwrap().conjugate;
        assert_eq!(g.value(&[1.0]).unwrap(), 2.0);
        assert_eq!(g.value(&[-1.0]).unwrap(), f64::INFINITY);
    }

    #[test]
    fn grid_fallback_flags_the_boundary() {
        let r = grid_conjugate(&ConvexFunction::Abs, 2.0).unwrap();
        assert!(!r.trusted);
        let r = grid_conjugate(&ConvexFunction::quadratic_1d(1.0), 2.0).unwrap();
        assert!(r.trusted);
        assert!((r.value - 2.0).abs() < 1e-6);
    }

    #[test]
    fn abs_inverse_law() {
        let pair = conjugate(&ConvexFunction::Abs).unwrap();
        let law = check_inverse_subdifferential(&pair, &[vec![0.0], vec![1.0], vec![-1.0], vec![2.0]]).unwrap();
        assert!(law.ok(), "{law:?}");
    }
}
