//! Exact subdifferential, inverse-subdifferential and proximal oracles.

use super::function::{ConvexFunction, QuadraticForm};
use super::piecewise::{max_affine_envelope, Piecewise};
use super::set::ConvexSet;
use crate::error::{Error, Result};
use crate::linalg::{self, dot, SymmetricEigen, Vector};
use crate::tol;

/// `∂f(x)`; empty outside `dom f`.
pub fn subdifferential(f: &ConvexFunction, x: &[f64]) -> Result<ConvexSet> {
    f.check_dim(x)?;
    if f.eval(x).is_infinite() {
        return Ok(ConvexSet::Empty);
    }
    subdiff(f, x)
}

fn subdiff(f: &ConvexFunction, x: &[f64]) -> Result<ConvexSet> {
    Ok(match f {
        ConvexFunction::Quadratic { a, b, .. } => ConvexSet::Singleton {
            v: linalg::add(&linalg::mat_vec(a, x), b),
        },
        ConvexFunction::Abs => {
            if x[0] == 0.0 {
                ConvexSet::Box {
                    lo: vec![-1.0],
                    hi: vec![1.0],
                }
            } else {
                ConvexSet::Singleton {
                    v: vec![x[0].signum()],
                }
            }
        }
        ConvexFunction::PowerEven { p } => ConvexSet::Singleton {
            v: vec![*p as f64 * x[0].powi(*p as i32 - 1)],
        },
        ConvexFunction::MaxAffine { slopes, intercepts } => {
            let vals: Vec<f64> = slopes.iter().zip(intercepts).map(|(s, b)| dot(s, x) + b).collect();
            let top = vals.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            let mut active: Vec<Vector> = Vec::new();
            for (s, v) in slopes.iter().zip(&vals) {
                if *v >= top - tol::ACTIVE_MARGIN && !active.contains(s) {
                    active.push(s.clone());
                }
            }
            if active.len() == 1 {
                ConvexSet::Singleton {
                    v: active.pop().unwrap(),
                }
            } else {
                ConvexSet::Polytope { vertices: active }
            }
        }
        ConvexFunction::IndicatorBox { lo, hi } => {
            let mut nlo = Vec::with_capacity(x.len());
            let mut nhi = Vec::with_capacity(x.len());
            for ((xi, l), h) in x.iter().zip(lo).zip(hi) {
                let at_lo = xi == l;
                let at_hi = xi == h;
                nlo.push(if at_lo { f64::NEG_INFINITY } else { 0.0 });
                nhi.push(if at_hi { f64::INFINITY } else { 0.0 });
            }
            ConvexSet::Box { lo: nlo, hi: nhi }.normalized()
        }
        ConvexFunction::Scaled { inner, alpha } => subdiff(inner, x)?.scale(*alpha),
        ConvexFunction::Tilted { inner, tilt } => subdiff(inner, x)?.translate(&linalg::scale(tilt, -1.0)),
        ConvexFunction::Sum { left, right } => subdiff(left, x)?.minkowski_sum(&subdiff(right, x)?)?,
        ConvexFunction::Separable { parts } => {
            let sets = parts
                .iter()
                .zip(x)
                .map(|(p, xi)| subdiff(p, &[*xi]))
                .collect::<Result<Vec<_>>>()?;
            product(&sets)
        }
    })
}

/// Cartesian product of one-dimensional sets.
fn product(sets: &[ConvexSet]) -> ConvexSet {
    let mut lo = Vec::with_capacity(sets.len());
    let mut hi = Vec::with_capacity(sets.len());
    for s in sets {
        match s.as_interval() {
            Some((a, b)) => {
                lo.push(a);
                hi.push(b);
            }
            None => return ConvexSet::Empty,
        }
    }
    ConvexSet::Box { lo, hi }.normalized()
}

/// `(∂f)⁻¹(y)`, the set of `x` with `y ∈ ∂f(x)`.
pub fn solution_set(f: &ConvexFunction, y: &[f64]) -> Result<ConvexSet> {
    f.check_dim(y)?;
    if let Some(q) = f.as_quadratic() {
        return Ok(quadratic_inverse(&q, y));
    }
    let margin = tol::MEMBERSHIP;
    match f {
        ConvexFunction::Abs => {
            let v = y[0];
            Ok(if (v - 1.0).abs() <= margin {
                ConvexSet::Box {
                    lo: vec![0.0],
                    hi: vec![f64::INFINITY],
                }
            } else if (v + 1.0).abs() <= margin {
                ConvexSet::Box {
                    lo: vec![f64::NEG_INFINITY],
                    hi: vec![0.0],
                }
            } else if v.abs() < 1.0 {
                ConvexSet::Singleton { v: vec![0.0] }
            } else {
                ConvexSet::Empty
            })
        }
        ConvexFunction::PowerEven { p } => {
            let root = (y[0].abs() / *p as f64).powf(1.0 / (*p as f64 - 1.0));
            Ok(ConvexSet::Singleton {
                v: vec![y[0].signum() * root],
            })
        }
        ConvexFunction::IndicatorBox { lo, hi } => {
            let mut nlo = Vec::with_capacity(y.len());
            let mut nhi = Vec::with_capacity(y.len());
            for ((yi, l), h) in y.iter().zip(lo).zip(hi) {
                let (a, b) = if *yi > margin {
                    (*h, *h)
                } else if *yi < -margin {
                    (*l, *l)
                } else {
                    (*l, *h)
                };
                if !a.is_finite() && a == b {
                    return Ok(ConvexSet::Empty);
                }
                nlo.push(a);
                nhi.push(b);
            }
            Ok(ConvexSet::Box { lo: nlo, hi: nhi }.normalized())
        }
        ConvexFunction::Separable { parts } => {
            let sets = parts
                .iter()
                .zip(y)
                .map(|(p, yi)| solution_set(p, &[*yi]))
                .collect::<Result<Vec<_>>>()?;
            Ok(product(&sets))
        }
        ConvexFunction::Tilted { inner, tilt } => solution_set(inner, &linalg::add(y, tilt)),
        ConvexFunction::Scaled { inner, alpha } => solution_set(inner, &linalg::scale(y, 1.0 / alpha)),
        _ => {
            let pw = Piecewise::of(f).ok_or_else(|| {
                Error::Unsupported(format!(
                    "inverse subdifferential of this {}-D combination",
                    f.dim()
                ))
            })?;
            Ok(match pw.inverse(y[0]) {
                None => ConvexSet::Empty,
                Some((a, b)) => ConvexSet::Box {
                    lo: vec![a],
                    hi: vec![b],
                }
                .normalized(),
            })
        }
    }
}

fn quadratic_inverse(q: &QuadraticForm, y: &[f64]) -> ConvexSet {
    let eig = SymmetricEigen::new(&q.a);
    let rhs = linalg::sub(y, &q.b);
    let x0 = eig.pseudo_solve(&rhs);
    let residual = linalg::dist(&linalg::mat_vec(&q.a, &x0), &rhs);
    if residual > 1e-9 * (1.0 + linalg::norm(&rhs)) {
        return ConvexSet::Empty;
    }
    let basis = eig.null_space();
    if basis.is_empty() {
        ConvexSet::Singleton { v: x0 }
    } else {
        ConvexSet::Affine { point: x0, basis }
    }
}

/// `argmin_z f(z) + (λ/2)‖z − x‖²`.
pub fn prox(f: &ConvexFunction, lambda: f64, x: &[f64]) -> Result<Vector> {
    if !(lambda > 0.0 && lambda.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "prox parameter must be positive, got {lambda}"
        )));
    }
    f.check_dim(x)?;
    prox_unchecked(f, lambda, x)
}

fn prox_unchecked(f: &ConvexFunction, lambda: f64, x: &[f64]) -> Result<Vector> {
    if let Some(q) = f.as_quadratic() {
        // (A + λI) z = λx − b
        let eig = SymmetricEigen::new(&q.a);
        let rhs = linalg::sub(&linalg::scale(x, lambda), &q.b);
        return Ok(eig.shifted_solve(lambda, &rhs));
    }
    match f {
        ConvexFunction::Abs => {
            let t = 1.0 / lambda;
            Ok(vec![x[0].signum() * (x[0].abs() - t).max(0.0)])
        }
        ConvexFunction::IndicatorBox { lo, hi } => Ok(x
            .iter()
            .zip(lo.iter().zip(hi))
            .map(|(v, (l, h))| v.clamp(*l, *h))
            .collect()),
        ConvexFunction::Separable { parts } => parts
            .iter()
            .zip(x)
            .map(|(p, xi)| prox_unchecked(p, lambda, &[*xi]).map(|z| z[0]))
            .collect(),
        ConvexFunction::Scaled { inner, alpha } => prox_unchecked(inner, lambda / alpha, x),
        ConvexFunction::Tilted { inner, tilt } => {
            prox_unchecked(inner, lambda, &linalg::add(x, &linalg::scale(tilt, 1.0 / lambda)))
        }
        ConvexFunction::MaxAffine { slopes, intercepts } if x.len() > 1 => {
            // dual: min ½ μᵀ(AAᵀ/λ)μ − (Ax + β)ᵀμ over the simplex, z = x − Aᵀμ/λ
            let q: linalg::Matrix = slopes
                .iter()
                .map(|a| slopes.iter().map(|b| dot(a, b) / lambda).collect())
                .collect();
            let c: Vector = slopes.iter().zip(intercepts).map(|(a, b)| dot(a, x) + b).collect();
            let mu = linalg::simplex_qp(&q, &c);
            let mut z = x.to_vec();
            for (w, a) in mu.iter().zip(slopes) {
                for (zi, ai) in z.iter_mut().zip(a) {
                    *zi -= w * ai / lambda;
                }
            }
            Ok(z)
        }
        _ if x.len() == 1 => {
            let x0 = x[0];
            let g = min_norm_subgradient_1d(f, x0);
            let z = solve_inclusion_1d(f, |u| lambda * (u - x0), x0, g.abs() / lambda)?;
            Ok(vec![z])
        }
        _ => Err(Error::Unsupported(format!(
            "prox of this {}-D combination",
            x.len()
        ))),
    }
}

fn min_norm_subgradient_1d(f: &ConvexFunction, x: f64) -> f64 {
    match subdifferential(f, &[x]).ok().and_then(|s| s.as_interval()) {
        Some((l, h)) => 0.0f64.clamp(l, h),
        None => 1.0,
    }
}

/// Domain `[lo, hi]` of a one-dimensional catalog function.
pub(crate) fn domain_1d(f: &ConvexFunction) -> (f64, f64) {
    match f {
        ConvexFunction::IndicatorBox { lo, hi } => (lo[0], hi[0]),
        ConvexFunction::Scaled { inner, .. } | ConvexFunction::Tilted { inner, .. } => domain_1d(inner),
        ConvexFunction::Separable { parts } => domain_1d(&parts[0]),
        ConvexFunction::Sum { left, right } => {
            let (a, b) = domain_1d(left);
            let (c, d) = domain_1d(right);
            (a.max(c), b.min(d))
        }
        _ => (f64::NEG_INFINITY, f64::INFINITY),
    }
}

/// Points where a one-dimensional catalog function may be multivalued.
pub(crate) fn kinks_1d(f: &ConvexFunction) -> Vec<f64> {
    let mut out = match f {
        ConvexFunction::Abs => vec![0.0],
        ConvexFunction::MaxAffine { slopes, intercepts } => {
            let lines: Vec<(f64, f64)> = slopes.iter().map(|s| s[0]).zip(intercepts.iter().copied()).collect();
            let env = max_affine_envelope(&lines);
            env.iter().skip(1).map(|p| p.0).collect()
        }
        ConvexFunction::IndicatorBox { lo, hi } => {
            [lo[0], hi[0]].into_iter().filter(|v| v.is_finite()).collect()
        }
        ConvexFunction::Scaled { inner, .. } | ConvexFunction::Tilted { inner, .. } => kinks_1d(inner),
        ConvexFunction::Separable { parts } => kinks_1d(&parts[0]),
        ConvexFunction::Sum { left, right } => {
            let mut k = kinks_1d(left);
            k.extend(kinks_1d(right));
            k
        }
        ConvexFunction::Quadratic { .. } | ConvexFunction::PowerEven { .. } => vec![],
    };
    out.sort_by(f64::total_cmp);
    out.dedup();
    out
}

/// `∂f(u)` as an interval, extended by `(−∞,−∞)` left of the domain and
/// `(+∞,+∞)` right of it so that the map stays monotone.
fn extended_subdifferential_1d(f: &ConvexFunction, dom: (f64, f64), u: f64) -> Result<(f64, f64)> {
    if u < dom.0 {
        return Ok((f64::NEG_INFINITY, f64::NEG_INFINITY));
    }
    if u > dom.1 {
        return Ok((f64::INFINITY, f64::INFINITY));
    }
    let s = subdifferential(f, &[u])?;
    Ok(s.as_interval().unwrap_or((f64::NEG_INFINITY, f64::INFINITY)))
}

/// Finds `u` with `0 ∈ g(u) + ∂f(u)` for nondecreasing continuous `g`, by
/// testing the kinks of `f` exactly and then bisecting the monotone residual
/// from the bracket `[start − halfwidth, start + halfwidth]` (expanded by
/// doubling when it does not straddle the root).
pub fn solve_inclusion_1d(
    f: &ConvexFunction,
    g: impl Fn(f64) -> f64,
    start: f64,
    halfwidth: f64,
) -> Result<f64> {
    let dom = domain_1d(f);
    let sub = |u: f64| extended_subdifferential_1d(f, dom, u);
    for k in kinks_1d(f) {
        let (l, h) = sub(k)?;
        let r = -g(k);
        let slack = 1e-12 * (1.0 + r.abs());
        if l - slack <= r && r <= h + slack {
            return Ok(k);
        }
    }
    let mut w = halfwidth.max(1e-12) * (1.0 + 1e-9);
    let mut lo = start - w;
    let mut hi = start + w;
    let mut tries = 0;
    loop {
        let (_, h_lo) = sub(lo)?;
        let (l_hi, _) = sub(hi)?;
        let lo_ok = g(lo) + h_lo <= 0.0;
        let hi_ok = g(hi) + l_hi >= 0.0;
        if lo_ok && hi_ok {
            break;
        }
        tries += 1;
        if tries > 200 {
            return Err(Error::NoSignChange {
                lo,
                hi,
                at_lo: (g(lo) + sub(lo)?.0, g(lo) + h_lo),
                at_hi: (g(hi) + l_hi, g(hi) + sub(hi)?.1),
            });
        }
        w *= 2.0;
        if !lo_ok {
            lo -= w;
        }
        if !hi_ok {
            hi += w;
        }
    }
    while hi - lo > tol::BISECTION {
        let m = 0.5 * (lo + hi);
        if m <= lo || m >= hi {
            break;
        }
        let (l, h) = sub(m)?;
        let gm = g(m);
        if gm + l > 0.0 {
            hi = m;
        } else if gm + h < 0.0 {
            lo = m;
        } else {
            return Ok(m);
        }
    }
    Ok(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subdifferential_examples() {
        assert_eq!(
            subdifferential(&ConvexFunction::Abs, &[0.0]).unwrap(),
            ConvexSet::interval(-1.0, 1.0).unwrap()
        );
        assert_eq!(
            subdifferential(&ConvexFunction::positive_part(), &[0.0]).unwrap(),
            ConvexSet::polytope(vec![vec![0.0], vec![1.0]]).unwrap()
        );
        let q = ConvexFunction::diagonal_quadratic(&[2.0, 4.0]).unwrap();
        assert_eq!(
            subdifferential(&q, &[1.0, 1.0]).unwrap(),
            ConvexSet::singleton(vec![2.0, 4.0])
        );
    }

    #[test]
    fn normal_cone_of_box() {
        let f = ConvexFunction::indicator_box(vec![0.0, 0.0], vec![1.0, 1.0]).unwrap();
        let s = subdifferential(&f, &[1.0, 0.5]).unwrap();
        assert_eq!(s, ConvexSet::boxed(vec![0.0, 0.0], vec![f64::INFINITY, 0.0]).unwrap());
        assert!(subdifferential(&f, &[2.0, 0.5]).unwrap().is_empty());
        assert_eq!(subdifferential(&f, &[0.5, 0.5]).unwrap(), ConvexSet::singleton(vec![0.0, 0.0]));
    }

    #[test]
    fn solution_set_examples() {
        assert_eq!(
            solution_set(&ConvexFunction::quadratic_1d(2.0), &[0.0]).unwrap(),
            ConvexSet::singleton(vec![0.0])
        );
        assert_eq!(
            solution_set(&ConvexFunction::positive_part(), &[0.0]).unwrap(),
            ConvexSet::interval(f64::NEG_INFINITY, 0.0).unwrap()
        );
        let q = ConvexFunction::diagonal_quadratic(&[2.0, 0.0]).unwrap();
        let s = solution_set(&q, &[0.0, 0.0]).unwrap();
        match s {
            ConvexSet::Affine { point, basis } => {
                assert_eq!(point, vec![0.0, 0.0]);
                assert_eq!(basis.len(), 1);
                assert!((basis[0][1].abs() - 1.0).abs() < 1e-15);
            }
            other => panic!("expected affine set, got {other:?}"),
        }
        assert!(solution_set(&q, &[0.0, 1.0]).unwrap().is_empty());
    }

    #[test]
    fn abs_inverse_rules() {
        let f = ConvexFunction::Abs;
        assert_eq!(solution_set(&f, &[0.3]).unwrap(), ConvexSet::singleton(vec![0.0]));
        assert_eq!(
            solution_set(&f, &[1.0]).unwrap(),
            ConvexSet::interval(0.0, f64::INFINITY).unwrap()
        );
        assert_eq!(
            solution_set(&f, &[-1.0]).unwrap(),
            ConvexSet::interval(f64::NEG_INFINITY, 0.0).unwrap()
        );
        assert!(solution_set(&f, &[1.5]).unwrap().is_empty());
    }

    #[test]
    fn power_even_inverse_uses_odd_root() {
        let f = ConvexFunction::power_even(4).unwrap();
        let s = solution_set(&f, &[-32.0]).unwrap();
        assert_eq!(s, ConvexSet::singleton(vec![-2.0]));
    }

    #[test]
    fn unsupported_inverse_is_an_error() {
        let f = ConvexFunction::max_affine(vec![vec![1.0, 0.0], vec![0.0, 1.0]], vec![0.0, 0.0]).unwrap();
        assert!(matches!(solution_set(&f, &[0.5, 0.5]), Err(Error::Unsupported(_))));
        let g = ConvexFunction::sum(ConvexFunction::power_even(4).unwrap(), ConvexFunction::Abs).unwrap();
        assert!(matches!(solution_set(&g, &[0.0]), Err(Error::Unsupported(_))));
    }

    #[test]
    fn prox_closed_forms() {
        let sq = ConvexFunction::quadratic_1d(2.0);
        assert!((prox(&sq, 2.0, &[1.0]).unwrap()[0] - 0.5).abs() < 1e-15);
        assert_eq!(prox(&ConvexFunction::Abs, 1.0, &[10.0]).unwrap(), vec![9.0]);
        let ind = ConvexFunction::indicator_box(vec![0.0], vec![1.0]).unwrap();
        assert_eq!(prox(&ind, 5.0, &[-3.0]).unwrap(), vec![0.0]);
        assert!(matches!(prox(&sq, 0.0, &[1.0]), Err(Error::InvalidArgument(_))));
        assert!(matches!(prox(&sq, -1.0, &[1.0]), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn prox_by_bisection_lands_on_kinks() {
        // prox of max(0,x) with λ=1 at x=0.5: 0 ∈ ∂f(z) + z − 0.5 solved by z = 0
        let z = prox(&ConvexFunction::positive_part(), 1.0, &[0.5]).unwrap();
        assert_eq!(z, vec![0.0]);
        let z = prox(&ConvexFunction::positive_part(), 1.0, &[3.0]).unwrap();
        assert!((z[0] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn prox_of_max_affine_in_the_plane() {
        // f = max(x1, x2); prox with λ = 1 at (1, 1) moves both coordinates by 1/2
        let f = ConvexFunction::max_affine(vec![vec![1.0, 0.0], vec![0.0, 1.0]], vec![0.0, 0.0]).unwrap();
        let z = prox(&f, 1.0, &[1.0, 1.0]).unwrap();
        assert!((z[0] - 0.5).abs() < 1e-12 && (z[1] - 0.5).abs() < 1e-12);
    }
}
