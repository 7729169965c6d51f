//! Closed convex sets with exact distance, projection and excess.

use crate::error::{Error, Result};
use crate::linalg::{self, dot, norm, sub, Vector};
use crate::serde_ext::ext_vec;
use crate::tol;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::Arc;

type DistanceFn = dyn Fn(&[f64]) -> f64 + Send + Sync;

/// A set known only through its exact distance function.
#[derive(Clone)]
pub struct DistanceOracle {
    pub tag: String,
    pub dim: usize,
    distance: Arc<DistanceFn>,
}

impl DistanceOracle {
    pub fn new(
        tag: impl Into<String>,
        dim: usize,
        distance: impl Fn(&[f64]) -> f64 + Send + Sync + 'static,
    ) -> Self {
        DistanceOracle {
            tag: tag.into(),
            dim,
            distance: Arc::new(distance),
        }
    }
}

impl fmt::Debug for DistanceOracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DistanceOracle")
            .field("tag", &self.tag)
            .field("dim", &self.dim)
            .finish()
    }
}

/// Closed convex subset of ℝⁿ.
///
/// Unbounded intervals, half-lines and normal cones are `Box`es with
/// infinite entries.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ConvexSet {
    Empty,
    Singleton {
        v: Vector,
    },
    Box {
        #[serde(with = "ext_vec")]
        lo: Vector,
        #[serde(with = "ext_vec")]
        hi: Vector,
    },
    Polytope {
        vertices: Vec<Vector>,
    },
    Affine {
        point: Vector,
        basis: Vec<Vector>,
    },
    #[serde(skip)]
    DistanceOracle(DistanceOracle),
}

impl PartialEq for ConvexSet {
    fn eq(&self, other: &Self) -> bool {
        use ConvexSet as S;
        match (self, other) {
            (S::Empty, S::Empty) => true,
            (S::Singleton { v: a }, S::Singleton { v: b }) => a == b,
            (S::Box { lo: l1, hi: h1 }, S::Box { lo: l2, hi: h2 }) => l1 == l2 && h1 == h2,
            (S::Polytope { vertices: a }, S::Polytope { vertices: b }) => a == b,
            (
                S::Affine {
                    point: p1,
                    basis: b1,
                },
                S::Affine {
                    point: p2,
                    basis: b2,
                },
            ) => p1 == p2 && b1 == b2,
            (S::DistanceOracle(a), S::DistanceOracle(b)) => Arc::ptr_eq(&a.distance, &b.distance),
            _ => false,
        }
    }
}

impl ConvexSet {
    pub fn singleton(v: Vector) -> Self {
        ConvexSet::Singleton { v }
    }

    pub fn interval(lo: f64, hi: f64) -> Result<Self> {
        Self::boxed(vec![lo], vec![hi])
    }

    pub fn boxed(lo: Vector, hi: Vector) -> Result<Self> {
        let s = ConvexSet::Box { lo, hi };
        s.validate()?;
        Ok(s)
    }

    pub fn polytope(vertices: Vec<Vector>) -> Result<Self> {
        let s = ConvexSet::Polytope { vertices };
        s.validate()?;
        Ok(s)
    }

    pub fn affine(point: Vector, basis: Vec<Vector>) -> Result<Self> {
        let s = ConvexSet::Affine { point, basis };
        s.validate()?;
        Ok(s)
    }

    /// Closed Euclidean ball, represented by its distance function.
    pub fn ball(center: Vector, radius: f64) -> Self {
        let dim = center.len();
        ConvexSet::DistanceOracle(DistanceOracle::new(
            format!("ball(r={radius})"),
            dim,
            move |x| (linalg::dist(x, &center) - radius).max(0.0),
        ))
    }

    pub fn dim(&self) -> Option<usize> {
        match self {
            ConvexSet::Empty => None,
            ConvexSet::Singleton { v } => Some(v.len()),
            ConvexSet::Box { lo, .. } => Some(lo.len()),
            ConvexSet::Polytope { vertices } => vertices.first().map(Vec::len),
            ConvexSet::Affine { point, .. } => Some(point.len()),
            ConvexSet::DistanceOracle(o) => Some(o.dim),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidSet(m));
        match self {
            ConvexSet::Empty | ConvexSet::DistanceOracle(_) => Ok(()),
            ConvexSet::Singleton { v } => {
                if v.iter().all(|x| x.is_finite()) {
                    Ok(())
                } else {
                    bad("singleton must be finite".into())
                }
            }
            ConvexSet::Box { lo, hi } => {
                if lo.len() != hi.len() || lo.is_empty() {
                    return bad("box bounds must have equal nonzero length".into());
                }
                for (l, h) in lo.iter().zip(hi) {
                    if l.is_nan() || h.is_nan() || l > h || *l == f64::INFINITY || *h == f64::NEG_INFINITY {
                        return bad(format!("box requires lo <= hi, got [{l}, {h}]"));
                    }
                }
                Ok(())
            }
            ConvexSet::Polytope { vertices } => {
                if vertices.is_empty() {
                    return bad("polytope needs at least one vertex".into());
                }
                if vertices.len() > tol::MAX_VERTICES {
                    return bad(format!(
                        "polytope has {} vertices, at most {} supported",
                        vertices.len(),
                        tol::MAX_VERTICES
                    ));
                }
                let n = vertices[0].len();
                if vertices.iter().any(|v| v.len() != n || v.iter().any(|x| !x.is_finite())) {
                    return bad("polytope vertices must be finite and of equal dimension".into());
                }
                Ok(())
            }
            ConvexSet::Affine { point, basis } => {
                let n = point.len();
                if basis.iter().any(|b| b.len() != n) {
                    return bad("affine basis dimension mismatch".into());
                }
                for (i, a) in basis.iter().enumerate() {
                    for (j, b) in basis.iter().enumerate() {
                        let target = if i == j { 1.0 } else { 0.0 };
                        if (dot(a, b) - target).abs() > 1e-12 {
                            return bad("affine basis must be orthonormal".into());
                        }
                    }
                }
                Ok(())
            }
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, ConvexSet::Empty)
    }

    pub fn is_bounded(&self) -> bool {
        match self {
            ConvexSet::Empty | ConvexSet::Singleton { .. } | ConvexSet::Polytope { .. } => true,
            ConvexSet::Box { lo, hi } => lo.iter().chain(hi).all(|x| x.is_finite()),
            ConvexSet::Affine { basis, .. } => basis.is_empty(),
            ConvexSet::DistanceOracle(_) => false,
        }
    }

    /// The unique point of a one-point set.
    pub fn singleton_point(&self) -> Option<Vector> {
        match self {
            ConvexSet::Singleton { v } => Some(v.clone()),
            ConvexSet::Box { lo, hi } if lo == hi => Some(lo.clone()),
            ConvexSet::Polytope { vertices } if vertices.iter().all(|v| v == &vertices[0]) => {
                Some(vertices[0].clone())
            }
            ConvexSet::Affine { point, basis } if basis.is_empty() => Some(point.clone()),
            _ => None,
        }
    }

    /// Collapses degenerate representations (one-point boxes, polytopes, affine sets).
    pub fn normalized(self) -> Self {
        if let Some(v) = self.singleton_point() {
            return ConvexSet::Singleton { v };
        }
        match self {
            ConvexSet::Polytope { vertices } => {
                let mut uniq: Vec<Vector> = Vec::with_capacity(vertices.len());
                for v in vertices {
                    if !uniq.contains(&v) {
                        uniq.push(v);
                    }
                }
                ConvexSet::Polytope { vertices: uniq }
            }
            other => other,
        }
    }

    /// Endpoints of a one-dimensional set.
    pub fn as_interval(&self) -> Option<(f64, f64)> {
        if self.dim() != Some(1) {
            return None;
        }
        match self {
            ConvexSet::Singleton { v } => Some((v[0], v[0])),
            ConvexSet::Box { lo, hi } => Some((lo[0], hi[0])),
            ConvexSet::Polytope { vertices } => {
                let lo = vertices.iter().map(|v| v[0]).fold(f64::INFINITY, f64::min);
                let hi = vertices.iter().map(|v| v[0]).fold(f64::NEG_INFINITY, f64::max);
                Some((lo, hi))
            }
            ConvexSet::Affine { point, basis } => {
                if basis.is_empty() {
                    Some((point[0], point[0]))
                } else {
                    Some((f64::NEG_INFINITY, f64::INFINITY))
                }
            }
            _ => None,
        }
    }

    /// Exact Euclidean distance; `+∞` for the empty set.
    pub fn distance(&self, x: &[f64]) -> f64 {
        match self {
            ConvexSet::Empty => f64::INFINITY,
            ConvexSet::Singleton { v } => linalg::dist(x, v),
            ConvexSet::Box { lo, hi } => x
                .iter()
                .zip(lo.iter().zip(hi))
                .map(|(xi, (l, h))| {
                    let d = xi - xi.clamp(*l, *h);
                    d * d
                })
                .sum::<f64>()
                .sqrt(),
            ConvexSet::Polytope { .. } | ConvexSet::Affine { .. } => {
                let p = self.project(x).expect("projection exists");
                linalg::dist(x, &p)
            }
            ConvexSet::DistanceOracle(o) => (o.distance)(x),
        }
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        self.distance(x) <= tol::MEMBERSHIP
    }

    /// Nearest point, when the representation admits one.
    pub fn project(&self, x: &[f64]) -> Option<Vector> {
        match self {
            ConvexSet::Empty | ConvexSet::DistanceOracle(_) => None,
            ConvexSet::Singleton { v } => Some(v.clone()),
            ConvexSet::Box { lo, hi } => Some(
                x.iter()
                    .zip(lo.iter().zip(hi))
                    .map(|(xi, (l, h))| xi.clamp(*l, *h))
                    .collect(),
            ),
            ConvexSet::Polytope { vertices } => {
                let q: linalg::Matrix = vertices
                    .iter()
                    .map(|a| vertices.iter().map(|b| dot(a, b)).collect())
                    .collect();
                let c: Vector = vertices.iter().map(|v| dot(v, x)).collect();
                let mu = linalg::simplex_qp(&q, &c);
                let mut p = vec![0.0; x.len()];
                for (w, v) in mu.iter().zip(vertices) {
                    for (pi, vi) in p.iter_mut().zip(v) {
                        *pi += w * vi;
                    }
                }
                Some(p)
            }
            ConvexSet::Affine { point, basis } => {
                let r = sub(x, point);
                let mut p = point.clone();
                for b in basis {
                    let c = dot(b, &r);
                    for (pi, bi) in p.iter_mut().zip(b) {
                        *pi += c * bi;
                    }
                }
                Some(p)
            }
        }
    }

    /// Extreme points (only the finitely many that exist; a set containing a
    /// line has none).
    pub fn extreme_points(&self) -> Vec<Vector> {
        match self {
            ConvexSet::Empty | ConvexSet::DistanceOracle(_) => vec![],
            ConvexSet::Singleton { v } => vec![v.clone()],
            ConvexSet::Polytope { vertices } => vertices.clone(),
            ConvexSet::Affine { point, basis } => {
                if basis.is_empty() {
                    vec![point.clone()]
                } else {
                    vec![]
                }
            }
            ConvexSet::Box { lo, hi } => {
                let mut out: Vec<Vector> = vec![vec![]];
                for (l, h) in lo.iter().zip(hi) {
                    let mut choices: Vec<f64> = [*l, *h].into_iter().filter(|v| v.is_finite()).collect();
                    choices.dedup();
                    if choices.is_empty() {
                        return vec![];
                    }
                    out = out
                        .into_iter()
                        .flat_map(|p| {
                            choices.iter().map(move |c| {
                                let mut q = p.clone();
                                q.push(*c);
                                q
                            })
                        })
                        .collect();
                }
                out
            }
        }
    }

    pub fn translate(&self, t: &[f64]) -> Self {
        match self {
            ConvexSet::Empty => ConvexSet::Empty,
            ConvexSet::Singleton { v } => ConvexSet::Singleton {
                v: linalg::add(v, t),
            },
            ConvexSet::Box { lo, hi } => ConvexSet::Box {
                lo: linalg::add(lo, t),
                hi: linalg::add(hi, t),
            },
            ConvexSet::Polytope { vertices } => ConvexSet::Polytope {
                vertices: vertices.iter().map(|v| linalg::add(v, t)).collect(),
            },
            ConvexSet::Affine { point, basis } => ConvexSet::Affine {
                point: linalg::add(point, t),
                basis: basis.clone(),
            },
            ConvexSet::DistanceOracle(o) => {
                let inner = o.distance.clone();
                let t = t.to_vec();
                ConvexSet::DistanceOracle(DistanceOracle::new(
                    format!("{}+t", o.tag),
                    o.dim,
                    move |x| inner(&sub(x, &t)),
                ))
            }
        }
    }

    /// Image under `y ↦ alpha·y`, `alpha > 0`.
    pub fn scale(&self, alpha: f64) -> Self {
        debug_assert!(alpha > 0.0);
        match self {
            ConvexSet::Empty => ConvexSet::Empty,
            ConvexSet::Singleton { v } => ConvexSet::Singleton {
                v: linalg::scale(v, alpha),
            },
            ConvexSet::Box { lo, hi } => ConvexSet::Box {
                lo: linalg::scale(lo, alpha),
                hi: linalg::scale(hi, alpha),
            },
            ConvexSet::Polytope { vertices } => ConvexSet::Polytope {
                vertices: vertices.iter().map(|v| linalg::scale(v, alpha)).collect(),
            },
            ConvexSet::Affine { point, basis } => ConvexSet::Affine {
                point: linalg::scale(point, alpha),
                basis: basis.clone(),
            },
            ConvexSet::DistanceOracle(o) => {
                let inner = o.distance.clone();
                ConvexSet::DistanceOracle(DistanceOracle::new(
                    format!("{}*{alpha}", o.tag),
                    o.dim,
                    move |x| alpha * inner(&linalg::scale(x, 1.0 / alpha)),
                ))
            }
        }
    }

    /// Exact Minkowski sum for the combinations that stay in the catalog.
    pub fn minkowski_sum(&self, other: &Self) -> Result<Self> {
        use ConvexSet as S;
        if self.is_empty() || other.is_empty() {
            return Ok(S::Empty);
        }
        if let Some(p) = self.singleton_point() {
            return Ok(other.translate(&p));
        }
        if let Some(p) = other.singleton_point() {
            return Ok(self.translate(&p));
        }
        if let (Some((a, b)), Some((c, d))) = (self.as_interval(), other.as_interval()) {
            return Ok(S::Box {
                lo: vec![a + c],
                hi: vec![b + d],
            });
        }
        match (self, other) {
            (S::Box { lo: l1, hi: h1 }, S::Box { lo: l2, hi: h2 }) => Ok(S::Box {
                lo: linalg::add(l1, l2),
                hi: linalg::add(h1, h2),
            }),
            _ => Err(Error::Unsupported(
                "Minkowski sum of these set representations is not exact in the catalog".into(),
            )),
        }
    }

    /// Intersection with the coordinate box `[lo, hi]`.
    pub fn intersect_box(&self, lo: &[f64], hi: &[f64]) -> Result<Self> {
        use ConvexSet as S;
        match self {
            S::Empty => Ok(S::Empty),
            S::Singleton { v } => {
                let inside = v.iter().zip(lo.iter().zip(hi)).all(|(x, (l, h))| *l <= *x && *x <= *h);
                Ok(if inside { self.clone() } else { S::Empty })
            }
            S::Box { lo: a, hi: b } => {
                let nlo: Vector = a.iter().zip(lo).map(|(x, y)| x.max(*y)).collect();
                let nhi: Vector = b.iter().zip(hi).map(|(x, y)| x.min(*y)).collect();
                if nlo.iter().zip(&nhi).any(|(l, h)| l > h) {
                    Ok(S::Empty)
                } else {
                    Ok(S::Box { lo: nlo, hi: nhi }.normalized())
                }
            }
            S::Polytope { vertices } => match vertices[0].len() {
                1 => {
                    let (a, b) = self.as_interval().expect("1-D polytope");
                    let (l, h) = (a.max(lo[0]), b.min(hi[0]));
                    Ok(if l > h {
                        S::Empty
                    } else {
                        S::Box { lo: vec![l], hi: vec![h] }.normalized()
                    })
                }
                2 => Ok(clip_polygon(vertices, lo, hi)),
                _ => Err(Error::Unsupported(
                    "polytope-box intersection is implemented for n <= 2".into(),
                )),
            },
            S::Affine { point, basis } if basis.is_empty() => {
                S::Singleton { v: point.clone() }.intersect_box(lo, hi)
            }
            S::Affine { point, .. } if point.len() == 1 => S::Box {
                lo: vec![f64::NEG_INFINITY],
                hi: vec![f64::INFINITY],
            }
            .intersect_box(lo, hi),
            _ => Err(Error::Unsupported(
                "box intersection for this set representation".into(),
            )),
        }
    }

    /// `inf { ⟨y, d⟩ : y ∈ self }`, `+∞` on the empty set.
    pub fn min_linear(&self, d: &[f64]) -> Result<f64> {
        Ok(match self {
            ConvexSet::Empty => f64::INFINITY,
            ConvexSet::Singleton { v } => dot(v, d),
            ConvexSet::Box { lo, hi } => d
                .iter()
                .zip(lo.iter().zip(hi))
                .map(|(di, (l, h))| {
                    if *di > 0.0 {
                        di * l
                    } else if *di < 0.0 {
                        di * h
                    } else {
                        0.0
                    }
                })
                .sum(),
            ConvexSet::Polytope { vertices } => vertices
                .iter()
                .map(|v| dot(v, d))
                .fold(f64::INFINITY, f64::min),
            ConvexSet::Affine { point, basis } => {
                if basis.iter().any(|b| dot(b, d).abs() > 1e-12 * norm(d).max(1.0)) {
                    f64::NEG_INFINITY
                } else {
                    dot(point, d)
                }
            }
            ConvexSet::DistanceOracle(_) => {
                return Err(Error::Unsupported(
                    "linear minimization over a distance oracle".into(),
                ))
            }
        })
    }
}

/// `d(x, S)`.
pub fn set_distance(s: &ConvexSet, x: &[f64]) -> f64 {
    s.distance(x)
}

/// Excess `e(C, D) = sup_{x∈C} d(x, D)` with `e(∅, D) = 0` for nonempty `D`
/// and `e(∅, ∅) = ∞`.
///
/// Exact for bounded `C` (sup over extreme points), for box pairs with
/// infinite entries, and for nested affine sets; `+∞` otherwise.
pub fn set_excess(c: &ConvexSet, d: &ConvexSet) -> f64 {
    match (c.is_empty(), d.is_empty()) {
        (true, true) => return f64::INFINITY,
        (true, false) => return 0.0,
        (false, true) => return f64::INFINITY,
        _ => {}
    }
    if c.is_bounded() {
        return c
            .extreme_points()
            .iter()
            .map(|p| d.distance(p))
            .fold(0.0, f64::max);
    }
    if let (Some((cl, ch)), Some((dl, dh))) = (box_bounds(c), box_bounds(d)) {
        let total: f64 = (0..cl.len())
            .map(|i| {
                let below = if cl[i] == f64::NEG_INFINITY {
                    if dl[i] == f64::NEG_INFINITY {
                        0.0
                    } else {
                        f64::INFINITY
                    }
                } else {
                    (dl[i] - cl[i]).max(0.0)
                };
                let above = if ch[i] == f64::INFINITY {
                    if dh[i] == f64::INFINITY {
                        0.0
                    } else {
                        f64::INFINITY
                    }
                } else {
                    (ch[i] - dh[i]).max(0.0)
                };
                let m = below.max(above);
                m * m
            })
            .sum();
        return total.sqrt();
    }
    if let (
        ConvexSet::Affine { point, basis },
        ConvexSet::Affine {
            basis: dbasis, ..
        },
    ) = (c, d)
    {
        let spanned = basis.iter().all(|b| {
            let residual: f64 = norm(b).powi(2) - dbasis.iter().map(|e| dot(b, e).powi(2)).sum::<f64>();
            residual.abs() <= 1e-12
        });
        if spanned {
            return d.distance(point);
        }
    }
    f64::INFINITY
}

fn box_bounds(s: &ConvexSet) -> Option<(Vector, Vector)> {
    match s {
        ConvexSet::Singleton { v } => Some((v.clone(), v.clone())),
        ConvexSet::Box { lo, hi } => Some((lo.clone(), hi.clone())),
        _ => s.as_interval().map(|(a, b)| (vec![a], vec![b])),
    }
}

/// Set equality up to `tol` (mutual excess on bounded sets, endpoint
/// comparison on boxes with infinite entries).
pub fn sets_equal(a: &ConvexSet, b: &ConvexSet, tol: f64) -> bool {
    match (a.is_empty(), b.is_empty()) {
        (true, true) => return true,
        (true, false) | (false, true) => return false,
        _ => {}
    }
    if let (Some((al, ah)), Some((bl, bh))) = (box_bounds(a), box_bounds(b)) {
        let close = |x: f64, y: f64| x == y || (x - y).abs() <= tol;
        return al.iter().zip(&bl).all(|(x, y)| close(*x, *y))
            && ah.iter().zip(&bh).all(|(x, y)| close(*x, *y));
    }
    set_excess(a, b) <= tol && set_excess(b, a) <= tol
}

fn cross(o: &[f64], a: &[f64], b: &[f64]) -> f64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Counter-clockwise convex hull (Andrew's monotone chain).
fn hull_2d(points: &[Vector]) -> Vec<Vector> {
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| a[0].total_cmp(&b[0]).then(a[1].total_cmp(&b[1])));
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<Vector> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= 0.0 {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Vector> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= 0.0 {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Sutherland–Hodgman clipping of a planar polytope against a box.
fn clip_polygon(vertices: &[Vector], lo: &[f64], hi: &[f64]) -> ConvexSet {
    let hull = hull_2d(vertices);
    if hull.len() == 1 {
        return ConvexSet::Singleton { v: hull[0].clone() }.intersect_box(lo, hi).unwrap_or(ConvexSet::Empty);
    }
    // half-planes a·p <= b
    let mut planes: Vec<([f64; 2], f64)> = Vec::new();
    for axis in 0..2 {
        let mut e = [0.0; 2];
        e[axis] = 1.0;
        if hi[axis].is_finite() {
            planes.push((e, hi[axis]));
        }
        if lo[axis].is_finite() {
            e[axis] = -1.0;
            planes.push((e, -lo[axis]));
        }
    }
    let mut poly = hull;
    for (a, b) in planes {
        if poly.is_empty() {
            break;
        }
        let inside = |p: &Vector| a[0] * p[0] + a[1] * p[1] <= b + 1e-15;
        let cut = |p: &Vector, q: &Vector| {
            let fp = a[0] * p[0] + a[1] * p[1] - b;
            let fq = a[0] * q[0] + a[1] * q[1] - b;
            let t = fp / (fp - fq);
            vec![p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])]
        };
        let m = poly.len();
        let mut out = Vec::new();
        for i in 0..m {
            let cur = &poly[i];
            let next = &poly[(i + 1) % m];
            match (inside(cur), inside(next)) {
                (true, true) => out.push(next.clone()),
                (true, false) => out.push(cut(cur, next)),
                (false, true) => {
                    out.push(cut(cur, next));
                    out.push(next.clone());
                }
                (false, false) => {}
            }
        }
        out.dedup();
        poly = out;
    }
    if poly.is_empty() {
        ConvexSet::Empty
    } else if poly.len() > tol::MAX_VERTICES {
        ConvexSet::Polytope {
            vertices: hull_2d(&poly),
        }
        .normalized()
    } else {
        ConvexSet::Polytope { vertices: poly }.normalized()
    }
}
