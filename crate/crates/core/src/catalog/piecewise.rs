//! One-dimensional piecewise-quadratic functions: exact subdifferentials and
//! inverse subdifferentials by piece enumeration.

use super::function::ConvexFunction;
use crate::tol;

/// On `(lo, hi)` the derivative is `curv·x + lin`.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct Piece {
    pub lo: f64,
    pub hi: f64,
    pub curv: f64,
    pub lin: f64,
}

impl Piece {
    fn slope(&self, x: f64) -> f64 {
        if self.curv == 0.0 {
            self.lin
        } else {
            self.curv * x + self.lin
        }
    }
}

/// Contiguous, sorted pieces; the domain is `[first.lo, last.hi]`.
/// A one-point domain is a single piece with `lo == hi`.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct Piecewise {
    pub pieces: Vec<Piece>,
}

const INF: f64 = f64::INFINITY;

impl Piecewise {
    fn whole_line(curv: f64, lin: f64) -> Self {
        Piecewise {
            pieces: vec![Piece {
                lo: -INF,
                hi: INF,
                curv,
                lin,
            }],
        }
    }

    /// Representation of a one-dimensional catalog function, when it is
    /// piecewise quadratic.
    pub fn of(f: &ConvexFunction) -> Option<Self> {
        if f.dim() != 1 {
            return None;
        }
        match f {
            ConvexFunction::Quadratic { a, b, .. } => Some(Self::whole_line(a[0][0], b[0])),
            ConvexFunction::PowerEven { p: 2 } => Some(Self::whole_line(2.0, 0.0)),
            ConvexFunction::PowerEven { .. } => None,
            ConvexFunction::Abs => Some(Piecewise {
                pieces: vec![
                    Piece {
                        lo: -INF,
                        hi: 0.0,
                        curv: 0.0,
                        lin: -1.0,
                    },
                    Piece {
                        lo: 0.0,
                        hi: INF,
                        curv: 0.0,
                        lin: 1.0,
                    },
                ],
            }),
            ConvexFunction::MaxAffine { slopes, intercepts } => {
                let lines: Vec<(f64, f64)> = slopes.iter().map(|s| s[0]).zip(intercepts.iter().copied()).collect();
                Some(Piecewise {
                    pieces: max_affine_envelope(&lines)
                        .into_iter()
                        .map(|(lo, hi, slope, _)| Piece {
                            lo,
                            hi,
                            curv: 0.0,
                            lin: slope,
                        })
                        .collect(),
                })
            }
            ConvexFunction::IndicatorBox { lo, hi } => Some(Piecewise {
                pieces: vec![Piece {
                    lo: lo[0],
                    hi: hi[0],
                    curv: 0.0,
                    lin: 0.0,
                }],
            }),
            ConvexFunction::Scaled { inner, alpha } => {
                let mut p = Self::of(inner)?;
                for piece in &mut p.pieces {
                    piece.curv *= alpha;
                    piece.lin *= alpha;
                }
                Some(p)
            }
            ConvexFunction::Tilted { inner, tilt } => {
                let mut p = Self::of(inner)?;
                for piece in &mut p.pieces {
                    piece.lin -= tilt[0];
                }
                Some(p)
            }
            ConvexFunction::Separable { parts } => Self::of(&parts[0]),
            ConvexFunction::Sum { left, right } => Some(Self::of(left)?.add(&Self::of(right)?)),
        }
    }

    pub fn domain(&self) -> (f64, f64) {
        (self.pieces[0].lo, self.pieces[self.pieces.len() - 1].hi)
    }

    fn piece_at(&self, x: f64) -> &Piece {
        self.pieces
            .iter()
            .find(|p| p.lo <= x && x <= p.hi)
            .unwrap_or(&self.pieces[0])
    }

    fn add(&self, other: &Piecewise) -> Piecewise {
        let (a, b) = self.domain();
        let (c, d) = other.domain();
        let (lo, hi) = (a.max(c), b.min(d));
        let mut cuts: Vec<f64> = vec![lo, hi];
        for p in self.pieces.iter().chain(&other.pieces) {
            for x in [p.lo, p.hi] {
                if x > lo && x < hi {
                    cuts.push(x);
                }
            }
        }
        cuts.sort_by(f64::total_cmp);
        cuts.dedup();
        if lo == hi {
            return Piecewise {
                pieces: vec![Piece {
                    lo,
                    hi,
                    curv: 0.0,
                    lin: 0.0,
                }],
            };
        }
        let pieces = cuts
            .windows(2)
            .map(|w| {
                let mid = match (w[0].is_finite(), w[1].is_finite()) {
                    (true, true) => 0.5 * (w[0] + w[1]),
                    (true, false) => w[0] + 1.0,
                    (false, true) => w[1] - 1.0,
                    (false, false) => 0.0,
                };
                let p = self.piece_at(mid);
                let q = other.piece_at(mid);
                Piece {
                    lo: w[0],
                    hi: w[1],
                    curv: p.curv + q.curv,
                    lin: p.lin + q.lin,
                }
            })
            .collect();
        Piecewise { pieces }
    }

    /// `∂f(x)` as an interval, `None` outside the domain.
    pub fn subdifferential(&self, x: f64) -> Option<(f64, f64)> {
        let (lo, hi) = self.domain();
        if x < lo || x > hi {
            return None;
        }
        if lo == hi {
            return Some((-INF, INF));
        }
        let left = if x == lo {
            -INF
        } else {
            self.pieces
                .iter()
                .find(|p| p.lo < x && x <= p.hi)
                .map(|p| p.slope(x))
                .unwrap_or(-INF)
        };
        let right = if x == hi {
            INF
        } else {
            self.pieces
                .iter()
                .find(|p| p.lo <= x && x < p.hi)
                .map(|p| p.slope(x))
                .unwrap_or(INF)
        };
        Some((left, right))
    }

    /// Interior piece boundaries and finite domain endpoints.
    pub fn kinks(&self) -> Vec<f64> {
        let mut out: Vec<f64> = self
            .pieces
            .iter()
            .flat_map(|p| [p.lo, p.hi])
            .filter(|x| x.is_finite())
            .collect();
        out.sort_by(f64::total_cmp);
        out.dedup();
        out
    }

    /// `(∂f)⁻¹(y)` as a closed interval, `None` when empty.
    pub fn inverse(&self, y: f64) -> Option<(f64, f64)> {
        let margin = tol::ACTIVE_MARGIN * (1.0 + y.abs());
        let mut lo = INF;
        let mut hi = -INF;
        let mut take = |a: f64, b: f64| {
            lo = lo.min(a);
            hi = hi.max(b);
        };
        for p in &self.pieces {
            if p.lo == p.hi {
                continue;
            }
            if p.curv == 0.0 {
                if (p.lin - y).abs() <= margin {
                    take(p.lo, p.hi);
                }
            } else {
                let x = (y - p.lin) / p.curv;
                if p.lo <= x && x <= p.hi {
                    take(x, x);
                }
            }
        }
        for x in self.kinks() {
            if let Some((a, b)) = self.subdifferential(x) {
                if a - margin <= y && y <= b + margin {
                    take(x, x);
                }
            }
        }
        (lo <= hi).then_some((lo, hi))
    }

    /// Germ of `gph ∂f` at `x`: `(∂f(x), slope of the right branch, slope of
    /// the left branch)`; a branch is `None` when the domain ends at `x`.
    pub fn germ(&self, x: f64) -> Option<Germ> {
        let (lo, hi) = self.domain();
        let (l, u) = self.subdifferential(x)?;
        let right = (x < hi).then(|| {
            self.pieces
                .iter()
                .find(|p| p.lo <= x && x < p.hi)
                .map_or(0.0, |p| p.curv)
        });
        let left = (x > lo).then(|| {
            self.pieces
                .iter()
                .find(|p| p.lo < x && x <= p.hi)
                .map_or(0.0, |p| p.curv)
        });
        Some(Germ { lower: l, upper: u, right, left })
    }
}

/// Local shape of a monotone graph around `x̄`: the vertical segment
/// `[lower, upper]` over `x̄` plus the slopes of the branches leaving it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Germ {
    pub lower: f64,
    pub upper: f64,
    /// Slope of the branch leaving `(x̄, upper)` to the right.
    pub right: Option<f64>,
    /// Slope of the branch arriving at `(x̄, lower)` from the left.
    pub left: Option<f64>,
}

/// Upper envelope of lines `a·x + β`: `(lo, hi, slope, intercept)` for each
/// piece with nonempty interior, sorted left to right.
pub(crate) fn max_affine_envelope(lines: &[(f64, f64)]) -> Vec<(f64, f64, f64, f64)> {
    let mut out = Vec::new();
    for (i, &(ai, bi)) in lines.iter().enumerate() {
        let mut lo = -INF;
        let mut hi = INF;
        let mut alive = true;
        for (j, &(aj, bj)) in lines.iter().enumerate() {
            if i == j {
                continue;
            }
            if ai > aj {
                lo = lo.max((bj - bi) / (ai - aj));
            } else if ai < aj {
                hi = hi.min((bj - bi) / (ai - aj));
            } else if bj > bi || (bj == bi && j < i) {
                alive = false;
            }
        }
        if alive && lo < hi {
            out.push((lo, hi, ai, bi));
        }
    }
    out.sort_by(|a, b| a.2.total_cmp(&b.2));
    for k in 1..out.len() {
        out[k].0 = out[k - 1].1;
    }
    out
}
