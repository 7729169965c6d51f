use super::derivative::{contingent_derivative_modulus, hessian_modulus};
use super::estimators::*;
use super::grid::SampleGrid;
use super::report::Classification;
use crate::catalog::{solution_set, subdifferential, BasePair, ConvexFunction};
use crate::error::Result;
use crate::linalg::{self, dot, Vector};
use crate::serde_ext::ext;
use crate::tol;
use serde::{Deserialize, Serialize};

/// Constant bounds relating a κ-type and a c-type estimate:
/// `ĉ ≥ 1/(4κ̂)` (forward) and `κ̂ ≤ 1/ĉ` (backward).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundCheck {
    #[serde(with = "ext")]
    pub kappa: f64,
    #[serde(with = "ext")]
    pub c: f64,
    pub kappa_class: Classification,
    pub c_class: Classification,
    pub forward_ok: bool,
    pub backward_ok: bool,
    /// Regularity and growth classified alike.
    pub equivalence_ok: bool,
    /// `κ̂·ĉ`, the empirical gap to the `1/4` of the forward bound.
    #[serde(with = "ext")]
    pub gap: f64,
    /// Exact isolation of `x̄` in the solution set (strong variant only).
    pub isolated: Option<bool>,
}

impl BoundCheck {
    fn new(kappa: f64, c: f64, kappa_class: Classification, c_class: Classification) -> Self {
        let forward_ok = c >= 1.0 / (4.0 * kappa) - tol::INEQUALITY;
        let backward_ok = kappa <= 1.0 / c + tol::INEQUALITY;
        BoundCheck {
            kappa,
            c,
            kappa_class,
            c_class,
            forward_ok,
            backward_ok,
            equivalence_ok: kappa_class.holds() == c_class.holds(),
            gap: kappa * c,
            isolated: None,
        }
    }

    /// Both estimates classify `holds`, so the bounds are binding.
    pub fn applicable(&self) -> bool {
        self.kappa_class.holds() && self.c_class.holds()
    }

    pub fn passes(&self) -> bool {
        let bounds = !self.applicable() || (self.forward_ok && self.backward_ok);
        let isolation = match self.isolated {
            Some(iso) => iso || !self.kappa_class.holds(),
            None => true,
        };
        self.equivalence_ok && bounds && isolation
    }
}

/// Subregularity of `∂f` versus the growth condition with the distance to
/// the solution set.
pub fn check_theorem_2_1(bp: &BasePair, grid: &SampleGrid) -> Result<BoundCheck> {
    let k = estimate_subregularity_modulus(bp, grid)?;
    let c = estimate_growth_constant(bp, grid)?;
    Ok(BoundCheck::new(k.value, c.value, k.classification, c.classification))
}

/// Strong subregularity versus growth in `‖x − x̄‖`, plus exact isolation.
pub fn check_theorem_3_1(bp: &BasePair, grid: &SampleGrid) -> Result<BoundCheck> {
    let k = estimate_strong_subregularity_modulus(bp, grid)?;
    let c = estimate_strong_growth_constant(bp, grid)?;
    let mut out = BoundCheck::new(k.value, c.value, k.classification, c.classification);
    out.isolated = Some(is_isolated(&solution_set(&bp.f, &bp.ystar)?, &bp.xbar));
    Ok(out)
}

/// Strong growth holds iff the monotone modulus is positive, and the
/// monotone modulus dominates the growth constant.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MonotoneChain {
    #[serde(with = "ext")]
    pub c_growth: f64,
    #[serde(with = "ext")]
    pub c_mono: f64,
    pub growth_class: Classification,
    pub mono_class: Classification,
    pub equivalence_ok: bool,
    pub bound_ok: bool,
}

impl MonotoneChain {
    pub fn passes(&self) -> bool {
        self.equivalence_ok && self.bound_ok
    }
}

pub fn check_theorem_3_6(bp: &BasePair, grid: &SampleGrid) -> Result<MonotoneChain> {
    let c = estimate_strong_growth_constant(bp, grid)?;
    let m = check_strong_monotone_relatedness(bp, grid)?;
    Ok(MonotoneChain {
        c_growth: c.value,
        c_mono: m.value,
        growth_class: c.classification,
        mono_class: m.classification,
        equivalence_ok: c.holds() == m.holds(),
        bound_ok: m.value >= c.value - tol::INEQUALITY,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SumRule {
    #[serde(with = "ext")]
    pub c_f: f64,
    #[serde(with = "ext")]
    pub c_g: f64,
    #[serde(with = "ext")]
    pub c_sum: f64,
    pub applicable: bool,
    pub ok: bool,
}

/// Strong growth of `f + g` at `(x̄, ȳ* + w̄*)` against `ĉ_f + ĉ_g`, all
/// measured on the grid of `bpf`.
pub fn check_sum_rule(bpf: &BasePair, bpg: &BasePair) -> Result<SumRule> {
    let grid = SampleGrid::around(bpf);
    let f = estimate_strong_growth_constant(bpf, &grid)?;
    let g = estimate_strong_growth_constant(&bpg.with_radius(bpf.radius), &grid)?;
    let sum = BasePair::new(
        ConvexFunction::sum(bpf.f.clone(), bpg.f.clone())?,
        bpf.xbar.clone(),
        linalg::add(&bpf.ystar, &bpg.ystar),
        bpf.radius,
    )?;
    let s = estimate_strong_growth_constant(&sum, &grid)?;
    let applicable = f.holds() && g.holds();
    Ok(SumRule {
        c_f: f.value,
        c_g: g.value,
        c_sum: s.value,
        applicable,
        ok: !applicable || s.value >= f.value + g.value - tol::INEQUALITY,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Prop39 {
    pub c: f64,
    pub premise_holds: bool,
    /// `(x, λ)` refuting the premise.
    pub premise_witness: Option<(Vector, f64)>,
    pub conclusion_holds: bool,
    pub conclusion_witness: Option<Vector>,
    /// Strong convexity with modulus `c` over pairs of grid samples.
    pub strongly_convex: bool,
}

impl Prop39 {
    pub fn implication_ok(&self) -> bool {
        !self.premise_holds || self.conclusion_holds
    }
}

const LAMBDAS: [f64; 9] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9];

/// `f((1−λ)u + λv) ≤ (1−λ)f(u) + λf(v) − cλ(1−λ)‖u − v‖²` up to tolerance.
fn chord_ok(f: &ConvexFunction, u: &[f64], v: &[f64], fu: f64, fv: f64, lam: f64, c: f64) -> Result<bool> {
    if fu.is_infinite() || fv.is_infinite() {
        return Ok(true);
    }
    let z: Vector = u.iter().zip(v).map(|(a, b)| (1.0 - lam) * a + lam * b).collect();
    let d = linalg::dist(u, v);
    let rhs = (1.0 - lam) * fu + lam * fv - c * lam * (1.0 - lam) * d * d;
    Ok(f.value(&z)? <= rhs + tol::INEQUALITY)
}

/// Checks the chord condition towards `x̄` (premise) and the quadratic
/// minorant at every extreme subgradient of `x̄` (conclusion).
pub fn check_prop_3_9(bp: &BasePair, c: f64, grid: &SampleGrid) -> Result<Prop39> {
    let f = &bp.f;
    let samples = grid.samples();
    let fbar = f.value(&bp.xbar)?;
    let mut premise_witness = None;
    'outer: for x in &samples {
        let fx = f.value(x)?;
        for lam in LAMBDAS {
            if !chord_ok(f, x, &bp.xbar, fx, fbar, lam, c)? {
                premise_witness = Some((x.clone(), lam));
                break 'outer;
            }
        }
    }
    let duals = subdifferential(f, &bp.xbar)?.extreme_points();
    let mut conclusion_witness = None;
    'outer2: for x in &samples {
        let fx = f.value(x)?;
        if fx.is_infinite() {
            continue;
        }
        let shift = linalg::sub(x, &bp.xbar);
        let d2 = dot(&shift, &shift);
        for y in &duals {
            if fx < fbar + dot(y, &shift) + c * d2 - tol::INEQUALITY {
                conclusion_witness = Some(x.clone());
                break 'outer2;
            }
        }
    }
    // pairs over a thinned sample set keep the quadratic cost bounded
    let step = (samples.len() / 60).max(1);
    let thin: Vec<&Vector> = samples.iter().step_by(step).collect();
    let mut strongly_convex = true;
    'outer3: for u in &thin {
        let fu = f.value(u)?;
        for v in &thin {
            let fv = f.value(v)?;
            for lam in LAMBDAS {
                if !chord_ok(f, u, v, fu, fv, lam, c)? {
                    strongly_convex = false;
                    break 'outer3;
                }
            }
        }
    }
    Ok(Prop39 {
        c,
        premise_holds: premise_witness.is_none(),
        premise_witness,
        conclusion_holds: conclusion_witness.is_none(),
        conclusion_witness,
        strongly_convex,
    })
}

/// A second-order modulus (Hessian or contingent derivative) set against the
/// strong property it characterizes in finite dimensions.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SecondOrderLink {
    #[serde(with = "ext")]
    pub modulus: f64,
    pub strong_class: Classification,
    pub isolated: bool,
    pub equivalence_ok: bool,
}

impl SecondOrderLink {
    fn new(modulus: f64, strong_class: Classification, isolated: bool) -> Self {
        let positive = modulus > tol::DENOMINATOR_FLOOR;
        SecondOrderLink {
            modulus,
            strong_class,
            isolated,
            equivalence_ok: positive == strong_class.holds() && (!positive || isolated),
        }
    }
}

/// `∇²f(x̄) ≻ 0` iff strong growth holds, for twice differentiable entries.
pub fn check_hessian_link(bp: &BasePair, grid: &SampleGrid) -> Result<SecondOrderLink> {
    let h = hessian_modulus(&bp.f, &bp.xbar)?;
    let c = estimate_strong_growth_constant(bp, grid)?;
    let iso = is_isolated(&solution_set(&bp.f, &bp.ystar)?, &bp.xbar);
    Ok(SecondOrderLink::new(h, c.classification, iso))
}

/// Positive-definite contingent derivative iff strong subregularity holds.
pub fn check_contingent_link(bp: &BasePair, grid: &SampleGrid) -> Result<SecondOrderLink> {
    let m = contingent_derivative_modulus(bp)?;
    let k = estimate_strong_subregularity_modulus(bp, grid)?;
    let iso = is_isolated(&solution_set(&bp.f, &bp.ystar)?, &bp.xbar);
    Ok(SecondOrderLink::new(m.value, k.classification, iso))
}
