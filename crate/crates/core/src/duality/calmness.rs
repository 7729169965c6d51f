use super::conjugate::conjugate;
use crate::catalog::{set_excess, solution_set, subdifferential, BasePair, ConvexFunction, ConvexSet};
use crate::error::{Error, Result};
use crate::linalg::{self, Vector};
use crate::regularity::{
    estimate_growth_constant, estimate_strong_growth_constant, estimate_subregularity_modulus, sweep_report,
    Classification, LedgerEntry, ModulusKind, ModulusReport, SampleGrid,
};
use crate::serde_ext::ext;
use crate::tol;
use serde::{Deserialize, Serialize};

/// Coordinate box `V` of half-width `r` around `y`.
fn window(y: &[f64], r: f64) -> (Vector, Vector) {
    (y.iter().map(|v| v - r).collect(), y.iter().map(|v| v + r).collect())
}

/// Ratio `e(F(x) ∩ V, D) / ‖x − x̄‖` for one sample, with the floor rule of
/// the subregularity estimator at `x = x̄`.
fn excess_entry(x: &[f64], xbar: &[f64], image: ConvexSet, v: &(Vector, Vector), target: &ConvexSet) -> Result<Option<LedgerEntry>> {
    let local = image.intersect_box(&v.0, &v.1)?;
    let num = set_excess(&local, target);
    let den = linalg::dist(x, xbar);
    let ratio = if den < tol::DENOMINATOR_FLOOR {
        if num < tol::NUMERATOR_FLOOR {
            return Ok(None);
        }
        f64::INFINITY
    } else {
        num / den
    };
    Ok(Some(LedgerEntry {
        x: x.to_vec(),
        numerator: num,
        denominator: den,
        ratio,
    }))
}

fn calmness(bp: &BasePair, grid: &SampleGrid, v_radius: f64, isolated: bool) -> Result<ModulusReport> {
    if !(v_radius > 0.0) {
        return Err(Error::InvalidArgument("V radius must be positive".into()));
    }
    let v = window(&bp.ystar, v_radius);
    let (kind, target) = if isolated {
        (ModulusKind::IsolatedCalmness, ConvexSet::singleton(bp.ystar.clone()))
    } else {
        (ModulusKind::Calmness, subdifferential(&bp.f, &bp.xbar)?)
    };
    sweep_report(kind, grid, |x| {
        excess_entry(x, &bp.xbar, subdifferential(&bp.f, x)?, &v, &target)
    })
}

/// `κ̂_calm = sup e(∂f(x) ∩ V, ∂f(x̄)) / ‖x − x̄‖`, with `V` the box of
/// half-width `v_radius` around `ȳ*`.
pub fn estimate_calmness_modulus(bp: &BasePair, grid: &SampleGrid, v_radius: f64) -> Result<ModulusReport> {
    calmness(bp, grid, v_radius, false)
}

/// Calmness towards the single point `ȳ*`; fails outright when
/// `∂f(x̄) ∩ V` holds more than `ȳ*`.
pub fn estimate_isolated_calmness_modulus(bp: &BasePair, grid: &SampleGrid, v_radius: f64) -> Result<ModulusReport> {
    calmness(bp, grid, v_radius, true)
}

/// Base pair `(ȳ*, x̄)` of the conjugate, with radius `r`.
fn dual_pair(bp: &BasePair, r: f64) -> Result<BasePair> {
    let pair = conjugate(&bp.f)?;
    BasePair::new(pair.conjugate, bp.ystar.clone(), bp.xbar.clone(), r)
}

fn dual_grid(dual: &BasePair, grid: &SampleGrid) -> SampleGrid {
    SampleGrid::around(dual)
        .with_per_axis(grid.per_axis)
        .with_random(grid.random)
        .with_seed(grid.seed)
}

/// Calmness of `∂f` at `x̄` for `ȳ*` against subregularity of `∂f*` at `ȳ*`
/// for `x̄`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CalmnessBridge {
    #[serde(with = "ext")]
    pub kappa_calm: f64,
    #[serde(with = "ext")]
    pub kappa_dual: f64,
    /// Within 10% of each other, or both below `1e−12`.
    pub agree: bool,
}

pub fn calmness_bridge(bp: &BasePair, grid: &SampleGrid, v_radius: f64) -> Result<CalmnessBridge> {
    let calm = estimate_calmness_modulus(bp, grid, v_radius)?;
    let dual = dual_pair(bp, v_radius)?;
    let sub = estimate_subregularity_modulus(&dual, &dual_grid(&dual, grid))?;
    let (a, b) = (calm.value, sub.value);
    let agree = (a <= tol::DENOMINATOR_FLOOR && b <= tol::DENOMINATOR_FLOOR)
        || (a.is_finite() && b.is_finite() && (a - b).abs() <= 0.1 * a.max(b));
    Ok(CalmnessBridge {
        kappa_calm: a,
        kappa_dual: b,
        agree,
    })
}

/// Calmness versus growth of `f*` around `ȳ*` measured from `∂f(x̄)`
/// (distance form) and from `x̄` (norm form).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Corollary43 {
    #[serde(with = "ext")]
    pub kappa_calm: f64,
    pub calm: Classification,
    #[serde(with = "ext")]
    pub c_dual_growth: f64,
    pub dual_growth: Classification,
    #[serde(with = "ext")]
    pub kappa_isolated: f64,
    pub isolated_calm: Classification,
    #[serde(with = "ext")]
    pub c_dual_strong_growth: f64,
    pub dual_strong_growth: Classification,
}

impl Corollary43 {
    pub fn calm_equivalence(&self) -> bool {
        self.calm.holds() == self.dual_growth.holds()
    }

    pub fn isolated_equivalence(&self) -> bool {
        self.isolated_calm.holds() == self.dual_strong_growth.holds()
    }

    pub fn passes(&self) -> bool {
        self.calm_equivalence() && self.isolated_equivalence()
    }
}

/// Runs both equivalences with `V` and the dual sample ball of radius `a`.
pub fn check_corollary_4_3(bp: &BasePair, grid: &SampleGrid) -> Result<Corollary43> {
    let v = bp.radius;
    let calm = estimate_calmness_modulus(bp, grid, v)?;
    let iso = estimate_isolated_calmness_modulus(bp, grid, v)?;
    let dual = dual_pair(bp, v)?;
    let dg = dual_grid(&dual, grid);
    let g = estimate_growth_constant(&dual, &dg)?;
    let sg = estimate_strong_growth_constant(&dual, &dg)?;
    Ok(Corollary43 {
        kappa_calm: calm.value,
        calm: calm.classification,
        c_dual_growth: g.value,
        dual_growth: g.classification,
        kappa_isolated: iso.value,
        isolated_calm: iso.classification,
        c_dual_strong_growth: sg.value,
        dual_strong_growth: sg.classification,
    })
}

/// Parametric inclusion `0 ∈ αx + β + ∂φ(y)` with a one-dimensional decision
/// variable `y` and parameter `x`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolutionMapSpec {
    pub phi: ConvexFunction,
    pub alpha: f64,
    #[serde(default)]
    pub beta: f64,
    #[serde(with = "ext", default = "neg_inf")]
    pub domain_lo: f64,
    #[serde(with = "ext", default = "pos_inf")]
    pub domain_hi: f64,
}

fn neg_inf() -> f64 {
    f64::NEG_INFINITY
}

fn pos_inf() -> f64 {
    f64::INFINITY
}

impl SolutionMapSpec {
    pub fn new(phi: ConvexFunction, alpha: f64, beta: f64) -> Result<Self> {
        let out = SolutionMapSpec {
            phi,
            alpha,
            beta,
            domain_lo: f64::NEG_INFINITY,
            domain_hi: f64::INFINITY,
        };
        out.validate()?;
        Ok(out)
    }

    pub fn validate(&self) -> Result<()> {
        self.phi.validate()?;
        if self.phi.dim() != 1 {
            return Err(Error::InvalidArgument("solution maps need a one-dimensional φ".into()));
        }
        if !(self.alpha.is_finite() && self.alpha != 0.0 && self.beta.is_finite()) {
            return Err(Error::InvalidArgument("base map must be affine with α ≠ 0".into()));
        }
        if !(self.domain_lo <= self.domain_hi) {
            return Err(Error::InvalidArgument("empty parameter domain".into()));
        }
        Ok(())
    }

    pub fn base(&self, x: f64) -> f64 {
        self.alpha * x + self.beta
    }

    pub fn in_domain(&self, x: f64) -> bool {
        self.domain_lo <= x && x <= self.domain_hi
    }
}

/// `S(x) = (∂φ)⁻¹(−f(x))`.
pub fn solution_map_eval(spec: &SolutionMapSpec, x: f64) -> Result<ConvexSet> {
    if !spec.in_domain(x) {
        return Err(Error::InvalidArgument(format!("parameter {x} outside the domain")));
    }
    solution_set(&spec.phi, &[-spec.base(x)])
}

/// Half-width of the window `V` around `ȳ` and radius of the growth
/// neighborhood of `φ`.
pub const SOLUTION_MAP_WINDOW: f64 = 1.0;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Corollary44 {
    #[serde(with = "ext")]
    pub kappa_calm: f64,
    pub calm: Classification,
    #[serde(with = "ext")]
    pub kappa_isolated: f64,
    pub isolated_calm: Classification,
    pub growth_2_1: Classification,
    pub growth_3_1: Classification,
}

impl Corollary44 {
    pub fn equivalence_ok(&self) -> bool {
        self.calm.holds() == self.growth_2_1.holds()
    }

    pub fn implication_ok(&self) -> bool {
        !self.growth_3_1.holds() || self.isolated_calm.holds()
    }

    pub fn passes(&self) -> bool {
        self.equivalence_ok() && self.implication_ok()
    }
}

/// Calmness of `S` over the parameter grid against the growth conditions of
/// `φ` at `(ȳ, −f(x̄))`.
pub fn check_corollary_4_4(spec: &SolutionMapSpec, xbar: f64, ybar: f64, grid: &SampleGrid) -> Result<Corollary44> {
    spec.validate()?;
    let s_bar = solution_map_eval(spec, xbar)?;
    if !s_bar.contains(&[ybar]) {
        return Err(Error::InvalidBasePair(format!("y = {ybar} is not in S({xbar})")));
    }
    if grid.center != [xbar] {
        return Err(Error::InvalidArgument("parameter grid must be centered at x̄".into()));
    }
    let v = window(&[ybar], SOLUTION_MAP_WINDOW);
    let point = ConvexSet::singleton(vec![ybar]);
    let sweep = |kind: ModulusKind, target: &ConvexSet| {
        sweep_report(kind, grid, |x| {
            if !spec.in_domain(x[0]) {
                return Ok(None);
            }
            excess_entry(x, &[xbar], solution_map_eval(spec, x[0])?, &v, target)
        })
    };
    let calm = sweep(ModulusKind::Calmness, &s_bar)?;
    let iso = sweep(ModulusKind::IsolatedCalmness, &point)?;
    let bp = BasePair::new(spec.phi.clone(), vec![ybar], vec![-spec.base(xbar)], SOLUTION_MAP_WINDOW)?;
    let pg = SampleGrid::around(&bp)
        .with_per_axis(grid.per_axis)
        .with_random(grid.random)
        .with_seed(grid.seed);
    Ok(Corollary44 {
        kappa_calm: calm.value,
        calm: calm.classification,
        kappa_isolated: iso.value,
        isolated_calm: iso.classification,
        growth_2_1: estimate_growth_constant(&bp, &pg)?.classification,
        growth_3_1: estimate_strong_growth_constant(&bp, &pg)?.classification,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(f: ConvexFunction, x: f64, y: f64, a: f64) -> BasePair {
        BasePair::new(f, vec![x], vec![y], a).unwrap()
    }

    #[test]
    fn calmness_of_the_identity() {
        let bp = pair(ConvexFunction::quadratic_1d(1.0), 0.0, 0.0, 1.0);
        let g = SampleGrid::around(&bp);
        let r = estimate_calmness_modulus(&bp, &g, 2.0).unwrap();
        assert!((r.value - 1.0).abs() < 1e-12);
        let b = calmness_bridge(&bp, &g, 2.0).unwrap();
        assert!(b.agree, "{b:?}");
    }

    #[test]
    fn abs_is_calm_but_not_isolated() {
        let bp = pair(ConvexFunction::Abs, 0.0, 0.0, 1.0);
        let g = SampleGrid::around(&bp);
        let r = estimate_calmness_modulus(&bp, &g, 2.0).unwrap();
        assert_eq!(r.value, 0.0);
        assert!(r.holds());
        let i = estimate_isolated_calmness_modulus(&bp, &g, 2.0).unwrap();
        assert_eq!(i.classification, Classification::Fails);
        let c = check_corollary_4_3(&bp, &g).unwrap();
        assert!(c.passes(), "{c:?}");
    }

    #[test]
    fn solution_map_examples() {
        let abs = SolutionMapSpec::new(ConvexFunction::Abs, 1.0, 0.0).unwrap();
        assert_eq!(solution_map_eval(&abs, 0.5).unwrap(), ConvexSet::singleton(vec![0.0]));
        assert_eq!(
            solution_map_eval(&abs, 1.0).unwrap(),
            ConvexSet::interval(f64::NEG_INFINITY, 0.0).unwrap()
        );
        let sq = SolutionMapSpec::new(ConvexFunction::quadratic_1d(1.0), 1.0, 0.0).unwrap();
        assert_eq!(solution_map_eval(&sq, 2.0).unwrap(), ConvexSet::singleton(vec![-2.0]));
    }

    #[test]
    fn quartic_solution_map_is_not_calm() {
        let spec = SolutionMapSpec::new(ConvexFunction::power_even(4).unwrap(), 1.0, 0.0).unwrap();
        let g = SampleGrid::new(vec![0.0], 0.5).unwrap();
        let r = check_corollary_4_4(&spec, 0.0, 0.0, &g).unwrap();
        assert_eq!(r.calm, Classification::Fails);
        assert_eq!(r.growth_2_1, Classification::Fails);
        assert!(r.passes());
    }

    #[test]
    fn off_graph_base_is_rejected() {
        let spec = SolutionMapSpec::new(ConvexFunction::quadratic_1d(1.0), 1.0, 0.0).unwrap();
        let g = SampleGrid::new(vec![0.0], 0.5).unwrap();
        assert!(matches!(
            check_corollary_4_4(&spec, 0.0, 1.0, &g),
            Err(Error::InvalidBasePair(_))
        ));
    }
}
