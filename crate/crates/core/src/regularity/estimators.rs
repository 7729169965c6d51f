use super::grid::SampleGrid;
use super::report::{classify_sweep, Classification, LedgerEntry, ModulusKind, ModulusReport, RadiusValue};
use crate::catalog::{solution_set, subdifferential, BasePair, ConvexSet};
use crate::error::{Error, Result};
use crate::linalg::{self, dot, Vector};
use crate::tol;

/// Number of radii in every sweep: `a, a/2, a/4, a/8, a/16`.
pub const SWEEP_LEVELS: usize = 5;

/// Per-sample data shared by the estimators.
struct Context<'a> {
    bp: &'a BasePair,
    fbar: f64,
    solutions: Option<ConvexSet>,
}

impl<'a> Context<'a> {
    fn new(bp: &'a BasePair, kind: ModulusKind) -> Result<Self> {
        let needs_s = matches!(kind, ModulusKind::Subregularity | ModulusKind::Growth);
        let solutions = if needs_s {
            let s = solution_set(&bp.f, &bp.ystar)?;
            if s.is_empty() {
                return Err(Error::EmptySolutionSet);
            }
            Some(s)
        } else {
            None
        };
        Ok(Context {
            bp,
            fbar: bp.f.value(&bp.xbar)?,
            solutions,
        })
    }

    /// `f(x) − f(x̄) − ⟨ȳ*, x − x̄⟩`; `+∞` outside `dom f`.
    fn tilted_gap(&self, x: &[f64]) -> Result<f64> {
        let fx = self.bp.f.value(x)?;
        if fx.is_infinite() {
            return Ok(f64::INFINITY);
        }
        Ok(fx - self.fbar - dot(&self.bp.ystar, &linalg::sub(x, &self.bp.xbar)))
    }

    fn entry(&self, kind: ModulusKind, x: &[f64]) -> Result<Option<LedgerEntry>> {
        let bp = self.bp;
        let shift = linalg::sub(x, &bp.xbar);
        let dx = linalg::norm(&shift);
        let make = |numerator: f64, denominator: f64, ratio: f64| LedgerEntry {
            x: x.to_vec(),
            numerator,
            denominator,
            ratio,
        };
        match kind {
            ModulusKind::Subregularity | ModulusKind::StrongSubregularity => {
                let num = match &self.solutions {
                    Some(s) => s.distance(x),
                    None => dx,
                };
                let den = subdifferential(&bp.f, x)?.distance(&bp.ystar);
                if den < tol::DENOMINATOR_FLOOR {
                    if num < tol::NUMERATOR_FLOOR {
                        return Ok(None);
                    }
                    // ȳ* ∈ ∂f(x) away from the solution set: no finite modulus
                    return Ok(Some(make(num, den, f64::INFINITY)));
                }
                let ratio = if den.is_infinite() { 0.0 } else { num / den };
                Ok(Some(make(num, den, ratio)))
            }
            ModulusKind::Growth | ModulusKind::StrongGrowth => {
                let d = match &self.solutions {
                    Some(s) => s.distance(x),
                    None => dx,
                };
                let num = self.tilted_gap(x)?;
                if d < tol::DENOMINATOR_FLOOR {
                    if num < -tol::INEQUALITY {
                        return Err(Error::Assertion {
                            x: x.to_vec(),
                            what: format!("subgradient inequality violated by {num}"),
                        });
                    }
                    return Ok(None);
                }
                let den = d * d;
                Ok(Some(make(num, den, num / den)))
            }
            ModulusKind::MonotoneModulus => {
                if dx < tol::DENOMINATOR_FLOOR {
                    return Ok(None);
                }
                let sub = subdifferential(&bp.f, x)?;
                let num = sub.min_linear(&shift)? - dot(&bp.ystar, &shift);
                let den = dx * dx;
                Ok(Some(make(num, den, num / den)))
            }
            other => Err(Error::Unsupported(format!("{other:?} is not a sampled modulus"))),
        }
    }
}

/// Sup (κ-type) or inf (c-type) of the ledger ratios with the first sample
/// attaining it; an empty ledger gives the vacuous value `0` resp. `+∞`.
fn extremum(kind: ModulusKind, ledger: &[LedgerEntry]) -> (f64, Option<Vector>) {
    let sup = kind.is_sup();
    let mut best = if sup { 0.0 } else { f64::INFINITY };
    let mut witness = None;
    for e in ledger {
        let better = if sup { e.ratio > best } else { e.ratio < best };
        if better || witness.is_none() && e.ratio == best {
            best = e.ratio;
            witness = Some(e.x.clone());
        }
    }
    (best, witness)
}

fn check_grid(bp: &BasePair, grid: &SampleGrid) -> Result<()> {
    if grid.center.len() != bp.dim() {
        return Err(Error::DimensionMismatch {
            expected: bp.dim(),
            got: grid.center.len(),
        });
    }
    if linalg::dist(&grid.center, &bp.xbar) > tol::MEMBERSHIP {
        return Err(Error::InvalidArgument("grid must be centered at the base point".into()));
    }
    Ok(())
}

/// Evaluates `entry` on the rescaled samples of every radius
/// `a, a/2, …, a/16` and classifies the resulting sweep. The reported value,
/// witness and ledger belong to the largest radius.
pub(crate) fn sweep_report(
    kind: ModulusKind,
    grid: &SampleGrid,
    mut entry: impl FnMut(&[f64]) -> Result<Option<LedgerEntry>>,
) -> Result<ModulusReport> {
    let mut sweep = Vec::with_capacity(SWEEP_LEVELS);
    let mut head = None;
    for k in 0..SWEEP_LEVELS {
        let r = grid.radius / f64::powi(2.0, k as i32);
        let mut ledger = Vec::new();
        for x in grid.samples_at(r) {
            if let Some(e) = entry(&x)? {
                ledger.push(e);
            }
        }
        let (value, witness) = extremum(kind, &ledger);
        sweep.push(RadiusValue { radius: r, value });
        if k == 0 {
            head = Some((value, witness, ledger));
        }
    }
    let (value, witness, ledger) = head.expect("sweep is nonempty");
    let classification = classify_sweep(kind, &sweep.iter().map(|s| s.value).collect::<Vec<_>>());
    Ok(ModulusReport {
        kind,
        value,
        witness,
        radii_sweep: sweep,
        classification,
        heuristic: true,
        ledger,
    })
}

fn estimate(bp: &BasePair, grid: &SampleGrid, kind: ModulusKind) -> Result<ModulusReport> {
    check_grid(bp, grid)?;
    let ctx = Context::new(bp, kind)?;
    sweep_report(kind, grid, |x| ctx.entry(kind, x))
}

/// `κ̂ = sup d(x, (∂f)⁻¹(ȳ*)) / d(ȳ*, ∂f(x))` over the grid.
pub fn estimate_subregularity_modulus(bp: &BasePair, grid: &SampleGrid) -> Result<ModulusReport> {
    estimate(bp, grid, ModulusKind::Subregularity)
}

/// `sup ‖x − x̄‖ / d(ȳ*, ∂f(x))` over the grid.
pub fn estimate_strong_subregularity_modulus(bp: &BasePair, grid: &SampleGrid) -> Result<ModulusReport> {
    estimate(bp, grid, ModulusKind::StrongSubregularity)
}

/// `ĉ = inf (f(x) − f(x̄) − ⟨ȳ*, x − x̄⟩) / d²(x, (∂f)⁻¹(ȳ*))` over the grid.
pub fn estimate_growth_constant(bp: &BasePair, grid: &SampleGrid) -> Result<ModulusReport> {
    estimate(bp, grid, ModulusKind::Growth)
}

/// Growth constant with denominator `‖x − x̄‖²`.
pub fn estimate_strong_growth_constant(bp: &BasePair, grid: &SampleGrid) -> Result<ModulusReport> {
    estimate(bp, grid, ModulusKind::StrongGrowth)
}

/// `c_mono = inf min_{y*∈∂f(x)} ⟨y* − ȳ*, x − x̄⟩ / ‖x − x̄‖²` over the grid.
pub fn check_strong_monotone_relatedness(bp: &BasePair, grid: &SampleGrid) -> Result<ModulusReport> {
    estimate(bp, grid, ModulusKind::MonotoneModulus)
}

/// First grid sample refuting the growth condition with constant `c`, i.e.
/// with `f(x) − f(x̄) − ⟨ȳ*, x − x̄⟩ < c·d² − tol`, where `d` is the distance
/// to the solution set (or to `x̄` when `strong`).
pub fn probe_growth(bp: &BasePair, c: f64, grid: &SampleGrid, strong: bool) -> Result<Option<Vector>> {
    check_grid(bp, grid)?;
    let kind = if strong {
        ModulusKind::StrongGrowth
    } else {
        ModulusKind::Growth
    };
    let ctx = Context::new(bp, kind)?;
    for x in grid.samples() {
        if let Some(e) = ctx.entry(kind, &x)? {
            if e.numerator < c * e.denominator - tol::INEQUALITY {
                return Ok(Some(x));
            }
        }
    }
    Ok(None)
}

/// Whether `S ∩ 𝔹_a(x̄) = {x̄}`; for a convex `S` containing `x̄` this means
/// `S = {x̄}`.
pub fn is_isolated(s: &ConvexSet, xbar: &[f64]) -> bool {
    match s.clone().normalized().singleton_point() {
        Some(p) => linalg::dist(&p, xbar) <= tol::MEMBERSHIP,
        None => false,
    }
}

/// Ledger-free report for exactly computed moduli.
pub(crate) fn exact_report(kind: ModulusKind, value: f64, witness: Option<Vector>) -> ModulusReport {
    let classification = if value.is_nan() {
        Classification::Degenerate
    } else if value > tol::DENOMINATOR_FLOOR {
        Classification::Holds
    } else {
        Classification::Fails
    };
    ModulusReport {
        kind,
        value,
        witness,
        radii_sweep: vec![],
        classification,
        heuristic: false,
        ledger: vec![],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::ConvexFunction;

    fn pair(f: ConvexFunction, x: f64, y: f64) -> BasePair {
        BasePair::new(f, vec![x], vec![y], 1.0).unwrap()
    }

    #[test]
    fn square_constants() {
        let bp = pair(ConvexFunction::quadratic_1d(2.0), 0.0, 0.0);
        let g = SampleGrid::around(&bp);
        let k = estimate_subregularity_modulus(&bp, &g).unwrap();
        assert!((k.value - 0.5).abs() < 1e-12);
        assert!(k.holds());
        let c = estimate_growth_constant(&bp, &g).unwrap();
        assert!((c.value - 1.0).abs() < 1e-12);
        assert!(c.holds());
        let m = check_strong_monotone_relatedness(&bp, &g).unwrap();
        assert!((m.value - 2.0).abs() < 1e-12);
    }

    #[test]
    fn quartic_fails_both_ways() {
        let bp = pair(ConvexFunction::power_even(4).unwrap(), 0.0, 0.0);
        let g = SampleGrid::around(&bp);
        let k = estimate_subregularity_modulus(&bp, &g).unwrap();
        assert_eq!(k.classification, Classification::Fails);
        let c = estimate_growth_constant(&bp, &g).unwrap();
        assert_eq!(c.classification, Classification::Fails);
    }

    #[test]
    fn positive_part_at_the_kink() {
        let bp = pair(ConvexFunction::positive_part(), 0.0, 0.0);
        let g = SampleGrid::around(&bp);
        let k = estimate_subregularity_modulus(&bp, &g).unwrap();
        assert_eq!(k.value, 1.0);
        assert_eq!(k.witness, Some(vec![1.0]));
        assert!(k.holds());
        let s = estimate_strong_subregularity_modulus(&bp, &g).unwrap();
        assert_eq!(s.classification, Classification::Fails);
    }

    #[test]
    fn witness_reproduces_value() {
        let bp = pair(ConvexFunction::Abs, 0.0, 0.0);
        let g = SampleGrid::around(&bp);
        let r = estimate_strong_growth_constant(&bp, &g).unwrap();
        let w = r.witness.clone().unwrap();
        let e = r.ledger.iter().find(|e| e.x == w).unwrap();
        assert!((e.ratio - r.value).abs() <= 1e-12);
        assert_eq!(r.value, 1.0);
    }

    #[test]
    fn probe_refutes_twice_the_constant() {
        let bp = pair(ConvexFunction::quadratic_1d(2.0), 0.0, 0.0);
        let g = SampleGrid::around(&bp);
        assert!(probe_growth(&bp, 2.0, &g, false).unwrap().is_some());
        assert!(probe_growth(&bp, 1.0, &g, false).unwrap().is_none());
    }

    #[test]
    fn isolation_is_read_off_the_set() {
        assert!(is_isolated(&ConvexSet::singleton(vec![0.0]), &[0.0]));
        assert!(!is_isolated(&ConvexSet::interval(f64::NEG_INFINITY, 0.0).unwrap(), &[0.0]));
        assert!(is_isolated(&ConvexSet::interval(2.0, 2.0).unwrap(), &[2.0]));
    }
}
