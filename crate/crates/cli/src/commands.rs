use crate::args::{AnalyzeArgs, DualityArgs, GridArgs, ProxArgs, SolutionMapArgs};
use crate::io::{base_pair, load_function, read_descriptor, write_atomic, write_json, Assertions, CliError, CliResult};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use subreg::catalog::{solution_set, ConvexFunction, ConvexSet};
use subreg::duality::{
    calmness_bridge, check_biconjugation, check_corollary_4_3, check_corollary_4_4, check_inverse_subdifferential,
    conjugate, estimate_calmness_modulus, estimate_isolated_calmness_modulus, solution_map_eval, Biconjugation,
    CalmnessBridge, Corollary43, Corollary44, InverseLaw, SolutionMapSpec,
};
use subreg::proximal::{
    classify_rate, classify_rate_to_set, errors_csv, iterates_csv, run_exact_ppa, run_generalized_ppa,
    GeneralizedStep, Iterate,
};
use subreg::regularity::{
    check_contingent_link, check_hessian_link, check_theorem_2_1, check_theorem_3_1, check_theorem_3_6,
    contingent_derivative_modulus, check_strong_monotone_relatedness, estimate_growth_constant,
    estimate_strong_growth_constant, estimate_strong_subregularity_modulus, estimate_subregularity_modulus,
    hessian_report, BoundCheck, MonotoneChain, SecondOrderLink,
};
use subreg::{BasePair, Error, ModulusReport, ProxSchedule, RateReport, SampleGrid};

/// Result of a command that ran to completion: the names of failed assertions.
pub type Failures = Vec<String>;

#[derive(Serialize)]
struct GridInfo {
    per_axis: usize,
    random: usize,
    seed: u64,
}

fn grid_for(center: Vec<f64>, radius: f64, g: GridArgs) -> CliResult<(SampleGrid, GridInfo)> {
    if g.grid < 2 {
        return Err(CliError::Config("--grid needs at least 2 points per axis".into()));
    }
    let grid = SampleGrid::new(center, radius)?
        .with_per_axis(g.grid)
        .with_random(g.samples)
        .with_seed(g.seed);
    let info = GridInfo {
        per_axis: grid.effective_per_axis(),
        random: g.samples,
        seed: g.seed,
    };
    Ok((grid, info))
}

/// Unsupported second-order data is omitted rather than fatal.
fn optional<T>(r: subreg::Result<T>) -> CliResult<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::Unsupported(_)) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

#[derive(Serialize)]
struct AnalysisChecks {
    subregularity_vs_growth: BoundCheck,
    strong_subregularity_vs_strong_growth: BoundCheck,
    strong_growth_vs_monotone: MonotoneChain,
    contingent_link: Option<SecondOrderLink>,
    hessian_link: Option<SecondOrderLink>,
}

#[derive(Serialize)]
struct Analysis {
    base_pair: BasePair,
    grid: GridInfo,
    reports: Vec<ModulusReport>,
    checks: AnalysisChecks,
    assertions: Assertions,
    passed: bool,
}

fn ledger_name(r: &ModulusReport) -> String {
    let kind = serde_json::to_value(r.kind).ok().and_then(|v| v.as_str().map(String::from));
    format!("ledger_{}.csv", kind.unwrap_or_else(|| "report".into()))
}

pub fn analyze(a: &AnalyzeArgs) -> CliResult<Failures> {
    let f = load_function(&a.function.function)?;
    let bp = base_pair(f, a.point.xbar.clone().map(|p| p.0), a.point.ystar.clone().map(|p| p.0), a.point.radius)?;
    let (grid, info) = grid_for(bp.xbar.clone(), bp.radius, a.grid)?;

    let mut reports = vec![
        estimate_subregularity_modulus(&bp, &grid)?,
        estimate_strong_subregularity_modulus(&bp, &grid)?,
        estimate_growth_constant(&bp, &grid)?,
        estimate_strong_growth_constant(&bp, &grid)?,
        check_strong_monotone_relatedness(&bp, &grid)?,
    ];
    reports.extend(optional(contingent_derivative_modulus(&bp))?);
    reports.extend(optional(hessian_report(&bp.f, &bp.xbar))?);

    let checks = AnalysisChecks {
        subregularity_vs_growth: check_theorem_2_1(&bp, &grid)?,
        strong_subregularity_vs_strong_growth: check_theorem_3_1(&bp, &grid)?,
        strong_growth_vs_monotone: check_theorem_3_6(&bp, &grid)?,
        contingent_link: optional(check_contingent_link(&bp, &grid))?,
        hessian_link: optional(check_hessian_link(&bp, &grid))?,
    };
    let mut asserts = Assertions::default();
    asserts.add("subregularity_vs_growth", checks.subregularity_vs_growth.passes());
    asserts.add(
        "strong_subregularity_vs_strong_growth",
        checks.strong_subregularity_vs_strong_growth.passes(),
    );
    asserts.add("strong_growth_vs_monotone", checks.strong_growth_vs_monotone.passes());
    if let Some(l) = &checks.contingent_link {
        asserts.add("contingent_link", l.equivalence_ok);
    }
    if let Some(l) = &checks.hessian_link {
        asserts.add("hessian_link", l.equivalence_ok);
    }

    let out = &a.out.out;
    for r in &reports {
        if !r.ledger.is_empty() {
            write_atomic(out, &ledger_name(r), &r.ledger_csv())?;
        }
    }
    let failures = asserts.failures();
    let passed = asserts.all_pass();
    write_json(
        out,
        "analysis.json",
        "analyze",
        &Analysis {
            base_pair: bp,
            grid: info,
            reports,
            checks,
            assertions: asserts,
            passed,
        },
    )?;
    Ok(failures)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum ScheduleSpec {
    Generalized { generalized: Vec<GeneralizedStep> },
    Exact(ProxSchedule),
}

#[derive(Serialize)]
#[serde(untagged)]
enum Target {
    Point { x_star: Vec<f64> },
    Set { solution_set: ConvexSet },
}

#[derive(Serialize)]
struct RateRun {
    function: ConvexFunction,
    x0: Vec<f64>,
    schedule: ScheduleSpec,
    target: Target,
    iterations: usize,
    final_x: Vec<f64>,
    report: RateReport,
    assertions: Assertions,
    passed: bool,
}

/// Largest tolerated optimality residual of a prox step.
const RESIDUAL_TOL: f64 = 1e-6;

fn descent_and_residual(f: &ConvexFunction, iterates: &[Iterate], asserts: &mut Assertions) -> CliResult<()> {
    let mut descent = true;
    for w in iterates.windows(2) {
        if w[1].f > w[0].f + 1e-9 * (1.0 + w[0].f.abs()) {
            descent = false;
        }
    }
    asserts.add("descent", descent);
    let worst = iterates.iter().map(|it| it.residual).fold(0.0, f64::max);
    asserts.add("step_residual", worst <= RESIDUAL_TOL);
    let last = iterates.last().expect("iterates include x0");
    asserts.add("finite_objective", f.value(&last.x)?.is_finite());
    Ok(())
}

pub fn prox(a: &ProxArgs) -> CliResult<Failures> {
    let f = load_function(&a.function.function)?;
    let x0 = a.x0.0.clone();
    if x0.len() != f.dim() {
        return Err(CliError::Config(format!("--x0 has {} entries, f has dimension {}", x0.len(), f.dim())));
    }
    let text = read_descriptor(&a.schedule)?;
    let schedule: ScheduleSpec =
        serde_json::from_str(&text).map_err(|e| CliError::Config(format!("invalid schedule: {e}")))?;
    let iterates = match &schedule {
        ScheduleSpec::Exact(s) => run_exact_ppa(&f, &x0, s)?,
        ScheduleSpec::Generalized { generalized } => {
            if x0.len() != 1 {
                return Err(CliError::Config("generalized steps need a one-dimensional f".into()));
            }
            run_generalized_ppa(&f, x0[0], generalized)?
        }
    };
    let (target, report) = match &a.xbar {
        Some(p) => {
            if p.0.len() != f.dim() {
                return Err(CliError::Config("--xbar dimension differs from f".into()));
            }
            let r = classify_rate(&iterates, &p.0);
            (Target::Point { x_star: p.0.clone() }, r)
        }
        None => {
            let s = solution_set(&f, &vec![0.0; f.dim()])?;
            if s.is_empty() {
                return Err(CliError::Config("f has no minimizer; pass --xbar".into()));
            }
            let r = classify_rate_to_set(&iterates, &s);
            (Target::Set { solution_set: s }, r)
        }
    };
    let mut asserts = Assertions::default();
    descent_and_residual(&f, &iterates, &mut asserts)?;

    let out = &a.out.out;
    write_atomic(out, "iterates.csv", &iterates_csv(&iterates, &report))?;
    write_atomic(out, "errors.csv", &errors_csv(&report))?;
    let failures = asserts.failures();
    let passed = asserts.all_pass();
    let last = iterates.last().expect("iterates include x0");
    write_json(
        out,
        "rate.json",
        "prox",
        &RateRun {
            function: f.clone(),
            x0,
            schedule,
            target,
            iterations: last.n,
            final_x: last.x.clone(),
            report,
            assertions: asserts,
            passed,
        },
    )?;
    Ok(failures)
}

#[derive(Serialize)]
struct DualityRun {
    base_pair: BasePair,
    conjugate: ConvexFunction,
    v_radius: f64,
    grid: GridInfo,
    biconjugation: Biconjugation,
    inverse_law: InverseLaw,
    calmness: ModulusReport,
    isolated_calmness: ModulusReport,
    bridge: Option<CalmnessBridge>,
    dual_growth: Corollary43,
    assertions: Assertions,
    passed: bool,
}

pub fn duality(a: &DualityArgs) -> CliResult<Failures> {
    let f = load_function(&a.function.function)?;
    let bp = base_pair(f, a.point.xbar.clone().map(|p| p.0), a.point.ystar.clone().map(|p| p.0), a.point.radius)?;
    let v = a.v_radius.unwrap_or(bp.radius);
    if !(v > 0.0) {
        return Err(CliError::Config("--v-radius must be positive".into()));
    }
    let (grid, info) = grid_for(bp.xbar.clone(), bp.radius, a.grid)?;
    let pair = conjugate(&bp.f)?;
    let probes = grid.samples();
    let (dual_grid, _) = grid_for(bp.ystar.clone(), bp.radius, a.grid)?;
    let biconjugation = check_biconjugation(&bp.f, &probes, 1e-6)?;
    let inverse_law = check_inverse_subdifferential(&pair, &dual_grid.samples())?;
    let calmness = estimate_calmness_modulus(&bp, &grid, v)?;
    let isolated_calmness = estimate_isolated_calmness_modulus(&bp, &grid, v)?;
    let bridge = optional(calmness_bridge(&bp, &grid, v))?;
    let dual_growth = check_corollary_4_3(&bp, &grid)?;

    let mut asserts = Assertions::default();
    asserts.add("biconjugation", biconjugation.ok);
    asserts.add("inverse_law", inverse_law.ok());
    if let Some(b) = &bridge {
        asserts.add("calmness_bridge", b.agree);
    }
    asserts.add("calmness_vs_dual_growth", dual_growth.calm_equivalence());
    asserts.add("isolated_calmness_vs_dual_strong_growth", dual_growth.isolated_equivalence());

    let out = &a.out.out;
    for r in [&calmness, &isolated_calmness] {
        if !r.ledger.is_empty() {
            write_atomic(out, &ledger_name(r), &r.ledger_csv())?;
        }
    }
    let failures = asserts.failures();
    let passed = asserts.all_pass();
    write_json(
        out,
        "duality.json",
        "duality",
        &DualityRun {
            base_pair: bp,
            conjugate: pair.conjugate,
            v_radius: v,
            grid: info,
            biconjugation,
            inverse_law,
            calmness,
            isolated_calmness,
            bridge,
            dual_growth,
            assertions: asserts,
            passed,
        },
    )?;
    Ok(failures)
}

#[derive(Serialize)]
struct Evaluation {
    x: f64,
    set: ConvexSet,
}

#[derive(Serialize)]
struct SolutionMapRun {
    spec: SolutionMapSpec,
    xbar: f64,
    ybar: f64,
    grid: GridInfo,
    evaluations: Vec<Evaluation>,
    calmness: Corollary44,
    assertions: Assertions,
    passed: bool,
}

fn scalar(p: &Option<crate::args::Point>, flag: &str) -> CliResult<f64> {
    match p {
        None => Ok(0.0),
        Some(p) if p.0.len() == 1 => Ok(p.0[0]),
        Some(_) => Err(CliError::Config(format!("{flag} must be a scalar for solution maps"))),
    }
}

fn interval_csv(evals: &[Evaluation]) -> String {
    let mut out = String::from("x,lo,hi\n");
    for e in evals {
        let (lo, hi) = e.set.as_interval().unwrap_or((f64::NAN, f64::NAN));
        let _ = writeln!(out, "{},{},{}", e.x, lo, hi);
    }
    out
}

pub fn solution_map(a: &SolutionMapArgs) -> CliResult<Failures> {
    let phi = load_function(&a.function.function)?;
    let spec = SolutionMapSpec::new(phi, a.alpha, a.beta)?;
    let xbar = scalar(&a.point.xbar, "--xbar")?;
    let ybar = scalar(&a.point.ystar, "--ystar")?;
    let (grid, info) = grid_for(vec![xbar], a.point.radius, a.grid)?;
    if !solution_map_eval(&spec, xbar)?.contains(&[ybar]) {
        return Err(CliError::Config(format!("base pair invalid: {ybar} is not in S({xbar})")));
    }
    let calmness = check_corollary_4_4(&spec, xbar, ybar, &grid)?;
    let mut xs: Vec<f64> = grid.samples().into_iter().map(|p| p[0]).collect();
    xs.sort_by(f64::total_cmp);
    xs.dedup();
    let evaluations = xs
        .into_iter()
        .map(|x| Ok(Evaluation { x, set: solution_map_eval(&spec, x)? }))
        .collect::<subreg::Result<Vec<_>>>()?;

    let mut asserts = Assertions::default();
    asserts.add("calm_iff_growth", calmness.equivalence_ok());
    asserts.add("strong_growth_implies_isolated_calm", calmness.implication_ok());

    let out = &a.out.out;
    write_atomic(out, "solution_map.csv", &interval_csv(&evaluations))?;
    let failures = asserts.failures();
    let passed = asserts.all_pass();
    write_json(
        out,
        "solution_map.json",
        "solution-map",
        &SolutionMapRun {
            spec,
            xbar,
            ybar,
            grid: info,
            evaluations,
            calmness,
            assertions: asserts,
            passed,
        },
    )?;
    Ok(failures)
}
