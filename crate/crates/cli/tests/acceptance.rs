//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

use std::fs;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};
use subreg::catalog::{solution_set, subdifferential, ConvexFunction};
use subreg::duality::{
    check_biconjugation, check_corollary_4_3, check_corollary_4_4, check_inverse_subdifferential, conjugate,
    SolutionMapSpec,
};
use subreg::proximal::{classify_rate, run_exact_ppa, run_generalized_ppa, GeneralizedStep};
use subreg::regularity::{
    check_contingent_link, check_hessian_link, check_prop_3_9, check_sum_rule, check_theorem_2_1,
    check_theorem_3_1, check_theorem_3_6, contingent_derivative_modulus, estimate_growth_constant,
    estimate_strong_growth_constant, estimate_strong_subregularity_modulus, estimate_subregularity_modulus,
    hessian_modulus, is_isolated, probe_growth,
};
use subreg::{BasePair, Classification, ProxSchedule, RateClass, SampleGrid};

// Pinned tolerances.
const TOL_SQUARE: f64 = 1e-6;
const TOL_QUADRATIC: f64 = 1e-3;
const TOL_EXACT: f64 = 1e-12;
const TOL_BOUND: f64 = 1e-9;
const MIN_KAPPA_FACTOR: f64 = 3.9;
const GROWTH_FACTOR: f64 = 0.25;
const TOL_GROWTH_FACTOR: f64 = 0.01;
const TOL_RATE_Q: f64 = 1e-6;
const TOL_GENERALIZED: f64 = 1e-10;
const TOL_BICONJUGATE: f64 = 1e-6;
const TOL_ORACLE: f64 = 1e-6;
const ORACLE_POINTS: usize = 100_000;
const SUITE_BUDGET: Duration = Duration::from_secs(10);
const SEEDS: [u64; 2] = [0, 1];

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn near(label: &str, got: f64, want: f64, tol: f64) -> Result<(), String> {
    ensure((got - want).abs() <= tol, || format!("{label} = {got}, expected {want} ± {tol:e}"))
}

fn e(err: subreg::Error) -> String {
    err.to_string()
}

fn pair(f: ConvexFunction, x: &[f64], y: &[f64]) -> BasePair {
    BasePair::new(f, x.to_vec(), y.to_vec(), 1.0).unwrap()
}

fn square() -> ConvexFunction {
    ConvexFunction::quadratic_1d(2.0)
}

fn quartic() -> ConvexFunction {
    ConvexFunction::power_even(4).unwrap()
}

fn unit_box() -> ConvexFunction {
    ConvexFunction::indicator_box(vec![0.0], vec![1.0]).unwrap()
}

fn kinked() -> ConvexFunction {
    ConvexFunction::max_affine(vec![vec![-2.0], vec![0.0], vec![1.0]], vec![-1.0, 0.0, -0.5]).unwrap()
}

/// One-dimensional base pairs whose estimates classify as holding.
fn regular_1d() -> Vec<(&'static str, BasePair)> {
    vec![
        ("x^2 at (0,0)", pair(square(), &[0.0], &[0.0])),
        ("x^2/2 + x/2 at (-0.5,0)", pair(ConvexFunction::quadratic(vec![vec![1.0]], vec![0.5]).unwrap(), &[-0.5], &[0.0])),
        ("|x| at (0,0)", pair(ConvexFunction::Abs, &[0.0], &[0.0])),
        ("|x| at (0,0.5)", pair(ConvexFunction::Abs, &[0.0], &[0.5])),
        ("max(0,x) at (-1,0)", pair(ConvexFunction::positive_part(), &[-1.0], &[0.0])),
        ("max(0,x) at (0,0)", pair(ConvexFunction::positive_part(), &[0.0], &[0.0])),
        ("max(0,x) at (1,1)", pair(ConvexFunction::positive_part(), &[1.0], &[1.0])),
        ("kinked at (0.5,0)", pair(kinked(), &[0.5], &[0.0])),
        ("box at (0,-1)", pair(unit_box(), &[0.0], &[-1.0])),
        ("box at (0.5,0)", pair(unit_box(), &[0.5], &[0.0])),
        ("|x| + x^2 at (0,0)", pair(ConvexFunction::sum(ConvexFunction::Abs, square()).unwrap(), &[0.0], &[0.0])),
        ("2|x| at (0,1)", pair(ConvexFunction::scaled(ConvexFunction::Abs, 2.0).unwrap(), &[0.0], &[1.0])),
        ("x^2 - x at (0.5,0)", pair(ConvexFunction::tilted(square(), vec![1.0]).unwrap(), &[0.5], &[0.0])),
    ]
}

/// Every catalog instance used for the cross-instance criteria.
fn catalog() -> Vec<(&'static str, BasePair)> {
    let mut v = regular_1d();
    v.extend([
        ("x^4 at (0,0)", pair(quartic(), &[0.0], &[0.0])),
        ("x^4 at (0.5,0.5)", pair(quartic(), &[0.5], &[0.5])),
        (
            "diag(2,4)",
            pair(ConvexFunction::diagonal_quadratic(&[2.0, 4.0]).unwrap(), &[0.0, 0.0], &[0.0, 0.0]),
        ),
        (
            "diag(2,0)",
            pair(ConvexFunction::diagonal_quadratic(&[2.0, 0.0]).unwrap(), &[0.0, 0.0], &[0.0, 0.0]),
        ),
        (
            "[[2,1],[1,2]]",
            pair(
                ConvexFunction::quadratic(vec![vec![2.0, 1.0], vec![1.0, 2.0]], vec![0.0, 0.0]).unwrap(),
                &[0.0, 0.0],
                &[0.0, 0.0],
            ),
        ),
        (
            "separable(|x|, x^2)",
            pair(ConvexFunction::separable(vec![ConvexFunction::Abs, square()]).unwrap(), &[0.0, 0.0], &[0.0, 0.0]),
        ),
    ]);
    v
}

fn subreg_bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_subreg"))
}

fn read_json(path: &Path) -> Result<serde_json::Value, String> {
    let text = fs::read_to_string(path).map_err(|err| format!("{}: {err}", path.display()))?;
    serde_json::from_str(&text).map_err(|err| err.to_string())
}

fn criterion_1() -> Check {
    for seed in SEEDS {
        let bp = pair(square(), &[0.0], &[0.0]);
        let g = SampleGrid::around(&bp).with_seed(seed);
        let k = estimate_subregularity_modulus(&bp, &g).map_err(e)?;
        near("kappa", k.value, 0.5, TOL_SQUARE)?;
        let c = estimate_strong_growth_constant(&bp, &g).map_err(e)?;
        near("strong growth c", c.value, 1.0, TOL_SQUARE)?;
        let t21 = check_theorem_2_1(&bp, &g).map_err(e)?;
        ensure(t21.forward_ok && t21.backward_ok && t21.passes(), || format!("{t21:?}"))?;
        let t31 = check_theorem_3_1(&bp, &g).map_err(e)?;
        ensure(t31.passes() && t31.isolated == Some(true), || format!("{t31:?}"))?;
        let w = probe_growth(&bp, 1.0 / k.value, &g, true).map_err(e)?;
        ensure(w.is_some(), || "strong growth with c = 2 was not refuted".into())?;
    }

    let dir = tempfile::tempdir().map_err(|err| err.to_string())?;
    let status = subreg_bin()
        .args(["analyze", "--function", r#"{"kind":"quadratic","A":[[2]],"b":[0]}"#, "--out"])
        .arg(dir.path())
        .status()
        .map_err(|err| err.to_string())?;
    ensure(status.code() == Some(0), || format!("analyze exited with {status}"))?;
    let v = read_json(&dir.path().join("analysis.json"))?;
    let check = &v["checks"]["subregularity_vs_growth"];
    ensure(
        check["kappa"] == 0.5 && check["c"] == 1.0 && check["forward_ok"] == true && check["backward_ok"] == true,
        || format!("analysis.json: {check}"),
    )?;
    Ok("kappa = 0.5, c = 1, bounds hold, c = 2 refuted".into())
}

fn factors(v: &[f64]) -> Vec<f64> {
    v.windows(2).map(|w| w[1] / w[0]).collect()
}

fn criterion_2() -> Check {
    let mut worst_k = f64::INFINITY;
    let mut worst_c: f64 = 0.0;
    for seed in SEEDS {
        let bp = pair(quartic(), &[0.0], &[0.0]);
        let g = SampleGrid::around(&bp).with_seed(seed);
        let k = estimate_subregularity_modulus(&bp, &g).map_err(e)?;
        ensure(k.classification == Classification::Fails, || format!("subregularity {:?}", k.classification))?;
        for f in factors(&k.sweep_values()) {
            ensure(f.is_finite() && f >= MIN_KAPPA_FACTOR, || format!("kappa factor {f}"))?;
            worst_k = worst_k.min(f);
        }
        let c = estimate_growth_constant(&bp, &g).map_err(e)?;
        ensure(c.classification == Classification::Fails, || format!("growth {:?}", c.classification))?;
        for f in factors(&c.sweep_values()) {
            near("c factor", f, GROWTH_FACTOR, TOL_GROWTH_FACTOR)?;
            worst_c = worst_c.max((f - GROWTH_FACTOR).abs());
        }
        let t = check_theorem_2_1(&bp, &g).map_err(e)?;
        ensure(t.equivalence_ok, || format!("{t:?}"))?;
    }
    let it = run_exact_ppa(&quartic(), &[1.0], &ProxSchedule::constant(1.0)).map_err(e)?;
    let r = classify_rate(&it, &[0.0]);
    ensure(r.classification == RateClass::Sublinear, || format!("PPA {:?}", r.classification))?;

    let dir = tempfile::tempdir().map_err(|err| err.to_string())?;
    let status = subreg_bin()
        .args(["analyze", "--function", r#"{"kind":"power_even","p":4}"#, "--out"])
        .arg(dir.path())
        .status()
        .map_err(|err| err.to_string())?;
    ensure(status.code() == Some(0), || format!("analyze exited with {status}"))?;
    Ok(format!(
        "kappa factor >= {worst_k}, |c factor - 0.25| <= {worst_c:.2e}, PPA sublinear"
    ))
}

fn criterion_3() -> Check {
    for (x, y) in [(-1.0, 0.0), (0.0, 0.0), (1.0, 1.0)] {
        let bp = pair(ConvexFunction::positive_part(), &[x], &[y]);
        let k = estimate_subregularity_modulus(&bp, &SampleGrid::around(&bp)).map_err(e)?;
        ensure(k.holds(), || format!("not subregular at ({x}, {y})"))?;
    }
    let bp = pair(ConvexFunction::positive_part(), &[0.0], &[0.0]);
    let g = SampleGrid::around(&bp);
    let s = estimate_strong_subregularity_modulus(&bp, &g).map_err(e)?;
    ensure(!s.holds(), || "strong subregularity should fail at (0,0)".into())?;
    let iso = is_isolated(&solution_set(&bp.f, &bp.ystar).map_err(e)?, &bp.xbar);
    ensure(!iso, || "0 should not be isolated".into())?;
    let m = contingent_derivative_modulus(&bp).map_err(e)?;
    ensure(m.value == 0.0, || format!("contingent modulus {}", m.value))?;
    let link = check_contingent_link(&bp, &g).map_err(e)?;
    ensure(link.equivalence_ok, || format!("{link:?}"))?;
    Ok("subregular at 3 graph points, not strongly at (0,0), contingent modulus 0".into())
}

fn criterion_4() -> Check {
    let bp = pair(ConvexFunction::diagonal_quadratic(&[2.0, 4.0]).unwrap(), &[0.0, 0.0], &[0.0, 0.0]);
    let g = SampleGrid::around(&bp);
    near("hessian modulus", hessian_modulus(&bp.f, &bp.xbar).map_err(e)?, 2.0, TOL_EXACT)?;
    near("kappa", estimate_subregularity_modulus(&bp, &g).map_err(e)?.value, 0.5, TOL_QUADRATIC)?;
    near("strong growth c", estimate_strong_growth_constant(&bp, &g).map_err(e)?.value, 1.0, TOL_QUADRATIC)?;
    let pos = check_hessian_link(&bp, &g).map_err(e)?;
    ensure(pos.equivalence_ok && pos.isolated && pos.strong_class.holds(), || format!("{pos:?}"))?;

    let bp = pair(ConvexFunction::diagonal_quadratic(&[2.0, 0.0]).unwrap(), &[0.0, 0.0], &[0.0, 0.0]);
    let flat = check_hessian_link(&bp, &SampleGrid::around(&bp)).map_err(e)?;
    ensure(flat.equivalence_ok && !flat.isolated && !flat.strong_class.holds(), || format!("{flat:?}"))?;
    Ok("diag(2,4): hessian 2, kappa 0.5, c 1; diag(2,0): no strong growth, not isolated".into())
}

fn criterion_5() -> Check {
    let mut n = 0;
    for (name, bp) in catalog() {
        let chain = check_theorem_3_6(&bp, &SampleGrid::around(&bp)).map_err(e)?;
        ensure(chain.equivalence_ok, || format!("{name}: {chain:?}"))?;
        ensure(chain.c_mono >= chain.c_growth - TOL_BOUND, || format!("{name}: {chain:?}"))?;
        n += 1;
    }
    Ok(format!("{n} instances"))
}

fn criterion_6() -> Check {
    let p = |f| pair(f, &[0.0], &[0.0]);
    let r = check_sum_rule(&p(square()), &p(ConvexFunction::quadratic_1d(4.0))).map_err(e)?;
    near("c_f", r.c_f, 1.0, TOL_BOUND)?;
    near("c_g", r.c_g, 2.0, TOL_BOUND)?;
    near("c_sum", r.c_sum, 3.0, TOL_BOUND)?;
    let others = [
        check_sum_rule(&p(ConvexFunction::Abs), &p(square())).map_err(e)?,
        check_sum_rule(
            &pair(ConvexFunction::diagonal_quadratic(&[2.0, 4.0]).unwrap(), &[0.0, 0.0], &[0.0, 0.0]),
            &pair(ConvexFunction::diagonal_quadratic(&[2.0, 2.0]).unwrap(), &[0.0, 0.0], &[0.0, 0.0]),
        )
        .map_err(e)?,
    ];
    for s in others.iter().chain([&r]) {
        ensure(s.applicable && s.c_sum >= s.c_f + s.c_g - TOL_BOUND, || format!("{s:?}"))?;
    }
    Ok("c(x^2 + 2x^2) = 3 = 1 + 2; two more pairs".into())
}

fn criterion_7() -> Check {
    let bp = pair(square(), &[0.0], &[0.0]);
    let g = SampleGrid::around(&bp);
    ensure(check_prop_3_9(&bp, 1.0, &g).map_err(e)?.premise_holds, || "chord condition c=1 refuted".into())?;
    let r = check_prop_3_9(&bp, 1.5, &g).map_err(e)?;
    ensure(!r.premise_holds && r.premise_witness.is_some(), || "chord condition c=1.5 not refuted".into())?;
    let mut checked = 0;
    for (name, bp) in catalog() {
        let g = SampleGrid::around(&bp);
        for c in [0.25, 0.5, 1.0, 1.5, 2.0] {
            let r = check_prop_3_9(&bp, c, &g).map_err(e)?;
            ensure(r.implication_ok(), || format!("{name}, c = {c}: {r:?}"))?;
            checked += 1;
        }
    }
    Ok(format!("c=1 holds, c=1.5 refuted, implication held in {checked} cases"))
}

fn criterion_8() -> Check {
    let it = run_exact_ppa(&square(), &[1.0], &ProxSchedule::constant(2.0)).map_err(e)?;
    let q = match classify_rate(&it, &[0.0]).classification {
        RateClass::Linear { q } => q,
        other => return Err(format!("lambda = 2: {other:?}")),
    };
    near("q", q, 0.5, TOL_RATE_Q)?;
    let it = run_exact_ppa(&square(), &[1.0], &ProxSchedule::harmonic(2.0)).map_err(e)?;
    let h = classify_rate(&it, &[0.0]).classification;
    ensure(h == RateClass::Superlinear, || format!("harmonic: {h:?}"))?;
    let it = run_exact_ppa(&ConvexFunction::Abs, &[10.0], &ProxSchedule::constant(1.0)).map_err(e)?;
    let hit = it.iter().position(|i| i.x[0] == 0.0);
    ensure(hit == Some(10), || format!("|x| reached 0 at {hit:?}"))?;

    let mut gap: f64 = 0.0;
    for (f, x0) in [(square(), 1.0), (ConvexFunction::Abs, 10.0), (quartic(), 1.0), (kinked(), 2.0)] {
        for lambda in [0.5, 1.0, 2.0] {
            let gen = run_generalized_ppa(&f, x0, &vec![GeneralizedStep::Linear { lambda }; 30]).map_err(e)?;
            let exact =
                run_exact_ppa(&f, &[x0], &ProxSchedule::constant(lambda).with_max_iterations(30)).map_err(e)?;
            for (a, b) in gen.iter().zip(&exact) {
                gap = gap.max((a.x[0] - b.x[0]).abs());
            }
        }
    }
    ensure(gap <= TOL_GENERALIZED, || format!("generalized vs exact gap {gap}"))?;

    let dir = tempfile::tempdir().map_err(|err| err.to_string())?;
    let status = subreg_bin()
        .args([
            "prox",
            "--function",
            r#"{"kind":"quadratic","A":[[2]],"b":[0]}"#,
            "--x0",
            "1",
            "--schedule",
            r#"{"kind":"constant","lambda":2}"#,
            "--out",
        ])
        .arg(dir.path())
        .status()
        .map_err(|err| err.to_string())?;
    ensure(status.code() == Some(0), || format!("prox exited with {status}"))?;
    let v = read_json(&dir.path().join("rate.json"))?;
    let cls = &v["report"]["classification"];
    ensure(cls["class"] == "linear", || format!("rate.json: {cls}"))?;
    Ok(format!("q = {q}, harmonic superlinear, |x| in 10 steps, generalized gap {gap:.1e}"))
}

fn criterion_9() -> Check {
    let probes: Vec<Vec<f64>> = (-40..=40).map(|i| vec![i as f64 * 0.125]).collect();
    let conjugable = [
        ConvexFunction::quadratic_1d(1.0),
        square(),
        ConvexFunction::Abs,
        ConvexFunction::positive_part(),
        kinked(),
        unit_box(),
        ConvexFunction::sum(ConvexFunction::Abs, unit_box()).unwrap(),
        ConvexFunction::tilted(square(), vec![1.0]).unwrap(),
        ConvexFunction::scaled(ConvexFunction::Abs, 2.0).unwrap(),
    ];
    let mut worst: f64 = 0.0;
    for f in &conjugable {
        let b = check_biconjugation(f, &probes, TOL_BICONJUGATE).map_err(e)?;
        ensure(b.ok, || format!("{f:?}: f** gap {}", b.max_gap))?;
        worst = worst.max(b.max_gap);
        let law = check_inverse_subdifferential(&conjugate(f).map_err(e)?, &probes).map_err(e)?;
        ensure(law.ok(), || format!("{f:?}: inverse law fails at {:?}", law.failures))?;
    }
    for (name, bp) in [
        ("x^2/2", pair(ConvexFunction::quadratic_1d(1.0), &[0.0], &[0.0])),
        ("|x|", pair(ConvexFunction::Abs, &[0.0], &[0.0])),
        ("box", pair(unit_box(), &[0.0], &[-1.0])),
    ] {
        let r = check_corollary_4_3(&bp, &SampleGrid::around(&bp)).map_err(e)?;
        ensure(r.passes(), || format!("{name}: {r:?}"))?;
    }
    for (phi, calm) in [
        (ConvexFunction::quadratic_1d(1.0), true),
        (ConvexFunction::Abs, true),
        (quartic(), false),
    ] {
        let spec = SolutionMapSpec::new(phi, 1.0, 0.0).map_err(e)?;
        let grid = SampleGrid::new(vec![0.0], 0.5).map_err(e)?;
        let r = check_corollary_4_4(&spec, 0.0, 0.0, &grid).map_err(e)?;
        ensure(r.equivalence_ok() && r.calm.holds() == calm, || format!("{spec:?}: {r:?}"))?;
    }
    Ok(format!("max f** gap {worst:.1e}, inverse law, both dual equivalences"))
}

/// Independent sweep over a uniform grid of the neighborhood, using only the
/// set oracles.
fn brute_force(bp: &BasePair, growth: bool) -> f64 {
    let (x0, a, y) = (bp.xbar[0], bp.radius, bp.ystar[0]);
    let s = solution_set(&bp.f, &bp.ystar).unwrap();
    let fbar = bp.f.value(&bp.xbar).unwrap();
    let mut best = if growth { f64::INFINITY } else { 0.0 };
    for i in 0..=ORACLE_POINTS {
        let x = x0 - a + 2.0 * a * i as f64 / ORACLE_POINTS as f64;
        let d = s.distance(&[x]);
        if growth {
            let num = bp.f.value(&[x]).unwrap() - fbar - y * (x - x0);
            if d >= 1e-12 {
                best = best.min(num / (d * d));
            }
        } else {
            let sub = subdifferential(&bp.f, &[x]).unwrap();
            if sub.is_empty() {
                continue;
            }
            let den = sub.distance(&[y]);
            if den >= 1e-12 {
                best = best.max(d / den);
            } else if d >= 1e-8 {
                best = f64::INFINITY;
            }
        }
    }
    best
}

fn same(a: f64, b: f64) -> bool {
    a == b || (a - b).abs() <= TOL_ORACLE
}

fn run_suite(dir: &Path, seed: u64) -> Result<(Vec<u8>, Duration), String> {
    let start = Instant::now();
    let out = subreg_bin()
        .args(["suite", "--seed", &seed.to_string(), "--out"])
        .arg(dir)
        .output()
        .map_err(|err| err.to_string())?;
    let elapsed = start.elapsed();
    ensure(out.status.code() == Some(0), || {
        format!("suite exited with {}: {}", out.status, String::from_utf8_lossy(&out.stderr))
    })?;
    let csv = fs::read(dir.join("summary.csv")).map_err(|err| err.to_string())?;
    Ok((csv, elapsed))
}

fn pass_column(csv: &[u8]) -> Vec<String> {
    String::from_utf8_lossy(csv)
        .lines()
        .map(|l| {
            let cols: Vec<&str> = l.split(',').collect();
            format!("{},{},{}", cols[0], cols[1], cols[cols.len() - 1])
        })
        .collect()
}

fn criterion_10() -> Check {
    let mut n = 0;
    for (name, bp) in regular_1d() {
        let g = SampleGrid::around(&bp);
        let k = estimate_subregularity_modulus(&bp, &g).map_err(e)?.value;
        let kb = brute_force(&bp, false);
        ensure(same(k, kb), || format!("{name}: kappa {k} vs oracle {kb}"))?;
        let c = estimate_growth_constant(&bp, &g).map_err(e)?.value;
        let cb = brute_force(&bp, true);
        ensure(same(c, cb), || format!("{name}: c {c} vs oracle {cb}"))?;
        n += 1;
    }

    let dir = tempfile::tempdir().map_err(|err| err.to_string())?;
    let (first, t1) = run_suite(&dir.path().join("a"), 0)?;
    let (second, t2) = run_suite(&dir.path().join("b"), 0)?;
    ensure(first == second, || "suite output differs between identical runs".into())?;
    let (other, _) = run_suite(&dir.path().join("c"), 1)?;
    ensure(pass_column(&first) == pass_column(&other), || "pass column depends on the seed".into())?;
    let slowest = t1.max(t2);
    ensure(slowest < SUITE_BUDGET, || format!("suite took {slowest:?}"))?;
    Ok(format!("{n} instances match the oracle; suite byte-identical, {:.2}s", slowest.as_secs_f64()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("x^2 constants and bounds", criterion_1),
        ("x^4 negative classification", criterion_2),
        ("max(0,x) polyhedral regularity", criterion_3),
        ("quadratic hessian link", criterion_4),
        ("growth / monotone chain", criterion_5),
        ("sum rule", criterion_6),
        ("chord condition", criterion_7),
        ("proximal rates", criterion_8),
        ("duality", criterion_9),
        ("estimator soundness and suite determinism", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS  {:>2}  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  {:>2}  {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
