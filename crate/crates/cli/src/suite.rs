//! The acceptance matrix: one row per (instance, check) with the expected
//! value, the measured value and a verdict.

use crate::args::SuiteArgs;
use crate::io::{write_atomic, CliResult};
use std::fmt::{Display, Write as _};
use subreg::catalog::{prox, sets_equal, solution_set, ConvexFunction, ConvexSet};
use subreg::duality::{
    calmness_bridge, check_biconjugation, check_corollary_4_3, check_corollary_4_4, check_inverse_subdifferential,
    conjugate, solution_map_eval, SolutionMapSpec,
};
use subreg::proximal::{
    classify_rate, run_exact_ppa, run_generalized_ppa, GeneralizedStep, RateClass,
};
use subreg::regularity::{
    check_contingent_link, check_hessian_link, check_prop_3_9, check_sum_rule, check_theorem_2_1,
    check_theorem_3_1, check_theorem_3_6, contingent_derivative_modulus, estimate_growth_constant,
    estimate_strong_growth_constant, estimate_strong_subregularity_modulus, estimate_subregularity_modulus,
    hessian_modulus, is_isolated, probe_growth,
};
use subreg::{BasePair, Classification, ProxSchedule, Result, SampleGrid};

#[derive(Clone, Debug, PartialEq)]
pub struct Row {
    pub instance: String,
    pub check: String,
    pub expected: String,
    pub measured: String,
    pub pass: bool,
}

/// CSV cells never need quoting: separators inside values are replaced.
fn cell(s: impl Display) -> String {
    s.to_string().replace([',', '\n'], ";")
}

fn vec_str(v: &[f64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(";"))
}

fn class_str(c: Classification) -> &'static str {
    match c {
        Classification::Holds => "holds",
        Classification::Fails => "fails",
        Classification::Degenerate => "degenerate",
    }
}

fn rate_str(r: RateClass) -> String {
    match r {
        RateClass::Linear { q } => format!("linear({q})"),
        other => format!("{other:?}").to_lowercase(),
    }
}

struct Table {
    seed: u64,
    rows: Vec<Row>,
}

impl Table {
    fn push(&mut self, instance: &str, check: &str, expected: impl Display, measured: impl Display, pass: bool) {
        self.rows.push(Row {
            instance: cell(instance),
            check: cell(check),
            expected: cell(expected),
            measured: cell(measured),
            pass,
        });
    }

    fn close(&mut self, instance: &str, check: &str, target: f64, tol: f64, measured: f64) {
        let pass = (measured - target).abs() <= tol;
        self.push(instance, check, format!("{target} ± {tol:e}"), measured, pass);
    }

    fn at_least(&mut self, instance: &str, check: &str, bound: f64, measured: f64) {
        self.push(instance, check, format!(">= {bound}"), measured, measured >= bound);
    }

    fn truth(&mut self, instance: &str, check: &str, expected: bool, measured: bool) {
        self.push(instance, check, expected, measured, expected == measured);
    }

    fn class(&mut self, instance: &str, check: &str, expected: Classification, measured: Classification) {
        self.push(instance, check, class_str(expected), class_str(measured), expected == measured);
    }

    /// Runs a block of checks; an error becomes a failing row.
    fn guard(&mut self, instance: &str, block: impl FnOnce(&mut Table) -> Result<()>) {
        if let Err(e) = block(self) {
            self.push(instance, "error", "none", e, false);
        }
    }

    fn grid(&self, bp: &BasePair) -> SampleGrid {
        SampleGrid::around(bp).with_seed(self.seed)
    }
}

fn pair(f: ConvexFunction, x: &[f64], y: &[f64]) -> BasePair {
    BasePair::new(f, x.to_vec(), y.to_vec(), 1.0).expect("suite base pairs are valid")
}

fn square() -> ConvexFunction {
    ConvexFunction::quadratic_1d(2.0)
}

fn quartic() -> ConvexFunction {
    ConvexFunction::power_even(4).expect("even power")
}

fn diag(d: &[f64]) -> ConvexFunction {
    ConvexFunction::diagonal_quadratic(d).expect("diagonal")
}

fn unit_box() -> ConvexFunction {
    ConvexFunction::indicator_box(vec![0.0], vec![1.0]).expect("box")
}

fn kinked() -> ConvexFunction {
    ConvexFunction::max_affine(vec![vec![-2.0], vec![0.0], vec![1.0]], vec![-1.0, 0.0, -0.5]).expect("max-affine")
}

/// Base pairs on which the growth/monotone chain and the chord condition are
/// exercised.
fn catalog() -> Vec<(&'static str, BasePair)> {
    let abs = || ConvexFunction::Abs;
    vec![
        ("x^2@(0;0)", pair(square(), &[0.0], &[0.0])),
        ("x^4@(0;0)", pair(quartic(), &[0.0], &[0.0])),
        ("|x|@(0;0)", pair(abs(), &[0.0], &[0.0])),
        ("|x|@(0;0.5)", pair(abs(), &[0.0], &[0.5])),
        ("max(0;x)@(-1;0)", pair(ConvexFunction::positive_part(), &[-1.0], &[0.0])),
        ("max(0;x)@(0;0)", pair(ConvexFunction::positive_part(), &[0.0], &[0.0])),
        ("max(0;x)@(1;1)", pair(ConvexFunction::positive_part(), &[1.0], &[1.0])),
        ("kinked@(0.5;0)", pair(kinked(), &[0.5], &[0.0])),
        ("box[0;1]@(0;-1)", pair(unit_box(), &[0.0], &[-1.0])),
        ("|x|+x^2@(0;0)", pair(ConvexFunction::sum(abs(), square()).expect("sum"), &[0.0], &[0.0])),
        ("2|x|@(0;1)", pair(ConvexFunction::scaled(abs(), 2.0).expect("scaled"), &[0.0], &[1.0])),
        (
            "x^2-x@(0.5;0)",
            pair(ConvexFunction::tilted(square(), vec![1.0]).expect("tilted"), &[0.5], &[0.0]),
        ),
        ("diag(2;4)@0", pair(diag(&[2.0, 4.0]), &[0.0, 0.0], &[0.0, 0.0])),
        ("diag(2;0)@0", pair(diag(&[2.0, 0.0]), &[0.0, 0.0], &[0.0, 0.0])),
        (
            "[[2;1];[1;2]]@0",
            pair(
                ConvexFunction::quadratic(vec![vec![2.0, 1.0], vec![1.0, 2.0]], vec![0.0, 0.0]).expect("quadratic"),
                &[0.0, 0.0],
                &[0.0, 0.0],
            ),
        ),
        (
            "sep(|x|;x^2)@0",
            pair(ConvexFunction::separable(vec![abs(), square()]).expect("separable"), &[0.0, 0.0], &[0.0, 0.0]),
        ),
    ]
}

/// Ratios of consecutive sweep values (smaller radius over larger).
fn halving_factors(values: &[f64]) -> Vec<f64> {
    values.windows(2).map(|w| w[1] / w[0]).collect()
}

fn square_block(t: &mut Table) {
    let name = "regularity/x^2@(0;0)";
    t.guard(name, |t| {
        let bp = pair(square(), &[0.0], &[0.0]);
        let g = t.grid(&bp);
        let k = estimate_subregularity_modulus(&bp, &g)?;
        t.close(name, "kappa", 0.5, 1e-6, k.value);
        let c = estimate_growth_constant(&bp, &g)?;
        t.close(name, "growth c", 1.0, 1e-6, c.value);
        let cs = estimate_strong_growth_constant(&bp, &g)?;
        t.close(name, "strong growth c", 1.0, 1e-6, cs.value);
        let th = check_theorem_2_1(&bp, &g)?;
        t.truth(name, "c >= 1/(4 kappa)", true, th.forward_ok);
        t.truth(name, "kappa <= 1/c", true, th.backward_ok);
        t.truth(name, "subregularity iff growth", true, th.passes());
        let st = check_theorem_3_1(&bp, &g)?;
        t.truth(name, "strong subregularity iff strong growth", true, st.passes());
        let witness = probe_growth(&bp, 1.0 / k.value, &g, true)?;
        let measured = witness.as_deref().map_or("none".to_string(), |w| format!("witness x={}", vec_str(w)));
        t.push(name, "strong growth with c = 1/kappa = 2", "refuted", measured, witness.is_some());
        Ok(())
    });
}

fn quartic_block(t: &mut Table) {
    let name = "regularity/x^4@(0;0)";
    t.guard(name, |t| {
        let bp = pair(quartic(), &[0.0], &[0.0]);
        let g = t.grid(&bp);
        let k = estimate_subregularity_modulus(&bp, &g)?;
        t.class(name, "subregularity", Classification::Fails, k.classification);
        let kf = halving_factors(&k.sweep_values()).into_iter().fold(f64::INFINITY, f64::min);
        t.at_least(name, "kappa factor per halving", 3.9, kf);
        let c = estimate_growth_constant(&bp, &g)?;
        t.class(name, "growth", Classification::Fails, c.classification);
        let cf = halving_factors(&c.sweep_values())
            .into_iter()
            .max_by(|a, b| (a - 0.25).abs().total_cmp(&(b - 0.25).abs()))
            .unwrap_or(f64::NAN);
        t.close(name, "c factor per halving", 0.25, 0.01, cf);
        t.truth(name, "subregularity iff growth", true, check_theorem_2_1(&bp, &g)?.passes());
        Ok(())
    });
}

fn polyhedral_block(t: &mut Table) {
    for (x, y) in [(-1.0, 0.0), (0.0, 0.0), (1.0, 1.0)] {
        let name = format!("regularity/max(0;x)@({x};{y})");
        t.guard(&name, |t| {
            let bp = pair(ConvexFunction::positive_part(), &[x], &[y]);
            let k = estimate_subregularity_modulus(&bp, &t.grid(&bp))?;
            t.class(&name, "subregularity", Classification::Holds, k.classification);
            Ok(())
        });
    }
    let name = "regularity/max(0;x)@(0;0)";
    t.guard(name, |t| {
        let bp = pair(ConvexFunction::positive_part(), &[0.0], &[0.0]);
        let g = t.grid(&bp);
        let s = estimate_strong_subregularity_modulus(&bp, &g)?;
        t.class(name, "strong subregularity", Classification::Fails, s.classification);
        let iso = is_isolated(&solution_set(&bp.f, &bp.ystar)?, &bp.xbar);
        t.truth(name, "isolated", false, iso);
        let m = contingent_derivative_modulus(&bp)?;
        t.close(name, "contingent modulus", 0.0, 0.0, m.value);
        t.truth(name, "contingent modulus > 0 iff strong subregularity", true, check_contingent_link(&bp, &g)?.equivalence_ok);
        Ok(())
    });
}

fn quadratic_block(t: &mut Table) {
    let name = "regularity/diag(2;4)@0";
    t.guard(name, |t| {
        let bp = pair(diag(&[2.0, 4.0]), &[0.0, 0.0], &[0.0, 0.0]);
        let g = t.grid(&bp);
        t.close(name, "hessian modulus", 2.0, 1e-12, hessian_modulus(&bp.f, &bp.xbar)?);
        t.close(name, "kappa", 0.5, 1e-3, estimate_subregularity_modulus(&bp, &g)?.value);
        t.close(name, "strong growth c", 1.0, 1e-3, estimate_strong_growth_constant(&bp, &g)?.value);
        let link = check_hessian_link(&bp, &g)?;
        t.truth(name, "isolated", true, link.isolated);
        t.truth(name, "hessian > 0 iff strong growth", true, link.equivalence_ok);
        Ok(())
    });
    let name = "regularity/diag(2;0)@0";
    t.guard(name, |t| {
        let bp = pair(diag(&[2.0, 0.0]), &[0.0, 0.0], &[0.0, 0.0]);
        let g = t.grid(&bp);
        let link = check_hessian_link(&bp, &g)?;
        t.class(name, "strong growth", Classification::Fails, link.strong_class);
        t.truth(name, "isolated", false, link.isolated);
        t.truth(name, "hessian > 0 iff strong growth", true, link.equivalence_ok);
        Ok(())
    });
}

fn chain_block(t: &mut Table) {
    for (label, bp) in catalog() {
        let name = format!("regularity/{label}");
        t.guard(&name, |t| {
            let chain = check_theorem_3_6(&bp, &t.grid(&bp))?;
            t.truth(&name, "strong growth iff monotone modulus > 0", true, chain.equivalence_ok);
            t.at_least(&name, "c_mono - c_growth", -1e-9, chain.c_mono - chain.c_growth);
            Ok(())
        });
    }
}

fn sum_block(t: &mut Table) {
    let pairs = [
        ("x^2+2x^2", square(), ConvexFunction::quadratic_1d(4.0), vec![0.0]),
        ("|x|+x^2", ConvexFunction::Abs, square(), vec![0.0]),
        ("diag(2;4)+diag(2;2)", diag(&[2.0, 4.0]), diag(&[2.0, 2.0]), vec![0.0, 0.0]),
    ];
    for (label, f, g, x) in pairs {
        let name = format!("regularity/sum {label}");
        t.guard(&name, |t| {
            let r = check_sum_rule(&pair(f, &x, &x), &pair(g, &x, &x))?;
            t.at_least(&name, "c_sum - c_f - c_g", -1e-9, r.c_sum - r.c_f - r.c_g);
            t.truth(&name, "sum rule", true, r.applicable && r.ok);
            if label == "x^2+2x^2" {
                t.close(&name, "c_f", 1.0, 1e-9, r.c_f);
                t.close(&name, "c_g", 2.0, 1e-9, r.c_g);
                t.close(&name, "c_sum", 3.0, 1e-9, r.c_sum);
            }
            Ok(())
        });
    }
}

fn chord_block(t: &mut Table) {
    let name = "regularity/x^2@(0;0)";
    t.guard(name, |t| {
        let bp = pair(square(), &[0.0], &[0.0]);
        let g = t.grid(&bp);
        t.truth(name, "chord condition c=1", true, check_prop_3_9(&bp, 1.0, &g)?.premise_holds);
        t.truth(name, "chord condition c=1.5", false, check_prop_3_9(&bp, 1.5, &g)?.premise_holds);
        Ok(())
    });
    for (label, bp) in catalog() {
        let name = format!("regularity/{label}");
        t.guard(&name, |t| {
            let g = t.grid(&bp);
            for c in [0.5, 1.0] {
                let r = check_prop_3_9(&bp, c, &g)?;
                t.truth(&name, &format!("chord condition implies minorant c={c}"), true, r.implication_ok());
            }
            Ok(())
        });
    }
}

fn proximal_block(t: &mut Table) {
    let runs: [(&str, ConvexFunction, f64, ProxSchedule, &str); 4] = [
        ("x^2 lambda=2", square(), 1.0, ProxSchedule::constant(2.0), "linear(0.5)"),
        ("x^2 harmonic lambda0=2", square(), 1.0, ProxSchedule::harmonic(2.0), "superlinear"),
        ("|x| lambda=1", ConvexFunction::Abs, 10.0, ProxSchedule::constant(1.0), "finite"),
        ("x^4 lambda=1", quartic(), 1.0, ProxSchedule::constant(1.0), "sublinear"),
    ];
    for (label, f, x0, sched, expected) in runs {
        let name = format!("proximal/{label}");
        t.guard(&name, |t| {
            let it = run_exact_ppa(&f, &[x0], &sched)?;
            let r = classify_rate(&it, &[0.0]);
            let got = rate_str(r.classification);
            let pass = match r.classification {
                RateClass::Linear { q } => expected == "linear(0.5)" && (q - 0.5).abs() < 1e-6,
                _ => got == expected,
            };
            t.push(&name, "rate", expected, &got, pass);
            if label.starts_with("|x|") {
                let hit = it.iter().position(|i| i.x[0] == 0.0).map_or(-1, |n| n as i64);
                t.push(&name, "steps to reach 0", 10, hit, hit == 10);
            }
            Ok(())
        });
    }
    let runs = [
        ("x^2", square(), 1.0, 2.0),
        ("|x|", ConvexFunction::Abs, 10.0, 1.0),
        ("x^4", quartic(), 1.0, 1.0),
    ];
    for (label, f, x0, lambda) in runs {
        let name = format!("proximal/generalized {label} lambda={lambda}");
        t.guard(&name, |t| {
            let steps = vec![GeneralizedStep::Linear { lambda }; 30];
            let gen = run_generalized_ppa(&f, x0, &steps)?;
            let exact = run_exact_ppa(&f, &[x0], &ProxSchedule::constant(lambda).with_max_iterations(30))?;
            let gap = gen
                .iter()
                .zip(&exact)
                .map(|(a, b)| (a.x[0] - b.x[0]).abs())
                .fold(0.0, f64::max);
            t.push(&name, "max |generalized - exact|", "<= 1e-10", gap, gap <= 1e-10);
            Ok(())
        });
    }
}

fn probes_1d() -> Vec<Vec<f64>> {
    (-20..=20).map(|i| vec![i as f64 * 0.25]).collect()
}

fn probes_2d() -> Vec<Vec<f64>> {
    let mut out = Vec::new();
    for i in -4..=4 {
        for j in -4..=4 {
            out.push(vec![i as f64 * 0.75, j as f64 * 0.75]);
        }
    }
    out
}

fn conjugate_block(t: &mut Table) {
    let entries: Vec<(&str, ConvexFunction)> = vec![
        ("x^2/2", ConvexFunction::quadratic_1d(1.0)),
        ("|x|", ConvexFunction::Abs),
        ("max(0;x)", ConvexFunction::positive_part()),
        ("kinked", kinked()),
        ("box[0;1]", unit_box()),
        ("diag(2;4)", diag(&[2.0, 4.0])),
        ("sep(|x|;x^2)", ConvexFunction::separable(vec![ConvexFunction::Abs, square()]).expect("separable")),
    ];
    for (label, f) in entries {
        let name = format!("duality/{label}");
        t.guard(&name, |t| {
            let probes = if f.dim() == 1 { probes_1d() } else { probes_2d() };
            let b = check_biconjugation(&f, &probes, 1e-6)?;
            t.push(&name, "max |f** - f|", "<= 1e-6", b.max_gap, b.ok);
            let law = check_inverse_subdifferential(&conjugate(&f)?, &probes)?;
            t.push(&name, "inverse law failures", 0, law.failures.len(), law.ok());
            Ok(())
        });
    }
    let known: [(&str, ConvexFunction, ConvexFunction); 3] = [
        ("x^2/2", ConvexFunction::quadratic_1d(1.0), ConvexFunction::quadratic_1d(1.0)),
        ("|x|", ConvexFunction::Abs, ConvexFunction::indicator_box(vec![-1.0], vec![1.0]).expect("box")),
        ("max(0;x)", ConvexFunction::positive_part(), unit_box()),
    ];
    for (label, f, want) in known {
        let name = format!("duality/{label}");
        t.guard(&name, |t| {
            let got = conjugate(&f)?.conjugate;
            let mut gap: f64 = 0.0;
            for y in probes_1d() {
                let (a, b) = (got.value(&y)?, want.value(&y)?);
                gap = gap.max(if a == b { 0.0 } else { (a - b).abs() });
            }
            t.push(&name, "conjugate matches closed form", "0", gap, gap <= 1e-12);
            Ok(())
        });
    }
    let name = "duality/x^2/2";
    t.guard(name, |t| {
        let pair = conjugate(&ConvexFunction::quadratic_1d(1.0))?;
        let mut gap: f64 = 0.0;
        for y in [-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0] {
            let s = pair.numeric_fallback(y)?;
            gap = gap.max((s.value - 0.5 * y * y).abs());
        }
        t.push(name, "grid-sup fallback error", "<= 1e-6", gap, gap <= 1e-6);
        Ok(())
    });
}

fn calmness_block(t: &mut Table) {
    let instances = [
        ("x^2/2@(0;0)", pair(ConvexFunction::quadratic_1d(1.0), &[0.0], &[0.0])),
        ("|x|@(0;0)", pair(ConvexFunction::Abs, &[0.0], &[0.0])),
        ("box[0;1]@(0;-1)", pair(unit_box(), &[0.0], &[-1.0])),
    ];
    for (label, bp) in instances {
        let name = format!("duality/{label}");
        t.guard(&name, |t| {
            let g = t.grid(&bp);
            let r = check_corollary_4_3(&bp, &g)?;
            t.truth(&name, "calm iff dual growth", true, r.calm_equivalence());
            t.truth(&name, "isolated calm iff dual strong growth", true, r.isolated_equivalence());
            let b = calmness_bridge(&bp, &g, 2.0)?;
            t.push(
                &name,
                "calmness vs dual subregularity",
                "within 10%",
                format!("{} vs {}", b.kappa_calm, b.kappa_dual),
                b.agree,
            );
            Ok(())
        });
    }
}

fn solution_map_block(t: &mut Table) {
    let evals = [
        ("|y| x=0.5", ConvexFunction::Abs, 0.5, ConvexSet::singleton(vec![0.0])),
        ("|y| x=1", ConvexFunction::Abs, 1.0, ConvexSet::interval(f64::NEG_INFINITY, 0.0).expect("interval")),
        ("y^2/2 x=2", ConvexFunction::quadratic_1d(1.0), 2.0, ConvexSet::singleton(vec![-2.0])),
    ];
    for (label, phi, x, want) in evals {
        let name = format!("duality/solution map {label}");
        t.guard(&name, |t| {
            let got = solution_map_eval(&SolutionMapSpec::new(phi, 1.0, 0.0)?, x)?;
            t.push(&name, "S(x)", format!("{want:?}"), format!("{got:?}"), sets_equal(&got, &want, 1e-12));
            Ok(())
        });
    }
    let specs = [
        ("y^2/2", ConvexFunction::quadratic_1d(1.0), Classification::Holds),
        ("|y|", ConvexFunction::Abs, Classification::Holds),
        ("y^4", quartic(), Classification::Fails),
    ];
    for (label, phi, calm) in specs {
        let name = format!("duality/solution map {label}");
        t.guard(&name, |t| {
            let spec = SolutionMapSpec::new(phi, 1.0, 0.0)?;
            let grid = SampleGrid::new(vec![0.0], 0.5)?.with_seed(t.seed);
            let r = check_corollary_4_4(&spec, 0.0, 0.0, &grid)?;
            t.class(&name, "calmness of S", calm, r.calm);
            t.truth(&name, "calm iff growth", true, r.equivalence_ok());
            t.truth(&name, "strong growth implies isolated calm", true, r.implication_ok());
            Ok(())
        });
    }
}

/// Sanity rows for the prox oracle itself.
fn prox_oracle_block(t: &mut Table) {
    let name = "proximal/soft threshold";
    t.guard(name, |t| {
        let got = prox(&ConvexFunction::Abs, 1.0, &[2.5])?[0];
        t.close(name, "prox(|x|;1;2.5)", 1.5, 1e-15, got);
        Ok(())
    });
}

pub fn run_rows(seed: u64) -> Vec<Row> {
    let mut t = Table { seed, rows: Vec::new() };
    square_block(&mut t);
    quartic_block(&mut t);
    polyhedral_block(&mut t);
    quadratic_block(&mut t);
    chain_block(&mut t);
    sum_block(&mut t);
    chord_block(&mut t);
    prox_oracle_block(&mut t);
    proximal_block(&mut t);
    conjugate_block(&mut t);
    calmness_block(&mut t);
    solution_map_block(&mut t);
    t.rows
}

pub fn to_csv(rows: &[Row]) -> String {
    let mut out = String::from("instance,check,expected,measured,pass\n");
    for r in rows {
        let _ = writeln!(out, "{},{},{},{},{}", r.instance, r.check, r.expected, r.measured, r.pass);
    }
    out
}

pub fn suite(a: &SuiteArgs) -> CliResult<Vec<String>> {
    let mut rows = run_rows(a.seed);
    if let Some(f) = &a.filter {
        rows.retain(|r| format!("{}/{}", r.instance, r.check).contains(f.as_str()));
    }
    write_atomic(&a.out.out, "summary.csv", &to_csv(&rows))?;
    let failed: Vec<String> = rows
        .iter()
        .filter(|r| !r.pass)
        .map(|r| format!("{}/{} (expected {}, measured {})", r.instance, r.check, r.expected, r.measured))
        .collect();
    println!("{} rows, {} failed", rows.len(), failed.len());
    Ok(failed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cells_never_need_quoting() {
        assert_eq!(cell("a,b\nc"), "a;b;c");
        assert_eq!(vec_str(&[1.0, -0.5]), "(1;-0.5)");
    }

    #[test]
    fn rate_labels() {
        assert_eq!(rate_str(RateClass::Linear { q: 0.5 }), "linear(0.5)");
        assert_eq!(rate_str(RateClass::Superlinear), "superlinear");
    }

    #[test]
    fn guard_turns_errors_into_failing_rows() {
        let mut t = Table { seed: 0, rows: vec![] };
        t.guard("x", |_| Err(subreg::Error::EmptySolutionSet));
        assert_eq!(t.rows.len(), 1);
        assert!(!t.rows[0].pass);
        assert_eq!(t.rows[0].check, "error");
    }
}
