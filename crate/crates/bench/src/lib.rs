//! Fixtures shared by the criterion benchmarks.

use subreg::catalog::ConvexFunction;
use subreg::BasePair;

/// Named base pairs spanning smooth, polyhedral and constrained entries.
pub fn instances() -> Vec<(&'static str, BasePair)> {
    let pair = |f: ConvexFunction, x: Vec<f64>, y: Vec<f64>| BasePair::new(f, x, y, 1.0).expect("valid base pair");
    vec![
        ("square", pair(ConvexFunction::quadratic_1d(2.0), vec![0.0], vec![0.0])),
        ("quartic", pair(ConvexFunction::power_even(4).expect("even"), vec![0.0], vec![0.0])),
        ("positive_part", pair(ConvexFunction::positive_part(), vec![0.0], vec![0.0])),
        (
            "diag_2_4",
            pair(ConvexFunction::diagonal_quadratic(&[2.0, 4.0]).expect("diagonal"), vec![0.0; 2], vec![0.0; 2]),
        ),
    ]
}

/// Two-dimensional max-affine function whose prox goes through the simplex QP.
pub fn max_affine_2d() -> ConvexFunction {
    ConvexFunction::max_affine(
        vec![vec![1.0, 0.0], vec![-1.0, 0.5], vec![0.0, -1.0], vec![0.5, 0.5]],
        vec![0.0, 0.2, -0.1, 0.0],
    )
    .expect("valid slopes")
}

#[cfg(test)]
mod tests {
    #[test]
    fn fixtures_are_valid() {
        assert_eq!(super::instances().len(), 4);
        assert_eq!(super::max_affine_2d().dim(), 2);
    }
}
