#![allow(dead_code)]

use subreg::catalog::ConvexFunction;
use subreg::BasePair;

pub fn square() -> ConvexFunction {
    ConvexFunction::quadratic_1d(2.0)
}

pub fn quartic() -> ConvexFunction {
    ConvexFunction::power_even(4).unwrap()
}

pub fn unit_box() -> ConvexFunction {
    ConvexFunction::indicator_box(vec![0.0], vec![1.0]).unwrap()
}

pub fn kinked() -> ConvexFunction {
    ConvexFunction::max_affine(vec![vec![-2.0], vec![0.0], vec![1.0]], vec![-1.0, 0.0, -0.5]).unwrap()
}

/// One-dimensional catalog entries with every oracle available.
pub fn catalog_1d() -> Vec<ConvexFunction> {
    vec![
        square(),
        ConvexFunction::quadratic(vec![vec![1.0]], vec![0.5]).unwrap(),
        ConvexFunction::Abs,
        quartic(),
        ConvexFunction::power_even(6).unwrap(),
        ConvexFunction::positive_part(),
        kinked(),
        unit_box(),
        ConvexFunction::sum(ConvexFunction::Abs, square()).unwrap(),
        ConvexFunction::sum(square(), unit_box()).unwrap(),
        ConvexFunction::scaled(ConvexFunction::Abs, 2.0).unwrap(),
        ConvexFunction::tilted(square(), vec![1.0]).unwrap(),
    ]
}

/// Two-dimensional entries.
pub fn catalog_2d() -> Vec<ConvexFunction> {
    vec![
        ConvexFunction::diagonal_quadratic(&[2.0, 4.0]).unwrap(),
        ConvexFunction::quadratic(vec![vec![2.0, 1.0], vec![1.0, 2.0]], vec![0.0, 1.0]).unwrap(),
        ConvexFunction::separable(vec![ConvexFunction::Abs, square()]).unwrap(),
        ConvexFunction::indicator_box(vec![-1.0, 0.0], vec![1.0, 2.0]).unwrap(),
        ConvexFunction::max_affine(vec![vec![1.0, 0.0], vec![-1.0, 0.0], vec![0.0, 1.0], vec![0.0, -1.0]], vec![0.0; 4])
            .unwrap(),
    ]
}

/// Entries with an exact conjugate.
pub fn conjugable() -> Vec<ConvexFunction> {
    vec![
        ConvexFunction::quadratic_1d(1.0),
        square(),
        ConvexFunction::Abs,
        ConvexFunction::positive_part(),
        kinked(),
        unit_box(),
        ConvexFunction::scaled(ConvexFunction::Abs, 2.0).unwrap(),
        ConvexFunction::tilted(square(), vec![1.0]).unwrap(),
        ConvexFunction::sum(ConvexFunction::Abs, unit_box()).unwrap(),
    ]
}

pub fn pair(f: ConvexFunction, x: &[f64], y: &[f64]) -> BasePair {
    BasePair::new(f, x.to_vec(), y.to_vec(), 1.0).unwrap()
}

/// Base pairs spanning smooth, polyhedral, constrained and degenerate cases.
pub fn base_pairs() -> Vec<BasePair> {
    vec![
        pair(square(), &[0.0], &[0.0]),
        pair(quartic(), &[0.0], &[0.0]),
        pair(ConvexFunction::Abs, &[0.0], &[0.0]),
        pair(ConvexFunction::Abs, &[0.0], &[1.0]),
        pair(ConvexFunction::positive_part(), &[-1.0], &[0.0]),
        pair(ConvexFunction::positive_part(), &[0.0], &[0.0]),
        pair(ConvexFunction::positive_part(), &[1.0], &[1.0]),
        pair(kinked(), &[0.5], &[0.0]),
        pair(unit_box(), &[0.0], &[-1.0]),
        pair(unit_box(), &[0.5], &[0.0]),
        pair(ConvexFunction::sum(ConvexFunction::Abs, square()).unwrap(), &[0.0], &[0.0]),
        pair(ConvexFunction::tilted(square(), vec![1.0]).unwrap(), &[0.5], &[0.0]),
        pair(ConvexFunction::diagonal_quadratic(&[2.0, 4.0]).unwrap(), &[0.0, 0.0], &[0.0, 0.0]),
        pair(ConvexFunction::diagonal_quadratic(&[2.0, 0.0]).unwrap(), &[0.0, 0.0], &[0.0, 0.0]),
        pair(
            ConvexFunction::separable(vec![ConvexFunction::Abs, square()]).unwrap(),
            &[0.0, 0.0],
            &[0.0, 0.0],
        ),
    ]
}
