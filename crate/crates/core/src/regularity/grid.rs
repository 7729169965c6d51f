use crate::catalog::BasePair;
use crate::error::{Error, Result};
use crate::linalg::Vector;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Deterministic samples of the closed ball `𝔹_a(x̄)`: a symmetric tensor
/// grid clipped to the ball followed by seeded uniform points.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampleGrid {
    pub center: Vector,
    pub radius: f64,
    pub per_axis: usize,
    pub random: usize,
    pub seed: u64,
}

impl SampleGrid {
    pub const DEFAULT_PER_AXIS: usize = 41;
    pub const DEFAULT_RANDOM: usize = 200;

    pub fn new(center: Vector, radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::InvalidArgument(format!("grid radius must be positive, got {radius}")));
        }
        if center.is_empty() || center.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidArgument("grid center must be a finite vector".into()));
        }
        Ok(SampleGrid {
            center,
            radius,
            per_axis: Self::DEFAULT_PER_AXIS,
            random: Self::DEFAULT_RANDOM,
            seed: 0,
        })
    }

    /// Grid on `𝔹_a(x̄)` for a base pair.
    pub fn around(bp: &BasePair) -> Self {
        SampleGrid {
            center: bp.xbar.clone(),
            radius: bp.radius,
            per_axis: Self::DEFAULT_PER_AXIS,
            random: Self::DEFAULT_RANDOM,
            seed: 0,
        }
    }

    pub fn with_per_axis(mut self, k: usize) -> Self {
        self.per_axis = k.max(1);
        self
    }

    pub fn with_random(mut self, m: usize) -> Self {
        self.random = m;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_radius(&self, radius: f64) -> Self {
        SampleGrid {
            radius,
            ..self.clone()
        }
    }

    pub fn dim(&self) -> usize {
        self.center.len()
    }

    /// Points per axis actually used; in dimension `n > 2` it shrinks so that
    /// the tensor grid has at most `k²` points (parity preserved).
    pub fn effective_per_axis(&self) -> usize {
        let k = self.per_axis;
        let n = self.dim();
        if n <= 2 || k <= 3 {
            return k;
        }
        let budget = (k * k) as f64;
        let mut m = budget.powf(1.0 / n as f64).floor() as usize;
        while m.pow(n as u32) > k * k {
            m -= 1;
        }
        if m % 2 != k % 2 {
            m -= 1;
        }
        m.max(3)
    }

    /// Samples of the closed unit ball around the origin, in emission order.
    pub fn unit_samples(&self) -> Vec<Vector> {
        let n = self.dim();
        let k = self.effective_per_axis();
        let ticks: Vec<f64> = if k == 1 {
            vec![0.0]
        } else {
            let h = 2.0 / (k - 1) as f64;
            (0..k)
                .map(|i| {
                    // mirror the upper half so the grid is exactly symmetric
                    if 2 * i < k - 1 {
                        -1.0 + i as f64 * h
                    } else {
                        1.0 - (k - 1 - i) as f64 * h
                    }
                })
                .collect()
        };
        let mut out = Vec::new();
        let mut idx = vec![0usize; n];
        loop {
            let u: Vector = idx.iter().map(|&i| ticks[i]).collect();
            if u.iter().map(|v| v * v).sum::<f64>() <= 1.0 {
                out.push(u);
            }
            let mut d = 0;
            while d < n {
                idx[d] += 1;
                if idx[d] < k {
                    break;
                }
                idx[d] = 0;
                d += 1;
            }
            if d == n {
                break;
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let mut drawn = 0;
        while drawn < self.random {
            let u: Vector = (0..n).map(|_| rng.gen_range(-1.0..=1.0)).collect();
            if u.iter().map(|v| v * v).sum::<f64>() <= 1.0 {
                out.push(u);
                drawn += 1;
            }
        }
        out
    }

    /// Samples of `𝔹_r(x̄)`: the unit samples rescaled by `r`.
    pub fn samples_at(&self, r: f64) -> Vec<Vector> {
        self.unit_samples()
            .into_iter()
            .map(|u| u.iter().zip(&self.center).map(|(ui, ci)| ci + r * ui).collect())
            .collect()
    }

    pub fn samples(&self) -> Vec<Vector> {
        self.samples_at(self.radius)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg;

    #[test]
    fn samples_stay_in_the_ball() {
        let g = SampleGrid::new(vec![1.0, -2.0], 0.5).unwrap();
        for x in g.samples() {
            assert!(linalg::dist(&x, &g.center) <= 0.5 + 1e-15);
        }
    }

    #[test]
    fn grid_part_is_symmetric() {
        let g = SampleGrid::new(vec![0.0], 1.0).unwrap().with_random(0);
        let s = g.samples();
        assert_eq!(s.len(), 41);
        for (a, b) in s.iter().zip(s.iter().rev()) {
            assert_eq!(a[0], -b[0]);
        }
        assert!(s.contains(&vec![0.0]));
        assert!(s.contains(&vec![1.0]));
    }

    #[test]
    fn seeded_and_deterministic() {
        let g = SampleGrid::new(vec![0.0, 0.0], 1.0).unwrap();
        assert_eq!(g.samples(), g.samples());
        assert_ne!(g.samples(), g.clone().with_seed(1).samples());
    }

    #[test]
    fn high_dimensions_shrink_the_tensor_grid() {
        let g = SampleGrid::new(vec![0.0; 4], 1.0).unwrap();
        let k = g.effective_per_axis();
        assert!(k.pow(4) <= 41 * 41);
        assert_eq!(k % 2, 1);
    }
}
