//! Small dense linear algebra for n <= 4 (and simplex QPs with <= 8 variables).

pub type Vector = Vec<f64>;
pub type Matrix = Vec<Vec<f64>>;

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub fn sub(a: &[f64], b: &[f64]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[f64], b: &[f64]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale(a: &[f64], s: f64) -> Vector {
    a.iter().map(|x| x * s).collect()
}

pub fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

pub fn mat_vec(m: &Matrix, v: &[f64]) -> Vector {
    m.iter().map(|row| dot(row, v)).collect()
}

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect()
}

pub fn is_symmetric(m: &Matrix, tol: f64) -> bool {
    let n = m.len();
    m.iter().all(|r| r.len() == n)
        && (0..n).all(|i| (0..i).all(|j| (m[i][j] - m[j][i]).abs() <= tol))
}

/// Eigen-decomposition of a symmetric matrix.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    /// Eigenvalues in ascending order.
    pub values: Vector,
    /// Orthonormal eigenvectors, `vectors[k]` belongs to `values[k]`.
    pub vectors: Vec<Vector>,
}

impl SymmetricEigen {
    /// Cyclic Jacobi rotations until the off-diagonal mass drops below 1e-12.
    pub fn new(m: &Matrix) -> Self {
        let n = m.len();
        let mut a = m.clone();
        let mut v = identity(n);
        let scale = a
            .iter()
            .flatten()
            .fold(0.0f64, |acc, x| acc.max(x.abs()))
            .max(1.0);
        for _sweep in 0..100 {
            let off: f64 = (0..n)
                .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
                .map(|(i, j)| a[i][j] * a[i][j])
                .sum::<f64>()
                .sqrt();
            if off <= 1e-12 * scale {
                break;
            }
            for p in 0..n {
                for q in (p + 1)..n {
                    if a[p][q].abs() < 1e-300 {
                        continue;
                    }
                    let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                    let t = if theta == 0.0 { 1.0 } else { t };
                    let c = 1.0 / (t * t + 1.0).sqrt();
                    let s = t * c;
                    for k in 0..n {
                        let akp = a[k][p];
                        let akq = a[k][q];
                        a[k][p] = c * akp - s * akq;
                        a[k][q] = s * akp + c * akq;
                    }
                    for k in 0..n {
                        let apk = a[p][k];
                        let aqk = a[q][k];
                        a[p][k] = c * apk - s * aqk;
                        a[q][k] = s * apk + c * aqk;
                    }
                    for row in v.iter_mut() {
                        let vkp = row[p];
                        let vkq = row[q];
                        row[p] = c * vkp - s * vkq;
                        row[q] = s * vkp + c * vkq;
                    }
                }
            }
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| a[i][i].total_cmp(&a[j][j]));
        SymmetricEigen {
            values: order.iter().map(|&i| a[i][i]).collect(),
            vectors: order
                .iter()
                .map(|&i| (0..n).map(|k| v[k][i]).collect())
                .collect(),
        }
    }

    pub fn min(&self) -> f64 {
        self.values.first().copied().unwrap_or(f64::INFINITY)
    }

    fn cutoff(&self) -> f64 {
        let largest = self.values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        crate::tol::EIGEN * largest.max(1.0)
    }

    /// Orthonormal basis of the (numerical) null space.
    pub fn null_space(&self) -> Vec<Vector> {
        let cut = self.cutoff();
        self.values
            .iter()
            .zip(&self.vectors)
            .filter(|(l, _)| l.abs() <= cut)
            .map(|(_, q)| q.clone())
            .collect()
    }

    /// Minimum-norm least-squares solution of `M x = rhs`.
    pub fn pseudo_solve(&self, rhs: &[f64]) -> Vector {
        let cut = self.cutoff();
        let mut x = vec![0.0; rhs.len()];
        for (l, q) in self.values.iter().zip(&self.vectors) {
            if l.abs() > cut {
                let coef = dot(q, rhs) / l;
                for (xi, qi) in x.iter_mut().zip(q) {
                    *xi += coef * qi;
                }
            }
        }
        x
    }

    /// Solves `(M + shift I) x = rhs`; requires every `value + shift` to be nonzero.
    pub fn shifted_solve(&self, shift: f64, rhs: &[f64]) -> Vector {
        let mut x = vec![0.0; rhs.len()];
        for (l, q) in self.values.iter().zip(&self.vectors) {
            let coef = dot(q, rhs) / (l + shift);
            for (xi, qi) in x.iter_mut().zip(q) {
                *xi += coef * qi;
            }
        }
        x
    }
}

/// Gaussian elimination with partial pivoting. Returns `None` for (near) singular systems.
pub fn solve(m: &Matrix, rhs: &[f64]) -> Option<Vector> {
    let n = rhs.len();
    let mut a: Vec<Vec<f64>> = m
        .iter()
        .zip(rhs)
        .map(|(row, r)| {
            let mut row = row.clone();
            row.push(*r);
            row
        })
        .collect();
    let scale = m.iter().flatten().fold(0.0f64, |acc, x| acc.max(x.abs())).max(1e-300);
    for col in 0..n {
        let pivot = (col..n).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        if a[pivot][col].abs() <= 1e-12 * scale {
            return None;
        }
        a.swap(col, pivot);
        for row in (col + 1)..n {
            let factor = a[row][col] / a[col][col];
            if factor != 0.0 {
                for k in col..=n {
                    a[row][k] -= factor * a[col][k];
                }
            }
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let s: f64 = ((row + 1)..n).map(|k| a[row][k] * x[k]).sum();
        x[row] = (a[row][n] - s) / a[row][row];
    }
    Some(x)
}

/// Minimizes `½ μᵀQμ − cᵀμ` over the probability simplex by enumerating supports.
///
/// `Q` must be positive semidefinite. Every support whose KKT system is
/// nonsingular is solved; feasible KKT points are compared by objective.
/// Intended for at most [`crate::tol::MAX_VERTICES`] variables.
pub fn simplex_qp(q: &Matrix, c: &[f64]) -> Vector {
    let m = c.len();
    debug_assert!((1..=16).contains(&m));
    let objective = |mu: &[f64]| 0.5 * dot(mu, &mat_vec(q, mu)) - dot(c, mu);
    let mut best: Option<(f64, Vector)> = None;
    for mask in 1u32..(1u32 << m) {
        let support: Vec<usize> = (0..m).filter(|i| mask & (1 << i) != 0).collect();
        let k = support.len();
        let mut kkt = vec![vec![0.0; k + 1]; k + 1];
        let mut rhs = vec![0.0; k + 1];
        for (a, &i) in support.iter().enumerate() {
            for (b, &j) in support.iter().enumerate() {
                kkt[a][b] = q[i][j];
            }
            kkt[a][k] = -1.0;
            kkt[k][a] = 1.0;
            rhs[a] = c[i];
        }
        rhs[k] = 1.0;
        let Some(sol) = solve(&kkt, &rhs) else {
            continue;
        };
        if sol[..k].iter().any(|&w| w < -1e-12) {
            continue;
        }
        let nu = sol[k];
        let mut mu = vec![0.0; m];
        for (a, &i) in support.iter().enumerate() {
            mu[i] = sol[a].max(0.0);
        }
        let total: f64 = mu.iter().sum();
        mu.iter_mut().for_each(|w| *w /= total);
        let grad: Vector = sub(&mat_vec(q, &mu), c);
        let slack = 1e-9 * (1.0 + nu.abs());
        if (0..m)
            .filter(|i| mask & (1 << i) == 0)
            .any(|j| grad[j] < nu - slack)
        {
            continue;
        }
        let val = objective(&mu);
        if best.as_ref().is_none_or(|(b, _)| val < *b) {
            best = Some((val, mu));
        }
    }
    // A convex QP on the simplex always has a KKT point with affinely
    // independent support, so `best` is populated.
    best.map(|(_, mu)| mu).unwrap_or_else(|| {
        let mut mu = vec![0.0; m];
        mu[0] = 1.0;
        mu
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jacobi_eigenvalues_of_coupled_matrix() {
        // characteristic polynomial (2 - l)^2 - 1 has roots 1 and 3
        let e = SymmetricEigen::new(&vec![vec![2.0, 1.0], vec![1.0, 2.0]]);
        assert!((e.values[0] - 1.0).abs() < 1e-12);
        assert!((e.values[1] - 3.0).abs() < 1e-12);
        let v = &e.vectors[0];
        assert!((v[0] + v[1]).abs() < 1e-12);
    }

    #[test]
    fn jacobi_reconstructs_4x4() {
        let m = vec![
            vec![4.0, 1.0, 0.5, 0.0],
            vec![1.0, 3.0, 0.2, 0.1],
            vec![0.5, 0.2, 2.0, 0.3],
            vec![0.0, 0.1, 0.3, 1.0],
        ];
        let e = SymmetricEigen::new(&m);
        for (l, q) in e.values.iter().zip(&e.vectors) {
            let mq = mat_vec(&m, q);
            for (a, b) in mq.iter().zip(q) {
                assert!((a - l * b).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn pseudo_solve_is_minimum_norm() {
        let e = SymmetricEigen::new(&vec![vec![2.0, 0.0], vec![0.0, 0.0]]);
        let x = e.pseudo_solve(&[4.0, 0.0]);
        assert_eq!(x.len(), 2);
        assert!((x[0] - 2.0).abs() < 1e-14 && x[1].abs() < 1e-14);
        assert_eq!(e.null_space().len(), 1);
    }

    #[test]
    fn solve_rejects_singular() {
        assert!(solve(&vec![vec![1.0, 2.0], vec![2.0, 4.0]], &[1.0, 2.0]).is_none());
        let x = solve(&vec![vec![0.0, 1.0], vec![1.0, 0.0]], &[3.0, 5.0]).unwrap();
        assert_eq!(x, vec![5.0, 3.0]);
    }

    #[test]
    fn simplex_qp_projects_onto_triangle() {
        // projection of (1,1) onto conv{(0,0),(1,0),(0,1)} is (1/2,1/2)
        let v = [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]];
        let q: Matrix = v.iter().map(|a| v.iter().map(|b| dot(a, b)).collect()).collect();
        let c: Vector = v.iter().map(|a| dot(a, &[1.0, 1.0])).collect();
        let mu = simplex_qp(&q, &c);
        let p = [mu[1], mu[2]];
        assert!((p[0] - 0.5).abs() < 1e-12 && (p[1] - 0.5).abs() < 1e-12);
    }
}
