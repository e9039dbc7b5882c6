//! Cyclic Jacobi eigensolver for dense real symmetric matrices.
//!
//! Rotations sweep all off-diagonal pairs in row order until the
//! off-diagonal Frobenius norm drops below a scale-relative threshold
//! (1e-12 relative to the input norm, so matrices with entries well
//! above 1 still converge), with a hard cap of 100 sweeps. Plenty for
//! the matrix sizes seen here (n ≤ 30).

const MAX_SWEEPS: usize = 100;

/// Diagonalizes a symmetric matrix. Returns `(values, vectors)` where
/// `vectors[k]` is the unit eigenvector for `values[k]`. No ordering is
/// imposed; callers sort as needed.
pub(crate) fn jacobi_eigen(m: &[Vec<f64>]) -> (Vec<f64>, Vec<Vec<f64>>) {
    let n = m.len();
    let mut a: Vec<Vec<f64>> = m.to_vec();
    let mut v: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    if n <= 1 {
        return (a.iter().enumerate().map(|(i, r)| r[i]).collect(), v);
    }

    let frobenius: f64 = a
        .iter()
        .flat_map(|row| row.iter())
        .map(|x| x * x)
        .sum::<f64>()
        .sqrt();
    let tol = 1e-12 * (1.0 + frobenius);

    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
            .map(|(i, j)| 2.0 * a[i][j] * a[i][j])
            .sum::<f64>()
            .sqrt();
        if off < tol {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p][q];
                if apq.abs() < f64::MIN_POSITIVE {
                    continue;
                }
                let tau = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                a[p][p] -= t * apq;
                a[q][q] += t * apq;
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                for i in 0..n {
                    if i == p || i == q {
                        continue;
                    }
                    let (aip, aiq) = (a[i][p], a[i][q]);
                    a[i][p] = c * aip - s * aiq;
                    a[i][q] = s * aip + c * aiq;
                    a[p][i] = a[i][p];
                    a[q][i] = a[i][q];
                }
                for row in v.iter_mut() {
                    let (vip, viq) = (row[p], row[q]);
                    row[p] = c * vip - s * viq;
                    row[q] = s * vip + c * viq;
                }
            }
        }
    }

    let values: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    // Transpose so vectors[k] is the eigenvector paired with values[k].
    let vectors: Vec<Vec<f64>> = (0..n).map(|k| (0..n).map(|i| v[i][k]).collect()).collect();
    (values, vectors)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn residual(m: &[Vec<f64>], value: f64, vector: &[f64]) -> f64 {
        let n = m.len();
        (0..n)
            .map(|i| {
                let av: f64 = (0..n).map(|j| m[i][j] * vector[j]).sum();
                (av - value * vector[i]).powi(2)
            })
            .sum::<f64>()
            .sqrt()
    }

    #[test]
    fn two_by_two_exchange() {
        let m = vec![vec![0.0, 1.0], vec![1.0, 0.0]];
        let (mut values, _) = jacobi_eigen(&m);
        values.sort_by(|a, b| a.total_cmp(b));
        assert!((values[0] + 1.0).abs() < 1e-12);
        assert!((values[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn eigenpairs_reconstruct() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for trial in 0..200 {
            let n = 1 + trial % 20;
            let mut m = vec![vec![0.0f64; n]; n];
            for i in 0..n {
                for j in i..n {
                    let x: f64 = rng.gen_range(-1.0..1.0);
                    m[i][j] = x;
                    m[j][i] = x;
                }
            }
            let fro: f64 = m
                .iter()
                .flat_map(|r| r.iter())
                .map(|x| x * x)
                .sum::<f64>()
                .sqrt();
            let (values, vectors) = jacobi_eigen(&m);
            let trace: f64 = (0..n).map(|i| m[i][i]).sum();
            let sum: f64 = values.iter().sum();
            assert!((sum - trace).abs() < 1e-8);
            for (value, vector) in values.iter().zip(&vectors) {
                assert!(
                    residual(&m, *value, vector) <= 1e-7 * fro.max(1e-30),
                    "residual too large at n = {n}"
                );
            }
        }
    }

    #[test]
    fn large_entries_still_converge() {
        // Multiplicities push adjacency entries well above 1; the
        // convergence threshold scales with the input norm.
        let m = vec![
            vec![0.0, 11.0, 5.0],
            vec![11.0, 0.0, 6.0],
            vec![5.0, 6.0, 0.0],
        ];
        let (values, vectors) = jacobi_eigen(&m);
        for (value, vector) in values.iter().zip(&vectors) {
            assert!(residual(&m, *value, vector) < 1e-9);
        }
    }
}
