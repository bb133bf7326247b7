//! Cyclic Jacobi eigensolver for dense real symmetric matrices.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy)]
pub struct JacobiOptions {
    /// Stop once the off-diagonal Frobenius norm falls below this fraction of
    /// the full Frobenius norm.
    pub relative_threshold: f64,
    pub max_sweeps: usize,
}

impl Default for JacobiOptions {
    fn default() -> Self {
        Self {
            relative_threshold: 1e-12,
            max_sweeps: 60,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    pub values: Vec<f64>,
    /// Row-major `n × n`; column `j` is the eigenvector for `values[j]`.
    pub vectors: Option<Vec<f64>>,
    pub sweeps: usize,
}

impl SymmetricEigen {
    pub fn vector(&self, j: usize) -> Option<Vec<f64>> {
        let v = self.vectors.as_ref()?;
        let n = self.values.len();
        Some((0..n).map(|k| v[k * n + j]).collect())
    }
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            s += a[i * n + j] * a[i * n + j];
        }
    }
    (2.0 * s).sqrt()
}

/// Diagonalizes the symmetric `n × n` row-major matrix `a` in place.
pub fn jacobi_eigen(
    mut a: Vec<f64>,
    n: usize,
    want_vectors: bool,
    opts: &JacobiOptions,
) -> Result<SymmetricEigen> {
    assert_eq!(a.len(), n * n, "matrix buffer does not match dimension");
    let mut v = want_vectors.then(|| {
        let mut v = vec![0.0; n * n];
        for i in 0..n {
            v[i * n + i] = 1.0;
        }
        v
    });
    let frobenius = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let target = opts.relative_threshold * frobenius;
    // Entries this small are roundoff. Rotating on them inside a degenerate
    // cluster gives angles of order one that re-mix converged entries.
    let negligible = f64::EPSILON * frobenius;

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a, n);
        if off <= target {
            break;
        }
        if sweeps == opts.max_sweeps {
            return Err(Error::Numeric(format!(
                "Jacobi did not converge on a {n}x{n} matrix after {sweeps} sweeps: \
                 off-diagonal norm {off:.3e}, target {target:.3e} (Frobenius norm {frobenius:.3e})"
            )));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.abs() <= negligible {
                    a[p * n + q] = 0.0;
                    a[q * n + p] = 0.0;
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    let t = 1.0 / (theta.abs() + (theta * theta + 1.0).sqrt());
                    if theta < 0.0 {
                        -t
                    } else {
                        t
                    }
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let g = a[k * n + p];
                    let h = a[k * n + q];
                    let gp = g - s * (h + g * tau);
                    let hq = h + s * (g - h * tau);
                    a[k * n + p] = gp;
                    a[p * n + k] = gp;
                    a[k * n + q] = hq;
                    a[q * n + k] = hq;
                }
                if let Some(v) = v.as_mut() {
                    for k in 0..n {
                        let g = v[k * n + p];
                        let h = v[k * n + q];
                        v[k * n + p] = g - s * (h + g * tau);
                        v[k * n + q] = h + s * (g - h * tau);
                    }
                }
            }
        }
    }

    Ok(SymmetricEigen {
        values: (0..n).map(|i| a[i * n + i]).collect(),
        vectors: v,
        sweeps,
    })
}
