//! Eigenvalues of dense real symmetric matrices.
//!
//! Householder reduction to tridiagonal form followed by implicit-shift QL
//! iteration. Only eigenvalues are produced.

use thiserror::Error;

/// Sweeps allowed per eigenvalue before giving up.
pub const MAX_SWEEPS: usize = 50;
/// Off-diagonal entries below this fraction of the neighbouring diagonal
/// magnitude are treated as zero.
pub const REL_TOL: f64 = 1e-14;

#[derive(Debug, Clone, PartialEq, Error)]
#[error("QL iteration did not converge for eigenvalue {index} after {sweeps} sweeps")]
pub struct NoConvergence {
    pub index: usize,
    pub sweeps: usize,
}

/// Eigenvalues of the symmetric matrix `a` (row-major), unsorted.
pub fn symmetric_eigenvalues(mut a: Vec<Vec<f64>>) -> Result<Vec<f64>, NoConvergence> {
    let n = a.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    let (mut d, mut e) = tridiagonalize(&mut a);
    ql_implicit(&mut d, &mut e)?;
    Ok(d)
}

/// Householder reduction; returns the diagonal and the subdiagonal, with
/// `e[i]` coupling `d[i-1]` and `d[i]` (`e[0] = 0`).
fn tridiagonalize(a: &mut [Vec<f64>]) -> (Vec<f64>, Vec<f64>) {
    let n = a.len();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = 0.0;
        if l > 0 {
            let scale: f64 = a[i][..=l].iter().map(|x| x.abs()).sum();
            if scale == 0.0 {
                e[i] = a[i][l];
            } else {
                for k in 0..=l {
                    a[i][k] /= scale;
                    h += a[i][k] * a[i][k];
                }
                let f = a[i][l];
                let g = if f >= 0.0 { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h -= f * g;
                a[i][l] = f - g;
                let mut f = 0.0;
                for j in 0..=l {
                    let mut g = 0.0;
                    for k in 0..=j {
                        g += a[j][k] * a[i][k];
                    }
                    for k in j + 1..=l {
                        g += a[k][j] * a[i][k];
                    }
                    e[j] = g / h;
                    f += e[j] * a[i][j];
                }
                let hh = f / (h + h);
                for j in 0..=l {
                    let f = a[i][j];
                    let g = e[j] - hh * f;
                    e[j] = g;
                    for k in 0..=j {
                        a[j][k] -= f * e[k] + g * a[i][k];
                    }
                }
            }
        } else {
            e[i] = a[i][l];
        }
        d[i] = h;
    }
    for (i, di) in d.iter_mut().enumerate() {
        *di = a[i][i];
    }
    (d, e)
}

fn ql_implicit(d: &mut [f64], e: &mut [f64]) -> Result<(), NoConvergence> {
    let n = d.len();
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    for l in 0..n {
        let mut sweeps = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= REL_TOL * dd || e[m] == 0.0 {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            if sweeps == MAX_SWEEPS {
                return Err(NoConvergence { index: l, sweeps });
            }
            sweeps += 1;

            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + if g >= 0.0 { r.abs() } else { -r.abs() });
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut underflow = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted(mut v: Vec<f64>) -> Vec<f64> {
        v.sort_by(|a, b| b.partial_cmp(a).unwrap());
        v
    }

    #[test]
    fn small_matrices() {
        let v = sorted(symmetric_eigenvalues(vec![vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap());
        assert!((v[0] - 3.0).abs() < 1e-12 && (v[1] - 1.0).abs() < 1e-12);
        assert_eq!(symmetric_eigenvalues(vec![vec![5.0]]).unwrap(), vec![5.0]);
        assert!(symmetric_eigenvalues(Vec::new()).unwrap().is_empty());
    }

    #[test]
    fn diagonal_matrix_is_fixed_point() {
        let a = vec![
            vec![4.0, 0.0, 0.0],
            vec![0.0, -1.0, 0.0],
            vec![0.0, 0.0, 2.5],
        ];
        assert_eq!(
            sorted(symmetric_eigenvalues(a).unwrap()),
            vec![4.0, 2.5, -1.0]
        );
    }

    #[test]
    fn agrees_with_nalgebra_on_random_symmetric() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for n in 1..15 {
            let mut a = vec![vec![0.0; n]; n];
            for i in 0..n {
                for j in 0..=i {
                    let x: f64 = rng.gen_range(-5.0..5.0);
                    a[i][j] = x;
                    a[j][i] = x;
                }
            }
            let m = nalgebra::DMatrix::from_fn(n, n, |i, j| a[i][j]);
            let want = sorted(m.symmetric_eigenvalues().iter().copied().collect());
            let got = sorted(symmetric_eigenvalues(a).unwrap());
            for (g, w) in got.iter().zip(&want) {
                assert!((g - w).abs() < 1e-9, "n={n}: {got:?} vs {want:?}");
            }
        }
    }
}
