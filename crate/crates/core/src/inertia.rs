//! Exact inertia of symmetric rational matrices by congruence elimination.

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

/// Eigenvalue sign counts `(n+, n0, n-)` of a symmetric matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Inertia {
    pub n_plus: usize,
    pub n_zero: usize,
    pub n_minus: usize,
}

impl Inertia {
    pub fn new(n_plus: usize, n_zero: usize, n_minus: usize) -> Self {
        Inertia {
            n_plus,
            n_zero,
            n_minus,
        }
    }

    pub fn total(&self) -> usize {
        self.n_plus + self.n_zero + self.n_minus
    }

    /// Eigenvalues that are `>=` the shift.
    pub fn at_least(&self) -> usize {
        self.n_plus + self.n_zero
    }
}

/// Inertia of the dense symmetric matrix `a` (row-major, `n x n`).
///
/// Symmetric Gaussian elimination: a nonzero diagonal pivot contributes its
/// sign; when the remaining diagonal is all zero but some off-diagonal entry
/// is not, that entry forms a `[[0, x], [x, 0]]` block with one positive and
/// one negative eigenvalue. A fully zero remainder contributes zeros.
pub fn symmetric_inertia(mut a: Vec<Vec<BigRational>>) -> Inertia {
    let mut active: Vec<usize> = (0..a.len()).collect();
    let mut inertia = Inertia::new(0, 0, 0);

    while !active.is_empty() {
        // smallest nonzero diagonal by bit length keeps entry growth down
        let pivot = active
            .iter()
            .copied()
            .filter(|&i| !a[i][i].is_zero())
            .min_by_key(|&i| a[i][i].numer().bits() + a[i][i].denom().bits());

        if let Some(p) = pivot {
            if a[p][p].is_positive() {
                inertia.n_plus += 1;
            } else {
                inertia.n_minus += 1;
            }
            active.retain(|&i| i != p);
            let d = a[p][p].clone();
            for (x, &i) in active.iter().enumerate() {
                if a[i][p].is_zero() {
                    continue;
                }
                let f = &a[i][p] / &d;
                for &j in &active[x..] {
                    if a[p][j].is_zero() {
                        continue;
                    }
                    let v = &a[i][j] - &f * &a[p][j];
                    a[i][j] = v.clone();
                    a[j][i] = v;
                }
            }
            continue;
        }

        let off = active.iter().enumerate().find_map(|(x, &i)| {
            active[x + 1..]
                .iter()
                .find(|&&j| !a[i][j].is_zero())
                .map(|&j| (i, j))
        });
        let Some((p, q)) = off else {
            inertia.n_zero += active.len();
            break;
        };

        inertia.n_plus += 1;
        inertia.n_minus += 1;
        active.retain(|&i| i != p && i != q);
        // Schur complement of the block B = [[0, x], [x, 0]], B^-1 = [[0, 1/x], [1/x, 0]]
        let x = a[p][q].clone();
        for (r_idx, &r) in active.iter().enumerate() {
            for &s in &active[r_idx..] {
                let corr = (&a[r][p] * &a[q][s] + &a[r][q] * &a[p][s]) / &x;
                if corr.is_zero() {
                    continue;
                }
                let v = &a[r][s] - corr;
                a[r][s] = v.clone();
                a[s][r] = v;
            }
        }
    }
    inertia
}
