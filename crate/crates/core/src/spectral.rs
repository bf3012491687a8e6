//! Laplacian spectra, exact shifted inertia and the sigma parameter.

use crate::eigen::{self, NoConvergence};
use crate::graph::Graph;
use crate::graph6;
use crate::inertia::{symmetric_inertia, Inertia};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use thiserror::Error;

pub type Rational = BigRational;

/// Tie tolerance used by the floating sigma path unless overridden.
pub const DEFAULT_TIE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("spectral quantities are undefined on the graph with no vertices")]
    NullGraph,
    #[error("eigensolver failed on graph {graph6}: {source}")]
    NoConvergence {
        graph6: String,
        #[source]
        source: NoConvergence,
    },
    #[error("spectrum {values:?} has no eigenvalue within {tol} of zero")]
    MalformedSpectrum { values: Vec<f64>, tol: f64 },
}

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn integer(x: usize) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

fn nonnull(g: &Graph) -> Result<(), SpectralError> {
    if g.order() == 0 {
        Err(SpectralError::NullGraph)
    } else {
        Ok(())
    }
}

/// `L(G) = D(G) - A(G)` as a dense integer matrix.
pub fn laplacian(g: &Graph) -> Vec<Vec<i64>> {
    let n = g.order();
    (0..n)
        .map(|u| {
            (0..n)
                .map(|v| {
                    if u == v {
                        g.degree(u) as i64
                    } else if g.has_edge(u, v) {
                        -1
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect()
}

/// `2m / n`, reduced.
pub fn average_degree(g: &Graph) -> Result<Rational, SpectralError> {
    nonnull(g)?;
    Ok(Rational::new(
        BigInt::from(2 * g.size()),
        BigInt::from(g.order()),
    ))
}

/// Laplacian eigenvalues sorted non-increasingly.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
}

impl Spectrum {
    /// Wraps arbitrary values, sorting them descending.
    pub fn new(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Spectrum { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `mu_1`, the largest eigenvalue.
    pub fn largest(&self) -> Option<f64> {
        self.values.first().copied()
    }

    /// Largest elementwise deviation; `INFINITY` when lengths differ.
    pub fn max_abs_diff(&self, other: &Spectrum) -> f64 {
        if self.len() != other.len() {
            return f64::INFINITY;
        }
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Removes one eigenvalue at or near zero (the smallest one).
    fn without_zero(&self, tol: f64) -> Result<Vec<f64>, SpectralError> {
        match self.values.last() {
            Some(&last) if last.abs() <= tol => Ok(self.values[..self.len() - 1].to_vec()),
            _ => Err(SpectralError::MalformedSpectrum {
                values: self.values.clone(),
                tol,
            }),
        }
    }
}

/// Floating Laplacian spectrum.
pub fn eigenvalues(g: &Graph) -> Result<Spectrum, SpectralError> {
    nonnull(g)?;
    let l = laplacian(g)
        .into_iter()
        .map(|row| row.into_iter().map(|x| x as f64).collect())
        .collect();
    let values =
        eigen::symmetric_eigenvalues(l).map_err(|source| SpectralError::NoConvergence {
            graph6: graph6::encode(g),
            source,
        })?;
    Ok(Spectrum::new(values))
}

/// Exact inertia of `L(G) - t I`.
pub fn inertia_shifted(g: &Graph, t: &Rational) -> Inertia {
    let a = laplacian(g)
        .into_iter()
        .enumerate()
        .map(|(i, row)| {
            row.into_iter()
                .enumerate()
                .map(|(j, x)| {
                    let x = Rational::from_integer(BigInt::from(x));
                    if i == j {
                        x - t
                    } else {
                        x
                    }
                })
                .collect()
        })
        .collect();
    symmetric_inertia(a)
}

/// Number of Laplacian eigenvalues `>= t`, exactly.
pub fn count_at_least(g: &Graph, t: &Rational) -> usize {
    inertia_shifted(g, t).at_least()
}

/// Number of Laplacian eigenvalues `>=` the average degree, exactly.
pub fn sigma(g: &Graph) -> Result<usize, SpectralError> {
    let d = average_degree(g)?;
    Ok(count_at_least(g, &d))
}

/// Floating cross-check of [`sigma`]: eigenvalues `>= 2m/n - tie_tol`.
pub fn sigma_float(g: &Graph, tie_tol: f64) -> Result<usize, SpectralError> {
    nonnull(g)?;
    let spec = eigenvalues(g)?;
    let d = 2.0 * g.size() as f64 / g.order() as f64;
    Ok(spec
        .values()
        .iter()
        .filter(|&&mu| mu >= d - tie_tol)
        .count())
}

/// Exact multiplicity of `n` as a Laplacian eigenvalue.
pub fn multiplicity_of_n(g: &Graph) -> Result<usize, SpectralError> {
    nonnull(g)?;
    Ok(inertia_shifted(g, &integer(g.order())).n_zero)
}

/// Tolerance for recognising the zero eigenvalue of an input spectrum.
fn zero_tol(n: usize) -> f64 {
    1e-8 * n.max(1) as f64
}

/// Spectrum of `G1 v G2` from the spectra of the parts: one zero is dropped
/// from each, the rest shift by the other side's order, and `n1 + n2` and
/// `0` are added.
pub fn join_spectrum(
    left: &Spectrum,
    n1: usize,
    right: &Spectrum,
    n2: usize,
) -> Result<Spectrum, SpectralError> {
    if n1 == 0 || n2 == 0 || left.len() != n1 || right.len() != n2 {
        return Err(SpectralError::MalformedSpectrum {
            values: left.values.iter().chain(&right.values).copied().collect(),
            tol: 0.0,
        });
    }
    let a = left.without_zero(zero_tol(n1))?;
    let b = right.without_zero(zero_tol(n2))?;
    let mut values = Vec::with_capacity(n1 + n2);
    values.push((n1 + n2) as f64);
    values.extend(a.into_iter().map(|mu| mu + n2 as f64));
    values.extend(b.into_iter().map(|la| la + n1 as f64));
    values.push(0.0);
    Ok(Spectrum::new(values))
}

/// Spectrum of `G1 + G2`: the multiset union.
pub fn union_spectrum(left: &Spectrum, right: &Spectrum) -> Spectrum {
    Spectrum::new(left.values.iter().chain(&right.values).copied().collect())
}
