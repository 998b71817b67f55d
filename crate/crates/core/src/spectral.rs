//! Dense symmetric eigenvalue machinery: cyclic Jacobi solver, Fiedler value
//! and the spectral Wiener index `W(G) = n * sum(1 / lambda_i, i >= 2)`.
//!
//! The spectral Wiener identity is exact on trees and is used verbatim as
//! the optimization surrogate on general backbones; the BFS Wiener in
//! [`crate::graph`] is the combinatorial oracle.

use crate::error::{Error, Result};
use crate::float::Float;
use crate::laplacian::LaplacianMatrix;

const MAX_SWEEPS: usize = 64;

/// Eigenvalues of a dense symmetric matrix, ascending. Cyclic-by-row Jacobi
/// rotations; adequate for the small backbones this crate targets.
pub fn symmetric_eigenvalues<T: Float>(l: &LaplacianMatrix<T>) -> Result<Vec<T>> {
    let n = l.dim();
    let mut a = l.raw().to_vec();
    if n == 1 {
        return Ok(vec![a[0]]);
    }

    let frob: T = a.iter().map(|&x| x * x).sum::<T>().sqrt();
    // Off-diagonal target: machine precision relative to the matrix scale.
    let target = if frob == T::zero() { T::zero() } else { frob * T::epsilon() };

    let idx = |i: usize, j: usize| i * n + j;
    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let mut off = T::zero();
        for p in 0..n {
            for q in (p + 1)..n {
                off += a[idx(p, q)] * a[idx(p, q)];
            }
        }
        if off.sqrt() <= target {
            converged = true;
            break;
        }

        for p in 0..(n - 1) {
            for q in (p + 1)..n {
                let apq = a[idx(p, q)];
                if apq == T::zero() {
                    continue;
                }
                let app = a[idx(p, p)];
                let aqq = a[idx(q, q)];
                let theta = (aqq - app) / ((T::one() + T::one()) * apq);
                let t = if theta.abs() > T::one() / T::epsilon() {
                    // Degenerate rotation angle; first-order tangent.
                    (T::one() + T::one()).recip() / theta
                } else {
                    let sign = if theta >= T::zero() { T::one() } else { -T::one() };
                    sign / (theta.abs() + (theta * theta + T::one()).sqrt())
                };
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;

                a[idx(p, p)] = app - t * apq;
                a[idx(q, q)] = aqq + t * apq;
                a[idx(p, q)] = T::zero();
                a[idx(q, p)] = T::zero();
                for i in 0..n {
                    if i == p || i == q {
                        continue;
                    }
                    let aip = a[idx(i, p)];
                    let aiq = a[idx(i, q)];
                    let new_ip = c * aip - s * aiq;
                    let new_iq = s * aip + c * aiq;
                    a[idx(i, p)] = new_ip;
                    a[idx(p, i)] = new_ip;
                    a[idx(i, q)] = new_iq;
                    a[idx(q, i)] = new_iq;
                }
            }
        }
    }
    if !converged {
        // One final check: the last sweep may have reached the target.
        let mut off = T::zero();
        for p in 0..n {
            for q in (p + 1)..n {
                off += a[idx(p, q)] * a[idx(p, q)];
            }
        }
        if off.sqrt() > target {
            return Err(Error::EigenNonConvergence { n });
        }
    }

    let mut eig: Vec<T> = (0..n).map(|i| a[idx(i, i)]).collect();
    eig.sort_by(|x, y| x.partial_cmp(y).expect("eigenvalues are finite"));
    Ok(eig)
}

/// Sorted Laplacian spectrum with its Fiedler value (second-smallest
/// eigenvalue, zero iff the graph is disconnected).
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralSummary<T: Float> {
    eigenvalues: Vec<T>,
    fiedler: T,
    tol_eig: T,
}

impl<T: Float> SpectralSummary<T> {
    pub fn eigenvalues(&self) -> &[T] {
        &self.eigenvalues
    }

    pub fn fiedler(&self) -> T {
        self.fiedler
    }

    pub fn tol_eig(&self) -> T {
        self.tol_eig
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    /// Connectivity as seen by the spectrum.
    pub fn is_connected(&self) -> bool {
        self.fiedler > self.tol_eig
    }
}

/// Solve the Laplacian eigenproblem and package the sorted spectrum.
///
/// Fails if the spectrum violates Laplacian structure (negative eigenvalues
/// or nonzero smallest eigenvalue beyond `tol_eig`), which indicates the
/// input was not a Laplacian.
pub fn spectral_summary<T: Float>(l: &LaplacianMatrix<T>, tol_eig: T) -> Result<SpectralSummary<T>> {
    let n = l.dim();
    if n < 2 {
        return Err(Error::Domain(
            "spectral summary needs at least two nodes".into(),
        ));
    }
    let eigenvalues = symmetric_eigenvalues(l)?;
    if eigenvalues[0].abs() > tol_eig || eigenvalues.iter().any(|&x| x < -tol_eig) {
        return Err(Error::Domain(format!(
            "spectrum is not Laplacian-like: min eigenvalue {}",
            eigenvalues[0]
        )));
    }
    let fiedler = eigenvalues[1];
    Ok(SpectralSummary { eigenvalues, fiedler, tol_eig })
}

/// Spectral Wiener index `n * sum(1 / lambda_i, i >= 2)`. Requires a
/// connected spectrum: the formula divides by the Fiedler value.
pub fn wiener_spectral<T: Float>(summary: &SpectralSummary<T>) -> Result<T> {
    if !summary.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = T::from_usize(summary.dim()).expect("dimension fits scalar");
    let sum: T = summary.eigenvalues()[1..]
        .iter()
        .map(|&l| l.recip())
        .sum();
    Ok(n * sum)
}

/// Average internode distance `W / C(n, 2) + delta_mu`.
pub fn average_distance<T: Float>(wiener: T, n: usize, delta_mu: T) -> Result<T> {
    if n < 2 {
        return Err(Error::Domain(
            "average distance needs at least two nodes".into(),
        ));
    }
    if wiener < T::zero() || delta_mu < T::zero() {
        return Err(Error::Domain(
            "wiener index and distance deviation must be non-negative".into(),
        ));
    }
    let pairs = T::from_usize(n * (n - 1) / 2).expect("pair count fits scalar");
    Ok(wiener / pairs + delta_mu)
}
