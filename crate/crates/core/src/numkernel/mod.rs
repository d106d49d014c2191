//! Dense complex linear algebra: matrices, kets, Hermitian eigensolver,
//! partial traces and entropies.

mod eig;
mod matrix;

pub use eig::{herm_eig, unitary_from, HermEig, MAX_SWEEPS, OFF_DIAGONAL_TOL};
pub use matrix::{ComplexMatrix, StateVector, HERMITIAN_TOL};
pub use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

/// Eigenvalues below this are treated as exact zeros in entropies.
pub const ENTROPY_CLAMP: f64 = 1e-14;

/// Checks the density-matrix contract and returns the spectrum.
pub fn density_spectrum(rho: &ComplexMatrix) -> Result<Vec<f64>> {
    if !rho.is_square() {
        return Err(Error::DimensionMismatch { expected: rho.rows(), found: rho.cols() });
    }
    let tr = rho.trace();
    if (tr.re - 1.0).abs() > 1e-10 || tr.im.abs() > 1e-10 {
        return Err(Error::InvalidDensity(format!("trace {tr} differs from 1")));
    }
    let eig = herm_eig(rho).map_err(|e| match e {
        Error::NotHermitian { deviation } => Error::InvalidDensity(format!("not Hermitian (deviation {deviation:e})")),
        other => other,
    })?;
    let min = eig.values().first().copied().unwrap_or(0.0);
    if min < -1e-10 {
        return Err(Error::InvalidDensity(format!("negative eigenvalue {min:e}")));
    }
    Ok(eig.values().to_vec())
}

pub fn is_density(rho: &ComplexMatrix) -> bool {
    density_spectrum(rho).is_ok()
}

/// Reduced state on the subsystems listed in `keep` (ascending, distinct).
pub fn partial_trace(rho: &ComplexMatrix, dims: &[usize], keep: &[usize]) -> Result<ComplexMatrix> {
    let total: usize = dims.iter().product();
    if !rho.is_square() || rho.rows() != total {
        return Err(Error::DimensionMismatch { expected: total, found: rho.rows() });
    }
    if keep.windows(2).any(|w| w[0] >= w[1]) || keep.iter().any(|&k| k >= dims.len()) {
        return Err(Error::InvalidParameter(format!(
            "keep set {keep:?} must be ascending indices below {}",
            dims.len()
        )));
    }
    density_spectrum(rho)?;
    Ok(partial_trace_unchecked(rho, dims, keep))
}

/// Partial trace without the density check; for callers that already hold a
/// valid state.
pub(crate) fn partial_trace_unchecked(rho: &ComplexMatrix, dims: &[usize], keep: &[usize]) -> ComplexMatrix {
    let total: usize = dims.iter().product();
    let kept_dim: usize = keep.iter().map(|&k| dims[k]).product();
    let traced_dim = total / kept_dim;
    // index_of[kept][traced] -> full index
    let mut index_of = vec![vec![0usize; traced_dim]; kept_dim];
    for full in 0..total {
        let mut rem = full;
        let mut digits = vec![0usize; dims.len()];
        for s in (0..dims.len()).rev() {
            digits[s] = rem % dims[s];
            rem /= dims[s];
        }
        let (mut ki, mut ti) = (0usize, 0usize);
        for (s, &d) in digits.iter().enumerate() {
            if keep.contains(&s) {
                ki = ki * dims[s] + d;
            } else {
                ti = ti * dims[s] + d;
            }
        }
        index_of[ki][ti] = full;
    }
    ComplexMatrix::from_fn(kept_dim, kept_dim, |i, j| {
        (0..traced_dim).map(|m| rho[(index_of[i][m], index_of[j][m])]).sum()
    })
}

fn entropy_of_spectrum(values: &[f64]) -> f64 {
    values.iter().filter(|&&p| p > ENTROPY_CLAMP).map(|&p| -p * p.ln()).sum()
}

/// Von Neumann entropy in nats.
pub fn vn_entropy(rho: &ComplexMatrix) -> Result<f64> {
    Ok(entropy_of_spectrum(&density_spectrum(rho)?))
}

pub fn check_distribution(p: &[f64]) -> Result<()> {
    let sum: f64 = p.iter().sum();
    let min = p.iter().copied().fold(f64::INFINITY, f64::min);
    if p.is_empty() || (sum - 1.0).abs() > 1e-10 || min < -1e-12 || !sum.is_finite() {
        return Err(Error::InvalidDistribution { sum, min });
    }
    Ok(())
}

/// Shannon entropy in nats, with 0·log 0 = 0.
pub fn shannon(p: &[f64]) -> Result<f64> {
    check_distribution(p)?;
    Ok(p.iter().filter(|&&x| x > 0.0).map(|&x| -x * x.ln()).sum())
}

/// ½ Σ |eig(ρ − σ)|.
pub fn trace_distance(rho: &ComplexMatrix, sigma: &ComplexMatrix) -> Result<f64> {
    if rho.rows() != sigma.rows() || rho.cols() != sigma.cols() {
        return Err(Error::DimensionMismatch { expected: rho.rows(), found: sigma.rows() });
    }
    density_spectrum(rho)?;
    density_spectrum(sigma)?;
    Ok(trace_distance_unchecked(rho, sigma))
}

pub(crate) fn trace_distance_unchecked(rho: &ComplexMatrix, sigma: &ComplexMatrix) -> f64 {
    let diff = (rho - sigma).hermitian_part();
    match herm_eig(&diff) {
        Ok(e) => 0.5 * e.values().iter().map(|l| l.abs()).sum::<f64>(),
        Err(_) => f64::NAN,
    }
}

/// Pairwise (cascade) summation; the result depends only on the order of
/// `xs`, never on how the values were produced.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    match xs.len() {
        0 => 0.0,
        1 => xs[0],
        n => {
            let (a, b) = xs.split_at(n / 2);
            pairwise_sum(a) + pairwise_sum(b)
        }
    }
}

/// Entrywise pairwise summation of equally shaped matrices.
pub fn pairwise_sum_matrices(ms: &[ComplexMatrix]) -> Option<ComplexMatrix> {
    match ms.len() {
        0 => None,
        1 => Some(ms[0].clone()),
        n => {
            let (a, b) = ms.split_at(n / 2);
            Some(&pairwise_sum_matrices(a)? + &pairwise_sum_matrices(b)?)
        }
    }
}
