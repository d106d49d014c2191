//! Operators and states used by the experiments: collective spin operators in
//! the symmetric Dicke sector, truncated bosonic ladder operators, thermal
//! states and the four symmetric-state families.
//!
//! Dicke level `k` (k excitations out of N) is stored at index `k`, so `Jz`
//! is `diag(k − N/2)` with ascending eigenvalues.

use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::numkernel::{check_distribution, herm_eig, ComplexMatrix, StateVector, C64};

/// Default width exponent of the squeezed family.
pub const DEFAULT_SQUEEZE_GAMMA: f64 = 0.95;
/// Default Gaussian width of the GHZ-like family.
pub const DEFAULT_GHZ_NU: f64 = 2.0;

/// Collective spin operators `(Jx, Jy, Jz)` on the N+1 symmetric levels.
pub fn spin_ops(n: usize) -> Result<(ComplexMatrix, ComplexMatrix, ComplexMatrix)> {
    if n == 0 {
        return invalid("spin_ops needs at least one qubit");
    }
    let j = n as f64 / 2.0;
    let dim = n + 1;
    let m = |k: usize| k as f64 - j;
    // J+ |m⟩ = sqrt(j(j+1) − m(m+1)) |m+1⟩
    let raise = |k: usize| (j * (j + 1.0) - m(k) * (m(k) + 1.0)).max(0.0).sqrt();
    let mut jx = ComplexMatrix::zeros(dim, dim);
    let mut jy = ComplexMatrix::zeros(dim, dim);
    for k in 0..n {
        let r = raise(k);
        jx[(k + 1, k)] = C64::new(r / 2.0, 0.0);
        jx[(k, k + 1)] = C64::new(r / 2.0, 0.0);
        // Jy = (J+ − J−)/(2i)
        jy[(k + 1, k)] = C64::new(0.0, -r / 2.0);
        jy[(k, k + 1)] = C64::new(0.0, r / 2.0);
    }
    let jz = ComplexMatrix::from_real_diag(&(0..dim).map(m).collect::<Vec<_>>());
    Ok((jx, jy, jz))
}

/// Eigenvalues of `Jz`, `k − N/2` for `k = 0..=N`.
pub fn jz_levels(n: usize) -> Vec<f64> {
    (0..=n).map(|k| k as f64 - n as f64 / 2.0).collect()
}

/// A family of symmetric N-qubit states, described by its Dicke-level
/// distribution.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum DickeFamily {
    /// N independent qubits in (|0⟩+|1⟩)/√2; binomial distribution.
    Product,
    /// Gaussian profile of width N^γ/2 around k = N/2.
    Squeezed {
        #[serde(default = "default_gamma")]
        gamma: f64,
    },
    /// Twin-Fock state |D_N^{N/2}⟩ rotated by π/2 about Jy.
    TwinFock,
    /// Two Gaussians of width ν at k = 0 and k = N.
    GhzLike {
        #[serde(default = "default_nu")]
        nu: f64,
    },
}

fn default_gamma() -> f64 {
    DEFAULT_SQUEEZE_GAMMA
}

fn default_nu() -> f64 {
    DEFAULT_GHZ_NU
}

impl DickeFamily {
    pub fn squeezed() -> Self {
        Self::Squeezed { gamma: DEFAULT_SQUEEZE_GAMMA }
    }

    pub fn ghz_like() -> Self {
        Self::GhzLike { nu: DEFAULT_GHZ_NU }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::Product => "product",
            Self::Squeezed { .. } => "squeezed",
            Self::TwinFock => "twin_fock",
            Self::GhzLike { .. } => "ghz_like",
        }
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        if n == 0 {
            return invalid("Dicke families need N >= 1");
        }
        match *self {
            Self::TwinFock if n % 2 == 1 => invalid(format!("twin_fock requires even N, got {n}")),
            Self::GhzLike { nu } if !(nu > 0.0) || !nu.is_finite() => {
                invalid(format!("ghz_like width must be positive, got {nu}"))
            }
            Self::Squeezed { gamma } if !gamma.is_finite() => {
                invalid(format!("squeezed exponent must be finite, got {gamma}"))
            }
            _ => Ok(()),
        }
    }
}

/// Normalizes nonnegative log-weights without overflow.
fn normalize_log_weights(logw: &[f64]) -> Vec<f64> {
    let max = logw.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let w: Vec<f64> = logw.iter().map(|&l| (l - max).exp()).collect();
    let z: f64 = w.iter().sum();
    w.into_iter().map(|x| x / z).collect()
}

/// Dicke-level distribution `{p_k}` of a family, k = 0..=N.
pub fn family_distribution(family: &DickeFamily, n: usize) -> Result<Vec<f64>> {
    family.validate(n)?;
    let nf = n as f64;
    let p = match *family {
        DickeFamily::Product => {
            // ln C(N, k) − N ln 2, accumulated term by term.
            let mut logw = Vec::with_capacity(n + 1);
            let mut acc = 0.0;
            for k in 0..=n {
                if k > 0 {
                    acc += ((n - k + 1) as f64 / k as f64).ln();
                }
                logw.push(acc);
            }
            normalize_log_weights(&logw)
        }
        DickeFamily::Squeezed { gamma } => {
            let sigma = nf.powf(gamma) / 2.0;
            let logw: Vec<f64> = (0..=n)
                .map(|k| {
                    let d = k as f64 - nf / 2.0;
                    -d * d / (2.0 * sigma * sigma)
                })
                .collect();
            normalize_log_weights(&logw)
        }
        DickeFamily::TwinFock => {
            let (_, jy, _) = spin_ops(n)?;
            let eig = herm_eig(&jy)?;
            let start = StateVector::basis(n + 1, n / 2);
            let rotated = eig.propagate(FRAC_PI_2, start.amplitudes())?;
            let p: Vec<f64> = rotated.iter().map(|z| z.norm_sqr()).collect();
            let z: f64 = p.iter().sum();
            p.into_iter().map(|x| x / z).collect()
        }
        DickeFamily::GhzLike { nu } => {
            let two_nu_sq = 2.0 * nu * nu;
            let logw: Vec<f64> = (0..=n)
                .map(|k| {
                    let a = -(k as f64).powi(2) / two_nu_sq;
                    let b = -((n - k) as f64).powi(2) / two_nu_sq;
                    // ln(e^a + e^b)
                    let hi = a.max(b);
                    hi + (1.0 + (a.min(b) - hi).exp()).ln()
                })
                .collect();
            normalize_log_weights(&logw)
        }
    };
    Ok(p)
}

/// Thermal state of a truncated bosonic mode, `k_B = 1`.
pub fn thermal_state(omega: f64, temperature: f64, nmax: usize) -> Result<ComplexMatrix> {
    Ok(ComplexMatrix::from_real_diag(&thermal_populations(omega, temperature, nmax)?))
}

/// Diagonal of [`thermal_state`].
pub fn thermal_populations(omega: f64, temperature: f64, nmax: usize) -> Result<Vec<f64>> {
    if !(temperature >= 0.0) {
        return invalid(format!("temperature must be nonnegative, got {temperature}"));
    }
    if !(omega > 0.0) {
        return invalid(format!("mode frequency must be positive, got {omega}"));
    }
    if temperature == 0.0 {
        let mut p = vec![0.0; nmax + 1];
        p[0] = 1.0;
        return Ok(p);
    }
    let logw: Vec<f64> = (0..=nmax).map(|n| -(n as f64) * omega / temperature).collect();
    Ok(normalize_log_weights(&logw))
}

/// Truncated ladder operators `(a, a†, n̂)` on levels `0..=nmax`.
pub fn fock_ops(nmax: usize) -> Result<(ComplexMatrix, ComplexMatrix, ComplexMatrix)> {
    if nmax == 0 {
        return invalid("fock_ops needs nmax >= 1");
    }
    let dim = nmax + 1;
    let mut a = ComplexMatrix::zeros(dim, dim);
    for n in 1..dim {
        a[(n - 1, n)] = C64::new((n as f64).sqrt(), 0.0);
    }
    let ad = a.dagger();
    let num = ComplexMatrix::from_real_diag(&(0..dim).map(|n| n as f64).collect::<Vec<_>>());
    Ok((a, ad, num))
}

/// Symmetric N-qubit ket from Dicke coefficients `c_k`.
pub fn dicke_state(coefficients: Vec<C64>) -> Result<StateVector> {
    if coefficients.len() < 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: coefficients.len() });
    }
    StateVector::new(coefficients)
}

/// Dicke state with real amplitudes `√p_k`.
pub fn dicke_state_from_distribution(p: &[f64]) -> Result<StateVector> {
    check_distribution(p)?;
    StateVector::normalized(p.iter().map(|&x| C64::new(x.max(0.0).sqrt(), 0.0)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn commutator(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
        &(a * b) - &(b * a)
    }

    #[test]
    fn single_qubit_spin_is_half_pauli() {
        // Level order is (|↓⟩, |↑⟩), i.e. Pauli matrices in reversed basis order.
        let (jx, jy, jz) = spin_ops(1).unwrap();
        let h = 0.5;
        assert_eq!(jx[(0, 1)], C64::new(h, 0.0));
        assert_eq!(jy[(0, 1)], C64::new(0.0, h));
        assert_eq!(jy[(1, 0)], C64::new(0.0, -h));
        assert_eq!(jz.diagonal_real(), vec![-h, h]);
    }

    #[test]
    fn jz_for_two_qubits() {
        let (_, _, jz) = spin_ops(2).unwrap();
        assert_eq!(jz, ComplexMatrix::from_real_diag(&[-1.0, 0.0, 1.0]));
    }

    #[test]
    fn casimir_for_six_qubits() {
        let (jx, jy, jz) = spin_ops(6).unwrap();
        let c = &(&(&jx * &jx) + &(&jy * &jy)) + &(&jz * &jz);
        assert!(c.max_abs_diff(&ComplexMatrix::identity(7).scale_real(12.0)) < 1e-10);
    }

    #[test]
    fn spin_commutators_up_to_64() {
        let i = C64::new(0.0, 1.0);
        for n in [1, 2, 5, 17, 64] {
            let (jx, jy, jz) = spin_ops(n).unwrap();
            assert!(commutator(&jx, &jy).max_abs_diff(&jz.scale(i)) < 1e-10);
            assert!(commutator(&jy, &jz).max_abs_diff(&jx.scale(i)) < 1e-10);
            assert!(commutator(&jz, &jx).max_abs_diff(&jy.scale(i)) < 1e-10);
        }
    }

    #[test]
    fn product_family_small() {
        let p = family_distribution(&DickeFamily::Product, 2).unwrap();
        for (a, b) in p.iter().zip([0.25, 0.5, 0.25]) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn ghz_limit() {
        let p = family_distribution(&DickeFamily::GhzLike { nu: 1e-6 }, 8).unwrap();
        assert!((p[0] - 0.5).abs() < 1e-12 && (p[8] - 0.5).abs() < 1e-12);
        assert!(p[1..8].iter().all(|&x| x < 1e-12));
    }

    #[test]
    fn twin_fock_two_qubits() {
        let p = family_distribution(&DickeFamily::TwinFock, 2).unwrap();
        assert!((p[0] - 0.5).abs() < 1e-12);
        assert!(p[1].abs() < 1e-12);
        assert!((p[2] - 0.5).abs() < 1e-12);
    }

    #[test]
    fn family_errors() {
        assert!(family_distribution(&DickeFamily::TwinFock, 3).is_err());
        assert!(family_distribution(&DickeFamily::GhzLike { nu: 0.0 }, 4).is_err());
        assert!(family_distribution(&DickeFamily::GhzLike { nu: -1.0 }, 4).is_err());
        assert!(family_distribution(&DickeFamily::Product, 0).is_err());
    }

    #[test]
    fn families_normalized_and_symmetric() {
        let fams = [DickeFamily::Product, DickeFamily::squeezed(), DickeFamily::TwinFock, DickeFamily::ghz_like()];
        for fam in fams {
            for n in [2usize, 4, 10, 32, 64] {
                let p = family_distribution(&fam, n).unwrap();
                assert!((p.iter().sum::<f64>() - 1.0).abs() < 1e-12, "{fam:?} N={n}");
                assert!(p.iter().all(|&x| x >= 0.0));
                for k in 0..=n {
                    assert!((p[k] - p[n - k]).abs() < 1e-12, "{fam:?} N={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn twin_fock_variance() {
        for n in [2usize, 8, 20] {
            let p = family_distribution(&DickeFamily::TwinFock, n).unwrap();
            let j = n as f64 / 2.0;
            let var: f64 = jz_levels(n).iter().zip(&p).map(|(m, q)| q * m * m).sum();
            assert!((var - j * (j + 1.0) / 2.0).abs() < 1e-9);
        }
    }

    #[test]
    fn thermal_examples() {
        let g = thermal_state(1.0, 0.0, 5).unwrap();
        assert_eq!(g.diagonal_real(), vec![1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
        let hot = thermal_populations(1.0, 1e9, 3).unwrap();
        assert!(hot.iter().all(|&p| (p - 0.25).abs() < 1e-6));
        let p = thermal_populations(1.0, 0.3, 20).unwrap();
        let mean: f64 = p.iter().enumerate().map(|(n, q)| n as f64 * q).sum();
        let bose = 1.0 / ((1.0f64 / 0.3).exp() - 1.0);
        assert!((mean - bose).abs() < 1e-10);
        assert!(p[20] < 1e-10);
        assert!((p.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        assert!(thermal_state(1.0, -0.1, 3).is_err());
        assert!(thermal_state(0.0, 0.3, 3).is_err());
    }

    #[test]
    fn fock_operators() {
        let (a, ad, num) = fock_ops(4).unwrap();
        let one = StateVector::basis(5, 1);
        let lowered = a.apply(one.amplitudes()).unwrap();
        assert_eq!(lowered, StateVector::basis(5, 0).amplitudes());
        assert!((&ad * &a).max_abs_diff(&num) < 1e-15);
        let comm = &(&a * &ad) - &(&ad * &a);
        let dev = &comm - &ComplexMatrix::identity(5);
        for i in 0..5 {
            for j in 0..5 {
                if (i, j) != (4, 4) {
                    assert!(dev[(i, j)].norm() < 1e-14);
                }
            }
        }
        assert!((dev[(4, 4)].re + 5.0).abs() < 1e-14);
    }

    #[test]
    fn dicke_state_constructors() {
        let s = dicke_state(vec![C64::new(1.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0)]).unwrap();
        assert_eq!(s, StateVector::basis(3, 0));
        assert!(dicke_state(vec![C64::new(1.0, 0.0), C64::new(1.0, 0.0)]).is_err());
        let p = family_distribution(&DickeFamily::Product, 6).unwrap();
        let s = dicke_state_from_distribution(&p).unwrap();
        for (a, b) in s.probabilities().iter().zip(&p) {
            assert!((a - b).abs() < 1e-14);
        }
        let r = 0.5f64.sqrt();
        let ghz =
            dicke_state(vec![C64::new(r, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0), C64::new(r, 0.0)]).unwrap();
        assert!((ghz.probabilities()[3] - 0.5).abs() < 1e-15);
    }
}
