//! Quantum Fisher information of pure probe states, local generators,
//! ensemble-averaged (dephased) states and the heat-dissipation bounds that
//! follow from them.
//!
//! Conventions: `k_B = ħ = 1`, entropies in nats. The probe evolves as
//! `e^{-iλht}`, so the local generator is `h·t` and its seminorm is
//! `‖h‖·|t|`.

use std::collections::BTreeMap;
use std::f64::consts::{LN_2, PI};
use std::ops::Range;

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::numkernel::{
    density_spectrum, herm_eig, pairwise_sum_matrices, shannon, vn_entropy, ComplexMatrix, HermEig, StateVector, C64,
};

/// Relative gap (in units of the seminorm) below which eigenvalues share an eigenspace.
pub const DEGENERACY_TOL: f64 = 1e-9;

/// Interrogation generator `h` with its interrogation time `t`.
#[derive(Clone, Debug)]
pub struct Generator {
    h: ComplexMatrix,
    t: f64,
    eig: HermEig,
}

impl Generator {
    pub fn new(h: ComplexMatrix, t: f64) -> Result<Self> {
        if !t.is_finite() {
            return invalid(format!("interrogation time must be finite, got {t}"));
        }
        let eig = herm_eig(&h)?;
        Ok(Self { h, t, eig })
    }

    pub fn h(&self) -> &ComplexMatrix {
        &self.h
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn eig(&self) -> &HermEig {
        &self.eig
    }

    pub fn dim(&self) -> usize {
        self.eig.dim()
    }

    /// ‖h‖ (spectral spread).
    pub fn seminorm(&self) -> f64 {
        self.eig.spread()
    }

    /// h_λ = h·t for `H_λ = λh`.
    pub fn local(&self) -> ComplexMatrix {
        self.h.scale_real(self.t)
    }

    /// ‖h_λ‖ = ‖h‖·|t|.
    pub fn local_seminorm(&self) -> f64 {
        self.seminorm() * self.t.abs()
    }

    /// `(h/‖h‖, t·‖h‖)`: same dynamics, unit seminorm.
    pub fn normalized(&self) -> Result<Self> {
        let s = self.seminorm();
        if !(s > 0.0) {
            return invalid("cannot normalize a generator proportional to the identity");
        }
        Ok(Self { h: self.h.scale_real(1.0 / s), t: self.t * s, eig: self.eig.scaled(1.0 / s) })
    }

    /// e^{-iλht}.
    pub fn unitary(&self, lambda: f64) -> ComplexMatrix {
        let phase = lambda * self.t;
        self.eig.spectral_map(|a| C64::from_polar(1.0, -a * phase))
    }

    /// e^{-iλht}|ψ⟩.
    pub fn evolve(&self, psi: &StateVector, lambda: f64) -> Result<StateVector> {
        StateVector::normalized(self.eig.propagate(lambda * self.t, psi.amplitudes())?)
    }

    /// Index ranges of (near-)degenerate eigenvalues in the ascending spectrum.
    pub fn eigenspaces(&self) -> Vec<Range<usize>> {
        let values = self.eig.values();
        let gap = DEGENERACY_TOL * self.seminorm();
        let mut groups = Vec::new();
        let mut start = 0;
        for i in 1..values.len() {
            if values[i] - values[i - 1] > gap {
                groups.push(start..i);
                start = i;
            }
        }
        groups.push(start..values.len());
        groups
    }

    fn check_dim(&self, found: usize) -> Result<()> {
        if found != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found });
        }
        Ok(())
    }
}

/// F_Q = 4t²·Var_ψ(h) for the pure state `e^{-iλht}|ψ⟩`.
pub fn qfi_pure(psi: &StateVector, g: &Generator) -> Result<f64> {
    g.check_dim(psi.dim())?;
    let a = psi.amplitudes();
    let ha = g.h().apply(a)?;
    let mean: f64 = a.iter().zip(&ha).map(|(x, y)| (x.conj() * y).re).sum();
    // ‖(h − ⟨h⟩)ψ‖² keeps the variance nonnegative.
    let var: f64 = a.iter().zip(&ha).map(|(x, y)| (y - x * mean).norm_sqr()).sum();
    Ok(4.0 * g.t() * g.t() * var)
}

/// Central-difference estimate of `i U(λ0)† ∂_λ U(λ0)`, Hermitian-symmetrized.
pub fn local_generator_fd<F>(u: F, lambda0: f64, eps: f64) -> Result<ComplexMatrix>
where
    F: Fn(f64) -> Result<ComplexMatrix>,
{
    if !(eps > 0.0) {
        return invalid(format!("finite-difference step must be positive, got {eps}"));
    }
    let u0 = u(lambda0)?;
    let up = u(lambda0 + eps)?;
    let um = u(lambda0 - eps)?;
    for m in [&u0, &up, &um] {
        m.ensure_unitary(1e-9)?;
    }
    let du = (&up - &um).scale_real(1.0 / (2.0 * eps));
    let a = u0.dagger().matmul(&du)?.scale(C64::new(0.0, 1.0));
    Ok(a.hermitian_part())
}

/// Operator seminorm λ_max − λ_min.
pub fn seminorm(a: &ComplexMatrix) -> Result<f64> {
    Ok(herm_eig(a)?.spread())
}

/// ρ_s = Σ_P Π_P ρ Π_P over the eigenspaces of `h`.
pub fn rho_s_dephase(rho: &ComplexMatrix, g: &Generator) -> Result<ComplexMatrix> {
    g.check_dim(rho.rows())?;
    density_spectrum(rho)?;
    let v = g.eig().vectors();
    let vd = v.dagger();
    let mut rotated = vd.matmul(rho)?.matmul(&v)?;
    let groups = g.eigenspaces();
    let mut label = vec![0usize; g.dim()];
    for (gi, r) in groups.iter().enumerate() {
        for i in r.clone() {
            label[i] = gi;
        }
    }
    let n = g.dim();
    for i in 0..n {
        for j in 0..n {
            if label[i] != label[j] {
                rotated[(i, j)] = C64::new(0.0, 0.0);
            }
        }
    }
    Ok(v.matmul(&rotated)?.matmul(&vd)?.hermitian_part())
}

/// Uniform average of `ρ_λ` over `λ_j t = 2πj/M`, j = 0..M.
///
/// Requires the spectrum of `h` to be integer spaced; the result then equals
/// [`rho_s_dephase`] once `M` exceeds the spectral spread.
pub fn rho_s_grid_average(psi: &StateVector, g: &Generator, m: usize) -> Result<ComplexMatrix> {
    g.check_dim(psi.dim())?;
    if m == 0 {
        return invalid("grid average needs at least one sample");
    }
    let values = g.eig().values();
    for &a in values {
        let gap = a - values[0];
        if (gap - gap.round()).abs() > 1e-9 {
            return Err(Error::NonIntegerSpectrum { gap });
        }
    }
    let samples: Vec<ComplexMatrix> = (0..m)
        .map(|j| {
            let phase = 2.0 * PI * j as f64 / m as f64;
            let amps = g.eig().propagate(phase, psi.amplitudes())?;
            Ok(ComplexMatrix::outer(&StateVector::normalized(amps)?))
        })
        .collect::<Result<_>>()?;
    let sum = pairwise_sum_matrices(&samples).expect("m >= 1");
    Ok(sum.scale_real(1.0 / m as f64).hermitian_part())
}

/// Shannon entropy of the outcome distribution of measuring `rho` in the
/// orthonormal `basis` (columns).
pub fn measurement_record_entropy(rho: &ComplexMatrix, basis: &ComplexMatrix) -> Result<f64> {
    if basis.rows() != rho.rows() {
        return Err(Error::DimensionMismatch { expected: rho.rows(), found: basis.rows() });
    }
    basis.ensure_unitary(1e-10)?;
    density_spectrum(rho)?;
    let p: Vec<f64> =
        basis.dagger().matmul(rho)?.matmul(basis)?.diagonal_real().into_iter().map(|x| x.max(0.0)).collect();
    shannon(&p)
}

fn check_levels(p: &[f64], levels: &[f64]) -> Result<()> {
    if p.len() != levels.len() {
        return Err(Error::DimensionMismatch { expected: levels.len(), found: p.len() });
    }
    crate::numkernel::check_distribution(p)
}

fn degeneracy_gap(levels: &[f64]) -> f64 {
    let lo = levels.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = levels.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    DEGENERACY_TOL * (hi - lo)
}

/// Per-pair QFI contributions `F^{ab} = 4t² p_a p_b (a − b)²`, keyed by
/// level indices `a < b`. They sum to the total QFI.
pub fn fq_pairwise(p: &[f64], levels: &[f64], t: f64) -> Result<BTreeMap<(usize, usize), f64>> {
    check_levels(p, levels)?;
    let mut out = BTreeMap::new();
    for a in 0..p.len() {
        for b in (a + 1)..p.len() {
            let d = levels[a] - levels[b];
            out.insert((a, b), 4.0 * t * t * p[a] * p[b] * d * d);
        }
    }
    Ok(out)
}

/// Weighted QFI `Σ_{a<b} F^{ab}/(2t²(a−b)²)·log(2/(p_a+p_b))`, which reduces
/// to `Σ_{a<b} 2 p_a p_b log(2/(p_a+p_b))` over nondegenerate pairs.
pub fn weighted_fq(p: &[f64], levels: &[f64]) -> Result<f64> {
    check_levels(p, levels)?;
    let gap = degeneracy_gap(levels);
    let mut terms = Vec::new();
    for a in 0..p.len() {
        if p[a] <= 0.0 {
            continue;
        }
        for b in (a + 1)..p.len() {
            let s = p[a] + p[b];
            if p[b] <= 0.0 || (levels[a] - levels[b]).abs() <= gap {
                continue;
            }
            // ln 2 − ln s stays finite where 2/s would overflow.
            terms.push(2.0 * p[a] * p[b] * (LN_2 - s.ln()));
        }
    }
    Ok(crate::numkernel::pairwise_sum(&terms))
}

fn check_kbt(kbt: f64) -> Result<()> {
    if !(kbt >= 0.0) || !kbt.is_finite() {
        return invalid(format!("k_B T must be finite and nonnegative, got {kbt}"));
    }
    Ok(())
}

fn check_fq(fq: f64) -> Result<()> {
    if !(fq >= -1e-12) || !fq.is_finite() {
        return invalid(format!("QFI must be finite and nonnegative, got {fq}"));
    }
    Ok(())
}

/// Heat floor `log 2 · k_B T · F_Q / ‖h_λ‖²` for extracting the parameter
/// with an optimal measurement.
pub fn bound_theorem1(fq: f64, local_seminorm: f64, kbt: f64) -> Result<f64> {
    check_fq(fq)?;
    check_kbt(kbt)?;
    if !(local_seminorm > 0.0) || !local_seminorm.is_finite() {
        return invalid(format!("local generator seminorm must be positive, got {local_seminorm}"));
    }
    Ok(LN_2 * kbt * fq / (local_seminorm * local_seminorm))
}

/// λ-averaged heat floor `log 2 · k_B T · F_Q / t²` for a unit-seminorm `h`.
pub fn bound_avg_heat(fq: f64, t: f64, kbt: f64) -> Result<f64> {
    bound_theorem1(fq, t.abs(), kbt)
}

/// Result of the QFI-erasure bound.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ErasureBound {
    /// Minimum admissible averaged heat `log 2·k_B T·F_Q/t² − k_B T·S(ρ)`.
    pub heat_floor: f64,
    /// Δ_F = log 2·F_Q/t² − S(ρ), in nats.
    pub deficit: f64,
}

/// QFI erasure into a parameter-independent state of entropy `entropy_final`.
pub fn bound_erasure(fq: f64, t: f64, kbt: f64, entropy_final: f64) -> Result<ErasureBound> {
    check_fq(fq)?;
    check_kbt(kbt)?;
    if !(t != 0.0) || !t.is_finite() {
        return invalid(format!("interrogation time must be nonzero, got {t}"));
    }
    if !(entropy_final >= -1e-12) {
        return invalid(format!("final entropy must be nonnegative, got {entropy_final}"));
    }
    let deficit = LN_2 * fq / (t * t) - entropy_final;
    Ok(ErasureBound { heat_floor: kbt * deficit, deficit })
}

/// Low-temperature correction to the erasure floor. `None` gives the plain
/// Landauer form `k_B T·Δ_F`; a supplied hook must never fall below it.
pub fn qs_correction_hook(deficit: f64, kbt: f64, hook: Option<&dyn Fn(f64, f64) -> f64>) -> Result<f64> {
    check_kbt(kbt)?;
    let floor = kbt * deficit;
    let Some(hook) = hook else {
        return Ok(floor);
    };
    let value = hook(deficit, kbt);
    if !(value >= floor - 1e-12 * floor.abs().max(1.0)) {
        return Err(Error::HookNotDominant { value, floor });
    }
    Ok(value)
}

/// Variance floor `(δλ)² ≥ log 2 · k_B T / (t² ΔQ)`.
pub fn precision_floor(t: f64, kbt: f64, heat: f64) -> Result<f64> {
    check_kbt(kbt)?;
    if !(t > 0.0) || !(heat > 0.0) {
        return invalid(format!("precision floor needs t > 0 and heat > 0, got t={t}, heat={heat}"));
    }
    Ok(LN_2 * kbt / (t * t * heat))
}

/// Quantum Cramér–Rao bound 1/F_Q.
pub fn crb(fq: f64) -> Result<f64> {
    if !(fq > 0.0) || !fq.is_finite() {
        return invalid(format!("Cramér-Rao bound needs F_Q > 0, got {fq}"));
    }
    Ok(1.0 / fq)
}

/// Entropy and heat accounting for one probe state and generator.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub t: f64,
    pub fq: f64,
    /// F_Q / t² with the raw interrogation time.
    pub fq_over_t2: f64,
    /// S(ρ_s) of the λ-averaged state.
    pub entropy_rho_s: f64,
    /// Shannon entropy of the outcomes when ρ_s is measured in the state's basis.
    pub record_entropy: f64,
    /// Entropy left in the probe after the cycle (0: reset to the pure input).
    pub entropy_final: f64,
    /// log 2·F_Q/(t‖h‖)².
    pub rhs_eq7: f64,
    pub heat_floor: f64,
    pub kbt: f64,
}

/// Evaluates `𝒮 ≥ S(ρ_s) ≥ log 2·F_Q/(t‖h‖)²` for `e^{-iλht}|ψ⟩` and the
/// corresponding averaged heat floor.
pub fn entropy_bound_eq7(psi: &StateVector, g: &Generator, kbt: f64) -> Result<BoundReport> {
    g.check_dim(psi.dim())?;
    check_kbt(kbt)?;
    if (psi.norm_sqr() - 1.0).abs() > 1e-10 {
        return Err(Error::NotNormalized { norm_sq: psi.norm_sqr() });
    }
    let fq = qfi_pure(psi, g)?;
    let rho_s = rho_s_dephase(&ComplexMatrix::outer(psi), g)?;
    let entropy_rho_s = vn_entropy(&rho_s)?;
    let record_entropy = measurement_record_entropy(&rho_s, &ComplexMatrix::identity(psi.dim()))?;
    let t_eff = g.local_seminorm();
    let (rhs, heat_floor) = if t_eff > 0.0 {
        (LN_2 * fq / (t_eff * t_eff), bound_erasure(fq, t_eff, kbt, 0.0)?.heat_floor)
    } else {
        (0.0, 0.0)
    };
    if entropy_rho_s < rhs - 1e-10 {
        return Err(Error::BoundViolation(format!("S(rho_s) = {entropy_rho_s} below log2 F_Q/t^2 = {rhs}")));
    }
    let fq_over_t2 = if g.t() != 0.0 { fq / (g.t() * g.t()) } else { 0.0 };
    Ok(BoundReport {
        t: g.t(),
        fq,
        fq_over_t2,
        entropy_rho_s,
        record_entropy,
        entropy_final: 0.0,
        rhs_eq7: rhs,
        heat_floor,
        kbt,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qstates::{dicke_state_from_distribution, family_distribution, jz_levels, spin_ops, DickeFamily};

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    fn half_sz(t: f64) -> Generator {
        Generator::new(ComplexMatrix::from_real_diag(&[0.5, -0.5]), t).unwrap()
    }

    fn balanced() -> StateVector {
        let r = 0.5f64.sqrt();
        StateVector::new(vec![c(r), c(r)]).unwrap()
    }

    #[test]
    fn qfi_balanced_qubit() {
        for t in [0.5, 1.0, 3.0] {
            assert!((qfi_pure(&balanced(), &half_sz(t)).unwrap() - t * t).abs() < 1e-12);
        }
    }

    #[test]
    fn qfi_eigenstate_and_ghz() {
        assert!(qfi_pure(&StateVector::basis(2, 0), &half_sz(2.0)).unwrap().abs() < 1e-15);
        let (_, _, jz) = spin_ops(8).unwrap();
        let r = 0.5f64.sqrt();
        let mut amps = vec![c(0.0); 9];
        amps[0] = c(r);
        amps[8] = c(r);
        let ghz = StateVector::new(amps).unwrap();
        let t = 0.7;
        let fq = qfi_pure(&ghz, &Generator::new(jz, t).unwrap()).unwrap();
        assert!((fq - 64.0 * t * t).abs() < 1e-10);
        assert!(qfi_pure(&ghz, &half_sz(1.0)).is_err());
    }

    #[test]
    fn seminorm_examples() {
        assert!((seminorm(&ComplexMatrix::from_real_diag(&[0.5, -0.5])).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(seminorm(&ComplexMatrix::identity(3)).unwrap(), 0.0);
        let (_, _, jz) = spin_ops(6).unwrap();
        assert!((seminorm(&jz).unwrap() - 6.0).abs() < 1e-14);
    }

    #[test]
    fn normalization_preserves_qfi() {
        let (_, _, jz) = spin_ops(6).unwrap();
        let g = Generator::new(jz, 0.3).unwrap();
        let n = g.normalized().unwrap();
        assert!((n.seminorm() - 1.0).abs() < 1e-14);
        assert!((n.t() - 1.8).abs() < 1e-14);
        let p = family_distribution(&DickeFamily::Product, 6).unwrap();
        let psi = dicke_state_from_distribution(&p).unwrap();
        let a = qfi_pure(&psi, &g).unwrap();
        let b = qfi_pure(&psi, &n).unwrap();
        assert!((a - b).abs() < 1e-12 * a);
        assert!(Generator::new(ComplexMatrix::identity(2), 1.0).unwrap().normalized().is_err());
    }

    #[test]
    fn dephase_examples() {
        let g = half_sz(1.0);
        let rho = ComplexMatrix::outer(&balanced());
        let rs = rho_s_dephase(&rho, &g).unwrap();
        assert!(rs.max_abs_diff(&ComplexMatrix::from_real_diag(&[0.5, 0.5])) < 1e-15);
        let id = Generator::new(ComplexMatrix::identity(2), 1.0).unwrap();
        assert!(rho_s_dephase(&rho, &id).unwrap().max_abs_diff(&rho) < 1e-15);
        let twice = rho_s_dephase(&rs, &g).unwrap();
        assert!(twice.max_abs_diff(&rs) < 1e-12);
    }

    #[test]
    fn dephase_dicke_is_diagonal_distribution() {
        let n = 5;
        let (_, _, jz) = spin_ops(n).unwrap();
        let g = Generator::new(jz, 1.0).unwrap();
        let p = family_distribution(&DickeFamily::Product, n).unwrap();
        let psi = dicke_state_from_distribution(&p).unwrap();
        let rs = rho_s_dephase(&ComplexMatrix::outer(&psi), &g).unwrap();
        assert!(rs.max_abs_diff(&ComplexMatrix::from_real_diag(&p)) < 1e-14);
    }

    #[test]
    fn grid_average_examples() {
        let g = half_sz(1.0);
        let avg = rho_s_grid_average(&balanced(), &g, 2).unwrap();
        assert!(avg.max_abs_diff(&ComplexMatrix::from_real_diag(&[0.5, 0.5])) < 1e-15);
        let one = rho_s_grid_average(&balanced(), &g, 1).unwrap();
        assert!(one.max_abs_diff(&ComplexMatrix::outer(&balanced())) < 1e-15);
        let (_, _, jz) = spin_ops(4).unwrap();
        let g4 = Generator::new(jz, 1.0).unwrap();
        let p = family_distribution(&DickeFamily::Product, 4).unwrap();
        let psi = dicke_state_from_distribution(&p).unwrap();
        let a = rho_s_grid_average(&psi, &g4, 5).unwrap();
        let b = rho_s_dephase(&ComplexMatrix::outer(&psi), &g4).unwrap();
        assert!(a.max_abs_diff(&b) < 1e-12);
        let irr = Generator::new(ComplexMatrix::from_real_diag(&[0.0, 0.3]), 1.0).unwrap();
        assert!(matches!(rho_s_grid_average(&balanced(), &irr, 4), Err(Error::NonIntegerSpectrum { .. })));
    }

    #[test]
    fn record_entropy_examples() {
        let half = ComplexMatrix::from_real_diag(&[0.5, 0.5]);
        let r = 0.5f64.sqrt();
        let hadamard = ComplexMatrix::from_real_rows(&[&[r, r], &[r, -r]]).unwrap();
        assert!((measurement_record_entropy(&half, &hadamard).unwrap() - LN_2).abs() < 1e-14);
        let d = ComplexMatrix::from_real_diag(&[0.9, 0.1]);
        let s = vn_entropy(&d).unwrap();
        assert!((measurement_record_entropy(&d, &ComplexMatrix::identity(2)).unwrap() - s).abs() < 1e-15);
        assert!((measurement_record_entropy(&d, &hadamard).unwrap() - LN_2).abs() < 1e-14);
        let bad = ComplexMatrix::from_real_rows(&[&[1.0, 1.0], &[0.0, 1.0]]).unwrap();
        assert!(measurement_record_entropy(&d, &bad).is_err());
    }

    #[test]
    fn pairwise_examples() {
        let m = fq_pairwise(&[0.5, 0.5], &[-0.5, 0.5], 2.0).unwrap();
        assert_eq!(m.len(), 1);
        assert!((m[&(0, 1)] - 4.0).abs() < 1e-15);
        let d = fq_pairwise(&[0.5, 0.5], &[0.3, 0.3], 1.0).unwrap();
        assert_eq!(d[&(0, 1)], 0.0);
        let n = 6;
        let mut p = vec![0.0; n + 1];
        p[0] = 0.5;
        p[n] = 0.5;
        let total: f64 = fq_pairwise(&p, &jz_levels(n), 1.5).unwrap().values().sum();
        assert!((total - (n * n) as f64 * 2.25).abs() < 1e-12);
        assert!(fq_pairwise(&[1.0], &[0.0, 1.0], 1.0).is_err());
    }

    #[test]
    fn weighted_examples() {
        assert!((weighted_fq(&[0.5, 0.5], &[-0.5, 0.5]).unwrap() - LN_2 / 2.0).abs() < 1e-15);
        assert_eq!(weighted_fq(&[0.0, 1.0, 0.0], &[-1.0, 0.0, 1.0]).unwrap(), 0.0);
        let p = family_distribution(&DickeFamily::Product, 4).unwrap();
        assert!(weighted_fq(&p, &jz_levels(4)).unwrap() <= shannon(&p).unwrap() + 1e-12);
    }

    #[test]
    fn optimal_measurement_floor_examples() {
        let t: f64 = 1.7;
        assert!((bound_theorem1(t * t, t, 1.0).unwrap() - LN_2).abs() < 1e-15);
        assert_eq!(bound_theorem1(0.0, t, 1.0).unwrap(), 0.0);
        assert!(bound_theorem1(1.0, 0.0, 1.0).is_err());
    }

    #[test]
    fn avg_heat_examples() {
        let t: f64 = 0.9;
        assert!((bound_avg_heat(t * t, t, 2.0).unwrap() - 2.0 * LN_2).abs() < 1e-15);
        let n = 5.0;
        assert!((bound_avg_heat(n * n * t * t, t, 1.0).unwrap() - n * n * LN_2).abs() < 1e-13);
        assert_eq!(bound_avg_heat(t * t, t, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn erasure_examples() {
        let t: f64 = 2.0;
        let b = bound_erasure(t * t, t, 0.4, LN_2).unwrap();
        assert_eq!(b.heat_floor, 0.0);
        assert_eq!(b.deficit, 0.0);
        let plain = bound_erasure(3.0, t, 0.4, 0.0).unwrap();
        assert!((plain.heat_floor - bound_avg_heat(3.0, t, 0.4).unwrap()).abs() < 1e-15);
        let vac = bound_erasure(0.0, 1.0, 1.0, LN_2).unwrap();
        assert!((vac.heat_floor + LN_2).abs() < 1e-15);
        assert!(bound_erasure(1.0, 1.0, 1.0, -0.5).is_err());
    }

    #[test]
    fn correction_hook_examples() {
        assert!((qs_correction_hook(LN_2, 1.0, None).unwrap() - LN_2).abs() < 1e-15);
        assert_eq!(qs_correction_hook(0.0, 1.0, None).unwrap(), 0.0);
        let double = |d: f64, kbt: f64| 2.0 * kbt * d;
        assert!((qs_correction_hook(1.0, 0.7, Some(&double)).unwrap() - 1.4).abs() < 1e-15);
        let half = |d: f64, kbt: f64| 0.5 * kbt * d;
        assert!(matches!(qs_correction_hook(1.0, 1.0, Some(&half)), Err(Error::HookNotDominant { .. })));
    }

    #[test]
    fn precision_and_crb() {
        let kbt = 0.3;
        let f = precision_floor(1.0, kbt, LN_2 * kbt).unwrap();
        assert!((f - 1.0).abs() < 1e-15);
        assert!((precision_floor(2.0, kbt, LN_2 * kbt).unwrap() - 0.25).abs() < 1e-15);
        assert!(precision_floor(1.0, kbt, 1e300).unwrap() < 1e-300);
        assert!(precision_floor(1.0, kbt, 0.0).is_err());
        assert!(precision_floor(0.0, kbt, 1.0).is_err());
        let t: f64 = 3.0;
        assert!((crb(t * t).unwrap() - 1.0 / 9.0).abs() < 1e-16);
        let n = 10.0;
        assert!((crb(n * n * t * t).unwrap() * n - crb(n * t * t).unwrap()).abs() < 1e-15);
        assert!(crb(0.0).is_err());
    }

    #[test]
    fn eq7_examples() {
        let r = entropy_bound_eq7(&balanced(), &half_sz(1.3), 1.0).unwrap();
        assert!((r.entropy_rho_s - LN_2).abs() < 1e-12);
        assert!((r.rhs_eq7 - LN_2).abs() < 1e-12);
        assert!((r.heat_floor - LN_2).abs() < 1e-12);
        let e = entropy_bound_eq7(&StateVector::basis(2, 1), &half_sz(1.0), 1.0).unwrap();
        assert!(e.entropy_rho_s.abs() < 1e-15 && e.rhs_eq7.abs() < 1e-15);
        let n = 16;
        let (_, _, jz) = spin_ops(n).unwrap();
        let p = family_distribution(&DickeFamily::Product, n).unwrap();
        let psi = dicke_state_from_distribution(&p).unwrap();
        let r = entropy_bound_eq7(&psi, &Generator::new(jz, 1.0).unwrap(), 1.0).unwrap();
        assert!(r.entropy_rho_s > r.rhs_eq7 && r.rhs_eq7.is_finite());
    }

    #[test]
    fn local_generator_examples() {
        let h = ComplexMatrix::from_rows(vec![vec![c(0.4), C64::new(0.1, 0.3)], vec![C64::new(0.1, -0.3), c(-0.2)]])
            .unwrap();
        let t = 1.5;
        let g = Generator::new(h.clone(), t).unwrap();
        let fd = local_generator_fd(|l| Ok(g.unitary(l)), 0.37, 1e-4).unwrap();
        assert!(fd.max_abs_diff(&h.scale_real(t)) < 1e-6);
        let constant = local_generator_fd(|_| Ok(ComplexMatrix::identity(3)), 0.0, 1e-3).unwrap();
        assert_eq!(constant.max_abs(), 0.0);
        let bad = local_generator_fd(|_| Ok(ComplexMatrix::identity(2).scale_real(2.0)), 0.0, 1e-3);
        assert!(matches!(bad, Err(Error::NotUnitary { .. })));
        assert!(local_generator_fd(|l| Ok(g.unitary(l)), 0.0, 0.0).is_err());
    }
}
