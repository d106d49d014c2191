//! Erasure of a qubit probe's Fisher information by a thermal bosonic mode
//! under the quantum Rabi Hamiltonian
//!
//! ```text
//! H = (Ω/2) σ_z ⊗ I + ω I ⊗ a†a − g σ_x ⊗ (a + a†)
//! ```
//!
//! The probe starts in `c0|0⟩ + √(1−c0²) e^{−iφ}|1⟩` with `φ = λ·t_enc`
//! and the mode in a thermal state. Qubit index 0 is the upper level
//! (`σ_z = +1`), so `c0` is the excited amplitude that the mode absorbs.
//!
//! The environment is never materialized as a density matrix over the full
//! space: the thermal mixture is carried as a list of weighted pure branches
//! `p_n · U|ψ, n⟩`.

use std::f64::consts::{LN_2, PI};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::metro::bound_erasure;
use crate::numkernel::{
    herm_eig, pairwise_sum, pairwise_sum_matrices, trace_distance_unchecked, vn_entropy, ComplexMatrix, HermEig, C64,
};
use crate::qstates::{fock_ops, thermal_populations};

/// Top-Fock population above which a run is rejected.
pub const TRUNCATION_TAIL_LIMIT: f64 = 1e-6;

/// Parameters of the erasure experiment, `k_B = ħ = 1`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct RabiConfig {
    /// Ω, qubit splitting.
    pub qubit_freq: f64,
    /// ω, mode frequency.
    pub mode_freq: f64,
    /// g, qubit-mode coupling.
    pub coupling: f64,
    /// Mode temperature in energy units.
    pub temperature: f64,
    /// Fock cutoff.
    pub nmax: usize,
    /// Encoding (interrogation) time entering F_Q.
    pub t_enc: f64,
    /// Initial amplitude of |0⟩.
    pub c0: f64,
    /// Size of the uniform phase grid over [0, 2π).
    pub m_lambda: usize,
    /// Erasure duration τ.
    pub tau: f64,
}

impl Default for RabiConfig {
    fn default() -> Self {
        Self {
            qubit_freq: 1.0,
            mode_freq: 1.0,
            coupling: 0.05,
            temperature: 0.3,
            nmax: 20,
            t_enc: 1.0,
            c0: std::f64::consts::FRAC_1_SQRT_2,
            m_lambda: 16,
            tau: 30.8,
        }
    }
}

impl RabiConfig {
    pub fn validate(&self) -> Result<()> {
        let positive = [("qubit_freq", self.qubit_freq), ("mode_freq", self.mode_freq), ("t_enc", self.t_enc)];
        for (name, v) in positive {
            if !(v > 0.0) || !v.is_finite() {
                return invalid(format!("{name} must be positive, got {v}"));
            }
        }
        if !(self.coupling >= 0.0) || !self.coupling.is_finite() {
            return invalid(format!("coupling must be nonnegative, got {}", self.coupling));
        }
        if !(self.temperature >= 0.0) || !self.temperature.is_finite() {
            return invalid(format!("temperature must be nonnegative, got {}", self.temperature));
        }
        if !(0.0..=1.0).contains(&self.c0) {
            return invalid(format!("c0 must lie in [0, 1], got {}", self.c0));
        }
        if self.nmax < 10 {
            return invalid(format!("nmax must be at least 10, got {}", self.nmax));
        }
        if self.m_lambda < 2 {
            return invalid(format!("m_lambda must be at least 2, got {}", self.m_lambda));
        }
        if !(self.tau >= 0.0) || !self.tau.is_finite() {
            return invalid(format!("tau must be nonnegative, got {}", self.tau));
        }
        Ok(())
    }

    pub fn kbt(&self) -> f64 {
        self.temperature
    }

    /// Encoded phases `φ_j = 2πj/M`.
    pub fn phase_grid(&self) -> Vec<f64> {
        (0..self.m_lambda).map(|j| 2.0 * PI * j as f64 / self.m_lambda as f64).collect()
    }
}

/// F_Q/t² = 4c0²(1 − c0²) for the encoded qubit.
pub fn fq_over_t2(c0: f64) -> f64 {
    4.0 * c0 * c0 * (1.0 - c0 * c0)
}

/// Full qubit-mode Hamiltonian on dimension `2(nmax+1)`, qubit index major.
pub fn build_hamiltonian(cfg: &RabiConfig) -> Result<ComplexMatrix> {
    Ok(Operators::new(cfg)?.total())
}

struct Operators {
    system: ComplexMatrix,
    environment: ComplexMatrix,
    interaction: ComplexMatrix,
}

impl Operators {
    fn new(cfg: &RabiConfig) -> Result<Self> {
        let (a, ad, num) = fock_ops(cfg.nmax)?;
        let id_e = ComplexMatrix::identity(cfg.nmax + 1);
        let sz = ComplexMatrix::from_real_diag(&[1.0, -1.0]);
        let sx = ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]])?;
        Ok(Self {
            system: sz.kron(&id_e).scale_real(cfg.qubit_freq / 2.0),
            environment: ComplexMatrix::identity(2).kron(&num).scale_real(cfg.mode_freq),
            interaction: sx.kron(&(&a + &ad)).scale_real(-cfg.coupling),
        })
    }

    fn total(&self) -> ComplexMatrix {
        &(&self.system + &self.environment) + &self.interaction
    }
}

/// Energies and state summaries of one branch-mixture at one time.
#[derive(Clone, Debug)]
struct Snapshot {
    rho_s: ComplexMatrix,
    rho_e: ComplexMatrix,
    energy: f64,
    system: f64,
    environment: f64,
    interaction: f64,
    purity: f64,
}

/// Outcome of one encoded phase.
#[derive(Clone, Debug)]
pub struct SingleRun {
    pub phi: f64,
    /// Final reduced probe state ρ_S(τ).
    pub rho_s: ComplexMatrix,
    /// Final reduced mode state ρ_E(τ).
    pub rho_e: ComplexMatrix,
    /// ΔQ_E = ω tr[a†a (ρ_E(τ) − ρ_E(0))].
    pub heat: f64,
    /// S(ρ_S(τ)).
    pub entropy_s: f64,
    pub energy_initial: f64,
    pub energy_final: f64,
    pub delta_system: f64,
    pub delta_interaction: f64,
    pub purity_initial: f64,
    pub purity_final: f64,
    /// Largest top-Fock population seen at any checkpoint.
    pub top_population: f64,
}

/// Per-c0 result of the erasure experiment.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RabiOutcome {
    pub c0: f64,
    pub fq_over_t2: f64,
    /// λ-averaged heat ΔQ_E.
    pub heat_avg: f64,
    /// λ-average of S(ρ_S(τ)).
    pub entropy_final_avg: f64,
    /// S of the λ-averaged final probe state.
    pub entropy_of_avg: f64,
    /// log 2·k_B T·F_Q/t² − k_B T·entropy_of_avg.
    pub bound_floor: f64,
    /// Max pairwise trace distance of the final probe states over the phase grid.
    pub erasure_quality: f64,
    #[serde(skip)]
    pub energy_drift: f64,
    #[serde(skip)]
    pub bookkeeping_residual: f64,
    #[serde(skip)]
    pub purity_drift: f64,
}

impl RabiOutcome {
    /// heat_avg + k_B T·S(ρ_avg) − log 2·k_B T·F_Q/t², which the erasure
    /// bound requires to be ≥ −k_B T·erasure_quality.
    pub fn audit_margin(&self, kbt: f64) -> f64 {
        self.heat_avg + kbt * self.entropy_of_avg - LN_2 * kbt * self.fq_over_t2
    }

    pub fn audit_passes(&self, kbt: f64) -> bool {
        self.audit_margin(kbt) >= -kbt * self.erasure_quality - 1e-12
    }
}

/// Diagonalized model for one configuration; reusable across phases, c0
/// values and erasure times.
pub struct RabiModel {
    cfg: RabiConfig,
    ops: Operators,
    hamiltonian: ComplexMatrix,
    eig: HermEig,
    populations: Vec<f64>,
}

impl RabiModel {
    pub fn new(cfg: &RabiConfig) -> Result<Self> {
        cfg.validate()?;
        let ops = Operators::new(cfg)?;
        let hamiltonian = ops.total();
        let eig = herm_eig(&hamiltonian)?;
        let populations = thermal_populations(cfg.mode_freq, cfg.temperature, cfg.nmax)?;
        let tail = populations[cfg.nmax];
        if tail > TRUNCATION_TAIL_LIMIT {
            return Err(Error::TruncationTail { population: tail, nmax: cfg.nmax });
        }
        Ok(Self { cfg: cfg.clone(), ops, hamiltonian, eig, populations })
    }

    pub fn config(&self) -> &RabiConfig {
        &self.cfg
    }

    pub fn hamiltonian(&self) -> &ComplexMatrix {
        &self.hamiltonian
    }

    pub fn spectrum(&self) -> &[f64] {
        self.eig.values()
    }

    fn env_dim(&self) -> usize {
        self.cfg.nmax + 1
    }

    /// `U(τ)|q, n⟩` for both qubit levels and every occupied Fock level.
    fn propagated_basis(&self, tau: f64) -> Result<Vec<[Vec<C64>; 2]>> {
        let dim = 2 * self.env_dim();
        self.populations
            .iter()
            .enumerate()
            .map(|(n, _)| {
                let mut e0 = vec![C64::new(0.0, 0.0); dim];
                let mut e1 = e0.clone();
                e0[n] = C64::new(1.0, 0.0);
                e1[self.env_dim() + n] = C64::new(1.0, 0.0);
                Ok([self.eig.propagate(tau, &e0)?, self.eig.propagate(tau, &e1)?])
            })
            .collect()
    }

    /// Weighted pure branches of the evolved state for encoded phase φ.
    fn branches(&self, basis: &[[Vec<C64>; 2]], c0: f64, phi: f64) -> Vec<(f64, Vec<C64>)> {
        let a0 = C64::new(c0, 0.0);
        let a1 = C64::from_polar((1.0 - c0 * c0).max(0.0).sqrt(), -phi);
        self.populations
            .iter()
            .zip(basis)
            .filter(|(&p, _)| p > 0.0)
            .map(|(&p, [u0, u1])| (p, u0.iter().zip(u1).map(|(x, y)| a0 * x + a1 * y).collect()))
            .collect()
    }

    fn reduced_qubit(&self, branches: &[(f64, Vec<C64>)]) -> ComplexMatrix {
        let ne = self.env_dim();
        ComplexMatrix::from_fn(2, 2, |i, j| {
            branches
                .iter()
                .map(|(p, v)| {
                    let s: C64 = (0..ne).map(|m| v[i * ne + m] * v[j * ne + m].conj()).sum();
                    s * *p
                })
                .sum()
        })
    }

    fn top_population(&self, branches: &[(f64, Vec<C64>)]) -> f64 {
        let ne = self.env_dim();
        let top = ne - 1;
        branches.iter().map(|(p, v)| p * (v[top].norm_sqr() + v[ne + top].norm_sqr())).sum()
    }

    fn snapshot(&self, branches: &[(f64, Vec<C64>)]) -> Result<Snapshot> {
        let ne = self.env_dim();
        let rho_s = self.reduced_qubit(branches);
        let rho_e = ComplexMatrix::from_fn(ne, ne, |m, k| {
            branches.iter().map(|(p, v)| (v[m] * v[k].conj() + v[ne + m] * v[ne + k].conj()) * *p).sum()
        });
        let expect = |op: &ComplexMatrix| -> Result<f64> {
            let mut terms = Vec::with_capacity(branches.len());
            for (p, v) in branches {
                terms.push(p * op.sandwich(v, v)?.re);
            }
            Ok(pairwise_sum(&terms))
        };
        let system = expect(&self.ops.system)?;
        let environment = expect(&self.ops.environment)?;
        let interaction = expect(&self.ops.interaction)?;
        let mut purity_terms = Vec::new();
        for (p, v) in branches {
            for (q, w) in branches {
                let ov: C64 = v.iter().zip(w).map(|(a, b)| a.conj() * b).sum();
                purity_terms.push(p * q * ov.norm_sqr());
            }
        }
        Ok(Snapshot {
            rho_s,
            rho_e,
            energy: system + environment + interaction,
            system,
            environment,
            interaction,
            purity: pairwise_sum(&purity_terms),
        })
    }

    fn check_tail(&self, population: f64) -> Result<()> {
        if population > TRUNCATION_TAIL_LIMIT {
            return Err(Error::TruncationTail { population, nmax: self.cfg.nmax });
        }
        Ok(())
    }

    /// One encoded phase with the configured `c0` and `τ`.
    pub fn run_single(&self, phi: f64) -> Result<SingleRun> {
        self.run_single_with(self.cfg.c0, phi, &self.propagated_basis(self.cfg.tau)?)
    }

    fn run_single_with(&self, c0: f64, phi: f64, basis_tau: &[[Vec<C64>; 2]]) -> Result<SingleRun> {
        if !(0.0..2.0 * PI).contains(&phi) {
            return invalid(format!("encoded phase must lie in [0, 2π), got {phi}"));
        }
        let basis_0 = self.propagated_basis(0.0)?;
        let initial = self.branches(&basis_0, c0, phi);
        let fin = self.branches(basis_tau, c0, phi);
        let top = self.top_population(&initial).max(self.top_population(&fin));
        self.check_tail(top)?;
        let s0 = self.snapshot(&initial)?;
        let s1 = self.snapshot(&fin)?;
        let entropy_s = vn_entropy(&s1.rho_s.hermitian_part())?;
        Ok(SingleRun {
            phi,
            heat: s1.environment - s0.environment,
            entropy_s,
            energy_initial: s0.energy,
            energy_final: s1.energy,
            delta_system: s1.system - s0.system,
            delta_interaction: s1.interaction - s0.interaction,
            purity_initial: s0.purity,
            purity_final: s1.purity,
            top_population: top,
            rho_s: s1.rho_s,
            rho_e: s1.rho_e,
        })
    }

    /// Averages [`RabiModel::run_single`] over the phase grid for one `c0`.
    pub fn outcome(&self, c0: f64) -> Result<RabiOutcome> {
        if !(0.0..=1.0).contains(&c0) {
            return invalid(format!("c0 must lie in [0, 1], got {c0}"));
        }
        let basis_tau = self.propagated_basis(self.cfg.tau)?;
        let runs: Vec<SingleRun> = self
            .cfg
            .phase_grid()
            .into_par_iter()
            .map(|phi| self.run_single_with(c0, phi, &basis_tau))
            .collect::<Result<_>>()?;
        let m = runs.len() as f64;
        let heats: Vec<f64> = runs.iter().map(|r| r.heat).collect();
        let entropies: Vec<f64> = runs.iter().map(|r| r.entropy_s).collect();
        let states: Vec<ComplexMatrix> = runs.iter().map(|r| r.rho_s.clone()).collect();
        let rho_avg = pairwise_sum_matrices(&states).expect("m_lambda >= 2").scale_real(1.0 / m);
        let entropy_of_avg = vn_entropy(&rho_avg.hermitian_part())?;
        let fq_t2 = fq_over_t2(c0);
        let t = self.cfg.t_enc;
        let bound_floor = bound_erasure(fq_t2 * t * t, t, self.cfg.kbt(), entropy_of_avg)?.heat_floor;
        let energy_drift = runs.iter().map(|r| (r.energy_final - r.energy_initial).abs()).fold(0.0, f64::max);
        let bookkeeping_residual =
            runs.iter().map(|r| (r.heat + r.delta_system + r.delta_interaction).abs()).fold(0.0, f64::max);
        let purity_drift = runs.iter().map(|r| (r.purity_final - r.purity_initial).abs()).fold(0.0, f64::max);
        Ok(RabiOutcome {
            c0,
            fq_over_t2: fq_t2,
            heat_avg: pairwise_sum(&heats) / m,
            entropy_final_avg: pairwise_sum(&entropies) / m,
            entropy_of_avg,
            bound_floor,
            erasure_quality: max_pairwise_distance(&states),
            energy_drift,
            bookkeeping_residual,
            purity_drift,
        })
    }

    /// Max trace distance between final probe states across the phase grid,
    /// for the configured `c0`.
    pub fn erasure_quality(&self, tau: f64) -> Result<f64> {
        if !(tau >= 0.0) {
            return invalid(format!("tau must be nonnegative, got {tau}"));
        }
        let basis = self.propagated_basis(tau)?;
        let mut states = Vec::with_capacity(self.cfg.m_lambda);
        for phi in self.cfg.phase_grid() {
            let br = self.branches(&basis, self.cfg.c0, phi);
            self.check_tail(self.top_population(&br))?;
            states.push(self.reduced_qubit(&br));
        }
        Ok(max_pairwise_distance(&states))
    }
}

fn max_pairwise_distance(states: &[ComplexMatrix]) -> f64 {
    let mut best: f64 = 0.0;
    for i in 0..states.len() {
        for j in (i + 1)..states.len() {
            best = best.max(trace_distance_unchecked(&states[i], &states[j]));
        }
    }
    best
}

/// Single encoded phase of the configured experiment.
pub fn run_single(cfg: &RabiConfig, phi: f64) -> Result<SingleRun> {
    RabiModel::new(cfg)?.run_single(phi)
}

/// Erasure experiment for every `c0`, sorted by F_Q/t². Fails if the
/// averaged erasure bound is violated beyond the imperfect-erasure slack
/// `k_B T·erasure_quality`.
pub fn run_figure2(cfg: &RabiConfig, c0_list: &[f64]) -> Result<Vec<RabiOutcome>> {
    if c0_list.is_empty() {
        return invalid("c0 list is empty");
    }
    if let Some(c0) = c0_list.iter().find(|c| !(**c > 0.0 && **c < 1.0)) {
        return invalid(format!("every c0 must lie in (0, 1), got {c0}"));
    }
    let model = RabiModel::new(cfg)?;
    let mut outcomes: Vec<RabiOutcome> = c0_list.par_iter().map(|&c0| model.outcome(c0)).collect::<Result<_>>()?;
    outcomes.sort_by(|a, b| a.fq_over_t2.total_cmp(&b.fq_over_t2));
    let kbt = cfg.kbt();
    if let Some(bad) = outcomes.iter().find(|o| !o.audit_passes(kbt)) {
        return Err(Error::BoundViolation(format!(
            "erasure bound fails at c0 = {}: margin {} below slack {}",
            bad.c0,
            bad.audit_margin(kbt),
            -kbt * bad.erasure_quality
        )));
    }
    Ok(outcomes)
}

pub fn erasure_quality(cfg: &RabiConfig, tau: f64) -> Result<f64> {
    RabiModel::new(cfg)?.erasure_quality(tau)
}

/// Erasure-time scan result.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ErasureScan {
    pub tau_star: f64,
    pub quality: f64,
    /// `(τ, erasure_quality)` for every grid point.
    pub profile: Vec<(f64, f64)>,
}

/// Grid point with the lowest quality; ties within 1e-12 go to the earliest point.
pub fn argmin_profile(profile: &[(f64, f64)]) -> Option<(f64, f64)> {
    let mut best: Option<(f64, f64)> = None;
    for &(tau, q) in profile {
        match best {
            Some((_, bq)) if q >= bq - 1e-12 => {}
            _ => best = Some((tau, q)),
        }
    }
    best
}

/// Scans `steps` equally spaced erasure times in `[tau_min, tau_max]`.
pub fn find_erasure_time(cfg: &RabiConfig, tau_min: f64, tau_max: f64, steps: usize) -> Result<ErasureScan> {
    if !(tau_min < tau_max) || !(tau_min >= 0.0) || steps < 2 {
        return invalid(format!(
            "scan needs 0 <= tau_min < tau_max and steps >= 2, got [{tau_min}, {tau_max}] x {steps}"
        ));
    }
    let model = RabiModel::new(cfg)?;
    let span = tau_max - tau_min;
    let profile: Vec<(f64, f64)> = (0..steps)
        .into_par_iter()
        .map(|i| {
            let tau = tau_min + span * i as f64 / (steps - 1) as f64;
            Ok((tau, model.erasure_quality(tau)?))
        })
        .collect::<Result<_>>()?;
    let (tau_star, quality) = argmin_profile(&profile).expect("steps >= 2");
    Ok(ErasureScan { tau_star, quality, profile })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> RabiConfig {
        RabiConfig { nmax: 12, ..RabiConfig::default() }
    }

    #[test]
    fn decoupled_spectrum() {
        let c = RabiConfig { coupling: 0.0, qubit_freq: 0.8, ..cfg() };
        let model = RabiModel::new(&c).unwrap();
        let mut expect: Vec<f64> = (0..=c.nmax).flat_map(|n| [0.4 + n as f64, -0.4 + n as f64]).collect();
        expect.sort_by(f64::total_cmp);
        for (a, b) in model.spectrum().iter().zip(&expect) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn hamiltonian_shape_and_level_repulsion() {
        let c = RabiConfig::default();
        let h = build_hamiltonian(&c).unwrap();
        assert_eq!((h.rows(), h.cols()), (42, 42));
        assert!(h.hermiticity_deviation() < 1e-12);
        let model = RabiModel::new(&c).unwrap();
        assert!(model.spectrum()[0] < -c.qubit_freq / 2.0);
    }

    #[test]
    fn no_coupling_no_heat() {
        let c = RabiConfig { coupling: 0.0, ..cfg() };
        let r = run_single(&c, 0.3).unwrap();
        assert!(r.heat.abs() < 1e-12);
        assert!(r.entropy_s.abs() < 1e-10);
    }

    #[test]
    fn zero_time_is_identity() {
        let c = RabiConfig { tau: 0.0, ..cfg() };
        let r = run_single(&c, 1.0).unwrap();
        assert!(r.heat.abs() < 1e-14);
        assert!(r.entropy_s.abs() < 1e-10);
    }

    #[test]
    fn energy_is_conserved() {
        let r = run_single(&cfg(), 2.0).unwrap();
        assert!((r.energy_final - r.energy_initial).abs() < 1e-9);
        assert!((r.heat + r.delta_system + r.delta_interaction).abs() < 1e-9);
        assert!((r.purity_final - r.purity_initial).abs() < 1e-9);
        assert!(r.heat > 0.0);
    }

    #[test]
    fn phase_out_of_range() {
        assert!(run_single(&cfg(), 2.0 * PI).is_err());
        assert!(run_single(&cfg(), -0.1).is_err());
    }

    #[test]
    fn config_validation() {
        assert!(RabiModel::new(&RabiConfig { c0: 1.2, ..cfg() }).is_err());
        assert!(RabiModel::new(&RabiConfig { nmax: 5, ..cfg() }).is_err());
        assert!(RabiModel::new(&RabiConfig { m_lambda: 1, ..cfg() }).is_err());
        assert!(RabiModel::new(&RabiConfig { mode_freq: 0.0, ..cfg() }).is_err());
    }

    #[test]
    fn hot_mode_trips_truncation_guard() {
        let c = RabiConfig { temperature: 50.0, ..cfg() };
        assert!(matches!(RabiModel::new(&c), Err(Error::TruncationTail { .. })));
    }

    #[test]
    fn quality_at_zero_time() {
        let c = cfg();
        let q = erasure_quality(&c, 0.0).unwrap();
        assert!(q > 0.9 && q <= 1.0 + 1e-12);
        let free = RabiConfig { coupling: 0.0, ..cfg() };
        let q0 = erasure_quality(&free, 0.0).unwrap();
        let q1 = erasure_quality(&free, 17.0).unwrap();
        assert!((q0 - q1).abs() < 1e-12);
    }

    #[test]
    fn argmin_prefers_earliest_tie_and_finds_dip() {
        let flat = [(1.0, 0.5), (2.0, 0.5), (3.0, 0.5)];
        assert_eq!(argmin_profile(&flat), Some((1.0, 0.5)));
        let dip: Vec<(f64, f64)> = (0..21)
            .map(|i| {
                let t = i as f64;
                (t, if i == 13 { 0.01 } else { 0.5 + 0.01 * t })
            })
            .collect();
        assert_eq!(argmin_profile(&dip), Some((13.0, 0.01)));
    }

    #[test]
    fn decoupled_scan_returns_start() {
        let c = RabiConfig { coupling: 0.0, ..cfg() };
        let s = find_erasure_time(&c, 2.0, 10.0, 9).unwrap();
        assert_eq!(s.tau_star, 2.0);
        assert!(find_erasure_time(&c, 3.0, 2.0, 9).is_err());
        assert!(find_erasure_time(&c, 1.0, 2.0, 1).is_err());
    }

    #[test]
    fn fully_excited_limit_has_nonpositive_floor() {
        let o = RabiModel::new(&cfg()).unwrap().outcome(1.0).unwrap();
        assert_eq!(o.fq_over_t2, 0.0);
        assert!(o.bound_floor <= 0.0);
        assert!(o.audit_passes(cfg().kbt()));
        let near = run_figure2(&cfg(), &[0.999]).unwrap();
        assert!(near[0].bound_floor <= 0.0);
        assert!(run_figure2(&cfg(), &[1.0]).is_err());
        assert!(run_figure2(&cfg(), &[]).is_err());
    }
}
