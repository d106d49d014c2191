//! JSON run configurations. Every record rejects unknown keys.

use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Deserialize;

use crate::dickelab::default_n_list;
use crate::error::{invalid, Result};
use crate::numkernel::{ComplexMatrix, StateVector, C64};
use crate::qstates::{dicke_state_from_distribution, family_distribution, DickeFamily};
use crate::rabi::RabiConfig;

/// A complex entry written either as a number or as `[re, im]`.
#[derive(Clone, Copy, Debug, Deserialize)]
#[serde(untagged)]
pub enum ComplexValue {
    Real(f64),
    Pair([f64; 2]),
}

impl From<ComplexValue> for C64 {
    fn from(v: ComplexValue) -> Self {
        match v {
            ComplexValue::Real(re) => C64::new(re, 0.0),
            ComplexValue::Pair([re, im]) => C64::new(re, im),
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum StateSpec {
    Family(FamilyState),
    Coefficients(CoefficientState),
}

/// `√p_k` amplitudes of a named family.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyState {
    pub family: DickeFamily,
    pub n: usize,
}

/// Explicit Dicke coefficients `c_0..c_N`, rescaled to unit norm.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoefficientState {
    pub coefficients: Vec<ComplexValue>,
}

impl StateSpec {
    pub fn build(&self) -> Result<StateVector> {
        match self {
            Self::Family(f) => dicke_state_from_distribution(&family_distribution(&f.family, f.n)?),
            Self::Coefficients(c) => {
                if c.coefficients.len() < 2 {
                    return invalid("state needs at least two coefficients");
                }
                StateVector::normalized(c.coefficients.iter().map(|&v| v.into()).collect())
            }
        }
    }
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum GeneratorSpec {
    /// Collective `Jz` on the state's Dicke levels.
    #[default]
    Jz,
    Diagonal(Vec<f64>),
    Matrix(Vec<Vec<ComplexValue>>),
}

impl GeneratorSpec {
    pub fn build(&self, dim: usize) -> Result<ComplexMatrix> {
        match self {
            Self::Jz => {
                let half = (dim - 1) as f64 / 2.0;
                Ok(ComplexMatrix::from_real_diag(&(0..dim).map(|k| k as f64 - half).collect::<Vec<_>>()))
            }
            Self::Diagonal(d) => Ok(ComplexMatrix::from_real_diag(d)),
            Self::Matrix(rows) => {
                ComplexMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| v.into()).collect()).collect())
            }
        }
    }
}

fn one() -> f64 {
    1.0
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundsConfig {
    pub state: StateSpec,
    #[serde(default)]
    pub generator: GeneratorSpec,
    #[serde(default = "one")]
    pub t: f64,
    #[serde(default = "one")]
    pub kbt: f64,
}

/// Erasure-time grid.
#[derive(Clone, Copy, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ScanSpec {
    pub tau_min: f64,
    pub tau_max: f64,
    pub steps: usize,
}

impl Default for ScanSpec {
    fn default() -> Self {
        Self { tau_min: 20.0, tau_max: 40.0, steps: 201 }
    }
}

impl ScanSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.tau_min >= 0.0 && self.tau_min < self.tau_max && self.tau_max.is_finite()) || self.steps < 2 {
            return invalid(format!(
                "scan needs 0 <= tau_min < tau_max and steps >= 2, got [{}, {}] x {}",
                self.tau_min, self.tau_max, self.steps
            ));
        }
        Ok(())
    }
}

/// c0 values with F_Q/t² ≈ 0.36, 0.64, 0.84, 0.96, 1.
pub const DEFAULT_C0_GRID: [f64; 5] = [0.316, 0.447, 0.548, 0.632, 0.707];

fn default_c0_grid() -> Vec<f64> {
    DEFAULT_C0_GRID.to_vec()
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RabiRunConfig {
    #[serde(default)]
    pub model: RabiConfig,
    #[serde(default = "default_c0_grid")]
    pub c0_grid: Vec<f64>,
    /// When present, τ is replaced by the scan optimum before the run.
    #[serde(default)]
    pub scan: Option<ScanSpec>,
}

impl RabiRunConfig {
    pub fn validate(&self) -> Result<()> {
        self.model.validate()?;
        if self.c0_grid.is_empty() {
            return invalid("c0_grid is empty");
        }
        if let Some(c0) = self.c0_grid.iter().find(|c| !(**c > 0.0 && **c < 1.0)) {
            return invalid(format!("every c0 must lie in (0, 1), got {c0}"));
        }
        self.scan.map_or(Ok(()), |s| s.validate())
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ErasureScanConfig {
    #[serde(default)]
    pub model: RabiConfig,
    #[serde(default)]
    pub scan: ScanSpec,
}

impl ErasureScanConfig {
    pub fn validate(&self) -> Result<()> {
        self.model.validate()?;
        self.scan.validate()
    }
}

fn default_families() -> Vec<DickeFamily> {
    vec![DickeFamily::Product, DickeFamily::squeezed(), DickeFamily::TwinFock, DickeFamily::ghz_like()]
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DickeConfig {
    #[serde(default = "default_families")]
    pub families: Vec<DickeFamily>,
    #[serde(default = "default_n_list")]
    pub n_list: Vec<usize>,
}

impl DickeConfig {
    pub fn validate(&self) -> Result<()> {
        if self.families.is_empty() {
            return invalid("families is empty");
        }
        if self.n_list.is_empty() {
            return invalid("n_list is empty");
        }
        for f in &self.families {
            for &n in &self.n_list {
                f.validate(n)?;
            }
        }
        Ok(())
    }
}

/// Reads and parses a JSON document; the error string is a single line.
pub fn load<T: DeserializeOwned>(path: &Path) -> std::result::Result<T, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("bad config {}: {e}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_fill_missing_sections() {
        let c: RabiRunConfig = serde_json::from_str("{}").unwrap();
        assert_eq!(c.model, RabiConfig::default());
        assert_eq!(c.c0_grid, DEFAULT_C0_GRID.to_vec());
        assert!(c.scan.is_none());
        let d: DickeConfig = serde_json::from_str(r#"{"families": [{"kind": "product"}]}"#).unwrap();
        assert_eq!(d.n_list, default_n_list());
    }

    #[test]
    fn unknown_keys_are_rejected() {
        assert!(serde_json::from_str::<RabiRunConfig>(r#"{"modle": {}}"#).is_err());
        assert!(serde_json::from_str::<RabiRunConfig>(r#"{"model": {"omega": 1}}"#).is_err());
        assert!(serde_json::from_str::<DickeConfig>(r#"{"families": [{"kind": "ghz_like", "mu": 2}]}"#).is_err());
        assert!(serde_json::from_str::<BoundsConfig>(r#"{"state": {"coefficients": [1, 0]}, "kbT": 1}"#).is_err());
    }

    #[test]
    fn complex_entries() {
        let c: BoundsConfig = serde_json::from_str(
            r#"{"state": {"coefficients": [0.6, [0, 0.8]]}, "generator": {"diagonal": [0.5, -0.5]}}"#,
        )
        .unwrap();
        let psi = c.state.build().unwrap();
        assert_eq!(psi.amplitudes()[1], C64::new(0.0, 0.8));
        assert_eq!(c.t, 1.0);
        assert_eq!(c.generator.build(2).unwrap()[(0, 0)], C64::new(0.5, 0.0));
    }

    #[test]
    fn validation_catches_bad_values() {
        let odd: DickeConfig =
            serde_json::from_str(r#"{"families": [{"kind": "twin_fock"}], "n_list": [8, 9]}"#).unwrap();
        assert!(odd.validate().is_err());
        let c0: RabiRunConfig = serde_json::from_str(r#"{"c0_grid": [0.5, 1.0]}"#).unwrap();
        assert!(c0.validate().is_err());
        let scan: ErasureScanConfig = serde_json::from_str(r#"{"scan": {"tau_min": 5, "tau_max": 4}}"#).unwrap();
        assert!(scan.validate().is_err());
    }
}
