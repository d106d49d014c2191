//! Entropy, weighted QFI and precision scaling of the symmetric-state
//! families as functions of the qubit number, with log-law fits.
//!
//! All quantities refer to the interrogation generator `Jz` with `t = 1`.
//! Its eigenvalues are nondegenerate in the symmetric sector, so the
//! dephased state is diagonal in the Dicke basis and `S(ρ_s)` is the
//! Shannon entropy of `{p_k}`.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{invalid, Result};
use crate::metro::weighted_fq;
use crate::numkernel::{pairwise_sum, shannon};
use crate::qstates::{family_distribution, jz_levels, DickeFamily};

/// Records with `N` below this are left out of log fits.
pub const FIT_MIN_N: usize = 8;

/// N = 8, 16, …, 1024.
pub fn default_n_list() -> Vec<usize> {
    (3..=10).map(|e| 1usize << e).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRecord {
    pub family: String,
    #[serde(rename = "N")]
    pub n: usize,
    pub entropy_nats: f64,
    pub weighted_fq_nats: f64,
    pub fq_over_t2: f64,
    pub sql_ratio: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LogFit {
    pub alpha: f64,
    pub beta: f64,
    pub rms_residual: f64,
}

/// `4 Var_k(p)`, the QFI per t² of `Jz`.
pub fn fq_over_t2(p: &[f64]) -> f64 {
    let ks: Vec<f64> = p.iter().enumerate().map(|(k, pk)| pk * k as f64).collect();
    let mean = pairwise_sum(&ks);
    let sq: Vec<f64> = p.iter().enumerate().map(|(k, pk)| pk * (k as f64 - mean).powi(2)).collect();
    4.0 * pairwise_sum(&sq)
}

fn record(family: &DickeFamily, n: usize) -> Result<SweepRecord> {
    let p = family_distribution(family, n)?;
    let fq = fq_over_t2(&p);
    Ok(SweepRecord {
        family: family.name().to_string(),
        n,
        entropy_nats: shannon(&p)?,
        weighted_fq_nats: weighted_fq(&p, &jz_levels(n))?,
        fq_over_t2: fq,
        sql_ratio: fq / n as f64,
    })
}

/// One record per entry of `n_list`, in input order.
pub fn sweep(family: &DickeFamily, n_list: &[usize]) -> Result<Vec<SweepRecord>> {
    if n_list.is_empty() {
        return invalid("N list is empty");
    }
    for &n in n_list {
        family.validate(n)?;
    }
    n_list.par_iter().map(|&n| record(family, n)).collect()
}

/// Ordinary least squares `y ≈ α ln N + β`.
pub fn fit_series(ns: &[usize], ys: &[f64]) -> Result<LogFit> {
    if ns.len() != ys.len() {
        return invalid(format!("fit needs matching lengths, got {} and {}", ns.len(), ys.len()));
    }
    if ns.len() < 3 {
        return invalid(format!("fit needs at least 3 points, got {}", ns.len()));
    }
    let mut sorted = ns.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return invalid("fit needs distinct N values");
    }
    if ns.contains(&0) {
        return invalid("fit needs N >= 1");
    }
    let m = ns.len() as f64;
    let xs: Vec<f64> = ns.iter().map(|&n| (n as f64).ln()).collect();
    let x_mean = pairwise_sum(&xs) / m;
    let y_mean = pairwise_sum(ys) / m;
    let sxx: Vec<f64> = xs.iter().map(|x| (x - x_mean).powi(2)).collect();
    let sxy: Vec<f64> = xs.iter().zip(ys).map(|(x, y)| (x - x_mean) * (y - y_mean)).collect();
    let alpha = pairwise_sum(&sxy) / pairwise_sum(&sxx);
    let beta = y_mean - alpha * x_mean;
    let res: Vec<f64> = xs.iter().zip(ys).map(|(x, y)| (y - alpha * x - beta).powi(2)).collect();
    Ok(LogFit { alpha, beta, rms_residual: (pairwise_sum(&res) / m).sqrt() })
}

fn fit_records(records: &[SweepRecord], value: impl Fn(&SweepRecord) -> f64) -> Result<LogFit> {
    if let Some(first) = records.first() {
        if records.iter().any(|r| r.family != first.family) {
            return invalid("fit records must come from a single family");
        }
    }
    let used: Vec<&SweepRecord> = records.iter().filter(|r| r.n >= FIT_MIN_N).collect();
    let ns: Vec<usize> = used.iter().map(|r| r.n).collect();
    let ys: Vec<f64> = used.iter().map(|r| value(r)).collect();
    fit_series(&ns, &ys)
}

/// Fit of `entropy_nats` against `ln N`, using records with `N >= 8`.
pub fn fit_log(records: &[SweepRecord]) -> Result<LogFit> {
    fit_records(records, |r| r.entropy_nats)
}

/// Same fit for `weighted_fq_nats`.
pub fn fit_log_weighted_fq(records: &[SweepRecord]) -> Result<LogFit> {
    fit_records(records, |r| r.weighted_fq_nats)
}

/// `|S(N₂) − S(N₁)|` for the GHZ-like family.
pub fn saturation_check(family: &DickeFamily, n_pair: (usize, usize)) -> Result<f64> {
    if !matches!(family, DickeFamily::GhzLike { .. }) {
        return invalid(format!("saturation check applies to ghz_like only, got {}", family.name()));
    }
    let (n1, n2) = n_pair;
    if n1 >= n2 {
        return invalid(format!("N pair must be increasing, got ({n1}, {n2})"));
    }
    let s1 = shannon(&family_distribution(family, n1)?)?;
    let s2 = shannon(&family_distribution(family, n2)?)?;
    Ok((s2 - s1).abs())
}
