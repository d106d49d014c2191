//! Exact reference distributions computed in rational arithmetic, kept
//! apart from the floating-point paths they check.

use num::{BigInt, BigRational, One, ToPrimitive, Zero};

fn factorial(n: i64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `|d^j_{m,0}(π/2)|²` for `j = n/2`, `m = −j..=j`, from the explicit
/// Wigner sum. Index `k = m + j`.
pub fn twin_fock_distribution(n: usize) -> Vec<BigRational> {
    assert!(n.is_multiple_of(2), "integer spin needs even n");
    let j = (n / 2) as i64;
    let fj = factorial(j);
    let quarter_pow = BigInt::from(4).pow(j as u32);
    (-j..=j)
        .map(|m| {
            let mut sum = BigRational::zero();
            for s in 0..=j {
                if m + s < 0 || j - m - s < 0 {
                    continue;
                }
                let denom = factorial(j - s) * factorial(s) * factorial(m + s) * factorial(j - m - s);
                let sign = if s % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                sum += BigRational::new(sign, denom);
            }
            let pref = factorial(j + m) * factorial(j - m) * &fj * &fj;
            BigRational::from_integer(pref) * &sum * &sum / BigRational::from_integer(quarter_pow.clone())
        })
        .collect()
}

/// `C(n, k) / 2^n`.
pub fn binomial_distribution(n: usize) -> Vec<BigRational> {
    let total = BigInt::from(2).pow(n as u32);
    let mut c = BigInt::one();
    let mut out = Vec::with_capacity(n + 1);
    for k in 0..=n {
        out.push(BigRational::new(c.clone(), total.clone()));
        c = c * (n - k) / (k + 1);
    }
    out
}

/// Exact `Σ p_k (k − mean)²`.
pub fn variance(p: &[BigRational]) -> BigRational {
    let mean: BigRational = p.iter().enumerate().map(|(k, x)| x * BigInt::from(k)).sum();
    p.iter()
        .enumerate()
        .map(|(k, x)| {
            let d = BigRational::from_integer(BigInt::from(k)) - &mean;
            x * &d * &d
        })
        .sum()
}

pub fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().expect("finite rational")
}


/// Library outputs checked against values frozen from independent
/// computations before the library existed.
#[cfg(test)]
mod frozen {
    use super::*;
    use qfithermo::qstates::{family_distribution, DickeFamily};
    use qfithermo::rabi::{find_erasure_time, run_figure2, RabiConfig};

    #[test]
    fn twin_fock_matches_exact_rationals() {
        for n in [2usize, 4, 10, 30] {
            let p = family_distribution(&DickeFamily::TwinFock, n).unwrap();
            for (a, b) in p.iter().zip(twin_fock_distribution(n)) {
                assert!((a - to_f64(&b)).abs() < 1e-13, "N={n}");
            }
        }
    }

    #[test]
    fn product_matches_binomial() {
        let p = family_distribution(&DickeFamily::Product, 40).unwrap();
        for (a, b) in p.iter().zip(binomial_distribution(40)) {
            assert!((a - to_f64(&b)).abs() < 1e-15);
        }
    }

    // Dense Schrödinger propagation of the full thermal state, ω = Ω = 1,
    // g = 0.05, T = 0.3, nmax = 20, 16 phases, τ = 30.8.
    const HEAT_AT_30_8: [(f64, f64); 5] =
        [(0.316, 0.0687), (0.447, 0.1707), (0.548, 0.2733), (0.632, 0.3745), (0.707, 0.4770)];

    #[test]
    fn rabi_heat_matches_reference_propagation() {
        let grid: Vec<f64> = HEAT_AT_30_8.iter().map(|x| x.0).collect();
        let out = run_figure2(&RabiConfig::default(), &grid).unwrap();
        for (o, (c0, heat)) in out.iter().zip(HEAT_AT_30_8) {
            assert_eq!(o.c0, c0);
            assert!((o.heat_avg - heat).abs() < 2e-4, "c0 = {c0}: {} vs {heat}", o.heat_avg);
        }
    }

    #[test]
    fn erasure_scan_matches_reference_propagation() {
        let cfg = RabiConfig { c0: std::f64::consts::FRAC_1_SQRT_2, ..RabiConfig::default() };
        let scan = find_erasure_time(&cfg, 20.0, 40.0, 201).unwrap();
        assert!((scan.tau_star - 31.3).abs() < 1e-9);
        assert!((scan.quality - 0.0607).abs() < 2e-4);
    }
}
