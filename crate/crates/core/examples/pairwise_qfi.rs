//! Splitting the QFI of a Dicke superposition into level pairs, and the
//! weighted QFI that lower-bounds the ensemble entropy.

use qfithermo::metro::{fq_pairwise, weighted_fq};
use qfithermo::numkernel::shannon;
use qfithermo::qstates::{family_distribution, jz_levels, DickeFamily};

fn main() -> qfithermo::Result<()> {
    let n = 8;
    let p = family_distribution(&DickeFamily::TwinFock, n)?;
    let levels = jz_levels(n);
    let pairs = fq_pairwise(&p, &levels, 1.0)?;
    let mut top: Vec<_> = pairs.iter().collect();
    top.sort_by(|a, b| b.1.total_cmp(a.1));
    for ((a, b), f) in top.iter().take(5) {
        println!("levels ({a}, {b}): {f:.4}");
    }
    println!("sum over {} pairs: {:.6} (N(N+2)/2 = {})", pairs.len(), pairs.values().sum::<f64>(), n * (n + 2) / 2);
    println!("weighted QFI {:.4} <= S {:.4}", weighted_fq(&p, &levels)?, shannon(&p)?);
    Ok(())
}
