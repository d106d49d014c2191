//! Entropy and QFI scaling of the symmetric-state families.

use qfithermo::dickelab::{default_n_list, fit_log, fit_log_weighted_fq, saturation_check, sweep};
use qfithermo::qstates::DickeFamily;

fn main() -> qfithermo::Result<()> {
    // Twin-Fock at N = 1024 needs a large dense eigensolve, so stop at 256 here.
    let ns: Vec<usize> = default_n_list().into_iter().filter(|&n| n <= 256).collect();
    for family in [DickeFamily::Product, DickeFamily::squeezed(), DickeFamily::TwinFock, DickeFamily::ghz_like()] {
        let records = sweep(&family, &ns)?;
        let last = records.last().expect("nonempty");
        print!("{:<10} N={:<4} S={:.3} F/N={:.1}", family.name(), last.n, last.entropy_nats, last.sql_ratio);
        if let DickeFamily::GhzLike { .. } = family {
            println!("  |S(256) - S(64)| = {:.1e}", saturation_check(&family, (64, 256))?);
        } else {
            let s = fit_log(&records)?;
            let w = fit_log_weighted_fq(&records)?;
            println!("  S ~ {:.3} ln N {:+.3}, weighted ~ {:.3} ln N", s.alpha, s.beta, w.alpha);
        }
    }
    Ok(())
}
