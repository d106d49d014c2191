//! Erasing an encoded qubit into a thermal mode: averaged heat against the
//! QFI-based floor for several initial amplitudes.

use qfithermo::rabi::{run_figure2, RabiConfig};

fn main() -> qfithermo::Result<()> {
    let cfg = RabiConfig::default();
    let outcomes = run_figure2(&cfg, &[0.316, 0.447, 0.548, 0.632, 0.707])?;
    println!("{:>6} {:>8} {:>9} {:>9} {:>8}", "c0", "F/t^2", "heat", "floor", "quality");
    for o in &outcomes {
        println!(
            "{:>6.3} {:>8.4} {:>9.5} {:>9.5} {:>8.4}",
            o.c0, o.fq_over_t2, o.heat_avg, o.bound_floor, o.erasure_quality
        );
    }
    let kbt = cfg.kbt();
    println!("audit holds everywhere: {}", outcomes.iter().all(|o| o.audit_passes(kbt)));
    Ok(())
}
