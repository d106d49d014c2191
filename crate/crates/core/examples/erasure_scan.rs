//! Erasure quality as a function of the interaction time.

use qfithermo::rabi::{find_erasure_time, RabiConfig};

fn main() -> qfithermo::Result<()> {
    let scan = find_erasure_time(&RabiConfig::default(), 20.0, 40.0, 81)?;
    for (tau, q) in scan.profile.iter().step_by(4) {
        println!("{tau:>6.2} {q:.4} {}", "#".repeat((q * 60.0) as usize));
    }
    println!("best tau = {:.2}, quality {:.4}", scan.tau_star, scan.quality);
    Ok(())
}
