//! Entropy chain and heat floors for a single qubit as its amplitude moves
//! away from the balanced superposition.

use qfithermo::metro::{bound_erasure, entropy_bound_eq7, precision_floor, Generator};
use qfithermo::numkernel::{ComplexMatrix, StateVector, C64};

fn main() -> qfithermo::Result<()> {
    let kbt = 0.3;
    let g = Generator::new(ComplexMatrix::from_real_diag(&[0.5, -0.5]), 1.0)?;
    println!("{:>6} {:>8} {:>8} {:>8} {:>10}", "c0", "F_Q", "S", "rhs", "heat_floor");
    for c0 in [0.1, 0.3, 0.5, 0.6, std::f64::consts::FRAC_1_SQRT_2] {
        let psi = StateVector::normalized(vec![C64::new(c0, 0.0), C64::new((1.0 - c0 * c0).sqrt(), 0.0)])?;
        let r = entropy_bound_eq7(&psi, &g, kbt)?;
        println!("{c0:>6.3} {:>8.4} {:>8.4} {:>8.4} {:>10.5}", r.fq, r.entropy_rho_s, r.rhs_eq7, r.heat_floor);
    }

    // Erasing into a pure state costs the full log 2 per unit of F_Q/t².
    let b = bound_erasure(1.0, 1.0, kbt, 0.0)?;
    println!("pure-state erasure floor: {:.5} (deficit {:.5} nats)", b.heat_floor, b.deficit);
    println!("variance floor for that heat: {:.5}", precision_floor(1.0, kbt, b.heat_floor)?);
    Ok(())
}
