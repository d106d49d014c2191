//! Hermitian eigendecomposition and propagation with the built-in solver.

use qfithermo::numkernel::{herm_eig, unitary_from};
use qfithermo::qstates::spin_ops;

fn main() -> qfithermo::Result<()> {
    let (jx, _, jz) = spin_ops(4)?;
    let h = &jz.matmul(&jz)?.scale_real(0.3) + &jx;
    let eig = herm_eig(&h)?;
    println!("spectrum: {:?}", eig.values().iter().map(|v| format!("{v:.4}")).collect::<Vec<_>>());
    println!("reconstruction error {:.1e}", eig.reconstruct().max_abs_diff(&h));
    println!("unitarity error of exp(-iHt) at t = 5: {:.1e}", unitary_from(&h, 5.0)?.unitarity_deviation());
    Ok(())
}
