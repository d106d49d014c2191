//! The parameter-averaged state of a probe: exact dephasing against a
//! finite phase grid, and measurement records in two bases.

use qfithermo::metro::{measurement_record_entropy, rho_s_dephase, rho_s_grid_average, Generator};
use qfithermo::numkernel::{trace_distance, unitary_from, vn_entropy, ComplexMatrix};
use qfithermo::qstates::{dicke_state_from_distribution, family_distribution, jz_levels, spin_ops, DickeFamily};

fn main() -> qfithermo::Result<()> {
    let n = 6;
    let psi = dicke_state_from_distribution(&family_distribution(&DickeFamily::squeezed(), n)?)?;
    let g = Generator::new(ComplexMatrix::from_real_diag(&jz_levels(n)), 1.0)?;
    let exact = rho_s_dephase(&ComplexMatrix::outer(&psi), &g)?;

    for m in [2, 4, 6, 7, 12] {
        let grid = rho_s_grid_average(&psi, &g, m)?;
        println!("M = {m:>2}: trace distance to dephased state {:.2e}", trace_distance(&grid, &exact)?);
    }

    let s = vn_entropy(&exact)?;
    let dicke = measurement_record_entropy(&exact, &ComplexMatrix::identity(n + 1))?;
    let (_, jy, _) = spin_ops(n)?;
    let rotated = measurement_record_entropy(&exact, &unitary_from(&jy, 0.4)?)?;
    println!("S(rho_s) = {s:.6}, Dicke record {dicke:.6}, rotated record {rotated:.6}");
    Ok(())
}
