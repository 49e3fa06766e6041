//! Ky Fan dominance decided on the breakpoint grid, its transfer to random
//! f-norms, and the rearrangement inequality behind it.

use gaugenorm::dominance::{dominance_transfer, hlp_pair_max, ky_fan_dominates};
use gaugenorm::linalg::ComplexMatrix;
use gaugenorm::snumbers::mu_of_matrix;

fn main() -> gaugenorm::Result<()> {
    let s = mu_of_matrix(&ComplexMatrix::diag(&[1.0, 1.0]))?;
    let t = mu_of_matrix(&ComplexMatrix::diag(&[2.0, 1.0]))?;
    let report = dominance_transfer(&s, &t, 100, 42)?;
    println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));

    let peaked = mu_of_matrix(&ComplexMatrix::diag(&[2.0, 0.0]))?;
    let r = ky_fan_dominates(&peaked, &s);
    println!("diag(2,0) under diag(1,1): {} (violation {})", r.dominates, r.max_violation);
    if let Err(e) = dominance_transfer(&peaked, &s, 10, 42) {
        println!("transfer refused: {e}");
    }

    println!("max pairing of (3,1) and (2,5): {}", hlp_pair_max(&[3.0, 1.0], &[2.0, 5.0])?);
    Ok(())
}
