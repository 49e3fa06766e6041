//! s-number curves of matrices: one unit-length piece per singular value.

use gaugenorm::linalg::{random_unitary, ComplexMatrix};
use gaugenorm::snumbers::{mu_of_matrix, SimpleOperator};

fn main() -> gaugenorm::Result<()> {
    let m = ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]])?;
    println!("nilpotent: {}", mu_of_matrix(&m)?.to_json());

    let d = ComplexMatrix::diag(&[1.0, 3.0, 2.0]);
    let mu = mu_of_matrix(&d)?;
    println!("diag(1,3,2): {}", mu.to_json());

    let u = random_unitary(3, 7);
    let v = random_unitary(3, 8);
    let moved = mu_of_matrix(&(&(&u * &d) * &v))?;
    println!("after U·D·V: {}", moved.to_json());
    println!("unitarily invariant: {}", moved.approx_eq(&mu, 1e-10));

    // τ(|M|³) two ways
    let h = d.abs()?;
    println!("trace(|M|^3) = {:.12}", (&(&h * &h) * &h).trace().re);
    println!("∫ μ^3       = {:.12}", mu.power_integral(3.0)?);

    let s = SimpleOperator::from_matrix(&d)?;
    println!("as simple operator: {}", s.to_json());
    Ok(())
}
