//! Ky Fan norms across the two regimes of `t`, and the sup over projections
//! and unitaries that characterizes them.

use gaugenorm::linalg::ComplexMatrix;
use gaugenorm::norms::{ky_fan, ky_fan_oracle, OracleOptions};
use gaugenorm::random;
use gaugenorm::snumbers::mu_of_matrix;

fn main() -> gaugenorm::Result<()> {
    let mu = mu_of_matrix(&ComplexMatrix::diag(&[3.0, 2.0, 1.0]))?;
    for t in [0.0, 0.5, 1.0, 2.0, 2.5, f64::INFINITY] {
        println!("|||diag(3,2,1)|||_({t}) = {}", ky_fan(&mu, t)?);
    }

    let m = random::matrix(&mut random::rng(3), 4);
    let mu = mu_of_matrix(&m)?;
    let sampled = OracleOptions { include_witness: false, coordinate_subsets: false, ..Default::default() };
    for k in 1..=4 {
        let closed = ky_fan(&mu, k as f64)?;
        let witness = ky_fan_oracle(&m, k, &OracleOptions { trials: 0, ..Default::default() })?;
        let search = ky_fan_oracle(&m, k, &sampled)?;
        println!("k={k}: top-k sum {closed:.10}  witness {witness:.10}  sampled {search:.10}");
    }
    Ok(())
}
