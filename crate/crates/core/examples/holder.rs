//! ‖ST‖₁ against |||S|||·|||T|||^# for random pairs, and a pair built from
//! the dual witness that attains equality.

use gaugenorm::duality::{dual_norm, holder_check, DualOptions};
use gaugenorm::linalg::ComplexMatrix;
use gaugenorm::norms::NormSpec;
use gaugenorm::random;
use gaugenorm::snumbers::SimpleOperator;

fn main() -> gaugenorm::Result<()> {
    let mut rng = random::rng(11);
    let spec = NormSpec::Lp(3.0);
    for _ in 0..5 {
        let s = random::matrix(&mut rng, 4);
        let t = random::matrix(&mut rng, 4);
        let h = holder_check(&s, &t, &spec)?;
        println!("lhs {:.6} <= rhs {:.6}: {}", h.lhs, h.rhs, h.holds);
    }

    let a = SimpleOperator::unit_weights(&[4.0, 2.0, 1.0])?;
    let b = dual_norm(&a, &spec, &DualOptions::default())?.witness;
    let h = holder_check(&ComplexMatrix::diag(&b.values()), &ComplexMatrix::diag(&a.values()), &spec)?;
    println!("extremal pair: lhs {:.12}, rhs {:.12}", h.lhs, h.rhs);
    Ok(())
}
