//! Dual norms: closed forms against the sampled search over the sorted
//! cone, and the second dual returning the norm.

use gaugenorm::duality::{dual_norm, ky_fan_dual_closed, second_dual, DualOptions};
use gaugenorm::norms::NormSpec;
use gaugenorm::snumbers::{mu_of_simple, SimpleOperator};

fn main() -> gaugenorm::Result<()> {
    let a = SimpleOperator::new([(3.0, 1.0), (1.0, 0.5), (2.0, 2.0)])?;
    let mu = mu_of_simple(&a);
    let sampled = DualOptions { budget: 20_000, inject_witness: false, ..Default::default() };

    for t in [0.25, 1.0, 2.0, 3.0, f64::INFINITY] {
        let spec = NormSpec::KyFan(t);
        let brute = dual_norm(&a, &spec, &sampled)?;
        let exact = dual_norm(&a, &spec, &DualOptions::default())?;
        println!(
            "{spec:<12} closed {:.10}  sampled {:.10}  witnessed {:.10}",
            ky_fan_dual_closed(&mu, t)?,
            brute.value,
            exact.value
        );
    }

    for spec in [NormSpec::Lp(1.0), NormSpec::Lp(1.5), NormSpec::Lp(3.0), NormSpec::KyFan(2.0)] {
        let back = second_dual(&a, &spec, &DualOptions { inject_witness: false, ..Default::default() })?;
        println!("{spec:<12} norm {:.10}  second dual {:.10}", spec.eval(&mu)?, back.value);
    }
    Ok(())
}
