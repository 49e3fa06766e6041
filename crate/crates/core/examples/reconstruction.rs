//! A gauge norm recovered as the supremum of f-norms over its dual unit
//! ball, by sampling and by the analytic extremizer.

use gaugenorm::dominance::{reconstruct_norm, ReconstructOptions};
use gaugenorm::norms::NormSpec;
use gaugenorm::snumbers::SNumberCurve;

fn main() -> gaugenorm::Result<()> {
    let mu = SNumberCurve::from_pieces([(0.5, 4.0), (1.0, 2.5), (2.0, 1.0)])?;
    for spec in [NormSpec::Lp(2.0), NormSpec::Lp(1.0), NormSpec::KyFan(1.0), NormSpec::KyFan(2.0), NormSpec::Lp(4.0)] {
        let exact = reconstruct_norm(&mu, &spec, &ReconstructOptions { samples: 0, ..Default::default() })?;
        let sampled =
            reconstruct_norm(&mu, &spec, &ReconstructOptions { inject_extremizer: false, ..Default::default() })?;
        println!(
            "{spec:<10} truth {:.10}  extremizer {:.10}  10^4 samples {:.10}",
            exact.truth, exact.estimate, sampled.estimate
        );
    }
    Ok(())
}
