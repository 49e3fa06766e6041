//! f-norms, L^p norms and family suprema on a single curve, with the f-norm
//! rebuilt from Ky Fan norms.

use gaugenorm::norms::{f_norm, f_norm_by_ky_fan, family_sup, lp_norm, WeightFunction};
use gaugenorm::snumbers::SNumberCurve;

fn main() -> gaugenorm::Result<()> {
    let mu = SNumberCurve::from_pieces([(1.0, 3.0), (1.0, 2.0), (1.0, 1.0)])?;
    let f = WeightFunction::from_pieces([(0.5, 1.2), (1.5, 0.2)])?;
    let g = WeightFunction::unit_indicator();

    println!("|||T|||_f           = {}", f_norm(&mu, &f));
    println!("via Ky Fan norms    = {}", f_norm_by_ky_fan(&mu, &f));
    println!("|||T|||_(1)         = {}", f_norm(&mu, &g));
    println!("sup over {{f, χ}}     = {}", family_sup(&mu, &[f.clone(), g])?);
    for p in [1.0, 1.5, 2.0, 3.0, f64::INFINITY] {
        println!("‖T‖_{p:<4} = {:.10}", lp_norm(&mu, p)?);
    }
    Ok(())
}
