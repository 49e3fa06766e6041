//! Nonincreasing rearrangement of a step function and the quantities it
//! preserves.

use gaugenorm::stepfn::StepFunction;

fn main() -> gaugenorm::Result<()> {
    let f = StepFunction::finite(4.0, [(0.5, 2.0), (1.5, 5.0), (1.0, 2.0)])?;
    let star = f.rearrange();
    println!("f  = {}", f.to_json());
    println!("f* = {}", star.to_json());
    println!("∫f = {}, ∫f* = {}", f.total_integral(), star.total_integral());
    println!("∫f² = {}, ∫f*² = {}", f.power_integral(2.0)?, star.power_integral(2.0)?);
    println!("m(f > 2) = {}", f.level_set_measure(2.0));
    println!("equimeasurable: {}", f.equimeasurable(&star));

    // on a finite domain the zero tail lifts with the constant
    let lifted = f.add_constant(1.0)?.rearrange();
    println!("(f+1)* = {}", lifted.to_json());
    Ok(())
}
