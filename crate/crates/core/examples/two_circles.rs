// Two disjoint circles: every connected component receives a sample point.
//
// Membership is decided by the exact sign of each circle's equation over the
// certified box of a point.

use polarsample::circuit::parse_expression;
use polarsample::interval::eval_dense;
use polarsample::pipeline::{prepare_instance, sample_hypersurface, RunConfig};

pub fn run() -> polarsample::Result<()> {
    let cfg = RunConfig { seed: 3, precision: 15, ..RunConfig::default() };
    let inst = prepare_instance("((x1-2)^2 + x2^2 - 1) * ((x1+2)^2 + x2^2 - 1)", 2, &cfg)?;
    let report = sample_hypersurface(&inst, &cfg)?;
    let deg = report.degrees.as_ref().expect("degrees");
    println!("deg W_1 = {:?}, bezout bound {}", deg.get(1), deg.bezout_bound);

    let right = parse_expression("(x1-2)^2 + x2^2 - 1", 2)?.expand_to_dense(8)?;
    let left = parse_expression("(x1+2)^2 + x2^2 - 1", 2)?.expand_to_dense(8)?;
    for p in &report.points {
        let on_right = eval_dense(&right, &p.boxes).contains_zero();
        let on_left = eval_dense(&left, &p.boxes).contains_zero();
        let side = match (on_left, on_right) {
            (true, false) => "left circle",
            (false, true) => "right circle",
            _ => "undecided",
        };
        println!("({}) on the {side}", p.approx.join(", "));
    }
    Ok(())
}

fn main() {
    run().expect("two circles example");
}
