// A torus in generic coordinates: four Morse critical points of a linear
// form, all exact checks passing. In its axis-aligned coordinates the top
// polar variety is a pair of circles, which the sampler reports as positive
// dimensional.

use polarsample::pipeline::{prepare_instance, sample_hypersurface, Coords, RunConfig};

const TORUS: &str = "(x1^2 + x2^2 + x3^2 + 3)^2 - 16*(x1^2 + x2^2)";

pub fn run() -> polarsample::Result<()> {
    let cfg = RunConfig { precision: 10, ..RunConfig::default() };
    let inst = prepare_instance(TORUS, 3, &cfg)?;
    let report = sample_hypersurface(&inst, &cfg)?;
    println!("verdict {:?}, exit code {}", report.verdict, report.exit_code());
    println!("checks {:?}", report.verification.as_ref().map(|v| v.all_passed()));
    for p in &report.points {
        println!("  ({})", p.approx.join(", "));
    }

    let cfg = RunConfig { coords: Coords::Identity, ..cfg };
    let report = sample_hypersurface(&inst, &cfg)?;
    println!("identity coordinates: {:?}, exit code {}", report.dimension, report.exit_code());
    Ok(())
}

fn main() {
    run().expect("torus example");
}
