// Inputs that are not compact smooth hypersurfaces, or have no real points.

use polarsample::pipeline::{prepare_instance, sample_hypersurface, Coords, RunConfig};

pub fn run() -> polarsample::Result<()> {
    let cases = [
        ("x1^2 + x2^2 + 1", Coords::Random),
        ("x1*x2 - 1", Coords::Identity),
        ("x3 - (x1^2 + x2^2 - 1)^2", Coords::Identity),
    ];
    for (text, coords) in cases {
        let cfg = RunConfig { coords, ..RunConfig::default() };
        let n = if text.contains("x3") { 3 } else { 2 };
        let inst = prepare_instance(text, n, &cfg)?;
        let r = sample_hypersurface(&inst, &cfg)?;
        println!("{text:28} {:?} / {:?} -> exit {}", r.dimension, r.verdict, r.exit_code());
    }
    Ok(())
}

fn main() {
    run().expect("empty detection example");
}
