// Sample points on the unit circle, in identity and random coordinates.

use polarsample::pipeline::{prepare_instance, sample_hypersurface, Coords, RunConfig};
use polarsample::report::sample_text;

pub fn run() -> polarsample::Result<()> {
    for coords in [Coords::Identity, Coords::Random] {
        let cfg = RunConfig { coords, seed: 1, precision: 12, ..RunConfig::default() };
        let inst = prepare_instance("x1^2 + x2^2 - 1", 2, &cfg)?;
        let report = sample_hypersurface(&inst, &cfg)?;
        println!("{}", sample_text(&report));
    }
    Ok(())
}

fn main() {
    run().expect("circle example");
}
