// Critical points of the height function on an ellipsoid, with certified
// enclosures of the irrational coordinates.

use polarsample::pipeline::{prepare_instance, sample_hypersurface, Coords, RunConfig};

pub fn run() -> polarsample::Result<()> {
    let cfg = RunConfig { coords: Coords::Identity, precision: 20, ..RunConfig::default() };
    let inst = prepare_instance("x1^2 + 2*x2^2 + 3*x3^2 - 1", 3, &cfg)?;
    let report = sample_hypersurface(&inst, &cfg)?;
    let rep = report.representation.as_ref().expect("zero-dimensional");
    println!("q(X) = {}", rep.q);
    for p in &report.points {
        println!("point {}:", p.root);
        for (k, b) in p.boxes.iter().enumerate() {
            println!("  x{} in {}  ~ {}", k + 1, b, p.approx[k]);
        }
        println!("  f over box: {}", p.f_enclosure);
    }
    Ok(())
}

fn main() {
    run().expect("ellipsoid example");
}
