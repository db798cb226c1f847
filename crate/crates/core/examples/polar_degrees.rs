// Degrees of all polar varieties against the Bezout-type bound.

use polarsample::pipeline::{degrees, prepare_instance, RunConfig};
use polarsample::report::degrees_text;

pub fn run() -> polarsample::Result<()> {
    let cfg = RunConfig::default();
    for (text, n) in [
        ("x1^2 + x2^2 - 1", 2),
        ("((x1-2)^2 + x2^2 - 1) * ((x1+2)^2 + x2^2 - 1)", 2),
        ("x1^2 + 2*x2^2 + 3*x3^2 - 1", 3),
    ] {
        let inst = prepare_instance(text, n, &cfg)?;
        let all: Vec<usize> = (0..n).collect();
        println!("{text}\n{}", degrees_text(&degrees(&inst, &cfg, &all)?));
    }
    Ok(())
}

fn main() {
    run().expect("polar degrees example");
}
