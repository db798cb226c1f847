// Real roots described by isolating intervals and Thom sign vectors.

use polarsample::realroots::{thom_cmp, thom_encode_roots};
use polarsample::univariate::UniPoly;

pub fn run() -> polarsample::Result<()> {
    let q = &UniPoly::from_ints(&[-2, 0, 1]) * &UniPoly::from_ints(&[-10, 0, 1]);
    let roots = thom_encode_roots(&q)?;
    println!("q = {q}");
    for r in &roots {
        let j = r.to_json(&q, 12);
        println!("  root {} in ({}, {}] thom {:?} ~ {}", r.index, j.interval[0], j.interval[1], r.thom, j.approx);
    }
    let lead = 1;
    for w in roots.windows(2) {
        println!("  {:?} < {:?}: {:?}", w[0].thom, w[1].thom, thom_cmp(&w[0].thom, &w[1].thom, lead));
    }
    Ok(())
}

fn main() {
    run().expect("thom example");
}
