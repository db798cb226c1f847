// Straight-line programs: parsing, evaluation, reverse-mode gradients.

use polarsample::circuit::parse_expression;
use polarsample::rational::{q_int, Q};

pub fn run() -> polarsample::Result<()> {
    let f = parse_expression("(x1^2 + x2^2 + x3^2 + 3)^2 - 16*(x1^2 + x2^2)", 3)?;
    let grad = f.gradient_circuit()?;
    println!("L(f) = {}, L(grad) = {} (limit {})", f.len(), grad.len(), 5 * f.len() + 4 * 3);

    let point: Vec<Q> = vec![q_int(1), q_int(1), q_int(1)];
    let values = grad.evaluate(&point)?;
    println!("f(1,1,1) = {}", values[0]);
    for (k, v) in values[1..].iter().enumerate() {
        println!("df/dx{}(1,1,1) = {v}", k + 1);
    }
    println!("f(1,1,1) mod 101 = {:?}", f.evaluate_mod(&[1, 1, 1], 101)?);
    println!("dense: {}", f.expand_to_dense(8)?);
    Ok(())
}

fn main() {
    run().expect("circuit example");
}
