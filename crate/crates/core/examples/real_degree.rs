// Rational factorization of an eliminant and its real part.

use polarsample::factor::factor_rational;
use polarsample::realdegree::real_part;
use polarsample::univariate::UniPoly;

pub fn run() -> polarsample::Result<()> {
    let q = &UniPoly::from_ints(&[-2, 0, 1]) * &UniPoly::from_ints(&[1, 0, 1]);
    println!("q = {q}");
    for f in factor_rational(&q)? {
        println!("  factor {f}");
    }
    let cert = real_part(&q)?;
    println!("q* = {}, real degree {}, m = {}", cert.q_star, cert.delta_star, cert.m);

    let cert = real_part(&UniPoly::from_ints(&[1, 0, 1]))?;
    println!("X^2 + 1: real degree {} (empty real part: {})", cert.delta_star, cert.is_empty());

    // Swinnerton-Dyer polynomial: irreducible, but splits modulo every prime.
    let sd = UniPoly::from_ints(&[1, 0, -10, 0, 1]);
    println!("{sd}: {} factor(s)", factor_rational(&sd)?.len());
    Ok(())
}

fn main() {
    run().expect("real degree example");
}
