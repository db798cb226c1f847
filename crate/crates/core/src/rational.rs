//! Small helpers around `BigRational`: serialization, decimal rendering and
//! integer/rational conversions used throughout the crate.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q_int(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// `"num/den"` with the denominator always present.
pub fn q_to_string(v: &Q) -> String {
    format!("{}/{}", v.numer(), v.denom())
}

pub fn q_from_str(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Q::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Q::from_integer),
    }
}

pub fn sign(v: &Q) -> i8 {
    match v.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

pub fn pow10(digits: u32) -> BigInt {
    num_traits::pow(BigInt::from(10u32), digits as usize)
}

/// Decimal expansion of `v` rounded half away from zero to `digits` places.
pub fn to_decimal(v: &Q, digits: u32) -> String {
    let scale = pow10(digits);
    let scaled = v.abs() * Q::from_integer(scale.clone());
    let (whole, rem) = scaled.numer().div_rem(scaled.denom());
    let twice = rem * 2u32;
    let rounded = if &twice >= scaled.denom() { whole + 1u32 } else { whole };
    let (int_part, frac_part) = rounded.div_rem(&scale);
    let neg = v.is_negative() && !rounded.is_zero();
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push_str(&int_part.to_string());
    if digits > 0 {
        let frac = frac_part.to_string();
        out.push('.');
        for _ in frac.len()..digits as usize {
            out.push('0');
        }
        out.push_str(&frac);
    }
    out
}

pub fn to_f64(v: &Q) -> f64 {
    let n = v.numer();
    let d = v.denom();
    let sn = (n.bits() as i64 - 60).max(0);
    let sd = (d.bits() as i64 - 60).max(0);
    let nf = i64::try_from(&(n >> sn as usize)).map_or(f64::NAN, |x| x as f64);
    let df = i64::try_from(&(d >> sd as usize)).map_or(f64::NAN, |x| x as f64);
    nf / df * 2f64.powi((sn - sd) as i32)
}

/// Least common multiple of the denominators.
pub fn denom_lcm<'a>(vals: impl IntoIterator<Item = &'a Q>) -> BigInt {
    vals.into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}
