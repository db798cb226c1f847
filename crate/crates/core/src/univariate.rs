//! Dense univariate polynomials over the rationals, coefficients stored from
//! the constant term upwards.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::{denom_lcm, q_int, sign, Q};

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct UniPoly {
    coeffs: Vec<Q>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| q_int(v)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Q) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    /// The polynomial `X`.
    pub fn x() -> Self {
        Self::new(vec![Q::zero(), Q::one()])
    }

    /// `X - r`.
    pub fn linear_root(r: &Q) -> Self {
        Self::new(vec![-r.clone(), Q::one()])
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Q {
        self.coeffs.last().cloned().unwrap_or_else(Q::zero)
    }

    pub fn coeff(&self, k: usize) -> Q {
        self.coeffs.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn eval(&self, x: &Q) -> Q {
        self.coeffs
            .iter()
            .rev()
            .fold(Q::zero(), |acc, c| acc * x + c)
    }

    pub fn sign_at(&self, x: &Q) -> i8 {
        sign(&self.eval(x))
    }

    /// Sign as `x -> +inf` (`at_pos = true`) or `-inf`.
    pub fn sign_at_infinity(&self, at_pos: bool) -> i8 {
        if self.is_zero() {
            return 0;
        }
        let s = sign(&self.leading());
        if at_pos || self.degree() % 2 == 0 {
            s
        } else {
            -s
        }
    }

    pub fn scale(&self, c: &Q) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|v| v * c).collect())
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading().recip())
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * q_int(k as i64))
                .collect(),
        )
    }

    pub fn nth_derivative(&self, k: usize) -> UniPoly {
        (0..k).fold(self.clone(), |p, _| p.derivative())
    }

    pub fn shift_up(&self, k: usize) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![Q::zero(); k];
        c.extend(self.coeffs.iter().cloned());
        UniPoly::new(c)
    }

    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.degree() < d.degree() || self.is_zero() {
            return (UniPoly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let dd = d.degree();
        let inv = d.leading().recip();
        let mut quot = vec![Q::zero(); self.degree() - dd + 1];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    pub fn rem(&self, d: &UniPoly) -> UniPoly {
        self.div_rem(d).1
    }

    /// Exact quotient; panics in debug builds if the division is not exact.
    pub fn exact_div(&self, d: &UniPoly) -> UniPoly {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact division");
        q
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.primitive_rational();
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &UniPoly) -> (UniPoly, UniPoly, UniPoly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (UniPoly::one(), UniPoly::zero());
        let (mut t0, mut t1) = (UniPoly::zero(), UniPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.leading().recip();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// Inverse of `self` modulo `m`, if it exists.
    pub fn inverse_mod(&self, m: &UniPoly) -> Option<UniPoly> {
        let (g, s, _) = self.rem(m).ext_gcd(m);
        if g.degree() == 0 && !g.is_zero() {
            Some(s.rem(m))
        } else {
            None
        }
    }

    pub fn mul_mod(&self, other: &UniPoly, m: &UniPoly) -> UniPoly {
        (self * other).rem(m)
    }

    /// `self(g)`.
    pub fn compose(&self, g: &UniPoly) -> UniPoly {
        self.coeffs
            .iter()
            .rev()
            .fold(UniPoly::zero(), |acc, c| &(&acc * g) + &UniPoly::constant(c.clone()))
    }

    pub fn is_squarefree(&self) -> bool {
        self.degree() == 0 || self.gcd(&self.derivative()).degree() == 0
    }

    /// Monic squarefree part `self / gcd(self, self')`.
    pub fn squarefree_part(&self) -> UniPoly {
        if self.degree() == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).monic()
    }

    /// Scales so that the coefficients are coprime integers with positive
    /// leading coefficient (keeps remainder sequences from blowing up).
    pub fn primitive_rational(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let ints = self.to_primitive_integers();
        UniPoly::new(ints.into_iter().map(Q::from_integer).collect())
    }

    /// Primitive integer coefficient vector with positive leading coefficient.
    pub fn to_primitive_integers(&self) -> Vec<BigInt> {
        let l = denom_lcm(&self.coeffs);
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Q::from_integer(l.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
        let neg = ints.last().is_some_and(|v| v.is_negative());
        ints.into_iter()
            .map(|v| {
                let v = if g.is_zero() { v } else { v / &g };
                if neg {
                    -v
                } else {
                    v
                }
            })
            .collect()
    }

    /// Resultant via the Euclidean remainder sequence.
    pub fn resultant(&self, other: &UniPoly) -> Q {
        if self.is_zero() || other.is_zero() {
            return Q::zero();
        }
        let (m, n) = (self.degree(), other.degree());
        if n == 0 {
            return num_traits::pow(other.leading(), m);
        }
        if m == 0 {
            return num_traits::pow(self.leading(), n);
        }
        let r = self.rem(other);
        if r.is_zero() {
            return Q::zero();
        }
        let k = r.degree();
        let s = if (m * n) % 2 == 1 { -Q::one() } else { Q::one() };
        s * num_traits::pow(other.leading(), m - k) * other.resultant(&r)
    }

    /// Discriminant `(-1)^(m(m-1)/2) res(p, p') / lc(p)`.
    pub fn discriminant(&self) -> Q {
        let m = self.degree();
        if m == 0 {
            return Q::one();
        }
        let r = self.resultant(&self.derivative());
        let s = if (m * (m - 1) / 2) % 2 == 1 { -Q::one() } else { Q::one() };
        s * r / self.leading()
    }

    /// Cauchy bound: every complex root has modulus strictly below it.
    pub fn cauchy_bound(&self) -> Q {
        let lc = self.leading().abs();
        let m = self.coeffs[..self.degree()]
            .iter()
            .map(|c| c.abs() / &lc)
            .max()
            .unwrap_or_else(Q::zero);
        m + Q::one()
    }

    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let cs = if a.is_integer() { a.numer().to_string() } else { format!("{}/{}", a.numer(), a.denom()) };
            let vs = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if vs.is_empty() {
                out.push_str(&cs);
            } else if a.is_one() {
                out.push_str(&vs);
            } else {
                out.push_str(&format!("{cs}*{vs}"));
            }
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_in("X"))
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Q::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}
