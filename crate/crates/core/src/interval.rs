//! Closed rational intervals and enclosures of polynomial values.

use std::fmt;

use num_traits::{One, Zero};

use crate::poly::DensePoly;
use crate::rational::{q_to_string, Q};
use crate::univariate::UniPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Q,
    pub hi: Q,
}

impl Interval {
    pub fn new(lo: Q, hi: Q) -> Self {
        assert!(lo <= hi, "empty interval");
        Interval { lo, hi }
    }

    pub fn point(v: Q) -> Self {
        Interval { lo: v.clone(), hi: v }
    }

    pub fn zero() -> Self {
        Interval::point(Q::zero())
    }

    pub fn width(&self) -> Q {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Q {
        (&self.lo + &self.hi) / Q::from_integer(2.into())
    }

    pub fn contains(&self, v: &Q) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&Q::zero())
    }

    /// Sign of every point of the interval, if constant and nonzero.
    pub fn strict_sign(&self) -> Option<i8> {
        if self.lo > Q::zero() {
            Some(1)
        } else if self.hi < Q::zero() {
            Some(-1)
        } else {
            None
        }
    }

    pub fn add(&self, o: &Interval) -> Interval {
        Interval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    pub fn sub(&self, o: &Interval) -> Interval {
        Interval { lo: &self.lo - &o.hi, hi: &self.hi - &o.lo }
    }

    pub fn scale(&self, c: &Q) -> Interval {
        let (a, b) = (&self.lo * c, &self.hi * c);
        if a <= b {
            Interval { lo: a, hi: b }
        } else {
            Interval { lo: b, hi: a }
        }
    }

    pub fn mul(&self, o: &Interval) -> Interval {
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = c.iter().min().expect("four products").clone();
        let hi = c.iter().max().expect("four products").clone();
        Interval { lo, hi }
    }

    /// Tight power: even exponents of a zero-straddling interval start at 0.
    pub fn pow(&self, e: u32) -> Interval {
        if e == 0 {
            return Interval::point(Q::one());
        }
        let (a, b) = (num_traits::pow(self.lo.clone(), e as usize), num_traits::pow(self.hi.clone(), e as usize));
        if e % 2 == 1 {
            Interval { lo: a, hi: b }
        } else if self.contains_zero() {
            Interval { lo: Q::zero(), hi: a.max(b) }
        } else {
            Interval { lo: a.clone().min(b.clone()), hi: a.max(b) }
        }
    }

    pub fn to_strings(&self) -> [String; 2] {
        [q_to_string(&self.lo), q_to_string(&self.hi)]
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Horner enclosure of `p` over `x`.
pub fn eval_uni(p: &UniPoly, x: &Interval) -> Interval {
    let mut acc = Interval::zero();
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(x).add(&Interval::point(c.clone()));
    }
    acc
}

/// Term-wise enclosure of `p` over a box.
pub fn eval_dense(p: &DensePoly, b: &[Interval]) -> Interval {
    assert_eq!(p.num_vars(), b.len(), "box dimension");
    let mut acc = Interval::zero();
    for (m, c) in p.terms() {
        let mut t = Interval::point(c.clone());
        for (k, &e) in m.0.iter().enumerate() {
            if e > 0 {
                t = t.mul(&b[k].pow(e));
            }
        }
        acc = acc.add(&t);
    }
    acc
}

/// `M * b` for an exact rational matrix.
pub fn mat_vec(m: &[Vec<Q>], b: &[Interval]) -> Vec<Interval> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(b)
                .filter(|(a, _)| !a.is_zero())
                .fold(Interval::zero(), |acc, (a, x)| acc.add(&x.scale(a)))
        })
        .collect()
}
