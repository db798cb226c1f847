//! Sparse multivariate polynomials over the rationals.
//!
//! Variables are addressed by 0-based index internally (`x1` is index 0).
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose ordering is
//! graded lexicographic, so iteration order (and therefore any printed or
//! serialized form) is canonical.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{q_int, Q};
use crate::univariate::UniPoly;

/// Exponent vector, ordered graded lexicographically with `x1 > x2 > ...`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DensePoly {
    num_vars: usize,
    terms: BTreeMap<Monomial, Q>,
}

impl DensePoly {
    pub fn zero(num_vars: usize) -> Self {
        DensePoly { num_vars, terms: BTreeMap::new() }
    }

    pub fn constant(num_vars: usize, c: Q) -> Self {
        let mut p = Self::zero(num_vars);
        p.add_term(Monomial::one(num_vars), c);
        p
    }

    pub fn one(num_vars: usize) -> Self {
        Self::constant(num_vars, Q::one())
    }

    pub fn var(num_vars: usize, i: usize) -> Self {
        let mut p = Self::zero(num_vars);
        p.add_term(Monomial::var(num_vars, i), Q::one());
        p
    }

    pub fn from_terms(num_vars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Q)>) -> Self {
        let mut p = Self::zero(num_vars);
        for (e, c) in terms {
            assert_eq!(e.len(), num_vars, "exponent vector length");
            p.add_term(Monomial(e), c);
        }
        p
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u32]) -> Q {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    /// Total degree; the zero polynomial has degree 0.
    pub fn degree(&self) -> u32 {
        self.terms.keys().next_back().map_or(0, Monomial::degree)
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0)
    }

    /// Leading term under graded lex.
    pub fn leading(&self) -> Option<(&Monomial, &Q)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &Q) -> DensePoly {
        if c.is_zero() {
            return Self::zero(self.num_vars);
        }
        DensePoly {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Q) -> DensePoly {
        if c.is_zero() {
            return Self::zero(self.num_vars);
        }
        DensePoly {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> DensePoly {
        let mut base = self.clone();
        let mut acc = Self::one(self.num_vars);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, point: &[Q]) -> Result<Q> {
        if point.len() != self.num_vars {
            return Err(Error::DimensionMismatch { expected: self.num_vars, got: point.len() });
        }
        let mut acc = Q::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Formal partial derivative with respect to variable `j` (0-based).
    pub fn partial_derivative(&self, j: usize) -> Result<DensePoly> {
        if j >= self.num_vars {
            return Err(Error::VariableOutOfRange { index: j + 1, n: self.num_vars });
        }
        let mut out = Self::zero(self.num_vars);
        for (m, c) in &self.terms {
            let e = m.0[j];
            if e == 0 {
                continue;
            }
            let mut nm = m.clone();
            nm.0[j] -= 1;
            out.add_term(nm, c * q_int(e as i64));
        }
        Ok(out)
    }

    pub fn gradient(&self) -> Vec<DensePoly> {
        (0..self.num_vars)
            .map(|j| self.partial_derivative(j).expect("index in range"))
            .collect()
    }

    /// Substitutes `x_k <- images[k]`; all images share a common variable count.
    pub fn compose(&self, images: &[DensePoly]) -> Result<DensePoly> {
        if images.len() != self.num_vars {
            return Err(Error::DimensionMismatch { expected: self.num_vars, got: images.len() });
        }
        let target = images.first().map_or(0, |p| p.num_vars);
        let mut powers: Vec<Vec<DensePoly>> = images
            .iter()
            .map(|p| vec![DensePoly::one(target), p.clone()])
            .collect();
        let mut out = DensePoly::zero(target);
        for (m, c) in &self.terms {
            let mut t = DensePoly::constant(target, c.clone());
            for (k, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[k].len() <= e as usize {
                    let next = &powers[k][powers[k].len() - 1] * &images[k];
                    powers[k].push(next);
                }
                t = &t * &powers[k][e as usize];
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Re-embeds into a ring with `n` variables; `map[k]` is the new index of `x_k`.
    pub fn embed(&self, n: usize, map: &[usize]) -> DensePoly {
        let mut out = DensePoly::zero(n);
        for (m, c) in &self.terms {
            let mut e = vec![0; n];
            for (k, &x) in m.0.iter().enumerate() {
                e[map[k]] += x;
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Variables that actually occur.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.num_vars)
            .filter(|&i| self.terms.keys().any(|m| m.0[i] > 0))
            .collect()
    }

    /// Univariate view if only variable `i` occurs.
    pub fn to_univariate(&self, i: usize) -> Option<UniPoly> {
        let mut coeffs = vec![Q::zero(); self.degree_in(i) as usize + 1];
        for (m, c) in &self.terms {
            if m.0.iter().enumerate().any(|(k, &e)| k != i && e > 0) {
                return None;
            }
            coeffs[m.0[i] as usize] = c.clone();
        }
        Some(UniPoly::new(coeffs))
    }

    pub fn from_univariate(u: &UniPoly, num_vars: usize, i: usize) -> DensePoly {
        let mut out = DensePoly::zero(num_vars);
        for (k, c) in u.coeffs().iter().enumerate() {
            let mut e = vec![0; num_vars];
            e[i] = k as u32;
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Division by a single polynomial under graded lex: `self = q * g + r`
    /// with no term of `r` divisible by the leading monomial of `g`.
    pub fn div_rem(&self, g: &DensePoly) -> Result<(DensePoly, DensePoly)> {
        let (lm, lc) = g.leading().ok_or(Error::ZeroPolynomial)?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut p = self.clone();
        let mut quot = DensePoly::zero(self.num_vars);
        let mut rem = DensePoly::zero(self.num_vars);
        while let Some((m, c)) = p.terms.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            if lm.divides(&m) {
                let qm = lm.quotient_of(&m);
                let qc = &c / &lc;
                p = &p - &g.mul_monomial(&qm, &qc);
                quot.add_term(qm, qc);
            } else {
                p.terms.remove(&m);
                rem.add_term(m, c);
            }
        }
        Ok((quot, rem))
    }

    /// Makes the graded-lex leading coefficient 1.
    pub fn monic(&self) -> DensePoly {
        match self.leading() {
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    pub fn max_abs_coeff(&self) -> Q {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_else(Q::zero)
    }
}

impl Add for &DensePoly {
    type Output = DensePoly;
    fn add(self, rhs: &DensePoly) -> DensePoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &DensePoly {
    type Output = DensePoly;
    fn sub(self, rhs: &DensePoly) -> DensePoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &DensePoly {
    type Output = DensePoly;
    fn mul(self, rhs: &DensePoly) -> DensePoly {
        let mut out = DensePoly::zero(self.num_vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &DensePoly {
    type Output = DensePoly;
    fn neg(self) -> DensePoly {
        DensePoly {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

fn fmt_coeff(c: &Q) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for DensePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let vars: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, e) })
                .collect();
            if vars.is_empty() {
                write!(f, "{}", fmt_coeff(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", fmt_coeff(&abs), vars.join("*"))?;
            }
        }
        Ok(())
    }
}
