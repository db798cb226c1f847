//! Real roots of univariate rational polynomials: Sturm counting, isolation
//! by bisection, Tarski queries and Thom encodings.
//!
//! Intervals are half-open `(lo, hi]` throughout.

use std::cmp::Ordering;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{q_int, q_to_string, sign, to_decimal, Q};
use crate::univariate::UniPoly;

/// Maximum number of halvings spent trying to fix a derivative's sign by
/// refinement before switching to an exact Tarski query.
pub const THOM_REFINE_STEPS: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    Finite(Q),
    PosInf,
}

impl From<Q> for Bound {
    fn from(v: Q) -> Self {
        Bound::Finite(v)
    }
}

/// Signed remainder sequence `S0 = a, S1 = b, S_{k+1} = -rem(S_{k-1}, S_k)`,
/// each term rescaled by a positive constant.
#[derive(Clone, Debug)]
pub struct SignedRemainders {
    polys: Vec<UniPoly>,
}

fn positive_normalize(p: &UniPoly) -> UniPoly {
    if p.is_zero() {
        return p.clone();
    }
    let prim = p.primitive_rational();
    if (sign(&prim.leading()) > 0) == (sign(&p.leading()) > 0) {
        prim
    } else {
        -&prim
    }
}

impl SignedRemainders {
    pub fn new(a: &UniPoly, b: &UniPoly) -> Self {
        let mut polys = vec![positive_normalize(a)];
        if !b.is_zero() {
            polys.push(positive_normalize(b));
        }
        while polys.len() >= 2 {
            let k = polys.len();
            let r = polys[k - 2].rem(&polys[k - 1]);
            if r.is_zero() {
                break;
            }
            polys.push(positive_normalize(&-&r));
        }
        SignedRemainders { polys }
    }

    /// Sturm sequence of `p`.
    pub fn sturm(p: &UniPoly) -> Self {
        Self::new(p, &p.derivative())
    }

    pub fn polys(&self) -> &[UniPoly] {
        &self.polys
    }

    pub fn variations(&self, at: &Bound) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for p in &self.polys {
            let s = match at {
                Bound::NegInf => p.sign_at_infinity(false),
                Bound::PosInf => p.sign_at_infinity(true),
                Bound::Finite(x) => p.sign_at(x),
            };
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// `Var(lo) - Var(hi)`.
    pub fn difference(&self, lo: &Bound, hi: &Bound) -> i64 {
        self.variations(lo) as i64 - self.variations(hi) as i64
    }
}

/// Number of distinct real roots of `q` in `(lo, hi]`.
pub fn sturm_count(q: &UniPoly, lo: &Bound, hi: &Bound) -> Result<usize> {
    if q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if q.degree() == 0 {
        return Ok(0);
    }
    let d = SignedRemainders::sturm(q).difference(lo, hi);
    Ok(d.max(0) as usize)
}

/// `sum over real roots u of q of sign(g(u))`.
pub fn tarski_query(g: &UniPoly, q: &UniPoly) -> Result<i64> {
    tarski_query_in(g, q, &Bound::NegInf, &Bound::PosInf)
}

/// Tarski query restricted to roots of `q` in `(lo, hi]`.
pub fn tarski_query_in(g: &UniPoly, q: &UniPoly, lo: &Bound, hi: &Bound) -> Result<i64> {
    if q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if q.degree() == 0 {
        return Ok(0);
    }
    let b = &q.derivative() * g;
    Ok(SignedRemainders::new(q, &b).difference(lo, hi))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealRoot {
    pub lo: Q,
    pub hi: Q,
    /// Signs of `q', q'', ..., q^(deg-1)` at the root.
    pub thom: Vec<i8>,
    pub index: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealRootJson {
    pub interval: [String; 2],
    pub thom: Vec<i8>,
    pub approx: String,
}

impl RealRoot {
    pub fn width(&self) -> Q {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Q {
        (&self.lo + &self.hi) / q_int(2)
    }

    /// The root itself when it is the right endpoint (exact rational root).
    pub fn exact_value(&self, q: &UniPoly) -> Option<Q> {
        if q.eval(&self.hi).is_zero() {
            Some(self.hi.clone())
        } else {
            None
        }
    }

    /// One bisection step, keeping the root inside.
    pub fn bisect(&mut self, sturm: &SignedRemainders) {
        let mid = self.midpoint();
        if sturm.difference(&Bound::Finite(self.lo.clone()), &Bound::Finite(mid.clone())) == 1 {
            self.hi = mid;
        } else {
            self.lo = mid;
        }
    }

    /// Narrows the interval below `width` (exact rational roots collapse
    /// onto their right endpoint and stop early).
    pub fn refine_to(&mut self, q: &UniPoly, sturm: &SignedRemainders, width: &Q) {
        while &self.width() >= width {
            if q.eval(&self.hi).is_zero() {
                self.lo = &self.hi - width / q_int(2);
                return;
            }
            self.bisect(sturm);
        }
    }

    /// `approx` is correct to `digits` places; the interval is reported as is.
    pub fn to_json(&self, q: &UniPoly, digits: u32) -> RealRootJson {
        RealRootJson {
            interval: [q_to_string(&self.lo), q_to_string(&self.hi)],
            thom: self.thom.clone(),
            approx: to_decimal(&approximate(q, self, digits + 1), digits),
        }
    }
}

/// Isolating intervals for all real roots of a squarefree `q`, sorted.
pub fn isolate_real_roots(q: &UniPoly) -> Result<Vec<RealRoot>> {
    if q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !q.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if q.degree() == 0 {
        return Ok(Vec::new());
    }
    let sturm = SignedRemainders::sturm(q);
    let b = q.cauchy_bound();
    let lo = -b.clone();
    let total = sturm.difference(&Bound::Finite(lo.clone()), &Bound::Finite(b.clone()));
    let mut out = Vec::new();
    let mut stack = vec![(lo, b, total)];
    while let Some((lo, hi, count)) = stack.pop() {
        match count {
            0 => {}
            1 => out.push(RealRoot { lo, hi, thom: Vec::new(), index: 0 }),
            _ => {
                let mid = (&lo + &hi) / q_int(2);
                let left = sturm.difference(&Bound::Finite(lo.clone()), &Bound::Finite(mid.clone()));
                stack.push((mid.clone(), hi, count - left));
                stack.push((lo, mid, left));
            }
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    for (k, r) in out.iter_mut().enumerate() {
        r.index = k;
    }
    Ok(out)
}

/// Isolates the real roots of a monic squarefree `q` and attaches their Thom
/// encodings.
pub fn thom_encode_roots(q: &UniPoly) -> Result<Vec<RealRoot>> {
    let mut roots = isolate_real_roots(q)?;
    let m = q.degree();
    let sturm = SignedRemainders::sturm(q);
    let derivs: Vec<UniPoly> = (1..m).map(|k| q.nth_derivative(k)).collect();
    let deriv_sturm: Vec<SignedRemainders> = derivs
        .iter()
        .map(|d| SignedRemainders::sturm(&d.squarefree_part()))
        .collect();
    for root in &mut roots {
        let mut thom = Vec::with_capacity(derivs.len());
        for (d, ds) in derivs.iter().zip(&deriv_sturm) {
            thom.push(derivative_sign(q, &sturm, d, ds, root)?);
        }
        root.thom = thom;
    }
    Ok(roots)
}

fn derivative_sign(q: &UniPoly, sturm: &SignedRemainders, d: &UniPoly, ds: &SignedRemainders, root: &mut RealRoot) -> Result<i8> {
    if d.degree() == 0 {
        return Ok(sign(&d.leading()));
    }
    for _ in 0..THOM_REFINE_STEPS {
        let lo = Bound::Finite(root.lo.clone());
        let hi = Bound::Finite(root.hi.clone());
        if ds.difference(&lo, &hi) == 0 {
            return Ok(d.sign_at(&root.hi));
        }
        if q.eval(&root.hi).is_zero() {
            // Rational root: evaluate directly.
            return Ok(d.sign_at(&root.hi));
        }
        root.bisect(sturm);
    }
    let s = tarski_query_in(d, q, &Bound::Finite(root.lo.clone()), &Bound::Finite(root.hi.clone()))?;
    Ok(s.signum() as i8)
}

/// Orders two roots of the same polynomial from their Thom encodings; the
/// leading coefficient sign closes the derivative list.
pub fn thom_cmp(a: &[i8], b: &[i8], leading_sign: i8) -> Ordering {
    debug_assert_eq!(a.len(), b.len());
    let m = a.len();
    for k in (0..m).rev() {
        if a[k] != b[k] {
            let next = if k + 1 < m { a[k + 1] } else { leading_sign };
            return if next > 0 { a[k].cmp(&b[k]) } else { b[k].cmp(&a[k]) };
        }
    }
    Ordering::Equal
}

/// Counts of roots of `q` where `g < 0`, `g = 0`, `g > 0`, recovered from the
/// Tarski queries of `1, g, g^2`.
pub fn sign_counts(g: &UniPoly, q: &UniPoly) -> Result<[i64; 3]> {
    let t0 = tarski_query(&UniPoly::one(), q)?;
    let t1 = tarski_query(g, q)?;
    let t2 = tarski_query(&(g * g), q)?;
    // c0 + c+ + c- = t0, c+ - c- = t1, c+ + c- = t2
    let zero = t0 - t2;
    let pos = (t1 + t2) / 2;
    let neg = (t2 - t1) / 2;
    Ok([neg, zero, pos])
}

/// Isolating interval refined below `10^-digits`, for display.
pub fn approximate(q: &UniPoly, root: &RealRoot, digits: u32) -> Q {
    let mut r = root.clone();
    let sturm = SignedRemainders::sturm(q);
    let w = Q::new(One::one(), crate::rational::pow10(digits));
    r.refine_to(q, &sturm, &w);
    if let Some(v) = r.exact_value(q) {
        return v;
    }
    r.midpoint()
}
