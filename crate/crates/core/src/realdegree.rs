//! Real part of a zero-dimensional eliminant.
//!
//! `q` is split into rational-irreducible factors and each factor is kept iff
//! it has a real root (Sturm count). The product of kept factors is `q*`, its
//! degree the real degree.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::factor::factor_rational;
use crate::realroots::{sturm_count, Bound};
use crate::univariate::UniPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealPartCertificate {
    /// Monic irreducible factors with their number of real roots.
    pub factors: Vec<(UniPoly, usize)>,
    pub q_star: UniPoly,
    pub delta_star: usize,
    /// Number of factors with a real root.
    pub m: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealFactorJson {
    /// Coefficients, constant term first, as `"num/den"`.
    pub poly: Vec<String>,
    pub real_roots: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealPartJson {
    pub factors: Vec<RealFactorJson>,
    pub q_star: Vec<String>,
    pub delta_star: usize,
    pub m: usize,
}

impl RealPartCertificate {
    pub fn real_root_count(&self) -> usize {
        self.factors.iter().map(|(_, c)| c).sum()
    }

    pub fn real_factors(&self) -> impl Iterator<Item = &UniPoly> {
        self.factors.iter().filter(|(_, c)| *c > 0).map(|(f, _)| f)
    }

    /// True iff no factor has a real root.
    pub fn is_empty(&self) -> bool {
        self.delta_star == 0
    }

    pub fn to_json(&self) -> RealPartJson {
        let coeffs = |p: &UniPoly| p.coeffs().iter().map(crate::rational::q_to_string).collect();
        RealPartJson {
            factors: self
                .factors
                .iter()
                .map(|(f, c)| RealFactorJson { poly: coeffs(f), real_roots: *c })
                .collect(),
            q_star: coeffs(&self.q_star),
            delta_star: self.delta_star,
            m: self.m,
        }
    }
}

pub fn real_part(q: &UniPoly) -> Result<RealPartCertificate> {
    if q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let factors = factor_rational(q)?
        .into_iter()
        .map(|f| sturm_count(&f, &Bound::NegInf, &Bound::PosInf).map(|c| (f, c)))
        .collect::<Result<Vec<(UniPoly, usize)>>>()?;
    let q_star = factors
        .iter()
        .filter(|(_, c)| *c > 0)
        .fold(UniPoly::one(), |acc, (f, _)| &acc * f);
    let m = factors.iter().filter(|(_, c)| *c > 0).count();
    Ok(RealPartCertificate { delta_star: q_star.degree(), q_star, factors, m })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let q = &UniPoly::from_ints(&[-2, 0, 1]) * &UniPoly::from_ints(&[1, 0, 1]);
        let c = real_part(&q).unwrap();
        assert_eq!(c.q_star, UniPoly::from_ints(&[-2, 0, 1]));
        assert_eq!((c.delta_star, c.m), (2, 1));
        assert_eq!(c.real_root_count(), 2);

        let c = real_part(&UniPoly::from_ints(&[1, 0, 1])).unwrap();
        assert_eq!(c.q_star, UniPoly::one());
        assert_eq!(c.delta_star, 0);
        assert!(c.is_empty());

        let q = UniPoly::from_ints(&[4, 0, -5, 0, 1]);
        let c = real_part(&q).unwrap();
        assert_eq!(c.q_star, q);
        assert_eq!((c.delta_star, c.m), (4, 4));
    }

    #[test]
    fn real_degree_exceeds_root_count() {
        // X^3 - 2 is irreducible with one real root: the whole cubic is real.
        let c = real_part(&UniPoly::from_ints(&[-2, 0, 0, 1])).unwrap();
        assert_eq!((c.real_root_count(), c.delta_star, c.m), (1, 3, 1));
    }

    #[test]
    fn idempotent_and_reconstructs() {
        let q = &(&UniPoly::from_ints(&[-3, 0, 1]) * &UniPoly::from_ints(&[2, 0, 1])) * &UniPoly::from_ints(&[-1, 1]);
        let c = real_part(&q).unwrap();
        let prod = c.factors.iter().fold(UniPoly::one(), |acc, (f, _)| &acc * f);
        assert_eq!(prod, q);
        assert_eq!(real_part(&c.q_star).unwrap().q_star, c.q_star);
        assert_eq!(c.delta_star, 3);
    }
}
