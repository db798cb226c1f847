//! Generic unipotent coordinate changes and polar-variety equation systems.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::DensePoly;
use crate::rational::{q_int, q_to_string, Q};

/// Linear change `x = A y` where `A` is the identity except for a free
/// lower-left block: rows `i..n` (0-based) by columns `0..i`.
///
/// Such a matrix is always invertible with determinant 1, and its inverse
/// is obtained by negating the free block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateChange {
    n: usize,
    i: usize,
    /// `block[k][l]` multiplies `y_l` in the expression for `x_{i+k}`.
    block: Vec<Vec<Q>>,
    seed: Option<u64>,
    bound: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoordinateChangeJson {
    pub n: usize,
    pub i: usize,
    pub seed: Option<u64>,
    pub bound: u64,
    /// Full matrix `A` (row major), entries as `"num/den"`.
    pub matrix: Vec<Vec<String>>,
}

impl CoordinateChange {
    pub fn identity(n: usize, i: usize) -> Self {
        CoordinateChange { n, i, block: vec![vec![Q::zero(); i]; n - i], seed: None, bound: 0 }
    }

    /// Free-block entries drawn uniformly from the integers in
    /// `[-bound, bound]`, deterministically from `seed`.
    pub fn sample(n: usize, i: usize, seed: u64, bound: u64) -> Result<Self> {
        if i >= n {
            return Err(Error::InvalidArgument(format!("polar index {i} must be below n = {n}")));
        }
        if bound == 0 {
            return Err(Error::InvalidArgument("entry bound must be at least 1".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = bound as i64;
        let block = (0..n - i)
            .map(|_| (0..i).map(|_| q_int(rng.gen_range(-b..=b))).collect())
            .collect();
        Ok(CoordinateChange { n, i, block, seed: Some(seed), bound })
    }

    /// Builds a change from an explicit block (rows `i..n`, columns `0..i`).
    pub fn from_block(n: usize, i: usize, block: Vec<Vec<Q>>) -> Result<Self> {
        if i >= n || block.len() != n - i || block.iter().any(|r| r.len() != i) {
            return Err(Error::DimensionMismatch { expected: (n - i.min(n)) * i, got: block.iter().map(Vec::len).sum() });
        }
        Ok(CoordinateChange { n, i, block, seed: None, bound: 0 })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn index(&self) -> usize {
        self.i
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    pub fn is_identity(&self) -> bool {
        self.block.iter().flatten().all(Zero::is_zero)
    }

    pub fn entry(&self, row: usize, col: usize) -> Q {
        if row == col {
            Q::one()
        } else if row >= self.i && col < self.i {
            self.block[row - self.i][col].clone()
        } else {
            Q::zero()
        }
    }

    pub fn matrix(&self) -> Vec<Vec<Q>> {
        (0..self.n).map(|r| (0..self.n).map(|c| self.entry(r, c)).collect()).collect()
    }

    pub fn inverse(&self) -> CoordinateChange {
        CoordinateChange {
            n: self.n,
            i: self.i,
            block: self.block.iter().map(|r| r.iter().map(|v| -v.clone()).collect()).collect(),
            seed: None,
            bound: self.bound,
        }
    }

    /// `A * y`.
    pub fn apply_to_point(&self, y: &[Q]) -> Vec<Q> {
        (0..self.n)
            .map(|r| {
                let mut acc = y[r].clone();
                if r >= self.i {
                    for (l, a) in self.block[r - self.i].iter().enumerate() {
                        acc += a * &y[l];
                    }
                }
                acc
            })
            .collect()
    }

    /// Images of `x_1..x_n` as linear forms in `y`.
    fn linear_images(&self) -> Vec<DensePoly> {
        (0..self.n)
            .map(|r| {
                let mut p = DensePoly::var(self.n, r);
                if r >= self.i {
                    for (l, a) in self.block[r - self.i].iter().enumerate() {
                        p = &p + &DensePoly::var(self.n, l).scale(a);
                    }
                }
                p
            })
            .collect()
    }

    pub fn to_json(&self) -> CoordinateChangeJson {
        CoordinateChangeJson {
            n: self.n,
            i: self.i,
            seed: self.seed,
            bound: self.bound,
            matrix: self.matrix().iter().map(|r| r.iter().map(q_to_string).collect()).collect(),
        }
    }
}

/// Returns `p(A y)`.
pub fn apply_coordinate_change(p: &DensePoly, ch: &CoordinateChange) -> Result<DensePoly> {
    if p.num_vars() != ch.n {
        return Err(Error::DimensionMismatch { expected: ch.n, got: p.num_vars() });
    }
    p.compose(&ch.linear_images())
}

/// Equations `f, df/dY1, ..., df/dYi` in transformed coordinates, plus the
/// sum of squares of all transformed partials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarSystem {
    pub i: usize,
    pub equations: Vec<DensePoly>,
    pub delta: DensePoly,
    pub change: CoordinateChange,
}

impl PolarSystem {
    pub fn num_vars(&self) -> usize {
        self.delta.num_vars()
    }

    pub fn f(&self) -> &DensePoly {
        &self.equations[0]
    }
}

pub fn polar_system(f: &DensePoly, i: usize, ch: &CoordinateChange) -> Result<PolarSystem> {
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let n = f.num_vars();
    if i >= n {
        return Err(Error::InvalidArgument(format!("polar index {i} must be below n = {n}")));
    }
    if ch.n != n {
        return Err(Error::DimensionMismatch { expected: n, got: ch.n });
    }
    let g = apply_coordinate_change(f, ch)?;
    let grad = g.gradient();
    let mut equations = vec![g.clone()];
    equations.extend(grad.iter().take(i).cloned());
    let delta = grad
        .iter()
        .fold(DensePoly::zero(n), |acc, d| &acc + &(d * d));
    Ok(PolarSystem { i, equations, delta, change: ch.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::parse_expression;

    fn dense(s: &str, n: usize) -> DensePoly {
        parse_expression(s, n).unwrap().expand_to_dense(16).unwrap()
    }

    #[test]
    fn sample_shape_and_determinism() {
        let ch = CoordinateChange::sample(2, 1, 7, 5).unwrap();
        let m = ch.matrix();
        assert_eq!(m[0], vec![Q::one(), Q::zero()]);
        assert_eq!(m[1][1], Q::one());
        assert!(m[1][0].numer().magnitude() <= &5u32.into());
        assert_eq!(ch, CoordinateChange::sample(2, 1, 7, 5).unwrap());

        let ch0 = CoordinateChange::sample(3, 0, 1, 10).unwrap();
        assert!(ch0.is_identity());
        assert!(CoordinateChange::sample(2, 2, 1, 10).is_err());
        assert!(CoordinateChange::sample(2, 1, 1, 0).is_err());
    }

    #[test]
    fn apply_circle_example() {
        let ch = CoordinateChange::from_block(2, 1, vec![vec![Q::one()]]).unwrap();
        let g = apply_coordinate_change(&dense("x1^2+x2^2-1", 2), &ch).unwrap();
        assert_eq!(g.to_string(), "2*x1^2 + 2*x1*x2 + x2^2 - 1");
        let id = CoordinateChange::identity(2, 1);
        assert_eq!(apply_coordinate_change(&dense("x1^2+x2^2-1", 2), &id).unwrap(), dense("x1^2+x2^2-1", 2));
    }

    #[test]
    fn inverse_recovers_torus() {
        let t = dense("(x1^2+x2^2+x3^2+3)^2 - 16*(x1^2+x2^2)", 3);
        let ch = CoordinateChange::sample(3, 2, 99, 100).unwrap();
        let g = apply_coordinate_change(&t, &ch).unwrap();
        assert_eq!(g.degree(), 4);
        assert_eq!(apply_coordinate_change(&g, &ch.inverse()).unwrap(), t);
    }

    #[test]
    fn polar_system_examples() {
        let s = polar_system(&dense("x1^2+x2^2-1", 2), 1, &CoordinateChange::identity(2, 1)).unwrap();
        assert_eq!(s.equations.len(), 2);
        assert_eq!(s.equations[1].to_string(), "2*x1");
        assert_eq!(s.delta.to_string(), "4*x1^2 + 4*x2^2");

        let s = polar_system(&dense("x1^2+2*x2^2+3*x3^2-1", 3), 2, &CoordinateChange::identity(3, 2)).unwrap();
        let eqs: Vec<String> = s.equations.iter().map(|e| e.to_string()).collect();
        assert_eq!(eqs, ["x1^2 + 2*x2^2 + 3*x3^2 - 1", "2*x1", "4*x2"]);
        assert_eq!(s.delta.to_string(), "4*x1^2 + 16*x2^2 + 36*x3^2");

        let s = polar_system(&dense("x1^2+2*x2^2+3*x3^2-1", 3), 0, &CoordinateChange::identity(3, 0)).unwrap();
        assert_eq!(s.equations.len(), 1);

        assert_eq!(
            polar_system(&DensePoly::constant(2, q_int(3)), 0, &CoordinateChange::identity(2, 0)),
            Err(Error::ConstantPolynomial)
        );
    }
}
