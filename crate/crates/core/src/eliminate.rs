//! Saturation by the gradient-norm polynomial, dimension decisions and the
//! univariate (shape-lemma) representation of zero-dimensional polar
//! varieties, plus geometric degrees of the higher-dimensional ones.
//!
//! The backend is exact Buchberger completion. The zero-dimensional stage works
//! in the finite-dimensional quotient algebra: multiplication matrices give the
//! eliminants, Seidenberg's device (adjoin squarefree eliminants) yields the
//! radical, and the last coordinate's powers give `p_k` by linear algebra.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groebner::{Caps, GroebnerBasis, MonomialOrder, Stats};
use crate::poly::{DensePoly, Monomial};
use crate::polysys::{polar_system, CoordinateChange, PolarSystem};
use crate::rational::{q_int, Q};
use crate::univariate::UniPoly;

/// Largest quotient-algebra dimension handled by the linear-algebra stage.
pub const MAX_QUOTIENT_DIM: usize = 2_000;

/// Number of fresh draws tried when a random linear section degenerates.
pub const SECTION_RETRIES: usize = 8;

#[derive(Clone, Debug)]
pub struct EliminationBasis {
    pub generators: Vec<DensePoly>,
    pub order: MonomialOrder,
    pub saturated: bool,
    pub stats: Stats,
    gb: GroebnerBasis,
}

impl EliminationBasis {
    pub fn from_basis(gb: GroebnerBasis, saturated: bool) -> Self {
        EliminationBasis { generators: gb.generators(), order: gb.order(), saturated, stats: gb.stats(), gb }
    }

    pub fn groebner(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn num_vars(&self) -> usize {
        self.gb.num_vars()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DimensionVerdict {
    Empty,
    ZeroDimensional,
    PositiveDimensional,
}

/// Univariate representation `q(X_n) = 0, X_k = p_k(X_n)` of a finite set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnivariateRepresentation {
    pub q: UniPoly,
    /// `p[k]` gives coordinate `k` (0-based); the last entry is `X`.
    pub p: Vec<UniPoly>,
    pub discriminant: Q,
    pub change: CoordinateChange,
    /// Whether squarefree eliminants had to be adjoined to reach the radical.
    pub radicalized: bool,
}

impl UnivariateRepresentation {
    pub fn degree(&self) -> usize {
        self.q.degree()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeReport {
    /// `(i, delta_i)` pairs in increasing `i`.
    pub degrees: Vec<(usize, usize)>,
    pub bezout_bound: u64,
}

impl DegreeReport {
    pub fn get(&self, i: usize) -> Option<usize> {
        self.degrees.iter().find(|(k, _)| *k == i).map(|(_, d)| *d)
    }
}

/// `d (d-1)^(n-1)`.
pub fn bezout_bound(d: u32, n: usize) -> u64 {
    let d = d as u64;
    d * d.saturating_sub(1).pow(n.saturating_sub(1) as u32)
}

/// Adjoins `t * delta - 1` and eliminates `t`.
pub fn saturate_by_delta(sys: &PolarSystem, caps: &Caps) -> Result<EliminationBasis> {
    let gb = saturate_gens(&sys.equations, &sys.delta, caps)?;
    Ok(EliminationBasis::from_basis(gb, true))
}

fn saturate_gens(eqs: &[DensePoly], delta: &DensePoly, caps: &Caps) -> Result<GroebnerBasis> {
    let n = delta.num_vars();
    let map: Vec<usize> = (1..=n).collect();
    let mut gens: Vec<DensePoly> = eqs.iter().map(|e| e.embed(n + 1, &map)).collect();
    let t = DensePoly::var(n + 1, 0);
    gens.push(&(&t * &delta.embed(n + 1, &map)) - &DensePoly::one(n + 1));
    let gb = GroebnerBasis::compute(&gens, MonomialOrder::Elimination { block: 1 }, caps)?;
    gb.eliminate_block()
}

pub fn dimension_verdict(basis: &EliminationBasis) -> DimensionVerdict {
    verdict_of(&basis.gb)
}

fn verdict_of(gb: &GroebnerBasis) -> DimensionVerdict {
    if gb.is_unit() {
        return DimensionVerdict::Empty;
    }
    let lms = gb.leading_monomials();
    let n = gb.num_vars();
    let all_pure = (0..n).all(|k| {
        lms.iter()
            .any(|m| m.0[k] > 0 && m.0.iter().enumerate().all(|(j, &e)| j == k || e == 0))
    });
    if all_pure {
        DimensionVerdict::ZeroDimensional
    } else {
        DimensionVerdict::PositiveDimensional
    }
}

/// The quotient algebra `Q[x]/I` of a zero-dimensional ideal, with its
/// standard-monomial basis.
struct Quotient<'a> {
    gb: &'a GroebnerBasis,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl<'a> Quotient<'a> {
    fn new(gb: &'a GroebnerBasis) -> Result<Self> {
        let basis = gb
            .standard_monomials(MAX_QUOTIENT_DIM)
            .ok_or_else(|| Error::ResourceCap(format!("quotient dimension above {MAX_QUOTIENT_DIM} or infinite")))?;
        let index = basis.iter().cloned().enumerate().map(|(k, m)| (m, k)).collect();
        Ok(Quotient { gb, basis, index })
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    fn coords(&self, p: &DensePoly) -> Result<Vec<Q>> {
        let nf = self.gb.normal_form(p)?;
        let mut v = vec![Q::zero(); self.dim()];
        for (m, c) in nf.terms() {
            let k = self.index.get(m).ok_or_else(|| Error::InvalidArgument("normal form left the standard basis".into()))?;
            v[*k] = c.clone();
        }
        Ok(v)
    }

    /// Columns `M e_b = coords(x_var * b)`.
    fn mult_matrix(&self, var: usize) -> Result<Vec<Vec<Q>>> {
        let n = self.gb.num_vars();
        let xv = Monomial::var(n, var);
        self.basis
            .iter()
            .map(|b| {
                let m = b.mul(&xv);
                if let Some(&k) = self.index.get(&m) {
                    let mut v = vec![Q::zero(); self.dim()];
                    v[k] = Q::one();
                    Ok(v)
                } else {
                    self.coords(&DensePoly::from_terms(n, [(m.0, Q::one())]))
                }
            })
            .collect()
    }

    fn unit(&self) -> Result<Vec<Q>> {
        self.coords(&DensePoly::one(self.gb.num_vars()))
    }
}

fn mat_vec(cols: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    let d = v.len();
    let mut out = vec![Q::zero(); d];
    for (j, vj) in v.iter().enumerate() {
        if vj.is_zero() {
            continue;
        }
        for (i, c) in cols[j].iter().enumerate() {
            if !c.is_zero() {
                out[i] += c * vj;
            }
        }
    }
    out
}

/// Incremental row echelon form that remembers how each stored row is built
/// from the inserted vectors.
struct Echelon {
    rows: Vec<(usize, Vec<Q>, Vec<Q>)>,
    inserted: usize,
}

impl Echelon {
    fn new() -> Self {
        Echelon { rows: Vec::new(), inserted: 0 }
    }

    /// Reduces `v`; returns the residual and the combination `c` with
    /// `v = residual + sum c_k * inserted_k`.
    fn reduce(&self, v: &[Q]) -> (Vec<Q>, Vec<Q>) {
        let mut w = v.to_vec();
        let mut combo = vec![Q::zero(); self.inserted];
        for (pc, row, rc) in &self.rows {
            if w[*pc].is_zero() {
                continue;
            }
            let f = &w[*pc] / &row[*pc];
            for (wi, ri) in w.iter_mut().zip(row) {
                if !ri.is_zero() {
                    *wi -= &f * ri;
                }
            }
            for (ci, ri) in combo.iter_mut().zip(rc) {
                if !ri.is_zero() {
                    *ci += &f * ri;
                }
            }
        }
        (w, combo)
    }

    /// Inserts `v`; returns `Some(combination)` if it was dependent.
    fn insert(&mut self, v: &[Q]) -> Option<Vec<Q>> {
        let (w, combo) = self.reduce(v);
        match w.iter().position(|c| !c.is_zero()) {
            None => Some(combo),
            Some(pc) => {
                // w = v - sum combo_k ins_k, so in terms of inserted vectors:
                let mut rc: Vec<Q> = combo.iter().map(|c| -c.clone()).collect();
                rc.push(Q::one());
                for (_, _, r) in &mut self.rows {
                    r.push(Q::zero());
                }
                self.rows.push((pc, w, rc));
                self.inserted += 1;
                None
            }
        }
    }
}

/// Minimal polynomial of the multiplication map and the Krylov vectors
/// `1, x, ..., x^(deg-1)` in quotient coordinates.
fn eliminant(quot: &Quotient, var: usize) -> Result<(UniPoly, Echelon)> {
    let m = quot.mult_matrix(var)?;
    let mut ech = Echelon::new();
    let mut v = quot.unit()?;
    loop {
        let k = ech.inserted;
        if let Some(combo) = ech.insert(&v) {
            let mut coeffs: Vec<Q> = combo.iter().map(|c| -c.clone()).collect();
            coeffs.push(Q::one());
            debug_assert_eq!(coeffs.len(), k + 1);
            return Ok((UniPoly::new(coeffs), ech));
        }
        v = mat_vec(&m, &v);
    }
}

/// Seidenberg: adjoin squarefree parts of all eliminants. Returns the radical
/// basis and whether anything was added.
fn radicalize(gb: &GroebnerBasis, caps: &Caps) -> Result<(GroebnerBasis, bool)> {
    let n = gb.num_vars();
    let quot = Quotient::new(gb)?;
    let mut extra = Vec::new();
    for var in 0..n {
        let (g, _) = eliminant(&quot, var)?;
        let s = g.squarefree_part();
        if s.degree() < g.degree() {
            extra.push(DensePoly::from_univariate(&s, n, var));
        }
    }
    if extra.is_empty() {
        return Ok((gb.clone(), false));
    }
    let mut gens = gb.generators();
    gens.extend(extra);
    Ok((GroebnerBasis::compute(&gens, gb.order(), caps)?, true))
}

/// Number of distinct complex points of a zero-dimensional ideal.
pub fn count_points(gb: &GroebnerBasis, caps: &Caps) -> Result<usize> {
    match verdict_of(gb) {
        DimensionVerdict::Empty => Ok(0),
        DimensionVerdict::PositiveDimensional => Err(Error::NotZeroDimensional),
        DimensionVerdict::ZeroDimensional => {
            let (rad, _) = radicalize(gb, caps)?;
            Ok(Quotient::new(&rad)?.dim())
        }
    }
}

pub fn extract_representation(basis: &EliminationBasis, sys: &PolarSystem, caps: &Caps) -> Result<UnivariateRepresentation> {
    if verdict_of(&basis.gb) != DimensionVerdict::ZeroDimensional {
        return Err(Error::NotZeroDimensional);
    }
    let n = basis.num_vars();
    let (rad, radicalized) = radicalize(&basis.gb, caps)?;
    let quot = Quotient::new(&rad)?;
    let dim = quot.dim();
    let last = n - 1;
    let (q, ech) = eliminant(&quot, last)?;
    if q.degree() < dim {
        return Err(Error::ShapePositionFailure(format!(
            "last coordinate separates {} of {} points",
            q.degree(),
            dim
        )));
    }
    let mut p = Vec::with_capacity(n);
    for k in 0..last {
        let v = quot.coords(&DensePoly::var(n, k))?;
        let (res, combo) = ech.reduce(&v);
        if res.iter().any(|c| !c.is_zero()) {
            return Err(Error::ShapePositionFailure(format!("coordinate x{} not expressible", k + 1)));
        }
        p.push(UniPoly::new(combo));
    }
    p.push(UniPoly::x());
    let discriminant = q.discriminant();
    Ok(UnivariateRepresentation { q, p, discriminant, change: sys.change.clone(), radicalized })
}

/// `poly(p_1(X), ..., p_n(X)) mod q`.
pub fn substitute_mod(poly: &DensePoly, p: &[UniPoly], q: &UniPoly) -> UniPoly {
    let n = poly.num_vars();
    let mut powers: Vec<Vec<UniPoly>> = p.iter().map(|pk| vec![UniPoly::one(), pk.rem(q)]).collect();
    let mut acc = UniPoly::zero();
    for (m, c) in poly.terms() {
        let mut t = UniPoly::constant(c.clone());
        for k in 0..n {
            let e = m.0[k] as usize;
            if e == 0 {
                continue;
            }
            while powers[k].len() <= e {
                let next = powers[k].last().expect("non-empty").mul_mod(&powers[k][1], q);
                powers[k].push(next);
            }
            t = t.mul_mod(&powers[k][e], q);
        }
        acc = &acc + &t;
    }
    acc.rem(q)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    /// Every system equation vanishes modulo `q` under `X_k <- p_k`.
    pub parametrization: bool,
    /// `gcd(delta(p), q) = 1`.
    pub delta_coprime: bool,
    /// The Jacobian determinant of the polar system is a unit modulo `q`.
    pub jacobian_unit: bool,
    /// `gcd(q, q') = 1`.
    pub separable: bool,
    pub failures: Vec<String>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.parametrization && self.delta_coprime && self.jacobian_unit && self.separable
    }
}

fn det_mod(m: &[Vec<UniPoly>], q: &UniPoly) -> UniPoly {
    let n = m.len();
    if n == 1 {
        return m[0][0].rem(q);
    }
    let mut acc = UniPoly::zero();
    for c in 0..n {
        if m[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<UniPoly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, v)| v.clone()).collect())
            .collect();
        let t = m[0][c].mul_mod(&det_mod(&minor, q), q);
        acc = if c % 2 == 0 { &acc + &t } else { &acc - &t };
    }
    acc.rem(q)
}

pub fn verify_representation(rep: &UnivariateRepresentation, sys: &PolarSystem) -> Result<VerificationReport> {
    let n = sys.num_vars();
    if rep.p.len() != n || rep.q.degree() == 0 {
        return Err(Error::InvalidArgument("malformed representation".into()));
    }
    let q = &rep.q;
    let mut r = VerificationReport::default();

    r.parametrization = true;
    for (k, e) in sys.equations.iter().enumerate() {
        if !substitute_mod(e, &rep.p, q).is_zero() {
            r.parametrization = false;
            r.failures.push(format!("equation {k} does not vanish modulo q"));
        }
    }

    let dv = substitute_mod(&sys.delta, &rep.p, q);
    r.delta_coprime = dv.gcd(q).degree() == 0 && !dv.is_zero();
    if !r.delta_coprime {
        r.failures.push("a point lies on the gradient-norm hypersurface".into());
    }

    if sys.equations.len() == n {
        let jac: Vec<Vec<UniPoly>> = sys
            .equations
            .iter()
            .map(|e| {
                (0..n)
                    .map(|j| substitute_mod(&e.partial_derivative(j).expect("in range"), &rep.p, q))
                    .collect()
            })
            .collect();
        let det = det_mod(&jac, q);
        r.jacobian_unit = !det.is_zero() && det.gcd(q).degree() == 0;
        if !r.jacobian_unit {
            r.failures.push("Jacobian is singular at some point (assumption violation)".into());
        }
    } else {
        r.failures.push("Jacobian check needs a square system".into());
    }

    r.separable = q.is_squarefree() && !rep.discriminant.is_zero();
    if !r.separable {
        r.failures.push("q is not separable".into());
    }
    Ok(r)
}

/// Random affine hyperplanes `c_0 + sum c_k y_k` with integer coefficients.
fn random_hyperplanes(n: usize, count: usize, seed: u64, bound: u64) -> Vec<DensePoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let b = bound as i64;
    (0..count)
        .map(|_| {
            let mut h = DensePoly::constant(n, q_int(rng.gen_range(-b..=b)));
            for k in 0..n {
                h = &h + &DensePoly::var(n, k).scale(&q_int(rng.gen_range(-b..=b)));
            }
            h
        })
        .collect()
}

/// Options shared by degree computations.
#[derive(Clone, Copy, Debug)]
pub struct DegreeOptions {
    pub identity_coords: bool,
    pub entry_bound: u64,
    pub caps: Caps,
}

impl Default for DegreeOptions {
    fn default() -> Self {
        DegreeOptions { identity_coords: false, entry_bound: 100, caps: Caps::default() }
    }
}

/// Geometric degree of the polar variety `W_i`.
///
/// For `i = n-1` this is `deg q`; below that the saturated variety is cut by
/// `n-(i+1)` random affine hyperplanes (sliced before saturating, which is
/// set-theoretically the same for a generic section) and the distinct points
/// are counted.
pub fn polar_degree(f: &DensePoly, i: usize, seed: u64, opts: &DegreeOptions) -> Result<usize> {
    let n = f.num_vars();
    if i >= n {
        return Err(Error::InvalidArgument(format!("polar index {i} must be below n = {n}")));
    }
    let change_for = |attempt: u64| -> Result<CoordinateChange> {
        if opts.identity_coords && attempt == 0 {
            Ok(CoordinateChange::identity(n, i))
        } else {
            CoordinateChange::sample(n, i, seed.wrapping_add(attempt), opts.entry_bound)
        }
    };
    if i == n - 1 {
        for attempt in 0..SECTION_RETRIES as u64 {
            let sys = polar_system(f, i, &change_for(attempt)?)?;
            let basis = saturate_by_delta(&sys, &opts.caps)?;
            match dimension_verdict(&basis) {
                DimensionVerdict::Empty => return Ok(0),
                DimensionVerdict::PositiveDimensional => return Err(Error::NotZeroDimensional),
                DimensionVerdict::ZeroDimensional => {}
            }
            match extract_representation(&basis, &sys, &opts.caps) {
                Ok(rep) => return Ok(rep.degree()),
                Err(Error::ShapePositionFailure(_)) => continue,
                Err(e) => return Err(e),
            }
        }
        return Err(Error::GenericityExhausted(SECTION_RETRIES));
    }
    let sys = polar_system(f, i, &change_for(0)?)?;
    for attempt in 0..SECTION_RETRIES as u64 {
        let mut eqs = sys.equations.clone();
        eqs.extend(random_hyperplanes(n, n - (i + 1), seed.wrapping_add(attempt), opts.entry_bound));
        let gb = saturate_gens(&eqs, &sys.delta, &opts.caps)?;
        match verdict_of(&gb) {
            DimensionVerdict::PositiveDimensional => continue,
            _ => return count_points(&gb, &opts.caps),
        }
    }
    Err(Error::DegenerateSection(SECTION_RETRIES))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::parse_expression;
    use crate::rational::q_frac;

    fn dense(s: &str, n: usize) -> DensePoly {
        parse_expression(s, n).unwrap().expand_to_dense(32).unwrap()
    }

    fn system(s: &str, n: usize, i: usize) -> PolarSystem {
        polar_system(&dense(s, n), i, &CoordinateChange::identity(n, i)).unwrap()
    }

    const TWO_CIRCLES: &str = "((x1-2)^2+x2^2-1)*((x1+2)^2+x2^2-1)";

    #[test]
    fn circle_verdict_and_representation() {
        let sys = system("x1^2+x2^2-1", 2, 1);
        let b = saturate_by_delta(&sys, &Caps::default()).unwrap();
        assert!(b.saturated);
        assert_eq!(dimension_verdict(&b), DimensionVerdict::ZeroDimensional);
        let rep = extract_representation(&b, &sys, &Caps::default()).unwrap();
        assert_eq!(rep.q, UniPoly::from_ints(&[-1, 0, 1]));
        assert!(rep.p[0].is_zero());
        assert_eq!(rep.p[1], UniPoly::x());
        let v = verify_representation(&rep, &sys).unwrap();
        assert!(v.all_passed(), "{v:?}");
    }

    #[test]
    fn circle_jacobian_determinant() {
        let sys = system("x1^2+x2^2-1", 2, 1);
        let q = UniPoly::from_ints(&[-1, 0, 1]);
        let p = [UniPoly::zero(), UniPoly::x()];
        let jac: Vec<Vec<UniPoly>> = sys
            .equations
            .iter()
            .map(|e| (0..2).map(|j| substitute_mod(&e.partial_derivative(j).unwrap(), &p, &q)).collect())
            .collect();
        assert_eq!(det_mod(&jac, &q), UniPoly::from_ints(&[0, -4]));
    }

    #[test]
    fn corrupted_representation_fails_parametrization() {
        let sys = system("x1^2+x2^2-1", 2, 1);
        let b = saturate_by_delta(&sys, &Caps::default()).unwrap();
        let mut rep = extract_representation(&b, &sys, &Caps::default()).unwrap();
        rep.p[1] = UniPoly::from_ints(&[1, 1]);
        let v = verify_representation(&rep, &sys).unwrap();
        assert!(!v.parametrization);
        assert!(!v.all_passed());
    }

    #[test]
    fn ellipsoid_representation() {
        let sys = system("x1^2+2*x2^2+3*x3^2-1", 3, 2);
        let b = saturate_by_delta(&sys, &Caps::default()).unwrap();
        let rep = extract_representation(&b, &sys, &Caps::default()).unwrap();
        assert_eq!(rep.q, UniPoly::new(vec![q_frac(-1, 3), Q::zero(), Q::one()]));
        assert!(rep.p[0].is_zero() && rep.p[1].is_zero());
        assert!(verify_representation(&rep, &sys).unwrap().all_passed());
    }

    #[test]
    fn dimension_examples() {
        let sphere = system("x1^2+x2^2+x3^2-1", 3, 1);
        let b = saturate_by_delta(&sphere, &Caps::default()).unwrap();
        assert_eq!(dimension_verdict(&b), DimensionVerdict::PositiveDimensional);
        let hyp = system("x1*x2-1", 2, 1);
        let b = saturate_by_delta(&hyp, &Caps::default()).unwrap();
        assert_eq!(dimension_verdict(&b), DimensionVerdict::Empty);
        assert_eq!(b.generators.len(), 1);
        assert!(b.generators[0].is_constant());
    }

    #[test]
    fn saturation_removes_complex_nodes() {
        // Without saturation the nodes (0, ±i√3) are solutions.
        let sys = system(TWO_CIRCLES, 2, 1);
        let unsat = GroebnerBasis::compute(&sys.equations, MonomialOrder::GrevLex, &Caps::default()).unwrap();
        let nodes = count_points(&unsat, &Caps::default()).unwrap();
        assert_eq!(nodes, 6);
        let sat = saturate_by_delta(&sys, &Caps::default()).unwrap();
        assert_eq!(count_points(sat.groebner(), &Caps::default()).unwrap(), 4);
        // No remaining point has x1 = 0.
        let mut gens = sat.generators.clone();
        gens.push(dense("x1", 2));
        let cut = GroebnerBasis::compute(&gens, MonomialOrder::GrevLex, &Caps::default()).unwrap();
        assert!(cut.is_unit());
    }

    #[test]
    fn two_circles_generic_degree() {
        let f = dense(TWO_CIRCLES, 2);
        let ch = CoordinateChange::sample(2, 1, 3, 100).unwrap();
        let sys = polar_system(&f, 1, &ch).unwrap();
        let b = saturate_by_delta(&sys, &Caps::default()).unwrap();
        let rep = extract_representation(&b, &sys, &Caps::default()).unwrap();
        assert_eq!(rep.degree(), 4);
        assert!(verify_representation(&rep, &sys).unwrap().all_passed());
    }

    #[test]
    fn special_coordinates_need_radicalization() {
        // x1^6 + x2^6 - 1 with identity coordinates yields x1^5 = 0.
        let sys = system("x1^6+x2^6-1", 2, 1);
        let b = saturate_by_delta(&sys, &Caps::default()).unwrap();
        let rep = extract_representation(&b, &sys, &Caps::default()).unwrap();
        assert!(rep.radicalized);
        assert_eq!(rep.q, UniPoly::from_ints(&[-1, 0, 0, 0, 0, 0, 1]));
        assert!(rep.p[0].is_zero());
    }

    #[test]
    fn shape_failure_is_reported() {
        // Four points (±1, ±1): the last coordinate takes only two values.
        let gens = [dense("x1^2-1", 2), dense("x2^2-1", 2)];
        let gb = GroebnerBasis::compute(&gens, MonomialOrder::GrevLex, &Caps::default()).unwrap();
        let sys = system("x1^2+x2^2-1", 2, 1);
        let eb = EliminationBasis::from_basis(gb, true);
        assert!(matches!(extract_representation(&eb, &sys, &Caps::default()), Err(Error::ShapePositionFailure(_))));
    }

    #[test]
    fn polar_degrees_small() {
        let opts = DegreeOptions::default();
        let circle = dense("x1^2+x2^2-1", 2);
        assert_eq!(polar_degree(&circle, 0, 1, &opts).unwrap(), 2);
        assert_eq!(polar_degree(&circle, 1, 1, &opts).unwrap(), 2);
        let ell = dense("x1^2+2*x2^2+3*x3^2-1", 3);
        assert_eq!(polar_degree(&ell, 1, 5, &opts).unwrap(), 2);
        assert_eq!(polar_degree(&ell, 2, 5, &opts).unwrap(), 2);
        assert_eq!(bezout_bound(2, 3), 2);
        assert_eq!(bezout_bound(4, 2), 12);
        let two = dense(TWO_CIRCLES, 2);
        let d = polar_degree(&two, 1, 11, &opts).unwrap();
        assert_eq!(d, 4);
        assert!(d as u64 <= bezout_bound(4, 2));
    }
}
