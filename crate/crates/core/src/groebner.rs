//! Buchberger completion over the rationals.
//!
//! Polynomials are handled internally with primitive integer coefficients;
//! every reduction step is fraction-free and the result is divided by its
//! content. Pair selection uses the sugar strategy and pairs are pruned with
//! the Gebauer–Möller criteria.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{DensePoly, Monomial};
use crate::rational::Q;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MonomialOrder {
    /// Lexicographic with `x1 > x2 > ... > xn`.
    Lex,
    /// Graded reverse lexicographic.
    GrevLex,
    /// Block order: the first `block` variables compared by grevlex first,
    /// ties broken by grevlex on the remaining variables. Eliminates the block.
    Elimination { block: usize },
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl MonomialOrder {
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match *self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::GrevLex => grevlex(a, b),
            MonomialOrder::Elimination { block } => {
                grevlex(&a[..block], &b[..block]).then_with(|| grevlex(&a[block..], &b[block..]))
            }
        }
    }
}

/// Resource limits for a completion run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    pub max_basis: usize,
    pub max_pairs: usize,
    pub max_terms: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { max_basis: 2_000, max_pairs: 200_000, max_terms: 100_000 }
    }
}

/// Counters reported alongside a completion (and on cap failures).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    pub pairs_reduced: usize,
    pub pairs_skipped: usize,
    pub zero_reductions: usize,
    pub basis_size: usize,
}

type Exp = Vec<u32>;

#[derive(Clone, Debug)]
struct IPoly {
    /// Descending in the active order, nonzero coefficients.
    terms: Vec<(Exp, BigInt)>,
}

impl IPoly {
    fn lm(&self) -> &Exp {
        &self.terms[0].0
    }

    fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content and makes the leading coefficient positive.
    /// Returns the factor divided by (sign included).
    fn make_primitive(&mut self) -> BigInt {
        if self.terms.is_empty() {
            return BigInt::one();
        }
        let mut g = self.content();
        if self.lc().is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, c) in &mut self.terms {
                *c = &*c / &g;
            }
        }
        g
    }
}

fn exp_divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn exp_lcm(a: &[u32], b: &[u32]) -> Exp {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn exp_sub(a: &[u32], b: &[u32]) -> Exp {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn exp_disjoint(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

fn exp_deg(a: &[u32]) -> u32 {
    a.iter().sum()
}

/// `a*p - b*m*g` restricted to positions `from..` of `p` (earlier terms are
/// only scaled by `a`).
fn sub_mul(order: MonomialOrder, p: &IPoly, from: usize, a: &BigInt, b: &BigInt, m: &[u32], g: &IPoly) -> IPoly {
    let mut out: Vec<(Exp, BigInt)> = Vec::with_capacity(p.terms.len() + g.terms.len());
    for (e, c) in &p.terms[..from] {
        out.push((e.clone(), c * a));
    }
    let mut i = from;
    let mut j = 0;
    let gm: Vec<Exp> = g.terms.iter().map(|(e, _)| e.iter().zip(m).map(|(x, y)| x + y).collect()).collect();
    while i < p.terms.len() || j < g.terms.len() {
        let ord = if i >= p.terms.len() {
            Ordering::Less
        } else if j >= g.terms.len() {
            Ordering::Greater
        } else {
            order.cmp(&p.terms[i].0, &gm[j])
        };
        match ord {
            Ordering::Greater => {
                out.push((p.terms[i].0.clone(), &p.terms[i].1 * a));
                i += 1;
            }
            Ordering::Less => {
                out.push((gm[j].clone(), -(&g.terms[j].1 * b)));
                j += 1;
            }
            Ordering::Equal => {
                let c = &p.terms[i].1 * a - &g.terms[j].1 * b;
                if !c.is_zero() {
                    out.push((p.terms[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    IPoly { terms: out }
}

/// Full reduction of `p` modulo `basis`. The returned polynomial is primitive
/// and `scale` is updated so that `result = scale * p (mod ideal)`.
fn full_reduce(order: MonomialOrder, mut p: IPoly, basis: &[&IPoly], scale: &mut Q, max_terms: usize) -> Result<IPoly> {
    let mut pos = 0;
    let mut steps = 0usize;
    while pos < p.terms.len() {
        let m = &p.terms[pos].0;
        let Some(g) = basis.iter().find(|g| exp_divides(g.lm(), m)) else {
            pos += 1;
            continue;
        };
        let c = &p.terms[pos].1;
        let gg = c.gcd(g.lc());
        let a = g.lc() / &gg;
        let b = c / &gg;
        let q = exp_sub(m, g.lm());
        p = sub_mul(order, &p, pos, &a, &b, &q, g);
        *scale *= Q::from_integer(a);
        steps += 1;
        if p.terms.len() > max_terms {
            return Err(Error::ResourceCap(format!("intermediate polynomial exceeded {max_terms} terms")));
        }
        if steps % 4 == 0 {
            let g = p.content();
            if !g.is_zero() && !g.is_one() {
                for (_, c) in &mut p.terms {
                    *c = &*c / &g;
                }
                *scale /= Q::from_integer(g);
            }
        }
    }
    let g = p.make_primitive();
    *scale /= Q::from_integer(g);
    Ok(p)
}

fn to_ipoly(order: MonomialOrder, p: &DensePoly) -> IPoly {
    let mut terms: Vec<(Exp, Q)> = p.terms().map(|(m, c)| (m.0.clone(), c.clone())).collect();
    terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
    let l = crate::rational::denom_lcm(terms.iter().map(|(_, c)| c));
    let mut ip = IPoly {
        terms: terms
            .into_iter()
            .map(|(e, c)| (e, (c * Q::from_integer(l.clone())).to_integer()))
            .collect(),
    };
    ip.make_primitive();
    ip
}

fn to_dense(n: usize, p: &IPoly) -> DensePoly {
    DensePoly::from_terms(n, p.terms.iter().map(|(e, c)| (e.clone(), Q::from_integer(c.clone()))))
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Exp,
    sugar: u32,
}

/// A reduced Gröbner basis together with its monomial order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    num_vars: usize,
    order: MonomialOrder,
    polys: Vec<IPoly>,
    stats: Stats,
}

impl GroebnerBasis {
    /// Runs Buchberger completion and returns the reduced basis.
    pub fn compute(gens: &[DensePoly], order: MonomialOrder, caps: &Caps) -> Result<GroebnerBasis> {
        let num_vars = gens
            .first()
            .map(DensePoly::num_vars)
            .ok_or_else(|| Error::InvalidArgument("empty generator list".into()))?;
        let mut polys: Vec<IPoly> = Vec::new();
        let mut sugar: Vec<u32> = Vec::new();
        let mut active: Vec<usize> = Vec::new();
        let mut pairs: Vec<Pair> = Vec::new();
        let mut stats = Stats::default();

        let mut inputs: Vec<IPoly> = gens.iter().filter(|g| !g.is_zero()).map(|g| to_ipoly(order, g)).collect();
        inputs.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
        for g in inputs {
            let basis: Vec<&IPoly> = active.iter().map(|&k| &polys[k]).collect();
            let mut s = Q::one();
            let h = full_reduce(order, g, &basis, &mut s, caps.max_terms)?;
            if h.is_zero() {
                continue;
            }
            let sg = h.terms.iter().map(|(e, _)| exp_deg(e)).max().unwrap_or(0);
            Self::update(order, &mut polys, &mut sugar, &mut active, &mut pairs, h, sg, &mut stats);
        }

        while !pairs.is_empty() {
            if stats.pairs_reduced >= caps.max_pairs {
                return Err(Error::ResourceCap(format!(
                    "pair limit {} reached (basis {}, zero reductions {})",
                    caps.max_pairs, active.len(), stats.zero_reductions
                )));
            }
            // Lowest sugar, then smallest lcm.
            let (best, _) = pairs
                .iter()
                .enumerate()
                .min_by(|(_, a), (_, b)| a.sugar.cmp(&b.sugar).then_with(|| order.cmp(&a.lcm, &b.lcm)))
                .expect("non-empty");
            let pair = pairs.swap_remove(best);
            stats.pairs_reduced += 1;
            let sp = Self::spoly(order, &polys[pair.i], &polys[pair.j], &pair.lcm);
            let basis: Vec<&IPoly> = active.iter().map(|&k| &polys[k]).collect();
            let mut s = Q::one();
            let h = full_reduce(order, sp, &basis, &mut s, caps.max_terms)?;
            if h.is_zero() {
                stats.zero_reductions += 1;
                continue;
            }
            if h.terms.len() == 1 && exp_deg(h.lm()) == 0 {
                // Unit ideal.
                polys.push(h);
                return Ok(GroebnerBasis {
                    num_vars,
                    order,
                    polys: vec![polys.pop().expect("just pushed")],
                    stats: Stats { basis_size: 1, ..stats },
                });
            }
            Self::update(order, &mut polys, &mut sugar, &mut active, &mut pairs, h, pair.sugar, &mut stats);
            if active.len() > caps.max_basis {
                return Err(Error::ResourceCap(format!("basis exceeded {} elements", caps.max_basis)));
            }
        }

        let mut gb = GroebnerBasis { num_vars, order, polys: active.iter().map(|&k| polys[k].clone()).collect(), stats };
        gb.interreduce(caps)?;
        gb.stats.basis_size = gb.polys.len();
        Ok(gb)
    }

    fn spoly(order: MonomialOrder, f: &IPoly, g: &IPoly, lcm: &[u32]) -> IPoly {
        let mf = exp_sub(lcm, f.lm());
        let mg = exp_sub(lcm, g.lm());
        let gg = f.lc().gcd(g.lc());
        let a = g.lc() / &gg;
        let b = f.lc() / &gg;
        let fm = IPoly {
            terms: f.terms[1..]
                .iter()
                .map(|(e, c)| (e.iter().zip(&mf).map(|(x, y)| x + y).collect(), c.clone()))
                .collect(),
        };
        let gt = IPoly { terms: g.terms[1..].to_vec() };
        let mut s = sub_mul(order, &fm, 0, &a, &b, &mg, &gt);
        s.make_primitive();
        s
    }

    #[allow(clippy::too_many_arguments)]
    fn update(
        order: MonomialOrder,
        polys: &mut Vec<IPoly>,
        sugar: &mut Vec<u32>,
        active: &mut Vec<usize>,
        pairs: &mut Vec<Pair>,
        h: IPoly,
        h_sugar: u32,
        stats: &mut Stats,
    ) {
        let hi = polys.len();
        let hlm = h.lm().clone();
        polys.push(h);
        sugar.push(h_sugar);

        let pair_sugar = |polys: &[IPoly], sugar: &[u32], i: usize, j: usize, lcm: &[u32]| -> u32 {
            let si = sugar[i] + exp_deg(lcm) - exp_deg(polys[i].lm());
            let sj = sugar[j] + exp_deg(lcm) - exp_deg(polys[j].lm());
            si.max(sj)
        };

        let cands: Vec<(usize, Exp)> = active.iter().map(|&g| (g, exp_lcm(&hlm, polys[g].lm()))).collect();
        // Chain criterion among new pairs.
        let mut keep: Vec<(usize, Exp)> = Vec::new();
        for (k, (g, l)) in cands.iter().enumerate() {
            let disjoint = exp_disjoint(&hlm, polys[*g].lm());
            let dominated = cands
                .iter()
                .enumerate()
                .any(|(k2, (_, l2))| k2 > k && exp_divides(l2, l))
                || keep.iter().any(|(_, l2)| exp_divides(l2, l));
            if disjoint || !dominated {
                keep.push((*g, l.clone()));
            } else {
                stats.pairs_skipped += 1;
            }
        }
        // Product criterion.
        let new_pairs: Vec<Pair> = keep
            .into_iter()
            .filter(|(g, _)| {
                let d = exp_disjoint(&hlm, polys[*g].lm());
                if d {
                    stats.pairs_skipped += 1;
                }
                !d
            })
            .map(|(g, l)| Pair { i: g, j: hi, sugar: pair_sugar(polys, sugar, g, hi, &l), lcm: l })
            .collect();
        // Old pairs made redundant by h.
        let before = pairs.len();
        pairs.retain(|p| {
            !(exp_divides(&hlm, &p.lcm)
                && exp_lcm(polys[p.i].lm(), &hlm) != p.lcm
                && exp_lcm(polys[p.j].lm(), &hlm) != p.lcm)
        });
        stats.pairs_skipped += before - pairs.len();
        pairs.extend(new_pairs);
        active.retain(|&g| !exp_divides(&hlm, polys[g].lm()));
        active.push(hi);
        let _ = order;
    }

    fn interreduce(&mut self, caps: &Caps) -> Result<()> {
        let order = self.order;
        // Minimal basis.
        let mut polys = std::mem::take(&mut self.polys);
        polys.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
        let mut minimal: Vec<IPoly> = Vec::new();
        for p in polys {
            if !minimal.iter().any(|g| exp_divides(g.lm(), p.lm())) {
                minimal.retain(|g| !exp_divides(p.lm(), g.lm()));
                minimal.push(p);
            }
        }
        let mut reduced = Vec::with_capacity(minimal.len());
        for k in 0..minimal.len() {
            let others: Vec<&IPoly> = minimal.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, g)| g).collect();
            let head = IPoly { terms: vec![minimal[k].terms[0].clone()] };
            let tail = IPoly { terms: minimal[k].terms[1..].to_vec() };
            let mut s = Q::one();
            let t = full_reduce(order, tail, &others, &mut s, caps.max_terms)?;
            // head + t/s, cleared to integers.
            let mut terms = vec![(head.terms[0].0.clone(), Q::from_integer(head.terms[0].1.clone()))];
            terms.extend(t.terms.into_iter().map(|(e, c)| (e, Q::from_integer(c) / &s)));
            let l = crate::rational::denom_lcm(terms.iter().map(|(_, c)| c));
            let mut ip = IPoly {
                terms: terms
                    .into_iter()
                    .map(|(e, c)| (e, (c * Q::from_integer(l.clone())).to_integer()))
                    .collect(),
            };
            ip.make_primitive();
            reduced.push(ip);
        }
        reduced.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
        self.polys = reduced;
        Ok(())
    }

    /// For a basis under `Elimination { block }`, the elements free of the
    /// block variables form a grevlex basis of the elimination ideal.
    pub fn eliminate_block(&self) -> Result<GroebnerBasis> {
        let MonomialOrder::Elimination { block } = self.order else {
            return Err(Error::InvalidArgument("basis is not under an elimination order".into()));
        };
        let n = self.num_vars - block;
        let polys: Vec<IPoly> = self
            .polys
            .iter()
            .filter(|p| p.terms.iter().all(|(e, _)| e[..block].iter().all(|&x| x == 0)))
            .map(|p| IPoly { terms: p.terms.iter().map(|(e, c)| (e[block..].to_vec(), c.clone())).collect() })
            .collect();
        Ok(GroebnerBasis { num_vars: n, order: MonomialOrder::GrevLex, stats: Stats { basis_size: polys.len(), ..self.stats }, polys })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn stats(&self) -> Stats {
        self.stats
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// True when the basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && exp_deg(self.polys[0].lm()) == 0
    }

    /// Basis elements as rational polynomials with leading coefficient 1.
    pub fn generators(&self) -> Vec<DensePoly> {
        self.polys
            .iter()
            .map(|p| {
                let d = to_dense(self.num_vars, p);
                d.scale(&Q::from_integer(p.lc().clone()).recip())
            })
            .collect()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().map(|p| Monomial(p.lm().clone())).collect()
    }

    /// Exact normal form of `p` (rational coefficients).
    pub fn normal_form(&self, p: &DensePoly) -> Result<DensePoly> {
        if p.is_zero() {
            return Ok(p.clone());
        }
        let mut ip = to_ipoly(self.order, p);
        // `to_ipoly` scaled p by some rational; recover it from a leading term.
        let (m0, c0) = p.terms().next_back().expect("non-zero");
        let c_int = ip
            .terms
            .iter()
            .find(|(e, _)| e == &m0.0)
            .map(|(_, c)| c.clone())
            .expect("term present");
        let mut scale = Q::from_integer(c_int) / c0;
        let basis: Vec<&IPoly> = self.polys.iter().collect();
        ip = full_reduce(self.order, ip, &basis, &mut scale, usize::MAX)?;
        Ok(to_dense(self.num_vars, &ip).scale(&scale.recip()))
    }

    /// Monomials not divisible by any leading monomial, if finitely many.
    /// Returns `None` for positive-dimensional ideals.
    pub fn standard_monomials(&self, limit: usize) -> Option<Vec<Monomial>> {
        let n = self.num_vars;
        let lms = self.leading_monomials();
        let mut bounds = vec![0u32; n];
        for (k, b) in bounds.iter_mut().enumerate() {
            *b = lms
                .iter()
                .filter(|m| m.0.iter().enumerate().all(|(j, &e)| (j == k) == (e > 0)))
                .map(|m| m.0[k])
                .min()?;
        }
        let mut out = Vec::new();
        let mut cur = vec![0u32; n];
        loop {
            if !lms.iter().any(|m| exp_divides(&m.0, &cur)) {
                out.push(Monomial(cur.clone()));
                if out.len() > limit {
                    return None;
                }
            }
            // Odometer over the box [0, bounds).
            let mut k = 0;
            loop {
                if k == n {
                    out.sort_by(|a, b| self.order.cmp(&a.0, &b.0));
                    return Some(out);
                }
                cur[k] += 1;
                if cur[k] < bounds[k] {
                    break;
                }
                cur[k] = 0;
                k += 1;
            }
        }
    }
}

/// Multivariate gcd via the intersection `(t*a) ∩ ((1-t)*b)`.
pub fn poly_gcd(a: &DensePoly, b: &DensePoly, caps: &Caps) -> Result<DensePoly> {
    let n = a.num_vars();
    if a.is_zero() {
        return Ok(b.monic());
    }
    if b.is_zero() {
        return Ok(a.monic());
    }
    if a.is_constant() || b.is_constant() {
        return Ok(DensePoly::one(n));
    }
    let map: Vec<usize> = (1..=n).collect();
    let t = DensePoly::var(n + 1, 0);
    let one_minus_t = &DensePoly::one(n + 1) - &t;
    let gens = [&t * &a.embed(n + 1, &map), &one_minus_t * &b.embed(n + 1, &map)];
    let gb = GroebnerBasis::compute(&gens, MonomialOrder::Elimination { block: 1 }, caps)?;
    let lcm = gb
        .generators()
        .into_iter()
        .find(|g| g.degree_in(0) == 0)
        .ok_or_else(|| Error::InvalidArgument("no lcm found".into()))?;
    let back: Vec<DensePoly> = std::iter::once(DensePoly::zero(n))
        .chain((0..n).map(|k| DensePoly::var(n, k)))
        .collect();
    let lcm = lcm.compose(&back)?;
    let (g, r) = (a * b).div_rem(&lcm)?;
    debug_assert!(r.is_zero());
    Ok(g.monic())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::parse_expression;
    use crate::rational::q_int;

    fn dense(s: &str, n: usize) -> DensePoly {
        parse_expression(s, n).unwrap().expand_to_dense(32).unwrap()
    }

    #[test]
    fn orders() {
        assert_eq!(MonomialOrder::Lex.cmp(&[1, 0], &[0, 5]), Ordering::Greater);
        assert_eq!(MonomialOrder::GrevLex.cmp(&[1, 0], &[0, 5]), Ordering::Less);
        // x1*x3 < x2^2 in grevlex
        assert_eq!(MonomialOrder::GrevLex.cmp(&[1, 0, 1], &[0, 2, 0]), Ordering::Less);
        let e = MonomialOrder::Elimination { block: 1 };
        assert_eq!(e.cmp(&[1, 0, 0], &[0, 9, 9]), Ordering::Greater);
    }

    #[test]
    fn circle_critical_points() {
        let gens = [dense("x1^2+x2^2-1", 2), dense("2*x1", 2)];
        for order in [MonomialOrder::Lex, MonomialOrder::GrevLex] {
            let gb = GroebnerBasis::compute(&gens, order, &Caps::default()).unwrap();
            let g: Vec<String> = gb.generators().iter().map(|p| p.to_string()).collect();
            assert_eq!(g.len(), 2);
            assert!(g.contains(&"x1".to_string()));
            assert!(g.contains(&"x2^2 - 1".to_string()));
            let sm = gb.standard_monomials(100).unwrap();
            assert_eq!(sm.len(), 2);
        }
    }

    #[test]
    fn unit_ideal() {
        let gens = [dense("x1*x2-1", 2), dense("x2", 2)];
        let gb = GroebnerBasis::compute(&gens, MonomialOrder::GrevLex, &Caps::default()).unwrap();
        assert!(gb.is_unit());
    }

    #[test]
    fn normal_form_is_exact() {
        let gens = [dense("x1^2+x2^2-1", 2), dense("x1-x2", 2)];
        let gb = GroebnerBasis::compute(&gens, MonomialOrder::Lex, &Caps::default()).unwrap();
        // x1 = x2, 2 x2^2 = 1
        let nf = gb.normal_form(&dense("3*x1^2", 2)).unwrap();
        assert_eq!(nf, DensePoly::constant(2, crate::rational::q_frac(3, 2)));
        // Ideal membership.
        let p = &dense("x1^2+x2^2-1", 2) * &dense("x1 + 7*x2^3", 2);
        assert!(gb.normal_form(&p).unwrap().is_zero());
    }

    #[test]
    fn positive_dimensional_has_no_finite_standard_basis() {
        let gens = [dense("x1^2+x2^2+x3^2-1", 3), dense("x1", 3)];
        let gb = GroebnerBasis::compute(&gens, MonomialOrder::GrevLex, &Caps::default()).unwrap();
        assert!(gb.standard_monomials(1000).is_none());
    }

    #[test]
    fn gcd_of_multivariate() {
        let a = dense("(x1^2+x2^2-1)*(x1-x2+3)", 2);
        let b = dense("(x1^2+x2^2-1)^2*(x2+1)", 2);
        let g = poly_gcd(&a, &b, &Caps::default()).unwrap();
        assert_eq!(g, dense("x1^2+x2^2-1", 2));
        let one = poly_gcd(&dense("x1+1", 2), &dense("x2", 2), &Caps::default()).unwrap();
        assert_eq!(one, DensePoly::constant(2, q_int(1)));
    }

    #[test]
    fn cap_is_enforced() {
        let gens = [dense("x1^3 - x2*x3 + 1", 3), dense("x2^3 - x1*x3", 3), dense("x3^3 - x1 - x2", 3)];
        let caps = Caps { max_pairs: 2, ..Caps::default() };
        assert!(matches!(
            GroebnerBasis::compute(&gens, MonomialOrder::Lex, &caps),
            Err(Error::ResourceCap(_))
        ));
    }
}
