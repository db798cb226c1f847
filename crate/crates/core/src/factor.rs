//! Factorization of squarefree univariate polynomials over the rationals.
//!
//! Zassenhaus: factor modulo a small prime (distinct-degree then
//! Cantor–Zassenhaus equal-degree splitting), lift the factorization
//! quadratically to a modulus beyond the Mignotte bound, then recombine
//! subsets of lifted factors by trial division over the integers.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::rational::Q;
use crate::univariate::UniPoly;

/// Upper bound on subset trials during recombination.
pub const MAX_RECOMBINATION_TRIALS: usize = 1 << 20;

const PRIMES: [u64; 24] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

/// Dense polynomials over `F_p`, constant term first, no trailing zeros.
mod fp {
    use super::*;

    pub type Poly = Vec<u64>;

    pub fn trim(mut a: Poly) -> Poly {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn deg(a: &Poly) -> usize {
        a.len().saturating_sub(1)
    }

    pub fn inv(a: u64, p: u64) -> u64 {
        pow(a, p - 2, p)
    }

    pub fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
        let mut r = 1u64;
        a %= p;
        while e > 0 {
            if e & 1 == 1 {
                r = r * a % p;
            }
            a = a * a % p;
            e >>= 1;
        }
        r
    }

    pub fn sub(a: &Poly, b: &Poly, p: u64) -> Poly {
        let n = a.len().max(b.len());
        trim(
            (0..n)
                .map(|k| (a.get(k).copied().unwrap_or(0) + p - b.get(k).copied().unwrap_or(0)) % p)
                .collect(),
        )
    }

    pub fn mul(a: &Poly, b: &Poly, p: u64) -> Poly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        trim(out)
    }

    pub fn divrem(a: &Poly, b: &Poly, p: u64) -> (Poly, Poly) {
        assert!(!b.is_empty(), "division by zero");
        if a.len() < b.len() {
            return (Vec::new(), a.clone());
        }
        let mut r = a.clone();
        let db = b.len() - 1;
        let li = inv(*b.last().expect("non-empty"), p);
        let mut q = vec![0u64; a.len() - db];
        for k in (0..q.len()).rev() {
            let c = r[k + db] * li % p;
            if c == 0 {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                r[k + j] = (r[k + j] + p - c * y % p) % p;
            }
            q[k] = c;
        }
        r.truncate(db);
        (trim(q), trim(r))
    }

    pub fn rem(a: &Poly, b: &Poly, p: u64) -> Poly {
        divrem(a, b, p).1
    }

    pub fn monic(a: &Poly, p: u64) -> Poly {
        match a.last() {
            None => Vec::new(),
            Some(&l) => {
                let li = inv(l, p);
                a.iter().map(|x| x * li % p).collect()
            }
        }
    }

    pub fn gcd(a: &Poly, b: &Poly, p: u64) -> Poly {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_empty() {
            let r = rem(&x, &y, p);
            x = y;
            y = r;
        }
        monic(&x, p)
    }

    /// `(g, s, t)` with `s a + t b = g` monic.
    pub fn ext_gcd(a: &Poly, b: &Poly, p: u64) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = divrem(&r0, &r1, p);
            let s = sub(&s0, &mul(&q, &s1, p), p);
            let t = sub(&t0, &mul(&q, &t1, p), p);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let li = inv(*r0.last().expect("non-zero gcd"), p);
        let sc = |v: &Poly| trim(v.iter().map(|x| x * li % p).collect());
        (sc(&r0), sc(&s0), sc(&t0))
    }

    pub fn derivative(a: &Poly, p: u64) -> Poly {
        trim(a.iter().enumerate().skip(1).map(|(k, c)| (k as u64 % p) * c % p).collect())
    }

    pub fn powmod(base: &Poly, e: &BigUint, m: &Poly, p: u64) -> Poly {
        let mut r = vec![1u64];
        let b = rem(base, m, p);
        for i in (0..e.bits()).rev() {
            r = rem(&mul(&r, &r, p), m, p);
            if e.bit(i) {
                r = rem(&mul(&r, &b, p), m, p);
            }
        }
        r
    }

    /// Distinct-degree factorization of a monic squarefree polynomial.
    pub fn ddf(f: &Poly, p: u64) -> Vec<(Poly, usize)> {
        let mut out = Vec::new();
        let mut rest = f.clone();
        let x = vec![0u64, 1];
        let mut h = x.clone();
        let pe = BigUint::from(p);
        let mut i = 1;
        while deg(&rest) >= 2 * i {
            h = powmod(&h, &pe, &rest, p);
            let g = gcd(&sub(&h, &x, p), &rest, p);
            if deg(&g) > 0 {
                rest = divrem(&rest, &g, p).0;
                h = rem(&h, &rest, p);
                out.push((g, i));
            }
            i += 1;
        }
        if deg(&rest) > 0 {
            let d = deg(&rest);
            out.push((rest, d));
        }
        out
    }

    /// Cantor–Zassenhaus splitting of a product of degree-`d` irreducibles.
    pub fn edf<R: Rng>(f: &Poly, d: usize, p: u64, rng: &mut R) -> Vec<Poly> {
        if deg(f) == d {
            return vec![f.clone()];
        }
        let e: BigUint = (num_traits::pow(BigUint::from(p), d) - 1u32) / 2u32;
        loop {
            let a: Poly = trim((0..deg(f)).map(|_| rng.gen_range(0..p)).collect());
            if deg(&a) == 0 {
                continue;
            }
            let b = sub(&powmod(&a, &e, f, p), &vec![1u64], p);
            let g = gcd(&b, f, p);
            if deg(&g) > 0 && deg(&g) < deg(f) {
                let h = monic(&divrem(f, &g, p).0, p);
                let mut out = edf(&g, d, p, rng);
                out.extend(edf(&h, d, p, rng));
                return out;
            }
        }
    }

    pub fn factor<R: Rng>(f: &Poly, p: u64, rng: &mut R) -> Vec<Poly> {
        let mut out = Vec::new();
        for (g, d) in ddf(f, p) {
            out.extend(edf(&g, d, p, rng));
        }
        out.sort();
        out
    }
}

/// Polynomials over `Z / m Z` with `BigInt` residues in `[0, m)`.
mod zm {
    use super::*;

    pub type Poly = Vec<BigInt>;

    pub fn trim(mut a: Poly) -> Poly {
        while a.last().is_some_and(Zero::is_zero) {
            a.pop();
        }
        a
    }

    pub fn reduce(a: &[BigInt], m: &BigInt) -> Poly {
        trim(a.iter().map(|c| c.mod_floor(m)).collect())
    }

    pub fn add(a: &Poly, b: &Poly, m: &BigInt) -> Poly {
        let n = a.len().max(b.len());
        let z = BigInt::zero();
        trim((0..n).map(|k| (a.get(k).unwrap_or(&z) + b.get(k).unwrap_or(&z)).mod_floor(m)).collect())
    }

    pub fn sub(a: &Poly, b: &Poly, m: &BigInt) -> Poly {
        let n = a.len().max(b.len());
        let z = BigInt::zero();
        trim((0..n).map(|k| (a.get(k).unwrap_or(&z) - b.get(k).unwrap_or(&z)).mod_floor(m)).collect())
    }

    pub fn mul(a: &Poly, b: &Poly, m: &BigInt) -> Poly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        reduce(&out, m)
    }

    /// Division by a monic polynomial.
    pub fn divrem_monic(a: &Poly, b: &Poly, m: &BigInt) -> (Poly, Poly) {
        if a.len() < b.len() {
            return (Vec::new(), a.clone());
        }
        let mut r = a.clone();
        let db = b.len() - 1;
        let mut q = vec![BigInt::zero(); a.len() - db];
        for k in (0..q.len()).rev() {
            let c = r[k + db].mod_floor(m);
            if c.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                r[k + j] = (&r[k + j] - &c * y).mod_floor(m);
            }
            q[k] = c;
        }
        r.truncate(db);
        (trim(q), reduce(&r, m))
    }

    pub fn scale(a: &Poly, c: &BigInt, m: &BigInt) -> Poly {
        reduce(&a.iter().map(|x| x * c).collect::<Vec<_>>(), m)
    }
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

fn to_fp(f: &[BigInt], p: u64) -> fp::Poly {
    let pb = BigInt::from(p);
    fp::trim(f.iter().map(|c| c.mod_floor(&pb).to_u64().expect("small")).collect())
}

fn from_fp(f: &fp::Poly) -> zm::Poly {
    f.iter().map(|&c| BigInt::from(c)).collect()
}

/// One quadratic Hensel step: `f = g h mod m`, `s g + t h = 1 mod m`, `h` monic.
fn hensel_step(f: &[BigInt], g: &zm::Poly, h: &zm::Poly, s: &zm::Poly, t: &zm::Poly, m: &BigInt) -> (zm::Poly, zm::Poly, zm::Poly, zm::Poly) {
    let e = zm::sub(&zm::reduce(f, m), &zm::mul(g, h, m), m);
    let (q, r) = zm::divrem_monic(&zm::mul(s, &e, m), h, m);
    let g2 = zm::add(&zm::add(g, &zm::mul(t, &e, m), m), &zm::mul(&q, g, m), m);
    let h2 = zm::add(h, &r, m);
    let b = zm::sub(&zm::add(&zm::mul(s, &g2, m), &zm::mul(t, &h2, m), m), &vec![BigInt::one()], m);
    let (c, d) = zm::divrem_monic(&zm::mul(s, &b, m), &h2, m);
    let s2 = zm::sub(s, &d, m);
    let t2 = zm::sub(&zm::sub(t, &zm::mul(t, &b, m), m), &zm::mul(&c, &g2, m), m);
    (g2, h2, s2, t2)
}

/// Lifts monic factors of `f mod p` (product times `lc(f)`) to monic factors
/// modulo `p^(2^k) >= target`. Returns the lifted factors and the modulus.
fn multifactor_lift(f: &[BigInt], factors: &[fp::Poly], p: u64, target: &BigInt) -> (Vec<zm::Poly>, BigInt) {
    let mut m = BigInt::from(p);
    let mut steps = 0u32;
    while &m < target {
        m = &m * &m;
        steps += 1;
    }
    let lifted = lift_tree(f, factors, p, steps);
    (lifted, m)
}

fn lift_tree(f: &[BigInt], factors: &[fp::Poly], p: u64, steps: u32) -> Vec<zm::Poly> {
    let pb = BigInt::from(p);
    let mut m_final = pb.clone();
    for _ in 0..steps {
        m_final = &m_final * &m_final;
    }
    if factors.len() == 1 {
        // f itself, made monic modulo the final modulus.
        let lc = f.last().expect("non-zero").clone();
        let inv = mod_inverse(&lc, &m_final).expect("lc coprime to p");
        return vec![zm::scale(&f.to_vec(), &inv, &m_final)];
    }
    let k = factors.len() / 2;
    let a_fp = factors[..k].iter().fold(vec![1u64], |acc, g| fp::mul(&acc, g, p));
    let b_fp = factors[k..].iter().fold(vec![1u64], |acc, g| fp::mul(&acc, g, p));
    let lc = f.last().expect("non-zero").clone();
    let lc_p = lc.mod_floor(&pb).to_u64().expect("small");
    let g_fp: fp::Poly = a_fp.iter().map(|c| c * lc_p % p).collect();
    let (_, s_fp, t_fp) = fp::ext_gcd(&g_fp, &b_fp, p);
    let (mut g, mut h, mut s, mut t) = (from_fp(&g_fp), from_fp(&b_fp), from_fp(&s_fp), from_fp(&t_fp));
    let mut m = pb.clone();
    for _ in 0..steps {
        m = &m * &m;
        let r = hensel_step(f, &g, &h, &s, &t, &m);
        g = r.0;
        h = r.1;
        s = r.2;
        t = r.3;
    }
    // g = lc * A, h = B monic; recurse with integer-symmetric lifts as targets.
    let lc_inv = mod_inverse(&lc, &m).expect("lc coprime to p");
    let a = zm::scale(&g, &lc_inv, &m);
    let mut out = lift_tree(&a, &factors[..k], p, steps);
    out.extend(lift_tree(&h, &factors[k..], p, steps));
    out
}

fn symmetric(a: &zm::Poly, m: &BigInt) -> Vec<BigInt> {
    let half: BigInt = m / 2;
    a.iter().map(|c| if c > &half { c - m } else { c.clone() }).collect()
}

fn primitive(a: &[BigInt]) -> Vec<BigInt> {
    let g = a.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    let neg = a.last().is_some_and(|v| v.is_negative());
    a.iter()
        .map(|v| {
            let v = if g.is_zero() { v.clone() } else { v / &g };
            if neg {
                -v
            } else {
                v
            }
        })
        .collect()
}

fn int_poly(a: &[BigInt]) -> UniPoly {
    UniPoly::new(a.iter().cloned().map(Q::from_integer).collect())
}

fn isqrt_ceil(v: &BigInt) -> BigInt {
    let r = v.sqrt();
    if &(&r * &r) == v {
        r
    } else {
        r + 1
    }
}

/// Factors a primitive squarefree integer polynomial of degree >= 2.
fn zassenhaus(f: &[BigInt]) -> Result<Vec<Vec<BigInt>>> {
    let n = f.len() - 1;
    let lc = f[n].clone();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);

    // Pick the candidate prime with the fewest modular factors among the
    // first few admissible ones.
    let mut best: Option<(u64, Vec<fp::Poly>)> = None;
    let mut tried = 0;
    for &p in PRIMES.iter() {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fbar = to_fp(f, p);
        let fm = fp::monic(&fbar, p);
        if fp::deg(&fp::gcd(&fm, &fp::derivative(&fm, p), p)) > 0 {
            continue;
        }
        let facs = fp::factor(&fm, p, &mut rng);
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
        tried += 1;
        if tried == 5 || best.as_ref().is_some_and(|(_, b)| b.len() == 1) {
            break;
        }
    }
    let Some((p, facs)) = best else {
        return Err(Error::ResourceCap("no admissible prime for modular factorization".into()));
    };
    if facs.len() == 1 {
        return Ok(vec![f.to_vec()]);
    }

    // Mignotte-style bound on coefficients of lc * (any factor).
    let norm2: BigInt = f.iter().map(|c| c * c).sum();
    let bound = lc.abs() * (BigInt::one() << n) * isqrt_ceil(&norm2);
    let target = &bound * 2 + 1;
    let (lifted, m) = multifactor_lift(f, &facs, p, &target);

    let mut remaining: Vec<zm::Poly> = lifted;
    let mut rest = f.to_vec();
    let mut found = Vec::new();
    let mut size = 1;
    let mut trials = 0usize;
    'outer: while 2 * size <= remaining.len() {
        let r = remaining.len();
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            trials += 1;
            if trials > MAX_RECOMBINATION_TRIALS {
                return Err(Error::ResourceCap("factor recombination trial limit reached".into()));
            }
            let rest_lc = rest.last().expect("non-zero").clone();
            let prod = idx
                .iter()
                .fold(vec![rest_lc.mod_floor(&m)], |acc, &k| zm::mul(&acc, &remaining[k], &m));
            let cand = primitive(&symmetric(&prod, &m));
            let rest_q = int_poly(&rest);
            let cand_q = int_poly(&cand);
            let (quot, rem) = rest_q.div_rem(&cand_q);
            if rem.is_zero() && quot.coeffs().iter().all(|c| c.is_integer()) {
                found.push(cand);
                rest = quot.coeffs().iter().map(|c| c.to_integer()).collect();
                let keep: Vec<zm::Poly> = remaining
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| !idx.contains(k))
                    .map(|(_, g)| g.clone())
                    .collect();
                remaining = keep;
                continue 'outer;
            }
            // Next combination.
            let mut k = size;
            loop {
                if k == 0 {
                    size += 1;
                    continue 'outer;
                }
                k -= 1;
                if idx[k] < r - size + k {
                    idx[k] += 1;
                    for j in k + 1..size {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }
    if rest.len() > 1 {
        found.push(primitive(&rest));
    }
    Ok(found)
}

/// Monic irreducible factors over the rationals of a squarefree `q`, sorted by
/// degree then coefficients. Constants have no factors.
pub fn factor_rational(q: &UniPoly) -> Result<Vec<UniPoly>> {
    if q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if q.degree() == 0 {
        return Ok(Vec::new());
    }
    if !q.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let f = q.to_primitive_integers();
    let mut factors: Vec<UniPoly> = if q.degree() == 1 {
        vec![q.monic()]
    } else {
        zassenhaus(&f)?.iter().map(|g| int_poly(g).monic()).collect()
    };
    factors.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.coeffs().cmp(b.coeffs())));
    Ok(factors)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn product(fs: &[UniPoly]) -> UniPoly {
        fs.iter().fold(UniPoly::one(), |acc, f| &acc * f)
    }

    #[test]
    fn examples() {
        let q = UniPoly::from_ints(&[4, 0, -5, 0, 1]);
        let f = factor_rational(&q).unwrap();
        assert_eq!(
            f,
            vec![
                UniPoly::from_ints(&[-2, 1]),
                UniPoly::from_ints(&[-1, 1]),
                UniPoly::from_ints(&[1, 1]),
                UniPoly::from_ints(&[2, 1])
            ]
        );
        assert_eq!(product(&f), q);
        assert_eq!(factor_rational(&UniPoly::from_ints(&[1, 0, 1])).unwrap(), vec![UniPoly::from_ints(&[1, 0, 1])]);
        let f = factor_rational(&UniPoly::from_ints(&[-2, 0, -1, 0, 1])).unwrap();
        assert_eq!(f, vec![UniPoly::from_ints(&[-2, 0, 1]), UniPoly::from_ints(&[1, 0, 1])]);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(factor_rational(&UniPoly::zero()), Err(Error::ZeroPolynomial));
        assert_eq!(factor_rational(&UniPoly::from_ints(&[1, 2, 1])), Err(Error::NotSquarefree));
        assert!(factor_rational(&UniPoly::from_ints(&[5])).unwrap().is_empty());
    }

    #[test]
    fn swinnerton_dyer_is_irreducible() {
        // Minimal polynomial of sqrt2 + sqrt3: splits into quadratics/linears
        // modulo every prime, forcing real recombination work.
        let q = UniPoly::from_ints(&[1, 0, -10, 0, 1]);
        assert_eq!(factor_rational(&q).unwrap(), vec![q]);
    }

    #[test]
    fn non_monic_rational_input() {
        // (3X - 1)(2X^2 + 5)(X + 7) / 6
        let a = UniPoly::from_ints(&[-1, 3]);
        let b = UniPoly::from_ints(&[5, 0, 2]);
        let c = UniPoly::from_ints(&[7, 1]);
        let q = (&(&a * &b) * &c).scale(&Q::new(1.into(), 6.into()));
        let f = factor_rational(&q).unwrap();
        assert_eq!(f.len(), 3);
        assert_eq!(product(&f), q.monic());
    }

    #[test]
    fn modular_factorization_splits_completely() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        // X^4 - 1 mod 5 = (X-1)(X-2)(X-3)(X-4)
        let f = vec![4u64, 0, 0, 0, 1];
        let facs = fp::factor(&f, 5, &mut rng);
        assert_eq!(facs, vec![vec![1, 1], vec![2, 1], vec![3, 1], vec![4, 1]]);
    }
}
