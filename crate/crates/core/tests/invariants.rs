use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use polarsample::circuit::Circuit;
use polarsample::factor::factor_rational;
use polarsample::interval::eval_dense;
use polarsample::pipeline::{prepare_instance, sample_hypersurface, RunConfig};
use polarsample::poly::DensePoly;
use polarsample::polysys::{apply_coordinate_change, CoordinateChange};
use polarsample::rational::{q_frac, q_int, Q};
use polarsample::realroots::{sturm_count, thom_encode_roots, Bound};
use polarsample::univariate::UniPoly;

fn circuit_strategy() -> impl Strategy<Value = (Circuit, u64)> {
    (1usize..=4, 1usize..=20, any::<u64>()).prop_map(|(n, gates, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (Circuit::random(&mut rng, n, gates, 6), seed)
    })
}

fn point(n: usize, seed: u64) -> Vec<Q> {
    (0..n).map(|k| q_frac(((seed >> (8 * k)) % 23) as i64 - 11, 1 + (k as i64 % 3))).collect()
}

fn det(mut m: Vec<Vec<Q>>) -> Q {
    let n = m.len();
    let mut d = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return Q::zero();
        };
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        d *= m[c][c].clone();
        for r in c + 1..n {
            let f = &m[r][c] / &m[c][c];
            for k in c..n {
                let v = &f * &m[c][k];
                m[r][k] -= v;
            }
        }
    }
    d
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dense_round_trip((c, _) in circuit_strategy()) {
        let p = c.expand_to_dense(64).unwrap();
        prop_assert_eq!(Circuit::from_dense(&p).expand_to_dense(64).unwrap(), p);
    }

    #[test]
    fn gradient_matches_symbolic((c, seed) in circuit_strategy()) {
        let n = c.num_vars();
        let g = c.gradient_circuit().unwrap();
        prop_assert!(g.len() <= 5 * c.len() + 4 * n);
        let dense = c.expand_to_dense(64).unwrap();
        let x = point(n, seed);
        let vals = g.evaluate(&x).unwrap();
        prop_assert_eq!(&vals[0], &dense.eval(&x).unwrap());
        for j in 0..n {
            prop_assert_eq!(&vals[j + 1], &dense.partial_derivative(j).unwrap().eval(&x).unwrap());
        }
    }

    #[test]
    fn modular_matches_rational((c, seed) in circuit_strategy()) {
        let p = 1_000_003u64;
        let n = c.num_vars();
        let xs: Vec<u64> = (0..n).map(|k| (seed >> (7 * k)) % 50).collect();
        let xq: Vec<Q> = xs.iter().map(|&v| q_int(v as i64)).collect();
        let exact = c.evaluate(&xq).unwrap()[0].clone();
        let m = c.evaluate_mod(&xs, p).unwrap()[0];
        let expect = exact.numer() % num_bigint::BigInt::from(p);
        let expect = ((expect + num_bigint::BigInt::from(p)) % num_bigint::BigInt::from(p)).to_string();
        prop_assert_eq!(m.to_string(), expect);
    }

    #[test]
    fn chain_rule_and_unit_determinant(n in 2usize..=4, i_frac in 0usize..4, seed in any::<u64>(), (c, pseed) in circuit_strategy()) {
        let i = i_frac % n;
        let ch = CoordinateChange::sample(n, i, seed, 7).unwrap();
        prop_assert_eq!(det(ch.matrix()), Q::one());
        let f = c.expand_to_dense(64).unwrap().embed(n, &(0..c.num_vars()).map(|k| k % n).collect::<Vec<_>>());
        let g = apply_coordinate_change(&f, &ch).unwrap();
        let y = point(n, pseed);
        let x = ch.apply_to_point(&y);
        let a = ch.matrix();
        for l in 0..n {
            let lhs = g.partial_derivative(l).unwrap().eval(&y).unwrap();
            let rhs = (0..n).fold(Q::zero(), |acc, k| acc + &a[k][l] * f.partial_derivative(k).unwrap().eval(&x).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
        prop_assert_eq!(apply_coordinate_change(&g, &ch.inverse()).unwrap(), f);
    }

    #[test]
    fn real_root_isolation(roots in proptest::collection::btree_set(-30i64..30, 1..6), extra in 0i64..5) {
        // Distinct rational roots r/3 times an irreducible quadratic X^2 + extra + 1.
        let mut q = UniPoly::from_ints(&[extra + 1, 0, 1]);
        for r in &roots {
            q = &q * &UniPoly::new(vec![q_frac(-r, 3), Q::one()]);
        }
        let enc = thom_encode_roots(&q).unwrap();
        prop_assert_eq!(enc.len(), roots.len());
        prop_assert_eq!(sturm_count(&q, &Bound::NegInf, &Bound::PosInf).unwrap(), roots.len());
        for (r, want) in enc.iter().zip(&roots) {
            let v = q_frac(*want, 3);
            prop_assert!(r.lo < v && v <= r.hi);
        }
        for w in enc.windows(2) {
            prop_assert!(w[0].hi <= w[1].lo);
            prop_assert_ne!(&w[0].thom, &w[1].thom);
        }
        let factors = factor_rational(&q).unwrap();
        prop_assert_eq!(factors.len(), roots.len() + 1);
        prop_assert_eq!(factors.iter().fold(UniPoly::one(), |acc, f| &acc * f), q.monic());
    }
}

#[test]
fn two_circles_cover_both_components_for_many_seeds() {
    let text = "((x1-2)^2+x2^2-1)*((x1+2)^2+x2^2-1)";
    let left = DensePoly::from_terms(2, [(vec![2, 0], q_int(1)), (vec![1, 0], q_int(4)), (vec![0, 2], q_int(1)), (vec![0, 0], q_int(3))]);
    for seed in 0..6 {
        let cfg = RunConfig { seed, ..RunConfig::default() };
        let inst = prepare_instance(text, 2, &cfg).unwrap();
        let r = sample_hypersurface(&inst, &cfg).unwrap();
        assert_eq!(r.representation.as_ref().unwrap().degree(), 4, "seed {seed}");
        assert_eq!(r.points.len(), 4);
        let on_left = r.points.iter().filter(|p| eval_dense(&left, &p.boxes).contains_zero()).count();
        assert_eq!(on_left, 2, "seed {seed}");
    }
}

#[test]
fn squared_input_is_reduced_before_solving() {
    let cfg = RunConfig::default();
    let inst = prepare_instance("(x1^2+x2^2-1)^2", 2, &cfg).unwrap();
    assert_eq!(inst.d, 2);
    let r = sample_hypersurface(&inst, &cfg).unwrap();
    assert_eq!(r.points.len(), 2);
}
