//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use polarsample::circuit::{parse_expression, Circuit};
use polarsample::eliminate::{count_points, polar_degree, DegreeOptions, DimensionVerdict};
use polarsample::groebner::{Caps, GroebnerBasis, MonomialOrder};
use polarsample::interval::{eval_dense, Interval};
use polarsample::pipeline::{prepare_instance, sample_hypersurface, Coords, RunConfig, SampleReport, StructureVerdict};
use polarsample::polysys::polar_system;
use polarsample::rational::{q_frac, q_int, Q};
use polarsample::realdegree::real_part;
use polarsample::report::{sample_json, to_json_string};
use polarsample::univariate::UniPoly;

type Check = std::result::Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn sample(text: &str, n: usize, cfg: &RunConfig) -> Result<SampleReport, String> {
    let inst = prepare_instance(text, n, cfg).map_err(|e| e.to_string())?;
    sample_hypersurface(&inst, cfg).map_err(|e| e.to_string())
}

fn exact_checks(r: &SampleReport) -> Check {
    let v = r.verification.as_ref().ok_or("no verification")?;
    ensure!(v.all_passed(), "verification failed: {:?}", v.failures);
    for p in &r.points {
        ensure!(p.f_enclosure.contains_zero(), "enclosure of point {} misses f = 0", p.root);
    }
    Ok(())
}

fn deg_q(r: &SampleReport) -> usize {
    r.representation.as_ref().map_or(0, |rep| rep.degree())
}

fn contains_inv_sqrt3(b: &Interval, sign: i64) -> bool {
    // sign * 1/sqrt(3) in [lo, hi]  <=>  bounds straddle it, tested by squaring.
    let third = q_frac(1, 3);
    let (lo, hi) = if sign > 0 { (b.lo.clone(), b.hi.clone()) } else { (-b.hi.clone(), -b.lo.clone()) };
    lo > Q::zero() && &lo * &lo <= third && &hi * &hi >= third
}

fn circle() -> Check {
    let r = sample("x1^2+x2^2-1", 2, &RunConfig { seed: 1, ..RunConfig::default() })?;
    ensure!(r.verdict == StructureVerdict::CompatibleCompactSmooth, "verdict {:?}", r.verdict);
    ensure!(deg_q(&r) == 2 && r.roots.len() == 2, "deg q {} roots {}", deg_q(&r), r.roots.len());
    exact_checks(&r)?;
    let r = sample("x1^2+x2^2-1", 2, &RunConfig { coords: Coords::Identity, ..RunConfig::default() })?;
    let pts: Vec<Vec<Q>> = r.points.iter().filter_map(|p| p.exact.clone()).collect();
    ensure!(pts == vec![vec![q_int(0), q_int(-1)], vec![q_int(0), q_int(1)]], "identity points {pts:?}");
    exact_checks(&r)
}

fn ellipsoid() -> Check {
    let f = "x1^2+2*x2^2+3*x3^2-1";
    let r = sample(f, 3, &RunConfig { seed: 4, ..RunConfig::default() })?;
    ensure!(deg_q(&r) == 2, "deg q {}", deg_q(&r));
    exact_checks(&r)?;
    let r = sample(f, 3, &RunConfig { coords: Coords::Identity, ..RunConfig::default() })?;
    let q = &r.representation.as_ref().ok_or("no representation")?.q;
    ensure!(*q == UniPoly::new(vec![q_frac(-1, 3), Q::zero(), Q::one()]), "q = {q}");
    ensure!(r.points.len() == 2, "{} points", r.points.len());
    for (p, sign) in r.points.iter().zip([-1, 1]) {
        ensure!(p.boxes[0] == Interval::zero() && p.boxes[1] == Interval::zero(), "x1, x2 not exactly 0");
        ensure!(contains_inv_sqrt3(&p.boxes[2], sign), "x3 box {} misses {sign}/sqrt(3)", p.boxes[2]);
        ensure!(p.approx[2].trim_start_matches('-').starts_with("0.57735"), "approx {}", p.approx[2]);
    }
    exact_checks(&r)
}

fn two_circles() -> Check {
    let text = "((x1-2)^2+x2^2-1)*((x1+2)^2+x2^2-1)";
    let cfg = RunConfig { seed: 3, ..RunConfig::default() };
    let r = sample(text, 2, &cfg)?;
    let bound = r.degrees.as_ref().map_or(0, |d| d.bezout_bound);
    ensure!(deg_q(&r) == 4 && bound == 12, "deg q {} bound {bound}", deg_q(&r));
    ensure!(r.roots.len() == 4, "{} real roots", r.roots.len());
    exact_checks(&r)?;

    let inst = prepare_instance(text, 2, &cfg).map_err(|e| e.to_string())?;
    let delta1 = polar_degree(&inst.dense, 1, cfg.seed, &DegreeOptions::default()).map_err(|e| e.to_string())?;
    ensure!(delta1 == 4, "polar degree {delta1}");

    let right = parse_expression("(x1-2)^2+x2^2-1", 2).and_then(|c| c.expand_to_dense(4)).map_err(|e| e.to_string())?;
    let left = parse_expression("(x1+2)^2+x2^2-1", 2).and_then(|c| c.expand_to_dense(4)).map_err(|e| e.to_string())?;
    let (mut on_left, mut on_right) = (0, 0);
    for p in &r.points {
        let (l, rt) = (eval_dense(&left, &p.boxes), eval_dense(&right, &p.boxes));
        match (l.strict_sign(), rt.strict_sign()) {
            (None, Some(_)) => on_left += 1,
            (Some(_), None) => on_right += 1,
            _ => return Err(format!("point {} not separated", p.root)),
        }
    }
    ensure!(on_left >= 1 && on_right >= 1, "left {on_left} right {on_right}");

    // Without the gradient-norm saturation the two complex nodes remain.
    let rep = r.representation.as_ref().ok_or("no representation")?;
    let sys = polar_system(&inst.dense, 1, &rep.change).map_err(|e| e.to_string())?;
    let raw = GroebnerBasis::compute(&sys.equations, MonomialOrder::GrevLex, &Caps::default()).map_err(|e| e.to_string())?;
    let raw_count = count_points(&raw, &Caps::default()).map_err(|e| e.to_string())?;
    ensure!(raw_count == 6, "unsaturated system has {raw_count} points");
    Ok(())
}

fn torus() -> Check {
    let r = sample("(x1^2+x2^2+x3^2+3)^2 - 16*(x1^2+x2^2)", 3, &RunConfig::default())?;
    ensure!(r.verdict == StructureVerdict::CompatibleCompactSmooth, "verdict {:?}", r.verdict);
    ensure!(r.roots.len() == 4 && r.points.len() == 4, "{} real roots", r.roots.len());
    let v = r.verification.as_ref().ok_or("no verification")?;
    ensure!(v.parametrization && v.delta_coprime && v.jacobian_unit && v.separable, "checks {v:?}");
    exact_checks(&r)
}

fn empty_detection() -> Check {
    let r = sample("x1^2+x2^2+1", 2, &RunConfig::default())?;
    ensure!(r.verdict == StructureVerdict::NotCompactSmoothOrEmpty, "verdict {:?}", r.verdict);
    ensure!(r.exit_code() == 3 && r.points.is_empty(), "exit {}", r.exit_code());
    let r = sample("x1*x2-1", 2, &RunConfig { coords: Coords::Identity, ..RunConfig::default() })?;
    ensure!(r.dimension == Some(DimensionVerdict::Empty), "dimension {:?}", r.dimension);
    ensure!(r.verdict == StructureVerdict::NotCompactSmoothOrEmpty, "verdict {:?}", r.verdict);
    ensure!(matches!(r.exit_code(), 2 | 3) && r.points.is_empty(), "exit {}", r.exit_code());
    Ok(())
}

fn ellipsoid_invariants() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for run in 0..50 {
        let n = rng.gen_range(2..=5usize);
        let coeffs: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=9)).collect();
        let text = coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| format!("{c}*x{}^2", k + 1))
            .collect::<Vec<_>>()
            .join("+")
            + "-1";
        let cfg = RunConfig { seed: rng.gen(), ..RunConfig::default() };
        let r = sample(&text, n, &cfg)?;
        let rep = r.representation.as_ref().ok_or(format!("run {run}: no representation"))?;
        let cert = r.real_part.as_ref().ok_or("no real part")?;
        let bound = r.degrees.as_ref().ok_or("no degrees")?.bezout_bound;
        ensure!(rep.degree() == 2 && r.roots.len() == 2, "run {run} ({text}): deg {} roots {}", rep.degree(), r.roots.len());
        ensure!(
            r.roots.len() <= cert.delta_star && cert.delta_star <= rep.degree() && rep.degree() as u64 <= bound,
            "run {run}: degree chain"
        );
        ensure!(rep.q.is_squarefree() && !rep.discriminant.is_zero(), "run {run}: q not separable");
        ensure!(rep.p.iter().all(|p| p.degree() < rep.degree()), "run {run}: parametrization degree");
        exact_checks(&r)?;
        let again = sample(&text, n, &cfg)?;
        ensure!(
            to_json_string(&sample_json(&r)) == to_json_string(&sample_json(&again)),
            "run {run}: reports differ"
        );
    }
    Ok(())
}

fn real_degree() -> Check {
    let q = &UniPoly::from_ints(&[-2, 0, 1]) * &UniPoly::from_ints(&[1, 0, 1]);
    let c = real_part(&q).map_err(|e| e.to_string())?;
    ensure!(c.q_star == UniPoly::from_ints(&[-2, 0, 1]), "q* = {}", c.q_star);
    ensure!(c.delta_star == 2 && c.m == 1, "delta* {} m {}", c.delta_star, c.m);
    let c = real_part(&UniPoly::from_ints(&[1, 0, 1])).map_err(|e| e.to_string())?;
    ensure!(c.delta_star == 0 && c.q_star == UniPoly::one(), "delta* {}", c.delta_star);
    Ok(())
}

fn circuit_gradients() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for pair in 0..100 {
        let n = rng.gen_range(1..=4usize);
        let gates = rng.gen_range(1..=25);
        let c = Circuit::random(&mut rng, n, gates, 8);
        let grad = c.gradient_circuit().map_err(|e| e.to_string())?;
        ensure!(grad.len() <= 5 * c.len() + 4 * n, "pair {pair}: length {} > 5*{} + 4*{n}", grad.len(), c.len());
        let dense = c.expand_to_dense(64).map_err(|e| e.to_string())?;
        let point: Vec<Q> = (0..n).map(|_| q_frac(rng.gen_range(-20..=20), rng.gen_range(1..=7))).collect();
        let vals = grad.evaluate(&point).map_err(|e| e.to_string())?;
        for j in 0..n {
            let sym = dense.partial_derivative(j).and_then(|d| d.eval(&point)).map_err(|e| e.to_string())?;
            ensure!(vals[j + 1] == sym, "pair {pair}: d/dx{} mismatch", j + 1);
        }
    }
    for text in ["x1^2+x2^2-1", "(x1^2+x2^2+x3^2+3)^2 - 16*(x1^2+x2^2)", "((x1-2)^2+x2^2-1)*((x1+2)^2+x2^2-1)"] {
        let c = parse_expression(text, 3).map_err(|e| e.to_string())?;
        let g = c.gradient_circuit().map_err(|e| e.to_string())?;
        ensure!(g.len() <= 5 * c.len() + 12, "{text}: length {}", g.len());
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Check, Duration); 8] = [
        ("circle", circle, Duration::from_secs(1)),
        ("ellipsoid", ellipsoid, Duration::from_secs(1)),
        ("two disjoint circles", two_circles, Duration::from_secs(5)),
        ("torus", torus, Duration::from_secs(60)),
        ("empty / non-compact detection", empty_detection, Duration::from_secs(1)),
        ("random ellipsoid invariants", ellipsoid_invariants, Duration::from_secs(120)),
        ("real-degree certificate", real_degree, Duration::from_secs(1)),
        ("circuit gradients", circuit_gradients, Duration::from_secs(10)),
    ];
    let mut failed = 0;
    for (k, (name, check, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let verdict = match (&outcome, elapsed <= *limit) {
            (Ok(()), true) => "PASS".to_string(),
            (Ok(()), false) => format!("FAIL (took {elapsed:.2?}, limit {limit:?})"),
            (Err(msg), _) => format!("FAIL ({msg})"),
        };
        if !verdict.starts_with("PASS") {
            failed += 1;
        }
        println!("criterion {}: {name}: {verdict} [{elapsed:.2?}]", k + 1);
    }
    if failed > 0 {
        println!("{failed} criterion(s) failed");
        std::process::exit(1);
    }
    println!("all 8 criteria passed");
}
