//! End-to-end sampling: parse, reduce, build the top polar system, solve it
//! exactly, and certify real sample points.

use std::time::Instant;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::circuit::{parse_expression, Circuit};
use crate::eliminate::{
    bezout_bound, dimension_verdict, extract_representation, polar_degree, saturate_by_delta,
    verify_representation, DegreeOptions, DegreeReport, DimensionVerdict, UnivariateRepresentation,
    VerificationReport,
};
use crate::error::{Error, Result};
use crate::groebner::{poly_gcd, Caps};
use crate::interval::{eval_dense, eval_uni, mat_vec, Interval};
use crate::poly::DensePoly;
use crate::polysys::{polar_system, CoordinateChange, PolarSystem};
use crate::rational::{pow10, to_decimal, Q};
use crate::realdegree::{real_part, RealPartCertificate};
use crate::realroots::{thom_encode_roots, RealRoot, SignedRemainders};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Coords {
    Identity,
    #[default]
    Random,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub seed: u64,
    pub coords: Coords,
    pub entry_bound: u64,
    pub max_retries: usize,
    pub caps: Caps,
    /// Total degree allowed while expanding the input circuit.
    pub degree_cap: u32,
    /// Decimal digits for approximations.
    pub precision: u32,
    #[serde(skip)]
    pub timings: bool,
    /// Re-solve with an independent seed and compare degree and root count.
    pub stability_check: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 0,
            coords: Coords::Random,
            entry_bound: 100,
            max_retries: 8,
            caps: Caps::default(),
            degree_cap: 64,
            precision: 30,
            timings: false,
            stability_check: false,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_retries == 0 {
            return Err(Error::InvalidArgument("max_retries must be at least 1".into()));
        }
        if self.entry_bound == 0 {
            return Err(Error::InvalidArgument("entry_bound must be at least 1".into()));
        }
        Ok(())
    }

    fn degree_options(&self) -> DegreeOptions {
        DegreeOptions { identity_coords: self.coords == Coords::Identity, entry_bound: self.entry_bound, caps: self.caps }
    }
}

#[derive(Clone, Debug)]
pub struct ProblemInstance {
    pub text: String,
    pub circuit: Circuit,
    pub n: usize,
    pub d: u32,
    pub dense: DensePoly,
    /// Length of the circuit actually used.
    pub length: usize,
    /// Set when the input had repeated factors and was replaced by its
    /// squarefree part.
    pub squarefree_note: Option<String>,
}

/// Parses, expands and reduces the input to its squarefree part.
pub fn prepare_instance(text: &str, n: usize, config: &RunConfig) -> Result<ProblemInstance> {
    if n == 0 {
        return Err(Error::InvalidArgument("at least one variable is required".into()));
    }
    let circuit = parse_expression(text, n)?;
    let dense = circuit.expand_to_dense(config.degree_cap)?;
    if dense.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let mut g = dense.clone();
    for dj in dense.gradient() {
        if g.is_constant() {
            break;
        }
        if !dj.is_zero() {
            g = poly_gcd(&g, &dj, &config.caps)?;
        }
    }
    let (circuit, dense, note) = if g.is_constant() {
        (circuit, dense, None)
    } else {
        let (quot, rem) = dense.div_rem(&g)?;
        debug_assert!(rem.is_zero());
        let note = format!("input not squarefree: degree {} reduced to {}", dense.degree(), quot.degree());
        (Circuit::from_dense(&quot), quot, Some(note))
    };
    Ok(ProblemInstance {
        text: text.trim().to_string(),
        length: circuit.len(),
        d: dense.degree(),
        circuit,
        n,
        dense,
        squarefree_note: note,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum StructureVerdict {
    CompatibleCompactSmooth,
    NotCompactSmoothOrEmpty,
    GenericityExhausted,
}

/// One-sided structure decision: real points on a zero-dimensional top polar
/// variety are compatible with a compact smooth hypersurface; anything else
/// rules it out (or the real part is empty).
pub fn decide_structure(dimension: DimensionVerdict, real_roots: usize) -> StructureVerdict {
    match dimension {
        DimensionVerdict::ZeroDimensional if real_roots > 0 => StructureVerdict::CompatibleCompactSmooth,
        _ => StructureVerdict::NotCompactSmoothOrEmpty,
    }
}

/// Outcome of one coordinate-change attempt.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Attempt {
    pub seed: Option<u64>,
    pub outcome: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SamplePoint {
    /// Index of the root of `q` this point comes from.
    pub root: usize,
    /// Exact coordinates when the root is rational.
    pub exact: Option<Vec<Q>>,
    /// Certified enclosures of the original coordinates.
    pub boxes: Vec<Interval>,
    /// Enclosure of `f` over `boxes`; always contains zero.
    pub f_enclosure: Interval,
    pub approx: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Stability {
    pub seed: u64,
    pub degree: usize,
    pub real_roots: usize,
    pub agrees: bool,
}

#[derive(Clone, Debug)]
pub struct SampleReport {
    pub instance: ProblemInstance,
    pub config: RunConfig,
    pub verdict: StructureVerdict,
    pub dimension: Option<DimensionVerdict>,
    pub attempts: Vec<Attempt>,
    pub representation: Option<UnivariateRepresentation>,
    pub system: Option<PolarSystem>,
    pub verification: Option<VerificationReport>,
    pub roots: Vec<RealRoot>,
    pub points: Vec<SamplePoint>,
    pub degrees: Option<DegreeReport>,
    pub real_part: Option<RealPartCertificate>,
    pub stability: Option<Stability>,
    pub timings_ms: Vec<(String, f64)>,
}

impl SampleReport {
    /// 0 real points found; 2 not zero-dimensional; 3 no real points or
    /// empty; 4 retries exhausted.
    pub fn exit_code(&self) -> i32 {
        match self.verdict {
            StructureVerdict::CompatibleCompactSmooth => 0,
            StructureVerdict::GenericityExhausted => 4,
            StructureVerdict::NotCompactSmoothOrEmpty => match self.dimension {
                Some(DimensionVerdict::PositiveDimensional) => 2,
                _ => 3,
            },
        }
    }
}

struct Timer {
    on: bool,
    last: Instant,
    log: Vec<(String, f64)>,
}

impl Timer {
    fn new(on: bool) -> Self {
        Timer { on, last: Instant::now(), log: Vec::new() }
    }

    fn lap(&mut self, name: &str) {
        if self.on {
            let now = Instant::now();
            self.log.push((name.to_string(), (now - self.last).as_secs_f64() * 1e3));
            self.last = now;
        }
    }
}

enum Solved {
    Done(DimensionVerdict),
    Found(Box<(PolarSystem, UnivariateRepresentation, VerificationReport)>),
    Exhausted,
}

fn change_for(inst: &ProblemInstance, config: &RunConfig, seed: u64, attempt: usize) -> Result<CoordinateChange> {
    let (n, i) = (inst.n, inst.n - 1);
    if config.coords == Coords::Identity && attempt == 0 {
        Ok(CoordinateChange::identity(n, i))
    } else {
        CoordinateChange::sample(n, i, seed.wrapping_add(attempt as u64), config.entry_bound)
    }
}

fn solve(inst: &ProblemInstance, config: &RunConfig, seed: u64, attempts: &mut Vec<Attempt>) -> Result<Solved> {
    for attempt in 0..config.max_retries {
        let change = change_for(inst, config, seed, attempt)?;
        let used = change.seed();
        let sys = polar_system(&inst.dense, inst.n - 1, &change)?;
        let basis = saturate_by_delta(&sys, &config.caps)?;
        let dim = dimension_verdict(&basis);
        if dim != DimensionVerdict::ZeroDimensional {
            attempts.push(Attempt { seed: used, outcome: format!("{dim:?}") });
            return Ok(Solved::Done(dim));
        }
        let rep = match extract_representation(&basis, &sys, &config.caps) {
            Ok(rep) => rep,
            Err(Error::ShapePositionFailure(msg)) => {
                attempts.push(Attempt { seed: used, outcome: format!("shape position failure: {msg}") });
                continue;
            }
            Err(e) => return Err(e),
        };
        let ver = verify_representation(&rep, &sys)?;
        if !ver.all_passed() {
            attempts.push(Attempt { seed: used, outcome: format!("verification failed: {}", ver.failures.join("; ")) });
            continue;
        }
        attempts.push(Attempt { seed: used, outcome: "ok".into() });
        return Ok(Solved::Found(Box::new((sys, rep, ver))));
    }
    Ok(Solved::Exhausted)
}

/// Certified enclosure of the point attached to `root`, tight enough for
/// `digits` correct decimals.
fn certify_point(inst: &ProblemInstance, rep: &UnivariateRepresentation, root: &RealRoot, digits: u32) -> SamplePoint {
    let a = rep.change.matrix();
    if let Some(u) = root.exact_value(&rep.q) {
        let y: Vec<Q> = rep.p.iter().map(|pk| pk.eval(&u)).collect();
        let x = rep.change.apply_to_point(&y);
        let boxes: Vec<Interval> = x.iter().cloned().map(Interval::point).collect();
        return SamplePoint {
            root: root.index,
            approx: x.iter().map(|v| to_decimal(v, digits)).collect(),
            f_enclosure: eval_dense(&inst.dense, &boxes),
            exact: Some(x),
            boxes,
        };
    }
    let sturm = SignedRemainders::sturm(&rep.q);
    let target = Q::new(One::one(), pow10(digits + 1));
    let mut r = root.clone();
    let mut w = &target / Q::from_integer(16.into());
    let boxes = loop {
        r.refine_to(&rep.q, &sturm, &w);
        let u = Interval::new(r.lo.clone(), r.hi.clone());
        let y: Vec<Interval> = rep.p.iter().map(|pk| eval_uni(pk, &u)).collect();
        let x = mat_vec(&a, &y);
        if x.iter().all(|b| b.width() < target) {
            break x;
        }
        w /= Q::from_integer(1024.into());
    };
    SamplePoint {
        root: root.index,
        exact: None,
        approx: boxes.iter().map(|b| to_decimal(&b.midpoint(), digits)).collect(),
        f_enclosure: eval_dense(&inst.dense, &boxes),
        boxes,
    }
}

/// Runs the full sampling pipeline. Genericity exhaustion and negative
/// structure verdicts are reported, not raised.
pub fn sample_hypersurface(inst: &ProblemInstance, config: &RunConfig) -> Result<SampleReport> {
    config.validate()?;
    let mut timer = Timer::new(config.timings);
    let mut report = SampleReport {
        instance: inst.clone(),
        config: config.clone(),
        verdict: StructureVerdict::NotCompactSmoothOrEmpty,
        dimension: None,
        attempts: Vec::new(),
        representation: None,
        system: None,
        verification: None,
        roots: Vec::new(),
        points: Vec::new(),
        degrees: None,
        real_part: None,
        stability: None,
        timings_ms: Vec::new(),
    };
    let solved = solve(inst, config, config.seed, &mut report.attempts)?;
    timer.lap("solve");
    let (sys, rep, ver) = match solved {
        Solved::Exhausted => {
            report.verdict = StructureVerdict::GenericityExhausted;
            report.timings_ms = timer.log;
            return Ok(report);
        }
        Solved::Done(dim) => {
            report.dimension = Some(dim);
            if dim == DimensionVerdict::Empty {
                report.degrees = Some(DegreeReport { degrees: vec![(inst.n - 1, 0)], bezout_bound: bezout_bound(inst.d, inst.n) });
            }
            report.verdict = decide_structure(dim, 0);
            report.timings_ms = timer.log;
            return Ok(report);
        }
        Solved::Found(b) => *b,
    };
    report.dimension = Some(DimensionVerdict::ZeroDimensional);

    let mut roots = thom_encode_roots(&rep.q)?;
    let sturm = SignedRemainders::sturm(&rep.q);
    let w = Q::new(One::one(), pow10(config.precision + 1));
    for r in roots.iter_mut() {
        r.refine_to(&rep.q, &sturm, &w);
    }
    timer.lap("real_roots");
    let cert = real_part(&rep.q)?;
    timer.lap("real_part");
    report.points = roots.iter().map(|r| certify_point(inst, &rep, r, config.precision)).collect();
    timer.lap("points");

    let delta = rep.degree();
    let bound = bezout_bound(inst.d, inst.n);
    if !(roots.len() <= cert.delta_star && cert.delta_star <= delta && delta as u64 <= bound) {
        return Err(Error::Invariant(format!(
            "degree chain violated: {} real roots, real degree {}, degree {}, bound {}",
            roots.len(),
            cert.delta_star,
            delta,
            bound
        )));
    }
    if let Some(p) = report.points.iter().find(|p| !p.f_enclosure.contains_zero()) {
        return Err(Error::Invariant(format!("enclosure of point {} excludes the hypersurface", p.root)));
    }

    if config.stability_check {
        let seed = config.seed ^ 0x5851_f42d_4c95_7f2d;
        let cfg = RunConfig { coords: Coords::Random, ..config.clone() };
        let mut scratch = Vec::new();
        if let Solved::Found(b) = solve(inst, &cfg, seed, &mut scratch)? {
            let other = thom_encode_roots(&b.1.q)?.len();
            report.stability = Some(Stability {
                seed,
                degree: b.1.degree(),
                real_roots: other,
                agrees: b.1.degree() == delta && other == roots.len(),
            });
        }
        timer.lap("stability");
    }

    report.verdict = decide_structure(DimensionVerdict::ZeroDimensional, roots.len());
    report.degrees = Some(DegreeReport { degrees: vec![(inst.n - 1, delta)], bezout_bound: bound });
    report.roots = roots;
    report.real_part = Some(cert);
    report.verification = Some(ver);
    report.representation = Some(rep);
    report.system = Some(sys);
    report.timings_ms = timer.log;
    Ok(report)
}

/// Degrees of the polar varieties `W_i` for the requested indices.
pub fn degrees(inst: &ProblemInstance, config: &RunConfig, indices: &[usize]) -> Result<DegreeReport> {
    config.validate()?;
    let opts = config.degree_options();
    let mut out = Vec::with_capacity(indices.len());
    for &i in indices {
        if i >= inst.n {
            return Err(Error::InvalidArgument(format!("polar index {i} must be below n = {}", inst.n)));
        }
        out.push((i, polar_degree(&inst.dense, i, config.seed, &opts)?));
    }
    Ok(DegreeReport { degrees: out, bezout_bound: bezout_bound(inst.d, inst.n) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q_frac, q_int};

    fn run(text: &str, n: usize, cfg: &RunConfig) -> SampleReport {
        let inst = prepare_instance(text, n, cfg).unwrap();
        sample_hypersurface(&inst, cfg).unwrap()
    }

    fn identity() -> RunConfig {
        RunConfig { coords: Coords::Identity, ..RunConfig::default() }
    }

    #[test]
    fn prepare_examples() {
        let cfg = RunConfig::default();
        let c = prepare_instance("x1^2+x2^2-1", 2, &cfg).unwrap();
        assert_eq!((c.n, c.d), (2, 2));
        assert!(c.length <= 7);
        assert!(c.squarefree_note.is_none());

        let c = prepare_instance("(x1^2+x2^2-1)^2", 2, &cfg).unwrap();
        assert_eq!(c.d, 2);
        assert!(c.squarefree_note.is_some());
        assert_eq!(c.dense.to_string(), "x1^2 + x2^2 - 1");

        // A factor shared with one partial only is not a repeated factor.
        let c = prepare_instance("(x2-1)*(x1^2+x2^2-1)", 2, &cfg).unwrap();
        assert_eq!(c.d, 3);
        assert!(c.squarefree_note.is_none());

        assert_eq!(prepare_instance("5", 2, &cfg).unwrap_err(), Error::ConstantPolynomial);
        assert!(prepare_instance("x1 +", 2, &cfg).is_err());
    }

    #[test]
    fn circle_identity_points_are_exact() {
        let r = run("x1^2+x2^2-1", 2, &identity());
        assert_eq!(r.verdict, StructureVerdict::CompatibleCompactSmooth);
        assert_eq!(r.exit_code(), 0);
        let pts: Vec<Vec<Q>> = r.points.iter().map(|p| p.exact.clone().unwrap()).collect();
        assert_eq!(pts, vec![vec![q_int(0), q_int(-1)], vec![q_int(0), q_int(1)]]);
    }

    #[test]
    fn circle_random_coords() {
        let r = run("x1^2+x2^2-1", 2, &RunConfig { seed: 5, ..RunConfig::default() });
        assert_eq!(r.representation.as_ref().unwrap().degree(), 2);
        assert_eq!(r.points.len(), 2);
        for p in &r.points {
            assert!(p.f_enclosure.contains_zero());
        }
    }

    #[test]
    fn ellipsoid_identity_intervals() {
        let r = run("x1^2+2*x2^2+3*x3^2-1", 3, &identity());
        let rep = r.representation.as_ref().unwrap();
        assert_eq!(rep.q.coeffs(), &[q_frac(-1, 3), q_int(0), q_int(1)]);
        let v = q_frac(57735, 100000);
        assert!(r.points[1].boxes[2].lo > v && r.points[1].boxes[2].hi < q_frac(57736, 100000));
        assert!(r.points[0].boxes[2].hi < -v);
        assert!(r.points[0].boxes[0].contains_zero());
    }

    #[test]
    fn empty_and_degenerate() {
        let r = run("x1^2+x2^2+1", 2, &RunConfig::default());
        assert_eq!(r.verdict, StructureVerdict::NotCompactSmoothOrEmpty);
        assert_eq!(r.exit_code(), 3);
        assert!(r.points.is_empty());
        assert_eq!(r.real_part.as_ref().unwrap().delta_star, 0);

        let r = run("x1*x2-1", 2, &identity());
        assert_eq!(r.dimension, Some(DimensionVerdict::Empty));
        assert_eq!(r.exit_code(), 3);
        assert!(r.points.is_empty());
    }

    #[test]
    fn decide_structure_mapping() {
        use DimensionVerdict::*;
        assert_eq!(decide_structure(PositiveDimensional, 0), StructureVerdict::NotCompactSmoothOrEmpty);
        assert_eq!(decide_structure(Empty, 0), StructureVerdict::NotCompactSmoothOrEmpty);
        assert_eq!(decide_structure(ZeroDimensional, 0), StructureVerdict::NotCompactSmoothOrEmpty);
        assert_eq!(decide_structure(ZeroDimensional, 4), StructureVerdict::CompatibleCompactSmooth);
    }

    #[test]
    fn torus_of_revolution_is_positive_dimensional() {
        // Axis along x3: the top and bottom circles are critical for x3.
        let r = run("(x1^2+x2^2+x3^2+3)^2 - 16*(x1^2+x2^2)", 3, &identity());
        assert_eq!(r.dimension, Some(DimensionVerdict::PositiveDimensional));
        assert_eq!(r.exit_code(), 2);
    }

    #[test]
    fn degree_examples() {
        let cfg = RunConfig::default();
        let c = prepare_instance("x1^2+x2^2-1", 2, &cfg).unwrap();
        let d = degrees(&c, &cfg, &[0, 1]).unwrap();
        assert_eq!((d.get(0), d.get(1)), (Some(2), Some(2)));
        let c = prepare_instance("((x1-2)^2+x2^2-1)*((x1+2)^2+x2^2-1)", 2, &cfg).unwrap();
        let d = degrees(&c, &cfg, &[1]).unwrap();
        assert_eq!((d.get(1), d.bezout_bound), (Some(4), 12));
        assert!(degrees(&c, &cfg, &[2]).is_err());
    }

    #[test]
    fn stability_check_agrees() {
        let r = run("x1^2+2*x2^2+3*x3^2-1", 3, &RunConfig { stability_check: true, ..RunConfig::default() });
        assert!(r.stability.unwrap().agrees);
    }
}
