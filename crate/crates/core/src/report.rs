//! JSON and plain-text rendering of sampling and degree reports.
//!
//! Rationals are written as `"num/den"` strings and univariate polynomials as
//! coefficient arrays, constant term first. Output is deterministic; wall
//! clock timings appear only when requested in the run configuration.

use std::fmt::Write as _;

use serde::Serialize;

use crate::eliminate::{DegreeReport, DimensionVerdict, VerificationReport};
use crate::pipeline::{Attempt, Coords, RunConfig, SampleReport, Stability, StructureVerdict};
use crate::polysys::CoordinateChangeJson;
use crate::rational::q_to_string;
use crate::realdegree::RealPartJson;
use crate::realroots::RealRootJson;
use crate::univariate::UniPoly;

#[derive(Clone, Debug, Serialize)]
pub struct InstanceJson {
    pub n: usize,
    pub d: u32,
    #[serde(rename = "L")]
    pub length: usize,
    pub poly: String,
    pub input: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RepresentationJson {
    pub q: Vec<String>,
    pub p: Vec<Vec<String>>,
    pub discriminant: String,
    pub coordinate_change: CoordinateChangeJson,
    pub radicalized: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PointJson {
    pub root: usize,
    pub exact_intervals: Vec<[String; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<Vec<String>>,
    pub f_enclosure: [String; 2],
    pub approx: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeEntry {
    pub i: usize,
    pub degree: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreesJson {
    pub polar: Vec<DegreeEntry>,
    pub bezout_bound: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SampleJson {
    pub instance: InstanceJson,
    pub config: RunConfig,
    pub verdict: StructureVerdict,
    pub dimension: Option<DimensionVerdict>,
    pub attempts: Vec<Attempt>,
    pub representation: Option<RepresentationJson>,
    pub verification: Option<VerificationReport>,
    pub roots: Vec<RealRootJson>,
    pub points: Vec<PointJson>,
    pub degrees: Option<DegreesJson>,
    pub real_part: Option<RealPartJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stability: Option<Stability>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<Vec<(String, f64)>>,
    pub exit_code: i32,
}

pub fn uni_json(p: &UniPoly) -> Vec<String> {
    p.coeffs().iter().map(q_to_string).collect()
}

pub fn degrees_json(d: &DegreeReport) -> DegreesJson {
    DegreesJson {
        polar: d.degrees.iter().map(|&(i, degree)| DegreeEntry { i, degree }).collect(),
        bezout_bound: d.bezout_bound,
    }
}

pub fn sample_json(r: &SampleReport) -> SampleJson {
    let inst = &r.instance;
    let digits = r.config.precision;
    SampleJson {
        instance: InstanceJson {
            n: inst.n,
            d: inst.d,
            length: inst.length,
            poly: inst.dense.to_string(),
            input: inst.text.clone(),
            note: inst.squarefree_note.clone(),
        },
        config: r.config.clone(),
        verdict: r.verdict,
        dimension: r.dimension,
        attempts: r.attempts.clone(),
        representation: r.representation.as_ref().map(|rep| RepresentationJson {
            q: uni_json(&rep.q),
            p: rep.p.iter().map(uni_json).collect(),
            discriminant: q_to_string(&rep.discriminant),
            coordinate_change: rep.change.to_json(),
            radicalized: rep.radicalized,
        }),
        verification: r.verification.clone(),
        roots: match &r.representation {
            Some(rep) => r.roots.iter().map(|x| x.to_json(&rep.q, digits)).collect(),
            None => Vec::new(),
        },
        points: r
            .points
            .iter()
            .map(|p| PointJson {
                root: p.root,
                exact_intervals: p.boxes.iter().map(|b| b.to_strings()).collect(),
                exact: p.exact.as_ref().map(|v| v.iter().map(q_to_string).collect()),
                f_enclosure: p.f_enclosure.to_strings(),
                approx: p.approx.clone(),
            })
            .collect(),
        degrees: r.degrees.as_ref().map(degrees_json),
        real_part: r.real_part.as_ref().map(|c| c.to_json()),
        stability: r.stability.clone(),
        timings_ms: r.config.timings.then(|| r.timings_ms.clone()),
        exit_code: r.exit_code(),
    }
}

pub fn to_json_string<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("report types serialize")
}

pub fn sample_text(r: &SampleReport) -> String {
    let mut s = String::new();
    let inst = &r.instance;
    let _ = writeln!(s, "f = {}", inst.dense);
    let _ = writeln!(s, "n = {}, d = {}, L = {}", inst.n, inst.d, inst.length);
    if let Some(note) = &inst.squarefree_note {
        let _ = writeln!(s, "note: {note}");
    }
    let coords = match r.config.coords {
        Coords::Identity => "identity",
        Coords::Random => "random",
    };
    let _ = writeln!(s, "seed = {}, coords = {coords}", r.config.seed);
    let _ = writeln!(s, "verdict: {:?}", r.verdict);
    if let Some(d) = r.dimension {
        let _ = writeln!(s, "top polar variety: {d:?}");
    }
    for a in &r.attempts {
        match a.seed {
            Some(seed) => {
                let _ = writeln!(s, "  attempt seed {seed}: {}", a.outcome);
            }
            None => {
                let _ = writeln!(s, "  attempt identity: {}", a.outcome);
            }
        }
    }
    if let Some(rep) = &r.representation {
        let _ = writeln!(s, "q(X) = {}", rep.q);
        for (k, p) in rep.p.iter().enumerate() {
            let _ = writeln!(s, "  y{} = {}", k + 1, p);
        }
    }
    if let Some(v) = &r.verification {
        let _ = writeln!(
            s,
            "checks: parametrization {}, gradient coprime {}, jacobian unit {}, separable {}",
            v.parametrization, v.delta_coprime, v.jacobian_unit, v.separable
        );
    }
    if let Some(c) = &r.real_part {
        let _ = writeln!(s, "real part: q* = {}, real degree {}, {} real factor(s)", c.q_star, c.delta_star, c.m);
    }
    if let Some(d) = &r.degrees {
        for (i, deg) in &d.degrees {
            let _ = writeln!(s, "deg W_{i} = {deg} (bound {})", d.bezout_bound);
        }
    }
    for (root, p) in r.roots.iter().zip(&r.points) {
        let _ = writeln!(s, "point {} thom {:?}: ({})", p.root, root.thom, p.approx.join(", "));
    }
    if let Some(st) = &r.stability {
        let _ = writeln!(s, "stability (seed {}): degree {}, {} real roots, agrees {}", st.seed, st.degree, st.real_roots, st.agrees);
    }
    if r.config.timings {
        for (k, ms) in &r.timings_ms {
            let _ = writeln!(s, "time {k}: {ms:.3} ms");
        }
    }
    s
}

pub fn degrees_text(d: &DegreeReport) -> String {
    let mut s = String::new();
    for (i, deg) in &d.degrees {
        let _ = writeln!(s, "deg W_{i} = {deg}");
    }
    let _ = writeln!(s, "bezout bound = {}", d.bezout_bound);
    s
}
