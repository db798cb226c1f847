use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use polarsample::circuit::parse_expression;
use polarsample::pipeline::{degrees, prepare_instance, sample_hypersurface, Coords, RunConfig};
use polarsample::realdegree::real_part;
use polarsample::report::{degrees_json, degrees_text, sample_json, sample_text, to_json_string};
use polarsample::{Error, Result};

#[derive(Parser)]
#[command(name = "polarsample", version, about = "Certified real sample points on compact smooth hypersurfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute sample points on every connected component.
    Sample(Common),
    /// Degrees of polar varieties.
    Degrees {
        #[command(flatten)]
        common: Common,
        /// Comma separated polar indices (default: all).
        #[arg(long, value_delimiter = ',')]
        indices: Vec<usize>,
    },
    /// Real part of the eliminant. With --eliminant, factor a given
    /// univariate polynomial in x1 instead of solving.
    Realdegree {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        eliminant: Option<String>,
    },
    /// Run the sampler and print only the exact checks.
    Verify(Common),
    /// Expand the input circuit and report its gradient circuit size.
    Expand(Common),
}

#[derive(Args, Clone)]
struct Common {
    /// Polynomial in x1..xn, e.g. "x1^2+x2^2-1".
    #[arg(long, conflicts_with = "infile")]
    poly: Option<String>,
    #[arg(long)]
    infile: Option<std::path::PathBuf>,
    #[arg(long, default_value_t = 0)]
    nvars: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = CoordsArg::Random)]
    coords: CoordsArg,
    #[arg(long, default_value_t = 100)]
    entry_bound: u64,
    #[arg(long, default_value_t = 8)]
    max_retries: usize,
    #[arg(long, default_value_t = 30)]
    precision: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Include wall-clock timings in the report.
    #[arg(long)]
    timings: bool,
    /// Re-solve with an independent seed and compare.
    #[arg(long)]
    stability_check: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum CoordsArg {
    Identity,
    Random,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

impl Common {
    fn text(&self) -> Result<String> {
        match (&self.poly, &self.infile) {
            (Some(p), _) => Ok(p.clone()),
            (None, Some(path)) => std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display()))),
            (None, None) => Err(Error::InvalidArgument("one of --poly or --infile is required".into())),
        }
    }

    /// Number of variables: explicit, or the largest index mentioned.
    fn nvars(&self, text: &str) -> usize {
        if self.nvars > 0 {
            return self.nvars;
        }
        let b = text.as_bytes();
        let mut n = 0;
        let mut k = 0;
        while k < b.len() {
            if b[k] == b'x' {
                let start = k + 1;
                let mut end = start;
                while end < b.len() && b[end].is_ascii_digit() {
                    end += 1;
                }
                if let Ok(v) = text[start..end].parse::<usize>() {
                    n = n.max(v);
                }
                k = end.max(k + 1);
            } else {
                k += 1;
            }
        }
        n
    }

    fn config(&self) -> RunConfig {
        RunConfig {
            seed: self.seed,
            coords: match self.coords {
                CoordsArg::Identity => Coords::Identity,
                CoordsArg::Random => Coords::Random,
            },
            entry_bound: self.entry_bound,
            max_retries: self.max_retries,
            precision: self.precision,
            timings: self.timings,
            stability_check: self.stability_check,
            ..RunConfig::default()
        }
    }
}

fn emit<T: Serialize>(format: Format, json: &T, text: impl FnOnce() -> String) {
    match format {
        Format::Json => println!("{}", to_json_string(json)),
        Format::Text => print!("{}", text()),
    }
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Sample(c) => {
            let text = c.text()?;
            let cfg = c.config();
            let inst = prepare_instance(&text, c.nvars(&text), &cfg)?;
            let r = sample_hypersurface(&inst, &cfg)?;
            emit(c.format, &sample_json(&r), || sample_text(&r));
            Ok(r.exit_code())
        }
        Command::Verify(c) => {
            let text = c.text()?;
            let cfg = c.config();
            let inst = prepare_instance(&text, c.nvars(&text), &cfg)?;
            let r = sample_hypersurface(&inst, &cfg)?;
            let enclosures = r.points.iter().all(|p| p.f_enclosure.contains_zero());
            let passed = r.verification.as_ref().is_some_and(|v| v.all_passed()) && enclosures;
            #[derive(Serialize)]
            struct VerifyJson<'a> {
                checks: &'a Option<polarsample::eliminate::VerificationReport>,
                enclosures_contain_zero: bool,
                passed: bool,
            }
            let json = VerifyJson { checks: &r.verification, enclosures_contain_zero: enclosures, passed };
            emit(c.format, &json, || {
                let mut s = match &r.verification {
                    Some(v) => format!(
                        "parametrization {}\ngradient coprime {}\njacobian unit {}\nseparable {}\n",
                        v.parametrization, v.delta_coprime, v.jacobian_unit, v.separable
                    ),
                    None => format!("no representation ({:?})\n", r.dimension),
                };
                s.push_str(&format!("enclosures contain zero {enclosures}\npassed {passed}\n"));
                s
            });
            Ok(if r.representation.is_none() { r.exit_code() } else if passed { 0 } else { 1 })
        }
        Command::Degrees { common: c, indices } => {
            let text = c.text()?;
            let cfg = c.config();
            let inst = prepare_instance(&text, c.nvars(&text), &cfg)?;
            let idx: Vec<usize> = if indices.is_empty() { (0..inst.n).collect() } else { indices };
            let d = degrees(&inst, &cfg, &idx)?;
            emit(c.format, &degrees_json(&d), || degrees_text(&d));
            Ok(0)
        }
        Command::Realdegree { common: c, eliminant } => {
            let cert = match eliminant {
                Some(e) => {
                    let p = parse_expression(&e, 1)?.expand_to_dense(c.config().degree_cap)?;
                    let u = p.to_univariate(0).ok_or(Error::InvalidArgument("eliminant must be univariate".into()))?;
                    real_part(&u.squarefree_part())?
                }
                None => {
                    let text = c.text()?;
                    let cfg = c.config();
                    let inst = prepare_instance(&text, c.nvars(&text), &cfg)?;
                    let r = sample_hypersurface(&inst, &cfg)?;
                    match r.real_part {
                        Some(cert) => cert,
                        None => return Err(Error::NotZeroDimensional),
                    }
                }
            };
            emit(c.format, &cert.to_json(), || {
                let mut s = String::new();
                for (f, k) in &cert.factors {
                    s.push_str(&format!("factor {f}: {k} real root(s)\n"));
                }
                s.push_str(&format!("q* = {}\nreal degree = {}\nm = {}\n", cert.q_star, cert.delta_star, cert.m));
                s
            });
            Ok(if cert.delta_star == 0 { 3 } else { 0 })
        }
        Command::Expand(c) => {
            let text = c.text()?;
            let n = c.nvars(&text);
            let circuit = parse_expression(&text, n)?;
            let dense = circuit.expand_to_dense(c.config().degree_cap)?;
            let grad = circuit.gradient_circuit()?;
            #[derive(Serialize)]
            struct ExpandJson {
                n: usize,
                d: u32,
                #[serde(rename = "L")]
                length: usize,
                gradient_length: usize,
                poly: String,
                terms: usize,
                coefficients: Vec<(Vec<u32>, String)>,
            }
            let json = ExpandJson {
                n,
                d: dense.degree(),
                length: circuit.len(),
                gradient_length: grad.len(),
                poly: dense.to_string(),
                terms: dense.num_terms(),
                coefficients: dense.terms().map(|(m, c)| (m.0.clone(), polarsample::rational::q_to_string(c))).collect(),
            };
            emit(c.format, &json, || {
                format!("{}\nn = {n}, d = {}, L = {}, gradient L = {}\n", dense, json.d, json.length, json.gradient_length)
            });
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
