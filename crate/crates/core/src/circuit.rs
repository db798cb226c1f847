//! Division-free straight-line programs over the rationals.
//!
//! A [`Circuit`] is a topologically ordered gate list: every gate refers only
//! to gates created before it. Circuits are immutable once built; use
//! [`CircuitBuilder`] to construct them.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::poly::DensePoly;
use crate::rational::Q;

pub type NodeId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Gate {
    /// Input variable, 0-based (`x1` is 0).
    Input(usize),
    Const(Q),
    Add(NodeId, NodeId),
    Sub(NodeId, NodeId),
    Mul(NodeId, NodeId),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circuit {
    num_vars: usize,
    gates: Vec<Gate>,
    outputs: Vec<NodeId>,
}

/// Incremental builder that shares input and constant gates.
#[derive(Debug)]
pub struct CircuitBuilder {
    num_vars: usize,
    gates: Vec<Gate>,
    inputs: HashMap<usize, NodeId>,
    consts: HashMap<Q, NodeId>,
}

impl CircuitBuilder {
    pub fn new(num_vars: usize) -> Self {
        CircuitBuilder { num_vars, gates: Vec::new(), inputs: HashMap::new(), consts: HashMap::new() }
    }

    /// Starts from the gates of an existing circuit (outputs are dropped).
    pub fn extend(c: &Circuit) -> Self {
        let mut b = Self::new(c.num_vars);
        for (id, g) in c.gates.iter().enumerate() {
            match g {
                Gate::Input(i) => {
                    b.inputs.entry(*i).or_insert(id);
                }
                Gate::Const(v) => {
                    b.consts.entry(v.clone()).or_insert(id);
                }
                _ => {}
            }
            b.gates.push(g.clone());
        }
        b
    }

    fn push(&mut self, g: Gate) -> NodeId {
        self.gates.push(g);
        self.gates.len() - 1
    }

    pub fn input(&mut self, i: usize) -> NodeId {
        assert!(i < self.num_vars, "input index out of range");
        if let Some(&id) = self.inputs.get(&i) {
            return id;
        }
        let id = self.push(Gate::Input(i));
        self.inputs.insert(i, id);
        id
    }

    pub fn constant(&mut self, v: Q) -> NodeId {
        if let Some(&id) = self.consts.get(&v) {
            return id;
        }
        let id = self.push(Gate::Const(v.clone()));
        self.consts.insert(v, id);
        id
    }

    pub fn add(&mut self, a: NodeId, b: NodeId) -> NodeId {
        self.push(Gate::Add(a, b))
    }

    pub fn sub(&mut self, a: NodeId, b: NodeId) -> NodeId {
        self.push(Gate::Sub(a, b))
    }

    pub fn mul(&mut self, a: NodeId, b: NodeId) -> NodeId {
        self.push(Gate::Mul(a, b))
    }

    /// `a^e` by repeated squaring; `e = 0` gives the constant 1.
    pub fn pow(&mut self, a: NodeId, e: u32) -> NodeId {
        if e == 0 {
            return self.constant(Q::one());
        }
        let mut acc: Option<NodeId> = None;
        let mut base = a;
        let mut e = e;
        loop {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base,
                    Some(x) => self.mul(x, base),
                });
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = self.mul(base, base);
        }
        acc.expect("e > 0")
    }

    pub fn finish(self, outputs: Vec<NodeId>) -> Circuit {
        Circuit { num_vars: self.num_vars, gates: self.gates, outputs }
    }
}

impl Circuit {
    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn outputs(&self) -> &[NodeId] {
        &self.outputs
    }

    /// Gate count `L`.
    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    /// Checks the structural invariants (acyclic, indices in range).
    pub fn validate(&self) -> Result<()> {
        for (id, g) in self.gates.iter().enumerate() {
            let ok = match g {
                Gate::Input(i) => *i < self.num_vars,
                Gate::Const(_) => true,
                Gate::Add(a, b) | Gate::Sub(a, b) | Gate::Mul(a, b) => *a < id && *b < id,
            };
            if !ok {
                return Err(Error::InvalidArgument(format!("gate {id} violates ordering")));
            }
        }
        if self.outputs.iter().any(|&o| o >= self.gates.len()) {
            return Err(Error::InvalidArgument("output refers to a missing gate".into()));
        }
        Ok(())
    }

    /// Parses an expression in `x1..xn`; see [`parse_expression`].
    pub fn parse(text: &str, n: usize) -> Result<Circuit> {
        parse_expression(text, n)
    }

    pub fn evaluate(&self, point: &[Q]) -> Result<Vec<Q>> {
        if point.len() != self.num_vars {
            return Err(Error::DimensionMismatch { expected: self.num_vars, got: point.len() });
        }
        let mut vals: Vec<Q> = Vec::with_capacity(self.gates.len());
        for g in &self.gates {
            let v = match g {
                Gate::Input(i) => point[*i].clone(),
                Gate::Const(c) => c.clone(),
                Gate::Add(a, b) => &vals[*a] + &vals[*b],
                Gate::Sub(a, b) => &vals[*a] - &vals[*b],
                Gate::Mul(a, b) => &vals[*a] * &vals[*b],
            };
            vals.push(v);
        }
        Ok(self.outputs.iter().map(|&o| vals[o].clone()).collect())
    }

    /// Evaluates every gate in `Z/pZ`. Point coordinates are residues.
    pub fn evaluate_mod(&self, point: &[u64], p: u64) -> Result<Vec<u64>> {
        if point.len() != self.num_vars {
            return Err(Error::DimensionMismatch { expected: self.num_vars, got: point.len() });
        }
        if p < 2 {
            return Err(Error::InvalidArgument(format!("modulus {p} is not prime")));
        }
        let pm = p as u128;
        let mut vals: Vec<u64> = Vec::with_capacity(self.gates.len());
        for g in &self.gates {
            let v = match g {
                Gate::Input(i) => point[*i] % p,
                Gate::Const(c) => rational_mod(c, p)?,
                Gate::Add(a, b) => ((vals[*a] as u128 + vals[*b] as u128) % pm) as u64,
                Gate::Sub(a, b) => ((vals[*a] as u128 + pm - vals[*b] as u128) % pm) as u64,
                Gate::Mul(a, b) => ((vals[*a] as u128 * vals[*b] as u128) % pm) as u64,
            };
            vals.push(v);
        }
        Ok(self.outputs.iter().map(|&o| vals[o]).collect())
    }

    /// Reverse-mode derivative circuit: outputs `f, df/dx1, ..., df/dxn`.
    ///
    /// Each forward gate contributes at most four adjoint gates, plus two shared
    /// constants, so the result has at most `5 L + 2` gates.
    pub fn gradient_circuit(&self) -> Result<Circuit> {
        if self.outputs.len() != 1 {
            return Err(Error::MultiOutput(self.outputs.len()));
        }
        let out = self.outputs[0];
        let mut b = CircuitBuilder::extend(self);
        let one = b.constant(Q::one());
        let zero = b.constant(Q::zero());
        let mut adj: Vec<Option<NodeId>> = vec![None; self.gates.len()];
        adj[out] = Some(one);

        // Accumulate `contrib` into adj[target]; `negate` subtracts instead.
        fn accumulate(
            b: &mut CircuitBuilder,
            adj: &mut [Option<NodeId>],
            target: NodeId,
            contrib: NodeId,
            negate: bool,
            zero: NodeId,
        ) {
            adj[target] = Some(match (adj[target], negate) {
                (None, false) => contrib,
                (None, true) => b.sub(zero, contrib),
                (Some(cur), false) => b.add(cur, contrib),
                (Some(cur), true) => b.sub(cur, contrib),
            });
        }

        for id in (0..=out).rev() {
            let Some(a) = adj[id] else { continue };
            match self.gates[id] {
                Gate::Input(_) | Gate::Const(_) => {}
                Gate::Add(x, y) => {
                    accumulate(&mut b, &mut adj, x, a, false, zero);
                    accumulate(&mut b, &mut adj, y, a, false, zero);
                }
                Gate::Sub(x, y) => {
                    accumulate(&mut b, &mut adj, x, a, false, zero);
                    accumulate(&mut b, &mut adj, y, a, true, zero);
                }
                Gate::Mul(x, y) => {
                    let cx = if a == one { y } else { b.mul(a, y) };
                    accumulate(&mut b, &mut adj, x, cx, false, zero);
                    let cy = if a == one { x } else { b.mul(a, x) };
                    accumulate(&mut b, &mut adj, y, cy, false, zero);
                }
            }
        }

        let mut outputs = vec![out];
        for i in 0..self.num_vars {
            let node = self
                .gates
                .iter()
                .position(|g| *g == Gate::Input(i))
                .and_then(|id| adj[id]);
            outputs.push(node.unwrap_or(zero));
        }
        Ok(b.finish(outputs))
    }

    /// Single-output circuit for the sum of squared partial derivatives.
    pub fn delta_circuit(&self) -> Result<Circuit> {
        let g = self.gradient_circuit()?;
        let partials: Vec<NodeId> = g.outputs[1..].to_vec();
        let mut b = CircuitBuilder::extend(&g);
        let mut acc: Option<NodeId> = None;
        for p in partials {
            let sq = b.mul(p, p);
            acc = Some(match acc {
                None => sq,
                Some(s) => b.add(s, sq),
            });
        }
        let out = acc.unwrap_or_else(|| b.constant(Q::zero()));
        Ok(b.finish(vec![out]))
    }

    /// Expands the single output into a [`DensePoly`], failing if any gate's
    /// degree exceeds `degree_cap` or a gate exceeds `max_terms` terms.
    pub fn expand_to_dense(&self, degree_cap: u32) -> Result<DensePoly> {
        self.expand_with_caps(degree_cap, 200_000)
    }

    pub fn expand_with_caps(&self, degree_cap: u32, max_terms: usize) -> Result<DensePoly> {
        if self.outputs.len() != 1 {
            return Err(Error::MultiOutput(self.outputs.len()));
        }
        let n = self.num_vars;
        let mut vals: Vec<DensePoly> = Vec::with_capacity(self.gates.len());
        for g in &self.gates {
            let v = match g {
                Gate::Input(i) => DensePoly::var(n, *i),
                Gate::Const(c) => DensePoly::constant(n, c.clone()),
                Gate::Add(a, b) => &vals[*a] + &vals[*b],
                Gate::Sub(a, b) => &vals[*a] - &vals[*b],
                Gate::Mul(a, b) => {
                    let reached = vals[*a].degree() + vals[*b].degree();
                    if reached > degree_cap && !vals[*a].is_zero() && !vals[*b].is_zero() {
                        return Err(Error::DegreeCap { cap: degree_cap, reached });
                    }
                    &vals[*a] * &vals[*b]
                }
            };
            if v.num_terms() > max_terms {
                return Err(Error::ResourceCap(format!("expansion exceeded {max_terms} terms")));
            }
            vals.push(v);
        }
        let out = vals.swap_remove(self.outputs[0]);
        if out.degree() > degree_cap {
            return Err(Error::DegreeCap { cap: degree_cap, reached: out.degree() });
        }
        Ok(out)
    }

    /// Builds a circuit evaluating `p` term by term (Horner-free, shared powers).
    pub fn from_dense(p: &DensePoly) -> Circuit {
        let n = p.num_vars();
        let mut b = CircuitBuilder::new(n);
        let mut acc: Option<NodeId> = None;
        for (m, c) in p.terms() {
            let mut t: Option<NodeId> = None;
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let x = b.input(i);
                let pw = b.pow(x, e);
                t = Some(match t {
                    None => pw,
                    Some(v) => b.mul(v, pw),
                });
            }
            let term = match t {
                None => b.constant(c.clone()),
                Some(v) if c.is_one() => v,
                Some(v) => {
                    let k = b.constant(c.clone());
                    b.mul(k, v)
                }
            };
            acc = Some(match acc {
                None => term,
                Some(s) => b.add(s, term),
            });
        }
        let out = acc.unwrap_or_else(|| b.constant(Q::zero()));
        b.finish(vec![out])
    }

    /// Random circuit for property tests: `gates` arithmetic gates over small
    /// integer constants, no product of degree above `max_degree`.
    pub fn random<R: Rng>(rng: &mut R, n: usize, gates: usize, max_degree: u32) -> Circuit {
        let mut b = CircuitBuilder::new(n);
        let mut nodes: Vec<(NodeId, u32)> = (0..n).map(|i| (b.input(i), 1)).collect();
        for c in [-2i64, -1, 1, 3] {
            nodes.push((b.constant(Q::from_integer(BigInt::from(c))), 0));
        }
        for _ in 0..gates {
            let (x, dx) = nodes[rng.gen_range(0..nodes.len())];
            let (y, dy) = nodes[rng.gen_range(0..nodes.len())];
            let node = match rng.gen_range(0..3) {
                0 => (b.add(x, y), dx.max(dy)),
                1 => (b.sub(x, y), dx.max(dy)),
                _ if dx + dy <= max_degree => (b.mul(x, y), dx + dy),
                _ => (b.add(x, y), dx.max(dy)),
            };
            nodes.push(node);
        }
        let out = nodes.last().expect("non-empty").0;
        b.finish(vec![out])
    }
}

fn rational_mod(c: &Q, p: u64) -> Result<u64> {
    let pb = BigInt::from(p);
    let d = c.denom().mod_floor(&pb);
    if d.is_zero() {
        return Err(Error::BadPrime(p));
    }
    let n = c.numer().mod_floor(&pb);
    let dinv = d.modpow(&(&pb - 2u32), &pb);
    Ok(((n * dinv) % &pb).to_u64().expect("residue fits"))
}

/// Parses `expr := term (("+"|"-") term)*`, `term := factor ("*" factor)*`,
/// `factor := base ("^" uint)?`, `base := rational | var | "(" expr ")"`,
/// `var := "x" uint` (1-based), `rational := int ("/" uint)?`.
///
/// A leading unary minus on a term is accepted as `0 - term`.
pub fn parse_expression(text: &str, n: usize) -> Result<Circuit> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, n, b: CircuitBuilder::new(n) };
    p.skip_ws();
    if p.pos >= p.src.len() {
        return Err(Error::Syntax { pos: 0, msg: "empty expression".into() });
    }
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(Error::Syntax { pos: p.pos, msg: format!("unexpected `{}`", p.src[p.pos] as char) });
    }
    Ok(p.b.finish(vec![out]))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    n: usize,
    b: CircuitBuilder,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn uint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Syntax { pos: start, msg: "expected digits".into() });
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
    }

    fn expr(&mut self) -> Result<NodeId> {
        let mut acc = if self.peek() == Some(b'-') {
            self.pos += 1;
            let t = self.term()?;
            let z = self.b.constant(Q::zero());
            self.b.sub(z, t)
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.b.add(acc, t);
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.b.sub(acc, t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<NodeId> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let f = self.factor()?;
            acc = self.b.mul(acc, f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<NodeId> {
        let base = self.base()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let at = self.pos;
            let e = self.uint()?;
            let e = e.to_u32().ok_or(Error::Syntax { pos: at, msg: "exponent too large".into() })?;
            return Ok(self.b.pow(base, e));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<NodeId> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(Error::Syntax { pos: self.pos, msg: "expected `)`".into() });
                }
                self.pos += 1;
                Ok(e)
            }
            Some(b'x') => {
                let at = self.pos;
                self.pos += 1;
                let idx = self.uint().map_err(|_| Error::Syntax { pos: at, msg: "expected variable index".into() })?;
                let idx = idx.to_usize().unwrap_or(usize::MAX);
                if idx == 0 {
                    return Err(Error::UnknownVariable { name: "x0".into(), pos: at });
                }
                if idx > self.n {
                    return Err(Error::VariableOutOfRange { index: idx, n: self.n });
                }
                Ok(self.b.input(idx - 1))
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.uint()?;
                let val = if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let at = self.pos;
                    let den = self.uint()?;
                    if den.is_zero() {
                        return Err(Error::Syntax { pos: at, msg: "zero denominator".into() });
                    }
                    Q::new(num, den)
                } else {
                    Q::from_integer(num)
                };
                Ok(self.b.constant(val))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let at = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = String::from_utf8_lossy(&self.src[at..self.pos]).into_owned();
                Err(Error::UnknownVariable { name, pos: at })
            }
            Some(c) => Err(Error::Syntax { pos: self.pos, msg: format!("unexpected `{}`", c as char) }),
            None => Err(Error::Syntax { pos: self.pos, msg: "unexpected end of input".into() }),
        }
    }
}
