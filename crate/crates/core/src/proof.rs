//! The path-following argument behind the altermatic bound, run as an auditor.
//!
//! Given a coloring `h` of the edges of `H` (that is, of the vertices of `KG(H)`), every sign
//! vector `X` gets a signed level `λ(X)`:
//!
//! * if `alt(X) <= alt_σ(H, k)`: `±(alt(X) + 1)`, positive iff `X^B` is empty or the first
//!   nonzero entry of `X` is red;
//! * otherwise: `±(alt_σ(H, k) + h̄(X) - k + 2)`, signed by the side on which the largest
//!   color of an edge inside `X^R_σ` or `X^B_σ` occurs.
//!
//! A *permissible sequence* is a chain `(∅,∅) = (A_0,B_0) ⊆ ... ⊆ (A_m,B_m)` growing by one
//! signed position per step whose signed support `A_m ∪ -B_m` is covered by its levels. With
//! the neighbor rules below, the empty sequence has exactly one neighbor and every other
//! sequence exactly two, provided `h` is proper and uses at most `n - alt_σ(H, k) + k - 2`
//! colors. No finite graph has that degree profile, so walking from the empty sequence must
//! hit a place where the rules break, and every such place yields two disjoint edges of `H`
//! with the same color.
//!
//! Sequences are stored as their step lists: step `j` is `+p` when position `p` joins `A` and
//! `-p` when it joins `B`. Then `A_m ∪ -B_m` is exactly the set of steps, replacing pair `i`
//! by `(A_{i-1} ∪ (A_{i+1} \ A_i), B_{i-1} ∪ (B_{i+1} \ B_i))` swaps steps `i` and `i + 1`,
//! and mirroring negates every step.
//!
//! All sign vectors here are words over positions; `σ` maps them to vertex sets only when
//! edges are tested for containment.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::altermatic::alt_sigma;
use crate::colorer::{first_conflict, Coloring};
use crate::error::{invalid, Error, Result};
use crate::hypercore::{alt, Hypergraph, LinearOrder, SignVector};
use crate::kneser::kneser_graph;
use crate::vset::VertexSet;

/// A nonzero signed level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SignedLevel(i64);

impl SignedLevel {
    pub fn new(value: i64) -> Option<Self> {
        (value != 0).then_some(SignedLevel(value))
    }

    pub fn value(self) -> i64 {
        self.0
    }

    pub fn magnitude(self) -> u64 {
        self.0.unsigned_abs()
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }
}

impl fmt::Display for SignedLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:+}", self.0)
    }
}

/// Largest color of an edge inside a vertex set, with the edges attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HBar {
    /// 0 when no edge fits.
    pub value: usize,
    /// Ascending indices of the edges with color `value` inside the set.
    pub edges: Vec<usize>,
}

/// `h̄(M)`: the maximum color among edges of `H` contained in `M`, or 0.
pub fn hbar(m: VertexSet, h: &Hypergraph, c: &Coloring) -> HBar {
    hbar_over(m, h.edges(), c)
}

fn hbar_over(m: VertexSet, edges: &[VertexSet], c: &Coloring) -> HBar {
    let mut value = 0;
    let mut attaining = Vec::new();
    for (i, &e) in edges.iter().enumerate() {
        if !e.is_subset(m) {
            continue;
        }
        let col = c.color(i);
        if col > value {
            value = col;
            attaining.clear();
        }
        if col == value {
            attaining.push(i);
        }
    }
    HBar {
        value,
        edges: attaining,
    }
}

/// Where a witness surfaced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    /// `h̄(X^R) = h̄(X^B) > 0`.
    Tie,
    /// `alt(X)` exceeds `alt_σ` but `h̄(X) < k`, so `k - 1` colors were used on a graph
    /// needing `k`.
    LevelJump,
    /// Nested `X ⊆ Y` with `λ(X) = -λ(Y)`.
    Antipodal,
    /// Direct scan of `KG(H)` after the walk ended without a violation.
    DirectScan,
}

/// Two disjoint edges of `H` with the same color.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub edge_a: usize,
    pub edge_b: usize,
    pub color: usize,
    /// Position-space sign vector at which the conflict was found.
    pub context: SignVector,
    pub kind: WitnessKind,
}

impl Witness {
    /// Checks the claim against `H` and `c` alone.
    pub fn verify(&self, h: &Hypergraph, c: &Coloring) -> bool {
        let e = h.edges();
        self.edge_a != self.edge_b
            && self.edge_a < e.len()
            && self.edge_b < e.len()
            && c.len() == e.len()
            && e[self.edge_a].is_disjoint(e[self.edge_b])
            && c.color(self.edge_a) == self.color
            && c.color(self.edge_b) == self.color
    }
}

/// A broken expectation that the proof rules out; carries enough to reproduce it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Anomaly {
    pub message: String,
    pub steps: Vec<i32>,
    pub levels: Vec<i64>,
}

impl fmt::Display for Anomaly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (steps {:?}, levels {:?})", self.message, self.steps, self.levels)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    /// The coloring is improper, certified by the witness.
    Improper(Witness),
    Anomaly(Anomaly),
}

impl Violation {
    fn anomaly(message: impl Into<String>, steps: &[i32], levels: &[SignedLevel]) -> Self {
        Violation::Anomaly(Anomaly {
            message: message.into(),
            steps: steps.to_vec(),
            levels: levels.iter().map(|l| l.0).collect(),
        })
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Violation::Improper(w) => Some(w),
            Violation::Anomaly(_) => None,
        }
    }
}

/// A chain of nested signed pairs, stored as signed steps, with its cached levels.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PermissibleSequence {
    steps: Vec<i32>,
    levels: Vec<SignedLevel>,
}

impl PermissibleSequence {
    pub fn steps(&self) -> &[i32] {
        &self.steps
    }

    /// `λ_0, ..., λ_m`.
    pub fn levels(&self) -> &[SignedLevel] {
        &self.levels
    }

    /// `m`, the index of the last pair.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The pair `(A_i, B_i)` as a word of length `n`.
    pub fn pair(&self, n: usize, i: usize) -> SignVector {
        pair_of(n, &self.steps[..i])
    }
}

fn pair_of(n: usize, steps: &[i32]) -> SignVector {
    let mut reds = VertexSet::EMPTY;
    let mut blues = VertexSet::EMPTY;
    for &s in steps {
        if s > 0 {
            reds.insert(s as usize);
        } else {
            blues.insert((-s) as usize);
        }
    }
    SignVector::new_unchecked(n, reds, blues)
}

/// Which of the two exclusive situations a sequence is in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum NeighborCase {
    /// `λ_i = λ_{i+1}` for exactly one `i`.
    Repeat(usize),
    /// `λ_i ∉ A_m ∪ -B_m` for exactly one `i`.
    Missing(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Neighbors {
    pub case: NeighborCase,
    pub sequences: Vec<PermissibleSequence>,
    /// The appending neighbor would need position `|λ_i| > n`; only possible when the
    /// palette exceeds `n - alt_σ + k - 2`.
    pub append_out_of_range: bool,
}

const LEVEL_CACHE_LIMIT: usize = 1 << 20;

/// Everything needed to evaluate `λ` and the neighbor rules for one `(H, c, σ, k)`.
pub struct ProofContext<'a> {
    c: &'a Coloring,
    n: usize,
    k: usize,
    alt_i: usize,
    /// Edges mapped to the positions their vertices occupy under `σ`.
    pos_edges: Vec<VertexSet>,
    cache: HashMap<(u64, u64), std::result::Result<SignedLevel, Violation>>,
}

impl<'a> ProofContext<'a> {
    pub fn new(h: &'a Hypergraph, c: &'a Coloring, sigma: &LinearOrder, k: usize, alt_i: usize) -> Result<Self> {
        if k == 0 {
            return invalid("k must be at least 1");
        }
        if sigma.n() != h.n() {
            return invalid(format!(
                "ordering has length {} but the hypergraph has {} vertices",
                sigma.n(),
                h.n()
            ));
        }
        if c.len() != h.edge_count() {
            return invalid(format!(
                "coloring has {} entries but the hypergraph has {} edges",
                c.len(),
                h.edge_count()
            ));
        }
        if alt_i > h.n() {
            return invalid(format!("alt value {alt_i} exceeds n = {}", h.n()));
        }
        Ok(ProofContext {
            c,
            n: h.n(),
            k,
            alt_i,
            pos_edges: h.edges().iter().map(|&e| sigma.to_positions(e)).collect(),
            cache: HashMap::new(),
        })
    }

    /// Computes `alt_σ(H, k)` first.
    pub fn with_computed_alt(h: &'a Hypergraph, c: &'a Coloring, sigma: &LinearOrder, k: usize) -> Result<Self> {
        let alt_i = alt_sigma(h, sigma, k)?.alt_value;
        ProofContext::new(h, c, sigma, k, alt_i)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alt_i(&self) -> usize {
        self.alt_i
    }

    /// Largest palette for which `|λ| <= n` is guaranteed: `n - alt_σ + k - 2` (may be negative).
    pub fn palette_bound(&self) -> i64 {
        self.n as i64 - self.alt_i as i64 + self.k as i64 - 2
    }

    /// `λ(X)` for a position-space word `X`.
    pub fn lambda(&mut self, x: &SignVector) -> std::result::Result<SignedLevel, Violation> {
        let key = (x.reds().bits(), x.blues().bits());
        if let Some(hit) = self.cache.get(&key) {
            return hit.clone();
        }
        let out = self.lambda_uncached(x);
        if self.cache.len() >= LEVEL_CACHE_LIMIT {
            self.cache.clear();
        }
        self.cache.insert(key, out.clone());
        out
    }

    fn lambda_uncached(&self, x: &SignVector) -> std::result::Result<SignedLevel, Violation> {
        let a = alt(x);
        if a <= self.alt_i {
            let positive = x.blues().is_empty() || x.support().first().is_some_and(|p| x.reds().contains(p));
            let mag = a as i64 + 1;
            return Ok(SignedLevel(if positive { mag } else { -mag }));
        }
        let red = hbar_over(x.reds(), &self.pos_edges, self.c);
        let blue = hbar_over(x.blues(), &self.pos_edges, self.c);
        if red.value == blue.value && red.value > 0 {
            return Err(Violation::Improper(Witness {
                edge_a: red.edges[0],
                edge_b: blue.edges[0],
                color: red.value,
                context: *x,
                kind: WitnessKind::Tie,
            }));
        }
        let top = red.value.max(blue.value);
        if top < self.k {
            return Err(self.level_jump_witness(x));
        }
        let mag = (self.alt_i + top + 2 - self.k) as i64;
        Ok(SignedLevel(if red.value > blue.value { mag } else { -mag }))
    }

    /// `KG(H|X)` needs `k` colors but only colors below `k` occur on it; find the clash.
    fn level_jump_witness(&self, x: &SignVector) -> Violation {
        let kept: Vec<usize> = (0..self.pos_edges.len())
            .filter(|&i| self.pos_edges[i].is_subset(x.reds()) || self.pos_edges[i].is_subset(x.blues()))
            .collect();
        for (j, &a) in kept.iter().enumerate() {
            for &b in &kept[j + 1..] {
                if self.pos_edges[a].is_disjoint(self.pos_edges[b]) && self.c.color(a) == self.c.color(b) {
                    return Violation::Improper(Witness {
                        edge_a: a,
                        edge_b: b,
                        color: self.c.color(a),
                        context: *x,
                        kind: WitnessKind::LevelJump,
                    });
                }
            }
        }
        Violation::Anomaly(Anomaly {
            message: format!(
                "alt({x}) = {} exceeds alt_sigma = {} yet the restriction is properly colored with fewer than k = {} colors",
                alt(x),
                self.alt_i,
                self.k
            ),
            steps: vec![],
            levels: vec![],
        })
    }

    /// Evaluates the levels of a step list. `Ok(None)` when it is well formed but not permissible.
    pub fn evaluate(&mut self, steps: Vec<i32>) -> std::result::Result<Option<PermissibleSequence>, Violation> {
        let mut seen = VertexSet::EMPTY;
        for &s in &steps {
            let p = s.unsigned_abs() as usize;
            if p == 0 || p > self.n || seen.contains(p) {
                return Err(Violation::anomaly("malformed step list", &steps, &[]));
            }
            seen.insert(p);
        }
        let mut levels = Vec::with_capacity(steps.len() + 1);
        for i in 0..=steps.len() {
            let x = pair_of(self.n, &steps[..i]);
            levels.push(self.lambda(&x)?);
        }
        let values: HashSet<i64> = levels.iter().map(|l| l.0).collect();
        let permissible = steps.iter().all(|&s| values.contains(&(s as i64)));
        Ok(permissible.then_some(PermissibleSequence { steps, levels }))
    }

    pub fn empty_sequence(&mut self) -> std::result::Result<PermissibleSequence, Violation> {
        self.evaluate(Vec::new())?
            .ok_or_else(|| Violation::anomaly("empty sequence is not permissible", &[], &[]))
    }

    /// The neighbors of `p` in the audit graph.
    pub fn neighbors(&mut self, p: &PermissibleSequence) -> std::result::Result<Neighbors, Violation> {
        let m = p.len();
        let steps = &p.steps;
        let lv = &p.levels;
        self.check_chain(p)?;

        let repeats: Vec<usize> = (0..m).filter(|&i| lv[i] == lv[i + 1]).collect();
        let support: HashSet<i64> = steps.iter().map(|&s| s as i64).collect();
        let missing: Vec<usize> = (0..=m).filter(|&i| !support.contains(&lv[i].0)).collect();

        let mut out_of_range = false;
        let (case, candidates): (NeighborCase, Vec<Vec<i32>>) = match (repeats.as_slice(), missing.as_slice()) {
            (&[i], &[]) => {
                if i == 0 {
                    return Err(Violation::anomaly("repeated level at index 0", steps, lv));
                }
                let first = swapped(steps, i);
                let second = if i + 1 < m { swapped(steps, i + 1) } else { steps[..m - 1].to_vec() };
                (NeighborCase::Repeat(i), vec![first, second])
            }
            (&[], &[i]) => {
                let mut cands = Vec::with_capacity(2);
                let level = lv[i].0;
                if level.unsigned_abs() as usize <= self.n {
                    let mut appended = steps.clone();
                    appended.push(level as i32);
                    cands.push(appended);
                } else {
                    out_of_range = true;
                }
                if i == 0 {
                    // the mirror of the empty sequence is itself and is not a neighbor
                    if m > 0 {
                        cands.push(steps.iter().map(|s| -s).collect());
                    }
                } else if i < m {
                    cands.push(swapped(steps, i));
                } else {
                    cands.push(steps[..m - 1].to_vec());
                }
                (NeighborCase::Missing(i), cands)
            }
            _ => {
                return Err(Violation::anomaly(
                    format!("expected exactly one repeat or one missing level, found repeats {repeats:?} missing {missing:?}"),
                    steps,
                    lv,
                ))
            }
        };

        let mut sequences = Vec::with_capacity(candidates.len());
        for cand in candidates {
            match self.evaluate(cand.clone())? {
                Some(q) => sequences.push(q),
                None => {
                    return Err(Violation::anomaly(
                        format!("neighbor {cand:?} is not permissible"),
                        steps,
                        lv,
                    ))
                }
            }
        }
        Ok(Neighbors {
            case,
            sequences,
            append_out_of_range: out_of_range,
        })
    }

    /// Checks `λ_0 = +1`, monotone `|λ|`, and no antipodal pair along the chain; an antipodal
    /// pair in the upper range yields a witness.
    fn check_chain(&self, p: &PermissibleSequence) -> std::result::Result<(), Violation> {
        let lv = &p.levels;
        if lv[0].0 != 1 {
            return Err(Violation::anomaly("level of the empty pair is not +1", &p.steps, lv));
        }
        if lv.windows(2).any(|w| w[0].magnitude() > w[1].magnitude()) {
            return Err(Violation::anomaly("levels are not monotone in magnitude", &p.steps, lv));
        }
        for i in 0..lv.len() {
            for j in i + 1..lv.len() {
                if lv[i].0 + lv[j].0 == 0 {
                    return Err(self.antipodal_witness(p, i, j));
                }
            }
        }
        Ok(())
    }

    fn antipodal_witness(&self, p: &PermissibleSequence, i: usize, j: usize) -> Violation {
        let lv = &p.levels;
        if lv[i].magnitude() <= self.alt_i as u64 + 1 {
            return Violation::anomaly(format!("antipodal levels at {i} and {j} in the alternation range"), &p.steps, lv);
        }
        let small = p.pair(self.n, i);
        let large = p.pair(self.n, j);
        let (small_side, large_side) = if lv[i].is_positive() {
            (small.reds(), large.blues())
        } else {
            (small.blues(), large.reds())
        };
        let a = hbar_over(small_side, &self.pos_edges, self.c);
        let b = hbar_over(large_side, &self.pos_edges, self.c);
        if a.value == 0 || a.value != b.value {
            return Violation::anomaly(format!("antipodal levels at {i} and {j} without matching colors"), &p.steps, lv);
        }
        Violation::Improper(Witness {
            edge_a: a.edges[0],
            edge_b: b.edges[0],
            color: a.value,
            context: large,
            kind: WitnessKind::Antipodal,
        })
    }
}

/// Swaps steps `i` and `i + 1` (1-based), i.e. replaces pair `i`.
fn swapped(steps: &[i32], i: usize) -> Vec<i32> {
    let mut s = steps.to_vec();
    s.swap(i - 1, i);
    s
}

/// Free-function form of [`ProofContext::lambda`].
pub fn lambda(
    x: &SignVector,
    h: &Hypergraph,
    c: &Coloring,
    alt_i: usize,
    k: usize,
    sigma: &LinearOrder,
) -> Result<std::result::Result<SignedLevel, Violation>> {
    let mut ctx = ProofContext::new(h, c, sigma, k, alt_i)?;
    if x.n() != h.n() {
        return invalid("sign vector length does not match the hypergraph");
    }
    Ok(ctx.lambda(x))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum AuditOutcome {
    Witness(Witness),
    /// The walk ended at a second endpoint and `c` passed a full properness check.
    ProperWithinBound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub outcome: AuditOutcome,
    pub steps: u64,
    pub alt_i: usize,
    /// `n - alt_σ + k - 2`.
    pub palette_bound: i64,
    /// Largest color used by `c`.
    pub max_color: usize,
    /// The final sequence reached by the walk.
    pub final_steps: Vec<i32>,
}

/// Walks the audit graph from the empty sequence until the neighbor rules break.
///
/// When `c` uses at most `n - alt_σ + k - 2` colors the walk cannot end quietly, so the
/// returned witness certifies `c` improper. With more colors the walk may reach another
/// endpoint; then `c` is checked directly on `KG(H)`.
pub fn audit(h: &Hypergraph, c: &Coloring, k: usize, sigma: &LinearOrder, step_cap: u64) -> Result<AuditReport> {
    let alt_i = alt_sigma(h, sigma, k)?.alt_value;
    audit_with_alt(h, c, k, sigma, alt_i, step_cap)
}

pub fn audit_with_alt(
    h: &Hypergraph,
    c: &Coloring,
    k: usize,
    sigma: &LinearOrder,
    alt_i: usize,
    step_cap: u64,
) -> Result<AuditReport> {
    let mut ctx = ProofContext::new(h, c, sigma, k, alt_i)?;
    let max_color = c.as_slice().iter().copied().max().unwrap_or(0);
    let palette_bound = ctx.palette_bound();
    let finish = |outcome: AuditOutcome, steps: u64, at: &PermissibleSequence| -> Result<AuditReport> {
        if let AuditOutcome::Witness(w) = &outcome {
            if !w.verify(h, c) {
                return Err(Error::Anomaly(format!("witness {w:?} failed re-verification")));
            }
        }
        Ok(AuditReport {
            outcome,
            steps,
            alt_i,
            palette_bound,
            max_color,
            final_steps: at.steps.clone(),
        })
    };
    let lift = |v: Violation| -> std::result::Result<Witness, Error> {
        match v {
            Violation::Improper(w) => Ok(w),
            Violation::Anomaly(a) => Err(Error::Anomaly(a.to_string())),
        }
    };

    let mut cur = match ctx.empty_sequence() {
        Ok(p) => p,
        Err(v) => return finish(AuditOutcome::Witness(lift(v)?), 0, &PermissibleSequence { steps: vec![], levels: vec![] }),
    };
    let mut prev: Option<Vec<i32>> = None;
    let mut steps: u64 = 0;
    loop {
        let nb = match ctx.neighbors(&cur) {
            Ok(nb) => nb,
            Err(v) => return finish(AuditOutcome::Witness(lift(v)?), steps, &cur),
        };
        let back = nb.sequences.iter().filter(|q| Some(&q.steps) == prev.as_ref()).count();
        if prev.is_some() && back != 1 {
            return Err(Error::Anomaly(format!(
                "neighbor relation is not symmetric at {:?} (came from {:?})",
                cur.steps, prev
            )));
        }
        let mut forward: Vec<PermissibleSequence> =
            nb.sequences.into_iter().filter(|q| Some(&q.steps) != prev.as_ref()).collect();
        if forward.len() > 1 {
            return Err(Error::Anomaly(format!("sequence {:?} has more than two neighbors", cur.steps)));
        }
        let Some(next) = forward.pop() else {
            // a second endpoint: only reachable when levels exceed n
            if max_color as i64 <= palette_bound {
                return Err(Error::Anomaly(format!(
                    "walk ended at {:?} although the palette is within the bound",
                    cur.steps
                )));
            }
            let outcome = match first_conflict(&kneser_graph(h), c) {
                None => AuditOutcome::ProperWithinBound,
                Some((a, b)) => AuditOutcome::Witness(Witness {
                    edge_a: a,
                    edge_b: b,
                    color: c.color(a),
                    context: cur.pair(h.n(), cur.len()),
                    kind: WitnessKind::DirectScan,
                }),
            };
            return finish(outcome, steps, &cur);
        };
        steps += 1;
        if steps > step_cap {
            return Err(Error::ResourceLimit(format!("audit walk exceeded {step_cap} steps")));
        }
        prev = Some(std::mem::replace(&mut cur, next).steps);
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditGraphStats {
    pub vertex_count: usize,
    /// degree -> number of permissible sequences with that degree
    pub degree_histogram: BTreeMap<usize, usize>,
    pub violations: Vec<Violation>,
    /// Pairs `(P, Q)` with `Q ∈ N(P)` but `P ∉ N(Q)`, both computed cleanly.
    pub asymmetric: Vec<(Vec<i32>, Vec<i32>)>,
    /// Degree of the empty sequence, when it could be computed.
    pub empty_degree: Option<usize>,
}

/// Enumerates every permissible sequence and its neighbors.
///
/// `size_cap` bounds the number of candidate step lists, `Σ_m 2^m n!/(n-m)!`.
pub fn enumerate_audit_graph(
    h: &Hypergraph,
    c: &Coloring,
    k: usize,
    sigma: &LinearOrder,
    size_cap: usize,
) -> Result<AuditGraphStats> {
    let alt_i = alt_sigma(h, sigma, k)?.alt_value;
    let mut ctx = ProofContext::new(h, c, sigma, k, alt_i)?;
    let n = h.n();
    let mut total: u128 = 0;
    let mut layer: u128 = 1;
    for m in 0..=n {
        total += layer;
        layer *= 2 * (n - m) as u128;
    }
    if total > size_cap as u128 {
        return Err(Error::ResourceLimit(format!(
            "{total} candidate sequences exceed the cap of {size_cap}"
        )));
    }

    let mut stats = AuditGraphStats::default();
    let mut vertices: Vec<PermissibleSequence> = Vec::new();
    let mut stack: Vec<Vec<i32>> = vec![Vec::new()];
    while let Some(steps) = stack.pop() {
        if steps.len() < n {
            for p in 1..=n as i32 {
                if steps.iter().all(|s| s.abs() != p) {
                    for s in [p, -p] {
                        let mut next = steps.clone();
                        next.push(s);
                        stack.push(next);
                    }
                }
            }
        }
        match ctx.evaluate(steps) {
            Ok(Some(p)) => vertices.push(p),
            Ok(None) => {}
            Err(v) => stats.violations.push(v),
        }
    }
    vertices.sort_by(|a, b| a.steps.len().cmp(&b.steps.len()).then_with(|| a.steps.cmp(&b.steps)));
    stats.vertex_count = vertices.len();

    let mut adjacency: HashMap<Vec<i32>, Vec<Vec<i32>>> = HashMap::new();
    for p in &vertices {
        match ctx.neighbors(p) {
            Ok(nb) => {
                let list: Vec<Vec<i32>> = nb.sequences.into_iter().map(|q| q.steps).collect();
                *stats.degree_histogram.entry(list.len()).or_default() += 1;
                if p.is_empty() {
                    stats.empty_degree = Some(list.len());
                }
                adjacency.insert(p.steps.clone(), list);
            }
            Err(v) => stats.violations.push(v),
        }
    }
    for p in &vertices {
        let Some(list) = adjacency.get(&p.steps) else { continue };
        for q in list {
            if let Some(back) = adjacency.get(q) {
                if !back.contains(&p.steps) {
                    stats.asymmetric.push((p.steps.clone(), q.clone()));
                }
            }
        }
    }
    Ok(stats)
}
