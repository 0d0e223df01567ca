//! Hypergraphs, sign vectors, vertex orderings, and the alternation primitives.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::limits::DEFAULT_VERTEX_CAP;
use crate::vset::{VertexSet, MAX_VERTICES};

/// A simple hypergraph on `[n]`: distinct nonempty edges, kept in a stable order.
///
/// The position of an edge in [`Hypergraph::edges`] is its vertex index in the Kneser graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<VertexSet>,
}

impl Hypergraph {
    /// Validates against the default vertex cap.
    pub fn new(n: usize, edges: Vec<VertexSet>) -> Result<Self> {
        Self::with_cap(n, edges, DEFAULT_VERTEX_CAP)
    }

    pub fn with_cap(n: usize, edges: Vec<VertexSet>, vertex_cap: usize) -> Result<Self> {
        let cap = vertex_cap.min(MAX_VERTICES);
        if n == 0 {
            return invalid("hypergraph needs at least one vertex");
        }
        if n > cap {
            return Err(crate::Error::ResourceLimit(format!("vertex count {n} exceeds cap {cap}")));
        }
        let full = VertexSet::full(n);
        let mut seen = std::collections::HashSet::with_capacity(edges.len());
        for (i, &e) in edges.iter().enumerate() {
            if e.is_empty() {
                return invalid(format!("edge #{} is empty", i + 1));
            }
            if !e.is_subset(full) {
                return invalid(format!("edge #{} = {e} is not a subset of [{n}]", i + 1));
            }
            if !seen.insert(e) {
                return invalid(format!("edge #{} = {e} is a duplicate", i + 1));
            }
        }
        Ok(Hypergraph { n, edges })
    }

    /// Builds from 1-based vertex lists.
    pub fn from_lists<I, E>(n: usize, lists: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: IntoIterator<Item = usize>,
    {
        let full = VertexSet::full(n.min(MAX_VERTICES));
        let mut edges = Vec::new();
        for (i, list) in lists.into_iter().enumerate() {
            let mut e = VertexSet::EMPTY;
            for v in list {
                if v == 0 || v > n || v > MAX_VERTICES {
                    return invalid(format!("edge #{}: vertex {v} is outside [1, {n}]", i + 1));
                }
                e.insert(v);
            }
            debug_assert!(e.is_subset(full));
            edges.push(e);
        }
        Self::new(n, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Same edges sorted lexicographically as vertex lists.
    pub fn sorted_lex(&self) -> Hypergraph {
        let mut edges = self.edges.clone();
        edges.sort_by(|a, b| a.lex_cmp(*b));
        Hypergraph { n: self.n, edges }
    }
}

/// One coordinate of a sign vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Red,
    Zero,
    Blue,
}

impl Sign {
    pub fn as_char(self) -> char {
        match self {
            Sign::Red => 'R',
            Sign::Zero => '0',
            Sign::Blue => 'B',
        }
    }
}

/// A word in `{R,0,B}^n`, stored as the disjoint pair `(reds, blues)` of positions.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignVector {
    n: usize,
    reds: VertexSet,
    blues: VertexSet,
}

impl SignVector {
    pub fn new(n: usize, reds: VertexSet, blues: VertexSet) -> Result<Self> {
        if n > MAX_VERTICES {
            return invalid(format!("sign vector length {n} exceeds {MAX_VERTICES}"));
        }
        if !reds.is_disjoint(blues) {
            return invalid(format!("reds {reds} and blues {blues} overlap"));
        }
        if !reds.union(blues).is_subset(VertexSet::full(n)) {
            return invalid(format!("sign vector support exceeds [{n}]"));
        }
        Ok(SignVector { n, reds, blues })
    }

    pub(crate) fn new_unchecked(n: usize, reds: VertexSet, blues: VertexSet) -> Self {
        debug_assert!(reds.is_disjoint(blues));
        SignVector { n, reds, blues }
    }

    pub fn zero(n: usize) -> Self {
        SignVector::new_unchecked(n, VertexSet::EMPTY, VertexSet::EMPTY)
    }

    /// Parses a word such as `RRBB0R0RB`; `+`/`-` are accepted for `R`/`B`.
    pub fn from_word(word: &str) -> Result<Self> {
        let mut reds = VertexSet::EMPTY;
        let mut blues = VertexSet::EMPTY;
        let mut n = 0;
        for ch in word.chars().filter(|c| !c.is_whitespace() && *c != ',') {
            n += 1;
            if n > MAX_VERTICES {
                return invalid("sign word too long");
            }
            match ch {
                'R' | 'r' | '+' => reds.insert(n),
                'B' | 'b' | '-' => blues.insert(n),
                '0' => {}
                other => return invalid(format!("unexpected sign character {other:?}")),
            }
        }
        SignVector::new(n, reds, blues)
    }

    pub fn from_signs(signs: &[Sign]) -> Result<Self> {
        let mut reds = VertexSet::EMPTY;
        let mut blues = VertexSet::EMPTY;
        for (i, s) in signs.iter().enumerate() {
            match s {
                Sign::Red => reds.insert(i + 1),
                Sign::Blue => blues.insert(i + 1),
                Sign::Zero => {}
            }
        }
        SignVector::new(signs.len(), reds, blues)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn reds(&self) -> VertexSet {
        self.reds
    }

    pub fn blues(&self) -> VertexSet {
        self.blues
    }

    pub fn support(&self) -> VertexSet {
        self.reds.union(self.blues)
    }

    pub fn sign(&self, pos: usize) -> Sign {
        if self.reds.contains(pos) {
            Sign::Red
        } else if self.blues.contains(pos) {
            Sign::Blue
        } else {
            Sign::Zero
        }
    }

    pub fn to_word(&self) -> String {
        (1..=self.n).map(|p| self.sign(p).as_char()).collect()
    }

    /// Swaps the red and blue sides.
    pub fn mirrored(&self) -> Self {
        SignVector::new_unchecked(self.n, self.blues, self.reds)
    }

    /// Longest alternating subsequence of the nonzero entries.
    pub fn alt(&self) -> usize {
        alt(self)
    }

    pub fn support_size(&self) -> usize {
        support_size(self)
    }

    pub fn is_subset(&self, other: &SignVector) -> bool {
        subset_of(self, other)
    }
}

impl fmt::Debug for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignVector({})", self.to_word())
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_word())
    }
}

/// Counts sign changes among nonzero entries in position order, plus one.
pub fn alt(x: &SignVector) -> usize {
    let support = x.support();
    if support.is_empty() {
        return 0;
    }
    let mut count = 0;
    let mut last: Option<bool> = None;
    for p in support.iter() {
        let red = x.reds.contains(p);
        if last != Some(red) {
            count += 1;
            last = Some(red);
        }
    }
    count
}

pub fn support_size(x: &SignVector) -> usize {
    x.reds.len() + x.blues.len()
}

/// Componentwise inclusion `X^R ⊆ Y^R` and `X^B ⊆ Y^B`.
pub fn subset_of(x: &SignVector, y: &SignVector) -> bool {
    x.reds.is_subset(y.reds) && x.blues.is_subset(y.blues)
}

/// A linear ordering `v_{i_1} < ... < v_{i_n}` of `[n]`, given as the sequence `(i_1, ..., i_n)`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct LinearOrder {
    perm: Vec<usize>,
    position: Vec<usize>,
}

impl LinearOrder {
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        if n > MAX_VERTICES {
            return invalid(format!("ordering length {n} exceeds {MAX_VERTICES}"));
        }
        let mut position = vec![0; n + 1];
        for (j, &v) in perm.iter().enumerate() {
            if v == 0 || v > n {
                return invalid(format!("ordering entry {v} is outside [1, {n}]"));
            }
            if position[v] != 0 {
                return invalid(format!("ordering repeats vertex {v}"));
            }
            position[v] = j + 1;
        }
        Ok(LinearOrder { perm, position })
    }

    /// The natural order `1 < 2 < ... < n`.
    pub fn identity(n: usize) -> Self {
        LinearOrder::new((1..=n).collect()).expect("identity is a permutation")
    }

    /// Parses a space- or comma-separated permutation such as `"2 3 1"`.
    pub fn parse(s: &str) -> Result<Self> {
        let perm = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| crate::Error::InvalidArgument(format!("bad ordering entry {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        LinearOrder::new(perm)
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.perm
    }

    /// Vertex placed at 1-based position `j`.
    pub fn vertex_at(&self, j: usize) -> usize {
        self.perm[j - 1]
    }

    /// 1-based position of vertex `v`.
    pub fn position_of(&self, v: usize) -> usize {
        self.position[v]
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(j, &v)| v == j + 1)
    }

    pub fn reversed(&self) -> Self {
        let mut perm = self.perm.clone();
        perm.reverse();
        LinearOrder::new(perm).expect("reversal of a permutation")
    }

    /// Maps a vertex set to the positions its vertices occupy.
    pub fn to_positions(&self, vertices: VertexSet) -> VertexSet {
        vertices.iter().map(|v| self.position[v]).collect()
    }

    /// Maps a set of positions to the vertices standing there.
    pub fn to_vertices(&self, positions: VertexSet) -> VertexSet {
        positions.iter().map(|j| self.perm[j - 1]).collect()
    }
}

impl TryFrom<Vec<usize>> for LinearOrder {
    type Error = crate::Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        LinearOrder::new(v)
    }
}

impl From<LinearOrder> for Vec<usize> {
    fn from(o: LinearOrder) -> Vec<usize> {
        o.perm
    }
}

impl fmt::Debug for LinearOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearOrder({self})")
    }
}

impl fmt::Display for LinearOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.perm.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Relabels the word `x` through `sigma`: position `j` of `x` tags vertex `i_j`.
pub fn apply_order(x: &SignVector, sigma: &LinearOrder) -> Result<SignVector> {
    if x.n() != sigma.n() {
        return invalid(format!(
            "sign vector length {} does not match ordering length {}",
            x.n(),
            sigma.n()
        ));
    }
    Ok(SignVector::new_unchecked(
        x.n(),
        sigma.to_vertices(x.reds),
        sigma.to_vertices(x.blues),
    ))
}

/// The sub-hypergraph `H|_{X_σ}`, remembering where each edge came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Restriction {
    pub vertices: VertexSet,
    pub edges: Vec<VertexSet>,
    /// `source[i]` is the index in the parent hypergraph of `edges[i]`.
    pub source: Vec<usize>,
}

impl Restriction {
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Keeps the edges lying wholly inside `X^R_σ` or wholly inside `X^B_σ`, in parent order.
pub fn restrict(h: &Hypergraph, x: &SignVector, sigma: &LinearOrder) -> Result<Restriction> {
    if x.n() != h.n() {
        return invalid(format!(
            "sign vector length {} does not match hypergraph order {}",
            x.n(),
            h.n()
        ));
    }
    let xs = apply_order(x, sigma)?;
    Ok(restrict_vertex_sides(h, xs.reds, xs.blues))
}

pub(crate) fn restrict_vertex_sides(h: &Hypergraph, reds: VertexSet, blues: VertexSet) -> Restriction {
    let mut edges = Vec::new();
    let mut source = Vec::new();
    for (i, &e) in h.edges().iter().enumerate() {
        if e.is_subset(reds) || e.is_subset(blues) {
            edges.push(e);
            source.push(i);
        }
    }
    Restriction {
        vertices: reds.union(blues),
        edges,
        source,
    }
}

/// Simple undirected graph with bit-matrix adjacency.
#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    vcount: usize,
    words: usize,
    rows: Vec<u64>,
}

impl SimpleGraph {
    pub fn new(vcount: usize) -> Self {
        let words = vcount.div_ceil(64).max(1);
        SimpleGraph {
            vcount,
            words,
            rows: vec![0; words * vcount],
        }
    }

    /// Builds from an edge list of 0-based vertex pairs; loops are rejected.
    pub fn from_edges(vcount: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = SimpleGraph::new(vcount);
        for &(u, v) in edges {
            if u >= vcount || v >= vcount {
                return invalid(format!("edge ({u},{v}) out of range for {vcount} vertices"));
            }
            if u == v {
                return invalid(format!("loop at vertex {u}"));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(vcount: usize) -> Self {
        let mut g = SimpleGraph::new(vcount);
        for u in 0..vcount {
            for v in u + 1..vcount {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn vcount(&self) -> usize {
        self.vcount
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.rows[u * self.words + v / 64] |= 1u64 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1u64 << (u % 64);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] & (1u64 << (v % 64)) != 0
    }

    pub(crate) fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(u).iter().enumerate().flat_map(|(w, &bits)| {
            let mut b = bits;
            std::iter::from_fn(move || {
                if b == 0 {
                    None
                } else {
                    let t = b.trailing_zeros() as usize;
                    b &= b - 1;
                    Some(w * 64 + t)
                }
            })
        })
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.vcount).map(|u| self.degree(u)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        (0..self.vcount)
            .flat_map(|u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimpleGraph")
            .field("vcount", &self.vcount)
            .field("edges", &self.edge_list())
            .finish()
    }
}

/// Orders edges lexicographically as sorted vertex lists.
pub(crate) fn lex_sort(edges: &mut [VertexSet]) {
    edges.sort_by(|a, b| -> Ordering { a.lex_cmp(*b) });
}
