//! Exact vertex coloring of small simple graphs.
//!
//! The decision procedure is a DSATUR-ordered backtracking search: the next vertex is the
//! one with the most distinct neighbor colors (ties: most uncolored neighbors, then lowest
//! index), and a fresh color is only ever opened as `used + 1`, which removes the symmetry
//! between unused colors.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::hypercore::SimpleGraph;

/// A color per vertex, drawn from `1..=palette`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    assignment: Vec<usize>,
    palette: usize,
}

impl Coloring {
    pub fn new(assignment: Vec<usize>, palette: usize) -> Result<Self> {
        for (i, &c) in assignment.iter().enumerate() {
            if c == 0 || c > palette {
                return invalid(format!(
                    "color {c} at position {} is outside the palette 1..={palette}",
                    i + 1
                ));
            }
        }
        Ok(Coloring { assignment, palette })
    }

    /// Palette taken as the largest color present.
    pub fn from_assignment(assignment: Vec<usize>) -> Result<Self> {
        let palette = assignment.iter().copied().max().unwrap_or(0);
        Coloring::new(assignment, palette)
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn color(&self, i: usize) -> usize {
        self.assignment[i]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.assignment
    }

    /// Number of distinct colors actually used.
    pub fn colors_used(&self) -> usize {
        let mut seen = vec![false; self.palette + 1];
        self.assignment.iter().for_each(|&c| seen[c] = true);
        seen.iter().filter(|&&b| b).count()
    }
}

pub fn is_proper(g: &SimpleGraph, c: &Coloring) -> Result<bool> {
    if c.len() != g.vcount() {
        return invalid(format!(
            "coloring has {} entries but the graph has {} vertices",
            c.len(),
            g.vcount()
        ));
    }
    Ok(first_conflict(g, c).is_none())
}

/// Lowest adjacent pair `(u, v)`, `u < v`, sharing a color.
pub fn first_conflict(g: &SimpleGraph, c: &Coloring) -> Option<(usize, usize)> {
    (0..g.vcount()).find_map(|u| {
        g.neighbors(u)
            .find(|&v| v > u && c.color(u) == c.color(v))
            .map(|v| (u, v))
    })
}

/// Whether `g` has a proper coloring with at most `t` colors. Only the vertexless graph
/// is 0-colorable.
pub fn chromatic_at_most(g: &SimpleGraph, t: usize) -> bool {
    color_with_at_most(g, t).is_some()
}

/// A proper coloring with at most `t` colors, if one exists.
pub fn color_with_at_most(g: &SimpleGraph, t: usize) -> Option<Coloring> {
    let n = g.vcount();
    if n == 0 {
        return Some(Coloring { assignment: vec![], palette: t });
    }
    if t == 0 {
        return None;
    }
    let mut search = Search::new(g, t.min(n));
    let found = search.solve();
    found.then_some(Coloring {
        assignment: search.color,
        palette: t,
    })
}

/// Chromatic number with an optimal witness using exactly that many colors.
pub fn chromatic_number(g: &SimpleGraph) -> (usize, Coloring) {
    let n = g.vcount();
    if n == 0 {
        return (0, Coloring { assignment: vec![], palette: 0 });
    }
    let greedy = dsatur_greedy(g);
    let upper = greedy.palette;
    let lower = greedy_clique_size(g);
    for t in lower..upper {
        if let Some(mut c) = color_with_at_most(g, t) {
            c.palette = t;
            debug_assert_eq!(c.colors_used(), t);
            return (t, c);
        }
    }
    (upper, greedy)
}

/// Greedy DSATUR coloring; an upper bound on the chromatic number.
pub fn dsatur_greedy(g: &SimpleGraph) -> Coloring {
    let n = g.vcount();
    let mut s = Search::new(g, n.max(1));
    for _ in 0..n {
        let v = s.select();
        let c = (1..=s.t).find(|&c| s.sat_count[v * (s.t + 1) + c] == 0).expect("n colors suffice");
        s.assign(v, c);
    }
    let palette = s.used;
    Coloring {
        assignment: s.color,
        palette,
    }
}

/// Size of the best clique found by greedy growth from every start vertex.
pub fn greedy_clique_size(g: &SimpleGraph) -> usize {
    let n = g.vcount();
    let mut best = usize::from(n > 0);
    for start in 0..n {
        let mut clique = vec![start];
        let mut cand: Vec<usize> = g.neighbors(start).collect();
        while !cand.is_empty() {
            let &v = cand
                .iter()
                .max_by_key(|&&v| (cand.iter().filter(|&&w| g.has_edge(v, w)).count(), usize::MAX - v))
                .unwrap();
            clique.push(v);
            cand.retain(|&w| w != v && g.has_edge(v, w));
        }
        best = best.max(clique.len());
    }
    best
}

struct Search<'g> {
    g: &'g SimpleGraph,
    t: usize,
    color: Vec<usize>,
    /// `sat_count[v * (t + 1) + c]`: neighbors of `v` holding color `c`.
    sat_count: Vec<u32>,
    /// Distinct colors among the neighbors of `v`.
    sat: Vec<usize>,
    /// Uncolored neighbors of `v`.
    free_deg: Vec<usize>,
    used: usize,
    colored: usize,
}

impl<'g> Search<'g> {
    fn new(g: &'g SimpleGraph, t: usize) -> Self {
        let n = g.vcount();
        Search {
            g,
            t,
            color: vec![0; n],
            sat_count: vec![0; n * (t + 1)],
            sat: vec![0; n],
            free_deg: (0..n).map(|u| g.degree(u)).collect(),
            used: 0,
            colored: 0,
        }
    }

    fn select(&self) -> usize {
        let mut best = usize::MAX;
        let mut key = (0usize, 0usize);
        for v in 0..self.color.len() {
            if self.color[v] != 0 {
                continue;
            }
            let k = (self.sat[v], self.free_deg[v]);
            if best == usize::MAX || k > key {
                best = v;
                key = k;
            }
        }
        best
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        self.colored += 1;
        if c > self.used {
            self.used = c;
        }
        let stride = self.t + 1;
        for w in self.g.neighbors(v) {
            self.free_deg[w] -= 1;
            let slot = &mut self.sat_count[w * stride + c];
            if *slot == 0 {
                self.sat[w] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize, prev_used: usize) {
        let c = self.color[v];
        self.color[v] = 0;
        self.colored -= 1;
        self.used = prev_used;
        let stride = self.t + 1;
        for w in self.g.neighbors(v) {
            self.free_deg[w] += 1;
            let slot = &mut self.sat_count[w * stride + c];
            *slot -= 1;
            if *slot == 0 {
                self.sat[w] -= 1;
            }
        }
    }

    fn solve(&mut self) -> bool {
        if self.colored == self.color.len() {
            return true;
        }
        let v = self.select();
        if self.sat[v] >= self.t {
            return false;
        }
        let stride = self.t + 1;
        let top = (self.used + 1).min(self.t);
        for c in 1..=top {
            if self.sat_count[v * stride + c] != 0 {
                continue;
            }
            let prev_used = self.used;
            self.assign(v, c);
            if self.solve() {
                return true;
            }
            self.unassign(v, prev_used);
        }
        false
    }
}
