//! Slow reference implementations used to cross-check the fast paths.
//!
//! Nothing here shares code with the search routines it checks: alternation is found by
//! enumerating subsequences, colorability by plain backtracking in index order, and
//! `alt_σ` by visiting all `3^n` words.

use crate::hypercore::{Hypergraph, LinearOrder, SignVector, SimpleGraph};
use crate::vset::VertexSet;

/// Longest alternating subsequence by enumerating every subset of the support.
pub fn alt_naive(x: &SignVector) -> usize {
    let support: Vec<usize> = x.support().iter().collect();
    let m = support.len();
    assert!(m <= 20, "oracle is exponential in the support size");
    let mut best = 0;
    for mask in 0u32..(1 << m) {
        let picked: Vec<bool> = (0..m)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| x.reds().contains(support[i]))
            .collect();
        if picked.windows(2).all(|w| w[0] != w[1]) {
            best = best.max(picked.len());
        }
    }
    best
}

/// All longest alternating subsequences, as position lists.
pub fn longest_alternating_subsequences(x: &SignVector) -> Vec<Vec<usize>> {
    let support: Vec<usize> = x.support().iter().collect();
    let m = support.len();
    let best = alt_naive(x);
    (0u32..(1 << m))
        .filter(|mask| mask.count_ones() as usize == best)
        .map(|mask| (0..m).filter(|i| mask & (1 << i) != 0).map(|i| support[i]).collect::<Vec<_>>())
        .filter(|seq| seq.windows(2).all(|w| x.reds().contains(w[0]) != x.reds().contains(w[1])))
        .collect()
}

/// Plain index-order backtracking with every color tried at every vertex.
pub fn colorable_naive(g: &SimpleGraph, t: usize) -> bool {
    fn go(g: &SimpleGraph, t: usize, v: usize, colors: &mut Vec<usize>) -> bool {
        if v == g.vcount() {
            return true;
        }
        for c in 1..=t {
            if (0..v).all(|u| !(g.has_edge(u, v) && colors[u] == c)) {
                colors.push(c);
                if go(g, t, v + 1, colors) {
                    return true;
                }
                colors.pop();
            }
        }
        false
    }
    go(g, t, 0, &mut Vec::new())
}

/// Chromatic number by trying every assignment in `[t]^V` for increasing `t`.
pub fn chromatic_exhaustive(g: &SimpleGraph) -> usize {
    let n = g.vcount();
    assert!(n <= 10, "oracle enumerates t^n assignments");
    if n == 0 {
        return 0;
    }
    let edges = g.edge_list();
    for t in 1..=n {
        let total = t.pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let colors: Vec<usize> = (0..n)
                .map(|_| {
                    let d = c % t;
                    c /= t;
                    d
                })
                .collect();
            if edges.iter().all(|&(u, v)| colors[u] != colors[v]) {
                return t;
            }
        }
    }
    n
}

/// Kneser graph built from an explicit pair loop.
pub fn kneser_naive(edges: &[VertexSet]) -> SimpleGraph {
    let pairs: Vec<(usize, usize)> = (0..edges.len())
        .flat_map(|i| (0..i).map(move |j| (j, i)))
        .filter(|&(j, i)| edges[i].intersection(edges[j]).is_empty())
        .collect();
    SimpleGraph::from_edges(edges.len(), &pairs).expect("valid pairs")
}

/// Every word in `{R,0,B}^n`, in base-3 counting order.
pub fn all_sign_vectors(n: usize) -> Vec<SignVector> {
    let total = 3usize.pow(n as u32);
    (0..total)
        .map(|code| {
            let mut c = code;
            let mut reds = VertexSet::EMPTY;
            let mut blues = VertexSet::EMPTY;
            for p in 1..=n {
                match c % 3 {
                    1 => reds.insert(p),
                    2 => blues.insert(p),
                    _ => {}
                }
                c /= 3;
            }
            SignVector::new(n, reds, blues).expect("disjoint by construction")
        })
        .collect()
}

pub fn feasible_naive(h: &Hypergraph, x: &SignVector, sigma: &LinearOrder, k: usize) -> bool {
    let reds: VertexSet = x.reds().iter().map(|j| sigma.vertex_at(j)).collect();
    let blues: VertexSet = x.blues().iter().map(|j| sigma.vertex_at(j)).collect();
    let kept: Vec<VertexSet> = h
        .edges()
        .iter()
        .copied()
        .filter(|e| e.is_subset(reds) || e.is_subset(blues))
        .collect();
    if k == 1 {
        kept.is_empty()
    } else {
        colorable_naive(&kneser_naive(&kept), k - 1)
    }
}

/// `alt_σ(H, k)` by full enumeration of all `3^n` words.
pub fn alt_sigma_naive(h: &Hypergraph, sigma: &LinearOrder, k: usize) -> usize {
    assert!(h.n() <= 9, "oracle visits 3^n words");
    all_sign_vectors(h.n())
        .iter()
        .filter(|x| feasible_naive(h, x, sigma, k))
        .map(alt_naive)
        .max()
        .unwrap_or(0)
}
