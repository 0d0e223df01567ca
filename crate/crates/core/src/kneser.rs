//! General Kneser graphs and the standard hypergraph families.

use std::collections::HashSet;
use std::ops::RangeInclusive;

use itertools::Itertools;
use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{invalid, Result};
use crate::hypercore::{lex_sort, Hypergraph, SimpleGraph};
use crate::vset::{VertexSet, MAX_VERTICES};

/// `KG(H)`: one vertex per edge of `H`, adjacent when the edges are disjoint.
pub fn kneser_graph(h: &Hypergraph) -> SimpleGraph {
    kneser_of_edges(h.edges())
}

pub(crate) fn kneser_of_edges(edges: &[VertexSet]) -> SimpleGraph {
    let mut g = SimpleGraph::new(edges.len());
    for (i, &a) in edges.iter().enumerate() {
        for (j, &b) in edges.iter().enumerate().skip(i + 1) {
            if a.is_disjoint(b) {
                g.add_edge(i, j);
            }
        }
    }
    g
}

fn check_order(m: usize) -> Result<()> {
    if m == 0 || m > MAX_VERTICES {
        return invalid(format!("ground set size {m} must lie in [1, {MAX_VERTICES}]"));
    }
    Ok(())
}

/// All `r`-subsets of `[m]` in lexicographic order; its Kneser graph is `KG(m, r)`.
pub fn complete_uniform(m: usize, r: usize) -> Result<Hypergraph> {
    check_order(m)?;
    if r == 0 || r > m {
        return invalid(format!("subset size {r} must lie in [1, {m}]"));
    }
    let edges = (1..=m)
        .combinations(r)
        .map(|c| c.into_iter().collect::<VertexSet>())
        .collect();
    Hypergraph::with_cap(m, edges, MAX_VERTICES)
}

/// Stable `r`-subsets of the `m`-cycle (no two cyclically consecutive elements), lexicographic.
pub fn schrijver_hypergraph(m: usize, r: usize) -> Result<Hypergraph> {
    check_order(m)?;
    if r == 0 {
        return invalid("subset size must be positive");
    }
    if m < 2 * r {
        return invalid(format!("no stable {r}-subset of the {m}-cycle exists (need m >= 2r)"));
    }
    let edges = (1..=m)
        .combinations(r)
        .filter(|c| {
            c.windows(2).all(|w| w[1] != w[0] + 1) && !(c[0] == 1 && c[r - 1] == m && m > 1)
        })
        .map(|c| c.into_iter().collect::<VertexSet>())
        .collect();
    Hypergraph::with_cap(m, edges, MAX_VERTICES)
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Enumeration is used below this many candidate subsets; rejection sampling above it.
const ENUMERATION_LIMIT: u128 = 1 << 16;

/// `ecount` distinct subsets of `[n]` with sizes in `sizes`, drawn uniformly without
/// replacement from a seeded ChaCha stream and returned in lexicographic order.
pub fn random_hypergraph(
    n: usize,
    ecount: usize,
    sizes: RangeInclusive<usize>,
    seed: u64,
) -> Result<Hypergraph> {
    check_order(n)?;
    let (lo, hi) = (*sizes.start(), *sizes.end());
    if lo == 0 || lo > hi || hi > n {
        return invalid(format!("edge size range {lo}..={hi} must lie within [1, {n}]"));
    }
    let per_size: Vec<u128> = (lo..=hi).map(|s| binomial(n, s)).collect();
    let available: u128 = per_size.iter().sum();
    if ecount as u128 > available {
        return invalid(format!(
            "requested {ecount} edges but only {available} subsets of sizes {lo}..={hi} exist"
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<VertexSet> = if available <= ENUMERATION_LIMIT {
        let pool: Vec<VertexSet> = (lo..=hi)
            .flat_map(|s| (1..=n).combinations(s))
            .map(|c| c.into_iter().collect())
            .collect();
        index::sample(&mut rng, pool.len(), ecount)
            .into_iter()
            .map(|i| pool[i])
            .collect()
    } else {
        let mut seen = HashSet::with_capacity(ecount);
        let mut out = Vec::with_capacity(ecount);
        while out.len() < ecount {
            // size weighted by the number of subsets of that size, then a uniform subset
            let mut ticket = rng.gen_range(0..available);
            let mut size = lo;
            for (i, &c) in per_size.iter().enumerate() {
                if ticket < c {
                    size = lo + i;
                    break;
                }
                ticket -= c;
            }
            let picked: VertexSet = index::sample(&mut rng, n, size)
                .into_iter()
                .map(|i| i + 1)
                .collect();
            if seen.insert(picked) {
                out.push(picked);
            }
        }
        out
    };
    lex_sort(&mut edges);
    Hypergraph::with_cap(n, edges, MAX_VERTICES)
}
