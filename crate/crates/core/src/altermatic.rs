//! `alt_σ(H, k)`, `alt(H, k)` and the resulting chromatic lower bound
//! `n - alt(H, k) + k - 1` for `KG(H)`.
//!
//! A sign vector `X` is *feasible* for `(H, σ, k)` when `KG(H|_{X_σ})` is `(k-1)`-colorable
//! (for `k = 1`: the restriction has no edge). Feasibility is closed under taking
//! sub-vectors and `alt` is monotone, so `alt_σ` is found by a depth-first search over
//! positions `1..n` that abandons a branch as soon as the partial vector turns infeasible.
//! The search also stops a branch when the positions left cannot lift `alt` above the best
//! value found so far.
//!
//! Work happens in *position space*: edge `A` is replaced by the set of positions its
//! vertices occupy under `σ`, so `A ⊆ X^R_σ` becomes a plain mask test against `X^R`.

use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::colorer::{chromatic_at_most, chromatic_number};
use crate::error::{invalid, Error, Result};
use crate::hypercore::{restrict, Hypergraph, LinearOrder, SignVector};
use crate::kneser::{kneser_graph, kneser_of_edges};
use crate::limits::DEFAULT_FACTORIAL_CAP;
use crate::par::{map_collect, Parallelism};
use crate::vset::VertexSet;

/// How the orderings for `alt(H, k)` were chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SigmaMode {
    /// One caller-supplied ordering.
    Single,
    /// All `n!` orderings; the value is exactly `alt(H, k)`.
    Exhaustive,
    /// Identity plus seeded random orderings; the value is an upper estimate of
    /// `alt(H, k)` and the bound is valid but possibly weaker.
    Sampled,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderingSelection {
    Exhaustive,
    Sampled { count: usize, seed: u64 },
}

#[derive(Clone, Copy, Debug)]
pub struct AltMinOptions {
    pub selection: OrderingSelection,
    pub factorial_cap: usize,
    pub parallelism: Parallelism,
}

impl AltMinOptions {
    pub fn exhaustive() -> Self {
        AltMinOptions {
            selection: OrderingSelection::Exhaustive,
            factorial_cap: DEFAULT_FACTORIAL_CAP,
            parallelism: Parallelism::default(),
        }
    }

    pub fn sampled(count: usize, seed: u64) -> Self {
        AltMinOptions {
            selection: OrderingSelection::Sampled { count, seed },
            ..Self::exhaustive()
        }
    }

    pub fn with_parallelism(mut self, p: Parallelism) -> Self {
        self.parallelism = p;
        self
    }

    pub fn with_factorial_cap(mut self, cap: usize) -> Self {
        self.factorial_cap = cap;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AltReport {
    pub n: usize,
    pub k: usize,
    pub alt_value: usize,
    /// The word `X` (over positions) attaining `alt_value`; `X_σ` gives the vertex sides.
    pub witness: SignVector,
    pub sigma: LinearOrder,
    /// `n - alt_value + k - 1`.
    pub bound: usize,
    pub exact_chi: Option<usize>,
    pub sigma_mode: SigmaMode,
    /// Orderings actually searched (reversal pairs share one search).
    pub orderings_searched: usize,
}

/// `n - alt + k - 1`.
pub fn lower_bound(h: &Hypergraph, k: usize, report: &AltReport) -> usize {
    debug_assert_eq!(report.k, k);
    debug_assert_eq!(report.n, h.n());
    h.n() - report.alt_value + k - 1
}

/// Direct (unmemoized) feasibility test of `X` for `(H, σ, k)`.
pub fn feasible(h: &Hypergraph, x: &SignVector, sigma: &LinearOrder, k: usize) -> Result<bool> {
    check_k(k)?;
    check_sigma(h, sigma)?;
    let r = restrict(h, x, sigma)?;
    Ok(if k == 1 {
        r.is_empty()
    } else {
        chromatic_at_most(&kneser_of_edges(&r.edges), k - 1)
    })
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        return invalid("k must be at least 1");
    }
    Ok(())
}

fn check_sigma(h: &Hypergraph, sigma: &LinearOrder) -> Result<()> {
    if sigma.n() != h.n() {
        return invalid(format!(
            "ordering has length {} but the hypergraph has {} vertices",
            sigma.n(),
            h.n()
        ));
    }
    Ok(())
}

/// `alt_σ(H, k)` with a witness word.
pub fn alt_sigma(h: &Hypergraph, sigma: &LinearOrder, k: usize) -> Result<AltReport> {
    check_k(k)?;
    check_sigma(h, sigma)?;
    let out = AltSearch::new(h, sigma, k).run(None);
    Ok(report(h, k, sigma.clone(), out, SigmaMode::Single, 1))
}

fn report(
    h: &Hypergraph,
    k: usize,
    sigma: LinearOrder,
    out: SearchOutcome,
    sigma_mode: SigmaMode,
    orderings_searched: usize,
) -> AltReport {
    let n = h.n();
    AltReport {
        n,
        k,
        alt_value: out.best,
        witness: SignVector::new_unchecked(n, out.reds, out.blues),
        sigma,
        bound: n - out.best + k - 1,
        exact_chi: None,
        sigma_mode,
        orderings_searched,
    }
}

/// Orderings searched for `alt(H, k)`, in the documented order.
///
/// Exhaustive: permutations in lexicographic order, keeping only those whose first entry
/// is smaller than their last (a word and its reversal have the same `alt` and the same
/// restriction, so `alt_σ = alt_{reverse σ}`). The lexicographically first minimizer always
/// survives this filter. Sampled: the identity, then `count` seeded shuffles.
pub fn candidate_orderings(n: usize, selection: OrderingSelection, factorial_cap: usize) -> Result<Vec<LinearOrder>> {
    match selection {
        OrderingSelection::Exhaustive => {
            if n > factorial_cap {
                return Err(Error::ResourceLimit(format!(
                    "exhaustive ordering search needs n <= {factorial_cap} (got n = {n}); use sampled mode"
                )));
            }
            Ok((1..=n)
                .permutations(n)
                .filter(|p| n == 1 || p[0] < p[n - 1])
                .map(|p| LinearOrder::new(p).expect("permutation"))
                .collect())
        }
        OrderingSelection::Sampled { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut out = Vec::with_capacity(count + 1);
            out.push(LinearOrder::identity(n));
            let mut perm: Vec<usize> = (1..=n).collect();
            for _ in 0..count {
                perm.shuffle(&mut rng);
                out.push(LinearOrder::new(perm.clone()).expect("permutation"));
            }
            Ok(out)
        }
    }
}

/// `alt(H, k)`: the minimum of `alt_σ` over the selected orderings.
///
/// Ties go to the first minimizing ordering in [`candidate_orderings`] order. Orderings are
/// searched concurrently; a search may stop early once it proves its value exceeds the
/// current minimum, which never affects the minimizer, so results match a sequential run.
pub fn alt_min(h: &Hypergraph, k: usize, opts: &AltMinOptions) -> Result<AltReport> {
    check_k(k)?;
    let orders = candidate_orderings(h.n(), opts.selection, opts.factorial_cap)?;
    let current = AtomicUsize::new(usize::MAX);
    let outcomes = map_collect(&orders, opts.parallelism, |sigma| {
        let threshold = current.load(AtomicOrdering::Relaxed);
        let out = AltSearch::new(h, sigma, k).run((threshold != usize::MAX).then_some(threshold));
        if out.exact {
            current.fetch_min(out.best, AtomicOrdering::Relaxed);
        }
        out
    });
    let (idx, best) = outcomes
        .iter()
        .enumerate()
        .filter(|(_, o)| o.exact)
        .min_by_key(|(i, o)| (o.best, *i))
        .ok_or_else(|| Error::InvalidArgument("no ordering to search".into()))?;
    let mode = match opts.selection {
        OrderingSelection::Exhaustive => SigmaMode::Exhaustive,
        OrderingSelection::Sampled { .. } => SigmaMode::Sampled,
    };
    Ok(report(h, k, orders[idx].clone(), best.clone(), mode, orders.len()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReproBundle {
    pub hypergraph: Hypergraph,
    pub sigma: LinearOrder,
    pub witness: SignVector,
    pub k: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub bound: usize,
    pub chi: usize,
    pub holds: bool,
    pub tight: bool,
    pub report: AltReport,
    /// Present only when `holds` is false, which can only come from a bug in this crate.
    pub repro: Option<ReproBundle>,
}

/// Computes the altermatic bound and `χ(KG(H))` and checks `χ >= bound`.
pub fn verify_theorem(h: &Hypergraph, k: usize, opts: &AltMinOptions) -> Result<Verification> {
    check_k(k)?;
    let (chi, _) = chromatic_number(&kneser_graph(h));
    if k > chi + 1 {
        return invalid(format!("k = {k} exceeds chi + 1 = {}", chi + 1));
    }
    let mut report = alt_min(h, k, opts)?;
    report.exact_chi = Some(chi);
    let bound = lower_bound(h, k, &report);
    let holds = chi >= bound;
    let repro = (!holds).then(|| ReproBundle {
        hypergraph: h.clone(),
        sigma: report.sigma.clone(),
        witness: report.witness,
        k,
    });
    Ok(Verification {
        bound,
        chi,
        holds,
        tight: chi == bound,
        report,
        repro,
    })
}

#[derive(Clone, Debug)]
struct SearchOutcome {
    best: usize,
    reds: VertexSet,
    blues: VertexSet,
    /// False when the search stopped after exceeding the caller's threshold.
    exact: bool,
}

/// Depth-first search for `alt_σ(H, k)` over one ordering.
struct AltSearch {
    n: usize,
    k: usize,
    /// Edge masks in position space.
    edges: Vec<VertexSet>,
    /// Indices of edges whose largest position is `p`, at `by_last[p]`.
    by_last: Vec<Vec<usize>>,
    /// Currently restricted edges (stack).
    restricted: Vec<usize>,
    memo: HashMap<Vec<u64>, bool>,
    reds: VertexSet,
    blues: VertexSet,
    best: usize,
    best_reds: VertexSet,
    best_blues: VertexSet,
    stop_above: Option<usize>,
    stopped: bool,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Red,
    Blue,
}

impl AltSearch {
    fn new(h: &Hypergraph, sigma: &LinearOrder, k: usize) -> Self {
        let n = h.n();
        let edges: Vec<VertexSet> = h.edges().iter().map(|&e| sigma.to_positions(e)).collect();
        let mut by_last = vec![Vec::new(); n + 1];
        for (i, e) in edges.iter().enumerate() {
            by_last[e.last().expect("edges are nonempty")].push(i);
        }
        AltSearch {
            n,
            k,
            edges,
            by_last,
            restricted: Vec::new(),
            memo: HashMap::new(),
            reds: VertexSet::EMPTY,
            blues: VertexSet::EMPTY,
            best: 0,
            best_reds: VertexSet::EMPTY,
            best_blues: VertexSet::EMPTY,
            stop_above: None,
            stopped: false,
        }
    }

    fn run(mut self, stop_above: Option<usize>) -> SearchOutcome {
        self.stop_above = stop_above;
        self.dfs(1, 0, None);
        SearchOutcome {
            best: self.best,
            reds: self.best_reds,
            blues: self.best_blues,
            exact: !self.stopped,
        }
    }

    /// Visits the feasible node whose positions `< p` are assigned.
    fn dfs(&mut self, p: usize, alt: usize, last: Option<Side>) {
        if alt > self.best {
            self.best = alt;
            self.best_reds = self.reds;
            self.best_blues = self.blues;
            if self.stop_above.is_some_and(|t| alt > t) {
                self.stopped = true;
                return;
            }
        }
        if p > self.n || alt + (self.n + 1 - p) <= self.best {
            return;
        }
        // Alternating sign first, then repeating sign, then zero. A leading blue is the
        // mirror image of a leading red, so the first nonzero entry is always red.
        let branches: &[Option<Side>] = match last {
            None => &[Some(Side::Red), None],
            Some(Side::Red) => &[Some(Side::Blue), Some(Side::Red), None],
            Some(Side::Blue) => &[Some(Side::Red), Some(Side::Blue), None],
        };
        for &branch in branches {
            match branch {
                None => self.dfs(p + 1, alt, last),
                Some(side) => {
                    let mark = self.restricted.len();
                    match side {
                        Side::Red => self.reds.insert(p),
                        Side::Blue => self.blues.insert(p),
                    }
                    if self.admit(p, side, mark) {
                        let next = if last == Some(side) { alt } else { alt + 1 };
                        self.dfs(p + 1, next, Some(side));
                    }
                    self.restricted.truncate(mark);
                    match side {
                        Side::Red => self.reds.remove(p),
                        Side::Blue => self.blues.remove(p),
                    }
                }
            }
            if self.stopped {
                return;
            }
        }
    }

    /// Pushes the edges that position `p` completes on `side`; reports feasibility.
    fn admit(&mut self, p: usize, side: Side, mark: usize) -> bool {
        let mask = match side {
            Side::Red => self.reds,
            Side::Blue => self.blues,
        };
        for &i in &self.by_last[p] {
            if self.edges[i].is_subset(mask) {
                self.restricted.push(i);
            }
        }
        if self.restricted.len() == mark {
            return true;
        }
        match self.k {
            1 => false,
            2 => {
                // KG of the restriction must be edgeless: restricted edges pairwise meet.
                let (old, new) = self.restricted.split_at(mark);
                new.iter().enumerate().all(|(j, &a)| {
                    old.iter()
                        .chain(&new[..j])
                        .all(|&b| !self.edges[a].is_disjoint(self.edges[b]))
                })
            }
            k => {
                let mut key = vec![0u64; self.edges.len().div_ceil(64)];
                for &i in &self.restricted {
                    key[i / 64] |= 1 << (i % 64);
                }
                if let Some(&f) = self.memo.get(&key) {
                    return f;
                }
                let sub: Vec<VertexSet> = self.restricted.iter().map(|&i| self.edges[i]).collect();
                let f = chromatic_at_most(&kneser_of_edges(&sub), k - 1);
                self.memo.insert(key, f);
                f
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kneser::{complete_uniform, schrijver_hypergraph};
    use crate::oracle;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn feasible_examples() {
        let h = complete_uniform(4, 2).unwrap();
        let id = LinearOrder::identity(4);
        assert!(feasible(&h, &SignVector::zero(4), &id, 1).unwrap());
        let x = SignVector::new(4, set(&[1, 2]), VertexSet::EMPTY).unwrap();
        assert!(!feasible(&h, &x, &id, 1).unwrap());
        let x = SignVector::new(4, set(&[1, 2]), set(&[3, 4])).unwrap();
        assert!(!feasible(&h, &x, &id, 2).unwrap());
        assert!(feasible(&h, &x, &id, 3).unwrap());
        assert!(feasible(&h, &x, &id, 0).is_err());
    }

    #[test]
    fn alt_sigma_examples() {
        let h = complete_uniform(4, 2).unwrap();
        let r = alt_sigma(&h, &LinearOrder::identity(4), 1).unwrap();
        assert_eq!(r.alt_value, 2);
        assert_eq!(r.witness.alt(), 2);
        assert!(feasible(&h, &r.witness, &r.sigma, 1).unwrap());
        assert_eq!(r.bound, 2);

        let h = complete_uniform(6, 3).unwrap();
        assert_eq!(alt_sigma(&h, &LinearOrder::identity(6), 1).unwrap().alt_value, 4);

        let h = Hypergraph::new(5, vec![]).unwrap();
        let r = alt_sigma(&h, &LinearOrder::identity(5), 1).unwrap();
        assert_eq!(r.alt_value, 5);
        assert_eq!(r.bound, 0);
    }

    #[test]
    fn alt_sigma_is_full_when_k_exceeds_chi() {
        for h in [complete_uniform(5, 2).unwrap(), schrijver_hypergraph(6, 2).unwrap()] {
            let (chi, _) = chromatic_number(&kneser_graph(&h));
            let r = alt_sigma(&h, &LinearOrder::identity(h.n()), chi + 1).unwrap();
            assert_eq!(r.alt_value, h.n());
            assert_eq!(r.bound, chi);
        }
    }

    #[test]
    fn alt_min_on_petersen_is_order_independent() {
        let h = complete_uniform(5, 2).unwrap();
        let r = alt_min(&h, 1, &AltMinOptions::exhaustive()).unwrap();
        assert_eq!(r.alt_value, 2);
        assert_eq!(r.sigma_mode, SigmaMode::Exhaustive);
        assert!(r.sigma.is_identity());
        assert_eq!(lower_bound(&h, 1, &r), 3);
        for p in (1..=5).permutations(5) {
            let sigma = LinearOrder::new(p).unwrap();
            assert_eq!(alt_sigma(&h, &sigma, 1).unwrap().alt_value, 2);
        }
    }

    #[test]
    fn alt_min_sampled_and_caps() {
        let h = complete_uniform(9, 2).unwrap();
        assert!(alt_min(&h, 1, &AltMinOptions::exhaustive()).is_err());
        let r = alt_min(&h, 1, &AltMinOptions::sampled(4, 3)).unwrap();
        assert_eq!(r.sigma_mode, SigmaMode::Sampled);
        assert_eq!(r.orderings_searched, 5);
        assert_eq!(r.alt_value, 2);
        assert_eq!(r.bound, 7);
    }

    #[test]
    fn alt_min_empty_edge_set() {
        let h = Hypergraph::new(4, vec![]).unwrap();
        let r = alt_min(&h, 1, &AltMinOptions::exhaustive()).unwrap();
        assert_eq!(r.alt_value, 4);
        assert_eq!(lower_bound(&h, 1, &r), 0);
        assert_eq!(chromatic_number(&kneser_graph(&h)).0, 0);
    }

    #[test]
    fn parallel_matches_sequential() {
        for seed in 0..6 {
            let h = crate::kneser::random_hypergraph(7, 9, 1..=3, seed).unwrap();
            for k in 1..=2 {
                let seq = alt_min(&h, k, &AltMinOptions::exhaustive().with_parallelism(Parallelism::Sequential)).unwrap();
                let par = alt_min(&h, k, &AltMinOptions::exhaustive().with_parallelism(Parallelism::Parallel)).unwrap();
                assert_eq!(seq, par);
            }
        }
    }

    #[test]
    fn exhaustive_min_matches_brute_force_over_all_orderings() {
        for seed in 0..4 {
            let h = crate::kneser::random_hypergraph(5, 6, 1..=3, 100 + seed).unwrap();
            for k in 1..=3 {
                let fast = alt_min(&h, k, &AltMinOptions::exhaustive()).unwrap();
                let brute = (1..=5)
                    .permutations(5)
                    .map(|p| oracle::alt_sigma_naive(&h, &LinearOrder::new(p).unwrap(), k))
                    .min()
                    .unwrap();
                assert_eq!(fast.alt_value, brute, "seed {seed} k {k}");
            }
        }
    }

    #[test]
    fn verify_on_petersen_and_c5() {
        let v = verify_theorem(&complete_uniform(5, 2).unwrap(), 1, &AltMinOptions::exhaustive()).unwrap();
        assert_eq!((v.bound, v.chi, v.holds, v.tight), (3, 3, true, true));
        assert!(v.repro.is_none());

        let v = verify_theorem(&schrijver_hypergraph(5, 2).unwrap(), 1, &AltMinOptions::exhaustive()).unwrap();
        assert_eq!(v.chi, 3);
        assert!(v.holds);

        assert!(verify_theorem(&complete_uniform(5, 2).unwrap(), 5, &AltMinOptions::exhaustive()).is_err());
    }

    #[test]
    fn verify_random_k2() {
        let h = crate::kneser::random_hypergraph(6, 10, 1..=3, 2024).unwrap();
        let v = verify_theorem(&h, 2, &AltMinOptions::exhaustive()).unwrap();
        assert!(v.holds);
    }
}
