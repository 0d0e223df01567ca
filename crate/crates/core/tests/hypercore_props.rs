use altermatic_core::oracle::{all_sign_vectors, alt_naive, longest_alternating_subsequences};
use altermatic_core::{alt, apply_order, restrict, support_size, Hypergraph, LinearOrder, SignVector, VertexSet};
use proptest::prelude::*;

fn sign_vector(max_n: usize) -> impl Strategy<Value = SignVector> {
    (1..=max_n)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(0u8..3, n)))
        .prop_map(|(n, signs)| {
            let mut reds = VertexSet::EMPTY;
            let mut blues = VertexSet::EMPTY;
            for (i, s) in signs.into_iter().enumerate() {
                match s {
                    1 => reds.insert(i + 1),
                    2 => blues.insert(i + 1),
                    _ => {}
                }
            }
            SignVector::new(n, reds, blues).unwrap()
        })
}

/// `x` together with a random super-vector obtained by filling some zero positions.
fn nested_pair(max_n: usize) -> impl Strategy<Value = (SignVector, SignVector)> {
    sign_vector(max_n).prop_flat_map(|x| {
        let n = x.n();
        (Just(x), proptest::collection::vec(0u8..3, n)).prop_map(|(x, fill)| {
            let mut reds = x.reds();
            let mut blues = x.blues();
            for (i, f) in fill.into_iter().enumerate() {
                let p = i + 1;
                if x.support().contains(p) {
                    continue;
                }
                match f {
                    1 => reds.insert(p),
                    2 => blues.insert(p),
                    _ => {}
                }
            }
            (x, SignVector::new(x.n(), reds, blues).unwrap())
        })
    })
}

fn permutation(n: usize) -> impl Strategy<Value = LinearOrder> {
    Just((1..=n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|p| LinearOrder::new(p).unwrap())
}

#[test]
fn alt_is_monotone_exhaustively_up_to_six() {
    for n in 0..=6 {
        let xs = all_sign_vectors(n);
        for x in &xs {
            for y in &xs {
                if x.is_subset(y) {
                    assert!(alt(x) <= alt(y), "{x} <= {y}");
                }
            }
        }
    }
}

#[test]
fn longest_alternation_starts_with_first_sign() {
    for n in 1..=8 {
        for x in all_sign_vectors(n) {
            let Some(first) = x.support().first() else { continue };
            let red_first = x.reds().contains(first);
            let seqs = longest_alternating_subsequences(&x);
            assert!(!seqs.is_empty());
            assert!(seqs.iter().all(|s| x.reds().contains(s[0]) == red_first), "{x}");
        }
    }
}

proptest! {
    #[test]
    fn scan_matches_subsequence_enumeration(x in sign_vector(12)) {
        prop_assert_eq!(alt(&x), alt_naive(&x));
    }

    #[test]
    fn alt_bounded_by_support(x in sign_vector(40)) {
        prop_assert!(alt(&x) <= support_size(&x));
        prop_assert!(support_size(&x) <= x.n());
    }

    #[test]
    fn alt_monotone_sampled((x, y) in nested_pair(12)) {
        prop_assert!(x.is_subset(&y));
        prop_assert!(alt(&x) <= alt(&y));
    }

    #[test]
    fn word_round_trip(x in sign_vector(30)) {
        prop_assert_eq!(SignVector::from_word(&x.to_word()).unwrap(), x);
    }

    #[test]
    fn apply_order_is_a_bijection(x in sign_vector(10), seed in any::<u64>()) {
        let n = x.n();
        let mut perm: Vec<usize> = (1..=n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let sigma = LinearOrder::new(perm).unwrap();
        let xs = apply_order(&x, &sigma).unwrap();
        prop_assert_eq!(alt(&xs) <= n, true);
        let back = SignVector::new(n, sigma.to_positions(xs.reds()), sigma.to_positions(xs.blues())).unwrap();
        prop_assert_eq!(back, x);
        prop_assert_eq!(apply_order(&x, &LinearOrder::identity(n)).unwrap(), x);
    }

    #[test]
    fn restrict_is_monotone(
        (x, y) in nested_pair(7),
        masks in proptest::collection::hash_set(1u64..128, 1..12),
        sigma in permutation(7),
    ) {
        let n = x.n();
        let full = VertexSet::full(n).bits();
        let edges: std::collections::BTreeSet<u64> =
            masks.into_iter().map(|m| m & full).filter(|&m| m != 0).collect();
        let h = Hypergraph::new(n, edges.into_iter().map(VertexSet::from_bits).collect()).unwrap();
        let sigma = LinearOrder::new(sigma.as_slice().iter().copied().filter(|&v| v <= n).collect()).unwrap();
        let rx = restrict(&h, &x, &sigma).unwrap();
        let ry = restrict(&h, &y, &sigma).unwrap();
        prop_assert!(rx.source.iter().all(|i| ry.source.contains(i)));
        for (e, &i) in rx.edges.iter().zip(&rx.source) {
            prop_assert_eq!(*e, h.edges()[i]);
        }
    }
}
