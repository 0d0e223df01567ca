use altermatic_cli::formats::{parse_coloring, parse_hypergraph, serialize_coloring, serialize_hypergraph};
use altermatic_core::{random_hypergraph, Coloring};
use proptest::prelude::*;

proptest! {
    #[test]
    fn hypergraph_round_trip_keeps_edge_order(n in 1usize..40, e in 1usize..30, seed in any::<u64>(), shuffle in any::<u64>()) {
        let hi = n.min(5);
        let h = random_hypergraph(n, e.min(n), 1..=hi, seed).unwrap();
        // reorder edges so the test is not limited to lexicographic files
        let mut edges = h.edges().to_vec();
        let len = edges.len();
        if len > 1 {
            edges.rotate_left((shuffle as usize) % len);
        }
        let h = altermatic_core::Hypergraph::new(n, edges).unwrap();
        let text = serialize_hypergraph(&h);
        prop_assert_eq!(parse_hypergraph(&text, "t", 63).unwrap(), h);
    }

    #[test]
    fn coloring_round_trip(colors in proptest::collection::vec(1usize..50, 0..60)) {
        let c = Coloring::from_assignment(colors.clone()).unwrap();
        let back = parse_coloring(&serialize_coloring(&c), "c", colors.len()).unwrap();
        prop_assert_eq!(back.as_slice(), c.as_slice());
    }

    #[test]
    fn noise_lines_are_ignored(n in 2usize..10, seed in any::<u64>()) {
        let h = random_hypergraph(n, n, 1..=2, seed).unwrap();
        let noisy: String = serialize_hypergraph(&h)
            .lines()
            .map(|l| format!("  {l}  # note\n\n"))
            .collect();
        prop_assert_eq!(parse_hypergraph(&format!("# generated\n{noisy}"), "t", 63).unwrap(), h);
    }
}
