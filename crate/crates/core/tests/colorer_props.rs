use altermatic_core::colorer::{chromatic_at_most, chromatic_number, color_with_at_most, is_proper};
use altermatic_core::oracle::chromatic_exhaustive;
use altermatic_core::{complete_uniform, kneser_graph, SimpleGraph};
use proptest::prelude::*;

fn small_graph(max_v: usize) -> impl Strategy<Value = SimpleGraph> {
    (0..=max_v).prop_flat_map(|v| {
        let pairs: Vec<(usize, usize)> = (0..v).flat_map(|a| (a + 1..v).map(move |b| (a, b))).collect();
        let count = pairs.len();
        proptest::collection::vec(any::<bool>(), count).prop_map(move |keep| {
            let edges: Vec<_> = pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(p, _)| *p).collect();
            SimpleGraph::from_edges(v, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn chromatic_number_matches_exhaustive_oracle(g in small_graph(8)) {
        let (chi, c) = chromatic_number(&g);
        prop_assert_eq!(chi, chromatic_exhaustive(&g));
        prop_assert!(is_proper(&g, &c).unwrap());
        prop_assert_eq!(c.colors_used(), chi);
        prop_assert_eq!(c.palette(), chi);
    }

    #[test]
    fn decision_is_monotone_in_t(g in small_graph(9)) {
        let answers: Vec<bool> = (0..=g.vcount() + 1).map(|t| chromatic_at_most(&g, t)).collect();
        prop_assert!(answers.windows(2).all(|w| !w[0] || w[1]));
        prop_assert!(answers[g.vcount()]);
    }

    #[test]
    fn decision_witness_is_proper(g in small_graph(9), t in 1usize..5) {
        if let Some(c) = color_with_at_most(&g, t) {
            prop_assert!(is_proper(&g, &c).unwrap());
            prop_assert!(c.as_slice().iter().all(|&x| x <= t));
        } else {
            prop_assert!(chromatic_exhaustive(&g) > t);
        }
    }
}

#[test]
fn kneser_formula_on_larger_family() {
    for (m, r) in [(9, 2), (8, 3), (9, 3), (9, 4)] {
        let (chi, _) = chromatic_number(&kneser_graph(&complete_uniform(m, r).unwrap()));
        assert_eq!(chi, m - 2 * r + 2, "KG({m},{r})");
    }
}
