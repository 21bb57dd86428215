use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use topohom::generate::random_graph;
use topohom::graph::{bipartition, disjoint_union, find_isomorphism, is_isomorphic};
use topohom::Graph;

fn graph(max_p: usize) -> impl Strategy<Value = Graph> {
    (1..=max_p, 0.0..1.0f64, any::<u64>()).prop_map(|(p, prob, seed)| random_graph(p, prob, seed))
}

fn relabel(g: &Graph, seed: u64) -> Graph {
    let mut perm: Vec<usize> = g.vertices().collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    Graph::from_edge_list(g.p(), g.edges().iter().map(|&(u, v)| (perm[u - 1], perm[v - 1]))).unwrap()
}

/// Tries all 2^p side assignments.
fn two_colorable(g: &Graph) -> bool {
    (0u32..1 << g.p()).any(|mask| g.edges().iter().all(|&(u, v)| (mask >> (u - 1) & 1) != (mask >> (v - 1) & 1)))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for rest in permutations(n - 1) {
        for i in 0..=rest.len() {
            let mut p = rest.clone();
            p.insert(i, n);
            out.push(p);
        }
    }
    out
}

fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.p() == h.p()
        && g.q() == h.q()
        && permutations(g.p())
            .iter()
            .any(|perm| g.edges().iter().all(|&(u, v)| h.has_edge(perm[u - 1], perm[v - 1])))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn bipartition_iff_no_odd_cycle(g in graph(10)) {
        let b = bipartition(&g);
        prop_assert_eq!(b.is_some(), two_colorable(&g));
        if let Some(b) = b {
            prop_assert!(b.separates(&g));
        }
    }

    #[test]
    fn union_sizes(g in graph(8), h in graph(8)) {
        let u = disjoint_union(&g, &h);
        prop_assert_eq!(u.p(), g.p() + h.p());
        prop_assert_eq!(u.q(), g.q() + h.q());
    }

    #[test]
    fn text_round_trip(g in graph(9)) {
        prop_assert_eq!(Graph::from_text(&g.to_text()).unwrap(), g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn isomorphism_matches_brute_force(g in graph(7), seed in any::<u64>(), other in graph(7), same in any::<bool>()) {
        let h = if same { relabel(&g, seed) } else { other };
        let fast = is_isomorphic(&g, &h);
        prop_assert_eq!(fast, brute_isomorphic(&g, &h));
        if let Some(m) = find_isomorphism(&g, &h) {
            prop_assert!(g.edges().iter().all(|&(u, v)| h.has_edge(m[u], m[v])));
        }
    }
}
