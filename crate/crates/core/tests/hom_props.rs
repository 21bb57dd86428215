use std::collections::BTreeSet;

use proptest::prelude::*;

use topohom::coloring::search;
use topohom::generate::{graphs_up_to, random_graph};
use topohom::graph::{disjoint_union, is_isomorphic};
use topohom::hom::{check_hom, find_colored_homs, find_homs, hom_equivalent, is_faithful, partition_check};
use topohom::oracle::brute_force_homs;
use topohom::{Graph, VertexMapping, WType};

fn graph(max_p: usize) -> impl Strategy<Value = Graph> {
    (1..=max_p, 0.0..1.0f64, any::<u64>()).prop_map(|(p, prob, seed)| random_graph(p, prob, seed))
}

fn every_map(p: usize, n: usize) -> impl Iterator<Item = VertexMapping> {
    (0..n.pow(p as u32)).map(move |mut code| {
        let mut img = vec![0; p];
        for slot in img.iter_mut().rev() {
            *slot = code % n + 1;
            code /= n;
        }
        VertexMapping::from_images(img)
    })
}

fn properly_colorable(g: &Graph, n: usize) -> bool {
    every_map(g.p(), n).any(|m| g.edges().iter().all(|&(u, v)| m.get(u) != m.get(v)))
}

fn inverse(m: &VertexMapping) -> VertexMapping {
    let mut inv = vec![0; m.len()];
    for (i, &x) in m.images().iter().enumerate() {
        inv[x - 1] = i + 1;
    }
    VertexMapping::from_images(inv)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn partition_form_matches_edge_form(g in graph(6), h in graph(6)) {
        for m in every_map(g.p(), h.p()) {
            prop_assert_eq!(check_hom(&g, &h, &m).unwrap(), partition_check(&g, &h, &m).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn search_matches_oracle(g in graph(5), h in graph(5)) {
        let fast: BTreeSet<Vec<usize>> = find_homs(&g, &h, usize::MAX).iter().map(|m| m.images().to_vec()).collect();
        let slow: BTreeSet<Vec<usize>> = brute_force_homs(&g, &h).iter().map(|m| m.images().to_vec()).collect();
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn faithful_bijection_is_isomorphism(g in graph(6), h in graph(6)) {
        for m in find_homs(&g, &h, 2000) {
            if m.is_bijective_onto(h.p()) && is_faithful(&g, &h, &m).unwrap() {
                prop_assert!(is_isomorphic(&g, &h));
                prop_assert!(check_hom(&h, &g, &inverse(&m)).unwrap());
            }
        }
    }

    #[test]
    fn automorphisms_are_two_sided_bijections(g in graph(6)) {
        let two_sided: BTreeSet<Vec<usize>> = find_homs(&g, &g, usize::MAX)
            .into_iter()
            .filter(|m| m.is_bijective_onto(g.p()) && check_hom(&g, &g, &inverse(m)).unwrap())
            .map(|m| m.images().to_vec())
            .collect();
        let brute: BTreeSet<Vec<usize>> = every_map(g.p(), g.p())
            .filter(|m| m.is_bijective_onto(g.p()))
            .filter(|m| g.edges().iter().all(|&(u, v)| g.has_edge(m.get(u), m.get(v))))
            .map(|m| m.images().to_vec())
            .collect();
        prop_assert_eq!(two_sided, brute);
    }

    #[test]
    fn complete_targets_are_colorings(g in graph(6), n in 1usize..=4) {
        let kn = Graph::complete(n).unwrap();
        prop_assert_eq!(!find_homs(&g, &kn, 1).is_empty(), properly_colorable(&g, n));
    }

    #[test]
    fn equivalent_targets_accept_the_same_sources(g in graph(6), h in graph(5)) {
        let doubled = disjoint_union(&h, &h);
        prop_assert!(hom_equivalent(&h, &doubled));
        prop_assert_eq!(find_homs(&g, &h, 1).is_empty(), find_homs(&g, &doubled, 1).is_empty());
    }

    #[test]
    fn composition_of_homs_is_a_hom(a in graph(5), b in graph(5), c in graph(5)) {
        let ab = find_homs(&a, &b, 4);
        let bc = find_homs(&b, &c, 4);
        for x in &ab {
            for y in &bc {
                prop_assert!(check_hom(&a, &c, &x.compose(y)).unwrap());
            }
        }
    }
}

/// Colored homomorphisms between small set-ordered graceful graphs.
fn colored_instances() -> Vec<(Graph, Vec<topohom::TotalColoring>)> {
    graphs_up_to(6)
        .into_iter()
        .filter(|g| g.is_connected() && (1..=6).contains(&g.q()))
        .map(|g| {
            let fs = search(&g, WType::SetOrderedGraceful, 6);
            (g, fs)
        })
        .filter(|(_, fs)| !fs.is_empty())
        .collect()
}

fn vertex_multiset(g: &Graph, f: &topohom::TotalColoring) -> Vec<u32> {
    let mut c: Vec<u32> = g.vertices().map(|v| f.vertex(v).unwrap()).collect();
    c.sort_unstable();
    c
}

#[test]
fn equal_color_multisets_force_isomorphism() {
    let inst = colored_instances();
    let mut checked = 0;
    for (g, fs) in &inst {
        for (h, hs) in &inst {
            if g.q() != h.q() {
                continue;
            }
            for f in fs {
                for fh in hs {
                    if vertex_multiset(g, f) != vertex_multiset(h, fh) {
                        continue;
                    }
                    for m in find_colored_homs(g, f, h, fh, WType::SetOrderedGraceful, usize::MAX).unwrap() {
                        assert!(m.is_bijective_onto(h.p()), "{g:?} -> {h:?}");
                        assert!(check_hom(h, g, &inverse(&m)).unwrap());
                        checked += 1;
                    }
                }
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn faithful_bijective_colored_homs_are_identities_of_colorings() {
    let inst = colored_instances();
    for (g, fs) in &inst {
        for (h, hs) in &inst {
            if g.p() != h.p() {
                continue;
            }
            for f in fs {
                for fh in hs {
                    for m in find_colored_homs(g, f, h, fh, WType::SetOrderedGraceful, usize::MAX).unwrap() {
                        if m.is_bijective_onto(h.p()) && is_faithful(g, h, &m).unwrap() {
                            assert!(is_isomorphic(g, h));
                            for v in g.vertices() {
                                assert_eq!(f.vertex(v), fh.vertex(m.get(v)));
                            }
                            for &(u, v) in g.edges() {
                                assert_eq!(f.edge(u, v), fh.edge(m.get(u), m.get(v)));
                            }
                        }
                    }
                }
            }
        }
    }
}
