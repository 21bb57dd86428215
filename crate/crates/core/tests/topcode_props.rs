use std::collections::BTreeSet;

use topohom::coloring::{search, verify};
use topohom::generate::graphs_up_to;
use topohom::graph::is_isomorphic;
use topohom::hom::find_colored_homs;
use topohom::lattice::{Admission, HomRegistry, RegistryEntry};
use topohom::topcode::{decode, encode, nsd_pipeline, nsd_solve, to_string, to_string_ordered, PipelineLimits, TopcodeMatrix};
use topohom::{Graph, TotalColoring, WType};

fn t_code() -> TopcodeMatrix {
    TopcodeMatrix::new(
        vec![6, 5, 6, 6, 6, 1, 1, 1, 1, 1],
        (1..=10).collect(),
        vec![7, 7, 9, 10, 11, 7, 8, 9, 10, 11],
    )
    .unwrap()
}

fn instances(max_q: usize, per_graph: usize) -> Vec<(Graph, TotalColoring, WType)> {
    let mut out = Vec::new();
    for g in graphs_up_to(6) {
        if !g.is_connected() || g.q() == 0 || g.q() > max_q {
            continue;
        }
        for w in [WType::SetOrderedGraceful, WType::Graceful] {
            for f in search(&g, w, per_graph) {
                out.push((g.clone(), f, w));
            }
        }
    }
    out
}

#[test]
fn encode_decode_encode_is_identity() {
    for (g, f, w) in instances(6, 2) {
        let t = encode(&g, &f, w).unwrap();
        let cands = decode(&t, w, false, 64).unwrap();
        assert_eq!(encode(&cands[0].0, &cands[0].1, w).unwrap(), t);
        assert!(cands.iter().any(|(h, _)| is_isomorphic(h, &g)), "{g:?} not among decodes");
        for (h, fh) in &cands {
            assert!(verify(h, fh, w).unwrap().passed());
            assert_eq!(encode(h, fh, w).unwrap(), t);
        }
    }
}

#[test]
fn canonical_strings_round_trip() {
    for (g, f, w) in instances(5, 4) {
        let t = encode(&g, &f, w).unwrap();
        let sols = nsd_solve(&to_string(&t), g.q(), w, true, usize::MAX).unwrap();
        assert!(sols.iter().any(|s| s.matrix == t));
        if t.top().iter().chain(t.bot()).all(|&c| c < 10) && g.q() < 10 {
            assert_eq!(sols.len(), 1, "single-digit string splits one way");
        }
    }
}

#[test]
fn free_assignment_round_trip() {
    for (g, f, w) in instances(4, 2) {
        let t = encode(&g, &f, w).unwrap();
        let sols = nsd_solve(&to_string(&t), g.q(), w, false, usize::MAX).unwrap();
        assert!(sols.iter().any(|s| s.matrix == t));
        for s in &sols {
            assert!(s.matrix.validate(w).is_ok());
            assert_eq!(s.widths.iter().sum::<usize>(), to_string(&t).len());
        }
    }
}

#[test]
fn reference_candidates_are_pairwise_distinct() {
    let cands = decode(&t_code(), WType::SetOrderedGraceful, true, usize::MAX).unwrap();
    assert_eq!(cands[0].0.p(), 8);
    let sizes: Vec<usize> = cands.iter().map(|(g, _)| g.p()).collect();
    assert!(sizes.windows(2).skip(1).all(|w| w[0] <= w[1]));
    for (i, (g, f)) in cands.iter().enumerate().take(40) {
        assert!(g.is_connected());
        for (h, fh) in cands.iter().skip(i + 1).take(40) {
            let same = g.p() == h.p()
                && topohom::graph::find_isomorphism_with(g, h, |a, b| f.vertex(a) == fh.vertex(b)).is_some();
            assert!(!same);
        }
    }
}

#[test]
fn reference_registry_of_merge_homs() {
    let wt = WType::SetOrderedGraceful;
    let cands = decode(&t_code(), wt, true, usize::MAX).unwrap();
    let (h, fh) = cands[0].clone();
    let mut reg = HomRegistry::new(h.clone(), wt);
    for (g, f) in cands.iter().skip(1).take(5) {
        let map = find_colored_homs(g, f, &h, &fh, wt, 1).unwrap().remove(0);
        let entry = RegistryEntry { source: g.clone(), source_coloring: f.clone(), target_coloring: fh.clone(), map };
        assert!(matches!(reg.add(entry.clone()).unwrap(), Admission::Added(_)));
        assert!(matches!(reg.add(entry).unwrap(), Admission::Duplicate(_)));
    }
    assert_eq!(reg.len(), 5);
    assert!(reg.select(&[0, 0, 1, 0, 0]).is_some());
    assert!(reg.select(&[0, 1, 1, 0, 0]).is_none());
    assert!(reg.select(&[0; 5]).is_none());
}

/// Equal vertex and edge color *sets* do not force an isomorphism: each
/// non-maximal decode maps onto the maximal merge with the same colors.
#[test]
fn equal_color_sets_do_not_force_isomorphism() {
    let wt = WType::SetOrderedGraceful;
    let cands = decode(&t_code(), wt, true, 2).unwrap();
    let (h, fh) = &cands[0];
    let (g, f) = &cands[1];
    let colors = |x: &TotalColoring| x.vertex_colors().values().copied().collect::<BTreeSet<u32>>();
    let edges = |x: &TotalColoring| x.edge_colors().values().copied().collect::<BTreeSet<u32>>();
    assert_eq!(colors(f), colors(fh));
    assert_eq!(edges(f), edges(fh));
    assert!(!find_colored_homs(g, f, h, fh, wt, 1).unwrap().is_empty());
    assert!(!is_isomorphic(g, h));
}

#[test]
fn pipeline_on_reference_matrix() {
    let s = to_string(&t_code());
    let limits = PipelineLimits { solutions: 4, candidates: 12, pairings: 64 };
    let out = nsd_pipeline(&s, 10, WType::SetOrderedGraceful, true, limits).unwrap();
    assert_eq!(out.len(), 1);
    assert_eq!(out[0].solution.matrix, t_code());
    let onto_max = out[0].homs.iter().filter(|h| h.target == 0).count();
    assert!(onto_max >= 5);
    let junk = nsd_pipeline("1234", 10, WType::SetOrderedGraceful, true, limits).unwrap();
    assert!(junk.is_empty());
}

/// Swapping equal cells never changes the string. The converse fails when
/// adjacent renderings concatenate alike: "11" + "1" and "1" + "11".
#[test]
fn transpositions_of_reference_matrix() {
    let t = t_code();
    let cell = |i: usize| {
        let (x, y, z) = t.column(i / 3);
        [x, y, z][i % 3]
    };
    let mut hidden = Vec::new();
    for a in 0..30 {
        for b in a + 1..30 {
            let mut order: Vec<usize> = (0..30).collect();
            order.swap(a, b);
            let changed = to_string_ordered(&t, &order).unwrap() != to_string(&t);
            if cell(a) == cell(b) {
                assert!(!changed);
            } else if !changed {
                hidden.push((a, b));
            }
        }
    }
    assert_eq!(hidden, vec![(14, 15)]);
}
