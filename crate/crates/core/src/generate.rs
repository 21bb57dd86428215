//! Test graph families: exhaustive small graphs, trees, and seeded random
//! graphs.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{is_isomorphic, Edge, Graph};

fn invariant(g: &Graph) -> (usize, Vec<usize>, Vec<Vec<usize>>) {
    let mut nb: Vec<Vec<usize>> = g
        .vertices()
        .map(|v| {
            let mut d: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
            d.sort_unstable();
            d
        })
        .collect();
    nb.sort();
    (g.q(), g.degree_sequence(), nb)
}

/// Keeps one graph per isomorphism class, in first-seen order.
fn dedupe(graphs: impl IntoIterator<Item = Graph>) -> Vec<Graph> {
    let mut out: Vec<Graph> = Vec::new();
    let mut buckets: HashMap<_, Vec<usize>> = HashMap::new();
    for g in graphs {
        let bucket = buckets.entry(invariant(&g)).or_default();
        if !bucket.iter().any(|&i| is_isomorphic(&out[i], &g)) {
            bucket.push(out.len());
            out.push(g);
        }
    }
    out
}

/// One representative of every isomorphism class of graphs on `n` vertices.
pub fn graphs_on(n: usize) -> Vec<Graph> {
    assert!((1..=7).contains(&n), "exhaustive generation is for 1..=7 vertices");
    let pairs: Vec<Edge> = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect();
    dedupe((0u64..1 << pairs.len()).map(|mask| {
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        Graph::from_edge_list(n, edges).expect("valid pairs")
    }))
}

/// All graphs with `1..=max_p` vertices up to isomorphism.
pub fn graphs_up_to(max_p: usize) -> Vec<Graph> {
    (1..=max_p).flat_map(graphs_on).collect()
}

/// All trees on `n` vertices up to isomorphism, grown by adding leaves.
pub fn trees(n: usize) -> Vec<Graph> {
    assert!(n >= 1);
    let mut level = vec![Graph::empty(1).expect("one vertex")];
    for m in 2..=n {
        level = dedupe(level.iter().flat_map(|t| {
            t.vertices().map(move |v| {
                let mut edges = t.edges().to_vec();
                edges.push((v, m));
                Graph::from_edge_list(m, edges).expect("valid tree")
            })
        }));
    }
    level
}

/// `G(p, prob)` with a reproducible stream per seed.
pub fn random_graph(p: usize, prob: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<Edge> = (1..=p)
        .flat_map(|u| (u + 1..=p).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(prob))
        .collect();
    Graph::from_edge_list(p.max(1), edges).expect("valid pairs")
}

/// A random labelled tree: vertex `v > 1` hangs off a uniform earlier vertex.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<Edge> = (2..=n).map(|v| (rng.gen_range(1..v), v)).collect();
    Graph::from_edge_list(n.max(1), edges).expect("valid tree")
}
