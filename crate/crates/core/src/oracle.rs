//! Exhaustive reference implementations.
//!
//! These enumerate every candidate and share no search code with [`hom`] or
//! [`coloring`], so they can cross-check the backtracking searchers on small
//! inputs.
//!
//! [`hom`]: crate::hom
//! [`coloring`]: crate::coloring

use crate::coloring::{verify, TotalColoring, WType};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hom::VertexMapping;

/// Every map `V(g) -> V(h)` that sends edges to edges, in lexicographic
/// order of the image vector.
pub fn brute_force_homs(g: &Graph, h: &Graph) -> Vec<VertexMapping> {
    let (p, n) = (g.p(), h.p());
    let mut adj = vec![vec![false; n + 1]; n + 1];
    for &(a, b) in h.edges() {
        adj[a][b] = true;
        adj[b][a] = true;
    }
    let mut out = Vec::new();
    let mut img = vec![1; p];
    loop {
        if g.edges().iter().all(|&(u, v)| adj[img[u - 1]][img[v - 1]]) {
            out.push(VertexMapping::from_images(img.clone()));
        }
        if !next_tuple(&mut img, n) {
            return out;
        }
    }
}

/// Every vertex coloring in `[1, max]^p` whose induced total coloring (edge
/// color = endpoint difference) satisfies `w`.
pub fn brute_force_colorings(g: &Graph, w: WType) -> Result<Vec<TotalColoring>> {
    let max = w.max_vertex_color(g.q()).ok_or(Error::UnsupportedWType(w))? as usize;
    let mut out = Vec::new();
    let mut colors = vec![1; g.p()];
    loop {
        let as_u32: Vec<u32> = colors.iter().map(|&c| c as u32).collect();
        let f = TotalColoring::from_vertex_colors(g, &as_u32);
        if verify(g, &f, w)?.passed() {
            out.push(f);
        }
        if !next_tuple(&mut colors, max) {
            return Ok(out);
        }
    }
}

/// Advances `t` in `[1, n]^len` lexicographically; false after the last.
fn next_tuple(t: &mut [usize], n: usize) -> bool {
    for i in (0..t.len()).rev() {
        if t[i] < n {
            t[i] += 1;
            return true;
        }
        t[i] = 1;
    }
    false
}
