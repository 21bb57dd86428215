//! Simple finite undirected graphs on dense 1-based vertex ids.
//!
//! A [`Graph`] is immutable once built. Edges are stored normalized as
//! `(u, v)` with `u < v`, sorted and deduplicated, so two graphs with the same
//! vertex count and edge set compare equal and serialize to identical text.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Unordered vertex pair stored as `(min, max)`.
pub type Edge = (usize, usize);

/// Normalizes an unordered pair so the smaller id comes first.
pub fn edge(u: usize, v: usize) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    p: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(p={}, edges={:?})", self.p, self.edges)
    }
}

impl Graph {
    /// Builds a graph on vertices `1..=p` from an arbitrary pair list.
    ///
    /// Pairs may come in either orientation and may repeat; the result holds
    /// each unordered pair once.
    pub fn from_edge_list<I>(p: usize, pairs: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if p == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut edges = Vec::new();
        for (u, v) in pairs {
            for x in [u, v] {
                if x == 0 || x > p {
                    return Err(Error::VertexOutOfRange { vertex: x, max: p });
                }
            }
            if u == v {
                return Err(Error::LoopRejected(u));
            }
            edges.push(edge(u, v));
        }
        edges.sort_unstable();
        edges.dedup();
        let mut adj = vec![Vec::new(); p + 1];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { p, edges, adj })
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        Graph::from_edge_list(n, std::iter::empty())
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let pairs = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)));
        Graph::from_edge_list(n, pairs)
    }

    /// Path on `n` vertices `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Result<Graph> {
        Graph::from_edge_list(n, (1..n).map(|u| (u, u + 1)))
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        let mut pairs: Vec<_> = (1..n).map(|u| (u, u + 1)).collect();
        pairs.push((n, 1));
        Graph::from_edge_list(n, pairs)
    }

    /// Star `K_{1,leaves}` with center 1.
    pub fn star(leaves: usize) -> Result<Graph> {
        Graph::from_edge_list(leaves + 1, (2..=leaves + 1).map(|v| (1, v)))
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.p
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        v >= 1 && v <= self.p
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// Position of the edge `uv` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        if !self.contains_vertex(u) || !self.contains_vertex(v) {
            return None;
        }
        self.edges.binary_search(&edge(u, v)).ok()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn leaves(&self) -> Vec<usize> {
        self.vertices().filter(|&v| self.degree(v) == 1).collect()
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.vertices().map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Component index per vertex (index 0 unused), numbered by lowest member.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.p + 1];
        let mut next = 0;
        for s in self.vertices() {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn component_count(&self) -> usize {
        self.components().iter().skip(1).max().map_or(0, |m| m + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Subgraph induced by `vertices`, relabeled `1..` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        let mut index = vec![0; self.p + 1];
        for (i, &v) in vertices.iter().enumerate() {
            if !self.contains_vertex(v) {
                return Err(Error::VertexOutOfRange { vertex: v, max: self.p });
            }
            index[v] = i + 1;
        }
        let pairs = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != 0 && index[v] != 0)
            .map(|&(u, v)| (index[u], index[v]));
        Graph::from_edge_list(vertices.len(), pairs)
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn from_text(text: &str) -> Result<Graph> {
        text.parse()
    }
}

/// Writes the graph file format: a `p q` header then one `u v` line per edge.
impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.p, self.q())?;
        for &(u, v) in &self.edges {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(text: &str) -> Result<Graph> {
        let mut lines = content_lines(text);
        let (line_no, header) = lines.next().ok_or_else(|| Error::parse(0, "missing `p q` header"))?;
        let [p, q] = parse_numbers::<2>(line_no, header)?;
        let mut pairs = Vec::with_capacity(q);
        for (line_no, line) in lines {
            let [u, v] = parse_numbers::<2>(line_no, line)?;
            pairs.push((u, v));
        }
        if pairs.len() != q {
            return Err(Error::parse(0, format!("header declares {q} edges, found {}", pairs.len())));
        }
        let g = Graph::from_edge_list(p, pairs)?;
        if g.q() != q {
            return Err(Error::parse(0, "duplicate edges in edge list"));
        }
        Ok(g)
    }
}

/// Non-blank, non-comment lines with 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_numbers<const N: usize>(line_no: usize, line: &str) -> Result<[usize; N]> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != N {
        return Err(Error::parse(line_no, format!("expected {N} fields, got {}", fields.len())));
    }
    let mut out = [0; N];
    for (slot, field) in out.iter_mut().zip(&fields) {
        *slot = field
            .parse()
            .map_err(|_| Error::parse(line_no, format!("`{field}` is not a non-negative integer")))?;
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    X,
    Y,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::X => Side::Y,
            Side::Y => Side::X,
        }
    }
}

/// A proper 2-coloring of the vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    side: Vec<Side>,
}

impl Bipartition {
    /// Wraps an explicit side table (index 0 unused).
    pub(crate) fn from_sides(side: Vec<Side>) -> Bipartition {
        Bipartition { side }
    }

    pub fn side(&self, v: usize) -> Side {
        self.side[v]
    }

    pub fn x(&self) -> Vec<usize> {
        self.members(Side::X)
    }

    pub fn y(&self) -> Vec<usize> {
        self.members(Side::Y)
    }

    fn members(&self, s: Side) -> Vec<usize> {
        (1..self.side.len()).filter(|&v| self.side[v] == s).collect()
    }

    /// True when every edge of `g` runs between the two sides.
    pub fn separates(&self, g: &Graph) -> bool {
        g.edges().iter().all(|&(u, v)| self.side[u] != self.side[v])
    }
}

/// Breadth-first 2-coloring; the lowest vertex of each component lands in X.
pub fn bipartition(g: &Graph) -> Option<Bipartition> {
    let mut side: Vec<Option<Side>> = vec![None; g.p() + 1];
    for s in g.vertices() {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(Side::X);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let su = side[u].expect("queued vertices are colored");
            for &w in g.neighbors(u) {
                match side[w] {
                    None => {
                        side[w] = Some(su.flip());
                        queue.push_back(w);
                    }
                    Some(sw) if sw == su => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let mut table = vec![Side::X; g.p() + 1];
    for v in g.vertices() {
        table[v] = side[v].expect("every vertex visited");
    }
    Some(Bipartition { side: table })
}

/// Disjoint union; vertices of `h` are shifted up by `g.p()`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let shift = g.p();
    let pairs = g
        .edges()
        .iter()
        .copied()
        .chain(h.edges().iter().map(|&(u, v)| (u + shift, v + shift)));
    Graph::from_edge_list(g.p() + h.p(), pairs).expect("union of valid graphs is valid")
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

/// An edge-preserving bijection `V(g) -> V(h)` (index 0 unused), if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    find_isomorphism_with(g, h, |_, _| true)
}

/// Like [`find_isomorphism`], restricted to pairs accepted by `compatible`.
///
/// Backtracks over the vertices of `g` in a connectivity-first order; a
/// candidate image must match degree and the adjacency pattern towards every
/// previously placed vertex.
pub fn find_isomorphism_with<F>(g: &Graph, h: &Graph, compatible: F) -> Option<Vec<usize>>
where
    F: Fn(usize, usize) -> bool,
{
    if g.p() != h.p() || g.q() != h.q() || g.degree_sequence() != h.degree_sequence() {
        return None;
    }
    let order = placement_order(g);
    let mut image = vec![0; g.p() + 1];
    let mut used = vec![false; h.p() + 1];
    if iso_extend(g, h, &compatible, &order, 0, &mut image, &mut used) {
        Some(image)
    } else {
        None
    }
}

fn placement_order(g: &Graph) -> Vec<usize> {
    let mut placed = vec![false; g.p() + 1];
    let mut links = vec![0usize; g.p() + 1];
    let mut order = Vec::with_capacity(g.p());
    for _ in 0..g.p() {
        let next = g
            .vertices()
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (links[v], g.degree(v), std::cmp::Reverse(v)))
            .expect("unplaced vertex remains");
        placed[next] = true;
        for &w in g.neighbors(next) {
            links[w] += 1;
        }
        order.push(next);
    }
    order
}

fn iso_extend<F>(
    g: &Graph,
    h: &Graph,
    compatible: &F,
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool
where
    F: Fn(usize, usize) -> bool,
{
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for c in h.vertices() {
        if used[c] || h.degree(c) != g.degree(v) || !compatible(v, c) {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&w| g.has_edge(v, w) == h.has_edge(c, image[w]));
        if !consistent {
            continue;
        }
        image[v] = c;
        used[c] = true;
        if iso_extend(g, h, compatible, order, depth + 1, image, used) {
            return true;
        }
        used[c] = false;
    }
    image[v] = 0;
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_from_edge_list() {
        let g = Graph::from_edge_list(3, [(1, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(g.q(), 3);
        assert_eq!(g.degree_sequence(), vec![2, 2, 2]);
    }

    #[test]
    fn duplicate_pairs_collapse() {
        let g = Graph::from_edge_list(2, [(1, 2), (2, 1)]).unwrap();
        assert_eq!(g.q(), 1);
        assert_eq!(g.edges(), &[(1, 2)]);
    }

    #[test]
    fn rejects_loops_and_bad_ids() {
        assert_eq!(Graph::from_edge_list(2, [(2, 2)]), Err(Error::LoopRejected(2)));
        assert_eq!(
            Graph::from_edge_list(2, [(1, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, max: 2 })
        );
        assert_eq!(
            Graph::from_edge_list(2, [(0, 1)]),
            Err(Error::VertexOutOfRange { vertex: 0, max: 2 })
        );
    }

    #[test]
    fn degree_and_leaf_queries() {
        let s = Graph::star(3).unwrap();
        assert_eq!(s.degree(1), 3);
        assert_eq!(s.leaves(), vec![2, 3, 4]);
        assert_eq!(s.neighbors(1), &[2, 3, 4]);
    }

    #[test]
    fn bipartition_of_path_and_triangle() {
        let p3 = Graph::path(3).unwrap();
        let b = bipartition(&p3).unwrap();
        assert_eq!(b.x(), vec![1, 3]);
        assert_eq!(b.y(), vec![2]);
        assert!(bipartition(&Graph::complete(3).unwrap()).is_none());
    }

    #[test]
    fn bipartition_puts_lowest_vertex_of_each_component_in_x() {
        let g = Graph::from_edge_list(5, [(2, 3), (5, 4)]).unwrap();
        let b = bipartition(&g).unwrap();
        assert_eq!(b.x(), vec![1, 2, 4]);
        assert_eq!(b.y(), vec![3, 5]);
        assert!(b.separates(&g));
    }

    #[test]
    fn isomorphism_examples() {
        let k3 = Graph::complete(3).unwrap();
        assert!(is_isomorphic(&k3, &k3));
        assert!(!is_isomorphic(&Graph::path(4).unwrap(), &Graph::star(3).unwrap()));
        let c4a = Graph::cycle(4).unwrap();
        let c4b = Graph::from_edge_list(4, [(1, 3), (3, 2), (2, 4), (4, 1)]).unwrap();
        let iso = find_isomorphism(&c4a, &c4b).unwrap();
        for &(u, v) in c4a.edges() {
            assert!(c4b.has_edge(iso[u], iso[v]));
        }
    }

    #[test]
    fn same_degree_sequence_but_not_isomorphic() {
        // C6 versus two disjoint triangles.
        let c6 = Graph::cycle(6).unwrap();
        let k3 = Graph::complete(3).unwrap();
        let two_k3 = disjoint_union(&k3, &k3);
        assert_eq!(c6.degree_sequence(), two_k3.degree_sequence());
        assert!(!is_isomorphic(&c6, &two_k3));
    }

    #[test]
    fn disjoint_union_examples() {
        let k3 = Graph::complete(3).unwrap();
        let k1 = Graph::empty(1).unwrap();
        let u = disjoint_union(&k3, &k1);
        assert_eq!((u.p(), u.q()), (4, 3));
        assert_eq!(u.degree(4), 0);

        let u = disjoint_union(&k1, &k1);
        assert_eq!((u.p(), u.q()), (2, 0));

        let p2 = Graph::path(2).unwrap();
        let u = disjoint_union(&p2, &p2);
        assert_eq!((u.p(), u.q()), (4, 2));
        assert_eq!(u.component_count(), 2);
    }

    #[test]
    fn text_format_round_trip() {
        let text = "# a path\n3 2\n1 2\n\n2 3\n";
        let g: Graph = text.parse().unwrap();
        assert_eq!(g, Graph::path(3).unwrap());
        assert_eq!(g.to_text(), "3 2\n1 2\n2 3\n");
        assert_eq!(Graph::from_text(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn text_format_errors() {
        assert!(matches!("3 2\n1 2\n".parse::<Graph>(), Err(Error::Parse { .. })));
        assert!(matches!("3 1\n1 x\n".parse::<Graph>(), Err(Error::Parse { line: 2, .. })));
        assert_eq!("3 1\n1 1\n".parse::<Graph>(), Err(Error::LoopRejected(1)));
    }
}
