//! Total colorings and the W-type conditions C-1 through C-8.
//!
//! A total coloring assigns a non-negative integer to every vertex and every
//! edge of a host graph. The graceful family of W-types constrains those
//! colors; [`verify`] itemizes each condition, [`search`] enumerates
//! colorings by backtracking and [`to_odd`] / [`dual`] transform them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{bipartition, content_lines, edge, Bipartition, Edge, Graph, Side};
use crate::report::VerifyReport;

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TotalColoring {
    vertex: BTreeMap<usize, u32>,
    edge: BTreeMap<Edge, u32>,
}

impl TotalColoring {
    pub fn new() -> TotalColoring {
        TotalColoring::default()
    }

    /// Vertex colors given in id order; each edge gets `|f(u) - f(v)|`.
    pub fn from_vertex_colors(g: &Graph, colors: &[u32]) -> TotalColoring {
        assert_eq!(colors.len(), g.p(), "one color per vertex");
        let mut f = TotalColoring::new();
        for (v, &c) in g.vertices().zip(colors) {
            f.set_vertex(v, c);
        }
        f.recompute_edges(g);
        f
    }

    pub fn set_vertex(&mut self, v: usize, color: u32) {
        self.vertex.insert(v, color);
    }

    pub fn set_edge(&mut self, u: usize, v: usize, color: u32) {
        self.edge.insert(edge(u, v), color);
    }

    pub fn vertex(&self, v: usize) -> Option<u32> {
        self.vertex.get(&v).copied()
    }

    pub fn edge(&self, u: usize, v: usize) -> Option<u32> {
        self.edge.get(&edge(u, v)).copied()
    }

    pub fn vertex_colors(&self) -> &BTreeMap<usize, u32> {
        &self.vertex
    }

    pub fn edge_colors(&self) -> &BTreeMap<Edge, u32> {
        &self.edge
    }

    /// Sets every edge color of `g` to the difference of its endpoint colors.
    pub fn recompute_edges(&mut self, g: &Graph) {
        self.edge.clear();
        for &(u, v) in g.edges() {
            let (a, b) = (self.vertex[&u], self.vertex[&v]);
            self.edge.insert((u, v), a.abs_diff(b));
        }
    }

    /// Errors unless exactly the vertices and edges of `g` are colored.
    pub fn ensure_total(&self, g: &Graph) -> Result<()> {
        if let Some(v) = g.vertices().find(|v| !self.vertex.contains_key(v)) {
            return Err(Error::ColoringIncomplete(format!("vertex {v} has no color")));
        }
        if let Some(&(u, v)) = g.edges().iter().find(|e| !self.edge.contains_key(e)) {
            return Err(Error::ColoringIncomplete(format!("edge {u}-{v} has no color")));
        }
        if let Some(v) = self.vertex.keys().find(|&&v| !g.contains_vertex(v)) {
            return Err(Error::ColoringIncomplete(format!("color given for unknown vertex {v}")));
        }
        if let Some(&(u, v)) = self.edge.keys().find(|&&(u, v)| !g.has_edge(u, v)) {
            return Err(Error::ColoringIncomplete(format!("color given for non-edge {u}-{v}")));
        }
        Ok(())
    }

    /// Vertex colors as a dense table indexed by vertex id (index 0 unused).
    pub(crate) fn vertex_table(&self, g: &Graph) -> Vec<u32> {
        let mut t = vec![0; g.p() + 1];
        for v in g.vertices() {
            t[v] = self.vertex[&v];
        }
        t
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn from_text(text: &str) -> Result<TotalColoring> {
        text.parse()
    }
}

/// Coloring file format: `v <id> <color>` and `e <u> <v> <color>` lines.
impl fmt::Display for TotalColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, c) in &self.vertex {
            writeln!(f, "v {v} {c}")?;
        }
        for ((u, v), c) in &self.edge {
            writeln!(f, "e {u} {v} {c}")?;
        }
        Ok(())
    }
}

impl FromStr for TotalColoring {
    type Err = Error;

    fn from_str(text: &str) -> Result<TotalColoring> {
        let mut f = TotalColoring::new();
        for (line_no, line) in content_lines(text) {
            let fields: Vec<&str> = line.split_whitespace().collect();
            let nums = fields[1..]
                .iter()
                .map(|s| s.parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| Error::parse(line_no, "expected non-negative integers"))?;
            let color = |c: usize| {
                u32::try_from(c).map_err(|_| Error::parse(line_no, "color does not fit in 32 bits"))
            };
            match (fields[0], nums.as_slice()) {
                ("v", &[v, c]) => {
                    if f.vertex.insert(v, color(c)?).is_some() {
                        return Err(Error::parse(line_no, format!("vertex {v} colored twice")));
                    }
                }
                ("e", &[u, v, c]) => {
                    if u == v {
                        return Err(Error::LoopRejected(u));
                    }
                    if f.edge.insert(edge(u, v), color(c)?).is_some() {
                        return Err(Error::parse(line_no, format!("edge {u}-{v} colored twice")));
                    }
                }
                _ => return Err(Error::parse(line_no, "expected `v <id> <color>` or `e <u> <v> <color>`")),
            }
        }
        Ok(f)
    }
}

/// The conditions a W-type may require.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Condition {
    /// Proper bipartition of the host graph.
    C1,
    /// Edge color is the difference of its endpoint colors.
    C2,
    /// Edge colors agree across a homomorphism.
    C3,
    /// Vertex colors lie in `[1, q+1]`.
    C4,
    /// Vertex colors lie in `[1, 2q+2]`.
    C5,
    /// Edge color set is exactly `[1, q]`.
    C6,
    /// Edge color set is exactly `{1, 3, ..., 2q-1}`.
    C7,
    /// Every X color is below every Y color.
    C8,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = *self as u8 + 1;
        write!(f, "C-{n}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WType {
    Bipartite,
    Graceful,
    SetOrderedGraceful,
    OddGraceful,
    SetOrderedOddGraceful,
}

impl WType {
    pub const ALL: [WType; 5] = [
        WType::Bipartite,
        WType::Graceful,
        WType::SetOrderedGraceful,
        WType::OddGraceful,
        WType::SetOrderedOddGraceful,
    ];

    /// Conditions a single coloring must meet for this type.
    pub fn conditions(self) -> &'static [Condition] {
        use Condition::*;
        match self {
            WType::Bipartite => &[C1],
            WType::Graceful => &[C2, C4, C6],
            WType::SetOrderedGraceful => &[C1, C2, C4, C6, C8],
            WType::OddGraceful => &[C2, C5, C7],
            WType::SetOrderedOddGraceful => &[C1, C2, C5, C7, C8],
        }
    }

    pub fn is_set_ordered(self) -> bool {
        matches!(self, WType::SetOrderedGraceful | WType::SetOrderedOddGraceful)
    }

    pub fn is_odd(self) -> bool {
        matches!(self, WType::OddGraceful | WType::SetOrderedOddGraceful)
    }

    pub fn is_graceful_family(self) -> bool {
        self != WType::Bipartite
    }

    /// Largest admissible vertex color for a `q`-edge graph, if bounded.
    pub fn max_vertex_color(self, q: usize) -> Option<u32> {
        match self {
            WType::Bipartite => None,
            _ if self.is_odd() => Some(2 * q as u32 + 2),
            _ => Some(q as u32 + 1),
        }
    }

    /// The exact edge color set required for a `q`-edge graph, if any.
    pub fn edge_color_set(self, q: usize) -> Option<Vec<u32>> {
        match self {
            WType::Bipartite => None,
            _ if self.is_odd() => Some((0..q as u32).map(|i| 2 * i + 1).collect()),
            _ => Some((1..=q as u32).collect()),
        }
    }
}

impl fmt::Display for WType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WType::Bipartite => "bipartite",
            WType::Graceful => "graceful",
            WType::SetOrderedGraceful => "set-ordered-graceful",
            WType::OddGraceful => "odd-graceful",
            WType::SetOrderedOddGraceful => "set-ordered-odd-graceful",
        })
    }
}

impl FromStr for WType {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<WType, String> {
        WType::ALL
            .into_iter()
            .find(|w| w.to_string() == s)
            .ok_or_else(|| format!("unknown W-type `{s}`"))
    }
}

/// Checks `f` against every condition of `w`.
pub fn verify(g: &Graph, f: &TotalColoring, w: WType) -> Result<VerifyReport> {
    f.ensure_total(g)?;
    let colors = f.vertex_table(g);
    let q = g.q();
    let mut report = VerifyReport::new();
    for &cond in w.conditions() {
        let (passed, detail) = match cond {
            Condition::C1 => match bipartition(g) {
                Some(_) => (true, String::new()),
                None => (false, "odd cycle present".to_string()),
            },
            Condition::C2 => {
                let bad: Vec<String> = g
                    .edges()
                    .iter()
                    .filter(|&&(u, v)| f.edge(u, v) != Some(colors[u].abs_diff(colors[v])))
                    .map(|&(u, v)| format!("{u}-{v}"))
                    .collect();
                (bad.is_empty(), bad.join(" "))
            }
            Condition::C4 | Condition::C5 => {
                let max = w.max_vertex_color(q).expect("graceful family");
                let bad: Vec<String> = g
                    .vertices()
                    .filter(|&v| colors[v] < 1 || colors[v] > max)
                    .map(|v| format!("{v}:{}", colors[v]))
                    .collect();
                (bad.is_empty(), format!("range [1,{max}] {}", bad.join(" ")).trim_end().to_string())
            }
            Condition::C6 | Condition::C7 => {
                let want: BTreeSet<u32> = w.edge_color_set(q).expect("graceful family").into_iter().collect();
                let have: BTreeSet<u32> = f.edge_colors().values().copied().collect();
                (have == want, format!("edge colors {}", render_set(&have)))
            }
            Condition::C8 => match set_ordered_sides(g, &colors) {
                Some(b) => {
                    let max_x = b.x().iter().map(|&v| colors[v]).max();
                    let min_y = b.y().iter().map(|&v| colors[v]).min();
                    (true, format!("max f(X)={} min f(Y)={}", show(max_x), show(min_y)))
                }
                None => (false, "no bipartition with max f(X) < min f(Y)".to_string()),
            },
            Condition::C3 => unreachable!("C-3 relates two colorings"),
        };
        report.push(cond.to_string(), passed, detail);
    }
    Ok(report)
}

fn show(x: Option<u32>) -> String {
    x.map_or("-".to_string(), |c| c.to_string())
}

fn render_set(s: &BTreeSet<u32>) -> String {
    let items: Vec<String> = s.iter().map(u32::to_string).collect();
    format!("{{{}}}", items.join(","))
}

/// The bipartition `(X, Y)` witnessing `max f(X) < min f(Y)`, if any.
///
/// Each component with an edge has a forced orientation: its low side must
/// hold every smaller color. Isolated vertices join X when their color is
/// below every forced Y color, otherwise Y.
pub fn set_ordered_sides(g: &Graph, colors: &[u32]) -> Option<Bipartition> {
    let base = bipartition(g)?;
    let comp = g.components();
    let ncomp = comp.iter().skip(1).max().map_or(0, |m| m + 1);
    // (max, min) of colors on bipartition side X and side Y per component
    let mut stats = vec![[(0u32, u32::MAX); 2]; ncomp];
    let mut has_edge = vec![false; ncomp];
    for v in g.vertices() {
        let s = &mut stats[comp[v]][(base.side(v) == Side::Y) as usize];
        s.0 = s.0.max(colors[v]);
        s.1 = s.1.min(colors[v]);
        if g.degree(v) > 0 {
            has_edge[comp[v]] = true;
        }
    }
    // flip[c]: whether component c's bipartition side Y is the low side
    let mut flip = vec![false; ncomp];
    for c in 0..ncomp {
        if !has_edge[c] {
            continue;
        }
        let [x, y] = stats[c];
        if x.0 < y.1 {
            flip[c] = false;
        } else if y.0 < x.1 {
            flip[c] = true;
        } else {
            return None;
        }
    }
    let mut side = vec![Side::X; g.p() + 1];
    let mut max_x = 0;
    let mut min_y = u32::MAX;
    for v in g.vertices().filter(|&v| has_edge[comp[v]]) {
        let s = if flip[comp[v]] { base.side(v).flip() } else { base.side(v) };
        side[v] = s;
        match s {
            Side::X => max_x = max_x.max(colors[v]),
            Side::Y => min_y = min_y.min(colors[v]),
        }
    }
    if max_x >= min_y {
        return None;
    }
    for v in g.vertices().filter(|&v| !has_edge[comp[v]]) {
        side[v] = if colors[v] < min_y { Side::X } else { Side::Y };
    }
    Some(Bipartition::from_sides(side))
}

/// Enumerates up to `limit` colorings of type `w` in lexicographic order of
/// the vertex-color vector.
///
/// Vertices are colored in id order over the admissible range; an edge is
/// checked as soon as both endpoints are colored, and its color must be
/// admissible and unused. Set-ordered types also fix each component's
/// orientation at its first colored edge and keep the running
/// `max f(X) < min f(Y)` invariant. The bipartite type has no color
/// constraints; it yields the single 2-coloring `X -> 1, Y -> 2`.
pub fn search(g: &Graph, w: WType, limit: usize) -> Vec<TotalColoring> {
    if limit == 0 {
        return Vec::new();
    }
    let base = bipartition(g);
    if w == WType::Bipartite {
        return match base {
            Some(b) => {
                let colors: Vec<u32> = g.vertices().map(|v| if b.side(v) == Side::X { 1 } else { 2 }).collect();
                vec![TotalColoring::from_vertex_colors(g, &colors)]
            }
            None => Vec::new(),
        };
    }
    if w.is_set_ordered() && base.is_none() {
        return Vec::new();
    }
    let q = g.q();
    let allowed_max = w.max_vertex_color(q).expect("graceful family");
    let mut allowed = vec![false; allowed_max as usize + 1];
    for c in w.edge_color_set(q).expect("graceful family") {
        allowed[c as usize] = true;
    }
    let mut state = SearchState {
        g,
        w,
        limit,
        allowed,
        max_color: allowed_max,
        sides: base,
        comp: g.components(),
        orient: vec![None; g.p() + 1],
        colors: vec![0; g.p() + 1],
        used: vec![false; allowed_max as usize + 1],
        out: Vec::new(),
    };
    state.extend(1);
    state.out
}

struct SearchState<'a> {
    g: &'a Graph,
    w: WType,
    limit: usize,
    allowed: Vec<bool>,
    max_color: u32,
    sides: Option<Bipartition>,
    comp: Vec<usize>,
    /// Per component: whether bipartition side X is the low side.
    orient: Vec<Option<bool>>,
    colors: Vec<u32>,
    used: Vec<bool>,
    out: Vec<TotalColoring>,
}

impl SearchState<'_> {
    fn extend(&mut self, v: usize) {
        if self.out.len() >= self.limit {
            return;
        }
        if v > self.g.p() {
            let colors = self.colors[1..].to_vec();
            self.out.push(TotalColoring::from_vertex_colors(self.g, &colors));
            return;
        }
        let earlier: Vec<usize> = self.g.neighbors(v).iter().copied().filter(|&w| w < v).collect();
        for c in 1..=self.max_color {
            self.colors[v] = c;
            let mut marked = Vec::with_capacity(earlier.len());
            let mut ok = true;
            for &w in &earlier {
                let d = c.abs_diff(self.colors[w]) as usize;
                if d == 0 || !self.allowed[d] || self.used[d] {
                    ok = false;
                    break;
                }
                self.used[d] = true;
                marked.push(d);
            }
            let saved_orient = self.orient[self.comp[v]];
            if ok && self.w.is_set_ordered() {
                ok = self.orient_and_check(v, &earlier);
            }
            if ok {
                self.extend(v + 1);
            }
            self.orient[self.comp[v]] = saved_orient;
            for d in marked {
                self.used[d] = false;
            }
            if self.out.len() >= self.limit {
                break;
            }
        }
        self.colors[v] = 0;
    }

    fn orient_and_check(&mut self, v: usize, earlier: &[usize]) -> bool {
        let sides = self.sides.as_ref().expect("set-ordered search needs a bipartition");
        let c = self.comp[v];
        for &w in earlier {
            let low = if self.colors[v] < self.colors[w] { v } else { w };
            let o = sides.side(low) == Side::X;
            match self.orient[c] {
                None => self.orient[c] = Some(o),
                Some(prev) if prev != o => return false,
                Some(_) => {}
            }
        }
        let mut max_low = 0;
        let mut min_high = u32::MAX;
        for u in 1..=v {
            if let Some(o) = self.orient[self.comp[u]] {
                if self.g.degree(u) == 0 {
                    continue;
                }
                let is_low = (sides.side(u) == Side::X) == o;
                if is_low {
                    max_low = max_low.max(self.colors[u]);
                } else {
                    min_high = min_high.min(self.colors[u]);
                }
            }
        }
        max_low < min_high
    }
}

/// Maps a set-ordered graceful coloring to its set-ordered odd-graceful
/// image: `2f` on X, `2f - 1` on Y, edges `g(v) - g(u)`.
pub fn to_odd(g: &Graph, f: &TotalColoring) -> Result<TotalColoring> {
    if !verify(g, f, WType::SetOrderedGraceful)?.passed() {
        return Err(Error::NotSetOrderedGraceful);
    }
    let colors = f.vertex_table(g);
    let sides = set_ordered_sides(g, &colors).ok_or(Error::NotSetOrderedGraceful)?;
    let mut out = TotalColoring::new();
    for v in g.vertices() {
        let c = match sides.side(v) {
            Side::X => 2 * colors[v],
            Side::Y => 2 * colors[v] - 1,
        };
        out.set_vertex(v, c);
    }
    out.recompute_edges(g);
    Ok(out)
}

/// Inverse of [`to_odd`]: halves X colors and maps Y colors `c -> (c+1)/2`.
pub fn from_odd(g: &Graph, odd: &TotalColoring) -> Result<TotalColoring> {
    if !verify(g, odd, WType::SetOrderedOddGraceful)?.passed() {
        return Err(Error::NotSetOrderedOddGraceful);
    }
    let colors = odd.vertex_table(g);
    let sides = set_ordered_sides(g, &colors).ok_or(Error::NotSetOrderedOddGraceful)?;
    let mut out = TotalColoring::new();
    for v in g.vertices() {
        let c = colors[v];
        let halved = match sides.side(v) {
            Side::X if c % 2 == 0 => c / 2,
            Side::Y if c % 2 == 1 => (c + 1) / 2,
            _ => return Err(Error::NotSetOrderedOddGraceful),
        };
        out.set_vertex(v, halved);
    }
    out.recompute_edges(g);
    Ok(out)
}

/// Reflection `f*(x) = max f(V) + min f(V) - f(x)` with edges recomputed.
pub fn dual(g: &Graph, f: &TotalColoring) -> Result<TotalColoring> {
    if !verify(g, f, WType::SetOrderedGraceful)?.passed() {
        return Err(Error::NotSetOrderedGraceful);
    }
    let colors = f.vertex_table(g);
    let max = g.vertices().map(|v| colors[v]).max().expect("non-empty graph");
    let min = g.vertices().map(|v| colors[v]).min().expect("non-empty graph");
    let mut out = TotalColoring::new();
    for v in g.vertices() {
        out.set_vertex(v, max + min - colors[v]);
    }
    out.recompute_edges(g);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p2(fu: u32, fv: u32, fe: u32) -> (Graph, TotalColoring) {
        let g = Graph::path(2).unwrap();
        let mut f = TotalColoring::new();
        f.set_vertex(1, fu);
        f.set_vertex(2, fv);
        f.set_edge(1, 2, fe);
        (g, f)
    }

    #[test]
    fn single_edge_graceful() {
        let (g, f) = p2(1, 2, 1);
        assert!(verify(&g, &f, WType::Graceful).unwrap().passed());
        let (g, f) = p2(1, 2, 2);
        let r = verify(&g, &f, WType::Graceful).unwrap();
        assert!(!r.passed());
        assert_eq!(r.failure_summary(), "C-2,C-6");
    }

    #[test]
    fn incomplete_coloring_is_an_error() {
        let g = Graph::path(2).unwrap();
        let mut f = TotalColoring::new();
        f.set_vertex(1, 1);
        f.set_edge(1, 2, 1);
        assert!(matches!(verify(&g, &f, WType::Graceful), Err(Error::ColoringIncomplete(_))));
    }

    #[test]
    fn repeated_vertex_colors_are_allowed() {
        // P3 with both ends colored 1 cannot be graceful (edges repeat), but
        // K_{1,2} plus an isolated vertex sharing a color can be.
        let g = Graph::from_edge_list(4, [(1, 2), (1, 3)]).unwrap();
        let f = TotalColoring::from_vertex_colors(&g, &[1, 2, 3, 1]);
        assert!(verify(&g, &f, WType::SetOrderedGraceful).unwrap().passed());
    }

    #[test]
    fn set_ordered_orientation_is_found_per_component() {
        let g = Graph::path(3).unwrap();
        // middle vertex carries the largest color: X = {1,3}
        let f = TotalColoring::from_vertex_colors(&g, &[1, 3, 2]);
        let b = set_ordered_sides(&g, &f.vertex_table(&g)).unwrap();
        assert_eq!(b.x(), vec![1, 3]);
        // middle vertex carries the smallest color: X = {2}
        let f = TotalColoring::from_vertex_colors(&g, &[3, 1, 2]);
        let b = set_ordered_sides(&g, &f.vertex_table(&g)).unwrap();
        assert_eq!(b.x(), vec![2]);
        // P4 colored 1,2,4,1 is graceful but not set-ordered
        let g = Graph::path(4).unwrap();
        let f = TotalColoring::from_vertex_colors(&g, &[1, 2, 4, 1]);
        assert!(set_ordered_sides(&g, &f.vertex_table(&g)).is_none());
        let r = verify(&g, &f, WType::SetOrderedGraceful).unwrap();
        assert_eq!(r.failure_summary(), "C-8");
        assert!(verify(&g, &f, WType::Graceful).unwrap().passed());
    }

    #[test]
    fn search_single_edge() {
        let g = Graph::path(2).unwrap();
        let all = search(&g, WType::Graceful, usize::MAX);
        assert_eq!(all.len(), 2);
        let (_, f) = p2(1, 2, 1);
        assert_eq!(all[0], f);
    }

    #[test]
    fn search_triangle_set_ordered_is_empty() {
        let k3 = Graph::complete(3).unwrap();
        assert!(search(&k3, WType::SetOrderedGraceful, usize::MAX).is_empty());
        // K3 is graceful though: 1, 2, 4 gives edges 1, 3, 2
        assert!(!search(&k3, WType::Graceful, usize::MAX).is_empty());
    }

    #[test]
    fn search_respects_limit_and_order() {
        let g = Graph::star(3).unwrap();
        let all = search(&g, WType::SetOrderedGraceful, usize::MAX);
        let first = search(&g, WType::SetOrderedGraceful, 3);
        assert_eq!(&all[..3], first.as_slice());
        let keys: Vec<Vec<u32>> = all.iter().map(|f| f.vertex_table(&g)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        // center 1 with leaves a permutation of 2,3,4; or center 4 with leaves of 1,2,3
        assert_eq!(all.len(), 12);
    }

    #[test]
    fn to_odd_examples() {
        let (g, f) = p2(1, 2, 1);
        let o = to_odd(&g, &f).unwrap();
        assert_eq!((o.vertex(1), o.vertex(2), o.edge(1, 2)), (Some(2), Some(3), Some(1)));

        let g = Graph::star(2).unwrap();
        let f = TotalColoring::from_vertex_colors(&g, &[1, 2, 3]);
        let o = to_odd(&g, &f).unwrap();
        assert_eq!(o.vertex_table(&g)[1..], [2, 3, 5]);
        let edges: BTreeSet<u32> = o.edge_colors().values().copied().collect();
        assert_eq!(edges, BTreeSet::from([1, 3]));
        assert!(verify(&g, &o, WType::SetOrderedOddGraceful).unwrap().passed());
        assert_eq!(from_odd(&g, &o).unwrap(), f);
    }

    #[test]
    fn to_odd_rejects_non_set_ordered() {
        let g = Graph::path(4).unwrap();
        let f = TotalColoring::from_vertex_colors(&g, &[1, 2, 4, 1]);
        assert_eq!(to_odd(&g, &f), Err(Error::NotSetOrderedGraceful));
    }

    #[test]
    fn dual_examples() {
        let (g, f) = p2(1, 2, 1);
        let d = dual(&g, &f).unwrap();
        assert_eq!((d.vertex(1), d.vertex(2), d.edge(1, 2)), (Some(2), Some(1), Some(1)));

        let g = Graph::path(3).unwrap();
        let f = TotalColoring::from_vertex_colors(&g, &[1, 3, 2]);
        let d = dual(&g, &f).unwrap();
        assert_eq!(d.vertex_table(&g)[1..], [3, 1, 2]);
        assert_eq!((d.edge(1, 2), d.edge(2, 3)), (Some(2), Some(1)));
        assert!(verify(&g, &d, WType::Graceful).unwrap().passed());
        assert_eq!(dual(&g, &d).unwrap(), f);
    }

    #[test]
    fn wtype_names_round_trip() {
        for w in WType::ALL {
            assert_eq!(w.to_string().parse::<WType>().unwrap(), w);
        }
        assert!("magic".parse::<WType>().is_err());
        assert_eq!(Condition::C8.to_string(), "C-8");
    }

    #[test]
    fn coloring_text_round_trip() {
        let g = Graph::star(2).unwrap();
        let f = TotalColoring::from_vertex_colors(&g, &[1, 2, 3]);
        let text = f.to_text();
        assert_eq!(text, "v 1 1\nv 2 2\nv 3 3\ne 1 2 1\ne 1 3 2\n");
        assert_eq!(TotalColoring::from_text(&text).unwrap(), f);
        assert!(matches!("v 1".parse::<TotalColoring>(), Err(Error::Parse { line: 1, .. })));
        assert!(matches!("v 1 1\nv 1 2".parse::<TotalColoring>(), Err(Error::Parse { line: 2, .. })));
    }
}
