//! Graph homomorphisms: checking, searching and the colored variants.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::coloring::{set_ordered_sides, verify, Condition, TotalColoring, WType};
use crate::error::{Error, Result};
use crate::graph::{content_lines, parse_numbers, Edge, Graph, Side};
use crate::report::VerifyReport;

/// A vertex map `V(G) -> V(H)`, stored densely in source-id order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexMapping {
    table: Vec<usize>,
}

impl VertexMapping {
    /// `images[i]` is the image of source vertex `i + 1`.
    pub fn from_images(images: Vec<usize>) -> VertexMapping {
        VertexMapping { table: images }
    }

    pub fn identity(p: usize) -> VertexMapping {
        VertexMapping { table: (1..=p).collect() }
    }

    /// Builds a total mapping on `1..=p` from `(source, image)` pairs.
    pub fn from_pairs<I>(p: usize, pairs: I) -> Result<VertexMapping>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut table = vec![0; p];
        for (s, t) in pairs {
            if s == 0 || s > p {
                return Err(Error::VertexOutOfRange { vertex: s, max: p });
            }
            if table[s - 1] != 0 && table[s - 1] != t {
                return Err(Error::MappingIncomplete(format!("vertex {s} mapped twice")));
            }
            table[s - 1] = t;
        }
        if let Some(i) = table.iter().position(|&t| t == 0) {
            return Err(Error::MappingIncomplete(format!("vertex {} has no image", i + 1)));
        }
        Ok(VertexMapping { table })
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    /// Image of source vertex `v`.
    pub fn get(&self, v: usize) -> usize {
        self.table[v - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.table
    }

    /// `self` followed by `then`.
    pub fn compose(&self, then: &VertexMapping) -> VertexMapping {
        VertexMapping { table: self.table.iter().map(|&t| then.get(t)).collect() }
    }

    pub fn is_bijective_onto(&self, target_p: usize) -> bool {
        if self.table.len() != target_p {
            return false;
        }
        let mut seen = vec![false; target_p + 1];
        self.table.iter().all(|&t| t >= 1 && t <= target_p && !std::mem::replace(&mut seen[t], true))
    }

    /// Errors unless the map is total on `g` with images inside `h`.
    pub fn ensure_valid(&self, g: &Graph, h: &Graph) -> Result<()> {
        if self.table.len() != g.p() {
            return Err(Error::MappingIncomplete(format!(
                "mapping covers {} vertices, source has {}",
                self.table.len(),
                g.p()
            )));
        }
        if let Some(&t) = self.table.iter().find(|&&t| !h.contains_vertex(t)) {
            return Err(Error::VertexOutOfRange { vertex: t, max: h.p() });
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

/// Mapping file format: one `<g-vertex> <h-vertex>` line per source vertex.
impl fmt::Display for VertexMapping {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.table.iter().enumerate() {
            writeln!(f, "{} {t}", i + 1)?;
        }
        Ok(())
    }
}

impl FromStr for VertexMapping {
    type Err = Error;

    /// The source size is the largest source id listed; gaps are errors.
    fn from_str(text: &str) -> Result<VertexMapping> {
        let pairs = content_lines(text)
            .map(|(n, l)| parse_numbers::<2>(n, l).map(|[s, t]| (s, t)))
            .collect::<Result<Vec<_>>>()?;
        let p = pairs.iter().map(|&(s, _)| s).max().unwrap_or(0);
        VertexMapping::from_pairs(p, pairs)
    }
}

/// Edges of `g` whose image is not an edge of `h` (a collapsed edge counts).
pub fn hom_violations(g: &Graph, h: &Graph, m: &VertexMapping) -> Result<Vec<Edge>> {
    m.ensure_valid(g, h)?;
    Ok(g.edges()
        .iter()
        .copied()
        .filter(|&(u, v)| !h.has_edge(m.get(u), m.get(v)))
        .collect())
}

pub fn check_hom(g: &Graph, h: &Graph, m: &VertexMapping) -> Result<bool> {
    m.ensure_valid(g, h)?;
    Ok(g.edges().iter().all(|&(u, v)| h.has_edge(m.get(u), m.get(v))))
}

fn require_hom(g: &Graph, h: &Graph, m: &VertexMapping) -> Result<()> {
    let bad = hom_violations(g, h, m)?;
    match bad.first() {
        None => Ok(()),
        Some(&(u, v)) => Err(Error::NotHomomorphism(format!(
            "edge {u}-{v} maps to {}-{}",
            m.get(u),
            m.get(v)
        ))),
    }
}

/// The image `m(G)` is an induced subgraph of `h`.
pub fn is_faithful(g: &Graph, h: &Graph, m: &VertexMapping) -> Result<bool> {
    require_hom(g, h, m)?;
    let image: BTreeSet<usize> = m.images().iter().copied().collect();
    let image_edges: BTreeSet<Edge> = g
        .edges()
        .iter()
        .map(|&(u, v)| crate::graph::edge(m.get(u), m.get(v)))
        .collect();
    Ok(h.edges()
        .iter()
        .filter(|(a, b)| image.contains(a) && image.contains(b))
        .all(|e| image_edges.contains(e)))
}

/// `uv` is an edge of `g` exactly when `m(u)m(v)` is an edge of `h`.
pub fn is_full(g: &Graph, h: &Graph, m: &VertexMapping) -> Result<bool> {
    require_hom(g, h, m)?;
    for u in g.vertices() {
        for v in u + 1..=g.p() {
            if g.has_edge(u, v) != h.has_edge(m.get(u), m.get(v)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Homomorphisms `g -> h`, at most `limit` of them.
pub fn find_homs(g: &Graph, h: &Graph, limit: usize) -> Vec<VertexMapping> {
    find_homs_with(g, h, limit, |_, _| true)
}

/// Homomorphisms whose every vertex pair `(v, m(v))` passes `compatible`.
///
/// Vertices of `g` are placed in degree-descending order (ties by id) and
/// images tried in ascending id. Each placement filters the domains of
/// unplaced neighbors down to the neighborhood of the chosen image, and a
/// branch dies as soon as a domain empties.
pub fn find_homs_with<F>(g: &Graph, h: &Graph, limit: usize, compatible: F) -> Vec<VertexMapping>
where
    F: Fn(usize, usize) -> bool,
{
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut domains: Vec<Vec<usize>> = vec![Vec::new(); g.p() + 1];
    for v in g.vertices() {
        domains[v] = h
            .vertices()
            .filter(|&c| compatible(v, c) && (g.degree(v) == 0 || h.degree(c) > 0))
            .collect();
    }
    let mut search = HomSearch {
        g,
        h,
        order,
        limit,
        assigned: vec![0; g.p() + 1],
        out: Vec::new(),
    };
    if limit > 0 && domains.iter().skip(1).all(|d| !d.is_empty()) {
        search.extend(0, &mut domains);
    }
    search.out
}

struct HomSearch<'a> {
    g: &'a Graph,
    h: &'a Graph,
    order: Vec<usize>,
    limit: usize,
    assigned: Vec<usize>,
    out: Vec<VertexMapping>,
}

impl HomSearch<'_> {
    fn extend(&mut self, depth: usize, domains: &mut Vec<Vec<usize>>) {
        let Some(&v) = self.order.get(depth) else {
            self.out.push(VertexMapping { table: self.assigned[1..].to_vec() });
            return;
        };
        let candidates = domains[v].clone();
        for c in candidates {
            self.assigned[v] = c;
            let mut saved = Vec::new();
            let mut wiped = false;
            for &w in self.g.neighbors(v) {
                if self.assigned[w] != 0 {
                    continue;
                }
                let narrowed: Vec<usize> =
                    domains[w].iter().copied().filter(|&d| self.h.has_edge(c, d)).collect();
                let empty = narrowed.is_empty();
                saved.push((w, std::mem::replace(&mut domains[w], narrowed)));
                if empty {
                    wiped = true;
                    break;
                }
            }
            if !wiped {
                self.extend(depth + 1, domains);
            }
            for (w, d) in saved.into_iter().rev() {
                domains[w] = d;
            }
            self.assigned[v] = 0;
            if self.out.len() >= self.limit {
                return;
            }
        }
    }
}

/// The partition form of the homomorphism test: every class `m^-1(h)` is
/// independent in `g`, and no `g`-edge joins classes `h != h'` unless `hh'`
/// is an edge of `h`.
pub fn partition_check(g: &Graph, h: &Graph, m: &VertexMapping) -> Result<bool> {
    m.ensure_valid(g, h)?;
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); h.p() + 1];
    for v in g.vertices() {
        classes[m.get(v)].push(v);
    }
    // (a-1): no loops in h, so every class must be independent
    for class in &classes {
        for (i, &u) in class.iter().enumerate() {
            if class[i + 1..].iter().any(|&v| g.has_edge(u, v)) {
                return Ok(false);
            }
        }
    }
    // (a-2)
    for a in h.vertices() {
        for b in a + 1..=h.p() {
            if h.has_edge(a, b) {
                continue;
            }
            let joined = classes[a]
                .iter()
                .any(|&u| classes[b].iter().any(|&v| g.has_edge(u, v)));
            if joined {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn hom_equivalent(g: &Graph, h: &Graph) -> bool {
    !find_homs(g, h, 1).is_empty() && !find_homs(h, g, 1).is_empty()
}

/// Whether `m` retracts `g` onto the subgraph induced by `sub`.
pub fn is_retraction(g: &Graph, sub: &[usize], m: &VertexMapping) -> Result<bool> {
    if sub.is_empty() {
        return Err(Error::NotSubgraph("empty vertex set".to_string()));
    }
    let mut member = vec![false; g.p() + 1];
    for &v in sub {
        if !g.contains_vertex(v) {
            return Err(Error::NotSubgraph(format!("vertex {v} not in graph")));
        }
        if std::mem::replace(&mut member[v], true) {
            return Err(Error::NotSubgraph(format!("vertex {v} listed twice")));
        }
    }
    m.ensure_valid(g, g)?;
    if g.vertices().any(|v| !member[m.get(v)]) {
        return Ok(false);
    }
    if sub.iter().any(|&v| m.get(v) != v) {
        return Ok(false);
    }
    // image edges must lie inside the induced subgraph, i.e. be edges of g
    Ok(g.edges().iter().all(|&(u, v)| g.has_edge(m.get(u), m.get(v))))
}

/// A candidate totally-colored homomorphism.
#[derive(Debug, Clone, Copy)]
pub struct ColoredHom<'a> {
    pub source: &'a Graph,
    pub source_coloring: &'a TotalColoring,
    pub target: &'a Graph,
    pub target_coloring: &'a TotalColoring,
    pub map: &'a VertexMapping,
    pub wtype: WType,
}

/// Verifies a colored homomorphism against its W-type.
///
/// The report holds the source and target coloring checks (prefixed
/// `source`/`target`), then for the graceful family `C-3` edge-color
/// agreement and equality of the two edge color sets, and for set-ordered
/// types `C-1 sides`: every edge `uv` with `u` in X and `v` in Y lands with
/// `m(u)` in W and `m(v)` in Z.
pub fn colored_check(h: &ColoredHom<'_>) -> Result<VerifyReport> {
    require_hom(h.source, h.target, h.map)?;
    let mut report = VerifyReport::new();
    report.absorb("source ", verify(h.source, h.source_coloring, h.wtype)?);
    report.absorb("target ", verify(h.target, h.target_coloring, h.wtype)?);
    if h.wtype.is_graceful_family() {
        let bad: Vec<String> = h
            .source
            .edges()
            .iter()
            .filter(|&&(u, v)| {
                h.source_coloring.edge(u, v) != h.target_coloring.edge(h.map.get(u), h.map.get(v))
            })
            .map(|&(u, v)| format!("{u}-{v}"))
            .collect();
        report.push(Condition::C3.to_string(), bad.is_empty(), bad.join(" "));

        let src: BTreeSet<u32> = h.source_coloring.edge_colors().values().copied().collect();
        let tgt: BTreeSet<u32> = h.target_coloring.edge_colors().values().copied().collect();
        let cond = if h.wtype.is_odd() { Condition::C7 } else { Condition::C6 };
        report.push(format!("{cond} shared"), src == tgt, "f(E(G)) = g(E(H))");
    }
    if h.wtype.is_set_ordered() {
        let (passed, detail) = side_preservation(h);
        report.push("C-1 sides", passed, detail);
    }
    Ok(report)
}

fn side_preservation(h: &ColoredHom<'_>) -> (bool, String) {
    let src = set_ordered_sides(h.source, &h.source_coloring.vertex_table(h.source));
    let tgt = set_ordered_sides(h.target, &h.target_coloring.vertex_table(h.target));
    let (Some(src), Some(tgt)) = (src, tgt) else {
        return (false, "no set-ordered bipartition".to_string());
    };
    let mut bad = Vec::new();
    for &(a, b) in h.source.edges() {
        let (x, y) = if src.side(a) == Side::X { (a, b) } else { (b, a) };
        if tgt.side(h.map.get(x)) != Side::X || tgt.side(h.map.get(y)) != Side::Y {
            bad.push(format!("{x}-{y}"));
        }
    }
    (bad.is_empty(), bad.join(" "))
}

/// Colored homomorphisms `source -> target` that map each vertex onto a
/// target vertex of the same color and pass [`colored_check`].
pub fn find_colored_homs(
    source: &Graph,
    f: &TotalColoring,
    target: &Graph,
    g: &TotalColoring,
    wtype: WType,
    limit: usize,
) -> Result<Vec<VertexMapping>> {
    f.ensure_total(source)?;
    g.ensure_total(target)?;
    let fc = f.vertex_table(source);
    let gc = g.vertex_table(target);
    let mut out = Vec::new();
    for m in find_homs_with(source, target, usize::MAX, |v, c| fc[v] == gc[c]) {
        if out.len() >= limit {
            break;
        }
        let candidate = ColoredHom {
            source,
            source_coloring: f,
            target,
            target_coloring: g,
            map: &m,
            wtype,
        };
        if colored_check(&candidate)?.passed() {
            out.push(m);
        }
    }
    Ok(out)
}
