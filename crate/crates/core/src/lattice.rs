//! Graphic lattices over a base of graphs.
//!
//! Two binary operations combine graphs: the edge-join `A (-) B` adds bridging
//! edges between chosen vertex pairs, and the vertex-coincide `A (.) B` glues
//! chosen pairs into single vertices. A [`LatticeElement`] records a
//! left-associated expression over base indices with an explicit
//! [`JoinSpec`] at every step, so building it is deterministic.
//!
//! Vertex numbering of a result: the left operand keeps its ids. For
//! edge-join, right vertex `v` becomes `p(A) + v`; for vertex-coincide,
//! unmatched right vertices are appended in increasing order.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::coloring::{TotalColoring, WType};
use crate::error::{Error, Result};
use crate::graph::{content_lines, disjoint_union, edge, Edge, Graph};
use crate::hom::{check_hom, colored_check, ColoredHom, VertexMapping};
use crate::report::VerifyReport;

/// Vertex pairs `(left, right)` chosen for one operation step.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JoinSpec {
    pairs: Vec<(usize, usize)>,
}

impl JoinSpec {
    pub fn new(pairs: Vec<(usize, usize)>) -> Result<JoinSpec> {
        if pairs.is_empty() {
            return Err(Error::EmptyJoinSpec);
        }
        Ok(JoinSpec { pairs })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    fn check_range(&self, a: &Graph, b: &Graph) -> Result<()> {
        for &(l, r) in &self.pairs {
            if !a.contains_vertex(l) {
                return Err(Error::VertexOutOfRange { vertex: l, max: a.p() });
            }
            if !b.contains_vertex(r) {
                return Err(Error::VertexOutOfRange { vertex: r, max: b.p() });
            }
        }
        Ok(())
    }
}

impl fmt::Display for JoinSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs.iter().map(|(l, r)| format!("{l}:{r}")).collect();
        f.write_str(&parts.join(" "))
    }
}

/// `A (-) B`: disjoint union plus one new edge per pair.
pub fn edge_join(a: &Graph, b: &Graph, s: &JoinSpec) -> Result<Graph> {
    s.check_range(a, b)?;
    let mut seen = BTreeSet::new();
    for &pair in s.pairs() {
        if !seen.insert(pair) {
            return Err(Error::DuplicateJoin(pair));
        }
    }
    let pa = a.p();
    let mut edges: Vec<Edge> = disjoint_union(a, b).edges().to_vec();
    edges.extend(s.pairs().iter().map(|&(l, r)| (l, pa + r)));
    Graph::from_edge_list(pa + b.p(), edges)
}

/// Result of gluing vertices: the quotient graph, the vertex map from the
/// glued graph onto it, and the edges that became loops (dropped).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    pub graph: Graph,
    pub map: VertexMapping,
    pub loops: Vec<Edge>,
}

/// Identifies each pair of vertices of `g` (transitively). Classes are
/// numbered by their smallest member; parallel edges collapse and edges
/// inside a class are dropped and reported.
pub fn quotient(g: &Graph, pairs: &[(usize, usize)]) -> Result<Quotient> {
    let p = g.p();
    let mut parent: Vec<usize> = (0..=p).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(a, b) in pairs {
        for v in [a, b] {
            if !g.contains_vertex(v) {
                return Err(Error::VertexOutOfRange { vertex: v, max: p });
            }
        }
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        // keep the smaller id as root so roots are class minima
        if ra < rb {
            parent[rb] = ra;
        } else {
            parent[ra] = rb;
        }
    }
    let mut id = vec![0; p + 1];
    let mut next = 0;
    for v in 1..=p {
        let r = find(&mut parent, v);
        if r == v {
            next += 1;
            id[v] = next;
        } else {
            id[v] = id[r];
        }
    }
    let mut edges = Vec::new();
    let mut loops = Vec::new();
    for &(u, v) in g.edges() {
        if id[u] == id[v] {
            loops.push((u, v));
        } else {
            edges.push((id[u], id[v]));
        }
    }
    Ok(Quotient {
        graph: Graph::from_edge_list(next, edges)?,
        map: VertexMapping::from_images(id[1..].to_vec()),
        loops,
    })
}

/// `A (.) B` together with where each vertex of `A` and `B` ended up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coincidence {
    pub graph: Graph,
    pub left: VertexMapping,
    pub right: VertexMapping,
}

/// `A (.) B`: glues each `(left, right)` pair into one vertex.
pub fn vertex_coincide(a: &Graph, b: &Graph, s: &JoinSpec) -> Result<Coincidence> {
    s.check_range(a, b)?;
    let mut lefts = BTreeSet::new();
    let mut rights = BTreeSet::new();
    for &(l, r) in s.pairs() {
        if !lefts.insert(l) || !rights.insert(r) {
            return Err(Error::DuplicateJoin((l, r)));
        }
    }
    let pa = a.p();
    let glued: Vec<(usize, usize)> = s.pairs().iter().map(|&(l, r)| (l, pa + r)).collect();
    let q = quotient(&disjoint_union(a, b), &glued)?;
    if let Some(&(u, _)) = q.loops.first() {
        return Err(Error::LoopRejected(u));
    }
    let images = q.map.images();
    Ok(Coincidence {
        left: VertexMapping::from_images(images[..pa].to_vec()),
        right: VertexMapping::from_images(images[pa..].to_vec()),
        graph: q.graph,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    Ominus,
    Odot,
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Op::Ominus => "ominus",
            Op::Odot => "odot",
        })
    }
}

impl FromStr for Op {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Op, String> {
        match s {
            "ominus" => Ok(Op::Ominus),
            "odot" => Ok(Op::Odot),
            _ => Err(format!("unknown operation '{s}'")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Step {
    pub op: Op,
    /// 1-based index into the base.
    pub base: usize,
    pub spec: JoinSpec,
}

/// `G_{first} op_1 G_{b_1} op_2 ...`, evaluated left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticeElement {
    first: usize,
    steps: Vec<Step>,
}

impl LatticeElement {
    pub fn new(first: usize, steps: Vec<Step>) -> LatticeElement {
        LatticeElement { first, steps }
    }

    pub fn first(&self) -> usize {
        self.first
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Multiplicity `a_k` of each base graph.
    pub fn coefficients(&self, base_len: usize) -> Vec<usize> {
        let mut a = vec![0; base_len];
        for k in std::iter::once(self.first).chain(self.steps.iter().map(|s| s.base)) {
            if (1..=base_len).contains(&k) {
                a[k - 1] += 1;
            }
        }
        a
    }

    fn check_indices(&self, base_len: usize) -> Result<()> {
        for k in std::iter::once(self.first).chain(self.steps.iter().map(|s| s.base)) {
            if !(1..=base_len).contains(&k) {
                return Err(Error::BadBaseIndex { index: k, len: base_len });
            }
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("base {}\n", self.first);
        for s in &self.steps {
            out.push_str(&format!("base {}\nop {} {}\n", s.base, s.op, s.spec));
        }
        out
    }

    /// Parses `base k` followed by `base k` / `op <ominus|odot> l:r ...` pairs.
    pub fn from_text(text: &str) -> Result<LatticeElement> {
        let mut first = None;
        let mut pending: Option<usize> = None;
        let mut steps = Vec::new();
        let mut last_line = 0;
        for (line, content) in content_lines(text) {
            last_line = line;
            let mut words = content.split_whitespace();
            match words.next() {
                Some("base") => {
                    let k: usize = words
                        .next()
                        .and_then(|w| w.parse().ok())
                        .ok_or_else(|| Error::parse(line, "expected 'base <k>'"))?;
                    if words.next().is_some() {
                        return Err(Error::parse(line, "trailing input after base index"));
                    }
                    if first.is_none() {
                        first = Some(k);
                    } else if pending.replace(k).is_some() {
                        return Err(Error::parse(line, "two base lines without an op between"));
                    }
                }
                Some("op") => {
                    let base = pending.take().ok_or_else(|| Error::parse(line, "op without a preceding base"))?;
                    let op: Op = words
                        .next()
                        .ok_or_else(|| Error::parse(line, "missing operation"))?
                        .parse()
                        .map_err(|m: String| Error::parse(line, m))?;
                    let pairs = words
                        .map(|w| {
                            let (l, r) = w.split_once(':')?;
                            Some((l.parse().ok()?, r.parse().ok()?))
                        })
                        .collect::<Option<Vec<(usize, usize)>>>()
                        .ok_or_else(|| Error::parse(line, "pairs must look like l:r"))?;
                    let spec = JoinSpec::new(pairs).map_err(|e| Error::parse(line, e.to_string()))?;
                    steps.push(Step { op, base, spec });
                }
                _ => return Err(Error::parse(line, "expected 'base' or 'op'")),
            }
        }
        if pending.is_some() {
            return Err(Error::parse(last_line, "base line without its op"));
        }
        let first = first.ok_or(Error::EmptyElement)?;
        Ok(LatticeElement { first, steps })
    }
}

impl fmt::Display for LatticeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Rejects coefficient vectors that select nothing (`sum a_k = 0`).
pub fn check_coefficients(a: &[usize]) -> Result<()> {
    if a.iter().sum::<usize>() == 0 {
        return Err(Error::EmptyElement);
    }
    Ok(())
}

/// Evaluates `e` over `base`.
pub fn build(base: &[Graph], e: &LatticeElement) -> Result<Graph> {
    if base.is_empty() {
        return Err(Error::EmptyElement);
    }
    e.check_indices(base.len())?;
    let mut g = base[e.first - 1].clone();
    for s in &e.steps {
        let b = &base[s.base - 1];
        g = match s.op {
            Op::Ominus => edge_join(&g, b, &s.spec)?,
            Op::Odot => vertex_coincide(&g, b, &s.spec)?.graph,
        };
    }
    Ok(g)
}

/// Source element, its image under the base maps, and the assembled map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeHom {
    pub source: Graph,
    pub image: Graph,
    pub map: VertexMapping,
    /// Image edges destroyed by a gluing (endpoints identified).
    pub loops: Vec<Edge>,
    /// `map` is a homomorphism and no image edge was lost to a loop.
    pub verdict: bool,
}

/// Builds `e` over `base_g` and over `base_h`, gluing/joining in the image
/// at the `theta`-images of the source pairs, and checks the assembled map.
pub fn lattice_hom(
    base_g: &[Graph],
    base_h: &[Graph],
    thetas: &[VertexMapping],
    e: &LatticeElement,
) -> Result<LatticeHom> {
    if base_g.len() != base_h.len() || base_g.len() != thetas.len() {
        return Err(Error::ArityMismatch(format!(
            "{} source bases, {} target bases, {} maps",
            base_g.len(),
            base_h.len(),
            thetas.len()
        )));
    }
    if base_g.is_empty() {
        return Err(Error::EmptyElement);
    }
    e.check_indices(base_g.len())?;
    for (k, ((g, h), t)) in base_g.iter().zip(base_h).zip(thetas).enumerate() {
        if !check_hom(g, h, t)? {
            return Err(Error::NotHomomorphism(format!("base map {}", k + 1)));
        }
    }

    let mut src = base_g[e.first - 1].clone();
    let mut img = base_h[e.first - 1].clone();
    let mut map: Vec<usize> = thetas[e.first - 1].images().to_vec();
    let mut loops = Vec::new();

    for s in &e.steps {
        let (g, h, t) = (&base_g[s.base - 1], &base_h[s.base - 1], &thetas[s.base - 1]);
        let (ps, pi) = (src.p(), img.p());
        let mapped: Vec<(usize, usize)> = s
            .spec
            .pairs()
            .iter()
            .map(|&(l, r)| {
                let l_img = map.get(l.wrapping_sub(1)).copied();
                let r_img = g.contains_vertex(r).then(|| t.get(r));
                match (l_img, r_img) {
                    (Some(a), Some(b)) => Ok((a, b)),
                    (None, _) => Err(Error::VertexOutOfRange { vertex: l, max: ps }),
                    (_, None) => Err(Error::VertexOutOfRange { vertex: r, max: g.p() }),
                }
            })
            .collect::<Result<_>>()?;
        match s.op {
            Op::Ominus => {
                let next_src = edge_join(&src, g, &s.spec)?;
                let mut unique = Vec::new();
                let mut seen = BTreeSet::new();
                for pair in mapped {
                    if seen.insert(pair) {
                        unique.push(pair);
                    }
                }
                img = edge_join(&img, h, &JoinSpec::new(unique)?)?;
                map.extend(g.vertices().map(|v| pi + t.get(v)));
                src = next_src;
            }
            Op::Odot => {
                let c = vertex_coincide(&src, g, &s.spec)?;
                let glued: Vec<(usize, usize)> = mapped.iter().map(|&(a, b)| (a, pi + b)).collect();
                let q = quotient(&disjoint_union(&img, h), &glued)?;
                let mut next = vec![0; c.graph.p()];
                for u in src.vertices() {
                    next[c.left.get(u) - 1] = q.map.get(map[u - 1]);
                }
                for v in g.vertices() {
                    next[c.right.get(v) - 1] = q.map.get(pi + t.get(v));
                }
                loops.extend(q.loops.iter().map(|&(u, v)| {
                    // report in image-before-gluing ids
                    let side = |x: usize| if x > pi { x - pi } else { x };
                    edge(side(u), side(v))
                }));
                map = next;
                img = q.graph;
                src = c.graph;
            }
        }
    }
    let map = VertexMapping::from_images(map);
    let verdict = check_hom(&src, &img, &map)? && loops.is_empty();
    Ok(LatticeHom { source: src, image: img, map, loops, verdict })
}

/// One verified colored homomorphism `G -> H` for a fixed target graph `H`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RegistryEntry {
    pub source: Graph,
    pub source_coloring: TotalColoring,
    pub target_coloring: TotalColoring,
    pub map: VertexMapping,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Admission {
    Added(usize),
    Duplicate(usize),
    Rejected(VerifyReport),
}

/// Catalog of verified W-type homomorphisms onto one target graph.
/// Selecting a member means choosing exactly one entry.
#[derive(Debug, Clone)]
pub struct HomRegistry {
    target: Graph,
    wtype: WType,
    entries: Vec<RegistryEntry>,
}

impl HomRegistry {
    pub fn new(target: Graph, wtype: WType) -> HomRegistry {
        HomRegistry { target, wtype, entries: Vec::new() }
    }

    pub fn target(&self) -> &Graph {
        &self.target
    }

    pub fn wtype(&self) -> WType {
        self.wtype
    }

    pub fn entries(&self) -> &[RegistryEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn add(&mut self, entry: RegistryEntry) -> Result<Admission> {
        if let Some(i) = self.entries.iter().position(|e| *e == entry) {
            return Ok(Admission::Duplicate(i));
        }
        let report = colored_check(&ColoredHom {
            source: &entry.source,
            source_coloring: &entry.source_coloring,
            target: &self.target,
            target_coloring: &entry.target_coloring,
            map: &entry.map,
            wtype: self.wtype,
        })?;
        if !report.passed() {
            return Ok(Admission::Rejected(report));
        }
        self.entries.push(entry);
        Ok(Admission::Added(self.entries.len() - 1))
    }

    /// Entries grouped by the coloring of the target.
    pub fn by_target(&self) -> BTreeMap<&TotalColoring, Vec<&RegistryEntry>> {
        let mut out: BTreeMap<&TotalColoring, Vec<&RegistryEntry>> = BTreeMap::new();
        for e in &self.entries {
            out.entry(&e.target_coloring).or_default().push(e);
        }
        out
    }

    /// The entry picked by a 0/1 coefficient vector summing to exactly 1.
    pub fn select(&self, coefficients: &[u32]) -> Option<&RegistryEntry> {
        if coefficients.len() != self.entries.len() || coefficients.iter().any(|&a| a > 1) {
            return None;
        }
        let mut ones = coefficients.iter().enumerate().filter(|(_, &a)| a == 1);
        match (ones.next(), ones.next()) {
            (Some((i, _)), None) => Some(&self.entries[i]),
            _ => None,
        }
    }

    pub fn contains(&self, entry: &RegistryEntry) -> bool {
        self.entries.contains(entry)
    }
}

/// All entries across registries, tagged with the registry they came from.
pub fn union(registries: &[HomRegistry]) -> Vec<(usize, &RegistryEntry)> {
    registries
        .iter()
        .enumerate()
        .flat_map(|(k, r)| r.entries.iter().map(move |e| (k, e)))
        .collect()
}
