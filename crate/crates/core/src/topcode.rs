//! Topcode-matrices and number strings.
//!
//! A Topcode-matrix lists one column `(top, mid, bot)` per edge of a colored
//! graph: the two endpoint colors and the edge color, columns sorted by edge
//! color. Reading the cells in some order and concatenating their decimal
//! renderings gives a number string. Decoding goes the other way and is
//! ambiguous at both steps: a string splits into tokens in many ways, and
//! endpoint slots of equal color may or may not be the same vertex.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::coloring::{set_ordered_sides, TotalColoring, WType};
use crate::error::{Error, Result};
use crate::graph::{bipartition, content_lines, find_isomorphism_with, Graph};
use crate::hom::{find_colored_homs, VertexMapping};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TopcodeMatrix {
    top: Vec<u32>,
    mid: Vec<u32>,
    bot: Vec<u32>,
}

impl TopcodeMatrix {
    pub fn new(top: Vec<u32>, mid: Vec<u32>, bot: Vec<u32>) -> Result<TopcodeMatrix> {
        if top.is_empty() || top.len() != mid.len() || mid.len() != bot.len() {
            return Err(Error::MatrixInvalid(format!(
                "rows of length {}, {}, {}",
                top.len(),
                mid.len(),
                bot.len()
            )));
        }
        Ok(TopcodeMatrix { top, mid, bot })
    }

    pub fn q(&self) -> usize {
        self.mid.len()
    }

    pub fn top(&self) -> &[u32] {
        &self.top
    }

    pub fn mid(&self) -> &[u32] {
        &self.mid
    }

    pub fn bot(&self) -> &[u32] {
        &self.bot
    }

    pub fn column(&self, c: usize) -> (u32, u32, u32) {
        (self.top[c], self.mid[c], self.bot[c])
    }

    /// Checks the matrix against a graceful-family W-type.
    pub fn validate(&self, wtype: WType) -> Result<()> {
        if !wtype.is_graceful_family() {
            return Err(Error::UnsupportedWType(wtype));
        }
        let q = self.q();
        let max = wtype.max_vertex_color(q).expect("graceful family");
        for c in 0..q {
            let (t, m, b) = self.column(c);
            if m != t.abs_diff(b) {
                return Err(Error::MatrixInvalid(format!("column {}: {m} != |{t} - {b}|", c + 1)));
            }
            if t > b {
                return Err(Error::MatrixInvalid(format!("column {}: top {t} above bottom {b}", c + 1)));
            }
            for x in [t, b] {
                if x < 1 || x > max {
                    return Err(Error::MatrixInvalid(format!("column {}: color {x} outside [1,{max}]", c + 1)));
                }
            }
        }
        let mut mids = self.mid.clone();
        mids.sort_unstable();
        if mids != wtype.edge_color_set(q).expect("graceful family") {
            return Err(Error::MatrixInvalid(format!("edge colors {mids:?} are not the {wtype} set")));
        }
        if wtype.is_set_ordered() {
            let max_top = *self.top.iter().max().expect("q >= 1");
            let min_bot = *self.bot.iter().min().expect("q >= 1");
            if max_top >= min_bot {
                return Err(Error::MatrixInvalid(format!("max top {max_top} not below min bottom {min_bot}")));
            }
        }
        Ok(())
    }

    /// Same columns sorted by edge color.
    pub fn sorted(&self) -> TopcodeMatrix {
        let mut cols: Vec<_> = (0..self.q()).map(|c| self.column(c)).collect();
        cols.sort_by_key(|&(t, m, b)| (m, t, b));
        TopcodeMatrix {
            top: cols.iter().map(|c| c.0).collect(),
            mid: cols.iter().map(|c| c.1).collect(),
            bot: cols.iter().map(|c| c.2).collect(),
        }
    }

    pub fn to_text(&self) -> String {
        let row = |r: &[u32]| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
        format!("{}\n{}\n{}\n", row(&self.top), row(&self.mid), row(&self.bot))
    }

    /// Three lines of equally many integers: top, mid, bottom.
    pub fn from_text(text: &str) -> Result<TopcodeMatrix> {
        let mut rows = Vec::new();
        for (line, content) in content_lines(text) {
            if rows.len() == 3 {
                return Err(Error::parse(line, "more than three rows"));
            }
            let row = content
                .split_whitespace()
                .map(|w| w.parse::<u32>().map_err(|_| Error::parse(line, format!("`{w}` is not a color"))))
                .collect::<Result<Vec<u32>>>()?;
            rows.push(row);
        }
        if rows.len() != 3 {
            return Err(Error::parse(0, format!("expected three rows, got {}", rows.len())));
        }
        let bot = rows.pop().expect("three rows");
        let mid = rows.pop().expect("three rows");
        let top = rows.pop().expect("three rows");
        TopcodeMatrix::new(top, mid, bot)
    }
}

impl fmt::Display for TopcodeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// One column per edge, sorted by edge color. The top cell holds the X
/// endpoint for set-ordered types and the smaller color otherwise.
pub fn encode(g: &Graph, f: &TotalColoring, wtype: WType) -> Result<TopcodeMatrix> {
    if !wtype.is_graceful_family() {
        return Err(Error::UnsupportedWType(wtype));
    }
    f.ensure_total(g)?;
    if g.q() == 0 {
        return Err(Error::MatrixInvalid("graph has no edges".into()));
    }
    let colors = f.vertex_table(g);
    let sides = if wtype.is_set_ordered() {
        bipartition(g).ok_or(Error::NotBipartite)?;
        Some(
            set_ordered_sides(g, &colors)
                .ok_or_else(|| Error::MatrixInvalid("coloring is not set-ordered".into()))?,
        )
    } else {
        None
    };
    let mut cols = Vec::with_capacity(g.q());
    for &(u, v) in g.edges() {
        let (a, b) = match &sides {
            Some(s) if s.side(u) == crate::graph::Side::X => (u, v),
            Some(_) => (v, u),
            None if colors[u] <= colors[v] => (u, v),
            None => (v, u),
        };
        cols.push((colors[a], f.edge(u, v).expect("total"), colors[b]));
    }
    let m = TopcodeMatrix::new(
        cols.iter().map(|c| c.0).collect(),
        cols.iter().map(|c| c.1).collect(),
        cols.iter().map(|c| c.2).collect(),
    )?
    .sorted();
    m.validate(wtype)?;
    Ok(m)
}

/// All restricted growth strings of length `n` (set partitions of `n` items).
fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn extend(cur: &mut Vec<usize>, n: usize, max: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for b in 0..=max + 1 {
            cur.push(b);
            extend(cur, n, max.max(b), out);
            cur.pop();
        }
    }
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    let mut cur = vec![0];
    extend(&mut cur, n, 0, &mut out);
    out
}

/// Color-preserving isomorphism invariant used to bucket candidates.
fn invariant(g: &Graph, colors: &[u32]) -> Vec<(u32, usize, Vec<u32>)> {
    let mut key: Vec<_> = g
        .vertices()
        .map(|v| {
            let mut nb: Vec<u32> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
            nb.sort_unstable();
            (colors[v], g.degree(v), nb)
        })
        .collect();
    key.sort();
    key
}

/// Every colored graph that encodes to `t`, up to color-preserving
/// isomorphism.
///
/// Endpoint slots with the same color may be one vertex or several; each set
/// partition of each color's slots is tried and choices creating parallel
/// edges are dropped. The maximal merge comes first (when kept), then the
/// rest by vertex count. Top vertices are numbered before bottom-only ones,
/// each group by color and then first column.
pub fn decode(t: &TopcodeMatrix, wtype: WType, connected_only: bool, limit: usize) -> Result<Vec<(Graph, TotalColoring)>> {
    t.validate(wtype)?;
    let q = t.q();
    // slot 2c is the top of column c, slot 2c+1 its bottom
    let color = |s: usize| if s % 2 == 0 { t.top[s / 2] } else { t.bot[s / 2] };
    let mut groups: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for s in 0..2 * q {
        groups.entry(color(s)).or_default().push(s);
    }
    let groups: Vec<Vec<usize>> = groups.into_values().collect();
    let choices: Vec<Vec<Vec<usize>>> = groups.iter().map(|g| set_partitions(g.len())).collect();

    let mut found: Vec<(Graph, TotalColoring, Vec<u32>)> = Vec::new();
    let mut buckets: HashMap<Vec<(u32, usize, Vec<u32>)>, Vec<usize>> = HashMap::new();
    let mut pick = vec![0usize; groups.len()];
    let mut class = vec![(0usize, 0usize); 2 * q];
    loop {
        for (gi, grp) in groups.iter().enumerate() {
            for (k, &s) in grp.iter().enumerate() {
                class[s] = (gi, choices[gi][pick[gi]][k]);
            }
        }
        if let Some((g, colors)) = assemble(t, &class, &color) {
            if !connected_only || g.is_connected() {
                let key = invariant(&g, &colors);
                let bucket = buckets.entry(key).or_default();
                let dup = bucket.iter().any(|&i| {
                    let (h, _, hc) = &found[i];
                    find_isomorphism_with(&g, h, |a, b| colors[a] == hc[b]).is_some()
                });
                if !dup {
                    bucket.push(found.len());
                    let f = TotalColoring::from_vertex_colors(&g, &colors[1..]);
                    found.push((g, f, colors));
                }
            }
        }
        // odometer over the per-color partitions
        let mut i = 0;
        while i < pick.len() {
            pick[i] += 1;
            if pick[i] < choices[i].len() {
                break;
            }
            pick[i] = 0;
            i += 1;
        }
        if i == pick.len() {
            break;
        }
    }

    let fewest = groups.len();
    found.sort_by_key(|(g, _, _)| (g.p() != fewest, g.p()));
    Ok(found.into_iter().take(limit).map(|(g, f, _)| (g, f)).collect())
}

/// Builds the graph for one slot-to-class assignment; `None` on a parallel
/// edge. Returns vertex colors indexed by vertex id (index 0 unused).
fn assemble(t: &TopcodeMatrix, class: &[(usize, usize)], color: &dyn Fn(usize) -> u32) -> Option<(Graph, Vec<u32>)> {
    let q = t.q();
    // (is bottom-only, color, first column) orders the vertices
    let mut first: BTreeMap<(usize, usize), (bool, u32, usize)> = BTreeMap::new();
    for s in 0..2 * q {
        let key = (s % 2 == 1, color(s), s / 2);
        first
            .entry(class[s])
            .and_modify(|k| {
                if key < *k {
                    *k = key
                }
            })
            .or_insert(key);
    }
    let mut order: Vec<((usize, usize), (bool, u32, usize))> = first.into_iter().collect();
    order.sort_by_key(|&(_, k)| k);
    let id: HashMap<(usize, usize), usize> = order.iter().enumerate().map(|(i, &(c, _))| (c, i + 1)).collect();
    let mut colors = vec![0];
    colors.extend(order.iter().map(|&(_, (_, c, _))| c));
    let edges: Vec<(usize, usize)> = (0..q).map(|c| (id[&class[2 * c]], id[&class[2 * c + 1]])).collect();
    let g = Graph::from_edge_list(order.len(), edges.iter().copied()).ok()?;
    if g.q() != q {
        return None;
    }
    Some((g, colors))
}

/// Cell `3c + r` is row `r` (top, mid, bottom) of column `c`.
pub fn to_string(t: &TopcodeMatrix) -> String {
    (0..t.q())
        .flat_map(|c| {
            let (a, b, d) = t.column(c);
            [a, b, d]
        })
        .map(|x| x.to_string())
        .collect()
}

/// Renders the cells in the order given by `order`, a permutation of
/// `0..3q` over column-major cell indices.
pub fn to_string_ordered(t: &TopcodeMatrix, order: &[usize]) -> Result<String> {
    let n = 3 * t.q();
    let mut seen = vec![false; n];
    if order.len() != n || order.iter().any(|&i| i >= n || std::mem::replace(&mut seen[i], true)) {
        return Err(Error::MatrixInvalid(format!("cell order is not a permutation of 0..{n}")));
    }
    let cell = |i: usize| {
        let (a, b, d) = t.column(i / 3);
        [a, b, d][i % 3]
    };
    Ok(order.iter().map(|&i| cell(i).to_string()).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NsdSolution {
    /// Digit count of each token, in string order.
    pub widths: Vec<usize>,
    pub matrix: TopcodeMatrix,
}

fn digits(x: u32) -> usize {
    x.to_string().len()
}

/// Splits a number string into the cells of a `q`-column matrix.
///
/// With `assume_canonical` the tokens fill columns in order and the edge
/// colors are forced, so each column is parsed directly. Otherwise every
/// split into `3q` tokens is tried and the tokens are assigned to cells by
/// pairing tops with bottoms at each edge color. Tokens have no leading
/// zeros and never exceed the W-type's vertex color bound.
pub fn nsd_solve(s: &str, q: usize, wtype: WType, assume_canonical: bool, limit: usize) -> Result<Vec<NsdSolution>> {
    if !wtype.is_graceful_family() {
        return Err(Error::UnsupportedWType(wtype));
    }
    if let Some((i, c)) = s.char_indices().find(|(_, c)| !c.is_ascii_digit()) {
        return Err(Error::parse(1, format!("'{c}' at offset {i} is not a digit")));
    }
    let max = wtype.max_vertex_color(q).expect("graceful family");
    let max_width = digits(max);
    let cells = 3 * q;
    if q == 0 || s.len() < cells || s.len() > cells * max_width {
        return Err(Error::LengthInfeasible { len: s.len(), cells, max_width });
    }
    let bytes = s.as_bytes();
    let mids = wtype.edge_color_set(q).expect("graceful family");
    let mut out = Vec::new();
    if assume_canonical {
        canonical_split(bytes, 0, &mids, max, &mut Vec::new(), &mut Vec::new(), wtype, &mut out, limit);
    } else {
        let mut tokens = Vec::new();
        let mut widths = Vec::new();
        free_split(bytes, 0, cells, max, &mut tokens, &mut widths, &mids, wtype, &mut out);
        out.sort_by(|a, b| (&a.widths, &a.matrix).cmp(&(&b.widths, &b.matrix)));
        out.truncate(limit);
    }
    Ok(out)
}

/// Token starting at `pos` with `w` digits, if well formed and in `1..=max`.
fn token(bytes: &[u8], pos: usize, w: usize, max: u32) -> Option<u32> {
    if pos + w > bytes.len() || bytes[pos] == b'0' {
        return None;
    }
    let mut x: u32 = 0;
    for &b in &bytes[pos..pos + w] {
        x = x.checked_mul(10)?.checked_add((b - b'0') as u32)?;
    }
    (x <= max).then_some(x)
}

#[allow(clippy::too_many_arguments)]
fn canonical_split(
    bytes: &[u8],
    pos: usize,
    mids: &[u32],
    max: u32,
    cols: &mut Vec<(u32, u32, u32)>,
    widths: &mut Vec<usize>,
    wtype: WType,
    out: &mut Vec<NsdSolution>,
    limit: usize,
) {
    if out.len() >= limit {
        return;
    }
    let c = cols.len();
    if c == mids.len() {
        if pos != bytes.len() {
            return;
        }
        let m = TopcodeMatrix {
            top: cols.iter().map(|x| x.0).collect(),
            mid: cols.iter().map(|x| x.1).collect(),
            bot: cols.iter().map(|x| x.2).collect(),
        };
        if m.validate(wtype).is_ok() {
            out.push(NsdSolution { widths: widths.clone(), matrix: m });
        }
        return;
    }
    let mid = mids[c];
    let (mw, bw_max) = (digits(mid), digits(max));
    for tw in 1..=bw_max {
        let Some(top) = token(bytes, pos, tw, max) else { continue };
        if token(bytes, pos + tw, mw, max) != Some(mid) {
            continue;
        }
        let bot = top + mid;
        let bw = digits(bot);
        if token(bytes, pos + tw + mw, bw, max) != Some(bot) {
            continue;
        }
        cols.push((top, mid, bot));
        widths.extend([tw, mw, bw]);
        canonical_split(bytes, pos + tw + mw + bw, mids, max, cols, widths, wtype, out, limit);
        widths.truncate(widths.len() - 3);
        cols.pop();
    }
}

#[allow(clippy::too_many_arguments)]
fn free_split(
    bytes: &[u8],
    pos: usize,
    cells: usize,
    max: u32,
    tokens: &mut Vec<u32>,
    widths: &mut Vec<usize>,
    mids: &[u32],
    wtype: WType,
    out: &mut Vec<NsdSolution>,
) {
    let left = cells - tokens.len();
    let rest = bytes.len() - pos;
    let max_width = digits(max);
    if rest < left || rest > left * max_width {
        return;
    }
    if left == 0 {
        for m in assign_cells(tokens, mids, wtype) {
            out.push(NsdSolution { widths: widths.clone(), matrix: m });
        }
        return;
    }
    for w in 1..=max_width {
        if let Some(x) = token(bytes, pos, w, max) {
            tokens.push(x);
            widths.push(w);
            free_split(bytes, pos + w, cells, max, tokens, widths, mids, wtype, out);
            widths.pop();
            tokens.pop();
        }
    }
}

/// Distinct valid matrices whose cells are exactly the multiset `tokens`.
fn assign_cells(tokens: &[u32], mids: &[u32], wtype: WType) -> Vec<TopcodeMatrix> {
    let mut count: BTreeMap<u32, usize> = BTreeMap::new();
    for &t in tokens {
        *count.entry(t).or_default() += 1;
    }
    for m in mids {
        match count.get_mut(m) {
            Some(n) if *n > 0 => *n -= 1,
            _ => return Vec::new(),
        }
    }
    fn pair(
        c: usize,
        mids: &[u32],
        count: &mut BTreeMap<u32, usize>,
        tops: &mut Vec<u32>,
        wtype: WType,
        out: &mut Vec<TopcodeMatrix>,
    ) {
        if c == mids.len() {
            let m = TopcodeMatrix {
                top: tops.clone(),
                mid: mids.to_vec(),
                bot: tops.iter().zip(mids).map(|(t, m)| t + m).collect(),
            };
            if m.validate(wtype).is_ok() {
                out.push(m);
            }
            return;
        }
        let options: Vec<u32> = count.iter().filter(|(_, &n)| n > 0).map(|(&t, _)| t).collect();
        for t in options {
            let b = t + mids[c];
            *count.get_mut(&t).expect("present") -= 1;
            if count.get(&b).is_some_and(|&n| n > 0) {
                *count.get_mut(&b).expect("present") -= 1;
                tops.push(t);
                pair(c + 1, mids, count, tops, wtype, out);
                tops.pop();
                *count.get_mut(&b).expect("present") += 1;
            }
            *count.get_mut(&t).expect("present") += 1;
        }
    }
    let mut out = Vec::new();
    pair(0, mids, &mut count, &mut Vec::new(), wtype, &mut out);
    out.sort();
    out.dedup();
    out
}

/// A verified colored homomorphism between two decoded candidates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateHom {
    pub source: usize,
    pub target: usize,
    pub map: VertexMapping,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineResult {
    pub solution: NsdSolution,
    pub candidates: Vec<(Graph, TotalColoring)>,
    pub homs: Vec<CandidateHom>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PipelineLimits {
    pub solutions: usize,
    pub candidates: usize,
    pub pairings: usize,
}

impl Default for PipelineLimits {
    fn default() -> Self {
        PipelineLimits { solutions: 16, candidates: 256, pairings: 1024 }
    }
}

/// Number string to matrices to connected graphs to colored homomorphisms
/// between distinct candidates. Targets are visited in candidate order, so
/// maps onto the maximal merge come first.
pub fn nsd_pipeline(
    s: &str,
    q: usize,
    wtype: WType,
    assume_canonical: bool,
    limits: PipelineLimits,
) -> Result<Vec<PipelineResult>> {
    let solutions = match nsd_solve(s, q, wtype, assume_canonical, limits.solutions) {
        Err(Error::LengthInfeasible { .. }) => return Ok(Vec::new()),
        other => other?,
    };
    let mut out = Vec::new();
    for solution in solutions {
        let candidates = decode(&solution.matrix, wtype, true, limits.candidates)?;
        let mut homs = Vec::new();
        'targets: for (ti, (h, fh)) in candidates.iter().enumerate() {
            for (si, (g, fg)) in candidates.iter().enumerate() {
                if si == ti {
                    continue;
                }
                let room = limits.pairings - homs.len();
                for map in find_colored_homs(g, fg, h, fh, wtype, room)? {
                    homs.push(CandidateHom { source: si, target: ti, map });
                }
                if homs.len() >= limits.pairings {
                    break 'targets;
                }
            }
        }
        out.push(PipelineResult { solution, candidates, homs });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{to_odd, verify};

    fn reference() -> TopcodeMatrix {
        TopcodeMatrix::new(
            vec![6, 5, 6, 6, 6, 1, 1, 1, 1, 1],
            (1..=10).collect(),
            vec![7, 7, 9, 10, 11, 7, 8, 9, 10, 11],
        )
        .unwrap()
    }

    fn p2() -> (Graph, TotalColoring) {
        let g = Graph::path(2).unwrap();
        let f = TotalColoring::from_vertex_colors(&g, &[1, 2]);
        (g, f)
    }

    #[test]
    fn bell_numbers() {
        let sizes: Vec<usize> = (0..=6).map(|n| set_partitions(n).len()).collect();
        assert_eq!(sizes, vec![1, 1, 2, 5, 15, 52, 203]);
    }

    #[test]
    fn encode_single_edge() {
        let (g, f) = p2();
        let t = encode(&g, &f, WType::SetOrderedGraceful).unwrap();
        assert_eq!((t.top(), t.mid(), t.bot()), (&[1][..], &[1][..], &[2][..]));
        assert_eq!(to_string(&t), "112");
    }

    #[test]
    fn encode_rejects_non_bipartite_for_set_ordered() {
        let g = Graph::complete(3).unwrap();
        let f = TotalColoring::from_vertex_colors(&g, &[1, 2, 4]);
        assert_eq!(encode(&g, &f, WType::SetOrderedGraceful), Err(Error::NotBipartite));
        assert!(encode(&g, &f, WType::Graceful).is_ok());
    }

    #[test]
    fn validate_catches_bad_columns() {
        let bad = TopcodeMatrix::new(vec![1], vec![2], vec![2]).unwrap();
        assert!(matches!(bad.validate(WType::Graceful), Err(Error::MatrixInvalid(_))));
        let dup = TopcodeMatrix::new(vec![1, 2], vec![1, 1], vec![2, 3]).unwrap();
        assert!(matches!(dup.validate(WType::Graceful), Err(Error::MatrixInvalid(_))));
        assert!(reference().validate(WType::SetOrderedGraceful).is_ok());
        assert_eq!(reference().validate(WType::Bipartite), Err(Error::UnsupportedWType(WType::Bipartite)));
    }

    #[test]
    fn decode_single_edge() {
        let t = TopcodeMatrix::new(vec![1], vec![1], vec![2]).unwrap();
        let out = decode(&t, WType::SetOrderedGraceful, false, 10).unwrap();
        assert_eq!(out, vec![p2()]);
    }

    #[test]
    fn decode_shared_top_color() {
        let t = TopcodeMatrix::new(vec![1, 1], vec![1, 2], vec![2, 3]).unwrap();
        let all = decode(&t, WType::SetOrderedGraceful, false, 10).unwrap();
        assert_eq!(all.len(), 2);
        assert_eq!(all[0].0, Graph::from_edge_list(3, [(1, 2), (1, 3)]).unwrap());
        assert!(!all[1].0.is_connected());
        for (g, f) in &all {
            assert_eq!(&encode(g, f, WType::SetOrderedGraceful).unwrap(), &t);
        }
        assert_eq!(decode(&t, WType::SetOrderedGraceful, true, 10).unwrap().len(), 1);
    }

    #[test]
    fn reference_maximal_merge() {
        let out = decode(&reference(), WType::SetOrderedGraceful, true, 1).unwrap();
        let (g, f) = &out[0];
        assert_eq!((g.p(), g.q()), (8, 10));
        assert_eq!(f.vertex_table(g)[1..], [1, 5, 6, 7, 8, 9, 10, 11]);
        assert_eq!(encode(g, f, WType::SetOrderedGraceful).unwrap(), reference());
    }

    #[test]
    fn reference_string_and_odd_mids() {
        let s = to_string(&reference());
        assert_eq!(s.len(), 35);
        assert_eq!(s, "61752763964106511167178189191011011");
        let (g, f) = decode(&reference(), WType::SetOrderedGraceful, true, 1).unwrap().remove(0);
        let odd = to_odd(&g, &f).unwrap();
        let t = encode(&g, &odd, WType::SetOrderedOddGraceful).unwrap();
        assert_eq!(t.mid(), (0..10).map(|i| 2 * i + 1).collect::<Vec<u32>>());
    }

    #[test]
    fn ordered_strings() {
        let t = reference();
        let id: Vec<usize> = (0..30).collect();
        assert_eq!(to_string_ordered(&t, &id).unwrap(), to_string(&t));
        let mut swap = id.clone();
        swap.swap(0, 3); // top 6 vs top 5: differ
        assert_ne!(to_string_ordered(&t, &swap).unwrap(), to_string(&t));
        let mut same = id.clone();
        same.swap(0, 6); // top 6 vs top 6: same rendering
        assert_eq!(to_string_ordered(&t, &same).unwrap(), to_string(&t));
        assert!(to_string_ordered(&t, &id[1..]).is_err());
    }

    #[test]
    fn nsd_small_cases() {
        let sols = nsd_solve("112", 1, WType::Graceful, true, 10).unwrap();
        assert_eq!(sols.len(), 1);
        assert_eq!(sols[0].matrix, TopcodeMatrix::new(vec![1], vec![1], vec![2]).unwrap());
        assert_eq!(nsd_solve("112", 1, WType::Graceful, false, 10).unwrap().len(), 1);
        assert!(matches!(
            nsd_solve("11", 1, WType::Graceful, true, 10),
            Err(Error::LengthInfeasible { len: 2, cells: 3, max_width: 1 })
        ));
        assert!(matches!(nsd_solve("112", 1, WType::Bipartite, true, 10), Err(Error::UnsupportedWType(_))));
    }

    #[test]
    fn nsd_canonical_round_trip_reference() {
        let s = to_string(&reference());
        let sols = nsd_solve(&s, 10, WType::SetOrderedGraceful, true, 10).unwrap();
        assert!(sols.iter().any(|x| x.matrix == reference()));
    }

    #[test]
    fn nsd_free_assignment() {
        // path 1-3-2: columns (2,1,3) and (1,2,3), canonical string "213123"
        let sols = nsd_solve("213123", 2, WType::Graceful, false, 100).unwrap();
        let want = TopcodeMatrix::new(vec![2, 1], vec![1, 2], vec![3, 3]).unwrap();
        assert!(sols.iter().any(|x| x.matrix == want));
        for s in &sols {
            assert!(s.matrix.validate(WType::Graceful).is_ok());
        }
    }

    #[test]
    fn s1_has_no_canonical_solution() {
        let s1 = "617725639104665117611678711891089111011";
        assert_eq!(s1.len(), 39);
        assert!(nsd_solve(s1, 10, WType::SetOrderedGraceful, true, 10).unwrap().is_empty());
    }

    #[test]
    fn pipeline_single_edge() {
        let out = nsd_pipeline("112", 1, WType::SetOrderedGraceful, true, PipelineLimits::default()).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].candidates, vec![p2()]);
        assert!(out[0].homs.is_empty());
        assert!(nsd_pipeline("1", 1, WType::SetOrderedGraceful, true, PipelineLimits::default())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn decoded_candidates_verify() {
        // P4 colored 1,4,2,3: edge colors 3,2,1
        let g = Graph::path(4).unwrap();
        let f = TotalColoring::from_vertex_colors(&g, &[1, 4, 2, 3]);
        let t = encode(&g, &f, WType::Graceful).unwrap();
        let out = decode(&t, WType::Graceful, false, 100).unwrap();
        assert!(out.iter().any(|(h, _)| crate::graph::is_isomorphic(h, &g)));
        for (h, fh) in &out {
            assert!(verify(h, fh, WType::Graceful).unwrap().passed());
            assert_eq!(encode(h, fh, WType::Graceful).unwrap(), t);
        }
    }
}
