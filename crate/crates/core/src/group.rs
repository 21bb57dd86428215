//! Every-zero graphic groups.
//!
//! From a colored graph `(G, f)` and a modulus `M` we build `M` colorings
//! `f_1 = f, f_2, ..., f_M` of the same graph. Vertex colors of `f_i` are
//! those of `f` shifted by `i - 1` modulo `M` (each color keeps its multiple
//! of `M` and only its residue moves, so `f_1 = f` exactly); edge colors are
//! carried over unchanged. For any chosen zero `k`, `G_i (+) G_j` is the
//! element `lambda = i + j - k (mod M)`, and pointwise
//! `f_i(x) + f_j(x) - f_k(x) = f_lambda(x) (mod M)`.

use crate::coloring::TotalColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hom::{hom_violations, VertexMapping};
use crate::report::VerifyReport;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphicGroup {
    graph: Graph,
    modulus: u32,
    elements: Vec<TotalColoring>,
}

/// Shifts every vertex residue of `f` by `shift` modulo `modulus`.
fn shifted(g: &Graph, f: &TotalColoring, modulus: u32, shift: u32) -> TotalColoring {
    let mut out = f.clone();
    for v in g.vertices() {
        let c = f.vertex(v).expect("total coloring");
        let block = c - c % modulus;
        out.set_vertex(v, block + (c % modulus + shift) % modulus);
    }
    out
}

pub fn generate(g: &Graph, f: &TotalColoring, modulus: u32) -> Result<GraphicGroup> {
    if modulus < 1 {
        return Err(Error::BadModulus(modulus as i64));
    }
    f.ensure_total(g)?;
    let elements = (0..modulus).map(|s| shifted(g, f, modulus, s)).collect();
    Ok(GraphicGroup { graph: g.clone(), modulus, elements })
}

impl GraphicGroup {
    /// Reassembles a group from stored elements without re-deriving them.
    pub fn from_parts(graph: Graph, modulus: u32, elements: Vec<TotalColoring>) -> Result<GraphicGroup> {
        if modulus < 1 {
            return Err(Error::BadModulus(modulus as i64));
        }
        if elements.len() != modulus as usize {
            return Err(Error::ArityMismatch(format!(
                "{} elements for modulus {modulus}",
                elements.len()
            )));
        }
        for e in &elements {
            e.ensure_total(&graph)?;
        }
        Ok(GraphicGroup { graph, modulus, elements })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn elements(&self) -> &[TotalColoring] {
        &self.elements
    }

    /// Element `i` in `1..=M`.
    pub fn element(&self, i: usize) -> &TotalColoring {
        &self.elements[i - 1]
    }

    #[cfg(test)]
    pub(crate) fn element_mut(&mut self, i: usize) -> &mut TotalColoring {
        &mut self.elements[i - 1]
    }

    /// Index of `G_i (+) G_j` with zero `G_k`.
    pub fn add(&self, i: i64, j: i64, k: i64) -> Result<usize> {
        add_index(i, j, k, self.modulus)
    }

    /// Vertex colors `f_i + f_j - f_k`, in vertex order.
    fn combine(&self, i: usize, j: usize, k: usize) -> Vec<i64> {
        self.graph
            .vertices()
            .map(|x| {
                let c = |e: usize| self.element(e).vertex(x).expect("total") as i64;
                c(i) + c(j) - c(k)
            })
            .collect()
    }

    /// The element whose vertex colors are congruent to `colors` mod `M`.
    fn locate(&self, colors: &[i64]) -> Option<usize> {
        let m = self.modulus as i64;
        (1..=self.modulus as usize).find(|&e| {
            self.graph
                .vertices()
                .zip(colors)
                .all(|(x, &c)| (self.element(e).vertex(x).expect("total") as i64 - c).rem_euclid(m) == 0)
        })
    }

    /// `table[k-1][i-1][j-1]`: the element matching `f_i + f_j - f_k`, found
    /// from the colorings themselves.
    fn operation_table(&self) -> Vec<Vec<Vec<Option<usize>>>> {
        let m = self.modulus as usize;
        (1..=m)
            .map(|k| {
                (1..=m)
                    .map(|i| (1..=m).map(|j| self.locate(&self.combine(i, j, k))).collect())
                    .collect()
            })
            .collect()
    }
}

/// `((i + j - k - 1) mod M) + 1` for indices in `1..=M`.
pub fn add_index(i: i64, j: i64, k: i64, modulus: u32) -> Result<usize> {
    if modulus < 1 {
        return Err(Error::BadModulus(modulus as i64));
    }
    for x in [i, j, k] {
        if x < 1 || x > modulus as i64 {
            return Err(Error::BadIndex { index: x, modulus });
        }
    }
    Ok(index_sum(i, j, k, modulus))
}

fn index_sum(i: i64, j: i64, k: i64, modulus: u32) -> usize {
    ((i + j - k - 1).rem_euclid(modulus as i64) + 1) as usize
}

/// Checks the every-zero group laws on the colorings.
///
/// The operation table is built by matching `f_i + f_j - f_k` against the
/// elements modulo `M`; closure means a match exists and equals the index
/// formula. Commutativity, associativity, identity and inverses are then
/// checked on that table for every choice of zero `k`.
pub fn verify_every_zero(group: &GraphicGroup) -> VerifyReport {
    let m = group.modulus as usize;
    let mm = group.modulus as i64;
    let g = &group.graph;
    let base = group.element(1);
    let mut report = VerifyReport::new();

    let mut bad = Vec::new();
    for e in 1..=m {
        for &(u, v) in g.edges() {
            let c = group.element(e).edge(u, v).expect("total") as i64;
            let b = base.edge(u, v).expect("total") as i64;
            if (c - b).rem_euclid(mm) != 0 {
                bad.push(format!("f{e}({u}-{v})"));
            }
        }
    }
    report.push("edge residues", bad.is_empty(), bad.join(" "));

    let mut bad = Vec::new();
    for k in 1..=m {
        for i in 1..=m {
            for j in 1..=m {
                let lambda = index_sum(i as i64, j as i64, k as i64, group.modulus);
                let sum = group.combine(i, j, k);
                let target = group.element(lambda);
                let off = g
                    .vertices()
                    .zip(&sum)
                    .find(|&(x, &c)| (target.vertex(x).expect("total") as i64 - c).rem_euclid(mm) != 0);
                if let Some((x, _)) = off {
                    bad.push(format!("({i},{j},{k})@{x}"));
                }
            }
        }
    }
    report.push("pointwise", bad.is_empty(), first_few(&bad));

    let table = group.operation_table();
    let op = |k: usize, i: usize, j: usize| table[k - 1][i - 1][j - 1];

    let mut bad = Vec::new();
    for k in 1..=m {
        for i in 1..=m {
            for j in 1..=m {
                if op(k, i, j) != Some(index_sum(i as i64, j as i64, k as i64, group.modulus)) {
                    bad.push(format!("({i},{j},{k})"));
                }
            }
        }
    }
    report.push("closure", bad.is_empty(), first_few(&bad));

    let mut bad = Vec::new();
    for k in 1..=m {
        for i in 1..=m {
            for j in i + 1..=m {
                if op(k, i, j).is_none() || op(k, i, j) != op(k, j, i) {
                    bad.push(format!("({i},{j},{k})"));
                }
            }
        }
    }
    report.push("commutativity", bad.is_empty(), first_few(&bad));

    let mut bad = Vec::new();
    for k in 1..=m {
        for i in 1..=m {
            for j in 1..=m {
                for s in 1..=m {
                    let left = op(k, i, j).and_then(|ij| op(k, ij, s));
                    let right = op(k, j, s).and_then(|js| op(k, i, js));
                    if left.is_none() || left != right {
                        bad.push(format!("({i},{j},{s};{k})"));
                    }
                }
            }
        }
    }
    report.push("associativity", bad.is_empty(), first_few(&bad));

    let mut bad = Vec::new();
    for k in 1..=m {
        for i in 1..=m {
            let inverse = index_sum(2 * k as i64, -(i as i64), 0, group.modulus);
            if op(k, i, k) != Some(i) || op(k, k, i) != Some(i) {
                bad.push(format!("identity({i};{k})"));
            }
            if op(k, i, inverse) != Some(k) {
                bad.push(format!("inverse({i};{k})"));
            }
        }
    }
    report.push("every-zero", bad.is_empty(), first_few(&bad));
    report
}

fn first_few(items: &[String]) -> String {
    let mut s = items.iter().take(8).cloned().collect::<Vec<_>>().join(" ");
    if items.len() > 8 {
        s.push_str(&format!(" (+{} more)", items.len() - 8));
    }
    s
}

/// Checks a family of element-wise homomorphisms `theta_i: G_i -> H_i`.
///
/// Every `theta_i` must be a graph homomorphism (offending edges are listed),
/// and both groups must produce the same operation table, so the image of
/// `G_i (+)_k G_j` is `H_{add(i,j,k)}`.
pub fn group_hom(source: &GraphicGroup, target: &GraphicGroup, thetas: &[VertexMapping]) -> Result<VerifyReport> {
    if source.modulus != target.modulus {
        return Err(Error::ArityMismatch(format!(
            "moduli differ: {} vs {}",
            source.modulus, target.modulus
        )));
    }
    if thetas.len() != source.modulus as usize {
        return Err(Error::ArityMismatch(format!(
            "{} maps for {} elements",
            thetas.len(),
            source.modulus
        )));
    }
    let mut report = VerifyReport::new();
    for (i, theta) in thetas.iter().enumerate() {
        let bad = hom_violations(&source.graph, &target.graph, theta)?;
        let detail: Vec<String> = bad.iter().map(|(u, v)| format!("{u}-{v}")).collect();
        report.push(format!("theta {}", i + 1), bad.is_empty(), detail.join(" "));
    }
    let same = source.operation_table() == target.operation_table();
    report.push("operation", same, "image of G_i (+)_k G_j is H_{i+j-k}");
    Ok(report)
}
