//! The growth sequence `G_0, G_1, ..., G_n` and the homomorphism chain
//! `G*_n -> G*_{n-1} -> ... -> G*_0`, where `G*_k` is `G_k` plus one
//! isolated vertex `z0`.
//!
//! Step 1 hangs a new vertex off every seed edge; step `k >= 2` hangs a new
//! vertex labeled `k` off every edge whose endpoint labels are `{k-1, k-2}`.

use crate::error::{Error, Result};
use crate::graph::{disjoint_union, Graph};
use crate::hom::{check_hom, VertexMapping};

/// One stage of the growth sequence together with creation labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledStage {
    graph: Graph,
    /// `labels[v - 1]` is the step at which `v` was created.
    labels: Vec<usize>,
    stage: usize,
}

impl LabeledStage {
    /// Reassembles a stage read back from disk and checks its label invariants.
    pub fn from_parts(graph: Graph, labels: Vec<usize>, stage: usize) -> Result<LabeledStage> {
        if labels.len() != graph.p() {
            return Err(Error::StageMismatch(format!(
                "{} labels for {} vertices",
                labels.len(),
                graph.p()
            )));
        }
        let s = LabeledStage { graph, labels, stage };
        s.check_invariants()?;
        Ok(s)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn stage(&self) -> usize {
        self.stage
    }

    pub fn label(&self, v: usize) -> usize {
        self.labels[v - 1]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Vertices created at step `k`.
    pub fn created_at(&self, k: usize) -> Vec<usize> {
        self.graph.vertices().filter(|&v| self.label(v) == k).collect()
    }

    /// The two neighbors a step-`k >= 1` vertex was attached to.
    ///
    /// Later vertices only ever attach with strictly larger labels, so these
    /// are exactly the neighbors with a smaller label.
    pub fn creation_pair(&self, v: usize) -> Option<(usize, usize)> {
        let k = self.label(v);
        if k == 0 {
            return None;
        }
        let older: Vec<usize> =
            self.graph.neighbors(v).iter().copied().filter(|&w| self.label(w) < k).collect();
        match older[..] {
            [a, b] => Some((a, b)),
            _ => None,
        }
    }

    /// Label invariants: labels never exceed the stage, and each step-`k`
    /// vertex has exactly two older neighbors labeled `{k-1, k-2}` (`{0, 0}`
    /// for `k = 1`) which are adjacent to each other.
    pub fn check_invariants(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::StageMismatch(msg));
        for v in self.graph.vertices() {
            let k = self.label(v);
            if k > self.stage {
                return bad(format!("vertex {v} labeled {k} beyond stage {}", self.stage));
            }
            if k == 0 {
                continue;
            }
            let Some((a, b)) = self.creation_pair(v) else {
                return bad(format!("vertex {v} does not have exactly two older neighbors"));
            };
            let mut got = [self.label(a), self.label(b)];
            got.sort_unstable();
            let want = if k == 1 { [0, 0] } else { [k - 2, k - 1] };
            if got != want {
                return bad(format!("vertex {v} attached to labels {got:?}, expected {want:?}"));
            }
            if !self.graph.has_edge(a, b) {
                return bad(format!("creation pair {a}-{b} of vertex {v} is not an edge"));
            }
        }
        Ok(())
    }
}

/// Stages `G_0 ..= G_steps` grown from a connected seed.
pub fn grow(seed: &Graph, steps: usize) -> Result<Vec<LabeledStage>> {
    if !seed.is_connected() {
        return Err(Error::SeedDisconnected);
    }
    let mut stages = vec![LabeledStage { graph: seed.clone(), labels: vec![0; seed.p()], stage: 0 }];
    for k in 1..=steps {
        let prev = stages.last().expect("seed stage present");
        let mut labels = prev.labels.clone();
        let mut pairs = prev.graph.edges().to_vec();
        let mut next_id = prev.graph.p();
        for &(a, b) in prev.graph.edges() {
            let mut lab = [prev.label(a), prev.label(b)];
            lab.sort_unstable();
            let attach = if k == 1 { true } else { lab == [k - 2, k - 1] };
            if attach {
                next_id += 1;
                labels.push(k);
                pairs.push((a, next_id));
                pairs.push((b, next_id));
            }
        }
        let graph = Graph::from_edge_list(next_id, pairs)?;
        stages.push(LabeledStage { graph, labels, stage: k });
    }
    Ok(stages)
}

/// `G*_n`: the stage graph plus an isolated vertex `z0` with id `p + 1`.
pub fn starred(stage: &LabeledStage) -> Graph {
    disjoint_union(&stage.graph, &Graph::empty(1).expect("one vertex"))
}

fn stage_pair(stages: &[LabeledStage], n: usize) -> Result<(&LabeledStage, &LabeledStage)> {
    if n == 0 || n >= stages.len() {
        return Err(Error::StageMismatch(format!(
            "need stages {} and {n}, have 0..{}",
            n.wrapping_sub(1),
            stages.len()
        )));
    }
    let (prev, cur) = (&stages[n - 1], &stages[n]);
    if prev.stage != n - 1 || cur.stage != n {
        return Err(Error::StageMismatch(format!(
            "stages out of order: found {} and {}",
            prev.stage, cur.stage
        )));
    }
    let old = prev.graph.p();
    let same_prefix = cur.graph.p() >= old
        && prev.labels[..] == cur.labels[..old]
        && prev.graph.edges().iter().all(|&(u, v)| cur.graph.has_edge(u, v));
    if !same_prefix {
        return Err(Error::StageMismatch(format!("stage {n} does not extend stage {}", n - 1)));
    }
    Ok((prev, cur))
}

/// The map `G*_n -> G*_{n-1}` sending every step-`n` vertex to `z0` and
/// fixing all other vertices.
///
/// Every step-`n` vertex has degree two and neighbors in `G_{n-1}`, so the
/// edges to those neighbors land on `z0`-to-old pairs, which are not edges;
/// [`check_hom`] rejects this map whenever step `n` added a vertex.
pub fn collapse_theta(stages: &[LabeledStage], n: usize) -> Result<VertexMapping> {
    let (prev, cur) = stage_pair(stages, n)?;
    let old = prev.graph.p();
    let z_prev = old + 1;
    let images = (1..=cur.graph.p() + 1)
        .map(|v| if v <= old { v } else { z_prev })
        .collect();
    Ok(VertexMapping::from_images(images))
}

/// The map `G*_n -> G*_{n-1}` fixing old vertices and `z0`, and sending
/// each step-`n` vertex attached to `ab` onto the lowest common neighbor of
/// `a` and `b` in `G_{n-1}`.
///
/// For `n >= 2` that neighbor is unique: the third vertex of the triangle
/// in which the newer of `a`, `b` was created. For `n = 1` it exists
/// exactly when the seed edge `ab` lies on a triangle.
pub fn fold_theta(stages: &[LabeledStage], n: usize) -> Result<VertexMapping> {
    let (prev, cur) = stage_pair(stages, n)?;
    let old = prev.graph.p();
    let mut images: Vec<usize> = (1..=old).collect();
    for v in old + 1..=cur.graph.p() {
        let (a, b) = cur.creation_pair(v).ok_or_else(|| {
            Error::StageMismatch(format!("vertex {v} has no creation pair"))
        })?;
        let target = prev
            .graph
            .neighbors(a)
            .iter()
            .copied()
            .find(|&c| prev.graph.has_edge(c, b))
            .ok_or(Error::NoFoldTarget { vertex: v, edge: (a, b) })?;
        images.push(target);
    }
    images.push(old + 1);
    Ok(VertexMapping::from_images(images))
}

/// Composite `G*_n -> G*_0` of the fold maps for steps `n, n-1, ..., 1`.
pub fn fold_chain(stages: &[LabeledStage], n: usize) -> Result<VertexMapping> {
    let mut acc = VertexMapping::identity(starred(stage_at(stages, n)?).p());
    for k in (1..=n).rev() {
        acc = acc.compose(&fold_theta(stages, k)?);
    }
    Ok(acc)
}

fn stage_at(stages: &[LabeledStage], n: usize) -> Result<&LabeledStage> {
    stages
        .get(n)
        .ok_or_else(|| Error::StageMismatch(format!("no stage {n}, have 0..{}", stages.len())))
}

/// Verdict for one link of the chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkVerdict {
    pub step: usize,
    pub fold_ok: bool,
    pub collapse_ok: bool,
}

/// Checks every fold link, the z0-collapse links and the composite map.
pub fn verify_chain(stages: &[LabeledStage]) -> Result<(Vec<LinkVerdict>, bool)> {
    for s in stages {
        s.check_invariants()?;
    }
    let mut links = Vec::new();
    for n in 1..stages.len() {
        let src = starred(&stages[n]);
        let dst = starred(&stages[n - 1]);
        let fold_ok = match fold_theta(stages, n) {
            Ok(m) => check_hom(&src, &dst, &m)?,
            Err(Error::NoFoldTarget { .. }) => false,
            Err(e) => return Err(e),
        };
        let collapse_ok = check_hom(&src, &dst, &collapse_theta(stages, n)?)?;
        links.push(LinkVerdict { step: n, fold_ok, collapse_ok });
    }
    let n = stages.len().saturating_sub(1);
    let composite_ok = match fold_chain(stages, n) {
        Ok(m) => check_hom(&starred(&stages[n]), &starred(&stages[0]), &m)?,
        Err(Error::NoFoldTarget { .. }) => false,
        Err(e) => return Err(e),
    };
    Ok((links, composite_ok))
}

/// Label file format: one `<vertex> <label>` line per vertex.
pub fn labels_to_text(stage: &LabeledStage) -> String {
    stage
        .labels
        .iter()
        .enumerate()
        .map(|(i, l)| format!("{} {l}\n", i + 1))
        .collect()
}

pub fn labels_from_text(text: &str) -> Result<Vec<usize>> {
    let mut labels = Vec::new();
    for (line_no, line) in crate::graph::content_lines(text) {
        let [v, l] = crate::graph::parse_numbers::<2>(line_no, line)?;
        if v != labels.len() + 1 {
            return Err(Error::parse(line_no, format!("expected vertex {}, got {v}", labels.len() + 1)));
        }
        labels.push(l);
    }
    Ok(labels)
}
