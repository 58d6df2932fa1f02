//! Structural parameters used by the kernels: vertex-cover approximation,
//! twin classes, module quotients, and feedback edge sets.

use crate::error::{Error, Result};
use crate::graph::{Cut, Graph, VertexSet};
use std::collections::BTreeMap;

/// Factor-2 vertex cover: endpoints of a greedy maximal matching taken in
/// canonical edge order. Deterministic, so kernels referencing "the" cover
/// are reproducible.
pub fn vc_2approx(g: &Graph) -> VertexSet {
    let mut matched = vec![false; g.n()];
    let mut cover = Vec::new();
    for &(u, v) in g.edges() {
        if !matched[u] && !matched[v] {
            matched[u] = true;
            matched[v] = true;
            cover.push(u);
            cover.push(v);
        }
    }
    cover.sort_unstable();
    cover
}

/// Which twin relation groups vertices into classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwinMode {
    /// True twins only: N[u] = N[v] (classes induce cliques).
    TrueTwin,
    /// True or false twins: N(u) = N(v) or N[u] = N[v] (classes induce
    /// cliques or independent sets; this is the neighborhood-diversity
    /// partition).
    AnyTwin,
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let r = self.find(self.0[x]);
            self.0[x] = r;
        }
        self.0[x]
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Partitions the vertices into twin classes under the given relation.
/// Blocks are sorted internally and ordered by their lowest member.
pub fn twin_classes(g: &Graph, mode: TwinMode) -> Vec<VertexSet> {
    let mut dsu = Dsu::new(g.n());
    let mut by_closed: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for v in 0..g.n() {
        let mut key = g.neighbors(v).to_vec();
        key.push(v);
        key.sort_unstable();
        match by_closed.get(&key) {
            Some(&u) => dsu.union(u, v),
            None => {
                by_closed.insert(key, v);
            }
        }
    }
    if mode == TwinMode::AnyTwin {
        let mut by_open: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for v in 0..g.n() {
            let key = g.neighbors(v).to_vec();
            match by_open.get(&key) {
                Some(&u) => dsu.union(u, v),
                None => {
                    by_open.insert(key, v);
                }
            }
        }
    }
    let mut blocks: BTreeMap<usize, VertexSet> = BTreeMap::new();
    for v in 0..g.n() {
        blocks.entry(dsu.find(v)).or_default().push(v);
    }
    blocks.into_values().collect()
}

/// Quotient of `g` by a partition into modules, plus the vertex-to-block
/// map. Rejects non-partitions and blocks that are not modules (members must
/// share the same neighborhood outside the block).
pub fn quotient_graph(g: &Graph, blocks: &[VertexSet]) -> Result<(Graph, Vec<usize>)> {
    let mut block_of = vec![usize::MAX; g.n()];
    for (i, b) in blocks.iter().enumerate() {
        if b.is_empty() {
            return Err(Error::NotAPartition(format!("block {i} is empty")));
        }
        for &v in b {
            if v >= g.n() {
                return Err(Error::NotAPartition(format!(
                    "block {i} references vertex {v} out of range"
                )));
            }
            if block_of[v] != usize::MAX {
                return Err(Error::NotAPartition(format!(
                    "vertex {v} appears in two blocks"
                )));
            }
            block_of[v] = i;
        }
    }
    if let Some(v) = block_of.iter().position(|&b| b == usize::MAX) {
        return Err(Error::NotAPartition(format!("vertex {v} not covered")));
    }
    for (i, b) in blocks.iter().enumerate() {
        let outside = |v: usize| -> Vec<usize> {
            g.neighbors(v)
                .iter()
                .copied()
                .filter(|w| block_of[*w] != i)
                .collect()
        };
        let first = outside(b[0]);
        for &v in &b[1..] {
            if outside(v) != first {
                return Err(Error::NotAModule(
                    format!("vertices {} and {v} differ outside the block", b[0]),
                    i,
                ));
            }
        }
    }
    let mut qedges = Vec::new();
    for &(u, v) in g.edges() {
        let (bu, bv) = (block_of[u], block_of[v]);
        if bu != bv {
            qedges.push((bu, bv));
        }
    }
    let q = Graph::new(blocks.len(), qedges)?;
    Ok((q, block_of))
}

/// A modular partition for the modular-width kernel: the caller's partition
/// (validated) or, by default, the twin-class partition.
pub fn modular_partition(g: &Graph, supplied: Option<&[VertexSet]>) -> Result<Vec<VertexSet>> {
    match supplied {
        Some(blocks) => {
            quotient_graph(g, blocks)?;
            Ok(blocks.to_vec())
        }
        None => Ok(twin_classes(g, TwinMode::AnyTwin)),
    }
}

/// Edges outside a fixed spanning forest. Deleting them leaves a forest, and
/// their number is the feedback edge number of the graph.
pub fn feedback_edge_set(g: &Graph) -> Cut {
    let forest = g.spanning_forest();
    Cut::new(
        g.edges()
            .iter()
            .copied()
            .filter(|&(u, v)| !forest.contains(u, v)),
    )
}
