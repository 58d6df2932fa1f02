//! Enumeration kernels. Each submodule shrinks the input graph under one
//! structural parameter, enumerates matching cuts of the kernel, and lifts
//! each kernel solution back to a family of solutions of the original graph.
//! Lifted families are pairwise disjoint and together cover exactly the
//! requested solution set.

pub mod cp;
pub mod fen;
pub mod mw;
pub mod nd;
pub mod tc;
pub mod vc;

use crate::enumerate::{CutStream, SolutionKind};
use crate::graph::Cut;
use std::collections::BTreeMap;

pub(crate) fn canon(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Streams `base ∪ {one edge per group}` over all combinations. Groups must
/// be nonempty; with no groups the stream is just `base`.
pub(crate) struct ProductLift {
    base: Cut,
    groups: Vec<Vec<(usize, usize)>>,
    idx: Vec<usize>,
    done: bool,
}

impl ProductLift {
    pub(crate) fn new(base: Cut, groups: Vec<Vec<(usize, usize)>>) -> Self {
        debug_assert!(groups.iter().all(|g| !g.is_empty()));
        let idx = vec![0; groups.len()];
        ProductLift {
            base,
            groups,
            idx,
            done: false,
        }
    }
}

impl Iterator for ProductLift {
    type Item = Cut;

    fn next(&mut self) -> Option<Cut> {
        if self.done {
            return None;
        }
        let picks = self.idx.iter().enumerate().map(|(i, &j)| self.groups[i][j]);
        let cut = self.base.union(&Cut::new(picks));
        let mut w = self.idx.len();
        loop {
            if w == 0 {
                self.done = true;
                break;
            }
            w -= 1;
            if self.idx[w] + 1 < self.groups[w].len() {
                self.idx[w] += 1;
                break;
            }
            self.idx[w] = 0;
        }
        Some(cut)
    }
}

/// Streams every nonempty subset of `items` (binary counter; no width
/// limit).
pub(crate) struct NonemptySubsets {
    items: Vec<(usize, usize)>,
    mask: Vec<bool>,
}

impl NonemptySubsets {
    pub(crate) fn new(items: Vec<(usize, usize)>) -> Self {
        let mask = vec![false; items.len()];
        NonemptySubsets { items, mask }
    }
}

impl Iterator for NonemptySubsets {
    type Item = Vec<(usize, usize)>;

    fn next(&mut self) -> Option<Self::Item> {
        // Binary increment; all-true rolls over to all-false (stop).
        let mut carried = true;
        for bit in self.mask.iter_mut() {
            if *bit {
                *bit = false;
            } else {
                *bit = true;
                carried = false;
                break;
            }
        }
        if carried {
            return None;
        }
        Some(
            self.items
                .iter()
                .zip(&self.mask)
                .filter(|(_, &b)| b)
                .map(|(&e, _)| e)
                .collect(),
        )
    }
}

/// A kernel whose lift is driven by marked pendant edges: certain kernel
/// edges stand in for whole groups of original-graph edges that are freely
/// interchangeable in any solution containing the mark.
#[derive(Debug, Clone)]
pub struct MarkedKernel {
    /// The kernel graph.
    pub h: Graph,
    /// Kernel vertex -> original vertex.
    pub h_to_g: Vec<usize>,
    /// Marked kernel edge -> interchangeable original edges it represents
    /// (the original image of the mark is included in its group).
    pub groups: BTreeMap<(usize, usize), Vec<(usize, usize)>>,
}

use crate::graph::Graph;

impl MarkedKernel {
    /// Original image of a kernel edge.
    pub(crate) fn g_edge(&self, u: usize, v: usize) -> (usize, usize) {
        canon(self.h_to_g[u], self.h_to_g[v])
    }

    /// Lifts one kernel cut to its family of original-graph cuts. For
    /// `Minimal`, a marked singleton expands to one cut per group edge and
    /// anything else maps through unchanged; for `All`/`Maximal`, every
    /// marked edge in the cut ranges over its group independently.
    pub fn lift(&self, m: &Cut, kind: SolutionKind) -> CutStream {
        match kind {
            SolutionKind::Minimal => {
                if m.len() == 1 {
                    let (u, v) = m.iter().next().unwrap();
                    if let Some(group) = self.groups.get(&(u, v)) {
                        let cuts: Vec<Cut> =
                            group.iter().map(|&(a, b)| Cut::single(a, b)).collect();
                        return Box::new(cuts.into_iter());
                    }
                }
                debug_assert!(
                    m.iter().all(|(u, v)| !self.groups.contains_key(&(u, v))),
                    "minimal kernel cut may contain a marked edge only as a singleton"
                );
                let lifted = Cut::new(m.iter().map(|(u, v)| self.g_edge(u, v)));
                Box::new(std::iter::once(lifted))
            }
            SolutionKind::All | SolutionKind::Maximal => {
                let mut base = Vec::new();
                let mut groups = Vec::new();
                for (u, v) in m.iter() {
                    match self.groups.get(&(u, v)) {
                        Some(g) => groups.push(g.clone()),
                        None => base.push(self.g_edge(u, v)),
                    }
                }
                Box::new(ProductLift::new(Cut::new(base), groups))
            }
        }
    }
}
