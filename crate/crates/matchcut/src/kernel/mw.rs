//! Modular-width kernel for minimal matching cuts: inside each module of a
//! modular partition the non-isolated part is completed into a clique
//! (those edges can never cross a cut), which collapses every module to at
//! most two twin classes; the neighborhood-diversity kernel then shrinks the
//! result to at most 6 vertices per module.

use crate::enumerate::{filter_extreme, CutStream, SolutionKind};
use crate::error::{Error, Result};
use crate::graph::{Cut, Graph, VertexSet};
use crate::kernel::{nd, vc};
use crate::params::{modular_partition, vc_2approx};

#[derive(Debug, Clone)]
pub struct MwContext {
    inner: Inner,
}

#[derive(Debug, Clone)]
enum Inner {
    /// Disconnected input: the only minimal cut is the empty one.
    Disconnected,
    Via(nd::NdContext),
}

/// Builds the modular-width kernel of `g` from the supplied modular
/// partition (validated; at least two modules) or, by default, the
/// twin-class partition.
pub fn kernelize(g: &Graph, supplied: Option<&[VertexSet]>) -> Result<(Graph, MwContext)> {
    let partition = modular_partition(g, supplied)?;
    if supplied.is_some() && partition.len() < 2 && g.n() >= 2 {
        return Err(Error::TooFewModules);
    }
    if g.n() >= 2 && !g.is_connected() {
        let h = Graph::new(2, [])?;
        return Ok((
            h,
            MwContext {
                inner: Inner::Disconnected,
            },
        ));
    }
    // Complete the non-isolated part of every module.
    let mut in_module = vec![usize::MAX; g.n()];
    for (i, block) in partition.iter().enumerate() {
        for &v in block {
            in_module[v] = i;
        }
    }
    let mut extra: Vec<(usize, usize)> = Vec::new();
    for block in &partition {
        let busy: Vec<usize> = block
            .iter()
            .copied()
            .filter(|&v| g.neighbors(v).iter().any(|&w| in_module[w] == in_module[v]))
            .collect();
        for a in 0..busy.len() {
            for b in a + 1..busy.len() {
                extra.push((busy[a], busy[b]));
            }
        }
    }
    let completed = Graph::new(g.n(), g.edges().iter().copied().chain(extra))?;
    let (h, nd_ctx) = nd::kernelize(&completed)?;
    Ok((
        h,
        MwContext {
            inner: Inner::Via(nd_ctx),
        },
    ))
}

/// Lifts one minimal kernel cut back to minimal cuts of the input graph.
pub fn lift(ctx: &MwContext, m: &Cut) -> CutStream {
    match &ctx.inner {
        Inner::Disconnected => {
            debug_assert!(m.is_empty());
            Box::new(std::iter::once(Cut::empty()))
        }
        Inner::Via(nd_ctx) => nd::lift(nd_ctx, m, SolutionKind::Minimal),
    }
}

/// Full pipeline; only minimal cuts are supported under this parameter.
pub fn enumerate(
    g: &Graph,
    kind: SolutionKind,
    supplied: Option<&[VertexSet]>,
) -> Result<CutStream> {
    if kind != SolutionKind::Minimal {
        return Err(Error::UnsupportedKind(crate::verify::Method::Mw, kind));
    }
    let (h, ctx) = kernelize(g, supplied)?;
    let kernel_cuts = vc::enum_mc_bounded(&h, &vc_2approx(&h))?;
    let chosen = filter_extreme(&kernel_cuts, SolutionKind::Minimal);
    Ok(Box::new(
        chosen.into_iter().flat_map(move |m| lift(&ctx, &m)),
    ))
}
