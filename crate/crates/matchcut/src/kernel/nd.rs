//! Neighborhood-diversity kernel: vertices are grouped into twin classes
//! (clique or independent modules); every class keeps at most three
//! representatives, pendant classes keep one whose edge is marked for the
//! group lift.

use crate::enumerate::{filter_extreme, CutStream, SolutionKind};
use crate::error::Result;
use crate::graph::{Cut, Graph};
use crate::kernel::{canon, vc, MarkedKernel};
use crate::params::{quotient_graph, twin_classes, vc_2approx, TwinMode};
use std::collections::BTreeMap;

#[derive(Debug, Clone)]
pub struct NdContext {
    pub marked: MarkedKernel,
}

/// Builds the neighborhood-diversity kernel: at most 3 vertices per twin
/// class (1 for the isolated class and for pendant classes), so the kernel
/// has at most 3k vertices for k classes.
pub fn kernelize(g: &Graph) -> Result<(Graph, NdContext)> {
    if g.n() == 1 || g.m() == 0 {
        return trivial_kernel(g);
    }
    let classes = twin_classes(g, TwinMode::AnyTwin);
    let (quotient, _) = quotient_graph(g, &classes).expect("twin classes are modules");
    let mut keep: Vec<usize> = Vec::new();
    // Pendant groups in original coordinates: (anchor, marked member, all
    // members).
    let mut pendant: Vec<(usize, usize, Vec<usize>)> = Vec::new();
    for (i, c) in classes.iter().enumerate() {
        let independent = c.len() == 1 || !g.has_edge(c[0], c[1]);
        let qdeg = quotient.degree(i);
        if independent && qdeg == 0 {
            // Isolated vertices: one survives to witness disconnectedness.
            keep.push(c[0]);
        } else if independent && qdeg == 1 && classes[quotient.neighbors(i)[0]].len() == 1 {
            // Pendant class hanging at a single anchor vertex.
            let anchor = classes[quotient.neighbors(i)[0]][0];
            keep.push(c[0]);
            pendant.push((anchor, c[0], c.clone()));
        } else {
            keep.extend(&c[..c.len().min(3)]);
        }
    }
    keep.sort_unstable();
    debug_assert!(keep.len() <= 3 * classes.len());
    let (h, h_to_g) = g.induced(&keep);
    let g_to_h: BTreeMap<usize, usize> = h_to_g.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut groups = BTreeMap::new();
    for (anchor, marked, members) in pendant {
        groups.insert(
            canon(g_to_h[&anchor], g_to_h[&marked]),
            members.iter().map(|&u| canon(anchor, u)).collect(),
        );
    }
    let ctx = NdContext {
        marked: MarkedKernel {
            h: h.clone(),
            h_to_g,
            groups,
        },
    };
    Ok((h, ctx))
}

fn trivial_kernel(g: &Graph) -> Result<(Graph, NdContext)> {
    let (h, h_to_g) = if g.n() == 1 {
        (Graph::new(1, [])?, vec![0])
    } else {
        (Graph::new(2, [])?, vec![0, 1])
    };
    let ctx = NdContext {
        marked: MarkedKernel {
            h: h.clone(),
            h_to_g,
            groups: BTreeMap::new(),
        },
    };
    Ok((h, ctx))
}

/// Lifts one kernel cut (see [`MarkedKernel::lift`]).
pub fn lift(ctx: &NdContext, m: &Cut, kind: SolutionKind) -> CutStream {
    ctx.marked.lift(m, kind)
}

/// Full pipeline: kernelize, enumerate kernel cuts via the cover-bounded
/// scan, filter to the requested kind, lift each family.
pub fn enumerate(g: &Graph, kind: SolutionKind) -> Result<CutStream> {
    let (h, ctx) = kernelize(g)?;
    let kernel_cuts = vc::enum_mc_bounded(&h, &vc_2approx(&h))?;
    let chosen = filter_extreme(&kernel_cuts, kind);
    Ok(Box::new(
        chosen.into_iter().flat_map(move |m| lift(&ctx, &m, kind)),
    ))
}
