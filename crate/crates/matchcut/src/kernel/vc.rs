//! Vertex-cover kernel: shrinks the graph to the cover plus a bounded set of
//! marked representatives, enumerates kernel cuts by scanning bipartitions
//! of the cover with forced-assignment reductions, and lifts marked pendant
//! edges back to their interchangeable originals.

use crate::enumerate::{filter_extreme, CutStream, SolutionKind};
use crate::error::{Error, Result};
use crate::graph::{Cut, Graph, VertexSet};
use crate::kernel::{canon, MarkedKernel};
use crate::params::vc_2approx;
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Clone)]
pub struct VcContext {
    /// Cover vertices in original coordinates.
    pub cover_g: VertexSet,
    /// The same cover in kernel coordinates.
    pub cover_h: VertexSet,
    /// Kernel graph plus the marked-edge lifting data.
    pub marked: MarkedKernel,
}

/// Builds the vertex-cover kernel of `g`: the greedy cover X plus marked
/// representatives of the non-cover vertices (one isolated vertex, one
/// pendant neighbor per cover vertex, up to three common neighbors per cover
/// pair). Kernel size is at most 6k^2 + k + 1 for k = |X|/2.
pub fn kernelize(g: &Graph) -> Result<(Graph, VcContext)> {
    if g.n() == 1 {
        let h = Graph::new(1, [])?;
        return Ok(context(g, h, vec![0], Vec::new()));
    }
    if g.m() == 0 {
        // Edgeless: two vertices carry the full solution set ({∅}).
        let h = Graph::new(2, [])?;
        return Ok(context(g, h, vec![0, 1], Vec::new()));
    }
    let cover = vc_2approx(g);
    let in_cover = membership(g.n(), &cover);
    let mut keep: BTreeSet<usize> = cover.iter().copied().collect();

    // Classify non-cover vertices by degree.
    let mut isolated = Vec::new();
    let mut pendant_at: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut deep: Vec<usize> = Vec::new();
    for v in 0..g.n() {
        if in_cover[v] {
            continue;
        }
        match g.degree(v) {
            0 => isolated.push(v),
            1 => pendant_at.entry(g.neighbors(v)[0]).or_default().push(v),
            _ => deep.push(v),
        }
    }
    if let Some(&v) = isolated.first() {
        keep.insert(v);
    }
    // Marked pendant edge per cover vertex; remember the whole group.
    let mut pendant_groups: Vec<(usize, usize, Vec<(usize, usize)>)> = Vec::new();
    for (&x, ys) in &pendant_at {
        let y = ys[0];
        keep.insert(y);
        pendant_groups.push((x, y, ys.iter().map(|&w| canon(x, w)).collect()));
    }
    // Up to three lowest common deep neighbors per cover pair.
    for (i, &x) in cover.iter().enumerate() {
        for &y in &cover[i + 1..] {
            let mut found = 0;
            for &v in &deep {
                if g.has_edge(v, x) && g.has_edge(v, y) {
                    keep.insert(v);
                    found += 1;
                    if found == 3 {
                        break;
                    }
                }
            }
        }
    }

    let keep: Vec<usize> = keep.into_iter().collect();
    let (h, h_to_g) = g.induced(&keep);
    let k = cover.len() / 2;
    debug_assert!(h.n() <= 6 * k * k + k + 1);

    let g_to_h: BTreeMap<usize, usize> = h_to_g.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut groups = BTreeMap::new();
    for (x, y, group) in pendant_groups {
        groups.insert(canon(g_to_h[&x], g_to_h[&y]), group);
    }
    let cover_h: VertexSet = cover.iter().map(|v| g_to_h[v]).collect();
    let ctx = VcContext {
        cover_g: cover,
        cover_h,
        marked: MarkedKernel {
            h: h.clone(),
            h_to_g,
            groups,
        },
    };
    Ok((h, ctx))
}

fn context(g: &Graph, h: Graph, h_to_g: Vec<usize>, cover: VertexSet) -> (Graph, VcContext) {
    debug_assert!(h_to_g.iter().all(|&v| v < g.n()));
    let ctx = VcContext {
        cover_g: cover.iter().map(|&i| h_to_g[i]).collect(),
        cover_h: cover,
        marked: MarkedKernel {
            h: h.clone(),
            h_to_g,
            groups: BTreeMap::new(),
        },
    };
    (h, ctx)
}

fn membership(n: usize, set: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in set {
        m[v] = true;
    }
    m
}

/// Lifts one kernel cut to its family of original-graph cuts (see
/// [`MarkedKernel::lift`]).
pub fn lift(ctx: &VcContext, m: &Cut, kind: SolutionKind) -> CutStream {
    ctx.marked.lift(m, kind)
}

/// All matching cuts of `h`, given a vertex cover `x` of `h`. Runs in time
/// 2^|x| * poly: pendant and isolated non-cover vertices are split off, the
/// rest is scanned per cover bipartition with forced-assignment reductions,
/// and pendant edges are recombined by exhaustive validated choice.
pub fn enum_mc_bounded(h: &Graph, x: &[usize]) -> Result<Vec<Cut>> {
    let mut x: Vec<usize> = x.to_vec();
    x.sort_unstable();
    x.dedup();
    for &v in &x {
        if v >= h.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: h.n(),
            });
        }
    }
    let in_x = membership(h.n(), &x);
    for &(u, v) in h.edges() {
        if !in_x[u] && !in_x[v] {
            return Err(Error::BadConstraints(format!(
                "supplied set is not a vertex cover: edge {u}-{v} uncovered"
            )));
        }
    }

    // Pendant edge groups (x, y) with y a degree-1 non-cover vertex.
    let mut pendant_groups: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut by_x: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for v in 0..h.n() {
        if !in_x[v] && h.degree(v) == 1 {
            let w = h.neighbors(v)[0];
            by_x.entry(w).or_default().push(canon(w, v));
        }
    }
    pendant_groups.extend(by_x.into_values());

    // Core graph: drop non-cover vertices of degree <= 1.
    let keep: Vec<usize> = (0..h.n())
        .filter(|&v| in_x[v] || h.degree(v) >= 2)
        .collect();
    let (core, core_to_h) = h.induced(&keep);
    let x_core: Vec<usize> = (0..core.n()).filter(|&v| in_x[core_to_h[v]]).collect();

    let mut core_cuts: BTreeSet<Cut> = BTreeSet::new();
    core_cuts.insert(Cut::empty());
    let k = x_core.len();
    debug_assert!(k < 64, "cover too large for bipartition scan");
    if k >= 2 {
        let mut side = vec![0u8; core.n()];
        for mask in 1u64..(1u64 << (k - 1)) {
            for v in side.iter_mut() {
                *v = 0;
            }
            side[x_core[0]] = 1;
            for (i, &v) in x_core[1..].iter().enumerate() {
                side[v] = if mask >> i & 1 == 1 { 2 } else { 1 };
            }
            let mut found = Vec::new();
            scan(&core, &mut side, &mut found);
            for cut in found {
                // Back to h coordinates.
                core_cuts.insert(Cut::new(
                    cut.iter().map(|(u, v)| canon(core_to_h[u], core_to_h[v])),
                ));
            }
        }
    }

    // Recombine: any core cut (or nothing) plus at most one pendant edge per
    // group, validated on h.
    let mut out: BTreeSet<Cut> = BTreeSet::new();
    let mut choice = vec![0usize; pendant_groups.len()];
    loop {
        let picked: Vec<(usize, usize)> = choice
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c > 0)
            .map(|(i, &c)| pendant_groups[i][c - 1])
            .collect();
        for core_cut in &core_cuts {
            let m = core_cut.union(&Cut::new(picked.iter().copied()));
            if h.is_matching_cut(&m)? {
                out.insert(m);
            }
        }
        // Advance the mixed-radix counter over pendant choices.
        let mut w = choice.len();
        loop {
            if w == 0 {
                return Ok(out.into_iter().collect());
            }
            w -= 1;
            if choice[w] < pendant_groups[w].len() {
                choice[w] += 1;
                break;
            }
            choice[w] = 0;
        }
    }
}

/// Branch-and-reduce over side assignments (0 unassigned, 1 A, 2 B):
/// vertices with two same-side neighbors or a saturated cross neighbor are
/// forced; otherwise the lowest unassigned vertex is branched.
fn scan(core: &Graph, side: &mut Vec<u8>, out: &mut Vec<Cut>) {
    let mut sat = vec![false; core.n()];
    for &(u, v) in core.edges() {
        if side[u] + side[v] == 3 {
            if sat[u] || sat[v] {
                return; // crossing edges already violate the matching
            }
            sat[u] = true;
            sat[v] = true;
        }
    }
    let mut branch = None;
    for v in 0..core.n() {
        if side[v] != 0 {
            continue;
        }
        let (mut ca, mut cb, mut fa, mut fb) = (0, 0, false, false);
        for &u in core.neighbors(v) {
            match side[u] {
                1 => {
                    ca += 1;
                    fa |= sat[u];
                }
                2 => {
                    cb += 1;
                    fb |= sat[u];
                }
                _ => {}
            }
        }
        // A saturated neighbor pulls v to its own side (crossing toward it
        // would double-saturate it); two same-side neighbors do the same.
        let force_a = ca >= 2 || fa;
        let force_b = cb >= 2 || fb;
        match (force_a, force_b) {
            (true, true) => return,
            (true, false) | (false, true) => {
                side[v] = if force_a { 1 } else { 2 };
                scan(core, side, out);
                side[v] = 0;
                return;
            }
            (false, false) => {
                if branch.is_none() {
                    branch = Some(v);
                }
            }
        }
    }
    match branch {
        None => {
            let in_a: Vec<bool> = side.iter().map(|&s| s == 1).collect();
            out.push(core.crossing_edges(&in_a));
        }
        Some(v) => {
            side[v] = 1;
            scan(core, side, out);
            side[v] = 2;
            scan(core, side, out);
            side[v] = 0;
        }
    }
}

/// Full pipeline: kernelize, enumerate kernel cuts of the requested kind,
/// lift each to its family. The concatenated families are duplicate-free and
/// cover exactly the requested solutions of `g`.
pub fn enumerate(g: &Graph, kind: SolutionKind) -> Result<CutStream> {
    let (h, ctx) = kernelize(g)?;
    let kernel_cuts = enum_mc_bounded(&h, &ctx.cover_h)?;
    let chosen = filter_extreme(&kernel_cuts, kind);
    Ok(Box::new(
        chosen
            .into_iter()
            .flat_map(move |m| ctx.marked.lift(&m, kind)),
    ))
}
