//! Twin-cover kernel: true-twin classes are trimmed by local reduction
//! rules, sheltered classes are collapsed while completing their
//! neighborhoods, and K2 components are factored out behind a single marker
//! edge. What remains is handed to the vertex-cover kernel.

use crate::enumerate::{filter_extreme, CutStream, SolutionKind};
use crate::error::Result;
use crate::graph::{Cut, Graph};
use crate::kernel::{canon, vc, NonemptySubsets};
use crate::params::{quotient_graph, twin_classes, vc_2approx, TwinMode};
use std::collections::BTreeSet;

const SYNTHETIC: usize = usize::MAX;

#[derive(Debug, Clone)]
pub struct TcContext {
    inner: Inner,
}

impl TcContext {
    /// Vertex cover of the kernel, in kernel coordinates, that guided the
    /// final reduction (empty for the disconnected special case).
    pub fn kernel_cover(&self) -> &[usize] {
        match &self.inner {
            Inner::Core { vc, .. } => &vc.cover_h,
            Inner::Disconnected => &[],
        }
    }

    /// Size of the 2-approximate vertex cover computed on the reduced core —
    /// twice the parameter `k` of the kernel size guarantee `6k² + k + 1`.
    pub fn cover_size(&self) -> usize {
        match &self.inner {
            Inner::Core { vc, .. } => vc.cover_g.len(),
            Inner::Disconnected => 0,
        }
    }
}

#[derive(Debug, Clone)]
enum Inner {
    /// Disconnected input under `Minimal`: the only minimal cut is the empty
    /// one, represented by a 2K1 kernel.
    Disconnected,
    Core {
        vc: vc::VcContext,
        /// Core vertex -> original vertex (`SYNTHETIC` for marker vertices).
        core_to_g: Vec<usize>,
        /// Marker edge in core coordinates standing in for the K2
        /// components.
        marker: Option<(usize, usize)>,
        /// Edges of the factored-out K2 components, original coordinates.
        k2_edges: Vec<(usize, usize)>,
    },
}

fn drop_vertices(cur: &Graph, map: &[usize], dead: &[usize]) -> (Graph, Vec<usize>) {
    let dead: BTreeSet<usize> = dead.iter().copied().collect();
    let keep: Vec<usize> = (0..cur.n()).filter(|v| !dead.contains(v)).collect();
    let (next, next_to_cur) = cur.induced(&keep);
    let next_map = next_to_cur.iter().map(|&i| map[i]).collect();
    (next, next_map)
}

/// Neighbors of a twin class outside itself (shared by all members).
fn class_neighbors(g: &Graph, class: &[usize]) -> Vec<usize> {
    let inside: BTreeSet<usize> = class.iter().copied().collect();
    g.neighbors(class[0])
        .iter()
        .copied()
        .filter(|v| !inside.contains(v))
        .collect()
}

/// Applies the twin-class rules to a fixpoint, then one collapsing pass:
/// 1. a class of >= 4 true twins keeps its 3 lowest members;
/// 2. a class of 3 forming a whole component shrinks to one vertex;
/// 3. a class of >= 2 with a single outside neighbor is deleted;
/// 4. a non-cover class of >= 2 with >= 2 outside neighbors shrinks to one
///    vertex and its neighborhood is completed into a clique.
/// None of the affected edges can participate in a matching cut, so the cut
/// sets of input and output coincide.
fn reduce(g: &Graph) -> (Graph, Vec<usize>) {
    let mut cur = g.clone();
    let mut map: Vec<usize> = (0..g.n()).collect();
    'rules: loop {
        let classes = twin_classes(&cur, TwinMode::TrueTwin);
        for c in &classes {
            if c.len() >= 4 {
                let (next, next_map) = drop_vertices(&cur, &map, &c[3..]);
                cur = next;
                map = next_map;
                continue 'rules;
            }
        }
        let comps = cur.components();
        for c in &classes {
            if c.len() == 3 && comps.iter().any(|comp| comp == c) {
                let (next, next_map) = drop_vertices(&cur, &map, &c[1..]);
                cur = next;
                map = next_map;
                continue 'rules;
            }
        }
        for c in &classes {
            if c.len() >= 2 && class_neighbors(&cur, c).len() == 1 {
                let (next, next_map) = drop_vertices(&cur, &map, c);
                cur = next;
                map = next_map;
                continue 'rules;
            }
        }
        break;
    }

    let classes = twin_classes(&cur, TwinMode::TrueTwin);
    let (quotient, _) = quotient_graph(&cur, &classes).expect("twin classes are modules");
    let cover_classes = vc_2approx(&quotient);
    let mut in_cover = vec![false; classes.len()];
    for &i in &cover_classes {
        in_cover[i] = true;
    }
    let mut dead = vec![false; cur.n()];
    let mut completion: Vec<(usize, usize)> = Vec::new();
    for (i, c) in classes.iter().enumerate() {
        if in_cover[i] || c.len() < 2 {
            continue;
        }
        let nb = class_neighbors(&cur, c);
        if nb.len() < 2 {
            continue;
        }
        for &v in &c[1..] {
            dead[v] = true;
        }
        for a in 0..nb.len() {
            for b in a + 1..nb.len() {
                completion.push((nb[a], nb[b]));
            }
        }
    }
    if !dead.iter().any(|&d| d) {
        return (cur, map);
    }
    let keep: Vec<usize> = (0..cur.n()).filter(|&v| !dead[v]).collect();
    let mut new_id = vec![usize::MAX; cur.n()];
    for (i, &v) in keep.iter().enumerate() {
        new_id[v] = i;
    }
    let edges = cur
        .edges()
        .iter()
        .copied()
        .chain(completion)
        .filter(|&(u, v)| !dead[u] && !dead[v])
        .map(|(u, v)| (new_id[u], new_id[v]));
    let next = Graph::new(keep.len(), edges).expect("renumbered edges are valid");
    let next_map = keep.iter().map(|&v| map[v]).collect();
    (next, next_map)
}

/// Builds the twin-cover kernel of `g` for the requested solution kind.
pub fn kernelize(g: &Graph, kind: SolutionKind) -> Result<(Graph, TcContext)> {
    if kind == SolutionKind::Minimal && g.n() >= 2 && !g.is_connected() {
        let h = Graph::new(2, [])?;
        return Ok((
            h,
            TcContext {
                inner: Inner::Disconnected,
            },
        ));
    }
    let (star, star_to_g) = reduce(g);
    let (core, core_to_g, marker, k2_edges) = match kind {
        SolutionKind::Minimal => (star, star_to_g, None, Vec::new()),
        SolutionKind::All | SolutionKind::Maximal => {
            let comps = star.components();
            let k2: Vec<&Vec<usize>> = comps.iter().filter(|c| c.len() == 2).collect();
            if k2.is_empty() || (k2.len() == 1 && comps.len() == 1) {
                // No K2 components to factor out (a lone K2 core is already
                // its own kernel).
                (star, star_to_g, None, Vec::new())
            } else {
                let k2_edges: Vec<(usize, usize)> = k2
                    .iter()
                    .map(|c| canon(star_to_g[c[0]], star_to_g[c[1]]))
                    .collect();
                let in_k2: BTreeSet<usize> = k2.iter().flat_map(|c| c.iter().copied()).collect();
                let keep: Vec<usize> = (0..star.n()).filter(|v| !in_k2.contains(v)).collect();
                let (rest, rest_to_star) = star.induced(&keep);
                let mut core_to_g: Vec<usize> =
                    rest_to_star.iter().map(|&i| star_to_g[i]).collect();
                let (n_core, marker) = if rest.n() == 0 {
                    // Keep an isolated stand-in so the core stays
                    // disconnected (the empty cut must survive).
                    core_to_g.push(SYNTHETIC);
                    (3, (1, 2))
                } else {
                    (rest.n() + 2, (rest.n(), rest.n() + 1))
                };
                core_to_g.push(SYNTHETIC);
                core_to_g.push(SYNTHETIC);
                let edges = rest.edges().iter().copied().chain([marker]);
                let core = Graph::new(n_core, edges)?;
                (core, core_to_g, Some(marker), k2_edges)
            }
        }
    };
    let (h, vc_ctx) = vc::kernelize(&core)?;
    Ok((
        h,
        TcContext {
            inner: Inner::Core {
                vc: vc_ctx,
                core_to_g,
                marker,
                k2_edges,
            },
        },
    ))
}

/// Lifts one kernel cut: through the vertex-cover lift into core
/// coordinates, then the marker edge (if present) expands to the factored
/// K2 edges — every nonempty subset for `All`, all of them for `Maximal`.
pub fn lift(ctx: &TcContext, m: &Cut, kind: SolutionKind) -> CutStream {
    match &ctx.inner {
        Inner::Disconnected => {
            debug_assert!(m.is_empty());
            Box::new(std::iter::once(Cut::empty()))
        }
        Inner::Core {
            vc: vc_ctx,
            core_to_g,
            marker,
            k2_edges,
        } => {
            let core_to_g = core_to_g.clone();
            let marker = *marker;
            let k2_edges = k2_edges.clone();
            let inner = vc::lift(vc_ctx, m, kind);
            Box::new(inner.flat_map(move |core_cut| {
                let mut base = Vec::new();
                let mut has_marker = false;
                for (u, v) in core_cut.iter() {
                    if marker == Some((u, v)) {
                        has_marker = true;
                    } else {
                        base.push(canon(core_to_g[u], core_to_g[v]));
                    }
                }
                let base = Cut::new(base);
                if !has_marker {
                    return Box::new(std::iter::once(base)) as CutStream;
                }
                match kind {
                    SolutionKind::Maximal => {
                        let full = base.union(&Cut::new(k2_edges.iter().copied()));
                        Box::new(std::iter::once(full))
                    }
                    SolutionKind::All => {
                        let base = base.clone();
                        Box::new(
                            NonemptySubsets::new(k2_edges.clone())
                                .map(move |l| base.union(&Cut::new(l))),
                        )
                    }
                    SolutionKind::Minimal => {
                        debug_assert!(false, "minimal kernel has no marker");
                        Box::new(std::iter::once(base))
                    }
                }
            }))
        }
    }
}

/// Full pipeline: kernelize, enumerate kernel cuts of the requested kind,
/// lift each family.
pub fn enumerate(g: &Graph, kind: SolutionKind) -> Result<CutStream> {
    let (h, ctx) = kernelize(g, kind)?;
    let cover = match &ctx.inner {
        Inner::Core { vc: c, .. } => c.cover_h.clone(),
        Inner::Disconnected => Vec::new(),
    };
    let kernel_cuts = vc::enum_mc_bounded(&h, &cover)?;
    let chosen = filter_extreme(&kernel_cuts, kind);
    Ok(Box::new(
        chosen.into_iter().flat_map(move |m| lift(&ctx, &m, kind)),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::oracle_enum;
    use crate::graph::build_graph;
    use std::collections::BTreeSet;

    fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges).unwrap()
    }

    fn assert_matches_oracle(g: &Graph) {
        for kind in [
            SolutionKind::All,
            SolutionKind::Minimal,
            SolutionKind::Maximal,
        ] {
            let mut got: Vec<Cut> = enumerate(g, kind).unwrap().collect();
            let dedup: BTreeSet<Cut> = got.iter().cloned().collect();
            assert_eq!(dedup.len(), got.len(), "duplicates ({kind})");
            got.sort();
            let want = oracle_enum(g, kind).unwrap();
            assert_eq!(got, want, "n={} m={} kind={kind}", g.n(), g.m());
        }
    }

    #[test]
    fn k6_reduces_to_a_point() {
        let (star, map) = reduce(&complete(6));
        assert_eq!((star.n(), star.m()), (1, 0));
        assert_eq!(map, vec![0]);
    }

    #[test]
    fn leaves_are_not_true_twins() {
        let claw = build_graph(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let (star, _) = reduce(&claw);
        assert_eq!(star.n(), 4);
    }

    #[test]
    fn sheltered_class_is_deleted() {
        // Edge a-b plus a twin pair attached only to b.
        let g = build_graph(4, &[(0, 1), (1, 2), (1, 3), (2, 3)]).unwrap();
        let (star, map) = reduce(&g);
        assert_eq!((star.n(), star.m()), (2, 1));
        assert_eq!(map, vec![0, 1]);
    }

    #[test]
    fn blown_up_cycle_collapses_nothing_but_has_no_cuts() {
        // C4 with every vertex doubled into a true twin pair.
        let mut edges = Vec::new();
        for i in 0..4 {
            let (a, b) = (2 * i, 2 * i + 1);
            edges.push((a, b));
            let (c, d) = (2 * ((i + 1) % 4), 2 * ((i + 1) % 4) + 1);
            edges.extend([(a, c), (a, d), (b, c), (b, d)]);
        }
        let g = build_graph(8, &edges).unwrap();
        assert_matches_oracle(&g);
        assert!(enumerate(&g, SolutionKind::All).unwrap().next().is_none());
    }

    #[test]
    fn two_k2_components_factor_through_marker() {
        let g = build_graph(4, &[(0, 1), (2, 3)]).unwrap();
        let (_, ctx) = kernelize(&g, SolutionKind::All).unwrap();
        match &ctx.inner {
            Inner::Core {
                marker, k2_edges, ..
            } => {
                assert!(marker.is_some());
                assert_eq!(k2_edges, &vec![(0, 1), (2, 3)]);
            }
            _ => panic!("expected core context"),
        }
        assert_matches_oracle(&g);
        assert_eq!(enumerate(&g, SolutionKind::All).unwrap().count(), 4);
        assert_eq!(enumerate(&g, SolutionKind::Maximal).unwrap().count(), 1);
    }

    #[test]
    fn pipeline_matches_oracle_on_samples() {
        let samples = [
            complete(6),
            build_graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap(),
            build_graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap(),
            // K2 + K3: triangle component vanishes, edge survives.
            build_graph(5, &[(0, 1), (2, 3), (3, 4), (2, 4)]).unwrap(),
            // Single K2.
            build_graph(2, &[(0, 1)]).unwrap(),
            // K2 + isolated vertex.
            build_graph(3, &[(0, 1)]).unwrap(),
            // Two claws.
            build_graph(8, &[(0, 1), (0, 2), (0, 3), (4, 5), (4, 6), (4, 7)]).unwrap(),
            // Three K2 components.
            build_graph(6, &[(0, 1), (2, 3), (4, 5)]).unwrap(),
        ];
        for g in samples {
            assert_matches_oracle(&g);
        }
    }
}
