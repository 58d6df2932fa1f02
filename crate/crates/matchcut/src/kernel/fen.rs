//! Feedback-edge-number kernel: degree-one hair is stripped (keeping one
//! pendant witness), the remaining graph is decomposed into a spanning tree
//! plus few extra edges, long induced tree paths are contracted to bounded
//! stubs, and lifting replays each kernel cut as constrained matchings on
//! the original paths extended by matchings of the hair forest.

use crate::enumerate::{
    enum_forest_matchings, filter_extreme, CutStream, MatchingConstraints, SolutionKind,
};
use crate::error::{Error, Result};
use crate::graph::{Cut, Graph};
use crate::kernel::{canon, vc, ProductLift};
use crate::params::{feedback_edge_set, vc_2approx};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Part {
    XEdge,
    SecondX,
    Middle,
    SecondY,
    YEdge,
}

#[derive(Debug, Clone)]
enum Role {
    /// Kernel edge standing for one original edge.
    Fixed((usize, usize)),
    /// Kernel edge on the stub of a contracted long path.
    OnPath { path: usize, part: Part },
}

#[derive(Debug, Clone)]
struct PathRecord {
    /// Original edges of the path in order, one endpoint to the other.
    g_edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone)]
pub struct FenContext {
    inner: Inner,
}

#[derive(Debug, Clone)]
enum Inner {
    /// No cuts at all (single vertex).
    Point,
    /// Disconnected input under `Minimal`: only the empty cut.
    Disconnected,
    /// Connected forest under `Minimal`: every edge alone is a cut.
    TreeMinimal {
        edges: Vec<(usize, usize)>,
    },
    /// Forest under `All`: the cuts are exactly the matchings (the empty one
    /// when disconnected).
    ForestAll {
        g: Graph,
        connected: bool,
    },
    General(Box<GeneralCtx>),
}

#[derive(Debug, Clone)]
struct GeneralCtx {
    /// Hair forest on the original vertex ids (edges stripped from the
    /// input).
    hair: Graph,
    hair_edges: Vec<(usize, usize)>,
    roles: BTreeMap<(usize, usize), Role>,
    paths: Vec<PathRecord>,
    /// Kernel image of the kept pendant edge.
    estar_h: Option<(usize, usize)>,
    variant: SolutionKind,
    h_connected: bool,
}

/// Builds the feedback-edge kernel of `g` for `Minimal` or `All` cuts
/// (`Maximal` is not supported under this parameter).
pub fn kernelize(g: &Graph, kind: SolutionKind) -> Result<(Graph, FenContext)> {
    let point = |_: &Graph| -> Result<(Graph, FenContext)> {
        Ok((
            Graph::new(1, [])?,
            FenContext {
                inner: Inner::Point,
            },
        ))
    };
    match kind {
        SolutionKind::Maximal => Err(Error::UnsupportedKind(crate::verify::Method::Fen, kind)),
        SolutionKind::Minimal => {
            if g.n() <= 1 {
                point(g)
            } else if !g.is_connected() {
                Ok((
                    Graph::new(2, [])?,
                    FenContext {
                        inner: Inner::Disconnected,
                    },
                ))
            } else if g.is_forest() {
                Ok((
                    Graph::new(2, [(0, 1)])?,
                    FenContext {
                        inner: Inner::TreeMinimal {
                            edges: g.edges().to_vec(),
                        },
                    },
                ))
            } else {
                general(g, kind)
            }
        }
        SolutionKind::All => {
            if g.n() <= 1 {
                point(g)
            } else if g.is_forest() {
                Ok((
                    Graph::new(2, [])?,
                    FenContext {
                        inner: Inner::ForestAll {
                            g: g.clone(),
                            connected: g.is_connected(),
                        },
                    },
                ))
            } else {
                general(g, kind)
            }
        }
    }
}

fn general(g: &Graph, variant: SolutionKind) -> Result<(Graph, FenContext)> {
    let comps = g.components();
    let comp_edges = |c: &[usize]| c.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
    // Pins: one vertex per lowest tree component (`All` only; trees vanish
    // under stripping but must keep witnessing disconnectedness), and the
    // lowest pendant vertex of a non-tree component (its edge anchors the
    // pure-hair solutions when the kernel stays connected).
    let vstar = if variant == SolutionKind::All {
        comps
            .iter()
            .find(|c| comp_edges(c) == c.len() - 1)
            .map(|c| c[0])
    } else {
        None
    };
    let mut in_nontree = vec![false; g.n()];
    for c in &comps {
        if comp_edges(c) > c.len() - 1 {
            for &v in c {
                in_nontree[v] = true;
            }
        }
    }
    let ustar = (0..g.n()).find(|&v| g.degree(v) == 1 && in_nontree[v]);

    // Strip degree <= 1 vertices (except pins) to a fixpoint.
    let mut alive = vec![true; g.n()];
    loop {
        let mut changed = false;
        for v in 0..g.n() {
            if alive[v] && Some(v) != ustar && Some(v) != vstar {
                let d = g.neighbors(v).iter().filter(|&&w| alive[w]).count();
                if d <= 1 {
                    alive[v] = false;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let keep: Vec<usize> = (0..g.n()).filter(|&v| alive[v]).collect();
    let (gp, gp_to_g) = g.induced(&keep);
    let hair_edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| !alive[u] || !alive[v])
        .collect();
    let hair = Graph::new(g.n(), hair_edges.iter().copied())?;
    debug_assert!(hair.is_forest());

    let s_cut = feedback_edge_set(&gp);
    let k = s_cut.len();
    let t = Graph::new(
        gp.n(),
        gp.edges()
            .iter()
            .copied()
            .filter(|&(u, v)| !s_cut.contains(u, v)),
    )?;
    let mut in_x = vec![false; gp.n()];
    for (u, v) in s_cut.iter() {
        in_x[u] = true;
        in_x[v] = true;
    }
    for v in 0..gp.n() {
        if t.degree(v) != 2 {
            in_x[v] = true;
        }
    }

    // Decompose the tree into maximal paths between X vertices.
    let mut used: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut raw_paths: Vec<Vec<usize>> = Vec::new();
    for x in 0..gp.n() {
        if !in_x[x] {
            continue;
        }
        for &w in t.neighbors(x) {
            if used.contains(&canon(x, w)) {
                continue;
            }
            used.insert(canon(x, w));
            let mut seq = vec![x, w];
            while !in_x[*seq.last().unwrap()] {
                let last = *seq.last().unwrap();
                let prev = seq[seq.len() - 2];
                let next = t
                    .neighbors(last)
                    .iter()
                    .copied()
                    .find(|&z| z != prev)
                    .expect("path interiors have tree degree 2");
                used.insert(canon(last, next));
                seq.push(next);
            }
            if *seq.last().unwrap() < seq[0] {
                seq.reverse();
            }
            raw_paths.push(seq);
        }
    }

    let threshold = if variant == SolutionKind::Minimal {
        4
    } else {
        6
    };
    let mut hverts: BTreeSet<usize> = (0..gp.n()).filter(|&v| in_x[v]).collect();
    let mut fixed_edges: Vec<(usize, usize)> = s_cut.iter().collect();
    let mut long_seqs: Vec<Vec<usize>> = Vec::new();
    for seq in raw_paths {
        if seq.len() - 1 < threshold {
            hverts.extend(&seq[1..seq.len() - 1]);
            fixed_edges.extend(seq.windows(2).map(|w| canon(w[0], w[1])));
        } else {
            long_seqs.push(seq);
        }
    }
    for seq in &long_seqs {
        let l = seq.len() - 1;
        match variant {
            SolutionKind::Minimal => hverts.extend([seq[1], seq[l - 1]]),
            _ => hverts.extend([seq[1], seq[2], seq[l - 2], seq[l - 1]]),
        }
    }

    let hvec: Vec<usize> = hverts.into_iter().collect();
    let mut gp_to_h = vec![usize::MAX; gp.n()];
    for (i, &v) in hvec.iter().enumerate() {
        gp_to_h[v] = i;
    }
    let g_image = |(u, v): (usize, usize)| canon(gp_to_g[u], gp_to_g[v]);
    let h_image = |(u, v): (usize, usize)| canon(gp_to_h[u], gp_to_h[v]);

    let mut hedges: Vec<(usize, usize)> = Vec::new();
    let mut roles: BTreeMap<(usize, usize), Role> = BTreeMap::new();
    for &e in &fixed_edges {
        let he = h_image(e);
        hedges.push(he);
        roles.insert(he, Role::Fixed(g_image(e)));
    }
    let mut paths: Vec<PathRecord> = Vec::new();
    for (pi, seq) in long_seqs.iter().enumerate() {
        let l = seq.len() - 1;
        let stub: Vec<(Part, (usize, usize))> = match variant {
            SolutionKind::Minimal => vec![
                (Part::XEdge, (seq[0], seq[1])),
                (Part::Middle, (seq[1], seq[l - 1])),
                (Part::YEdge, (seq[l - 1], seq[l])),
            ],
            _ => vec![
                (Part::XEdge, (seq[0], seq[1])),
                (Part::SecondX, (seq[1], seq[2])),
                (Part::Middle, (seq[2], seq[l - 2])),
                (Part::SecondY, (seq[l - 2], seq[l - 1])),
                (Part::YEdge, (seq[l - 1], seq[l])),
            ],
        };
        for (part, e) in stub {
            let he = h_image(e);
            hedges.push(he);
            roles.insert(he, Role::OnPath { path: pi, part });
        }
        paths.push(PathRecord {
            g_edges: seq.windows(2).map(|w| g_image((w[0], w[1]))).collect(),
        });
    }
    let h = Graph::new(hvec.len(), hedges)?;
    match variant {
        SolutionKind::Minimal => debug_assert!(k == 0 || h.n() <= 10 * k),
        _ => debug_assert!(k == 0 || h.n() <= 20 * k + 1),
    }

    let estar_h = ustar.map(|u| {
        let eg = canon(u, g.neighbors(u)[0]);
        roles
            .iter()
            .find_map(|(&he, role)| match role {
                Role::Fixed(ge) if *ge == eg => Some(he),
                Role::OnPath {
                    path,
                    part: Part::XEdge,
                } if paths[*path].g_edges[0] == eg => Some(he),
                Role::OnPath {
                    path,
                    part: Part::YEdge,
                } if *paths[*path].g_edges.last().unwrap() == eg => Some(he),
                _ => None,
            })
            .expect("pendant edge survives into the kernel")
    });

    let h_connected = h.is_connected();
    let ctx = FenContext {
        inner: Inner::General(Box::new(GeneralCtx {
            hair,
            hair_edges,
            roles,
            paths,
            estar_h,
            variant,
            h_connected,
        })),
    };
    Ok((h, ctx))
}

/// Product of mandatory per-level cut choices over a common base.
struct CutProduct {
    base: Cut,
    options: Vec<Vec<Cut>>,
    idx: Vec<usize>,
    done: bool,
}

impl CutProduct {
    fn new(base: Cut, options: Vec<Vec<Cut>>) -> Self {
        let done = options.iter().any(|o| o.is_empty());
        let idx = vec![0; options.len()];
        CutProduct {
            base,
            options,
            idx,
            done,
        }
    }
}

impl Iterator for CutProduct {
    type Item = Cut;

    fn next(&mut self) -> Option<Cut> {
        if self.done {
            return None;
        }
        let mut out = self.base.clone();
        for (w, &i) in self.idx.iter().enumerate() {
            out = out.union(&self.options[w][i]);
        }
        let mut w = self.idx.len();
        loop {
            if w == 0 {
                self.done = true;
                break;
            }
            w -= 1;
            if self.idx[w] + 1 < self.options[w].len() {
                self.idx[w] += 1;
                break;
            }
            self.idx[w] = 0;
        }
        Some(out)
    }
}

fn singletons(edges: Vec<(usize, usize)>) -> CutStream {
    Box::new(edges.into_iter().map(|(u, v)| Cut::single(u, v)))
}

/// Nonempty matchings of the hair forest avoiding the vertices already
/// matched by `l`, each unioned with `l` (the empty extension included).
fn hair_extensions(hair: &Graph, hair_edges: &[(usize, usize)], l: Cut) -> CutStream {
    let mut touched = vec![false; hair.n()];
    for (u, v) in l.iter() {
        touched[u] = true;
        touched[v] = true;
    }
    let forbidden: Vec<(usize, usize)> = hair_edges
        .iter()
        .copied()
        .filter(|&(u, v)| touched[u] || touched[v])
        .collect();
    let c = MatchingConstraints {
        forbidden: Cut::new(forbidden),
        ..Default::default()
    };
    let inner = enum_forest_matchings(hair, &c).expect("hair is a forest");
    Box::new(inner.map(move |mm| l.union(&mm)))
}

fn lift_minimal(ctx: &GeneralCtx, m: &Cut) -> CutStream {
    // The pendant kernel cut carries every stripped bridge as a singleton.
    if m.len() == 1 && ctx.estar_h == m.iter().next() {
        let (u, v) = m.iter().next().unwrap();
        let eg = match &ctx.roles[&(u, v)] {
            Role::Fixed(ge) => *ge,
            Role::OnPath {
                path,
                part: Part::XEdge,
            } => ctx.paths[*path].g_edges[0],
            Role::OnPath {
                path,
                part: Part::YEdge,
            } => *ctx.paths[*path].g_edges.last().unwrap(),
            _ => unreachable!("pendant edge is never an interior stub edge"),
        };
        let mut edges = vec![eg];
        edges.extend(ctx.hair_edges.iter().copied());
        return singletons(edges);
    }
    // A stub cut {x-edge, y-edge} of one path stands for every disjoint edge
    // pair of that path.
    if m.len() == 2 {
        let roles: Vec<&Role> = m.iter().map(|(u, v)| &ctx.roles[&(u, v)]).collect();
        if let (Role::OnPath { path: p1, part: a }, Role::OnPath { path: p2, part: b }) =
            (roles[0], roles[1])
        {
            if p1 == p2 && matches!((*a.min(b), *a.max(b)), (Part::XEdge, Part::YEdge)) {
                let edges = &ctx.paths[*p1].g_edges;
                let mut out = Vec::new();
                for i in 0..edges.len() {
                    for j in i + 2..edges.len() {
                        out.push(Cut::new([edges[i], edges[j]]));
                    }
                }
                return Box::new(out.into_iter());
            }
        }
    }
    // Otherwise each stub edge maps to its original edge; a middle edge
    // ranges over the whole contracted interior.
    let mut base = Vec::new();
    let mut groups = Vec::new();
    let mut per_path: BTreeMap<usize, usize> = BTreeMap::new();
    for (u, v) in m.iter() {
        match &ctx.roles[&(u, v)] {
            Role::Fixed(ge) => base.push(*ge),
            Role::OnPath { path, part } => {
                *per_path.entry(*path).or_insert(0) += 1;
                let edges = &ctx.paths[*path].g_edges;
                match part {
                    Part::XEdge => base.push(edges[0]),
                    Part::YEdge => base.push(*edges.last().unwrap()),
                    Part::Middle => groups.push(edges[1..edges.len() - 1].to_vec()),
                    _ => unreachable!("minimal stubs have three edges"),
                }
            }
        }
    }
    debug_assert!(per_path.values().all(|&c| c <= 1));
    Box::new(ProductLift::new(Cut::new(base), groups))
}

fn lift_all(ctx: &GeneralCtx, m: &Cut) -> CutStream {
    let hair = ctx.hair.clone();
    let hair_edges = ctx.hair_edges.clone();
    if m.is_empty() {
        debug_assert!(!ctx.h_connected);
        let tail = enum_forest_matchings(&hair, &MatchingConstraints::nonempty())
            .expect("hair is a forest");
        return Box::new(std::iter::once(Cut::empty()).chain(tail));
    }
    let mut base = Vec::new();
    let mut per_path: BTreeMap<usize, BTreeSet<Part>> = BTreeMap::new();
    for (u, v) in m.iter() {
        match &ctx.roles[&(u, v)] {
            Role::Fixed(ge) => base.push(*ge),
            Role::OnPath { path, part } => {
                per_path.entry(*path).or_default().insert(*part);
            }
        }
    }
    // Per touched path: enumerate original-path matchings realizing the stub
    // pattern. End edges are forced in or out by the stub's end edges; the
    // second edges are steered by which interior stub edges appear; the
    // pattern's parity is preserved.
    let mut level_options: Vec<Vec<Cut>> = Vec::new();
    for (p, parts) in &per_path {
        let edges = &ctx.paths[*p].g_edges;
        let l = edges.len();
        let (e_x, e_x2) = (edges[0], edges[1]);
        let (e_y, e_y2) = (edges[l - 1], edges[l - 2]);
        let mut forced = Vec::new();
        let mut forbidden = Vec::new();
        let mut coupled = Vec::new();
        if parts.contains(&Part::XEdge) {
            forced.push(e_x);
        } else {
            forbidden.push(e_x);
        }
        if parts.contains(&Part::YEdge) {
            forced.push(e_y);
        } else {
            forbidden.push(e_y);
        }
        let sx = parts.contains(&Part::SecondX);
        let mid = parts.contains(&Part::Middle);
        let sy = parts.contains(&Part::SecondY);
        if sx && !mid && !sy {
            forced.push(e_x2);
            forbidden.push(e_y2);
        } else if sy && !mid && !sx {
            forced.push(e_y2);
            forbidden.push(e_x2);
        } else if mid && !sx && !sy {
            coupled.extend([e_x2, e_y2]);
        }
        let c = MatchingConstraints {
            forced: Cut::new(forced),
            forbidden: Cut::new(forbidden),
            coupled: Cut::new(coupled),
            parity: Some((parts.len() % 2) as u8),
            require_nonempty: true,
        };
        let path_graph = Graph::new(hair.n(), edges.iter().copied()).expect("path edges are valid");
        let opts: Vec<Cut> = enum_forest_matchings(&path_graph, &c)
            .expect("a path is a forest")
            .collect();
        debug_assert!(!opts.is_empty(), "kernel cut must be realizable");
        level_options.push(opts);
    }
    let combos = CutProduct::new(Cut::new(base), level_options);
    let hair2 = hair.clone();
    let hair_edges2 = hair_edges.clone();
    let main = combos.flat_map(move |l| hair_extensions(&hair2, &hair_edges2, l));
    // Pure-hair solutions have no kernel footprint; when the kernel is
    // connected they ride along with the pendant witness cut.
    if ctx.h_connected && ctx.estar_h.is_some() && *m == Cut::new([ctx.estar_h.unwrap()]) {
        let tail = enum_forest_matchings(&hair, &MatchingConstraints::nonempty())
            .expect("hair is a forest");
        Box::new(main.chain(tail))
    } else {
        Box::new(main)
    }
}

/// Lifts one kernel cut to its family of original-graph cuts.
pub fn lift(ctx: &FenContext, m: &Cut) -> CutStream {
    match &ctx.inner {
        Inner::Point => Box::new(std::iter::empty()),
        Inner::Disconnected => {
            debug_assert!(m.is_empty());
            Box::new(std::iter::once(Cut::empty()))
        }
        Inner::TreeMinimal { edges } => {
            debug_assert_eq!(*m, Cut::single(0, 1));
            singletons(edges.clone())
        }
        Inner::ForestAll { g, connected } => {
            debug_assert!(m.is_empty());
            let head = if *connected { None } else { Some(Cut::empty()) };
            let tail =
                enum_forest_matchings(g, &MatchingConstraints::nonempty()).expect("forest input");
            Box::new(head.into_iter().chain(tail))
        }
        Inner::General(gctx) => match gctx.variant {
            SolutionKind::Minimal => lift_minimal(gctx, m),
            _ => lift_all(gctx, m),
        },
    }
}

/// Full pipeline: kernelize, enumerate kernel cuts of the requested kind,
/// lift each family.
pub fn enumerate(g: &Graph, kind: SolutionKind) -> Result<CutStream> {
    let (h, ctx) = kernelize(g, kind)?;
    let kernel_cuts = vc::enum_mc_bounded(&h, &vc_2approx(&h))?;
    let chosen = filter_extreme(&kernel_cuts, kind);
    Ok(Box::new(
        chosen.into_iter().flat_map(move |m| lift(&ctx, &m)),
    ))
}
