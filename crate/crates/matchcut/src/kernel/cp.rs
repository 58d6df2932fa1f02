//! Clique-partition kernel. Given a partition of the vertices into cliques,
//! size-2 cliques are split into singletons, clique pairs whose connecting
//! edges do not form a matching are glued into one clique (such pairs can
//! never be separated), witness vertices for pair adjacency and for shared
//! neighbors into two cliques are marked, and every clique is trimmed to its
//! marked vertices plus at least three in total. Cliques are never split by
//! a matching cut, so every kernel cut corresponds to exactly one cut of the
//! input graph: the lift is a bijection and works for every solution kind.

use crate::enumerate::{filter_extreme, CutStream, SolutionKind};
use crate::error::{Error, Result};
use crate::graph::{Cut, Graph, VertexSet};
use crate::kernel::{canon, vc};
use crate::params::vc_2approx;
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Clone)]
pub struct CpContext {
    g: Graph,
    h: Graph,
    /// Original members of each final clique (after splitting and gluing).
    cliques: Vec<VertexSet>,
    /// Final clique index of each kernel vertex.
    clique_of_kernel: Vec<usize>,
}

fn validate(g: &Graph, partition: &[VertexSet]) -> Result<()> {
    let mut seen = vec![false; g.n()];
    for block in partition {
        if block.is_empty() {
            return Err(Error::NotAPartition("empty block".into()));
        }
        for &v in block {
            if v >= g.n() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: g.n(),
                });
            }
            if seen[v] {
                return Err(Error::NotAPartition(format!("vertex {v} appears twice")));
            }
            seen[v] = true;
        }
        for (i, &u) in block.iter().enumerate() {
            for &v in &block[i + 1..] {
                if !g.has_edge(u, v) {
                    return Err(Error::NotAClique(format!(
                        "vertices {u} and {v} share a block but no edge"
                    )));
                }
            }
        }
    }
    if let Some(v) = seen.iter().position(|&s| !s) {
        return Err(Error::NotAPartition(format!("vertex {v} is uncovered")));
    }
    Ok(())
}

fn edge_list_is_matching(edges: &[(usize, usize)]) -> bool {
    let mut used = BTreeSet::new();
    edges.iter().all(|&(u, v)| used.insert(u) && used.insert(v))
}

/// Builds the clique-partition kernel of `g` from the supplied certificate.
pub fn kernelize(g: &Graph, partition: &[VertexSet]) -> Result<(Graph, CpContext)> {
    validate(g, partition)?;
    let k = partition.len();

    // Split size-2 cliques into singletons so that every clique is either a
    // single vertex or too large to be divided by a matching cut.
    let mut cliques: Vec<BTreeSet<usize>> = Vec::new();
    for block in partition {
        if block.len() == 2 {
            cliques.push(BTreeSet::from([block[0]]));
            cliques.push(BTreeSet::from([block[1]]));
        } else {
            cliques.push(block.iter().copied().collect());
        }
    }

    // Glue clique pairs whose connecting edges are not a matching: no
    // matching cut can separate them, so the join may be completed and the
    // pair merged. Repeat until all connecting edge sets are matchings.
    let mut edges: BTreeSet<(usize, usize)> = g.edges().iter().copied().collect();
    'glue: loop {
        for i in 0..cliques.len() {
            for j in i + 1..cliques.len() {
                let between: Vec<(usize, usize)> = edges
                    .iter()
                    .copied()
                    .filter(|&(u, v)| {
                        (cliques[i].contains(&u) && cliques[j].contains(&v))
                            || (cliques[j].contains(&u) && cliques[i].contains(&v))
                    })
                    .collect();
                if !between.is_empty() && !edge_list_is_matching(&between) {
                    for &u in &cliques[i] {
                        for &v in &cliques[j] {
                            edges.insert(canon(u, v));
                        }
                    }
                    let other = cliques.remove(j);
                    cliques[i].extend(other);
                    continue 'glue;
                }
            }
        }
        break;
    }
    let gc = Graph::new(g.n(), edges.iter().copied())?;
    let cliques: Vec<VertexSet> = cliques
        .into_iter()
        .map(|c| c.into_iter().collect())
        .collect();
    let mut clique_of = vec![usize::MAX; g.n()];
    for (qi, q) in cliques.iter().enumerate() {
        for &v in q {
            clique_of[v] = qi;
        }
    }

    // Mark witnesses: the lowest edge of every adjacent clique pair, and for
    // every clique with a vertex adjacent into two other cliques, the lowest
    // such vertex together with its lowest neighbor in each.
    let t = cliques.len();
    let mut marked = vec![false; g.n()];
    let mut between_pairs: BTreeMap<(usize, usize), Vec<(usize, usize)>> = BTreeMap::new();
    for &(u, v) in gc.edges() {
        let (qu, qv) = (clique_of[u], clique_of[v]);
        if qu != qv {
            between_pairs.entry(canon(qu, qv)).or_default().push((u, v));
        }
    }
    for edges in between_pairs.values() {
        let &(u, v) = edges.iter().min().unwrap();
        marked[u] = true;
        marked[v] = true;
    }
    for q in 0..t {
        for i in 0..t {
            for j in i + 1..t {
                if i == q || j == q {
                    continue;
                }
                let witness = cliques[q].iter().copied().find(|&u| {
                    let mut into_i = false;
                    let mut into_j = false;
                    for &w in gc.neighbors(u) {
                        into_i |= clique_of[w] == i;
                        into_j |= clique_of[w] == j;
                    }
                    into_i && into_j
                });
                if let Some(u) = witness {
                    marked[u] = true;
                    for target in [i, j] {
                        let x = gc
                            .neighbors(u)
                            .iter()
                            .copied()
                            .find(|&w| clique_of[w] == target)
                            .unwrap();
                        marked[x] = true;
                    }
                }
            }
        }
    }

    // Trim every clique to its marked vertices, topped up to three members.
    let mut kept: Vec<usize> = Vec::new();
    for q in &cliques {
        debug_assert_ne!(q.len(), 2);
        let unmarked: Vec<usize> = q.iter().copied().filter(|&v| !marked[v]).collect();
        let keep_unmarked = unmarked.len().saturating_sub(q.len().saturating_sub(3));
        kept.extend(q.iter().copied().filter(|&v| marked[v]));
        kept.extend(&unmarked[..keep_unmarked]);
    }
    kept.sort_unstable();
    let (h, h_to_g) = gc.induced(&kept);
    debug_assert!(h.n() <= 4 * k * (3 * k * k + 1).saturating_sub(2 * k));
    let clique_of_kernel: Vec<usize> = h_to_g.iter().map(|&v| clique_of[v]).collect();
    let ctx = CpContext {
        g: g.clone(),
        h: h.clone(),
        cliques,
        clique_of_kernel,
    };
    Ok((h, ctx))
}

/// Maps one kernel cut to the unique original cut it stands for: each clique
/// inherits the side of its kernel remnant and the cut consists of all
/// original edges between the two sides.
pub fn lift(ctx: &CpContext, m: &Cut) -> Cut {
    let (a, _) = ctx
        .h
        .cut_sides(m)
        .expect("kernel solutions are matching cuts");
    let mut clique_in_a = vec![false; ctx.cliques.len()];
    for &v in &a {
        clique_in_a[ctx.clique_of_kernel[v]] = true;
    }
    debug_assert!({
        let mut side = vec![None; ctx.cliques.len()];
        let mut ok = true;
        for v in 0..ctx.h.n() {
            let q = ctx.clique_of_kernel[v];
            let s = a.contains(&v);
            ok &= side[q].is_none() || side[q] == Some(s);
            side[q] = Some(s);
        }
        ok
    });
    let mut in_a = vec![false; ctx.g.n()];
    for (qi, q) in ctx.cliques.iter().enumerate() {
        if clique_in_a[qi] {
            for &v in q {
                in_a[v] = true;
            }
        }
    }
    let lifted = ctx.g.crossing_edges(&in_a);
    debug_assert!(ctx.g.is_matching_cut(&lifted).unwrap_or(false));
    lifted
}

/// Full pipeline: kernelize with the supplied clique partition, enumerate
/// kernel cuts of the requested kind, lift each (one-to-one).
pub fn enumerate(g: &Graph, kind: SolutionKind, partition: &[VertexSet]) -> Result<CutStream> {
    let (h, ctx) = kernelize(g, partition)?;
    let kernel_cuts = vc::enum_mc_bounded(&h, &vc_2approx(&h))?;
    let chosen = filter_extreme(&kernel_cuts, kind);
    Ok(Box::new(chosen.into_iter().map(move |m| lift(&ctx, &m))))
}
