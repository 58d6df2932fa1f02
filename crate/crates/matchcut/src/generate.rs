//! Instance generators: classic families with known cut counts, structured
//! families with exponentially many extreme cuts, and seeded random families
//! with a planted structural parameter. All randomness is reproducible from
//! the seed.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::kernel::canon;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

/// Path on `n` vertices.
pub fn path(n: usize) -> Result<Graph> {
    Graph::new(n, (1..n).map(|v| (v - 1, v)))
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::BadParameter {
            family: Family::Cycle.to_string(),
            msg: format!("cycle needs at least 3 vertices, got {n}"),
        });
    }
    Graph::new(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// Complete graph on `n` vertices.
pub fn complete(n: usize) -> Result<Graph> {
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `k` disjoint stars with `p` leaves each: `(p+1)^k` cuts in total, `p^k`
/// of them maximal.
pub fn star_forest(k: usize, p: usize) -> Result<Graph> {
    let n = k * (p + 1);
    Graph::new(
        n,
        (0..k).flat_map(move |s| {
            let c = s * (p + 1);
            (1..=p).map(move |i| (c, c + i))
        }),
    )
}

/// `k` disjoint seven-cycles: `14^k` maximal cuts.
pub fn seven_cycles(k: usize) -> Result<Graph> {
    Graph::new(
        7 * k,
        (0..k).flat_map(|c| (0..7).map(move |i| (7 * c + i, 7 * c + (i + 1) % 7))),
    )
}

/// Two `k`-cliques joined by `k` vertex-disjoint paths of length four
/// (clique member `i` to clique member `i`): `5k` vertices and at least
/// `4^k` minimal cuts (one path edge per path, cliques on opposite sides).
pub fn clique_paths(k: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            edges.push((i, j));
            edges.push((k + i, k + j));
        }
    }
    for i in 0..k {
        let a = 2 * k + 3 * i;
        edges.extend([(i, a), (a, a + 1), (a + 1, a + 2), (a + 2, k + i)]);
    }
    Graph::new(5 * k, edges)
}

/// Two `k`-vertex paths joined by `k` vertex-disjoint paths of length `l`:
/// `k(l+1)` vertices, feedback edge number `k-1`, and at least `l^k` minimal
/// cuts.
pub fn path_ladder(k: usize, l: usize) -> Result<Graph> {
    if l < 1 {
        return Err(Error::BadParameter {
            family: Family::PathLadder.to_string(),
            msg: "rung length must be at least 1".into(),
        });
    }
    let mut edges = Vec::new();
    for i in 1..k {
        edges.push((i - 1, i));
        edges.push((k + i - 1, k + i));
    }
    for i in 0..k {
        // Rung i runs from u_i over l-1 fresh interior vertices to v_i.
        let base = 2 * k + (l - 1) * i;
        let mut prev = i;
        for j in 0..l - 1 {
            edges.push((prev, base + j));
            prev = base + j;
        }
        edges.push((prev, k + i));
    }
    Graph::new(k * (l + 1), edges)
}

/// Two terminals joined by `k` three-vertex gadget paths: `3k+2` vertices
/// and at least `2^k` minimal cuts (the two gadget-interior edges choose
/// freely per gadget).
pub fn gadget_chain(k: usize) -> Result<Graph> {
    let (s, t) = (3 * k, 3 * k + 1);
    let mut edges = Vec::new();
    for i in 0..k {
        let x = 3 * i;
        edges.extend([(s, x), (x, x + 1), (x + 1, x + 2), (x + 2, t)]);
    }
    Graph::new(3 * k + 2, edges)
}

/// Random graph whose vertex cover is at most `k`: all edges touch the
/// first `k` vertices.
pub fn random_bounded_cover(n: usize, k: usize, seed: u64) -> Result<Graph> {
    let k = k.min(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = BTreeSet::new();
    for i in 0..k {
        for j in i + 1..k {
            if rng.gen_bool(0.4) {
                edges.insert((i, j));
            }
        }
    }
    for v in k..n {
        let d = rng.gen_range(0..=2.min(k));
        for _ in 0..d {
            edges.insert(canon(rng.gen_range(0..k), v));
        }
    }
    Graph::new(n, edges)
}

/// Random tree plus up to `k` extra edges: feedback edge number at most `k`.
pub fn random_sparse(n: usize, k: usize, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = BTreeSet::new();
    for v in 1..n {
        edges.insert((rng.gen_range(0..v), v));
    }
    if n >= 2 {
        let mut added = 0;
        let mut attempts = 0;
        while added < k && attempts < 20 * k + 100 {
            attempts += 1;
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u != v && edges.insert(canon(u, v)) {
                added += 1;
            }
        }
    }
    Graph::new(n, edges)
}

/// Random graph with a planted partition into at most `k` cliques, returned
/// together with the certificate. Edges between blocks are sprinkled freely,
/// so they need not form matchings.
pub fn random_clique_partition(k: usize, n: usize, seed: u64) -> Result<(Graph, Vec<VertexSet>)> {
    if n == 0 {
        return Ok((Graph::new(0, [])?, Vec::new()));
    }
    let k = k.clamp(1, n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut blocks: Vec<VertexSet> = vec![Vec::new(); k];
    let mut block_of = vec![0; n];
    for v in 0..n {
        let b = if v < k { v } else { rng.gen_range(0..k) };
        blocks[b].push(v);
        block_of[v] = b;
    }
    let mut edges = BTreeSet::new();
    for b in &blocks {
        for (i, &u) in b.iter().enumerate() {
            for &v in &b[i + 1..] {
                edges.insert(canon(u, v));
            }
        }
    }
    for _ in 0..2 * n {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && block_of[u] != block_of[v] {
            edges.insert(canon(u, v));
        }
    }
    Ok((Graph::new(n, edges)?, blocks))
}

/// Named instance families reachable from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    StarForest,
    SevenCycles,
    CliquePaths,
    PathLadder,
    GadgetChain,
    RandomCover,
    RandomSparse,
    RandomCliques,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::StarForest,
        Family::SevenCycles,
        Family::CliquePaths,
        Family::PathLadder,
        Family::GadgetChain,
        Family::RandomCover,
        Family::RandomSparse,
        Family::RandomCliques,
    ];

    fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::StarForest => "star-forest",
            Family::SevenCycles => "seven-cycles",
            Family::CliquePaths => "clique-paths",
            Family::PathLadder => "path-ladder",
            Family::GadgetChain => "gadget-chain",
            Family::RandomCover => "random-cover",
            Family::RandomSparse => "random-sparse",
            Family::RandomCliques => "random-cliques",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse {
                line: 0,
                msg: format!("unknown family {s:?}"),
            })
    }
}

/// Optional knobs for [`generate`]; each family reads the subset it needs.
#[derive(Debug, Clone, Copy, Default)]
pub struct FamilyParams {
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub l: Option<usize>,
    pub p: Option<usize>,
    pub seed: u64,
}

/// A generated graph plus the planted certificate, when the family has one.
#[derive(Debug, Clone)]
pub struct Instance {
    pub graph: Graph,
    pub partition: Option<Vec<VertexSet>>,
}

fn req(value: Option<usize>, family: Family, name: &'static str) -> Result<usize> {
    value.ok_or(Error::MissingParameter {
        family: family.to_string(),
        name,
    })
}

/// Builds one instance of `family` from `params`.
pub fn generate(family: Family, params: &FamilyParams) -> Result<Instance> {
    let plain = |graph: Graph| Instance {
        graph,
        partition: None,
    };
    let (n, k, l, p, seed) = (params.n, params.k, params.l, params.p, params.seed);
    Ok(match family {
        Family::Path => plain(path(req(n, family, "n")?)?),
        Family::Cycle => plain(cycle(req(n, family, "n")?)?),
        Family::Complete => plain(complete(req(n, family, "n")?)?),
        Family::StarForest => plain(star_forest(req(k, family, "k")?, req(p, family, "p")?)?),
        Family::SevenCycles => plain(seven_cycles(req(k, family, "k")?)?),
        Family::CliquePaths => plain(clique_paths(req(k, family, "k")?)?),
        Family::PathLadder => plain(path_ladder(req(k, family, "k")?, req(l, family, "l")?)?),
        Family::GadgetChain => plain(gadget_chain(req(k, family, "k")?)?),
        Family::RandomCover => plain(random_bounded_cover(
            req(n, family, "n")?,
            req(k, family, "k")?,
            seed,
        )?),
        Family::RandomSparse => plain(random_sparse(
            req(n, family, "n")?,
            req(k, family, "k")?,
            seed,
        )?),
        Family::RandomCliques => {
            let (graph, blocks) =
                random_clique_partition(req(k, family, "k")?, req(n, family, "n")?, seed)?;
            Instance {
                graph,
                partition: Some(blocks),
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{oracle_enum, spanning_tree_enum, SolutionKind};
    use crate::params::{feedback_edge_set, vc_2approx};

    #[test]
    fn star_forest_counts() {
        let g = star_forest(2, 3).unwrap();
        assert_eq!((g.n(), g.m()), (8, 6));
        assert_eq!(oracle_enum(&g, SolutionKind::All).unwrap().len(), 16);
        assert_eq!(oracle_enum(&g, SolutionKind::Maximal).unwrap().len(), 9);
    }

    #[test]
    fn seven_cycle_maximal_counts() {
        let one = seven_cycles(1).unwrap();
        assert_eq!(oracle_enum(&one, SolutionKind::Maximal).unwrap().len(), 14);
        let two = seven_cycles(2).unwrap();
        assert_eq!(
            spanning_tree_enum(&two, SolutionKind::Maximal)
                .unwrap()
                .count(),
            196
        );
    }

    #[test]
    fn clique_paths_one_is_a_path() {
        let g = clique_paths(1).unwrap();
        assert_eq!((g.n(), g.m()), (5, 4));
        assert!(g.is_connected() && g.is_forest());
        assert_eq!(oracle_enum(&g, SolutionKind::Minimal).unwrap().len(), 4);
    }

    #[test]
    fn clique_paths_two_has_many_minimal_cuts() {
        let g = clique_paths(2).unwrap();
        assert_eq!(g.n(), 10);
        assert!(oracle_enum(&g, SolutionKind::Minimal).unwrap().len() >= 16);
    }

    #[test]
    fn path_ladder_parameters() {
        let g = path_ladder(2, 4).unwrap();
        assert_eq!(g.n(), 10);
        assert!(g.is_connected());
        assert_eq!(feedback_edge_set(&g).len(), 1);
        assert!(oracle_enum(&g, SolutionKind::Minimal).unwrap().len() >= 16);
    }

    #[test]
    fn gadget_chain_minimal_lower_bound() {
        let g = gadget_chain(3).unwrap();
        assert_eq!(g.n(), 11);
        assert!(oracle_enum(&g, SolutionKind::Minimal).unwrap().len() >= 8);
    }

    #[test]
    fn random_families_are_reproducible_and_bounded() {
        let a = random_bounded_cover(12, 4, 7).unwrap();
        let b = random_bounded_cover(12, 4, 7).unwrap();
        assert_eq!(a.edges(), b.edges());
        assert!(a.edges().iter().all(|&(u, _)| u < 4));
        assert!(vc_2approx(&a).len() <= 8);

        let s = random_sparse(10, 3, 1).unwrap();
        assert!(s.m() <= 9 + 3);
        assert!(s.is_connected());

        let (g, blocks) = random_clique_partition(3, 10, 5).unwrap();
        assert!(blocks.len() <= 3);
        assert_eq!(blocks.iter().map(Vec::len).sum::<usize>(), 10);
        // The certificate must be accepted by the clique-partition kernel.
        crate::kernel::cp::kernelize(&g, &blocks).unwrap();
    }

    #[test]
    fn family_dispatch_and_parsing() {
        for f in Family::ALL {
            assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
        }
        let inst = generate(
            Family::StarForest,
            &FamilyParams {
                k: Some(2),
                p: Some(3),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(inst.graph.n(), 8);
        assert!(inst.partition.is_none());
        assert!(matches!(
            generate(Family::Path, &FamilyParams::default()),
            Err(Error::MissingParameter { .. })
        ));
        let rc = generate(
            Family::RandomCliques,
            &FamilyParams {
                k: Some(3),
                n: Some(8),
                seed: 2,
                ..Default::default()
            },
        )
        .unwrap();
        assert!(rc.partition.is_some());
    }
}
