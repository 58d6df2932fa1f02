//! Reference enumeration engines: the exhaustive bipartition oracle, the
//! spanning-forest enumerator (Fibonacci-bounded), constrained matching
//! enumeration on forests, and inclusion filtering for minimal/maximal
//! solutions.

use crate::error::{Error, Result};
use crate::graph::{Cut, Graph};
use std::collections::BTreeSet;

/// Which slice of the solution space is requested.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolutionKind {
    All,
    Minimal,
    Maximal,
}

impl std::fmt::Display for SolutionKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            SolutionKind::All => "all",
            SolutionKind::Minimal => "minimal",
            SolutionKind::Maximal => "maximal",
        };
        f.write_str(s)
    }
}

/// A pull-based, duplicate-free stream of cuts.
pub type CutStream = Box<dyn Iterator<Item = Cut>>;

/// Largest component size the exhaustive oracle will scan (2^(size-1)
/// bipartitions per component).
pub const ORACLE_COMPONENT_GUARD: usize = 22;

/// Fibonacci numbers with F(1) = F(2) = 1. Guarded to indices whose value
/// fits comfortably in 64 bits.
pub fn fib(n: u64) -> Result<u64> {
    if n == 0 || n > 90 {
        return Err(Error::FibOutOfRange(n));
    }
    let (mut a, mut b) = (1u64, 1u64); // F(1), F(2)
    for _ in 2..n {
        let c = a + b;
        a = b;
        b = c;
    }
    Ok(b)
}

/// Constraints for matching enumeration on forests: `forced` edges must all be
/// present, `forbidden` edges absent, the `coupled` set appears entirely or
/// not at all, `parity` (0/1) targets `|M| mod 2`, and `require_nonempty`
/// drops the empty matching.
#[derive(Debug, Clone, Default)]
pub struct MatchingConstraints {
    pub forced: Cut,
    pub forbidden: Cut,
    pub coupled: Cut,
    pub parity: Option<u8>,
    pub require_nonempty: bool,
}

impl MatchingConstraints {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn nonempty() -> Self {
        MatchingConstraints {
            require_nonempty: true,
            ..Self::default()
        }
    }
}

/// Enumerates matchings of a forest under [`MatchingConstraints`] with
/// polynomial delay: the backtracker decides edges in canonical order and
/// descends only into subtrees certified non-empty by a maximum-matching
/// feasibility check on the remaining forest.
pub fn enum_forest_matchings(g: &Graph, c: &MatchingConstraints) -> Result<CutStream> {
    if !g.is_forest() {
        return Err(Error::NotAForest);
    }
    if let Some(p) = c.parity {
        if p > 1 {
            return Err(Error::BadConstraints(format!(
                "parity target must be 0 or 1, got {p}"
            )));
        }
    }
    for set in [&c.forced, &c.forbidden, &c.coupled] {
        for (u, v) in set.iter() {
            if !g.has_edge(u, v) {
                return Err(Error::BadConstraints(format!(
                    "constraint references non-edge {u}-{v}"
                )));
            }
        }
    }
    let pairs = [
        (&c.forced, &c.forbidden, "forced", "forbidden"),
        (&c.forced, &c.coupled, "forced", "coupled"),
        (&c.forbidden, &c.coupled, "forbidden", "coupled"),
    ];
    for (x, y, xn, yn) in pairs {
        for (u, v) in x.iter() {
            if y.contains(u, v) {
                return Err(Error::BadConstraints(format!(
                    "edge {u}-{v} appears in both {xn} and {yn} sets"
                )));
            }
        }
    }

    // Resolve the coupled set into up to two independent passes: one with the
    // coupled edges forced, one with them forbidden. Their outputs are
    // disjoint whenever the coupled set is nonempty.
    let mut passes = Vec::new();
    if c.coupled.is_empty() {
        passes.push(Pass::build(g, &c.forced, &c.forbidden, c));
    } else {
        passes.push(Pass::build(g, &c.forced.union(&c.coupled), &c.forbidden, c));
        passes.push(Pass::build(g, &c.forced, &c.forbidden.union(&c.coupled), c));
    }
    let passes: Vec<Pass> = passes.into_iter().flatten().collect();
    Ok(Box::new(ForestMatchingIter::new(g.n(), passes)))
}

/// One coupled-resolution branch of the backtracking search.
struct Pass {
    base: Vec<(usize, usize)>,
    free: Vec<(usize, usize)>,
    /// Required parity of the number of chosen free edges, if any.
    parity: Option<u8>,
    /// Minimum number of chosen free edges (0 or 1).
    need: usize,
}

impl Pass {
    /// Returns `None` when the pass can be discarded outright (base edges
    /// clash with each other).
    fn build(g: &Graph, base: &Cut, banned: &Cut, c: &MatchingConstraints) -> Option<Pass> {
        if !g.is_matching(base).unwrap_or(false) {
            return None;
        }
        let mut blocked = vec![false; g.n()];
        for (u, v) in base.iter() {
            blocked[u] = true;
            blocked[v] = true;
        }
        let free: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| {
                !blocked[u] && !blocked[v] && !banned.contains(u, v) && !base.contains(u, v)
            })
            .collect();
        let parity = c.parity.map(|p| (p + base.len() as u8) & 1);
        let need = usize::from(c.require_nonempty && base.is_empty());
        Some(Pass {
            base: base.iter().collect(),
            free,
            parity,
            need,
        })
    }
}

struct Frame {
    included: bool,
}

struct ForestMatchingIter {
    n: usize,
    passes: Vec<Pass>,
    pass_idx: usize,
    started: bool,
    matched: Vec<bool>,
    chosen: Vec<(usize, usize)>,
    stack: Vec<Frame>,
}

impl ForestMatchingIter {
    fn new(n: usize, passes: Vec<Pass>) -> Self {
        ForestMatchingIter {
            n,
            passes,
            pass_idx: 0,
            started: false,
            matched: vec![false; n],
            chosen: Vec::new(),
            stack: Vec::new(),
        }
    }

    fn pass(&self) -> &Pass {
        &self.passes[self.pass_idx]
    }

    /// Maximum matching size among `free[from..]` restricted to currently
    /// unmatched endpoints. Exact on forests via leaf stripping.
    fn remaining_capacity(&self, from: usize, extra_blocked: Option<(usize, usize)>) -> usize {
        let pass = self.pass();
        let is_blocked =
            |v: usize| self.matched[v] || extra_blocked.map_or(false, |(a, b)| v == a || v == b);
        let avail: Vec<(usize, usize)> = pass.free[from..]
            .iter()
            .copied()
            .filter(|&(u, v)| !is_blocked(u) && !is_blocked(v))
            .collect();
        if avail.is_empty() {
            return 0;
        }
        let mut deg = vec![0usize; self.n];
        let mut inc: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for (i, &(u, v)) in avail.iter().enumerate() {
            deg[u] += 1;
            deg[v] += 1;
            inc[u].push(i);
            inc[v].push(i);
        }
        let mut alive = vec![true; avail.len()];
        let mut vertex_done = vec![false; self.n];
        let mut queue: Vec<usize> = avail
            .iter()
            .flat_map(|&(u, v)| [u, v])
            .filter(|&v| deg[v] == 1)
            .collect();
        let mut take = 0;
        while let Some(v) = queue.pop() {
            if vertex_done[v] || deg[v] != 1 {
                continue;
            }
            let eid = match inc[v].iter().find(|&&i| alive[i]) {
                Some(&i) => i,
                None => continue,
            };
            take += 1;
            let (a, b) = avail[eid];
            // Remove both endpoints and every incident edge.
            for w in [a, b] {
                vertex_done[w] = true;
                for &i in &inc[w] {
                    if alive[i] {
                        alive[i] = false;
                        let (x, y) = avail[i];
                        for z in [x, y] {
                            deg[z] -= 1;
                            if deg[z] == 1 && !vertex_done[z] {
                                queue.push(z);
                            }
                        }
                    }
                }
            }
        }
        take
    }

    /// Can the current partial choice (plus optionally one more edge) be
    /// completed to satisfy the pass's parity and nonemptiness targets?
    fn feasible(&self, next_idx: usize, pending: Option<(usize, usize)>) -> bool {
        let pass = self.pass();
        let have = self.chosen.len() + usize::from(pending.is_some());
        let cap = self.remaining_capacity(next_idx, pending);
        let need_more = pass.need.saturating_sub(have);
        let t = match pass.parity {
            None => need_more,
            Some(p) => {
                if (have + need_more) % 2 == p as usize {
                    need_more
                } else {
                    need_more + 1
                }
            }
        };
        t <= cap
    }

    /// Extends the current partial assignment to a full (valid) leaf. The
    /// caller guarantees the current state is feasible.
    fn descend(&mut self) {
        let total = self.pass().free.len();
        while self.stack.len() < total {
            let d = self.stack.len();
            let (u, v) = self.pass().free[d];
            let legal = !self.matched[u] && !self.matched[v];
            if legal && self.feasible(d + 1, Some((u, v))) {
                self.matched[u] = true;
                self.matched[v] = true;
                self.chosen.push((u, v));
                self.stack.push(Frame { included: true });
            } else {
                debug_assert!(self.feasible(d + 1, None));
                self.stack.push(Frame { included: false });
            }
        }
    }

    /// Moves to the next unexplored feasible sibling; false when the pass is
    /// exhausted.
    fn backtrack(&mut self) -> bool {
        while let Some(top) = self.stack.pop() {
            let d = self.stack.len();
            if top.included {
                let (u, v) = self.pass().free[d];
                self.matched[u] = false;
                self.matched[v] = false;
                self.chosen.pop();
                if self.feasible(d + 1, None) {
                    self.stack.push(Frame { included: false });
                    return true;
                }
            }
        }
        false
    }

    fn emit(&self) -> Cut {
        Cut::new(self.pass().base.iter().chain(self.chosen.iter()).copied())
    }
}

impl Iterator for ForestMatchingIter {
    type Item = Cut;

    fn next(&mut self) -> Option<Cut> {
        loop {
            if self.pass_idx >= self.passes.len() {
                return None;
            }
            if !self.started {
                self.started = true;
                self.matched = vec![false; self.n];
                for &(u, v) in &self.passes[self.pass_idx].base {
                    self.matched[u] = true;
                    self.matched[v] = true;
                }
                self.chosen.clear();
                self.stack.clear();
                if self.feasible(0, None) {
                    self.descend();
                    return Some(self.emit());
                }
            } else if self.backtrack() {
                self.descend();
                return Some(self.emit());
            } else {
                self.pass_idx += 1;
                self.started = false;
                continue;
            }
            // Root of this pass was infeasible; try the next pass.
            self.pass_idx += 1;
            self.started = false;
        }
    }
}

/// All matching cuts of one connected component by exhaustive bipartition
/// scan using bitmask adjacency. `comp` must be a connected component.
fn component_cuts_exhaustive(g: &Graph, comp: &[usize]) -> Vec<Cut> {
    let k = comp.len();
    if k < 2 {
        return Vec::new();
    }
    debug_assert!(k <= ORACLE_COMPONENT_GUARD);
    let mut pos = std::collections::HashMap::new();
    for (i, &v) in comp.iter().enumerate() {
        pos.insert(v, i);
    }
    let mut adj = vec![0u64; k];
    for (i, &v) in comp.iter().enumerate() {
        for &w in g.neighbors(v) {
            adj[i] |= 1u64 << pos[&w];
        }
    }
    let mut cuts = Vec::new();
    // Vertex comp[0] is pinned to side A; subsets of the rest form side B.
    for b in 1u64..(1u64 << (k - 1)) {
        let bmask = b << 1;
        let amask = !bmask & ((1u64 << k) - 1);
        let mut ok = true;
        for i in 0..k {
            let cross = adj[i] & if bmask >> i & 1 == 1 { amask } else { bmask };
            if cross.count_ones() > 1 {
                ok = false;
                break;
            }
        }
        if !ok {
            continue;
        }
        let mut edges = Vec::new();
        for i in 0..k {
            if bmask >> i & 1 == 0 {
                let cross = adj[i] & bmask;
                if cross != 0 {
                    let j = cross.trailing_zeros() as usize;
                    edges.push((comp[i], comp[j]));
                }
            }
        }
        // A connected component always has crossing edges.
        debug_assert!(!edges.is_empty());
        cuts.push(Cut::new(edges));
    }
    cuts.sort();
    cuts.dedup();
    cuts
}

/// Combines per-component cut options into cuts of the whole graph: each
/// component contributes one of its cuts or nothing, and the all-nothing
/// combination (the empty cut) is valid exactly when there are >= 2
/// components.
fn combine_component_cuts(per_comp: Vec<Vec<Cut>>) -> Vec<Cut> {
    let disconnected = per_comp.len() >= 2;
    let mut acc: Vec<Cut> = vec![Cut::empty()];
    for options in per_comp {
        let mut next = Vec::with_capacity(acc.len() * (options.len() + 1));
        for base in &acc {
            next.push(base.clone());
            for opt in &options {
                next.push(base.union(opt));
            }
        }
        acc = next;
    }
    if !disconnected {
        acc.retain(|c| !c.is_empty());
    }
    acc.sort();
    acc.dedup();
    acc
}

/// Exhaustive enumeration of matching cuts by scanning all bipartitions of
/// each component. Output is sorted canonically. Ground truth for tests and
/// for kernel-side solution enumeration.
pub fn oracle_enum(g: &Graph, kind: SolutionKind) -> Result<Vec<Cut>> {
    let comps = g.components();
    for c in &comps {
        if c.len() > ORACLE_COMPONENT_GUARD {
            return Err(Error::ComponentTooLarge {
                size: c.len(),
                guard: ORACLE_COMPONENT_GUARD,
            });
        }
    }
    let per: Vec<Vec<Cut>> = comps
        .iter()
        .map(|c| component_cuts_exhaustive(g, c))
        .collect();
    let all = combine_component_cuts(per);
    Ok(filter_extreme(&all, kind))
}

/// Keeps the cuts that are inclusion-minimal / -maximal within `cuts`
/// (`All` just sorts and deduplicates).
pub fn filter_extreme(cuts: &[Cut], kind: SolutionKind) -> Vec<Cut> {
    let mut sorted: Vec<Cut> = cuts.to_vec();
    sorted.sort();
    sorted.dedup();
    match kind {
        SolutionKind::All => sorted,
        SolutionKind::Minimal => sorted
            .iter()
            .filter(|c| {
                !sorted
                    .iter()
                    .any(|o| o.len() < c.len() && o.is_subset_of(c))
            })
            .cloned()
            .collect(),
        SolutionKind::Maximal => sorted
            .iter()
            .filter(|c| {
                !sorted
                    .iter()
                    .any(|o| o.len() > c.len() && c.is_subset_of(o))
            })
            .cloned()
            .collect(),
    }
}

/// Nonempty matching cuts of one connected component, streamed via nonempty
/// matchings of a spanning tree: each tree matching determines a unique
/// bipartition; the cut is kept when the crossing edges form a matching.
struct ComponentTreeCuts {
    g: Graph,
    tree: Graph,
    inner: CutStream,
}

impl ComponentTreeCuts {
    fn new(g: &Graph, comp: &[usize]) -> Self {
        let forest = g.spanning_forest();
        let comp_set: BTreeSet<usize> = comp.iter().copied().collect();
        let tree_edges: Vec<(usize, usize)> = forest
            .iter()
            .filter(|&(u, _)| comp_set.contains(&u))
            .collect();
        let tree = Graph::new(g.n(), tree_edges).expect("tree edges are valid");
        let inner = enum_forest_matchings(&tree, &MatchingConstraints::nonempty())
            .expect("spanning tree is a forest");
        ComponentTreeCuts {
            g: g.clone(),
            tree,
            inner,
        }
    }
}

impl Iterator for ComponentTreeCuts {
    type Item = Cut;

    fn next(&mut self) -> Option<Cut> {
        loop {
            let m_tree = self.inner.next()?;
            let (a, _) = self
                .tree
                .cut_sides(&m_tree)
                .expect("nonempty forest matching is a cut of the forest");
            let mut in_a = vec![false; self.g.n()];
            for &v in &a {
                in_a[v] = true;
            }
            let crossing = self.g.crossing_edges(&in_a);
            if self.g.is_matching(&crossing).expect("crossing edges exist") {
                return Some(crossing);
            }
        }
    }
}

/// Cartesian combination of materialized per-component cut lists; option 0 of
/// every wheel is "no cut from this component".
struct OdometerProduct {
    options: Vec<Vec<Cut>>,
    idx: Vec<usize>,
    done: bool,
}

impl Iterator for OdometerProduct {
    type Item = Cut;

    fn next(&mut self) -> Option<Cut> {
        if self.done {
            return None;
        }
        let mut result = Cut::empty();
        for (w, &i) in self.idx.iter().enumerate() {
            if i > 0 {
                result = result.union(&self.options[w][i - 1]);
            }
        }
        // Advance the odometer, rightmost wheel fastest.
        let mut w = self.idx.len();
        loop {
            if w == 0 {
                self.done = true;
                break;
            }
            w -= 1;
            if self.idx[w] < self.options[w].len() {
                self.idx[w] += 1;
                break;
            }
            self.idx[w] = 0;
        }
        Some(result)
    }
}

/// Streams matching cuts through spanning-forest matchings (no exponential
/// bipartition scan). `All` is fully streaming for connected graphs;
/// `Minimal` / `Maximal` materialize and filter.
pub fn spanning_tree_enum(g: &Graph, kind: SolutionKind) -> Result<CutStream> {
    match kind {
        SolutionKind::All => {
            let comps = g.components();
            match comps.len() {
                0 => Ok(Box::new(std::iter::empty())),
                1 => Ok(Box::new(ComponentTreeCuts::new(g, &comps[0]))),
                _ => {
                    let options: Vec<Vec<Cut>> = comps
                        .iter()
                        .map(|c| ComponentTreeCuts::new(g, c).collect())
                        .collect();
                    let idx = vec![0; options.len()];
                    Ok(Box::new(OdometerProduct {
                        options,
                        idx,
                        done: false,
                    }))
                }
            }
        }
        SolutionKind::Minimal | SolutionKind::Maximal => {
            let all: Vec<Cut> = spanning_tree_enum(g, SolutionKind::All)?.collect();
            Ok(Box::new(filter_extreme(&all, kind).into_iter()))
        }
    }
}

/// Number of matching cuts of the requested kind, via the spanning-forest
/// enumerator.
pub fn count_mc(g: &Graph, kind: SolutionKind) -> usize {
    match kind {
        SolutionKind::All => spanning_tree_enum(g, kind)
            .expect("all-kind cannot fail")
            .count(),
        _ => spanning_tree_enum(g, kind)
            .expect("filtered kinds cannot fail")
            .count(),
    }
}
