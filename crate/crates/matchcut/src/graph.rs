//! Immutable simple graphs with canonical edge lists, plus the cut primitives
//! everything else is built on: matching tests, matching-cut recognition via
//! the component multigraph, canonical cut sides, edge contraction and
//! lowest-index spanning forests.

use crate::error::{Error, Result};
use std::collections::BTreeSet;

/// Sorted set of vertex identifiers.
pub type VertexSet = Vec<usize>;

/// An undirected simple graph over vertices `0..n`. Edges are stored
/// canonically (`u < v`, sorted lexicographically) and adjacency lists are
/// sorted ascending, so every "arbitrary" choice downstream is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

/// An edge set in canonical form (each pair `u < v`, list sorted, no
/// duplicates). Used for matching cuts, matchings, and feedback edge sets
/// alike; the empty cut is `Cut::empty()`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Cut(Vec<(usize, usize)>);

impl Cut {
    pub fn new(edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut v: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(u, w)| (u.min(w), u.max(w)))
            .collect();
        v.sort_unstable();
        v.dedup();
        Cut(v)
    }

    pub fn empty() -> Self {
        Cut(Vec::new())
    }

    pub fn single(u: usize, v: usize) -> Self {
        Cut(vec![(u.min(v), u.max(v))])
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.0.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    /// True if every edge of `self` is also in `other`.
    pub fn is_subset_of(&self, other: &Cut) -> bool {
        self.0.iter().all(|&(u, v)| other.contains(u, v))
    }

    pub fn union(&self, other: &Cut) -> Cut {
        Cut::new(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().copied()
    }
}

impl FromIterator<(usize, usize)> for Cut {
    fn from_iter<T: IntoIterator<Item = (usize, usize)>>(iter: T) -> Self {
        Cut::new(iter)
    }
}

impl Graph {
    /// Builds a graph, normalizing edges; rejects loops and out-of-range
    /// endpoints, deduplicates parallel mentions.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut canon: Vec<(usize, usize)> = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        canon.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &canon {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: canon,
            adj,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_cut(&self) -> Cut {
        Cut(self.edges.clone())
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    /// Connected components, each sorted, ordered by lowest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut queue = vec![s];
            while let Some(v) = queue.pop() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Induced subgraph on `verts` (deduplicated, sorted). Returns the graph
    /// over dense ids plus the map from new id to old id.
    pub fn induced(&self, verts: &[usize]) -> (Graph, Vec<usize>) {
        let keep: Vec<usize> = {
            let mut v = verts.to_vec();
            v.sort_unstable();
            v.dedup();
            v
        };
        let mut old_to_new = vec![usize::MAX; self.n];
        for (new, &old) in keep.iter().enumerate() {
            old_to_new[old] = new;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| old_to_new[u] != usize::MAX && old_to_new[v] != usize::MAX)
            .map(|&(u, v)| (old_to_new[u], old_to_new[v]));
        let g = Graph::new(keep.len(), edges).expect("induced subgraph is valid");
        (g, keep)
    }

    /// True if `m` is a matching (pairwise vertex-disjoint edges). Errors if
    /// `m` contains a non-edge.
    pub fn is_matching(&self, m: &Cut) -> Result<bool> {
        let mut used = BTreeSet::new();
        for (u, v) in m.iter() {
            if !self.has_edge(u, v) {
                return Err(Error::NotAnEdge(u, v));
            }
            if !used.insert(u) || !used.insert(v) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Decides whether `m` is a matching cut: a matching that equals `E(A, B)`
    /// for some partition `{A, B}` of the vertices with both sides nonempty.
    /// The empty set qualifies exactly when the graph is disconnected.
    pub fn is_matching_cut(&self, m: &Cut) -> Result<bool> {
        if !self.is_matching(m)? {
            return Ok(false);
        }
        Ok(self.cut_sides_inner(m).is_some())
    }

    /// The canonical partition `(A, B)` realizing cut `m`, or `None` when `m`
    /// is not a matching cut. Components untouched by cut edges go to `A`; the
    /// two-coloring of each constrained block places its lowest vertex in `A`.
    pub fn cut_sides(&self, m: &Cut) -> Option<(VertexSet, VertexSet)> {
        for (u, v) in m.iter() {
            if !self.has_edge(u, v) {
                return None;
            }
        }
        if !self.is_matching(m).ok()? {
            return None;
        }
        self.cut_sides_inner(m)
    }

    /// Core of cut recognition. Requires `m` to be a matching over edges of
    /// the graph. Removes `m`, labels components, and 2-colors the component
    /// multigraph whose links are the edges of `m`.
    fn cut_sides_inner(&self, m: &Cut) -> Option<(VertexSet, VertexSet)> {
        if self.n == 0 {
            return None;
        }
        // Component labels of G - m.
        let mut comp = vec![usize::MAX; self.n];
        let mut n_comp = 0;
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = n_comp;
            let mut queue = vec![s];
            while let Some(v) = queue.pop() {
                for &w in &self.adj[v] {
                    if comp[w] == usize::MAX && !m.contains(v, w) {
                        comp[w] = n_comp;
                        queue.push(w);
                    }
                }
            }
            n_comp += 1;
        }
        // Every cut edge must join two distinct components.
        let mut links: Vec<Vec<usize>> = vec![Vec::new(); n_comp];
        for (u, v) in m.iter() {
            if comp[u] == comp[v] {
                return None;
            }
            links[comp[u]].push(comp[v]);
            links[comp[v]].push(comp[u]);
        }
        if m.is_empty() {
            // All components are free; the all-to-A convention would leave B
            // empty. Canonical split: the component of vertex 0 versus the
            // rest.
            if n_comp < 2 {
                return None;
            }
            let (a, b) = (0..self.n).partition(|&v| comp[v] == comp[0]);
            return Some((a, b));
        }
        // 2-color the component multigraph; pin each block so that its lowest
        // original vertex lands on side A. Unconstrained components go to A.
        // `lowest[c]` = lowest vertex of component c (components are found in
        // vertex order, so the first vertex hitting c is its lowest).
        let mut lowest = vec![usize::MAX; n_comp];
        for v in 0..self.n {
            if lowest[comp[v]] == usize::MAX {
                lowest[comp[v]] = v;
            }
        }
        let mut color = vec![u8::MAX; n_comp];
        for start in 0..n_comp {
            if color[start] != u8::MAX {
                continue;
            }
            // BFS this block of the multigraph, collecting members.
            let mut block = vec![start];
            color[start] = 0;
            let mut queue = vec![start];
            while let Some(c) = queue.pop() {
                for &d in &links[c] {
                    if color[d] == u8::MAX {
                        color[d] = color[c] ^ 1;
                        block.push(d);
                        queue.push(d);
                    } else if color[d] == color[c] {
                        return None; // odd cycle of components
                    }
                }
            }
            // Flip the block if its lowest vertex is colored B.
            let anchor = block.iter().map(|&c| lowest[c]).min().unwrap();
            if color[comp[anchor]] == 1 {
                for &c in &block {
                    color[c] ^= 1;
                }
            }
        }
        let mut a = Vec::new();
        let mut b = Vec::new();
        for v in 0..self.n {
            if color[comp[v]] == 0 {
                a.push(v);
            } else {
                b.push(v);
            }
        }
        if a.is_empty() || b.is_empty() {
            return None;
        }
        // The realized cut must equal m exactly: with the multigraph 2-colored
        // this is automatic for edges of m, but edges outside m must not cross.
        // They cannot: non-cut edges live inside one component by construction.
        Some((a, b))
    }

    /// Edges of the graph crossing the bipartition `(A, rest)` given as a
    /// membership mask for side A.
    pub fn crossing_edges(&self, in_a: &[bool]) -> Cut {
        Cut(self
            .edges
            .iter()
            .copied()
            .filter(|&(u, v)| in_a[u] != in_a[v])
            .collect())
    }

    /// Contracts edge `(u, v)`: merges both endpoints into the smaller
    /// identifier, drops loops and parallels, renumbers densely. Returns the
    /// new graph and the map old id -> new id.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<(Graph, Vec<usize>)> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let (keep, gone) = (u.min(v), u.max(v));
        let mut map = vec![0usize; self.n];
        let mut next = 0;
        for w in 0..self.n {
            if w == gone {
                continue;
            }
            map[w] = next;
            next += 1;
        }
        map[gone] = map[keep];
        let edges = self
            .edges
            .iter()
            .map(|&(a, b)| (map[a], map[b]))
            .filter(|&(a, b)| a != b);
        let g = Graph::new(self.n - 1, edges)?;
        Ok((g, map))
    }

    /// Lowest-index BFS spanning forest: roots are the smallest unvisited
    /// vertices, neighbors are scanned in ascending order.
    pub fn spanning_forest(&self) -> Cut {
        let mut seen = vec![false; self.n];
        let mut forest = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        forest.push((v.min(w), v.max(w)));
                        queue.push_back(w);
                    }
                }
            }
        }
        Cut::new(forest)
    }

    /// True when the graph has no cycles.
    pub fn is_forest(&self) -> bool {
        self.m() + self.components().len() == self.n
    }
}

/// Convenience constructor mirroring `Graph::new` for call sites that prefer
/// a free function.
pub fn build_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    Graph::new(n, edges.iter().copied())
}
