//! Cross-validation harness: runs an enumeration method next to the
//! exhaustive oracle, checks that lifted families are duplicate-free,
//! pairwise disjoint, and cover exactly the requested solution set, checks
//! kernel size bounds, and renders the outcome as one TSV row per run. Also
//! provides the standard instance corpus and the extremal-count check.

use crate::enumerate::{
    count_mc, fib, filter_extreme, oracle_enum, spanning_tree_enum, CutStream, SolutionKind,
};
use crate::error::{Error, Result};
use crate::generate::{
    clique_paths, complete, cycle, gadget_chain, path, path_ladder, random_bounded_cover,
    random_clique_partition, random_sparse, seven_cycles, star_forest,
};
use crate::graph::{Cut, Graph, VertexSet};
use crate::kernel::{cp, fen, mw, nd, tc, vc};
use crate::params::{feedback_edge_set, modular_partition, twin_classes, vc_2approx, TwinMode};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

/// Enumeration strategies exposed by the library.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Exhaustive per-component bipartition scan.
    Oracle,
    /// Spanning-forest matching enumeration with polynomial delay.
    SpanningTree,
    /// Vertex-cover kernel pipeline.
    Vc,
    /// Twin-cover kernel pipeline.
    Tc,
    /// Neighborhood-diversity kernel pipeline.
    Nd,
    /// Modular-width kernel pipeline (minimal cuts only).
    Mw,
    /// Feedback-edge-number kernel pipeline (all and minimal cuts).
    Fen,
    /// Clique-partition kernel pipeline (certificate required).
    Cp,
}

impl Method {
    pub const ALL: [Method; 8] = [
        Method::Oracle,
        Method::SpanningTree,
        Method::Vc,
        Method::Tc,
        Method::Nd,
        Method::Mw,
        Method::Fen,
        Method::Cp,
    ];

    fn name(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::SpanningTree => "spanning-tree",
            Method::Vc => "vc",
            Method::Tc => "tc",
            Method::Nd => "nd",
            Method::Mw => "mw",
            Method::Fen => "fen",
            Method::Cp => "cp",
        }
    }

    /// Which solution kinds the method can enumerate.
    pub fn supports(self, kind: SolutionKind) -> bool {
        match self {
            Method::Mw => kind == SolutionKind::Minimal,
            Method::Fen => kind != SolutionKind::Maximal,
            _ => true,
        }
    }

    /// Whether the method requires a clique-partition certificate.
    pub fn needs_certificate(self) -> bool {
        self == Method::Cp
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Method> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse {
                line: 0,
                msg: format!("unknown method {s:?}"),
            })
    }
}

/// Enumerates matching cuts of `g` with the chosen method. `certificate` is
/// the modular partition for `mw` (optional) or the clique partition for
/// `cp` (required).
pub fn enumerate_with(
    g: &Graph,
    method: Method,
    kind: SolutionKind,
    certificate: Option<&[VertexSet]>,
) -> Result<CutStream> {
    match method {
        Method::Oracle => Ok(Box::new(oracle_enum(g, kind)?.into_iter())),
        Method::SpanningTree => spanning_tree_enum(g, kind),
        Method::Vc => vc::enumerate(g, kind),
        Method::Tc => tc::enumerate(g, kind),
        Method::Nd => nd::enumerate(g, kind),
        Method::Mw => mw::enumerate(g, kind, certificate),
        Method::Fen => fen::enumerate(g, kind),
        Method::Cp => {
            let part = certificate.ok_or(Error::MissingCertificate {
                method,
                what: "clique partition",
            })?;
            cp::enumerate(g, kind, part)
        }
    }
}

/// Outcome of one verification run.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub instance: String,
    pub method: Method,
    pub kind: SolutionKind,
    pub oracle_count: usize,
    pub lifted_count: usize,
    /// Repeated cuts inside a single lifted family.
    pub duplicates: usize,
    /// Cuts produced by two different kernel solutions.
    pub overlaps: usize,
    /// Kernel solutions whose lifted family came out empty (each kernel
    /// solution must represent at least one original solution).
    pub empty_families: usize,
    /// Size of the symmetric difference against the oracle.
    pub coverage_misses: usize,
    pub size_bound_ok: bool,
    pub pass: bool,
}

impl VerifyReport {
    pub fn tsv_header() -> &'static str {
        "instance\tmethod\tkind\toracle\tlifted\tduplicates\toverlaps\tempty\tmisses\tsize_bound\tstatus"
    }

    pub fn tsv_row(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.instance,
            self.method,
            self.kind,
            self.oracle_count,
            self.lifted_count,
            self.duplicates,
            self.overlaps,
            self.empty_families,
            self.coverage_misses,
            if self.size_bound_ok { "ok" } else { "exceeded" },
            if self.pass { "pass" } else { "fail" },
        )
    }
}

struct PipelineRun {
    families: Vec<Vec<Cut>>,
    size_bound_ok: bool,
}

fn kernel_cuts(h: &Graph, cover: &[usize], kind: SolutionKind) -> Result<Vec<Cut>> {
    Ok(filter_extreme(&vc::enum_mc_bounded(h, cover)?, kind))
}

fn run_pipeline(
    g: &Graph,
    method: Method,
    kind: SolutionKind,
    certificate: Option<&[VertexSet]>,
) -> Result<PipelineRun> {
    // Direct enumerators act as their own bijective kernel: one singleton
    // family per solution.
    let whole = |cuts: Vec<Cut>| PipelineRun {
        families: cuts.into_iter().map(|c| vec![c]).collect(),
        size_bound_ok: true,
    };
    Ok(match method {
        Method::Oracle => whole(oracle_enum(g, kind)?),
        Method::SpanningTree => whole(spanning_tree_enum(g, kind)?.collect()),
        Method::Vc => {
            let (h, ctx) = vc::kernelize(g)?;
            let k = vc_2approx(g).len() / 2;
            let families = kernel_cuts(&h, &ctx.cover_h, kind)?
                .into_iter()
                .map(|m| vc::lift(&ctx, &m, kind).collect())
                .collect();
            PipelineRun {
                families,
                size_bound_ok: h.n() <= (6 * k * k + k + 1).max(2),
            }
        }
        Method::Tc => {
            let (h, ctx) = tc::kernelize(g, kind)?;
            let k = ctx.cover_size() / 2;
            let families = kernel_cuts(&h, ctx.kernel_cover(), kind)?
                .into_iter()
                .map(|m| tc::lift(&ctx, &m, kind).collect())
                .collect();
            PipelineRun {
                families,
                size_bound_ok: h.n() <= (6 * k * k + k + 1).max(2),
            }
        }
        Method::Nd => {
            let (h, ctx) = nd::kernelize(g)?;
            let k = twin_classes(g, TwinMode::AnyTwin).len();
            let families = kernel_cuts(&h, &vc_2approx(&h), kind)?
                .into_iter()
                .map(|m| nd::lift(&ctx, &m, kind).collect())
                .collect();
            PipelineRun {
                families,
                size_bound_ok: h.n() <= (3 * k).max(2),
            }
        }
        Method::Mw => {
            let (h, ctx) = mw::kernelize(g, certificate)?;
            let r = modular_partition(g, certificate)
                .map(|p| p.len())
                .unwrap_or(2);
            let families = kernel_cuts(&h, &vc_2approx(&h), kind)?
                .into_iter()
                .map(|m| mw::lift(&ctx, &m).collect())
                .collect();
            PipelineRun {
                families,
                size_bound_ok: h.n() <= (6 * r).max(2),
            }
        }
        Method::Fen => {
            let (h, ctx) = fen::kernelize(g, kind)?;
            let k = feedback_edge_set(g).len();
            let bound = match kind {
                SolutionKind::Minimal => 10 * k,
                _ => 20 * k + 1,
            };
            let families = kernel_cuts(&h, &vc_2approx(&h), kind)?
                .into_iter()
                .map(|m| fen::lift(&ctx, &m).collect())
                .collect();
            PipelineRun {
                families,
                size_bound_ok: h.n() <= bound.max(2),
            }
        }
        Method::Cp => {
            let part = certificate.ok_or(Error::MissingCertificate {
                method,
                what: "clique partition",
            })?;
            let (h, ctx) = cp::kernelize(g, part)?;
            let k = part.len().max(1);
            let families = kernel_cuts(&h, &vc_2approx(&h), kind)?
                .into_iter()
                .map(|m| vec![cp::lift(&ctx, &m)])
                .collect();
            PipelineRun {
                families,
                size_bound_ok: h.n() <= 4 * k * (3 * k * k + 1).saturating_sub(2 * k),
            }
        }
    })
}

/// Runs `method` on `g` and validates the outcome against the oracle.
pub fn verify_method(
    g: &Graph,
    method: Method,
    kind: SolutionKind,
    certificate: Option<&[VertexSet]>,
    label: &str,
) -> Result<VerifyReport> {
    let oracle: BTreeSet<Cut> = oracle_enum(g, kind)?.into_iter().collect();
    let run = run_pipeline(g, method, kind, certificate)?;
    let mut seen: BTreeSet<Cut> = BTreeSet::new();
    let mut duplicates = 0;
    let mut overlaps = 0;
    let mut empty_families = 0;
    let mut lifted_count = 0;
    for family in &run.families {
        if family.is_empty() {
            empty_families += 1;
        }
        let mut family_set: BTreeSet<&Cut> = BTreeSet::new();
        for cut in family {
            lifted_count += 1;
            if !family_set.insert(cut) {
                duplicates += 1;
            }
        }
        for &cut in &family_set {
            if !seen.insert(cut.clone()) {
                overlaps += 1;
            }
        }
    }
    let coverage_misses = oracle.symmetric_difference(&seen).count();
    let pass = duplicates == 0
        && overlaps == 0
        && empty_families == 0
        && coverage_misses == 0
        && run.size_bound_ok;
    Ok(VerifyReport {
        instance: label.to_string(),
        method,
        kind,
        oracle_count: oracle.len(),
        lifted_count,
        duplicates,
        overlaps,
        empty_families,
        coverage_misses,
        size_bound_ok: run.size_bound_ok,
        pass,
    })
}

/// Checks the global extremal bound: a graph on `n` vertices has fewer
/// matching cuts than the `(n+1)`-st Fibonacci number, with equality only on
/// paths (for `n >= 5`) or, below that, on paths and unions of two cliques
/// with at most two vertices each.
pub fn check_extremal(g: &Graph) -> Result<bool> {
    let n = g.n();
    if n == 0 {
        return Ok(true);
    }
    let total = count_mc(g, SolutionKind::All);
    let bound = (fib(n as u64 + 1)? - 1) as usize;
    if total > bound {
        return Ok(false);
    }
    if total == bound {
        let is_path = g.is_connected() && g.is_forest() && (0..n).all(|v| g.degree(v) <= 2);
        if n >= 5 {
            return Ok(is_path);
        }
        let comps = g.components();
        let two_cliques = comps.len() == 2
            && comps.iter().all(|c| c.len() <= 2)
            && g.m() == comps.iter().filter(|c| c.len() == 2).count();
        return Ok(is_path || two_cliques);
    }
    Ok(true)
}

/// One corpus member: a graph with optional certificates.
#[derive(Debug, Clone)]
pub struct CorpusInstance {
    pub label: String,
    pub graph: Graph,
    /// Clique-partition certificate (always present; planted or singletons).
    pub cliques: Vec<VertexSet>,
    /// Supplied modular partition, when the instance was built by module
    /// substitution.
    pub modules: Option<Vec<VertexSet>>,
}

impl CorpusInstance {
    fn new(label: String, graph: Graph) -> CorpusInstance {
        let cliques = (0..graph.n()).map(|v| vec![v]).collect();
        CorpusInstance {
            label,
            graph,
            cliques,
            modules: None,
        }
    }

    /// The certificate relevant for `method`, if any.
    pub fn certificate(&self, method: Method) -> Option<&[VertexSet]> {
        match method {
            Method::Cp => Some(&self.cliques),
            Method::Mw => self.modules.as_deref(),
            _ => None,
        }
    }
}

/// Blows each vertex of `base` into a class of `sizes[v]` mutual twins
/// (true twins where marked), joining classes completely along base edges.
fn twin_expansion(base: &Graph, sizes: &[usize], true_twin: &[bool]) -> Graph {
    let mut start = vec![0; base.n()];
    let mut n = 0;
    for v in 0..base.n() {
        start[v] = n;
        n += sizes[v];
    }
    let mut edges = Vec::new();
    for v in 0..base.n() {
        if true_twin[v] {
            for i in 0..sizes[v] {
                for j in i + 1..sizes[v] {
                    edges.push((start[v] + i, start[v] + j));
                }
            }
        }
    }
    for &(u, v) in base.edges() {
        for i in 0..sizes[u] {
            for j in 0..sizes[v] {
                edges.push((start[u] + i, start[v] + j));
            }
        }
    }
    Graph::new(n, edges).expect("expansion is well-formed")
}

/// Substitutes a random small graph into each vertex of `outer`; returns the
/// result together with the module partition.
fn substitution(outer: &Graph, rng: &mut ChaCha8Rng) -> (Graph, Vec<VertexSet>) {
    let mut modules: Vec<VertexSet> = Vec::new();
    let mut n = 0;
    for _ in 0..outer.n() {
        let size = rng.gen_range(1..=2);
        modules.push((n..n + size).collect());
        n += size;
    }
    let mut edges = Vec::new();
    for (block, module) in modules.iter().enumerate() {
        let _ = block;
        for (i, &u) in module.iter().enumerate() {
            for &v in &module[i + 1..] {
                if rng.gen_bool(0.5) {
                    edges.push((u, v));
                }
            }
        }
    }
    for &(a, b) in outer.edges() {
        for &u in &modules[a] {
            for &v in &modules[b] {
                edges.push((u, v));
            }
        }
    }
    (
        Graph::new(n, edges).expect("substitution is well-formed"),
        modules,
    )
}

/// Deterministic corpus of small instances (component sizes stay within the
/// oracle guard) covering every method: structured families, seeded random
/// families per parameter, twin expansions, and module substitutions.
pub fn standard_corpus() -> Vec<CorpusInstance> {
    let mut out: Vec<CorpusInstance> = Vec::new();

    for n in 2..=14 {
        out.push(CorpusInstance::new(format!("path-{n}"), path(n).unwrap()));
    }
    for n in 3..=14 {
        out.push(CorpusInstance::new(format!("cycle-{n}"), cycle(n).unwrap()));
    }
    for n in 2..=6 {
        out.push(CorpusInstance::new(
            format!("complete-{n}"),
            complete(n).unwrap(),
        ));
    }
    for k in 1..=3 {
        for p in 1..=3 {
            out.push(CorpusInstance::new(
                format!("stars-{k}x{p}"),
                star_forest(k, p).unwrap(),
            ));
        }
    }
    out.push(CorpusInstance::new(
        "seven-cycles-1".into(),
        seven_cycles(1).unwrap(),
    ));
    out.push(CorpusInstance::new(
        "seven-cycles-2".into(),
        seven_cycles(2).unwrap(),
    ));
    out.push(CorpusInstance::new(
        "clique-paths-1".into(),
        clique_paths(1).unwrap(),
    ));
    out.push(CorpusInstance::new(
        "clique-paths-2".into(),
        clique_paths(2).unwrap(),
    ));
    for l in 2..=4 {
        out.push(CorpusInstance::new(
            format!("ladder-2x{l}"),
            path_ladder(2, l).unwrap(),
        ));
    }
    for k in 1..=3 {
        out.push(CorpusInstance::new(
            format!("gadgets-{k}"),
            gadget_chain(k).unwrap(),
        ));
    }

    for seed in 0..60u64 {
        let s = seed as usize;
        let n = 2 + (s * 5) % 13;
        let k = s % 4;
        out.push(CorpusInstance::new(
            format!("sparse-{seed}-n{n}-k{k}"),
            random_sparse(n, k, seed).unwrap(),
        ));
    }
    for seed in 0..60u64 {
        let s = seed as usize;
        let n = 2 + (s * 7 + 3) % 13;
        let k = 1 + s % 5;
        out.push(CorpusInstance::new(
            format!("cover-{seed}-n{n}-k{k}"),
            random_bounded_cover(n, k, seed).unwrap(),
        ));
    }
    for seed in 0..60u64 {
        let s = seed as usize;
        let n = 2 + (s * 3 + 1) % 13;
        let k = 1 + s % 4;
        let (graph, cliques) = random_clique_partition(k, n, seed).unwrap();
        let mut inst = CorpusInstance::new(format!("cliques-{seed}-n{n}-k{k}"), graph);
        inst.cliques = cliques;
        out.push(inst);
    }
    for seed in 0..30u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(1_000 + seed);
        let base_n = 3 + (seed as usize) % 2;
        let base = random_sparse(base_n, 1, 1_000 + seed).unwrap();
        let sizes: Vec<usize> = (0..base_n).map(|_| rng.gen_range(1..=3)).collect();
        let true_twin: Vec<bool> = (0..base_n).map(|_| rng.gen_bool(0.5)).collect();
        out.push(CorpusInstance::new(
            format!("twins-{seed}"),
            twin_expansion(&base, &sizes, &true_twin),
        ));
    }
    for seed in 0..30u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(2_000 + seed);
        let outer_n = 3 + (seed as usize) % 3;
        let outer = random_sparse(outer_n, 1, 2_000 + seed).unwrap();
        let (graph, modules) = substitution(&outer, &mut rng);
        let mut inst = CorpusInstance::new(format!("modules-{seed}"), graph);
        inst.modules = Some(modules);
        out.push(inst);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;

    #[test]
    fn method_names_round_trip() {
        for m in Method::ALL {
            assert_eq!(m.to_string().parse::<Method>().unwrap(), m);
        }
        assert!("bogus".parse::<Method>().is_err());
    }

    #[test]
    fn kind_support_matrix() {
        use SolutionKind::*;
        assert!(Method::Mw.supports(Minimal) && !Method::Mw.supports(All));
        assert!(Method::Fen.supports(All) && !Method::Fen.supports(Maximal));
        for m in [
            Method::Oracle,
            Method::SpanningTree,
            Method::Vc,
            Method::Tc,
            Method::Nd,
            Method::Cp,
        ] {
            assert!(m.supports(All) && m.supports(Minimal) && m.supports(Maximal));
        }
    }

    #[test]
    fn verify_passes_on_a_small_instance() {
        let g = cycle(6).unwrap();
        for method in [
            Method::SpanningTree,
            Method::Vc,
            Method::Tc,
            Method::Nd,
            Method::Fen,
        ] {
            for kind in [
                SolutionKind::All,
                SolutionKind::Minimal,
                SolutionKind::Maximal,
            ] {
                if !method.supports(kind) {
                    continue;
                }
                let report = verify_method(&g, method, kind, None, "c6").unwrap();
                assert!(report.pass, "{}", report.tsv_row());
            }
        }
        let singletons: Vec<VertexSet> = (0..6).map(|v| vec![v]).collect();
        let report =
            verify_method(&g, Method::Cp, SolutionKind::All, Some(&singletons), "c6").unwrap();
        assert!(report.pass, "{}", report.tsv_row());
        let report = verify_method(&g, Method::Mw, SolutionKind::Minimal, None, "c6").unwrap();
        assert!(report.pass, "{}", report.tsv_row());
    }

    #[test]
    fn cp_requires_certificate() {
        let g = cycle(4).unwrap();
        assert!(matches!(
            enumerate_with(&g, Method::Cp, SolutionKind::All, None),
            Err(Error::MissingCertificate { .. })
        ));
    }

    #[test]
    fn tsv_shape() {
        let g = path(4).unwrap();
        let report =
            verify_method(&g, Method::SpanningTree, SolutionKind::All, None, "p4").unwrap();
        assert_eq!(
            VerifyReport::tsv_header().split('\t').count(),
            report.tsv_row().split('\t').count()
        );
        assert!(report.tsv_row().ends_with("pass"));
    }

    #[test]
    fn extremal_check_accepts_paths_and_rejects_fakes() {
        for n in 2..=10 {
            assert!(check_extremal(&path(n).unwrap()).unwrap());
        }
        assert!(check_extremal(&cycle(6).unwrap()).unwrap());
        // Two disjoint edges attain the bound at n = 4 legitimately.
        let two_k2 = build_graph(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(check_extremal(&two_k2).unwrap());
    }

    #[test]
    fn corpus_is_large_and_deterministic() {
        let corpus = standard_corpus();
        assert!(corpus.len() >= 200, "corpus has {} instances", corpus.len());
        assert!(corpus
            .iter()
            .all(|i| i.graph.components().iter().all(|c| c.len() <= 14)));
        let again = standard_corpus();
        assert_eq!(corpus.len(), again.len());
        for (a, b) in corpus.iter().zip(&again) {
            assert_eq!(a.label, b.label);
            assert_eq!(a.graph.edges(), b.graph.edges());
        }
        let with_modules = corpus.iter().filter(|i| i.modules.is_some()).count();
        assert_eq!(with_modules, 30);
    }
}
