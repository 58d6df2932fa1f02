//! Acceptance gate: one test per criterion, each printing a single
//! pass/fail line (visible with `--nocapture`). Every check runs against
//! independently derived ground truth (closed-form counts, the exhaustive
//! oracle, or structural invariants).

use matchcut::enumerate::{enum_forest_matchings, fib, oracle_enum, spanning_tree_enum};
use matchcut::generate::{clique_paths, gadget_chain, path_ladder, random_sparse, star_forest};
use matchcut::kernel::vc;
use matchcut::verify::{standard_corpus, verify_method, Method};
use matchcut::{Cut, Graph, MatchingConstraints, SolutionKind};
use std::collections::BTreeSet;
use std::time::{Duration, Instant};

fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

fn cycle(n: usize) -> Graph {
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

fn finish(criterion: &str, start: Instant, budget: Duration) {
    let elapsed = start.elapsed();
    assert!(
        elapsed < budget,
        "{criterion} exceeded its {budget:?} budget: took {elapsed:?}"
    );
    println!("acceptance {criterion}: PASS ({elapsed:?})");
}

#[test]
fn acceptance_01_path_counts_follow_fibonacci() {
    let start = Instant::now();
    for n in 2..=25u64 {
        let g = path(n as usize);
        let count = spanning_tree_enum(&g, SolutionKind::All).unwrap().count() as u64;
        assert_eq!(count, fib(n + 1).unwrap() - 1, "path on {n} vertices");
    }
    finish(
        "01 path counts follow the Fibonacci law",
        start,
        Duration::from_secs(10),
    );
}

#[test]
fn acceptance_02_six_vertex_maximum_is_attained_only_by_the_path() {
    let start = Instant::now();
    let pairs: Vec<(usize, usize)> = (0..6)
        .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
        .collect();
    assert_eq!(pairs.len(), 15);
    let mut max_seen = 0;
    for mask in 0u32..(1 << 15) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::new(6, edges).unwrap();
        let count = oracle_enum(&g, SolutionKind::All).unwrap().len();
        max_seen = max_seen.max(count);
        assert!(count <= 12, "six-vertex graph exceeded 12 cuts");
        if count == 12 {
            // Only the 6-vertex path may attain the bound: a connected
            // tree whose degrees never exceed two.
            assert_eq!(g.m(), 5);
            assert!(g.is_connected() && g.is_forest());
            assert!((0..6).all(|v| g.degree(v) <= 2));
        }
    }
    assert_eq!(max_seen, 12);
    finish(
        "02 six-vertex maximum 12 only on the path",
        start,
        Duration::from_secs(60),
    );
}

#[test]
fn acceptance_03_seven_cycles_maximal_counts() {
    let start = Instant::now();
    let one = cycle(7);
    assert_eq!(oracle_enum(&one, SolutionKind::Maximal).unwrap().len(), 14);
    let two = Graph::new(
        14,
        (0..2).flat_map(|c| (0..7).map(move |i| (7 * c + i, 7 * c + (i + 1) % 7))),
    )
    .unwrap();
    assert_eq!(
        spanning_tree_enum(&two, SolutionKind::Maximal)
            .unwrap()
            .count(),
        196
    );
    finish(
        "03 seven-cycle maximal counts 14 and 196",
        start,
        Duration::from_secs(5),
    );
}

#[test]
fn acceptance_04_two_cliques_with_paths_have_many_minimal_cuts() {
    let start = Instant::now();
    let g = clique_paths(2).unwrap();
    assert_eq!(g.n(), 10);
    assert!(oracle_enum(&g, SolutionKind::Minimal).unwrap().len() >= 16);
    finish(
        "04 clique-paths instance has at least 16 minimal cuts",
        start,
        Duration::from_secs(5),
    );
}

#[test]
fn acceptance_05_gadget_chain_minimal_cuts() {
    let start = Instant::now();
    let g = gadget_chain(3).unwrap();
    assert!(oracle_enum(&g, SolutionKind::Minimal).unwrap().len() >= 8);
    finish(
        "05 three-gadget chain has at least 8 minimal cuts",
        start,
        Duration::from_secs(5),
    );
}

#[test]
fn acceptance_06_star_forest_exact_counts() {
    let start = Instant::now();
    let g = star_forest(2, 3).unwrap();
    assert_eq!(oracle_enum(&g, SolutionKind::All).unwrap().len(), 16);
    assert_eq!(oracle_enum(&g, SolutionKind::Maximal).unwrap().len(), 9);
    finish(
        "06 two three-leaf stars: 16 cuts, 9 maximal",
        start,
        Duration::from_secs(1),
    );
}

#[test]
fn acceptance_07_path_ladder_minimal_cuts() {
    let start = Instant::now();
    let g = path_ladder(2, 4).unwrap();
    assert!(oracle_enum(&g, SolutionKind::Minimal).unwrap().len() >= 16);
    finish(
        "07 two-rung ladder has at least 16 minimal cuts",
        start,
        Duration::from_secs(5),
    );
}

#[test]
fn acceptance_08_corpus_verification_passes_for_every_method() {
    let start = Instant::now();
    let corpus = standard_corpus();
    let kinds = [
        SolutionKind::All,
        SolutionKind::Minimal,
        SolutionKind::Maximal,
    ];
    let mut per_method = std::collections::HashMap::new();
    let mut failures = Vec::new();
    for inst in &corpus {
        for method in Method::ALL {
            *per_method.entry(method).or_insert(0usize) += 1;
            for kind in kinds {
                if !method.supports(kind) {
                    continue;
                }
                let report = verify_method(
                    &inst.graph,
                    method,
                    kind,
                    inst.certificate(method),
                    &inst.label,
                )
                .unwrap();
                if !report.pass {
                    failures.push(report.tsv_row());
                }
            }
        }
    }
    assert!(
        failures.is_empty(),
        "failing runs:\n{}",
        failures.join("\n")
    );
    for method in Method::ALL {
        assert!(
            per_method[&method] >= 200,
            "method {method} covered by only {} instances",
            per_method[&method]
        );
    }
    finish(
        "08 standard corpus verifies on every method and kind",
        start,
        Duration::from_secs(600),
    );
}

#[test]
fn acceptance_09_bounded_enumeration_matches_oracle_on_kernels() {
    let start = Instant::now();
    for inst in standard_corpus() {
        let (h, ctx) = vc::kernelize(&inst.graph).unwrap();
        let mut got = vc::enum_mc_bounded(&h, &ctx.cover_h).unwrap();
        got.sort();
        let want = oracle_enum(&h, SolutionKind::All).unwrap();
        assert_eq!(got, want, "kernel of {}", inst.label);
    }
    finish(
        "09 cover-guided enumeration matches the oracle on all kernels",
        start,
        Duration::from_secs(600),
    );
}

#[test]
fn acceptance_10_fibonacci_product_inequality() {
    let start = Instant::now();
    for p in 2..=20u64 {
        for q in 2..=20u64 {
            let product = fib(p).unwrap() * fib(q).unwrap();
            let bound = fib(p + q - 1).unwrap() - 1;
            assert!(product <= bound, "p={p} q={q}");
            let strict = product < bound;
            assert_eq!(strict, p >= 4 || q >= 4, "strictness at p={p} q={q}");
        }
    }
    finish(
        "10 Fibonacci product inequality with exact strictness",
        start,
        Duration::from_secs(5),
    );
}

#[test]
fn acceptance_11_tree_cuts_are_exactly_nonempty_matchings() {
    let start = Instant::now();
    for seed in 0..500u64 {
        let n = 2 + (seed as usize) % 11;
        let tree = random_sparse(n, 0, seed).unwrap();
        assert!(tree.is_connected() && tree.is_forest());
        let cuts: BTreeSet<Cut> = oracle_enum(&tree, SolutionKind::All)
            .unwrap()
            .into_iter()
            .collect();
        let matchings: BTreeSet<Cut> =
            enum_forest_matchings(&tree, &MatchingConstraints::nonempty())
                .unwrap()
                .collect();
        assert_eq!(cuts, matchings, "tree seed {seed}");
    }
    finish(
        "11 tree cuts coincide with nonempty matchings on 500 random trees",
        start,
        Duration::from_secs(60),
    );
}
