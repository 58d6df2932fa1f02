//! Randomized properties, checked with shrinking: definitional invariants
//! of matching cuts, agreement between independent enumerators, and the
//! contract of the constrained forest-matching stream.

use matchcut::enumerate::{enum_forest_matchings, oracle_enum, spanning_tree_enum};
use matchcut::kernel::{cp, fen, mw, nd, tc, vc};
use matchcut::{Cut, Graph, MatchingConstraints, SolutionKind};
use proptest::prelude::*;
use proptest::sample::Index;
use std::collections::BTreeSet;

/// A graph on 1..=max_n vertices with an arbitrary edge subset.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let slots = n * (n - 1) / 2;
        prop::collection::vec(any::<bool>(), slots).prop_map(move |mask| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges = pairs.zip(&mask).filter(|&(_, &keep)| keep).map(|(e, _)| e);
            Graph::new(n, edges).expect("valid edges by construction")
        })
    })
}

/// A uniformly shaped random tree: vertex v attaches to a parent below it.
fn arb_tree(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<Index>(), n - 1).prop_map(move |parents| {
            let edges = parents
                .iter()
                .enumerate()
                .map(|(i, idx)| (idx.index(i + 1), i + 1));
            Graph::new(n, edges).expect("tree edges are valid")
        })
    })
}

proptest! {
    /// Every oracle solution satisfies the definition, and the canonical
    /// bipartition reproduces the cut exactly.
    #[test]
    fn oracle_cuts_satisfy_the_definition(g in arb_graph(8)) {
        for cut in oracle_enum(&g, SolutionKind::All).unwrap() {
            prop_assert!(g.is_matching_cut(&cut).unwrap());
            let (a, b) = g.cut_sides(&cut).expect("cut has sides");
            prop_assert!(!a.is_empty() && !b.is_empty());
            prop_assert_eq!(a.len() + b.len(), g.n());
            let mut in_a = vec![false; g.n()];
            for &v in &a {
                in_a[v] = true;
            }
            prop_assert_eq!(g.crossing_edges(&in_a), cut);
        }
    }

    /// A matching that the definition accepts is found by the oracle, and
    /// vice versa: `is_matching_cut` and membership in the oracle's output
    /// are the same predicate.
    #[test]
    fn definition_and_oracle_membership_agree(g in arb_graph(6), picks in prop::collection::vec(any::<Index>(), 0..4)) {
        let all: BTreeSet<Cut> = oracle_enum(&g, SolutionKind::All).unwrap().into_iter().collect();
        // Build a candidate edge set from random picks (may repeat edges;
        // `Cut::new` dedups).
        let cut = if g.m() == 0 {
            Cut::empty()
        } else {
            Cut::new(picks.iter().map(|i| g.edges()[i.index(g.m())]))
        };
        prop_assert_eq!(g.is_matching_cut(&cut).unwrap(), all.contains(&cut));
    }

    /// Writing a graph file and parsing it back reproduces the graph.
    #[test]
    fn graph_file_round_trips(g in arb_graph(12)) {
        let text = matchcut::fileio::format_graph(&g);
        let back = matchcut::fileio::parse_graph(&text).unwrap();
        prop_assert_eq!(back.n(), g.n());
        prop_assert_eq!(back.edges(), g.edges());
    }

    /// The spanning-forest enumerator and the oracle produce identical
    /// solution sets for every kind.
    #[test]
    fn spanning_tree_agrees_with_oracle(g in arb_graph(7)) {
        for kind in [SolutionKind::All, SolutionKind::Minimal, SolutionKind::Maximal] {
            let want: BTreeSet<Cut> = oracle_enum(&g, kind).unwrap().into_iter().collect();
            let got: BTreeSet<Cut> = spanning_tree_enum(&g, kind).unwrap().collect();
            prop_assert_eq!(got, want, "kind {:?}", kind);
        }
    }

    /// Minimal and maximal families are antichains that bracket every cut.
    #[test]
    fn extreme_families_are_antichains(g in arb_graph(7)) {
        let all = oracle_enum(&g, SolutionKind::All).unwrap();
        for kind in [SolutionKind::Minimal, SolutionKind::Maximal] {
            let family = oracle_enum(&g, kind).unwrap();
            for x in &family {
                for y in &family {
                    if x != y {
                        let x_edges: BTreeSet<_> = x.iter().collect();
                        let y_edges: BTreeSet<_> = y.iter().collect();
                        prop_assert!(!x_edges.is_subset(&y_edges), "{:?} nested in family", kind);
                    }
                }
            }
            for cut in &all {
                let edges: BTreeSet<_> = cut.iter().collect();
                let bracketed = family.iter().any(|f| {
                    let f_edges: BTreeSet<_> = f.iter().collect();
                    match kind {
                        SolutionKind::Minimal => f_edges.is_subset(&edges),
                        _ => f_edges.is_superset(&edges),
                    }
                });
                prop_assert!(bracketed);
            }
            prop_assert!(family.iter().all(|f| all.contains(f)));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    /// The constrained forest-matching stream yields exactly the matchings
    /// a brute-force subset scan accepts: no duplicates, no violations, no
    /// omissions.
    #[test]
    fn forest_matchings_match_brute_force(
        tree in arb_tree(11),
        forced_pick in any::<Index>(),
        forbidden_pick in any::<Index>(),
        coupled_picks in prop::collection::vec(any::<Index>(), 2),
        parity in prop_oneof![Just(None), Just(Some(0u8)), Just(Some(1u8))],
        use_forced in any::<bool>(),
        use_forbidden in any::<bool>(),
        require_nonempty in any::<bool>(),
    ) {
        let m = tree.m();
        let edge = |i: &Index| tree.edges()[i.index(m)];
        let forced = if use_forced { Cut::single(edge(&forced_pick).0, edge(&forced_pick).1) } else { Cut::empty() };
        let mut forbidden = if use_forbidden { Cut::single(edge(&forbidden_pick).0, edge(&forbidden_pick).1) } else { Cut::empty() };
        // Contradictory constraints are rejected up front; keep them apart.
        if forced.iter().any(|e| forbidden.contains(e.0, e.1)) {
            forbidden = Cut::empty();
        }
        let coupled = Cut::new(
            coupled_picks
                .iter()
                .map(|i| edge(i))
                .filter(|&(u, v)| !forbidden.contains(u, v) && !forced.contains(u, v)),
        );
        let constraints = MatchingConstraints {
            forced: forced.clone(),
            forbidden: forbidden.clone(),
            coupled: coupled.clone(),
            parity,
            require_nonempty,
        };

        let streamed: Vec<Cut> = enum_forest_matchings(&tree, &constraints).unwrap().collect();
        let as_set: BTreeSet<Cut> = streamed.iter().cloned().collect();
        prop_assert_eq!(streamed.len(), as_set.len(), "stream repeated a matching");

        // Brute force over all edge subsets.
        let edges = tree.edges();
        let mut expected = BTreeSet::new();
        for mask in 0u32..1 << m {
            let subset: Vec<(usize, usize)> =
                (0..m).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
            let cut = Cut::new(subset.iter().copied());
            let is_matching = tree.is_matching(&cut).unwrap();
            let has_forced = forced.iter().all(|e| cut.contains(e.0, e.1));
            let avoids = forbidden.iter().all(|e| !cut.contains(e.0, e.1));
            let coupled_in = coupled.iter().filter(|e| cut.contains(e.0, e.1)).count();
            let coupled_ok = coupled_in == 0 || coupled_in == coupled.len();
            let parity_ok = parity.map_or(true, |p| cut.len() % 2 == p as usize);
            let nonempty_ok = !require_nonempty || !cut.is_empty();
            if is_matching && has_forced && avoids && coupled_ok && parity_ok && nonempty_ok {
                expected.insert(cut);
            }
        }
        prop_assert_eq!(as_set, expected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    /// Every kernelization pipeline reproduces the oracle's solution set on
    /// arbitrary graphs, for every kind it supports.
    #[test]
    fn kernel_pipelines_agree_with_oracle(g in arb_graph(8)) {
        let singletons: Vec<Vec<usize>> = (0..g.n()).map(|v| vec![v]).collect();
        for kind in [SolutionKind::All, SolutionKind::Minimal, SolutionKind::Maximal] {
            let want: BTreeSet<Cut> = oracle_enum(&g, kind).unwrap().into_iter().collect();
            let mut got: Vec<(&str, BTreeSet<Cut>)> = vec![
                ("vc", vc::enumerate(&g, kind).unwrap().collect()),
                ("tc", tc::enumerate(&g, kind).unwrap().collect()),
                ("nd", nd::enumerate(&g, kind).unwrap().collect()),
                ("cp", cp::enumerate(&g, kind, &singletons).unwrap().collect()),
            ];
            if kind != SolutionKind::Maximal {
                got.push(("fen", fen::enumerate(&g, kind).unwrap().collect()));
            }
            if kind == SolutionKind::Minimal {
                got.push(("mw", mw::enumerate(&g, kind, None).unwrap().collect()));
            }
            for (name, cuts) in got {
                prop_assert_eq!(&cuts, &want, "{} disagrees on {:?}", name, kind);
            }
        }
    }
}
