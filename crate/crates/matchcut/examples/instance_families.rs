// Tour of the built-in instance generators.
//
// Eleven families cover the extremal and parameterized landscape: paths
// and cycles (Fibonacci-extremal), cliques (no cuts at all), star forests
// and seven-cycle unions (exponentially many cuts with closed-form
// counts), ladders / clique-paths / gadget chains (exponentially many
// *minimal* cuts in a parameter), and three seeded random families
// (bounded vertex cover, sparse, planted clique partition).
//
// Run with:
//
// ```bash
// cargo run --example instance_families
// ```

use matchcut::generate::{generate, Family, FamilyParams};
use matchcut::{count_mc, SolutionKind};

fn main() -> matchcut::Result<()> {
    println!(
        "{:<16} {:>4} {:>4} {:>6} {:>8} {:>8}",
        "family", "n", "m", "all", "minimal", "maximal"
    );
    for family in Family::ALL {
        let params = FamilyParams {
            n: Some(8),
            k: Some(2),
            l: Some(3),
            p: Some(3),
            seed: 11,
        };
        let instance = generate(family, &params)?;
        let g = &instance.graph;
        let counts: Vec<usize> = [
            SolutionKind::All,
            SolutionKind::Minimal,
            SolutionKind::Maximal,
        ]
        .into_iter()
        .map(|kind| count_mc(g, kind))
        .collect();
        println!(
            "{family:<16} {:>4} {:>4} {:>6} {:>8} {:>8}",
            g.n(),
            g.m(),
            counts[0],
            counts[1],
            counts[2],
        );
    }
    Ok(())
}
