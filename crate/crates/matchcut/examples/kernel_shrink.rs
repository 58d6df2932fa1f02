// Kernelization makes huge instances tractable.
//
// The exhaustive oracle inspects every bipartition, so it is hopeless
// beyond ~22 vertices per component. A kernelization shrinks the graph to
// a core whose size depends only on a structural parameter, enumerates the
// core, and lifts each kernel cut back to the cuts of the original graph
// it represents.
//
// This example builds a double star — two adjacent hubs, 999 leaves each —
// and reduces it with four different kernels. Its 1999 minimal matching
// cuts (every single edge is one) are enumerated in milliseconds.
//
// Run with:
//
// ```bash
// cargo run --release --example kernel_shrink
// ```

use matchcut::kernel::{fen, nd, tc, vc};
use matchcut::{Graph, SolutionKind};
use std::time::Instant;

fn main() -> matchcut::Result<()> {
    let n = 2000;
    let edges = std::iter::once((0, 1))
        .chain((2..n / 2 + 1).map(|v| (0, v)))
        .chain((n / 2 + 1..n).map(|v| (1, v)));
    let g = Graph::new(n, edges)?;
    println!(
        "input: double star with {} vertices, {} edges\n",
        g.n(),
        g.m()
    );

    let kind = SolutionKind::Minimal;
    let (h_vc, _) = vc::kernelize(&g)?;
    let (h_tc, _) = tc::kernelize(&g, kind)?;
    let (h_nd, _) = nd::kernelize(&g)?;
    let (h_fen, _) = fen::kernelize(&g, kind)?;
    println!("{:<28} {:>10} {:>8}", "kernel", "vertices", "edges");
    for (name, h) in [
        ("vertex cover", &h_vc),
        ("twin cover", &h_tc),
        ("neighborhood diversity", &h_nd),
        ("feedback edge number", &h_fen),
    ] {
        println!("{name:<28} {:>10} {:>8}", h.n(), h.m());
    }

    println!("\nminimal matching cuts, enumerated through each pipeline:");
    for (name, count_fn) in [
        (
            "vertex cover",
            vc::enumerate as fn(&Graph, SolutionKind) -> _,
        ),
        ("neighborhood diversity", nd::enumerate),
        ("feedback edge number", fen::enumerate),
    ] {
        let start = Instant::now();
        let count = count_fn(&g, kind)?.count();
        let elapsed = start.elapsed();
        assert_eq!(count, g.m());
        println!("  {name:<26} {count} cuts in {elapsed:?}");
    }
    println!(
        "\nEvery edge of a double star is a minimal cut on its own, so all \
         pipelines report {} cuts.\nA bipartition oracle would need 2^{} \
         candidate splits.",
        g.m(),
        g.n() - 1
    );
    Ok(())
}
