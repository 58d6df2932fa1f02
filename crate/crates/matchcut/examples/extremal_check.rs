// No graph beats the Fibonacci bound — and only paths attain it.
//
// `check_extremal` counts a graph's matching cuts and tests the count
// against the universal bound F(n+1) - 1. It reports a violation if the
// bound is exceeded (impossible — so a failure would reveal a bug), and
// also if the bound is *attained* by a graph that is not one of the known
// extremal configurations. This example sweeps random graphs and the known
// attainers.
//
// Run with:
//
// ```bash
// cargo run --release --example extremal_check
// ```

use matchcut::generate::{path, random_sparse};
use matchcut::verify::check_extremal;
use matchcut::{count_mc, fib, SolutionKind};

fn main() -> matchcut::Result<()> {
    // The path attains the bound at every order.
    for n in 2..=18 {
        let p = path(n)?;
        assert!(check_extremal(&p)?);
        assert_eq!(
            count_mc(&p, SolutionKind::All) as u64,
            fib(n as u64 + 1)? - 1
        );
    }
    println!("paths on 2..=18 vertices attain F(n+1) - 1 exactly");

    // Random sparse graphs stay strictly below the bound (or are paths).
    let mut checked = 0;
    let mut strictly_below = 0;
    for seed in 0..300 {
        let n = 2 + (seed as usize) % 12;
        let g = random_sparse(n, seed as usize % 3, seed)?;
        assert!(check_extremal(&g)?, "extremal violation at seed {seed}");
        checked += 1;
        if (count_mc(&g, SolutionKind::All) as u64) < fib(n as u64 + 1)? - 1 {
            strictly_below += 1;
        }
    }
    println!(
        "{checked} random graphs checked: {strictly_below} strictly below the bound, \
         {} attained it (and were paths)",
        checked - strictly_below
    );
    Ok(())
}
