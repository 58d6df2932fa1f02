// The matching cuts of a path obey a Fibonacci law.
//
// The path on `n` vertices has exactly `F(n+1) - 1` matching cuts, where
// `F` is the Fibonacci sequence with `F(1) = F(2) = 1` — and no graph on
// `n` vertices has more. This example counts the cuts of each path with
// the spanning-forest enumerator and checks them against the closed form.
//
// Run with:
//
// ```bash
// cargo run --release --example fibonacci_paths
// ```

use matchcut::{fib, spanning_tree_enum, Graph, SolutionKind};

fn main() -> matchcut::Result<()> {
    println!("{:>4} {:>12} {:>12}", "n", "cuts", "F(n+1)-1");
    for n in 2..=22u64 {
        let path = Graph::new(n as usize, (1..n as usize).map(|i| (i - 1, i)))?;
        let count = spanning_tree_enum(&path, SolutionKind::All)?.count() as u64;
        let closed_form = fib(n + 1)? - 1;
        assert_eq!(count, closed_form);
        println!("{n:>4} {count:>12} {closed_form:>12}");
    }
    println!("\nEvery count matches the closed form.");
    Ok(())
}
