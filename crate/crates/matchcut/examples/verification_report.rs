// Cross-validate every kernel pipeline against the oracle.
//
// For each instance and each enumeration method, the verifier runs the
// full kernelize → enumerate → lift pipeline and compares the result with
// the exhaustive oracle: no duplicates within a lifted family, no overlap
// between families, exact coverage of the oracle's solution set, and the
// kernel-size guarantee. Output is one TSV row per run, the same format
// the `matchcut verify` subcommand prints.
//
// Run with:
//
// ```bash
// cargo run --example verification_report
// ```

use matchcut::generate::{generate, Family, FamilyParams};
use matchcut::verify::{verify_method, Method, VerifyReport};
use matchcut::SolutionKind;

fn main() -> matchcut::Result<()> {
    let mut instances = Vec::new();
    for (family, label, params) in [
        (
            Family::Cycle,
            "cycle-10",
            FamilyParams {
                n: Some(10),
                ..Default::default()
            },
        ),
        (
            Family::StarForest,
            "stars-2x3",
            FamilyParams {
                k: Some(2),
                p: Some(3),
                ..Default::default()
            },
        ),
        (
            Family::GadgetChain,
            "gadgets-2",
            FamilyParams {
                k: Some(2),
                ..Default::default()
            },
        ),
        (
            Family::RandomCliques,
            "cliques-seed7",
            FamilyParams {
                k: Some(3),
                n: Some(9),
                seed: 7,
                ..Default::default()
            },
        ),
    ] {
        instances.push((label, generate(family, &params)?));
    }

    println!("{}", VerifyReport::tsv_header());
    let mut all_pass = true;
    for (label, instance) in &instances {
        let singletons: Vec<Vec<usize>> = (0..instance.graph.n()).map(|v| vec![v]).collect();
        for method in Method::ALL {
            for kind in [
                SolutionKind::All,
                SolutionKind::Minimal,
                SolutionKind::Maximal,
            ] {
                if !method.supports(kind) {
                    continue;
                }
                // Use the planted clique partition when the generator
                // provides one; fall back to singleton blocks.
                let cert = method.needs_certificate().then(|| {
                    instance
                        .partition
                        .as_deref()
                        .unwrap_or(singletons.as_slice())
                });
                let report = verify_method(&instance.graph, method, kind, cert, label)?;
                all_pass &= report.pass;
                println!("{}", report.tsv_row());
            }
        }
    }
    assert!(all_pass, "a verification run failed");
    println!("\nall runs passed");
    Ok(())
}
