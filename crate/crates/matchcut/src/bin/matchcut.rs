//! Thin command-line front end over the `matchcut` library.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a mismatch, 2 on usage
//! or input errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use matchcut::fileio::{format_cut, format_graph, format_partition, parse_graph, parse_partition};
use matchcut::generate::{generate, Family, FamilyParams};
use matchcut::kernel::{cp, fen, mw, nd, tc, vc};
use matchcut::params::{feedback_edge_set, twin_classes, vc_2approx, TwinMode};
use matchcut::verify::{enumerate_with, verify_method, Method};
use matchcut::{Error, Graph, Result, SolutionKind, VertexSet};

#[derive(Parser)]
#[command(
    name = "matchcut",
    version,
    about = "Enumerate matching cuts of undirected graphs via enumeration kernels"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate matching cuts, one per line (`EMPTY` denotes the empty cut)
    Enum(PipelineArgs),
    /// Count matching cuts
    Count(PipelineArgs),
    /// Reduce a graph to its enumeration kernel and print it as a graph file
    Kernelize {
        /// Kernelization to apply: vc, tc, nd, mw, fen, or cp
        #[arg(long, value_parser = parse_kernel_method)]
        method: Method,
        /// Solution kind the kernel must preserve
        #[arg(long, value_enum, default_value_t = KindArg::All)]
        kind: KindArg,
        /// Certificate file (clique partition for cp, modules for mw)
        #[arg(long)]
        partition: Option<PathBuf>,
        /// Write the kernel here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Input graph file
        graph: PathBuf,
    },
    /// Cross-validate a method against the exhaustive oracle (TSV report)
    Verify(PipelineArgs),
    /// Generate a named instance family as a graph file
    Gen {
        /// Family name (see `gen --help` for parameters each family needs)
        #[arg(long, value_parser = parse_family)]
        family: Family,
        /// Vertex count (path, cycle, complete, random families)
        #[arg(long)]
        n: Option<usize>,
        /// Family size parameter (stars, gadgets, cover bound, block count)
        #[arg(long)]
        k: Option<usize>,
        /// Rung length (path-ladder)
        #[arg(long)]
        l: Option<usize>,
        /// Leaves per star (star-forest)
        #[arg(long)]
        p: Option<usize>,
        /// Seed for the random families
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the graph here (a certificate goes to `<out>.partition`)
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Arguments shared by `enum`, `count`, and `verify`.
#[derive(Args)]
struct PipelineArgs {
    /// Which cuts to report: all, minimal, or maximal
    #[arg(long, value_enum, default_value_t = KindArg::All)]
    kind: KindArg,
    /// Enumeration method
    #[arg(long, value_parser = parse_method, default_value = "oracle")]
    method: Method,
    /// Certificate file (clique partition for cp, modules for mw)
    #[arg(long)]
    partition: Option<PathBuf>,
    /// Input graph file
    graph: PathBuf,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    All,
    Minimal,
    Maximal,
}

impl From<KindArg> for SolutionKind {
    fn from(kind: KindArg) -> Self {
        match kind {
            KindArg::All => SolutionKind::All,
            KindArg::Minimal => SolutionKind::Minimal,
            KindArg::Maximal => SolutionKind::Maximal,
        }
    }
}

fn parse_method(s: &str) -> Result<Method> {
    s.parse()
}

fn parse_kernel_method(s: &str) -> std::result::Result<Method, String> {
    let method: Method = s.parse().map_err(|e: Error| e.to_string())?;
    if matches!(method, Method::Oracle | Method::SpanningTree) {
        return Err(format!(
            "method {method} has no kernelization (choose vc, tc, nd, mw, fen, or cp)"
        ));
    }
    Ok(method)
}

fn parse_family(s: &str) -> Result<Family> {
    s.parse()
}

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| {
        Error::Io(std::io::Error::new(
            e.kind(),
            format!("{}: {e}", path.display()),
        ))
    })
}

fn read_graph(path: &Path) -> Result<Graph> {
    parse_graph(&read_file(path)?)
}

fn read_partition(path: Option<&Path>) -> Result<Option<Vec<VertexSet>>> {
    match path {
        Some(p) => Ok(Some(parse_partition(&read_file(p)?)?)),
        None => Ok(None),
    }
}

fn run_enum(args: &PipelineArgs, count_only: bool) -> Result<ExitCode> {
    let g = read_graph(&args.graph)?;
    let cert = read_partition(args.partition.as_deref())?;
    let cuts = enumerate_with(&g, args.method, args.kind.into(), cert.as_deref())?;
    if count_only {
        println!("{}", cuts.count());
    } else {
        // Line-buffered stdout keeps the enumeration delay observable: each
        // cut is written as the stream produces it.
        let stdout = std::io::stdout();
        let mut out = stdout.lock();
        for cut in cuts {
            if let Err(e) = writeln!(out, "{}", format_cut(&cut)) {
                if e.kind() == std::io::ErrorKind::BrokenPipe {
                    return Ok(ExitCode::SUCCESS);
                }
                return Err(Error::from(e));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_kernelize(
    method: Method,
    kind: SolutionKind,
    partition: Option<&Path>,
    out: Option<&Path>,
    graph: &Path,
) -> Result<ExitCode> {
    let g = read_graph(graph)?;
    let cert = read_partition(partition)?;
    let (h, note) = match method {
        Method::Vc => {
            let (h, _) = vc::kernelize(&g)?;
            (
                h,
                format!("vertex cover (2-approx) {}", vc_2approx(&g).len()),
            )
        }
        Method::Tc => {
            let (h, _) = tc::kernelize(&g, kind)?;
            (h, format!("{kind:?}-kind twin cover reduction"))
        }
        Method::Nd => {
            let (h, _) = nd::kernelize(&g)?;
            let classes = twin_classes(&g, TwinMode::AnyTwin).len();
            (h, format!("neighborhood diversity {classes}"))
        }
        Method::Mw => {
            let (h, _) = mw::kernelize(&g, cert.as_deref())?;
            (h, "modular-width reduction (minimal cuts)".to_string())
        }
        Method::Fen => {
            let (h, _) = fen::kernelize(&g, kind)?;
            (
                h,
                format!("feedback edge set {}", feedback_edge_set(&g).len()),
            )
        }
        Method::Cp => {
            let cert = cert.ok_or(Error::MissingCertificate {
                method: Method::Cp,
                what: "clique partition",
            })?;
            let (h, _) = cp::kernelize(&g, &cert)?;
            (h, format!("clique partition with {} blocks", cert.len()))
        }
        // `parse_kernel_method` rejects the two kernel-free methods.
        Method::Oracle | Method::SpanningTree => unreachable!(),
    };
    let mut text = format!(
        "# kernel of a graph with {} vertices and {} edges\n# method {method}: {note}\n",
        g.n(),
        g.m()
    );
    text.push_str(&format_graph(&h));
    match out {
        Some(path) => fs::write(path, text).map_err(Error::from)?,
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn run_verify(args: &PipelineArgs) -> Result<ExitCode> {
    let g = read_graph(&args.graph)?;
    let cert = read_partition(args.partition.as_deref())?;
    let label = args.graph.display().to_string();
    let report = verify_method(&g, args.method, args.kind.into(), cert.as_deref(), &label)?;
    println!("{}", matchcut::verify::VerifyReport::tsv_header());
    println!("{}", report.tsv_row());
    Ok(if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

#[allow(clippy::too_many_arguments)]
fn run_gen(
    family: Family,
    n: Option<usize>,
    k: Option<usize>,
    l: Option<usize>,
    p: Option<usize>,
    seed: u64,
    out: Option<&Path>,
) -> Result<ExitCode> {
    let params = FamilyParams { n, k, l, p, seed };
    let instance = generate(family, &params)?;
    let text = format_graph(&instance.graph);
    match out {
        Some(path) => {
            fs::write(path, text).map_err(Error::from)?;
            if let Some(blocks) = &instance.partition {
                let mut sidecar = path.as_os_str().to_owned();
                sidecar.push(".partition");
                fs::write(&sidecar, format_partition(blocks)).map_err(Error::from)?;
            }
        }
        None => {
            print!("{text}");
            if let Some(blocks) = &instance.partition {
                // Comment lines keep the stream a valid graph file.
                for block in blocks {
                    let ids: Vec<String> = block.iter().map(usize::to_string).collect();
                    println!("# clique block: {}", ids.join(" "));
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Enum(args) => run_enum(args, false),
        Command::Count(args) => run_enum(args, true),
        Command::Kernelize {
            method,
            kind,
            partition,
            out,
            graph,
        } => run_kernelize(
            *method,
            (*kind).into(),
            partition.as_deref(),
            out.as_deref(),
            graph,
        ),
        Command::Verify(args) => run_verify(args),
        Command::Gen {
            family,
            n,
            k,
            l,
            p,
            seed,
            out,
        } => run_gen(*family, *n, *k, *l, *p, *seed, out.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
