use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fanpart::decomp::{heuristic_treedecomp, validate, RootedTree, TreeDecomposition, WeightedTree};
use fanpart::graph::{grid_path_decomposition, make_complete, make_fan, make_grid, make_ktree, make_path, make_star};
use fanpart::io;
use fanpart::lemmas::{
    doubling_schedule, minor_free_pipeline, power_path_partition, sweep_flexibility, tree_components,
    tree_deletion_set, PipelineConfig,
};
use fanpart::oracle::OracleKind;
use fanpart::partition::{check_fan_partition, path_violation, FanPartition};
use fanpart::rational::{display, int, parse};
use fanpart::{Error, Graph, Rational, VertexSet};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "fanpart",
    version,
    about = "Fan-partitions of graphs with bounded-adhesion decompositions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Path,
    Fan,
    Star,
    Grid,
    Ktree,
    Complete,
}

#[derive(Clone, Copy, ValueEnum)]
enum CertKind {
    Fan,
    Path,
    Decomp,
    Embedding,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Number of vertices (all families except grid).
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    rows: Option<usize>,
    #[arg(long)]
    cols: Option<usize>,
    /// k-tree parameter.
    #[arg(long, default_value_t = 2)]
    k: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Where to write the tree-decomposition (ktree and grid only).
    #[arg(long)]
    decomp: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph from a standard family as an edge list.
    Generate(GenerateArgs),
    /// Check a certificate against a graph.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        cert: PathBuf,
        #[arg(long, value_enum)]
        kind: CertKind,
        /// Central-size bound (fan), or host width bound (embedding).
        #[arg(long)]
        k: Option<String>,
        /// Path-width bound (fan, path).
        #[arg(long)]
        w: Option<String>,
    },
    /// Run the decomposition pipeline at one value of d.
    Partition {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        decomp: Option<PathBuf>,
        #[arg(long, default_value = "separator")]
        oracle: String,
        #[arg(long, default_value = "1")]
        d: String,
        /// Adhesion bound; defaults to the decomposition's adhesion.
        #[arg(long)]
        k: Option<usize>,
        /// Apex bound; defaults to the largest apex set of the decomposition.
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the pipeline over a schedule of d values and write a CSV report.
    Sweep {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        decomp: Option<PathBuf>,
        #[arg(long, default_value = "separator")]
        oracle: String,
        /// Comma-separated d values; defaults to 1, 2, 4, ... up to n.
        #[arg(long)]
        d: Option<String>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Group a path-partition into a path-partition of the d-th power.
    Power {
        #[arg(long)]
        graph: PathBuf,
        /// Path-partition as fanpartition.v1 with an empty central part;
        /// defaults to singletons in vertex order.
        #[arg(long)]
        cert: Option<PathBuf>,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Delete at most q nodes of a tree (rooted at 0, unit weights) so every
    /// component weighs at most n/(q+1).
    Treecut {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Semantic(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::InvalidArgument(_) => Failure::Usage(e.to_string()),
            _ => Failure::Semantic(e.to_string()),
        }
    }
}

type CmdResult = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> CmdResult {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    Ok(io::read_edge_list(&read(path)?)?)
}

fn load_decomposition(g: &Graph, path: Option<&Path>) -> Result<TreeDecomposition, Failure> {
    match path {
        Some(path) => {
            let td = io::read_tree_decomposition(&read(path)?)?;
            validate(g, &td)
                .map_err(|v| Failure::Semantic(format!("decomposition does not decompose the graph: {v}")))?;
            Ok(td)
        }
        None => {
            let td = heuristic_treedecomp(g);
            eprintln!(
                "warning: no decomposition given; using a heuristic one of width {} (bounds depend on it)",
                td.width()
            );
            Ok(td)
        }
    }
}

fn rational(s: &str) -> Result<Rational, Failure> {
    Ok(parse(s)?)
}

fn required(value: Option<usize>, flag: &str) -> Result<usize, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("--{flag} is required for this family")))
}

fn generate(args: &GenerateArgs) -> CmdResult {
    let GenerateArgs {
        family,
        n,
        rows,
        cols,
        k,
        seed,
        ..
    } = *args;
    let (g, td) = match family {
        Family::Path => (make_path(required(n, "n")?)?, None),
        Family::Fan => (make_fan(required(n, "n")?)?, None),
        Family::Star => (make_star(required(n, "n")?)?, None),
        Family::Complete => (make_complete(required(n, "n")?)?, None),
        Family::Grid => {
            let (r, c) = (required(rows, "rows")?, required(cols, "cols")?);
            (make_grid(r, c)?, Some(grid_path_decomposition(r, c)?))
        }
        Family::Ktree => {
            let kt = make_ktree(required(n, "n")?, k, seed)?;
            (kt.graph, Some(kt.decomposition))
        }
    };
    match (args.decomp.as_deref(), td) {
        (Some(path), Some(td)) => emit(Some(path), &io::write_tree_decomposition(&td))?,
        (Some(_), None) => return Err(Failure::Usage("--decomp is only available for ktree and grid".into())),
        _ => {}
    }
    emit(args.out.as_deref(), &io::write_edge_list(&g))
}

fn verify(graph: &Path, cert: &Path, kind: CertKind, k: Option<&str>, w: Option<&str>) -> CmdResult {
    let g = load_graph(graph)?;
    let text = read(cert)?;
    match kind {
        CertKind::Fan | CertKind::Path => {
            let fp = io::read_fan_partition(&text)?;
            if fp.graph_n != g.n() {
                return Err(Failure::Semantic(format!(
                    "partition is for {} vertices, graph has {}",
                    fp.graph_n,
                    g.n()
                )));
            }
            if matches!(kind, CertKind::Path) && !fp.central.is_empty() {
                return Err(Failure::Semantic("path-partition has a non-empty central part".into()));
            }
            fp.check_structure().map_err(|e| Failure::Semantic(e.to_string()))?;
            let report = fp.report();
            let k = k.map(rational).transpose()?.unwrap_or(int(report.central_size));
            let w = w.map(rational).transpose()?.unwrap_or(int(report.path_width));
            if let Some((u, v)) = path_violation(&g, &fp.central, &fp.path_parts)? {
                return Err(Failure::Semantic(format!(
                    "edge {{{u},{v}}} joins non-consecutive path parts"
                )));
            }
            let report = check_fan_partition(&g, &fp, &k, &w)?;
            println!("pass: {}", serde_json::to_string(&report).expect("report serializes"));
        }
        CertKind::Decomp => {
            let td = io::read_tree_decomposition(&text)?;
            validate(&g, &td).map_err(|v| Failure::Semantic(v.to_string()))?;
            println!(
                "pass: width {}, adhesion {}, {} nodes",
                td.width(),
                td.adhesion(),
                td.len()
            );
        }
        CertKind::Embedding => {
            let pe = io::read_product_embedding(&text)?;
            let b = k
                .map(|s| s.parse::<usize>().map_err(|e| Failure::Usage(format!("--k: {e}"))))
                .transpose()?;
            pe.validate(&g, b)?;
            println!("pass: host width {}, path length {}", pe.b(), pe.path_len);
        }
    }
    Ok(())
}

fn config_for(
    td: &TreeDecomposition,
    oracle: &str,
    k: Option<usize>,
    a: Option<usize>,
) -> Result<PipelineConfig, Failure> {
    let mut config = PipelineConfig::for_decomposition(td, oracle.parse::<OracleKind>()?);
    config.k = k.unwrap_or(config.k);
    config.a = a.unwrap_or(config.a);
    Ok(config)
}

fn partition(
    graph: &Path,
    decomp: Option<&Path>,
    oracle: &str,
    d: &str,
    k: Option<usize>,
    a: Option<usize>,
    out: Option<&Path>,
) -> CmdResult {
    let g = load_graph(graph)?;
    let td = load_decomposition(&g, decomp)?;
    let config = config_for(&td, oracle, k, a)?;
    let d = rational(d)?;
    let result = minor_free_pipeline(&g, &td, &config, &d)?;
    eprintln!(
        "report: {} (bounds: central <= {}, path width <= {}; {})",
        serde_json::to_string(&result.report).expect("report serializes"),
        display(&result.bound_k),
        display(&result.bound_w),
        result.declared
    );
    emit(out, &io::write_fan_partition(&result.fan_partition))
}

fn sweep(
    graph: &Path,
    decomp: Option<&Path>,
    oracle: &str,
    d: Option<&str>,
    k: Option<usize>,
    a: Option<usize>,
    out: Option<&Path>,
) -> CmdResult {
    let g = load_graph(graph)?;
    let td = load_decomposition(&g, decomp)?;
    let config = config_for(&td, oracle, k, a)?;
    let schedule = match d {
        Some(list) => list
            .split(',')
            .map(|s| rational(s.trim()))
            .collect::<Result<Vec<_>, _>>()?,
        None => doubling_schedule(g.n()),
    };
    let rows = sweep_flexibility(&g, &td, &config, &schedule)?;
    let failed = rows.iter().filter(|r| !r.pass).count();
    emit(out, &io::write_sweep_csv(&rows))?;
    if failed > 0 {
        return Err(Failure::Semantic(format!(
            "{failed} of {} rows exceed their bounds",
            rows.len()
        )));
    }
    Ok(())
}

fn power(graph: &Path, cert: Option<&Path>, d: usize, out: Option<&Path>) -> CmdResult {
    let g = load_graph(graph)?;
    let parts = match cert {
        Some(path) => {
            let fp = io::read_fan_partition(&read(path)?)?;
            if !fp.central.is_empty() {
                return Err(Failure::Usage("path-partition has a non-empty central part".into()));
            }
            fp.path_parts
        }
        None => g.vertices().map(VertexSet::singleton).collect(),
    };
    let grouped = power_path_partition(&g, &parts, d)?;
    let fp = FanPartition::new(g.n(), VertexSet::new(), grouped)?;
    emit(out, &io::write_fan_partition(&fp))
}

/// Parent pointers of a tree rooted at 0.
fn root_tree(g: &Graph) -> Result<RootedTree, Failure> {
    let n = g.n();
    if n == 0 || g.m() != n - 1 || !g.is_connected() {
        return Err(Failure::Usage("treecut needs a non-empty tree".into()));
    }
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(t) = stack.pop() {
        for &u in g.neighbors(t) {
            if !seen[u] {
                seen[u] = true;
                parent[u] = Some(t);
                stack.push(u);
            }
        }
    }
    Ok(RootedTree::new(parent)?)
}

fn treecut(graph: &Path, q: usize, out: Option<&Path>) -> CmdResult {
    let g = load_graph(graph)?;
    let wt = WeightedTree::new(root_tree(&g)?, vec![int(1); g.n()])?;
    let z = tree_deletion_set(&wt, q, None)?;
    let components: Vec<_> = tree_components(&wt, &z)
        .into_iter()
        .map(|(nodes, weight)| json!({ "nodes": nodes.as_slice(), "weight": display(&weight) }))
        .collect();
    let report = json!({
        "q": q,
        "total": display(&wt.total()),
        "limit": display(&(wt.total() / int(q + 1))),
        "deleted": z.as_slice(),
        "components": components,
    });
    let mut text = serde_json::to_string_pretty(&report).expect("json value serializes");
    text.push('\n');
    emit(out, &text)
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Generate(args) => generate(&args),
        Command::Verify {
            graph,
            cert,
            kind,
            k,
            w,
        } => verify(&graph, &cert, kind, k.as_deref(), w.as_deref()),
        Command::Partition {
            graph,
            decomp,
            oracle,
            d,
            k,
            a,
            out,
        } => partition(&graph, decomp.as_deref(), &oracle, &d, k, a, out.as_deref()),
        Command::Sweep {
            graph,
            decomp,
            oracle,
            d,
            k,
            a,
            out,
        } => sweep(&graph, decomp.as_deref(), &oracle, d.as_deref(), k, a, out.as_deref()),
        Command::Power { graph, cert, d, out } => power(&graph, cert.as_deref(), d, out.as_deref()),
        Command::Treecut { graph, q, out } => treecut(&graph, q, out.as_deref()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Semantic(msg)) => {
            eprintln!("fail: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
