//! `ftspare` command-line front end.
//!
//! Exit status: 0 on success or a true verdict, 1 on a false verdict or a
//! counterexample, 2 on usage, input or computation errors.

use std::path::Path;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ftspare::autgroup::{automorphism_group, AutomorphismSummary};
use ftspare::error::Error;
use ftspare::fault::{
    build_global_sparing, is_k_fault_tolerant_realization, spectrum_from, OrderMode, Reconfigurator, SparePolicy,
    SpectrumEntry,
};
use ftspare::graph::io::{emit_edge_list, emit_graph6, parse_graph};
use ftspare::graph::{Graph, VertexSet};
use ftspare::lab::{self, Suite};
use ftspare::perm::PermGroup;

mod render;

#[derive(Parser, Debug)]
#[command(name = "ftspare", version, about = "Automorphism, homogeneity and fault-tolerance analysis of small graphs")]
struct Cli {
    /// Emit a JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for parallel scans (default: available parallelism).
    #[arg(long, global = true, env = "FTSPARE_THREADS")]
    threads: Option<usize>,

    /// Include wall-clock timings in verification reports.
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Automorphism group order, generators and homogeneity spectrum of a graph.
    Analyze {
        /// graph6 file, edge-list file, or built-in name (K5, C6, Q3, Q3+2spares).
        #[arg(long)]
        graph: String,
    },
    /// Decide whether HOST is a k-fault-tolerant realization of BASIC.
    CheckFtr {
        #[arg(long)]
        host: String,
        #[arg(long)]
        basic: String,
        #[arg(long)]
        k: usize,
        /// Accept hosts with more than |V(BASIC)| + k vertices.
        #[arg(long)]
        relaxed: bool,
    },
    /// k-homogeneity of a permutation group or of a graph's automorphism group.
    #[command(group(ArgGroup::new("source").required(true).args(["group", "graph"])))]
    Homogeneity {
        /// Generator-list file: `degree n` then one cycle-notation line per generator.
        #[arg(long)]
        group: Option<String>,
        #[arg(long)]
        graph: Option<String>,
        /// Decide a single arity instead of printing the spectrum.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Find an automorphism carrying the spare set onto the fault set.
    Reconfigure {
        #[arg(long)]
        host: String,
        /// Comma-separated 0-based vertex indices.
        #[arg(long)]
        spares: VertexSet,
        #[arg(long)]
        faults: VertexSet,
    },
    /// Add k spares joined to every vertex of BASIC.
    BuildSparing {
        #[arg(long)]
        basic: String,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Policy::Universal)]
        policy: Policy,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
        /// Write the graph here instead of standard output.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Largest vertex count for the enumeration suites (4..=7).
        #[arg(long, default_value_t = lab::DEFAULT_N_MAX)]
        nmax: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Policy {
    Universal,
    UniversalClique,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Graph6,
    EdgeList,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    #[value(name = "theorem3subsets")]
    Theorem3Subsets,
    Main,
    LemmaS7,
    Q3,
    GroupLemmas,
    Corollaries,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Theorem3Subsets => Suite::Theorem3Subsets,
            SuiteArg::Main => Suite::Main,
            SuiteArg::LemmaS7 => Suite::LemmaS7,
            SuiteArg::Q3 => Suite::Q3,
            SuiteArg::GroupLemmas => Suite::GroupLemmas,
            SuiteArg::Corollaries => Suite::Corollaries,
            SuiteArg::All => Suite::All,
        }
    }
}

/// Failure before a verdict could be reached; maps to exit status 2.
#[derive(Debug)]
struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

/// A finished command: the document to print and whether its verdict holds.
struct Outcome {
    document: Value,
    text: String,
    verdict: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("ftspare: cannot configure {threads} threads: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(outcome) => {
            if cli.json {
                println!("{}", serde_json::to_string(&outcome.document).expect("values serialize"));
            } else {
                print!("{}", outcome.text);
            }
            ExitCode::from(if outcome.verdict { 0 } else { 1 })
        }
        Err(Failure(message)) => {
            eprintln!("ftspare: {message}");
            ExitCode::from(2)
        }
    }
}

/// Reads a graph from a file when `source` names one, otherwise resolves it
/// as a built-in family name.
fn load_graph(source: &str) -> Result<Graph, Failure> {
    let path = Path::new(source);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Failure(format!("cannot read {source}: {e}")))?;
        return parse_graph(&text).map_err(|e| Failure(format!("{source}: {e}")));
    }
    Graph::named(source).map_err(|_| Failure(format!("{source}: no such file or built-in graph")))
}

fn load_group(source: &str) -> Result<PermGroup, Failure> {
    let text = std::fs::read_to_string(source).map_err(|e| Failure(format!("cannot read {source}: {e}")))?;
    PermGroup::parse_generator_list(&text).map_err(|e| Failure(format!("{source}: {e}")))
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Analyze { graph } => analyze(&load_graph(graph)?),
        Command::CheckFtr { host, basic, k, relaxed } => {
            let mode = if *relaxed { OrderMode::Relaxed } else { OrderMode::Strict };
            check_ftr(&load_graph(host)?, &load_graph(basic)?, *k, mode)
        }
        Command::Homogeneity { group, graph, k } => match (group, graph) {
            (Some(group), _) => homogeneity_of_group(&load_group(group)?, *k),
            (None, Some(graph)) => homogeneity_of_graph(&load_graph(graph)?, *k),
            (None, None) => unreachable!("clap requires one source"),
        },
        Command::Reconfigure { host, spares, faults } => reconfigure(&load_graph(host)?, spares, faults),
        Command::BuildSparing { basic, k, policy, format, out } => {
            let policy = match policy {
                Policy::Universal => SparePolicy::Universal,
                Policy::UniversalClique => SparePolicy::UniversalClique,
            };
            build_sparing(&load_graph(basic)?, *k, policy, *format, out.as_deref())
        }
        Command::Verify { suite, nmax } => verify((*suite).into(), *nmax, cli.timing),
    }
}

fn analyze(g: &Graph) -> Result<Outcome, Failure> {
    let aut = automorphism_group(g)?;
    let summary = AutomorphismSummary::from(&aut);
    let document = json!({
        "schema": render::schema_id("analyze"),
        "n": g.order(),
        "edge_count": g.edge_count(),
        "degree_sequence": g.degree_sequence(),
        "automorphisms": summary,
    });
    Ok(Outcome { text: render::analyze(g, &summary), document, verdict: true })
}

fn check_ftr(host: &Graph, basic: &Graph, k: usize, mode: OrderMode) -> Result<Outcome, Failure> {
    let check = is_k_fault_tolerant_realization(host, basic, k, mode)?;
    let mut document = serde_json::to_value(&check).expect("report serializes");
    document["schema"] = json!(render::schema_id("check-ftr"));
    Ok(Outcome { text: render::check_ftr(&check), document, verdict: check.verdict })
}

fn single_k(spectrum: &[SpectrumEntry], k: Option<usize>) -> Result<Option<SpectrumEntry>, Failure> {
    k.map(|k| {
        spectrum.get(k).copied().ok_or_else(|| Failure(format!("k = {k} exceeds the degree {}", spectrum.len() - 1)))
    })
    .transpose()
}

fn homogeneity_outcome(
    degree: usize,
    order: String,
    spectrum: Vec<SpectrumEntry>,
    k: Option<usize>,
) -> Result<Outcome, Failure> {
    let selected = single_k(&spectrum, k)?;
    let verdict = selected.is_none_or(|e| e.homogeneous == Some(true));
    let document = json!({
        "schema": render::schema_id("homogeneity"),
        "degree": degree,
        "order": order,
        "spectrum": spectrum,
        "k": k,
        "homogeneous": selected.map(|e| e.homogeneous),
    });
    Ok(Outcome { text: render::homogeneity(degree, &order, &spectrum, selected), document, verdict })
}

fn homogeneity_of_graph(g: &Graph, k: Option<usize>) -> Result<Outcome, Failure> {
    let aut = automorphism_group(g)?;
    homogeneity_outcome(g.order(), aut.order.to_string(), spectrum_from(&aut), k)
}

fn homogeneity_of_group(group: &PermGroup, k: Option<usize>) -> Result<Outcome, Failure> {
    let spectrum = (0..=group.degree())
        .map(|k| {
            let h = match group.is_k_homogeneous(k) {
                Ok(h) => Some(h),
                Err(Error::OrbitTooLarge { .. } | Error::UniverseTooLarge { .. }) => None,
                Err(e) => return Err(Failure::from(e)),
            };
            Ok(SpectrumEntry { k, homogeneous: h, supports_automorphic_reconfiguration: h })
        })
        .collect::<Result<Vec<_>, _>>()?;
    homogeneity_outcome(group.degree(), group.order().to_string(), spectrum, k)
}

fn reconfigure(host: &Graph, spares: &VertexSet, faults: &VertexSet) -> Result<Outcome, Failure> {
    let plan = Reconfigurator::new(host)?.find(spares, faults)?;
    let document = json!({
        "schema": render::schema_id("reconfigure"),
        "found": plan.is_some(),
        "host": host,
        "spares": spares,
        "faults": faults,
        "automorphism": plan.as_ref().map(|p| &p.automorphism),
        "automorphism_cycles": plan.as_ref().map(|p| p.automorphism.to_string()),
        "relabel": plan.as_ref().map(|p| &p.relabel),
    });
    Ok(Outcome { text: render::reconfigure(spares, faults, plan.as_ref()), document, verdict: plan.is_some() })
}

fn build_sparing(
    basic: &Graph,
    k: usize,
    policy: SparePolicy,
    format: Format,
    out: Option<&Path>,
) -> Result<Outcome, Failure> {
    let host = build_global_sparing(basic, k, policy);
    let graph6 = emit_graph6(&host).ok();
    let body = match format {
        Format::Graph6 => format!("{}\n", graph6.clone().ok_or_else(|| Failure("graph too large for graph6".into()))?),
        Format::EdgeList => emit_edge_list(&host),
    };
    if let Some(path) = out {
        std::fs::write(path, &body).map_err(|e| Failure(format!("cannot write {}: {e}", path.display())))?;
    }
    let document = json!({
        "schema": render::schema_id("build-sparing"),
        "k": k,
        "policy": policy,
        "graph": host,
        "graph6": graph6,
    });
    let text = if out.is_some() { String::new() } else { body };
    Ok(Outcome { text, document, verdict: true })
}

fn verify(suite: Suite, n_max: usize, timing: bool) -> Result<Outcome, Failure> {
    let mut reports = lab::run_suite(suite, n_max)?;
    if !timing {
        for r in &mut reports {
            r.elapsed_ms = None;
        }
    }
    let passed = reports.iter().all(|r| r.passed());
    let document = json!({
        "schema": render::schema_id("verify"),
        "passed": passed,
        "reports": reports,
    });
    Ok(Outcome { text: render::verify(&reports), document, verdict: passed })
}
