//! `kronecker`: vertex connectivity of direct products from the command line.
//!
//! Graph files hold either one edge list (`p <n>` header) or one graph6
//! record per line; `-` reads standard input. Verification commands print
//! JSON-lines reports and exit with status 0 iff every verdict passes.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use kronecker::product::{check_degree_product, check_weichsel};
use kronecker::random::{derive_seed, labeled_graphs, rng_from_seed};
use kronecker::report::timed;
use kronecker::sweep::{recheck, run_sweep, to_json_lines, SweepConfig};
use kronecker::theorem::{
    check_lemma_deletion, check_lemma_layer_in_component, check_lemma_quotient_connected,
    check_theorem_equality, sample_separator_candidate,
};
use kronecker::*;

#[derive(Parser)]
#[command(
    name = "kronecker",
    version,
    about = "Vertex connectivity of direct products G x K_n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Vertex connectivity, minimum degree and a minimum vertex cut of each graph.
    Kappa { file: PathBuf },
    /// Emit the direct product G x K_n.
    Product {
        file: PathBuf,
        #[arg(short = 'n', long = "n")]
        n: usize,
        #[arg(long, value_enum, default_value_t = Emit::G6)]
        emit: Emit,
    },
    /// Compare the closed form with κ computed on the constructed product.
    VerifyTheorem(VerifyTheoremArgs),
    /// Check the supporting lemmas, sampling candidate separators.
    VerifyLemmas {
        file: PathBuf,
        #[arg(short = 'n', long = "n")]
        n: usize,
        #[arg(long, default_value_t = 10)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        timing: bool,
    },
    /// A separator of G x K_n whose size matches the closed form.
    Witness {
        file: PathBuf,
        #[arg(short = 'n', long = "n")]
        n: usize,
        /// For n < 3: return a minimum cut of the product itself.
        #[arg(long)]
        direct: bool,
    },
    /// Run a verification sweep described by a JSON config file.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        /// Write reports here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Recompute the verdict of every report in a JSON-lines file.
    Recheck { file: PathBuf },
}

#[derive(Args)]
struct VerifyTheoremArgs {
    /// Graph file; omit when using --exhaustive.
    #[arg(required_unless_present = "exhaustive")]
    file: Option<PathBuf>,
    /// Check every labeled graph on up to this many vertices.
    #[arg(long, value_name = "M", conflicts_with = "file")]
    exhaustive: Option<usize>,
    #[arg(short = 'n', long = "n", num_args = 1.., required = true)]
    n: Vec<usize>,
    #[arg(long, value_enum, default_value_t = OracleArg::Flow)]
    oracle: OracleArg,
    #[arg(long, default_value_t = connectivity::DEFAULT_BRUTE_FORCE_CAP)]
    brute_cap: usize,
    /// For n < 3: compute κ on the product instead of the closed form.
    #[arg(long)]
    direct: bool,
    #[arg(long)]
    timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    G6,
    Edges,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleArg {
    Flow,
    Brute,
    Both,
}

impl From<OracleArg> for Oracle {
    fn from(value: OracleArg) -> Self {
        match value {
            OracleArg::Flow => Oracle::Flow,
            OracleArg::Brute => Oracle::Brute,
            OracleArg::Both => Oracle::Both,
        }
    }
}

fn read_text(path: &Path) -> anyhow::Result<String> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn read_graphs(path: &Path) -> anyhow::Result<Vec<Graph>> {
    let text = read_text(path)?;
    kronecker::io::parse_graphs(&text).with_context(|| format!("parsing {}", path.display()))
}

fn inapplicable(n: usize) -> anyhow::Error {
    anyhow::anyhow!(
        "{}\nhint: rerun with --direct to compute on the product itself",
        Error::FormulaInapplicable(n)
    )
}

/// Prints reports as JSON lines and tells whether all passed.
fn emit_reports(reports: &[VerificationReport]) -> anyhow::Result<bool> {
    let mut out = io::stdout().lock();
    out.write_all(to_json_lines(reports).as_bytes())?;
    Ok(reports.iter().all(VerificationReport::passed))
}

fn summarize(reports: &[VerificationReport]) {
    let failed = reports.iter().filter(|r| !r.passed()).count();
    eprintln!(
        "{} reports, {} passed, {} failed",
        reports.len(),
        reports.len() - failed,
        failed
    );
}

fn cmd_kappa(file: &Path) -> anyhow::Result<bool> {
    for graph in read_graphs(file)? {
        let cut = (graph.vertex_count() > 0)
            .then(|| min_vertex_cut(&graph))
            .transpose()?;
        let line = json!({
            "graph6": write_graph6(&graph),
            "vertices": graph.vertex_count(),
            "edges": graph.edge_count(),
            "kappa": cut.as_ref().map(CutWitness::len),
            "min_degree": graph.min_degree().ok(),
            "cut": cut,
        });
        println!("{line}");
    }
    Ok(true)
}

fn cmd_product(file: &Path, n: usize, emit: Emit) -> anyhow::Result<bool> {
    for graph in read_graphs(file)? {
        let product = product_with_complete(&graph, n)?;
        match emit {
            Emit::G6 => println!("{}", write_graph6(product.graph())),
            Emit::Edges => print!("{}", write_edge_list(product.graph())),
        }
    }
    Ok(true)
}

fn cmd_verify_theorem(args: &VerifyTheoremArgs) -> anyhow::Result<bool> {
    let graphs: Vec<Graph> = match (&args.file, args.exhaustive) {
        (_, Some(m)) => {
            if m > sweep::MAX_EXHAUSTIVE_VERTICES {
                bail!(
                    "--exhaustive supports at most {} vertices",
                    sweep::MAX_EXHAUSTIVE_VERTICES
                );
            }
            (1..=m).flat_map(labeled_graphs).collect()
        }
        (Some(file), None) => read_graphs(file)?,
        (None, None) => unreachable!("clap requires one of file or --exhaustive"),
    };
    if let Some(&small) = args.n.iter().find(|&&n| n < 3) {
        if !args.direct {
            return Err(inapplicable(small));
        }
    }
    let mut reports = Vec::new();
    for graph in &graphs {
        for &n in &args.n {
            if n < 3 {
                let product = product_with_complete(graph, n)?;
                let line = json!({
                    "graph6": write_graph6(graph),
                    "n": n,
                    "direct_kappa": kappa(product.graph())?,
                });
                println!("{line}");
                continue;
            }
            let report = timed(args.timing, || {
                check_theorem_equality(graph, n, args.oracle.into(), args.brute_cap)
            })?;
            println!("{}", report.to_json_line());
            reports.push(report);
        }
    }
    summarize(&reports);
    Ok(reports.iter().all(VerificationReport::passed))
}

fn cmd_verify_lemmas(
    file: &Path,
    n: usize,
    samples: usize,
    seed: u64,
    timing: bool,
) -> anyhow::Result<bool> {
    if n < 3 {
        return Err(inapplicable(n));
    }
    let kn = complete_graph(n)?;
    let mut reports = Vec::new();
    for (index, graph) in read_graphs(file)?.iter().enumerate() {
        reports.push(timed(timing, || check_degree_product(graph, &kn))?);
        if graph.vertex_count() < 2 {
            continue;
        }
        reports.push(timed(timing, || check_weichsel(graph, &kn))?);
        reports.push(timed(timing, || check_lemma_deletion(graph))?);
        if kappa(graph)? == 0 {
            continue;
        }
        for k in 0..samples {
            let sample_seed = derive_seed(seed, (index as u64) << 32 | k as u64);
            let s = sample_separator_candidate(graph, n, &mut rng_from_seed(sample_seed))?;
            for check in [
                check_lemma_quotient_connected,
                check_lemma_layer_in_component,
            ] {
                let mut report = timed(timing, || check(graph, n, &s))?;
                report.inputs.seed = Some(sample_seed);
                reports.push(report);
            }
        }
    }
    let ok = emit_reports(&reports)?;
    summarize(&reports);
    Ok(ok)
}

fn cmd_witness(file: &Path, n: usize, direct: bool) -> anyhow::Result<bool> {
    if n < 3 && !direct {
        return Err(inapplicable(n));
    }
    for graph in read_graphs(file)? {
        let line = if n < 3 {
            let product = product_with_complete(&graph, n)?;
            json!({
                "graph6": write_graph6(&graph),
                "n": n,
                "cut": min_vertex_cut(product.graph())?,
            })
        } else {
            let witness = witness_cut(&graph, n)?;
            json!({
                "graph6": write_graph6(&graph),
                "n": n,
                "branch": witness.branch,
                "formula": witness.formula,
                "cut": witness.cut,
            })
        };
        println!("{line}");
    }
    Ok(true)
}

fn cmd_sweep(config: &Path, output: Option<&Path>) -> anyhow::Result<bool> {
    let config: SweepConfig = serde_json::from_str(&read_text(config)?)
        .with_context(|| format!("parsing sweep config {}", config.display()))?;
    let reports = run_sweep(&config)?;
    let text = to_json_lines(&reports);
    match output {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    summarize(&reports);
    Ok(reports.iter().all(VerificationReport::passed))
}

fn cmd_recheck(file: &Path) -> anyhow::Result<bool> {
    let mut consistent = true;
    let mut count = 0;
    for (index, line) in read_text(file)?.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let report = VerificationReport::from_json_line(line)
            .with_context(|| format!("line {}", index + 1))?;
        let fresh = recheck(&report).with_context(|| format!("line {}", index + 1))?;
        count += 1;
        if fresh != report.verdict || !fresh.is_pass() {
            consistent = false;
            println!(
                "line {}: stored {:?}, recomputed {:?}",
                index + 1,
                report.verdict,
                fresh
            );
        }
    }
    eprintln!("{count} reports rechecked");
    Ok(consistent)
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.command {
        Command::Kappa { file } => cmd_kappa(&file),
        Command::Product { file, n, emit } => cmd_product(&file, n, emit),
        Command::VerifyTheorem(args) => cmd_verify_theorem(&args),
        Command::VerifyLemmas {
            file,
            n,
            samples,
            seed,
            timing,
        } => cmd_verify_lemmas(&file, n, samples, seed, timing),
        Command::Witness { file, n, direct } => cmd_witness(&file, n, direct),
        Command::Sweep { config, output } => cmd_sweep(&config, output.as_deref()),
        Command::Recheck { file } => cmd_recheck(&file),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
