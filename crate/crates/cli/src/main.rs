use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use sigma_lab::classes;
use sigma_lab::enumerate::{enumerate_nonisomorphic, enumerate_up_to};
use sigma_lab::families::{self, SpiderKind};
use sigma_lab::harness::{read_graph6_lines, run_audits, run_audits_on, HarnessError, RunOptions};
use sigma_lab::laws::parse_law_list;
use sigma_lab::spectral::{self, join_spectrum, union_spectrum, Spectrum, DEFAULT_TIE_TOL};
use sigma_lab::{graph6, Graph};
use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

/// Laplacian spectra, the parameter sigma, and conjecture audits for small graphs.
#[derive(Parser)]
#[command(name = "sigma-lab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Number of Laplacian eigenvalues at least the average degree, computed exactly.
    Sigma(Input),
    /// Laplacian eigenvalues in descending order.
    Spectrum(Input),
    /// Structural classes, witnesses and invariants as JSON.
    Classify(Input),
    /// Spectrum of a join or disjoint union from the spectra of its parts.
    Compose(Compose),
    /// Print every non-isomorphic graph on n vertices as graph6.
    Enumerate(Enumerate),
    /// Run law audits over a corpus and write a report.
    Verify(Verify),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Complete,
    Star,
    Path,
    Cycle,
    Empty,
    CompleteBipartite,
    StarPlusIsolated,
    Remark,
    Spider,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Thin,
    Thick,
}

#[derive(Args)]
struct Input {
    /// A single graph in graph6.
    #[arg(long)]
    graph6: Option<String>,
    /// File of graph6 lines.
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long, value_enum)]
    family: Option<Family>,
    /// Order, or head size for spiders.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    /// Number of legs of a spider.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum)]
    kind: Option<Kind>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Join,
    Union,
}

#[derive(Args)]
struct Compose {
    #[arg(long, value_enum)]
    op: Op,
    /// Left operand in graph6.
    #[arg(long)]
    left: String,
    /// Right operand in graph6.
    #[arg(long)]
    right: String,
}

#[derive(Args)]
struct Enumerate {
    #[arg(long)]
    n: usize,
    /// Include every order from 1 to n.
    #[arg(long)]
    up_to: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct Verify {
    /// Audit every graph on 1 to N vertices.
    #[arg(long, value_name = "N")]
    enumerate: Option<usize>,
    /// File of graph6 lines.
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long)]
    graph6: Option<String>,
    /// Comma-separated law ids, or "all".
    #[arg(long, default_value = "all")]
    laws: String,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// JSON report path.
    #[arg(long)]
    out: Option<PathBuf>,
    /// CSV summary path; the summary is also printed to stdout.
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_TIE_TOL)]
    tie_tol: f64,
}

fn need(value: Option<usize>, flag: &str, family: &str) -> Result<usize> {
    value.ok_or_else(|| anyhow!("--family {family} needs --{flag}"))
}

fn build_family(input: &Input, family: Family) -> Result<Graph> {
    let name = family.to_possible_value().unwrap().get_name().to_string();
    let n = || need(input.n, "n", &name);
    let r = || need(input.r, "r", &name);
    let s = || need(input.s, "s", &name);
    let g = match family {
        Family::Complete => families::complete(n()?)?,
        Family::Star => families::star(n()?)?,
        Family::Path => families::path(n()?)?,
        Family::Cycle => families::cycle(n()?)?,
        Family::Empty => Graph::empty(n()?),
        Family::CompleteBipartite => families::complete_bipartite(r()?, s()?)?,
        Family::StarPlusIsolated => families::star_plus_isolated(r()?, s()?)?,
        Family::Remark => families::remark_family(s()?),
        Family::Spider => {
            let kind = match input
                .kind
                .ok_or_else(|| anyhow!("--family spider needs --kind"))?
            {
                Kind::Thin => SpiderKind::Thin,
                Kind::Thick => SpiderKind::Thick,
            };
            let head = Graph::empty(input.n.unwrap_or(0));
            families::spider(kind, need(input.k, "k", &name)?, &head)?.0
        }
    };
    Ok(g)
}

fn decode(text: &str) -> Result<Graph> {
    graph6::decode(text.trim()).with_context(|| format!("invalid graph6 {text:?}"))
}

fn read_file(path: &PathBuf) -> Result<Vec<Graph>> {
    let file = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    read_graph6_lines(BufReader::new(file))
        .collect::<Result<Vec<_>, HarnessError>>()
        .with_context(|| format!("reading {}", path.display()))
}

/// Graphs named by the input flags, and whether to label output lines.
fn load(input: &Input) -> Result<(Vec<Graph>, bool)> {
    match (&input.graph6, &input.file, input.family) {
        (Some(s), None, None) => Ok((vec![decode(s)?], false)),
        (None, Some(p), None) => Ok((read_file(p)?, true)),
        (None, None, Some(f)) => Ok((vec![build_family(input, f)?], false)),
        _ => bail!("give exactly one of --graph6, --file or --family"),
    }
}

fn rounded(x: f64) -> f64 {
    let r = (x * 1e9).round() / 1e9;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

fn format_value(x: f64) -> String {
    let s = format!("{:.9}", rounded(x));
    let s = s.trim_end_matches('0').trim_end_matches('.');
    s.to_string()
}

fn format_spectrum(spec: &Spectrum) -> String {
    spec.values()
        .iter()
        .map(|&x| format_value(x))
        .collect::<Vec<_>>()
        .join(", ")
}

fn emit(labelled: bool, g: &Graph, line: String, out: &mut impl Write) -> io::Result<()> {
    if labelled {
        writeln!(out, "{} {line}", graph6::encode(g))
    } else {
        writeln!(out, "{line}")
    }
}

fn classify(g: &Graph) -> Result<serde_json::Value> {
    let n = g.order();
    let sigma = spectral::sigma(g)?;
    Ok(json!({
        "graph6": graph6::encode(g),
        "n": n,
        "m": g.size(),
        "average_degree": spectral::average_degree(g)?.to_string(),
        "sigma": sigma,
        "spectrum": spectral::eigenvalues(g)?.values().iter().map(|&x| rounded(x)).collect::<Vec<_>>(),
        "connected": g.is_connected(),
        "co_connected": g.is_co_connected(),
        "components": g.connected_components(),
        "anticomponents": g.anticomponent_sets(),
        "forest": classes::is_forest(g),
        "tree": classes::is_tree(g),
        "diameter": classes::diameter(g),
        "split": classes::is_split(g),
        "pseudo_split": classes::is_pseudo_split(g),
        "cograph": classes::is_cograph(g),
        "extended_p4_laden": classes::is_extended_p4_laden(g),
        "induced_p4": classes::count_induced_p4(g),
        "complete_bipartite": classes::is_complete_bipartite(g),
        "spider": classes::recognize_spider(g),
        "spider_twin": classes::recognize_spider_twin(g),
        "small_exception": classes::small_exception(g),
        "conjecture_form": classes::conjecture_form(g).map(|f| f.to_string()),
    }))
}

fn run_input(cmd: &Command, input: &Input) -> Result<ExitCode> {
    let (graphs, labelled) = load(input)?;
    let mut out = BufWriter::new(io::stdout().lock());
    for g in &graphs {
        let line = match cmd {
            Command::Sigma(_) => spectral::sigma(g)?.to_string(),
            Command::Spectrum(_) => format_spectrum(&spectral::eigenvalues(g)?),
            _ => serde_json::to_string(&classify(g)?)?,
        };
        emit(labelled, g, line, &mut out)?;
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn run_compose(args: &Compose) -> Result<ExitCode> {
    let (a, b) = (decode(&args.left)?, decode(&args.right)?);
    let (sa, sb) = (spectral::eigenvalues(&a)?, spectral::eigenvalues(&b)?);
    let (g, spec) = match args.op {
        Op::Join => (a.join(&b), join_spectrum(&sa, a.order(), &sb, b.order())?),
        Op::Union => (a.disjoint_union(&b), union_spectrum(&sa, &sb)),
    };
    println!("graph6 {}", graph6::encode(&g));
    println!("spectrum {}", format_spectrum(&spec));
    Ok(ExitCode::SUCCESS)
}

fn run_enumerate(args: &Enumerate) -> Result<ExitCode> {
    let graphs: Box<dyn Iterator<Item = Graph>> = if args.up_to {
        Box::new(enumerate_up_to(args.n)?)
    } else {
        Box::new(enumerate_nonisomorphic(args.n)?)
    };
    let mut out: Box<dyn Write> = match &args.out {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("cannot create {}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    for g in graphs {
        writeln!(out, "{}", graph6::encode(&g))?;
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn run_verify(args: &Verify) -> Result<ExitCode> {
    let laws = parse_law_list(&args.laws)?;
    if args.jobs == 0 {
        bail!("--jobs must be at least 1");
    }
    let opts = RunOptions {
        laws,
        jobs: args.jobs,
        tie_tol: args.tie_tol,
    };
    let report = match (args.enumerate, &args.file, &args.graph6) {
        (Some(n), None, None) => {
            let corpus = enumerate_up_to(n)?.map(Ok);
            run_audits(corpus, &format!("enumerate n <= {n}"), &opts)?
        }
        (None, Some(p), None) => {
            let file = File::open(p).with_context(|| format!("cannot open {}", p.display()))?;
            let corpus = read_graph6_lines(BufReader::new(file));
            run_audits(corpus, &p.display().to_string(), &opts)
                .with_context(|| format!("reading {}", p.display()))?
        }
        (None, None, Some(s)) => run_audits_on([decode(s)?], s, &opts),
        _ => bail!("give exactly one of --enumerate, --file or --graph6"),
    };
    if let Some(p) = &args.out {
        std::fs::write(p, report.to_json())
            .with_context(|| format!("cannot write {}", p.display()))?;
    }
    let csv = report.to_csv();
    if let Some(p) = &args.csv {
        std::fs::write(p, &csv).with_context(|| format!("cannot write {}", p.display()))?;
    }
    print!("{csv}");
    for e in &report.errors {
        eprintln!("error: {} {}: {}", e.graph6, e.law, e.message);
    }
    let fails = report.total_fails();
    if fails > 0 {
        for t in report.laws.iter().filter(|t| t.fails > 0) {
            for c in &t.counterexamples {
                eprintln!("counterexample {}: {}", t.id, c.graph6);
            }
        }
        return Ok(ExitCode::from(2));
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match &cli.command {
        cmd @ (Command::Sigma(input) | Command::Spectrum(input) | Command::Classify(input)) => {
            run_input(cmd, input)
        }
        Command::Compose(args) => run_compose(args),
        Command::Enumerate(args) => run_enumerate(args),
        Command::Verify(args) => run_verify(args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
