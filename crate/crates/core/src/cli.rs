//! Command-line front end. [`run`] takes the argument list and output
//! streams so the binary and the tests drive the same code.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use crate::dominate::DominationKind;
use crate::error::{Error, Result};
use crate::generators::{random_connected_graph, random_tree, FamilySpec};
use crate::graph::Graph;
use crate::solve::{minimum, SolveOptions, SolveResult, SolveStatus};
use crate::theorems::{
    formula_value, reports_to_csv, reports_to_json, sampling, tree_profile, verify_theorem,
    RangeSpec, TheoremId, TheoremReport, Verdict,
};
use crate::transform::{join, line_graph, middle_graph};

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitCode {
    Success = 0,
    Mismatch = 1,
    Usage = 2,
    BudgetExceeded = 3,
}

#[derive(Debug, Parser)]
#[command(
    name = "middledom",
    version,
    about = "Exact domination parameters of graphs and middle graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a graph and write it as an edge list.
    Gen(GenArgs),
    /// Compute a domination parameter, optionally after a transform.
    Compute(ComputeArgs),
    /// Check the catalogued statements against the exact solver.
    Verify(VerifyArgs),
    /// Tabulate the parameters of middle graphs of random instances.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum FamilyName {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Star,
    Wheel,
    DoubleStar,
    Friendship,
    /// Uniform random labelled tree on `--n` vertices.
    Tree,
    /// Random connected graph: spanning tree plus pairs with probability `--p`.
    Random,
}

#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    #[arg(long)]
    pub family: Option<FamilyName>,
    /// Order, or the family's main size parameter (leaves of a star, rim of
    /// a wheel, triangles of a friendship graph, first part or first leaf
    /// count for bipartite and double stars).
    #[arg(long)]
    pub n: Option<usize>,
    /// Second size parameter for complete_bipartite and double_star.
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long, default_value_t = 0.3)]
    pub p: f64,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

impl FamilyArgs {
    /// Builds the graph with a short label, or `None` without `--family`.
    pub fn build(&self) -> Result<Option<(String, Graph)>> {
        let Some(family) = self.family else {
            return Ok(None);
        };
        let need = |v: Option<usize>, flag: &str| {
            v.ok_or_else(|| Error::InvalidArgument(format!("--family {family:?} requires {flag}")))
        };
        let n = need(self.n, "--n")?;
        let spec = match family {
            FamilyName::Path => FamilySpec::Path(n),
            FamilyName::Cycle => FamilySpec::Cycle(n),
            FamilyName::Complete => FamilySpec::Complete(n),
            FamilyName::CompleteBipartite => FamilySpec::CompleteBipartite(n, need(self.m, "--m")?),
            FamilyName::Star => FamilySpec::Star(n),
            FamilyName::Wheel => FamilySpec::Wheel(n),
            FamilyName::DoubleStar => FamilySpec::DoubleStar(n, need(self.m, "--m")?),
            FamilyName::Friendship => FamilySpec::Friendship(n),
            FamilyName::Tree => {
                return Ok(Some((
                    format!("tree(n={n},seed={})", self.seed),
                    random_tree(n, self.seed)?,
                )))
            }
            FamilyName::Random => {
                let g = random_connected_graph(n, self.p, self.seed)?;
                return Ok(Some((
                    format!("rcg(n={n},p={},seed={})", self.p, self.seed),
                    g,
                )));
            }
        };
        Ok(Some((spec.to_string(), spec.generate()?)))
    }
}

#[derive(Debug, Clone, Args)]
pub struct BudgetArgs {
    /// Per-solve time budget in seconds (default 60, or the environment override).
    #[arg(long)]
    pub time_budget: Option<f64>,
    /// Per-solve search-node budget.
    #[arg(long)]
    pub node_budget: Option<u64>,
}

impl BudgetArgs {
    pub fn options(&self) -> Result<SolveOptions> {
        let mut opts = SolveOptions::from_env()?;
        if let Some(secs) = self.time_budget {
            if !secs.is_finite() || secs <= 0.0 {
                return Err(Error::InvalidArgument(format!(
                    "--time-budget must be positive, got {secs}"
                )));
            }
            opts.time_budget = Duration::from_secs_f64(secs);
        }
        if let Some(nodes) = self.node_budget {
            if nodes == 0 {
                return Err(Error::InvalidArgument(
                    "--node-budget must be positive".into(),
                ));
            }
            opts.node_budget = nodes;
        }
        Ok(opts)
    }
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Output file; the edge list goes to stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TransformName {
    None,
    Middle,
    Line,
    Join,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["input", "family"])))]
pub struct ComputeArgs {
    /// Edge-list file.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long, value_enum, default_value_t = TransformName::None)]
    pub transform: TransformName,
    /// Second edge-list file for `--transform join`.
    #[arg(long)]
    pub second: Option<PathBuf>,
    /// Parameter: dom, tdom, dd, tdd, pr or pdd.
    #[arg(long, default_value = "pdd")]
    pub kind: DominationKind,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// `all`, a statement id such as `T45_mid_path`, a prefix such as `T45`,
    /// or a comma-separated list of these.
    #[arg(long, default_value = "all")]
    pub suite: String,
    /// Upper order for the cycle and path families.
    #[arg(long)]
    pub max_n: Option<usize>,
    /// Random instances per relational statement.
    #[arg(long, default_value_t = 20)]
    pub samples: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Extra-edge probability for random connected graphs.
    #[arg(long, default_value_t = 0.3)]
    pub p: f64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Fill the millis column; without it reports are byte-identical across runs.
    #[arg(long)]
    pub timings: bool,
    /// Exit 0 rather than 3 when some rows were skipped on budget.
    #[arg(long)]
    pub allow_skipped: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("population").required(true).args(["trees", "graphs"])))]
pub struct SweepArgs {
    /// Number of random trees.
    #[arg(long)]
    pub trees: Option<usize>,
    /// Number of random connected graphs.
    #[arg(long)]
    pub graphs: Option<usize>,
    /// Smallest order (default 5 for trees, 2 for graphs).
    #[arg(long)]
    pub n_min: Option<usize>,
    /// Largest order (default 10 for trees, 8 for graphs).
    #[arg(long)]
    pub n_max: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, default_value_t = 0.3)]
    pub p: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

/// Parses `args` (program name first) and runs the command, returning the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return e.exit_code();
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code as i32,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            ExitCode::Usage as i32
        }
    }
}

fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<ExitCode> {
    match cmd {
        Command::Gen(a) => gen(a, out, err),
        Command::Compute(a) => compute(a, out),
        Command::Verify(a) => verify(a, out),
        Command::Sweep(a) => sweep(a, out),
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    Graph::parse_edge_list(&text)
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn gen(a: GenArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<ExitCode> {
    let (label, g) = a
        .family
        .build()?
        .ok_or_else(|| Error::InvalidArgument("gen requires --family".into()))?;
    let summary = format!("{label}: order {} size {}", g.n(), g.m());
    let text = with_newline(g.to_edge_list());
    match &a.out {
        Some(path) => {
            emit(out, Some(path), &text)?;
            writeln!(out, "{summary}")?;
        }
        None => {
            out.write_all(text.as_bytes())?;
            writeln!(err, "{summary}")?;
        }
    }
    Ok(ExitCode::Success)
}

fn compute(a: ComputeArgs, out: &mut dyn Write) -> Result<ExitCode> {
    let opts = a.budget.options()?;
    let base = match (&a.input, a.family.build()?) {
        (Some(path), None) => read_graph(path)?,
        (None, Some((_, g))) => g,
        _ => {
            return Err(Error::InvalidArgument(
                "give exactly one of --input and --family".into(),
            ))
        }
    };
    if a.second.is_some() && a.transform != TransformName::Join {
        return Err(Error::InvalidArgument(
            "--second is only used with --transform join".into(),
        ));
    }
    let g = match a.transform {
        TransformName::None => base,
        TransformName::Middle => middle_graph(&base).graph,
        TransformName::Line => line_graph(&base),
        TransformName::Join => {
            let second = a.second.as_ref().ok_or_else(|| {
                Error::InvalidArgument("--transform join requires --second".into())
            })?;
            join(&base, &read_graph(second)?)
        }
    };
    let r = minimum(&g, a.kind, &opts)?;
    let text = match a.format {
        Format::Json => r.to_json() + "\n",
        Format::Text => format_text(&g, &r),
        Format::Csv => format_csv(&g, &r)?,
    };
    out.write_all(text.as_bytes())?;
    Ok(match r.status {
        SolveStatus::BudgetExceeded => ExitCode::BudgetExceeded,
        _ => ExitCode::Success,
    })
}

fn value_text(r: &SolveResult) -> String {
    r.value.map_or_else(|| "none".into(), |v| v.to_string())
}

fn format_text(g: &Graph, r: &SolveResult) -> String {
    format!(
        "graph: order {} size {}\nkind: {}\nvalue: {}\nwitness: {}\nstatus: {}\nnodes: {}\n",
        g.n(),
        g.m(),
        r.kind,
        value_text(r),
        r.witness,
        r.status,
        r.stats.nodes
    )
}

fn csv_text(header: &[&str], rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(header).map_err(io)?;
    for row in rows {
        w.write_record(row).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn format_csv(g: &Graph, r: &SolveResult) -> Result<String> {
    csv_text(
        &["n", "m", "kind", "value", "status", "witness"],
        &[vec![
            g.n().to_string(),
            g.m().to_string(),
            r.kind.to_string(),
            value_text(r),
            r.status.to_string(),
            r.witness.to_string(),
        ]],
    )
}

fn parse_suites(s: &str) -> Result<Vec<TheoremId>> {
    let mut ids = Vec::new();
    for part in s.split(',') {
        for id in TheoremId::parse_suite(part)? {
            if !ids.contains(&id) {
                ids.push(id);
            }
        }
    }
    Ok(ids)
}

fn exit_for(reports: &[TheoremReport], allow_skipped: bool) -> ExitCode {
    if reports.iter().any(TheoremReport::is_mismatch) {
        ExitCode::Mismatch
    } else if !allow_skipped
        && reports
            .iter()
            .any(|r| matches!(r.verdict, Verdict::Skipped(_)))
    {
        ExitCode::BudgetExceeded
    } else {
        ExitCode::Success
    }
}

fn verify(a: VerifyArgs, out: &mut dyn Write) -> Result<ExitCode> {
    let ids = parse_suites(&a.suite)?;
    let range = RangeSpec {
        max_n: a.max_n,
        samples: a.samples,
        seed: a.seed,
        p: a.p,
        opts: a.budget.options()?,
    };
    let mut reports = Vec::new();
    for id in ids {
        reports.extend(verify_theorem(id, &range)?);
    }
    let text = match a.format {
        Format::Csv => reports_to_csv(&reports, a.timings),
        Format::Json => with_newline(reports_to_json(&reports, a.timings)),
        Format::Text => reports.iter().map(|r| format!("{r}\n")).collect(),
    };
    emit(out, a.out.as_deref(), &text)?;
    Ok(exit_for(&reports, a.allow_skipped))
}

/// Columns of the sweep table. The four parameters are those of `M(G)`.
pub const SWEEP_HEADER: [&str; 18] = [
    "instance",
    "n",
    "m",
    "gd",
    "gtd",
    "gpr",
    "gprd",
    "path_bound",
    "bound_t54",
    "bound_c55",
    "bound_c56",
    "chain_o31",
    "chain_o32",
    "bounds_t35",
    "t53",
    "t54",
    "c55",
    "c56",
];

fn verdict_cell(ok: bool) -> String {
    if ok {
        Verdict::Match
    } else {
        Verdict::Mismatch
    }
    .to_string()
}

fn sweep_row(
    label: &str,
    g: &Graph,
    opts: &SolveOptions,
) -> Result<std::result::Result<Vec<String>, String>> {
    let mg = middle_graph(g).graph;
    let mut vals = [0usize; 4];
    for (slot, kind) in vals.iter_mut().zip([
        DominationKind::Disjunctive,
        DominationKind::TotalDisjunctive,
        DominationKind::Paired,
        DominationKind::PairedDisjunctive,
    ]) {
        let r = minimum(&mg, kind, opts)?;
        if !r.is_optimal() {
            return Ok(Err(format!("{label}: {kind} {}", r.status)));
        }
        *slot = r.optimal_value();
    }
    let [gd, gtd, gpr, gprd] = vals;
    let path_bound = formula_value(TheoremId::T45MidPath, &[g.n()])
        .value()
        .expect("n >= 2");
    let na = || Verdict::NotApplicable.to_string();
    let (mut t54b, mut c55b, mut c56b) = (String::new(), String::new(), String::new());
    let (mut t54, mut c55, mut c56) = (na(), na(), na());
    if g.is_tree() {
        let prof = tree_profile(g)?;
        t54b = prof.bound_t54_reported().to_string();
        c55b = prof.bound_c55.to_string();
        c56b = prof.bound_c56.to_string();
        let asserted =
            |bound: usize| verdict_cell(gprd >= bound && (prof.diameter != 4 || gprd == bound));
        if !prof.is_star {
            t54 = if gprd >= prof.bound_t54_reported() {
                "holds"
            } else {
                "fails"
            }
            .into();
            if prof.has_strong_support() && prof.all_leaves_on_strong_supports() {
                c55 = asserted(prof.bound_c55);
            }
        }
        if !prof.has_strong_support() {
            c56 = asserted(prof.bound_c56);
        }
    }
    Ok(Ok(vec![
        label.to_string(),
        g.n().to_string(),
        g.m().to_string(),
        gd.to_string(),
        gtd.to_string(),
        gpr.to_string(),
        gprd.to_string(),
        path_bound.to_string(),
        t54b,
        c55b,
        c56b,
        verdict_cell(gd <= gprd && gprd <= gpr && gprd <= 2 * gd),
        verdict_cell(gtd <= gprd),
        verdict_cell((2..=mg.n()).contains(&gprd) && gprd % 2 == 0),
        verdict_cell((2..=path_bound).contains(&gprd)),
        t54,
        c55,
        c56,
    ]))
}

fn sweep(a: SweepArgs, out: &mut dyn Write) -> Result<ExitCode> {
    let opts = a.budget.options()?;
    let samples = match (a.trees, a.graphs) {
        (Some(count), None) => {
            sampling::trees(count, a.n_min.unwrap_or(5), a.n_max.unwrap_or(10), a.seed)?
        }
        (None, Some(count)) => sampling::connected_graphs(
            count,
            a.n_min.unwrap_or(2),
            a.n_max.unwrap_or(8),
            a.p,
            a.seed,
        )?,
        _ => {
            return Err(Error::InvalidArgument(
                "give exactly one of --trees and --graphs".into(),
            ))
        }
    };
    let mut rows = Vec::new();
    let mut skipped = false;
    for s in &samples {
        match sweep_row(&s.label, &s.graph, &opts)? {
            Ok(row) => rows.push(row),
            Err(_) => skipped = true,
        }
    }
    emit(out, a.out.as_deref(), &csv_text(&SWEEP_HEADER, &rows)?)?;
    let mismatch = rows.iter().any(|r| r.iter().any(|c| c == "Mismatch"));
    Ok(if mismatch {
        ExitCode::Mismatch
    } else if skipped {
        ExitCode::BudgetExceeded
    } else {
        ExitCode::Success
    })
}
