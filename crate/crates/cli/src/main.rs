//! `superdom`: exact super domination numbers and modification-bound checks.
//!
//! Exit codes: 0 success, 1 bound violation or oracle mismatch, 2 usage or
//! parse error, 3 solver limit exceeded.

mod input;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use input::{load_family, load_file, EdgeArg, InputFormat, Labeled, RandomSpec, Source};
use superdom_core::families::{dutch_upper_bound, theorem1_bounds, ValueSource};
use superdom_core::io::{write_edge_list, write_report, write_summary, ReportFormat};
use superdom_core::random::GENERATOR;
use superdom_core::solver::{domination_number, super_domination_naive, super_domination_number, SolveError};
use superdom_core::theorems::{
    check_corollary_alpha, check_corollary_beta, check_corollary_theta, check_edge_contraction, check_edge_removal,
    check_theorem1, check_vertex_contraction, check_vertex_removal, gap_witness, sweep, SweepSummary, TheoremError,
    GAP_VERIFY_MAX,
};
use superdom_core::{BoundReport, Edge, FamilySpec, Graph, SolveOptions, TheoremId};

/// Failure categories, each mapped to a stable exit code.
#[derive(Debug)]
pub enum CliError {
    Violation(String),
    Usage(String),
    Parse(String),
    Limit(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Violation(_) => 1,
            CliError::Usage(_) | CliError::Parse(_) => 2,
            CliError::Limit(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Violation(m) | CliError::Usage(m) | CliError::Parse(m) | CliError::Limit(m) => m,
        }
    }
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::LimitTooLarge(_) => CliError::Usage(e.to_string()),
            SolveError::ExceedsLimit { .. } => CliError::Limit(format!("{e}; raise it with --limit")),
            SolveError::OracleCap(_) => CliError::Limit(e.to_string()),
        }
    }
}

impl From<TheoremError> for CliError {
    fn from(e: TheoremError) -> Self {
        match e {
            TheoremError::Solve(s) => s.into(),
            TheoremError::Graph(_) | TheoremError::NotPendant { .. } | TheoremError::DegreeNotTwo { .. } => {
                CliError::Usage(e.to_string())
            }
            TheoremError::Family(_) | TheoremError::GapOrder => CliError::Usage(e.to_string()),
            TheoremError::GapMismatch { .. } | TheoremError::Inconsistent(_) => CliError::Violation(e.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "superdom",
    version,
    about = "Exact super domination numbers and modification-bound checks"
)]
struct Cli {
    /// Largest connected component the exact solver accepts (runtime grows as 2^n).
    #[arg(long, global = true, default_value_t = superdom_core::solver::DEFAULT_LIMIT)]
    limit: usize,
    /// Worker threads; 1 forces the sequential path. Defaults to all cores.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    workers: Option<u64>,
    /// Report layout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Records)]
    format: Format,
    /// How to read graph files.
    #[arg(long, global = true, value_enum, default_value_t = InputFormat::Auto)]
    input_format: InputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Records,
    Table,
}

impl From<Format> for ReportFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Records => ReportFormat::Records,
            Format::Table => ReportFormat::Table,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// γ_sp with its lexicographically smallest witness, plus γ and the general bounds.
    Solve {
        #[command(flatten)]
        source: Source,
    },
    /// Compare a family's known value with the exact solver.
    Family { spec: FamilySpec },
    /// Check every bound that applies to one edge or vertex.
    Modify {
        #[command(flatten)]
        source: Source,
        /// Edge operand `u,v`.
        #[arg(long, conflicts_with = "vertex", required_unless_present = "vertex")]
        edge: Option<EdgeArg>,
        /// Vertex operand.
        #[arg(long)]
        vertex: Option<usize>,
    },
    /// Check every bound over every edge and vertex of each input graph.
    Sweep {
        /// Graph files.
        paths: Vec<PathBuf>,
        /// Generated families; may repeat.
        #[arg(long)]
        family: Vec<FamilySpec>,
        /// Random corpus `n,p,seed,count`.
        #[arg(long)]
        random: Option<RandomSpec>,
        /// Report the first sharp_low and sharp_high instance per theorem instead of every record.
        #[arg(long)]
        sharp: bool,
        /// Print only the tallies.
        #[arg(long)]
        summary_only: bool,
    },
    /// Compare the exact solver with the naive 2^n oracle.
    Oracle {
        /// Random corpus `n,p,seed,count` with n <= 10.
        #[arg(long, group = "corpus")]
        random: Option<RandomSpec>,
        #[arg(long, group = "corpus")]
        family: Option<FamilySpec>,
        /// Every labeled graph on 1..=N vertices (N <= 6).
        #[arg(long, group = "corpus")]
        exhaustive: Option<usize>,
    },
    /// Friendship graph whose hub contraction raises γ_sp by exactly N.
    Gap {
        n: usize,
        /// Re-solve both graphs when N is at most this.
        #[arg(long, default_value_t = GAP_VERIFY_MAX)]
        verify_max: usize,
    },
}

const ORACLE_RANDOM_MAX: usize = 10;
const ORACLE_EXHAUSTIVE_MAX: usize = 6;

struct Ctx {
    opts: SolveOptions,
    format: ReportFormat,
    input_format: InputFormat,
    out: String,
}

impl Ctx {
    fn line(&mut self, text: impl AsRef<str>) {
        self.out.push_str(text.as_ref());
        self.out.push('\n');
    }

    fn flush(&mut self) {
        print!("{}", std::mem::take(&mut self.out));
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn"))
        .format_timestamp(None)
        .init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let mut ctx = Ctx {
        opts: SolveOptions {
            limit: cli.limit,
            workers: cli.workers.map(|w| w as usize),
        },
        format: cli.format.into(),
        input_format: cli.input_format,
        out: String::new(),
    };
    let result = run(&cli.command, &mut ctx);
    ctx.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("superdom: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn run(command: &Command, ctx: &mut Ctx) -> Result<(), CliError> {
    if ctx.opts.limit > superdom_core::solver::MAX_LIMIT {
        return Err(SolveError::LimitTooLarge(ctx.opts.limit).into());
    }
    match command {
        Command::Solve { source } => {
            let input = source.load(ctx.input_format)?;
            solve(&input, ctx)
        }
        Command::Family { spec } => family(spec, ctx),
        Command::Modify { source, edge, vertex } => {
            let input = source.load(ctx.input_format)?;
            modify(&input, *edge, *vertex, ctx)
        }
        Command::Sweep {
            paths,
            family,
            random,
            sharp,
            summary_only,
        } => {
            let mut inputs = Vec::new();
            for path in paths {
                inputs.push(load_file(path, ctx.input_format)?);
            }
            for spec in family {
                inputs.push(load_family(spec)?);
            }
            if let Some(r) = random {
                ctx.line(format!("# random {r} generator={GENERATOR}"));
                inputs.extend(r.graphs());
            }
            if inputs.is_empty() {
                return Err(CliError::Usage("sweep needs at least one input".into()));
            }
            if *sharp {
                sharp_search(&inputs, ctx)
            } else {
                run_sweep(&inputs, *summary_only, ctx)
            }
        }
        Command::Oracle {
            random,
            family,
            exhaustive,
        } => oracle(*random, *family, *exhaustive, ctx),
        Command::Gap { n, verify_max } => gap(*n, *verify_max, ctx),
    }
}

fn describe(input: &Labeled) -> String {
    format!(
        "# input {} n={} m={}",
        input.label,
        input.graph.order(),
        input.graph.size()
    )
}

fn solve(input: &Labeled, ctx: &mut Ctx) -> Result<(), CliError> {
    let g = &input.graph;
    let result = super_domination_number(g, &ctx.opts)?;
    let (gamma, dominating) = domination_number(g, &ctx.opts)?;
    ctx.line(describe(input));
    ctx.line(format!("gamma_sp={}", result.value));
    ctx.line(format!("witness={}", result.witness));
    ctx.line(format!("gamma={gamma}"));
    ctx.line(format!("dominating_set={dominating}"));
    match theorem1_bounds(g) {
        Ok((lo, hi)) => {
            let r = check_theorem1(g, &ctx.opts)?;
            ctx.line(format!("bounds={lo}..={hi} holds={}", r.holds));
            if !r.holds {
                return Err(violation(input, ctx));
            }
        }
        Err(_) => ctx.line("bounds=none (edgeless)"),
    }
    ctx.line(format!("subsets_examined={}", result.subsets_examined));
    ctx.line(format!("strategy={}", result.strategy));
    Ok(())
}

fn family(spec: &FamilySpec, ctx: &mut Ctx) -> Result<(), CliError> {
    let input = load_family(spec)?;
    let result = super_domination_number(&input.graph, &ctx.opts)?;
    ctx.line(describe(&input));
    match spec.closed_form_gamma_sp() {
        Some(cf) => {
            let source = match cf.source {
                ValueSource::Formula => "formula",
                ValueSource::SmallCase => "small_case",
            };
            ctx.line(format!("closed_form={} source={source}", cf.value));
        }
        None => ctx.line("closed_form=none"),
    }
    if let FamilySpec::DutchWindmill { copies, cycle_len } = *spec {
        if let Ok(bound) = dutch_upper_bound(copies, cycle_len) {
            ctx.line(format!("dutch_upper_bound={bound} holds={}", result.value <= bound));
        }
    }
    ctx.line(format!("gamma_sp={}", result.value));
    ctx.line(format!("witness={}", result.witness));
    let agrees = spec.closed_form_gamma_sp().is_none_or(|cf| cf.value == result.value);
    ctx.line(format!("match={agrees}"));
    if agrees {
        Ok(())
    } else {
        Err(CliError::Violation(format!(
            "{spec}: solver disagrees with the closed form"
        )))
    }
}

fn modify(input: &Labeled, edge: Option<EdgeArg>, vertex: Option<usize>, ctx: &mut Ctx) -> Result<(), CliError> {
    let g = &input.graph;
    let opts = ctx.opts;
    let reports = match (edge, vertex) {
        (Some(EdgeArg(a, b)), _) => {
            let e = Edge::new(a, b).map_err(|e| CliError::Usage(e.to_string()))?;
            if !g.has_edge(e) {
                return Err(CliError::Usage(format!("edge {e} is not in the graph")));
            }
            vec![
                check_edge_removal(g, e, &opts)?,
                check_edge_contraction(g, e, &opts)?,
                check_corollary_alpha(g, e, &opts)?,
            ]
        }
        (None, Some(v)) => {
            let degree = g.degree(v).map_err(|e| CliError::Usage(e.to_string()))?;
            let mut reports = vec![
                check_vertex_removal(g, v, &opts)?,
                check_vertex_contraction(g, v, &opts)?,
            ];
            match degree {
                1 => reports.push(check_corollary_beta(g, v, &opts)?),
                2 => reports.push(check_corollary_theta(g, v, &opts)?),
                _ => {}
            }
            reports
        }
        (None, None) => return Err(CliError::Usage("modify needs --edge or --vertex".into())),
    };
    ctx.line(describe(input));
    emit_reports(&reports, ctx);
    if reports.iter().all(|r| r.holds) {
        Ok(())
    } else {
        Err(violation(input, ctx))
    }
}

fn emit_reports(reports: &[BoundReport], ctx: &mut Ctx) {
    let text = write_report(reports, ctx.format);
    ctx.out.push_str(&text);
}

/// Appends the reproduction graph and builds the violation error.
fn violation(input: &Labeled, ctx: &mut Ctx) -> CliError {
    ctx.line(format!(
        "# violation in {}; reproduce with this edge list:",
        input.label
    ));
    ctx.out.push_str(&write_edge_list(&input.graph));
    CliError::Violation(format!("bound violated on {}", input.label))
}

fn run_sweep(inputs: &[Labeled], summary_only: bool, ctx: &mut Ctx) -> Result<(), CliError> {
    let mut summary = SweepSummary::default();
    let mut failed = Vec::new();
    for input in inputs {
        let reports = sweep(&input.graph, &ctx.opts)?;
        summary.add(&reports);
        if !summary_only {
            ctx.line(describe(input));
            emit_reports(&reports, ctx);
        }
        if reports.iter().any(|r| !r.holds) {
            failed.push(input);
        }
    }
    ctx.line(format!("# graphs={}", inputs.len()));
    ctx.out.push_str(&write_summary(&summary));
    match failed.first() {
        None => Ok(()),
        Some(first) => {
            let err = violation(first, ctx);
            Err(CliError::Violation(format!(
                "{} of {} graphs violate a bound; {}",
                failed.len(),
                inputs.len(),
                err.message()
            )))
        }
    }
}

fn sharp_search(inputs: &[Labeled], ctx: &mut Ctx) -> Result<(), CliError> {
    let mut found: BTreeMap<(TheoremId, &str), (usize, BoundReport)> = BTreeMap::new();
    let mut summary = SweepSummary::default();
    for (i, input) in inputs.iter().enumerate() {
        let reports = sweep(&input.graph, &ctx.opts)?;
        summary.add(&reports);
        if let Some(bad) = reports.iter().find(|r| !r.holds) {
            ctx.line(format!("# violating report: {bad:?}"));
            return Err(violation(input, ctx));
        }
        for r in reports {
            for (flag, kind) in [(r.sharp_low, "sharp_low"), (r.sharp_high, "sharp_high")] {
                if flag {
                    found.entry((r.theorem, kind)).or_insert_with(|| (i, r.clone()));
                }
            }
        }
    }
    for &theorem in summary.by_theorem.keys() {
        for kind in ["sharp_low", "sharp_high"] {
            let mut line = format!("{kind} theorem_id={theorem}");
            match found.get(&(theorem, kind)) {
                Some((i, r)) => {
                    let g = &inputs[*i].graph;
                    let edges: Vec<String> = g.edges().iter().map(ToString::to_string).collect();
                    let _ = write!(
                        line,
                        " graph={} operand={} lhs={} middle={} rhs={} n={} edges={}",
                        inputs[*i].label,
                        r.operand,
                        r.lhs,
                        r.middle,
                        r.rhs,
                        g.order(),
                        edges.join(",")
                    );
                }
                None => line.push_str(" none"),
            }
            ctx.line(line);
        }
    }
    ctx.line(format!("# graphs={}", inputs.len()));
    ctx.out.push_str(&write_summary(&summary));
    Ok(())
}

fn oracle(
    random: Option<RandomSpec>,
    family: Option<FamilySpec>,
    exhaustive: Option<usize>,
    ctx: &mut Ctx,
) -> Result<(), CliError> {
    let corpus: Vec<Labeled> = match (random, family, exhaustive) {
        (Some(r), _, _) => {
            if r.n > ORACLE_RANDOM_MAX {
                return Err(CliError::Usage(format!(
                    "random oracle corpora are limited to n <= {ORACLE_RANDOM_MAX}"
                )));
            }
            ctx.line(format!("# random {r} generator={GENERATOR}"));
            r.graphs()
        }
        (None, Some(spec), _) => vec![load_family(&spec)?],
        (None, None, Some(n)) => {
            if n > ORACLE_EXHAUSTIVE_MAX {
                return Err(CliError::Usage(format!(
                    "exhaustive mode is limited to N <= {ORACLE_EXHAUSTIVE_MAX}"
                )));
            }
            ctx.line(format!("# exhaustive labeled graphs on 1..={n} vertices"));
            all_graphs(n)
        }
        (None, None, None) => {
            return Err(CliError::Usage(
                "oracle needs --random, --family or --exhaustive".into(),
            ))
        }
    };
    let mut mismatches = 0;
    for input in &corpus {
        let fast = super_domination_number(&input.graph, &ctx.opts)?.value;
        let naive = super_domination_naive(&input.graph)?;
        if corpus.len() == 1 {
            ctx.line(describe(input));
            ctx.line(format!("solver={fast} oracle={naive}"));
        }
        if fast != naive {
            mismatches += 1;
            ctx.line(format!("# mismatch on {}: solver={fast} oracle={naive}", input.label));
            ctx.out.push_str(&write_edge_list(&input.graph));
        }
    }
    ctx.line(format!("compared={} mismatches={mismatches}", corpus.len()));
    if mismatches == 0 {
        Ok(())
    } else {
        Err(CliError::Violation(format!("{mismatches} oracle mismatches")))
    }
}

/// Every labeled graph on `1..=max_n` vertices, by edge subset of K_n.
fn all_graphs(max_n: usize) -> Vec<Labeled> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for mask in 0u64..1 << pairs.len() {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            out.push(Labeled {
                label: format!("exhaustive:{n}#{mask}"),
                graph: Graph::from_edges(n, edges).expect("pairs are simple"),
            });
        }
    }
    out
}

fn gap(n: usize, verify_max: usize, ctx: &mut Ctx) -> Result<(), CliError> {
    let w = gap_witness(n, verify_max, &ctx.opts)?;
    ctx.line(format!("gap n={n}"));
    ctx.line(format!(
        "graph=family:friendship:{} order={} hub={}",
        n + 2,
        w.graph.order(),
        w.hub
    ));
    ctx.line(format!("contracted=family:complete:{}", 2 * n + 4));
    ctx.line(format!("gamma_sp_before={}", w.gamma_sp_before));
    ctx.line(format!("gamma_sp_after={}", w.gamma_sp_after));
    ctx.line(format!("difference={}", w.gamma_sp_after - w.gamma_sp_before));
    if w.verified {
        ctx.line("verified=true");
    } else {
        ctx.line(format!(
            "verified=false (construction only; verification runs for n <= {verify_max})"
        ));
    }
    Ok(())
}
