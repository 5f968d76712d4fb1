//! Graph ingestion and report serialization.
//!
//! Native edge-list format (0-based):
//!
//! ```text
//! # comments start with '#', anywhere on a line
//! 3        # first non-comment line: vertex count
//! 0 1
//! 1 2
//! ```
//!
//! Loops, duplicate edges and out-of-range endpoints are errors.
//!
//! DIMACS (1-based): `c` comment lines, one `p edge <n> <m>` line, then
//! `e <u> <v>` lines. Duplicate edges are dropped with a warning since
//! DIMACS files found in the wild often list both orientations.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::Graph;
use crate::theorems::{BoundReport, SweepSummary};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    /// 1-based line number; 0 when the error concerns the whole document.
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing vertex count")]
    MissingVertexCount,
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for {order} vertices")]
    OutOfRange { vertex: usize, order: usize },
    #[error("missing problem line")]
    MissingProblemLine,
    #[error("duplicate problem line")]
    DuplicateProblemLine,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseWarning {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

fn parse_vertex(token: &str, line: usize) -> Result<usize, ParseError> {
    token.parse::<usize>().map_err(|_| {
        err(
            line,
            ParseErrorKind::Malformed(format!("expected a vertex id, got {token:?}")),
        )
    })
}

/// Accumulates edges with per-line diagnostics.
struct EdgeCollector {
    order: usize,
    edges: Vec<(usize, usize)>,
}

impl EdgeCollector {
    fn new(order: usize) -> Self {
        Self {
            order,
            edges: Vec::new(),
        }
    }

    fn seen(&self, u: usize, v: usize) -> bool {
        self.edges.iter().any(|&e| e == (u.min(v), u.max(v)))
    }

    /// `Ok(false)` for a duplicate when `dedupe` is set.
    fn add(&mut self, u: usize, v: usize, line: usize, dedupe: bool) -> Result<bool, ParseError> {
        for x in [u, v] {
            if x >= self.order {
                return Err(err(
                    line,
                    ParseErrorKind::OutOfRange {
                        vertex: x,
                        order: self.order,
                    },
                ));
            }
        }
        if u == v {
            return Err(err(line, ParseErrorKind::SelfLoop(u)));
        }
        if self.seen(u, v) {
            return if dedupe {
                Ok(false)
            } else {
                Err(err(line, ParseErrorKind::DuplicateEdge(u, v)))
            };
        }
        self.edges.push((u.min(v), u.max(v)));
        Ok(true)
    }

    fn finish(self) -> Graph {
        Graph::from_edges(self.order, self.edges).expect("edges validated while parsing")
    }
}

/// Parses the native 0-based edge-list format.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut collector: Option<EdgeCollector> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match &mut collector {
            None => {
                let [count] = tokens.as_slice() else {
                    return Err(err(
                        line,
                        ParseErrorKind::Malformed("expected a single vertex count".into()),
                    ));
                };
                collector = Some(EdgeCollector::new(parse_vertex(count, line)?));
            }
            Some(c) => {
                let [a, b] = tokens.as_slice() else {
                    return Err(err(line, ParseErrorKind::Malformed("expected two vertex ids".into())));
                };
                let (u, v) = (parse_vertex(a, line)?, parse_vertex(b, line)?);
                c.add(u, v, line, false)?;
            }
        }
    }
    collector
        .map(EdgeCollector::finish)
        .ok_or_else(|| err(0, ParseErrorKind::MissingVertexCount))
}

/// Parses DIMACS, relabeling vertex `k` to `k - 1`. Returns the warnings
/// (duplicate edges, edge-count mismatch) alongside the graph.
pub fn parse_dimacs(text: &str) -> Result<(Graph, Vec<ParseWarning>), ParseError> {
    let mut collector: Option<(EdgeCollector, usize)> = None;
    let mut warnings = Vec::new();
    let mut e_lines = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        match tokens.as_slice() {
            [] => continue,
            ["c", ..] => continue,
            ["p", _format, n, m] => {
                if collector.is_some() {
                    return Err(err(line, ParseErrorKind::DuplicateProblemLine));
                }
                let n = parse_vertex(n, line)?;
                let m = parse_vertex(m, line)?;
                collector = Some((EdgeCollector::new(n), m));
            }
            ["e", a, b] => {
                let Some((c, _)) = &mut collector else {
                    return Err(err(line, ParseErrorKind::MissingProblemLine));
                };
                let (a, b) = (parse_vertex(a, line)?, parse_vertex(b, line)?);
                if a == 0 || b == 0 {
                    let order = c.order;
                    return Err(err(line, ParseErrorKind::OutOfRange { vertex: 0, order }));
                }
                e_lines += 1;
                if !c.add(a - 1, b - 1, line, true)? {
                    let message = format!("duplicate edge {a} {b} ignored");
                    log::warn!("line {line}: {message}");
                    warnings.push(ParseWarning { line, message });
                }
            }
            _ => {
                return Err(err(line, ParseErrorKind::Malformed(raw.trim().to_string())));
            }
        }
    }
    let (collector, declared) = collector.ok_or_else(|| err(0, ParseErrorKind::MissingProblemLine))?;
    if declared != e_lines {
        let message = format!("problem line declares {declared} edges, found {e_lines}");
        log::warn!("{message}");
        warnings.push(ParseWarning { line: 0, message });
    }
    Ok((collector.finish(), warnings))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.u(), e.v());
    }
    out
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.order(), g.size());
    for e in g.edges() {
        let _ = writeln!(out, "e {} {}", e.u() + 1, e.v() + 1);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportFormat {
    /// One `key=value` record per line.
    #[default]
    Records,
    /// Aligned columns followed by per-theorem tallies.
    Table,
}

const COLUMNS: [&str; 8] = [
    "theorem_id",
    "operand",
    "lhs",
    "middle",
    "rhs",
    "holds",
    "sharp_low",
    "sharp_high",
];

fn cells(r: &BoundReport) -> [String; 8] {
    [
        r.theorem.to_string(),
        r.operand.to_string(),
        r.lhs.to_string(),
        r.middle.to_string(),
        r.rhs.to_string(),
        r.holds.to_string(),
        r.sharp_low.to_string(),
        r.sharp_high.to_string(),
    ]
}

/// One report as a `key=value` record in the fixed key order.
pub fn write_record(r: &BoundReport) -> String {
    let mut out = COLUMNS
        .iter()
        .zip(cells(r))
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ");
    if r.isolated_contraction {
        out.push_str(" isolated_contraction=true");
    }
    out
}

pub fn write_report(reports: &[BoundReport], format: ReportFormat) -> String {
    match format {
        ReportFormat::Records => {
            let mut out = format!("# bound_reports count={}\n", reports.len());
            for r in reports {
                out.push_str(&write_record(r));
                out.push('\n');
            }
            out
        }
        ReportFormat::Table => {
            let rows: Vec<[String; 8]> = reports.iter().map(cells).collect();
            let mut widths = COLUMNS.map(str::len);
            for row in &rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.len());
                }
            }
            let mut out = String::new();
            let mut push_row = |cols: &[&str]| {
                let line: Vec<String> = cols.iter().zip(widths).map(|(c, w)| format!("{c:<w$}")).collect();
                out.push_str(line.join("  ").trim_end());
                out.push('\n');
            };
            push_row(&COLUMNS);
            for row in &rows {
                push_row(&row.iter().map(String::as_str).collect::<Vec<_>>());
            }
            out.push_str(&write_summary(&SweepSummary::from_reports(reports)));
            out
        }
    }
}

/// Per-theorem tallies, one line each, plus a total line.
pub fn write_summary(summary: &SweepSummary) -> String {
    let mut out = String::new();
    for (theorem, t) in &summary.by_theorem {
        let _ = writeln!(
            out,
            "# {theorem}: checks={} violations={} sharp_low={} sharp_high={}",
            t.checks, t.violations, t.sharp_low, t.sharp_high
        );
    }
    let _ = writeln!(
        out,
        "# total: checks={} violations={}",
        summary.checks(),
        summary.violations()
    );
    out
}
