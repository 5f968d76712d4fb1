//! Verifiers for the γ_sp modification bounds.
//!
//! Each checker computes both sides of an inequality and the quantity it
//! sandwiches, using the exact solver, and returns a [`BoundReport`]. The
//! inequalities are theorems, so a report with `holds == false` means the
//! solver or a graph operator is wrong; callers treat it as fatal.
//!
//! | theorem id                     | lhs          | middle      | rhs                     |
//! |--------------------------------|--------------|-------------|-------------------------|
//! | `edge_removal`                 | γ(G) − 1     | γ(G − e)    | γ(G) + 1                |
//! | `edge_contraction`             | γ(G) − 1     | γ(G / e)    | γ(G)                    |
//! | `vertex_removal`               | γ(G) − 1     | γ(G − v)    | γ(G)                    |
//! | `vertex_contraction_pendant`   | γ(G) − 1     | γ(G / v)    | γ(G)                    |
//! | `vertex_contraction_nonpendant`| γ(G) − 1     | γ(G / v)    | γ(G) + ⌊deg v / 2⌋ − 1  |
//! | `corollary_alpha`              | α − ½        | γ(G)        | α + 1                   |
//! | `corollary_beta`               | β            | γ(G)        | β + 1                   |
//! | `corollary_theta`              | θ − ½        | γ(G)        | θ + 1                   |
//! | `theorem1`                     | ⌈n/2⌉        | γ(G)        | n − 1                   |
//!
//! (γ here is γ_sp.) α, β and θ are half the sum γ(G − x) + γ(G / x) for the
//! operand x; since γ(G) is an integer the interval check is equivalent to
//! the two-way membership split on whether that half-sum is integral.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::families::{theorem1_bounds, FamilyError, FamilySpec};
use crate::graph::{Edge, Graph, GraphError};
use crate::scan::{with_workers, Workers};
use crate::solver::{super_domination_number, SolveError, SolveOptions};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoremError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("vertex {vertex} is not pendant (degree {degree})")]
    NotPendant { vertex: usize, degree: usize },
    #[error("vertex {vertex} has degree {degree}, expected 2")]
    DegreeNotTwo { vertex: usize, degree: usize },
    #[error("gap witness needs n >= 1")]
    GapOrder,
    #[error("solver disagrees with the gap construction for n = {n}: got {before} -> {after}")]
    GapMismatch { n: usize, before: usize, after: usize },
    #[error("corollary membership disagrees with its interval: {0}")]
    Inconsistent(String),
}

/// A value in ½ℤ, stored doubled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(i64);

impl HalfInt {
    pub fn from_int(v: i64) -> Self {
        Self(2 * v)
    }

    pub fn from_doubled(doubled: i64) -> Self {
        Self(doubled)
    }

    pub fn doubled(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn as_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }
}

impl From<usize> for HalfInt {
    fn from(v: usize) -> Self {
        Self::from_int(v as i64)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            let sign = if self.0 < 0 { "-" } else { "" };
            write!(f, "{sign}{}.5", self.0.abs() / 2)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    EdgeRemoval,
    EdgeContraction,
    VertexRemoval,
    VertexContractionPendant,
    VertexContractionNonpendant,
    CorollaryAlpha,
    CorollaryBeta,
    CorollaryTheta,
    Theorem1,
}

impl TheoremId {
    pub const ALL: [TheoremId; 9] = [
        TheoremId::EdgeRemoval,
        TheoremId::EdgeContraction,
        TheoremId::VertexRemoval,
        TheoremId::VertexContractionPendant,
        TheoremId::VertexContractionNonpendant,
        TheoremId::CorollaryAlpha,
        TheoremId::CorollaryBeta,
        TheoremId::CorollaryTheta,
        TheoremId::Theorem1,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremId::EdgeRemoval => "edge_removal",
            TheoremId::EdgeContraction => "edge_contraction",
            TheoremId::VertexRemoval => "vertex_removal",
            TheoremId::VertexContractionPendant => "vertex_contraction_pendant",
            TheoremId::VertexContractionNonpendant => "vertex_contraction_nonpendant",
            TheoremId::CorollaryAlpha => "corollary_alpha",
            TheoremId::CorollaryBeta => "corollary_beta",
            TheoremId::CorollaryTheta => "corollary_theta",
            TheoremId::Theorem1 => "theorem1",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// What a check was applied to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Operand {
    Graph,
    Edge(Edge),
    Vertex(usize),
}

impl fmt::Display for Operand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Operand::Graph => write!(f, "graph"),
            Operand::Edge(e) => write!(f, "edge:{e}"),
            Operand::Vertex(v) => write!(f, "vertex:{v}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub theorem: TheoremId,
    pub operand: Operand,
    pub lhs: HalfInt,
    pub middle: HalfInt,
    pub rhs: HalfInt,
    pub holds: bool,
    pub sharp_low: bool,
    pub sharp_high: bool,
    /// Set when a vertex contraction was applied to an isolated vertex and is
    /// therefore reported under `vertex_removal`.
    pub isolated_contraction: bool,
}

impl BoundReport {
    pub fn new(
        theorem: TheoremId,
        operand: Operand,
        lhs: impl Into<HalfInt>,
        middle: impl Into<HalfInt>,
        rhs: impl Into<HalfInt>,
    ) -> Self {
        let (lhs, middle, rhs) = (lhs.into(), middle.into(), rhs.into());
        Self {
            theorem,
            operand,
            lhs,
            middle,
            rhs,
            holds: lhs <= middle && middle <= rhs,
            sharp_low: middle == lhs,
            sharp_high: middle == rhs,
            isolated_contraction: false,
        }
    }

    fn sort_key(&self) -> (TheoremId, Operand, bool) {
        (self.theorem, self.operand, self.isolated_contraction)
    }
}

/// `γ(G) − 1`; only the empty graph makes this negative.
fn minus_one(v: usize) -> HalfInt {
    HalfInt::from_int(v as i64 - 1)
}

/// Membership form of the corollaries: for `sum = γ(G − x) + γ(G / x)`,
/// half-sum h = sum / 2, return whether γ(G) lies in the set the corollary
/// names. alpha/theta: {h, h+1} if h ∈ ℤ else {h−½, h+½}. beta: {h, h+1} if
/// h ∈ ℤ else {h+½}.
pub fn corollary_membership(theorem: TheoremId, sum: usize, gamma: usize) -> bool {
    let (s, g2) = (sum as i64, 2 * gamma as i64);
    let even = s % 2 == 0;
    match theorem {
        TheoremId::CorollaryAlpha | TheoremId::CorollaryTheta => {
            if even {
                g2 == s || g2 == s + 2
            } else {
                g2 == s - 1 || g2 == s + 1
            }
        }
        TheoremId::CorollaryBeta => {
            if even {
                g2 == s || g2 == s + 2
            } else {
                g2 == s + 1
            }
        }
        _ => panic!("{theorem} is not a corollary"),
    }
}

struct Checker<'a> {
    g: &'a Graph,
    opts: SolveOptions,
    base: usize,
}

impl<'a> Checker<'a> {
    fn new(g: &'a Graph, opts: &SolveOptions) -> Result<Self, TheoremError> {
        let base = super_domination_number(g, opts)?.value;
        Ok(Self { g, opts: *opts, base })
    }

    fn gamma(&self, h: &Graph) -> Result<usize, TheoremError> {
        Ok(super_domination_number(h, &self.opts)?.value)
    }

    fn edge_reports(&self, e: Edge) -> Result<[BoundReport; 3], TheoremError> {
        let removed = self.gamma(&self.g.remove_edge(e)?)?;
        let contracted = self.gamma(&self.g.contract_edge(e)?)?;
        Ok([
            self.edge_removal(e, removed),
            self.edge_contraction(e, contracted),
            self.alpha(e, removed, contracted),
        ])
    }

    fn edge_removal(&self, e: Edge, removed: usize) -> BoundReport {
        BoundReport::new(
            TheoremId::EdgeRemoval,
            Operand::Edge(e),
            minus_one(self.base),
            removed,
            self.base + 1,
        )
    }

    fn edge_contraction(&self, e: Edge, contracted: usize) -> BoundReport {
        BoundReport::new(
            TheoremId::EdgeContraction,
            Operand::Edge(e),
            minus_one(self.base),
            contracted,
            self.base,
        )
    }

    fn alpha(&self, e: Edge, removed: usize, contracted: usize) -> BoundReport {
        let sum = (removed + contracted) as i64;
        BoundReport::new(
            TheoremId::CorollaryAlpha,
            Operand::Edge(e),
            HalfInt::from_doubled(sum - 1),
            self.base,
            HalfInt::from_doubled(sum + 2),
        )
    }

    fn vertex_removal(&self, v: usize, removed: usize) -> BoundReport {
        BoundReport::new(
            TheoremId::VertexRemoval,
            Operand::Vertex(v),
            minus_one(self.base),
            removed,
            self.base,
        )
    }

    fn vertex_contraction(&self, v: usize, degree: usize, contracted: usize) -> BoundReport {
        let op = Operand::Vertex(v);
        let lhs = minus_one(self.base);
        match degree {
            0 => {
                let mut r = BoundReport::new(TheoremId::VertexRemoval, op, lhs, contracted, self.base);
                r.isolated_contraction = true;
                r
            }
            1 => BoundReport::new(TheoremId::VertexContractionPendant, op, lhs, contracted, self.base),
            d => BoundReport::new(
                TheoremId::VertexContractionNonpendant,
                op,
                lhs,
                contracted,
                self.base + d / 2 - 1,
            ),
        }
    }

    fn beta(&self, v: usize, removed: usize, contracted: usize) -> BoundReport {
        let sum = (removed + contracted) as i64;
        BoundReport::new(
            TheoremId::CorollaryBeta,
            Operand::Vertex(v),
            HalfInt::from_doubled(sum),
            self.base,
            HalfInt::from_doubled(sum + 2),
        )
    }

    fn theta(&self, v: usize, removed: usize, contracted: usize) -> BoundReport {
        let sum = (removed + contracted) as i64;
        BoundReport::new(
            TheoremId::CorollaryTheta,
            Operand::Vertex(v),
            HalfInt::from_doubled(sum - 1),
            self.base,
            HalfInt::from_doubled(sum + 2),
        )
    }

    fn vertex_reports(&self, v: usize) -> Result<Vec<BoundReport>, TheoremError> {
        let degree = self.g.degree(v)?;
        let removed = self.gamma(&self.g.remove_vertex(v)?)?;
        let contracted = self.gamma(&self.g.contract_vertex(v)?)?;
        let mut out = vec![
            self.vertex_removal(v, removed),
            self.vertex_contraction(v, degree, contracted),
        ];
        match degree {
            1 => out.push(self.beta(v, removed, contracted)),
            2 => out.push(self.theta(v, removed, contracted)),
            _ => {}
        }
        Ok(out)
    }
}

pub fn check_edge_removal(g: &Graph, e: Edge, opts: &SolveOptions) -> Result<BoundReport, TheoremError> {
    let c = Checker::new(g, opts)?;
    let removed = c.gamma(&g.remove_edge(e)?)?;
    Ok(c.edge_removal(e, removed))
}

pub fn check_edge_contraction(g: &Graph, e: Edge, opts: &SolveOptions) -> Result<BoundReport, TheoremError> {
    let c = Checker::new(g, opts)?;
    let contracted = c.gamma(&g.contract_edge(e)?)?;
    Ok(c.edge_contraction(e, contracted))
}

pub fn check_vertex_removal(g: &Graph, v: usize, opts: &SolveOptions) -> Result<BoundReport, TheoremError> {
    let c = Checker::new(g, opts)?;
    let removed = c.gamma(&g.remove_vertex(v)?)?;
    Ok(c.vertex_removal(v, removed))
}

/// Pendant and non-pendant contraction bounds, chosen by `deg(v)`. An
/// isolated `v` is reported as `vertex_removal` with `isolated_contraction` set.
pub fn check_vertex_contraction(g: &Graph, v: usize, opts: &SolveOptions) -> Result<BoundReport, TheoremError> {
    let degree = g.degree(v)?;
    let c = Checker::new(g, opts)?;
    let contracted = c.gamma(&g.contract_vertex(v)?)?;
    Ok(c.vertex_contraction(v, degree, contracted))
}

pub fn check_corollary_alpha(g: &Graph, e: Edge, opts: &SolveOptions) -> Result<BoundReport, TheoremError> {
    let c = Checker::new(g, opts)?;
    let removed = c.gamma(&g.remove_edge(e)?)?;
    let contracted = c.gamma(&g.contract_edge(e)?)?;
    Ok(c.alpha(e, removed, contracted))
}

pub fn check_corollary_beta(g: &Graph, v: usize, opts: &SolveOptions) -> Result<BoundReport, TheoremError> {
    let degree = g.degree(v)?;
    if degree != 1 {
        return Err(TheoremError::NotPendant { vertex: v, degree });
    }
    let c = Checker::new(g, opts)?;
    let removed = c.gamma(&g.remove_vertex(v)?)?;
    let contracted = c.gamma(&g.contract_vertex(v)?)?;
    Ok(c.beta(v, removed, contracted))
}

pub fn check_corollary_theta(g: &Graph, v: usize, opts: &SolveOptions) -> Result<BoundReport, TheoremError> {
    let degree = g.degree(v)?;
    if degree != 2 {
        return Err(TheoremError::DegreeNotTwo { vertex: v, degree });
    }
    let c = Checker::new(g, opts)?;
    let removed = c.gamma(&g.remove_vertex(v)?)?;
    let contracted = c.gamma(&g.contract_vertex(v)?)?;
    Ok(c.theta(v, removed, contracted))
}

/// ⌈n/2⌉ ≤ γ_sp(G) ≤ n − 1 for a graph with at least one edge.
pub fn check_theorem1(g: &Graph, opts: &SolveOptions) -> Result<BoundReport, TheoremError> {
    let (lo, hi) = theorem1_bounds(g)?;
    let value = super_domination_number(g, opts)?.value;
    Ok(BoundReport::new(TheoremId::Theorem1, Operand::Graph, lo, value, hi))
}

/// Every applicable check over all edges and vertices, sorted by `(theorem, operand)`.
///
/// Per edge: `edge_removal`, `edge_contraction`, `corollary_alpha`. Per
/// vertex: `vertex_removal`, the contraction check matching its degree, plus
/// `corollary_beta` for pendant and `corollary_theta` for degree-2 vertices.
pub fn sweep(g: &Graph, opts: &SolveOptions) -> Result<Vec<BoundReport>, TheoremError> {
    let workers = Workers::from_count(opts.workers);
    // Inner solves stay sequential; the fan-out happens across operands.
    let inner = opts.with_workers(Some(1));
    let checker = Checker::new(g, &inner)?;
    let edges = g.edges();
    let vertices: Vec<usize> = (0..g.order()).collect();

    let (edge_reports, vertex_reports) = with_workers(workers, || {
        let edge_fn = |&e: &Edge| checker.edge_reports(e).map(Vec::from);
        let vertex_fn = |&v: &usize| checker.vertex_reports(v);
        if matches!(workers, Workers::Parallel(_)) {
            par_map(&edges, edge_fn).and_then(|er| Ok((er, par_map(&vertices, vertex_fn)?)))
        } else {
            let er = edges.iter().map(edge_fn).collect::<Result<Vec<_>, _>>()?;
            let vr = vertices.iter().map(vertex_fn).collect::<Result<Vec<_>, _>>()?;
            Ok((er, vr))
        }
    })?;

    let mut reports: Vec<BoundReport> = edge_reports.into_iter().chain(vertex_reports).flatten().collect();
    reports.sort_by_key(BoundReport::sort_key);
    cross_validate(&reports)?;
    Ok(reports)
}

#[cfg(feature = "parallel")]
fn par_map<T, R, F>(items: &[T], f: F) -> Result<Vec<R>, TheoremError>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Result<R, TheoremError> + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn par_map<T, R, F>(items: &[T], f: F) -> Result<Vec<R>, TheoremError>
where
    F: Fn(&T) -> Result<R, TheoremError>,
{
    items.iter().map(f).collect()
}

/// Re-derives each corollary's membership from its half-sum and compares it
/// with the interval verdict.
fn cross_validate(reports: &[BoundReport]) -> Result<(), TheoremError> {
    for r in reports {
        if !matches!(
            r.theorem,
            TheoremId::CorollaryAlpha | TheoremId::CorollaryBeta | TheoremId::CorollaryTheta
        ) {
            continue;
        }
        let sum = match r.theorem {
            TheoremId::CorollaryBeta => r.lhs.doubled(),
            _ => r.lhs.doubled() + 1,
        };
        let gamma = (r.middle.doubled() / 2) as usize;
        if corollary_membership(r.theorem, sum as usize, gamma) != r.holds {
            return Err(TheoremError::Inconsistent(format!("{} at {}", r.theorem, r.operand)));
        }
    }
    Ok(())
}

/// Per-theorem tallies over a set of reports.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub checks: usize,
    pub violations: usize,
    pub sharp_low: usize,
    pub sharp_high: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepSummary {
    pub by_theorem: BTreeMap<TheoremId, Tally>,
}

impl SweepSummary {
    pub fn add(&mut self, reports: &[BoundReport]) {
        for r in reports {
            let t = self.by_theorem.entry(r.theorem).or_default();
            t.checks += 1;
            t.violations += usize::from(!r.holds);
            t.sharp_low += usize::from(r.sharp_low);
            t.sharp_high += usize::from(r.sharp_high);
        }
    }

    pub fn from_reports(reports: &[BoundReport]) -> Self {
        let mut s = Self::default();
        s.add(reports);
        s
    }

    pub fn checks(&self) -> usize {
        self.by_theorem.values().map(|t| t.checks).sum()
    }

    pub fn violations(&self) -> usize {
        self.by_theorem.values().map(|t| t.violations).sum()
    }
}

/// The friendship graph F_{n+2}, whose hub contraction raises γ_sp by exactly n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapWitness {
    pub n: usize,
    pub graph: Graph,
    pub hub: usize,
    pub gamma_sp_before: usize,
    pub gamma_sp_after: usize,
    /// Both values were recomputed by the exact solver.
    pub verified: bool,
}

/// Default largest `n` whose gap witness is re-solved.
pub const GAP_VERIFY_MAX: usize = 5;

/// Builds the witness for gap `n`; re-solves it when `n <= verify_max` and
/// both graphs fit under the solver limit.
pub fn gap_witness(n: usize, verify_max: usize, opts: &SolveOptions) -> Result<GapWitness, TheoremError> {
    if n == 0 {
        return Err(TheoremError::GapOrder);
    }
    let spec = FamilySpec::Friendship(n + 2);
    let graph = spec.generate()?;
    let hub = 0;
    let before = n + 3;
    let after = 2 * n + 3;
    let verified = n <= verify_max && graph.order() <= opts.limit;
    if verified {
        let contracted = graph.contract_vertex(hub)?;
        debug_assert_eq!(contracted, FamilySpec::Complete(2 * n + 4).generate()?);
        let got_before = super_domination_number(&graph, opts)?.value;
        let got_after = super_domination_number(&contracted, opts)?.value;
        if (got_before, got_after) != (before, after) {
            return Err(TheoremError::GapMismatch {
                n,
                before: got_before,
                after: got_after,
            });
        }
    }
    Ok(GapWitness {
        n,
        graph,
        hub,
        gamma_sp_before: before,
        gamma_sp_after: after,
        verified,
    })
}
