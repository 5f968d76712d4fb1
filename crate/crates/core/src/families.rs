//! Named graph families, their canonical labelings, and the known exact
//! values and bounds of γ_sp on them.
//!
//! Canonical labelings:
//! - `path:n`, `cycle:n`: consecutive integers along the path or cycle.
//! - `kbip:n,m`: parts `{0..n-1}` and `{n..n+m-1}`; `star:n` is `kbip:1,n` with center 0.
//! - `friendship:n`, `dutch:n,m`: hub 0, then copy `c` occupies
//!   `1 + c(m-1) ..= c(m-1) + m-1` in cycle order, closing back at the hub.
//!   `friendship:n` and `dutch:n,3` produce equal graphs.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid family parameters: {0}")]
    InvalidParameters(String),
    #[error("cannot parse family spec {text:?}: {reason}")]
    Parse { text: String, reason: String },
    #[error("the bound needs at least one edge")]
    Edgeless,
    #[error("windmill bound needs cycle length m >= 4, got {0}")]
    WindmillTooShort(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    Friendship(usize),
    /// `copies` cycles of length `cycle_len` sharing one hub.
    DutchWindmill {
        copies: usize,
        cycle_len: usize,
    },
}

/// Whether a closed-form value is a general formula for the family or a
/// small-case value outside the formula's stated range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValueSource {
    Formula,
    SmallCase,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosedForm {
    pub value: usize,
    pub source: ValueSource,
}

impl ClosedForm {
    fn formula(value: usize) -> Option<Self> {
        Some(Self {
            value,
            source: ValueSource::Formula,
        })
    }

    fn small_case(value: usize) -> Option<Self> {
        Some(Self {
            value,
            source: ValueSource::SmallCase,
        })
    }
}

impl FamilySpec {
    pub fn validate(&self) -> Result<(), FamilyError> {
        let bad = |msg: String| Err(FamilyError::InvalidParameters(msg));
        match *self {
            FamilySpec::Path(0) | FamilySpec::Complete(0) => bad(format!("{self}: n must be >= 1")),
            FamilySpec::Cycle(n) if n < 3 => bad(format!("{self}: cycles need n >= 3")),
            FamilySpec::CompleteBipartite(n, m) if n == 0 || m == 0 => {
                bad(format!("{self}: both parts must be non-empty"))
            }
            FamilySpec::Star(0) | FamilySpec::Friendship(0) => bad(format!("{self}: n must be >= 1")),
            FamilySpec::DutchWindmill { copies, cycle_len } if copies == 0 || cycle_len < 3 => {
                bad(format!("{self}: needs n >= 1 and m >= 3"))
            }
            _ => Ok(()),
        }
    }

    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Path(n) | FamilySpec::Cycle(n) | FamilySpec::Complete(n) => n,
            FamilySpec::CompleteBipartite(n, m) => n + m,
            FamilySpec::Star(n) => n + 1,
            FamilySpec::Friendship(n) => 2 * n + 1,
            FamilySpec::DutchWindmill { copies, cycle_len } => 1 + copies * (cycle_len - 1),
        }
    }

    pub fn generate(&self) -> Result<Graph, FamilyError> {
        self.validate()?;
        let n = self.order();
        let edges: Vec<(usize, usize)> = match *self {
            FamilySpec::Path(k) => (1..k).map(|i| (i - 1, i)).collect(),
            FamilySpec::Cycle(k) => (0..k).map(|i| (i, (i + 1) % k)).collect(),
            FamilySpec::Complete(k) => (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v))).collect(),
            FamilySpec::CompleteBipartite(a, b) => (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect(),
            FamilySpec::Star(k) => (1..=k).map(|v| (0, v)).collect(),
            FamilySpec::Friendship(copies) => windmill_edges(copies, 3),
            FamilySpec::DutchWindmill { copies, cycle_len } => windmill_edges(copies, cycle_len),
        };
        Graph::from_edges(n, edges).map_err(|e| FamilyError::InvalidParameters(format!("{self}: {e}")))
    }

    /// Exact γ_sp when a closed form is known; `None` otherwise.
    pub fn closed_form_gamma_sp(&self) -> Option<ClosedForm> {
        if self.validate().is_err() {
            return None;
        }
        match *self {
            FamilySpec::Path(n) if n >= 3 => ClosedForm::formula(n.div_ceil(2)),
            FamilySpec::Path(_) => ClosedForm::small_case(1),
            FamilySpec::Cycle(n) => ClosedForm::formula(cycle_gamma_sp(n)),
            FamilySpec::Complete(1) => ClosedForm::small_case(1),
            FamilySpec::Complete(n) => ClosedForm::formula(n - 1),
            // A star K_{1,m} needs every leaf but one plus the center (or all
            // leaves), so it takes m rather than n + m − 2.
            FamilySpec::CompleteBipartite(n, m) if n.min(m) == 1 => ClosedForm::formula(n.max(m)),
            FamilySpec::CompleteBipartite(n, m) => ClosedForm::formula(n + m - 2),
            FamilySpec::Star(m) => ClosedForm::formula(m),
            FamilySpec::Friendship(n) => ClosedForm::formula(n + 1),
            FamilySpec::DutchWindmill { copies, cycle_len: 3 } => ClosedForm::formula(copies + 1),
            FamilySpec::DutchWindmill { copies, cycle_len } if cycle_len % 2 == 1 => {
                ClosedForm::formula(copies * (cycle_len - 1) / 2 + 1)
            }
            FamilySpec::DutchWindmill { .. } => None,
        }
    }
}

fn windmill_edges(copies: usize, cycle_len: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::with_capacity(copies * cycle_len);
    for c in 0..copies {
        let base = 1 + c * (cycle_len - 1);
        let ring: Vec<usize> = std::iter::once(0).chain(base..base + cycle_len - 1).collect();
        for i in 0..cycle_len {
            edges.push((ring[i], ring[(i + 1) % cycle_len]));
        }
    }
    edges
}

fn cycle_gamma_sp(n: usize) -> usize {
    match n % 4 {
        0 | 3 => n.div_ceil(2),
        _ => (n + 1).div_ceil(2),
    }
}

/// Upper bound n·⌈(m−1)/2⌉ + 1 on γ_sp of the windmill with n copies of C_m, m ≥ 4.
pub fn dutch_upper_bound(n: usize, m: usize) -> Result<usize, FamilyError> {
    if m < 4 {
        return Err(FamilyError::WindmillTooShort(m));
    }
    if n == 0 {
        return Err(FamilyError::InvalidParameters("windmill needs n >= 1".into()));
    }
    Ok(n * (m - 1).div_ceil(2) + 1)
}

/// `(⌈n/2⌉, n − 1)`, the sandwich every graph with at least one edge satisfies.
pub fn theorem1_bounds(g: &Graph) -> Result<(usize, usize), FamilyError> {
    if g.size() == 0 {
        return Err(FamilyError::Edgeless);
    }
    let n = g.order();
    Ok((n.div_ceil(2), n - 1))
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::CompleteBipartite(n, m) => write!(f, "kbip:{n},{m}"),
            FamilySpec::Star(n) => write!(f, "star:{n}"),
            FamilySpec::Friendship(n) => write!(f, "friendship:{n}"),
            FamilySpec::DutchWindmill { copies, cycle_len } => write!(f, "dutch:{copies},{cycle_len}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(text: &str) -> Result<Self, FamilyError> {
        let fail = |reason: &str| FamilyError::Parse {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let (kind, params) = text
            .trim()
            .split_once(':')
            .ok_or_else(|| fail("expected kind:params"))?;
        let nums = params
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| fail("parameters must be non-negative integers"))?;
        let spec = match (kind.trim(), nums.as_slice()) {
            ("path", [n]) => FamilySpec::Path(*n),
            ("cycle", [n]) => FamilySpec::Cycle(*n),
            ("complete", [n]) => FamilySpec::Complete(*n),
            ("kbip", [n, m]) => FamilySpec::CompleteBipartite(*n, *m),
            ("star", [n]) => FamilySpec::Star(*n),
            ("friendship", [n]) => FamilySpec::Friendship(*n),
            ("dutch", [n, m]) => FamilySpec::DutchWindmill {
                copies: *n,
                cycle_len: *m,
            },
            ("path" | "cycle" | "complete" | "star" | "friendship" | "kbip" | "dutch", _) => {
                return Err(fail("wrong number of parameters"))
            }
            _ => return Err(fail("unknown family")),
        };
        spec.validate()?;
        Ok(spec)
    }
}
