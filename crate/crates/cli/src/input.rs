//! Graph sources and argument value types.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, ValueEnum};
use superdom_core::io::{parse_dimacs, parse_edge_list};
use superdom_core::random::gnp_graphs;
use superdom_core::{FamilySpec, Graph};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    /// DIMACS if the first content line is a `p` line, otherwise native.
    Auto,
    Native,
    Dimacs,
}

/// Exactly one of a file path or `--family`.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Graph file in native edge-list or DIMACS format.
    pub path: Option<PathBuf>,
    /// Generated family, e.g. `path:7`, `kbip:2,3`, `dutch:2,8`.
    #[arg(long)]
    pub family: Option<FamilySpec>,
}

#[derive(Debug, Clone)]
pub struct Labeled {
    pub label: String,
    pub graph: Graph,
}

impl Source {
    pub fn load(&self, format: InputFormat) -> Result<Labeled, CliError> {
        match (&self.path, &self.family) {
            (_, Some(spec)) => load_family(spec),
            (Some(path), None) => load_file(path, format),
            (None, None) => Err(CliError::Usage("no input given".into())),
        }
    }
}

pub fn load_family(spec: &FamilySpec) -> Result<Labeled, CliError> {
    let graph = spec.generate().map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(Labeled {
        label: format!("family:{spec}"),
        graph,
    })
}

pub fn load_file(path: &Path, format: InputFormat) -> Result<Labeled, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    let dimacs = match format {
        InputFormat::Native => false,
        InputFormat::Dimacs => true,
        InputFormat::Auto => looks_like_dimacs(&text),
    };
    let graph = if dimacs {
        parse_dimacs(&text).map(|(g, _)| g)
    } else {
        parse_edge_list(&text)
    }
    .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    Ok(Labeled {
        label: format!("file:{}", path.display()),
        graph,
    })
}

fn looks_like_dimacs(text: &str) -> bool {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty() && *l != "c" && !l.starts_with("c "))
        .is_some_and(|l| l.starts_with('p'))
}

/// `n,p,seed,count` for G(n, p) corpora.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomSpec {
    pub n: usize,
    pub p: f64,
    pub seed: u64,
    pub count: usize,
}

impl RandomSpec {
    pub fn graphs(&self) -> Vec<Labeled> {
        gnp_graphs(self.n, self.p, self.seed, self.count)
            .into_iter()
            .enumerate()
            .map(|(i, graph)| Labeled {
                label: format!("random:{},{},{}#{i}", self.n, self.p, self.seed),
                graph,
            })
            .collect()
    }
}

impl FromStr for RandomSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let [n, p, seed, count] = parts.as_slice() else {
            return Err(format!("expected n,p,seed,count, got {s:?}"));
        };
        let p: f64 = p.parse().map_err(|_| format!("bad probability {p:?}"))?;
        if !(0.0..=1.0).contains(&p) {
            return Err(format!("probability {p} outside [0, 1]"));
        }
        Ok(Self {
            n: n.parse().map_err(|_| format!("bad vertex count {n:?}"))?,
            p,
            seed: seed.parse().map_err(|_| format!("bad seed {seed:?}"))?,
            count: count.parse().map_err(|_| format!("bad count {count:?}"))?,
        })
    }
}

impl fmt::Display for RandomSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} p={} seed={} count={}", self.n, self.p, self.seed, self.count)
    }
}

/// `u,v` edge operand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeArg(pub usize, pub usize);

impl FromStr for EdgeArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (u, v) = s.split_once(',').ok_or_else(|| format!("expected u,v, got {s:?}"))?;
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad vertex {t:?}"));
        Ok(Self(parse(u)?, parse(v)?))
    }
}
