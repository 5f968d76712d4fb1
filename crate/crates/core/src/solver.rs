//! Dominating / super dominating set checkers and exact solvers for γ and γ_sp.
//!
//! `super_domination_number` works component by component. For a component
//! with at least one edge it enumerates candidate complements S̄ level by
//! level, from |S̄| = ⌊n_c/2⌋ down to 0. The first level holding a valid S̄
//! fixes γ_sp = n_c − |S̄|; that whole level is scanned so the returned
//! witness is the lexicographically smallest optimum. An isolated vertex
//! can never have a private external dominator, so it always belongs to S.
//!
//! `super_domination_naive` is the independent oracle: plain 2^n enumeration
//! through the [`VertexSet`] checker, with no decomposition and no pruning.

use std::fmt;

use thiserror::Error;

use crate::graph::Graph;
use crate::scan::{scan_level, with_workers, Workers};
use crate::vertex_set::VertexSet;

/// Default largest component order the exact solver accepts.
pub const DEFAULT_LIMIT: usize = 28;
/// Hard cap for the naive 2^n oracle.
pub const NAIVE_LIMIT: usize = 14;
/// Components are searched as 64-bit masks.
pub const MAX_LIMIT: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("component of order {order} exceeds the solver limit of {limit}")]
    ExceedsLimit { order: usize, limit: usize },
    #[error("solver limit {0} exceeds the maximum of {MAX_LIMIT}")]
    LimitTooLarge(usize),
    #[error("naive oracle is capped at {NAIVE_LIMIT} vertices, got {0}")]
    OracleCap(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    /// Largest component order accepted.
    pub limit: usize,
    /// Worker threads; `None` lets rayon decide, `Some(1)` forces the sequential path.
    pub workers: Option<usize>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            limit: DEFAULT_LIMIT,
            workers: None,
        }
    }
}

impl SolveOptions {
    pub fn sequential() -> Self {
        Self {
            workers: Some(1),
            ..Self::default()
        }
    }

    pub fn with_limit(mut self, limit: usize) -> Self {
        self.limit = limit;
        self
    }

    pub fn with_workers(mut self, workers: Option<usize>) -> Self {
        self.workers = workers;
        self
    }
}

/// How the subset levels were enumerated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Sequential,
    Parallel { workers: usize },
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Strategy::Sequential => write!(f, "complement-colex/sequential"),
            Strategy::Parallel { workers } => write!(f, "complement-colex/parallel:{workers}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    /// γ_sp of the input graph.
    pub value: usize,
    /// Lexicographically smallest minimum super dominating set.
    pub witness: VertexSet,
    pub subsets_examined: u64,
    pub strategy: Strategy,
}

/// Every vertex outside `s` has a neighbour in `s`.
pub fn is_dominating(g: &Graph, s: &VertexSet) -> bool {
    assert_eq!(s.universe(), g.order(), "vertex set does not match graph order");
    s.complement()
        .iter()
        .all(|u| g.neighbors(u).map(|nbrs| !nbrs.is_disjoint(s)).unwrap_or(false))
}

/// Every u ∈ S̄ has some v ∈ S with N(v) ∩ S̄ = {u}.
pub fn is_super_dominating(g: &Graph, s: &VertexSet) -> bool {
    assert_eq!(s.universe(), g.order(), "vertex set does not match graph order");
    let outside = s.complement();
    let mut marked = VertexSet::new(g.order());
    for v in s.iter() {
        let private = g.neighbors(v).expect("member in range").intersection(&outside);
        if private.len() == 1 {
            marked.insert(private.first().expect("singleton"));
        }
    }
    outside.is_subset(&marked)
}

/// Mask form of [`is_super_dominating`], phrased over the complement `outside`.
#[inline]
fn complement_is_valid(adj: &[u64], outside: u64) -> bool {
    let mut pending = outside;
    while pending != 0 {
        let u = pending.trailing_zeros() as usize;
        pending &= pending - 1;
        let target = 1u64 << u;
        let mut dominators = adj[u] & !outside;
        let mut found = false;
        while dominators != 0 {
            let v = dominators.trailing_zeros() as usize;
            if adj[v] & outside == target {
                found = true;
                break;
            }
            dominators &= dominators - 1;
        }
        if !found {
            return false;
        }
    }
    true
}

#[inline]
fn dominates(adj: &[u64], full: u64, s: u64) -> bool {
    let mut covered = s;
    let mut bits = s;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        covered |= adj[v];
        bits &= bits - 1;
    }
    covered == full
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Among equal-size sets S, the lexicographically smallest sorted sequence is
/// the one containing the lowest vertex where two candidates differ. Bit
/// reversal turns "lowest differing bit" into "highest differing bit".
#[inline]
fn lex_key_for_set(s: u64) -> u64 {
    s.reverse_bits()
}

/// S = V − S̄ within the component, so ordering by the reversed S flips to
/// ordering by the complemented reversed S̄.
#[inline]
fn lex_key_for_complement(outside: u64) -> u64 {
    !outside.reverse_bits()
}

fn check_limit(g: &Graph, limit: usize) -> Result<Vec<VertexSet>, SolveError> {
    if limit > MAX_LIMIT {
        return Err(SolveError::LimitTooLarge(limit));
    }
    let components = g.components();
    if let Some(big) = components.iter().find(|c| c.len() > limit) {
        return Err(SolveError::ExceedsLimit {
            order: big.len(),
            limit,
        });
    }
    Ok(components)
}

fn lift(component: &VertexSet, local: u64, into: &mut VertexSet) {
    for (i, v) in component.iter().enumerate() {
        if local >> i & 1 == 1 {
            into.insert(v);
        }
    }
}

/// Exact γ_sp with the lexicographically smallest optimal witness.
pub fn super_domination_number(g: &Graph, opts: &SolveOptions) -> Result<SolveResult, SolveError> {
    let components = check_limit(g, opts.limit)?;
    let workers = Workers::from_count(opts.workers);
    let mut witness = VertexSet::new(g.order());
    let mut examined = 0u64;

    with_workers(workers, || {
        for comp in &components {
            if comp.len() == 1 {
                witness.insert(comp.first().expect("non-empty"));
                continue;
            }
            let sub = g.induced(comp);
            let adj = sub.adjacency_masks();
            let nc = sub.order();
            for k in (0..=nc / 2).rev() {
                let level = scan_level(
                    nc,
                    k,
                    workers,
                    |outside| complement_is_valid(&adj, outside),
                    lex_key_for_complement,
                );
                examined += level.examined;
                if let Some(outside) = level.best {
                    lift(comp, full_mask(nc) & !outside, &mut witness);
                    break;
                }
            }
        }
    });

    let strategy = match workers {
        Workers::Sequential => Strategy::Sequential,
        w => Strategy::Parallel { workers: w.threads() },
    };
    Ok(SolveResult {
        value: witness.len(),
        witness,
        subsets_examined: examined,
        strategy,
    })
}

/// Exact γ with the lexicographically smallest minimum dominating set.
pub fn domination_number(g: &Graph, opts: &SolveOptions) -> Result<(usize, VertexSet), SolveError> {
    let components = check_limit(g, opts.limit)?;
    let workers = Workers::from_count(opts.workers);
    let mut witness = VertexSet::new(g.order());

    with_workers(workers, || {
        for comp in &components {
            let sub = g.induced(comp);
            let adj = sub.adjacency_masks();
            let nc = sub.order();
            let full = full_mask(nc);
            for k in 1..=nc {
                let level = scan_level(nc, k, workers, |s| dominates(&adj, full, s), lex_key_for_set);
                if let Some(s) = level.best {
                    lift(comp, s, &mut witness);
                    break;
                }
            }
        }
    });

    Ok((witness.len(), witness))
}

/// γ_sp by trying all 2^n subsets. Independent of the optimized path.
pub fn super_domination_naive(g: &Graph) -> Result<usize, SolveError> {
    let n = g.order();
    if n > NAIVE_LIMIT {
        return Err(SolveError::OracleCap(n));
    }
    let mut best = n;
    for mask in 0u64..1 << n {
        let size = mask.count_ones() as usize;
        if size < best && is_super_dominating(g, &VertexSet::from_mask(n, mask)) {
            best = size;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;
    use crate::random::gnp_graphs;
    use proptest::prelude::{any, prop_assert, prop_assert_eq, proptest, ProptestConfig};
    use proptest::strategy::Strategy as _;

    fn fam(text: &str) -> Graph {
        text.parse::<FamilySpec>().unwrap().generate().unwrap()
    }

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied())
    }

    fn solve(g: &Graph) -> SolveResult {
        super_domination_number(g, &SolveOptions::default()).unwrap()
    }

    /// Lexicographically smallest optimal super dominating set by brute force.
    fn brute_lexmin(g: &Graph) -> Vec<usize> {
        let n = g.order();
        (0u64..1 << n)
            .map(|m| VertexSet::from_mask(n, m))
            .filter(|s| is_super_dominating(g, s))
            .map(|s| (s.len(), s.to_vec()))
            .min()
            .unwrap()
            .1
    }

    #[test]
    fn dominating_examples() {
        let c4 = fam("cycle:4");
        assert!(is_dominating(&c4, &set(4, &[0, 2])));
        assert!(!is_dominating(&fam("path:3"), &set(3, &[0])));
        assert!(is_dominating(&c4, &VertexSet::full(4)));
        assert!(is_super_dominating(&c4, &VertexSet::full(4)));
    }

    #[test]
    fn super_dominating_examples() {
        let c4 = fam("cycle:4");
        assert!(!is_super_dominating(&c4, &set(4, &[0, 2])));
        assert!(is_super_dominating(&c4, &set(4, &[0, 1])));
        // Friendship: hub plus one vertex per triangle.
        for n in 1..=5 {
            let f = fam(&format!("friendship:{n}"));
            let d: Vec<usize> = std::iter::once(0).chain((0..n).map(|i| 1 + 2 * i)).collect();
            assert!(is_super_dominating(&f, &set(2 * n + 1, &d)));
        }
    }

    #[test]
    fn windmill_black_vertices() {
        // Hub 0; copies are the cycles 0-1-...-7-0 and 0-8-...-14-0.
        let g = fam("dutch:2,8");
        let black = [2, 3, 6, 7, 9, 10, 13, 14];
        let s = set(15, &black);
        assert!(is_super_dominating(&g, &s));
        assert_eq!(s.len(), 8);
    }

    #[test]
    fn checker_examples() {
        let c4 = fam("cycle:4");
        assert!(!is_dominating(&c4, &set(4, &[0])));
        assert!(!is_super_dominating(&c4, &set(4, &[0, 2])));
        assert!(is_super_dominating(&c4, &set(4, &[0, 1])));
        // P_4 0-1-2-3: vertex 3 has no neighbour in {0, 1}.
        let p4 = fam("path:4");
        assert!(is_super_dominating(&p4, &set(4, &[1, 2])));
        assert!(is_super_dominating(&p4, &set(4, &[0, 3])));
        assert!(!is_super_dominating(&p4, &set(4, &[0, 1])));
        assert!(is_super_dominating(&p4, &set(4, &[0, 1, 2])));
    }

    #[test]
    fn domination_examples() {
        assert_eq!(
            domination_number(&fam("cycle:9"), &SolveOptions::default()).unwrap().0,
            3
        );
        assert_eq!(
            domination_number(&fam("complete:6"), &SolveOptions::default())
                .unwrap()
                .0,
            1
        );
        let (v, w) = domination_number(&Graph::empty(4), &SolveOptions::default()).unwrap();
        assert_eq!(v, 4);
        assert_eq!(w, VertexSet::full(4));
    }

    #[test]
    fn super_domination_examples() {
        assert_eq!(solve(&fam("path:7")).value, 4);
        assert_eq!(solve(&fam("cycle:6")).value, 4);
        assert_eq!(solve(&fam("dutch:2,8")).value, 8);
        let spider = Graph::from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert_eq!(solve(&spider).value, 4);
        assert_eq!(solve(&Graph::empty(0)).value, 0);
        assert_eq!(solve(&Graph::empty(3)).value, 3);
    }

    #[test]
    fn naive_examples() {
        assert_eq!(super_domination_naive(&fam("complete:4")).unwrap(), 3);
        assert_eq!(super_domination_naive(&Graph::empty(1)).unwrap(), 1);
        assert_eq!(super_domination_naive(&fam("path:15")), Err(SolveError::OracleCap(15)));
    }

    #[test]
    fn naive_matches_exhaustively_up_to_five() {
        for n in 1..=5 {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            for bits in 0u32..1 << pairs.len() {
                let g = Graph::from_edges(
                    n,
                    pairs
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| bits >> i & 1 == 1)
                        .map(|(_, p)| *p),
                )
                .unwrap();
                assert_eq!(solve(&g).value, super_domination_naive(&g).unwrap(), "{g:?}");
            }
        }
    }

    #[test]
    fn limit_errors() {
        let p30 = fam("path:30");
        assert_eq!(
            super_domination_number(&p30, &SolveOptions::default()),
            Err(SolveError::ExceedsLimit { order: 30, limit: 28 })
        );
        assert!(super_domination_number(&p30, &SolveOptions::default().with_limit(30)).is_ok());
        assert_eq!(
            super_domination_number(&p30, &SolveOptions::default().with_limit(65)),
            Err(SolveError::LimitTooLarge(65))
        );
        // Limit is per component: two disjoint P_20 are fine at the default limit.
        let two = fam("path:20").disjoint_union(&fam("path:20"));
        assert_eq!(solve(&two).value, 20);
    }

    #[test]
    fn witness_is_lexicographically_smallest() {
        for (i, g) in gnp_graphs(8, 0.4, 11, 60).iter().enumerate() {
            let r = solve(g);
            assert_eq!(r.witness.to_vec(), brute_lexmin(g), "graph #{i}: {g:?}");
        }
        assert_eq!(solve(&fam("path:4")).witness.to_vec(), vec![0, 3]);
    }

    #[test]
    fn worker_count_does_not_change_result() {
        let g = &gnp_graphs(18, 0.3, 5, 1)[0];
        let seq = super_domination_number(g, &SolveOptions::sequential()).unwrap();
        for w in [None, Some(2), Some(5)] {
            let par = super_domination_number(g, &SolveOptions::default().with_workers(w)).unwrap();
            assert_eq!(par.value, seq.value);
            assert_eq!(par.witness, seq.witness);
            assert_eq!(par.subsets_examined, seq.subsets_examined);
        }
    }

    fn arb_graph(max_n: usize) -> impl proptest::strategy::Strategy<Value = Graph> {
        (1..=max_n, 0.0f64..1.0, any::<u64>()).prop_map(|(n, p, seed)| gnp_graphs(n, p, seed, 1).pop().unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(96))]

        #[test]
        fn super_dominating_implies_dominating(g in arb_graph(10), mask in any::<u64>()) {
            let s = VertexSet::from_mask(g.order(), mask);
            if is_super_dominating(&g, &s) {
                prop_assert!(is_dominating(&g, &s));
            }
        }

        #[test]
        fn solver_matches_oracle_and_bounds(g in arb_graph(10)) {
            let r = solve(&g);
            prop_assert_eq!(r.value, super_domination_naive(&g).unwrap());
            prop_assert_eq!(r.witness.len(), r.value);
            prop_assert!(is_super_dominating(&g, &r.witness));
            let (gamma, dom) = domination_number(&g, &SolveOptions::default()).unwrap();
            prop_assert!(is_dominating(&g, &dom));
            prop_assert!(gamma <= r.value);
            let n = g.order();
            if g.size() > 0 && n >= 2 {
                prop_assert!(n.div_ceil(2) <= r.value && r.value < n);
            }
            if n >= 2 && (0..n).all(|v| g.degree(v).unwrap() > 0) {
                prop_assert!(gamma >= 1 && 2 * gamma <= n);
            }
        }

        #[test]
        fn component_additivity(a in arb_graph(6), b in arb_graph(6)) {
            let joined = a.disjoint_union(&b);
            let parts = solve(&a).value + solve(&b).value;
            prop_assert_eq!(super_domination_naive(&joined).unwrap(), parts);
            prop_assert_eq!(solve(&joined).value, parts);
        }
    }
}
