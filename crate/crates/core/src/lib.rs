//! Exact super domination numbers of small simple graphs, and checks of how
//! γ_sp moves under edge/vertex removal and contraction.
//!
//! A set S is super dominating when every vertex u outside S has a neighbour
//! v ∈ S whose only neighbour outside S is u. γ_sp(G) is the smallest such
//! |S|. The crate provides:
//!
//! - [`graph`]: immutable simple graphs with the four modification operators,
//! - [`families`]: paths, cycles, complete (bipartite) graphs, stars,
//!   friendship and windmill graphs with their known γ_sp values,
//! - [`solver`]: set checkers, an exact γ / γ_sp solver and a naive oracle,
//! - [`theorems`]: bound checkers, the unbounded-gap witness and sweeps,
//! - [`io`]: edge-list and DIMACS parsing plus report serialization.
//!
//! With the default `parallel` feature, subset levels and sweeps fan out over
//! rayon; results do not depend on the worker count.

pub mod combinations;
pub mod families;
pub mod graph;
pub mod io;
pub mod random;
mod scan;
pub mod solver;
pub mod theorems;
pub mod vertex_set;

pub use families::FamilySpec;
pub use graph::{Edge, Graph, GraphError};
pub use scan::Workers;
pub use solver::{SolveError, SolveOptions, SolveResult};
pub use theorems::{BoundReport, TheoremId};
pub use vertex_set::VertexSet;
