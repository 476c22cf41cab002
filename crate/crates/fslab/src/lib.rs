//! Friends-and-strangers graphs at desk scale.
//!
//! Given two graphs `X` and `Y` on the same number of vertices, the
//! friends-and-strangers graph `FS(X, Y)` has one vertex per bijection
//! `V(X) -> V(Y)`, with two bijections adjacent when they differ by swapping
//! the images of two X-adjacent vertices whose images are Y-adjacent.
//!
//! The crate provides:
//!
//! * [`graph`]: simple undirected graphs, complements, girth, forest
//!   profiles, and degree-2 suppression into a labeled multigraph core.
//! * [`families`]: deterministic generators (cycles, barbells, generalized
//!   theta graphs, subdivisions) with landmark tables.
//! * [`ear`]: open ear decompositions of biconnected graphs and the one-ear
//!   canonical form.
//! * [`fs_explicit`]: explicit construction of `FS(X, Y)` over all `n!`
//!   configurations; the universal brute-force oracle.
//! * [`star_search`]: implicit BFS over packed configurations for
//!   `FS(X, Star_n)` reachability and exact girth.
//! * [`connectivity`]: connectivity theorems as executable predicates plus
//!   theorem-vs-oracle sweeps.
//! * [`girth_theory`]: girth formulas, shape classifiers, and the
//!   predicted-girth minimizer over recognized subgraphs.
//! * [`trajectories`]: explicit swap sequences and a simulator that
//!   certifies closed simple cycles.
//! * [`enumerate`]: small-graph enumeration and canonical forms backing the
//!   verification sweeps.

pub mod connectivity;
pub mod enumerate;
pub mod ear;
pub mod error;
pub mod families;
pub mod fs_explicit;
pub mod girth_theory;
pub mod graph;
pub mod perm;
pub mod search;
pub mod star_search;
pub mod trajectories;

pub use error::{Error, Result};
pub use graph::{Graph, Multigraph};
