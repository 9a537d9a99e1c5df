//! Finite Jaco graphs, Zagreb-style degree indices, ±Fibonacci vertex
//! weights, and the Khazamula irregularity measures, together with a
//! verification harness that checks a catalog of closed-form claims
//! about these quantities against definitional computation.
//!
//! The crate is organized around a small immutable [`graph::Digraph`]
//! model:
//!
//! - [`graph`] — digraphs, degree accounting, canonical generators, and
//!   the directed join;
//! - [`fib`] — Fibonacci numbers, Zeckendorf decomposition, ±Fibonacci
//!   vertex weights;
//! - [`jaco`] — construction of the finite Jaco graphs `J_n(1)` and
//!   their degree/weight sequences;
//! - [`indices`] — the four classical Zagreb/irregularity indices and
//!   their weighted counterparts;
//! - [`irregularity`] — Khazamula irregularity (exact rational, linear
//!   integrand) and c-irregularity (circular integrand);
//! - [`verify`] — closed-form evaluators for the claim catalog and the
//!   match/mismatch adjudication suite.

pub mod fib;
pub mod graph;
pub mod indices;
pub mod irregularity;
pub mod jaco;
pub mod verify;

pub use fib::{weight_for_degree, weight_vector, zeckendorf, WeightVector, ZeckendorfRep};
pub use graph::{
    build_bipartite_lr, build_cycle, build_path, build_wheel, directed_join, Digraph,
    UndirectedView, Vertex,
};
pub use indices::{f_zagreb, zagreb, FZagrebIndices, ZagrebIndices};
pub use irregularity::{irr_k, irr_kc, Convention, LinearParams};
pub use jaco::build_jaco;
