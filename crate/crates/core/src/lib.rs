//! Clique cover toolkit.
//!
//! The crate is organized around a small undirected [`graph::Graph`] type and
//! the machinery needed to study `K_t` clique covers at desk scale:
//!
//! * [`graph`]: graph representation, generators (Turán graphs, cycles,
//!   random chordal builds, G(n,p), a 3-uniform Turán-style hypergraph),
//!   labeled-graph enumeration, and small-graph isomorphism testing.
//! * [`cliques`]: clique enumeration, exact cover/packing oracles for small
//!   instances, and feasibility checkers for cover and packing solutions.
//! * [`elimination`]: recognition of simplicial and cluster elimination
//!   orderings (chordal / semichordal graphs) and 3-wheel detection.
//! * [`bounds`]: closed-form integer bounds on clique cover numbers.
//! * [`greedy`]: constructive cover builders: the greedy maximum-clique
//!   edge cover and the recursive min-degree triangle/`K_t` cover.
//! * [`optpair`]: the recursive optimal cover/packing pair constructor for
//!   graphs with a cluster elimination ordering, with equality certificates.
//! * [`reduction`]: the universal-vertex gadget relating `K_{t-1}` covers of
//!   a graph to `K_t` covers of its augmentation, with lift/project maps.
//! * [`io`]: text formats for graphs, weights, orderings, and JSON forms of
//!   solutions.

pub mod bounds;
pub mod cliques;
pub mod elimination;
mod error;
pub mod graph;
pub mod greedy;
pub mod io;
pub mod optpair;
pub mod reduction;

pub use error::{Error, Result};
