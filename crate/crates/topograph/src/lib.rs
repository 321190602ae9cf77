//! Finite point-set topologies and the six graph classes their separation
//! axioms generate.
//!
//! A finite topology is stored by its minimal-set mapping (the smallest open
//! neighborhood of each point). For each separation axiom T0, T1, T2, T3',
//! T3'', T4 the crate builds the graph whose edges are the non-separated
//! pairs, keeps both the quantifier-level separation oracle and the
//! minimal-set adjacency formulas as permanent cross-checks, and implements
//! the constructive bridges between these graphs and posets, simplicial
//! clique covers, anchored-star decompositions, hypergraph line graphs, and
//! universe covers. Everything is verified exhaustively at desk scale by the
//! suites in [`suites`].

pub mod axiom;
pub mod covers;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod io;
pub mod normalize;
pub mod oracle;
pub mod point_set;
pub mod poset;
pub mod separation;
pub mod suites;
pub mod topology;

pub use axiom::Axiom;
pub use error::{Error, Result};
pub use graph::{Graph, Hypergraph};
pub use point_set::{PointSet, MAX_POINTS};
pub use poset::Poset;
pub use topology::{FiniteTopology, IncPoint};
