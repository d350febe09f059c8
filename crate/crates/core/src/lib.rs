//! Graph side of the binomial edge ideal lab: graphs, their combinatorial
//! invariants, canonical forms, minimal primes, and invariant predictions.

pub mod canon;
pub mod error;
pub mod family;
pub mod graph;
pub mod invariants;
pub mod predictor;
pub mod primes;

pub use error::GraphError;
pub use family::{recognize_family, FamilyDescriptor};
pub use graph::{Graph, Subgraph, Vertex};
pub use predictor::{predict, unicyclic_rule, Bound, ExtremalClaim, Prediction, Uniqueness};
