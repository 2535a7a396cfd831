//! Exact toolkit for graph pebbling with weighted edges: a move along an
//! edge of weight w takes w pebbles off one endpoint and puts one on the
//! other (w = 2 everywhere in the classical game). On top of the move
//! solver sit the pebbling numbers in their universal and target-selectable
//! forms, cover and threshold variants, certified bounds, and a harness for
//! the product-style conjectures these quantities are known for.
//!
//! Everything is exact: every finite value is backed by an exhaustive
//! argument, every "reachable" by a replayable move sequence, and every
//! value by a maximum-size failing witness.
//!
//! ```
//! use cairn::{families, numbers};
//!
//! let c5 = families::cycle(5).unwrap();
//! let r = numbers::pi_graph(&c5).unwrap();
//! assert_eq!(r.value, numbers::Value::Finite(5));
//! ```

pub mod cache;
pub mod constructions;
pub mod distribution;
pub mod error;
pub mod families;
pub mod graph;
pub mod harness;
pub mod io;
pub mod numbers;
pub mod solver;

pub use distribution::{Distribution, DistributionSet};
pub use error::{Error, Result};
pub use graph::{Edge, Graph, VertexId};
pub use numbers::{
    EnginePreference, NumberResult, Quantifier, ScanOptions, SolveOptions, Value,
};
pub use solver::{AnyReach, Move, MoveSequence, SolveOpts};
