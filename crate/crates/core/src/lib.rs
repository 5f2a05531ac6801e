//! Local approximation algorithms for chordal graphs.
//!
//! The crate covers minimum vertex coloring and maximum independent set on
//! chordal graphs in a simulated LOCAL model: clique forests and their
//! pruning into binary paths, interval graph subroutines, a synchronous
//! round simulator, and centralized twins of every distributed algorithm.

pub mod chordal;
pub mod error;
pub mod forest;
pub mod gen;
pub mod graph;
pub mod interval;
pub mod io;
pub mod mis;
pub mod mvc;
pub mod sim;

pub use error::{Error, Result};
pub use graph::{Coloring, Graph, IndependentSet, NodeId};
