//! Degree sequences and matchings.
//!
//! Graphicality tests, the maximum matching number over all realizations of a
//! degree sequence, degree-only lower bounds on maximal and maximum matchings,
//! degree-preserving growth, and exhaustive oracles for small instances.

pub mod bounds;
pub mod cli;
pub mod dpg;
pub mod enumeration;
pub mod error;
pub mod families;
pub mod graph;
pub mod graphicality;
pub mod matching;
pub mod seq;

pub use error::{Error, Result};
pub use graph::{Edge, Graph, Vertex};
pub use matching::Matching;
pub use seq::{DegreeSequence, SupportSet};
