//! Exact counting of domatic partitions.
//!
//! * [`graph`]: simple graphs, the edge-list format, generators, and the
//!   tree reductions (leaf stripping, bouquets, canonical codes).
//! * [`oracle`]: exhaustive enumeration for any small graph.
//! * [`tree_count`]: the fast weak 2-coloring count for trees, plus closed
//!   forms for paths and coronas.
//! * [`polynomial`]: the domatic polynomial value type.
//! * [`cli`]: the `domatic` command-line front end.

pub mod cli;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod polynomial;
pub mod tree_count;

pub use error::{Error, Result};
pub use graph::Graph;
pub use polynomial::DomaticPolynomial;
