//! Fibonacci p-cubes `Γ_n^p`: the subgraphs of the hypercube `Q_n` induced
//! by binary strings whose 1s are separated by at least `p` zeros.
//!
//! Every invariant is available twice: as an exact closed form and as a
//! brute-force computation on the materialized graph. The [`verify`] module
//! runs the two against each other over parameter grids.

pub mod cubes;
pub mod error;
pub mod export;
pub mod graph;
pub mod invariants;
pub mod poly;
pub mod sequences;
pub mod series;
pub mod strings;
pub mod verify;

pub use error::{Error, Result};
pub use graph::PCubeGraph;
pub use poly::{BivarPoly, Polynomial};
pub use strings::PString;

/// Materialization limits. A length `n` is rejected when `n >= cap`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// String enumeration.
    pub strings: usize,
    /// Graph construction.
    pub graph: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { strings: 30, graph: 24 }
    }
}
