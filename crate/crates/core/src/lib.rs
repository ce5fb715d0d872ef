//! Exact combinatorics for decompositions of a graph into copies of a fixed
//! graph `H` and single edges.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is a pure
//! function of its inputs; file formats, caching and the command line live
//! in the `hdecomp` crate.
//!
//! Layout:
//!
//! * [`graph`], [`graph6`], [`canon`], [`embed`], [`color`], [`enumerate`],
//!   [`generate`]: graph representation and the exact search primitives.
//! * [`family`]: decomposition families, their minimal subfamilies,
//!   chromatic excess and edge-criticality.
//! * [`extremal`]: Turán numbers, extremal numbers of finite families and
//!   `biex`.
//! * [`packing`]: maximum edge-disjoint packings and the exact value of
//!   `phi_H(G)` and `phi_H(n)`.
//! * [`pipeline`]: the constructive deletion pipeline (peeling, max-cut
//!   partition, high-degree extraction, the two deletion steps) and the
//!   lower-bound construction.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bits;
pub mod canon;
pub mod color;
pub mod decomposition;
pub mod embed;
pub mod enumerate;
mod error;
pub mod extremal;
pub mod family;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod packing;
pub mod pipeline;

pub use crate::decomposition::{verify_decomposition, HDecomposition, Violation};
pub use crate::embed::Embedding;
pub use crate::error::{Error, Result};
pub use crate::family::GraphFamily;
pub use crate::graph::Graph;

/// Size limits for the exhaustive searches.
///
/// Exceeding a cap is always reported as [`Error::Size`]; nothing is
/// silently truncated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Caps {
    /// Largest host order accepted by [`embed::find_embeddings`] and
    /// [`canon::canonical_form`].
    pub embedding: usize,
    /// Largest order for whole-class enumeration and exact extremal search.
    pub enumeration: usize,
    /// Largest order for a full `phi_H(n)` scan.
    pub phi_scan: usize,
    /// Largest number of distinct `H`-copies an exact packing will consider.
    pub copies: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            embedding: 16,
            enumeration: 10,
            phi_scan: 8,
            copies: 100_000,
        }
    }
}

pub(crate) fn check_cap(what: &'static str, value: usize, cap: usize) -> Result<()> {
    if value > cap {
        Err(Error::Size { what, value, cap })
    } else {
        Ok(())
    }
}
