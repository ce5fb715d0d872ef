//! Decompositions of `E(G)` into copies of `H` and single edges.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Embedding, Graph};

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct HDecomposition {
    pub copies: Vec<Embedding>,
    pub singles: Vec<(usize, usize)>,
}

impl HDecomposition {
    /// Completes `copies` with every host edge they leave uncovered, as
    /// singles in ascending edge order.
    pub fn from_copies(host: &Graph, pattern: &Graph, copies: Vec<Embedding>) -> Self {
        let n = host.order();
        let mut covered = vec![false; n * n];
        for c in &copies {
            for (u, v) in c.image_edges(pattern) {
                covered[u * n + v] = true;
            }
        }
        let singles = host
            .edges()
            .into_iter()
            .filter(|&(u, v)| !covered[u * n + v])
            .collect();
        HDecomposition { copies, singles }
    }

    /// Number of parts `t`.
    pub fn parts(&self) -> usize {
        self.copies.len() + self.singles.len()
    }
}

/// The first way in which a decomposition fails to partition `E(G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Copy `copy` is not an embedding of the pattern into the host.
    InvalidCopy { copy: usize },
    /// A single edge that is not an edge of the host.
    NotAnEdge { edge: (usize, usize) },
    EdgeCoveredTwice { edge: (usize, usize) },
    EdgeUncovered { edge: (usize, usize) },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::InvalidCopy { copy } => write!(f, "copy {copy} is not a copy of H in G"),
            Violation::NotAnEdge { edge: (u, v) } => write!(f, "single {u}-{v} is not an edge of G"),
            Violation::EdgeCoveredTwice { edge: (u, v) } => write!(f, "edge covered twice: {u}-{v}"),
            Violation::EdgeUncovered { edge: (u, v) } => write!(f, "edge uncovered: {u}-{v}"),
        }
    }
}

/// Checks that the copies and singles of `d` partition `E(host)` exactly.
pub fn verify_decomposition(
    host: &Graph,
    pattern: &Graph,
    d: &HDecomposition,
) -> Result<(), Violation> {
    let n = host.order();
    let mut covered = vec![false; n * n];
    let mut cover = |u: usize, v: usize| -> Result<(), Violation> {
        let (a, b) = (u.min(v), u.max(v));
        if covered[a * n + b] {
            return Err(Violation::EdgeCoveredTwice { edge: (a, b) });
        }
        covered[a * n + b] = true;
        Ok(())
    };
    for (i, c) in d.copies.iter().enumerate() {
        if !c.is_valid(pattern, host) {
            return Err(Violation::InvalidCopy { copy: i });
        }
        for (u, v) in c.image_edges(pattern) {
            cover(u, v)?;
        }
    }
    for &(u, v) in &d.singles {
        if u >= n || v >= n || u == v || !host.has_edge(u, v) {
            return Err(Violation::NotAnEdge { edge: (u, v) });
        }
        cover(u, v)?;
    }
    for (u, v) in host.edges() {
        if !covered[u * n + v] {
            return Err(Violation::EdgeUncovered { edge: (u, v) });
        }
    }
    Ok(())
}
