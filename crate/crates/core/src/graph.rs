//! Labeled simple undirected graphs stored as fixed-width adjacency bit rows.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::hash::{Hash, Hasher};

use crate::bits;

/// A simple undirected graph on vertices `0..n`.
///
/// Row `v` holds the neighbourhood of `v` as a bit set; all rows have the
/// same width so neighbourhood intersections are word-parallel. The optional
/// label is for display only and takes no part in equality.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    edges: usize,
    label: Option<String>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let words = bits::words_for(n).max(1);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
            edges: 0,
            label: None,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges are merged.
    ///
    /// # Panics
    /// On self-loops or endpoints `>= n`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    #[inline]
    pub fn size(&self) -> usize {
        self.edges
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub(crate) fn row_words(&self) -> usize {
        self.words
    }

    /// The neighbourhood of `v` as a single word; only valid for `n <= 64`.
    #[inline]
    pub(crate) fn row64(&self, v: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.rows[v * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bits::test(self.row(u), v)
    }

    /// Adds `uv`; returns false if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v, "self-loop at vertex {u}");
        assert!(u < self.n && v < self.n, "edge {u}-{v} outside 0..{}", self.n);
        if self.has_edge(u, v) {
            return false;
        }
        let w = self.words;
        bits::set(&mut self.rows[u * w..(u + 1) * w], v);
        bits::set(&mut self.rows[v * w..(v + 1) * w], u);
        self.edges += 1;
        true
    }

    /// Removes `uv`; returns false if it was absent.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u == v || !self.has_edge(u, v) {
            return false;
        }
        let w = self.words;
        bits::clear(&mut self.rows[u * w..(u + 1) * w], v);
        bits::clear(&mut self.rows[v * w..(v + 1) * w], u);
        self.edges -= 1;
        true
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        bits::count(self.row(v))
    }

    /// Number of neighbours of `v` inside `set`.
    #[inline]
    pub fn degree_into(&self, v: usize, set: &[u64]) -> usize {
        bits::and_count(self.row(v), set)
    }

    pub fn neighbors(&self, v: usize) -> bits::Ones<'_> {
        bits::ones(self.row(v))
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).max()
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edges);
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn isolated_count(&self) -> usize {
        (0..self.n).filter(|&v| self.degree(v) == 0).count()
    }

    /// Subgraph induced on `vertices`; vertex `i` of the result is
    /// `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g.label = self.label.clone();
        g
    }

    /// The graph with a fresh vertex `n` adjacent to the set bits of `nbrs`.
    pub fn with_vertex(&self, nbrs: &[u64]) -> Graph {
        let mut g = Graph::empty(self.n + 1);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for u in bits::ones(nbrs) {
            g.add_edge(u, self.n);
        }
        g
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n);
        }
        g
    }

    /// Two-colours the graph if possible.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut side = vec![u8::MAX; self.n];
        let mut stack = Vec::new();
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for v in self.neighbors(u) {
                    if side[v] == u8::MAX {
                        side[v] = 1 - side[u];
                        stack.push(v);
                    } else if side[v] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        reached == self.n
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rows == other.rows
    }
}

impl Eq for Graph {}

impl Hash for Graph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.rows.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut d = f.debug_struct("Graph");
        if let Some(l) = &self.label {
            d.field("label", l);
        }
        d.field("n", &self.n).field("edges", &self.edges()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_sum_is_twice_edge_count() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (3, 4), (0, 1)]);
        assert_eq!(g.size(), 4);
        let sum: usize = (0..5).map(|v| g.degree(v)).sum();
        assert_eq!(sum, 2 * g.size());
        assert!(g.has_edge(1, 0));
    }

    #[test]
    fn wide_rows() {
        let mut g = Graph::empty(130);
        g.add_edge(0, 129);
        g.add_edge(64, 65);
        assert_eq!(g.edges(), vec![(0, 129), (64, 65)]);
        assert_eq!(g.degree(129), 1);
        assert!(g.remove_edge(129, 0));
        assert_eq!(g.size(), 1);
    }

    #[test]
    #[should_panic(expected = "self-loop")]
    fn rejects_loops() {
        Graph::empty(3).add_edge(1, 1);
    }

    #[test]
    fn bipartition_detects_odd_cycles() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert!(c5.bipartition().is_none());
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(c4.bipartition().unwrap(), vec![0, 1, 0, 1]);
    }
}
