//! Isomorph-free generation of all graphs on `n` vertices.
//!
//! Graphs grow one vertex at a time. A child `G + v` is accepted only when
//! `v` lies in the automorphism orbit of the vertex that the canonical
//! labelling of the child puts last, so every isomorphism class has exactly
//! one canonical parent; children of one parent are deduplicated by
//! canonical code. An optional predicate prunes children (and everything
//! below them), which is sound for any property closed under taking
//! induced subgraphs.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use crate::canon::{canonize, orbits, MAX_ORDER};
use crate::{check_cap, Caps, Graph, Result};

struct Frame {
    graph: Graph,
    next: u64,
    seen: BTreeSet<String>,
}

/// Depth-first orderly generator; yields canonically labelled graphs.
pub struct Orderly<P> {
    n: usize,
    keep: P,
    stack: Vec<Frame>,
    started: bool,
    budget: u64,
    nodes: u64,
    out_of_budget: bool,
}

pub type AllGraphs = Orderly<fn(&Graph) -> bool>;

impl<P: FnMut(&Graph) -> bool> Orderly<P> {
    /// Generator restricted to graphs all of whose generation ancestors
    /// satisfy `keep`; stops after expanding `budget` nodes.
    pub(crate) fn with_filter(n: usize, keep: P, budget: u64) -> Self {
        assert!(n <= MAX_ORDER);
        Orderly {
            n,
            keep,
            stack: Vec::new(),
            started: false,
            budget,
            nodes: 0,
            out_of_budget: false,
        }
    }

    /// Search-tree nodes expanded so far.
    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    /// True when generation stopped early because the budget ran out.
    pub fn budget_exhausted(&self) -> bool {
        self.out_of_budget
    }
}

impl<P: FnMut(&Graph) -> bool> Iterator for Orderly<P> {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if !self.started {
            self.started = true;
            let root = Graph::empty(self.n.min(1));
            if !(self.keep)(&root) {
                return None;
            }
            if self.n <= 1 {
                return Some(root);
            }
            self.stack.push(Frame { graph: root, next: 0, seen: BTreeSet::new() });
        }
        loop {
            let top = self.stack.last_mut()?;
            let k = top.graph.order();
            if top.next == 1u64 << k {
                self.stack.pop();
                continue;
            }
            let mask = top.next;
            top.next += 1;
            if self.nodes >= self.budget {
                self.out_of_budget = true;
                self.stack.clear();
                return None;
            }
            self.nodes += 1;
            let child = top.graph.with_vertex(&[mask]);
            let canon = canonize(&child);
            let orb = orbits(k + 1, &canon.generators);
            if orb[k] != orb[canon.form.labeling[k]] {
                continue;
            }
            if !top.seen.insert(canon.form.code.clone()) {
                continue;
            }
            if !(self.keep)(&child) {
                continue;
            }
            if k + 1 == self.n {
                return Some(canon.form.graph());
            }
            self.stack.push(Frame { graph: child, next: 0, seen: BTreeSet::new() });
        }
    }
}

/// One graph per isomorphism class on `n` vertices, in a fixed order.
pub fn enumerate_graphs(n: usize, caps: &Caps) -> Result<AllGraphs> {
    check_cap("order for whole-class enumeration", n, caps.enumeration)?;
    fn all(_: &Graph) -> bool {
        true
    }
    Ok(Orderly::with_filter(n, all as fn(&Graph) -> bool, u64::MAX))
}
