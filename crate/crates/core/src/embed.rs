//! Backtracking search for (non-induced) subgraph embeddings.
//!
//! Pattern vertices are placed by descending degree; ties go to the vertex
//! with more already-placed neighbours, then to the lower index. Host
//! candidates are tried in ascending index order, so results come out in
//! lexicographic order of the host vertices taken in placement order.
//! Isolated pattern vertices only need distinct unused host vertices.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::bits::{self, BitSet};
use crate::{check_cap, Caps, Error, Graph, Result};

/// An injective map from pattern vertices to host vertices carrying every
/// pattern edge onto a host edge.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, serde::Deserialize)]
pub struct Embedding {
    /// `map[v]` is the host image of pattern vertex `v`.
    pub map: Vec<usize>,
}

impl Embedding {
    /// Host edges covered by the embedding, normalised `(min, max)` and sorted.
    pub fn image_edges(&self, pattern: &Graph) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = pattern
            .edges()
            .into_iter()
            .map(|(a, b)| {
                let (x, y) = (self.map[a], self.map[b]);
                (x.min(y), x.max(y))
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn is_valid(&self, pattern: &Graph, host: &Graph) -> bool {
        if self.map.len() != pattern.order() || self.map.iter().any(|&h| h >= host.order()) {
            return false;
        }
        for (i, a) in self.map.iter().enumerate() {
            if self.map[..i].contains(a) {
                return false;
            }
        }
        pattern
            .edges()
            .into_iter()
            .all(|(a, b)| host.has_edge(self.map[a], self.map[b]))
    }
}

/// How a bounded search ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// The whole tree was explored.
    Exhausted,
    /// The visitor asked to stop.
    Stopped,
    /// The node budget ran out first.
    BudgetExhausted,
}

/// Reusable backtracking matcher for one (pattern, host) pair.
pub(crate) struct Matcher<'a> {
    host: &'a Graph,
    order: Vec<usize>,
    /// For each placement depth, the depths of earlier-placed neighbours.
    back: Vec<Vec<usize>>,
    pattern_degree: Vec<usize>,
    host_degree: Vec<usize>,
    allowed: Option<&'a [BitSet]>,
    everything: Vec<u64>,
}

impl<'a> Matcher<'a> {
    pub fn new(pattern: &'a Graph, host: &'a Graph, allowed: Option<&'a [BitSet]>) -> Self {
        let p = pattern.order();
        let pattern_degree: Vec<usize> = (0..p).map(|v| pattern.degree(v)).collect();
        let mut placed = vec![false; p];
        let mut order = Vec::with_capacity(p);
        for _ in 0..p {
            let next = (0..p)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| {
                    let linked = pattern.neighbors(v).filter(|&u| placed[u]).count();
                    (pattern_degree[v], linked, usize::MAX - v)
                })
                .expect("unplaced vertex remains");
            placed[next] = true;
            order.push(next);
        }
        let back = order
            .iter()
            .enumerate()
            .map(|(d, &v)| (0..d).filter(|&k| pattern.has_edge(v, order[k])).collect())
            .collect();
        let mut everything = vec![0u64; host.row_words()];
        for h in 0..host.order() {
            bits::set(&mut everything, h);
        }
        Matcher {
            host,
            order,
            back,
            pattern_degree,
            host_degree: (0..host.order()).map(|h| host.degree(h)).collect(),
            allowed,
            everything,
        }
    }

    /// Calls `visit` with each embedding (indexed by pattern vertex) until it
    /// breaks, the tree is exhausted, or `budget` nodes have been expanded.
    pub fn run(
        &self,
        budget: &mut u64,
        mut visit: impl FnMut(&[usize]) -> ControlFlow<()>,
    ) -> Outcome {
        let p = self.order.len();
        if p > self.host.order() {
            return Outcome::Exhausted;
        }
        let mut map = vec![usize::MAX; p];
        let mut placed = vec![usize::MAX; p];
        let mut used = vec![0u64; self.host.row_words()];
        let mut bufs = vec![vec![0u64; self.host.row_words()]; p];
        match self.rec(0, &mut map, &mut placed, &mut used, &mut bufs, budget, &mut visit) {
            Step::Continue => Outcome::Exhausted,
            Step::Stop => Outcome::Stopped,
            Step::Budget => Outcome::BudgetExhausted,
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn rec(
        &self,
        d: usize,
        map: &mut [usize],
        placed: &mut [usize],
        used: &mut [u64],
        bufs: &mut [Vec<u64>],
        budget: &mut u64,
        visit: &mut impl FnMut(&[usize]) -> ControlFlow<()>,
    ) -> Step {
        if d == self.order.len() {
            return match visit(map) {
                ControlFlow::Continue(()) => Step::Continue,
                ControlFlow::Break(()) => Step::Stop,
            };
        }
        let v = self.order[d];
        let (cand, rest) = bufs.split_first_mut().expect("one buffer per depth");
        match self.allowed {
            Some(a) => cand.copy_from_slice(a[v].words()),
            None => cand.copy_from_slice(&self.everything),
        }
        for &k in &self.back[d] {
            for (c, r) in cand.iter_mut().zip(self.host.row(placed[k])) {
                *c &= r;
            }
        }
        for (c, u) in cand.iter_mut().zip(used.iter()) {
            *c &= !u;
        }
        for h in bits::ones(cand) {
            if self.host_degree[h] < self.pattern_degree[v] {
                continue;
            }
            if *budget == 0 {
                return Step::Budget;
            }
            *budget -= 1;
            map[v] = h;
            placed[d] = h;
            bits::set(used, h);
            let step = self.rec(d + 1, map, placed, used, rest, budget, visit);
            bits::clear(used, h);
            if !matches!(step, Step::Continue) {
                return step;
            }
        }
        map[v] = usize::MAX;
        Step::Continue
    }
}

enum Step {
    Continue,
    Stop,
    Budget,
}

/// Up to `limit` embeddings of `pattern` into `host`, optionally restricting
/// each pattern vertex to a set of allowed host vertices.
pub fn find_embeddings(
    pattern: &Graph,
    host: &Graph,
    limit: usize,
    constraints: Option<&[BitSet]>,
    caps: &Caps,
) -> Result<Vec<Embedding>> {
    check_cap("host order for embedding search", host.order(), caps.embedding)?;
    if limit == 0 {
        return Err(Error::Domain("embedding limit must be at least 1".into()));
    }
    if let Some(c) = constraints {
        if c.len() != pattern.order() {
            return Err(Error::Domain(
                "constraints must list one host set per pattern vertex".into(),
            ));
        }
    }
    Ok(embeddings_uncapped(pattern, host, limit, constraints))
}

pub(crate) fn embeddings_uncapped(
    pattern: &Graph,
    host: &Graph,
    limit: usize,
    constraints: Option<&[BitSet]>,
) -> Vec<Embedding> {
    let mut out = Vec::new();
    Matcher::new(pattern, host, constraints).run(&mut { u64::MAX }, |m| {
        out.push(Embedding { map: m.to_vec() });
        if out.len() >= limit {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    out
}

/// Whether `host` contains `pattern` as a (not necessarily induced) subgraph.
pub fn is_subgraph(pattern: &Graph, host: &Graph, caps: &Caps) -> Result<bool> {
    check_cap("host order for embedding search", host.order(), caps.embedding)?;
    Ok(contains(host, pattern))
}

pub(crate) fn contains(host: &Graph, pattern: &Graph) -> bool {
    if pattern.order() > host.order() || pattern.size() > host.size() {
        return false;
    }
    let mut found = false;
    Matcher::new(pattern, host, None).run(&mut { u64::MAX }, |_| {
        found = true;
        ControlFlow::Break(())
    });
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, complete_multipartite, cycle};
    use std::collections::BTreeSet;

    #[test]
    fn c4_in_octahedron() {
        let found = find_embeddings(&cycle(4), &complete_multipartite(&[2, 2, 2]), 1, None, &Caps::default()).unwrap();
        assert_eq!(found.len(), 1);
        assert!(found[0].is_valid(&cycle(4), &complete_multipartite(&[2, 2, 2])));
    }

    #[test]
    fn no_triangle_in_bipartite() {
        let found = find_embeddings(&complete(3), &complete_multipartite(&[2, 2]), 1, None, &Caps::default()).unwrap();
        assert!(found.is_empty());
    }

    #[test]
    fn k4_has_four_triangles() {
        let all = find_embeddings(&complete(3), &complete(4), 10, None, &Caps::default()).unwrap();
        assert_eq!(all.len(), 10, "limit reached: 24 labelled maps exist");
        let every = find_embeddings(&complete(3), &complete(4), 100, None, &Caps::default()).unwrap();
        let images: BTreeSet<Vec<usize>> = every
            .iter()
            .map(|e| {
                let mut m = e.map.clone();
                m.sort_unstable();
                m
            })
            .collect();
        assert_eq!(images.len(), 4);
        let mut sorted = every.clone();
        sorted.sort();
        assert_eq!(sorted, every, "deterministic lexicographic order");
    }

    #[test]
    fn isolated_pattern_vertices_need_room() {
        let k2_k1 = Graph::from_edges(3, &[(0, 1)]);
        assert!(!contains(&Graph::from_edges(2, &[(0, 1)]), &k2_k1));
        assert!(contains(&Graph::from_edges(3, &[(0, 1)]), &k2_k1));
    }

    #[test]
    fn constraints_restrict_images() {
        let host = complete(5);
        let allowed = [BitSet::from_iter(5, [3, 4]), BitSet::from_iter(5, [0, 3])];
        let found = find_embeddings(&complete(2), &host, 10, Some(&allowed), &Caps::default()).unwrap();
        let maps: Vec<_> = found.into_iter().map(|e| e.map).collect();
        assert_eq!(maps, vec![vec![3, 0], vec![4, 0], vec![4, 3]]);
    }

    #[test]
    fn budget_is_respected() {
        let (p, h) = (cycle(5), complete(12));
        let m = Matcher::new(&p, &h, None);
        let mut budget = 50;
        assert_eq!(m.run(&mut budget, |_| ControlFlow::Continue(())), Outcome::BudgetExhausted);
        assert_eq!(budget, 0);
    }
}
