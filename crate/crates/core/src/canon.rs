//! Canonical labelling by equitable refinement and individualization.
//!
//! The search tree branches on the first non-singleton cell of the
//! refined partition. Every leaf is a vertex ordering; the canonical one
//! is the ordering whose permuted adjacency rows compare greatest. Leaves
//! that reproduce the best graph yield automorphisms, which prune later
//! siblings lying in the same orbit of the pointwise stabiliser of the
//! current prefix.

use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::{check_cap, graph6, Caps, Graph, Result};

/// Hard limit of the single-word partition representation.
pub(crate) const MAX_ORDER: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    /// graph6 text of the canonically relabelled graph; equal for two
    /// graphs exactly when they are isomorphic.
    pub code: String,
    /// `labeling[k]` is the input vertex placed at canonical position `k`.
    pub labeling: Vec<usize>,
}

impl CanonicalForm {
    /// The input graph relabelled into canonical order.
    pub fn graph(&self) -> Graph {
        graph6::parse_graph6(&self.code).expect("canonical code is valid graph6")
    }
}

/// Canonical form plus generators of the automorphism group found on the way.
#[derive(Clone, Debug)]
pub(crate) struct Canon {
    pub form: CanonicalForm,
    /// Each generator maps vertex `v` to `g[v]`.
    pub generators: Vec<Vec<usize>>,
}

pub fn canonical_form(g: &Graph, caps: &Caps) -> Result<CanonicalForm> {
    check_cap("graph order for canonical labelling", g.order(), caps.embedding)?;
    Ok(canonize(g).form)
}

/// Canonical code, uncapped (up to the 64-vertex representation limit).
pub(crate) fn code(g: &Graph) -> String {
    canonize(g).form.code
}

pub fn are_isomorphic(a: &Graph, b: &Graph, caps: &Caps) -> Result<bool> {
    if a.order() != b.order() || a.size() != b.size() {
        return Ok(false);
    }
    Ok(canonical_form(a, caps)?.code == canonical_form(b, caps)?.code)
}

pub(crate) fn canonize(g: &Graph) -> Canon {
    let n = g.order();
    assert!(n <= MAX_ORDER, "canonical labelling supports at most {MAX_ORDER} vertices");
    let adj: Vec<u64> = (0..n).map(|v| g.row64(v)).collect();
    let mut search = Search {
        adj: &adj,
        best: None,
        autos: Vec::new(),
    };
    if n > 0 {
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut cells = vec![all];
        refine(&adj, &mut cells, all);
        let mut prefix = Vec::new();
        search.descend(cells, &mut prefix);
    }
    let (rows, labeling) = search.best.unwrap_or_default();
    let mut cg = Graph::empty(n);
    for (i, row) in rows.iter().enumerate() {
        let mut r = row.checked_shr(i as u32 + 1).map_or(0, |x| x << (i + 1));
        while r != 0 {
            let j = r.trailing_zeros() as usize;
            cg.add_edge(i, j);
            r &= r - 1;
        }
    }
    Canon {
        form: CanonicalForm {
            code: graph6::emit_graph6(&cg),
            labeling,
        },
        generators: search.autos,
    }
}

/// Splits cells until the partition is equitable. Cells are split by the
/// number of neighbours in a splitter; pieces keep ascending count order so
/// the result depends only on the isomorphism type of (graph, partition).
fn refine(adj: &[u64], cells: &mut Vec<u64>, first: u64) {
    let mut queue = VecDeque::new();
    queue.push_back(first);
    let mut groups: Vec<(u32, u64)> = Vec::new();
    while let Some(w) = queue.pop_front() {
        let mut idx = 0;
        while idx < cells.len() {
            let c = cells[idx];
            if c.count_ones() == 1 {
                idx += 1;
                continue;
            }
            groups.clear();
            let mut m = c;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                let k = (adj[v] & w).count_ones();
                match groups.iter_mut().find(|(gk, _)| *gk == k) {
                    Some((_, mask)) => *mask |= 1 << v,
                    None => groups.push((k, 1 << v)),
                }
            }
            if groups.len() == 1 {
                idx += 1;
                continue;
            }
            groups.sort_unstable_by_key(|&(k, _)| k);
            cells.splice(idx..=idx, groups.iter().map(|&(_, mask)| mask));
            for &(_, mask) in &groups {
                queue.push_back(mask);
            }
            idx += groups.len();
        }
    }
}

struct Search<'a> {
    adj: &'a [u64],
    best: Option<(Vec<u64>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Vec<u64>, prefix: &mut Vec<usize>) {
        let Some(target_idx) = cells.iter().position(|c| c.count_ones() > 1) else {
            self.leaf(&cells);
            return;
        };
        let target = cells[target_idx];
        let mut explored: Vec<usize> = Vec::new();
        let mut m = target;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            if !explored.is_empty() && self.equivalent(v, &explored, prefix) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target_idx]);
            child.push(1u64 << v);
            child.push(target & !(1u64 << v));
            child.extend_from_slice(&cells[target_idx + 1..]);
            refine(self.adj, &mut child, 1u64 << v);
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
            explored.push(v);
        }
    }

    /// Whether `v` shares an orbit with an explored vertex under the known
    /// automorphisms that fix `prefix` pointwise.
    fn equivalent(&self, v: usize, explored: &[usize], prefix: &[usize]) -> bool {
        let n = self.adj.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for a in &self.autos {
            if prefix.iter().all(|&p| a[p] == p) {
                any = true;
                for (x, &y) in a.iter().enumerate() {
                    let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                    if rx != ry {
                        parent[rx.max(ry)] = rx.min(ry);
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == rv)
    }

    fn leaf(&mut self, cells: &[u64]) {
        let lab: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let rows: Vec<u64> = lab
            .iter()
            .map(|&u| {
                let mut r = 0u64;
                for (j, &w) in lab.iter().enumerate() {
                    if self.adj[u] >> w & 1 == 1 {
                        r |= 1 << j;
                    }
                }
                r
            })
            .collect();
        match &self.best {
            None => self.best = Some((rows, lab)),
            Some((best_rows, best_lab)) => match rows.cmp(best_rows) {
                Ordering::Greater => self.best = Some((rows, lab)),
                Ordering::Equal => {
                    let mut auto = vec![0; lab.len()];
                    for (k, &b) in best_lab.iter().enumerate() {
                        auto[b] = lab[k];
                    }
                    if auto.iter().enumerate().any(|(i, &j)| i != j) {
                        self.autos.push(auto);
                    }
                }
                Ordering::Less => {}
            },
        }
    }
}

/// Orbit representative (smallest member) of each vertex under the group
/// generated by `generators`.
pub(crate) fn orbits(n: usize, generators: &[Vec<usize>]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for g in generators {
        for (x, &y) in g.iter().enumerate() {
            let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
            if rx != ry {
                parent[rx.max(ry)] = rx.min(ry);
            }
        }
    }
    (0..n).map(|v| find(&mut parent, v)).collect()
}
