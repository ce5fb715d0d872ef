//! Maximum edge-disjoint `H`-packings and the exact value of `phi_H`.
//!
//! Every part of an `H`-decomposition is a copy of `H` or a single edge, so
//! a decomposition with `k` copies has `e(G) - k(e(H) - 1)` parts and
//! `phi_H(G) = e(G) - (e(H) - 1) * nu_H(G)`, where `nu_H(G)` is the largest
//! number of edge-disjoint copies. The packing is a maximum set packing
//! over the copy edge sets, solved by branch and bound.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::bits::BitSet;
use crate::embed::Matcher;
use crate::enumerate::enumerate_graphs;
use crate::{check_cap, Caps, Embedding, Error, Graph, HDecomposition, Result};

/// A copy of `H` in `G`, identified by its edge set.
#[derive(Clone, Debug)]
pub struct HCopy {
    pub embedding: Embedding,
    /// Host edge indices (positions in `G.edges()`), ascending.
    pub edges: Vec<usize>,
    set: BitSet,
}

#[derive(Clone, Debug)]
pub struct Packing {
    pub copies: Vec<Embedding>,
}

/// All distinct copies of `h` in `g`, ordered by their sorted edge-index
/// lists. Embeddings differing by an automorphism of `h` give one copy.
pub fn h_copies(g: &Graph, h: &Graph, caps: &Caps) -> Result<Vec<HCopy>> {
    check_cap("host order for exact packing", g.order(), caps.embedding)?;
    let n = g.order();
    let edge_list = g.edges();
    let mut index = vec![usize::MAX; n * n];
    for (i, &(u, v)) in edge_list.iter().enumerate() {
        index[u * n + v] = i;
        index[v * n + u] = i;
    }
    let h_edges = h.edges();
    let mut seen: BTreeMap<Vec<usize>, Embedding> = BTreeMap::new();
    let mut overflow = false;
    let mut budget = u64::MAX;
    Matcher::new(h, g, None).run(&mut budget, |map| {
        let mut es: Vec<usize> = h_edges.iter().map(|&(a, b)| index[map[a] * n + map[b]]).collect();
        es.sort_unstable();
        if !seen.contains_key(&es) {
            if seen.len() == caps.copies {
                overflow = true;
                return ControlFlow::Break(());
            }
            seen.insert(es, Embedding { map: map.to_vec() });
        }
        ControlFlow::Continue(())
    });
    if overflow {
        return Err(Error::Size { what: "number of H-copies", value: caps.copies + 1, cap: caps.copies });
    }
    Ok(seen
        .into_iter()
        .map(|(edges, embedding)| HCopy {
            set: BitSet::from_iter(edge_list.len(), edges.iter().copied()),
            edges,
            embedding,
        })
        .collect())
}

struct BranchAndBound<'a> {
    copies: &'a [HCopy],
    edges: usize,
    per_copy: usize,
    current: Vec<usize>,
    best: Vec<usize>,
}

impl BranchAndBound<'_> {
    /// `avail` lists copies disjoint from the chosen ones and from every
    /// edge already decided to stay uncovered.
    fn search(&mut self, avail: &[usize]) {
        if self.current.len() > self.best.len() {
            self.best = self.current.clone();
        }
        if avail.is_empty() {
            return;
        }
        let mut coverable = BitSet::new(self.edges);
        for &c in avail {
            coverable.union_with(&self.copies[c].set);
        }
        if self.current.len() + coverable.len() / self.per_copy <= self.best.len() {
            return;
        }
        let e = coverable.iter().next().expect("available copies cover an edge");
        for &c in avail {
            if !self.copies[c].set.contains(e) {
                continue;
            }
            let rest: Vec<usize> = avail
                .iter()
                .copied()
                .filter(|&d| self.copies[d].set.is_disjoint(&self.copies[c].set))
                .collect();
            self.current.push(c);
            self.search(&rest);
            self.current.pop();
        }
        let rest: Vec<usize> = avail.iter().copied().filter(|&d| !self.copies[d].set.contains(e)).collect();
        self.search(&rest);
    }
}

/// A maximum set of pairwise edge-disjoint copies of `h` in `g`.
///
/// Branches on the lowest edge still coverable: either one of the copies
/// through it is taken, or the edge stays uncovered. A branch is cut when
/// the copies taken plus (coverable edges) / e(H) cannot beat the best.
pub fn max_packing(g: &Graph, h: &Graph, caps: &Caps) -> Result<Packing> {
    if h.size() < 2 {
        return Err(Error::Domain("packing needs a pattern with at least 2 edges".into()));
    }
    let copies = h_copies(g, h, caps)?;
    let mut bb = BranchAndBound {
        copies: &copies,
        edges: g.size(),
        per_copy: h.size(),
        current: Vec::new(),
        best: Vec::new(),
    };
    let all: Vec<usize> = (0..copies.len()).collect();
    bb.search(&all);
    Ok(Packing {
        copies: bb.best.iter().map(|&c| copies[c].embedding.clone()).collect(),
    })
}

/// `phi_H(G)` with a decomposition attaining it.
pub fn phi_exact(g: &Graph, h: &Graph, caps: &Caps) -> Result<(usize, HDecomposition)> {
    let packing = max_packing(g, h, caps)?;
    let t = g.size() - (h.size() - 1) * packing.copies.len();
    let d = HDecomposition::from_copies(g, h, packing.copies);
    debug_assert_eq!(d.parts(), t);
    Ok((t, d))
}

#[derive(Clone, Debug)]
pub struct PhiScan {
    pub n: usize,
    pub value: usize,
    /// Canonically labelled graphs attaining `value`, in enumeration order.
    pub witnesses: Vec<Graph>,
    pub graphs_scanned: usize,
}

/// `phi_H(n)`: the maximum of `phi_H(G)` over all `n`-vertex graphs.
pub fn phi_max_over_n(n: usize, h: &Graph, caps: &Caps) -> Result<PhiScan> {
    check_cap("order for a phi scan", n, caps.phi_scan)?;
    let mut scan = PhiScan { n, value: 0, witnesses: Vec::new(), graphs_scanned: 0 };
    for g in enumerate_graphs(n, caps)? {
        scan.graphs_scanned += 1;
        absorb(&mut scan, g, h, caps)?;
    }
    Ok(scan)
}

/// Folds one graph into a running scan. `phi_H(G) <= e(G)`, so graphs with
/// fewer edges than the current value are skipped.
pub fn absorb(scan: &mut PhiScan, g: Graph, h: &Graph, caps: &Caps) -> Result<()> {
    if g.size() < scan.value {
        return Ok(());
    }
    let (t, _) = phi_exact(&g, h, caps)?;
    if t > scan.value || scan.witnesses.is_empty() {
        scan.value = t;
        scan.witnesses.clear();
        scan.witnesses.push(g);
    } else if t == scan.value {
        scan.witnesses.push(g);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, complete_multipartite, cycle};

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn triangle_packings_of_cliques() {
        let k3 = complete(3);
        assert_eq!(max_packing(&complete(4), &k3, &caps()).unwrap().copies.len(), 1);
        assert_eq!(max_packing(&complete(6), &k3, &caps()).unwrap().copies.len(), 4);
        assert_eq!(max_packing(&complete(7), &k3, &caps()).unwrap().copies.len(), 7);
    }

    #[test]
    fn copies_are_deduplicated_by_edge_set() {
        assert_eq!(h_copies(&complete(4), &complete(3), &caps()).unwrap().len(), 4);
        assert_eq!(h_copies(&complete(4), &cycle(4), &caps()).unwrap().len(), 3);
    }

    #[test]
    fn phi_values() {
        let k3 = complete(3);
        let (t, d) = phi_exact(&complete(6), &k3, &caps()).unwrap();
        assert_eq!(t, 7);
        assert_eq!(crate::verify_decomposition(&complete(6), &k3, &d), Ok(()));
        assert_eq!(phi_exact(&complete_multipartite(&[3, 3]), &k3, &caps()).unwrap().0, 9);
        assert_eq!(phi_exact(&cycle(5), &k3, &caps()).unwrap().0, 5);
    }

    #[test]
    fn phi_scans() {
        let k3 = complete(3);
        let s4 = phi_max_over_n(4, &k3, &caps()).unwrap();
        assert_eq!(s4.value, 4);
        assert_eq!(s4.graphs_scanned, 11);
        let c4 = crate::canon::code(&cycle(4));
        assert!(s4.witnesses.iter().any(|w| crate::canon::code(w) == c4));
        let s5 = phi_max_over_n(5, &k3, &caps()).unwrap();
        assert_eq!(s5.value, 6);
        let k23 = crate::canon::code(&complete_multipartite(&[2, 3]));
        assert!(s5.witnesses.iter().any(|w| crate::canon::code(w) == k23));
        assert_eq!(phi_max_over_n(6, &k3, &caps()).unwrap().value, 9);
    }

    #[test]
    fn copy_cap() {
        let tight = Caps { copies: 3, ..Caps::default() };
        assert!(matches!(max_packing(&complete(5), &complete(3), &tight), Err(Error::Size { .. })));
    }

    #[test]
    fn single_edge_pattern_is_rejected() {
        assert!(matches!(max_packing(&complete(4), &complete(2), &caps()), Err(Error::Domain(_))));
    }
}
