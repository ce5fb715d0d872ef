use alloc::vec::Vec;

use crate::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct PeelStep {
    /// Vertex index in the input graph.
    pub vertex: usize,
    /// Its degree at the moment of removal.
    pub degree: usize,
}

/// Minimum degree of the Turán graph `T_k(n)`.
pub fn turan_min_degree(n: usize, k: usize) -> usize {
    if n == 0 {
        0
    } else {
        n - n.div_ceil(k)
    }
}

/// Result of peeling: the remaining induced subgraph and the input indices
/// of its vertices (`kept[i]` is vertex `i` of `graph`).
#[derive(Clone, Debug)]
pub struct Peeled {
    pub graph: Graph,
    pub kept: Vec<usize>,
    pub trace: Vec<PeelStep>,
}

/// Removes minimum-degree vertices (lowest index first) until
/// `delta(G') >= delta(T_{r-1}(n'))` or nothing is left.
pub fn peel_min_degree(g: &Graph, r: usize) -> Peeled {
    assert!(r >= 3, "peeling needs r >= 3");
    let mut alive: Vec<usize> = (0..g.order()).collect();
    let mut degree: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    let mut trace = Vec::new();
    while !alive.is_empty() {
        let (pos, &v) = alive
            .iter()
            .enumerate()
            .min_by_key(|&(_, &v)| (degree[v], v))
            .expect("non-empty");
        if degree[v] >= turan_min_degree(alive.len(), r - 1) {
            break;
        }
        trace.push(PeelStep { vertex: v, degree: degree[v] });
        alive.remove(pos);
        for u in g.neighbors(v) {
            degree[u] -= 1;
        }
    }
    Peeled { graph: g.induced(&alive), kept: alive, trace }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, complete_multipartite, turan};

    #[test]
    fn turan_graph_is_untouched() {
        let p = peel_min_degree(&turan(10, 2), 3);
        assert!(p.trace.is_empty());
        assert_eq!(p.graph, turan(10, 2));
    }

    #[test]
    fn star_loses_three_leaves() {
        let p = peel_min_degree(&complete_multipartite(&[1, 5]), 3);
        assert_eq!(p.trace.iter().map(|s| s.vertex).collect::<Vec<_>>(), [1, 2, 3]);
        assert!(p.trace.iter().all(|s| s.degree == 1));
        assert_eq!((p.graph.order(), p.graph.size()), (3, 2));
    }

    #[test]
    fn isolated_vertex_goes_first() {
        let g = complete(4).disjoint_union(&Graph::empty(1));
        let p = peel_min_degree(&g, 3);
        assert_eq!(p.trace, [PeelStep { vertex: 4, degree: 0 }]);
        assert_eq!(p.graph, complete(4));
    }

    #[test]
    fn edgeless_graph_shrinks_to_one_vertex() {
        let p = peel_min_degree(&crate::generate::path(2), 4);
        // delta(T_3(2)) = 1 holds for K_2, so nothing is removed.
        assert!(p.trace.is_empty());
        // A single vertex meets delta(T_2(1)) = 0.
        let q = peel_min_degree(&Graph::empty(3), 3);
        assert_eq!(q.graph.order(), 1);
        assert_eq!(q.kept, [2]);
    }
}
