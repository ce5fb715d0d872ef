//! Graph generators: cliques, cycles, Turán and multipartite graphs,
//! seeded random graphs and planted insertions.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::Graph;

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    g
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    let mut g = path(n);
    g.add_edge(n - 1, 0);
    g
}

/// Two triangles sharing vertex 0.
pub fn bowtie() -> Graph {
    Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
}

/// Complete multipartite graph; part `i` occupies a contiguous index range.
pub fn complete_multipartite(sizes: &[usize]) -> Graph {
    let n = sizes.iter().sum();
    let mut part = Vec::with_capacity(n);
    for (i, &s) in sizes.iter().enumerate() {
        part.extend(core::iter::repeat_n(i, s));
    }
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if part[u] != part[v] {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Part sizes of the Turán graph `T_k(n)`, largest first.
pub fn turan_parts(n: usize, k: usize) -> Vec<usize> {
    assert!(k >= 1, "Turán graph needs at least one part");
    (0..k).map(|i| n / k + usize::from(i < n % k)).collect()
}

/// The balanced complete `k`-partite graph `T_k(n)`.
pub fn turan(n: usize, k: usize) -> Graph {
    complete_multipartite(&turan_parts(n, k))
}

/// Erdős–Rényi `G(n, p)` from a seeded ChaCha stream.
pub fn random(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// `T_k(n)` with each pair inside a class added independently with
/// probability `p_inside` and each crossing pair removed with probability
/// `p_missing`.
pub fn perturbed_turan(n: usize, k: usize, p_inside: f64, p_missing: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = turan(n, k);
    for u in 0..n {
        for v in u + 1..n {
            let roll = rng.gen::<f64>();
            if g.has_edge(u, v) {
                if roll < p_missing {
                    g.remove_edge(u, v);
                }
            } else if roll < p_inside {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// `base` with `insert` copied onto `target` (vertex `i` of `insert` goes to
/// `target[i]`). Returns the graph and the number of inserted edges that
/// were already present.
///
/// # Panics
/// If `target` is shorter than `insert` or repeats a vertex.
pub fn planted(base: &Graph, insert: &Graph, target: &[usize]) -> (Graph, usize) {
    assert!(target.len() >= insert.order(), "plant target too small");
    for (i, a) in target.iter().enumerate() {
        assert!(!target[..i].contains(a), "plant target repeats vertex {a}");
    }
    let mut g = base.clone();
    let mut overlaps = 0;
    for (u, v) in insert.edges() {
        if !g.add_edge(target[u], target[v]) {
            overlaps += 1;
        }
    }
    (g, overlaps)
}
