//! Deliberately naive reference computations. Nothing here shares code
//! with the searches it is used to check.

use std::collections::HashMap;

use hdecomp_core::Graph;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// `ex(n, C_4)` over every labelled graph: a graph has no 4-cycle exactly
/// when no two vertices share two neighbours.
pub fn ex_c4_labelled(n: usize) -> usize {
    assert!(n <= 7, "labelled enumeration beyond 7 vertices is too large");
    let pairs = pairs(n);
    let mut best = 0;
    for mask in 0u32..1 << pairs.len() {
        let ones = mask.count_ones() as usize;
        if ones <= best {
            continue;
        }
        let mut adj = [0u32; 8];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        if pairs.iter().all(|&(u, v)| (adj[u] & adj[v]).count_ones() <= 1) {
            best = ones;
        }
    }
    best
}

/// No two vertices of `g` share two neighbours.
pub fn is_c4_free(g: &Graph) -> bool {
    let n = g.order();
    pairs(n)
        .into_iter()
        .all(|(u, v)| (0..n).filter(|&w| g.has_edge(u, w) && g.has_edge(v, w)).count() <= 1)
}

/// Edge sets (as bitmasks over `g.edges()` order) of all copies of `h` in
/// `g`, from every injective vertex map.
pub fn copy_masks(g: &Graph, h: &Graph) -> Vec<u64> {
    let edges = g.edges();
    assert!(edges.len() <= 64);
    let index: HashMap<(usize, usize), usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut out = Vec::new();
    let mut map = Vec::new();
    fn rec(g: &Graph, h: &Graph, index: &HashMap<(usize, usize), usize>, map: &mut Vec<usize>, out: &mut Vec<u64>) {
        if map.len() == h.order() {
            let mut mask = 0u64;
            for (a, b) in h.edges() {
                let (x, y) = (map[a].min(map[b]), map[a].max(map[b]));
                match index.get(&(x, y)) {
                    Some(&i) => mask |= 1 << i,
                    None => return,
                }
            }
            out.push(mask);
            return;
        }
        for w in 0..g.order() {
            if !map.contains(&w) {
                map.push(w);
                rec(g, h, index, map, out);
                map.pop();
            }
        }
    }
    rec(g, h, &index, &mut map, &mut out);
    out.sort_unstable();
    out.dedup();
    out
}

/// Fewest parts in a decomposition of `E(g)` into copies of `h` and single
/// edges, by exhaustive search over which copy (if any) covers the lowest
/// uncovered edge.
pub fn min_decomposition(g: &Graph, h: &Graph) -> usize {
    let m = g.size();
    let copies = copy_masks(g, h);
    let full = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    let mut memo = HashMap::new();
    fn best(covered: u64, full: u64, copies: &[u64], memo: &mut HashMap<u64, usize>) -> usize {
        if covered == full {
            return 0;
        }
        if let Some(&v) = memo.get(&covered) {
            return v;
        }
        let e = (!covered & full).trailing_zeros();
        let mut v = 1 + best(covered | 1 << e, full, copies, memo);
        for &c in copies {
            if c >> e & 1 == 1 && c & covered == 0 {
                v = v.min(1 + best(covered | c, full, copies, memo));
            }
        }
        memo.insert(covered, v);
        v
    }
    best(0, full, &copies, &mut memo)
}

#[cfg(test)]
mod tests {
    use super::*;
    use hdecomp_core::generate::{complete, cycle};

    #[test]
    fn small_values() {
        assert_eq!(ex_c4_labelled(4), 4);
        assert_eq!(ex_c4_labelled(5), 6);
        assert!(!is_c4_free(&cycle(4)));
        assert!(is_c4_free(&cycle(5)));
        assert_eq!(min_decomposition(&complete(4), &complete(3)), 4);
        assert_eq!(min_decomposition(&complete(5), &complete(3)), 6);
        assert_eq!(copy_masks(&complete(4), &complete(3)).len(), 4);
    }
}
