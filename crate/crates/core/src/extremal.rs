//! Turán numbers, extremal numbers of finite families, and `biex`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bits::BitSet;
use crate::canon::MAX_ORDER;
use crate::embed::Matcher;
use crate::enumerate::Orderly;
use crate::family::{chromatic_excess, minimal_decomposition_family};
use crate::generate::{complete, turan_parts};
use crate::{graph6, Caps, Error, Graph, GraphFamily, Result};

/// Default node budget for exact extremal search.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Greedy restarts used when only a lower bound is available.
const LOWER_BOUND_ROUNDS: u64 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Exact,
    LowerBound,
}

#[derive(Clone, Debug)]
pub struct ExtremalRecord {
    pub n: usize,
    pub family_key: String,
    pub value: usize,
    /// An `n`-vertex family-free graph with `value` edges.
    pub witness: Graph,
    pub status: Status,
    /// Search nodes expanded.
    pub nodes: u64,
    /// Members with more than `n` vertices, which no `n`-vertex graph contains.
    pub ignored_members: usize,
}

/// `ex(n, K_r)`, the number of edges of `T_{r-1}(n)`.
pub fn turan_number(n: usize, r: usize) -> usize {
    assert!(r >= 2, "turan_number needs r >= 2");
    let sq: usize = turan_parts(n, r - 1).iter().map(|s| s * s).sum();
    (n * n - sq) / 2
}

/// Maximum number of edges of an `n`-vertex graph containing no member of
/// `family` as a subgraph.
///
/// Up to `caps.enumeration` vertices this is an orderly generation of all
/// family-free graphs, pruning any graph that contains a member. If the
/// search expands more than `budget` nodes, or `n` is above the cap, the
/// result is a lower bound from seeded greedy edge insertion.
pub fn extremal_number(n: usize, family: &GraphFamily, budget: u64, caps: &Caps) -> Result<ExtremalRecord> {
    let active: Vec<&Graph> = family.graphs().filter(|m| m.order() <= n).collect();
    let ignored_members = family.len() - active.len();
    if active.iter().any(|m| m.size() == 0) {
        return Err(Error::Domain(format!(
            "family contains an edgeless member on at most {n} vertices; no {n}-vertex graph avoids it"
        )));
    }
    let family_key = family.key();
    if active.is_empty() {
        return Ok(ExtremalRecord {
            n,
            family_key,
            value: n * n.saturating_sub(1) / 2,
            witness: complete(n),
            status: Status::Exact,
            nodes: 0,
            ignored_members,
        });
    }
    if n > caps.enumeration.min(MAX_ORDER) {
        let mut rec = lower_bound(n, &active, 0);
        rec.family_key = family_key;
        rec.ignored_members = ignored_members;
        return Ok(rec);
    }

    let hits = |g: &Graph| active.iter().any(|m| crate::embed::contains(g, m));
    let mut search = Orderly::with_filter(n, |g: &Graph| !hits(g), budget);
    let mut best: Option<(usize, String, Graph)> = None;
    for g in search.by_ref() {
        let e = g.size();
        let better = match &best {
            None => true,
            Some((be, bc, _)) => e > *be || (e == *be && graph6::emit_graph6(&g) < *bc),
        };
        if better {
            best = Some((e, graph6::emit_graph6(&g), g));
        }
    }
    let nodes = search.nodes();
    let exhausted = search.budget_exhausted();
    let (value, _, witness) = best.unwrap_or_else(|| (0, String::new(), Graph::empty(n)));
    let mut rec = ExtremalRecord {
        n,
        family_key,
        value,
        witness,
        status: if exhausted { Status::LowerBound } else { Status::Exact },
        nodes,
        ignored_members,
    };
    if exhausted {
        let greedy = lower_bound(n, &active, 0);
        rec.nodes += greedy.nodes;
        if greedy.value > rec.value {
            rec.value = greedy.value;
            rec.witness = greedy.witness;
        }
    }
    Ok(rec)
}

/// `biex(n, H) = ex(n, F*_H)`.
pub fn biex(n: usize, h: &Graph, budget: u64, caps: &Caps) -> Result<ExtremalRecord> {
    let fstar = minimal_decomposition_family(h, caps)?;
    extremal_number(n, &fstar, budget, caps)
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct FactCheck {
    pub biex_value: usize,
    pub sigma: usize,
    /// `biex(n, H) >= n - 1` or `sigma(H) = 1`.
    pub consistent: bool,
}

/// Checks that `biex(n, H) < n - 1` forces chromatic excess 1.
pub fn check_fact_biex_sigma(h: &Graph, n: usize, budget: u64, caps: &Caps) -> Result<FactCheck> {
    let rec = biex(n, h, budget, caps)?;
    if rec.status != Status::Exact {
        return Err(Error::Budget { what: "exact biex for the fact check", nodes: rec.nodes });
    }
    let sigma = chromatic_excess(h, caps)?;
    Ok(FactCheck {
        biex_value: rec.value,
        sigma,
        consistent: rec.value + 1 >= n || sigma == 1,
    })
}

/// Whether the freshly added edge `uv` completes a copy of `pattern`.
fn edge_completes(g: &Graph, pattern: &Graph, u: usize, v: usize, nodes: &mut u64) -> bool {
    let everything = BitSet::full(g.order());
    for (a, b) in pattern.edges() {
        for (x, y) in [(u, v), (v, u)] {
            let mut allowed: Vec<BitSet> = (0..pattern.order()).map(|_| everything.clone()).collect();
            allowed[a] = BitSet::from_iter(g.order(), [x]);
            allowed[b] = BitSet::from_iter(g.order(), [y]);
            let mut found = false;
            let mut budget = u64::MAX;
            Matcher::new(pattern, g, Some(&allowed)).run(&mut budget, |_| {
                found = true;
                ControlFlow::Break(())
            });
            *nodes += u64::MAX - budget;
            if found {
                return true;
            }
        }
    }
    false
}

/// Seeded greedy insertion: add edges in random order, undoing any edge
/// that completes a family member. Best of several restarts.
fn lower_bound(n: usize, members: &[&Graph], seed: u64) -> ExtremalRecord {
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    let mut nodes = 0;
    let mut best = Graph::empty(n);
    for round in 0..LOWER_BOUND_ROUNDS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(round));
        pairs.shuffle(&mut rng);
        let mut g = Graph::empty(n);
        for &(u, v) in &pairs {
            g.add_edge(u, v);
            if members.iter().any(|m| edge_completes(&g, m, u, v, &mut nodes)) {
                g.remove_edge(u, v);
            }
        }
        if g.size() > best.size() {
            best = g;
        }
    }
    ExtremalRecord {
        n,
        family_key: String::new(),
        value: best.size(),
        witness: best,
        status: Status::LowerBound,
        nodes,
        ignored_members: 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{bowtie, complete_multipartite, cycle, path};

    fn fam(graphs: Vec<Graph>) -> GraphFamily {
        GraphFamily::from_graphs(graphs, "test", &Caps::default()).unwrap()
    }

    #[test]
    fn turan_values() {
        assert_eq!(turan_number(5, 3), 6);
        assert_eq!(turan_number(6, 3), 9);
        assert_eq!(turan_number(7, 4), 16);
        for n in 1..20 {
            assert_eq!(turan_number(n, 3), n * n / 4);
        }
        assert_eq!(turan_number(4, 2), 0);
    }

    #[test]
    fn single_edge_plus_vertex() {
        let f = fam(alloc::vec![Graph::from_edges(3, &[(0, 1)])]);
        let r = extremal_number(3, &f, DEFAULT_BUDGET, &Caps::default()).unwrap();
        assert_eq!((r.value, r.status), (0, Status::Exact));
        // On two vertices the pattern does not fit at all.
        let r2 = extremal_number(2, &f, DEFAULT_BUDGET, &Caps::default()).unwrap();
        assert_eq!((r2.value, r2.ignored_members), (1, 1));
    }

    #[test]
    fn c4_free_on_four_vertices() {
        let f = fam(alloc::vec![cycle(4)]);
        let r = extremal_number(4, &f, DEFAULT_BUDGET, &Caps::default()).unwrap();
        assert_eq!(r.value, 4);
        let paw = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]);
        assert!(crate::canon::are_isomorphic(&r.witness, &paw, &Caps::default()).unwrap());
        assert!(!f.hits(&r.witness));
    }

    #[test]
    fn matching_or_cherry_allows_one_edge() {
        let f = fam(alloc::vec![Graph::from_edges(4, &[(0, 1), (2, 3)]), path(3)]);
        for n in 2..=8 {
            let r = extremal_number(n, &f, DEFAULT_BUDGET, &Caps::default()).unwrap();
            assert_eq!((r.value, r.status), (1, Status::Exact), "n = {n}");
        }
    }

    #[test]
    fn biex_examples() {
        let caps = Caps::default();
        for n in 3..=7 {
            assert_eq!(biex(n, &complete(4), DEFAULT_BUDGET, &caps).unwrap().value, 0);
        }
        assert_eq!(biex(6, &complete_multipartite(&[2, 2, 2]), DEFAULT_BUDGET, &caps).unwrap().value, 7);
    }

    #[test]
    fn tiny_budget_degrades_to_lower_bound() {
        let f = fam(alloc::vec![cycle(4)]);
        let r = extremal_number(7, &f, 10, &Caps::default()).unwrap();
        assert_eq!(r.status, Status::LowerBound);
        assert!(r.value <= 9);
        assert!(!f.hits(&r.witness));
    }

    #[test]
    fn above_cap_is_lower_bound() {
        let f = fam(alloc::vec![complete(3)]);
        let r = extremal_number(12, &f, DEFAULT_BUDGET, &Caps::default()).unwrap();
        assert_eq!(r.status, Status::LowerBound);
        assert!(r.value <= 36 && r.value >= 11);
        assert!(!f.hits(&r.witness));
    }

    #[test]
    fn fact_examples() {
        let caps = Caps::default();
        let k4 = check_fact_biex_sigma(&complete(4), 6, DEFAULT_BUDGET, &caps).unwrap();
        assert_eq!(k4, FactCheck { biex_value: 0, sigma: 1, consistent: true });
        let oct = check_fact_biex_sigma(&complete_multipartite(&[2, 2, 2]), 6, DEFAULT_BUDGET, &caps).unwrap();
        assert_eq!(oct, FactCheck { biex_value: 7, sigma: 2, consistent: true });
        let bt = check_fact_biex_sigma(&bowtie(), 6, DEFAULT_BUDGET, &caps).unwrap();
        assert_eq!(bt, FactCheck { biex_value: 1, sigma: 1, consistent: true });
    }

    #[test]
    fn edgeless_member_is_a_domain_error() {
        let f = fam(alloc::vec![Graph::empty(2)]);
        assert!(matches!(extremal_number(3, &f, DEFAULT_BUDGET, &Caps::default()), Err(Error::Domain(_))));
    }
}
