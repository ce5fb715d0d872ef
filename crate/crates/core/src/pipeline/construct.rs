use alloc::format;
use alloc::vec::Vec;

use crate::color::chromatic_uncapped;
use crate::embed::find_embeddings;
use crate::extremal::{biex, turan_number, Status};
use crate::generate::turan;
use crate::{Caps, Error, Graph, Result};

/// Largest number of vertex subsets the exhaustive plant search may visit.
const SUBSET_LIMIT: u64 = 2_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PlantMethod {
    /// Repeatedly dropping a minimum-degree vertex met the bound.
    Greedy,
    /// The densest subset of the target order, found by exhaustive search.
    Exhaustive,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct LowerBoundCertificate {
    pub n: usize,
    pub r: usize,
    /// `biex(n, H)`, the edge count of the witness `W`.
    pub biex: usize,
    /// Vertices of `W` kept for the plant, ascending.
    pub plant_vertices: Vec<usize>,
    pub plant_edges: usize,
    /// `ceil(biex / (r-1)^2)`.
    pub required_plant_edges: usize,
    pub method: PlantMethod,
    pub edges: usize,
    /// `ex(n, K_r)`.
    pub turan: usize,
    /// `edges >= turan + required_plant_edges`.
    pub bound_met: bool,
    /// `None` when `n` is above the embedding cap and the check was skipped.
    pub h_free: Option<bool>,
}

/// A graph with `ex(n, K_r) + ceil(biex(n, H) / (r-1)^2)` or more edges and,
/// when the check is within the caps, verified to contain no copy of `H`.
///
/// Plants a subgraph of the `biex` witness on `ceil(n/(r-1))` vertices into
/// the largest class of `T_{r-1}(n)` (vertices `0..ceil(n/(r-1))`).
pub fn lower_bound_construction(n: usize, h: &Graph, budget: u64, caps: &Caps) -> Result<(Graph, LowerBoundCertificate)> {
    let r = chromatic_uncapped(h);
    if r < 3 {
        return Err(Error::Domain(format!("H must have chromatic number at least 3 (got {r})")));
    }
    let rec = biex(n, h, budget, caps)?;
    if rec.status != Status::Exact {
        return Err(Error::Budget { what: "exact biex witness for the construction", nodes: rec.nodes });
    }
    let w = &rec.witness;
    let k = r - 1;
    let size = n.div_ceil(k);
    let required = rec.value.div_ceil(k * k);

    let mut alive: Vec<usize> = (0..n).collect();
    while alive.len() > size {
        let (pos, _) = alive
            .iter()
            .enumerate()
            .map(|(p, &v)| (p, alive.iter().filter(|&&u| w.has_edge(u, v)).count()))
            .min_by_key(|&(p, d)| (d, alive[p]))
            .expect("non-empty");
        alive.remove(pos);
    }
    let mut method = PlantMethod::Greedy;
    if w.induced(&alive).size() < required {
        if let Some(best) = densest_subset(w, size) {
            alive = best;
            method = PlantMethod::Exhaustive;
        }
    }
    let plant = w.induced(&alive);
    let mut g = turan(n, k);
    for (u, v) in plant.edges() {
        g.add_edge(u, v);
    }
    let h_free = if n <= caps.embedding {
        Some(find_embeddings(h, &g, 1, None, caps)?.is_empty())
    } else {
        None
    };
    let t = turan_number(n, r);
    let cert = LowerBoundCertificate {
        n,
        r,
        biex: rec.value,
        plant_vertices: alive,
        plant_edges: plant.size(),
        required_plant_edges: required,
        method,
        edges: g.size(),
        turan: t,
        bound_met: g.size() >= t + required,
        h_free,
    };
    Ok((g, cert))
}

/// Lexicographically first `size`-subset of vertices spanning the most
/// edges, or `None` if there are too many subsets to try.
fn densest_subset(w: &Graph, size: usize) -> Option<Vec<usize>> {
    let n = w.order();
    if binomial(n as u64, size as u64) > SUBSET_LIMIT {
        return None;
    }
    let mut best: Option<(usize, Vec<usize>)> = None;
    let mut pick: Vec<usize> = (0..size).collect();
    loop {
        let e = w.induced(&pick).size();
        if best.as_ref().is_none_or(|(b, _)| e > *b) {
            best = Some((e, pick.clone()));
        }
        // Next combination in lexicographic order.
        let Some(i) = (0..size).rev().find(|&i| pick[i] < n - size + i) else { break };
        pick[i] += 1;
        for j in i + 1..size {
            pick[j] = pick[j - 1] + 1;
        }
    }
    best.map(|(_, p)| p)
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k.min(n - k)).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{bowtie, complete, complete_multipartite};

    #[test]
    fn k4_gives_the_turan_graph() {
        let caps = Caps::default();
        let (g, c) = lower_bound_construction(7, &complete(4), 1_000_000, &caps).unwrap();
        assert_eq!(c.biex, 0);
        assert_eq!(g, turan(7, 3));
        assert_eq!(c.h_free, Some(true));
    }

    #[test]
    fn bowtie_at_eight() {
        let caps = Caps::default();
        let (g, c) = lower_bound_construction(8, &bowtie(), 10_000_000, &caps).unwrap();
        assert_eq!(c.biex, 1);
        assert_eq!(g.size(), 17);
        assert!(c.bound_met);
        assert_eq!(c.h_free, Some(true));
    }

    #[test]
    fn k222_at_seven() {
        let caps = Caps::default();
        let h = complete_multipartite(&[2, 2, 2]);
        let (g, c) = lower_bound_construction(7, &h, 10_000_000, &caps).unwrap();
        assert_eq!(c.biex, 9);
        assert!(c.plant_edges >= 3);
        assert_eq!(g.size(), c.turan + c.plant_edges);
        assert!(c.bound_met);
        assert_eq!(c.h_free, Some(true));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 5), 252);
        assert_eq!(binomial(4, 7), 0);
        assert_eq!(binomial(60, 30), 118_264_581_564_861_424);
    }
}
