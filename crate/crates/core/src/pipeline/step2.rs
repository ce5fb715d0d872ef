use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use super::params::Ratio;
use super::partition::PartitionState;
use super::permutations;
use crate::bits::BitSet;
use crate::color::colorings_uncapped;
use crate::embed::{Matcher, Outcome};
use crate::{Embedding, Graph};

/// A copy of `H` removed in Step 2: a smallest colour class on vertices of
/// `X'`, the other classes in distinct core classes.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Step2Copy {
    pub embedding: Embedding,
    /// Host vertices of the copy that lie in `X'`, ascending.
    pub x_vertices: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Step2Stop {
    #[serde(rename = "x-prime-empty")]
    XPrimeEmpty,
    #[serde(rename = "fewer than σ(H) eligible vertices")]
    TooFewEligible,
    #[serde(rename = "no copy found")]
    NoCopyFound,
    #[serde(rename = "budget exhausted")]
    BudgetExhausted,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct Step2Outcome {
    pub copies: Vec<Step2Copy>,
    pub stop: Step2Stop,
    pub nodes: u64,
    /// `X'` when the step ended.
    pub x_prime: Vec<usize>,
    pub ledger_consistent: bool,
}

/// `X' = {x in X : deg(x, V'_i) > beta^2 n for every i}` with `n` the order
/// of the working graph.
pub fn x_prime(state: &PartitionState, beta: Ratio) -> Vec<usize> {
    let n = state.order() as u128;
    let (num, den) = (beta.num() as u128, beta.den() as u128);
    state
        .x_vertices()
        .into_iter()
        .filter(|&x| (0..state.parts()).all(|i| state.core_degree(x, i) as u128 * den * den > num * num * n))
        .collect()
}

/// Per-vertex placement of `H`: `parts` means `X'`, anything smaller is a
/// core class.
fn placements(h: &Graph, parts: usize, sigma: usize) -> Vec<Vec<usize>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for colouring in colorings_uncapped(h, parts + 1) {
        let classes = colouring.class_sets();
        for (s, small) in classes.iter().enumerate() {
            if small.len() != sigma {
                continue;
            }
            let others: Vec<&Vec<usize>> =
                classes.iter().enumerate().filter(|&(c, _)| c != s).map(|(_, c)| c).collect();
            for perm in permutations(parts) {
                let mut tag = vec![parts; h.order()];
                for (t, cls) in others.iter().enumerate() {
                    for &v in cls.iter() {
                        tag[v] = perm[t];
                    }
                }
                if seen.insert(tag.clone()) {
                    out.push(tag);
                }
            }
        }
    }
    out
}

/// Removes copies of `H` meeting `X'` in exactly a smallest colour class,
/// with every edge crossing, until `X'` is empty, has fewer than `sigma`
/// vertices, no copy exists, or the node budget runs out.
pub fn step2_deplete(
    g: &mut Graph,
    state: &mut PartitionState,
    h: &Graph,
    sigma: usize,
    beta: Ratio,
    budget: u64,
) -> Step2Outcome {
    let parts = state.parts();
    let options = placements(h, parts, sigma);
    let mut remaining = budget;
    let mut copies = Vec::new();
    let mut ledger_consistent = true;
    let stop = loop {
        let xp = x_prime(state, beta);
        if xp.is_empty() {
            break Step2Stop::XPrimeEmpty;
        }
        if xp.len() < sigma {
            break Step2Stop::TooFewEligible;
        }
        let xset = BitSet::from_iter(g.order(), xp.iter().copied());
        let mut found = None;
        let mut out_of_budget = false;
        for tag in &options {
            let allowed: Vec<BitSet> = tag
                .iter()
                .map(|&t| if t == parts { xset.clone() } else { state.core(t).clone() })
                .collect();
            let outcome = Matcher::new(h, g, Some(&allowed)).run(&mut remaining, |map| {
                found = Some(map.to_vec());
                ControlFlow::Break(())
            });
            match outcome {
                Outcome::Stopped => break,
                Outcome::BudgetExhausted => {
                    out_of_budget = true;
                    break;
                }
                Outcome::Exhausted => {}
            }
        }
        let Some(map) = found else {
            break if out_of_budget { Step2Stop::BudgetExhausted } else { Step2Stop::NoCopyFound };
        };
        let embedding = Embedding { map };
        for (u, v) in embedding.image_edges(h) {
            g.remove_edge(u, v);
            state.remove_edge(u, v);
        }
        ledger_consistent &= state.ledger_matches(g);
        let mut x_vertices: Vec<usize> = embedding.map.iter().copied().filter(|v| xset.contains(*v)).collect();
        x_vertices.sort_unstable();
        copies.push(Step2Copy { embedding, x_vertices });
    };
    let x_prime = x_prime(state, beta);
    Step2Outcome { copies, stop, nodes: budget - remaining, x_prime, ledger_consistent }
}
