use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use super::params::Ratio;
use super::partition::PartitionState;
use super::permutations;
use crate::bits::BitSet;
use crate::embed::{Matcher, Outcome};
use crate::family::MemberOrigin;
use crate::{Embedding, Graph, GraphFamily};

/// A copy of `H` removed in Step 1: one member `F` of the minimal family
/// inside a single core class, every other edge crossing.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Step1Copy {
    pub embedding: Embedding,
    /// Core class holding the `F` part.
    pub class: usize,
    /// Index of `F` in the family.
    pub member: usize,
    /// Vertices of `H` that form `F`, ascending.
    pub f_vertices: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Step1Stop {
    #[serde(rename = "threshold-met")]
    ThresholdMet,
    #[serde(rename = "step1-stalled")]
    Stalled,
    #[serde(rename = "step1-budget-exhausted")]
    BudgetExhausted,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct Step1Outcome {
    pub copies: Vec<Step1Copy>,
    pub stop: Step1Stop,
    pub nodes: u64,
    /// The ledger matched a fresh count after every deletion.
    pub ledger_consistent: bool,
}

/// While some core class `V'_i` spans more than `threshold` edges, removes a
/// copy of `H` made of a family member inside `V'_i` and active common
/// neighbours in the other core classes.
///
/// Members are taken in family order and their embeddings in search order;
/// the remaining colour classes of `H` go to distinct other core classes
/// (assignments tried in lexicographic order), each filled with the
/// lowest-indexed active common neighbours of everything chosen so far.
/// `g` is the residual graph and is modified in place.
pub fn step1_deplete(
    g: &mut Graph,
    state: &mut PartitionState,
    h: &Graph,
    fstar: &GraphFamily,
    beta: Ratio,
    threshold: usize,
    budget: u64,
) -> Step1Outcome {
    let mut remaining = budget;
    let mut copies = Vec::new();
    let mut ledger_consistent = true;
    state.refresh_active(beta);
    let stop = loop {
        let over: Vec<usize> = (0..state.parts())
            .filter(|&i| state.core_edges(g, i) > threshold)
            .collect();
        if over.is_empty() {
            break Step1Stop::ThresholdMet;
        }
        let mut out_of_budget = false;
        let mut found = None;
        'search: for &i in &over {
            let allowed = vec![state.core(i).clone(); h.order()];
            for (idx, member) in fstar.members().iter().enumerate() {
                let Some(origin) = &member.origin else { continue };
                let matcher = Matcher::new(&member.graph, g, Some(&allowed[..member.graph.order()]));
                let outcome = matcher.run(&mut remaining, |fmap| match extend(g, state, h, origin, fmap, i) {
                    Some(map) => {
                        found = Some(Step1Copy {
                            embedding: Embedding { map },
                            class: i,
                            member: idx,
                            f_vertices: sorted(&origin.vertices),
                        });
                        ControlFlow::Break(())
                    }
                    None => ControlFlow::Continue(()),
                });
                match outcome {
                    Outcome::Stopped => break 'search,
                    Outcome::BudgetExhausted => {
                        out_of_budget = true;
                        break 'search;
                    }
                    Outcome::Exhausted => {}
                }
            }
        }
        let Some(copy) = found else {
            break if out_of_budget { Step1Stop::BudgetExhausted } else { Step1Stop::Stalled };
        };
        for (u, v) in copy.embedding.image_edges(h) {
            g.remove_edge(u, v);
            state.remove_edge(u, v);
        }
        for &v in &copy.embedding.map {
            state.refresh_active_at(v, beta);
        }
        ledger_consistent &= state.ledger_matches(g);
        copies.push(copy);
    };
    Step1Outcome { copies, stop, nodes: budget - remaining, ledger_consistent }
}

fn sorted(v: &[usize]) -> Vec<usize> {
    let mut v = v.to_vec();
    v.sort_unstable();
    v
}

/// Completes an embedding of a family member into a full copy of `H`, or
/// `None` if some colour class cannot be filled.
fn extend(
    g: &Graph,
    state: &PartitionState,
    h: &Graph,
    origin: &MemberOrigin,
    fmap: &[usize],
    class: usize,
) -> Option<Vec<usize>> {
    let n = g.order();
    let mut base = vec![usize::MAX; h.order()];
    for (m, &hv) in origin.vertices.iter().enumerate() {
        base[hv] = fmap[m];
    }
    let colours = origin.colors.iter().copied().max().map_or(0, |c| c + 1);
    let rest: Vec<Vec<usize>> = (0..colours)
        .filter(|&c| c != origin.kept.0 && c != origin.kept.1)
        .map(|c| (0..h.order()).filter(|&v| origin.colors[v] == c).collect())
        .collect();
    let targets: Vec<usize> = (0..state.parts()).filter(|&j| j != class).collect();
    if rest.len() > targets.len() {
        return None;
    }
    'assign: for perm in permutations(targets.len()) {
        let mut map = base.clone();
        let mut common = BitSet::full(n);
        for &w in fmap {
            common.intersect_with(g.row(w));
        }
        for (t, cls) in rest.iter().enumerate() {
            let j = targets[perm[t]];
            let mut cand = common.clone();
            cand.intersect_with(state.core(j).words());
            let picked: Vec<usize> = cand
                .iter()
                .filter(|&w| state.is_active(w))
                .take(cls.len())
                .collect();
            if picked.len() < cls.len() {
                continue 'assign;
            }
            for (&hv, &w) in cls.iter().zip(&picked) {
                map[hv] = w;
                common.intersect_with(g.row(w));
            }
        }
        return Some(map);
    }
    None
}
