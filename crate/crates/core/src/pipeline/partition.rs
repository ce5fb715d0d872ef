use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::params::Ratio;
use crate::bits::BitSet;
use crate::Graph;

/// A partition `V_0, ..., V_{k-1}` of the working graph, the high-degree
/// sets `X_i` inside it, and the cores `V'_i = V_i \ X_i`.
///
/// `ledger[v * k + j]` is the number of neighbours of `v` in `V'_j` in the
/// residual graph; deletions keep it current through [`Self::remove_edge`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionState {
    parts: usize,
    class_of: Vec<usize>,
    classes: Vec<BitSet>,
    x: Vec<BitSet>,
    core: Vec<BitSet>,
    ledger: Vec<usize>,
    active: Vec<bool>,
}

impl PartitionState {
    /// Builds a state from explicit classes and high-degree sets
    /// (`x[i]` must lie inside `classes[i]`).
    ///
    /// # Panics
    /// If the classes do not partition the vertices of `g`.
    pub fn from_parts(g: &Graph, classes: &[Vec<usize>], x: &[Vec<usize>]) -> Self {
        let n = g.order();
        let k = classes.len();
        let mut class_of = vec![usize::MAX; n];
        for (i, c) in classes.iter().enumerate() {
            for &v in c {
                assert!(class_of[v] == usize::MAX, "vertex {v} in two classes");
                class_of[v] = i;
            }
        }
        assert!(class_of.iter().all(|&c| c != usize::MAX), "classes must cover every vertex");
        let mut state = Self::from_assignment(g, k, class_of);
        for (i, xi) in x.iter().enumerate() {
            for &v in xi {
                assert!(state.class_of[v] == i, "X vertex {v} outside its class");
                state.x[i].insert(v);
                state.core[i].remove(v);
            }
        }
        state.rebuild_ledger(g);
        state
    }

    fn from_assignment(g: &Graph, parts: usize, class_of: Vec<usize>) -> Self {
        let n = g.order();
        let mut classes = vec![BitSet::new(n); parts];
        for (v, &c) in class_of.iter().enumerate() {
            classes[c].insert(v);
        }
        let mut state = PartitionState {
            parts,
            core: classes.clone(),
            x: vec![BitSet::new(n); parts],
            classes,
            class_of,
            ledger: vec![0; n * parts],
            active: vec![true; n],
        };
        state.rebuild_ledger(g);
        state
    }

    pub fn parts(&self) -> usize {
        self.parts
    }

    pub fn order(&self) -> usize {
        self.class_of.len()
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    pub fn class(&self, i: usize) -> &BitSet {
        &self.classes[i]
    }

    pub fn x(&self, i: usize) -> &BitSet {
        &self.x[i]
    }

    pub fn core(&self, i: usize) -> &BitSet {
        &self.core[i]
    }

    pub fn cores(&self) -> &[BitSet] {
        &self.core
    }

    pub fn in_x(&self, v: usize) -> bool {
        self.x[self.class_of[v]].contains(v)
    }

    /// `X = X_0 ∪ ... ∪ X_{k-1}` in ascending order.
    pub fn x_vertices(&self) -> Vec<usize> {
        (0..self.order()).filter(|&v| self.in_x(v)).collect()
    }

    /// Number of vertices outside `X`.
    pub fn core_order(&self) -> usize {
        self.core.iter().map(BitSet::len).sum()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(BitSet::len).collect()
    }

    /// `deg(v, V'_j)` from the ledger.
    pub fn core_degree(&self, v: usize, j: usize) -> usize {
        self.ledger[v * self.parts + j]
    }

    pub fn is_active(&self, v: usize) -> bool {
        self.active[v]
    }

    /// `sum_i e(V_i)`.
    pub fn internal_edges(&self, g: &Graph) -> usize {
        self.classes.iter().map(|c| edges_inside(g, c)).sum()
    }

    /// `e(V'_i)`.
    pub fn core_edges(&self, g: &Graph, i: usize) -> usize {
        edges_inside(g, &self.core[i])
    }

    /// Recomputes the degree ledger from `g`.
    pub fn rebuild_ledger(&mut self, g: &Graph) {
        self.ledger = self.fresh_ledger(g);
    }

    fn fresh_ledger(&self, g: &Graph) -> Vec<usize> {
        let mut ledger = vec![0; self.order() * self.parts];
        for v in 0..self.order() {
            for j in 0..self.parts {
                ledger[v * self.parts + j] = g.degree_into(v, self.core[j].words());
            }
        }
        ledger
    }

    /// Whether the ledger agrees with a from-scratch count on `g`.
    pub fn ledger_matches(&self, g: &Graph) -> bool {
        self.ledger == self.fresh_ledger(g)
    }

    /// Records the deletion of edge `uv` from the residual graph.
    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        for (a, b) in [(u, v), (v, u)] {
            let c = self.class_of[b];
            if self.core[c].contains(b) {
                self.ledger[a * self.parts + c] -= 1;
            }
        }
    }

    /// Marks which core vertices are active: `v` in `V'_i` is active when
    /// `deg(v, V'_j) >= (1/k - 2 beta) n'` for every `j != i`. Vertices of
    /// `X` are never active.
    pub fn refresh_active(&mut self, beta: Ratio) {
        let n_prime = self.core_order();
        for v in 0..self.order() {
            self.active[v] = self.active_now(v, beta, n_prime);
        }
    }

    pub(crate) fn refresh_active_at(&mut self, v: usize, beta: Ratio) {
        let n_prime = self.core_order();
        self.active[v] = self.active_now(v, beta, n_prime);
    }

    fn active_now(&self, v: usize, beta: Ratio, n_prime: usize) -> bool {
        if self.in_x(v) {
            return false;
        }
        let i = self.class_of[v];
        (0..self.parts)
            .filter(|&j| j != i)
            .all(|j| at_least_share(self.core_degree(v, j), self.parts, beta, n_prime))
    }
}

/// `d >= (1/k - 2 beta) n`, exactly.
fn at_least_share(d: usize, k: usize, beta: Ratio, n: usize) -> bool {
    let (num, den) = (beta.num() as i128, beta.den() as i128);
    let lhs = d as i128 * k as i128 * den;
    let rhs = (den - 2 * k as i128 * num) * n as i128;
    lhs >= rhs
}

fn edges_inside(g: &Graph, set: &BitSet) -> usize {
    set.iter().map(|v| g.degree_into(v, set.words())).sum::<usize>() / 2
}

/// Local-search max-cut into `parts` classes.
///
/// Each start shuffles the vertices with a seeded generator and deals them
/// round-robin into the classes. Then, while some vertex has fewer
/// neighbours in another class than in its own, the lowest-indexed such
/// vertex moves to the class where it has fewest neighbours (lowest class
/// index on ties). Every move increases the cut, so the loop ends. The start
/// with the largest final cut is kept (the earliest on ties).
pub fn stability_partition(g: &Graph, parts: usize, seed: u64, restarts: usize) -> PartitionState {
    assert!(parts >= 1, "need at least one class");
    assert!(restarts >= 1, "need at least one start");
    let n = g.order();
    let mut best: Option<(usize, Vec<usize>)> = None;
    for start in 0..restarts {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(start as u64));
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let mut class_of = vec![0; n];
        for (pos, &v) in order.iter().enumerate() {
            class_of[v] = pos % parts;
        }
        local_search(g, parts, &mut class_of);
        let internal: usize = g.edges().iter().filter(|&&(u, v)| class_of[u] == class_of[v]).count();
        let cut = g.size() - internal;
        if best.as_ref().is_none_or(|(c, _)| cut > *c) {
            best = Some((cut, class_of));
        }
    }
    let (_, class_of) = best.expect("at least one start");
    PartitionState::from_assignment(g, parts, class_of)
}

fn local_search(g: &Graph, parts: usize, class_of: &mut [usize]) {
    let n = g.order();
    let mut count = vec![0usize; n * parts];
    for (u, v) in g.edges() {
        count[u * parts + class_of[v]] += 1;
        count[v * parts + class_of[u]] += 1;
    }
    loop {
        let mv = (0..n).find_map(|v| {
            let own = count[v * parts + class_of[v]];
            let (j, d) = (0..parts)
                .map(|j| (j, count[v * parts + j]))
                .min_by_key(|&(j, d)| (d, j))
                .expect("parts >= 1");
            (d < own).then_some((v, j))
        });
        let Some((v, j)) = mv else { break };
        let from = class_of[v];
        class_of[v] = j;
        for u in g.neighbors(v) {
            count[u * parts + from] -= 1;
            count[u * parts + j] += 1;
        }
    }
}

/// Whether every vertex has at least as many neighbours in each other class
/// as in its own.
pub fn is_locally_optimal(g: &Graph, state: &PartitionState) -> bool {
    (0..g.order()).all(|v| {
        let own = g.degree_into(v, state.class(state.class_of(v)).words());
        (0..state.parts()).all(|j| g.degree_into(v, state.class(j).words()) >= own)
    })
}

/// Moves every `v` in `V_i` with `deg(v, V_i) >= beta n / 2` into `X_i`,
/// where `n` is the order of `g`, and refreshes the ledger and activity.
pub fn identify_x(state: &mut PartitionState, g: &Graph, beta: Ratio) {
    let n = g.order();
    for i in 0..state.parts {
        let members: Vec<usize> = state.classes[i].iter().collect();
        for v in members {
            let d = g.degree_into(v, state.classes[i].words());
            if 2 * d as u128 * beta.den() as u128 >= beta.num() as u128 * n as u128 {
                state.x[i].insert(v);
                state.core[i].remove(v);
            }
        }
    }
    state.rebuild_ledger(g);
    state.refresh_active(beta);
}
