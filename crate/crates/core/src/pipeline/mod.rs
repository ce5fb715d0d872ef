//! The constructive deletion pipeline.
//!
//! [`decompose`] peels low-degree vertices, finds a locally maximal
//! `(r-1)`-cut, splits off the vertices with many neighbours in their own
//! class, and then removes copies of `H` in two steps: first copies built
//! around a minimal-family member inside one class, then copies through
//! the high-degree vertices. Whatever edges remain become singles. Every
//! run reports the quantities the procedure is driven by and whether the
//! numerical hypotheses of each stage held.

mod construct;
mod params;
mod partition;
mod peel;
mod step1;
mod step2;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

pub use construct::{lower_bound_construction, LowerBoundCertificate, PlantMethod};
pub use params::{asymptotic_beta, asymptotic_gamma, PipelineParams, Ratio, Step1Threshold};
pub use partition::{identify_x, is_locally_optimal, stability_partition, PartitionState};
pub use peel::{peel_min_degree, turan_min_degree, PeelStep, Peeled};
pub use step1::{step1_deplete, Step1Copy, Step1Outcome, Step1Stop};
pub use step2::{step2_deplete, x_prime, Step2Copy, Step2Outcome, Step2Stop};

use crate::color::chromatic_uncapped;
use crate::extremal::{turan_number, ExtremalRecord, Status};
use crate::family::{chromatic_excess, minimal_decomposition_family};
use crate::{verify_decomposition, Caps, Embedding, Error, Graph, HDecomposition, Result};

/// All permutations of `0..k` in lexicographic order.
pub(crate) fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(k), &mut vec![false; k], &mut out);
    out
}

/// Where [`decompose`] gets `biex(n', H)` from. The standard library crate
/// plugs a persistent cache in here.
pub trait BiexSource {
    fn biex(&mut self, n: usize, h: &Graph, budget: u64, caps: &Caps) -> Result<ExtremalRecord>;
}

/// Computes every value from scratch.
pub struct DirectBiex;

impl BiexSource for DirectBiex {
    fn biex(&mut self, n: usize, h: &Graph, budget: u64, caps: &Caps) -> Result<ExtremalRecord> {
        crate::extremal::biex(n, h, budget, caps)
    }
}

#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct ParamsReport {
    pub beta: Ratio,
    pub gamma: Ratio,
    pub beta_value: f64,
    pub gamma_value: f64,
    pub beta_asymptotic: f64,
    pub gamma_asymptotic: f64,
    /// Step 2 node budget, standing in for the supersaturation constant `K`.
    pub k_surrogate: u64,
    /// `K * v(H) / beta` with `K` replaced by the surrogate.
    pub c_surrogate: f64,
    pub seed: u64,
    pub restarts: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ThresholdReport {
    /// `"exact-biex"`, `"biex-lower-bound"` (search over budget or above the
    /// enumeration cap), `"fallback"` or `"supplied"`.
    pub mode: &'static str,
    /// Order at which `biex` was evaluated (absent when supplied).
    pub order: Option<usize>,
    pub value: usize,
    pub status: Option<Status>,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct XLoad {
    /// Vertex index in the input graph.
    pub vertex: usize,
    pub class: usize,
    /// Neighbours in its own class outside `X`.
    pub m_x: usize,
}

/// Numerical checks of the hypotheses each stage is designed around.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct PropertyFlags {
    /// Every vertex has no more neighbours in its own class than in any other.
    pub partition_locally_optimal: bool,
    /// `sum_i e(V_i) < gamma n^2`.
    pub partition_sparse: bool,
    /// `n/(r-1) - 2 sqrt(gamma) n <= |V_i| <= n/(r-1) + 2 r sqrt(gamma) n`.
    pub partition_balanced: bool,
    /// On `G[V \ X]`: `deg(v, V'_j) >= (1/(r-1) - beta) n'` across classes.
    pub core_min_degree: bool,
    /// On `G[V \ X]`: `sum_i e(V'_i) <= beta^2 n'^2 / e(H)` and
    /// `Delta(V'_i) <= 2 beta n'`.
    pub core_sparse: bool,
    /// After Step 1: `e(V'_i, V'_j) > |V'_i||V'_j| - beta^6 n^2`.
    pub cross_dense: bool,
    /// `|X| <= beta^6 n`.
    pub x_small: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct StepSummary<S> {
    pub copies: usize,
    pub stop: S,
    pub nodes: u64,
    pub ledger_consistent: bool,
}

#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct PipelineReport {
    pub n: usize,
    pub r: usize,
    pub e_g: usize,
    pub v_h: usize,
    pub e_h: usize,
    pub sigma: usize,
    pub peel_trace: Vec<PeelStep>,
    /// Order of the graph left after peeling.
    pub peeled_order: usize,
    pub class_sizes: Vec<usize>,
    /// `sum_i e(V_i)`.
    pub m: usize,
    /// `sum_i e(V'_i)`.
    pub m_prime: usize,
    /// `m - m'`.
    pub m_x_total: usize,
    /// `sum_i e(X_i)`; together with the loads this accounts for `m - m'`.
    pub e_x: usize,
    pub x_loads: Vec<XLoad>,
    pub threshold: ThresholdReport,
    pub step1: StepSummary<Step1Stop>,
    pub step2: StepSummary<Step2Stop>,
    /// `X'` when Step 2 ended, as input vertex indices.
    pub x_prime_final: Vec<usize>,
    pub t: usize,
    /// `ex(n, K_r)`.
    pub target: usize,
    pub success: bool,
    pub verified: bool,
    pub flags: PropertyFlags,
    pub params: ParamsReport,
}

/// Copies found by the pipeline, in the coordinates of the input graph.
#[derive(Clone, Debug, PartialEq)]
pub struct PipelineRun {
    pub decomposition: HDecomposition,
    pub report: PipelineReport,
    pub step1_copies: Vec<Step1Copy>,
    pub step2_copies: Vec<Step2Copy>,
    /// Partition of the peeled graph after `X` was split off, with vertex
    /// indices of the peeled graph; `peeled_vertices[i]` is the input index.
    pub partition: PartitionState,
    pub peeled_vertices: Vec<usize>,
}

/// Runs the whole pipeline with `biex` computed from scratch.
pub fn decompose(g: &Graph, h: &Graph, params: &PipelineParams) -> Result<PipelineRun> {
    decompose_with(g, h, params, &mut DirectBiex)
}

pub fn decompose_with(
    g: &Graph,
    h: &Graph,
    params: &PipelineParams,
    source: &mut dyn BiexSource,
) -> Result<PipelineRun> {
    params.validate()?;
    crate::check_cap("pattern order", h.order(), params.caps.embedding)?;
    let r = chromatic_uncapped(h);
    if r < 3 {
        return Err(Error::Domain(alloc::format!("H must have chromatic number at least 3 (got {r})")));
    }
    if g.order() < h.order() {
        return Err(Error::Domain(alloc::format!(
            "host has {} vertices, fewer than the {} of H",
            g.order(),
            h.order()
        )));
    }
    let k = r - 1;
    let beta = params.beta;
    let fstar = minimal_decomposition_family(h, &params.caps)?;
    let sigma = chromatic_excess(h, &params.caps)?;

    let Peeled { graph: mut work, kept, trace } = peel_min_degree(g, r);
    let n = work.order();
    let mut state = stability_partition(&work, k, params.seed, params.restarts);
    let locally_optimal = is_locally_optimal(&work, &state);
    let m = state.internal_edges(&work);
    let (partition_sparse, partition_balanced) = stability_flags(&state, m, params.gamma, r);

    identify_x(&mut state, &work, beta);
    let m_prime: usize = (0..k).map(|i| state.core_edges(&work, i)).sum();
    let e_x: usize = (0..k)
        .map(|i| state.x(i).iter().map(|v| work.degree_into(v, state.x(i).words())).sum::<usize>() / 2)
        .sum();
    let x_loads: Vec<XLoad> = state
        .x_vertices()
        .into_iter()
        .map(|x| {
            let class = state.class_of(x);
            XLoad { vertex: kept[x], class, m_x: state.core_degree(x, class) }
        })
        .collect();
    let n_prime = state.core_order();
    let (core_min_degree, core_sparse) = core_flags(&work, &state, beta, h.size());

    let threshold = match params.step1_threshold {
        Step1Threshold::Supplied(v) => ThresholdReport { mode: "supplied", order: None, value: v, status: None },
        Step1Threshold::ExactBiex { fallback: Some(v) } if n_prime > params.caps.enumeration => {
            ThresholdReport { mode: "fallback", order: None, value: v, status: None }
        }
        Step1Threshold::ExactBiex { .. } => {
            let rec = source.biex(n_prime, h, params.biex_budget, &params.caps)?;
            let mode = match rec.status {
                Status::Exact => "exact-biex",
                Status::LowerBound => "biex-lower-bound",
            };
            ThresholdReport { mode, order: Some(n_prime), value: rec.value, status: Some(rec.status) }
        }
    };

    let s1 = step1_deplete(&mut work, &mut state, h, &fstar, beta, threshold.value, params.step1_budget);
    let (cross_dense, x_small) = step2_flags(&work, &state, beta, n);
    let s2 = step2_deplete(&mut work, &mut state, h, sigma, beta, params.step2_budget);

    let relabel = |e: &Embedding| Embedding { map: e.map.iter().map(|&v| kept[v]).collect() };
    let step1_copies: Vec<Step1Copy> = s1
        .copies
        .iter()
        .map(|c| Step1Copy { embedding: relabel(&c.embedding), ..c.clone() })
        .collect();
    let step2_copies: Vec<Step2Copy> = s2
        .copies
        .iter()
        .map(|c| Step2Copy {
            embedding: relabel(&c.embedding),
            x_vertices: c.x_vertices.iter().map(|&v| kept[v]).collect(),
        })
        .collect();
    let copies: Vec<Embedding> = step1_copies
        .iter()
        .map(|c| c.embedding.clone())
        .chain(step2_copies.iter().map(|c| c.embedding.clone()))
        .collect();
    let decomposition = HDecomposition::from_copies(g, h, copies);
    let verified = verify_decomposition(g, h, &decomposition).is_ok();
    let t = decomposition.parts();
    let target = turan_number(g.order(), r);
    let e_h = h.size();
    let params_report = ParamsReport {
        beta,
        gamma: params.gamma,
        beta_value: beta.to_f64(),
        gamma_value: params.gamma.to_f64(),
        beta_asymptotic: asymptotic_beta(e_h),
        gamma_asymptotic: asymptotic_gamma(e_h),
        k_surrogate: params.step2_budget,
        c_surrogate: params.step2_budget as f64 * h.order() as f64 / beta.to_f64(),
        seed: params.seed,
        restarts: params.restarts,
    };
    let report = PipelineReport {
        n: g.order(),
        r,
        e_g: g.size(),
        v_h: h.order(),
        e_h,
        sigma,
        peel_trace: trace,
        peeled_order: n,
        class_sizes: state.class_sizes(),
        m,
        m_prime,
        m_x_total: m - m_prime,
        e_x,
        x_loads,
        threshold,
        step1: StepSummary {
            copies: s1.copies.len(),
            stop: s1.stop,
            nodes: s1.nodes,
            ledger_consistent: s1.ledger_consistent,
        },
        step2: StepSummary {
            copies: s2.copies.len(),
            stop: s2.stop,
            nodes: s2.nodes,
            ledger_consistent: s2.ledger_consistent,
        },
        x_prime_final: s2.x_prime.iter().map(|&v| kept[v]).collect(),
        t,
        target,
        success: t <= target,
        verified,
        flags: PropertyFlags {
            partition_locally_optimal: locally_optimal,
            partition_sparse,
            partition_balanced,
            core_min_degree,
            core_sparse,
            cross_dense,
            x_small,
        },
        params: params_report,
    };
    Ok(PipelineRun { decomposition, report, step1_copies, step2_copies, partition: state, peeled_vertices: kept })
}

fn stability_flags(state: &PartitionState, m: usize, gamma: Ratio, r: usize) -> (bool, bool) {
    let n = state.order() as f64;
    let g = gamma.to_f64();
    let sparse = (m as f64) < g * n * n;
    let root = libm::sqrt(g);
    let share = n / (r - 1) as f64;
    let balanced = state
        .class_sizes()
        .iter()
        .all(|&s| share - 2.0 * root * n <= s as f64 && s as f64 <= share + 2.0 * r as f64 * root * n);
    (sparse, balanced)
}

fn core_flags(g: &Graph, state: &PartitionState, beta: Ratio, e_h: usize) -> (bool, bool) {
    let k = state.parts();
    let n_prime = state.core_order() as f64;
    let b = beta.to_f64();
    let min_degree = (0..k).all(|i| {
        state.core(i).iter().all(|v| {
            (0..k)
                .filter(|&j| j != i)
                .all(|j| state.core_degree(v, j) as f64 >= (1.0 / k as f64 - b) * n_prime)
        })
    });
    let inside: usize = (0..k).map(|i| state.core_edges(g, i)).sum();
    let max_inside = (0..k)
        .flat_map(|i| state.core(i).iter().map(move |v| state.core_degree(v, i)))
        .max()
        .unwrap_or(0);
    let sparse = inside as f64 <= b * b * n_prime * n_prime / e_h as f64 && max_inside as f64 <= 2.0 * b * n_prime;
    (min_degree, sparse)
}

fn step2_flags(g: &Graph, state: &PartitionState, beta: Ratio, n: usize) -> (bool, bool) {
    let k = state.parts();
    let n = n as f64;
    let b6 = libm::pow(beta.to_f64(), 6.0);
    let cross = (0..k).all(|i| {
        (0..k).filter(|&j| j != i).all(|j| {
            let e: usize = state.core(i).iter().map(|v| g.degree_into(v, state.core(j).words())).sum();
            let full = (state.core(i).len() * state.core(j).len()) as f64;
            e as f64 > full - b6 * n * n
        })
    });
    let small = state.x_vertices().len() as f64 <= b6 * n;
    (cross, small)
}

/// Short human-readable status for a finished run.
pub fn summary_line(report: &PipelineReport) -> String {
    alloc::format!(
        "t={} target={} success={} step1={} step2={} verified={}",
        report.t, report.target, report.success, report.step1.copies, report.step2.copies, report.verified
    )
}

#[cfg(test)]
mod tests;
