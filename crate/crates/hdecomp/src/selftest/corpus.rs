//! The seeded instances the pipeline criteria run on.

use hdecomp_core::canon::are_isomorphic;
use hdecomp_core::family::{chromatic_excess, minimal_decomposition_family};
use hdecomp_core::generate::{bowtie, complete, complete_multipartite, cycle, perturbed_turan, planted, random, turan};
use hdecomp_core::pipeline::{turan_min_degree, PipelineParams, PipelineRun, Ratio, Step1Threshold};
use hdecomp_core::{verify_decomposition, Caps, Graph};

pub struct Instance {
    pub name: String,
    pub g: Graph,
    pub h: Graph,
    pub params: PipelineParams,
}

fn patterns() -> Vec<(&'static str, Graph)> {
    vec![
        ("k3", complete(3)),
        ("k4", complete(4)),
        ("k222", complete_multipartite(&[2, 2, 2])),
        ("bowtie", bowtie()),
        ("c5", cycle(5)),
    ]
}

fn parts_for(h: &Graph) -> usize {
    if *h == complete(4) {
        3
    } else {
        2
    }
}

/// Fifty instances: Turán graphs, Turán graphs with a minimal-family member
/// planted in one class, perturbed Turán graphs, `G(n, p)`, and Turán graphs
/// with a few vertices joined into their own class.
pub fn pipeline_corpus() -> Vec<Instance> {
    let caps = Caps::default();
    let mut out = Vec::new();
    let base = PipelineParams::default;
    for (i, (name, h)) in patterns().into_iter().enumerate() {
        let k = parts_for(&h);
        for n in [10 + 2 * i, 18 + 3 * i] {
            out.push(Instance { name: format!("turan-{n}-{k}/{name}"), g: turan(n, k), h: h.clone(), params: base() });
        }
        let f = minimal_decomposition_family(&h, &caps).expect("builtin pattern").graphs().next().unwrap().clone();
        for (j, n) in [12usize, 21].into_iter().enumerate() {
            let target: Vec<usize> = (0..f.order()).collect();
            let (g, _) = planted(&turan(n, k), &f, &target);
            let params = if j == 0 {
                PipelineParams { beta: Ratio::new(1, 2), step1_threshold: Step1Threshold::Supplied(0), ..base() }
            } else {
                base()
            };
            out.push(Instance { name: format!("planted-{n}/{name}"), g, h: h.clone(), params });
        }
        for (j, n) in [24usize, 36, 48].into_iter().enumerate() {
            let seed = (10 * i + j) as u64;
            out.push(Instance {
                name: format!("perturbed-{n}-s{seed}/{name}"),
                g: perturbed_turan(n, k, 0.06, 0.02, seed),
                h: h.clone(),
                params: PipelineParams { seed, ..base() },
            });
        }
        for (j, n) in [20usize, 60].into_iter().enumerate() {
            let seed = (100 + 10 * i + j) as u64;
            out.push(Instance {
                name: format!("gnp-{n}-s{seed}/{name}"),
                g: random(n, 0.5, seed),
                h: h.clone(),
                params: PipelineParams { seed, ..base() },
            });
        }
        let n = 30;
        let mut g = turan(n, k);
        let class = n.div_ceil(k);
        for v in 2..class {
            if v % 2 == 0 {
                g.add_edge(0, v);
            }
            if v % 3 == 0 {
                g.add_edge(1, v);
            }
        }
        out.push(Instance { name: format!("hubs-{n}/{name}"), g, h: h.clone(), params: base() });
    }
    out
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

/// Every structural promise of a pipeline run, checked from the outside.
pub fn check_run(g: &Graph, h: &Graph, run: &PipelineRun) -> Result<(), String> {
    let caps = Caps::default();
    verify_decomposition(g, h, &run.decomposition).map_err(|v| format!("decomposition invalid: {v}"))?;
    let rep = &run.report;
    let copies = run.decomposition.copies.len();
    ensure(rep.verified, || "report says unverified".into())?;
    ensure(copies == rep.step1.copies + rep.step2.copies, || "copy counts disagree".into())?;
    ensure(rep.t == g.size() - (h.size() - 1) * copies, || "t does not match the copy count".into())?;
    ensure(g.size() == copies * h.size() + run.decomposition.singles.len(), || "edges not accounted for".into())?;
    ensure(rep.m == rep.m_prime + rep.m_x_total, || "m != m' + m_X".into())?;
    ensure(rep.flags.partition_locally_optimal, || "partition not locally optimal".into())?;
    ensure(rep.step1.ledger_consistent && rep.step2.ledger_consistent, || "degree ledger drifted".into())?;
    let peeled = g.induced(&run.peeled_vertices);
    if let Some(d) = peeled.min_degree() {
        ensure(d >= turan_min_degree(peeled.order(), rep.r - 1), || "peeling stopped early".into())?;
    }

    let mut place = vec![None; g.order()];
    for (i, &v) in run.peeled_vertices.iter().enumerate() {
        place[v] = Some((run.partition.class_of(i), run.partition.in_x(i)));
    }
    let fstar = minimal_decomposition_family(h, &caps).map_err(|e| e.to_string())?;
    for (k, c) in run.step1_copies.iter().enumerate() {
        let map = &c.embedding.map;
        let f = h.induced(&c.f_vertices);
        let known = fstar.graphs().any(|m| are_isomorphic(m, &f, &caps).unwrap_or(false));
        ensure(known, || format!("step 1 copy {k}: F part is not a minimal-family member"))?;
        for (a, b) in h.edges() {
            let in_f = c.f_vertices.contains(&a) && c.f_vertices.contains(&b);
            let (pa, pb) = match (place[map[a]], place[map[b]]) {
                (Some(pa), Some(pb)) => (pa, pb),
                _ => return Err(format!("step 1 copy {k} uses a peeled vertex")),
            };
            ensure(!pa.1 && !pb.1, || format!("step 1 copy {k} touches X"))?;
            ensure((pa.0 == pb.0) == in_f, || format!("step 1 copy {k}: edge {a}-{b} has the wrong crossing status"))?;
            if in_f {
                ensure(pa.0 == c.class, || format!("step 1 copy {k}: F outside its class"))?;
            }
        }
    }
    let sigma = chromatic_excess(h, &caps).map_err(|e| e.to_string())?;
    for (k, c) in run.step2_copies.iter().enumerate() {
        let map = &c.embedding.map;
        let mut part = Vec::with_capacity(map.len());
        for &v in map {
            match place[v] {
                Some((_, true)) => part.push(usize::MAX),
                Some((cl, false)) => part.push(cl),
                None => return Err(format!("step 2 copy {k} uses a peeled vertex")),
            }
        }
        let in_x = part.iter().filter(|&&p| p == usize::MAX).count();
        ensure(in_x == sigma, || format!("step 2 copy {k} uses {in_x} vertices of X, expected {sigma}"))?;
        for (a, b) in h.edges() {
            ensure(part[a] != part[b], || format!("step 2 copy {k}: edge {a}-{b} is not crossing"))?;
        }
    }
    Ok(())
}
