//! Structural properties of pipeline runs, checked independently of the
//! code that produced them.

use hdecomp_core::canon::are_isomorphic;
use hdecomp_core::family::{chromatic_excess, minimal_decomposition_family};
use hdecomp_core::generate::{bowtie, complete, complete_multipartite, cycle, planted, random, turan};
use hdecomp_core::packing::phi_exact;
use hdecomp_core::pipeline::{decompose, turan_min_degree, PipelineParams, PipelineRun, Ratio, Step1Threshold};
use hdecomp_core::{verify_decomposition, Caps, Graph};
use proptest::prelude::*;

/// Class of each input vertex in the final partition, `None` for peeled
/// vertices, and whether it lies in `X`.
fn placement(run: &PipelineRun, n: usize) -> Vec<Option<(usize, bool)>> {
    let mut out = vec![None; n];
    for (i, &v) in run.peeled_vertices.iter().enumerate() {
        out[v] = Some((run.partition.class_of(i), run.partition.in_x(i)));
    }
    out
}

fn check_run(g: &Graph, h: &Graph, run: &PipelineRun) {
    let caps = Caps::default();
    assert_eq!(verify_decomposition(g, h, &run.decomposition), Ok(()));
    let rep = &run.report;
    assert!(rep.verified);
    let copies = run.decomposition.copies.len();
    assert_eq!(copies, rep.step1.copies + rep.step2.copies);
    assert_eq!(rep.t, g.size() - (h.size() - 1) * copies);
    assert_eq!(g.size(), copies * h.size() + run.decomposition.singles.len());
    assert_eq!(rep.m, rep.m_prime + rep.m_x_total);
    assert!(rep.flags.partition_locally_optimal);
    assert!(rep.step1.ledger_consistent && rep.step2.ledger_consistent);

    let peeled = g.induced(&run.peeled_vertices);
    if let Some(d) = peeled.min_degree() {
        assert!(d >= turan_min_degree(peeled.order(), rep.r - 1));
    }

    let place = placement(run, g.order());
    let fstar = minimal_decomposition_family(h, &caps).unwrap();
    for c in &run.step1_copies {
        let map = &c.embedding.map;
        let f = h.induced(&c.f_vertices);
        assert!(fstar.graphs().any(|m| are_isomorphic(m, &f, &caps).unwrap()));
        for &hv in &c.f_vertices {
            assert_eq!(place[map[hv]], Some((c.class, false)), "F part outside its core class");
        }
        for (a, b) in h.edges() {
            let in_f = c.f_vertices.contains(&a) && c.f_vertices.contains(&b);
            let (pa, pb) = (place[map[a]].unwrap(), place[map[b]].unwrap());
            assert!(!pa.1 && !pb.1, "Step 1 copy touches X");
            assert_eq!(pa.0 == pb.0, in_f, "edge {a}-{b} has the wrong crossing status");
        }
    }
    let sigma = chromatic_excess(h, &caps).unwrap();
    for c in &run.step2_copies {
        let map = &c.embedding.map;
        let in_x: Vec<usize> = map.iter().copied().filter(|&v| place[v].unwrap().1).collect();
        assert_eq!(in_x.len(), sigma);
        assert_eq!(c.x_vertices.len(), sigma);
        let part = |v: usize| {
            let (cl, x) = place[v].unwrap();
            if x {
                usize::MAX
            } else {
                cl
            }
        };
        for (a, b) in h.edges() {
            assert_ne!(part(map[a]), part(map[b]), "Step 2 edge {a}-{b} not crossing");
        }
    }
}

fn patterns() -> Vec<Graph> {
    vec![complete(3), complete(4), complete_multipartite(&[2, 2, 2]), bowtie(), cycle(5)]
}

#[test]
fn structured_instances() {
    let p = PipelineParams::default();
    for h in patterns() {
        for g in [turan(12, 2), turan(15, 3), complete_multipartite(&[6, 6]).disjoint_union(&complete(4))] {
            let run = decompose(&g, &h, &p).unwrap();
            check_run(&g, &h, &run);
        }
    }
}

#[test]
fn planted_family_members() {
    let caps = Caps::default();
    for h in patterns() {
        let r = hdecomp_core::color::chromatic_number(&h, &caps).unwrap();
        let base = turan(18, r - 1);
        let fstar = minimal_decomposition_family(&h, &caps).unwrap();
        let f = fstar.graphs().next().unwrap().clone();
        let (g, _) = planted(&base, &f, &(0..f.order()).collect::<Vec<_>>());
        let params = PipelineParams {
            beta: Ratio::new(1, 2),
            step1_threshold: Step1Threshold::Supplied(0),
            ..PipelineParams::default()
        };
        let run = decompose(&g, &h, &params).unwrap();
        check_run(&g, &h, &run);
    }
}

#[test]
fn never_beats_the_optimum() {
    let caps = Caps::default();
    for seed in 0..12 {
        let g = random(9, 0.7, seed);
        for h in [complete(3), bowtie()] {
            let run = decompose(&g, &h, &PipelineParams::default()).unwrap();
            let (opt, _) = phi_exact(&g, &h, &caps).unwrap();
            assert!(run.report.t >= opt, "seed {seed}: {} < {opt}", run.report.t);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_runs_are_valid(n in 6usize..40, p in 0.3f64..0.95, seed in any::<u64>(), which in 0usize..5) {
        let g = random(n, p, seed);
        let h = &patterns()[which];
        prop_assume!(g.order() >= h.order());
        let params = PipelineParams { seed, ..PipelineParams::default() };
        let run = decompose(&g, h, &params).unwrap();
        check_run(&g, h, &run);
        let again = decompose(&g, h, &params).unwrap();
        prop_assert_eq!(run, again);
    }
}
