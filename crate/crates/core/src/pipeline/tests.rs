use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::generate::{complete, complete_multipartite, cycle, turan};

fn k55_plus(edges: &[(usize, usize)]) -> Graph {
    let mut g = complete_multipartite(&[5, 5]);
    for &(u, v) in edges {
        g.add_edge(u, v);
    }
    g
}

fn c4_edges() -> Vec<(usize, usize)> {
    vec![(0, 1), (1, 2), (2, 3), (0, 3)]
}

#[test]
fn permutations_are_lexicographic() {
    assert_eq!(permutations(3), [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]]);
    assert_eq!(permutations(0), [Vec::<usize>::new()]);
}

#[test]
fn triangle_with_one_planted_edge() {
    let g = k55_plus(&[(0, 1)]);
    let run = decompose(&g, &complete(3), &PipelineParams::default()).unwrap();
    assert_eq!(run.report.t, 24);
    assert_eq!(run.report.target, 25);
    assert!(run.report.success && run.report.verified);
    assert_eq!(run.report.step1.copies, 1);
    assert_eq!(run.report.threshold.value, 0);
    assert_eq!(run.report.m, 1);
}

#[test]
fn k222_with_planted_c4() {
    let g = k55_plus(&c4_edges());
    let params = PipelineParams {
        beta: Ratio::new(1, 2),
        step1_threshold: Step1Threshold::Supplied(0),
        ..PipelineParams::default()
    };
    let run = decompose(&g, &complete_multipartite(&[2, 2, 2]), &params).unwrap();
    assert_eq!(run.report.t, 18);
    assert!(run.report.verified && run.report.success);
    assert_eq!(run.step1_copies.len(), 1);
    assert_eq!(run.report.m, 4);
    assert!(run.report.x_loads.is_empty());
}

#[test]
fn bipartite_twenty_with_three_planted_edges() {
    let mut g = complete_multipartite(&[10, 10]);
    for (u, v) in [(0, 1), (2, 3), (4, 5)] {
        g.add_edge(u, v);
    }
    let run = decompose(&g, &complete(3), &PipelineParams::default()).unwrap();
    assert_eq!(run.report.t, g.size() - 6);
    assert!(run.report.t <= turan_number(20, 3));
}

#[test]
fn triangle_free_input_is_left_alone() {
    let g = turan(12, 2);
    let run = decompose(&g, &complete(3), &PipelineParams::default()).unwrap();
    assert_eq!(run.report.t, 36);
    assert!(run.decomposition.copies.is_empty());
    assert_eq!(run.report.step1.stop, Step1Stop::ThresholdMet);
    assert_eq!(run.report.step2.stop, Step2Stop::XPrimeEmpty);
}

#[test]
fn accounting_identities_hold() {
    let g = crate::generate::random(24, 0.6, 3);
    let h = complete(3);
    let run = decompose(&g, &h, &PipelineParams::default()).unwrap();
    let rep = &run.report;
    assert!(rep.verified);
    assert_eq!(rep.m, rep.m_prime + rep.m_x_total);
    assert_eq!(rep.m_x_total, rep.e_x + rep.x_loads.iter().map(|l| l.m_x).sum::<usize>());
    let copies = rep.step1.copies + rep.step2.copies;
    assert_eq!(rep.t, rep.e_g - (h.size() - 1) * copies);
    assert!(rep.step1.ledger_consistent && rep.step2.ledger_consistent);
}

#[test]
fn deterministic_reports() {
    let g = crate::generate::random(30, 0.5, 11);
    let h = complete_multipartite(&[1, 1, 2]);
    let a = decompose(&g, &h, &PipelineParams::default()).unwrap();
    let b = decompose(&g, &h, &PipelineParams::default()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn step2_through_one_high_degree_vertex() {
    // K_{4,4} on 0..8 plus vertex 8 joined to 0,1,2 and 4,5,6.
    let mut g = complete_multipartite(&[4, 4]).disjoint_union(&Graph::empty(1));
    for v in [0, 1, 2, 4, 5, 6] {
        g.add_edge(8, v);
    }
    let mut state = PartitionState::from_parts(&g, &[vec![0, 1, 2, 3, 8], vec![4, 5, 6, 7]], &[vec![8], vec![]]);
    let beta = Ratio::new(1, 3);
    assert_eq!(x_prime(&state, beta), [8]);
    let out = step2_deplete(&mut g, &mut state, &complete(3), 1, beta, 1_000_000);
    assert_eq!(out.copies.len(), 2);
    assert_eq!(out.stop, Step2Stop::XPrimeEmpty);
    assert!(out.copies.iter().all(|c| c.x_vertices == [8]));
    assert!(out.ledger_consistent);
}

#[test]
fn step2_needs_sigma_vertices() {
    let mut g = complete_multipartite(&[4, 4]).disjoint_union(&Graph::empty(1));
    for v in 0..8 {
        g.add_edge(8, v);
    }
    let mut state = PartitionState::from_parts(&g, &[vec![0, 1, 2, 3, 8], vec![4, 5, 6, 7]], &[vec![8], vec![]]);
    let out = step2_deplete(&mut g, &mut state, &complete_multipartite(&[2, 2, 2]), 2, Ratio::new(1, 3), 1_000_000);
    assert!(out.copies.is_empty());
    assert_eq!(out.stop, Step2Stop::TooFewEligible);
}

#[test]
fn step1_on_turan_graph_does_nothing() {
    let mut g = turan(10, 2);
    let mut state = stability_partition(&g, 2, 0, 2);
    identify_x(&mut state, &g, Ratio::new(1, 4));
    let fstar = crate::family::minimal_decomposition_family(&cycle(5), &Caps::default()).unwrap();
    let out = step1_deplete(&mut g, &mut state, &cycle(5), &fstar, Ratio::new(1, 4), 0, 1000);
    assert!(out.copies.is_empty());
    assert_eq!(out.stop, Step1Stop::ThresholdMet);
}

#[test]
fn rejects_bipartite_patterns_and_small_hosts() {
    let p = PipelineParams::default();
    assert!(matches!(decompose(&complete(5), &cycle(4), &p), Err(Error::Domain(_))));
    assert!(matches!(decompose(&complete(3), &complete(4), &p), Err(Error::Domain(_))));
    let bad = PipelineParams { beta: Ratio::new(1, 1), ..PipelineParams::default() };
    assert!(matches!(decompose(&complete(5), &complete(3), &bad), Err(Error::Domain(_))));
}
