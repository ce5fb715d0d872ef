use std::path::Path;

use hdecomp::formats::{
    emit_decomposition, emit_report, parse_decomposition, parse_report, read_family, write_family, DecompositionFile,
};
use hdecomp::io::{graph_lines, parse_graphs};
use hdecomp_core::family::minimal_decomposition_family;
use hdecomp_core::generate::{bowtie, complete, random};
use hdecomp_core::packing::phi_exact;
use hdecomp_core::pipeline::{decompose, PipelineParams};
use hdecomp_core::{Caps, Graph};
use proptest::prelude::*;

proptest! {
    #[test]
    fn graph_lists_roundtrip(seeds in prop::collection::vec((1usize..20, 0u64..1000), 0..6)) {
        let graphs: Vec<Graph> = seeds.iter().map(|&(n, s)| random(n, 0.4, s)).collect();
        let text = graph_lines(&graphs);
        prop_assert_eq!(parse_graphs(&text, Path::new("mem")).unwrap(), graphs);
    }

    #[test]
    fn decompositions_roundtrip(n in 3usize..9, seed in 0u64..500) {
        let g = random(n, 0.6, seed);
        let h = complete(3);
        let (_, d) = phi_exact(&g, &h, &Caps::default()).unwrap();
        let file = DecompositionFile { pattern: h, host_order: n, decomposition: d };
        let back = parse_decomposition(&emit_decomposition(&file), Path::new("mem")).unwrap();
        prop_assert_eq!(back, file);
    }
}

#[test]
fn family_with_sidecar_roundtrips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bowtie.g6");
    let fam = minimal_decomposition_family(&bowtie(), &Caps::default()).unwrap();
    write_family(&path, &fam).unwrap();
    let (graphs, side) = read_family(&path).unwrap();
    assert_eq!(graphs, fam.graphs().cloned().collect::<Vec<_>>());
    assert!(side.minimal);
    assert_eq!(side.member_count, 2);
    assert!(side.source.starts_with("F*_H"));
}

#[test]
fn sidecar_count_mismatch_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f.g6");
    write_family(&path, &minimal_decomposition_family(&bowtie(), &Caps::default()).unwrap()).unwrap();
    std::fs::write(&path, graph_lines([&complete(2)])).unwrap();
    assert!(read_family(&path).is_err());
}

#[test]
fn report_roundtrips_through_json() {
    let g = complete(6);
    let h = complete(3);
    let run = decompose(&g, &h, &PipelineParams::default()).unwrap();
    let text = emit_report(&g, &h, &run.report).unwrap();
    let v = parse_report(&text, Path::new("mem")).unwrap();
    assert_eq!(v["report"]["t"], run.report.t);
    assert_eq!(v["report"]["params"]["beta"], "1/4");
    assert_eq!(v["graph"], hdecomp_core::graph6::emit_graph6(&g));
    assert!(parse_report("{\"format\": \"other\"}", Path::new("mem")).is_err());
}

#[test]
fn malformed_decompositions_are_rejected() {
    let good = "hdecomp-decomposition v1\npattern Bw\norder 3\nH 0 1 2\n";
    assert!(parse_decomposition(good, Path::new("mem")).is_ok());
    for bad in [
        "not a header\n",
        "hdecomp-decomposition v1\npattern Bw\norder 3\nH 0 1\n",
        "hdecomp-decomposition v1\npattern Bw\norder 3\nE 0 x\n",
        "hdecomp-decomposition v1\npattern Bw\norder 3\nQ 0 1\n",
    ] {
        assert!(parse_decomposition(bad, Path::new("mem")).is_err(), "{bad:?}");
    }
}
