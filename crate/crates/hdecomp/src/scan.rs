use hdecomp_core::enumerate::enumerate_graphs;
use hdecomp_core::packing::{absorb, PhiScan};
use hdecomp_core::{Caps, Graph};
use rayon::prelude::*;

use crate::{Error, Result};

/// Graphs handed to one worker at a time.
const CHUNK: usize = 64;

/// `phi_H(n)` over all `n`-vertex graphs, with the exact packings spread
/// over a rayon pool of `threads` workers (all cores when `None`).
///
/// Chunks are reduced in enumeration order, so the value, the witness list
/// and its order are the same as for the sequential scan.
pub fn phi_scan(n: usize, h: &Graph, caps: &Caps, threads: Option<usize>) -> Result<PhiScan> {
    if n > caps.phi_scan {
        return Err(hdecomp_core::Error::Size { what: "order for a phi scan", value: n, cap: caps.phi_scan }.into());
    }
    let graphs: Vec<Graph> = enumerate_graphs(n, caps)?.collect();
    let run = || {
        graphs
            .par_chunks(CHUNK)
            .map(|chunk| {
                let mut scan = PhiScan { n, value: 0, witnesses: Vec::new(), graphs_scanned: 0 };
                for g in chunk {
                    scan.graphs_scanned += 1;
                    absorb(&mut scan, g.clone(), h, caps)?;
                }
                Ok(scan)
            })
            .try_reduce_with(|a, b| Ok(merge(a, b)))
            .unwrap_or_else(|| Ok(PhiScan { n, value: 0, witnesses: Vec::new(), graphs_scanned: 0 }))
    };
    let result: hdecomp_core::Result<PhiScan> = match threads {
        None => run(),
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map_err(|e| Error::Usage(format!("cannot start {k} worker threads: {e}")))?
            .install(run),
    };
    Ok(result?)
}

fn merge(mut a: PhiScan, b: PhiScan) -> PhiScan {
    a.graphs_scanned += b.graphs_scanned;
    if b.value > a.value || a.witnesses.is_empty() {
        a.value = b.value;
        a.witnesses = b.witnesses;
    } else if b.value == a.value {
        a.witnesses.extend(b.witnesses);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use hdecomp_core::generate::complete;
    use hdecomp_core::packing::phi_max_over_n;

    #[test]
    fn parallel_matches_sequential() {
        let caps = Caps::default();
        for n in 3..=6 {
            let seq = phi_max_over_n(n, &complete(3), &caps).unwrap();
            let par = phi_scan(n, &complete(3), &caps, Some(3)).unwrap();
            assert_eq!(par.value, seq.value);
            assert_eq!(par.graphs_scanned, seq.graphs_scanned);
            assert_eq!(par.witnesses, seq.witnesses);
        }
    }
}
