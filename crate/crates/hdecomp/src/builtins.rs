use std::path::Path;

use hdecomp_core::generate::{bowtie, complete, complete_multipartite, cycle};
use hdecomp_core::graph6::parse_graph6;
use hdecomp_core::Graph;

use crate::{io, Result};

/// Named patterns accepted wherever a pattern is expected.
pub const NAMES: [&str; 6] = ["k3", "k4", "c5", "c7", "bowtie", "k222"];

pub fn builtin(name: &str) -> Option<Graph> {
    let g = match name {
        "k3" => complete(3),
        "k4" => complete(4),
        "c5" => cycle(5),
        "c7" => cycle(7),
        "bowtie" => bowtie(),
        "k222" => complete_multipartite(&[2, 2, 2]),
        _ => return None,
    };
    Some(g.with_label(name))
}

/// A builtin name, an existing graph6 file, or a graph6 literal.
pub fn resolve(arg: &str) -> Result<Graph> {
    if let Some(g) = builtin(arg) {
        return Ok(g);
    }
    let path = Path::new(arg);
    if path.is_file() {
        return io::read_graph(path);
    }
    Ok(parse_graph6(arg)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_resolve() {
        for name in NAMES {
            let g = resolve(name).unwrap();
            assert_eq!(g.label(), Some(name));
        }
        assert_eq!(resolve("k222").unwrap().size(), 12);
        assert_eq!(resolve("Bw").unwrap(), complete(3));
        assert!(resolve("not a graph").is_err());
    }
}
