use std::fs;
use std::io::Write;
use std::path::Path;

use hdecomp_core::graph6::{emit_graph6, parse_graph6};
use hdecomp_core::Graph;

use crate::{Error, Result};

/// Parses a graph list: one graph6 string per line. Blank lines, lines
/// starting with `#`, and an optional `>>graph6<<` header are skipped.
pub fn parse_graphs(text: &str, path: &Path) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let g = parse_graph6(line).map_err(|e| Error::format(path, i + 1, e.to_string()))?;
        out.push(g);
    }
    Ok(out)
}

pub fn read_graphs(path: &Path) -> Result<Vec<Graph>> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_graphs(&text, path)
}

/// The single graph in a graph list.
pub fn read_graph(path: &Path) -> Result<Graph> {
    let mut graphs = read_graphs(path)?;
    match graphs.len() {
        1 => Ok(graphs.remove(0)),
        k => Err(Error::format(path, 0, format!("expected exactly one graph, found {k}"))),
    }
}

pub fn graph_lines<'a>(graphs: impl IntoIterator<Item = &'a Graph>) -> String {
    let mut s = String::new();
    for g in graphs {
        s.push_str(&emit_graph6(g));
        s.push('\n');
    }
    s
}

/// Writes `contents` to a temporary file next to `path` and renames it over
/// `path`.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| Error::io(dir, e))?;
    tmp.write_all(contents).map_err(|e| Error::io(tmp.path(), e))?;
    tmp.as_file().sync_all().map_err(|e| Error::io(tmp.path(), e))?;
    tmp.persist(path).map_err(|e| Error::io(path, e.error))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comments_and_header_are_skipped() {
        let text = "# two graphs\n>>graph6<<Bw\n\nBW\n";
        let gs = parse_graphs(text, Path::new("x")).unwrap();
        assert_eq!(gs.len(), 2);
        assert_eq!(gs[0].size(), 3);
    }

    #[test]
    fn bad_line_is_reported_with_its_number() {
        let err = parse_graphs("Bw\nB\u{7f}\n", Path::new("list.g6")).unwrap_err();
        assert!(err.to_string().starts_with("list.g6:2:"), "{err}");
    }

    #[test]
    fn atomic_write_replaces_contents() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("out.txt");
        write_atomic(&p, b"one").unwrap();
        write_atomic(&p, b"two").unwrap();
        assert_eq!(fs::read_to_string(&p).unwrap(), "two");
        assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 1);
    }
}
