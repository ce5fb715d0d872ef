use std::fs;
use std::path::{Path, PathBuf};

use hdecomp_core::graph6::{emit_graph6, parse_graph6};
use hdecomp_core::pipeline::PipelineReport;
use hdecomp_core::{Embedding, Graph, GraphFamily, HDecomposition};
use serde::{Deserialize, Serialize};

use crate::{io, Error, Result};

pub const DECOMPOSITION_HEADER: &str = "hdecomp-decomposition v1";
pub const REPORT_FORMAT: &str = "hdecomp-report";
pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySidecar {
    pub source: String,
    pub minimal: bool,
    pub member_count: usize,
}

pub fn sidecar_path(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".json");
    PathBuf::from(s)
}

pub fn write_family(path: &Path, family: &GraphFamily) -> Result<()> {
    let sidecar = FamilySidecar {
        source: family.source().to_owned(),
        minimal: family.is_minimal(),
        member_count: family.len(),
    };
    io::write_atomic(path, io::graph_lines(family.graphs()).as_bytes())?;
    let mut json = serde_json::to_string_pretty(&sidecar)?;
    json.push('\n');
    io::write_atomic(&sidecar_path(path), json.as_bytes())
}

pub fn read_family(path: &Path) -> Result<(Vec<Graph>, FamilySidecar)> {
    let graphs = io::read_graphs(path)?;
    let side = sidecar_path(path);
    let text = fs::read_to_string(&side).map_err(|e| Error::io(&side, e))?;
    let sidecar: FamilySidecar = serde_json::from_str(&text)?;
    if sidecar.member_count != graphs.len() {
        return Err(Error::format(
            &side,
            0,
            format!("sidecar lists {} members, the family file has {}", sidecar.member_count, graphs.len()),
        ));
    }
    Ok((graphs, sidecar))
}

/// A decomposition together with what it decomposes into.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionFile {
    pub pattern: Graph,
    pub host_order: usize,
    pub decomposition: HDecomposition,
}

/// ```text
/// hdecomp-decomposition v1
/// pattern <graph6 of H>
/// order <number of host vertices>
/// H v_0 v_1 ...      one per copy, host vertices in pattern-vertex order
/// E u v              one per single edge
/// ```
pub fn emit_decomposition(file: &DecompositionFile) -> String {
    let mut s = format!(
        "{DECOMPOSITION_HEADER}\npattern {}\norder {}\n",
        emit_graph6(&file.pattern),
        file.host_order
    );
    for c in &file.decomposition.copies {
        s.push('H');
        for v in &c.map {
            s.push(' ');
            s.push_str(&v.to_string());
        }
        s.push('\n');
    }
    for (u, v) in &file.decomposition.singles {
        s.push_str(&format!("E {u} {v}\n"));
    }
    s
}

pub fn parse_decomposition(text: &str, path: &Path) -> Result<DecompositionFile> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim_end_matches('\r')));
    let bad = |line: usize, reason: String| Error::format(path, line, reason);
    match lines.next() {
        Some((_, DECOMPOSITION_HEADER)) => {}
        _ => return Err(bad(1, format!("missing header {DECOMPOSITION_HEADER:?}"))),
    }
    let pattern = match lines.next() {
        Some((i, l)) if l.starts_with("pattern ") => {
            parse_graph6(&l["pattern ".len()..]).map_err(|e| bad(i, e.to_string()))?
        }
        _ => return Err(bad(2, "expected `pattern <graph6>`".into())),
    };
    let host_order = match lines.next() {
        Some((i, l)) if l.starts_with("order ") => {
            l["order ".len()..].parse().map_err(|_| bad(i, "order is not a number".into()))?
        }
        _ => return Err(bad(3, "expected `order <n>`".into())),
    };
    let mut copies = Vec::new();
    let mut singles = Vec::new();
    for (i, l) in lines {
        if l.is_empty() {
            continue;
        }
        let mut words = l.split(' ');
        let kind = words.next().unwrap_or_default();
        let nums: Vec<usize> = words
            .map(|w| w.parse::<usize>().map_err(|_| bad(i, format!("not a vertex index: {w:?}"))))
            .collect::<Result<_>>()?;
        if let Some(&v) = nums.iter().find(|&&v| v >= host_order) {
            return Err(bad(i, format!("vertex {v} outside 0..{host_order}")));
        }
        match kind {
            "H" if nums.len() == pattern.order() => copies.push(Embedding { map: nums }),
            "H" => return Err(bad(i, format!("copy lists {} vertices, H has {}", nums.len(), pattern.order()))),
            "E" if nums.len() == 2 => singles.push((nums[0], nums[1])),
            "E" => return Err(bad(i, "single edge needs two vertices".into())),
            other => return Err(bad(i, format!("unknown line kind {other:?}"))),
        }
    }
    Ok(DecompositionFile { pattern, host_order, decomposition: HDecomposition { copies, singles } })
}

pub fn read_decomposition(path: &Path) -> Result<DecompositionFile> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_decomposition(&text, path)
}

#[derive(Serialize)]
struct ReportFile<'a> {
    format: &'static str,
    version: u32,
    graph: String,
    pattern: String,
    report: &'a PipelineReport,
}

pub fn emit_report(g: &Graph, h: &Graph, report: &PipelineReport) -> Result<String> {
    let file = ReportFile {
        format: REPORT_FORMAT,
        version: REPORT_VERSION,
        graph: emit_graph6(g),
        pattern: emit_graph6(h),
        report,
    };
    let mut s = serde_json::to_string_pretty(&file)?;
    s.push('\n');
    Ok(s)
}

/// Reads a report back as JSON, checking the format header.
pub fn parse_report(text: &str, path: &Path) -> Result<serde_json::Value> {
    let v: serde_json::Value = serde_json::from_str(text)?;
    if v["format"] != REPORT_FORMAT || v["version"] != REPORT_VERSION {
        return Err(Error::format(path, 1, format!("not a {REPORT_FORMAT} v{REPORT_VERSION} file")));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use hdecomp_core::generate::complete;

    #[test]
    fn decomposition_roundtrip() {
        let file = DecompositionFile {
            pattern: complete(3),
            host_order: 5,
            decomposition: HDecomposition {
                copies: vec![Embedding { map: vec![0, 1, 2] }],
                singles: vec![(3, 4)],
            },
        };
        let text = emit_decomposition(&file);
        assert_eq!(text, "hdecomp-decomposition v1\npattern Bw\norder 5\nH 0 1 2\nE 3 4\n");
        assert_eq!(parse_decomposition(&text, Path::new("d")).unwrap(), file);
    }

    #[test]
    fn decomposition_errors_name_the_line() {
        let text = "hdecomp-decomposition v1\npattern Bw\norder 3\nH 0 1\n";
        let err = parse_decomposition(text, Path::new("d")).unwrap_err();
        assert!(err.to_string().starts_with("d:4:"), "{err}");
        let err = parse_decomposition("hdecomp-decomposition v1\npattern Bw\norder 3\nE 0 3\n", Path::new("d")).unwrap_err();
        assert!(err.to_string().contains("outside"), "{err}");
        assert!(parse_decomposition("nope\n", Path::new("d")).is_err());
    }
}
