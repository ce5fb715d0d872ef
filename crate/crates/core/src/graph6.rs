//! The graph6 text encoding.
//!
//! `N(n)` is one byte `n + 63` for `n <= 62`, `126` followed by three
//! 6-bit groups for `n <= 258047`, and `126 126` followed by six groups
//! beyond that. The upper triangle follows column by column
//! (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), six bits per byte, offset by 63,
//! zero-padded to a whole byte.

use alloc::string::String;
use alloc::vec::Vec;

use crate::{Error, Graph, Result};

const HEADER: &str = ">>graph6<<";

fn err(offset: usize, reason: &'static str) -> Error {
    Error::Parse { offset, reason }
}

fn read_groups(bytes: &[u8], start: usize, groups: usize) -> Result<usize> {
    let mut v = 0usize;
    for k in 0..groups {
        let b = *bytes
            .get(start + k)
            .ok_or_else(|| err(start + k, "truncated vertex count"))?;
        if !(63..=126).contains(&b) {
            return Err(err(start + k, "byte outside the printable range 63..=126"));
        }
        v = (v << 6) | (b - 63) as usize;
    }
    Ok(v)
}

/// Parses one graph6 line (without the line terminator). A leading
/// `>>graph6<<` header is accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let skip = if text.starts_with(HEADER) { HEADER.len() } else { 0 };
    let bytes = &text.as_bytes()[skip..];
    let at = |i: usize| i + skip;
    if bytes.is_empty() {
        return Err(err(at(0), "empty input"));
    }
    let (n, mut pos) = match bytes[0] {
        b @ 63..=125 => ((b - 63) as usize, 1),
        126 if bytes.get(1) == Some(&126) => (read_groups(bytes, 2, 6).map_err(|e| shift(e, skip))?, 8),
        126 => (read_groups(bytes, 1, 3).map_err(|e| shift(e, skip))?, 4),
        _ => return Err(err(at(0), "byte outside the printable range 63..=126")),
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() != pos + nbytes {
        let off = if bytes.len() < pos + nbytes { bytes.len() } else { pos + nbytes };
        return Err(err(at(off), "length does not match the vertex count"));
    }
    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    let mut i = 0usize;
    let mut j = 1usize;
    while pos < bytes.len() {
        let b = bytes[pos];
        if !(63..=126).contains(&b) {
            return Err(err(at(pos), "byte outside the printable range 63..=126"));
        }
        let group = b - 63;
        for k in (0..6).rev() {
            let on = group >> k & 1 == 1;
            if bit < nbits {
                if on {
                    g.add_edge(i, j);
                }
                i += 1;
                if i == j {
                    i = 0;
                    j += 1;
                }
            } else if on {
                return Err(err(at(pos), "nonzero padding bits"));
            }
            bit += 1;
        }
        pos += 1;
    }
    Ok(g)
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { offset, reason } => Error::Parse { offset: offset + by, reason },
        other => other,
    }
}

/// Encodes `g` in minimal-length graph6 (no header, no newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for k in (0..3).rev() {
            out.push(((n >> (6 * k)) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for k in (0..6).rev() {
            out.push(((n >> (6 * k)) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_examples() {
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!((k2.order(), k2.size()), (2, 1));
        let e2 = parse_graph6("A?").unwrap();
        assert_eq!((e2.order(), e2.size()), (2, 0));
        let k3 = parse_graph6("Bw").unwrap();
        assert_eq!((k3.order(), k3.size()), (3, 3));
        assert_eq!(emit_graph6(&k3), "Bw");
        assert_eq!(parse_graph6("?").unwrap().order(), 0);
        assert_eq!(parse_graph6(">>graph6<<Bw").unwrap(), k3);
    }

    #[test]
    fn known_encodings() {
        // Petersen graph as printed by nauty's geng/showg.
        let p = parse_graph6("IheA@GUAo").unwrap();
        assert_eq!(p.order(), 10);
        assert_eq!(p.size(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
        assert_eq!(emit_graph6(&p), "IheA@GUAo");
    }

    #[test]
    fn errors_name_the_byte() {
        assert_eq!(
            parse_graph6("B").unwrap_err(),
            Error::Parse { offset: 1, reason: "length does not match the vertex count" }
        );
        assert!(matches!(parse_graph6("Bww"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(parse_graph6("B\u{1f}"), Err(Error::Parse { offset: 1, .. })));
        // K_3 needs 3 bits; "Bx" sets the fourth (padding) bit.
        assert!(matches!(
            parse_graph6("Bx"),
            Err(Error::Parse { offset: 1, reason: "nonzero padding bits" })
        ));
        assert!(matches!(parse_graph6(""), Err(Error::Parse { offset: 0, .. })));
    }

    #[test]
    fn long_form_vertex_count() {
        let mut g = Graph::empty(70);
        g.add_edge(0, 69);
        g.add_edge(33, 34);
        let s = emit_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }
}
