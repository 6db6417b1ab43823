//! Text formats: graph6 (short form, up to 62 vertices) and a plain edge list.
//!
//! graph6 layout: one byte `n + 63`, then the upper triangle of the adjacency
//! matrix read column by column, `(0,1), (0,2), (1,2), (0,3), ...`, packed
//! big-endian into 6-bit groups, zero-padded, each group offset by 63.
//!
//! Edge list layout: a header line `n m`, then `m` lines `u v` with 0-based
//! endpoints. Blank lines and lines starting with `#` are ignored.

use super::Graph;
use crate::error::{Error, Result};

/// Largest order representable in the short graph6 form.
pub const GRAPH6_MAX_ORDER: usize = 62;

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    let (&first, body) = bytes.split_first().ok_or_else(|| Error::Parse("empty graph6 string".into()))?;
    let n = match first {
        63..=125 => (first - 63) as usize,
        126 => return Err(Error::Parse("long-form graph6 (n > 62) is not supported".into())),
        b => return Err(Error::Parse(format!("byte {b} outside the graph6 range 63..126"))),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let groups = bits.div_ceil(6);
    if let Some(&b) = body.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Parse(format!("byte {b} outside the graph6 range 63..126")));
    }
    if body.len() < groups {
        return Err(Error::Parse(format!(
            "truncated graph6 string: {n} vertices need {groups} data bytes, found {}",
            body.len()
        )));
    }
    if body.len() > groups {
        return Err(Error::Parse(format!("{} trailing bytes after graph6 data", body.len() - groups)));
    }
    let bit = |i: usize| (body[i / 6] - 63) >> (5 - i % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut i = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(i) {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    Graph::new(n, edges)
}

pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Error::Parse(format!(
            "graph6 short form holds at most {GRAPH6_MAX_ORDER} vertices, graph has {n}"
        )));
    }
    let mut out = vec![n as u8 + 63];
    let mut group = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            group = group << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| Error::Parse("empty edge list".into()))?;
    let [n, m] = parse_pair(header)?;
    let mut edges = Vec::with_capacity(m);
    for line in lines.by_ref().take(m) {
        let [u, v] = parse_pair(line)?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse(format!("edge list declares {m} edges, found {}", edges.len())));
    }
    if let Some(extra) = lines.next() {
        return Err(Error::Parse(format!("unexpected line after edge list: {extra:?}")));
    }
    Graph::new(n, edges)
}

fn parse_pair(line: &str) -> Result<[usize; 2]> {
    let mut it = line
        .split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|e| Error::Parse(format!("bad integer {t:?}: {e}"))));
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => Ok([a?, b?]),
        _ => Err(Error::Parse(format!("expected two integers, got {line:?}"))),
    }
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses either format: text whose first meaningful line holds two integers
/// is an edge list, anything else is graph6.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .ok_or_else(|| Error::Parse("no graph found in input".into()))?;
    if first.split_whitespace().count() == 2 {
        parse_edge_list(text)
    } else {
        parse_graph6(first)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_encodes_as_c_tilde() {
        assert_eq!(parse_graph6("C~").unwrap(), Graph::complete(4));
        assert_eq!(emit_graph6(&Graph::complete(4)).unwrap(), "C~");
    }

    #[test]
    fn k1_and_k0() {
        assert_eq!(emit_graph6(&Graph::empty(1)).unwrap(), "@");
        assert_eq!(emit_graph6(&Graph::empty(0)).unwrap(), "?");
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1));
        assert_eq!(parse_graph6("?\n").unwrap(), Graph::empty(0));
    }

    #[test]
    fn known_encodings() {
        // path 0-1-2: bits (0,1)=1 (0,2)=0 (1,2)=1 -> 101000 = 40 -> 'g'
        assert_eq!(emit_graph6(&Graph::path(3)).unwrap(), "Bg");
        // C4 = 01,12,23,03: bits 1,0,1,1,0,1 -> 101101 = 45 -> 'l'
        assert_eq!(emit_graph6(&Graph::cycle(4)).unwrap(), "Cl");
        assert_eq!(parse_graph6(">>graph6<<Cl").unwrap(), Graph::cycle(4));
    }

    #[test]
    fn malformed_graph6_is_rejected() {
        let bad = String::from_utf8_lossy(&[b'C', 200]).into_owned();
        assert!(matches!(parse_graph6(&bad), Err(Error::Parse(_))));
        assert!(matches!(parse_graph6("C"), Err(Error::Parse(_))));
        assert!(matches!(parse_graph6("C~~"), Err(Error::Parse(_))));
        assert!(matches!(parse_graph6(""), Err(Error::Parse(_))));
        assert!(matches!(parse_graph6(" ~"), Err(Error::Parse(_))));
        assert!(matches!(parse_graph6("~??"), Err(Error::Parse(_))));
    }

    #[test]
    fn oversized_graphs_do_not_emit() {
        assert!(emit_graph6(&Graph::empty(62)).is_ok());
        assert!(emit_graph6(&Graph::empty(63)).is_err());
    }

    #[test]
    fn edge_lists() {
        let g = parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
        assert_eq!(g, Graph::cycle(4));
        assert_eq!(parse_edge_list(&emit_edge_list(&g)).unwrap(), g);
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 1\n1 2\n").is_err());
        assert!(matches!(parse_edge_list("2 1\n0 0\n"), Err(Error::InvalidEdge { .. })));
    }

    #[test]
    fn format_detection() {
        assert_eq!(parse_graph("C~\n").unwrap(), Graph::complete(4));
        assert_eq!(parse_graph("# comment\n3 1\n0 2\n").unwrap(), Graph::new(3, [(0, 2)]).unwrap());
    }
}
