//! Text formats.
//!
//! Edge list: `#` comment lines, then a header `n m`, then `m` lines `u v` (0-based, in edge-id
//! order). Weighting: `#` comment lines, a header `k m`, then `m` lines `u v w` in edge-id order.
//! Blank lines are ignored. Writers put the smaller endpoint first.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::weighting::EdgeWeighting;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.trim();
        (!l.is_empty() && !l.starts_with('#')).then(|| (i + 1, l.split_whitespace().collect()))
    })
}

fn numbers(line: usize, fields: &[&str], want: usize) -> Result<Vec<usize>> {
    if fields.len() != want {
        return Err(Error::Parse { line, msg: format!("expected {want} fields, got {}", fields.len()) });
    }
    fields
        .iter()
        .map(|f| f.parse::<usize>().map_err(|_| Error::Parse { line, msg: format!("`{f}` is not a non-negative integer") }))
        .collect()
}

fn header_and_rows(text: &str, row_len: usize) -> Result<((usize, usize), Vec<(usize, Vec<usize>)>)> {
    let mut lines = content_lines(text);
    let (hl, hf) = lines.next().ok_or(Error::Parse { line: 1, msg: "missing header".into() })?;
    let h = numbers(hl, &hf, 2)?;
    let rows = lines.map(|(l, f)| numbers(l, &f, row_len).map(|r| (l, r))).collect::<Result<Vec<_>>>()?;
    if rows.len() != h[1] {
        return Err(Error::Parse { line: hl, msg: format!("header announces {} edges, found {}", h[1], rows.len()) });
    }
    Ok(((h[0], h[1]), rows))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let ((n, _), rows) = header_and_rows(text, 2)?;
    for (line, r) in &rows {
        if r[0] >= n || r[1] >= n {
            return Err(Error::Parse { line: *line, msg: format!("vertex out of range 0..{n}") });
        }
    }
    let edges = rows.iter().map(|(_, r)| (r[0], r[1])).collect();
    Graph::new(n, edges).map_err(|e| Error::Parse { line: 0, msg: e.to_string() })
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", u.min(v), u.max(v));
    }
    out
}

/// Reads a weighting and checks that each line names the matching edge of `g`.
pub fn parse_weighting(text: &str, g: &Graph) -> Result<EdgeWeighting> {
    let ((k, m), rows) = header_and_rows(text, 3)?;
    if m != g.edge_count() {
        return Err(Error::WeightCountMismatch { expected: g.edge_count(), got: m });
    }
    let mut weights = Vec::with_capacity(m);
    for (e, (line, r)) in rows.iter().enumerate() {
        let (a, b) = g.edge(e);
        if (r[0], r[1]) != (a, b) && (r[1], r[0]) != (a, b) {
            return Err(Error::Parse { line: *line, msg: format!("edge {e} is {a} {b}, not {} {}", r[0], r[1]) });
        }
        weights.push(u32::try_from(r[2]).map_err(|_| Error::Parse { line: *line, msg: "weight too large".into() })?);
    }
    let k = u32::try_from(k).map_err(|_| Error::Parse { line: 1, msg: "k too large".into() })?;
    EdgeWeighting::new(k, weights)
}

pub fn write_weighting(g: &Graph, w: &EdgeWeighting) -> String {
    let mut out = format!("{} {}\n", w.k(), w.len());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let _ = writeln!(out, "{} {} {}", u.min(v), u.max(v), w.weight(e));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        let g = Graph::new(4, vec![(1, 0), (1, 2), (2, 3), (3, 0)]).unwrap();
        let text = write_edge_list(&g);
        assert_eq!(text, "4 4\n0 1\n1 2\n2 3\n0 3\n");
        let back = parse_edge_list(&text).unwrap();
        assert_eq!(back.edges(), &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        let w = EdgeWeighting::new(2, vec![1, 1, 2, 2]).unwrap();
        let wt = write_weighting(&back, &w);
        assert_eq!(parse_weighting(&wt, &back).unwrap(), w);
    }

    #[test]
    fn comments_and_errors() {
        let g = parse_edge_list("# square\n\n3 2\n0 1\n# middle\n1 2\n").unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(matches!(parse_edge_list("3 2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_edge_list("3 1\n0 7\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("3 1\n0 x\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("3 1\n1 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_weighting("2 2\n0 1 1\n0 2 1\n", &g), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_weighting("2 2\n0 1 1\n1 2 3\n", &g), Err(Error::WeightOutOfRange { .. })));
    }
}
