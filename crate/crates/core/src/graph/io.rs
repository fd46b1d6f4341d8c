//! Plain-text edge lists and DOT export.
//!
//! Edge-list layout: a header line `n m mode` (mode `O` for oriented, `D` for
//! general digraph) followed by `m` lines `u v`, LF-terminated.

use std::fmt::Write as _;

use thiserror::Error;

use super::{GraphError, Mode, OrientedGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("header announces {expected} edges but {found} were given")]
    EdgeCount { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, message: message.into() }
}

fn parse_count(token: &str, line: usize, what: &str) -> Result<usize, ParseError> {
    token
        .parse()
        .map_err(|_| syntax(line, format!("expected {what}, found {token:?}")))
}

pub fn parse_edge_list(text: &str) -> Result<OrientedGraph, ParseError> {
    let mut lines = text
        .split('\n')
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty());

    let (hline, header) = lines.next().ok_or_else(|| syntax(1, "missing header"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [n, m, mode] = fields[..] else {
        return Err(syntax(hline, "header must be `n m mode`"));
    };
    let n = parse_count(n, hline, "vertex count")?;
    let m = parse_count(m, hline, "edge count")?;
    let mode = match mode {
        "O" => Mode::Oriented,
        "D" => Mode::Digraph,
        other => return Err(syntax(hline, format!("unknown mode {other:?}"))),
    };

    let mut edges = Vec::with_capacity(m);
    for (line, body) in lines {
        let fields: Vec<&str> = body.split_whitespace().collect();
        let [u, v] = fields[..] else {
            return Err(syntax(line, "edge line must be `u v`"));
        };
        edges.push((parse_count(u, line, "vertex")?, parse_count(v, line, "vertex")?));
    }
    if edges.len() != m {
        return Err(ParseError::EdgeCount { expected: m, found: edges.len() });
    }
    Ok(OrientedGraph::from_edge_list(n, &edges, mode)?)
}

pub fn write_edge_list(g: &OrientedGraph) -> String {
    let mode = match g.mode() {
        Mode::Oriented => 'O',
        Mode::Digraph => 'D',
    };
    let mut out = format!("{} {} {}\n", g.order(), g.edge_count(), mode);
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn to_dot(g: &OrientedGraph) -> String {
    let mut out = String::from("digraph {\n");
    for v in 0..g.order() {
        let _ = writeln!(out, "    {v};");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "    {u} -> {v};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn writes_exact_layout() {
        let g = OrientedGraph::from_edge_list(3, &[(2, 0), (0, 1), (1, 2)], Mode::Oriented)
            .unwrap();
        assert_eq!(write_edge_list(&g), "3 3 O\n0 1\n1 2\n2 0\n");
        let d = OrientedGraph::from_edge_list(2, &[(1, 0), (0, 1)], Mode::Digraph).unwrap();
        assert_eq!(write_edge_list(&d), "2 2 D\n0 1\n1 0\n");
        assert_eq!(write_edge_list(&OrientedGraph::empty(0, Mode::Oriented)), "0 0 O\n");
    }

    #[test]
    fn parses_what_it_writes() {
        let text = "4 3 O\n0 1\n1 2\n3 2\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(write_edge_list(&g), text);
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(parse_edge_list(""), Err(ParseError::Syntax { line: 1, .. })));
        assert!(matches!(parse_edge_list("3 1 X\n0 1\n"), Err(ParseError::Syntax { .. })));
        assert!(matches!(
            parse_edge_list("3 2 O\n0 1\n"),
            Err(ParseError::EdgeCount { expected: 2, found: 1 })
        ));
        assert!(matches!(parse_edge_list("3 1 O\n0 x\n"), Err(ParseError::Syntax { line: 2, .. })));
        assert_eq!(
            parse_edge_list("2 2 O\n0 1\n1 0\n"),
            Err(ParseError::Graph(GraphError::AntiparallelViolation(1, 0)))
        );
    }

    #[test]
    fn dot_lists_vertices_and_edges() {
        let g = OrientedGraph::from_edge_list(2, &[(0, 1)], Mode::Oriented).unwrap();
        assert_eq!(to_dot(&g), "digraph {\n    0;\n    1;\n    0 -> 1;\n}\n");
    }
}
