//! DIMACS edge format with an optional bipartition comment.
//!
//! ```text
//! c bipartition 3 3
//! p edge 6 9
//! e 1 4
//! ...
//! ```
//!
//! Vertices are 1-based. With `c bipartition L R`, vertices `1..=L` form the
//! X side and `L+1..=L+R` the Y side.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Graph};

/// A parsed DIMACS file.
#[derive(Clone, Debug)]
pub struct GraphFile {
    pub graph: Graph,
    pub bipartition: Option<(usize, usize)>,
}

impl GraphFile {
    /// Converts to a [`BipartiteGraph`], which requires the bipartition comment.
    pub fn into_bipartite(self) -> Result<BipartiteGraph> {
        let (left, _) = self
            .bipartition
            .ok_or_else(|| Error::NotBipartite("file has no `c bipartition` line".to_string()))?;
        BipartiteGraph::from_graph(self.graph, left)
    }
}

fn number(line: usize, token: Option<&str>, what: &str) -> Result<usize> {
    let token = token.ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| Error::parse(line, format!("bad {what} `{token}`")))
}

pub fn parse_dimacs(text: &str) -> Result<GraphFile> {
    let mut graph: Option<Graph> = None;
    let mut declared_edges = 0;
    let mut bipartition = None;
    let mut bipartition_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            None => {}
            Some("c") => {
                if tokens.next() == Some("bipartition") {
                    let left = number(line_no, tokens.next(), "left side size")?;
                    let right = number(line_no, tokens.next(), "right side size")?;
                    if bipartition.replace((left, right)).is_some() {
                        return Err(Error::parse(line_no, "repeated bipartition comment"));
                    }
                    bipartition_line = line_no;
                }
            }
            Some("p") => {
                if graph.is_some() {
                    return Err(Error::parse(line_no, "repeated problem line"));
                }
                match tokens.next() {
                    Some("edge") | Some("col") => {}
                    other => {
                        return Err(Error::parse(
                            line_no,
                            format!("expected `p edge`, found `p {}`", other.unwrap_or("")),
                        ))
                    }
                }
                let vertices = number(line_no, tokens.next(), "vertex count")?;
                declared_edges = number(line_no, tokens.next(), "edge count")?;
                graph = Some(Graph::new(vertices));
            }
            Some("e") => {
                let g = graph
                    .as_mut()
                    .ok_or_else(|| Error::parse(line_no, "edge before problem line"))?;
                let u = number(line_no, tokens.next(), "endpoint")?;
                let v = number(line_no, tokens.next(), "endpoint")?;
                let n = g.vertex_count();
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(Error::parse(
                        line_no,
                        format!("endpoint out of range 1..={n} in `{line}`"),
                    ));
                }
                g.add_edge(u - 1, v - 1).map_err(|err| match err {
                    Error::DuplicateEdge { .. } => Error::DuplicateEdge { u, v },
                    Error::SelfLoop(_) => Error::parse(line_no, format!("self-loop at {u}")),
                    other => other,
                })?;
            }
            Some(other) => {
                return Err(Error::parse(
                    line_no,
                    format!("unknown line type `{other}`"),
                ));
            }
        }
        if let Some(extra) = tokens.next() {
            if !line.starts_with('c') {
                return Err(Error::parse(line_no, format!("trailing token `{extra}`")));
            }
        }
    }

    let graph = graph.ok_or_else(|| Error::parse(0, "missing `p edge` line"))?;
    if graph.edge_count() != declared_edges {
        return Err(Error::parse(
            0,
            format!(
                "header declares {declared_edges} edges but body has {}",
                graph.edge_count()
            ),
        ));
    }
    if let Some((left, right)) = bipartition {
        if left + right != graph.vertex_count() {
            return Err(Error::parse(
                bipartition_line,
                format!(
                    "bipartition {left}+{right} does not cover {} vertices",
                    graph.vertex_count()
                ),
            ));
        }
    }
    Ok(GraphFile { graph, bipartition })
}

/// Canonical text: bipartition comment (if any), header, then edges sorted
/// by `(u, v)` with `u < v`.
pub fn serialize_dimacs(graph: &Graph, bipartition: Option<(usize, usize)>) -> String {
    let mut edges: Vec<(usize, usize)> = graph.edges().map(|(_, uv)| uv).collect();
    edges.sort_unstable();
    let mut out = String::new();
    if let Some((left, right)) = bipartition {
        let _ = writeln!(out, "c bipartition {left} {right}");
    }
    let _ = writeln!(out, "p edge {} {}", graph.vertex_count(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

pub fn serialize_bipartite(graph: &BipartiteGraph) -> String {
    serialize_dimacs(graph.as_graph(), Some((graph.n_left(), graph.n_right())))
}

/// Plain structural DOT dump.
pub fn to_dot(graph: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..graph.vertex_count() {
        let _ = writeln!(out, "  {};", v + 1);
    }
    let mut edges: Vec<(usize, usize)> = graph.edges().map(|(_, uv)| uv).collect();
    edges.sort_unstable();
    for (u, v) in edges {
        let _ = writeln!(out, "  {} -- {};", u + 1, v + 1);
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_file() {
        let f = parse_dimacs("p edge 2 1\ne 1 2\n").unwrap();
        assert_eq!(f.graph.edge_count(), 1);
        assert!(f.bipartition.is_none());
    }

    #[test]
    fn duplicate_edge_line() {
        let err = parse_dimacs("p edge 2 2\ne 1 2\ne 2 1\n").unwrap_err();
        assert!(matches!(err, Error::DuplicateEdge { u: 2, v: 1 }));
    }

    #[test]
    fn malformed_lines_carry_numbers() {
        let err = parse_dimacs("c hi\np edge 3 1\ne 1 x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        let err = parse_dimacs("p edge 3 1\ne 1 4\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        let err = parse_dimacs("e 1 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }), "{err}");
        let err = parse_dimacs("p edge 3 2\ne 1 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }), "{err}");
        let err = parse_dimacs("p edge 3 1\ne 1 2 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
    }

    #[test]
    fn empty_graph_is_header_only() {
        let g = Graph::new(4);
        assert_eq!(serialize_dimacs(&g, None), "p edge 4 0\n");
    }

    #[test]
    fn edges_are_sorted() {
        let g = Graph::from_edges(4, &[(3, 2), (0, 3), (1, 0)]).unwrap();
        assert_eq!(
            serialize_dimacs(&g, Some((2, 2))),
            "c bipartition 2 2\np edge 4 3\ne 1 2\ne 1 4\ne 3 4\n"
        );
    }

    #[test]
    fn bipartition_must_cover_vertices() {
        assert!(parse_dimacs("c bipartition 1 2\np edge 2 0\n").is_err());
        let f = parse_dimacs("c bipartition 1 1\np edge 2 1\ne 1 2\n").unwrap();
        let b = f.into_bipartite().unwrap();
        assert_eq!((b.n_left(), b.n_right()), (1, 1));
    }

    #[test]
    fn non_bipartite_requests_fail() {
        let f = parse_dimacs("p edge 2 1\ne 1 2\n").unwrap();
        assert!(matches!(f.into_bipartite(), Err(Error::NotBipartite(_))));
        let f = parse_dimacs("c bipartition 2 1\np edge 3 1\ne 1 2\n").unwrap();
        assert!(matches!(f.into_bipartite(), Err(Error::NotBipartite(_))));
    }
}
