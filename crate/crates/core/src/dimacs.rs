//! DIMACS `.col` graphs and `v <vertex> <color>` coloring files. Both use
//! 1-based vertex ids on disk.

use std::fmt::Write as _;

use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A parsed graph plus non-fatal notes (e.g. an edge count that disagrees
/// with the header).
#[derive(Clone, Debug)]
pub struct Dimacs {
    pub graph: Graph,
    pub warnings: Vec<String>,
}

pub fn parse_dimacs(text: &str) -> Result<Dimacs> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[0] {
            "p" => {
                if header.is_some() {
                    return Err(Error::MalformedHeader { line: line_no, reason: "duplicate problem line".into() });
                }
                if fields.len() != 4 || !matches!(fields[1], "edge" | "col") {
                    return Err(Error::MalformedHeader {
                        line: line_no,
                        reason: format!("expected `p edge N M`, got `{line}`"),
                    });
                }
                let n = parse_count(fields[2], line_no, true)?;
                let m = parse_count(fields[3], line_no, true)?;
                header = Some((n, m));
            }
            "e" => {
                let Some((n, _)) = header else {
                    return Err(Error::MalformedHeader { line: line_no, reason: "edge before problem line".into() });
                };
                if fields.len() != 3 {
                    return Err(Error::MalformedLine {
                        line: line_no,
                        reason: format!("expected `e u v`, got `{line}`"),
                    });
                }
                let u = parse_count(fields[1], line_no, false)?;
                let v = parse_count(fields[2], line_no, false)?;
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(Error::VertexOutOfRange { vertex: x, n });
                    }
                }
                if u == v {
                    return Err(Error::SelfLoop { vertex: u });
                }
                edges.push((u - 1, v - 1));
            }
            other => {
                return Err(Error::MalformedLine { line: line_no, reason: format!("unknown line type `{other}`") });
            }
        }
    }
    let Some((n, declared)) = header else {
        return Err(Error::MalformedHeader { line: 0, reason: "missing problem line".into() });
    };
    let graph = Graph::new(n, edges)?;
    let mut warnings = Vec::new();
    if graph.edge_count() != declared {
        warnings.push(format!("header declares {declared} edges, found {} distinct edges", graph.edge_count()));
    }
    Ok(Dimacs { graph, warnings })
}

fn parse_count(field: &str, line: usize, header: bool) -> Result<usize> {
    field.parse().map_err(|_| {
        let reason = format!("`{field}` is not a non-negative integer");
        if header {
            Error::MalformedHeader { line, reason }
        } else {
            Error::MalformedLine { line, reason }
        }
    })
}

/// DIMACS text with the given comment lines first.
pub fn write_dimacs(g: &Graph, comments: &[&str]) -> String {
    let mut out = String::new();
    for c in comments {
        writeln!(out, "c {c}").unwrap();
    }
    writeln!(out, "p edge {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// Reads `v <vertex> <color>` lines. Vertices without a line stay uncolored
/// (color 0), which the properness check reports.
pub fn parse_coloring(text: &str, n: usize) -> Result<Coloring> {
    let mut assignment: Vec<Color> = vec![0; n];
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 3 || fields[0] != "v" {
            return Err(Error::MalformedLine {
                line: line_no,
                reason: format!("expected `v vertex color`, got `{line}`"),
            });
        }
        let v = parse_count(fields[1], line_no, false)?;
        let c: Color = fields[2]
            .parse()
            .map_err(|_| Error::MalformedLine { line: line_no, reason: format!("`{}` is not a color", fields[2]) })?;
        if v == 0 || v > n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if c == 0 {
            return Err(Error::MalformedLine { line: line_no, reason: "colors start at 1".into() });
        }
        if assignment[v - 1] != 0 {
            return Err(Error::MalformedLine { line: line_no, reason: format!("vertex {v} colored twice") });
        }
        assignment[v - 1] = c;
    }
    Ok(Coloring::from_assignment(assignment))
}

pub fn write_coloring(c: &Coloring) -> String {
    let mut out = String::new();
    for (v, color) in c.assignment().iter().enumerate() {
        writeln!(out, "v {} {}", v + 1, color).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::wheel;

    #[test]
    fn path_from_text() {
        let d = parse_dimacs("p edge 3 2\ne 1 2\ne 2 3").unwrap();
        assert_eq!(d.graph, Graph::path(3));
        assert!(d.warnings.is_empty());
    }

    #[test]
    fn comments_duplicates_and_warnings() {
        let d = parse_dimacs("c hello\n\np edge 3 3\ne 1 2\ne 2 1\ne 2 3\n").unwrap();
        assert_eq!(d.graph.edge_count(), 2);
        assert_eq!(d.warnings.len(), 1);
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_dimacs("p edge 2 1\ne 1 1"), Err(Error::SelfLoop { vertex: 1 })));
        assert!(matches!(parse_dimacs("p edge 2 1\ne 1 3"), Err(Error::VertexOutOfRange { vertex: 3, n: 2 })));
        assert!(matches!(parse_dimacs("p edge 2 1\ne 0 1"), Err(Error::VertexOutOfRange { vertex: 0, .. })));
        assert!(matches!(parse_dimacs("e 1 2"), Err(Error::MalformedHeader { .. })));
        assert!(matches!(parse_dimacs("p edge x 1"), Err(Error::MalformedHeader { .. })));
        assert!(matches!(parse_dimacs("p graph 2 1"), Err(Error::MalformedHeader { .. })));
        assert!(matches!(parse_dimacs(""), Err(Error::MalformedHeader { .. })));
        assert!(matches!(parse_dimacs("p edge 2 1\nq 1 2"), Err(Error::MalformedLine { .. })));
    }

    #[test]
    fn wheel_round_trip() {
        let w = wheel(5).unwrap();
        let text = write_dimacs(&w, &["wheel 5"]);
        assert!(text.starts_with("c wheel 5\np edge 6 10\n"));
        assert_eq!(parse_dimacs(&text).unwrap().graph, w);
    }

    #[test]
    fn coloring_files() {
        let c = Coloring::from_assignment(vec![1, 2, 1]);
        let text = write_coloring(&c);
        assert_eq!(text, "v 1 1\nv 2 2\nv 3 1\n");
        assert_eq!(parse_coloring(&text, 3).unwrap(), c);
        let partial = parse_coloring("v 1 1", 2).unwrap();
        assert_eq!(partial.assignment(), &[1, 0]);
        assert!(parse_coloring("v 1 1\nv 1 2", 2).is_err());
        assert!(parse_coloring("v 3 1", 2).is_err());
        assert!(parse_coloring("v 1 0", 2).is_err());
    }
}
