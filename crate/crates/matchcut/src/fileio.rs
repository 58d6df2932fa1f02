//! Plain-text formats for graphs, vertex partitions, and cuts.
//!
//! A graph file starts with a header line `n m` (vertex count, edge count)
//! followed by exactly `m` lines `u v`, one edge per line. A partition file
//! holds one block per line as whitespace-separated vertex ids. In both
//! formats `#` starts a comment that runs to the end of the line, and blank
//! lines are ignored. Vertices are 0-based.

use crate::error::{Error, Result};
use crate::graph::{Cut, Graph, VertexSet};

/// Significant (non-blank, comment-stripped) lines with 1-based numbers.
fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_fields<const K: usize>(line_no: usize, line: &str, what: &str) -> Result<[usize; K]> {
    let mut out = [0usize; K];
    let mut fields = line.split_whitespace();
    for slot in &mut out {
        let field = fields.next().ok_or_else(|| Error::Parse {
            line: line_no,
            msg: format!("expected {what} as {K} integers, got `{line}`"),
        })?;
        *slot = field.parse().map_err(|_| Error::Parse {
            line: line_no,
            msg: format!("`{field}` is not a vertex number"),
        })?;
    }
    if fields.next().is_some() {
        return Err(Error::Parse {
            line: line_no,
            msg: format!("expected {what} as {K} integers, got `{line}`"),
        });
    }
    Ok(out)
}

/// Parses a graph from the `n m` + edge-list format.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = significant_lines(text);
    let (header_no, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing `n m` header line".into(),
    })?;
    let [n, m] = parse_fields(header_no, header, "header `n m`")?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line_no, line) = lines.next().ok_or_else(|| Error::Parse {
            line: text.lines().count().max(1),
            msg: format!("header promises {m} edges, file has {}", edges.len()),
        })?;
        let [u, v] = parse_fields(line_no, line, "an edge `u v`")?;
        if u >= n || v >= n {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("endpoint {} out of range for {n} vertices", u.max(v)),
            });
        }
        if u == v {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("self-loop at vertex {u}"),
            });
        }
        edges.push((u, v));
    }
    if let Some((line_no, line)) = lines.next() {
        return Err(Error::Parse {
            line: line_no,
            msg: format!("unexpected content after {m} edges: `{line}`"),
        });
    }
    Graph::new(n, edges)
}

/// Formats a graph in the format accepted by [`parse_graph`].
pub fn format_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses a vertex partition: one block per line.
pub fn parse_partition(text: &str) -> Result<Vec<VertexSet>> {
    let mut blocks = Vec::new();
    for (line_no, line) in significant_lines(text) {
        let block: VertexSet = line
            .split_whitespace()
            .map(|field| {
                field.parse().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("`{field}` is not a vertex number"),
                })
            })
            .collect::<Result<_>>()?;
        blocks.push(block);
    }
    Ok(blocks)
}

/// Formats a partition in the format accepted by [`parse_partition`].
pub fn format_partition(blocks: &[VertexSet]) -> String {
    let mut out = String::new();
    for block in blocks {
        let line: Vec<String> = block.iter().map(usize::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Renders a cut as space-separated `u-v` pairs, or `EMPTY` for the empty cut.
pub fn format_cut(cut: &Cut) -> String {
    if cut.is_empty() {
        return "EMPTY".into();
    }
    let pairs: Vec<String> = cut.iter().map(|(u, v)| format!("{u}-{v}")).collect();
    pairs.join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_round_trip_with_comments() {
        let text = "# a four-cycle with a chord\n4 5\n0 1\n1 2 # top edge\n\n2 3\n0 3\n0 2\n";
        let g = parse_graph(text).unwrap();
        assert_eq!((g.n(), g.m()), (4, 5));
        let again = parse_graph(&format_graph(&g)).unwrap();
        assert_eq!(again.edges(), g.edges());
    }

    #[test]
    fn graph_parse_errors_carry_line_numbers() {
        let header_short = parse_graph("3\n").unwrap_err();
        assert!(matches!(header_short, Error::Parse { line: 1, .. }));

        let bad_vertex = parse_graph("2 1\n0 x\n").unwrap_err();
        assert!(matches!(bad_vertex, Error::Parse { line: 2, .. }));

        let too_few = parse_graph("3 2\n0 1\n").unwrap_err();
        assert!(matches!(too_few, Error::Parse { .. }));

        let trailing = parse_graph("2 1\n0 1\n1 0\n").unwrap_err();
        assert!(matches!(trailing, Error::Parse { line: 3, .. }));

        let wide_edge = parse_graph("3 1\n0 1 2\n").unwrap_err();
        assert!(matches!(wide_edge, Error::Parse { line: 2, .. }));

        // Semantic problems also carry the offending line.
        let out_of_range = parse_graph("2 1\n0 5\n").unwrap_err();
        assert!(matches!(out_of_range, Error::Parse { line: 2, .. }));

        let with_comments = parse_graph("# c\n3 2\n0 1\n# c\n2 2\n").unwrap_err();
        assert!(matches!(with_comments, Error::Parse { line: 5, .. }));
    }

    #[test]
    fn empty_graph_file_round_trips() {
        let g = parse_graph("1 0\n").unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));
        assert_eq!(format_graph(&g), "1 0\n");
    }

    #[test]
    fn partition_round_trip() {
        let text = "# blocks\n0 1 2\n3\n4 5\n";
        let blocks = parse_partition(text).unwrap();
        assert_eq!(blocks, vec![vec![0, 1, 2], vec![3], vec![4, 5]]);
        assert_eq!(parse_partition(&format_partition(&blocks)).unwrap(), blocks);
        assert!(parse_partition("0 one\n").is_err());
        assert!(parse_partition("").unwrap().is_empty());
    }

    #[test]
    fn cut_rendering() {
        assert_eq!(format_cut(&Cut::empty()), "EMPTY");
        let cut = Cut::new([(3, 2), (0, 1)]);
        assert_eq!(format_cut(&cut), "0-1 2-3");
    }
}
