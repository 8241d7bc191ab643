//! Plain-text edge-list format.
//!
//! First line `n m`, then `m` lines `u v` with 0-based ids. `#` starts a
//! comment anywhere on a line; blank lines are ignored. Writing is
//! deterministic: edges sorted lexicographically, one space between fields.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().filter_map(|raw| {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some(line)
        }
    });
    let header = lines
        .next()
        .ok_or_else(|| Error::InvalidParameter("empty edge-list input".into()))?;
    let mut it = header.split_whitespace();
    let n: usize = parse_field(it.next(), "node count")?;
    let m: usize = parse_field(it.next(), "edge count")?;
    if it.next().is_some() {
        return Err(Error::InvalidParameter(format!(
            "header must be `n m`, got `{header}`"
        )));
    }
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        let mut it = line.split_whitespace();
        let u: usize = parse_field(it.next(), "edge endpoint")?;
        let v: usize = parse_field(it.next(), "edge endpoint")?;
        if it.next().is_some() {
            return Err(Error::InvalidParameter(format!(
                "edge line must be `u v`, got `{line}`"
            )));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::InvalidParameter(format!(
            "header announces {m} edges, found {}",
            edges.len()
        )));
    }
    Graph::from_edge_list(n, &edges)
}

fn parse_field(field: Option<&str>, what: &str) -> Result<usize> {
    field
        .ok_or_else(|| Error::InvalidParameter(format!("missing {what}")))?
        .parse()
        .map_err(|_| Error::InvalidParameter(format!("{what} is not a non-negative integer")))
}

pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn read_edge_list(path: &std::path::Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidParameter(format!("cannot read {}: {e}", path.display())))?;
    parse_edge_list(&text)
}

pub fn write_edge_list(path: &std::path::Path, g: &Graph) -> Result<()> {
    std::fs::write(path, format_edge_list(g))
        .map_err(|e| Error::InvalidParameter(format!("cannot write {}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_with_comments() {
        let text = "# a path\n4 3\n0 1\n1 2  # middle edge\n\n2 3\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g, Graph::path(4).unwrap());
    }

    #[test]
    fn round_trip_is_exact() {
        let g = Graph::gnp_random(9, 0.4, 3).unwrap();
        let text = format_edge_list(&g);
        let back = parse_edge_list(&text).unwrap();
        assert_eq!(g, back);
        assert_eq!(format_edge_list(&back), text);
    }

    #[test]
    fn malformed_inputs_error() {
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("2 1\n0\n").is_err());
        assert!(parse_edge_list("2 2\n0 1\n").is_err());
        assert!(parse_edge_list("2 1\n0 1 7\n").is_err());
        assert!(parse_edge_list("x y\n").is_err());
        assert!(parse_edge_list("2 1\n0 0\n").is_err());
    }
}
