//! Plain-text edge lists: a header line `n m` followed by `m` lines `u v`.
//! Blank lines and lines starting with `#` are ignored.

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let bad = |line: usize, message: &str| Error::EdgeList {
        line,
        message: message.to_string(),
    };

    let (line, header) = lines.next().ok_or_else(|| bad(1, "missing header"))?;
    let [n, m] = parse_pair(header).ok_or_else(|| bad(line, "header must be `n m`"))?;
    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines {
        let [u, v] = parse_pair(text).ok_or_else(|| bad(line, "expected `u v`"))?;
        if u >= n || v >= n || u == v {
            return Err(bad(line, "edge endpoint out of range or loop"));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(bad(line, &format!("header declares {m} edges, found {}", edges.len())));
    }
    let g = Graph::from_edges(n, edges)?;
    if g.edge_count() != m {
        return Err(bad(line, "duplicate edges"));
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u, e.v));
    }
    out
}

fn parse_pair(s: &str) -> Option<[usize; 2]> {
    let mut it = s.split_whitespace().map(str::parse::<usize>);
    let pair = [it.next()?.ok()?, it.next()?.ok()?];
    it.next().is_none().then_some(pair)
}
