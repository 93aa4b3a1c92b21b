//! Edge-list text format: a header line `n m`, then `m` lines `u v`.

use super::Graph;
use crate::error::{Error, Result};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = it
            .next()
            .ok_or_else(|| parse_err(line_no, format!("missing {what}")))?;
        tok.parse::<usize>()
            .map_err(|_| parse_err(line_no, format!("invalid {what} `{tok}`")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if it.next().is_some() {
        return Err(parse_err(line_no, "expected exactly two fields"));
    }
    Ok((a, b))
}

/// Parses the edge-list format. Blank lines are skipped; errors carry
/// 1-based line numbers.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let (n, m) = parse_pair(hline, header)?;
    let mut g = Graph::empty(n).map_err(|e| parse_err(hline, e.to_string()))?;
    let mut count = 0;
    for (line_no, line) in lines {
        if count == m {
            return Err(parse_err(
                line_no,
                format!("more than the declared {m} edges"),
            ));
        }
        let (u, v) = parse_pair(line_no, line)?;
        g.add_edge(u, v)
            .map_err(|e| parse_err(line_no, e.to_string()))?;
        count += 1;
    }
    if count < m {
        return Err(parse_err(
            text.lines().count().max(1),
            format!("declared {m} edges but found {count}"),
        ));
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.vertex_count(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
