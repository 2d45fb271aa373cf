use super::Graph;
use crate::error::{Error, Result};

/// Parses the edge-list format: a header line `n m`, then exactly `m` lines
/// `u v` with 0-based vertex ids. `#` starts a comment that runs to the end of
/// the line; blank lines are ignored. Errors carry the 1-based line number.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut data = text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    });

    let (header_line, header) = data.next().ok_or(Error::Parse {
        line: text.lines().count().max(1),
        message: "missing `n m` header".into(),
    })?;
    let [n, m] = parse_pair(header_line, header)?;
    if n == 0 {
        return Err(parse_err(header_line, "graph must have at least one vertex"));
    }

    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut last_line = header_line;
    for _ in 0..m {
        let (line_no, line) = data
            .next()
            .ok_or_else(|| parse_err(last_line + 1, format!("expected {m} edges, input ended early")))?;
        last_line = line_no;
        let [u, v] = parse_pair(line_no, line)?;
        if u >= n || v >= n {
            return Err(parse_err(line_no, format!("vertex {} out of range [0, {n})", u.max(v))));
        }
        if u == v {
            return Err(parse_err(line_no, format!("self-loop at vertex {u}")));
        }
        if adjacency[u].contains(&v) {
            return Err(parse_err(line_no, format!("duplicate edge {u} {v}")));
        }
        adjacency[u].push(v);
        adjacency[v].push(u);
    }
    if let Some((line_no, _)) = data.next() {
        return Err(parse_err(line_no, format!("unexpected data after {m} edges")));
    }

    Graph::from_adjacency(adjacency)
}

fn parse_pair(line_no: usize, line: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(parse_err(line_no, format!("expected two integers, found `{line}`")));
    }
    let mut out = [0; 2];
    for (slot, field) in out.iter_mut().zip(&fields) {
        *slot = field
            .parse()
            .map_err(|_| parse_err(line_no, format!("`{field}` is not a nonnegative integer")))?;
    }
    Ok(out)
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}
