//! Graph ingestion: edge-list format, a DOT subset, and an inline form.

use super::{Graph, GraphError};

fn parse_err(line: usize, msg: impl Into<String>) -> GraphError {
    GraphError::Parse {
        line,
        msg: msg.into(),
    }
}

/// Parses either the edge-list format or the DOT subset, auto-detected.
///
/// Edge-list: first significant line `n=<integer>`, then one `<i> <j>` pair
/// per line; `#` starts a comment. DOT: `graph { 1 -- 2; ... }` with integer
/// node names.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.starts_with("graph") || l.starts_with("strict graph") => parse_dot(text),
        _ => parse_edge_list(text),
    }
}

/// Parses the edge-list format, reporting 1-based line numbers on failure.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut n: Option<(usize, usize)> = None; // (value, line)
    let mut edges: Vec<(usize, usize, usize)> = Vec::new(); // (i, j, line)
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if n.is_none() {
            let rest = line
                .strip_prefix("n=")
                .or_else(|| line.strip_prefix("n ="))
                .ok_or_else(|| parse_err(lineno, "expected header `n=<integer>`"))?;
            let value: usize = rest
                .trim()
                .parse()
                .map_err(|_| parse_err(lineno, format!("invalid vertex count `{}`", rest.trim())))?;
            n = Some((value, lineno));
            continue;
        }
        let mut parts = line.split_whitespace();
        let (a, b) = match (parts.next(), parts.next(), parts.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => return Err(parse_err(lineno, format!("expected `<i> <j>`, got `{line}`"))),
        };
        let a: usize = a
            .parse()
            .map_err(|_| parse_err(lineno, format!("invalid vertex `{a}`")))?;
        let b: usize = b
            .parse()
            .map_err(|_| parse_err(lineno, format!("invalid vertex `{b}`")))?;
        edges.push((a, b, lineno));
    }
    let (n, header_line) = n.ok_or_else(|| parse_err(1, "missing header `n=<integer>`"))?;
    build(n, header_line, &edges)
}

/// Parses the inline form `n=3;1-2;1-3` used on the command line.
pub fn parse_inline(text: &str) -> Result<Graph, GraphError> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    for (idx, raw) in text.split(';').enumerate() {
        let item = raw.trim();
        let pos = idx + 1;
        if item.is_empty() {
            continue;
        }
        if n.is_none() {
            let rest = item
                .strip_prefix("n=")
                .ok_or_else(|| parse_err(pos, "inline graph must start with `n=<integer>`"))?;
            n = Some(
                rest.trim()
                    .parse()
                    .map_err(|_| parse_err(pos, format!("invalid vertex count `{rest}`")))?,
            );
            continue;
        }
        let (a, b) = item
            .split_once('-')
            .ok_or_else(|| parse_err(pos, format!("expected `<i>-<j>`, got `{item}`")))?;
        let a: usize = a
            .trim()
            .parse()
            .map_err(|_| parse_err(pos, format!("invalid vertex `{a}`")))?;
        let b: usize = b
            .trim()
            .parse()
            .map_err(|_| parse_err(pos, format!("invalid vertex `{b}`")))?;
        edges.push((a, b, pos));
    }
    let n = n.ok_or_else(|| parse_err(1, "missing `n=<integer>`"))?;
    build(n, 1, &edges)
}

/// Parses the DOT subset: `graph [name] { i -- j; k; }` with integer names.
/// The vertex count is the largest label mentioned.
pub fn parse_dot(text: &str) -> Result<Graph, GraphError> {
    let open = text
        .find('{')
        .ok_or_else(|| parse_err(1, "DOT input missing `{`"))?;
    let close = text
        .rfind('}')
        .ok_or_else(|| parse_err(1, "DOT input missing `}`"))?;
    let header = text[..open].trim();
    if !(header == "graph" || header.starts_with("graph ") || header.starts_with("strict graph")) {
        return Err(parse_err(1, "only undirected `graph { ... }` input is supported"));
    }
    let body = &text[open + 1..close];

    let mut max_vertex = 0usize;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    let stmt_line = |offset: usize| text[..open + 1 + offset].lines().count();
    let mut offset = 0;
    for raw in body.split([';', '\n']) {
        let here = offset;
        offset += raw.len() + 1;
        let stmt = raw.trim();
        if stmt.is_empty() || stmt.starts_with("//") || stmt.starts_with('#') {
            continue;
        }
        if stmt.contains("->") {
            return Err(parse_err(stmt_line(here), "directed edges are not supported"));
        }
        let lineno = stmt_line(here);
        let nodes: Vec<&str> = stmt.split("--").map(str::trim).collect();
        let mut parsed = Vec::with_capacity(nodes.len());
        for tok in &nodes {
            let v: usize = tok
                .parse()
                .map_err(|_| parse_err(lineno, format!("node names must be integers, got `{tok}`")))?;
            max_vertex = max_vertex.max(v);
            parsed.push(v);
        }
        for pair in parsed.windows(2) {
            edges.push((pair[0], pair[1], lineno));
        }
    }
    build(max_vertex, 1, &edges)
}

fn build(n: usize, header_line: usize, edges: &[(usize, usize, usize)]) -> Result<Graph, GraphError> {
    let mut g = match Graph::new(n, []) {
        Ok(g) => g,
        Err(e) => return Err(parse_err(header_line, e.to_string())),
    };
    for &(a, b, line) in edges {
        g.insert_edge(a, b)
            .map_err(|e| parse_err(line, e.to_string()))?;
    }
    Ok(g)
}
