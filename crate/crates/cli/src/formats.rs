//! Graph input and output: graph6 lines and plain edge lists.

use anyhow::{anyhow, bail, Context, Result};
use goodcubic_core::{graph6, Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

/// Edge list text: a header line `n` or `n m`, then one `u v` pair per
/// line. Blank lines and `#` comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap().trim())
        .filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| anyhow!("empty edge list"))?;
    let nums: Vec<usize> = header
        .split_whitespace()
        .map(|t| t.parse().with_context(|| format!("bad header {header:?}")))
        .collect::<Result<_>>()?;
    let (n, m) = match nums[..] {
        [n] => (n, None),
        [n, m] => (n, Some(m)),
        _ => bail!("header must be `n` or `n m`, got {header:?}"),
    };
    let mut edges = Vec::new();
    for line in lines {
        let pair: Vec<Vertex> = line
            .split_whitespace()
            .map(|t| t.parse().with_context(|| format!("bad edge line {line:?}")))
            .collect::<Result<_>>()?;
        match pair[..] {
            [u, v] => edges.push((u, v)),
            _ => bail!("edge line must hold two vertices, got {line:?}"),
        }
    }
    if let Some(m) = m {
        if m != edges.len() {
            bail!("header announces {m} edges but {} follow", edges.len());
        }
    }
    Ok(Graph::from_edge_list(n, edges)?)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u(), e.v()));
    }
    out
}

/// Guesses the format: an edge list starts with a numeric header line.
pub fn detect(text: &str) -> GraphFormat {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap().trim())
        .find(|l| !l.is_empty())
        .unwrap_or("");
    if !first.is_empty() && first.split_whitespace().all(|t| t.parse::<usize>().is_ok()) {
        GraphFormat::EdgeList
    } else {
        GraphFormat::Graph6
    }
}

pub fn parse_graph(text: &str, format: Option<GraphFormat>) -> Result<Graph> {
    match format.unwrap_or_else(|| detect(text)) {
        GraphFormat::Graph6 => {
            let line = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty())
                .ok_or_else(|| anyhow!("empty graph6 input"))?;
            Ok(graph6::decode(line)?)
        }
        GraphFormat::EdgeList => parse_edge_list(text),
    }
}

/// Every graph in a multi-graph input: one graph6 per line, or edge lists
/// separated by blank lines.
pub fn parse_many(text: &str, format: Option<GraphFormat>) -> Result<Vec<Graph>> {
    match format.unwrap_or_else(|| detect(text)) {
        GraphFormat::Graph6 => text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .enumerate()
            .map(|(i, l)| graph6::decode(l).with_context(|| format!("graph {}", i + 1)))
            .collect(),
        GraphFormat::EdgeList => text
            .split("\n\n")
            .filter(|block| block.lines().any(|l| !l.split('#').next().unwrap().trim().is_empty()))
            .enumerate()
            .map(|(i, b)| parse_edge_list(b).with_context(|| format!("graph {}", i + 1)))
            .collect(),
    }
}
