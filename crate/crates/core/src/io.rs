//! Text formats for graphs and solutions.
//!
//! Graph files start with `n <count>`, list isolated nodes as `node <id>` and
//! every edge as `u v`. Colorings are `id color` lines, independent sets are
//! `id` lines. Blank lines and `#` comments are skipped.

use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph, IndependentSet, NodeId};
use std::fmt::Write;

pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("n {}\n", g.n());
    for v in g.nodes().filter(|&v| g.degree(v) == 0) {
        writeln!(s, "node {v}").unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap().trim();
        (!l.is_empty()).then(|| (i + 1, l.split_whitespace().collect()))
    })
}

fn parse_id(tok: &str, line: usize) -> Result<NodeId> {
    match tok.parse::<NodeId>() {
        Ok(v) if v > 0 => Ok(v),
        _ => Err(Error::ParseError { line, msg: format!("expected a positive node id, found `{tok}`") }),
    }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (line, head) = lines.next().ok_or(Error::ParseError { line: 1, msg: "empty input".into() })?;
    let count = match head.as_slice() {
        ["n", c] => c.parse::<usize>().map_err(|_| Error::ParseError { line, msg: format!("bad node count `{c}`") })?,
        _ => return Err(Error::ParseError { line, msg: "expected `n <count>` header".into() }),
    };
    let mut g = Graph::new();
    for (line, toks) in lines {
        match toks.as_slice() {
            ["node", v] => g.add_node(parse_id(v, line)?),
            [u, v] => {
                let (u, v) = (parse_id(u, line)?, parse_id(v, line)?);
                if u == v {
                    return Err(Error::ParseError { line, msg: format!("self loop on {u}") });
                }
                g.add_edge(u, v)
            }
            _ => return Err(Error::ParseError { line, msg: "expected `u v` or `node <id>`".into() }),
        }
    }
    if g.n() != count {
        return Err(Error::ParseError { line, msg: format!("header declares {count} nodes, found {}", g.n()) });
    }
    Ok(g)
}

pub fn write_coloring(c: &Coloring) -> String {
    c.iter().map(|(v, col)| format!("{v} {col}\n")).collect()
}

pub fn write_independent_set(s: &IndependentSet) -> String {
    s.iter().map(|v| format!("{v}\n")).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    Coloring(Coloring),
    IndependentSet(IndependentSet),
}

/// Parses a solution file, telling colorings and independent sets apart by
/// the number of fields per line.
pub fn parse_solution(text: &str) -> Result<Solution> {
    let mut coloring = Coloring::new();
    let mut set = IndependentSet::new();
    let mut width = None;
    for (line, toks) in content_lines(text) {
        if *width.get_or_insert(toks.len()) != toks.len() {
            return Err(Error::ParseError { line, msg: "mixed solution line formats".into() });
        }
        match toks.as_slice() {
            [v] => {
                set.insert(parse_id(v, line)?);
            }
            [v, c] => {
                let c = match c.parse::<u32>() {
                    Ok(c) if c > 0 => c,
                    _ => return Err(Error::ParseError { line, msg: format!("bad color `{c}`") }),
                };
                if coloring.insert(parse_id(v, line)?, c).is_some() {
                    return Err(Error::ParseError { line, msg: "node colored twice".into() });
                }
            }
            _ => return Err(Error::ParseError { line, msg: "expected `id` or `id color`".into() }),
        }
    }
    Ok(match width {
        Some(2) => Solution::Coloring(coloring),
        _ => Solution::IndependentSet(set),
    })
}
