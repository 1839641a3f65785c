//! Edge-list text format and DOT export.
//!
//! ```text
//! # optional comments
//! forest 4
//! 0 1
//! 1 2
//! 2 3
//! ```
//!
//! A document may hold several forests, each introduced by its own
//! `forest <n>` header.

use std::fmt::Write;

use super::Forest;
use crate::error::{Error, Result};

struct Block {
    header_line: usize,
    order: usize,
    edges: Vec<(usize, usize)>,
}

/// Parses every forest block in `text`, in document order.
pub fn parse_forests(text: &str) -> Result<Vec<Forest>> {
    let mut blocks: Vec<Block> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let mut tokens = line.split_whitespace();
        let first = tokens.next().unwrap_or_default();
        if first == "forest" {
            let order = tokens
                .next()
                .ok_or_else(|| err("missing vertex count after `forest`".into()))?
                .parse::<usize>()
                .map_err(|e| err(format!("bad vertex count: {e}")))?;
            if let Some(extra) = tokens.next() {
                return Err(err(format!("unexpected token `{extra}`")));
            }
            blocks.push(Block {
                header_line: line_no,
                order,
                edges: Vec::new(),
            });
            continue;
        }
        let block = blocks
            .last_mut()
            .ok_or_else(|| err("edge before any `forest` header".into()))?;
        let second = tokens
            .next()
            .ok_or_else(|| err("edge line needs two vertex ids".into()))?;
        if let Some(extra) = tokens.next() {
            return Err(err(format!("unexpected token `{extra}`")));
        }
        let u = first
            .parse::<usize>()
            .map_err(|e| err(format!("bad vertex id `{first}`: {e}")))?;
        let v = second
            .parse::<usize>()
            .map_err(|e| err(format!("bad vertex id `{second}`: {e}")))?;
        for w in [u, v] {
            if w >= block.order {
                return Err(err(format!(
                    "vertex {w} out of range for forest of order {}",
                    block.order
                )));
            }
        }
        block.edges.push((u, v));
    }
    blocks
        .into_iter()
        .map(|b| match Forest::new(b.order, &b.edges) {
            Err(Error::BadEdge(u, v, why)) => Err(Error::Parse {
                line: b.header_line,
                message: format!("edge {u} {v}: {why}"),
            }),
            other => other,
        })
        .collect()
}

/// Parses a document holding exactly one forest.
pub fn parse_forest(text: &str) -> Result<Forest> {
    let mut all = parse_forests(text)?;
    match all.len() {
        1 => Ok(all.pop().unwrap()),
        n => Err(Error::Parse {
            line: 0,
            message: format!("expected exactly one forest, found {n}"),
        }),
    }
}

pub fn to_edge_list(forest: &Forest) -> String {
    let mut out = format!("forest {}\n", forest.order());
    for (u, v) in forest.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn to_dot(forest: &Forest, name: &str) -> String {
    let mut out = format!("graph {name} {{\n");
    for v in 0..forest.order() {
        writeln!(out, "  {v};").unwrap();
    }
    for (u, v) in forest.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}
