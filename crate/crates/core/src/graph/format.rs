//! The `.graph` text format and JSON covering maps.
//!
//! ```text
//! # comment
//! v <id> [color]
//! e <id> <v1> <v2> [symbol]
//! ```
//!
//! Each `e` line creates the darts `<id>+` (from `v1`) and `<id>-`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::covering::GraphCovering;
use super::multigraph::MultiGraph;
use crate::FormatError;

pub(crate) fn parse_graph_line(g: &mut MultiGraph, lineno: usize, toks: &[&str]) -> Result<bool, FormatError> {
    let err = |msg: String| FormatError::Syntax { line: lineno, msg };
    match toks {
        ["v", id, rest @ ..] => {
            if g.vertex_by_name(id).is_some() {
                return Err(err(format!("duplicate vertex {id}")));
            }
            let color = match rest {
                [] => None,
                [c] => Some(c.to_string()),
                _ => return Err(err("too many fields on vertex line".into())),
            };
            g.add_vertex(*id, color);
            Ok(true)
        }
        ["e", id, u, v, rest @ ..] => {
            let u = g.vertex_by_name(u).ok_or_else(|| err(format!("unknown vertex {u}")))?;
            let v = g.vertex_by_name(v).ok_or_else(|| err(format!("unknown vertex {v}")))?;
            if g.dart_by_name(&format!("{id}+")).is_some() {
                return Err(err(format!("duplicate edge {id}")));
            }
            let symbol = match rest {
                [] => None,
                [s] => Some(*s),
                _ => return Err(err("too many fields on edge line".into())),
            };
            g.add_edge(id, u, v, symbol);
            Ok(true)
        }
        _ => Ok(false),
    }
}

pub(crate) fn tokens(line: &str) -> Vec<&str> {
    let line = line.split('#').next().unwrap_or("");
    line.split_whitespace().collect()
}

pub fn parse_graph(text: &str) -> Result<MultiGraph, FormatError> {
    let mut g = MultiGraph::new();
    for (i, line) in text.lines().enumerate() {
        let toks = tokens(line);
        if toks.is_empty() {
            continue;
        }
        if !parse_graph_line(&mut g, i + 1, &toks)? {
            return Err(FormatError::Syntax { line: i + 1, msg: format!("unexpected `{}`", toks[0]) });
        }
    }
    Ok(g)
}

/// Edge id of a dart name `<id>+` / `<id>-`.
pub(crate) fn edge_id(dart_name: &str) -> &str {
    dart_name.strip_suffix(['+', '-']).unwrap_or(dart_name)
}

pub fn write_graph(g: &MultiGraph) -> String {
    let mut out = String::new();
    for v in 0..g.vertex_count() {
        match g.color(v) {
            Some(c) => writeln!(out, "v {} {c}", g.vertex_name(v)).unwrap(),
            None => writeln!(out, "v {}", g.vertex_name(v)).unwrap(),
        }
    }
    for d in g.edge_representatives() {
        // write the positive dart first so that labels round-trip
        let d = match g.label(d) {
            Some(l) if l.sign == super::Sign::Minus => g.reverse(d),
            _ => d,
        };
        let id = edge_id(g.dart_name(d));
        let (u, v) = (g.vertex_name(g.origin(d)), g.vertex_name(g.terminus(d)));
        match g.label(d) {
            Some(l) => writeln!(out, "e {id} {u} {v} {}", l.symbol).unwrap(),
            None => writeln!(out, "e {id} {u} {v}").unwrap(),
        }
    }
    out
}

/// Name-keyed covering maps as stored on disk.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoveringMaps {
    pub vmap: BTreeMap<String, String>,
    pub dmap: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub fmap: BTreeMap<String, String>,
}

impl CoveringMaps {
    pub fn from_graph_covering(p: &GraphCovering) -> Self {
        let vmap = (0..p.source.vertex_count())
            .map(|v| (p.source.vertex_name(v).to_owned(), p.target.vertex_name(p.vmap[v]).to_owned()))
            .collect();
        let dmap = (0..p.source.dart_count())
            .map(|d| (p.source.dart_name(d).to_owned(), p.target.dart_name(p.dmap[d]).to_owned()))
            .collect();
        CoveringMaps { vmap, dmap, fmap: BTreeMap::new() }
    }

    /// Resolves names into index maps; missing or unknown names are errors.
    pub fn resolve(&self, source: &MultiGraph, target: &MultiGraph) -> Result<(Vec<usize>, Vec<usize>), FormatError> {
        let mut vmap = Vec::with_capacity(source.vertex_count());
        for v in 0..source.vertex_count() {
            let name = source.vertex_name(v);
            let t = self.vmap.get(name).ok_or_else(|| FormatError::Missing(format!("vertex {name}")))?;
            vmap.push(target.vertex_by_name(t).ok_or_else(|| FormatError::Unknown(format!("vertex {t}")))?);
        }
        let mut dmap = Vec::with_capacity(source.dart_count());
        for d in 0..source.dart_count() {
            let name = source.dart_name(d);
            let t = self.dmap.get(name).ok_or_else(|| FormatError::Missing(format!("dart {name}")))?;
            dmap.push(target.dart_by_name(t).ok_or_else(|| FormatError::Unknown(format!("dart {t}")))?);
        }
        Ok((vmap, dmap))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_coloured_cycle() {
        let g = parse_graph("v a R\nv b B\ne x a b s\ne y b a s # back\n").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.dart_count(), 4);
        assert_eq!(g.color(1), Some("B"));
        assert_eq!(g.dart_by_name("y-"), Some(3));
        assert!(g.is_valid());
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn unknown_vertex_is_an_error() {
        assert!(parse_graph("v a\ne x a b\n").is_err());
    }
}
