//! The `.cplx` text format: `.graph` lines followed by face lines
//!
//! ```text
//! f <id> <dart> <dart> ...
//! ```
//!
//! where darts are named `<edge>+` / `<edge>-`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::graph::format::{parse_graph_line, tokens, write_graph, CoveringMaps};
use crate::graph::MultiGraph;
use crate::FormatError;

use super::complex::TwoComplex;
use super::covering::ComplexCovering;

pub fn parse_complex(text: &str) -> Result<TwoComplex, FormatError> {
    let mut g = MultiGraph::new();
    let mut faces: Vec<(usize, Vec<&str>)> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let toks = tokens(line);
        if toks.is_empty() {
            continue;
        }
        if toks[0] == "f" {
            if toks.len() < 3 {
                return Err(FormatError::Syntax { line: i + 1, msg: "face needs an id and darts".into() });
            }
            faces.push((i + 1, toks[1..].to_vec()));
            continue;
        }
        if !faces.is_empty() {
            return Err(FormatError::Syntax { line: i + 1, msg: "graph line after faces".into() });
        }
        if !parse_graph_line(&mut g, i + 1, &toks)? {
            return Err(FormatError::Syntax { line: i + 1, msg: format!("unexpected `{}`", toks[0]) });
        }
    }
    let mut walks = Vec::new();
    let mut names: Vec<String> = Vec::new();
    for (line, toks) in faces {
        let name = toks[0];
        if names.iter().any(|n| n == name) {
            return Err(FormatError::Syntax { line, msg: format!("duplicate face {name}") });
        }
        let walk = toks[1..]
            .iter()
            .map(|d| g.dart_by_name(d).ok_or_else(|| FormatError::Syntax { line, msg: format!("unknown dart {d}") }))
            .collect::<Result<Vec<_>, _>>()?;
        walks.push(walk);
        names.push(name.to_owned());
    }
    TwoComplex::with_names(g, walks, names).map_err(|e| FormatError::Invalid(e.to_string()))
}

pub fn write_complex(k: &TwoComplex) -> String {
    let mut out = write_graph(k.skeleton());
    let g = k.skeleton();
    for (i, f) in k.faces().iter().enumerate() {
        let darts: Vec<&str> = f.iter().map(|&d| g.dart_name(d)).collect();
        writeln!(out, "f {} {}", k.face_name(i), darts.join(" ")).unwrap();
    }
    out
}

pub fn covering_to_maps(p: &ComplexCovering) -> CoveringMaps {
    let mut maps = CoveringMaps::from_graph_covering(&p.graph_part());
    maps.fmap = (0..p.source.face_count())
        .map(|f| (p.source.face_name(f).to_owned(), p.target.face_name(p.fmap[f]).to_owned()))
        .collect::<BTreeMap<_, _>>();
    maps
}

/// Rebuilds a covering from name-keyed maps.
pub fn covering_from_maps(
    source: &TwoComplex,
    target: &TwoComplex,
    maps: &CoveringMaps,
) -> Result<ComplexCovering, FormatError> {
    let (vmap, dmap) = maps.resolve(source.skeleton(), target.skeleton())?;
    let mut fmap = Vec::with_capacity(source.face_count());
    for f in 0..source.face_count() {
        let name = source.face_name(f);
        let t = maps.fmap.get(name).ok_or_else(|| FormatError::Missing(format!("face {name}")))?;
        fmap.push(target.face_by_name(t).ok_or_else(|| FormatError::Unknown(format!("face {t}")))?);
    }
    Ok(ComplexCovering { source: source.clone(), target: target.clone(), vmap, dmap, fmap })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex2::{cover_from_coset_table, presentation_complex};
    use crate::fpgroups::{h_epsilon, todd_coxeter, torus};

    #[test]
    fn round_trip() {
        let k = presentation_complex(&h_epsilon(-1)).unwrap();
        let text = write_complex(&k);
        assert!(text.contains("\nf f1 "));
        assert_eq!(parse_complex(&text).unwrap(), k);
    }

    #[test]
    fn covering_maps_round_trip() {
        let p = torus();
        let t = todd_coxeter(&p, &[p.parse_word("a a").unwrap(), p.parse_word("b").unwrap()], 10).unwrap();
        let k = presentation_complex(&p).unwrap();
        let (c, cov) = cover_from_coset_table(&k, &t).unwrap();
        let json = serde_json::to_string(&covering_to_maps(&cov)).unwrap();
        let maps: CoveringMaps = serde_json::from_str(&json).unwrap();
        assert_eq!(covering_from_maps(&c, &k, &maps).unwrap(), cov);
    }

    #[test]
    fn bad_faces() {
        assert!(parse_complex("v a\ne x a a\nf f0 y+\n").is_err());
        assert!(parse_complex("v a\nv b\ne x a b\nf f0 x+\n").is_err());
        assert!(parse_complex("v a\ne x a a\nf f0 x+\nv b\n").is_err());
    }
}
