use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

pub type VertexId = usize;
pub type DartId = usize;

/// Orientation of a labeled dart relative to its generator symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DartLabel {
    pub symbol: String,
    pub sign: Sign,
}

impl DartLabel {
    pub fn new(symbol: impl Into<String>, sign: Sign) -> Self {
        DartLabel { symbol: symbol.into(), sign }
    }

    pub fn reversed(&self) -> DartLabel {
        DartLabel { symbol: self.symbol.clone(), sign: self.sign.flip() }
    }
}

impl fmt::Display for DartLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Plus => write!(f, "{}", self.symbol),
            Sign::Minus => write!(f, "{}-", self.symbol),
        }
    }
}

/// A finite graph in dart (half-edge) form.
///
/// Every edge is a pair of darts exchanged by `reverse`; a loop is two
/// distinct darts with the same origin. Vertex colours and dart labels are
/// optional per item.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultiGraph {
    origin: Vec<VertexId>,
    reverse: Vec<DartId>,
    colors: Vec<Option<String>>,
    labels: Vec<Option<DartLabel>>,
    vertex_names: Vec<String>,
    dart_names: Vec<String>,
    stars: Vec<Vec<DartId>>,
}

/// One broken invariant found by [`MultiGraph::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphViolation {
    DanglingDart { dart: DartId },
    ReverseOutOfRange { dart: DartId },
    ReverseFixedPoint { dart: DartId },
    ReverseNotInvolution { dart: DartId },
    LabelMismatch { dart: DartId },
}

impl fmt::Display for GraphViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphViolation::DanglingDart { dart } => write!(f, "dangling dart {dart}"),
            GraphViolation::ReverseOutOfRange { dart } => {
                write!(f, "reverse of dart {dart} out of range")
            }
            GraphViolation::ReverseFixedPoint { dart } => {
                write!(f, "reverse fixed point at dart {dart}")
            }
            GraphViolation::ReverseNotInvolution { dart } => {
                write!(f, "reverse not an involution at dart {dart}")
            }
            GraphViolation::LabelMismatch { dart } => write!(f, "label mismatch at dart {dart}"),
        }
    }
}

impl MultiGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph from raw arrays without checking anything; run
    /// [`MultiGraph::validate`] on the result.
    pub fn from_raw(vertex_count: usize, origin: Vec<VertexId>, reverse: Vec<DartId>) -> Self {
        let darts = origin.len();
        let mut g = MultiGraph {
            colors: vec![None; vertex_count],
            labels: vec![None; darts],
            vertex_names: (0..vertex_count).map(|v| format!("v{v}")).collect(),
            dart_names: (0..darts).map(|d| format!("d{d}")).collect(),
            origin,
            reverse,
            stars: Vec::new(),
        };
        g.rebuild_stars();
        g
    }

    fn rebuild_stars(&mut self) {
        self.stars = vec![Vec::new(); self.vertex_names.len()];
        for (d, &o) in self.origin.iter().enumerate() {
            if let Some(star) = self.stars.get_mut(o) {
                star.push(d);
            }
        }
    }

    pub fn add_vertex(&mut self, name: impl Into<String>, color: Option<String>) -> VertexId {
        self.vertex_names.push(name.into());
        self.colors.push(color);
        self.stars.push(Vec::new());
        self.vertex_names.len() - 1
    }

    /// Adds an edge from `u` to `v` and returns its two darts `(u→v, v→u)`.
    /// With a symbol the first dart is labeled `(symbol, +)` and the second
    /// `(symbol, −)`. Dart names are `<name>+` and `<name>-`.
    pub fn add_edge(&mut self, name: &str, u: VertexId, v: VertexId, symbol: Option<&str>) -> (DartId, DartId) {
        let fwd = self.origin.len();
        let bwd = fwd + 1;
        self.origin.extend([u, v]);
        self.reverse.extend([bwd, fwd]);
        match symbol {
            Some(s) => self.labels.extend([Some(DartLabel::new(s, Sign::Plus)), Some(DartLabel::new(s, Sign::Minus))]),
            None => self.labels.extend([None, None]),
        }
        self.dart_names.extend([format!("{name}+"), format!("{name}-")]);
        self.stars[u].push(fwd);
        self.stars[v].push(bwd);
        (fwd, bwd)
    }

    pub fn set_label(&mut self, dart: DartId, label: Option<DartLabel>) {
        self.labels[dart] = label;
    }

    pub fn set_color(&mut self, v: VertexId, color: Option<String>) {
        self.colors[v] = color;
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn dart_count(&self) -> usize {
        self.origin.len()
    }

    pub fn edge_count(&self) -> usize {
        self.origin.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_names.is_empty()
    }

    pub fn origin(&self, d: DartId) -> VertexId {
        self.origin[d]
    }

    pub fn reverse(&self, d: DartId) -> DartId {
        self.reverse[d]
    }

    pub fn terminus(&self, d: DartId) -> VertexId {
        self.origin[self.reverse[d]]
    }

    pub fn color(&self, v: VertexId) -> Option<&str> {
        self.colors[v].as_deref()
    }

    pub fn label(&self, d: DartId) -> Option<&DartLabel> {
        self.labels[d].as_ref()
    }

    pub fn star(&self, v: VertexId) -> &[DartId] {
        &self.stars[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.stars[v].len()
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertex_names[v]
    }

    pub fn dart_name(&self, d: DartId) -> &str {
        &self.dart_names[d]
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.vertex_names.iter().position(|n| n == name)
    }

    pub fn dart_by_name(&self, name: &str) -> Option<DartId> {
        self.dart_names.iter().position(|n| n == name)
    }

    pub fn has_colors(&self) -> bool {
        self.colors.iter().any(Option::is_some)
    }

    pub fn has_labels(&self) -> bool {
        self.labels.iter().any(Option::is_some)
    }

    /// Darts `d` with `d < reverse(d)`, one per edge.
    pub fn edge_representatives(&self) -> impl Iterator<Item = DartId> + '_ {
        (0..self.dart_count()).filter(move |&d| d < self.reverse[d])
    }

    pub fn validate(&self) -> Vec<GraphViolation> {
        let n = self.vertex_count();
        let m = self.dart_count();
        let mut out = Vec::new();
        for d in 0..m {
            if self.origin[d] >= n {
                out.push(GraphViolation::DanglingDart { dart: d });
            }
            let r = match self.reverse.get(d) {
                Some(&r) if r < m => r,
                _ => {
                    out.push(GraphViolation::ReverseOutOfRange { dart: d });
                    continue;
                }
            };
            if r == d {
                out.push(GraphViolation::ReverseFixedPoint { dart: d });
                continue;
            }
            if self.reverse[r] != d {
                out.push(GraphViolation::ReverseNotInvolution { dart: d });
                continue;
            }
            match (&self.labels[d], &self.labels[r]) {
                (None, None) => {}
                (Some(a), Some(b)) if *b == a.reversed() => {}
                _ => out.push(GraphViolation::LabelMismatch { dart: d }),
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Component index per vertex, numbered in order of least vertex.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.vertex_count()];
        let mut next = 0;
        for s in 0..self.vertex_count() {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &d in self.star(v) {
                    let w = self.terminus(d);
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn component_count(&self) -> usize {
        self.components().into_iter().max().map_or(0, |c| c + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Induced subgraph on a set of vertices closed under adjacency, given as
    /// a keep-mask. Returns the subgraph together with the old ids of its
    /// vertices and darts.
    pub fn induced(&self, keep: &[bool]) -> (MultiGraph, Vec<VertexId>, Vec<DartId>) {
        let mut vmap = vec![usize::MAX; self.vertex_count()];
        let mut sub = MultiGraph::new();
        let mut old_vertices = Vec::new();
        for v in 0..self.vertex_count() {
            if keep[v] {
                vmap[v] = sub.add_vertex(self.vertex_names[v].clone(), self.colors[v].clone());
                old_vertices.push(v);
            }
        }
        let mut dmap = vec![usize::MAX; self.dart_count()];
        let mut old_darts = Vec::new();
        for d in self.edge_representatives() {
            let (u, w) = (self.origin[d], self.terminus(d));
            if !(keep[u] && keep[w]) {
                continue;
            }
            let r = self.reverse[d];
            let (a, b) = sub.add_edge("", vmap[u], vmap[w], None);
            sub.labels[a] = self.labels[d].clone();
            sub.labels[b] = self.labels[r].clone();
            sub.dart_names[a] = self.dart_names[d].clone();
            sub.dart_names[b] = self.dart_names[r].clone();
            dmap[d] = a;
            dmap[r] = b;
        }
        old_darts.resize(sub.dart_count(), 0);
        for (old, &new) in dmap.iter().enumerate() {
            if new != usize::MAX {
                old_darts[new] = old;
            }
        }
        (sub, old_vertices, old_darts)
    }

    /// The connected component containing `v`, with old vertex and dart ids.
    pub fn component_of(&self, v: VertexId) -> (MultiGraph, Vec<VertexId>, Vec<DartId>) {
        let comp = self.components();
        let keep: Vec<bool> = comp.iter().map(|&c| c == comp[v]).collect();
        self.induced(&keep)
    }

    pub fn rename_vertex(&mut self, v: VertexId, name: impl Into<String>) {
        self.vertex_names[v] = name.into();
    }

    pub fn rename_dart(&mut self, d: DartId, name: impl Into<String>) {
        self.dart_names[d] = name.into();
    }

    /// Disjoint union; the darts and vertices of `other` are appended and
    /// their new ids are offset by the current counts.
    pub fn append(&mut self, other: &MultiGraph) {
        let voff = self.vertex_count();
        let doff = self.dart_count();
        self.vertex_names.extend(other.vertex_names.iter().cloned());
        self.colors.extend(other.colors.iter().cloned());
        self.origin.extend(other.origin.iter().map(|&o| o + voff));
        self.reverse.extend(other.reverse.iter().map(|&r| r + doff));
        self.labels.extend(other.labels.iter().cloned());
        self.dart_names.extend(other.dart_names.iter().cloned());
        self.rebuild_stars();
    }

    /// Identifies vertices according to `class_of` (a map onto `0..k`); the
    /// first vertex of each class donates its name and colour.
    pub fn quotient_vertices(&self, class_of: &[usize]) -> MultiGraph {
        let k = class_of.iter().copied().max().map_or(0, |c| c + 1);
        let mut names = vec![None; k];
        let mut colors = vec![None; k];
        for v in 0..self.vertex_count() {
            let c = class_of[v];
            if names[c].is_none() {
                names[c] = Some(self.vertex_names[v].clone());
                colors[c] = self.colors[v].clone();
            }
        }
        let mut g = MultiGraph {
            origin: self.origin.iter().map(|&o| class_of[o]).collect(),
            reverse: self.reverse.clone(),
            colors,
            labels: self.labels.clone(),
            vertex_names: names.into_iter().map(|n| n.unwrap_or_default()).collect(),
            dart_names: self.dart_names.clone(),
            stars: Vec::new(),
        };
        g.rebuild_stars();
        g
    }

    /// Gives every vertex and dart a fresh positional name (`v0`, `e0+`, ...).
    pub fn normalize_names(&mut self) {
        for v in 0..self.vertex_count() {
            self.vertex_names[v] = format!("v{v}");
        }
        let mut e = 0;
        for d in 0..self.dart_count() {
            let r = self.reverse[d];
            if d < r {
                self.dart_names[d] = format!("e{e}+");
                self.dart_names[r] = format!("e{e}-");
                e += 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_loop_is_valid() {
        let mut g = MultiGraph::new();
        let v = g.add_vertex("v", None);
        g.add_edge("e", v, v, None);
        assert!(g.is_valid());
        assert_eq!(g.degree(v), 2);
    }

    #[test]
    fn fixed_point_reverse_reported() {
        let g = MultiGraph::from_raw(1, vec![0, 0], vec![0, 1]);
        let report = g.validate();
        assert_eq!(report.len(), 2);
        assert!(report[0].to_string().contains("reverse fixed point"));
    }

    #[test]
    fn label_mismatch_reported() {
        let mut g = MultiGraph::new();
        let v = g.add_vertex("v", None);
        let (_, b) = g.add_edge("e", v, v, Some("a"));
        g.set_label(b, Some(DartLabel::new("b", Sign::Minus)));
        let report = g.validate();
        assert!(report.iter().any(|v| v.to_string().contains("label mismatch")));
    }

    #[test]
    fn dangling_dart_reported() {
        let g = MultiGraph::from_raw(1, vec![0, 3], vec![1, 0]);
        assert!(g.validate().contains(&GraphViolation::DanglingDart { dart: 1 }));
    }

    #[test]
    fn components_of_two_loops() {
        let mut g = MultiGraph::new();
        let a = g.add_vertex("a", None);
        let b = g.add_vertex("b", None);
        g.add_edge("x", a, a, None);
        g.add_edge("y", b, b, None);
        assert_eq!(g.components(), vec![0, 1]);
        let (sub, vs, ds) = g.component_of(b);
        assert_eq!(vs, vec![1]);
        assert_eq!(ds, vec![2, 3]);
        assert!(sub.is_valid());
    }
}
