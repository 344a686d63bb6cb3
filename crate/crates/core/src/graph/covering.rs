use std::fmt;

use super::multigraph::{DartId, MultiGraph, VertexId};

/// A candidate covering map between two graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphCovering {
    pub source: MultiGraph,
    pub target: MultiGraph,
    pub vmap: Vec<VertexId>,
    pub dmap: Vec<DartId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverViolation {
    VertexMapSize,
    DartMapSize,
    VertexOutOfRange { vertex: VertexId },
    DartOutOfRange { dart: DartId },
    OriginMismatch { dart: DartId },
    ReverseMismatch { dart: DartId },
    StarNotBijective { vertex: VertexId },
    ColorMismatch { vertex: VertexId },
    LabelMismatch { dart: DartId },
    UnevenFibres { target_vertex: VertexId, size: usize, expected: usize },
    InvalidGraph(String),
}

impl fmt::Display for CoverViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use CoverViolation::*;
        match self {
            VertexMapSize => write!(f, "vertex map does not cover every source vertex"),
            DartMapSize => write!(f, "dart map does not cover every source dart"),
            VertexOutOfRange { vertex } => write!(f, "vertex {vertex} maps outside the target"),
            DartOutOfRange { dart } => write!(f, "dart {dart} maps outside the target"),
            OriginMismatch { dart } => write!(f, "origin not preserved at dart {dart}"),
            ReverseMismatch { dart } => write!(f, "reverse not preserved at dart {dart}"),
            StarNotBijective { vertex } => write!(f, "star of vertex {vertex} not mapped bijectively"),
            ColorMismatch { vertex } => write!(f, "colour not preserved at vertex {vertex}"),
            LabelMismatch { dart } => write!(f, "label not preserved at dart {dart}"),
            UnevenFibres { target_vertex, size, expected } => {
                write!(f, "target vertex {target_vertex} has {size} preimages, expected {expected}")
            }
            InvalidGraph(s) => write!(f, "invalid graph: {s}"),
        }
    }
}

/// Outcome of [`GraphCovering::verify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverVerdict {
    pub violations: Vec<CoverViolation>,
    pub degree: Option<usize>,
}

impl CoverVerdict {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl GraphCovering {
    pub fn new(source: MultiGraph, target: MultiGraph, vmap: Vec<VertexId>, dmap: Vec<DartId>) -> Self {
        GraphCovering { source, target, vmap, dmap }
    }

    pub fn identity(g: &MultiGraph) -> Self {
        GraphCovering {
            source: g.clone(),
            target: g.clone(),
            vmap: (0..g.vertex_count()).collect(),
            dmap: (0..g.dart_count()).collect(),
        }
    }

    pub fn verify(&self) -> CoverVerdict {
        verify_maps(&self.source, &self.target, &self.vmap, &self.dmap)
    }

    /// Restricts the covering to the component of `v` in the source.
    pub fn restrict_to_component(&self, v: VertexId) -> GraphCovering {
        let (sub, vs, ds) = self.source.component_of(v);
        GraphCovering {
            vmap: vs.iter().map(|&old| self.vmap[old]).collect(),
            dmap: ds.iter().map(|&old| self.dmap[old]).collect(),
            source: sub,
            target: self.target.clone(),
        }
    }

    /// Fibre sizes over each target vertex.
    pub fn fibre_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.target.vertex_count()];
        for &t in &self.vmap {
            if t < sizes.len() {
                sizes[t] += 1;
            }
        }
        sizes
    }
}

pub(crate) fn verify_maps(
    source: &MultiGraph,
    target: &MultiGraph,
    vmap: &[VertexId],
    dmap: &[DartId],
) -> CoverVerdict {
    use CoverViolation::*;
    let mut violations = Vec::new();
    for (name, g) in [("source", source), ("target", target)] {
        let report = g.validate();
        if let Some(first) = report.first() {
            violations.push(InvalidGraph(format!("{name}: {first}")));
        }
    }
    if !violations.is_empty() {
        return CoverVerdict { violations, degree: None };
    }
    if vmap.len() != source.vertex_count() {
        violations.push(VertexMapSize);
    }
    if dmap.len() != source.dart_count() {
        violations.push(DartMapSize);
    }
    if !violations.is_empty() {
        return CoverVerdict { violations, degree: None };
    }
    for (v, &t) in vmap.iter().enumerate() {
        if t >= target.vertex_count() {
            violations.push(VertexOutOfRange { vertex: v });
        }
    }
    for (d, &t) in dmap.iter().enumerate() {
        if t >= target.dart_count() {
            violations.push(DartOutOfRange { dart: d });
        }
    }
    if !violations.is_empty() {
        return CoverVerdict { violations, degree: None };
    }

    for d in 0..source.dart_count() {
        if target.origin(dmap[d]) != vmap[source.origin(d)] {
            violations.push(OriginMismatch { dart: d });
        }
        if dmap[source.reverse(d)] != target.reverse(dmap[d]) {
            violations.push(ReverseMismatch { dart: d });
        }
        if let Some(l) = target.label(dmap[d]) {
            if source.label(d) != Some(l) {
                violations.push(LabelMismatch { dart: d });
            }
        }
    }
    for v in 0..source.vertex_count() {
        let tv = vmap[v];
        let mut image: Vec<DartId> = source.star(v).iter().map(|&d| dmap[d]).collect();
        image.sort_unstable();
        let mut expected = target.star(tv).to_vec();
        expected.sort_unstable();
        if image != expected {
            violations.push(StarNotBijective { vertex: v });
        }
        if let Some(c) = target.color(tv) {
            if source.color(v) != Some(c) {
                violations.push(ColorMismatch { vertex: v });
            }
        }
    }

    let mut sizes = vec![0usize; target.vertex_count()];
    for &t in vmap {
        sizes[t] += 1;
    }
    let mut degree = None;
    if let Some(&expected) = sizes.first() {
        let mut even = true;
        for (tv, &size) in sizes.iter().enumerate() {
            if size != expected {
                even = false;
                violations.push(UnevenFibres { target_vertex: tv, size, expected });
            }
        }
        if even {
            degree = Some(expected);
        }
    }
    CoverVerdict { violations, degree }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle_graph;

    #[test]
    fn identity_on_c3() {
        let c3 = cycle_graph(3, None);
        let v = GraphCovering::identity(&c3).verify();
        assert!(v.is_valid());
        assert_eq!(v.degree, Some(1));
    }

    #[test]
    fn c6_double_covers_c3() {
        let c6 = cycle_graph(6, None);
        let c3 = cycle_graph(3, None);
        // cycle_graph(n) puts edge i from i to i+1 with darts 2i, 2i+1
        let vmap = (0..6).map(|i| i % 3).collect();
        let dmap = (0..12).map(|d| d % 6).collect();
        let v = GraphCovering::new(c6, c3, vmap, dmap).verify();
        assert!(v.is_valid(), "{:?}", v.violations);
        assert_eq!(v.degree, Some(2));
    }

    #[test]
    fn path_onto_edge_fails_at_middle() {
        let mut p3 = MultiGraph::new();
        for i in 0..3 {
            p3.add_vertex(format!("v{i}"), None);
        }
        p3.add_edge("e0", 0, 1, None);
        p3.add_edge("e1", 1, 2, None);
        let mut k2 = MultiGraph::new();
        k2.add_vertex("u1", None);
        k2.add_vertex("u2", None);
        k2.add_edge("f", 0, 1, None);
        // e0+ : v1->v2 maps to f+, e1- : v3->v2 maps to f+ as well
        let cov = GraphCovering::new(p3, k2, vec![0, 1, 0], vec![0, 1, 1, 0]);
        let v = cov.verify();
        assert!(!v.is_valid());
        assert!(v.violations.contains(&CoverViolation::StarNotBijective { vertex: 1 }));
    }

    #[test]
    fn colour_must_be_pulled_back() {
        let mut target = cycle_graph(2, None);
        target.set_color(0, Some("R".into()));
        let source = cycle_graph(2, None);
        let cov = GraphCovering::new(source, target, vec![0, 1], vec![0, 1, 2, 3]);
        let v = cov.verify();
        assert_eq!(v.violations, vec![CoverViolation::ColorMismatch { vertex: 0 }]);
    }
}
