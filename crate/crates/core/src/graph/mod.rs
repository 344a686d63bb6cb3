//! Finite multigraphs in dart form, covering maps, degree refinement and
//! Leighton's common finite cover.

mod covering;
pub mod format;
mod leighton;
mod multigraph;
mod refinement;

pub use covering::{CoverVerdict, CoverViolation, GraphCovering};
pub use leighton::{leighton_common_cover, CommonCover};
pub use multigraph::{DartId, DartLabel, GraphViolation, MultiGraph, Sign, VertexId};
pub use refinement::{degree_refinement, have_common_cover, DartType, DegreeRefinement};

pub(crate) use covering::verify_maps;
pub(crate) use refinement::refine_from;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("empty graph")]
    EmptyGraph,
    #[error("graph is not connected")]
    Disconnected,
    #[error("no common cover exists")]
    NoCommonCover,
}

/// Cycle on `n` vertices: edge `i` runs from `i` to `i + 1 mod n`, so its
/// darts are `2i` and `2i + 1`. `n = 1` gives a loop, `n = 2` a digon.
pub fn cycle_graph(n: usize, colors: Option<&[&str]>) -> MultiGraph {
    let mut g = MultiGraph::new();
    for i in 0..n {
        g.add_vertex(format!("v{i}"), colors.map(|c| c[i].to_string()));
    }
    for i in 0..n {
        g.add_edge(&format!("e{i}"), i, (i + 1) % n, None);
    }
    g
}

/// Path on `n` vertices.
pub fn path_graph(n: usize) -> MultiGraph {
    let mut g = MultiGraph::new();
    for i in 0..n {
        g.add_vertex(format!("v{i}"), None);
    }
    for i in 1..n {
        g.add_edge(&format!("e{}", i - 1), i - 1, i, None);
    }
    g
}

/// Complete graph on `n` vertices.
pub fn complete_graph(n: usize) -> MultiGraph {
    let mut g = MultiGraph::new();
    for i in 0..n {
        g.add_vertex(format!("v{i}"), None);
    }
    let mut e = 0;
    for i in 0..n {
        for j in i + 1..n {
            g.add_edge(&format!("e{e}"), i, j, None);
            e += 1;
        }
    }
    g
}

/// Complete bipartite graph `K_{m,n}`.
pub fn complete_bipartite_graph(m: usize, n: usize) -> MultiGraph {
    let mut g = MultiGraph::new();
    for i in 0..m + n {
        g.add_vertex(format!("v{i}"), None);
    }
    let mut e = 0;
    for i in 0..m {
        for j in 0..n {
            g.add_edge(&format!("e{e}"), i, m + j, None);
            e += 1;
        }
    }
    g
}

/// One vertex with `k` loops (a bouquet of circles).
pub fn bouquet(k: usize) -> MultiGraph {
    let mut g = MultiGraph::new();
    g.add_vertex("v0", None);
    for i in 0..k {
        g.add_edge(&format!("e{i}"), 0, 0, None);
    }
    g
}
