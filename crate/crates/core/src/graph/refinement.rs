use std::collections::BTreeMap;

use super::multigraph::{DartLabel, MultiGraph, VertexId};
use super::GraphError;

/// Type of a dart as seen by the refinement: its label and the class of its
/// terminus.
pub type DartType = (Option<DartLabel>, usize);

/// Coarsest stable vertex partition of a graph.
///
/// Classes are numbered canonically: each round sorts the distinct
/// signatures `(previous class, multiset of dart types)` and numbers them in
/// that order, starting from the sorted vertex colours.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeRefinement {
    class_of: Vec<usize>,
    matrix: Vec<Vec<usize>>,
    class_colors: Vec<Option<String>>,
    typed_rows: Vec<Vec<(DartType, usize)>>,
    class_sizes: Vec<usize>,
}

impl DegreeRefinement {
    pub fn class_of(&self, v: VertexId) -> usize {
        self.class_of[v]
    }

    pub fn classes(&self) -> &[usize] {
        &self.class_of
    }

    pub fn class_count(&self) -> usize {
        self.matrix.len()
    }

    /// `matrix()[i][j]` is the number of darts from a class-`i` vertex into
    /// class `j`.
    pub fn matrix(&self) -> &[Vec<usize>] {
        &self.matrix
    }

    pub fn class_colors(&self) -> &[Option<String>] {
        &self.class_colors
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    /// Dart-type multiplicities of class `i`, sorted by type.
    pub fn typed_row(&self, i: usize) -> &[(DartType, usize)] {
        &self.typed_rows[i]
    }

    /// Whether two refinements describe the same universal cover: same
    /// matrix, colours and labelled rows. Numbering is canonical, so this is
    /// comparison up to class permutation.
    pub fn same_shape(&self, other: &DegreeRefinement) -> bool {
        self.matrix == other.matrix && self.class_colors == other.class_colors && self.typed_rows == other.typed_rows
    }
}

fn dart_types(g: &MultiGraph, class_of: &[usize], v: VertexId) -> Vec<DartType> {
    let mut types: Vec<DartType> = g.star(v).iter().map(|&d| (g.label(d).cloned(), class_of[g.terminus(d)])).collect();
    types.sort();
    types
}

fn renumber<K: Ord + Clone>(keys: &[K]) -> (Vec<usize>, usize) {
    let mut distinct: Vec<K> = keys.to_vec();
    distinct.sort();
    distinct.dedup();
    let ids = keys.iter().map(|k| distinct.binary_search(k).unwrap()).collect();
    (ids, distinct.len())
}

/// Refines an explicit starting partition to the coarsest stable one.
pub(crate) fn refine_from(g: &MultiGraph, start: Vec<usize>) -> Vec<usize> {
    let (mut class_of, mut count) = renumber(&start);
    loop {
        let sigs: Vec<(usize, Vec<DartType>)> =
            (0..g.vertex_count()).map(|v| (class_of[v], dart_types(g, &class_of, v))).collect();
        let (next, next_count) = renumber(&sigs);
        class_of = next;
        if next_count == count {
            return class_of;
        }
        count = next_count;
    }
}

pub fn degree_refinement(g: &MultiGraph) -> Result<DegreeRefinement, GraphError> {
    if g.is_empty() {
        return Err(GraphError::EmptyGraph);
    }
    let colors: Vec<Option<String>> = (0..g.vertex_count()).map(|v| g.color(v).map(str::to_owned)).collect();
    let class_of = refine_from(g, renumber(&colors).0);
    let s = class_of.iter().max().unwrap() + 1;

    let mut rep = vec![usize::MAX; s];
    let mut class_sizes = vec![0; s];
    for (v, &c) in class_of.iter().enumerate() {
        if rep[c] == usize::MAX {
            rep[c] = v;
        }
        class_sizes[c] += 1;
    }
    let mut matrix = vec![vec![0; s]; s];
    let mut typed_rows = Vec::with_capacity(s);
    let mut class_colors = Vec::with_capacity(s);
    for (i, &v) in rep.iter().enumerate() {
        let mut row: BTreeMap<DartType, usize> = BTreeMap::new();
        for t in dart_types(g, &class_of, v) {
            matrix[i][t.1] += 1;
            *row.entry(t).or_default() += 1;
        }
        typed_rows.push(row.into_iter().collect());
        class_colors.push(colors[v].clone());
    }
    Ok(DegreeRefinement { class_of, matrix, class_colors, typed_rows, class_sizes })
}

/// Decides whether two connected graphs share a common covering.
pub fn have_common_cover(a: &MultiGraph, b: &MultiGraph) -> Result<bool, GraphError> {
    for g in [a, b] {
        if g.is_empty() {
            return Err(GraphError::EmptyGraph);
        }
        if !g.is_connected() {
            return Err(GraphError::Disconnected);
        }
    }
    Ok(degree_refinement(a)?.same_shape(&degree_refinement(b)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle_graph, path_graph};

    #[test]
    fn cycle_has_one_class() {
        let r = degree_refinement(&cycle_graph(4, None)).unwrap();
        assert_eq!(r.matrix(), &[vec![2]]);
    }

    #[test]
    fn path_splits_ends_from_middle() {
        let r = degree_refinement(&path_graph(3)).unwrap();
        assert_eq!(r.matrix(), &[vec![0, 1], vec![2, 0]]);
        assert_eq!(r.class_of(0), r.class_of(2));
        assert_ne!(r.class_of(0), r.class_of(1));
    }

    #[test]
    fn alternating_colours_on_c4() {
        let c4 = cycle_graph(4, Some(&["R", "B", "R", "B"]));
        let r = degree_refinement(&c4).unwrap();
        assert_eq!(r.matrix(), &[vec![0, 2], vec![2, 0]]);
        assert_eq!(r.class_colors(), &[Some("B".to_string()), Some("R".to_string())]);
    }

    #[test]
    fn empty_graph_is_an_error() {
        assert!(matches!(degree_refinement(&MultiGraph::new()), Err(GraphError::EmptyGraph)));
    }

    #[test]
    fn common_cover_decisions() {
        let c3 = cycle_graph(3, None);
        assert!(have_common_cover(&c3, &cycle_graph(6, None)).unwrap());
        assert!(!have_common_cover(&c3, &path_graph(3)).unwrap());
        assert!(have_common_cover(&c3, &c3).unwrap());
    }

    #[test]
    fn disconnected_input_rejected() {
        let mut g = cycle_graph(3, None);
        g.add_vertex("lonely", None);
        assert!(matches!(have_common_cover(&g, &g), Err(GraphError::Disconnected)));
    }

    #[test]
    fn refinement_is_idempotent() {
        let g = path_graph(5);
        let r = degree_refinement(&g).unwrap();
        assert_eq!(refine_from(&g, r.classes().to_vec()), r.classes());
    }
}
