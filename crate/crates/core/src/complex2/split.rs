use crate::graph::{DartId, MultiGraph, VertexId};

use super::complex::TwoComplex;

/// A complex cut into its two-dimensional part and one-dimensional part.
#[derive(Clone, Debug)]
pub struct Split {
    /// Faces together with the edges and vertices they touch.
    pub k2: TwoComplex,
    /// Old ids of the vertices and darts of `k2`.
    pub k2_vertices: Vec<VertexId>,
    pub k2_darts: Vec<DartId>,
    /// Every vertex of the input and every edge lying on no face. Vertex
    /// ids agree with the input.
    pub k1: MultiGraph,
    pub k1_darts: Vec<DartId>,
    /// The vertices of `k2`, which form `k2 ∩ k1`.
    pub shared: Vec<VertexId>,
}

/// Splits `k` into its two-dimensional part and the rest.
pub fn two_dimensional_part(k: &TwoComplex) -> Split {
    let g = k.skeleton();
    let mut in_face = vec![false; g.dart_count()];
    let mut touched = vec![false; g.vertex_count()];
    for f in k.faces() {
        for &d in f {
            in_face[d] = true;
            in_face[g.reverse(d)] = true;
            touched[g.origin(d)] = true;
        }
    }

    let mut k2g = MultiGraph::new();
    let mut new_vertex = vec![usize::MAX; g.vertex_count()];
    let mut k2_vertices = Vec::new();
    for v in 0..g.vertex_count() {
        if touched[v] {
            new_vertex[v] = k2g.add_vertex(g.vertex_name(v), g.color(v).map(str::to_owned));
            k2_vertices.push(v);
        }
    }
    let mut k1 = MultiGraph::new();
    for v in 0..g.vertex_count() {
        k1.add_vertex(g.vertex_name(v), g.color(v).map(str::to_owned));
    }
    let mut new_dart = vec![usize::MAX; g.dart_count()];
    let mut k2_darts = Vec::new();
    let mut k1_darts = Vec::new();
    for d in g.edge_representatives() {
        let r = g.reverse(d);
        let (target, ids, olds) = if in_face[d] {
            let (u, w) = (new_vertex[g.origin(d)], new_vertex[g.terminus(d)]);
            (&mut k2g, (u, w), &mut k2_darts)
        } else {
            (&mut k1, (g.origin(d), g.terminus(d)), &mut k1_darts)
        };
        let (a, b) = target.add_edge("", ids.0, ids.1, None);
        target.set_label(a, g.label(d).cloned());
        target.set_label(b, g.label(r).cloned());
        target.rename_dart(a, g.dart_name(d));
        target.rename_dart(b, g.dart_name(r));
        olds.extend([d, r]);
        if in_face[d] {
            new_dart[d] = a;
            new_dart[r] = b;
        }
    }
    let faces = k.faces().iter().map(|f| f.iter().map(|&d| new_dart[d]).collect()).collect();
    let names = (0..k.face_count()).map(|i| k.face_name(i).to_owned()).collect();
    let k2 = TwoComplex::with_names(k2g, faces, names).expect("faces of a valid complex stay closed");
    let shared = k2_vertices.clone();
    Split { k2, k2_vertices, k2_darts, k1, k1_darts, shared }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex2::presentation_complex;
    use crate::fpgroups::{h_epsilon, Presentation};

    #[test]
    fn no_faces() {
        let k = TwoComplex::from_graph(crate::graph::cycle_graph(3, None)).unwrap();
        let s = two_dimensional_part(&k);
        assert_eq!(s.k2.vertex_count(), 0);
        assert_eq!(s.k1.edge_count(), 3);
        assert!(s.shared.is_empty());
    }

    #[test]
    fn k_plus_is_all_two_dimensional() {
        let k = presentation_complex(&h_epsilon(1)).unwrap();
        let s = two_dimensional_part(&k);
        assert_eq!((s.k2.vertex_count(), s.k2.edge_count(), s.k2.face_count()), (1, 3, 2));
        assert_eq!((s.k1.vertex_count(), s.k1.edge_count()), (1, 0));
    }

    #[test]
    fn torus_wedge_loop() {
        let p = Presentation::from_strs(&["a", "b", "e"], &["a b a- b-"]).unwrap();
        let s = two_dimensional_part(&presentation_complex(&p).unwrap());
        assert_eq!((s.k2.edge_count(), s.k2.face_count()), (2, 1));
        assert_eq!(s.k1.edge_count(), 1);
        assert_eq!(s.shared, vec![0]);
        assert_eq!(s.k1.label(0).unwrap().symbol, "e");
    }
}
