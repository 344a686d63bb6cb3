use crate::graph::DartId;

use super::complex::TwoComplex;
use super::ComplexError;

/// Where a triangle of a fan triangulation came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleOrigin {
    pub parent_face: usize,
    /// Position of the triangle in the fan, from 0.
    pub fan_index: usize,
    /// Diagonals (as darts leaving the apex) on the triangle's boundary.
    pub diagonals: Vec<DartId>,
}

/// A complex all of whose faces are triangles, with provenance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    pub complex: TwoComplex,
    pub provenance: Vec<TriangleOrigin>,
}

impl Triangulation {
    pub fn triangle_count(&self) -> usize {
        self.complex.face_count()
    }

    /// Every face has length 3 and every triangle has a provenance entry.
    pub fn is_valid(&self) -> bool {
        self.complex.faces().iter().all(|f| f.len() == 3) && self.provenance.len() == self.complex.face_count()
    }
}

/// Subdivides every `n`-gon into `n − 2` triangles by `n − 3` diagonals
/// from the origin of its first dart.
///
/// Diagonal `k` of face `f` is the edge `f<f>d<k>`; when the skeleton is
/// labeled, it carries the symbol of the same name. Original darts keep
/// their ids.
pub fn fan_triangulate(k: &TwoComplex) -> Result<Triangulation, ComplexError> {
    let mut g = k.skeleton().clone();
    let labeled = g.has_labels();
    let mut faces = Vec::new();
    let mut names = Vec::new();
    let mut provenance = Vec::new();
    for (fi, walk) in k.faces().iter().enumerate() {
        let n = walk.len();
        if n < 3 {
            return Err(ComplexError::CellBelowTriangle { face: fi, length: n });
        }
        let apex = g.origin(walk[0]);
        // delta[j] runs from the apex to the origin of walk[j], j = 2..n-2
        let mut delta = vec![usize::MAX; n];
        for (j, slot) in delta.iter_mut().enumerate().take(n - 1).skip(2) {
            let name = format!("{}d{j}", k.face_name(fi));
            let to = g.origin(walk[j]);
            let symbol = labeled.then_some(name.as_str());
            *slot = g.add_edge(&name, apex, to, symbol).0;
        }
        let mut push = |tri: Vec<DartId>, idx: usize, diagonals: Vec<DartId>| {
            faces.push(tri);
            names.push(format!("{}t{idx}", k.face_name(fi)));
            provenance.push(TriangleOrigin { parent_face: fi, fan_index: idx, diagonals });
        };
        if n == 3 {
            push(walk.clone(), 0, Vec::new());
            continue;
        }
        push(vec![walk[0], walk[1], g.reverse(delta[2])], 0, vec![delta[2]]);
        for j in 2..n - 2 {
            push(vec![delta[j], walk[j], g.reverse(delta[j + 1])], j - 1, vec![delta[j], delta[j + 1]]);
        }
        push(vec![delta[n - 2], walk[n - 2], walk[n - 1]], n - 3, vec![delta[n - 2]]);
    }
    let complex = TwoComplex::with_names(g, faces, names)?;
    Ok(Triangulation { complex, provenance })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex2::{cell_cost, presentation_complex};
    use crate::fpgroups::{h_epsilon, torus, Presentation};

    #[test]
    fn triangle_unchanged() {
        let p = Presentation::from_strs(&["a", "b", "c"], &["a b c"]).unwrap();
        let k = presentation_complex(&p).unwrap();
        let t = fan_triangulate(&k).unwrap();
        assert_eq!(t.complex.faces(), k.faces());
        assert_eq!(t.complex.edge_count(), 3);
    }

    #[test]
    fn k_epsilon_gives_five_triangles() {
        for eps in [1, -1] {
            let k = presentation_complex(&h_epsilon(eps)).unwrap();
            let t = fan_triangulate(&k).unwrap();
            assert_eq!(t.triangle_count(), 5);
            assert!(t.is_valid());
            assert_eq!(t.complex.edge_count(), 3 + 1 + 2);
            assert_eq!(cell_cost(&t.complex).unwrap(), cell_cost(&k).unwrap());
            assert_eq!(t.complex.euler_characteristic(), k.euler_characteristic());
        }
    }

    #[test]
    fn torus_gives_two_triangles() {
        let t = fan_triangulate(&presentation_complex(&torus()).unwrap()).unwrap();
        assert_eq!(t.triangle_count(), 2);
        assert_eq!(t.provenance[1].diagonals.len(), 1);
    }
}
