use crate::fpgroups::{Presentation, Word};
use crate::graph::{DartId, MultiGraph, Sign, VertexId};

use super::ComplexError;

/// A combinatorial 2-complex: a graph with 2-cells attached along closed
/// dart walks.
///
/// Face walks are stored in their lexicographically least rotation, so two
/// faces with the same boundary compare equal.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TwoComplex {
    skeleton: MultiGraph,
    faces: Vec<Vec<DartId>>,
    face_names: Vec<String>,
}

/// Lexicographically least rotation of a dart sequence.
pub fn least_dart_rotation(w: &[DartId]) -> Vec<DartId> {
    (0..w.len().max(1))
        .map(|r| w.iter().cycle().skip(r).take(w.len()).copied().collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

/// True when the cyclic sequence is `u^k` for some `k ≥ 2`.
pub fn is_proper_power(w: &[DartId]) -> bool {
    let n = w.len();
    (1..n).any(|p| n.is_multiple_of(p) && (0..n).all(|i| w[i] == w[(i + p) % n]))
}

impl TwoComplex {
    /// Builds a complex, checking that every face is a nonempty closed walk.
    /// Faces are named `f0, f1, ...`.
    pub fn new(skeleton: MultiGraph, faces: Vec<Vec<DartId>>) -> Result<Self, ComplexError> {
        let names = (0..faces.len()).map(|i| format!("f{i}")).collect();
        Self::with_names(skeleton, faces, names)
    }

    pub fn with_names(
        skeleton: MultiGraph,
        faces: Vec<Vec<DartId>>,
        face_names: Vec<String>,
    ) -> Result<Self, ComplexError> {
        if let Some(v) = skeleton.validate().first() {
            return Err(ComplexError::InvalidSkeleton(v.to_string()));
        }
        assert_eq!(faces.len(), face_names.len(), "one name per face");
        let mut canonical = Vec::with_capacity(faces.len());
        for (i, f) in faces.into_iter().enumerate() {
            if f.is_empty() {
                return Err(ComplexError::EmptyFace(i));
            }
            if f.iter().any(|&d| d >= skeleton.dart_count()) {
                return Err(ComplexError::DartOutOfRange(i));
            }
            for k in 0..f.len() {
                let next = f[(k + 1) % f.len()];
                if skeleton.origin(next) != skeleton.terminus(f[k]) {
                    return Err(ComplexError::OpenWalk(i));
                }
            }
            canonical.push(least_dart_rotation(&f));
        }
        Ok(TwoComplex { skeleton, faces: canonical, face_names })
    }

    /// A complex with no faces.
    pub fn from_graph(skeleton: MultiGraph) -> Result<Self, ComplexError> {
        Self::new(skeleton, Vec::new())
    }

    pub fn skeleton(&self) -> &MultiGraph {
        &self.skeleton
    }

    pub fn faces(&self) -> &[Vec<DartId>] {
        &self.faces
    }

    pub fn face(&self, f: usize) -> &[DartId] {
        &self.faces[f]
    }

    pub fn face_name(&self, f: usize) -> &str {
        &self.face_names[f]
    }

    pub fn face_by_name(&self, name: &str) -> Option<usize> {
        self.face_names.iter().position(|n| n == name)
    }

    pub fn vertex_count(&self) -> usize {
        self.skeleton.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.skeleton.edge_count()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn face_lengths(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    pub fn is_connected(&self) -> bool {
        self.skeleton.is_connected()
    }

    /// Index of the face with exactly this boundary, up to rotation.
    pub fn find_face(&self, walk: &[DartId]) -> Option<usize> {
        let c = least_dart_rotation(walk);
        self.faces.iter().position(|f| *f == c)
    }

    /// Renames vertices `v0, ...`, edges `e0, ...` and faces `f0, ...`.
    pub fn normalize_names(&mut self) {
        self.skeleton.normalize_names();
        for (i, n) in self.face_names.iter_mut().enumerate() {
            *n = format!("f{i}");
        }
    }

    /// Disjoint union; ids of `other` are shifted by the current counts.
    pub fn append(&mut self, other: &TwoComplex) {
        let doff = self.skeleton.dart_count();
        self.skeleton.append(&other.skeleton);
        for (f, name) in other.faces.iter().zip(&other.face_names) {
            self.faces.push(f.iter().map(|&d| d + doff).collect());
            self.face_names.push(name.clone());
        }
    }

    /// Identifies vertices according to `class_of`; darts and faces keep
    /// their ids.
    pub fn quotient_vertices(&self, class_of: &[usize]) -> TwoComplex {
        TwoComplex {
            skeleton: self.skeleton.quotient_vertices(class_of),
            faces: self.faces.clone(),
            face_names: self.face_names.clone(),
        }
    }

    /// Subcomplex induced by a vertex set closed under adjacency, with the
    /// old ids of its vertices, darts and faces.
    pub fn induced(&self, keep: &[bool]) -> (TwoComplex, Vec<VertexId>, Vec<DartId>, Vec<usize>) {
        let (sub, vs, ds) = self.skeleton.induced(keep);
        let mut new_dart = vec![usize::MAX; self.skeleton.dart_count()];
        for (new, &old) in ds.iter().enumerate() {
            new_dart[old] = new;
        }
        let mut faces = Vec::new();
        let mut names = Vec::new();
        let mut old_faces = Vec::new();
        for (i, f) in self.faces.iter().enumerate() {
            if keep[self.skeleton.origin(f[0])] {
                faces.push(f.iter().map(|&d| new_dart[d]).collect());
                names.push(self.face_names[i].clone());
                old_faces.push(i);
            }
        }
        let c = TwoComplex::with_names(sub, faces, names).expect("induced faces stay closed");
        (c, vs, ds, old_faces)
    }

    /// The component of `v`.
    pub fn component_of(&self, v: VertexId) -> (TwoComplex, Vec<VertexId>, Vec<DartId>, Vec<usize>) {
        let comp = self.skeleton.components();
        let keep: Vec<bool> = comp.iter().map(|&c| c == comp[v]).collect();
        self.induced(&keep)
    }

    /// Word read along a walk using dart labels; `None` if some dart is
    /// unlabeled or its symbol is not a generator.
    pub fn spell(&self, walk: &[DartId], generators: &[String]) -> Option<Word> {
        walk.iter()
            .map(|&d| {
                let l = self.skeleton.label(d)?;
                let g = generators.iter().position(|s| *s == l.symbol)?;
                Some(crate::fpgroups::Letter::new(g, l.sign == Sign::Minus))
            })
            .collect()
    }
}

/// The one-vertex complex of a presentation: an edge `e<k>` labeled by
/// generator `k`, and one face per relator spelling it.
pub fn presentation_complex(p: &Presentation) -> Result<TwoComplex, ComplexError> {
    let mut g = MultiGraph::new();
    g.add_vertex("v0", None);
    let mut darts = Vec::new();
    for (k, name) in p.generators().iter().enumerate() {
        darts.push(g.add_edge(&format!("e{k}"), 0, 0, Some(name)));
    }
    let mut faces = Vec::new();
    for (i, r) in p.relators().iter().enumerate() {
        if r.is_empty() {
            return Err(ComplexError::EmptyRelator(i));
        }
        faces.push(r.iter().map(|l| if l.inverse { darts[l.gen].1 } else { darts[l.gen].0 }).collect());
    }
    TwoComplex::new(g, faces)
}

/// `Σ (nᵢ − 2)` over faces.
pub fn cell_cost(k: &TwoComplex) -> Result<usize, ComplexError> {
    let mut total = 0;
    for (i, f) in k.faces().iter().enumerate() {
        if f.len() < 3 {
            return Err(ComplexError::CellBelowTriangle { face: i, length: f.len() });
        }
        total += f.len() - 2;
    }
    Ok(total)
}
