use std::collections::HashMap;
use std::fmt;

use crate::graph::{verify_maps, CoverViolation, DartId, GraphCovering, VertexId};

use super::complex::{is_proper_power, least_dart_rotation, TwoComplex};
use super::ComplexError;

/// A candidate covering map of 2-complexes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexCovering {
    pub source: TwoComplex,
    pub target: TwoComplex,
    pub vmap: Vec<VertexId>,
    pub dmap: Vec<DartId>,
    pub fmap: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComplexViolation {
    Graph(CoverViolation),
    FaceMapSize,
    FaceOutOfRange { face: usize },
    BoundaryMismatch { face: usize },
    LiftNotClosed { target_face: usize, start: DartId },
    LiftCount { target_face: usize, start: DartId, count: usize },
    DuplicateFace { face: usize },
}

impl fmt::Display for ComplexViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ComplexViolation::*;
        match self {
            Graph(v) => write!(f, "{v}"),
            FaceMapSize => write!(f, "face map does not cover every source face"),
            FaceOutOfRange { face } => write!(f, "face {face} maps outside the target"),
            BoundaryMismatch { face } => {
                write!(f, "boundary of face {face} does not map onto the boundary of its image")
            }
            LiftNotClosed { target_face, start } => {
                write!(f, "lift of face {target_face} from dart {start} is not closed")
            }
            LiftCount { target_face, start, count } => {
                write!(f, "lift of face {target_face} from dart {start} bounds {count} source faces, expected 1")
            }
            DuplicateFace { face } => write!(f, "face {face} duplicates another face over the same target face"),
        }
    }
}

/// Outcome of [`ComplexCovering::verify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexVerdict {
    pub violations: Vec<ComplexViolation>,
    pub degree: Option<usize>,
}

impl ComplexVerdict {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl ComplexCovering {
    pub fn identity(k: &TwoComplex) -> Self {
        ComplexCovering {
            source: k.clone(),
            target: k.clone(),
            vmap: (0..k.vertex_count()).collect(),
            dmap: (0..k.skeleton().dart_count()).collect(),
            fmap: (0..k.face_count()).collect(),
        }
    }

    pub fn graph_part(&self) -> GraphCovering {
        GraphCovering::new(
            self.source.skeleton().clone(),
            self.target.skeleton().clone(),
            self.vmap.clone(),
            self.dmap.clone(),
        )
    }

    /// Checks the skeleton covering, that faces map onto faces, and that
    /// every lift of every target face bounds exactly one source face.
    ///
    /// Fails when a target face is attached along a proper power.
    pub fn verify(&self) -> Result<ComplexVerdict, ComplexError> {
        for (i, f) in self.target.faces().iter().enumerate() {
            if is_proper_power(f) {
                return Err(ComplexError::UnsupportedAttachingMap(i));
            }
        }
        let (src, tgt) = (self.source.skeleton(), self.target.skeleton());
        let graph = verify_maps(src, tgt, &self.vmap, &self.dmap);
        let mut violations: Vec<ComplexViolation> =
            graph.violations.iter().cloned().map(ComplexViolation::Graph).collect();
        if !violations.is_empty() {
            return Ok(ComplexVerdict { violations, degree: None });
        }
        if self.fmap.len() != self.source.face_count() {
            violations.push(ComplexViolation::FaceMapSize);
            return Ok(ComplexVerdict { violations, degree: None });
        }
        let mut by_boundary: HashMap<&[DartId], Vec<usize>> = HashMap::new();
        for (i, f) in self.source.faces().iter().enumerate() {
            let g = self.fmap[i];
            if g >= self.target.face_count() {
                violations.push(ComplexViolation::FaceOutOfRange { face: i });
                continue;
            }
            let image: Vec<DartId> = f.iter().map(|&d| self.dmap[d]).collect();
            if least_dart_rotation(&image) != self.target.face(g) {
                violations.push(ComplexViolation::BoundaryMismatch { face: i });
            }
            let entry = by_boundary.entry(f.as_slice()).or_default();
            if entry.iter().any(|&e| self.fmap[e] == g) {
                violations.push(ComplexViolation::DuplicateFace { face: i });
            }
            entry.push(i);
        }
        // lifts: from each preimage of the first dart, follow the unique
        // darts over the rest of the walk
        let mut over: HashMap<(VertexId, DartId), DartId> = HashMap::new();
        for d in 0..src.dart_count() {
            over.insert((src.origin(d), self.dmap[d]), d);
        }
        for (g, walk) in self.target.faces().iter().enumerate() {
            for start in (0..src.dart_count()).filter(|&d| self.dmap[d] == walk[0]) {
                let mut lift = vec![start];
                let mut closed = true;
                for &t in &walk[1..] {
                    let at = src.terminus(*lift.last().unwrap());
                    match over.get(&(at, t)) {
                        Some(&d) => lift.push(d),
                        None => {
                            closed = false;
                            break;
                        }
                    }
                }
                if !closed || src.terminus(*lift.last().unwrap()) != src.origin(start) {
                    violations.push(ComplexViolation::LiftNotClosed { target_face: g, start });
                    continue;
                }
                let key = least_dart_rotation(&lift);
                let count =
                    by_boundary.get(key.as_slice()).map_or(0, |fs| fs.iter().filter(|&&f| self.fmap[f] == g).count());
                if count != 1 {
                    violations.push(ComplexViolation::LiftCount { target_face: g, start, count });
                }
            }
        }
        let degree = if violations.is_empty() { graph.degree } else { None };
        Ok(ComplexVerdict { violations, degree })
    }

    /// Restricts the covering to the component of `v` in the source.
    pub fn restrict_to_component(&self, v: VertexId) -> ComplexCovering {
        let (sub, vs, ds, fs) = self.source.component_of(v);
        ComplexCovering {
            vmap: vs.iter().map(|&o| self.vmap[o]).collect(),
            dmap: ds.iter().map(|&o| self.dmap[o]).collect(),
            fmap: fs.iter().map(|&o| self.fmap[o]).collect(),
            source: sub,
            target: self.target.clone(),
        }
    }

    /// Number of source vertices over each target vertex.
    pub fn fibre_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.target.vertex_count()];
        for &t in &self.vmap {
            sizes[t] += 1;
        }
        sizes
    }
}
