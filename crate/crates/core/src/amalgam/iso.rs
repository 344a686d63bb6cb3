use std::collections::{HashMap, VecDeque};

use super::ball::BallComplex;
use super::AmalgamError;
use crate::complex2::{least_dart_rotation, TwoComplex};
use crate::graph::{refine_from, DartId, MultiGraph, VertexId};

/// A cell isomorphism between two balls, ignoring labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BallIsomorphism {
    pub vmap: Vec<VertexId>,
    pub dmap: Vec<DartId>,
    pub fmap: Vec<usize>,
}

fn distances(g: &MultiGraph, base: VertexId) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.vertex_count()];
    dist[base] = 0;
    let mut q = VecDeque::from([base]);
    while let Some(v) = q.pop_front() {
        for &d in g.star(v) {
            let w = g.terminus(d);
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                q.push_back(w);
            }
        }
    }
    dist
}

/// Per-ball data used to prune the search.
struct Shape<'a> {
    k: &'a TwoComplex,
    /// Dart signature: refined classes of both ends and the sorted lengths
    /// of the faces through the edge.
    sig: Vec<(usize, usize, Vec<usize>)>,
    corners: HashMap<(DartId, DartId), usize>,
    bfs: Vec<VertexId>,
}

fn corner_key(a: DartId, b: DartId) -> (DartId, DartId) {
    (a.min(b), a.max(b))
}

impl<'a> Shape<'a> {
    fn new(k: &'a TwoComplex, base: VertexId, class: &[usize]) -> Self {
        let g = k.skeleton();
        let mut lengths = vec![Vec::new(); g.dart_count()];
        let mut corners = HashMap::new();
        for f in k.faces() {
            for (i, &d) in f.iter().enumerate() {
                lengths[d].push(f.len());
                lengths[g.reverse(d)].push(f.len());
                let next = f[(i + 1) % f.len()];
                *corners.entry(corner_key(g.reverse(d), next)).or_insert(0) += 1;
            }
        }
        let sig = (0..g.dart_count())
            .map(|d| {
                let mut l = std::mem::take(&mut lengths[d]);
                l.sort_unstable();
                (class[g.origin(d)], class[g.terminus(d)], l)
            })
            .collect();
        let dist = distances(g, base);
        let mut bfs: Vec<VertexId> = (0..g.vertex_count()).filter(|&v| dist[v] != usize::MAX).collect();
        bfs.sort_by_key(|&v| dist[v]);
        Shape { k, sig, corners, bfs }
    }

    fn corner(&self, a: DartId, b: DartId) -> usize {
        self.corners.get(&corner_key(a, b)).copied().unwrap_or(0)
    }
}

struct Search<'a> {
    s1: Shape<'a>,
    s2: Shape<'a>,
    order: Vec<DartId>,
    dmap: Vec<Option<DartId>>,
    vmap: Vec<Option<VertexId>>,
    dused: Vec<bool>,
    vused: Vec<bool>,
    faces2: HashMap<Vec<DartId>, usize>,
}

impl Search<'_> {
    fn consistent(&self, d: DartId, e: DartId) -> bool {
        let (g1, g2) = (self.s1.k.skeleton(), self.s2.k.skeleton());
        if self.dused[e] || self.s1.sig[d] != self.s2.sig[e] {
            return false;
        }
        let (t1, t2) = (g1.terminus(d), g2.terminus(e));
        match self.vmap[t1] {
            Some(t) if t != t2 => return false,
            None if self.vused[t2] => return false,
            _ => {}
        }
        let ends = [(d, e), (g1.reverse(d), g2.reverse(e))];
        ends.iter().all(|&(x, y)| {
            g1.star(g1.origin(x)).iter().all(|&o| match self.dmap[o] {
                Some(p) => self.s1.corner(x, o) == self.s2.corner(y, p),
                None => true,
            })
        })
    }

    fn solve(&mut self, i: usize) -> Option<Vec<usize>> {
        let (g1, g2) = (self.s1.k.skeleton(), self.s2.k.skeleton());
        if i == self.order.len() {
            return self.face_map();
        }
        let d = self.order[i];
        if self.dmap[d].is_some() {
            return self.solve(i + 1);
        }
        let v2 = self.vmap[g1.origin(d)].expect("origins are mapped in search order");
        let candidates: Vec<DartId> = g2.star(v2).to_vec();
        for e in candidates {
            if !self.consistent(d, e) {
                continue;
            }
            let (t1, t2) = (g1.terminus(d), g2.terminus(e));
            let new_vertex = self.vmap[t1].is_none();
            let (rd, re) = (g1.reverse(d), g2.reverse(e));
            self.dmap[d] = Some(e);
            self.dmap[rd] = Some(re);
            self.dused[e] = true;
            self.dused[re] = true;
            if new_vertex {
                self.vmap[t1] = Some(t2);
                self.vused[t2] = true;
            }
            if let Some(f) = self.solve(i + 1) {
                return Some(f);
            }
            self.dmap[d] = None;
            self.dmap[rd] = None;
            self.dused[e] = false;
            self.dused[re] = false;
            if new_vertex {
                self.vmap[t1] = None;
                self.vused[t2] = false;
            }
        }
        None
    }

    fn face_map(&self) -> Option<Vec<usize>> {
        let mut used = vec![false; self.s2.k.face_count()];
        let mut fmap = Vec::with_capacity(self.s1.k.face_count());
        for f in self.s1.k.faces() {
            let image: Vec<DartId> = f.iter().map(|&d| self.dmap[d].expect("all darts mapped")).collect();
            let j = *self.faces2.get(&least_dart_rotation(&image))?;
            if std::mem::replace(&mut used[j], true) {
                return None;
            }
            fmap.push(j);
        }
        Some(fmap)
    }
}

/// Both orientations of every face, keyed by least rotation.
fn face_index(k: &TwoComplex) -> HashMap<Vec<DartId>, usize> {
    let g = k.skeleton();
    let mut out = HashMap::new();
    for (i, f) in k.faces().iter().enumerate() {
        out.insert(f.clone(), i);
        let rev: Vec<DartId> = f.iter().rev().map(|&d| g.reverse(d)).collect();
        out.insert(least_dart_rotation(&rev), i);
    }
    out
}

fn unlabelled(g: &MultiGraph) -> (Vec<VertexId>, Vec<DartId>) {
    let origin = (0..g.dart_count()).map(|d| g.origin(d)).collect();
    let reverse = (0..g.dart_count()).map(|d| g.reverse(d)).collect();
    (origin, reverse)
}

/// Searches for a base-preserving isomorphism of the cell structures of two
/// balls, ignoring edge labels and orientations.
pub fn balls_isomorphic<E1, E2>(
    b1: &BallComplex<E1>,
    b2: &BallComplex<E2>,
) -> Result<Option<BallIsomorphism>, AmalgamError> {
    if b1.radius != b2.radius {
        return Err(AmalgamError::RadiusMismatch { left: b1.radius, right: b2.radius });
    }
    let (k1, k2) = (&b1.complex, &b2.complex);
    if (k1.vertex_count(), k1.edge_count(), k1.face_count()) != (k2.vertex_count(), k2.edge_count(), k2.face_count()) {
        return Ok(None);
    }
    let (g1, g2) = (k1.skeleton(), k2.skeleton());

    // refine both balls together, starting from distance to the base
    let (mut origin, mut reverse) = unlabelled(g1);
    let (o2, r2) = unlabelled(g2);
    let (n1, m1) = (g1.vertex_count(), g1.dart_count());
    origin.extend(o2.iter().map(|&v| v + n1));
    reverse.extend(r2.iter().map(|&d| d + m1));
    let union = MultiGraph::from_raw(n1 + g2.vertex_count(), origin, reverse);
    let mut start = distances(g1, b1.base);
    start.extend(distances(g2, b2.base));
    let class = refine_from(&union, start);
    if class[b1.base] != class[n1 + b2.base] {
        return Ok(None);
    }
    let mut by_class = vec![0i64; union.vertex_count()];
    for v in 0..n1 {
        by_class[class[v]] += 1;
    }
    for v in 0..g2.vertex_count() {
        by_class[class[n1 + v]] -= 1;
    }
    if by_class.iter().any(|&c| c != 0) {
        return Ok(None);
    }

    let s1 = Shape::new(k1, b1.base, &class[..n1]);
    let s2 = Shape::new(k2, b2.base, &class[n1..]);
    let order = s1.bfs.iter().flat_map(|&v| g1.star(v).iter().copied()).collect();
    let mut search = Search {
        s1,
        s2,
        order,
        dmap: vec![None; g1.dart_count()],
        vmap: vec![None; n1],
        dused: vec![false; g2.dart_count()],
        vused: vec![false; g2.vertex_count()],
        faces2: face_index(k2),
    };
    search.vmap[b1.base] = Some(b2.base);
    search.vused[b2.base] = true;
    let Some(fmap) = search.solve(0) else { return Ok(None) };
    Ok(Some(BallIsomorphism {
        vmap: search.vmap.into_iter().map(|v| v.expect("balls are connected")).collect(),
        dmap: search.dmap.into_iter().map(|d| d.expect("balls are connected")).collect(),
        fmap,
    }))
}
