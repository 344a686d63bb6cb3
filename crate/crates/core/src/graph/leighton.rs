use std::collections::BTreeMap;

use num_integer::Integer;

use super::covering::GraphCovering;
use super::multigraph::{DartId, MultiGraph, Sign, VertexId};
use super::refinement::{degree_refinement, have_common_cover, DartType, DegreeRefinement};
use super::GraphError;

/// A finite common covering `a ← cover → b`.
#[derive(Clone, Debug)]
pub struct CommonCover {
    pub cover: MultiGraph,
    pub to_a: GraphCovering,
    pub to_b: GraphCovering,
}

impl CommonCover {
    pub fn size(&self) -> (usize, usize) {
        (self.cover.vertex_count(), self.cover.edge_count())
    }

    /// Restricts both legs to the component of `v`.
    pub fn component(&self, v: VertexId) -> CommonCover {
        let to_a = self.to_a.restrict_to_component(v);
        let to_b = self.to_b.restrict_to_component(v);
        CommonCover { cover: to_a.source.clone(), to_a, to_b }
    }
}

/// Darts of each type at every vertex, in dart-id order.
fn typed_stars(g: &MultiGraph, r: &DegreeRefinement) -> Vec<BTreeMap<DartType, Vec<DartId>>> {
    (0..g.vertex_count())
        .map(|v| {
            let mut m: BTreeMap<DartType, Vec<DartId>> = BTreeMap::new();
            for &d in g.star(v) {
                m.entry((g.label(d).cloned(), r.class_of(g.terminus(d)))).or_default().push(d);
            }
            m
        })
        .collect()
}

/// Builds a finite common covering of two connected graphs with the same
/// degree refinement.
///
/// Vertices of the cover over class `i` are tuples `(a, b, copy, shift)`
/// with `a`, `b` class-`i` vertices of the inputs. At such a vertex the
/// darts of each type at `a` are matched to those at `b` by the cyclic shift
/// `shift mod m`, where `m` is that type's multiplicity. `shift` runs over
/// the lcm of the multiplicities in class `i`, so every pair of same-type
/// darts is matched equally often, and the number of copies is chosen so
/// that these counts agree across each edge. The darts lying over
/// `(d_a, d_b)` are then paired with those over `(rev d_a, rev d_b)`.
///
/// Colours and labels of the inputs are carried by the refinement, so both
/// projections preserve them. Identical inputs short-circuit to the identity.
pub fn leighton_common_cover(a: &MultiGraph, b: &MultiGraph) -> Result<CommonCover, GraphError> {
    if !have_common_cover(a, b)? {
        return Err(GraphError::NoCommonCover);
    }
    if a == b {
        return Ok(CommonCover {
            cover: a.clone(),
            to_a: GraphCovering::identity(a),
            to_b: GraphCovering::identity(b),
        });
    }
    let ra = degree_refinement(a)?;
    let rb = degree_refinement(b)?;
    let sa = typed_stars(a, &ra);
    let sb = typed_stars(b, &rb);
    let s = ra.class_count();

    // lcm of type multiplicities per class
    let shifts: Vec<usize> = (0..s).map(|i| ra.typed_row(i).iter().fold(1usize, |acc, (_, m)| acc.lcm(m))).collect();
    let sizes = ra.class_sizes();
    let l = (0..s).fold(1usize, |acc, i| acc.lcm(&(sizes[i] * shifts[i])));
    let copies: Vec<usize> = (0..s).map(|i| l / (sizes[i] * shifts[i])).collect();

    let mut cover = MultiGraph::new();
    // (origin in cover, dart of a, dart of b) per cover dart, before pairing
    let mut pending: BTreeMap<(DartId, DartId), Vec<VertexId>> = BTreeMap::new();
    let mut vmap_a = Vec::new();
    let mut vmap_b = Vec::new();
    for va in 0..a.vertex_count() {
        let i = ra.class_of(va);
        for vb in (0..b.vertex_count()).filter(|&vb| rb.class_of(vb) == i) {
            for copy in 0..copies[i] {
                for shift in 0..shifts[i] {
                    let name = format!("{}.{}.{copy}.{shift}", a.vertex_name(va), b.vertex_name(vb));
                    let x = cover.add_vertex(name, a.color(va).map(str::to_owned));
                    vmap_a.push(va);
                    vmap_b.push(vb);
                    for (ty, darts_a) in &sa[va] {
                        let darts_b = &sb[vb][ty];
                        let m = darts_a.len();
                        for (p, &da) in darts_a.iter().enumerate() {
                            let db = darts_b[(p + shift) % m];
                            pending.entry((da, db)).or_default().push(x);
                        }
                    }
                }
            }
        }
    }

    let mut dmap_a = Vec::new();
    let mut dmap_b = Vec::new();
    let mut edge = 0usize;
    for (&(da, db), here) in &pending {
        let (ra_d, rb_d) = (a.reverse(da), b.reverse(db));
        if (da, db) > (ra_d, rb_d) {
            continue;
        }
        let there = &pending[&(ra_d, rb_d)];
        debug_assert_eq!(here.len(), there.len());
        for (&x, &y) in here.iter().zip(there) {
            // orient each edge so the positive dart comes first
            let flip = matches!(a.label(da), Some(l) if l.sign == Sign::Minus);
            let (from, to, fa, fb, ta, tb) = if flip { (y, x, ra_d, rb_d, da, db) } else { (x, y, da, db, ra_d, rb_d) };
            let sym = a.label(fa).map(|l| l.symbol.clone());
            cover.add_edge(&format!("e{edge}"), from, to, sym.as_deref());
            edge += 1;
            dmap_a.extend([fa, ta]);
            dmap_b.extend([fb, tb]);
        }
    }

    let to_a = GraphCovering::new(cover.clone(), a.clone(), vmap_a, dmap_a);
    let to_b = GraphCovering::new(cover.clone(), b.clone(), vmap_b, dmap_b);
    Ok(CommonCover { cover, to_a, to_b })
}
