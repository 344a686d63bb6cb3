use crate::graph::VertexId;

use super::complex::TwoComplex;
use super::covering::ComplexCovering;
use super::ComplexError;

/// A common finite cover `K ← M → L` given as two coverings with the same
/// source.
#[derive(Clone, Debug)]
pub struct CoverPair {
    pub to_k: ComplexCovering,
    pub to_l: ComplexCovering,
}

/// The data of the gluing construction.
///
/// `K` is `K′ ⊔ K″` with `v′ ~ v″`, and `L` is `L′ ⊔ L″` with `w′ⱼ ~ w″ⱼ`.
/// The first pair covers `K′` and `L′`, the second `K″` and `L″`.
#[derive(Clone, Debug)]
pub struct GluingInput {
    pub first: CoverPair,
    pub second: CoverPair,
    pub v_first: VertexId,
    pub v_second: VertexId,
    pub w_first: Vec<VertexId>,
    pub w_second: Vec<VertexId>,
}

/// Result of [`glue_covers`].
#[derive(Clone, Debug)]
pub struct GluedCover {
    pub k: TwoComplex,
    pub l: TwoComplex,
    /// The whole glued complex before taking a component.
    pub full_to_k: ComplexCovering,
    pub full_to_l: ComplexCovering,
    /// The component of vertex 0 and its coverings.
    pub x: TwoComplex,
    pub to_k: ComplexCovering,
    pub to_l: ComplexCovering,
    /// Degrees `k′`, `k″` of the coverings of `K′`, `K″`.
    pub k_first: usize,
    pub k_second: usize,
    pub q: usize,
    /// Number of identified preimages of each `wⱼ`, `k′k″/q`.
    pub identified_per_w: usize,
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut c = x;
    while parent[c] != r {
        let n = parent[c];
        parent[c] = r;
        c = n;
    }
    r
}

/// Glues a complex from two disjoint pieces by identifying listed vertex
/// pairs; returns it with the vertex class of every piece vertex.
fn glue_pair(a: &TwoComplex, b: &TwoComplex, pairs: &[(VertexId, VertexId)]) -> (TwoComplex, Vec<usize>) {
    let mut u = a.clone();
    u.append(b);
    let off = a.vertex_count();
    let classes = identify(u.vertex_count(), pairs.iter().map(|&(x, y)| (x, y + off)));
    let mut glued = u.quotient_vertices(&classes);
    glued.normalize_names();
    (glued, classes)
}

/// Classes of the finest equivalence containing `pairs`, numbered by least
/// member.
fn identify(n: usize, pairs: impl Iterator<Item = (usize, usize)>) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    for (x, y) in pairs {
        let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
        if rx != ry {
            parent[rx.max(ry)] = rx.min(ry);
        }
    }
    let mut number = vec![usize::MAX; n];
    let mut next = 0;
    let mut classes = vec![0; n];
    for v in 0..n {
        let r = find(&mut parent, v);
        if number[r] == usize::MAX {
            number[r] = next;
            next += 1;
        }
        classes[v] = number[r];
    }
    classes
}

fn preimages(c: &ComplexCovering, targets: &[VertexId]) -> Vec<VertexId> {
    (0..c.vmap.len()).filter(|&x| targets.contains(&c.vmap[x])).collect()
}

fn checked_degree(c: &ComplexCovering, what: &str) -> Result<usize, ComplexError> {
    let v = c.verify()?;
    match v.degree {
        Some(d) if v.is_valid() => Ok(d),
        _ => Err(ComplexError::InvalidCovering(format!(
            "{what}: {}",
            v.violations.first().map_or("no degree".to_owned(), |x| x.to_string())
        ))),
    }
}

/// Builds a common finite cover of `K = K′ ∪ K″` and `L = L′ ∪ L″` from
/// common covers of the pieces that agree over the intersections.
///
/// Takes `k″` copies of `M′` and `k′` copies of `M″` and, for each `j`,
/// identifies the `k′k″/q` preimages of `wⱼ` on either side; the `i`-th
/// preimage on the first side is matched with the `(i + j)`-th on the
/// second.
pub fn glue_covers(input: &GluingInput) -> Result<GluedCover, ComplexError> {
    let (m1, m2) = (&input.first, &input.second);
    if m1.to_k.source != m1.to_l.source || m2.to_k.source != m2.to_l.source {
        return Err(ComplexError::InvalidCovering("the two legs of a pair must share a source".into()));
    }
    let q = input.w_first.len();
    if q == 0 || q != input.w_second.len() {
        return Err(ComplexError::Inconsistent {
            what: "number of intersection vertices".into(),
            left: q,
            right: input.w_second.len(),
        });
    }
    let k1 = checked_degree(&m1.to_k, "first cover of K′")?;
    let l1 = checked_degree(&m1.to_l, "first cover of L′")?;
    let k2 = checked_degree(&m2.to_k, "second cover of K″")?;
    let l2 = checked_degree(&m2.to_l, "second cover of L″")?;
    for (k, name) in [(k1, "k′"), (k2, "k″")] {
        if k % q != 0 {
            return Err(ComplexError::Indivisible { what: name.into(), degree: k, q });
        }
    }

    // consistency on the intersections
    for (pair, v, ws, label) in
        [(m1, input.v_first, &input.w_first, "first"), (m2, input.v_second, &input.w_second, "second")]
    {
        let over_v = preimages(&pair.to_k, &[v]);
        let over_w = preimages(&pair.to_l, ws);
        if over_v != over_w {
            return Err(ComplexError::Inconsistent {
                what: format!("{label} pair: preimages of v vs preimages of the w's"),
                left: over_v.len(),
                right: over_w.len(),
            });
        }
    }
    if l1 * q != k1 || l2 * q != k2 {
        return Err(ComplexError::Inconsistent {
            what: "degree over L times q vs degree over K".into(),
            left: l1 * q,
            right: k1,
        });
    }

    let (k, k_class) = glue_pair(&m1.to_k.target, &m2.to_k.target, &[(input.v_first, input.v_second)]);
    let l_pairs: Vec<_> = input.w_first.iter().copied().zip(input.w_second.iter().copied()).collect();
    let (l, l_class) = glue_pair(&m1.to_l.target, &m2.to_l.target, &l_pairs);

    // k″ copies of M′ then k′ copies of M″
    let mp = &m1.to_k.source;
    let mpp = &m2.to_k.source;
    let mut union = TwoComplex::default();
    let mut copies: Vec<(bool, usize, usize, usize)> = Vec::new(); // (second?, vertex off, dart off, face off)
    for (second, count, piece) in [(false, k2, mp), (true, k1, mpp)] {
        for _ in 0..count {
            copies.push((second, union.vertex_count(), union.skeleton().dart_count(), union.face_count()));
            union.append(piece);
        }
    }
    let per_w = k1 * k2 / q;
    let mut pairs = Vec::new();
    for j in 0..q {
        let side = |second: bool, w: VertexId| -> Vec<usize> {
            let (piece_l, piece) = if second { (&m2.to_l, mpp) } else { (&m1.to_l, mp) };
            let local: Vec<usize> = (0..piece.vertex_count()).filter(|&x| piece_l.vmap[x] == w).collect();
            copies.iter().filter(|c| c.0 == second).flat_map(|c| local.iter().map(move |&x| x + c.1)).collect()
        };
        let a = side(false, input.w_first[j]);
        let b = side(true, input.w_second[j]);
        if a.len() != per_w || b.len() != per_w {
            return Err(ComplexError::Inconsistent {
                what: format!("preimages of w{j}"),
                left: a.len(),
                right: b.len(),
            });
        }
        for i in 0..per_w {
            pairs.push((a[i], b[(i + j) % per_w]));
        }
    }
    let classes = identify(union.vertex_count(), pairs.into_iter());
    let mut full = union.quotient_vertices(&classes);
    full.normalize_names();

    // maps from the union to K and L, via the pieces
    let k_off = m1.to_k.target.vertex_count();
    let kd_off = m1.to_k.target.skeleton().dart_count();
    let kf_off = m1.to_k.target.face_count();
    let l_off = m1.to_l.target.vertex_count();
    let ld_off = m1.to_l.target.skeleton().dart_count();
    let lf_off = m1.to_l.target.face_count();
    let (mut kv, mut kd, mut kf) = (vec![0; full.vertex_count()], Vec::new(), Vec::new());
    let (mut lv, mut ld, mut lf) = (vec![0; full.vertex_count()], Vec::new(), Vec::new());
    for &(second, voff, _, _) in &copies {
        let (ck, cl) = if second { (&m2.to_k, &m2.to_l) } else { (&m1.to_k, &m1.to_l) };
        let (ko, kdo, kfo, lo, ldo, lfo) =
            if second { (k_off, kd_off, kf_off, l_off, ld_off, lf_off) } else { (0, 0, 0, 0, 0, 0) };
        for x in 0..ck.source.vertex_count() {
            kv[classes[voff + x]] = k_class[ck.vmap[x] + ko];
            lv[classes[voff + x]] = l_class[cl.vmap[x] + lo];
        }
        kd.extend(ck.dmap.iter().map(|&d| d + kdo));
        ld.extend(cl.dmap.iter().map(|&d| d + ldo));
        kf.extend(ck.fmap.iter().map(|&f| f + kfo));
        lf.extend(cl.fmap.iter().map(|&f| f + lfo));
    }
    let full_to_k = ComplexCovering { source: full.clone(), target: k.clone(), vmap: kv, dmap: kd, fmap: kf };
    let full_to_l = ComplexCovering { source: full.clone(), target: l.clone(), vmap: lv, dmap: ld, fmap: lf };
    let to_k = full_to_k.restrict_to_component(0);
    let to_l = full_to_l.restrict_to_component(0);
    let x = to_k.source.clone();
    Ok(GluedCover { k, l, full_to_k, full_to_l, x, to_k, to_l, k_first: k1, k_second: k2, q, identified_per_w: per_w })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{bouquet, cycle_graph, MultiGraph};

    fn complex(g: MultiGraph) -> TwoComplex {
        TwoComplex::from_graph(g).unwrap()
    }

    /// The 2-cycle covering the one-loop graph and itself.
    fn two_cycle_pair() -> CoverPair {
        let m = complex(cycle_graph(2, None));
        let loop1 = complex(bouquet(1));
        // darts 0,2 are forward along the cycle; map both onto the loop's forward dart
        let to_k = ComplexCovering {
            source: m.clone(),
            target: loop1,
            vmap: vec![0, 0],
            dmap: vec![0, 1, 0, 1],
            fmap: vec![],
        };
        CoverPair { to_k, to_l: ComplexCovering::identity(&m) }
    }

    fn figure_eight_input() -> GluingInput {
        GluingInput {
            first: two_cycle_pair(),
            second: two_cycle_pair(),
            v_first: 0,
            v_second: 0,
            w_first: vec![0, 1],
            w_second: vec![0, 1],
        }
    }

    #[test]
    fn figure_eight_example() {
        let g = glue_covers(&figure_eight_input()).unwrap();
        assert_eq!((g.k.vertex_count(), g.k.edge_count()), (1, 2));
        assert_eq!((g.l.vertex_count(), g.l.edge_count()), (2, 4));
        assert_eq!(g.x.vertex_count(), 4);
        assert!(g.x.is_connected());
        for v in 0..4 {
            assert_eq!(g.x.skeleton().degree(v), 4);
        }
        let vk = g.to_k.verify().unwrap();
        let vl = g.to_l.verify().unwrap();
        assert!(vk.is_valid() && vl.is_valid());
        assert_eq!(vk.degree, Some(4));
        assert_eq!(vl.degree, Some(2));
        assert_eq!(g.identified_per_w, 2);
    }

    #[test]
    fn degenerate_gluing() {
        let k1 = complex(bouquet(1));
        let k2 = complex(bouquet(1));
        let input = GluingInput {
            first: CoverPair { to_k: ComplexCovering::identity(&k1), to_l: ComplexCovering::identity(&k1) },
            second: CoverPair { to_k: ComplexCovering::identity(&k2), to_l: ComplexCovering::identity(&k2) },
            v_first: 0,
            v_second: 0,
            w_first: vec![0],
            w_second: vec![0],
        };
        let g = glue_covers(&input).unwrap();
        assert_eq!(g.x.vertex_count(), 1);
        assert_eq!(g.x.edge_count(), 2);
        assert_eq!(g.to_k.verify().unwrap().degree, Some(1));
    }

    #[test]
    fn inconsistent_preimages_rejected() {
        let mut input = figure_eight_input();
        input.w_first = vec![0];
        input.w_second = vec![0];
        assert!(matches!(glue_covers(&input), Err(ComplexError::Inconsistent { .. })));
    }
}
