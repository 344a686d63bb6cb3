#![allow(dead_code)]

use std::collections::BTreeMap;

use covkit::complex2::{classify_small_complex, Classification};
use covkit::complex2::{ComplexCovering, CoverPair, GluingInput, TwoComplex};
use covkit::fpgroups::{abelian_invariants, AbelianInvariants, Letter, Presentation, Word};
use covkit::graph::{bouquet, complete_bipartite_graph, complete_graph, cycle_graph, GraphCovering, MultiGraph};
use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

// ---------- graphs ----------

/// Connected graph on `n` vertices: a random tree plus `extra` random edges,
/// loops and multi-edges allowed.
pub fn random_connected_graph(r: &mut impl Rng, n: usize, extra: usize, colours: bool) -> MultiGraph {
    let mut g = MultiGraph::new();
    for v in 0..n {
        let c = colours.then(|| if r.gen_bool(0.5) { "red" } else { "blue" }.to_owned());
        g.add_vertex(format!("v{v}"), c);
    }
    let mut k = 0;
    for v in 1..n {
        let u = r.gen_range(0..v);
        g.add_edge(&format!("e{k}"), u, v, None);
        k += 1;
    }
    for _ in 0..extra {
        let (u, v) = (r.gen_range(0..n), r.gen_range(0..n));
        g.add_edge(&format!("e{k}"), u, v, None);
        k += 1;
    }
    g
}

/// The component of vertex 0 in a random `degree`-sheeted cover of `g`,
/// with its projection.
pub fn random_covering(r: &mut impl Rng, g: &MultiGraph, degree: usize) -> GraphCovering {
    let mut c = MultiGraph::new();
    for v in 0..g.vertex_count() {
        for i in 0..degree {
            c.add_vertex(format!("{}_{i}", g.vertex_name(v)), g.color(v).map(str::to_owned));
        }
    }
    let mut under = Vec::new();
    for (k, d) in g.edge_representatives().enumerate() {
        let (u, v) = (g.origin(d), g.terminus(d));
        let mut sigma: Vec<usize> = (0..degree).collect();
        sigma.shuffle(r);
        for i in 0..degree {
            let (x, y) = c.add_edge(&format!("e{k}_{i}"), u * degree + i, v * degree + sigma[i], None);
            under.push((x, d));
            under.push((y, g.reverse(d)));
        }
    }
    let mut dmap_full = vec![0; c.dart_count()];
    for (x, d) in under {
        dmap_full[x] = d;
    }
    let (comp, old_v, old_d) = c.component_of(0);
    let vmap = old_v.iter().map(|&v| v / degree).collect();
    let dmap = old_d.iter().map(|&d| dmap_full[d]).collect();
    GraphCovering::new(comp, g.clone(), vmap, dmap)
}

pub fn random_cover(r: &mut impl Rng, g: &MultiGraph, degree: usize) -> MultiGraph {
    random_covering(r, g, degree).source
}

/// Pairs of graphs with a common finite cover.
pub fn leighton_corpus() -> Vec<(String, MultiGraph, MultiGraph)> {
    let rb4 = ["red", "blue", "red", "blue"];
    let rb6 = ["red", "blue", "red", "blue", "red", "blue"];
    let mut out = vec![
        ("C3 and C4".into(), cycle_graph(3, None), cycle_graph(4, None)),
        ("C5 and C7".into(), cycle_graph(5, None), cycle_graph(7, None)),
        ("loop and C6".into(), bouquet(1), cycle_graph(6, None)),
        ("K4 and K3,3".into(), complete_graph(4), complete_bipartite_graph(3, 3)),
        ("two loops and K5".into(), bouquet(2), complete_graph(5)),
        ("coloured C4 and C6".into(), cycle_graph(4, Some(&rb4)), cycle_graph(6, Some(&rb6))),
        ("coloured C2 and C4".into(), cycle_graph(2, Some(&rb4[..2])), cycle_graph(4, Some(&rb4))),
    ];
    let mut r = rng(7);
    let k4_cover = random_cover(&mut r, &complete_graph(4), 2);
    out.push(("K3,3 and a cover of K4".into(), complete_bipartite_graph(3, 3), k4_cover));
    for i in 0..14 {
        let n = r.gen_range(1..=8);
        let extra = r.gen_range(0..=n);
        let base = random_connected_graph(&mut r, n, extra, i % 3 == 0);
        let (d1, d2) = (r.gen_range(1..=3), r.gen_range(2..=3));
        let a = random_cover(&mut r, &base, d1);
        let b = random_cover(&mut r, &base, d2);
        out.push((format!("random unwrapping {i} ({n} vertices)"), a, b));
    }
    out
}

// ---------- H_ε by Britton reduction ----------

const A: usize = 0;
const C: usize = 1;
const D: usize = 2;

/// Element `a^m c^n` of `⟨a, c | c⁻¹ac = a^ε⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Base {
    m: i64,
    n: i64,
}

impl Base {
    const ONE: Base = Base { m: 0, n: 0 };

    /// `a^m c^n · a^p c^q = a^{m ± p} c^{n+q}`, the sign being `ε^n`.
    fn mul(self, o: Base, eps: i8) -> Base {
        let sign = if eps < 0 && self.n.rem_euclid(2) == 1 { -1 } else { 1 };
        Base { m: self.m + sign * o.m, n: self.n + o.n }
    }
}

#[derive(Clone, Debug)]
enum Piece {
    G(Base),
    T(bool),
}

/// Decides `w = 1` in the HNN extension of `⟨a, c⟩` with stable letter `d`,
/// `d⁻¹cd = c²`, by pinching until no `d⁻¹ c^k d` or `d c^{2k} d⁻¹` is left.
pub fn britton_trivial(w: &[Letter], eps: i8) -> bool {
    let mut stack: Vec<Piece> = Vec::new();
    let push_base = |stack: &mut Vec<Piece>, g: Base| match stack.last_mut() {
        Some(Piece::G(h)) => *h = h.mul(g, eps),
        _ => stack.push(Piece::G(g)),
    };
    for &l in w {
        let e = if l.inverse { -1 } else { 1 };
        match l.gen {
            A => push_base(&mut stack, Base { m: e, n: 0 }),
            C => push_base(&mut stack, Base { m: 0, n: e }),
            D => {
                let inv = l.inverse;
                // try to pinch `t g t'` with t the stable letter on the stack
                let (g, below) = match stack.last() {
                    Some(Piece::G(g)) => (*g, stack.len() - 1),
                    _ => (Base::ONE, stack.len()),
                };
                let pinched = match below.checked_sub(1).map(|i| &stack[i]) {
                    // d⁻¹ c^k d = c^{2k}
                    Some(Piece::T(true)) if !inv && g.m == 0 => Some(Base { m: 0, n: 2 * g.n }),
                    // d c^{2k} d⁻¹ = c^k
                    Some(Piece::T(false)) if inv && g.m == 0 && g.n % 2 == 0 => Some(Base { m: 0, n: g.n / 2 }),
                    _ => None,
                };
                match pinched {
                    Some(h) => {
                        stack.truncate(below - 1);
                        push_base(&mut stack, h);
                    }
                    None => stack.push(Piece::T(inv)),
                }
            }
            _ => unreachable!(),
        }
    }
    stack.iter().all(|p| matches!(p, Piece::G(Base::ONE)))
}

pub fn word(gens: &[(usize, bool)]) -> Word {
    gens.iter().map(|&(g, i)| Letter::new(g, i)).collect()
}

pub fn random_word(r: &mut impl Rng, max_len: usize) -> Word {
    let n = r.gen_range(0..=max_len);
    (0..n).map(|_| Letter::new(r.gen_range(0..3), r.gen_bool(0.5))).collect()
}

/// All words of length exactly `n` over `{a, c, d}^±`.
pub fn all_words(n: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..6).map(move |x| {
                    let mut w = w.clone();
                    w.push(Letter::from_col(x));
                    w
                })
            })
            .collect();
    }
    out
}

// ---------- small complexes ----------

/// Restricted-growth strings of length `n`.
pub fn restricted_growth(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for s in out {
            let top = s.iter().max().map_or(0, |m| m + 1);
            for x in 0..=top {
                let mut t = s.clone();
                t.push(x);
                next.push(t);
            }
        }
        out = next;
    }
    out
}

/// A one-vertex complex with one labelled loop per generator and one face
/// per relator, read letter by letter without reduction.
pub fn one_vertex_complex(gens: usize, rels: &[Word]) -> TwoComplex {
    let mut g = MultiGraph::new();
    g.add_vertex("v0", None);
    let darts: Vec<(usize, usize)> =
        (0..gens).map(|i| g.add_edge(&format!("x{i}"), 0, 0, Some(&format!("x{i}")))).collect();
    let faces = rels
        .iter()
        .map(|r| r.iter().map(|l| if l.inverse { darts[l.gen].1 } else { darts[l.gen].0 }).collect())
        .collect();
    TwoComplex::new(g, faces).unwrap()
}

/// Every one-vertex complex with `faces` triangles and no free edges, up to
/// renaming edges: the generator count, the boundary words and the complex.
pub fn one_vertex_triangle_complexes(faces: usize) -> Vec<(usize, Vec<Word>, TwoComplex)> {
    let n = 3 * faces;
    let mut out = Vec::new();
    for s in restricted_growth(n) {
        let gens = s.iter().max().map_or(0, |m| m + 1);
        for signs in 0..(1u32 << n) {
            let letters: Vec<Letter> = (0..n).map(|i| Letter::new(s[i], signs >> i & 1 == 1)).collect();
            let rels: Vec<Word> = letters.chunks(3).map(<[Letter]>::to_vec).collect();
            let k = one_vertex_complex(gens, &rels);
            out.push((gens, rels, k));
        }
    }
    out
}

/// For a one-vertex complex whose relators are `rels`: `Some(orientable)`
/// when it is a closed surface of Euler characteristic 0.
pub fn surface_type(rels: &[Word], gens: usize) -> Option<bool> {
    let mut uses = vec![0; gens];
    for r in rels {
        for l in r {
            uses[l.gen] += 1;
        }
    }
    let faces = rels.len() as i64;
    if uses.iter().any(|&u| u != 2) || 1 - gens as i64 + faces != 0 {
        return None;
    }
    // link of the vertex: nodes are letter columns, one arc per corner
    let mut parent: Vec<usize> = (0..2 * gens).collect();
    fn root(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = root(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for r in rels {
        for i in 0..r.len() {
            let (x, y) = (r[i].inv().col(), r[(i + 1) % r.len()].col());
            let (a, b) = (root(&mut parent, x), root(&mut parent, y));
            parent[a] = b;
        }
    }
    let r0 = root(&mut parent, 0);
    if (0..2 * gens).any(|x| root(&mut parent, x) != r0) {
        return None;
    }
    Some(orientable(rels, gens))
}

/// Whether the relators can be re-oriented so that every generator is read
/// once positively and once negatively.
fn orientable(rels: &[Word], gens: usize) -> bool {
    (0..1u32 << rels.len()).any(|flip| {
        let mut sum = vec![0i64; gens];
        for (i, r) in rels.iter().enumerate() {
            let s = if flip >> i & 1 == 1 { -1 } else { 1 };
            for l in r {
                sum[l.gen] += s * l.exponent();
            }
        }
        sum.iter().all(|&x| x == 0)
    })
}

fn factor_into(n: u64, out: &mut BTreeMap<u64, usize>) {
    let mut n = n;
    let mut p = 2;
    while n > 1 {
        if n.is_multiple_of(p) {
            let mut q = 1;
            while n.is_multiple_of(p) {
                n /= p;
                q *= p;
            }
            *out.entry(q).or_default() += 1;
        }
        p += 1;
    }
}

/// Free rank and elementary divisors of `ℤ^free ⊕ ⊕ ℤ/tᵢ`.
pub fn elementary(free: usize, torsion: &[u64]) -> (usize, BTreeMap<u64, usize>) {
    let mut m = BTreeMap::new();
    for &t in torsion {
        factor_into(t, &mut m);
    }
    (free, m)
}

pub fn elementary_of(a: &AbelianInvariants) -> (usize, BTreeMap<u64, usize>) {
    let t: Vec<u64> = a.torsion.iter().map(|x| x.to_u64().unwrap()).collect();
    elementary(a.free_rank, &t)
}

/// Checks one complex against the surface oracle and the abelianization.
pub fn classifier_agrees(gens: usize, rels: &[Word], k: &TwoComplex) -> Result<Classification, String> {
    let c = classify_small_complex(k).map_err(|e| format!("{rels:?}: {e}"))?;
    let names = (0..gens).map(|i| format!("x{i}")).collect();
    let ab = elementary_of(&abelian_invariants(&Presentation::new(names, rels.to_vec()).unwrap()));
    match (&c, surface_type(rels, gens)) {
        (Classification::TorusOrKlein { orientable, free_rank: 0 }, Some(o)) if *orientable == o => {}
        (Classification::VirtuallyFree(w), None) => {
            if elementary(w.free_rank, &w.finite_orders) != ab {
                return Err(format!("{rels:?}: witness {w} has the wrong abelianization"));
            }
        }
        (c, s) => return Err(format!("{rels:?}: classified {c:?}, surface oracle {s:?}")),
    }
    Ok(c)
}

// ---------- gluing ----------

/// The 2-cycle covering the one-loop graph and itself.
fn two_cycle_pair() -> CoverPair {
    let m = TwoComplex::from_graph(cycle_graph(2, None)).unwrap();
    let loop1 = TwoComplex::from_graph(bouquet(1)).unwrap();
    let to_k =
        ComplexCovering { source: m.clone(), target: loop1, vmap: vec![0, 0], dmap: vec![0, 1, 0, 1], fmap: vec![] };
    CoverPair { to_k, to_l: ComplexCovering::identity(&m) }
}

/// `K` a figure eight, `L` two 2-cycles glued at both vertices.
pub fn figure_eight_input() -> GluingInput {
    GluingInput {
        first: two_cycle_pair(),
        second: two_cycle_pair(),
        v_first: 0,
        v_second: 0,
        w_first: vec![0, 1],
        w_second: vec![0, 1],
    }
}
