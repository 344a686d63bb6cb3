use serde::Serialize;

use crate::complex2::{
    cover_from_coset_table, fan_triangulate, glue_covers, presentation_complex, two_dimensional_part, ComplexCovering,
    CoverPair, GluedCover, GluingInput, Split, TwoComplex,
};
use crate::fpgroups::{CosetTable, Presentation, Word};
use crate::graph::{leighton_common_cover, GraphCovering, MultiGraph};

use super::PapercheckError;

/// Outcome of [`common_cover_demo`].
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DemoOutcome {
    /// Vertex, edge and face counts.
    pub k_cells: [usize; 3],
    pub l_cells: [usize; 3],
    pub x_cells: [usize; 3],
    pub k_first: usize,
    pub k_second: usize,
    pub q: usize,
    pub identified_per_w: usize,
    pub degree_over_k: Option<usize>,
    pub degree_over_l: Option<usize>,
    pub legs_valid: bool,
    pub connected: bool,
    /// Whether the glued `K` and `L` have the cell counts of the inputs.
    pub reassembled: bool,
}

fn cells(k: &TwoComplex) -> [usize; 3] {
    [k.vertex_count(), k.edge_count(), k.face_count()]
}

fn stage(what: &str, e: impl std::fmt::Display) -> PapercheckError {
    PapercheckError::Stage { stage: format!("common-cover demo: {what}"), message: e.to_string() }
}

/// Presentation read off a one-vertex complex whose darts carry labels.
fn labelled_presentation(k: &TwoComplex) -> Result<Presentation, PapercheckError> {
    let g = k.skeleton();
    let mut gens = Vec::new();
    for d in g.edge_representatives() {
        let l = g.label(d).ok_or_else(|| stage("presentation", "unlabelled edge"))?;
        gens.push(l.symbol.clone());
    }
    let rels: Vec<Word> = k
        .faces()
        .iter()
        .map(|f| k.spell(f, &gens).ok_or_else(|| stage("presentation", "face not spelled by labels")))
        .collect::<Result<_, _>>()?;
    Presentation::new(gens, rels).map_err(|e| stage("presentation", e))
}

/// The 2-dimensional part of a covering, between the 2-dimensional parts.
fn restrict_to_k2(c: &ComplexCovering, s: &Split, t: &Split) -> ComplexCovering {
    let mut tv = vec![usize::MAX; c.target.vertex_count()];
    for (new, &old) in t.k2_vertices.iter().enumerate() {
        tv[old] = new;
    }
    let mut td = vec![usize::MAX; c.target.skeleton().dart_count()];
    for (new, &old) in t.k2_darts.iter().enumerate() {
        td[old] = new;
    }
    ComplexCovering {
        source: s.k2.clone(),
        target: t.k2.clone(),
        vmap: s.k2_vertices.iter().map(|&v| tv[c.vmap[v]]).collect(),
        dmap: s.k2_darts.iter().map(|&d| td[c.dmap[d]]).collect(),
        fmap: c.fmap.clone(),
    }
}

fn coloured(g: &MultiGraph, red: &[usize]) -> MultiGraph {
    let mut g = g.clone();
    for v in 0..g.vertex_count() {
        g.set_color(v, Some(if red.contains(&v) { "red" } else { "black" }.to_owned()));
    }
    g
}

fn as_complex_covering(p: &GraphCovering) -> Result<ComplexCovering, PapercheckError> {
    Ok(ComplexCovering {
        source: TwoComplex::from_graph(p.source.clone()).map_err(|e| stage("graph cover", e))?,
        target: TwoComplex::from_graph(p.target.clone()).map_err(|e| stage("graph cover", e))?,
        vmap: p.vmap.clone(),
        dmap: p.dmap.clone(),
        fmap: Vec::new(),
    })
}

/// The fixed input pair: `K` is a triangulated torus with a loop `e`
/// attached at its vertex, `L` the double cover of `K` in which `a` and `e`
/// swap the two sheets.
pub fn demo_pair() -> Result<(TwoComplex, TwoComplex, ComplexCovering), PapercheckError> {
    let base = Presentation::from_strs(&["a", "b", "e"], &["a b a- b-"]).map_err(|e| stage("input", e))?;
    let k0 = presentation_complex(&base).map_err(|e| stage("input", e))?;
    let k = fan_triangulate(&k0).map_err(|e| stage("input", e))?.complex;
    let p = labelled_presentation(&k)?;
    // the diagonal reads as a word in a and b, so its sheet swap is the parity of that word
    let mut perms = Vec::new();
    for (g, name) in p.generators().iter().enumerate() {
        let swap = match name.as_str() {
            "a" | "e" => true,
            "b" => false,
            _ => {
                let rel = p.relators().iter().find(|r| r.iter().any(|l| l.gen == g)).expect("diagonal lies on a face");
                let others = rel.iter().filter(|l| l.gen != g && p.generators()[l.gen] == "a").count();
                others % 2 == 1
            }
        };
        perms.push(if swap { vec![1, 0] } else { vec![0, 1] });
    }
    let table = CosetTable::from_permutations(p.clone(), Vec::new(), &perms).map_err(|e| stage("sheets", e))?;
    let gens = table.schreier_generators();
    let table = table.with_subgroup_gens(gens);
    let (l, cover) = cover_from_coset_table(&k, &table).map_err(|e| stage("double cover", e))?;
    Ok((k, l, cover))
}

/// Builds a finite common cover of the pair of [`demo_pair`] by splitting
/// both complexes, covering the 1-dimensional parts with a coloured
/// Leighton cover and the 2-dimensional parts with `L₂`, then gluing.
pub fn common_cover_demo() -> Result<(DemoOutcome, GluedCover), PapercheckError> {
    let (k, l, l_to_k) = demo_pair()?;
    let sk = two_dimensional_part(&k);
    let sl = two_dimensional_part(&l);

    let k1 = coloured(&sk.k1, &sk.shared);
    let l1 = coloured(&sl.k1, &sl.shared);
    let r = leighton_common_cover(&k1, &l1).map_err(|e| stage("Leighton", e))?;
    let first = CoverPair { to_k: as_complex_covering(&r.to_a)?, to_l: as_complex_covering(&r.to_b)? };

    let p_to_k2 = restrict_to_k2(&l_to_k, &sl, &sk);
    let second = CoverPair { to_l: ComplexCovering::identity(&sl.k2), to_k: p_to_k2 };

    let v = *sk.shared.first().ok_or_else(|| stage("split", "K has no 2-dimensional part"))?;
    let w_second: Vec<usize> =
        sl.shared.iter().map(|w| sl.k2_vertices.iter().position(|x| x == w).expect("shared vertex")).collect();
    let input = GluingInput {
        first,
        second,
        v_first: v,
        v_second: sk.k2_vertices.iter().position(|&x| x == v).expect("shared vertex"),
        w_first: sl.shared.clone(),
        w_second,
    };
    let glued = glue_covers(&input).map_err(|e| stage("gluing", e))?;
    let vk = glued.to_k.verify().map_err(|e| stage("verify", e))?;
    let vl = glued.to_l.verify().map_err(|e| stage("verify", e))?;
    let outcome = DemoOutcome {
        k_cells: cells(&k),
        l_cells: cells(&l),
        x_cells: cells(&glued.x),
        k_first: glued.k_first,
        k_second: glued.k_second,
        q: glued.q,
        identified_per_w: glued.identified_per_w,
        degree_over_k: vk.degree,
        degree_over_l: vl.degree,
        legs_valid: vk.is_valid() && vl.is_valid(),
        connected: glued.x.is_connected(),
        reassembled: cells(&glued.k) == cells(&k) && cells(&glued.l) == cells(&l),
    };
    Ok((outcome, glued))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_is_a_double_cover() {
        let (k, l, c) = demo_pair().unwrap();
        assert_eq!(cells(&k), [1, 4, 2]);
        assert_eq!(cells(&l), [2, 8, 4]);
        assert_eq!(c.verify().unwrap().degree, Some(2));
    }

    #[test]
    fn demo_glues() {
        let (o, g) = common_cover_demo().unwrap();
        assert!(o.legs_valid && o.connected && o.reassembled, "{o:?}");
        assert_eq!(o.q, 2);
        let full = g.full_to_k.verify().unwrap().degree.unwrap();
        assert_eq!(full, o.k_first * o.k_second);
        // each vertex of L has k'k''/q preimages, so the degree over K is q times the one over L
        let (dk, dl) = (o.degree_over_k.unwrap(), o.degree_over_l.unwrap());
        assert_eq!(dk, o.q * dl);
    }
}
