use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

use super::factor::FactorElement;
use super::normal_form::{amalgam_mul, generator, AmalgamElement};
use super::AmalgamError;
use crate::complex2::TwoComplex;
use crate::fpgroups::{h_epsilon, Presentation};
use crate::graph::{DartId, MultiGraph, VertexId};

/// Default bound on the number of ball vertices.
pub const DEFAULT_VERTEX_CAP: usize = 1_000_000;

/// A group with a solved word problem and a finite presentation, enough to
/// build balls in the universal cover of its presentation complex.
pub trait GroupModel {
    type Element: Clone + Eq + Hash;

    fn presentation(&self) -> Presentation;
    fn identity(&self) -> Self::Element;
    /// `g · x` for generator `gen`, or `g · x⁻¹` when `inverse`.
    fn mul_generator(&self, g: &Self::Element, gen: usize, inverse: bool) -> Self::Element;
}

/// `H_ε` through its normal forms.
#[derive(Clone, Debug)]
pub struct AmalgamModel {
    eps: i8,
    gens: Vec<AmalgamElement>,
    inverses: Vec<AmalgamElement>,
}

impl AmalgamModel {
    pub fn new(eps: i8) -> Result<Self, AmalgamError> {
        let gens = (0..3).map(|g| generator(g, eps)).collect::<Result<Vec<_>, _>>()?;
        let inverses = gens.iter().map(AmalgamElement::inverse).collect();
        Ok(AmalgamModel { eps, gens, inverses })
    }
}

impl GroupModel for AmalgamModel {
    type Element = AmalgamElement;

    fn presentation(&self) -> Presentation {
        h_epsilon(self.eps)
    }

    fn identity(&self) -> AmalgamElement {
        AmalgamElement::identity(self.eps).expect("ε checked on construction")
    }

    fn mul_generator(&self, g: &AmalgamElement, gen: usize, inverse: bool) -> AmalgamElement {
        let x = if inverse { &self.inverses[gen] } else { &self.gens[gen] };
        amalgam_mul(g, x).expect("same ε")
    }
}

/// `ℤ² = ⟨a, b | aba⁻¹b⁻¹⟩`, whose universal cover is the square tiling.
#[derive(Clone, Copy, Debug, Default)]
pub struct TorusModel;

impl GroupModel for TorusModel {
    type Element = FactorElement;

    fn presentation(&self) -> Presentation {
        crate::fpgroups::torus()
    }

    fn identity(&self) -> FactorElement {
        FactorElement::identity(super::Factor::Torus)
    }

    fn mul_generator(&self, g: &FactorElement, gen: usize, inverse: bool) -> FactorElement {
        let (m, n) = match (gen, inverse) {
            (0, false) => (1, 0),
            (0, true) => (-1, 0),
            (_, false) => (0, 1),
            (_, true) => (0, -1),
        };
        let x = FactorElement::Torus { m: m.into(), n: n.into() };
        super::factor_mul(g, &x).expect("same factor")
    }
}

/// The ball of radius `radius` about the identity in the universal cover
/// of a presentation complex.
///
/// Vertices are the elements of word length at most `radius`, the base is
/// vertex 0, edges are labelled by generators and faces are the relator
/// lifts whose whole boundary lies in the ball.
#[derive(Clone, Debug)]
pub struct BallComplex<E> {
    pub complex: TwoComplex,
    pub base: VertexId,
    pub radius: usize,
    pub elements: Vec<E>,
}

impl<E> BallComplex<E> {
    pub fn element_of(&self, v: VertexId) -> &E {
        &self.elements[v]
    }
}

impl BallComplex<AmalgamElement> {
    /// Vertex name to normal-form tokens.
    pub fn element_map(&self) -> BTreeMap<String, String> {
        let g = self.complex.skeleton();
        (0..g.vertex_count()).map(|v| (g.vertex_name(v).to_owned(), self.elements[v].to_tokens())).collect()
    }
}

/// Ball in any [`GroupModel`], refusing to grow past `vertex_cap` vertices.
pub fn model_ball<M: GroupModel>(
    model: &M,
    radius: usize,
    vertex_cap: usize,
) -> Result<BallComplex<M::Element>, AmalgamError> {
    let p = model.presentation();
    let ngens = p.generator_count();
    let mut index: HashMap<M::Element, usize> = HashMap::new();
    let mut elements = vec![model.identity()];
    index.insert(model.identity(), 0);
    let mut frontier = vec![0];
    for _ in 0..radius {
        let mut next = Vec::new();
        for &v in &frontier {
            for gen in 0..ngens {
                for inverse in [false, true] {
                    let w = model.mul_generator(&elements[v], gen, inverse);
                    if !index.contains_key(&w) {
                        if elements.len() >= vertex_cap {
                            return Err(AmalgamError::BallTooLarge { cap: vertex_cap });
                        }
                        index.insert(w.clone(), elements.len());
                        next.push(elements.len());
                        elements.push(w);
                    }
                }
            }
        }
        frontier = next;
    }

    let mut g = MultiGraph::new();
    for v in 0..elements.len() {
        g.add_vertex(format!("v{v}"), None);
    }
    let mut forward: HashMap<(usize, usize), DartId> = HashMap::new();
    for v in 0..elements.len() {
        for gen in 0..ngens {
            let w = model.mul_generator(&elements[v], gen, false);
            if let Some(&w) = index.get(&w) {
                let k = g.edge_count();
                let (d, _) = g.add_edge(&format!("e{k}"), v, w, Some(&p.generators()[gen]));
                forward.insert((v, gen), d);
            }
        }
    }
    let mut faces = Vec::new();
    for v in 0..elements.len() {
        'rel: for r in p.relators() {
            let mut walk = Vec::with_capacity(r.len());
            let mut at = v;
            for l in r {
                let d = if l.inverse {
                    let prev = model.mul_generator(&elements[at], l.gen, true);
                    let Some(&prev) = index.get(&prev) else { continue 'rel };
                    match forward.get(&(prev, l.gen)) {
                        Some(&d) => g.reverse(d),
                        None => continue 'rel,
                    }
                } else {
                    match forward.get(&(at, l.gen)) {
                        Some(&d) => d,
                        None => continue 'rel,
                    }
                };
                walk.push(d);
                at = g.terminus(d);
            }
            faces.push(walk);
        }
    }
    let complex = TwoComplex::new(g, faces).expect("relator lifts are closed");
    Ok(BallComplex { complex, base: 0, radius, elements })
}

/// Ball of radius `r` in the universal cover of the complex of `H_ε`.
pub fn cayley_ball(eps: i8, r: usize) -> Result<BallComplex<AmalgamElement>, AmalgamError> {
    model_ball(&AmalgamModel::new(eps)?, r, DEFAULT_VERTEX_CAP)
}
