//! Pointed finite spaces and the smash product.
//!
//! The category of pointed spaces has the singleton as zero object, kernels
//! (preimages of the basepoint) and cokernels (collapsing an image to the
//! basepoint). The wedge is the pointed sum and the smash product is the
//! cokernel of the wedge inside the product. Iterated smash products in
//! different bracketings are compared through the n-ary smash product; see
//! [`Comparisons`].

mod compare;
mod radix;
mod scan;
mod smash;
mod tree;

pub use compare::{
    associator_kappa, associator_kappa_with, comparison, evaluate_criteria, is_regular,
    saturated_images_open_exhaustive, CoherenceFailure, Comparisons, KappaReport, RegularityReport, SmashCache,
    TreeSmash,
};
pub use scan::{associativity_scan, check_triple, coherence_scan, refinement_pairs, CoherenceScan, TripleScan};
pub use smash::{
    composed_symmetry, nary_smash, smash, smash_factorize, smash_maps, smash_power, smash_power_left, symmetry,
    MultiPointedMap, NarySmash,
};
pub use tree::ParenTree;

use thiserror::Error;

use crate::finspace::{
    disjoint_union, find_homeomorphism_pinned, point_set, quotient_by_classes, subspace, CMap, EnumerationConfig,
    FinSpace, HomeoSearch, Product, SpaceError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PointedError {
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error("basepoint {base} is not a point of a {len}-point space")]
    BasepointRange { base: usize, len: usize },
    #[error("map is not pointed: the basepoint goes to {image}")]
    NotPointed { image: usize },
    #[error("map is not pointed in each variable: input {input:?} has a basepoint coordinate but goes to {image}")]
    NotMultiPointed { input: Vec<usize>, image: usize },
    #[error("map on the product is not continuous: {from:?} <= {to:?} but the images are unrelated")]
    Discontinuous { from: Vec<usize>, to: Vec<usize> },
    #[error("expected {expected} factors, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("invalid bracketing: {0}")]
    Tree(String),
    #[error("tree {finer} does not refine {coarser}")]
    NotRefinement { finer: String, coarser: String },
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

/// A finite space with a chosen basepoint.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PtSpace {
    space: FinSpace,
    base: usize,
}

impl PtSpace {
    pub fn new(space: FinSpace, base: usize) -> Result<Self, PointedError> {
        if base >= space.len() {
            return Err(PointedError::BasepointRange { base, len: space.len() });
        }
        Ok(PtSpace { space, base })
    }

    pub(crate) fn new_unchecked(space: FinSpace, base: usize) -> Self {
        debug_assert!(base < space.len());
        PtSpace { space, base }
    }

    pub fn space(&self) -> &FinSpace {
        &self.space
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn len(&self) -> usize {
        self.space.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_zero(&self) -> bool {
        self.space.len() == 1
    }

    pub fn label(&self, x: usize) -> &str {
        self.space.label(x)
    }

    /// Non-base points in index order.
    pub fn non_base(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&x| x != self.base)
    }
}

/// The zero object: a single point.
pub fn zero_object() -> PtSpace {
    PtSpace::new_unchecked(FinSpace::discrete_labeled(vec!["0".into()]), 0)
}

/// The unit of the smash product: the discrete space `{-1, 1}` pointed at 1.
pub fn s0() -> PtSpace {
    PtSpace::new_unchecked(FinSpace::discrete_labeled(vec!["-1".into(), "1".into()]), 1)
}

/// A pointed continuous map.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PtMap {
    dom: PtSpace,
    cod: PtSpace,
    map: CMap,
}

impl PtMap {
    pub fn new(dom: PtSpace, cod: PtSpace, assignment: Vec<usize>) -> Result<Self, PointedError> {
        let map = CMap::new(dom.space.clone(), cod.space.clone(), assignment)?;
        let image = map.apply(dom.base);
        if image != cod.base {
            return Err(PointedError::NotPointed { image });
        }
        Ok(PtMap { dom, cod, map })
    }

    pub(crate) fn new_unchecked(dom: PtSpace, cod: PtSpace, assignment: Vec<usize>) -> Self {
        let map = CMap::new_unchecked(dom.space.clone(), cod.space.clone(), assignment);
        debug_assert_eq!(map.apply(dom.base), cod.base);
        PtMap { dom, cod, map }
    }

    pub fn from_cmap(dom: PtSpace, cod: PtSpace, map: CMap) -> Result<Self, PointedError> {
        PtMap::new(dom, cod, map.assignment().to_vec())
    }

    pub fn identity(x: &PtSpace) -> Self {
        PtMap::new_unchecked(x.clone(), x.clone(), (0..x.len()).collect())
    }

    /// The zero map `X -> {*} -> Y`.
    pub fn zero(x: &PtSpace, y: &PtSpace) -> Self {
        PtMap::new_unchecked(x.clone(), y.clone(), vec![y.base; x.len()])
    }

    pub fn dom(&self) -> &PtSpace {
        &self.dom
    }

    pub fn cod(&self) -> &PtSpace {
        &self.cod
    }

    pub fn cmap(&self) -> &CMap {
        &self.map
    }

    pub fn assignment(&self) -> &[usize] {
        self.map.assignment()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map.apply(x)
    }

    pub fn is_zero(&self) -> bool {
        self.assignment().iter().all(|&y| y == self.cod.base)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &PtMap) -> Result<PtMap, PointedError> {
        if self.cod != other.dom {
            return Err(SpaceError::NotComposable.into());
        }
        let map = self.map.then(&other.map)?;
        Ok(PtMap {
            dom: self.dom.clone(),
            cod: other.cod.clone(),
            map,
        })
    }

    pub fn is_homeomorphism(&self) -> bool {
        self.map.is_homeomorphism()
    }

    pub fn inverse(&self) -> Option<PtMap> {
        let inv = self.map.inverse()?;
        Some(PtMap {
            dom: self.cod.clone(),
            cod: self.dom.clone(),
            map: inv,
        })
    }
}

/// `Ker f`: the subspace on the preimage of the basepoint, with its
/// inclusion.
pub fn kernel(f: &PtMap) -> (PtSpace, PtMap) {
    let carrier = f.map.preimage(&point_set(f.cod.len(), [f.cod.base]));
    let (sub, inc) = subspace(f.dom.space(), &carrier).expect("the basepoint lies in the kernel");
    let base = inc.assignment().iter().position(|&x| x == f.dom.base).unwrap();
    let k = PtSpace::new_unchecked(sub, base);
    let inc = PtMap::new_unchecked(k.clone(), f.dom.clone(), inc.assignment().to_vec());
    (k, inc)
}

/// `Coker f = Y / f(X)`, with its projection. The collapsed block is the
/// basepoint, labelled `0` when it has more than one member.
pub fn cokernel(f: &PtMap) -> (PtSpace, PtMap) {
    let image = f.map.image(&f.dom.space.full_set());
    collapse(&f.cod, &image)
}

/// `X / A` for a subset `A` containing the basepoint, pointed at the
/// collapsed block. Other points keep their order and labels.
pub fn collapse(x: &PtSpace, a: &crate::finspace::PointSet) -> (PtSpace, PtMap) {
    let mut block = a.clone();
    block.insert(x.base);
    let mut class = vec![0usize; x.len()];
    let mut k = 1;
    let collapsed: Vec<usize> = block.ones().collect();
    for p in 0..x.len() {
        if !block.contains(p) {
            class[p] = k;
            k += 1;
        }
    }
    let q = quotient_by_classes(x.space(), &class, k, |members| {
        if members.len() == 1 {
            x.label(members[0]).to_string()
        } else {
            "0".to_string()
        }
    });
    debug_assert_eq!(q.blocks[0], collapsed);
    let c = PtSpace::new_unchecked(q.space, 0);
    let p = PtMap::new_unchecked(x.clone(), c.clone(), class);
    (c, p)
}

/// The wedge `X ∨ Y = X×{0} ∪ {0}×Y` as a subspace of the product, with
/// the two injections and the inclusion into `X × Y`.
pub struct Wedge {
    pub space: PtSpace,
    pub inj_left: PtMap,
    pub inj_right: PtMap,
    pub inclusion: PtMap,
    pub product: PtSpace,
}

pub fn wedge(x: &PtSpace, y: &PtSpace) -> Wedge {
    let prod = Product::new(&[x.space.clone(), y.space.clone()]);
    let pbase = prod.encode(&[x.base, y.base]);
    let product = PtSpace::new_unchecked(prod.space().clone(), pbase);
    let carrier = point_set(
        prod.space().len(),
        (0..prod.space().len()).filter(|&p| prod.coord(p, 0) == x.base || prod.coord(p, 1) == y.base),
    );
    let (sub, inc) = subspace(prod.space(), &carrier).unwrap();
    let pos = |p: usize| inc.assignment().iter().position(|&q| q == p).unwrap();
    let space = PtSpace::new_unchecked(sub, pos(pbase));
    let inclusion = PtMap::new_unchecked(space.clone(), product.clone(), inc.assignment().to_vec());
    let inj_left = PtMap::new_unchecked(
        x.clone(),
        space.clone(),
        (0..x.len()).map(|a| pos(prod.encode(&[a, y.base]))).collect(),
    );
    let inj_right = PtMap::new_unchecked(
        y.clone(),
        space.clone(),
        (0..y.len()).map(|b| pos(prod.encode(&[x.base, b]))).collect(),
    );
    Wedge {
        space,
        inj_left,
        inj_right,
        inclusion,
        product,
    }
}

impl Wedge {
    /// The copairing `[f, g] : X ∨ Y -> Z`; `None` if `f` and `g` do not
    /// form a cospan over the wedge summands.
    pub fn copair(&self, f: &PtMap, g: &PtMap) -> Option<PtMap> {
        if f.dom != *self.inj_left.dom() || g.dom != *self.inj_right.dom() || f.cod != g.cod {
            return None;
        }
        let mut a = vec![f.cod.base; self.space.len()];
        for x in 0..f.dom.len() {
            a[self.inj_left.apply(x)] = f.apply(x);
        }
        for y in 0..g.dom.len() {
            a[self.inj_right.apply(y)] = g.apply(y);
        }
        PtMap::new(self.space.clone(), f.cod.clone(), a).ok()
    }
}

/// `S_• = S + {*}`, pointed at the added point (which comes last).
pub fn add_basepoint(s: &FinSpace) -> PtSpace {
    let star = FinSpace::discrete_labeled(vec!["*".into()]);
    let (sum, _) = disjoint_union(&[s.clone(), star]);
    PtSpace::new_unchecked(sum, s.len())
}

/// The canonical map `(S×T)_• -> S_• ∧ T_•`, `(s, t) ↦ s∧t` and `* ↦ 0`.
pub fn basepoint_product_map(s: &FinSpace, t: &FinSpace) -> Result<PtMap, PointedError> {
    let p = Product::new(&[s.clone(), t.clone()]);
    let dom = add_basepoint(p.space());
    let sm = smash::smash(&add_basepoint(s), &add_basepoint(t));
    let a = (0..dom.len())
        .map(|i| {
            if i == dom.base() {
                sm.space().base()
            } else {
                sm.eta(&p.decode(i))
            }
        })
        .collect();
    PtMap::new(dom, sm.space().clone(), a)
}

/// Pointed homeomorphism search (basepoint pinned to basepoint).
pub fn find_pointed_homeomorphism(x: &PtSpace, y: &PtSpace, budget: u64) -> HomeoSearch {
    find_homeomorphism_pinned(x.space(), y.space(), &[(x.base, y.base)], budget).0
}

/// One representative per pointed homeomorphism class of pointed spaces
/// with at most `max_points` points: every space class with every
/// basepoint orbit under its automorphisms. Ordered by size, then by the
/// enumeration order of spaces, then by basepoint.
pub fn enumerate_pointed(max_points: usize) -> Result<Vec<PtSpace>, PointedError> {
    let cfg = EnumerationConfig::default();
    let mut out = Vec::new();
    for n in 1..=max_points {
        for s in crate::finspace::enumerate_spaces(n, &cfg)? {
            let mut reps: Vec<usize> = Vec::new();
            for b in 0..n {
                let same_orbit = reps
                    .iter()
                    .any(|&r| find_homeomorphism_pinned(&s, &s, &[(r, b)], u64::MAX).0.is_found());
                if !same_orbit {
                    reps.push(b);
                }
            }
            for b in reps {
                out.push(PtSpace::new_unchecked(s.clone(), b));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finspace::{continuous_maps, DEFAULT_HOMEO_BUDGET};

    fn sierpinski_closed() -> PtSpace {
        PtSpace::new(FinSpace::sierpinski(), 0).unwrap()
    }

    #[test]
    fn zero_maps_absorb() {
        let x = sierpinski_closed();
        let z = PtMap::zero(&x, &x);
        let id = PtMap::identity(&x);
        assert!(z.then(&id).unwrap().is_zero());
        assert!(id.then(&z).unwrap().is_zero());
        let (k, inc) = kernel(&z);
        assert_eq!(k.len(), x.len());
        assert!(inc.is_homeomorphism());
    }

    #[test]
    fn kernel_and_cokernel_of_identity_are_zero() {
        let x = sierpinski_closed();
        let id = PtMap::identity(&x);
        assert!(kernel(&id).0.is_zero());
        assert!(cokernel(&id).0.is_zero());
    }

    #[test]
    fn wedge_sizes_and_s0() {
        let w = wedge(&s0(), &s0());
        assert_eq!(w.space.len(), 3);
        assert_eq!(w.space.space().relation_size(), 3);
        let x = sierpinski_closed();
        let w = wedge(&zero_object(), &x);
        assert!(find_pointed_homeomorphism(&w.space, &x, DEFAULT_HOMEO_BUDGET).is_found());
        for a in enumerate_pointed(3).unwrap() {
            for b in enumerate_pointed(2).unwrap() {
                assert_eq!(wedge(&a, &b).space.len(), a.len() + b.len() - 1);
            }
        }
    }

    #[test]
    fn wedge_is_a_categorical_sum() {
        let x = sierpinski_closed();
        let y = s0();
        let w = wedge(&x, &y);
        for z in enumerate_pointed(3).unwrap() {
            let fs = continuous_maps(x.space(), z.space(), &[(x.base(), z.base())]);
            let gs = continuous_maps(y.space(), z.space(), &[(y.base(), z.base())]);
            let hs = continuous_maps(w.space.space(), z.space(), &[(w.space.base(), z.base())]);
            // copairing is a bijection hom(X,Z) × hom(Y,Z) -> hom(X∨Y, Z)
            assert_eq!(fs.len() * gs.len(), hs.len());
            for f in &fs {
                for g in &gs {
                    let f = PtMap::new(x.clone(), z.clone(), f.clone()).unwrap();
                    let g = PtMap::new(y.clone(), z.clone(), g.clone()).unwrap();
                    let h = w.copair(&f, &g).unwrap();
                    assert_eq!(w.inj_left.then(&h).unwrap(), f);
                    assert_eq!(w.inj_right.then(&h).unwrap(), g);
                }
            }
        }
    }

    #[test]
    fn point_with_basepoint_is_s0() {
        let p = add_basepoint(&FinSpace::point());
        assert!(find_pointed_homeomorphism(&p, &s0(), DEFAULT_HOMEO_BUDGET).is_found());
        assert_eq!(add_basepoint(&FinSpace::sierpinski()).len(), 3);
    }

    #[test]
    fn pointed_class_counts() {
        // by size: 1, 4, 18; the 3-point classes are point orbits of the nine
        // preorder types: 1+1+3+3+2+2+2+2+2
        let all = enumerate_pointed(3).unwrap();
        let by_size: Vec<usize> = (1..=3).map(|n| all.iter().filter(|p| p.len() == n).count()).collect();
        let cfg = EnumerationConfig::default();
        for n in 1..=3 {
            let mut reps: Vec<PtSpace> = Vec::new();
            for s in crate::finspace::enumerate_spaces(n, &cfg).unwrap() {
                for b in 0..n {
                    let p = PtSpace::new(s.clone(), b).unwrap();
                    if !reps
                        .iter()
                        .any(|r| find_pointed_homeomorphism(r, &p, u64::MAX).is_found())
                    {
                        reps.push(p);
                    }
                }
            }
            assert_eq!(by_size[n - 1], reps.len());
        }
        assert_eq!(by_size, vec![1, 4, 18]);
    }

    #[test]
    fn adding_basepoints_turns_products_into_smashes() {
        let cfg = EnumerationConfig::default();
        let spaces: Vec<FinSpace> = (1..=3)
            .flat_map(|n| crate::finspace::enumerate_spaces(n, &cfg).unwrap())
            .collect();
        for s in &spaces {
            for t in &spaces {
                let f = basepoint_product_map(s, t).unwrap();
                assert!(f.is_homeomorphism());
                assert_eq!(add_basepoint(s).len(), s.len() + 1);
            }
        }
        let f = basepoint_product_map(&FinSpace::sierpinski(), &FinSpace::discrete(2)).unwrap();
        let sm = smash::smash(
            &add_basepoint(&FinSpace::sierpinski()),
            &add_basepoint(&FinSpace::discrete(2)),
        );
        assert!(find_pointed_homeomorphism(f.dom(), sm.space(), DEFAULT_HOMEO_BUDGET).is_found());
    }

    #[test]
    fn basepoint_out_of_range() {
        assert_eq!(
            PtSpace::new(FinSpace::point(), 1),
            Err(PointedError::BasepointRange { base: 1, len: 1 })
        );
    }
}
