//! Comparison maps between bracketings, coherence and regularity.
//!
//! Every bracketed smash product `t(X_1, ..., X_n)` receives a unique map
//! `γ_t` from the n-ary smash product with `γ_t ∘ η = ρ_t`, where `ρ_t`
//! applies the `η` maps of the brackets from the inside out. When `t1`
//! refines `t2` there is also a direct comparison `γ_{t2→t1}`, built bracket
//! by bracket from comparisons of smaller arity and smash products of maps.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use serde::Serialize;

use crate::finspace::{CMap, FinSpace, PointSet, Product};

use super::smash::{smash_maps, symmetry, MultiPointedMap, NarySmash};
use super::{ParenTree, PointedError, PtMap, PtSpace};

/// A bracketed iterated smash product.
#[derive(Debug)]
pub struct TreeSmash {
    tree: ParenTree,
    space: PtSpace,
    node: Option<Node>,
}

#[derive(Debug)]
struct Node {
    children: Vec<Arc<TreeSmash>>,
    smash: NarySmash,
}

impl TreeSmash {
    /// The bracketing, with leaves numbered from 1.
    pub fn tree(&self) -> &ParenTree {
        &self.tree
    }

    pub fn space(&self) -> &PtSpace {
        &self.space
    }

    pub fn leaf_count(&self) -> usize {
        self.tree.leaf_count()
    }

    /// The spaces of the top-level brackets, or `None` for a leaf.
    pub fn children(&self) -> Option<Vec<&TreeSmash>> {
        self.node
            .as_ref()
            .map(|n| n.children.iter().map(|c| c.as_ref()).collect())
    }

    /// The smash product formed at the root bracket.
    pub fn root_smash(&self) -> Option<&NarySmash> {
        self.node.as_ref().map(|n| &n.smash)
    }

    /// `ρ_t(x_1, ..., x_n)`.
    pub fn eval(&self, coords: &[usize]) -> usize {
        match &self.node {
            None => coords[0],
            Some(node) => {
                let mut vals = Vec::with_capacity(node.children.len());
                let mut at = 0;
                for c in &node.children {
                    let k = c.leaf_count();
                    vals.push(c.eval(&coords[at..at + k]));
                    at += k;
                }
                node.smash.eta(&vals)
            }
        }
    }

    /// The leaf coordinates of a non-base point; `None` for the basepoint.
    pub fn leaf_tuple(&self, p: usize) -> Option<Vec<usize>> {
        match &self.node {
            None => (p != self.space.base()).then(|| vec![p]),
            Some(node) => {
                let rep = node.smash.representative(p)?;
                let mut out = Vec::with_capacity(self.leaf_count());
                for (c, &v) in node.children.iter().zip(&rep) {
                    out.extend(c.leaf_tuple(v)?);
                }
                Some(out)
            }
        }
    }
}

/// Shared store of bracketed smash products, keyed by bracketing and factor
/// tuple. Only bracketings with at most `max_leaves` leaves are retained.
///
/// Lookups take a read lock; a miss builds the value outside any lock and
/// inserts it under the write lock, keeping the first value stored for a
/// key. Values are equal regardless of which writer wins.
pub struct SmashCache {
    trees: RwLock<HashMap<(ParenTree, Vec<PtSpace>), Arc<TreeSmash>>>,
    max_leaves: usize,
}

impl Default for SmashCache {
    fn default() -> Self {
        SmashCache::new(usize::MAX)
    }
}

impl SmashCache {
    pub fn new(max_leaves: usize) -> Self {
        SmashCache {
            trees: RwLock::new(HashMap::new()),
            max_leaves,
        }
    }

    pub fn len(&self) -> usize {
        self.trees.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `tree` must be numbered from 1 and have `factors.len()` leaves.
    pub fn tree_smash(&self, tree: &ParenTree, factors: &[PtSpace]) -> Arc<TreeSmash> {
        debug_assert_eq!(tree.leaf_count(), factors.len());
        if let ParenTree::Leaf(_) = tree {
            return Arc::new(TreeSmash {
                tree: tree.clone(),
                space: factors[0].clone(),
                node: None,
            });
        }
        let cacheable = tree.leaf_count() <= self.max_leaves;
        let key = (tree.clone(), factors.to_vec());
        if cacheable {
            if let Some(t) = self.trees.read().unwrap().get(&key) {
                return t.clone();
            }
        }
        let mut children = Vec::new();
        let mut at = 0;
        for c in tree.children() {
            let k = c.leaf_count();
            children.push(self.tree_smash(&c.normalized(), &factors[at..at + k]));
            at += k;
        }
        let spaces: Vec<PtSpace> = children.iter().map(|c| c.space.clone()).collect();
        let smash = NarySmash::new(&spaces);
        let built = Arc::new(TreeSmash {
            tree: tree.clone(),
            space: smash.space().clone(),
            node: Some(Node { children, smash }),
        });
        if cacheable {
            let mut w = self.trees.write().unwrap();
            return w.entry(key).or_insert(built).clone();
        }
        built
    }
}

/// A failure of a coherence identity, with the first point where the two
/// maps differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoherenceFailure {
    pub coarse: String,
    pub fine: String,
    pub point: usize,
    pub direct: usize,
    pub composite: usize,
}

/// Comparison maps for one tuple of factors, cached per bracketing.
pub struct Comparisons<'c> {
    factors: Vec<PtSpace>,
    flat: NarySmash,
    cache: &'c SmashCache,
    gammas: RwLock<HashMap<ParenTree, PtMap>>,
    full: RwLock<HashMap<ParenTree, Arc<TreeSmash>>>,
}

impl<'c> Comparisons<'c> {
    pub fn new(factors: &[PtSpace], cache: &'c SmashCache) -> Self {
        Comparisons {
            factors: factors.to_vec(),
            flat: NarySmash::new(factors),
            cache,
            gammas: RwLock::new(HashMap::new()),
            full: RwLock::new(HashMap::new()),
        }
    }

    pub fn factors(&self) -> &[PtSpace] {
        &self.factors
    }

    pub fn flat(&self) -> &NarySmash {
        &self.flat
    }

    fn check_tree(&self, t: &ParenTree) -> Result<(), PointedError> {
        t.validate()?;
        if t.leaf_count() != self.factors.len() {
            return Err(PointedError::ArityMismatch {
                expected: t.leaf_count(),
                got: self.factors.len(),
            });
        }
        Ok(())
    }

    pub fn tree_smash(&self, t: &ParenTree) -> Result<Arc<TreeSmash>, PointedError> {
        self.check_tree(t)?;
        Ok(self.smash_slice(t, &self.factors))
    }

    /// Bracketings over all the factors are memoized here rather than in
    /// the shared cache, which only keeps the small ones.
    fn smash_slice(&self, t: &ParenTree, slice: &[PtSpace]) -> Arc<TreeSmash> {
        if slice.len() < self.factors.len() {
            return self.cache.tree_smash(t, slice);
        }
        if let Some(ts) = self.full.read().unwrap().get(t) {
            return ts.clone();
        }
        let ts = self.cache.tree_smash(t, slice);
        self.full.write().unwrap().entry(t.clone()).or_insert(ts).clone()
    }

    /// `ρ_t : ΠX_i -> t(X_1, ..., X_n)`.
    pub fn rho(&self, t: &ParenTree) -> Result<MultiPointedMap, PointedError> {
        let ts = self.tree_smash(t)?;
        Ok(MultiPointedMap::from_fn(
            self.factors.clone(),
            ts.space().clone(),
            |c| ts.eval(c),
        ))
    }

    /// `γ_t`, the factorization of `ρ_t` through `η`.
    pub fn gamma(&self, t: &ParenTree) -> Result<PtMap, PointedError> {
        if let Some(g) = self.gammas.read().unwrap().get(t) {
            return Ok(g.clone());
        }
        let g = self.flat.factorize(&self.rho(t)?)?;
        let mut w = self.gammas.write().unwrap();
        Ok(w.entry(t.clone()).or_insert(g).clone())
    }

    /// The direct comparison `γ_{coarse→fine}` between two bracketed smash
    /// products, for `fine` refining `coarse`.
    pub fn refine(&self, coarse: &ParenTree, fine: &ParenTree) -> Result<PtMap, PointedError> {
        self.check_tree(coarse)?;
        self.check_tree(fine)?;
        if !fine.refines(coarse) {
            return Err(PointedError::NotRefinement {
                finer: fine.to_string(),
                coarser: coarse.to_string(),
            });
        }
        self.refine_rec(coarse, fine)
    }

    fn refine_rec(&self, coarse: &ParenTree, fine: &ParenTree) -> Result<PtMap, PointedError> {
        let (lo, hi) = coarse.interval();
        let slice = &self.factors[lo - 1..hi];
        let children = coarse.children();
        if children.is_empty() {
            return Ok(PtMap::identity(&slice[0]));
        }
        let mut maps = Vec::with_capacity(children.len());
        let mut blocks = Vec::with_capacity(children.len());
        for c in children {
            let (a, b) = c.interval();
            let sub = fine.subtree(a, b).ok_or_else(|| PointedError::NotRefinement {
                finer: fine.to_string(),
                coarser: coarse.to_string(),
            })?;
            maps.push(self.refine_rec(c, sub)?);
            blocks.push((a - lo + 1, b - lo + 1));
        }
        // ∧ of the child comparisons, then the comparison of the outer
        // bracket over the refined child spaces
        let dom = self.smash_slice(&coarse.normalized(), slice);
        let cods: Vec<PtSpace> = maps.iter().map(|m| m.cod().clone()).collect();
        let inner = dom.root_smash().unwrap().map_to(&NarySmash::new(&cods), &maps)?;
        let outer_tree = fine
            .normalized()
            .contract(&blocks)
            .ok_or_else(|| PointedError::Consistency(format!("{fine} has no brackets matching {coarse}")))?;
        let outer = Comparisons::new(&cods, self.cache).gamma(&outer_tree)?;
        inner.then(&outer)
    }

    /// `γ_fine = γ_{coarse→fine} ∘ γ_coarse`, pointwise.
    pub fn check_coherence(
        &self,
        coarse: &ParenTree,
        fine: &ParenTree,
    ) -> Result<Result<(), CoherenceFailure>, PointedError> {
        let direct = self.gamma(fine)?;
        let composite = self.gamma(coarse)?.then(&self.refine(coarse, fine)?)?;
        Ok(first_difference(&direct, &composite).map_or(Ok(()), |p| {
            Err(CoherenceFailure {
                coarse: coarse.to_string(),
                fine: fine.to_string(),
                point: p,
                direct: direct.apply(p),
                composite: composite.apply(p),
            })
        }))
    }

    /// `γ_{t3→t1} = γ_{t2→t1} ∘ γ_{t3→t2}` for `t1` refining `t2` refining
    /// `t3`.
    pub fn check_chain(
        &self,
        t3: &ParenTree,
        t2: &ParenTree,
        t1: &ParenTree,
    ) -> Result<Result<(), CoherenceFailure>, PointedError> {
        let direct = self.refine(t3, t1)?;
        let composite = self.refine(t3, t2)?.then(&self.refine(t2, t1)?)?;
        Ok(first_difference(&direct, &composite).map_or(Ok(()), |p| {
            Err(CoherenceFailure {
                coarse: t3.to_string(),
                fine: t1.to_string(),
                point: p,
                direct: direct.apply(p),
                composite: composite.apply(p),
            })
        }))
    }

    /// The three regularity criteria for the bracketing `t`.
    pub fn regularity(&self, t: &ParenTree) -> Result<RegularityReport, PointedError> {
        let ts = self.tree_smash(t)?;
        let prod = self.flat.product();
        let eta = self.flat.eta_map();
        let rho_mp = self.rho(t)?;
        let rho = CMap::new_unchecked(prod.space().clone(), ts.space().space().clone(), rho_mp.assignment);
        let g = match ts.children() {
            None => CMap::identity(prod.space()),
            Some(children) => {
                let spaces: Vec<FinSpace> = children.iter().map(|c| c.space().space().clone()).collect();
                let cp = Product::new(&spaces);
                let mut coords = vec![0usize; self.factors.len()];
                let mut vals = vec![0usize; children.len()];
                let a = (0..prod.space().len())
                    .map(|p| {
                        coords.copy_from_slice(&prod.decode(p));
                        let mut at = 0;
                        for (j, c) in children.iter().enumerate() {
                            let k = c.leaf_count();
                            vals[j] = c.eval(&coords[at..at + k]);
                            at += k;
                        }
                        cp.encode(&vals)
                    })
                    .collect();
                CMap::new(prod.space().clone(), cp.space().clone(), a)?
            }
        };
        evaluate_criteria(t, &eta, &rho, &g)
    }
}

fn first_difference(a: &PtMap, b: &PtMap) -> Option<usize> {
    if a.dom() != b.dom() || a.cod() != b.cod() {
        return Some(0);
    }
    (0..a.dom().len()).find(|&p| a.apply(p) != b.apply(p))
}

/// `γ_t` for a single bracketing over `factors`.
pub fn comparison(tree: &ParenTree, factors: &[PtSpace]) -> Result<PtMap, PointedError> {
    let cache = SmashCache::default();
    Comparisons::new(factors, &cache).gamma(tree)
}

/// Outcome of the three equivalent regularity criteria for a bracketing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularityReport {
    pub tree: String,
    /// `γ_t` is a homeomorphism.
    pub comparison_invertible: bool,
    /// `ρ_t` is a quotient map.
    pub rho_quotient: bool,
    /// The map `g` into the product of the top-level brackets sends every
    /// `ρ_t`-saturated open to an open.
    pub saturated_images_open: bool,
    /// Points `a, b` of the n-ary smash with `γ(a) <= γ(b)` but not `a <= b`.
    pub inverse_witness: Option<(usize, usize)>,
    /// A relation `u <= v` of the bracketed smash not forced by `ρ_t`.
    pub finality_witness: Option<(usize, usize)>,
    /// A saturated open, as product indices, whose image is not open.
    pub saturated_witness: Option<Vec<usize>>,
    pub generators_checked: usize,
}

impl RegularityReport {
    pub fn regular(&self) -> bool {
        self.comparison_invertible
    }
}

/// Evaluates the criteria on explicit maps: `eta` and `rho` leave the
/// product, `g` maps it onto the product of the top-level brackets so that
/// `rho` factors as `q ∘ g` for the quotient `q` of the root bracket.
///
/// The saturated opens are the preimages of the opens of the final
/// topology of `rho`, which is generated by minimal neighbourhoods; images
/// commute with unions, so checking those generators is exhaustive.
pub fn evaluate_criteria(t: &ParenTree, eta: &CMap, rho: &CMap, g: &CMap) -> Result<RegularityReport, PointedError> {
    let k = eta.cod().len();
    let mut gamma = vec![usize::MAX; k];
    for x in 0..eta.dom().len() {
        let slot = &mut gamma[eta.apply(x)];
        if *slot != usize::MAX && *slot != rho.apply(x) {
            return Err(PointedError::Consistency(format!(
                "rho is not constant on the class of product point {x}"
            )));
        }
        *slot = rho.apply(x);
    }
    let gamma = CMap::new(eta.cod().clone(), rho.cod().clone(), gamma)?;

    let inverse_witness = if gamma.is_bijective() {
        gamma.inverse_discontinuity()
    } else {
        Some((0, 0))
    };
    let comparison_invertible = gamma.is_homeomorphism();
    let rho_quotient = rho.is_quotient_map();
    let finality_witness = rho.finality_witness();

    let fin = rho.final_up_sets();
    let mut saturated_witness = None;
    for v in &fin {
        let w = rho.preimage(v);
        let img = g.image(&w);
        if !g.cod().is_open(&img) {
            saturated_witness = Some(w.ones().collect());
            break;
        }
    }
    let saturated_images_open = saturated_witness.is_none();
    let report = RegularityReport {
        tree: t.to_string(),
        comparison_invertible,
        rho_quotient,
        saturated_images_open,
        inverse_witness,
        finality_witness,
        saturated_witness,
        generators_checked: fin.len(),
    };
    if comparison_invertible != rho_quotient || rho_quotient != saturated_images_open {
        return Err(PointedError::Consistency(format!(
            "regularity criteria disagree for {t}: invertible={comparison_invertible}, \
             quotient={rho_quotient}, saturated={saturated_images_open}"
        )));
    }
    Ok(report)
}

/// Exhaustive form of the saturated-open criterion: scans every open of
/// the product. Exponential; for small cross-checks.
pub fn saturated_images_open_exhaustive(rho: &CMap, g: &CMap) -> bool {
    let mut ok = true;
    rho.dom().for_each_open(|w: &PointSet| {
        if ok && rho.preimage(&rho.image(w)) == *w && !g.cod().is_open(&g.image(w)) {
            ok = false;
        }
    });
    ok
}

pub fn is_regular(tree: &ParenTree, factors: &[PtSpace]) -> Result<RegularityReport, PointedError> {
    let cache = SmashCache::default();
    Comparisons::new(factors, &cache).regularity(tree)
}

/// The set-level associator `κ : X∧(Y∧Z) -> (X∧Y)∧Z`.
#[derive(Clone, Debug)]
pub struct KappaReport {
    pub assignment: Vec<usize>,
    pub continuous: bool,
    pub homeomorphism: bool,
    /// `κ` as a pointed map, when continuous.
    pub map: Option<PtMap>,
}

impl KappaReport {
    /// The triple is associative when `κ` is a homeomorphism.
    pub fn associative(&self) -> bool {
        self.homeomorphism
    }
}

pub fn associator_kappa(x: &PtSpace, y: &PtSpace, z: &PtSpace) -> KappaReport {
    let cache = SmashCache::default();
    associator_kappa_with(x, y, z, &cache)
}

pub fn associator_kappa_with(x: &PtSpace, y: &PtSpace, z: &PtSpace, cache: &SmashCache) -> KappaReport {
    let factors = [x.clone(), y.clone(), z.clone()];
    let right = cache.tree_smash(&ParenTree::right3(), &factors);
    let left = cache.tree_smash(&ParenTree::left3(), &factors);
    let assignment: Vec<usize> = (0..right.space().len())
        .map(|p| match right.leaf_tuple(p) {
            None => left.space().base(),
            Some(t) => left.eval(&t),
        })
        .collect();
    let map = PtMap::new(right.space().clone(), left.space().clone(), assignment.clone()).ok();
    let continuous = map.is_some();
    let homeomorphism = map.as_ref().is_some_and(|m| m.is_homeomorphism());
    KappaReport {
        assignment,
        continuous,
        homeomorphism,
        map,
    }
}

/// `X∧(Y∧X) -> (Y∧X)∧X -> (X∧Y)∧X`, the symmetry of the outer smash
/// followed by the inner symmetry smashed with the identity.
pub fn composed_symmetry(x: &PtSpace, y: &PtSpace) -> Result<PtMap, PointedError> {
    let yx = super::smash::smash(y, x);
    let outer = symmetry(x, yx.space());
    let inner = symmetry(y, x);
    let (_, _, step) = smash_maps(&[inner, PtMap::identity(x)])?;
    outer.then(&step)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finspace::{point_set, FinSpace};
    use crate::pointed::{enumerate_pointed, s0};

    fn sc() -> PtSpace {
        PtSpace::new(FinSpace::sierpinski(), 0).unwrap()
    }

    fn so() -> PtSpace {
        PtSpace::new(FinSpace::sierpinski(), 1).unwrap()
    }

    #[test]
    fn flat_comparison_is_identity() {
        let xs = [sc(), so(), s0()];
        let g = comparison(&ParenTree::flat(3), &xs).unwrap();
        assert_eq!(g, PtMap::identity(g.dom()));
        let g = comparison(&ParenTree::Leaf(1), &xs[..1]).unwrap();
        assert!(g.is_homeomorphism());
    }

    #[test]
    fn ternary_comparisons_follow_the_bracketing() {
        // γ''(x∧y∧z) = (x∧y)∧z and γ'(x∧y∧z) = x∧(y∧z)
        let all = enumerate_pointed(3).unwrap();
        let cache = SmashCache::default();
        for x in all.iter().step_by(2) {
            for y in all.iter().step_by(3) {
                for z in all.iter().step_by(2) {
                    let c = Comparisons::new(&[x.clone(), y.clone(), z.clone()], &cache);
                    let xy = super::super::smash::smash(x, y);
                    let left = c.tree_smash(&ParenTree::left3()).unwrap();
                    let left_outer = left.root_smash().unwrap();
                    let yz = super::super::smash::smash(y, z);
                    let right = c.tree_smash(&ParenTree::right3()).unwrap();
                    let right_outer = right.root_smash().unwrap();
                    let g2 = c.gamma(&ParenTree::left3()).unwrap();
                    let g1 = c.gamma(&ParenTree::right3()).unwrap();
                    for p in c.flat().space().non_base() {
                        let t = c.flat().representative(p).unwrap();
                        assert_eq!(g2.apply(p), left_outer.eta(&[xy.eta(&t[..2]), t[2]]));
                        assert_eq!(g1.apply(p), right_outer.eta(&[t[0], yz.eta(&t[1..])]));
                    }
                }
            }
        }
    }

    #[test]
    fn regular_on_small_triples() {
        let all = enumerate_pointed(3).unwrap();
        for x in all.iter().step_by(3) {
            for y in all.iter().step_by(2) {
                for z in all.iter().step_by(3) {
                    let xs = [x.clone(), y.clone(), z.clone()];
                    for t in ParenTree::all(3) {
                        let r = is_regular(&t, &xs).unwrap();
                        assert!(r.regular() && r.rho_quotient && r.saturated_images_open);
                    }
                }
            }
        }
        assert!(is_regular(&ParenTree::Leaf(1), &[sc()]).unwrap().regular());
    }

    #[test]
    fn generator_check_matches_exhaustive_scan() {
        let all = enumerate_pointed(3).unwrap();
        for x in all.iter().step_by(4) {
            for y in all.iter().step_by(5) {
                let xs = [x.clone(), y.clone(), sc()];
                let cache = SmashCache::default();
                let c = Comparisons::new(&xs, &cache);
                for t in [ParenTree::left3(), ParenTree::right3()] {
                    let r = c.regularity(&t).unwrap();
                    let ts = c.tree_smash(&t).unwrap();
                    let prod = c.flat().product();
                    let rho = CMap::new(
                        prod.space().clone(),
                        ts.space().space().clone(),
                        c.rho(&t).unwrap().assignment,
                    )
                    .unwrap();
                    let kids: Vec<FinSpace> = ts
                        .children()
                        .unwrap()
                        .iter()
                        .map(|k| k.space().space().clone())
                        .collect();
                    let cp = Product::new(&kids);
                    let g: Vec<usize> = (0..prod.space().len())
                        .map(|p| {
                            let v = prod.decode(p);
                            let ch = ts.children().unwrap();
                            let mut at = 0;
                            let vals: Vec<usize> = ch
                                .iter()
                                .map(|k| {
                                    let n = k.leaf_count();
                                    let r = k.eval(&v[at..at + n]);
                                    at += n;
                                    r
                                })
                                .collect();
                            cp.encode(&vals)
                        })
                        .collect();
                    let g = CMap::new(prod.space().clone(), cp.space().clone(), g).unwrap();
                    assert_eq!(saturated_images_open_exhaustive(&rho, &g), r.saturated_images_open);
                }
            }
        }
    }

    #[test]
    fn corrupted_bracket_fails_all_criteria() {
        // (S⁰ ∧ S⁰) replaced by an indiscrete copy on the same carrier
        let x = s0();
        let xy = super::super::smash::smash(&x, &x);
        let bad = PtSpace::new(FinSpace::indiscrete(xy.space().len()), xy.space().base()).unwrap();
        let top = NarySmash::new(&[bad.clone(), x.clone()]);
        let flat = NarySmash::new(&[x.clone(), x.clone(), x.clone()]);
        let prod = flat.product();
        let cp = Product::new(&[bad.space().clone(), x.space().clone()]);
        let rho: Vec<usize> = (0..prod.space().len())
            .map(|p| {
                let c = prod.decode(p);
                top.eta(&[xy.eta(&c[..2]), c[2]])
            })
            .collect();
        let g: Vec<usize> = (0..prod.space().len())
            .map(|p| {
                let c = prod.decode(p);
                cp.encode(&[xy.eta(&c[..2]), c[2]])
            })
            .collect();
        let rho = CMap::new(prod.space().clone(), top.space().space().clone(), rho).unwrap();
        let g = CMap::new(prod.space().clone(), cp.space().clone(), g).unwrap();
        let r = evaluate_criteria(&ParenTree::left3(), &flat.eta_map(), &rho, &g).unwrap();
        assert!(!r.comparison_invertible && !r.rho_quotient && !r.saturated_images_open);
        assert!(r.inverse_witness.is_some() && r.finality_witness.is_some());
        assert_eq!(r.saturated_witness, Some((1..8).collect()));
        assert!(!saturated_images_open_exhaustive(&rho, &g));
    }

    #[test]
    fn disagreeing_criteria_are_fatal() {
        // a quotient map ρ paired with a g that is not compatible with it
        let x = s0();
        let flat = NarySmash::new(&[x.clone(), x.clone()]);
        let prod = flat.product();
        let rho = flat.eta_map();
        let target = FinSpace::indiscrete(prod.space().len());
        let g = CMap::new(prod.space().clone(), target.clone(), (0..prod.space().len()).collect()).unwrap();
        // every image is open in the indiscrete space except proper subsets
        let err = evaluate_criteria(&ParenTree::flat(2), &flat.eta_map(), &rho, &g).unwrap_err();
        assert!(matches!(err, PointedError::Consistency(_)));
        let _ = point_set(1, [0]);
    }

    #[test]
    fn coherence_for_four_factors() {
        let xs = [sc(), so(), s0(), sc()];
        let cache = SmashCache::default();
        let c = Comparisons::new(&xs, &cache);
        let trees = ParenTree::all(4);
        let mut pairs = 0;
        for coarse in &trees {
            for fine in &trees {
                if fine.refines(coarse) {
                    pairs += 1;
                    assert_eq!(c.check_coherence(coarse, fine).unwrap(), Ok(()));
                    for mid in &trees {
                        if mid.refines(coarse) && fine.refines(mid) {
                            assert_eq!(c.check_chain(coarse, mid, fine).unwrap(), Ok(()));
                        }
                    }
                }
            }
        }
        assert!(pairs > trees.len());
        assert!(c
            .refine(&ParenTree::parse("[[1,2],3,4]").unwrap(), &ParenTree::flat(4))
            .is_err());
    }

    #[test]
    fn kappa_and_composed_symmetry() {
        let all = enumerate_pointed(3).unwrap();
        for x in &all {
            for y in all.iter().step_by(2) {
                let k = associator_kappa(x, y, x);
                assert!(k.associative());
                let s = composed_symmetry(x, y).unwrap();
                assert!(s.is_homeomorphism());
                // κ(a∧(y∧b)) = (a∧y)∧b while the symmetry gives (b∧y)∧a
                let cache = SmashCache::default();
                let f = [x.clone(), y.clone(), x.clone()];
                let right = cache.tree_smash(&ParenTree::right3(), &f);
                let left = cache.tree_smash(&ParenTree::left3(), &f);
                assert_eq!(s.dom(), right.space());
                assert_eq!(s.cod(), left.space());
                for p in right.space().non_base() {
                    let t = right.leaf_tuple(p).unwrap();
                    assert_eq!(k.assignment[p], left.eval(&t));
                    assert_eq!(s.apply(p), left.eval(&[t[2], t[1], t[0]]));
                }
            }
        }
    }

    #[test]
    fn cache_retains_only_small_trees() {
        let cache = SmashCache::new(2);
        let xs = [sc(), so(), s0()];
        let c = Comparisons::new(&xs, &cache);
        c.gamma(&ParenTree::left3()).unwrap();
        c.gamma(&ParenTree::right3()).unwrap();
        assert_eq!(cache.len(), 2);
    }
}
