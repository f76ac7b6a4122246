//! Exponential spaces `Y^A` of finite spaces and the exponential laws.
//!
//! For finite `A` every subset is compact, so the compact-open topology on
//! `Top(A, Y)` is generated by the sets `{f : f(a) ∈ U}`. That is the
//! Alexandrov topology of the pointwise order `f <= g iff f(a) <= g(a)` for
//! all `a`, which is how the space is built here.

use std::collections::HashMap;

use thiserror::Error;

use crate::finspace::{
    continuous_maps, for_each_continuous_map, point_set, quotient, CMap, FinSpace, PointSet, Product, SpaceError,
};
use crate::pointed::{associator_kappa, smash, symmetry, MultiPointedMap, NarySmash, PointedError, PtMap, PtSpace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExpoError {
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    Pointed(#[from] PointedError),
    #[error("map {0:?} is not a point of the exponential")]
    NotInCarrier(Vec<usize>),
    #[error("{0}")]
    Mismatch(&'static str),
}

/// The exponential `Y^A` (or its pointed version): the continuous maps
/// `A -> Y` as points, ordered pointwise.
#[derive(Clone, Debug)]
pub struct ExpSpace {
    dom: FinSpace,
    cod: FinSpace,
    maps: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    space: FinSpace,
    base: Option<usize>,
}

impl ExpSpace {
    fn build(dom: &FinSpace, cod: &FinSpace, maps: Vec<Vec<usize>>, base: Option<usize>) -> Self {
        let k = maps.len();
        let up = maps
            .iter()
            .map(|f| {
                point_set(
                    k,
                    (0..k).filter(|&j| f.iter().zip(&maps[j]).all(|(&u, &v)| cod.leq(u, v))),
                )
            })
            .collect();
        let labels = maps
            .iter()
            .map(|f| format!("<{}>", f.iter().map(|&y| cod.label(y)).collect::<Vec<_>>().join(",")))
            .collect();
        let space = FinSpace::from_up_sets(labels, up);
        let index = maps.iter().enumerate().map(|(i, f)| (f.clone(), i)).collect();
        ExpSpace {
            dom: dom.clone(),
            cod: cod.clone(),
            maps,
            index,
            space,
            base,
        }
    }

    pub fn space(&self) -> &FinSpace {
        &self.space
    }

    /// The pointed exponential as a pointed space, at the zero map.
    pub fn pointed(&self) -> Option<PtSpace> {
        self.base.map(|b| PtSpace::new(self.space.clone(), b).unwrap())
    }

    pub fn dom(&self) -> &FinSpace {
        &self.dom
    }

    pub fn cod(&self) -> &FinSpace {
        &self.cod
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn maps(&self) -> &[Vec<usize>] {
        &self.maps
    }

    pub fn map(&self, i: usize) -> &[usize] {
        &self.maps[i]
    }

    pub fn index_of(&self, f: &[usize]) -> Option<usize> {
        self.index.get(f).copied()
    }

    /// `ev : Y^A × A -> Y`.
    pub fn evaluation(&self) -> CMap {
        let p = Product::new(&[self.space.clone(), self.dom.clone()]);
        let a = (0..p.space().len())
            .map(|i| {
                let c = p.decode(i);
                self.maps[c[0]][c[1]]
            })
            .collect();
        CMap::new(p.space().clone(), self.cod.clone(), a).expect("evaluation is continuous")
    }
}

/// `Y^A` on all continuous maps, in lexicographic order.
pub fn exponential(a: &FinSpace, y: &FinSpace) -> ExpSpace {
    ExpSpace::build(a, y, continuous_maps(a, y, &[]), None)
}

/// `Y^A` on the pointed maps, pointed at the zero map.
pub fn pointed_exponential(a: &PtSpace, y: &PtSpace) -> ExpSpace {
    let maps = continuous_maps(a.space(), y.space(), &[(a.base(), y.base())]);
    let zero = vec![y.base(); a.len()];
    let base = maps.iter().position(|f| *f == zero);
    ExpSpace::build(a.space(), y.space(), maps, base)
}

/// `g(x) = f(x, -)` for `f : X × A -> Y`, where `X × A` is the product of
/// `x` and the exponent.
pub fn transpose(x: &FinSpace, e: &ExpSpace, f: &CMap) -> Result<CMap, ExpoError> {
    let p = Product::new(&[x.clone(), e.dom.clone()]);
    if f.dom() != p.space() || f.cod() != &e.cod {
        return Err(ExpoError::Mismatch("transpose expects a map X × A -> Y"));
    }
    let na = e.dom.len();
    let mut g = Vec::with_capacity(x.len());
    for i in 0..x.len() {
        let row = &f.assignment()[i * na..(i + 1) * na];
        g.push(e.index_of(row).ok_or_else(|| ExpoError::NotInCarrier(row.to_vec()))?);
    }
    Ok(CMap::new(x.clone(), e.space.clone(), g)?)
}

/// `f(x, a) = g(x)(a)`.
pub fn untranspose(e: &ExpSpace, g: &CMap) -> Result<CMap, ExpoError> {
    if g.cod() != &e.space {
        return Err(ExpoError::Mismatch("untranspose expects a map into the exponential"));
    }
    let p = Product::new(&[g.dom().clone(), e.dom.clone()]);
    let a = (0..p.space().len())
        .map(|i| {
            let c = p.decode(i);
            e.maps[g.apply(c[0])][c[1]]
        })
        .collect();
    Ok(CMap::new(p.space().clone(), e.cod.clone(), a)?)
}

/// `v^A : Y^A -> Y'^A`, composition with `v : Y -> Y'`.
pub fn post_compose(from: &ExpSpace, to: &ExpSpace, v: &CMap) -> Result<CMap, ExpoError> {
    if v.dom() != &from.cod || v.cod() != &to.cod || from.dom != to.dom {
        return Err(ExpoError::Mismatch("post-composition needs Y^A, Y'^A and Y -> Y'"));
    }
    let a = from
        .maps
        .iter()
        .map(|f| {
            let h: Vec<usize> = f.iter().map(|&y| v.apply(y)).collect();
            to.index_of(&h).ok_or(ExpoError::NotInCarrier(h))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CMap::new(from.space.clone(), to.space.clone(), a)?)
}

/// For `f <= g` in `Y^A`, the map `S × A -> Y` that is `f` on the closed
/// point of the Sierpinski space `S` and `g` on the open point. It is
/// continuous, and its transpose `S -> Y^A` is continuous only for
/// topologies that keep `f <= g`. Hence no strictly finer topology on the
/// carrier admits all transposes.
pub fn finer_topology_witness(e: &ExpSpace, f: usize, g: usize) -> Option<CMap> {
    if !e.space.leq(f, g) {
        return None;
    }
    let s = FinSpace::sierpinski();
    let p = Product::new(&[s, e.dom.clone()]);
    let mut a = e.maps[f].clone();
    a.extend_from_slice(&e.maps[g]);
    CMap::new(p.space().clone(), e.cod.clone(), a).ok()
}

/// Every relation `f < g` of the exponential has a witness, so it carries
/// the finest topology admitting transposes.
pub fn is_finest_admissible(e: &ExpSpace) -> bool {
    (0..e.len()).all(|f| {
        e.space
            .up(f)
            .ones()
            .filter(|&g| g != f)
            .all(|g| finer_topology_witness(e, f, g).is_some())
    })
}

/// Whether every continuous `X × A -> Y` has a continuous transpose.
pub fn transposes_continuous(x: &FinSpace, e: &ExpSpace) -> bool {
    let p = Product::new(&[x.clone(), e.dom.clone()]);
    let mut ok = true;
    for_each_continuous_map(p.space(), &e.cod, &[], |a| {
        if ok {
            let f = CMap::new(p.space().clone(), e.cod.clone(), a.to_vec()).unwrap();
            ok = transpose(x, e, &f).is_ok();
        }
    });
    ok
}

/// The pointed exponential law between `X ∧ A -> Y` and `X -> Y^A`.
#[derive(Clone, Debug)]
pub struct Adjunction {
    x: PtSpace,
    smash: NarySmash,
    exp: ExpSpace,
    exp_pt: PtSpace,
}

/// Hom-set sizes on both sides and whether the transposes are mutually
/// inverse on every element.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct AdjunctionReport {
    pub left: usize,
    pub right: usize,
    pub round_trips: bool,
}

impl AdjunctionReport {
    pub fn holds(&self) -> bool {
        self.left == self.right && self.round_trips
    }
}

impl Adjunction {
    pub fn new(x: &PtSpace, a: &PtSpace, y: &PtSpace) -> Self {
        let exp = pointed_exponential(a, y);
        let exp_pt = exp.pointed().unwrap();
        Adjunction {
            x: x.clone(),
            smash: smash(x, a),
            exp,
            exp_pt,
        }
    }

    pub fn smash(&self) -> &NarySmash {
        &self.smash
    }

    pub fn exponential(&self) -> &ExpSpace {
        &self.exp
    }

    pub fn exponential_space(&self) -> &PtSpace {
        &self.exp_pt
    }

    fn target(&self) -> PtSpace {
        PtSpace::new(self.exp.cod.clone(), self.exp.maps[self.exp.base.unwrap()][0]).unwrap()
    }

    /// `g(x) = f(x ∧ -)`.
    pub fn transpose(&self, f: &PtMap) -> Result<PtMap, ExpoError> {
        if f.dom() != self.smash.space() || f.cod().space() != &self.exp.cod {
            return Err(ExpoError::Mismatch("transpose expects a pointed map X ∧ A -> Y"));
        }
        let na = self.exp.dom.len();
        let mut g = Vec::with_capacity(self.x.len());
        for x in 0..self.x.len() {
            let row: Vec<usize> = (0..na).map(|a| f.apply(self.smash.eta(&[x, a]))).collect();
            g.push(self.exp.index_of(&row).ok_or(ExpoError::NotInCarrier(row))?);
        }
        Ok(PtMap::new(self.x.clone(), self.exp_pt.clone(), g)?)
    }

    /// The factorization of `(x, a) ↦ g(x)(a)` through `X ∧ A`.
    pub fn untranspose(&self, g: &PtMap) -> Result<PtMap, ExpoError> {
        if g.dom() != &self.x || g.cod() != &self.exp_pt {
            return Err(ExpoError::Mismatch("untranspose expects a pointed map X -> Y^A"));
        }
        let phi = MultiPointedMap::from_fn(self.smash.factors().to_vec(), self.target(), |c| {
            self.exp.maps[g.apply(c[0])][c[1]]
        });
        Ok(self.smash.factorize(&phi)?)
    }

    pub fn left_homs(&self) -> Vec<PtMap> {
        pointed_homs(self.smash.space(), &self.target())
    }

    pub fn right_homs(&self) -> Vec<PtMap> {
        pointed_homs(&self.x, &self.exp_pt)
    }

    pub fn check(&self) -> Result<AdjunctionReport, ExpoError> {
        let left = self.left_homs();
        let right = self.right_homs();
        let mut round_trips = true;
        for f in &left {
            round_trips &= self.untranspose(&self.transpose(f)?)? == *f;
        }
        for g in &right {
            round_trips &= self.transpose(&self.untranspose(g)?)? == *g;
        }
        Ok(AdjunctionReport {
            left: left.len(),
            right: right.len(),
            round_trips,
        })
    }
}

/// All pointed maps `x -> y`.
pub fn pointed_homs(x: &PtSpace, y: &PtSpace) -> Vec<PtMap> {
    continuous_maps(x.space(), y.space(), &[(x.base(), y.base())])
        .into_iter()
        .map(|a| PtMap::new(x.clone(), y.clone(), a).unwrap())
        .collect()
}

pub fn count_pointed_homs(x: &PtSpace, y: &PtSpace) -> u64 {
    crate::finspace::count_continuous_maps(x.space(), y.space(), &[(x.base(), y.base())])
}

/// Whether the canonical bijections of an exponential law are
/// homeomorphisms.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ExpIsoReport {
    /// `Y^(A×B) ≅ (Y^B)^A`, resp. `X^(Y∧Z) ≅ (X^Y)^Z`.
    pub curry: bool,
    /// `(Y^A)^B ≅ (Y^B)^A`.
    pub commute: bool,
}

impl ExpIsoReport {
    pub fn holds(&self) -> bool {
        self.curry && self.commute
    }
}

fn is_homeo(dom: &FinSpace, cod: &FinSpace, a: Option<Vec<usize>>) -> bool {
    a.and_then(|a| CMap::new(dom.clone(), cod.clone(), a).ok())
        .is_some_and(|m| m.is_homeomorphism())
}

/// `ψ ↦ (i ↦ (j ↦ ψ(j)(i)))` from `(Y^P)^Q` to `(Y^Q)^P`.
fn swap_arguments(l: &ExpSpace, l_inner: &ExpSpace, r: &ExpSpace, r_inner: &ExpSpace) -> Option<Vec<usize>> {
    l.maps
        .iter()
        .map(|psi| {
            let rows: Option<Vec<usize>> = (0..l_inner.dom.len())
                .map(|i| {
                    let col: Vec<usize> = psi.iter().map(|&f| l_inner.maps[f][i]).collect();
                    r_inner.index_of(&col)
                })
                .collect();
            r.index_of(&rows?)
        })
        .collect()
}

pub fn check_exp_isos(a: &FinSpace, b: &FinSpace, y: &FinSpace) -> ExpIsoReport {
    let p = Product::new(&[a.clone(), b.clone()]);
    let whole = exponential(p.space(), y);
    let yb = exponential(b, y);
    let yba = exponential(a, yb.space());
    let nb = b.len();
    let curry: Option<Vec<usize>> = whole
        .maps
        .iter()
        .map(|phi| {
            let rows: Option<Vec<usize>> = (0..a.len()).map(|i| yb.index_of(&phi[i * nb..(i + 1) * nb])).collect();
            yba.index_of(&rows?)
        })
        .collect();
    let ya = exponential(a, y);
    let yab = exponential(b, ya.space());
    ExpIsoReport {
        curry: is_homeo(whole.space(), yba.space(), curry),
        commute: is_homeo(yab.space(), yba.space(), swap_arguments(&yab, &ya, &yba, &yb)),
    }
}

/// The pointed laws `X^(Y∧Z) ≅ (X^Y)^Z` and `(X^Y)^Z ≅ (X^Z)^Y`.
pub fn check_pointed_exp_isos(x: &PtSpace, y: &PtSpace, z: &PtSpace) -> ExpIsoReport {
    let yz = smash(y, z);
    let whole = pointed_exponential(yz.space(), x);
    let xy = pointed_exponential(y, x);
    let xyz = pointed_exponential(z, &xy.pointed().unwrap());
    let curry: Option<Vec<usize>> = whole
        .maps
        .iter()
        .map(|h| {
            let cols: Option<Vec<usize>> = (0..z.len())
                .map(|c| {
                    let f: Vec<usize> = (0..y.len()).map(|b| h[yz.eta(&[b, c])]).collect();
                    xy.index_of(&f)
                })
                .collect();
            xyz.index_of(&cols?)
        })
        .collect();
    let xz = pointed_exponential(z, x);
    let xzy = pointed_exponential(y, &xz.pointed().unwrap());
    ExpIsoReport {
        curry: is_homeo(whole.space(), xyz.space(), curry),
        commute: is_homeo(xyz.space(), xzy.space(), swap_arguments(&xyz, &xy, &xzy, &xz)),
    }
}

/// The structural homeomorphisms
/// `(X∧Y)∧Z -> X∧(Y∧Z) -> X∧(Z∧Y) -> (X∧Z)∧Y`, or `None` if one of them
/// fails to be a homeomorphism.
pub fn smash_rearrangements(x: &PtSpace, y: &PtSpace, z: &PtSpace) -> Result<Option<[PtMap; 3]>, ExpoError> {
    let k1 = associator_kappa(x, y, z);
    let Some(first) = k1.map.as_ref().and_then(|m| m.inverse()) else {
        return Ok(None);
    };
    let yz = smash(y, z);
    let zy = smash(z, y);
    let outer_from = smash(x, yz.space());
    let outer_to = smash(x, zy.space());
    let second = outer_from.map_to(&outer_to, &[PtMap::identity(x), symmetry(y, z)])?;
    let k2 = associator_kappa(x, z, y);
    let Some(third) = k2.map.filter(|m| m.is_homeomorphism()) else {
        return Ok(None);
    };
    if !second.is_homeomorphism() {
        return Ok(None);
    }
    Ok(Some([first, second, third]))
}

/// Whether `1 × p : X × H -> X × (H/K)` is a quotient map, where `p`
/// collapses the nonempty subset `K` to one point.
pub fn product_with_collapse_is_quotient(x: &FinSpace, h: &FinSpace, k: &PointSet) -> Result<bool, ExpoError> {
    let mut blocks = vec![k.ones().collect::<Vec<_>>()];
    if blocks[0].is_empty() {
        return Err(ExpoError::Mismatch("the collapsed subset must be nonempty"));
    }
    blocks.extend((0..h.len()).filter(|&i| !k.contains(i)).map(|i| vec![i]));
    let q = quotient(h, &blocks)?;
    let src = Product::new(&[x.clone(), h.clone()]);
    let dst = Product::new(&[x.clone(), q.space.clone()]);
    let map = src
        .map_product(&dst, &[CMap::identity(x), q.projection.clone()])
        .ok_or(ExpoError::Mismatch("1 × p is not continuous"))?;
    Ok(map.is_quotient_map())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finspace::{enumerate_spaces, find_homeomorphism, subspace, EnumerationConfig, DEFAULT_HOMEO_BUDGET};
    use crate::pointed::{enumerate_pointed, s0, zero_object};

    fn spaces(max: usize) -> Vec<FinSpace> {
        let cfg = EnumerationConfig::default();
        (1..=max).flat_map(|n| enumerate_spaces(n, &cfg).unwrap()).collect()
    }

    #[test]
    fn small_exponentials() {
        let s = FinSpace::sierpinski();
        let e = exponential(&s, &s);
        assert_eq!(e.len(), 3);
        // constant a <= identity <= constant b
        let ca = e.index_of(&[0, 0]).unwrap();
        let id = e.index_of(&[0, 1]).unwrap();
        let cb = e.index_of(&[1, 1]).unwrap();
        assert!(e.space().leq(ca, id) && e.space().leq(id, cb) && !e.space().leq(cb, ca));
        let d = FinSpace::discrete(2);
        let e = exponential(&d, &d);
        assert_eq!(e.len(), 4);
        assert!((0..4).all(|i| e.space().up(i).count_ones(..) == 1));
        for y in spaces(3) {
            let e = exponential(&FinSpace::point(), &y);
            assert!(find_homeomorphism(e.space(), &y, DEFAULT_HOMEO_BUDGET).0.is_found());
        }
    }

    #[test]
    fn pointed_exponential_is_the_subspace_of_pointed_maps() {
        let all = enumerate_pointed(3).unwrap();
        for a in &all {
            for y in &all {
                let pe = pointed_exponential(a, y);
                let full = exponential(a.space(), y.space());
                let carrier = point_set(
                    full.len(),
                    (0..full.len()).filter(|&i| full.map(i)[a.base()] == y.base()),
                );
                let (sub, inc) = subspace(full.space(), &carrier).unwrap();
                assert_eq!(sub.len(), pe.len());
                for i in 0..pe.len() {
                    assert_eq!(full.map(inc.apply(i)), pe.map(i));
                    for j in 0..pe.len() {
                        assert_eq!(sub.leq(i, j), pe.space().leq(i, j));
                    }
                }
            }
        }
        let s = PtSpace::new(FinSpace::sierpinski(), 0).unwrap();
        // pointed self-maps of the Sierpinski space fixing a: const a, identity
        assert_eq!(pointed_exponential(&s, &s).len(), 2);
        assert_eq!(pointed_exponential(&zero_object(), &s).len(), 1);
        assert_eq!(pointed_exponential(&s, &zero_object()).len(), 1);
    }

    #[test]
    fn evaluation_and_transposes() {
        let sp = spaces(2);
        for a in &sp {
            for y in &sp {
                let e = exponential(a, y);
                let ev = e.evaluation();
                let id = CMap::identity(e.space());
                assert_eq!(untranspose(&e, &id).unwrap(), ev);
                assert_eq!(transpose(e.space(), &e, &ev).unwrap(), id);
                for x in spaces(3) {
                    assert!(transposes_continuous(&x, &e));
                }
                assert!(is_finest_admissible(&e));
            }
        }
    }

    #[test]
    fn finer_topology_loses_a_transpose() {
        let s = FinSpace::sierpinski();
        let e = exponential(&s, &s);
        let ca = e.index_of(&[0, 0]).unwrap();
        let cb = e.index_of(&[1, 1]).unwrap();
        let w = finer_topology_witness(&e, ca, cb).unwrap();
        let g = transpose(&s, &e, &w).unwrap();
        // the discrete topology on the same carrier is strictly finer
        let fine = e.space().relabel(e.space().labels().to_vec());
        let discrete = FinSpace::discrete_labeled(fine.labels().to_vec());
        assert!(CMap::new(s.clone(), discrete, g.assignment().to_vec()).is_err());
        assert!(finer_topology_witness(&e, cb, ca).is_none());
    }

    #[test]
    fn pointed_adjunction_on_small_spaces() {
        let all = enumerate_pointed(2).unwrap();
        for x in &all {
            for a in &all {
                for y in &all {
                    let adj = Adjunction::new(x, a, y);
                    let r = adj.check().unwrap();
                    assert!(r.holds(), "{r:?}");
                    let z = PtMap::zero(adj.smash().space(), y);
                    assert!(adj.transpose(&z).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn counit_round_trip() {
        // X = Y^A and g = identity: untranspose(g) is evaluation on X ∧ A
        let a = PtSpace::new(FinSpace::sierpinski(), 1).unwrap();
        let y = PtSpace::new(FinSpace::sierpinski(), 0).unwrap();
        let e = pointed_exponential(&a, &y).pointed().unwrap();
        let adj = Adjunction::new(&e, &a, &y);
        let id = PtMap::identity(&e);
        let ev = adj.untranspose(&id).unwrap();
        assert_eq!(adj.transpose(&ev).unwrap(), id);
        for p in adj.smash().space().non_base() {
            let c = adj.smash().representative(p).unwrap();
            assert_eq!(ev.apply(p), adj.exponential().map(c[0])[c[1]]);
        }
    }

    #[test]
    fn naturality_of_the_transpose() {
        let all = enumerate_pointed(3).unwrap();
        let a = &all[2];
        for x in all.iter().step_by(4) {
            for y in all.iter().step_by(3) {
                for y2 in all.iter().step_by(5) {
                    let adj = Adjunction::new(x, a, y);
                    let adj2 = Adjunction::new(x, a, y2);
                    let vs = pointed_homs(y, y2);
                    let v_exp = post_compose(adj.exponential(), adj2.exponential(), vs.last().unwrap().cmap()).unwrap();
                    for f in adj.left_homs().iter().take(6) {
                        let v = vs.last().unwrap();
                        let lhs = adj2.transpose(&f.then(v).unwrap()).unwrap();
                        let rhs = adj.transpose(f).unwrap();
                        assert_eq!(lhs.assignment(), rhs.cmap().then(&v_exp).unwrap().assignment());
                    }
                }
                for x2 in all.iter().step_by(5) {
                    let adj = Adjunction::new(x, a, y);
                    let adj2 = Adjunction::new(x2, a, y);
                    for u in pointed_homs(x2, x).iter().take(4) {
                        let (_, _, ua) = crate::pointed::smash_maps(&[u.clone(), PtMap::identity(a)]).unwrap();
                        for f in adj.left_homs().iter().take(4) {
                            let lhs = adj2.transpose(&ua.then(f).unwrap()).unwrap();
                            let rhs = u.then(&adj.transpose(f).unwrap()).unwrap();
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn exponential_laws() {
        let s = FinSpace::sierpinski();
        assert!(check_exp_isos(&s, &s, &s).holds());
        let sp = spaces(2);
        for a in &sp {
            for b in &sp {
                for y in &sp {
                    assert!(check_exp_isos(a, b, y).holds());
                }
            }
        }
        let all = enumerate_pointed(3).unwrap();
        for x in all.iter().step_by(2) {
            for y in all.iter().step_by(3) {
                for z in all.iter().step_by(3) {
                    assert!(check_pointed_exp_isos(x, y, z).holds());
                }
            }
        }
    }

    #[test]
    fn adjunction_with_a_smash_exponent() {
        let s = PtSpace::new(FinSpace::sierpinski(), 0).unwrap();
        let t = PtSpace::new(FinSpace::sierpinski(), 1).unwrap();
        let yz = smash(&t, &s);
        let adj = Adjunction::new(&s0(), yz.space(), &t);
        assert!(adj.check().unwrap().holds());
        let adj = Adjunction::new(&t, yz.space(), &s);
        assert!(adj.check().unwrap().holds());
    }

    #[test]
    fn rearrangements_are_homeomorphisms() {
        let all = enumerate_pointed(3).unwrap();
        for x in all.iter().step_by(2) {
            for y in all.iter().step_by(2) {
                for z in all.iter().step_by(3) {
                    let maps = smash_rearrangements(x, y, z).unwrap().unwrap();
                    assert!(maps.iter().all(|m| m.is_homeomorphism()));
                    assert_eq!(maps[0].cod(), maps[1].dom());
                    assert_eq!(maps[1].cod(), maps[2].dom());
                }
            }
        }
    }

    #[test]
    fn collapse_times_identity_is_quotient() {
        let sp = spaces(3);
        for x in &sp {
            for h in &sp {
                for mask in 1u32..(1 << h.len()) {
                    let k = point_set(h.len(), (0..h.len()).filter(|&i| mask >> i & 1 == 1));
                    assert!(product_with_collapse_is_quotient(x, h, &k).unwrap());
                }
            }
        }
        let h = FinSpace::sierpinski();
        assert!(product_with_collapse_is_quotient(&h, &h, &h.empty_set()).is_err());
    }
}
