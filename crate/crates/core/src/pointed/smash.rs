//! Binary and n-ary smash products and their universal property.

use crate::finspace::{point_set, quotient_by_classes, CMap, FinSpace, PointSet, Product};

use super::radix::Radix;
use super::{s0, PointedError, PtMap, PtSpace};

/// The n-ary smash product `X_1 ∧ ... ∧ X_n`: the product with the
/// coordinate hyperplanes `H = {x : some x_i = 0}` collapsed to the
/// basepoint. Every other class is a single tuple.
///
/// Point 0 is the basepoint; the non-base tuples follow in lexicographic
/// order of their coordinates. For `n = 0` the result is the unit `S⁰` and
/// [`NarySmash::unit_convention`] is set.
#[derive(Clone, Debug)]
pub struct NarySmash {
    factors: Vec<PtSpace>,
    space: PtSpace,
    radix: Radix,
    nb: Radix,
}

/// A map `X_1 × ... × X_n -> Z` given on product indices (mixed radix,
/// first factor most significant). Its validity as a multi-pointed
/// continuous map is checked by [`NarySmash::factorize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPointedMap {
    pub factors: Vec<PtSpace>,
    pub target: PtSpace,
    pub assignment: Vec<usize>,
}

impl MultiPointedMap {
    pub fn from_fn(factors: Vec<PtSpace>, target: PtSpace, f: impl Fn(&[usize]) -> usize) -> Self {
        let radix = Radix::new(factors.iter().map(|x| x.len()).collect());
        let mut coords = vec![0; radix.arity()];
        let assignment = (0..radix.total())
            .map(|p| {
                radix.decode_into(p, &mut coords);
                f(&coords)
            })
            .collect();
        MultiPointedMap {
            factors,
            target,
            assignment,
        }
    }

    pub fn zero(factors: Vec<PtSpace>, target: PtSpace) -> Self {
        let b = target.base();
        MultiPointedMap::from_fn(factors, target, |_| b)
    }
}

pub fn nary_smash(factors: &[PtSpace]) -> NarySmash {
    NarySmash::new(factors)
}

pub fn smash(x: &PtSpace, y: &PtSpace) -> NarySmash {
    NarySmash::new(&[x.clone(), y.clone()])
}

fn wrap(label: &str) -> String {
    if label.contains('∧') {
        format!("({label})")
    } else {
        label.to_string()
    }
}

impl NarySmash {
    pub fn new(factors: &[PtSpace]) -> Self {
        let radix = Radix::new(factors.iter().map(|x| x.len()).collect());
        let nb = Radix::new(factors.iter().map(|x| x.len() - 1).collect());
        if factors.is_empty() {
            return NarySmash {
                factors: Vec::new(),
                space: s0(),
                radix,
                nb,
            };
        }
        let m = nb.total();
        let n = m + 1;
        let k = factors.len();

        // per factor: non-base points in rank order, and which of them lie
        // above / below the basepoint
        let mut tuples: Vec<Vec<usize>> = Vec::with_capacity(m);
        let mut coords = vec![0usize; k];
        for r in 0..m {
            nb.decode_into(r, &mut coords);
            tuples.push(coords.iter().zip(factors).map(|(&c, x)| unrank(x, c)).collect());
        }
        let low: Vec<bool> = tuples
            .iter()
            .map(|t| t.iter().zip(factors).any(|(&a, x)| x.space().leq(a, x.base())))
            .collect();
        let high: Vec<bool> = tuples
            .iter()
            .map(|t| t.iter().zip(factors).any(|(&a, x)| x.space().leq(x.base(), a)))
            .collect();
        let mut high_set = point_set(n, [0]);
        for (r, &h) in high.iter().enumerate() {
            if h {
                high_set.insert(r + 1);
            }
        }
        let mut up: Vec<PointSet> = Vec::with_capacity(n);
        up.push(high_set.clone());
        for (r, t) in tuples.iter().enumerate() {
            // product order among non-base tuples: coordinatewise up-sets
            let mut cells = vec![0usize];
            for (i, (&a, x)) in t.iter().zip(factors).enumerate() {
                let stride = nb.stride(i);
                let ups: Vec<usize> = x
                    .space()
                    .up(a)
                    .ones()
                    .filter(|&b| b != x.base())
                    .map(|b| rank(x, b))
                    .collect();
                let mut next = Vec::with_capacity(cells.len() * ups.len());
                for &c in &cells {
                    for &u in &ups {
                        next.push(c + u * stride);
                    }
                }
                cells = next;
            }
            let mut row = point_set(n, cells.into_iter().map(|c| c + 1));
            debug_assert!(row.contains(r + 1));
            if low[r] {
                row.union_with(&high_set);
            }
            up.push(row);
        }
        let labels: Vec<String> = if k == 1 {
            let x = &factors[0];
            std::iter::once(x.label(x.base()).to_string())
                .chain(tuples.iter().map(|t| x.label(t[0]).to_string()))
                .collect()
        } else {
            std::iter::once("0".to_string())
                .chain(tuples.iter().map(|t| {
                    t.iter()
                        .zip(factors)
                        .map(|(&a, x)| wrap(x.label(a)))
                        .collect::<Vec<_>>()
                        .join("∧")
                }))
                .collect()
        };
        NarySmash {
            factors: factors.to_vec(),
            space: PtSpace::new_unchecked(FinSpace::from_up_sets(labels, up), 0),
            radix,
            nb,
        }
    }

    pub fn space(&self) -> &PtSpace {
        &self.space
    }

    pub fn factors(&self) -> &[PtSpace] {
        &self.factors
    }

    pub fn arity(&self) -> usize {
        self.factors.len()
    }

    /// Set when the empty smash product was requested and the unit `S⁰`
    /// stands in for it.
    pub fn unit_convention(&self) -> bool {
        self.factors.is_empty()
    }

    /// Number of points of the product `ΠX_i`.
    pub fn product_len(&self) -> usize {
        self.radix.total()
    }

    pub fn encode(&self, coords: &[usize]) -> usize {
        self.radix.encode(coords)
    }

    pub fn decode(&self, index: usize) -> Vec<usize> {
        self.radix.decode(index)
    }

    /// `η(x_1, ..., x_n) = x_1 ∧ ... ∧ x_n`.
    pub fn eta(&self, coords: &[usize]) -> usize {
        if self.factors.is_empty() {
            return 0;
        }
        let mut idx = 0;
        for (i, (&c, x)) in coords.iter().zip(&self.factors).enumerate() {
            if c == x.base() {
                return 0;
            }
            idx += rank(x, c) * self.nb.stride(i);
        }
        idx + 1
    }

    pub fn eta_index(&self, product_index: usize) -> usize {
        let coords = self.radix.decode(product_index);
        self.eta(&coords)
    }

    /// The tuple behind a non-base point; `None` for the basepoint.
    pub fn representative(&self, p: usize) -> Option<Vec<usize>> {
        if p == self.space.base() {
            return None;
        }
        if self.factors.is_empty() {
            return Some(Vec::new());
        }
        let ranks = self.nb.decode(p - 1);
        Some(ranks.iter().zip(&self.factors).map(|(&r, x)| unrank(x, r)).collect())
    }

    /// The product `ΠX_i` as a space.
    pub fn product(&self) -> Product {
        let spaces: Vec<FinSpace> = self.factors.iter().map(|x| x.space().clone()).collect();
        Product::new(&spaces)
    }

    /// The product pointed at the tuple of basepoints.
    pub fn pointed_product(&self) -> PtSpace {
        let p = self.product();
        let base = self.encode(&self.factors.iter().map(|x| x.base()).collect::<Vec<_>>());
        PtSpace::new_unchecked(p.space().clone(), base)
    }

    /// `η` as a continuous map on the product.
    pub fn eta_map(&self) -> CMap {
        let p = self.product();
        let a = (0..self.radix.total()).map(|i| self.eta_index(i)).collect();
        CMap::new_unchecked(p.space().clone(), self.space.space().clone(), a)
    }

    /// The hyperplane subspace `H`, as a set of product indices.
    pub fn hyperplanes(&self) -> PointSet {
        let total = self.radix.total();
        if self.factors.is_empty() {
            return point_set(total, []);
        }
        point_set(total, (0..total).filter(|&i| self.eta_index(i) == 0))
    }

    /// The smash product rebuilt literally as the quotient of the product by
    /// `H`, with the same point indexing. Used to cross-check the direct
    /// construction.
    pub fn via_quotient(&self) -> PtSpace {
        let p = self.product();
        let class: Vec<usize> = (0..self.radix.total()).map(|i| self.eta_index(i)).collect();
        let labels = self.space.space().labels().to_vec();
        let q = quotient_by_classes(p.space(), &class, self.space.len(), |members| {
            labels[class[members[0]]].clone()
        });
        PtSpace::new_unchecked(q.space, self.space.base())
    }

    /// The unique pointed `h` with `φ = h ∘ η`, after checking that `φ` is
    /// pointed in each variable and continuous on the product.
    pub fn factorize(&self, phi: &MultiPointedMap) -> Result<PtMap, PointedError> {
        if phi.factors.len() != self.factors.len() {
            return Err(PointedError::ArityMismatch {
                expected: self.factors.len(),
                got: phi.factors.len(),
            });
        }
        if phi.factors != self.factors || phi.assignment.len() != self.radix.total() {
            return Err(PointedError::Consistency(
                "multi-pointed map is not defined on this product".into(),
            ));
        }
        let z = &phi.target;
        if phi.assignment.iter().any(|&v| v >= z.len()) {
            let (point, &target) = phi.assignment.iter().enumerate().find(|(_, &v)| v >= z.len()).unwrap();
            return Err(crate::finspace::SpaceError::AssignmentRange {
                point,
                target,
                cod_len: z.len(),
            }
            .into());
        }
        let mut coords = vec![0usize; self.arity()];
        for p in 0..self.radix.total() {
            self.radix.decode_into(p, &mut coords);
            let on_h = coords.iter().zip(&self.factors).any(|(&c, x)| c == x.base());
            if on_h && phi.assignment[p] != z.base() {
                return Err(PointedError::NotMultiPointed {
                    input: coords.clone(),
                    image: phi.assignment[p],
                });
            }
        }
        if let Some((from, to)) = self.product_discontinuity(&phi.assignment, z.space()) {
            return Err(PointedError::Discontinuous {
                from: self.radix.decode(from),
                to: self.radix.decode(to),
            });
        }
        let mut h = vec![z.base(); self.space.len()];
        for (p, slot) in h.iter_mut().enumerate() {
            if let Some(t) = self.representative(p) {
                *slot = phi.assignment[self.radix.encode(&t)];
            }
        }
        debug_assert!(PtMap::new(self.space.clone(), z.clone(), h.clone()).is_ok());
        Ok(PtMap::new_unchecked(self.space.clone(), z.clone(), h))
    }

    /// First pair of product indices `x <= y`, differing in one coordinate,
    /// whose images are unrelated. The product order is generated by such
    /// single-coordinate steps.
    pub(crate) fn product_discontinuity(&self, f: &[usize], cod: &FinSpace) -> Option<(usize, usize)> {
        let mut coords = vec![0usize; self.arity()];
        for p in 0..self.radix.total() {
            self.radix.decode_into(p, &mut coords);
            for (i, x) in self.factors.iter().enumerate() {
                let c = coords[i];
                for d in x.space().up(c).ones() {
                    if d == c {
                        continue;
                    }
                    let q = p + d * self.radix.stride(i) - c * self.radix.stride(i);
                    if !cod.leq(f[p], f[q]) {
                        return Some((p, q));
                    }
                }
            }
        }
        None
    }

    /// `f_1 ∧ ... ∧ f_n` from this smash product to `target`.
    pub fn map_to(&self, target: &NarySmash, maps: &[PtMap]) -> Result<PtMap, PointedError> {
        if maps.len() != self.arity() || target.arity() != self.arity() {
            return Err(PointedError::ArityMismatch {
                expected: self.arity(),
                got: maps.len(),
            });
        }
        for (i, m) in maps.iter().enumerate() {
            if *m.dom() != self.factors[i] || *m.cod() != target.factors[i] {
                return Err(crate::finspace::SpaceError::NotComposable.into());
            }
        }
        let mut a = vec![target.space.base(); self.space.len()];
        let mut img = vec![0usize; self.arity()];
        for (p, slot) in a.iter_mut().enumerate() {
            if let Some(t) = self.representative(p) {
                for i in 0..t.len() {
                    img[i] = maps[i].apply(t[i]);
                }
                *slot = target.eta(&img);
            }
        }
        PtMap::new(self.space.clone(), target.space.clone(), a)
    }
}

fn rank(x: &PtSpace, a: usize) -> usize {
    if a < x.base() {
        a
    } else {
        a - 1
    }
}

fn unrank(x: &PtSpace, r: usize) -> usize {
    if r < x.base() {
        r
    } else {
        r + 1
    }
}

/// Universal property of `η`: factorizes a multi-pointed continuous map
/// through the n-ary smash product of its factors.
pub fn smash_factorize(phi: &MultiPointedMap) -> Result<PtMap, PointedError> {
    NarySmash::new(&phi.factors).factorize(phi)
}

/// `f_1 ∧ ... ∧ f_n`, with the smash products of the domains and codomains.
pub fn smash_maps(maps: &[PtMap]) -> Result<(NarySmash, NarySmash, PtMap), PointedError> {
    let doms: Vec<PtSpace> = maps.iter().map(|m| m.dom().clone()).collect();
    let cods: Vec<PtSpace> = maps.iter().map(|m| m.cod().clone()).collect();
    let a = NarySmash::new(&doms);
    let b = NarySmash::new(&cods);
    let m = a.map_to(&b, maps)?;
    Ok((a, b, m))
}

/// The symmetry `X ∧ Y -> Y ∧ X`, `x ∧ y ↦ y ∧ x`, obtained by factorizing
/// swap-then-`η`.
pub fn symmetry(x: &PtSpace, y: &PtSpace) -> PtMap {
    let xy = smash(x, y);
    let yx = smash(y, x);
    let phi = MultiPointedMap::from_fn(vec![x.clone(), y.clone()], yx.space().clone(), |c| {
        yx.eta(&[c[1], c[0]])
    });
    xy.factorize(&phi)
        .expect("swap followed by η is bipointed and continuous")
}

/// `X^∧0 = S⁰`, `X^∧(n+1) = X^∧n ∧ X`.
pub fn smash_power(x: &PtSpace, n: usize) -> PtSpace {
    let mut acc = s0();
    for _ in 0..n {
        acc = smash(&acc, x).space().clone();
    }
    acc
}

/// `X^∧0 = S⁰`, `X^∧(n+1) = X ∧ X^∧n`.
pub fn smash_power_left(x: &PtSpace, n: usize) -> PtSpace {
    let mut acc = s0();
    for _ in 0..n {
        acc = smash(x, &acc).space().clone();
    }
    acc
}

pub use super::compare::composed_symmetry;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finspace::{continuous_maps, DEFAULT_HOMEO_BUDGET};
    use crate::pointed::{enumerate_pointed, find_pointed_homeomorphism, wedge, zero_object};

    fn sc() -> PtSpace {
        PtSpace::new(FinSpace::sierpinski(), 0).unwrap()
    }

    #[test]
    fn direct_construction_matches_quotient() {
        let all = enumerate_pointed(3).unwrap();
        for a in &all {
            for b in &all {
                let s = smash(a, b);
                assert_eq!(s.space().space().up_sets(), s.via_quotient().space().up_sets());
            }
        }
        for a in all.iter().step_by(3) {
            for b in all.iter().step_by(4) {
                for c in all.iter().step_by(5) {
                    let s = nary_smash(&[a.clone(), b.clone(), c.clone()]);
                    assert_eq!(s.space().space().up_sets(), s.via_quotient().space().up_sets());
                }
            }
        }
    }

    #[test]
    fn point_counts() {
        let all = enumerate_pointed(3).unwrap();
        for a in &all {
            for b in &all {
                assert_eq!(smash(a, b).space().len(), (a.len() - 1) * (b.len() - 1) + 1);
            }
        }
        let s3 = nary_smash(&[sc(), sc(), sc()]);
        assert_eq!(s3.space().len(), 2);
        assert_eq!(s3.hyperplanes().count_ones(..), 8 - 1);
    }

    #[test]
    fn unit_laws() {
        for x in enumerate_pointed(3).unwrap() {
            let l = smash(&s0(), &x);
            let r = smash(&x, &s0());
            assert!(find_pointed_homeomorphism(l.space(), &x, DEFAULT_HOMEO_BUDGET).is_found());
            assert!(find_pointed_homeomorphism(r.space(), &x, DEFAULT_HOMEO_BUDGET).is_found());
        }
    }

    #[test]
    fn zero_object_annihilates() {
        let s = smash(&zero_object(), &sc());
        assert!(s.space().is_zero());
    }

    #[test]
    fn sierpinski_smash_square() {
        let s = smash(&sc(), &sc());
        assert!(find_pointed_homeomorphism(s.space(), &sc(), DEFAULT_HOMEO_BUDGET).is_found());
    }

    #[test]
    fn nary_edge_cases() {
        let x = sc();
        let one = nary_smash(std::slice::from_ref(&x));
        assert!(find_pointed_homeomorphism(one.space(), &x, DEFAULT_HOMEO_BUDGET).is_found());
        let none = nary_smash(&[]);
        assert!(none.unit_convention());
        assert_eq!(none.space(), &s0());
    }

    #[test]
    fn smash_is_cokernel_of_wedge_inclusion() {
        let all = enumerate_pointed(3).unwrap();
        for a in all.iter().step_by(2) {
            for b in all.iter().step_by(3) {
                let w = wedge(a, b);
                let (c, _) = crate::pointed::cokernel(&w.inclusion);
                let s = smash(a, b);
                assert!(find_pointed_homeomorphism(&c, s.space(), DEFAULT_HOMEO_BUDGET).is_found());
            }
        }
    }

    #[test]
    fn factorize_trivial_cases() {
        let x = sc();
        let y = s0();
        let s = smash(&x, &y);
        let eta = MultiPointedMap {
            factors: vec![x.clone(), y.clone()],
            target: s.space().clone(),
            assignment: (0..s.product_len()).map(|p| s.eta_index(p)).collect(),
        };
        assert_eq!(s.factorize(&eta).unwrap(), PtMap::identity(s.space()));
        let zero = MultiPointedMap::zero(vec![x.clone(), y.clone()], x.clone());
        assert!(s.factorize(&zero).unwrap().is_zero());
    }

    #[test]
    fn factorize_rejects_bad_inputs() {
        let x = sc();
        let s = smash(&x, &x);
        // (0, 1) has a basepoint coordinate but goes to the non-base point
        let phi = MultiPointedMap::from_fn(vec![x.clone(), x.clone()], x.clone(), |c| c[1]);
        assert_eq!(
            s.factorize(&phi),
            Err(PointedError::NotMultiPointed {
                input: vec![0, 1],
                image: 1
            })
        );
        // pointed in each variable but not monotone
        let y = PtSpace::new(FinSpace::sierpinski(), 1).unwrap();
        let s = smash(&y, &y);
        let phi = MultiPointedMap::from_fn(
            vec![y.clone(), y.clone()],
            x.clone(),
            |c| {
                if c == [0, 0] {
                    1
                } else {
                    0
                }
            },
        );
        assert_eq!(
            s.factorize(&phi),
            Err(PointedError::Discontinuous {
                from: vec![0, 0],
                to: vec![1, 0]
            })
        );
        let phi = MultiPointedMap::from_fn(
            vec![y.clone(), y.clone()],
            y.clone(),
            |c| {
                if c == [0, 0] {
                    0
                } else {
                    1
                }
            },
        );
        assert!(s.factorize(&phi).is_ok());
    }

    #[test]
    fn symmetry_is_an_isomorphism() {
        let all = enumerate_pointed(3).unwrap();
        for a in &all {
            for b in &all {
                let t = symmetry(a, b);
                assert!(t.is_homeomorphism());
                let back = symmetry(b, a);
                assert_eq!(t.then(&back).unwrap(), PtMap::identity(t.dom()));
            }
        }
    }

    #[test]
    fn smash_of_maps_is_functorial() {
        let all = enumerate_pointed(3).unwrap();
        let x = &all[5];
        let y = &all[9];
        let z = &all[12];
        let fs: Vec<PtMap> = continuous_maps(x.space(), y.space(), &[(x.base(), y.base())])
            .into_iter()
            .map(|a| PtMap::new(x.clone(), y.clone(), a).unwrap())
            .collect();
        let gs: Vec<PtMap> = continuous_maps(y.space(), z.space(), &[(y.base(), z.base())])
            .into_iter()
            .map(|a| PtMap::new(y.clone(), z.clone(), a).unwrap())
            .collect();
        let (_, _, id) = smash_maps(&[PtMap::identity(x), PtMap::identity(y)]).unwrap();
        assert_eq!(id, PtMap::identity(id.dom()));
        for f in &fs {
            for g in &gs {
                let fg = f.then(g).unwrap();
                let (_, _, lhs) = smash_maps(&[fg.clone(), fg.clone()]).unwrap();
                let (_, _, a) = smash_maps(&[f.clone(), f.clone()]).unwrap();
                let (_, _, b) = smash_maps(&[g.clone(), g.clone()]).unwrap();
                assert_eq!(lhs, a.then(&b).unwrap());
            }
        }
    }

    #[test]
    fn smash_powers() {
        let x = sc();
        assert!(find_pointed_homeomorphism(&smash_power(&x, 1), &x, DEFAULT_HOMEO_BUDGET).is_found());
        assert_eq!(smash_power(&x, 3).len(), 2);
        for n in 0..4 {
            assert!(find_pointed_homeomorphism(&smash_power(&s0(), n), &s0(), DEFAULT_HOMEO_BUDGET).is_found());
        }
        for x in enumerate_pointed(3).unwrap() {
            for n in 0..4 {
                let r = smash_power(&x, n);
                let l = smash_power_left(&x, n);
                assert!(find_pointed_homeomorphism(&r, &l, DEFAULT_HOMEO_BUDGET).is_found());
            }
        }
    }
}
