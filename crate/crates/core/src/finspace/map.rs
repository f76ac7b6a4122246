use super::space::PointSet;
use super::{FinSpace, SpaceError};

/// A continuous map between finite spaces.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CMap {
    dom: FinSpace,
    cod: FinSpace,
    assignment: Vec<usize>,
}

impl CMap {
    /// Validates totality, range and continuity (monotonicity for the
    /// specialization orders).
    pub fn new(dom: FinSpace, cod: FinSpace, assignment: Vec<usize>) -> Result<Self, SpaceError> {
        check_assignment(&dom, &cod, &assignment)?;
        if let Some((x, y)) = discontinuity(&dom, &cod, &assignment) {
            return Err(SpaceError::Discontinuous { x, y });
        }
        Ok(CMap { dom, cod, assignment })
    }

    /// For maps that are continuous by construction (projections, quotient
    /// maps, factorizations through quotients).
    pub(crate) fn new_unchecked(dom: FinSpace, cod: FinSpace, assignment: Vec<usize>) -> Self {
        debug_assert!(check_assignment(&dom, &cod, &assignment).is_ok());
        debug_assert!(discontinuity(&dom, &cod, &assignment).is_none());
        CMap { dom, cod, assignment }
    }

    pub fn identity(s: &FinSpace) -> Self {
        CMap::new_unchecked(s.clone(), s.clone(), (0..s.len()).collect())
    }

    pub fn constant(dom: &FinSpace, cod: &FinSpace, target: usize) -> Self {
        CMap::new_unchecked(dom.clone(), cod.clone(), vec![target; dom.len()])
    }

    pub fn dom(&self) -> &FinSpace {
        &self.dom
    }

    pub fn cod(&self) -> &FinSpace {
        &self.cod
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn apply(&self, x: usize) -> usize {
        self.assignment[x]
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &CMap) -> Result<CMap, SpaceError> {
        if self.cod != other.dom {
            return Err(SpaceError::NotComposable);
        }
        let assignment = self.assignment.iter().map(|&y| other.assignment[y]).collect();
        Ok(CMap::new_unchecked(self.dom.clone(), other.cod.clone(), assignment))
    }

    pub fn preimage(&self, s: &PointSet) -> PointSet {
        let mut out = self.dom.empty_set();
        for (x, &y) in self.assignment.iter().enumerate() {
            if s.contains(y) {
                out.insert(x);
            }
        }
        out
    }

    pub fn image(&self, s: &PointSet) -> PointSet {
        let mut out = self.cod.empty_set();
        for x in s.ones() {
            out.insert(self.assignment[x]);
        }
        out
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = self.cod.empty_set();
        for &y in &self.assignment {
            hit.insert(y);
        }
        hit.count_ones(..) == self.cod.len()
    }

    pub fn is_injective(&self) -> bool {
        let mut hit = self.cod.empty_set();
        for &y in &self.assignment {
            if hit.contains(y) {
                return false;
            }
            hit.insert(y);
        }
        true
    }

    pub fn is_bijective(&self) -> bool {
        self.dom.len() == self.cod.len() && self.is_injective()
    }

    /// The final preorder on the codomain carrier induced by this map: the
    /// reflexive-transitive closure of the image of the domain order.
    /// Points outside the image are only related to themselves.
    pub fn final_up_sets(&self) -> Vec<PointSet> {
        let m = self.cod.len();
        let mut rel: Vec<PointSet> = (0..m).map(|_| self.cod.empty_set()).collect();
        for y in 0..m {
            rel[y].insert(y);
        }
        for x in 0..self.dom.len() {
            let fx = self.assignment[x];
            for z in self.dom.up(x).ones() {
                rel[fx].insert(self.assignment[z]);
            }
        }
        super::preorder::warshall(&mut rel);
        rel
    }

    /// Surjective and the codomain carries the final topology: a set is open
    /// iff its preimage is.
    pub fn is_quotient_map(&self) -> bool {
        self.is_surjective() && self.final_up_sets() == self.cod.up_sets()
    }

    /// A pair `(a, b)` with `f(a) <= f(b)` in the codomain but no chain in the
    /// domain forcing it, i.e. a relation of the codomain not produced by the
    /// final topology. `None` iff the codomain order equals the final order.
    pub fn finality_witness(&self) -> Option<(usize, usize)> {
        let fin = self.final_up_sets();
        for y in 0..self.cod.len() {
            if let Some(z) = self.cod.up(y).ones().find(|&z| !fin[y].contains(z)) {
                return Some((y, z));
            }
        }
        None
    }

    pub fn is_homeomorphism(&self) -> bool {
        self.is_bijective()
            && self
                .inverse_assignment()
                .is_some_and(|inv| discontinuity(&self.cod, &self.dom, &inv).is_none())
    }

    fn inverse_assignment(&self) -> Option<Vec<usize>> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.cod.len()];
        for (x, &y) in self.assignment.iter().enumerate() {
            inv[y] = x;
        }
        Some(inv)
    }

    /// Inverse of a homeomorphism.
    pub fn inverse(&self) -> Option<CMap> {
        let inv = self.inverse_assignment()?;
        if discontinuity(&self.cod, &self.dom, &inv).is_some() {
            return None;
        }
        Some(CMap::new_unchecked(self.cod.clone(), self.dom.clone(), inv))
    }

    /// A pair `(a, b)` of codomain points with `a <= b` whose preimages are
    /// unrelated: witnesses that the inverse of a bijection is discontinuous.
    pub fn inverse_discontinuity(&self) -> Option<(usize, usize)> {
        let inv = self.inverse_assignment()?;
        discontinuity(&self.cod, &self.dom, &inv)
    }
}

fn check_assignment(dom: &FinSpace, cod: &FinSpace, assignment: &[usize]) -> Result<(), SpaceError> {
    if assignment.len() != dom.len() {
        return Err(SpaceError::AssignmentLength {
            expected: dom.len(),
            got: assignment.len(),
        });
    }
    if let Some((point, &target)) = assignment.iter().enumerate().find(|(_, &t)| t >= cod.len()) {
        return Err(SpaceError::AssignmentRange {
            point,
            target,
            cod_len: cod.len(),
        });
    }
    Ok(())
}

/// Every continuous map `dom -> cod` sending `fixed[i].0` to `fixed[i].1`,
/// as assignments in lexicographic order.
pub fn continuous_maps(dom: &FinSpace, cod: &FinSpace, fixed: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_continuous_map(dom, cod, fixed, |a| out.push(a.to_vec()));
    out
}

/// Visits every continuous map `dom -> cod` honouring `fixed`; points are
/// assigned in index order and each choice is checked against the points
/// already placed.
pub fn for_each_continuous_map(
    dom: &FinSpace,
    cod: &FinSpace,
    fixed: &[(usize, usize)],
    mut visit: impl FnMut(&[usize]),
) {
    let n = dom.len();
    let mut pinned = vec![None; n];
    for &(x, y) in fixed {
        if x >= n || y >= cod.len() || pinned[x].is_some_and(|z| z != y) {
            return;
        }
        pinned[x] = Some(y);
    }
    let mut f = vec![0usize; n];
    rec(dom, cod, &pinned, 0, &mut f, &mut visit);

    fn rec(
        dom: &FinSpace,
        cod: &FinSpace,
        pinned: &[Option<usize>],
        x: usize,
        f: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]),
    ) {
        if x == f.len() {
            visit(f);
            return;
        }
        let choices: Vec<usize> = match pinned[x] {
            Some(y) => vec![y],
            None => (0..cod.len()).collect(),
        };
        for y in choices {
            let ok = (0..x).all(|z| (!dom.leq(z, x) || cod.leq(f[z], y)) && (!dom.leq(x, z) || cod.leq(y, f[z])));
            if ok {
                f[x] = y;
                rec(dom, cod, pinned, x + 1, f, visit);
            }
        }
    }
}

/// Number of continuous maps `dom -> cod` honouring `fixed`.
pub fn count_continuous_maps(dom: &FinSpace, cod: &FinSpace, fixed: &[(usize, usize)]) -> u64 {
    let mut count = 0;
    for_each_continuous_map(dom, cod, fixed, |_| count += 1);
    count
}

/// First pair `x <= y` whose images are unrelated.
pub(crate) fn discontinuity(dom: &FinSpace, cod: &FinSpace, f: &[usize]) -> Option<(usize, usize)> {
    for x in 0..dom.len() {
        let target = cod.up(f[x]);
        if let Some(y) = dom.up(x).ones().find(|&y| !target.contains(f[y])) {
            return Some((x, y));
        }
    }
    None
}
