use std::fmt;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use super::{Preorder, TopologyError};

/// A set of point indices of a finite space.
pub type PointSet = FixedBitSet;

/// Builds a point set of width `n` from indices.
pub fn point_set(n: usize, members: impl IntoIterator<Item = usize>) -> PointSet {
    let mut s = FixedBitSet::with_capacity(n);
    for i in members {
        s.insert(i);
    }
    s
}

/// A finite topological space.
///
/// Finite topologies are Alexandrov, so the space is stored by the minimal
/// open neighbourhood `U_x` of every point; the opens are exactly the sets
/// that are up-closed for the specialization preorder `x <= y iff y ∈ U_x`.
/// The full open lattice is available through [`FinSpace::opens`], which is
/// only sensible for small spaces.
///
/// Values are immutable and cheap to clone.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinSpace {
    inner: Arc<SpaceData>,
}

#[derive(PartialEq, Eq, Hash)]
struct SpaceData {
    labels: Vec<String>,
    up: Vec<PointSet>,
}

impl FinSpace {
    /// Builds a space from minimal open neighbourhoods. The caller guarantees
    /// that `up` is a reflexive-transitive relation.
    pub(crate) fn from_up_sets(labels: Vec<String>, up: Vec<PointSet>) -> Self {
        debug_assert_eq!(labels.len(), up.len());
        debug_assert!(up.iter().enumerate().all(|(i, u)| u.contains(i)));
        FinSpace {
            inner: Arc::new(SpaceData { labels, up }),
        }
    }

    /// Builds a space from an explicit list of opens, validating the axioms.
    pub fn from_opens(labels: Vec<String>, opens: &[Vec<usize>]) -> Result<Self, TopologyError> {
        let n = labels.len();
        let sets = check_topology(n, opens)?;
        // U_x = intersection of the opens containing x; the full set is
        // always among them.
        let mut up: Vec<PointSet> = (0..n).map(|_| point_set(n, 0..n)).collect();
        for s in &sets {
            for x in s.ones() {
                up[x].intersect_with(s);
            }
        }
        Ok(FinSpace::from_up_sets(labels, up))
    }

    pub fn from_preorder(p: &Preorder) -> Self {
        FinSpace::from_up_sets(p.labels().to_vec(), p.up_sets().to_vec())
    }

    pub fn specialization_preorder(&self) -> Preorder {
        Preorder::from_up_sets_unchecked(self.inner.labels.clone(), self.inner.up.clone())
    }

    /// One-point space.
    pub fn point() -> Self {
        FinSpace::discrete_labeled(vec!["0".to_string()])
    }

    pub fn discrete(n: usize) -> Self {
        FinSpace::discrete_labeled((0..n).map(|i| i.to_string()).collect())
    }

    pub fn discrete_labeled(labels: Vec<String>) -> Self {
        let n = labels.len();
        let up = (0..n).map(|i| point_set(n, [i])).collect();
        FinSpace::from_up_sets(labels, up)
    }

    pub fn indiscrete(n: usize) -> Self {
        let up = (0..n).map(|_| point_set(n, 0..n)).collect();
        FinSpace::from_up_sets((0..n).map(|i| i.to_string()).collect(), up)
    }

    /// The Sierpinski space on `{a, b}` with opens `∅, {b}, {a, b}`:
    /// `a` is the closed point.
    pub fn sierpinski() -> Self {
        let up = vec![point_set(2, [0, 1]), point_set(2, [1])];
        FinSpace::from_up_sets(vec!["a".into(), "b".into()], up)
    }

    pub fn len(&self) -> usize {
        self.inner.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.inner.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.inner.labels[i]
    }

    /// Same topology, new point names.
    pub fn relabel(&self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.len(), "relabel: wrong label count");
        FinSpace::from_up_sets(labels, self.inner.up.clone())
    }

    /// Minimal open neighbourhood of `x`.
    pub fn up(&self, x: usize) -> &PointSet {
        &self.inner.up[x]
    }

    pub fn up_sets(&self) -> &[PointSet] {
        &self.inner.up
    }

    /// Specialization order: every open containing `x` contains `y`.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.inner.up[x].contains(y)
    }

    pub fn empty_set(&self) -> PointSet {
        FixedBitSet::with_capacity(self.len())
    }

    pub fn full_set(&self) -> PointSet {
        point_set(self.len(), 0..self.len())
    }

    pub fn is_open(&self, s: &PointSet) -> bool {
        s.ones().all(|x| self.inner.up[x].is_subset(s))
    }

    pub fn is_closed(&self, s: &PointSet) -> bool {
        let mut c = self.full_set();
        c.difference_with(s);
        self.is_open(&c)
    }

    /// Smallest open set containing `s`.
    pub fn up_closure(&self, s: &PointSet) -> PointSet {
        let mut out = self.empty_set();
        for x in s.ones() {
            out.union_with(&self.inner.up[x]);
        }
        out
    }

    /// Topological closure of `s` (smallest closed superset).
    pub fn closure(&self, s: &PointSet) -> PointSet {
        let mut out = self.empty_set();
        for x in 0..self.len() {
            if !self.inner.up[x].is_disjoint(s) {
                out.insert(x);
            }
        }
        out
    }

    /// `(in-degree, out-degree)` of each point in the strict specialization
    /// relation; a homeomorphism invariant.
    pub fn degree_signature(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut indeg = vec![0usize; n];
        let mut outdeg = vec![0usize; n];
        for x in 0..n {
            for y in self.inner.up[x].ones() {
                if x != y {
                    outdeg[x] += 1;
                    indeg[y] += 1;
                }
            }
        }
        indeg.into_iter().zip(outdeg).collect()
    }

    /// Number of related pairs (including the diagonal).
    pub fn relation_size(&self) -> usize {
        self.inner.up.iter().map(|u| u.count_ones(..)).sum()
    }

    /// All open sets, in ascending order of their sorted index lists.
    ///
    /// Exponential in the width of the space; intended for small spaces,
    /// serialization and exhaustive checks.
    pub fn opens(&self) -> Vec<PointSet> {
        let mut out = Vec::new();
        self.for_each_open(|s| out.push(s.clone()));
        out.sort_by_key(|s| s.ones().collect::<Vec<_>>());
        out
    }

    /// Calls `f` on every open set (unordered).
    pub fn for_each_open(&self, mut f: impl FnMut(&PointSet)) {
        let n = self.len();
        let down = self.down_sets();
        // state: 0 = undecided, 1 = in, 2 = out
        let mut state = vec![0u8; n];
        let mut current = self.empty_set();
        self.open_rec(0, &down, &mut state, &mut current, &mut f);
    }

    fn open_rec(
        &self,
        i: usize,
        down: &[PointSet],
        state: &mut Vec<u8>,
        current: &mut PointSet,
        f: &mut impl FnMut(&PointSet),
    ) {
        let n = self.len();
        let mut i = i;
        while i < n && state[i] != 0 {
            i += 1;
        }
        if i == n {
            current.clear();
            for (x, &st) in state.iter().enumerate() {
                if st == 1 {
                    current.insert(x);
                }
            }
            f(current);
            return;
        }
        // include i: everything above i is forced in
        let saved = state.clone();
        let mut ok = true;
        for y in self.inner.up[i].ones() {
            if state[y] == 2 {
                ok = false;
                break;
            }
            state[y] = 1;
        }
        if ok {
            self.open_rec(i + 1, down, state, current, f);
        }
        state.copy_from_slice(&saved);
        // exclude i: everything below i is forced out
        let mut ok = true;
        for y in down[i].ones() {
            if state[y] == 1 {
                ok = false;
                break;
            }
            state[y] = 2;
        }
        if ok {
            self.open_rec(i + 1, down, state, current, f);
        }
        state.copy_from_slice(&saved);
    }

    /// Number of opens, or `None` when the space is too wide to count by
    /// enumeration.
    pub fn open_count(&self) -> Option<u64> {
        if self.len() > 24 {
            return None;
        }
        let mut c = 0u64;
        self.for_each_open(|_| c += 1);
        Some(c)
    }

    /// `down[y]` = points `x` with `x <= y`.
    pub fn down_sets(&self) -> Vec<PointSet> {
        let n = self.len();
        let mut down: Vec<PointSet> = (0..n).map(|_| FixedBitSet::with_capacity(n)).collect();
        for x in 0..n {
            for y in self.inner.up[x].ones() {
                down[y].insert(x);
            }
        }
        down
    }

    /// A literal finite-subcover search: returns indices of members of
    /// `cover` that still cover the space, or `None` when `cover` does not
    /// cover it at all. Every finite space is compact, so a cover always
    /// yields a subcover of at most `len()` members.
    pub fn finite_subcover(&self, cover: &[PointSet]) -> Option<Vec<usize>> {
        let mut chosen = Vec::new();
        let mut covered = self.empty_set();
        for x in 0..self.len() {
            if covered.contains(x) {
                continue;
            }
            let j = cover.iter().position(|u| u.contains(x))?;
            covered.union_with(&cover[j]);
            chosen.push(j);
        }
        Some(chosen)
    }

    /// Compactness as the subcover predicate applied to the cover by all
    /// minimal neighbourhoods, which refines every open cover.
    pub fn is_compact(&self) -> bool {
        let cover: Vec<PointSet> = self.inner.up.clone();
        match self.finite_subcover(&cover) {
            Some(sub) => sub.len() <= self.len(),
            None => false,
        }
    }

    /// DOT rendering of the specialization preorder (edge `x -> y` iff
    /// `x <= y`), transitively reduced. Equivalent points are joined by a
    /// cycle in index order.
    pub fn to_dot(&self, name: &str) -> String {
        let n = self.len();
        let mut out = format!("digraph \"{}\" {{\n", name.replace('"', "\\\""));
        for (i, l) in self.labels().iter().enumerate() {
            out.push_str(&format!("  p{} [label=\"{}\"];\n", i, l.replace('"', "\\\"")));
        }
        // equivalence classes, represented by their least index
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let members: Vec<usize> = (x..n).filter(|&y| self.leq(x, y) && self.leq(y, x)).collect();
            for &m in &members {
                class_of[m] = id;
            }
            classes.push(members);
        }
        let mut edges = Vec::new();
        for members in &classes {
            if members.len() > 1 {
                for w in 0..members.len() {
                    edges.push((members[w], members[(w + 1) % members.len()]));
                }
            }
        }
        for (a, ma) in classes.iter().enumerate() {
            for (b, mb) in classes.iter().enumerate() {
                if a == b || !self.leq(ma[0], mb[0]) {
                    continue;
                }
                let covered = classes
                    .iter()
                    .enumerate()
                    .any(|(c, mc)| c != a && c != b && self.leq(ma[0], mc[0]) && self.leq(mc[0], mb[0]));
                if !covered {
                    edges.push((ma[0], mb[0]));
                }
            }
        }
        edges.sort_unstable();
        for (x, y) in edges {
            out.push_str(&format!("  p{} -> p{};\n", x, y));
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Debug for FinSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel: Vec<Vec<usize>> = self.inner.up.iter().map(|u| u.ones().collect()).collect();
        f.debug_struct("FinSpace")
            .field("labels", &self.inner.labels)
            .field("up", &rel)
            .finish()
    }
}

/// Checks the open-set axioms for a candidate topology on `n` points and
/// returns the opens as point sets.
///
/// Malformed input (an open naming an index `>= n`) and axiom failures are
/// both reported as errors; [`validate_topology`] separates the two.
pub fn check_topology(n: usize, opens: &[Vec<usize>]) -> Result<Vec<PointSet>, TopologyError> {
    if n == 0 {
        return Err(TopologyError::NoPoints);
    }
    let mut sets = Vec::with_capacity(opens.len());
    for (k, o) in opens.iter().enumerate() {
        if let Some(&bad) = o.iter().find(|&&i| i >= n) {
            return Err(TopologyError::UnknownIndex { open: k, index: bad });
        }
        sets.push(point_set(n, o.iter().copied()));
    }
    let full = point_set(n, 0..n);
    if !sets.iter().any(|s| s.is_clear()) {
        return Err(TopologyError::MissingEmpty);
    }
    if !sets.contains(&full) {
        return Err(TopologyError::MissingFull);
    }
    let mut sorted = sets.clone();
    sorted.sort();
    sorted.dedup();
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            let mut u = sets[i].clone();
            u.union_with(&sets[j]);
            if sorted.binary_search(&u).is_err() {
                return Err(TopologyError::NotUnionClosed { first: i, second: j });
            }
            let mut m = sets[i].clone();
            m.intersect_with(&sets[j]);
            if sorted.binary_search(&m).is_err() {
                return Err(TopologyError::NotIntersectionClosed { first: i, second: j });
            }
        }
    }
    Ok(sets)
}

/// `Ok(true)` iff the opens form a topology on `n` points; `Err` only for
/// malformed input.
pub fn validate_topology(n: usize, opens: &[Vec<usize>]) -> Result<bool, TopologyError> {
    match check_topology(n, opens) {
        Ok(_) => Ok(true),
        Err(e @ (TopologyError::NoPoints | TopologyError::UnknownIndex { .. })) => Err(e),
        Err(_) => Ok(false),
    }
}
