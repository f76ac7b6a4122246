use super::space::{point_set, PointSet};
use super::{FinSpace, SpaceError};

/// A reflexive, transitive relation on a labelled point list.
///
/// `up(x)` holds every `y` with `x <= y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Preorder {
    labels: Vec<String>,
    up: Vec<PointSet>,
}

impl Preorder {
    /// Validates a boolean matrix (`relation[x][y]` means `x <= y`).
    pub fn new(labels: Vec<String>, relation: &[Vec<bool>]) -> Result<Self, SpaceError> {
        let n = labels.len();
        if relation.len() != n || relation.iter().any(|r| r.len() != n) {
            return Err(SpaceError::AssignmentLength {
                expected: n,
                got: relation.len(),
            });
        }
        let up: Vec<PointSet> = relation
            .iter()
            .map(|row| point_set(n, row.iter().enumerate().filter(|(_, &b)| b).map(|(j, _)| j)))
            .collect();
        Preorder::from_up_sets(labels, up)
    }

    pub fn from_up_sets(labels: Vec<String>, up: Vec<PointSet>) -> Result<Self, SpaceError> {
        for (x, u) in up.iter().enumerate() {
            if !u.contains(x) {
                return Err(SpaceError::NotReflexive(x));
            }
        }
        for (x, u) in up.iter().enumerate() {
            for y in u.ones() {
                if !up[y].is_subset(u) {
                    let z = up[y].ones().find(|&z| !u.contains(z)).unwrap();
                    return Err(SpaceError::NotTransitive(x, y, z));
                }
            }
        }
        Ok(Preorder { labels, up })
    }

    pub(crate) fn from_up_sets_unchecked(labels: Vec<String>, up: Vec<PointSet>) -> Self {
        Preorder { labels, up }
    }

    /// Reflexive-transitive closure of an arbitrary relation.
    pub fn closure_of(labels: Vec<String>, mut up: Vec<PointSet>) -> Self {
        let n = labels.len();
        for (x, u) in up.iter_mut().enumerate() {
            u.grow(n);
            u.insert(x);
        }
        warshall(&mut up);
        Preorder { labels, up }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn up_sets(&self) -> &[PointSet] {
        &self.up
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn to_space(&self) -> FinSpace {
        FinSpace::from_preorder(self)
    }

    /// Boolean adjacency matrix.
    pub fn matrix(&self) -> Vec<Vec<bool>> {
        let n = self.len();
        (0..n).map(|x| (0..n).map(|y| self.leq(x, y)).collect()).collect()
    }
}

/// In-place transitive closure of rows `rel[x] = {y : x R y}`.
pub(crate) fn warshall(rel: &mut [PointSet]) {
    let n = rel.len();
    for k in 0..n {
        let row_k = rel[k].clone();
        for x in 0..n {
            if x != k && rel[x].contains(k) {
                rel[x].union_with(&row_k);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn sierpinski_gives_two_chain() {
        let p = FinSpace::sierpinski().specialization_preorder();
        assert_eq!(p.matrix(), vec![vec![true, true], vec![false, true]]);
    }

    #[test]
    fn discrete_gives_antichain() {
        let p = FinSpace::discrete(3).specialization_preorder();
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(p.leq(x, y), x == y);
            }
        }
    }

    #[test]
    fn indiscrete_gives_complete_relation() {
        let p = FinSpace::indiscrete(3).specialization_preorder();
        assert!(p.matrix().iter().flatten().all(|&b| b));
    }

    #[test]
    fn chain_opens_are_up_sets() {
        let p = Preorder::new(names(2), &[vec![true, true], vec![false, true]]).unwrap();
        let s = p.to_space();
        let opens: Vec<Vec<usize>> = s.opens().iter().map(|o| o.ones().collect()).collect();
        assert_eq!(opens, vec![vec![], vec![0, 1], vec![1]]);
    }

    #[test]
    fn antichain_has_all_subsets_open() {
        let p = Preorder::new(names(2), &[vec![true, false], vec![false, true]]).unwrap();
        assert_eq!(p.to_space().open_count(), Some(4));
    }

    #[test]
    fn diamond_has_six_opens() {
        // brute force: count up-closed subsets of the 2x2 diamond
        // bottom 0 < 1, 2 < 3
        let rel = vec![
            vec![true, true, true, true],
            vec![false, true, false, true],
            vec![false, false, true, true],
            vec![false, false, false, true],
        ];
        let mut brute = 0;
        for mask in 0u32..16 {
            let ok = (0..4).all(|x| mask & (1 << x) == 0 || (0..4).all(|y| !rel[x][y] || mask & (1 << y) != 0));
            if ok {
                brute += 1;
            }
        }
        assert_eq!(brute, 6);
        let p = Preorder::new(names(4), &rel).unwrap();
        assert_eq!(p.to_space().open_count(), Some(brute));
    }

    #[test]
    fn rejects_non_transitive() {
        let rel = vec![
            vec![true, true, false],
            vec![false, true, true],
            vec![false, false, true],
        ];
        assert_eq!(Preorder::new(names(3), &rel), Err(SpaceError::NotTransitive(0, 1, 2)));
    }

    #[test]
    fn closure_of_relation() {
        let up = vec![point_set(3, [1]), point_set(3, [2]), point_set(3, [])];
        let p = Preorder::closure_of(names(3), up);
        assert!(p.leq(0, 2) && p.leq(0, 0) && !p.leq(2, 0));
    }
}
