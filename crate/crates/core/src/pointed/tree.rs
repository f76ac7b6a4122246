//! Bracketings of `n` factors.

use std::collections::BTreeSet;
use std::fmt;

use serde_json::Value;

use super::PointedError;

/// A bracketing of the factors `1..n`: leaves carry 1-based factor
/// indices in left-to-right order, internal nodes have at least two
/// children. Serialized as nested arrays, e.g. `[[1,2],3]`; a bare leaf
/// is the number itself.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ParenTree {
    Leaf(usize),
    Node(Vec<ParenTree>),
}

impl ParenTree {
    pub fn parse(text: &str) -> Result<Self, PointedError> {
        let v: Value = serde_json::from_str(text).map_err(|e| PointedError::Tree(e.to_string()))?;
        let t = ParenTree::from_json(&v)?;
        t.validate()?;
        Ok(t)
    }

    fn from_json(v: &Value) -> Result<Self, PointedError> {
        match v {
            Value::Number(n) => n
                .as_u64()
                .filter(|&k| k >= 1)
                .map(|k| ParenTree::Leaf(k as usize))
                .ok_or_else(|| PointedError::Tree(format!("leaf {n} is not a positive integer"))),
            Value::Array(items) => {
                if items.len() < 2 {
                    return Err(PointedError::Tree(format!(
                        "a bracket needs at least two entries, found {}",
                        items.len()
                    )));
                }
                Ok(ParenTree::Node(
                    items.iter().map(ParenTree::from_json).collect::<Result<_, _>>()?,
                ))
            }
            other => Err(PointedError::Tree(format!("unexpected JSON value {other}"))),
        }
    }

    /// Leaves must read `1, 2, ..., n` from left to right.
    pub fn validate(&self) -> Result<(), PointedError> {
        let leaves = self.leaves();
        if let Some((i, &l)) = leaves.iter().enumerate().find(|(i, &l)| l != i + 1) {
            return Err(PointedError::Tree(format!(
                "leaf at position {} is {l}, expected {}",
                i + 1,
                i + 1
            )));
        }
        self.check_arity()
    }

    fn check_arity(&self) -> Result<(), PointedError> {
        match self {
            ParenTree::Leaf(_) => Ok(()),
            ParenTree::Node(c) if c.len() < 2 => Err(PointedError::Tree("a bracket needs at least two entries".into())),
            ParenTree::Node(c) => c.iter().try_for_each(|t| t.check_arity()),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            ParenTree::Leaf(i) => Value::from(*i),
            ParenTree::Node(c) => Value::Array(c.iter().map(|t| t.to_json()).collect()),
        }
    }

    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            ParenTree::Leaf(i) => out.push(*i),
            ParenTree::Node(c) => c.iter().for_each(|t| t.collect_leaves(out)),
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            ParenTree::Leaf(_) => 1,
            ParenTree::Node(c) => c.iter().map(|t| t.leaf_count()).sum(),
        }
    }

    /// First leaf index of this subtree.
    pub fn first_leaf(&self) -> usize {
        match self {
            ParenTree::Leaf(i) => *i,
            ParenTree::Node(c) => c[0].first_leaf(),
        }
    }

    /// `[lo, hi]` leaf interval covered by this subtree.
    pub fn interval(&self) -> (usize, usize) {
        let lo = self.first_leaf();
        (lo, lo + self.leaf_count() - 1)
    }

    /// `1 ∧ ... ∧ n` with no inner brackets.
    pub fn flat(n: usize) -> Self {
        if n == 1 {
            ParenTree::Leaf(1)
        } else {
            ParenTree::Node((1..=n).map(ParenTree::Leaf).collect())
        }
    }

    /// `X ∧ (Y ∧ Z)`.
    pub fn right3() -> Self {
        ParenTree::parse("[1,[2,3]]").unwrap()
    }

    /// `(X ∧ Y) ∧ Z`.
    pub fn left3() -> Self {
        ParenTree::parse("[[1,2],3]").unwrap()
    }

    /// Leaf intervals of the internal nodes. A bracketing is determined by
    /// this laminar family.
    pub fn intervals(&self) -> BTreeSet<(usize, usize)> {
        let mut out = BTreeSet::new();
        self.collect_intervals(&mut out);
        out
    }

    fn collect_intervals(&self, out: &mut BTreeSet<(usize, usize)>) {
        if let ParenTree::Node(c) = self {
            out.insert(self.interval());
            c.iter().for_each(|t| t.collect_intervals(out));
        }
    }

    /// `self` refines `coarser` when every bracket of `coarser` is also a
    /// bracket of `self`.
    pub fn refines(&self, coarser: &ParenTree) -> bool {
        self.leaf_count() == coarser.leaf_count() && coarser.intervals().is_subset(&self.intervals())
    }

    /// The subtree covering exactly the interval `[lo, hi]`, if any.
    pub fn subtree(&self, lo: usize, hi: usize) -> Option<&ParenTree> {
        if self.interval() == (lo, hi) {
            return Some(self);
        }
        match self {
            ParenTree::Leaf(_) => None,
            ParenTree::Node(c) => c.iter().find_map(|t| {
                let (a, b) = t.interval();
                if a <= lo && hi <= b {
                    t.subtree(lo, hi)
                } else {
                    None
                }
            }),
        }
    }

    /// The same shape with leaves renumbered from 1.
    pub fn normalized(&self) -> ParenTree {
        let shift = self.first_leaf() - 1;
        self.shifted(shift)
    }

    fn shifted(&self, by: usize) -> ParenTree {
        match self {
            ParenTree::Leaf(i) => ParenTree::Leaf(i - by),
            ParenTree::Node(c) => ParenTree::Node(c.iter().map(|t| t.shifted(by)).collect()),
        }
    }

    /// Replaces each block (a subtree whose interval is listed in
    /// `blocks`, in order) by a single leaf, numbered from 1. `None` when a
    /// block is not a subtree.
    pub fn contract(&self, blocks: &[(usize, usize)]) -> Option<ParenTree> {
        if let Some(j) = blocks.iter().position(|&b| b == self.interval()) {
            return Some(ParenTree::Leaf(j + 1));
        }
        match self {
            ParenTree::Leaf(_) => None,
            ParenTree::Node(c) => Some(ParenTree::Node(
                c.iter().map(|t| t.contract(blocks)).collect::<Option<_>>()?,
            )),
        }
    }

    pub fn children(&self) -> &[ParenTree] {
        match self {
            ParenTree::Leaf(_) => &[],
            ParenTree::Node(c) => c,
        }
    }

    /// Every bracketing of `n` leaves, in a fixed order.
    pub fn all(n: usize) -> Vec<ParenTree> {
        let mut out = all_over(1, n);
        out.sort();
        out
    }
}

/// All trees on leaves `lo..=hi`.
fn all_over(lo: usize, hi: usize) -> Vec<ParenTree> {
    if lo == hi {
        return vec![ParenTree::Leaf(lo)];
    }
    // choose the root's composition of [lo, hi] into >= 2 consecutive parts
    let mut out = Vec::new();
    let mut parts = Vec::new();
    compositions(lo, hi, &mut parts, &mut out);
    out
}

fn compositions(start: usize, hi: usize, parts: &mut Vec<(usize, usize)>, out: &mut Vec<ParenTree>) {
    if start > hi {
        if parts.len() >= 2 {
            let choices: Vec<Vec<ParenTree>> = parts.iter().map(|&(a, b)| all_over(a, b)).collect();
            let mut idx = vec![0usize; choices.len()];
            loop {
                out.push(ParenTree::Node(
                    idx.iter().zip(&choices).map(|(&i, c)| c[i].clone()).collect(),
                ));
                let mut k = idx.len();
                loop {
                    if k == 0 {
                        return;
                    }
                    k -= 1;
                    idx[k] += 1;
                    if idx[k] < choices[k].len() {
                        break;
                    }
                    idx[k] = 0;
                }
            }
        }
        return;
    }
    for end in start..=hi {
        // a single part spanning the whole range is not a bracket
        if parts.is_empty() && end == hi {
            continue;
        }
        parts.push((start, end));
        compositions(end + 1, hi, parts, out);
        parts.pop();
    }
}

impl fmt::Display for ParenTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_json())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Number of plane trees with n leaves and no unary nodes, from the
    /// recurrence `(n+1) s(n+1) = 3(2n-1) s(n) - (n-2) s(n-1)`.
    fn schroder(n: usize) -> usize {
        let mut s = vec![0i64, 1, 1];
        for k in 2..n {
            let k = k as i64;
            let next = (3 * (2 * k - 1) * s[k as usize] - (k - 2) * s[k as usize - 1]) / (k + 1);
            s.push(next);
        }
        s[n] as usize
    }

    #[test]
    fn tree_counts() {
        for n in 1..=6 {
            assert_eq!(ParenTree::all(n).len(), schroder(n), "n = {n}");
        }
        assert_eq!(ParenTree::all(4).len(), 11);
    }

    #[test]
    fn json_round_trip() {
        for t in ParenTree::all(4) {
            let s = t.to_string();
            assert_eq!(ParenTree::parse(&s).unwrap(), t);
        }
        assert_eq!(ParenTree::left3().to_string(), "[[1,2],3]");
        assert_eq!(ParenTree::parse("1").unwrap(), ParenTree::Leaf(1));
    }

    #[test]
    fn rejects_malformed() {
        assert!(ParenTree::parse("[[2,1],3]").is_err());
        assert!(ParenTree::parse("[[1],2]").is_err());
        assert!(ParenTree::parse("[1,\"a\"]").is_err());
        assert!(ParenTree::parse("[0,1]").is_err());
    }

    #[test]
    fn intervals_and_refinement() {
        let flat = ParenTree::flat(3);
        let l = ParenTree::left3();
        let r = ParenTree::right3();
        assert_eq!(l.intervals().into_iter().collect::<Vec<_>>(), vec![(1, 2), (1, 3)]);
        assert!(l.refines(&flat) && r.refines(&flat));
        assert!(!l.refines(&r) && !flat.refines(&l));
        assert!(l.refines(&l));
    }

    #[test]
    fn contraction() {
        let t = ParenTree::parse("[[1,2],[3,4]]").unwrap();
        assert_eq!(t.contract(&[(1, 2), (3, 4)]), Some(ParenTree::flat(2)));
        assert_eq!(
            t.contract(&[(1, 2), (3, 3), (4, 4)]),
            Some(ParenTree::parse("[1,[2,3]]").unwrap())
        );
        assert_eq!(t.contract(&[(1, 3), (4, 4)]), None);
        assert_eq!(t.subtree(3, 4).unwrap().normalized(), ParenTree::flat(2));
    }
}
