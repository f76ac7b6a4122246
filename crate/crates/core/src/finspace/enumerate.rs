//! Canonical forms and enumeration of finite spaces up to homeomorphism.

use std::collections::BTreeMap;

use rand::Rng;

use super::space::{point_set, PointSet};
use super::{FinSpace, SpaceError};

pub const DEFAULT_MAX_ENUMERATION_POINTS: usize = 5;
const MAX_CANONICAL_POINTS: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationConfig {
    pub max_points: usize,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        EnumerationConfig {
            max_points: DEFAULT_MAX_ENUMERATION_POINTS,
        }
    }
}

/// Lexicographically minimal row-major adjacency matrix of the
/// specialization preorder, over the permutations that list points in
/// ascending `(in-degree, out-degree)` order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub n: usize,
    pub bits: u64,
}

impl CanonicalForm {
    /// The representative space, labelled `0..n`.
    pub fn to_space(&self) -> FinSpace {
        let n = self.n;
        let up = (0..n)
            .map(|x| point_set(n, (0..n).filter(|&y| self.bits >> (63 - (x * n + y)) & 1 == 1)))
            .collect();
        FinSpace::from_up_sets((0..n).map(|i| i.to_string()).collect(), up)
    }
}

pub fn canonical_form(s: &FinSpace) -> Result<CanonicalForm, SpaceError> {
    let n = s.len();
    if n > MAX_CANONICAL_POINTS {
        return Err(SpaceError::CanonicalFormTooLarge(n));
    }
    let sig = s.degree_signature();
    let mut pts: Vec<usize> = (0..n).collect();
    pts.sort_by_key(|&x| sig[x]);
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for &x in &pts {
        match blocks.last_mut() {
            Some(b) if sig[b[0]] == sig[x] => b.push(x),
            _ => blocks.push(vec![x]),
        }
    }
    let mut best = u64::MAX;
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    search(s, &blocks, &mut perm, &mut used, &mut best);
    Ok(CanonicalForm { n, bits: best })
}

fn encode(s: &FinSpace, perm: &[usize]) -> u64 {
    let n = perm.len();
    let mut bits = 0u64;
    for (i, &x) in perm.iter().enumerate() {
        for (j, &y) in perm.iter().enumerate() {
            if s.leq(x, y) {
                bits |= 1 << (63 - (i * n + j));
            }
        }
    }
    bits
}

/// Prefix bits for the first `k` rows/cols restricted to the leading
/// `k × k` block; used to prune permutations whose prefix already loses.
fn prefix_beats(s: &FinSpace, perm: &[usize], n: usize, best: u64) -> bool {
    // Compare the entries (i, j) with i, j < k, in row-major order of the
    // full matrix: those among the first rows are fully determined only
    // when both indices are placed, so compare row by row up to the first
    // row with an unplaced column.
    let k = perm.len();
    for i in 0..k {
        for j in 0..n {
            if j >= k {
                return true;
            }
            let bit = (s.leq(perm[i], perm[j]) as u64) << (63 - (i * n + j));
            let best_bit = best & (1 << (63 - (i * n + j)));
            if bit < best_bit {
                return true;
            }
            if bit > best_bit {
                return false;
            }
        }
    }
    true
}

fn search(s: &FinSpace, blocks: &[Vec<usize>], perm: &mut Vec<usize>, used: &mut [bool], best: &mut u64) {
    let n = used.len();
    if perm.len() == n {
        let code = encode(s, perm);
        if code < *best {
            *best = code;
        }
        return;
    }
    if *best != u64::MAX && !prefix_beats(s, perm, n, *best) {
        return;
    }
    // the block that position `perm.len()` belongs to
    let mut pos = perm.len();
    let mut block = 0;
    while pos >= blocks[block].len() {
        pos -= blocks[block].len();
        block += 1;
    }
    for &x in &blocks[block] {
        if !used[x] {
            used[x] = true;
            perm.push(x);
            search(s, blocks, perm, used, best);
            perm.pop();
            used[x] = false;
        }
    }
}

/// One representative per homeomorphism class of `n`-point spaces, in
/// ascending canonical order. Representatives are labelled `0..n`.
pub fn enumerate_spaces(n: usize, config: &EnumerationConfig) -> Result<Vec<FinSpace>, SpaceError> {
    if n == 0 || n > config.max_points || n > MAX_CANONICAL_POINTS {
        return Err(SpaceError::EnumerationBound {
            requested: n,
            bound: config.max_points.min(MAX_CANONICAL_POINTS),
        });
    }
    let mut level: BTreeMap<CanonicalForm, ()> = BTreeMap::new();
    level.insert(canonical_form(&FinSpace::point())?, ());
    for _ in 2..=n {
        let mut next = BTreeMap::new();
        for form in level.keys() {
            for ext in one_point_extensions(&form.to_space()) {
                next.insert(canonical_form(&ext)?, ());
            }
        }
        level = next;
    }
    Ok(level.keys().map(CanonicalForm::to_space).collect())
}

/// Every preorder on `|s| + 1` points whose restriction to the first `|s|`
/// points is `s`.
fn one_point_extensions(s: &FinSpace) -> Vec<FinSpace> {
    let n = s.len();
    let opens = s.opens();
    let closeds: Vec<PointSet> = opens
        .iter()
        .map(|o| {
            let mut c = s.full_set();
            c.difference_with(o);
            c
        })
        .collect();
    let mut out = Vec::new();
    for u in &opens {
        for d in &closeds {
            // x <= p <= y forces x <= y
            if !d.ones().all(|x| u.is_subset(s.up(x))) {
                continue;
            }
            let m = n + 1;
            let mut up: Vec<PointSet> = (0..n)
                .map(|x| {
                    let mut row = s.up(x).clone();
                    row.grow(m);
                    if d.contains(x) {
                        row.insert(n);
                    }
                    row
                })
                .collect();
            let mut new_row = u.clone();
            new_row.grow(m);
            new_row.insert(n);
            up.push(new_row);
            let labels = (0..m).map(|i| i.to_string()).collect();
            out.push(FinSpace::from_up_sets(labels, up));
        }
    }
    out
}

/// Random space on `n` points: each ordered pair is related with
/// probability `density`, then closed up.
pub fn random_preorder_space(n: usize, density: f64, rng: &mut impl Rng) -> FinSpace {
    let mut up: Vec<PointSet> = (0..n).map(|x| point_set(n, [x])).collect();
    for (x, row) in up.iter_mut().enumerate() {
        for y in 0..n {
            if x != y && rng.gen_bool(density) {
                row.insert(y);
            }
        }
    }
    super::preorder::warshall(&mut up);
    FinSpace::from_up_sets((0..n).map(|i| i.to_string()).collect(), up)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finspace::{find_homeomorphism, HomeoSearch};
    use rand::SeedableRng;

    /// Brute-force oracle: all labelled preorders on n points, grouped by
    /// pairwise homeomorphism search.
    fn brute_classes(n: usize) -> usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .filter(|(x, y)| x != y)
            .collect();
        let mut reps: Vec<FinSpace> = Vec::new();
        for mask in 0u32..(1 << pairs.len()) {
            let mut up: Vec<PointSet> = (0..n).map(|x| point_set(n, [x])).collect();
            for (i, &(x, y)) in pairs.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    up[x].insert(y);
                }
            }
            let transitive = (0..n).all(|x| up[x].ones().all(|y| up[y].is_subset(&up[x])));
            if !transitive {
                continue;
            }
            let s = FinSpace::from_up_sets((0..n).map(|i| i.to_string()).collect(), up);
            if !reps.iter().any(|r| find_homeomorphism(r, &s, u64::MAX).0.is_found()) {
                reps.push(s);
            }
        }
        reps.len()
    }

    #[test]
    fn class_counts() {
        let cfg = EnumerationConfig::default();
        let counts: Vec<usize> = (1..=4).map(|n| enumerate_spaces(n, &cfg).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 3, 9, 33]);
        for n in 1..=3 {
            assert_eq!(counts[n - 1], brute_classes(n));
        }
    }

    #[test]
    fn enumeration_bound_refused() {
        let err = enumerate_spaces(6, &EnumerationConfig::default()).unwrap_err();
        assert_eq!(err, SpaceError::EnumerationBound { requested: 6, bound: 5 });
    }

    #[test]
    fn canonical_form_is_invariant() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..50 {
            let s = random_preorder_space(5, 0.3, &mut rng);
            let c = canonical_form(&s).unwrap();
            let t = c.to_space();
            assert_eq!(canonical_form(&t).unwrap(), c);
            assert!(matches!(find_homeomorphism(&s, &t, u64::MAX).0, HomeoSearch::Found(_)));
        }
    }

    #[test]
    fn representatives_pairwise_distinct() {
        let reps = enumerate_spaces(3, &EnumerationConfig::default()).unwrap();
        for i in 0..reps.len() {
            for j in i + 1..reps.len() {
                assert!(!find_homeomorphism(&reps[i], &reps[j], u64::MAX).0.is_found());
            }
        }
    }
}
