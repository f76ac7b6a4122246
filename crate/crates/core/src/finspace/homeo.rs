//! Homeomorphism search.
//!
//! Finite homeomorphisms are order-isomorphisms of the specialization
//! preorders. The search assigns points one at a time, restricted to
//! candidates of the same colour under joint colour refinement, and checks
//! the relation against every earlier assignment in both directions.

use std::collections::HashMap;

use super::{CMap, FinSpace};

/// Node budget used when the caller has no opinion.
pub const DEFAULT_HOMEO_BUDGET: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomeoSearch {
    Found(CMap),
    /// The search space was exhausted, or an invariant differs.
    NotHomeomorphic(Mismatch),
    /// The node budget ran out before a decision.
    Inconclusive,
}

impl HomeoSearch {
    pub fn found(&self) -> Option<&CMap> {
        match self {
            HomeoSearch::Found(m) => Some(m),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, HomeoSearch::Found(_))
    }
}

/// Why two spaces were told apart.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mismatch {
    PointCount,
    RelationSize,
    DegreeMultiset,
    Colouring,
    Pinning,
    Exhausted,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub refinement_rounds: usize,
}

pub fn find_homeomorphism(a: &FinSpace, b: &FinSpace, budget: u64) -> (HomeoSearch, SearchStats) {
    find_homeomorphism_pinned(a, b, &[], budget)
}

/// Searches for a homeomorphism sending `pins[i].0` to `pins[i].1`.
pub fn find_homeomorphism_pinned(
    a: &FinSpace,
    b: &FinSpace,
    pins: &[(usize, usize)],
    budget: u64,
) -> (HomeoSearch, SearchStats) {
    let mut stats = SearchStats::default();
    let no = |m| HomeoSearch::NotHomeomorphic(m);
    if a.len() != b.len() {
        return (no(Mismatch::PointCount), stats);
    }
    if a.relation_size() != b.relation_size() {
        return (no(Mismatch::RelationSize), stats);
    }
    let mut da = a.degree_signature();
    let mut db = b.degree_signature();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return (no(Mismatch::DegreeMultiset), stats);
    }
    let n = a.len();
    let (ca, cb, rounds) = joint_colours(a, b, pins);
    stats.refinement_rounds = rounds;
    let mut ha = ca.clone();
    let mut hb = cb.clone();
    ha.sort_unstable();
    hb.sort_unstable();
    if ha != hb {
        return (no(Mismatch::Colouring), stats);
    }
    for &(x, y) in pins {
        if x >= n || y >= n || ca[x] != cb[y] {
            return (no(Mismatch::Pinning), stats);
        }
    }

    // Smallest colour classes first keeps the branching low.
    let mut class_size: HashMap<usize, usize> = HashMap::new();
    for &c in &ca {
        *class_size.entry(c).or_default() += 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    let pinned: Vec<bool> = (0..n).map(|x| pins.iter().any(|p| p.0 == x)).collect();
    order.sort_by_key(|&x| (!pinned[x], class_size[&ca[x]], ca[x], x));

    let mut f = vec![usize::MAX; n];
    let mut used = vec![false; n];
    for &(x, y) in pins {
        if f[x] != usize::MAX && f[x] != y || f[x] == usize::MAX && used[y] {
            return (no(Mismatch::Pinning), stats);
        }
        f[x] = y;
        used[y] = true;
    }
    let mut search = Search {
        a,
        b,
        ca: &ca,
        cb: &cb,
        order: &order,
        f,
        used,
        budget,
        stats: &mut stats,
    };
    match search.extend(0) {
        Some(true) => {
            let m = CMap::new_unchecked(a.clone(), b.clone(), search.f.clone());
            debug_assert!(m.is_homeomorphism());
            (HomeoSearch::Found(m), stats)
        }
        Some(false) => (no(Mismatch::Exhausted), stats),
        None => (HomeoSearch::Inconclusive, stats),
    }
}

struct Search<'a> {
    a: &'a FinSpace,
    b: &'a FinSpace,
    ca: &'a [usize],
    cb: &'a [usize],
    order: &'a [usize],
    f: Vec<usize>,
    used: Vec<bool>,
    budget: u64,
    stats: &'a mut SearchStats,
}

impl Search<'_> {
    /// `Some(found)`, or `None` when the budget is exhausted.
    fn extend(&mut self, depth: usize) -> Option<bool> {
        if depth == self.order.len() {
            return Some(self.consistent_all());
        }
        let x = self.order[depth];
        if self.f[x] != usize::MAX {
            if !self.consistent(x, self.f[x], depth) {
                return Some(false);
            }
            return self.extend(depth + 1);
        }
        for y in 0..self.b.len() {
            if self.used[y] || self.cb[y] != self.ca[x] {
                continue;
            }
            self.stats.nodes += 1;
            if self.stats.nodes > self.budget {
                return None;
            }
            if !self.consistent(x, y, depth) {
                continue;
            }
            self.f[x] = y;
            self.used[y] = true;
            match self.extend(depth + 1) {
                Some(true) => return Some(true),
                Some(false) => {}
                None => return None,
            }
            self.f[x] = usize::MAX;
            self.used[y] = false;
        }
        Some(false)
    }

    /// Checks `x -> y` against the points placed before `depth`.
    fn consistent(&self, x: usize, y: usize, depth: usize) -> bool {
        self.order[..depth].iter().all(|&z| {
            let w = self.f[z];
            w == usize::MAX || (self.a.leq(x, z) == self.b.leq(y, w) && self.a.leq(z, x) == self.b.leq(w, y))
        })
    }

    fn consistent_all(&self) -> bool {
        let n = self.a.len();
        (0..n).all(|x| (0..n).all(|z| self.a.leq(x, z) == self.b.leq(self.f[x], self.f[z])))
    }
}

/// Colour refinement run on both spaces with a shared palette, so equal
/// colours are comparable across spaces. Pinned pairs get private colours.
fn joint_colours(a: &FinSpace, b: &FinSpace, pins: &[(usize, usize)]) -> (Vec<usize>, Vec<usize>, usize) {
    let n = a.len();
    let init = |s: &FinSpace, side: usize| -> Vec<(usize, usize, usize, usize)> {
        let sig = s.degree_signature();
        (0..n)
            .map(|x| {
                let pin = pins
                    .iter()
                    .position(|p| if side == 0 { p.0 == x } else { p.1 == x })
                    .map_or(0, |i| i + 1);
                let equiv = s.up(x).ones().filter(|&y| s.leq(y, x)).count();
                (pin, sig[x].0, sig[x].1, equiv)
            })
            .collect()
    };
    let mut palette: HashMap<Vec<usize>, usize> = HashMap::new();
    let intern = |key: Vec<usize>, palette: &mut HashMap<Vec<usize>, usize>| {
        let next = palette.len();
        *palette.entry(key).or_insert(next)
    };
    let ia = init(a, 0);
    let ib = init(b, 1);
    let mut ca: Vec<usize> = ia
        .iter()
        .map(|t| intern(vec![t.0, t.1, t.2, t.3], &mut palette))
        .collect();
    let mut cb: Vec<usize> = ib
        .iter()
        .map(|t| intern(vec![t.0, t.1, t.2, t.3], &mut palette))
        .collect();
    let mut rounds = 0;
    loop {
        rounds += 1;
        let mut next_palette: HashMap<Vec<usize>, usize> = HashMap::new();
        let refine = |s: &FinSpace, c: &[usize], pal: &mut HashMap<Vec<usize>, usize>| -> Vec<usize> {
            (0..n)
                .map(|x| {
                    let mut ups: Vec<usize> = s.up(x).ones().map(|y| c[y]).collect();
                    let mut downs: Vec<usize> = (0..n).filter(|&y| s.leq(y, x)).map(|y| c[y]).collect();
                    ups.sort_unstable();
                    downs.sort_unstable();
                    let mut key = vec![c[x], usize::MAX];
                    key.extend(ups);
                    key.push(usize::MAX);
                    key.extend(downs);
                    let next = pal.len();
                    *pal.entry(key).or_insert(next)
                })
                .collect()
        };
        let na = refine(a, &ca, &mut next_palette);
        let nb = refine(b, &cb, &mut next_palette);
        let classes = |c: &[usize], d: &[usize]| {
            let mut s: Vec<usize> = c.iter().chain(d).copied().collect();
            s.sort_unstable();
            s.dedup();
            s.len()
        };
        let stable = classes(&na, &nb) == classes(&ca, &cb);
        ca = na;
        cb = nb;
        if stable || rounds > 2 * n + 2 {
            break;
        }
    }
    (ca, cb, rounds)
}
