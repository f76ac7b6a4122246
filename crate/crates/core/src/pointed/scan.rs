//! Exhaustive associativity scan over small pointed spaces.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::Serialize;

use super::compare::{associator_kappa_with, CoherenceFailure, Comparisons, SmashCache};
use super::{enumerate_pointed, ParenTree, PointedError, PtSpace};

/// Counts over every ordered triple of classes; `failures` lists the
/// triples (as class indices) where some check failed, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TripleScan {
    pub max_points: usize,
    pub classes: usize,
    pub triples: usize,
    pub left_regular: usize,
    pub right_regular: usize,
    pub kappa_homeomorphisms: usize,
    pub failures: Vec<[usize; 3]>,
}

impl TripleScan {
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Both bracketings regular and `κ` a homeomorphism.
pub fn check_triple(x: &PtSpace, y: &PtSpace, z: &PtSpace, cache: &SmashCache) -> Result<[bool; 3], PointedError> {
    let factors = [x.clone(), y.clone(), z.clone()];
    let cmp = Comparisons::new(&factors, cache);
    let left = cmp.regularity(&ParenTree::left3())?.regular();
    let right = cmp.regularity(&ParenTree::right3())?.regular();
    let kappa = associator_kappa_with(x, y, z, cache).homeomorphism;
    Ok([left, right, kappa])
}

pub fn associativity_scan(max_points: usize) -> Result<TripleScan, PointedError> {
    let classes = enumerate_pointed(max_points)?;
    let k = classes.len();
    let cache = SmashCache::new(2);
    let next = AtomicUsize::new(0);
    let totals = Mutex::new(([0usize; 3], Vec::new(), None::<PointedError>));
    let workers = std::thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(k.max(1));
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= k {
                    return;
                }
                let mut local = [0usize; 3];
                let mut bad = Vec::new();
                let mut err = None;
                for j in 0..k {
                    for l in 0..k {
                        match check_triple(&classes[i], &classes[j], &classes[l], &cache) {
                            Ok(r) => {
                                for (c, ok) in local.iter_mut().zip(r) {
                                    *c += ok as usize;
                                }
                                if r.contains(&false) {
                                    bad.push([i, j, l]);
                                }
                            }
                            Err(e) => err = Some(e),
                        }
                    }
                }
                let mut t = totals.lock().unwrap();
                for (c, v) in t.0.iter_mut().zip(local) {
                    *c += v;
                }
                t.1.extend(bad);
                if t.2.is_none() {
                    t.2 = err;
                }
            });
        }
    });
    let (counts, mut failures, err) = totals.into_inner().unwrap();
    if let Some(e) = err {
        return Err(e);
    }
    failures.sort();
    Ok(TripleScan {
        max_points,
        classes: k,
        triples: k * k * k,
        left_regular: counts[0],
        right_regular: counts[1],
        kappa_homeomorphisms: counts[2],
        failures,
    })
}

/// Every pair `(coarse, fine)` of distinct bracketings of `n` leaves with
/// `fine` refining `coarse`.
pub fn refinement_pairs(n: usize) -> Vec<(ParenTree, ParenTree)> {
    let trees = ParenTree::all(n);
    let mut out = Vec::new();
    for c in &trees {
        for f in &trees {
            if f != c && f.refines(c) {
                out.push((c.clone(), f.clone()));
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoherenceScan {
    pub max_points: usize,
    pub classes: usize,
    pub tuples: usize,
    pub pairs_per_tuple: usize,
    pub checks: usize,
    pub failures: Vec<(Vec<usize>, CoherenceFailure)>,
}

/// `γ_fine = refine(coarse, fine) ∘ γ_coarse` for every 4-tuple of classes
/// with at most `max_points` points and every refinement pair.
pub fn coherence_scan(max_points: usize) -> Result<CoherenceScan, PointedError> {
    let classes = enumerate_pointed(max_points)?;
    let k = classes.len();
    let pairs = refinement_pairs(4);
    let cache = SmashCache::new(3);
    let next = AtomicUsize::new(0);
    let found = Mutex::new((0usize, Vec::new(), None::<PointedError>));
    let workers = std::thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min((k * k).max(1));
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let ij = next.fetch_add(1, Ordering::Relaxed);
                if ij >= k * k {
                    return;
                }
                let (i, j) = (ij / k, ij % k);
                let mut checks = 0;
                let mut bad = Vec::new();
                let mut err = None;
                for l in 0..k {
                    for m in 0..k {
                        let factors = [
                            classes[i].clone(),
                            classes[j].clone(),
                            classes[l].clone(),
                            classes[m].clone(),
                        ];
                        let cmp = Comparisons::new(&factors, &cache);
                        for (c, f) in &pairs {
                            match cmp.check_coherence(c, f) {
                                Ok(Ok(())) => checks += 1,
                                Ok(Err(fail)) => {
                                    checks += 1;
                                    bad.push((vec![i, j, l, m], fail));
                                }
                                Err(e) => err = Some(e),
                            }
                        }
                    }
                }
                let mut t = found.lock().unwrap();
                t.0 += checks;
                t.1.extend(bad);
                if t.2.is_none() {
                    t.2 = err;
                }
            });
        }
    });
    let (checks, mut failures, err) = found.into_inner().unwrap();
    if let Some(e) = err {
        return Err(e);
    }
    failures.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(CoherenceScan {
        max_points,
        classes: k,
        tuples: k.pow(4),
        pairs_per_tuple: pairs.len(),
        checks,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_point_scan() {
        let r = associativity_scan(2).unwrap();
        assert_eq!(r.classes, 5);
        assert_eq!(r.triples, 125);
        assert!(r.all_pass());
        assert_eq!(r.left_regular, 125);
    }

    #[test]
    fn refinement_pair_count() {
        // the flat tree is refined by the other 10; the other five
        // non-binary trees each have two binary refinements
        assert_eq!(refinement_pairs(4).len(), 10 + 5 * 2);
    }

    #[test]
    fn two_point_coherence() {
        let r = coherence_scan(2).unwrap();
        assert_eq!(r.tuples, 625);
        assert_eq!(r.checks, 625 * r.pairs_per_tuple);
        assert!(r.failures.is_empty());
    }
}
