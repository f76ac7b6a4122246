//! Products, subspaces, sums and quotients.

use fixedbitset::FixedBitSet;

use super::space::{point_set, PointSet};
use super::{CMap, FinSpace, SpaceError};

/// A finite product `A_1 × ... × A_n` with mixed-radix point indexing: the
/// first factor is the most significant digit.
#[derive(Clone, Debug)]
pub struct Product {
    space: FinSpace,
    factors: Vec<FinSpace>,
    strides: Vec<usize>,
}

impl Product {
    /// The product of zero factors is the one-point space.
    pub fn new(factors: &[FinSpace]) -> Self {
        Product::with_labels(factors, |labels| format!("({})", labels.join(",")))
    }

    /// Product with a custom point-label function over the factor labels.
    pub fn with_labels(factors: &[FinSpace], label: impl Fn(&[&str]) -> String) -> Self {
        let n = factors.len();
        let mut strides = vec![1usize; n];
        for i in (0..n.saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * factors[i + 1].len();
        }
        let total: usize = factors.iter().map(|f| f.len()).product();
        let mut labels = Vec::with_capacity(total);
        let mut up = Vec::with_capacity(total);
        let mut digits = vec![0usize; n];
        for _ in 0..total {
            let parts: Vec<&str> = digits.iter().zip(factors).map(|(&d, f)| f.label(d)).collect();
            labels.push(label(&parts));
            // U_(x_1..x_n) = U_x1 × ... × U_xn
            let mut cells = vec![0usize];
            for (i, f) in factors.iter().enumerate() {
                let mut next = Vec::with_capacity(cells.len() * f.up(digits[i]).count_ones(..));
                for &c in &cells {
                    for y in f.up(digits[i]).ones() {
                        next.push(c + y * strides[i]);
                    }
                }
                cells = next;
            }
            up.push(point_set(total, cells));
            for i in (0..n).rev() {
                digits[i] += 1;
                if digits[i] < factors[i].len() {
                    break;
                }
                digits[i] = 0;
            }
        }
        Product {
            space: FinSpace::from_up_sets(labels, up),
            factors: factors.to_vec(),
            strides,
        }
    }

    pub fn space(&self) -> &FinSpace {
        &self.space
    }

    pub fn factors(&self) -> &[FinSpace] {
        &self.factors
    }

    pub fn arity(&self) -> usize {
        self.factors.len()
    }

    pub fn encode(&self, coords: &[usize]) -> usize {
        coords.iter().zip(&self.strides).map(|(c, s)| c * s).sum()
    }

    pub fn decode(&self, index: usize) -> Vec<usize> {
        self.strides
            .iter()
            .zip(&self.factors)
            .map(|(s, f)| (index / s) % f.len())
            .collect()
    }

    pub fn coord(&self, index: usize, i: usize) -> usize {
        (index / self.strides[i]) % self.factors[i].len()
    }

    pub fn projection(&self, i: usize) -> CMap {
        let a = (0..self.space.len()).map(|p| self.coord(p, i)).collect();
        CMap::new_unchecked(self.space.clone(), self.factors[i].clone(), a)
    }

    /// The unique map `T -> ΠA_i` with the given components; `None` when the
    /// components do not share a domain.
    pub fn pairing(&self, components: &[CMap]) -> Option<CMap> {
        let dom = components.first()?.dom().clone();
        if components.len() != self.arity()
            || components.iter().any(|c| *c.dom() != dom)
            || components.iter().zip(&self.factors).any(|(c, f)| c.cod() != f)
        {
            return None;
        }
        let a = (0..dom.len())
            .map(|t| {
                let coords: Vec<usize> = components.iter().map(|c| c.apply(t)).collect();
                self.encode(&coords)
            })
            .collect();
        Some(CMap::new_unchecked(dom, self.space.clone(), a))
    }

    /// `f_1 × ... × f_n : ΠA_i -> ΠB_i`.
    pub fn map_product(&self, target: &Product, maps: &[CMap]) -> Option<CMap> {
        if maps.len() != self.arity() || target.arity() != self.arity() {
            return None;
        }
        for (i, m) in maps.iter().enumerate() {
            if *m.dom() != self.factors[i] || *m.cod() != target.factors[i] {
                return None;
            }
        }
        let a = (0..self.space.len())
            .map(|p| {
                let coords: Vec<usize> = (0..self.arity()).map(|i| maps[i].apply(self.coord(p, i))).collect();
                target.encode(&coords)
            })
            .collect();
        Some(CMap::new_unchecked(self.space.clone(), target.space.clone(), a))
    }
}

/// The subspace on `carrier` (trace topology) and its inclusion. Points keep
/// their relative order.
pub fn subspace(s: &FinSpace, carrier: &PointSet) -> Result<(FinSpace, CMap), SpaceError> {
    let members: Vec<usize> = carrier.ones().filter(|&x| x < s.len()).collect();
    if members.is_empty() {
        return Err(SpaceError::EmptyCarrier);
    }
    let k = members.len();
    let mut pos = vec![usize::MAX; s.len()];
    for (i, &x) in members.iter().enumerate() {
        pos[x] = i;
    }
    let up = members
        .iter()
        .map(|&x| point_set(k, s.up(x).ones().filter(|&y| pos[y] != usize::MAX).map(|y| pos[y])))
        .collect();
    let labels = members.iter().map(|&x| s.label(x).to_string()).collect();
    let sub = FinSpace::from_up_sets(labels, up);
    let inc = CMap::new_unchecked(sub.clone(), s.clone(), members);
    Ok((sub, inc))
}

/// Topological sum; points of the `i`-th summand come after those of
/// earlier summands. Returns the sum and the coproduct injections.
pub fn disjoint_union(parts: &[FinSpace]) -> (FinSpace, Vec<CMap>) {
    let total: usize = parts.iter().map(|p| p.len()).sum();
    let mut labels = Vec::with_capacity(total);
    let mut up = Vec::with_capacity(total);
    let mut offset = 0;
    let mut offsets = Vec::new();
    for p in parts {
        offsets.push(offset);
        for x in 0..p.len() {
            labels.push(p.label(x).to_string());
            up.push(point_set(total, p.up(x).ones().map(|y| y + offset)));
        }
        offset += p.len();
    }
    let sum = FinSpace::from_up_sets(labels, up);
    let injections = parts
        .iter()
        .zip(offsets)
        .map(|(p, off)| CMap::new_unchecked(p.clone(), sum.clone(), (off..off + p.len()).collect()))
        .collect();
    (sum, injections)
}

/// A quotient space together with its projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub space: FinSpace,
    pub projection: CMap,
    /// Members of each block, ascending.
    pub blocks: Vec<Vec<usize>>,
}

/// Quotient by a partition given as explicit blocks. Blocks are numbered in
/// the order given.
pub fn quotient(s: &FinSpace, partition: &[Vec<usize>]) -> Result<Quotient, SpaceError> {
    let n = s.len();
    let mut class = vec![usize::MAX; n];
    for (b, block) in partition.iter().enumerate() {
        if block.is_empty() {
            return Err(SpaceError::BadPartition(format!("block {b} is empty")));
        }
        for &x in block {
            if x >= n {
                return Err(SpaceError::BadPartition(format!("block {b} names unknown point {x}")));
            }
            if class[x] != usize::MAX {
                return Err(SpaceError::BadPartition(format!(
                    "point {x} lies in blocks {} and {b}",
                    class[x]
                )));
            }
            class[x] = b;
        }
    }
    if let Some(x) = class.iter().position(|&c| c == usize::MAX) {
        return Err(SpaceError::BadPartition(format!("point {x} is not covered")));
    }
    Ok(quotient_by_classes(s, &class, partition.len(), |members| {
        default_block_label(s, members)
    }))
}

fn default_block_label(s: &FinSpace, members: &[usize]) -> String {
    if members.len() == 1 {
        s.label(members[0]).to_string()
    } else {
        let parts: Vec<&str> = members.iter().map(|&x| s.label(x)).collect();
        format!("[{}]", parts.join(","))
    }
}

/// Quotient by a class assignment `class[x] ∈ 0..k` (every class must be
/// inhabited). Labels come from `label(members_of_block)`.
pub fn quotient_by_classes(s: &FinSpace, class: &[usize], k: usize, label: impl Fn(&[usize]) -> String) -> Quotient {
    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); k];
    for (x, &c) in class.iter().enumerate() {
        blocks[c].push(x);
    }
    debug_assert!(blocks.iter().all(|b| !b.is_empty()));
    let mut rel: Vec<FixedBitSet> = (0..k).map(|b| point_set(k, [b])).collect();
    for x in 0..s.len() {
        for y in s.up(x).ones() {
            rel[class[x]].insert(class[y]);
        }
    }
    super::preorder::warshall(&mut rel);
    let labels = blocks.iter().map(|b| label(b)).collect();
    let space = FinSpace::from_up_sets(labels, rel);
    let projection = CMap::new_unchecked(s.clone(), space.clone(), class.to_vec());
    Quotient {
        space,
        projection,
        blocks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sierpinski_squared_has_six_opens() {
        let s = FinSpace::sierpinski();
        let p = Product::new(&[s.clone(), s]);
        assert_eq!(p.space().len(), 4);
        // brute force: union-closure of open rectangles
        let s = FinSpace::sierpinski();
        let opens = s.opens();
        let mut family: Vec<PointSet> = Vec::new();
        for u in &opens {
            for v in &opens {
                let rect = point_set(4, u.ones().flat_map(|a| v.ones().map(move |b| a * 2 + b)));
                family.push(rect);
            }
        }
        let mut closed = family.clone();
        loop {
            let mut grew = false;
            for i in 0..closed.len() {
                for j in 0..closed.len() {
                    let mut u = closed[i].clone();
                    u.union_with(&closed[j]);
                    if !closed.contains(&u) {
                        closed.push(u);
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        closed.sort();
        closed.dedup();
        assert_eq!(closed.len(), 6);
        let mut ours = p.space().opens();
        ours.sort();
        assert_eq!(ours, closed);
    }

    #[test]
    fn product_with_point_is_identity() {
        let s = FinSpace::sierpinski();
        let p = Product::new(&[s.clone(), FinSpace::point()]);
        let proj = p.projection(0);
        assert!(proj.is_homeomorphism());
    }

    #[test]
    fn discrete_product_is_discrete() {
        let p = Product::new(&[FinSpace::discrete(2), FinSpace::discrete(2)]);
        assert_eq!(p.space().relation_size(), 4);
        assert_eq!(p.space().open_count(), Some(16));
    }

    #[test]
    fn projections_are_continuous_and_pairing_factors() {
        let a = FinSpace::sierpinski();
        let b = FinSpace::discrete(2);
        let p = Product::new(&[a.clone(), b.clone()]);
        for i in 0..2 {
            let pr = p.projection(i);
            assert!(CMap::new(pr.dom().clone(), pr.cod().clone(), pr.assignment().to_vec()).is_ok());
        }
        let t = FinSpace::sierpinski();
        let f = CMap::new(t.clone(), a.clone(), vec![0, 1]).unwrap();
        let g = CMap::new(t.clone(), b.clone(), vec![1, 1]).unwrap();
        let h = p.pairing(&[f.clone(), g.clone()]).unwrap();
        assert_eq!(h.then(&p.projection(0)).unwrap(), f);
        assert_eq!(h.then(&p.projection(1)).unwrap(), g);
    }

    #[test]
    fn subspace_traces() {
        let s = FinSpace::sierpinski();
        let (sub, inc) = subspace(&s, &point_set(2, [1])).unwrap();
        assert_eq!(sub.len(), 1);
        assert_eq!(inc.assignment(), &[1]);
        let (full, inc) = subspace(&s, &s.full_set()).unwrap();
        assert_eq!(full, s);
        assert!(inc.is_homeomorphism());
        assert_eq!(subspace(&s, &s.empty_set()).unwrap_err(), SpaceError::EmptyCarrier);
    }

    #[test]
    fn diagonal_of_diamond_is_sierpinski() {
        let s = FinSpace::sierpinski();
        let p = Product::new(&[s.clone(), s.clone()]);
        let diag = point_set(4, [p.encode(&[0, 0]), p.encode(&[1, 1])]);
        let (d, _) = subspace(p.space(), &diag).unwrap();
        assert_eq!(d.up_sets(), s.up_sets());
    }

    #[test]
    fn quotient_examples() {
        let s = FinSpace::sierpinski();
        let q = quotient(&s, &[vec![0], vec![1]]).unwrap();
        assert!(q.projection.is_homeomorphism());
        let q = quotient(&s, &[vec![0, 1]]).unwrap();
        assert_eq!(q.space.len(), 1);
        assert!(q.projection.is_quotient_map());
    }

    #[test]
    fn smash_of_sierpinski_as_quotient() {
        // Sierpinski² with the block {(a,a),(a,b),(b,a)} collapsed
        let s = FinSpace::sierpinski();
        let p = Product::new(&[s.clone(), s.clone()]);
        let wedge = vec![p.encode(&[0, 0]), p.encode(&[0, 1]), p.encode(&[1, 0])];
        let q = quotient(p.space(), &[wedge, vec![p.encode(&[1, 1])]]).unwrap();
        assert_eq!(q.space.up_sets(), s.up_sets());
        // a block-set is open iff its preimage is open, both directions
        for mask in 0..4usize {
            let v = point_set(2, (0..2).filter(|b| mask & (1 << b) != 0));
            assert_eq!(q.space.is_open(&v), p.space().is_open(&q.projection.preimage(&v)));
        }
    }

    #[test]
    fn bad_partitions() {
        let s = FinSpace::discrete(3);
        assert!(matches!(
            quotient(&s, &[vec![0, 1], vec![1, 2]]),
            Err(SpaceError::BadPartition(_))
        ));
        assert!(matches!(quotient(&s, &[vec![0, 1]]), Err(SpaceError::BadPartition(_))));
    }

    #[test]
    fn disjoint_union_keeps_summands_apart() {
        let (sum, inj) = disjoint_union(&[FinSpace::sierpinski(), FinSpace::point()]);
        assert_eq!(sum.len(), 3);
        assert!(!sum.leq(0, 2) && !sum.leq(2, 0) && sum.leq(0, 1));
        assert_eq!(inj[1].assignment(), &[2]);
    }
}
