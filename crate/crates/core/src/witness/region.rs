//! Subsets of `X × Y` with `X = Y = [0, 1)`, basepoint `0`, decided exactly.

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use serde_json::{json, Value};

use super::rat::{self, abs, half, int, min, one, zero, Rat};
use super::WitnessError;

/// The seed points `x_n = (n+1)/(n+2)`, increasing to 1 from `x_0 = 1/2`.
pub fn seed(n: usize) -> Rat {
    rat::rat(n as i64 + 1, n as i64 + 2)
}

/// Least `n` with `seed(n) > x`, for `0 <= x < 1`.
pub fn first_seed_above(x: &Rat) -> usize {
    if *x < half() {
        return 0;
    }
    let t = (int(2) * x - one()) / (one() - x);
    (t.floor().to_integer().try_into().unwrap_or(usize::MAX - 1)) + 1
}

fn in_unit(q: &Rat) -> bool {
    !q.is_negative() && *q < one()
}

/// `(x, y) ∈ [0,1)²`.
pub fn in_space(p: &(Rat, Rat)) -> bool {
    in_unit(&p.0) && in_unit(&p.1)
}

/// `(x, y) ↦ min(|x|,|y|)·(x, y)` on `[-1,1]²`; it collapses the two axes
/// to the origin and is injective elsewhere.
pub fn smash_embed(x: &Rat, y: &Rat) -> Result<(Rat, Rat), WitnessError> {
    for c in [x, y] {
        if abs(c) > one() {
            return Err(WitnessError::OutOfRange(format!("{c} is outside [-1, 1]")));
        }
    }
    let m = min(&abs(x), &abs(y));
    Ok((&m * x, &m * y))
}

/// Membership in the image of `smash_embed` restricted to `[0,1]²`: the
/// region `x² <= y <= √x`, decided as `x² <= y` and `y² <= x`.
pub fn image_membership(p: &(Rat, Rat)) -> bool {
    let (x, y) = p;
    !x.is_negative() && !y.is_negative() && x * x <= *y && y * y <= *x
}

/// The set `{min(|x|,|y|) < ε}` inside `[0, x_n]²`.
#[derive(Clone, Debug, PartialEq)]
pub struct LShape {
    pub n: usize,
    pub eps: Rat,
}

pub fn build_lshape(n: usize, eps: Rat) -> Result<LShape, WitnessError> {
    if !eps.is_positive() || eps > seed(n) {
        return Err(WitnessError::OutOfRange(format!(
            "ε = {eps} is not in (0, {}]",
            seed(n)
        )));
    }
    Ok(LShape { n, eps })
}

impl LShape {
    pub fn side(&self) -> Rat {
        seed(self.n)
    }

    pub fn contains(&self, p: &(Rat, Rat)) -> bool {
        let s = self.side();
        let inside = |c: &Rat| !c.is_negative() && *c <= s;
        inside(&p.0) && inside(&p.1) && min(&p.0, &p.1) < self.eps
    }

    /// Interior relative to `[0, x_n]²` within `X × Y`:
    /// `[0,x_n)×[0,ε) ∪ [0,ε)×[0,x_n)`.
    pub fn contains_interior(&self, p: &(Rat, Rat)) -> bool {
        let s = self.side();
        let band = |a: &Rat, b: &Rat| !a.is_negative() && *a < s && !b.is_negative() && *b < self.eps;
        band(&p.0, &p.1) || band(&p.1, &p.0)
    }
}

/// How an [`EpsSeq`] continues past its prefix.
#[derive(Clone, Debug, PartialEq)]
pub enum Tail {
    /// Repeats the last prefix value.
    Constant,
    /// `min(last, c/(n+2))`.
    Scaled(Rat),
}

/// A weakly decreasing sequence in `(0, 1/2)`: a finite prefix followed by
/// a tail rule.
#[derive(Clone, Debug, PartialEq)]
pub struct EpsSeq {
    prefix: Vec<Rat>,
    tail: Tail,
}

impl EpsSeq {
    pub fn new(prefix: Vec<Rat>, tail: Tail) -> Result<Self, WitnessError> {
        if prefix.is_empty() {
            return Err(WitnessError::Invalid("an ε sequence needs a non-empty prefix".into()));
        }
        for (i, e) in prefix.iter().enumerate() {
            if !e.is_positive() || *e >= half() {
                return Err(WitnessError::OutOfRange(format!("ε_{i} = {e} is not in (0, 1/2)")));
            }
            if i > 0 && *e > prefix[i - 1] {
                return Err(WitnessError::Invalid(format!("ε_{i} = {e} exceeds ε_{}", i - 1)));
            }
        }
        if let Tail::Scaled(c) = &tail {
            if !c.is_positive() {
                return Err(WitnessError::Invalid(format!("tail scale {c} is not positive")));
            }
        }
        Ok(EpsSeq { prefix, tail })
    }

    pub fn constant(e: Rat) -> Result<Self, WitnessError> {
        EpsSeq::new(vec![e], Tail::Constant)
    }

    pub fn prefix(&self) -> &[Rat] {
        &self.prefix
    }

    pub fn tail(&self) -> &Tail {
        &self.tail
    }

    pub fn get(&self, n: usize) -> Rat {
        if let Some(e) = self.prefix.get(n) {
            return e.clone();
        }
        let last = self.prefix.last().unwrap();
        match &self.tail {
            Tail::Constant => last.clone(),
            Tail::Scaled(c) => min(last, &(c / int(n as i64 + 2))),
        }
    }

    pub fn to_json(&self) -> Value {
        let tail = match &self.tail {
            Tail::Constant => json!("constant"),
            Tail::Scaled(c) => json!({ "scaled": rat::to_json(c) }),
        };
        json!({ "prefix": rat::vec_to_json(&self.prefix), "tail": tail })
    }

    pub fn from_json(v: &Value) -> Result<Self, WitnessError> {
        let prefix = rat::vec_from_json(&v["prefix"])?;
        let tail = match &v["tail"] {
            Value::String(s) if s == "constant" => Tail::Constant,
            Value::Object(o) if o.contains_key("scaled") => Tail::Scaled(rat::from_json(&o["scaled"])?),
            other => return Err(WitnessError::Invalid(format!("unknown tail rule {other}"))),
        };
        EpsSeq::new(prefix, tail)
    }
}

/// `∃ n: x < x_n and y < ε_n`; since `x_n` increases and `ε_n` decreases
/// only the first admissible `n` matters.
fn one_sided(eps: &EpsSeq, x: &Rat, y: &Rat) -> bool {
    *y < eps.get(first_seed_above(x))
}

/// `W_ε = ⋃_n int L_{ε_n}`, an open neighbourhood of the wedge.
#[derive(Clone, Debug, PartialEq)]
pub struct WEps {
    pub eps: EpsSeq,
}

pub fn build_weps(eps: EpsSeq) -> WEps {
    WEps { eps }
}

impl WEps {
    pub fn contains(&self, p: &(Rat, Rat)) -> bool {
        in_space(p) && (one_sided(&self.eps, &p.0, &p.1) || one_sided(&self.eps, &p.1, &p.0))
    }

    /// A radius `δ > 0` whose closed box around `p`, within `X × Y`, stays
    /// inside the region.
    pub fn box_radius(&self, p: &(Rat, Rat)) -> Option<Rat> {
        if !self.contains(p) {
            return None;
        }
        let radius = |a: &Rat, b: &Rat| {
            let n = first_seed_above(a);
            let e = self.eps.get(n);
            (*b < e).then(|| min(&(seed(n) - a), &(e - b)) / int(2))
        };
        radius(&p.0, &p.1).or_else(|| radius(&p.1, &p.0))
    }
}

/// `W' ∪ ([0,1/2) × Y)` with `W' = ⋃_n [0,x_n) × [0,ε_n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct DiagRegion {
    pub eps: EpsSeq,
}

impl DiagRegion {
    pub fn contains(&self, p: &(Rat, Rat)) -> bool {
        in_space(p) && (p.0 < half() || one_sided(&self.eps, &p.0, &p.1))
    }
}

/// An even piecewise-linear `f` on `(-1, 1)` with `|u| < f(u) <= 2 - |u|`,
/// describing `W(f) = {(x,y) : x + y < f(x - y)}`. Breakpoints cover
/// `[0, u_k]` with `u_0 = 0`; past `u_k` the graph runs straight to the
/// corner `(1, 1)`, which both bounds force.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryFn {
    points: Vec<(Rat, Rat)>,
}

impl BoundaryFn {
    pub fn new(points: Vec<(Rat, Rat)>) -> Result<Self, WitnessError> {
        let Some(first) = points.first() else {
            return Err(WitnessError::Invalid("a boundary function needs breakpoints".into()));
        };
        if !first.0.is_zero() {
            return Err(WitnessError::Invalid(format!("first breakpoint is {}, not 0", first.0)));
        }
        for (i, (u, f)) in points.iter().enumerate() {
            if i > 0 && *u <= points[i - 1].0 {
                return Err(WitnessError::Invalid(format!(
                    "breakpoints not increasing at index {i}"
                )));
            }
            if *u >= one() {
                return Err(WitnessError::OutOfRange(format!("breakpoint {u} is not below 1")));
            }
            if f <= u {
                return Err(WitnessError::Bound {
                    piece: i,
                    detail: format!("f({u}) = {f} is not above |u|"),
                });
            }
            if *f > int(2) - u {
                return Err(WitnessError::Bound {
                    piece: i,
                    detail: format!("f({u}) = {f} exceeds 2 - |u|"),
                });
            }
        }
        Ok(BoundaryFn { points })
    }

    /// `f = 2 - |u|`, for which `W(f)` is all of `X × Y`.
    pub fn whole() -> Self {
        BoundaryFn::new(vec![(zero(), int(2))]).unwrap()
    }

    pub fn points(&self) -> &[(Rat, Rat)] {
        &self.points
    }

    /// All `u` in `(-1, 1)` where `f` may bend.
    pub fn kinks(&self) -> Vec<Rat> {
        let mut out: Vec<Rat> = self.points.iter().flat_map(|(u, _)| [u.clone(), -u.clone()]).collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn eval(&self, u: &Rat) -> Option<Rat> {
        let a = abs(u);
        if a >= one() {
            return None;
        }
        let mut nodes = self.points.clone();
        nodes.push((one(), one()));
        let i = nodes.iter().rposition(|(b, _)| *b <= a).unwrap();
        let (u0, f0) = &nodes[i];
        if *u0 == a {
            return Some(f0.clone());
        }
        let (u1, f1) = &nodes[i + 1];
        Some(f0 + (f1 - f0) * (&a - u0) / (u1 - u0))
    }

    pub fn contains(&self, p: &(Rat, Rat)) -> bool {
        in_space(p) && self.eval(&(&p.0 - &p.1)).is_some_and(|f| &p.0 + &p.1 < f)
    }

    /// Random instance with up to five breakpoints on a grid of sixteenths.
    pub fn random<R: Rng>(rng: &mut R) -> Self {
        let k = rng.gen_range(1..=5usize);
        let mut us: Vec<i64> = (1..16).collect();
        let mut chosen = vec![0i64];
        for _ in 1..k {
            let j = rng.gen_range(0..us.len());
            chosen.push(us.swap_remove(j));
        }
        chosen.sort();
        let points = chosen
            .into_iter()
            .map(|u| {
                // f(u) in (u, 2 - u] on a grid of 1/64
                let lo = 4 * u + 1;
                let hi = 128 - 4 * u;
                (rat::rat(u, 16), rat::rat(rng.gen_range(lo..=hi), 64))
            })
            .collect();
        BoundaryFn::new(points).unwrap()
    }

    /// `len` random instances from a fixed seed.
    pub fn random_family(seed: u64, len: usize) -> Vec<Self> {
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        (0..len).map(|_| BoundaryFn::random(&mut rng)).collect()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.points
                .iter()
                .map(|(u, f)| Value::Array(vec![rat::to_json(u), rat::to_json(f)]))
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<Self, WitnessError> {
        let items = v
            .as_array()
            .ok_or_else(|| WitnessError::Invalid(format!("expected breakpoint pairs, found {v}")))?;
        let points = items
            .iter()
            .map(|p| {
                let pair = rat::vec_from_json(p)?;
                match <[Rat; 2]>::try_from(pair) {
                    Ok([u, f]) => Ok((u, f)),
                    Err(_) => Err(WitnessError::Invalid(format!("breakpoint {p} is not a pair"))),
                }
            })
            .collect::<Result<_, _>>()?;
        BoundaryFn::new(points)
    }
}
