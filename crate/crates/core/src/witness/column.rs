//! The set `C ⊆ X × Y × ℚ` built from `√2` convergents, and the search for
//! a point of `C` in a saturated neighbourhood of `X∨Y × ℚ ∪ X×Y×{0}`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::cert::{Certificate, Kind, Rel};
use super::rat::{self, int, one, zero, Rat};
use super::region::seed;
use super::WitnessError;

/// `(p_k, q_k)` for `k < count`, from `1/1` by `p' = p + 2q, q' = p + q`.
pub fn sqrt2_convergents(count: usize) -> Vec<(BigInt, BigInt)> {
    let mut out = Vec::with_capacity(count);
    let (mut p, mut q) = (BigInt::one(), BigInt::one());
    for _ in 0..count {
        out.push((p.clone(), q.clone()));
        let np = &p + &q * 2;
        let nq = &p + &q;
        p = np;
        q = nq;
    }
    out
}

/// `r_k = p_k / q_k`.
pub fn convergent(k: usize) -> Rat {
    let (p, q) = sqrt2_convergents(k + 1).pop().unwrap();
    Rat::new(p, q)
}

fn pell(r: &Rat) -> BigInt {
    let (p, q) = (r.numer(), r.denom());
    p * p - q * q * 2
}

/// Pell identity, alternating sign, and strictly shrinking error
/// `|r_k - √2| = 1/(q_k² (r_k + √2))` for `k <= last`, using
/// `7/5 < √2 < 3/2`.
pub fn convergents_certificate(last: usize) -> Certificate {
    let mut cert = Certificate::new(
        Kind::Convergents,
        "the convergents satisfy the Pell identity and approach √2 monotonically",
        json!({ "last": last }),
    );
    cert.truncation = Some(last);
    let lo = rat::rat(7, 5);
    let hi = rat::rat(3, 2);
    cert.push(&lo * &lo, Rel::Lt, int(2), "(7/5)² < 2");
    cert.push(int(2), Rel::Lt, &hi * &hi, "2 < (3/2)²");
    let cs = sqrt2_convergents(last + 1);
    let rs: Vec<Rat> = cs.iter().map(|(p, q)| Rat::new(p.clone(), q.clone())).collect();
    for (k, r) in rs.iter().enumerate() {
        let s = pell(r);
        let sign = if k % 2 == 0 { -1 } else { 1 };
        cert.push(
            Rat::from_integer(s),
            Rel::Eq,
            int(sign),
            format!("p_{k}² - 2q_{k}² = {sign}"),
        );
    }
    for k in 0..last {
        let q0 = Rat::from_integer(rs[k].denom().clone());
        let q1 = Rat::from_integer(rs[k + 1].denom().clone());
        cert.push(
            &q0 * &q0 * (&rs[k] + &hi),
            Rel::Lt,
            &q1 * &q1 * (&rs[k + 1] + &lo),
            format!("|r_{} - √2| < |r_{k} - √2|", k + 1),
        );
    }
    cert.witnesses = rs.into_iter().map(|r| vec![r]).collect();
    cert
}

/// `C = {(x_m, y_n, r_n/m) : 1 <= m, n <= M}` with `x_m = (m+1)/(m+2)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CSet {
    pub truncation: usize,
    pub y: Vec<Rat>,
    pub r: Vec<Rat>,
}

impl CSet {
    /// `y[n-1] = y_n`, `r[n-1] = r_n` for `1 <= n <= M`.
    pub fn from_parts(y: Vec<Rat>, r: Vec<Rat>) -> Result<Self, WitnessError> {
        if y.is_empty() || y.len() != r.len() {
            return Err(WitnessError::Invalid("y and r need the same positive length".into()));
        }
        Ok(CSet {
            truncation: y.len(),
            y,
            r,
        })
    }

    pub fn x(&self, m: usize) -> Rat {
        seed(m)
    }

    pub fn y(&self, n: usize) -> &Rat {
        &self.y[n - 1]
    }

    pub fn r(&self, n: usize) -> &Rat {
        &self.r[n - 1]
    }

    pub fn point(&self, m: usize, n: usize) -> [Rat; 3] {
        [self.x(m), self.y(n).clone(), self.r(n) / int(m as i64)]
    }

    pub fn points(&self) -> Vec<[Rat; 3]> {
        let m = self.truncation;
        (1..=m)
            .flat_map(|i| (1..=m).map(move |j| (i, j)))
            .map(|(i, j)| self.point(i, j))
            .collect()
    }

    pub fn to_json(&self) -> Value {
        json!({ "y": rat::vec_to_json(&self.y), "r": rat::vec_to_json(&self.r) })
    }

    pub fn from_json(v: &Value) -> Result<Self, WitnessError> {
        CSet::from_parts(rat::vec_from_json(&v["y"])?, rat::vec_from_json(&v["r"])?)
    }
}

/// The default `C` with `y_n = 1/(n+1)`.
pub fn build_c(truncation: usize) -> Result<CSet, WitnessError> {
    build_c_with(truncation, |n| rat::rat(1, n as i64 + 1))
}

pub fn build_c_with(truncation: usize, y: impl Fn(usize) -> Rat) -> Result<CSet, WitnessError> {
    if truncation == 0 {
        return Err(WitnessError::Invalid("truncation must be at least 1".into()));
    }
    let rs = sqrt2_convergents(truncation + 1);
    let r = rs[1..].iter().map(|(p, q)| Rat::new(p.clone(), q.clone())).collect();
    CSet::from_parts((1..=truncation).map(y).collect(), r)
}

/// Every point of `C` has all coordinates non-zero, so each is its own
/// class in both iterated smash quotients.
pub fn saturation_check(c: &CSet) -> Result<Certificate, WitnessError> {
    let mut cert = Certificate::new(Kind::Saturation, "C is saturated", json!({ "c": c.to_json() }));
    cert.truncation = Some(c.truncation);
    for p in c.points() {
        if let Some(i) = p.iter().position(Zero::is_zero) {
            return Err(WitnessError::Unsaturated {
                point: p.to_vec(),
                coordinate: i,
            });
        }
        for (i, v) in p.iter().enumerate() {
            cert.push(
                v.clone(),
                Rel::Ne,
                zero(),
                format!("coordinate {i} of ({}, {}, {})", p[0], p[1], p[2]),
            );
        }
    }
    Ok(cert)
}

pub fn closedness_certificate(truncation: usize) -> Result<Certificate, WitnessError> {
    closedness_check(&build_c(truncation)?)
}

/// `C` is closed in `X × Y × ℚ`: columns `x = x_m` are separated, and in
/// each column the points accumulate only at `(x_m, 0, √2/m)`, which has an
/// irrational coordinate.
pub fn closedness_check(c: &CSet) -> Result<Certificate, WitnessError> {
    let m = c.truncation;
    let mut cert = Certificate::new(Kind::Closedness, "C is closed", json!({ "c": c.to_json() }));
    cert.truncation = Some(m);
    for i in 1..m {
        cert.push(c.x(i + 1) - c.x(i), Rel::Gt, zero(), format!("x_{} - x_{i} > 0", i + 1));
    }
    if m >= 2 {
        let gap = c.x(m) - c.x(m - 1);
        cert.push(
            gap,
            Rel::Eq,
            rat::rat(1, ((m + 1) * (m + 2)) as i64),
            "smallest column gap",
        );
    }
    for n in 1..=m {
        let y = c.y(n);
        if !y.is_positive() || (n > 1 && y >= c.y(n - 1)) {
            return Err(WitnessError::NotClosed(format!(
                "y_{n} = {y} breaks a positive decreasing sequence"
            )));
        }
        cert.push(y.clone(), Rel::Gt, zero(), format!("y_{n} > 0"));
        if n > 1 {
            cert.push(y.clone(), Rel::Lt, c.y(n - 1).clone(), format!("y_{n} < y_{}", n - 1));
        }
    }
    for n in 1..=m {
        let r = c.r(n);
        let s = pell(r);
        if s.abs() != BigInt::one() {
            return Err(WitnessError::NotClosed(format!(
                "r_{n} = {r} is not a Pell solution (p² - 2q² = {s}); its column may converge in ℚ"
            )));
        }
        cert.push(
            Rat::from_integer(s.abs()),
            Rel::Eq,
            one(),
            format!("|p_{n}² - 2q_{n}²| = 1, so |r_{n} - √2| < 1/q_{n}²"),
        );
        cert.push(r.clone(), Rel::Ge, one(), format!("r_{n} >= 1"));
    }
    for i in 1..m {
        let qa = c.r(i).denom();
        let qb = c.r(i + 1).denom();
        if qb <= qa {
            return Err(WitnessError::NotClosed(format!(
                "denominators of r_{i}, r_{} do not grow",
                i + 1
            )));
        }
        cert.push(
            Rat::from_integer(qb.clone()),
            Rel::Gt,
            Rat::from_integer(qa.clone()),
            format!("q_{} > q_{i}", i + 1),
        );
    }
    for q in 1..=m as i64 {
        let t = BigInt::from(2 * q * q);
        let p = t.sqrt();
        cert.push(
            Rat::from_integer(&p * &p),
            Rel::Ne,
            Rat::from_integer(t),
            format!("2·{q}² is not a square"),
        );
    }
    cert.note("p² = 2q² forces p even, then q even, an infinite descent; so √2/m is irrational for every m");
    cert.witnesses = (1..=m).map(|i| vec![c.x(i), zero()]).collect();
    Ok(cert)
}

/// A saturated neighbourhood `N` of `X∨Y × ℚ ∪ X×Y×{0}`, described by its
/// basic boxes: `[0,u) × [0,v) × (w_lo, w_hi)` around the origin, and
/// `U_n × V_n × W_n` around each `(x_m, 0, √2/m)` with
/// `U_n = (x_m - x_radius, x_m + x_radius)`, `V_n = [0, y_bound/(n+1))`
/// and `W_n = {q : |mq - √2| < w_radius/(n+1)}`, a nested local basis.
#[derive(Clone, Debug, PartialEq)]
pub struct BasicNbdSpec {
    pub u: Rat,
    pub v: Rat,
    pub w_lo: Rat,
    pub w_hi: Rat,
    pub x_radius: Rat,
    pub y_bound: Rat,
    pub w_radius: Rat,
}

impl BasicNbdSpec {
    /// All boxes of side `s` around the origin, column boxes of the given sizes.
    pub fn uniform(s: Rat, w: Rat, x_radius: Rat, y_bound: Rat, w_radius: Rat) -> Self {
        BasicNbdSpec {
            u: s.clone(),
            v: s,
            w_lo: -w.clone(),
            w_hi: w,
            x_radius,
            y_bound,
            w_radius,
        }
    }

    pub fn validate(&self) -> Result<(), WitnessError> {
        let pos = [
            ("u", &self.u),
            ("v", &self.v),
            ("x_radius", &self.x_radius),
            ("y_bound", &self.y_bound),
            ("w_radius", &self.w_radius),
        ];
        for (name, q) in pos {
            if !q.is_positive() {
                return Err(WitnessError::Invalid(format!("{name} = {q} must be positive")));
            }
        }
        if !(self.w_lo.is_negative() && self.w_hi.is_positive()) {
            return Err(WitnessError::Invalid("(w_lo, w_hi) must contain 0".into()));
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "u": rat::to_json(&self.u),
            "v": rat::to_json(&self.v),
            "w": [rat::to_json(&self.w_lo), rat::to_json(&self.w_hi)],
            "x_radius": rat::to_json(&self.x_radius),
            "y_bound": rat::to_json(&self.y_bound),
            "w_radius": rat::to_json(&self.w_radius),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, WitnessError> {
        let w = rat::vec_from_json(&v["w"])?;
        if w.len() != 2 {
            return Err(WitnessError::Invalid("\"w\" must be an interval".into()));
        }
        let s = BasicNbdSpec {
            u: rat::from_json(&v["u"])?,
            v: rat::from_json(&v["v"])?,
            w_lo: w[0].clone(),
            w_hi: w[1].clone(),
            x_radius: rat::from_json(&v["x_radius"])?,
            y_bound: rat::from_json(&v["y_bound"])?,
            w_radius: rat::from_json(&v["w_radius"])?,
        };
        s.validate()?;
        Ok(s)
    }
}

/// `|q - √2| < rho`, decided without leaving ℚ.
fn near_sqrt2(q: &Rat, rho: &Rat) -> bool {
    let a = q - rho;
    let b = q + rho;
    (a.is_negative() || &a * &a < int(2)) && b.is_positive() && &b * &b > int(2)
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub point: [Rat; 3],
    pub certificate: Certificate,
}

/// A point `(x_m, y_k, r_k/m)` of `C` inside `U_n × V_n × W_n ⊆ N`, so every
/// saturated neighbourhood of `X∨Y × ℚ ∪ X×Y×{0}` meets the closed
/// saturated set `C`.
pub fn witness_search(spec: &BasicNbdSpec, truncation: usize) -> Result<SearchResult, WitnessError> {
    spec.validate()?;
    let c = build_c(truncation)?;
    let fm = |i: usize| int(i as i64);
    let m = (1..=truncation)
        .find(|&m| (1..=truncation).all(|n| spec.w_lo < c.r(n) / fm(m) && c.r(n) / fm(m) < spec.w_hi))
        .ok_or_else(|| WitnessError::IncreaseTruncation {
            truncation,
            reason: format!(
                "no m <= {truncation} puts every r_n/m inside ({}, {})",
                spec.w_lo, spec.w_hi
            ),
        })?;
    let mut found = None;
    'outer: for n in 1..=truncation {
        let vb = &spec.y_bound / fm(n + 1);
        let rho = &spec.w_radius / fm(n + 1);
        for k in n..=truncation {
            if *c.y(k) < vb && near_sqrt2(c.r(k), &rho) {
                found = Some((n, k, vb, rho));
                break 'outer;
            }
        }
    }
    let Some((n, k, vb, rho)) = found else {
        return Err(WitnessError::IncreaseTruncation {
            truncation,
            reason: format!("no k <= {truncation} puts y_k below V_n for any n"),
        });
    };

    let point = c.point(m, k);
    let mut cert = Certificate::new(
        Kind::Search,
        "the saturated neighbourhood meets C, so the two sets cannot be separated",
        json!({ "spec": spec.to_json(), "truncation": truncation }),
    );
    cert.truncation = Some(truncation);
    let rn = c.r(n) / fm(m);
    cert.push(zero(), Rel::Lt, spec.u.clone(), "0 ∈ U");
    cert.push(zero(), Rel::Lt, spec.v.clone(), "0 ∈ V");
    cert.push(spec.w_lo.clone(), Rel::Lt, rn.clone(), format!("r_{n}/{m} > w_lo"));
    cert.push(rn, Rel::Lt, spec.w_hi.clone(), format!("r_{n}/{m} < w_hi"));
    cert.push(zero(), Rel::Lt, spec.x_radius.clone(), format!("x_{m} ∈ U_{n}"));
    cert.push(c.y(k).clone(), Rel::Lt, vb, format!("y_{k} ∈ V_{n}"));
    let rk = c.r(k);
    let a = rk - &rho;
    if a.is_negative() {
        cert.push(a, Rel::Lt, zero(), format!("r_{k} - ρ_{n} < √2"));
    } else {
        cert.push(&a * &a, Rel::Lt, int(2), format!("(r_{k} - ρ_{n})² < 2"));
    }
    let b = rk + &rho;
    cert.push(&b * &b, Rel::Gt, int(2), format!("(r_{k} + ρ_{n})² > 2"));
    cert.push(b, Rel::Gt, zero(), format!("r_{k} + ρ_{n} > 0"));
    for (i, v) in point.iter().enumerate() {
        cert.push(
            v.clone(),
            Rel::Ne,
            zero(),
            format!("coordinate {i} of the witness is non-zero"),
        );
    }
    cert.note(format!(
        "(0, 0, r_{n}/{m}) ∈ N and saturation give (x_{m}, 0, r_{n}/{m}) ∈ N"
    ));
    cert.witnesses = vec![point.to_vec()];
    Ok(SearchResult {
        m,
        n,
        k,
        point,
        certificate: cert,
    })
}

pub(super) fn rebuild_convergents(inputs: &Value) -> Result<Certificate, WitnessError> {
    let last = inputs["last"]
        .as_u64()
        .ok_or_else(|| WitnessError::Invalid("bad last index".into()))?;
    Ok(convergents_certificate(last as usize))
}

pub(super) fn rebuild_saturation(inputs: &Value) -> Result<Certificate, WitnessError> {
    saturation_check(&CSet::from_json(&inputs["c"])?)
}

pub(super) fn rebuild_closedness(inputs: &Value) -> Result<Certificate, WitnessError> {
    closedness_check(&CSet::from_json(&inputs["c"])?)
}

pub(super) fn rebuild_search(inputs: &Value) -> Result<Certificate, WitnessError> {
    let spec = BasicNbdSpec::from_json(&inputs["spec"])?;
    let t = inputs["truncation"]
        .as_u64()
        .ok_or_else(|| WitnessError::Invalid("bad truncation".into()))?;
    Ok(witness_search(&spec, t as usize)?.certificate)
}
