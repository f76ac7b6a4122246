//! Basis refinement, the diagonal neighbourhood, and the sequence that
//! leaves every compact set.

use num_traits::Signed;
use serde_json::{json, Value};

use super::cert::{Certificate, Kind, Rel};
use super::rat::{self, half, int, min, one, zero, Rat};
use super::region::{seed, BoundaryFn, DiagRegion, EpsSeq, Tail};
use super::WitnessError;

/// Prefix length used by [`refine_to_basis`].
pub const BASIS_PREFIX: usize = 16;

#[derive(Clone, Debug)]
pub struct BasisRefinement {
    pub eps: EpsSeq,
    pub certificate: Certificate,
}

/// Candidate minimizers of the piecewise-linear `g(x,y) = f(x-y) - x - y`
/// on `[0,s] × [0,e]`: the corners and the points where a kink line
/// `x - y = b` meets the boundary.
fn cell_vertices(f: &BoundaryFn, s: &Rat, e: &Rat) -> Vec<(Rat, Rat)> {
    let mut out = vec![
        (zero(), zero()),
        (s.clone(), zero()),
        (zero(), e.clone()),
        (s.clone(), e.clone()),
    ];
    let within = |q: &Rat, hi: &Rat| !q.is_negative() && q <= hi;
    for b in f.kinks() {
        let cands = [
            (b.clone(), zero()),
            (&b + e, e.clone()),
            (zero(), -b.clone()),
            (s.clone(), s - &b),
        ];
        for (x, y) in cands {
            if within(&x, s) && within(&y, e) {
                out.push((x, y));
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

fn margin(f: &BoundaryFn, p: &(Rat, Rat)) -> Rat {
    f.eval(&(&p.0 - &p.1)).expect("inside (-1, 1)") - &p.0 - &p.1
}

fn rect_inside(f: &BoundaryFn, s: &Rat, e: &Rat) -> bool {
    cell_vertices(f, s, e).iter().all(|v| margin(f, v).is_positive())
}

pub fn refine_to_basis(w: &BoundaryFn) -> Result<BasisRefinement, WitnessError> {
    refine_to_basis_with(w, BASIS_PREFIX)
}

/// An `ε` with `W_ε ⊆ W(w)`. Each `[0,x_n] × [0,ε_n]` is certified at the
/// vertices of its linear cells; `W(w)` is symmetric because `w` is even.
pub fn refine_to_basis_with(w: &BoundaryFn, len: usize) -> Result<BasisRefinement, WitnessError> {
    if len == 0 {
        return Err(WitnessError::Invalid("prefix length must be positive".into()));
    }
    let mut prefix: Vec<Rat> = Vec::with_capacity(len);
    for n in 0..len {
        let s = seed(n);
        let mut e = rat::rat(1, 4);
        while !rect_inside(w, &s, &e) {
            e /= int(2);
        }
        if let Some(prev) = prefix.last() {
            e = min(&e, prev);
        }
        prefix.push(e);
    }

    let mut cert = Certificate::new(
        Kind::Basis,
        "the basic sets W_ε refine the given neighbourhood of the wedge",
        json!({ "boundary": w.to_json(), "prefix": len }),
    );
    cert.truncation = Some(len);
    for (n, e) in prefix.iter().enumerate() {
        for v in cell_vertices(w, &seed(n), e) {
            let what = format!("n = {n}: g{} > 0", show_point(&v));
            cert.push(margin(w, &v), Rel::Gt, zero(), what);
        }
    }
    let pts = w.points();
    let (uk, fk) = pts.last().unwrap();
    let last = prefix.last().unwrap().clone();
    let slack = (one() - fk) / (one() - uk);
    let flat_top = *fk == int(2) - uk && seed(len - 1) - &last >= *uk;
    let tail = if flat_top {
        cert.push(fk.clone(), Rel::Eq, int(2) - uk, "last piece runs along 2 - |u|");
        cert.push(
            seed(len - 1) - &last,
            Rel::Ge,
            uk.clone(),
            "tail strip lies in the last piece",
        );
        cert.note("for n past the prefix, [0,x_n]×[0,ε] is the last certified box plus a strip where g = (1-s)(1-x) - (1+s)y with s = -1");
        Tail::Constant
    } else {
        let corner = one() - &slack;
        let hmin = pts.iter().map(|(u, f)| f - u).min().unwrap();
        let c = min(&hmin, &corner) / int(4);
        for (u, f) in pts {
            cert.push(int(4) * &c, Rel::Le, f - u, format!("4c <= f({u}) - {u}"));
        }
        cert.push(int(4) * &c, Rel::Le, corner, "4c <= slope gap of the last piece");
        cert.push(c.clone(), Rel::Gt, zero(), "c > 0");
        cert.note("for n past the prefix, f(u) - |u| >= 4c/(n+2) on |u| <= x_n, so ε_n <= c/(n+2) keeps g >= f(u) - |u| - 2ε_n > 0");
        Tail::Scaled(c)
    };
    let eps = EpsSeq::new(prefix, tail)?;
    cert.witnesses = eps
        .prefix()
        .iter()
        .enumerate()
        .map(|(n, e)| vec![seed(n), e.clone()])
        .collect();
    Ok(BasisRefinement { eps, certificate: cert })
}

fn show_point(p: &(Rat, Rat)) -> String {
    format!("({}, {})", p.0, p.1)
}

#[derive(Clone, Debug)]
pub struct Diagonal {
    pub eps: EpsSeq,
    pub region: DiagRegion,
    pub witnesses: Vec<(Rat, Rat)>,
    pub certificate: Certificate,
}

/// Given neighbourhoods `W_n = W(ws[n])` of the wedge, an open `W ⊇ X∨Y`
/// with points `w_n = (x_n, ε_n) ∈ W_n \ W`, so no `W_n` lies inside `W`.
pub fn diagonalize(ws: &[BoundaryFn]) -> Result<Diagonal, WitnessError> {
    if ws.is_empty() {
        return Err(WitnessError::Invalid("the family is empty".into()));
    }
    let mut shift = 0u32;
    let mut prefix: Vec<Rat> = Vec::with_capacity(ws.len());
    for (n, w) in ws.iter().enumerate() {
        let x = seed(n);
        loop {
            let e = rat::rat(1, n as i64 + 3) / int(2).pow(shift as i32);
            if w.contains(&(x.clone(), e.clone())) {
                prefix.push(e);
                break;
            }
            shift += 1;
        }
    }
    let eps = EpsSeq::new(prefix, Tail::Constant)?;
    let mut cert = Certificate::new(
        Kind::Diagonal,
        "no member of the family lies inside the diagonal neighbourhood",
        json!({ "family": ws.iter().map(BoundaryFn::to_json).collect::<Vec<_>>() }),
    );
    let witnesses: Vec<(Rat, Rat)> = eps
        .prefix()
        .iter()
        .enumerate()
        .map(|(n, e)| (seed(n), e.clone()))
        .collect();
    for (n, (w, (x, e))) in ws.iter().zip(&witnesses).enumerate() {
        let f = w.eval(&(x - e)).expect("inside (-1, 1)");
        cert.push(x + e, Rel::Lt, f, format!("w_{n} ∈ W_{n}"));
        cert.push(x.clone(), Rel::Ge, half(), format!("w_{n} misses the strip x < 1/2"));
    }
    for n in 1..witnesses.len() {
        cert.push(
            witnesses[n].1.clone(),
            Rel::Le,
            witnesses[n - 1].1.clone(),
            format!("ε_{n} <= ε_{}", n - 1),
        );
    }
    cert.note("w_n ∉ [0,x_k)×[0,ε_k): for k <= n since x_n >= x_k, for k > n since ε_k <= ε_n");
    cert.witnesses = witnesses.iter().map(|(x, y)| vec![x.clone(), y.clone()]).collect();
    Ok(Diagonal {
        region: DiagRegion { eps: eps.clone() },
        eps,
        witnesses,
        certificate: cert,
    })
}

/// Points `w_n = (x_n, y_n) ∈ W(w)` off the wedge with `0 < y_n < 1/(n+1)`
/// for `n < count`; they are pairwise separated and accumulate only at
/// `(1, 0)`, which lies outside `X × Y`.
pub fn noncompact_certificate(w: &BoundaryFn, count: usize) -> Result<Certificate, WitnessError> {
    if count == 0 {
        return Err(WitnessError::Invalid("need at least one point".into()));
    }
    let mut cert = Certificate::new(
        Kind::NonCompact,
        "the neighbourhood is not contained in any compact set",
        json!({ "boundary": w.to_json(), "count": count }),
    );
    cert.truncation = Some(count);
    let mut pts = Vec::with_capacity(count);
    for n in 0..count {
        let x = seed(n);
        let mut y = rat::rat(1, n as i64 + 2);
        while !w.contains(&(x.clone(), y.clone())) {
            y /= int(2);
        }
        let f = w.eval(&(&x - &y)).expect("inside (-1, 1)");
        cert.push(&x + &y, Rel::Lt, f, format!("w_{n} ∈ W"));
        cert.push(y.clone(), Rel::Gt, zero(), format!("w_{n} is off the wedge"));
        cert.push(
            y.clone(),
            Rel::Lt,
            rat::rat(1, n as i64 + 1),
            format!("y_{n} < 1/{}", n + 1),
        );
        pts.push((x, y));
    }
    for n in 1..count {
        cert.push(
            &pts[n].0 - &pts[n - 1].0,
            Rel::Gt,
            zero(),
            format!("x_{n} > x_{}", n - 1),
        );
    }
    cert.push(
        one() - &pts[count - 1].0,
        Rel::Eq,
        rat::rat(1, count as i64 + 1),
        "x_n = (n+1)/(n+2) tends to 1 ∉ X",
    );
    cert.witnesses = pts.into_iter().map(|(x, y)| vec![x, y]).collect();
    Ok(cert)
}

pub(super) fn rebuild_basis(inputs: &Value) -> Result<Certificate, WitnessError> {
    let w = BoundaryFn::from_json(&inputs["boundary"])?;
    let len = inputs["prefix"]
        .as_u64()
        .ok_or_else(|| WitnessError::Invalid("bad prefix".into()))? as usize;
    Ok(refine_to_basis_with(&w, len)?.certificate)
}

pub(super) fn rebuild_diagonal(inputs: &Value) -> Result<Certificate, WitnessError> {
    let fam = inputs["family"]
        .as_array()
        .ok_or_else(|| WitnessError::Invalid("bad family".into()))?
        .iter()
        .map(BoundaryFn::from_json)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(diagonalize(&fam)?.certificate)
}

pub(super) fn rebuild_noncompact(inputs: &Value) -> Result<Certificate, WitnessError> {
    let w = BoundaryFn::from_json(&inputs["boundary"])?;
    let n = inputs["count"]
        .as_u64()
        .ok_or_else(|| WitnessError::Invalid("bad count".into()))? as usize;
    noncompact_certificate(&w, n)
}
