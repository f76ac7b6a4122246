use std::fs;
use std::path::Path;

use ptop_core::expo::{exponential, pointed_exponential, Adjunction};
use ptop_core::finspace::{find_homeomorphism, FinSpace, HomeoSearch};
use ptop_core::homotopy::{cone, cylinder, paths_loops, suspension, IntervalModel, Side};
use ptop_core::json::{self, JsonError};
use ptop_core::pointed::{
    associativity_scan, coherence_scan, enumerate_pointed, nary_smash, smash, Comparisons, ParenTree, PtSpace,
    SmashCache,
};
use ptop_core::witness::{
    self, build_c, closedness_check, convergents_certificate, diagonalize, image_membership, saturation_check,
    smash_embed, witness_search, BasicNbdSpec, BoundaryFn, Certificate, Rat, WitnessError,
};
use serde_json::{json, Value};

use crate::{Cli, Cmd, Format, HomotopyOp, WitnessKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass = 0,
    No = 1,
    Input = 2,
    Inconclusive = 3,
}

pub enum Body {
    Json(Value),
    Text(String),
}

pub struct Outcome {
    pub status: Status,
    pub body: Option<Body>,
    pub message: Option<String>,
}

impl Outcome {
    fn json(status: Status, v: Value) -> Self {
        Outcome {
            status,
            body: Some(Body::Json(v)),
            message: None,
        }
    }

    fn say(mut self, m: impl Into<String>) -> Self {
        self.message = Some(m.into());
        self
    }

    fn fail(status: Status, m: impl Into<String>) -> Self {
        Outcome {
            status,
            body: None,
            message: Some(m.into()),
        }
    }
}

fn verdict(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::No
    }
}

type Res = Result<Outcome, Outcome>;

fn input(m: impl Into<String>) -> Outcome {
    Outcome::fail(Status::Input, m)
}

fn read(path: &Path) -> Result<String, Outcome> {
    fs::read_to_string(path).map_err(|e| input(format!("cannot read {}: {e}", path.display())))
}

fn json_err(path: &Path, e: JsonError) -> Outcome {
    input(format!("{}: {e}", path.display()))
}

fn load_space(path: &Path) -> Result<(FinSpace, Option<usize>), Outcome> {
    json::parse_space(&read(path)?).map_err(|e| json_err(path, e))
}

fn load_pointed(path: &Path) -> Result<PtSpace, Outcome> {
    json::parse_pointed(&read(path)?).map_err(|e| json_err(path, e))
}

fn space_body(cli: &Cli, s: &FinSpace, base: Option<usize>, name: &str) -> Body {
    match cli.format {
        Format::Json => Body::Json(json::space_to_value(s, base)),
        Format::Dot => Body::Text(s.to_dot(name)),
    }
}

fn json_only(cli: &Cli, what: &str) -> Result<(), Outcome> {
    if cli.format == Format::Dot {
        return Err(input(format!("{what} has no DOT rendering; use --format json")));
    }
    Ok(())
}

pub fn run(cli: &Cli) -> Outcome {
    let r = match &cli.cmd {
        Cmd::Smash { a, b } => (|| {
            let (x, y) = (load_pointed(a)?, load_pointed(b)?);
            let s = smash(&x, &y);
            let p = s.space();
            Ok(Outcome {
                status: Status::Pass,
                body: Some(space_body(cli, p.space(), Some(p.base()), "smash")),
                message: None,
            })
        })(),
        Cmd::Nary { files } => (|| {
            let xs = files.iter().map(|f| load_pointed(f)).collect::<Result<Vec<_>, _>>()?;
            let s = nary_smash(&xs);
            let p = s.space();
            Ok(Outcome {
                status: Status::Pass,
                body: Some(space_body(cli, p.space(), Some(p.base()), "smash")),
                message: None,
            })
        })(),
        Cmd::Compare { tree, files } => compare(cli, tree, files),
        Cmd::AssocScan { max_points } => assoc_scan(cli, *max_points),
        Cmd::CoherenceScan { max_points } => coherence(cli, *max_points),
        Cmd::Exp { a, y, max_points } => exp(cli, a, y, *max_points),
        Cmd::Homotopy { model, op, x } => homotopy(cli, model, *op, x),
        Cmd::Witness {
            which,
            truncation,
            spec,
            seed,
        } => witness_cmd(cli, *which, *truncation, spec.as_deref(), *seed),
        Cmd::Verify { file } => verify(cli, file),
        Cmd::Homeo { a, b } => homeo(cli, a, b),
        Cmd::ExportDot { x } => (|| {
            let (s, _) = load_space(x)?;
            Ok(Outcome {
                status: Status::Pass,
                body: Some(Body::Text(s.to_dot("space"))),
                message: None,
            })
        })(),
        Cmd::Canon { x } => (|| {
            let (s, b) = load_space(x)?;
            Ok(Outcome {
                status: Status::Pass,
                body: Some(space_body(cli, &s, b, "space")),
                message: None,
            })
        })(),
    };
    r.unwrap_or_else(|e| e)
}

/// Writes the body and message; returns the exit status.
pub fn emit(cli: &Cli, o: Outcome) -> u8 {
    if let Some(m) = &o.message {
        eprintln!("{m}");
    }
    if let Some(body) = o.body {
        let text = match body {
            Body::Json(v) => json::to_canonical_string(&v),
            Body::Text(t) => t,
        };
        match &cli.out {
            Some(p) => {
                if let Err(e) = fs::write(p, text) {
                    eprintln!("cannot write {}: {e}", p.display());
                    return Status::Input as u8;
                }
            }
            None => print!("{text}"),
        }
    }
    o.status as u8
}

fn compare(cli: &Cli, tree: &str, files: &[std::path::PathBuf]) -> Res {
    json_only(cli, "a regularity report")?;
    let t = ParenTree::parse(tree).map_err(|e| input(format!("--tree: {e}")))?;
    let xs = files.iter().map(|f| load_pointed(f)).collect::<Result<Vec<_>, _>>()?;
    if xs.len() != t.leaf_count() {
        return Err(input(format!(
            "the bracketing has {} factors but {} spaces were given",
            t.leaf_count(),
            xs.len()
        )));
    }
    let cache = SmashCache::default();
    let report = Comparisons::new(&xs, &cache)
        .regularity(&t)
        .map_err(|e| Outcome::fail(Status::No, format!("comparison map: {e}")))?;
    let ok = report.regular();
    Ok(
        Outcome::json(verdict(ok), serde_json::to_value(&report).unwrap()).say(if ok {
            "comparison map is a homeomorphism"
        } else {
            "comparison map is not a homeomorphism"
        }),
    )
}

fn assoc_scan(cli: &Cli, max_points: usize) -> Res {
    json_only(cli, "a scan report")?;
    let r = associativity_scan(max_points).map_err(|e| input(e.to_string()))?;
    let ok = r.all_pass();
    let msg = if ok {
        format!(
            "all triples regularly associative: {} triples over {} classes",
            r.triples, r.classes
        )
    } else {
        format!("{} of {} triples fail", r.failures.len(), r.triples)
    };
    Ok(Outcome::json(verdict(ok), serde_json::to_value(&r).unwrap()).say(msg))
}

fn coherence(cli: &Cli, max_points: usize) -> Res {
    json_only(cli, "a scan report")?;
    let r = coherence_scan(max_points).map_err(|e| input(e.to_string()))?;
    let ok = r.failures.is_empty();
    Ok(
        Outcome::json(verdict(ok), serde_json::to_value(&r).unwrap()).say(format!(
            "{} coherence checks over {} tuples, {} failures",
            r.checks,
            r.tuples,
            r.failures.len()
        )),
    )
}

fn exp(cli: &Cli, a: &Path, y: &Path, max_points: usize) -> Res {
    json_only(cli, "an exponential report")?;
    let (sa, ba) = load_space(a)?;
    let (sy, by) = load_space(y)?;
    match (ba, by) {
        (Some(ba), Some(by)) => {
            let pa = PtSpace::new(sa, ba).unwrap();
            let py = PtSpace::new(sy, by).unwrap();
            let e = pointed_exponential(&pa, &py);
            let xs = enumerate_pointed(max_points).map_err(|e| input(e.to_string()))?;
            let mut reports = Vec::new();
            let mut ok = ptop_core::expo::is_finest_admissible(&e);
            for (i, x) in xs.iter().enumerate() {
                let r = Adjunction::new(x, &pa, &py).check().map_err(|e| input(e.to_string()))?;
                ok &= r.holds();
                reports.push(json!({ "x": i, "x_points": x.len(), "left": r.left, "right": r.right, "round_trips": r.round_trips }));
            }
            let v = json!({
                "exponential": json::exp_to_value(&e),
                "finest_admissible": ptop_core::expo::is_finest_admissible(&e),
                "adjunction": reports,
            });
            Ok(Outcome::json(verdict(ok), v))
        }
        (None, None) => {
            let e = exponential(&sa, &sy);
            let fin = ptop_core::expo::is_finest_admissible(&e);
            let v = json!({ "exponential": json::exp_to_value(&e), "finest_admissible": fin });
            Ok(Outcome::json(verdict(fin), v))
        }
        _ => Err(input(
            "give both spaces a basepoint for the pointed exponential, or neither",
        )),
    }
}

fn homotopy(cli: &Cli, model: &str, op: HomotopyOp, x: &Path) -> Res {
    let m = IntervalModel::by_name(model).map_err(|e| input(format!("--model: {e}")))?;
    let x = load_pointed(x)?;
    let err = |e: ptop_core::homotopy::HomotopyError| Outcome::fail(Status::No, format!("{op:?}: {e}"));
    let (space, ok, what): (PtSpace, bool, &str) = match op {
        HomotopyOp::Cylinder => (cylinder(&x, &m).map_err(err)?.space().clone(), true, "cylinder"),
        HomotopyOp::ConeMinus | HomotopyOp::ConePlus => {
            let side = if op == HomotopyOp::ConeMinus {
                Side::Minus
            } else {
                Side::Plus
            };
            let c = cone(&x, &m, side).map_err(err)?;
            (
                c.space().clone(),
                c.comparison.is_homeomorphism(),
                "cokernel and smash descriptions of the cone agree",
            )
        }
        HomotopyOp::Suspension => {
            let s = suspension(&x, &m).map_err(err)?;
            let agree = s.constructions_agree().map_err(err)?;
            (s.space().clone(), agree, "the four suspension constructions agree")
        }
        HomotopyOp::Paths | HomotopyOp::CoconeMinus | HomotopyOp::CoconePlus | HomotopyOp::Loops => {
            let p = paths_loops(&x, &m).map_err(err)?;
            let agree = p.forms_agree();
            let e = match op {
                HomotopyOp::Paths => p.path.pointed().unwrap(),
                HomotopyOp::CoconeMinus => p.cocone_kernels[0].clone(),
                HomotopyOp::CoconePlus => p.cocone_kernels[1].clone(),
                _ => p.loop_kernel.clone(),
            };
            (e, agree, "kernel and exponential descriptions agree")
        }
    };
    let body = space_body(cli, space.space(), Some(space.base()), model);
    let msg = format!("{what}: {ok}");
    Ok(Outcome {
        status: verdict(ok),
        body: Some(body),
        message: Some(msg),
    })
}

fn witness_status(e: &WitnessError) -> Status {
    match e {
        WitnessError::IncreaseTruncation { .. } => Status::Inconclusive,
        WitnessError::Invalid(_) | WitnessError::OutOfRange(_) => Status::Input,
        _ => Status::No,
    }
}

fn werr(e: WitnessError) -> Outcome {
    Outcome::fail(witness_status(&e), e.to_string())
}

fn certificates_outcome(certs: Vec<Certificate>) -> Outcome {
    let ok = certs.iter().all(|c| c.verify().is_ok());
    let v = json!({ "certificates": certs.iter().map(Certificate::to_json).collect::<Vec<_>>() });
    Outcome::json(verdict(ok), v).say(format!("{} certificates, all re-verified: {ok}", certs.len()))
}

fn q(n: i64, d: i64) -> Rat {
    witness::rat::rat(n, d)
}

/// Built-in boxes for `nonregular`: sizes `1/2, 1/4, 1/8` around the origin,
/// `W` half-widths down to the smallest the truncation can reach.
fn default_specs(truncation: usize) -> Vec<BasicNbdSpec> {
    let mut out = Vec::new();
    for s in [q(1, 2), q(1, 4), q(1, 8)] {
        for w in [q(1, 1), q(1, 2), q(1, 4)] {
            if q(3, 2) / witness::rat::int(truncation as i64) < w {
                out.push(BasicNbdSpec::uniform(s.clone(), w, s.clone(), q(1, 2), s.clone()));
            }
        }
    }
    out
}

fn witness_cmd(cli: &Cli, which: WitnessKind, truncation: usize, spec: Option<&Path>, seed: u64) -> Res {
    json_only(cli, "a certificate")?;
    if truncation == 0 {
        return Err(input("--truncation must be at least 1"));
    }
    match which {
        WitnessKind::Diag => {
            let fam = BoundaryFn::random_family(seed, truncation);
            let d = diagonalize(&fam).map_err(werr)?;
            Ok(certificates_outcome(vec![d.certificate]))
        }
        WitnessKind::Embed => Ok(embed(truncation)),
        WitnessKind::Nonregular => {
            let specs = match spec {
                Some(p) => {
                    let v = json::parse_value(&read(p)?).map_err(|e| json_err(p, e))?;
                    let items = match &v {
                        Value::Array(a) => a.clone(),
                        other => vec![other.clone()],
                    };
                    items
                        .iter()
                        .map(|s| BasicNbdSpec::from_json(s).map_err(|e| input(format!("{}: {e}", p.display()))))
                        .collect::<Result<Vec<_>, _>>()?
                }
                None => default_specs(truncation),
            };
            let c = build_c(truncation).map_err(werr)?;
            let mut certs = vec![
                convergents_certificate(truncation),
                saturation_check(&c).map_err(werr)?,
                closedness_check(&c).map_err(werr)?,
            ];
            for s in &specs {
                certs.push(witness_search(s, truncation).map_err(werr)?.certificate);
            }
            Ok(certificates_outcome(certs))
        }
    }
}

/// `smash_embed` on the grid `{i/M : -M <= i <= M}²`.
fn embed(m: usize) -> Outcome {
    let k = m as i64;
    let mut images = Vec::new();
    let mut seen = std::collections::BTreeMap::new();
    let (mut collapsed, mut injective, mut region) = (true, true, true);
    for i in -k..=k {
        for j in -k..=k {
            let (x, y) = (q(i, k), q(j, k));
            let f = smash_embed(&x, &y).expect("grid lies in [-1, 1]²");
            let wedge = i == 0 || j == 0;
            let origin = f.0 == q(0, 1) && f.1 == q(0, 1);
            collapsed &= wedge == origin;
            if !wedge && seen.insert(f.clone(), (i, j)).is_some() {
                injective = false;
            }
            if i >= 0 && j >= 0 {
                region &= image_membership(&f);
            }
            images.push(witness::rat::vec_to_json(&[x, y, f.0, f.1]));
        }
    }
    let ok = collapsed && injective && region;
    let v = json!({
        "grid": m,
        "images": images,
        "wedge_collapses_to_origin": collapsed,
        "injective_off_wedge": injective,
        "quadrant_image_in_region": region,
    });
    Outcome::json(verdict(ok), v)
}

fn verify(cli: &Cli, file: &Path) -> Res {
    json_only(cli, "a verification report")?;
    let v = json::parse_value(&read(file)?).map_err(|e| json_err(file, e))?;
    let items = match v.get("certificates") {
        Some(Value::Array(a)) => a.clone(),
        _ => vec![v],
    };
    let mut results = Vec::new();
    let mut ok = true;
    for it in &items {
        let c = Certificate::from_json(it).map_err(|e| input(format!("{}: {e}", file.display())))?;
        let r = c.verify();
        ok &= r.is_ok();
        results.push(json!({ "kind": c.kind.name(), "verified": r.is_ok(), "error": r.err().map(|e| e.to_string()) }));
    }
    Ok(Outcome::json(verdict(ok), json!({ "results": results })))
}

fn homeo(cli: &Cli, a: &Path, b: &Path) -> Res {
    json_only(cli, "a homeomorphism report")?;
    let (sa, _) = load_space(a)?;
    let (sb, _) = load_space(b)?;
    let (r, stats) = find_homeomorphism(&sa, &sb, cli.budget);
    let v = match &r {
        HomeoSearch::Found(m) => {
            json!({ "result": "homeomorphic", "assignment": m.assignment(), "nodes": stats.nodes })
        }
        HomeoSearch::NotHomeomorphic(why) => {
            json!({ "result": "not homeomorphic", "reason": format!("{why:?}"), "nodes": stats.nodes })
        }
        HomeoSearch::Inconclusive => json!({ "result": "inconclusive", "nodes": stats.nodes }),
    };
    let status = match r {
        HomeoSearch::Found(_) => Status::Pass,
        HomeoSearch::NotHomeomorphic(_) => Status::No,
        HomeoSearch::Inconclusive => Status::Inconclusive,
    };
    Ok(Outcome::json(status, v))
}
