//! Re-checkable certificates: witness points plus exact inequalities.

use std::fmt;

use serde_json::{json, Map, Value};

use super::rat::{self, Rat};
use super::WitnessError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rel {
    Lt,
    Le,
    Eq,
    Ne,
    Ge,
    Gt,
}

impl Rel {
    pub fn holds(self, a: &Rat, b: &Rat) -> bool {
        match self {
            Rel::Lt => a < b,
            Rel::Le => a <= b,
            Rel::Eq => a == b,
            Rel::Ne => a != b,
            Rel::Ge => a >= b,
            Rel::Gt => a > b,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Rel::Lt => "<",
            Rel::Le => "<=",
            Rel::Eq => "=",
            Rel::Ne => "!=",
            Rel::Ge => ">=",
            Rel::Gt => ">",
        }
    }

    pub fn parse(s: &str) -> Result<Self, WitnessError> {
        Ok(match s {
            "<" => Rel::Lt,
            "<=" => Rel::Le,
            "=" => Rel::Eq,
            "!=" => Rel::Ne,
            ">=" => Rel::Ge,
            ">" => Rel::Gt,
            _ => return Err(WitnessError::Invalid(format!("unknown relation {s:?}"))),
        })
    }
}

/// `lhs rel rhs`, with a note saying what it establishes.
#[derive(Clone, Debug, PartialEq)]
pub struct Inequality {
    pub lhs: Rat,
    pub rel: Rel,
    pub rhs: Rat,
    pub what: String,
}

impl Inequality {
    pub fn new(lhs: Rat, rel: Rel, rhs: Rat, what: impl Into<String>) -> Self {
        Inequality {
            lhs,
            rel,
            rhs,
            what: what.into(),
        }
    }

    pub fn holds(&self) -> bool {
        self.rel.holds(&self.lhs, &self.rhs)
    }
}

impl fmt::Display for Inequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}  ({})", self.lhs, self.rel.symbol(), self.rhs, self.what)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Basis,
    Diagonal,
    NonCompact,
    Convergents,
    Saturation,
    Closedness,
    Search,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Basis => "basis_refinement",
            Kind::Diagonal => "diagonal",
            Kind::NonCompact => "noncompact",
            Kind::Convergents => "sqrt2_convergents",
            Kind::Saturation => "saturation",
            Kind::Closedness => "closedness",
            Kind::Search => "witness_search",
        }
    }

    pub fn parse(s: &str) -> Result<Self, WitnessError> {
        [
            Kind::Basis,
            Kind::Diagonal,
            Kind::NonCompact,
            Kind::Convergents,
            Kind::Saturation,
            Kind::Closedness,
            Kind::Search,
        ]
        .into_iter()
        .find(|k| k.name() == s)
        .ok_or_else(|| WitnessError::Invalid(format!("unknown certificate kind {s:?}")))
    }
}

/// Everything needed to re-check a claim: the inputs it was built from,
/// the witness points, and the inequalities they satisfy.
#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub kind: Kind,
    pub claim: String,
    pub witnesses: Vec<Vec<Rat>>,
    pub inequalities: Vec<Inequality>,
    pub truncation: Option<usize>,
    pub inputs: Value,
    pub notes: Vec<String>,
}

impl Certificate {
    pub fn new(kind: Kind, claim: impl Into<String>, inputs: Value) -> Self {
        Certificate {
            kind,
            claim: claim.into(),
            witnesses: Vec::new(),
            inequalities: Vec::new(),
            truncation: None,
            inputs,
            notes: Vec::new(),
        }
    }

    pub fn push(&mut self, lhs: Rat, rel: Rel, rhs: Rat, what: impl Into<String>) {
        self.inequalities.push(Inequality::new(lhs, rel, rhs, what));
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    /// First inequality that fails, if any.
    pub fn first_failure(&self) -> Option<&Inequality> {
        self.inequalities.iter().find(|i| !i.holds())
    }

    pub fn holds(&self) -> bool {
        self.first_failure().is_none()
    }

    /// Re-evaluates every inequality, then rebuilds the certificate from its
    /// recorded inputs and requires the two to agree.
    pub fn verify(&self) -> Result<(), WitnessError> {
        if let Some(bad) = self.first_failure() {
            return Err(WitnessError::Verify(format!("inequality fails: {bad}")));
        }
        let rebuilt = super::rebuild(self.kind, &self.inputs)?;
        if rebuilt.witnesses != self.witnesses {
            return Err(WitnessError::Verify(
                "witness points differ from a fresh rebuild".into(),
            ));
        }
        if rebuilt.inequalities.len() != self.inequalities.len() {
            return Err(WitnessError::Verify(format!(
                "{} inequalities recorded, rebuild gives {}",
                self.inequalities.len(),
                rebuilt.inequalities.len()
            )));
        }
        if let Some((i, _)) = rebuilt
            .inequalities
            .iter()
            .zip(&self.inequalities)
            .enumerate()
            .find(|(_, (a, b))| a != b)
        {
            return Err(WitnessError::Verify(format!(
                "inequality {i} differs from a fresh rebuild"
            )));
        }
        if rebuilt.truncation != self.truncation {
            return Err(WitnessError::Verify("truncation differs from a fresh rebuild".into()));
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("kind".into(), json!(self.kind.name()));
        m.insert("claim".into(), json!(self.claim));
        m.insert(
            "witnesses".into(),
            Value::Array(self.witnesses.iter().map(|w| rat::vec_to_json(w)).collect()),
        );
        m.insert(
            "inequalities".into(),
            Value::Array(
                self.inequalities
                    .iter()
                    .map(|i| {
                        json!({
                            "lhs": rat::to_json(&i.lhs),
                            "rel": i.rel.symbol(),
                            "rhs": rat::to_json(&i.rhs),
                            "what": i.what,
                        })
                    })
                    .collect(),
            ),
        );
        m.insert("truncation".into(), self.truncation.map_or(Value::Null, Value::from));
        m.insert("inputs".into(), self.inputs.clone());
        m.insert("notes".into(), json!(self.notes));
        Value::Object(m)
    }

    pub fn from_json(v: &Value) -> Result<Self, WitnessError> {
        let field = |k: &str| {
            v.get(k)
                .ok_or_else(|| WitnessError::Invalid(format!("certificate lacks {k:?}")))
        };
        let text = |k: &str| -> Result<String, WitnessError> {
            field(k)?
                .as_str()
                .map(str::to_owned)
                .ok_or_else(|| WitnessError::Invalid(format!("{k:?} is not a string")))
        };
        let array = |k: &str| -> Result<&Vec<Value>, WitnessError> {
            field(k)?
                .as_array()
                .ok_or_else(|| WitnessError::Invalid(format!("{k:?} is not an array")))
        };
        let witnesses = array("witnesses")?
            .iter()
            .map(rat::vec_from_json)
            .collect::<Result<_, _>>()?;
        let inequalities = array("inequalities")?
            .iter()
            .map(|i| {
                let rel = i["rel"]
                    .as_str()
                    .ok_or_else(|| WitnessError::Invalid("\"rel\" is not a string".into()))?;
                Ok(Inequality {
                    lhs: rat::from_json(&i["lhs"])?,
                    rel: Rel::parse(rel)?,
                    rhs: rat::from_json(&i["rhs"])?,
                    what: i["what"].as_str().unwrap_or_default().to_owned(),
                })
            })
            .collect::<Result<_, WitnessError>>()?;
        let truncation = match field("truncation")? {
            Value::Null => None,
            t => Some(
                t.as_u64()
                    .ok_or_else(|| WitnessError::Invalid("bad truncation".into()))? as usize,
            ),
        };
        let notes = match v.get("notes") {
            Some(Value::Array(a)) => a.iter().map(|s| s.as_str().unwrap_or_default().to_owned()).collect(),
            _ => Vec::new(),
        };
        Ok(Certificate {
            kind: Kind::parse(&text("kind")?)?,
            claim: text("claim")?,
            witnesses,
            inequalities,
            truncation,
            inputs: field("inputs")?.clone(),
            notes,
        })
    }
}
