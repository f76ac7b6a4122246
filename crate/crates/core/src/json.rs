//! The JSON exchange formats.
//!
//! A space is `{"points": [labels], "opens": [[indices]], "basepoint": i}`
//! with the basepoint optional. Opens are listed in ascending order of
//! their index lists, each list strictly increasing. Spaces whose open
//! lattice is too large to list are written with `"minimal_opens"`
//! instead: entry `x` is the smallest open containing `x`.

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::expo::ExpSpace;
use crate::finspace::{point_set, CMap, FinSpace, Preorder, TopologyError};
use crate::pointed::{PtMap, PtSpace};

/// Spaces with at most this many opens are written with the full list.
pub const MAX_LISTED_OPENS: u64 = 4096;

#[derive(Debug, Error, PartialEq)]
pub enum JsonError {
    #[error("JSON syntax error at line {line}, column {column}: {msg}")]
    Syntax { line: usize, column: usize, msg: String },
    #[error("{field}: {msg}")]
    Schema { field: String, msg: String },
    #[error("opens do not form a topology: {0}")]
    Topology(TopologyError),
    #[error("a pointed space is required but no \"basepoint\" is given")]
    MissingBasepoint,
}

fn schema(field: impl Into<String>, msg: impl Into<String>) -> JsonError {
    JsonError::Schema {
        field: field.into(),
        msg: msg.into(),
    }
}

pub fn parse_value(text: &str) -> Result<Value, JsonError> {
    serde_json::from_str(text).map_err(|e| JsonError::Syntax {
        line: e.line(),
        column: e.column(),
        msg: e.to_string(),
    })
}

/// Sorted keys, two-space indentation, arrays of scalars on one line, and
/// a trailing newline; identical values give identical bytes.
pub fn to_canonical_string(v: &Value) -> String {
    let mut s = String::new();
    write_value(v, 0, &mut s);
    s.push('\n');
    s
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(a) => a.iter().all(|x| {
            !x.is_object() && (!x.is_array() || x.as_array().unwrap().iter().all(|y| !y.is_array() && !y.is_object()))
        }),
        Value::Object(o) => o.is_empty(),
        _ => true,
    }
}

fn write_value(v: &Value, depth: usize, out: &mut String) {
    let pad = |d: usize| "  ".repeat(d);
    match v {
        Value::Object(o) if !o.is_empty() => {
            out.push_str("{\n");
            let mut keys: Vec<&String> = o.keys().collect();
            keys.sort();
            for (i, k) in keys.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                out.push_str(&Value::String((*k).clone()).to_string());
                out.push_str(": ");
                write_value(&o[k.as_str()], depth + 1, out);
                if i + 1 < keys.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
        Value::Array(a) if !is_flat(v) => {
            out.push_str("[\n");
            for (i, x) in a.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                write_value(x, depth + 1, out);
                if i + 1 < a.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        Value::Array(a) => {
            out.push('[');
            for (i, x) in a.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                write_value(x, depth, out);
            }
            out.push(']');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}

fn index_list(v: &Value, field: &str, n: usize) -> Result<Vec<usize>, JsonError> {
    let items = v
        .as_array()
        .ok_or_else(|| schema(field, "expected an array of point indices"))?;
    let mut out = Vec::with_capacity(items.len());
    for (k, it) in items.iter().enumerate() {
        let i = it
            .as_u64()
            .ok_or_else(|| schema(format!("{field}[{k}]"), format!("{it} is not a point index")))?
            as usize;
        if i >= n {
            return Err(schema(
                format!("{field}[{k}]"),
                format!("index {i} out of range for {n} points"),
            ));
        }
        if let Some(&prev) = out.last() {
            if i <= prev {
                return Err(schema(format!("{field}[{k}]"), "indices must be strictly increasing"));
            }
        }
        out.push(i);
    }
    Ok(out)
}

/// Parses a space and its optional basepoint.
pub fn space_from_value(v: &Value) -> Result<(FinSpace, Option<usize>), JsonError> {
    let obj = v
        .as_object()
        .ok_or_else(|| schema("$", "a space must be a JSON object"))?;
    if let Some(k) = obj
        .keys()
        .find(|k| !["points", "opens", "minimal_opens", "basepoint"].contains(&k.as_str()))
    {
        return Err(schema(k.clone(), "unknown field"));
    }
    let points = obj.get("points").ok_or_else(|| schema("points", "missing"))?;
    let labels: Vec<String> = points
        .as_array()
        .ok_or_else(|| schema("points", "expected an array of strings"))?
        .iter()
        .enumerate()
        .map(|(i, p)| {
            p.as_str()
                .map(str::to_owned)
                .ok_or_else(|| schema(format!("points[{i}]"), "expected a string"))
        })
        .collect::<Result<_, _>>()?;
    let n = labels.len();
    let space = match (obj.get("opens"), obj.get("minimal_opens")) {
        (Some(opens), None) => {
            let list = opens
                .as_array()
                .ok_or_else(|| schema("opens", "expected an array of opens"))?;
            let sets: Vec<Vec<usize>> = list
                .iter()
                .enumerate()
                .map(|(j, o)| index_list(o, &format!("opens[{j}]"), n))
                .collect::<Result<_, _>>()?;
            FinSpace::from_opens(labels, &sets).map_err(JsonError::Topology)?
        }
        (None, Some(mins)) => {
            let list = mins
                .as_array()
                .ok_or_else(|| schema("minimal_opens", "expected an array"))?;
            if list.len() != n {
                return Err(schema(
                    "minimal_opens",
                    format!("expected {n} entries, found {}", list.len()),
                ));
            }
            let ups = list
                .iter()
                .enumerate()
                .map(|(j, o)| Ok(point_set(n, index_list(o, &format!("minimal_opens[{j}]"), n)?)))
                .collect::<Result<Vec<_>, JsonError>>()?;
            Preorder::from_up_sets(labels, ups)
                .map_err(|e| schema("minimal_opens", e.to_string()))?
                .to_space()
        }
        (Some(_), Some(_)) => return Err(schema("opens", "give either \"opens\" or \"minimal_opens\", not both")),
        (None, None) => return Err(schema("opens", "missing")),
    };
    let base = match obj.get("basepoint") {
        None => None,
        Some(b) => {
            let i = b
                .as_u64()
                .ok_or_else(|| schema("basepoint", "expected a point index"))? as usize;
            if i >= n {
                return Err(schema("basepoint", format!("index {i} out of range for {n} points")));
            }
            Some(i)
        }
    };
    Ok((space, base))
}

pub fn parse_space(text: &str) -> Result<(FinSpace, Option<usize>), JsonError> {
    space_from_value(&parse_value(text)?)
}

pub fn parse_pointed(text: &str) -> Result<PtSpace, JsonError> {
    pointed_from_value(&parse_value(text)?)
}

pub fn pointed_from_value(v: &Value) -> Result<PtSpace, JsonError> {
    let (s, b) = space_from_value(v)?;
    let b = b.ok_or(JsonError::MissingBasepoint)?;
    Ok(PtSpace::new(s, b).expect("basepoint range checked"))
}

pub fn space_to_value(s: &FinSpace, base: Option<usize>) -> Value {
    let mut m = Map::new();
    m.insert("points".into(), json!(s.labels()));
    let listable = s.open_count().is_some_and(|c| c <= MAX_LISTED_OPENS);
    if listable {
        let opens: Vec<Vec<usize>> = s.opens().iter().map(|o| o.ones().collect()).collect();
        m.insert("opens".into(), json!(opens));
    } else {
        let ups: Vec<Vec<usize>> = s.up_sets().iter().map(|o| o.ones().collect()).collect();
        m.insert("minimal_opens".into(), json!(ups));
    }
    if let Some(b) = base {
        m.insert("basepoint".into(), json!(b));
    }
    Value::Object(m)
}

pub fn pointed_to_value(x: &PtSpace) -> Value {
    space_to_value(x.space(), Some(x.base()))
}

pub fn map_to_value(m: &CMap) -> Value {
    json!({
        "dom": space_to_value(m.dom(), None),
        "cod": space_to_value(m.cod(), None),
        "assignment": m.assignment(),
    })
}

pub fn ptmap_to_value(m: &PtMap) -> Value {
    json!({
        "dom": pointed_to_value(m.dom()),
        "cod": pointed_to_value(m.cod()),
        "assignment": m.assignment(),
    })
}

/// Parses a map; a continuity failure is reported as a schema error on
/// `"assignment"`.
pub fn map_from_value(v: &Value) -> Result<CMap, JsonError> {
    let (dom, _) =
        space_from_value(v.get("dom").ok_or_else(|| schema("dom", "missing"))?).map_err(|e| nest("dom", e))?;
    let (cod, _) =
        space_from_value(v.get("cod").ok_or_else(|| schema("cod", "missing"))?).map_err(|e| nest("cod", e))?;
    let a = index_assignment(
        v.get("assignment").ok_or_else(|| schema("assignment", "missing"))?,
        cod.len(),
    )?;
    CMap::new(dom, cod, a).map_err(|e| schema("assignment", e.to_string()))
}

fn index_assignment(v: &Value, n: usize) -> Result<Vec<usize>, JsonError> {
    let items = v.as_array().ok_or_else(|| schema("assignment", "expected an array"))?;
    items
        .iter()
        .enumerate()
        .map(|(k, it)| match it.as_u64() {
            Some(i) if (i as usize) < n => Ok(i as usize),
            _ => Err(schema(
                format!("assignment[{k}]"),
                format!("{it} is not a codomain index"),
            )),
        })
        .collect()
}

fn nest(prefix: &str, e: JsonError) -> JsonError {
    match e {
        JsonError::Schema { field, msg } => JsonError::Schema {
            field: format!("{prefix}.{field}"),
            msg,
        },
        other => other,
    }
}

/// The exponential as a space plus, for each of its points, the map it
/// stands for.
pub fn exp_to_value(e: &ExpSpace) -> Value {
    json!({
        "space": space_to_value(e.space(), e.pointed().map(|p| p.base())),
        "maps": e.maps(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finspace::{enumerate_spaces, EnumerationConfig};

    #[test]
    fn canonical_round_trip_is_byte_identical() {
        for n in 1..=4 {
            for s in enumerate_spaces(n, &EnumerationConfig::default()).unwrap() {
                for base in [None, Some(0)] {
                    let text = to_canonical_string(&space_to_value(&s, base));
                    let (t, b) = parse_space(&text).unwrap();
                    assert_eq!(b, base);
                    assert_eq!(t.up_sets(), s.up_sets());
                    assert_eq!(to_canonical_string(&space_to_value(&t, b)), text);
                }
            }
        }
    }

    #[test]
    fn canonical_layout() {
        let v = json!({"b": [[1, 2], [3]], "a": {"x": "q\"", "e": {}}, "c": [{"k": []}]});
        let text = to_canonical_string(&v);
        assert_eq!(
            text,
            "{\n  \"a\": {\n    \"e\": {},\n    \"x\": \"q\\\"\"\n  },\n  \"b\": [[1, 2], [3]],\n  \"c\": [\n    {\n      \"k\": []\n    }\n  ]\n}\n"
        );
        assert_eq!(parse_value(&text).unwrap(), v);
    }

    #[test]
    fn sierpinski_text() {
        let text = to_canonical_string(&space_to_value(&FinSpace::sierpinski(), Some(0)));
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(
            v,
            json!({"basepoint": 0, "opens": [[], [0, 1], [1]], "points": ["a", "b"]})
        );
    }

    #[test]
    fn diagnostics() {
        let e = parse_space(r#"{"points": ["a","b","c"], "opens": [[], [0], [1], [0,1,2]]}"#).unwrap_err();
        assert_eq!(
            e,
            JsonError::Topology(TopologyError::NotUnionClosed { first: 1, second: 2 })
        );
        let e = parse_space("{\"points\": [\"a\"],\n \"opens\": [[], [0]],}").unwrap_err();
        assert!(matches!(e, JsonError::Syntax { line: 2, .. }));
        let e = parse_space(r#"{"points": ["a","b"], "opens": [[], [1,0], [0,1]]}"#).unwrap_err();
        assert!(matches!(e, JsonError::Schema { ref field, .. } if field == "opens[1][1]"));
        let e = parse_space(r#"{"points": ["a"], "opens": [[], [0]], "extra": 1}"#).unwrap_err();
        assert!(matches!(e, JsonError::Schema { ref field, .. } if field == "extra"));
        assert_eq!(
            parse_pointed(r#"{"points": ["a"], "opens": [[], [0]]}"#),
            Err(JsonError::MissingBasepoint)
        );
        let e = parse_space(r#"{"points": ["a"], "opens": [[], [0]], "basepoint": 3}"#).unwrap_err();
        assert!(matches!(e, JsonError::Schema { ref field, .. } if field == "basepoint"));
    }

    #[test]
    fn minimal_opens_form() {
        let v = json!({"points": ["a", "b", "c"], "minimal_opens": [[0, 1, 2], [1], [2]]});
        let (t, _) = space_from_value(&v).unwrap();
        assert!(t.leq(0, 1) && t.leq(0, 2) && !t.leq(1, 2));
        assert_eq!(t.opens().len(), 5);
        assert!(space_from_value(&json!({"points": ["a", "b"], "minimal_opens": [[1], [1]]})).is_err());
        let big = FinSpace::discrete(13);
        let v = space_to_value(&big, None);
        assert!(v.get("minimal_opens").is_some());
        assert_eq!(space_from_value(&v).unwrap().0.up_sets(), big.up_sets());
    }

    #[test]
    fn maps_round_trip() {
        let s = FinSpace::sierpinski();
        let m = CMap::new(s.clone(), s.clone(), vec![1, 1]).unwrap();
        assert_eq!(map_from_value(&map_to_value(&m)).unwrap(), m);
        let bad = json!({"dom": space_to_value(&s, None), "cod": space_to_value(&s, None), "assignment": [1, 0]});
        assert!(matches!(map_from_value(&bad), Err(JsonError::Schema { ref field, .. }) if field == "assignment"));
    }
}
