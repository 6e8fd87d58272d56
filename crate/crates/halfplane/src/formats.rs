//! JSON interchange formats.
//!
//! Rationals are strings `"p/q"` (a bare integer string is accepted on
//! input). Matroid elements and graph vertices are 1-indexed in files and
//! 0-indexed in memory.

use std::collections::BTreeSet;

use halfplane_core::combstruct::{Edge, Matroid, SupportSet, WeightedGraph};
use halfplane_core::linalg::Matrix;
use halfplane_core::number::{self, cx, format_rational, parse_rational};
use halfplane_core::{ComplexRational, Polynomial, Rational};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

/// Input that does not match a format.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct FormatError(pub String);

fn bad(msg: impl Into<String>) -> FormatError {
    FormatError(msg.into())
}

type Parsed<T> = std::result::Result<T, FormatError>;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermJson {
    exp: Vec<u32>,
    re: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    im: Option<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolynomialJson {
    nvars: usize,
    terms: Vec<TermJson>,
}

fn rational(text: &str) -> Parsed<Rational> {
    parse_rational(text).ok_or_else(|| bad(format!("not a rational: {text:?}")))
}

pub fn rational_json(q: &Rational) -> Value {
    Value::String(format_rational(q))
}

pub fn rationals_json(qs: &[Rational]) -> Value {
    Value::Array(qs.iter().map(rational_json).collect())
}

pub fn polynomial_from_value(v: Value) -> Parsed<Polynomial> {
    let raw: PolynomialJson = serde_json::from_value(v).map_err(|e| bad(format!("polynomial: {e}")))?;
    let mut seen = BTreeSet::new();
    let mut terms = Vec::with_capacity(raw.terms.len());
    for (k, t) in raw.terms.into_iter().enumerate() {
        if t.exp.len() != raw.nvars {
            return Err(bad(format!("term {k}: exponent has length {}, expected {}", t.exp.len(), raw.nvars)));
        }
        if !seen.insert(t.exp.clone()) {
            return Err(bad(format!("term {k}: duplicate exponent {:?}", t.exp)));
        }
        let re = rational(&t.re)?;
        let im = match &t.im {
            Some(s) => rational(s)?,
            None => number::int(0),
        };
        let c = cx(re, im);
        if number::c_is_zero(&c) {
            return Err(bad(format!("term {k}: zero coefficient")));
        }
        terms.push((t.exp, c));
    }
    Polynomial::from_terms(raw.nvars, terms).map_err(|e| bad(e.to_string()))
}

pub fn parse_polynomial(text: &str) -> Parsed<Polynomial> {
    polynomial_from_value(serde_json::from_str(text).map_err(|e| bad(format!("json: {e}")))?)
}

/// Canonical form: terms in increasing exponent order, `im` always written.
pub fn polynomial_json(f: &Polynomial) -> Value {
    let terms = f
        .terms()
        .map(|(e, c)| json!({ "exp": e, "re": format_rational(&c.re), "im": format_rational(&c.im) }))
        .collect::<Vec<_>>();
    json!({ "nvars": f.nvars(), "terms": terms })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SupportJson {
    dim: usize,
    points: Vec<Vec<i64>>,
}

pub fn parse_support(text: &str) -> Parsed<SupportSet> {
    let raw: SupportJson = serde_json::from_str(text).map_err(|e| bad(format!("support: {e}")))?;
    SupportSet::new(raw.dim, raw.points).map_err(|e| bad(e.to_string()))
}

pub fn support_json(s: &SupportSet) -> Value {
    json!({ "dim": s.dim(), "points": s.points().collect::<Vec<_>>() })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MatroidJson {
    n: usize,
    bases: Vec<Vec<usize>>,
}

/// Ground size and 0-indexed basis list, before any axiom check.
pub fn parse_set_family(text: &str) -> Parsed<(usize, Vec<Vec<usize>>)> {
    let raw: MatroidJson = serde_json::from_str(text).map_err(|e| bad(format!("matroid: {e}")))?;
    let mut family = Vec::with_capacity(raw.bases.len());
    for b in raw.bases {
        let mut set = Vec::with_capacity(b.len());
        for e in b {
            if e == 0 || e > raw.n {
                return Err(bad(format!("element {e} outside 1..={}", raw.n)));
            }
            set.push(e - 1);
        }
        set.sort_unstable();
        if set.windows(2).any(|w| w[0] == w[1]) {
            return Err(bad("repeated element in a basis"));
        }
        family.push(set);
    }
    Ok((raw.n, family))
}

pub fn one_based(set: &[usize]) -> Vec<usize> {
    set.iter().map(|e| e + 1).collect()
}

pub fn matroid_json(m: &Matroid) -> Value {
    let bases: Vec<Vec<usize>> = m.bases().iter().map(|b| one_based(b)).collect();
    json!({ "n": m.ground_size(), "bases": bases })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeJson {
    u: usize,
    v: usize,
    #[serde(default)]
    w: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    n: usize,
    edges: Vec<EdgeJson>,
}

/// Graph with 1-indexed endpoints; a missing weight means 1.
pub fn parse_graph(text: &str) -> Parsed<WeightedGraph> {
    let raw: GraphJson = serde_json::from_str(text).map_err(|e| bad(format!("graph: {e}")))?;
    let mut edges = Vec::with_capacity(raw.edges.len());
    for e in raw.edges {
        if e.u == 0 || e.v == 0 {
            return Err(bad("vertices are numbered from 1"));
        }
        let weight = match &e.w {
            Some(w) => rational(w)?,
            None => number::int(1),
        };
        edges.push(Edge { u: e.u - 1, v: e.v - 1, weight });
    }
    WeightedGraph::new(raw.n, edges).map_err(|e| bad(e.to_string()))
}

fn entry(v: &Value) -> Parsed<ComplexRational> {
    match v {
        Value::String(s) => Ok(cx(rational(s)?, number::int(0))),
        Value::Number(n) => {
            let k = n.as_i64().ok_or_else(|| bad(format!("matrix entry {n} is not an integer")))?;
            Ok(number::cint(k, 0))
        }
        Value::Object(map) => {
            if map.keys().any(|k| k != "re" && k != "im") {
                return Err(bad("matrix entry objects have only \"re\" and \"im\""));
            }
            let part = |key: &str| match map.get(key) {
                None => Ok(number::int(0)),
                Some(Value::String(s)) => rational(s),
                Some(other) => Err(bad(format!("{key}: expected a \"p/q\" string, found {other}"))),
            };
            Ok(cx(part("re")?, part("im")?))
        }
        other => Err(bad(format!("bad matrix entry {other}"))),
    }
}

pub fn matrix_from_value(v: &Value) -> Parsed<Matrix> {
    let rows = v.as_array().ok_or_else(|| bad("matrix must be an array of rows"))?;
    let rows = rows
        .iter()
        .map(|r| r.as_array().ok_or_else(|| bad("matrix row must be an array"))?.iter().map(entry).collect())
        .collect::<Parsed<Vec<Vec<_>>>>()?;
    if rows.is_empty() {
        return Ok(Matrix::zeros(0, 0));
    }
    Matrix::from_rows(rows).map_err(|e| bad(e.to_string()))
}

pub fn parse_matrix(text: &str) -> Parsed<Matrix> {
    matrix_from_value(&serde_json::from_str(text).map_err(|e| bad(format!("json: {e}")))?)
}

/// `{"pencil": [A_1, …], "constant": B}`.
pub fn parse_pencil(text: &str) -> Parsed<(Vec<Matrix>, Matrix)> {
    let v: Value = serde_json::from_str(text).map_err(|e| bad(format!("json: {e}")))?;
    let obj = v.as_object().ok_or_else(|| bad("pencil input must be an object"))?;
    if obj.keys().any(|k| k != "pencil" && k != "constant") {
        return Err(bad("pencil input has only \"pencil\" and \"constant\""));
    }
    let pencil = obj
        .get("pencil")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing \"pencil\" array"))?
        .iter()
        .map(matrix_from_value)
        .collect::<Parsed<Vec<_>>>()?;
    let constant = matrix_from_value(obj.get("constant").ok_or_else(|| bad("missing \"constant\""))?)?;
    Ok((pencil, constant))
}

pub fn matrix_json(a: &Matrix) -> Value {
    let rows: Vec<Value> = a
        .row_vectors()
        .iter()
        .map(|r| {
            Value::Array(
                r.iter()
                    .map(|c| json!({ "re": format_rational(&c.re), "im": format_rational(&c.im) }))
                    .collect(),
            )
        })
        .collect();
    Value::Array(rows)
}

pub fn graph_json(g: &WeightedGraph) -> Value {
    let edges: Vec<Value> = g
        .edges()
        .iter()
        .map(|e| json!({ "u": e.u + 1, "v": e.v + 1, "w": format_rational(&e.weight) }))
        .collect();
    json!({ "n": g.vertex_count(), "edges": edges })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_round_trip() {
        let text = r#"{"nvars":2,"terms":[{"exp":[1,1],"re":"2/4"},{"exp":[0,0],"re":"-1","im":"3/1"}]}"#;
        let f = parse_polynomial(text).unwrap();
        let again = polynomial_from_value(polynomial_json(&f)).unwrap();
        assert_eq!(f, again);
        assert_eq!(polynomial_json(&f)["terms"][0]["im"], "3/1");
        assert_eq!(polynomial_json(&f)["terms"][1]["re"], "1/2");
    }

    #[test]
    fn polynomial_rejects_zero_and_duplicates() {
        assert!(parse_polynomial(r#"{"nvars":1,"terms":[{"exp":[1],"re":"0"}]}"#).is_err());
        assert!(parse_polynomial(r#"{"nvars":1,"terms":[{"exp":[1],"re":"1"},{"exp":[1],"re":"2"}]}"#).is_err());
        assert!(parse_polynomial(r#"{"nvars":2,"terms":[{"exp":[1],"re":"1"}]}"#).is_err());
        assert!(parse_polynomial(r#"{"nvars":1,"terms":[{"exp":[1],"re":"1/0"}]}"#).is_err());
    }

    #[test]
    fn matroid_and_graph_are_one_based() {
        let (n, fam) = parse_set_family(r#"{"n":3,"bases":[[1,2],[3,1]]}"#).unwrap();
        assert_eq!((n, fam), (3, vec![vec![0, 1], vec![0, 2]]));
        assert!(parse_set_family(r#"{"n":3,"bases":[[0,1]]}"#).is_err());
        let g = parse_graph(r#"{"n":2,"edges":[{"u":1,"v":2,"w":"3/2"}]}"#).unwrap();
        assert_eq!(g.edges()[0].weight, number::rat(3, 2));
        assert_eq!(graph_json(&g)["edges"][0]["u"], 1);
    }

    #[test]
    fn matrix_entries() {
        let a = parse_matrix(r#"[["1", {"re":"0","im":"1"}], [{"im":"-1"}, 2]]"#).unwrap();
        assert!(a.is_hermitian());
        assert_eq!(matrix_from_value(&matrix_json(&a)).unwrap(), a);
        assert!(parse_matrix(r#"[["1"], ["1", "2"]]"#).is_err());
    }
}
