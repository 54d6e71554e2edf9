//! JSON encodings shared by the CLI and the C API.
//!
//! Keys come out sorted (the default `serde_json` map is ordered) and lists
//! are emitted in a fixed order, so equal inputs give byte-identical output.

use serde::Deserialize;
use serde_json::{json, Value};

use crate::complex::{Face, FacetSpec};
use crate::error::{Error, Result};
use crate::pfaffian::IndexTuple;
use crate::poly::{format_rational, LatticePoint, Monomial, Polynomial};
use crate::tableaux::{Tableau, TwoLinedArray};

pub fn point(p: LatticePoint) -> Value {
    json!([p.row(), p.col()])
}

/// `[[[i,j],e], ...]` ordered by `(i,j)`.
pub fn monomial(m: &Monomial) -> Value {
    let mut factors: Vec<(LatticePoint, u32)> = m.factors().to_vec();
    factors.sort();
    Value::Array(factors.into_iter().map(|(p, e)| json!([point(p), e])).collect())
}

pub fn monomials(ms: &[Monomial]) -> Value {
    Value::Array(ms.iter().map(monomial).collect())
}

/// `[{"coeff":"p/q","monomial":...}, ...]`, leading term first.
pub fn polynomial(f: &Polynomial) -> Value {
    Value::Array(
        f.terms()
            .map(|(m, c)| json!({"coeff": format_rational(c), "monomial": monomial(m)}))
            .collect(),
    )
}

pub fn tuple(t: &IndexTuple) -> Value {
    json!(t.as_slice())
}

pub fn tableau(t: &Tableau) -> Value {
    json!({"columns": t.columns()})
}

pub fn two_lined(a: &TwoLinedArray) -> Value {
    json!({"pairs": a.pairs().iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>()})
}

pub fn face(z: &Face) -> Value {
    Value::Array(z.points().map(point).collect())
}

pub fn facet(f: &FacetSpec) -> Value {
    json!({
        "h": f.h,
        "k": f.k,
        "points": face(f.points()),
        "paths": f.paths.iter().map(|p| p.iter().copied().map(point).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

#[derive(Deserialize)]
struct ColumnsDoc {
    columns: Vec<Vec<u32>>,
}

#[derive(Deserialize)]
struct PairsDoc {
    pairs: Vec<(u32, u32)>,
}

fn parse<'a, T: Deserialize<'a>>(s: &'a str, what: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

/// Reads `{"columns":[[...],...]}`.
pub fn parse_tableau(s: &str) -> Result<Tableau> {
    Tableau::from_columns(parse::<ColumnsDoc>(s, "tableau")?.columns)
}

/// Reads `{"pairs":[[u,v],...]}`.
pub fn parse_two_lined(s: &str) -> Result<TwoLinedArray> {
    Ok(TwoLinedArray::new(parse::<PairsDoc>(s, "two-lined array")?.pairs))
}

/// Canonical rendering: no whitespace, sorted keys, trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = v.to_string();
    s.push('\n');
    s
}
