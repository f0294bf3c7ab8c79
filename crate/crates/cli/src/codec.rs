//! Parsing of command-line values and JSON encoding of results.

use std::path::Path;

use irrep_core::gelfand::{GTWeight, GroupTag};
use irrep_core::linalg::{CMatrix, CVector, SparseOperator};
use irrep_core::perm::{CycleType, Permutation};
use irrep_core::tableaux::{StandardTableau, YoungDiagram};
use nalgebra::DMatrix;
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::CliError;

type Parsed<T> = std::result::Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Splits `3,2,1`, `[3,2,1]` or `3 2 1`.
fn list_items(s: &str) -> Vec<&str> {
    s.trim()
        .trim_start_matches('[')
        .trim_end_matches(']')
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .collect()
}

pub fn usize_list(s: &str) -> std::result::Result<Vec<usize>, String> {
    list_items(s).into_iter().map(|t| t.parse().map_err(|_| format!("expected a non-negative integer, got {t:?}"))).collect()
}

pub fn i64_list(s: &str) -> std::result::Result<Vec<i64>, String> {
    list_items(s).into_iter().map(|t| t.parse().map_err(|_| format!("expected an integer, got {t:?}"))).collect()
}

pub fn f64_list(s: &str) -> std::result::Result<Vec<f64>, String> {
    list_items(s).into_iter().map(|t| t.parse().map_err(|_| format!("expected a number, got {t:?}"))).collect()
}

pub fn shape(rows: &[usize]) -> Parsed<YoungDiagram> {
    Ok(YoungDiagram::new(rows.to_vec())?)
}

pub fn permutation(images: &[usize]) -> Parsed<Permutation> {
    Ok(Permutation::new(images.to_vec())?)
}

pub fn cycle_type(parts: &[usize]) -> Parsed<CycleType> {
    Ok(CycleType::new(parts.to_vec())?)
}

/// Inline JSON, or the contents of a file when the text is not JSON.
pub fn json_input(text: &str) -> Parsed<Value> {
    if let Ok(v) = serde_json::from_str(text) {
        return Ok(v);
    }
    let path = Path::new(text);
    let contents = std::fs::read_to_string(path).map_err(|e| usage(format!("{text:?} is neither JSON nor a readable file: {e}")))?;
    serde_json::from_str(&contents).map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// A tableau from inline row JSON (`[[1,3],[2]]`) or a row-reading word cut by `shape`.
pub fn tableau(rows: Option<&str>, word: Option<&[usize]>, shape: Option<&YoungDiagram>) -> Parsed<StandardTableau> {
    match (rows, word) {
        (Some(text), None) => {
            let rows: Vec<Vec<usize>> = serde_json::from_value(json_input(text)?).map_err(|e| usage(format!("tableau: {e}")))?;
            Ok(StandardTableau::from_rows(rows)?)
        }
        (None, Some(word)) => {
            let shape = shape.ok_or_else(|| usage("a reading word needs --shape"))?;
            Ok(StandardTableau::from_reading_word(shape, word)?)
        }
        _ => Err(usage("give a tableau either as row JSON or as a reading word")),
    }
}

pub fn group(name: &str) -> Parsed<GroupTag> {
    match name {
        "gl" | "u" | "su" => Ok(GroupTag::Gl),
        "so_odd" => Ok(GroupTag::SoOdd),
        "so_even" => Ok(GroupTag::SoEven),
        other => Err(usage(format!("unknown group {other:?}; expected gl, u, so_odd or so_even"))),
    }
}

fn doubled(entries: &[f64]) -> Parsed<Vec<i64>> {
    entries
        .iter()
        .map(|&e| {
            let twice = 2.0 * e;
            if (twice - twice.round()).abs() > 1e-9 {
                Err(usage(format!("weight entry {e} is not a multiple of 1/2")))
            } else {
                Ok(twice.round() as i64)
            }
        })
        .collect()
}

/// A weight given as weight JSON or as a list of (half-)integers for `group`.
pub fn weight(text: &str, group_name: &str) -> Parsed<GTWeight> {
    if text.trim_start().starts_with('{') {
        return serde_json::from_str(text).map_err(|e| usage(format!("weight: {e}")));
    }
    let entries = f64_list(text).map_err(usage)?;
    Ok(GTWeight::new(group(group_name)?, doubled(&entries)?)?)
}

/// A weight for `SO(n)` with `n` fixed by the matrix it acts on.
pub fn so_weight(text: &str, n: usize) -> Parsed<GTWeight> {
    if text.trim_start().starts_with('{') {
        return serde_json::from_str(text).map_err(|e| usage(format!("weight: {e}")));
    }
    let entries = f64_list(text).map_err(usage)?;
    Ok(GTWeight::so(n, doubled(&entries)?)?)
}

pub fn integer_weight(text: &str) -> Parsed<Vec<i64>> {
    i64_list(text).map_err(usage)
}

fn complex(v: &Value) -> Parsed<Complex64> {
    match v {
        Value::Number(x) => Ok(Complex64::new(x.as_f64().unwrap_or(f64::NAN), 0.0)),
        Value::Array(pair) if pair.len() == 2 => match (pair[0].as_f64(), pair[1].as_f64()) {
            (Some(re), Some(im)) => Ok(Complex64::new(re, im)),
            _ => Err(usage("complex entries are [re, im] number pairs")),
        },
        _ => Err(usage("complex entries are numbers or [re, im] pairs")),
    }
}

fn unwrap_key<'a>(v: &'a Value, key: &str) -> &'a Value {
    v.get(key).unwrap_or(v)
}

/// Nested rows of `[re, im]` pairs (or reals), bare, under `"matrix"`, or as sparse `{dim, entries}`.
pub fn matrix(text: &str) -> Parsed<CMatrix> {
    let v = json_input(text)?;
    if let (Some(dim), Some(Value::Array(entries))) = (v.get("dim").and_then(Value::as_u64), v.get("entries")) {
        let dim = dim as usize;
        let mut m = CMatrix::zeros(dim, dim);
        for e in entries {
            let (Some(r), Some(c), Some(z)) = (e.get(0).and_then(Value::as_u64), e.get(1).and_then(Value::as_u64), e.get(2)) else {
                return Err(usage("sparse entries are [row, col, [re, im]]"));
            };
            if r as usize >= dim || c as usize >= dim {
                return Err(usage("sparse entry out of range"));
            }
            m[(r as usize, c as usize)] = complex(z)?;
        }
        return Ok(m);
    }
    let Value::Array(rows) = unwrap_key(&v, "matrix") else {
        return Err(usage("matrix must be an array of rows"));
    };
    let nrows = rows.len();
    let ncols = rows.first().and_then(Value::as_array).map_or(0, Vec::len);
    let mut m = CMatrix::zeros(nrows, ncols);
    for (r, row) in rows.iter().enumerate() {
        let row = row.as_array().filter(|row| row.len() == ncols).ok_or_else(|| usage("matrix rows must have equal length"))?;
        for (c, z) in row.iter().enumerate() {
            m[(r, c)] = complex(z)?;
        }
    }
    Ok(m)
}

pub fn real_matrix(text: &str) -> Parsed<DMatrix<f64>> {
    let m = matrix(text)?;
    if m.iter().any(|z| z.im.abs() > 1e-12) {
        return Err(usage("expected a real matrix"));
    }
    Ok(m.map(|z| z.re))
}

pub fn vector(text: &str) -> Parsed<CVector> {
    let v = json_input(text)?;
    let Value::Array(items) = unwrap_key(&v, "vector") else {
        return Err(usage("vector must be an array"));
    };
    Ok(CVector::from_vec(items.iter().map(complex).collect::<Parsed<_>>()?))
}

pub fn complex_list(text: &str) -> Parsed<Vec<Complex64>> {
    match json_input(text)? {
        Value::Array(items) => items.iter().map(complex).collect(),
        _ => Err(usage("expected an array of [re, im] pairs")),
    }
}

pub fn encode_complex(z: Complex64) -> Value {
    json!([z.re, z.im])
}

pub fn encode_matrix(m: &CMatrix) -> Value {
    Value::Array((0..m.nrows()).map(|r| Value::Array((0..m.ncols()).map(|c| encode_complex(m[(r, c)])).collect())).collect())
}

pub fn encode_sparse(op: &SparseOperator) -> Value {
    let entries: Vec<Value> = op.triplets().map(|(r, c, z)| json!([r, c, encode_complex(z)])).collect();
    json!({ "dim": op.dim(), "nnz": entries.len(), "entries": entries })
}

/// Halved entry: an integer when even, otherwise a half-integer.
pub fn encode_half(twice: i64) -> Value {
    if twice % 2 == 0 {
        json!(twice / 2)
    } else {
        json!(twice as f64 / 2.0)
    }
}
