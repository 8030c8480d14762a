//! Canonical text format for algebras, pairs and tensors.
//!
//! Documents are JSON objects tagged by `"kind"`. Structure constants are
//! stored sparsely as `[left, right, output, "p/q"]` entries (meaning
//! `e_left e_right` has coefficient `p/q` on `e_output`), sorted
//! lexicographically, zeros omitted. Operators are dense row-major matrices
//! of scalar strings. The writer is canonical: the same value always
//! serializes to the same bytes.
//!
//! ```text
//! {
//!   "kind": "anticomm-algebra",
//!   "dim": 3,
//!   "basis": ["e0", "e1", "e2"],
//!   "c": [
//!     [0, 1, 2, "1"],
//!     [0, 2, 1, "-1"],
//!     ...
//!   ]
//! }
//! ```

use std::fmt::Write as _;
use std::path::Path;

use num_traits::Zero;
use serde::Deserialize;
use sha2::{Digest, Sha256};

use crate::algebra::{AnticommAlgebra, Bilinear, BinaryAlgebra};
use crate::error::{Error, Result};
use crate::pair::MoufangMaltsevPair;
use crate::scalar::{format_scalar, parse_scalar, Scalar};
use crate::tensor::{Matrix, Tensor3, Tensor4};

pub const KIND_BINARY: &str = "binary-algebra";
pub const KIND_ANTICOMM: &str = "anticomm-algebra";
pub const KIND_PAIR: &str = "pair";
pub const KIND_TENSOR4: &str = "tensor4";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Binary(BinaryAlgebra),
    Anticomm(AnticommAlgebra),
    Pair(MoufangMaltsevPair),
    Tensor4(Tensor4),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Binary(_) => KIND_BINARY,
            Document::Anticomm(_) => KIND_ANTICOMM,
            Document::Pair(_) => KIND_PAIR,
            Document::Tensor4(_) => KIND_TENSOR4,
        }
    }
}

/// Lowercase hex SHA-256 of the exact bytes.
pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

type Entry3 = (usize, usize, usize, String);
type Entry4 = (usize, usize, usize, usize, String);
type RawMatrices = Vec<Vec<Vec<String>>>;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    kind: String,
    dim: Option<usize>,
    rep_dim: Option<usize>,
    unit: Option<usize>,
    basis: Option<Vec<String>>,
    mult: Option<Vec<Entry3>>,
    c: Option<Vec<Entry3>>,
    s_ops: Option<RawMatrices>,
    t_ops: Option<RawMatrices>,
    dims: Option<[usize; 4]>,
    entries: Option<Vec<Entry4>>,
}

fn required<T>(field: Option<T>, name: &str, kind: &str) -> Result<T> {
    field.ok_or_else(|| Error::format(name, format!("required for kind {kind:?}")))
}

fn forbid<T>(field: &Option<T>, name: &str, kind: &str) -> Result<()> {
    match field {
        Some(_) => Err(Error::format(
            name,
            format!("not allowed for kind {kind:?}"),
        )),
        None => Ok(()),
    }
}

fn scalar_at(text: &str, path: impl FnOnce() -> String) -> Result<Scalar> {
    parse_scalar(text).map_err(|e| Error::format(path(), e.to_string()))
}

fn sparse3(entries: &[Entry3], dim: usize, field: &str) -> Result<Tensor3> {
    let mut t = Tensor3::cube(dim);
    let mut prev: Option<(usize, usize, usize)> = None;
    for (n, (i, j, k, v)) in entries.iter().enumerate() {
        let path = || format!("{field}[{n}]");
        if *i >= dim || *j >= dim || *k >= dim {
            return Err(Error::format(
                path(),
                format!("index out of range for dimension {dim}"),
            ));
        }
        let key = (*i, *j, *k);
        if prev.is_some_and(|p| p >= key) {
            return Err(Error::format(path(), "entries must be sorted and unique"));
        }
        prev = Some(key);
        let s = scalar_at(v, path)?;
        if s.is_zero() {
            return Err(Error::format(path(), "zero entries must be omitted"));
        }
        t[(*k, *i, *j)] = s;
    }
    Ok(t)
}

fn dense_ops(ops: &[Vec<Vec<String>>], n: usize, field: &str) -> Result<Vec<Matrix>> {
    ops.iter()
        .enumerate()
        .map(|(a, rows)| {
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(Error::format(
                    format!("{field}[{a}]"),
                    format!("expected a {n}x{n} matrix"),
                ));
            }
            let parsed = rows
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    row.iter()
                        .enumerate()
                        .map(|(j, v)| scalar_at(v, || format!("{field}[{a}][{i}][{j}]")))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            Matrix::from_rows(parsed)
        })
        .collect()
}

fn positive_dim(dim: usize) -> Result<usize> {
    if dim == 0 {
        return Err(Error::format("dim", "must be positive"));
    }
    Ok(dim)
}

fn basis_names(basis: Option<Vec<String>>, dim: usize) -> Result<Option<Vec<String>>> {
    if let Some(names) = &basis {
        if names.len() != dim {
            return Err(Error::format(
                "basis",
                format!("expected {dim} names, found {}", names.len()),
            ));
        }
    }
    Ok(basis)
}

/// Parses a document, enforcing shape, canonical ordering and normalized
/// scalars. Syntax errors carry a line and column.
pub fn parse_document(text: &str) -> Result<Document> {
    let raw: RawDocument = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let kind = raw.kind.as_str();
    match kind {
        KIND_BINARY => {
            forbid(&raw.c, "c", kind)?;
            forbid(&raw.rep_dim, "rep_dim", kind)?;
            forbid(&raw.s_ops, "s_ops", kind)?;
            forbid(&raw.t_ops, "t_ops", kind)?;
            forbid(&raw.dims, "dims", kind)?;
            forbid(&raw.entries, "entries", kind)?;
            let dim = positive_dim(required(raw.dim, "dim", kind)?)?;
            let mult = sparse3(&required(raw.mult, "mult", kind)?, dim, "mult")?;
            let names = basis_names(raw.basis, dim)?;
            Ok(Document::Binary(BinaryAlgebra::new(mult, names, raw.unit)?))
        }
        KIND_ANTICOMM => {
            forbid(&raw.mult, "mult", kind)?;
            forbid(&raw.unit, "unit", kind)?;
            forbid(&raw.rep_dim, "rep_dim", kind)?;
            forbid(&raw.s_ops, "s_ops", kind)?;
            forbid(&raw.t_ops, "t_ops", kind)?;
            forbid(&raw.dims, "dims", kind)?;
            forbid(&raw.entries, "entries", kind)?;
            let dim = positive_dim(required(raw.dim, "dim", kind)?)?;
            let c = sparse3(&required(raw.c, "c", kind)?, dim, "c")?;
            let names = basis_names(raw.basis, dim)?;
            Ok(Document::Anticomm(AnticommAlgebra::new(c, names)?))
        }
        KIND_PAIR => {
            forbid(&raw.mult, "mult", kind)?;
            forbid(&raw.unit, "unit", kind)?;
            forbid(&raw.dims, "dims", kind)?;
            forbid(&raw.entries, "entries", kind)?;
            let dim = positive_dim(required(raw.dim, "dim", kind)?)?;
            let n = required(raw.rep_dim, "rep_dim", kind)?;
            if n == 0 {
                return Err(Error::format("rep_dim", "must be positive"));
            }
            let c = sparse3(&required(raw.c, "c", kind)?, dim, "c")?;
            let names = basis_names(raw.basis, dim)?;
            let s_ops = dense_ops(&required(raw.s_ops, "s_ops", kind)?, n, "s_ops")?;
            let t_ops = dense_ops(&required(raw.t_ops, "t_ops", kind)?, n, "t_ops")?;
            if s_ops.len() != dim || t_ops.len() != dim {
                return Err(Error::format(
                    "s_ops",
                    format!("expected {dim} operators in s_ops and t_ops"),
                ));
            }
            let gamma = AnticommAlgebra::new(c, names)?;
            Ok(Document::Pair(MoufangMaltsevPair::new(
                gamma, s_ops, t_ops,
            )?))
        }
        KIND_TENSOR4 => {
            for (present, name) in [
                (raw.dim.is_some(), "dim"),
                (raw.unit.is_some(), "unit"),
                (raw.basis.is_some(), "basis"),
                (raw.mult.is_some(), "mult"),
                (raw.c.is_some(), "c"),
                (raw.rep_dim.is_some(), "rep_dim"),
                (raw.s_ops.is_some(), "s_ops"),
                (raw.t_ops.is_some(), "t_ops"),
            ] {
                if present {
                    return Err(Error::format(
                        name,
                        format!("not allowed for kind {kind:?}"),
                    ));
                }
            }
            let dims = required(raw.dims, "dims", kind)?;
            let mut t = Tensor4::zeros(dims);
            let mut prev: Option<[usize; 4]> = None;
            for (n, (a, b, c, d, v)) in required(raw.entries, "entries", kind)?.iter().enumerate() {
                let path = || format!("entries[{n}]");
                let key = [*a, *b, *c, *d];
                if key.iter().zip(dims).any(|(i, d)| *i >= d) {
                    return Err(Error::format(path(), "index out of range"));
                }
                if prev.is_some_and(|p| p >= key) {
                    return Err(Error::format(path(), "entries must be sorted and unique"));
                }
                prev = Some(key);
                let s = scalar_at(v, path)?;
                if s.is_zero() {
                    return Err(Error::format(path(), "zero entries must be omitted"));
                }
                t[(*a, *b, *c, *d)] = s;
            }
            Ok(Document::Tensor4(t))
        }
        other => Err(Error::format("kind", format!("unknown kind {other:?}"))),
    }
}

pub fn load_document(path: impl AsRef<Path>) -> Result<(Document, Vec<u8>)> {
    let bytes = std::fs::read(path)?;
    let text = std::str::from_utf8(&bytes).map_err(|e| Error::Parse {
        line: 1,
        column: e.valid_up_to() + 1,
        message: "input is not UTF-8".into(),
    })?;
    Ok((parse_document(text)?, bytes))
}

/// Loads an algebra or pair file.
pub fn load_algebra(path: impl AsRef<Path>) -> Result<Document> {
    Ok(load_document(path)?.0)
}

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

fn write_basis(out: &mut String, names: &[String]) {
    let quoted: Vec<String> = names.iter().map(|n| quote(n)).collect();
    let _ = writeln!(out, "  \"basis\": [{}],", quoted.join(", "));
}

/// Sparse entries in `(left, right, output)` order.
fn write_sparse3(out: &mut String, field: &str, t: &Tensor3, last: bool) {
    let mut entries: Vec<(usize, usize, usize, &Scalar)> =
        t.nonzero().map(|((k, i, j), v)| (i, j, k, v)).collect();
    entries.sort_by_key(|e| (e.0, e.1, e.2));
    let lines: Vec<String> = entries
        .iter()
        .map(|(i, j, k, v)| format!("    [{i}, {j}, {k}, {}]", quote(&format_scalar(v))))
        .collect();
    write_list(out, field, &lines, last);
}

fn write_list(out: &mut String, field: &str, lines: &[String], last: bool) {
    let comma = if last { "" } else { "," };
    if lines.is_empty() {
        let _ = writeln!(out, "  \"{field}\": []{comma}");
    } else {
        let _ = writeln!(out, "  \"{field}\": [\n{}\n  ]{comma}", lines.join(",\n"));
    }
}

fn matrix_lines(m: &Matrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| {
            let cells: Vec<String> = m.row(i).iter().map(|s| quote(&format_scalar(s))).collect();
            format!("      [{}]", cells.join(", "))
        })
        .collect();
    format!("    [\n{}\n    ]", rows.join(",\n"))
}

/// Canonical serialization.
pub fn write_document(doc: &Document) -> String {
    let mut out = String::from("{\n");
    let _ = writeln!(out, "  \"kind\": {},", quote(doc.kind()));
    match doc {
        Document::Binary(a) => {
            let _ = writeln!(out, "  \"dim\": {},", a.dim());
            if let Some(u) = a.unit_index() {
                let _ = writeln!(out, "  \"unit\": {u},");
            }
            write_basis(&mut out, a.basis_names());
            write_sparse3(&mut out, "mult", a.mult(), true);
        }
        Document::Anticomm(g) => {
            let _ = writeln!(out, "  \"dim\": {},", g.dim());
            write_basis(&mut out, g.basis_names());
            write_sparse3(&mut out, "c", g.c(), true);
        }
        Document::Pair(p) => {
            let _ = writeln!(out, "  \"dim\": {},", p.dim());
            let _ = writeln!(out, "  \"rep_dim\": {},", p.rep_dim());
            write_basis(&mut out, p.gamma().basis_names());
            write_sparse3(&mut out, "c", p.gamma().c(), false);
            let s: Vec<String> = p.s_ops().iter().map(matrix_lines).collect();
            write_list(&mut out, "s_ops", &s, false);
            let t: Vec<String> = p.t_ops().iter().map(matrix_lines).collect();
            write_list(&mut out, "t_ops", &t, true);
        }
        Document::Tensor4(t) => {
            let [a, b, c, d] = t.dims();
            let _ = writeln!(out, "  \"dims\": [{a}, {b}, {c}, {d}],");
            let lines: Vec<String> = t
                .nonzero()
                .map(|([i, j, k, l], v)| {
                    format!("    [{i}, {j}, {k}, {l}, {}]", quote(&format_scalar(v)))
                })
                .collect();
            write_list(&mut out, "entries", &lines, true);
        }
    }
    out.push_str("}\n");
    out
}
