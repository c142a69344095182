//! Structured-text serialization for the CLI and for reproducible failure
//! reports: a versioned JSON document carrying every scalar as an exact
//! rational string (`"p"` or `"p/q"`), never a binary float.
//!
//! Conventions: `alpha[r][c]` is the coefficient of basis element `r` in the
//! image of basis element `c` (so column `c` is the image of `e_c`), and
//! `dot[i][j][k]` / `star[i][j][k]` is the coefficient of `e_k` in the
//! product `e_i e_j`.  Serialization is canonical — lowest terms, no sign on
//! the denominator, `"p"` for integers — so parse followed by serialize is
//! the identity on canonical documents.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error as ThisError;

use crate::algebra::DoubleHomAlgebra;
use crate::checks::{CheckReport, Witness};
use crate::linalg::{BilinearOp, LinearMap, Vector};
use crate::scalar::{format_rational, parse_rational, Rational};

/// The only file format version this build reads and writes.
pub const FORMAT_VERSION: u32 = 1;

/// On-disk form of an algebra: plain data, exact strings, fixed field order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    /// Format gate; must equal [`FORMAT_VERSION`].
    pub format_version: u32,
    /// Dimension of the underlying space.
    pub dim: usize,
    /// Optional display names for the basis elements (length `dim`).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis_names: Option<Vec<String>>,
    /// Twisting map, `dim x dim`, row-major.
    pub alpha: Vec<Vec<String>>,
    /// First (commutative) product, `dim x dim x dim`.
    pub dot: Vec<Vec<Vec<String>>>,
    /// Second product, `dim x dim x dim`.
    pub star: Vec<Vec<Vec<String>>>,
}

/// Errors from reading an algebra document.  Every scalar-level problem names
/// the offending field by path, e.g. `dot[1][2][3]: zero denominator in "1/0"`.
#[derive(Debug, Clone, PartialEq, Eq, ThisError)]
pub enum FileError {
    /// The document is not structurally valid (bad JSON, missing field, ...).
    #[error("{0}")]
    Document(String),
    /// A specific field is present but invalid.
    #[error("{path}: {reason}")]
    Field { path: String, reason: String },
}

fn field(path: String, reason: impl Into<String>) -> FileError {
    FileError::Field {
        path,
        reason: reason.into(),
    }
}

fn parse_scalar(text: &str, path: impl FnOnce() -> String) -> Result<Rational, FileError> {
    parse_rational(text).map_err(|reason| field(path(), reason))
}

fn parse_matrix(rows: &[Vec<String>], dim: usize, name: &str) -> Result<LinearMap, FileError> {
    if rows.len() != dim {
        return Err(field(
            name.to_string(),
            format!("expected {dim} rows, found {}", rows.len()),
        ));
    }
    let mut out = Vec::with_capacity(dim);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != dim {
            return Err(field(
                format!("{name}[{r}]"),
                format!("expected {dim} entries, found {}", row.len()),
            ));
        }
        let mut parsed = Vec::with_capacity(dim);
        for (c, cell) in row.iter().enumerate() {
            parsed.push(parse_scalar(cell, || format!("{name}[{r}][{c}]"))?);
        }
        out.push(parsed);
    }
    LinearMap::from_rows(out)
        .map_err(|e| field(name.to_string(), format!("inconsistent shape: {e}")))
}

fn parse_cube(cube: &[Vec<Vec<String>>], dim: usize, name: &str) -> Result<BilinearOp, FileError> {
    if cube.len() != dim {
        return Err(field(
            name.to_string(),
            format!("expected {dim} slices, found {}", cube.len()),
        ));
    }
    let mut parsed = vec![vec![vec![Rational::from_integer(0.into()); dim]; dim]; dim];
    for (i, slice) in cube.iter().enumerate() {
        if slice.len() != dim {
            return Err(field(
                format!("{name}[{i}]"),
                format!("expected {dim} rows, found {}", slice.len()),
            ));
        }
        for (j, row) in slice.iter().enumerate() {
            if row.len() != dim {
                return Err(field(
                    format!("{name}[{i}][{j}]"),
                    format!("expected {dim} entries, found {}", row.len()),
                ));
            }
            for (k, cell) in row.iter().enumerate() {
                parsed[i][j][k] = parse_scalar(cell, || format!("{name}[{i}][{j}][{k}]"))?;
            }
        }
    }
    Ok(BilinearOp::from_fn(dim, |i, j, k| parsed[i][j][k].clone()))
}

/// Validate a parsed document and build the algebra it describes.
pub fn file_to_algebra(file: &AlgebraFile) -> Result<DoubleHomAlgebra, FileError> {
    if file.format_version != FORMAT_VERSION {
        return Err(field(
            "format_version".to_string(),
            format!(
                "unsupported version {}, this build reads version {FORMAT_VERSION}",
                file.format_version
            ),
        ));
    }
    let dim = file.dim;
    if dim == 0 {
        return Err(field("dim".to_string(), "must be at least 1"));
    }
    if let Some(names) = &file.basis_names {
        if names.len() != dim {
            return Err(field(
                "basis_names".to_string(),
                format!("expected {dim} entries, found {}", names.len()),
            ));
        }
    }
    let alpha = parse_matrix(&file.alpha, dim, "alpha")?;
    let dot = parse_cube(&file.dot, dim, "dot")?;
    let star = parse_cube(&file.star, dim, "star")?;
    DoubleHomAlgebra::new(dot, star, alpha)
        .map_err(|e| FileError::Document(format!("inconsistent dimensions: {e}")))
}

/// Serialize an algebra into the canonical document form.
pub fn algebra_to_file(a: &DoubleHomAlgebra, basis_names: Option<Vec<String>>) -> AlgebraFile {
    let dim = a.dim();
    let alpha = (0..dim)
        .map(|r| {
            (0..dim)
                .map(|c| format_rational(a.alpha().entry(r, c)))
                .collect()
        })
        .collect();
    let cube = |op: &BilinearOp| -> Vec<Vec<Vec<String>>> {
        (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| {
                        (0..dim)
                            .map(|k| format_rational(op.coeff(i, j, k)))
                            .collect()
                    })
                    .collect()
            })
            .collect()
    };
    AlgebraFile {
        format_version: FORMAT_VERSION,
        dim,
        basis_names,
        alpha,
        dot: cube(a.dot()),
        star: cube(a.star()),
    }
}

/// Canonical text rendering: pretty-printed with a trailing newline, fixed
/// field order, canonical rational strings.
pub fn canonical_json(file: &AlgebraFile) -> String {
    let mut text = serde_json::to_string_pretty(file).expect("plain data serializes");
    text.push('\n');
    text
}

/// Parse a JSON document into an algebra, returning the raw document too so
/// callers can canonicalize or preserve `basis_names`.
pub fn parse_algebra_json(text: &str) -> Result<(DoubleHomAlgebra, AlgebraFile), FileError> {
    let file: AlgebraFile =
        serde_json::from_str(text).map_err(|e| FileError::Document(e.to_string()))?;
    let algebra = file_to_algebra(&file)?;
    Ok((algebra, file))
}

/// Parse a comma-separated list of rational literals (e.g. `"1,0,-2/3"`) as a
/// vector of the given dimension.  Used for element-valued CLI flags.
pub fn parse_vector_arg(text: &str, dim: usize, name: &str) -> Result<Vector, FileError> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != dim {
        return Err(field(
            name.to_string(),
            format!("expected {dim} comma-separated coordinates, found {}", parts.len()),
        ));
    }
    let mut coords = Vec::with_capacity(dim);
    for (i, part) in parts.iter().enumerate() {
        coords.push(parse_scalar(part, || format!("{name}[{i}]"))?);
    }
    Ok(Vector::new(coords))
}

/// Parse a bare JSON 2D array of rational strings as a linear map of the
/// given dimension.  Used for the twisting-morphism CLI flag.
pub fn parse_matrix_json(text: &str, dim: usize, name: &str) -> Result<LinearMap, FileError> {
    let rows: Vec<Vec<String>> =
        serde_json::from_str(text).map_err(|e| FileError::Document(format!("{name}: {e}")))?;
    parse_matrix(&rows, dim, name)
}

fn vector_strings(v: &Vector) -> Value {
    Value::Array(
        v.coords()
            .iter()
            .map(|c| Value::String(format_rational(c)))
            .collect(),
    )
}

/// Machine-readable form of a witness: identity tag, basis indices, and both
/// evaluated sides as arrays of rational strings.
pub fn witness_to_json(w: &Witness) -> Value {
    json!({
        "identity": w.identity.name(),
        "indices": w.indices,
        "lhs": vector_strings(&w.lhs),
        "rhs": vector_strings(&w.rhs),
    })
}

/// Machine-readable form of a full report, sub-reports included.
pub fn report_to_json(report: &CheckReport) -> Value {
    let mut obj = json!({
        "identity": report.identity().name(),
        "passed": report.passed(),
        "triples_checked": report.triples_checked(),
    });
    if let Some(w) = report.witness() {
        obj["witness"] = witness_to_json(w);
    }
    if !report.sub_reports().is_empty() {
        obj["sub_reports"] = Value::Array(
            report.sub_reports().iter().map(report_to_json).collect(),
        );
    }
    obj
}
