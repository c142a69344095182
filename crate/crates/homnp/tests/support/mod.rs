//! Shared helpers for the integration tests.
//!
//! The polynomial routines here are a deliberately independent oracle: dense
//! integer-coefficient arithmetic written from scratch, sharing no code with
//! the library's structure-constant machinery.  Acceptance comparisons
//! convert oracle output to library vectors only at the final equality.

#![allow(dead_code)]

use homnp::scalar::int;
use homnp::Vector;

/// Dense polynomial with little-endian integer coefficients: index i holds
/// the coefficient of x^i.
pub type Poly = Vec<i64>;

pub fn poly_mul(a: &[i64], b: &[i64]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &ca) in a.iter().enumerate() {
        for (j, &cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    out
}

pub fn poly_sub(a: &[i64], b: &[i64]) -> Poly {
    let len = a.len().max(b.len());
    (0..len)
        .map(|i| a.get(i).copied().unwrap_or(0) - b.get(i).copied().unwrap_or(0))
        .collect()
}

/// Substitute x -> x + 1 (Horner evaluation in the shifted variable).
pub fn poly_shift_by_one(p: &[i64]) -> Poly {
    let mut out: Poly = Vec::new();
    for &c in p.iter().rev() {
        out = poly_mul(&out, &[1, 1]);
        if out.is_empty() {
            out = vec![c];
        } else {
            out[0] += c;
        }
    }
    out
}

/// Reduce modulo x^n: keep only the coefficients of 1, x, ..., x^(n-1).
pub fn poly_truncate(p: &[i64], n: usize) -> Poly {
    p.iter().copied().take(n).collect()
}

/// Derivative with respect to x.
pub fn poly_derivative(p: &[i64]) -> Poly {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| c * i as i64)
        .collect()
}

/// Convert to a coordinate vector of the given dimension.  Panics if the
/// polynomial has a nonzero coefficient beyond the dimension: the caller is
/// asserting that no truncation happens here.
pub fn poly_to_vector(p: &[i64], dim: usize) -> Vector {
    assert!(
        p.iter().skip(dim).all(|&c| c == 0),
        "polynomial does not fit in dimension {dim}: {p:?}"
    );
    Vector::new((0..dim).map(|i| int(p.get(i).copied().unwrap_or(0))).collect())
}
