//! Exact linear algebra over the rationals: vectors, square matrices acting
//! as linear maps, and bilinear operations given by structure constants.
//!
//! Conventions, used everywhere downstream:
//! - a `LinearMap` stores `entry(i, j)` = coefficient of `e_i` in the image of
//!   `e_j`, so column `j` is the image of the j-th basis vector;
//! - a `BilinearOp` stores `coeff(i, j, k)` = coefficient of `e_k` in
//!   `mu(e_i, e_j)`;
//! - tensor bases are ordered lexicographically with the left factor major:
//!   `e_i (x) e_j` of `A (x) B` sits at index `i * dim(B) + j`.

use crate::error::Error;
use crate::scalar::Rational;
use num::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vector {
    coords: Vec<Rational>,
}

impl Vector {
    pub fn new(coords: Vec<Rational>) -> Self {
        Vector { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Vector { coords: vec![Rational::zero(); dim] }
    }

    /// The i-th standard basis vector.
    pub fn basis(dim: usize, i: usize) -> Self {
        assert!(i < dim, "basis index {i} out of range for dimension {dim}");
        let mut coords = vec![Rational::zero(); dim];
        coords[i] = Rational::one();
        Vector { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coord(&self, i: usize) -> &Rational {
        &self.coords[i]
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    pub fn add(&self, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim(), "vector dimensions differ");
        Vector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim(), "vector dimensions differ");
        Vector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Vector {
        Vector { coords: self.coords.iter().map(|a| -a).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Vector {
        Vector { coords: self.coords.iter().map(|a| a * c).collect() }
    }

    /// Kronecker product in the lexicographic tensor basis.
    pub fn tensor(&self, other: &Vector) -> Vector {
        let mut coords = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.coords {
            for b in &other.coords {
                coords.push(a * b);
            }
        }
        Vector { coords }
    }
}

/// A square matrix over the rationals, column j holding the image of `e_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    dim: usize,
    entries: Vec<Rational>, // row-major: entries[row * dim + col]
}

impl LinearMap {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, Error> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: row.len() });
            }
            entries.extend(row);
        }
        Ok(LinearMap { dim, entries })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        LinearMap { dim, entries }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn zero(dim: usize) -> Self {
        LinearMap { dim, entries: vec![Rational::zero(); dim * dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row * self.dim + col]
    }

    /// The image of `e_j`.
    pub fn column(&self, j: usize) -> Vector {
        Vector::new((0..self.dim).map(|i| self.entry(i, j).clone()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector, Error> {
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: v.dim() });
        }
        let mut out = vec![Rational::zero(); self.dim];
        for (j, vj) in v.coords().iter().enumerate() {
            if vj.is_zero() {
                continue;
            }
            for i in 0..self.dim {
                let m = self.entry(i, j);
                if !m.is_zero() {
                    out[i] = &out[i] + &(m * vj);
                }
            }
        }
        Ok(Vector::new(out))
    }

    /// self after `inner`: `(self.compose(inner))(v) = self(inner(v))`.
    pub fn compose(&self, inner: &LinearMap) -> Result<LinearMap, Error> {
        if inner.dim != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: inner.dim });
        }
        let d = self.dim;
        Ok(LinearMap::from_fn(d, |i, j| {
            let mut acc = Rational::zero();
            for k in 0..d {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                let b = inner.entry(k, j);
                if !b.is_zero() {
                    acc = &acc + &(a * b);
                }
            }
            acc
        }))
    }

    /// n-fold composition, with `pow(0)` the identity.
    pub fn pow(&self, n: u32) -> LinearMap {
        let mut acc = LinearMap::identity(self.dim);
        for _ in 0..n {
            acc = acc.compose(self).expect("same dimension");
        }
        acc
    }

    /// Kronecker product in the lexicographic tensor basis.
    pub fn tensor(&self, other: &LinearMap) -> LinearMap {
        let (d1, d2) = (self.dim, other.dim);
        LinearMap::from_fn(d1 * d2, |i, j| {
            let (p, q) = (i / d2, i % d2);
            let (r, s) = (j / d2, j % d2);
            self.entry(p, r) * other.entry(q, s)
        })
    }

    pub fn add(&self, other: &LinearMap) -> Result<LinearMap, Error> {
        if other.dim != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        Ok(LinearMap {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &LinearMap) -> Result<LinearMap, Error> {
        if other.dim != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        Ok(LinearMap {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, c: &Rational) -> LinearMap {
        LinearMap {
            dim: self.dim,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    pub fn commutes_with(&self, other: &LinearMap) -> Result<bool, Error> {
        Ok(self.compose(other)? == other.compose(self)?)
    }

    /// A basis of the kernel, by exact Gauss-Jordan elimination. Basis vectors
    /// are indexed by the free columns in increasing order.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let d = self.dim;
        let mut m: Vec<Vec<Rational>> =
            (0..d).map(|i| (0..d).map(|j| self.entry(i, j).clone()).collect()).collect();
        let mut pivot_cols: Vec<usize> = Vec::new();
        let mut rank = 0;
        for col in 0..d {
            let Some(p) = (rank..d).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            let inv = m[rank][col].clone();
            for x in &mut m[rank] {
                *x = &*x / &inv;
            }
            for r in 0..d {
                if r != rank && !m[r][col].is_zero() {
                    let factor = m[r][col].clone();
                    for c in 0..d {
                        let delta = &factor * &m[rank][c];
                        m[r][c] = &m[r][c] - &delta;
                    }
                }
            }
            pivot_cols.push(col);
            rank += 1;
            if rank == d {
                break;
            }
        }
        let mut basis = Vec::new();
        for free in 0..d {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![Rational::zero(); d];
            v[free] = Rational::one();
            for (row, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -m[row][free].clone();
            }
            basis.push(Vector::new(v));
        }
        basis
    }

    /// Basis of the subspace fixed pointwise by the map, `ker(self - id)`.
    pub fn fixed_subspace(&self) -> Vec<Vector> {
        self.sub(&LinearMap::identity(self.dim))
            .expect("same dimension")
            .kernel_basis()
    }
}

/// A bilinear operation `mu` on a dim-dimensional space, as the table
/// `coeff(i, j, k)` of coordinates of `mu(e_i, e_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearOp {
    dim: usize,
    coeffs: Vec<Rational>, // [(i * dim + j) * dim + k]
}

impl BilinearOp {
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> Rational) -> Self {
        let mut coeffs = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    coeffs.push(f(i, j, k));
                }
            }
        }
        BilinearOp { dim, coeffs }
    }

    pub fn zero(dim: usize) -> Self {
        BilinearOp { dim, coeffs: vec![Rational::zero(); dim * dim * dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.coeffs[(i * self.dim + j) * self.dim + k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// `mu(e_i, e_j)` as a vector.
    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        let start = (i * self.dim + j) * self.dim;
        Vector::new(self.coeffs[start..start + self.dim].to_vec())
    }

    pub fn eval(&self, u: &Vector, v: &Vector) -> Result<Vector, Error> {
        if u.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: u.dim() });
        }
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: v.dim() });
        }
        let d = self.dim;
        let mut out = vec![Rational::zero(); d];
        for (i, ui) in u.coords().iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.coords().iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let w = ui * vj;
                for (k, slot) in out.iter_mut().enumerate() {
                    let c = self.coeff(i, j, k);
                    if !c.is_zero() {
                        *slot = &*slot + &(&w * c);
                    }
                }
            }
        }
        Ok(Vector::new(out))
    }

    /// `f` after `mu`: the operation `(x, y) -> f(mu(x, y))`.
    pub fn postcompose(&self, f: &LinearMap) -> Result<BilinearOp, Error> {
        if f.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: f.dim() });
        }
        let d = self.dim;
        Ok(BilinearOp::from_fn(d, |i, j, k| {
            let mut acc = Rational::zero();
            for l in 0..d {
                let c = self.coeff(i, j, l);
                if c.is_zero() {
                    continue;
                }
                let m = f.entry(k, l);
                if !m.is_zero() {
                    acc = &acc + &(m * c);
                }
            }
            acc
        }))
    }

    /// `mu` after `f (x) g`: the operation `(x, y) -> mu(f(x), g(y))`.
    pub fn precompose(&self, f: &LinearMap, g: &LinearMap) -> Result<BilinearOp, Error> {
        if f.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: f.dim() });
        }
        if g.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: g.dim() });
        }
        let d = self.dim;
        let mut coeffs = vec![Rational::zero(); d * d * d];
        for p in 0..d {
            for i in 0..d {
                let fpi = f.entry(p, i);
                if fpi.is_zero() {
                    continue;
                }
                for q in 0..d {
                    for j in 0..d {
                        let gqj = g.entry(q, j);
                        if gqj.is_zero() {
                            continue;
                        }
                        let w = fpi * gqj;
                        for k in 0..d {
                            let c = self.coeff(p, q, k);
                            if !c.is_zero() {
                                let slot = &mut coeffs[(i * d + j) * d + k];
                                *slot = &*slot + &(&w * c);
                            }
                        }
                    }
                }
            }
        }
        Ok(BilinearOp { dim: d, coeffs })
    }

    pub fn add(&self, other: &BilinearOp) -> Result<BilinearOp, Error> {
        if other.dim != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        Ok(BilinearOp {
            dim: self.dim,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &BilinearOp) -> Result<BilinearOp, Error> {
        if other.dim != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        Ok(BilinearOp {
            dim: self.dim,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, c: &Rational) -> BilinearOp {
        BilinearOp { dim: self.dim, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// The opposite operation `(x, y) -> mu(y, x)`.
    pub fn opposite(&self) -> BilinearOp {
        BilinearOp::from_fn(self.dim, |i, j, k| self.coeff(j, i, k).clone())
    }

    /// Structure constants of the componentwise tensor operation on the
    /// lexicographic tensor basis.
    pub fn tensor(&self, other: &BilinearOp) -> BilinearOp {
        let (d1, d2) = (self.dim, other.dim);
        BilinearOp::from_fn(d1 * d2, |i, j, k| {
            let (i1, i2) = (i / d2, i % d2);
            let (j1, j2) = (j / d2, j % d2);
            let (k1, k2) = (k / d2, k % d2);
            self.coeff(i1, j1, k1) * other.coeff(i2, j2, k2)
        })
    }

    /// Left multiplication by `a`: the map `v -> mu(a, v)`.
    pub fn left_mult(&self, a: &Vector) -> Result<LinearMap, Error> {
        if a.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: a.dim() });
        }
        let d = self.dim;
        Ok(LinearMap::from_fn(d, |k, j| {
            let mut acc = Rational::zero();
            for (i, ai) in a.coords().iter().enumerate() {
                if ai.is_zero() {
                    continue;
                }
                let c = self.coeff(i, j, k);
                if !c.is_zero() {
                    acc = &acc + &(ai * c);
                }
            }
            acc
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    /// d/dx as a matrix on the monomial basis {1, x, .., x^(n-1)}.
    fn ddx(n: usize) -> LinearMap {
        LinearMap::from_fn(n, |i, j| if j == i + 1 { int(j as i64) } else { int(0) })
    }

    /// Truncated monomial product on {1, x, .., x^(n-1)}.
    fn trunc_product(n: usize) -> BilinearOp {
        BilinearOp::from_fn(n, |i, j, k| if i + j == k { int(1) } else { int(0) })
    }

    #[test]
    fn compose_differentiates_twice() {
        let d = ddx(4);
        let dd = d.compose(&d).unwrap();
        // x^3 -> 6x
        assert_eq!(dd.apply(&Vector::basis(4, 3)).unwrap(), Vector::basis(4, 1).scale(&int(6)));
    }

    #[test]
    fn pow_edge_cases() {
        let d = ddx(4);
        assert!(d.pow(4).is_zero());
        assert!(!d.pow(3).is_zero());
        assert_eq!(d.pow(0), LinearMap::identity(4));
        assert_eq!(d.pow(1), d);
    }

    #[test]
    fn compose_identity_and_zero() {
        let d = ddx(3);
        let id = LinearMap::identity(3);
        let z = LinearMap::zero(3);
        assert_eq!(id.compose(&d).unwrap(), d);
        assert_eq!(d.compose(&id).unwrap(), d);
        assert!(z.compose(&d).unwrap().is_zero());
        assert!(matches!(
            d.compose(&LinearMap::identity(4)),
            Err(Error::DimensionMismatch { expected: 3, found: 4 })
        ));
    }

    #[test]
    fn tensor_of_identities_is_identity() {
        let id2 = LinearMap::identity(2);
        let id3 = LinearMap::identity(3);
        assert_eq!(id2.tensor(&id3), LinearMap::identity(6));
        assert!(id2.tensor(&LinearMap::zero(3)).is_zero());
    }

    #[test]
    fn tensor_acts_factorwise() {
        let f = ddx(2);
        let g = ddx(3);
        let t = f.tensor(&g);
        for i in 0..2 {
            for j in 0..3 {
                let lhs = t.apply(&Vector::basis(2, i).tensor(&Vector::basis(3, j))).unwrap();
                let rhs = f
                    .apply(&Vector::basis(2, i))
                    .unwrap()
                    .tensor(&g.apply(&Vector::basis(3, j)).unwrap());
                assert_eq!(lhs, rhs, "mismatch at ({i}, {j})");
            }
        }
    }

    #[test]
    fn eval_multiplies_monomials() {
        let mu = trunc_product(4);
        // x * x^2 = x^3
        let x = Vector::basis(4, 1);
        let x2 = Vector::basis(4, 2);
        assert_eq!(mu.eval(&x, &x2).unwrap(), Vector::basis(4, 3));
        // x^2 * x^3 = 0 after truncation
        assert!(mu.eval(&x2, &Vector::basis(4, 3)).unwrap().is_zero());
        assert!(mu.eval(&Vector::zero(4), &x).unwrap().is_zero());
        assert!(mu.eval(&x, &Vector::zero(3)).is_err());
    }

    #[test]
    fn postcompose_applies_map_to_products() {
        let mu = trunc_product(4);
        let d = ddx(4);
        let dmu = mu.postcompose(&d).unwrap();
        // (x, x) -> d(x^2) = 2x
        assert_eq!(dmu.basis_product(1, 1), Vector::basis(4, 1).scale(&int(2)));
        assert_eq!(mu.postcompose(&LinearMap::identity(4)).unwrap(), mu);
        assert!(mu.postcompose(&LinearMap::zero(4)).unwrap().is_zero());
    }

    #[test]
    fn precompose_feeds_arguments_through_maps() {
        let mu = trunc_product(4);
        let d = ddx(4);
        let id = LinearMap::identity(4);
        let star = mu.precompose(&id, &d).unwrap();
        // (x, x^2) -> x * d(x^2) = 2x^2
        assert_eq!(star.basis_product(1, 2), Vector::basis(4, 2).scale(&int(2)));
        assert_eq!(mu.precompose(&id, &id).unwrap(), mu);
        assert!(BilinearOp::zero(4).precompose(&d, &d).unwrap().is_zero());
    }

    #[test]
    fn opposite_is_an_involution() {
        let mu = trunc_product(3);
        assert_eq!(mu.opposite(), mu); // commutative
        let star = mu.precompose(&LinearMap::identity(3), &ddx(3)).unwrap();
        assert_ne!(star.opposite(), star);
        assert_eq!(star.opposite().opposite(), star);
    }

    #[test]
    fn left_mult_matches_eval() {
        let mu = trunc_product(4);
        let a = Vector::basis(4, 1); // x
        let l = mu.left_mult(&a).unwrap();
        assert_eq!(l.apply(&Vector::basis(4, 2)).unwrap(), Vector::basis(4, 3));
        for j in 0..4 {
            assert_eq!(l.column(j), mu.eval(&a, &Vector::basis(4, j)).unwrap());
        }
    }

    #[test]
    fn kernel_of_ddx_is_the_constants() {
        let d = ddx(4);
        let kernel = d.kernel_basis();
        assert_eq!(kernel, vec![Vector::basis(4, 0)]);
        assert!(LinearMap::identity(3).kernel_basis().is_empty());
        assert_eq!(LinearMap::zero(2).kernel_basis().len(), 2);
    }

    #[test]
    fn kernel_handles_dependent_rows() {
        // rows (1 2), (2 4): kernel spanned by (-2, 1)
        let m = LinearMap::from_rows(vec![
            vec![int(1), int(2)],
            vec![int(2), int(4)],
        ])
        .unwrap();
        let kernel = m.kernel_basis();
        assert_eq!(kernel.len(), 1);
        assert_eq!(kernel[0], Vector::new(vec![int(-2), int(1)]));
        assert!(m.apply(&kernel[0]).unwrap().is_zero());
    }

    #[test]
    fn fixed_subspace_of_taylor_shift_is_constants() {
        // exp(d/dx) on {1, x, x^2}: upper triangular shift matrix
        let d = ddx(3);
        let phi = LinearMap::identity(3)
            .add(&d)
            .unwrap()
            .add(&d.compose(&d).unwrap().scale(&rat(1, 2)))
            .unwrap();
        assert_eq!(phi.fixed_subspace(), vec![Vector::basis(3, 0)]);
        assert_eq!(LinearMap::identity(3).fixed_subspace().len(), 3);
    }
}
