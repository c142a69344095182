//! Hom-algebra carriers and their associators.
//!
//! A `HomAlgebra` is one bilinear product together with a twisting map on the
//! same space; a `DoubleHomAlgebra` carries two products (written `dot` and
//! `star`) sharing one twisting map. Constructors validate that all pieces
//! agree in dimension, so downstream evaluation cannot fail on sizes.

use crate::error::Error;
use crate::linalg::{BilinearOp, LinearMap, Vector};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomAlgebra {
    mu: BilinearOp,
    alpha: LinearMap,
}

impl HomAlgebra {
    pub fn new(mu: BilinearOp, alpha: LinearMap) -> Result<Self, Error> {
        if alpha.dim() != mu.dim() {
            return Err(Error::DimensionMismatch { expected: mu.dim(), found: alpha.dim() });
        }
        Ok(HomAlgebra { mu, alpha })
    }

    pub fn dim(&self) -> usize {
        self.mu.dim()
    }

    pub fn mu(&self) -> &BilinearOp {
        &self.mu
    }

    pub fn alpha(&self) -> &LinearMap {
        &self.alpha
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleHomAlgebra {
    dot: BilinearOp,
    star: BilinearOp,
    alpha: LinearMap,
}

impl DoubleHomAlgebra {
    pub fn new(dot: BilinearOp, star: BilinearOp, alpha: LinearMap) -> Result<Self, Error> {
        if star.dim() != dot.dim() {
            return Err(Error::DimensionMismatch { expected: dot.dim(), found: star.dim() });
        }
        if alpha.dim() != dot.dim() {
            return Err(Error::DimensionMismatch { expected: dot.dim(), found: alpha.dim() });
        }
        Ok(DoubleHomAlgebra { dot, star, alpha })
    }

    pub fn dim(&self) -> usize {
        self.dot.dim()
    }

    pub fn dot(&self) -> &BilinearOp {
        &self.dot
    }

    pub fn star(&self) -> &BilinearOp {
        &self.star
    }

    pub fn alpha(&self) -> &LinearMap {
        &self.alpha
    }

    /// The single-product algebra `(A, dot, alpha)`.
    pub fn dot_algebra(&self) -> HomAlgebra {
        HomAlgebra { mu: self.dot.clone(), alpha: self.alpha.clone() }
    }

    /// The single-product algebra `(A, star, alpha)`.
    pub fn star_algebra(&self) -> HomAlgebra {
        HomAlgebra { mu: self.star.clone(), alpha: self.alpha.clone() }
    }
}

/// `(x y) a(z) - a(x) (y z)` for the algebra's product and twisting map.
pub fn hom_associator(a: &HomAlgebra, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector, Error> {
    let first = a.mu.eval(&a.mu.eval(x, y)?, &a.alpha.apply(z)?)?;
    let second = a.mu.eval(&a.alpha.apply(x)?, &a.mu.eval(y, z)?)?;
    Ok(first.sub(&second))
}

/// `(x * y) . a(z) - a(x) * (y . z)`, mixing the two products.
pub fn mixed_hom_associator(
    a: &DoubleHomAlgebra,
    x: &Vector,
    y: &Vector,
    z: &Vector,
) -> Result<Vector, Error> {
    let first = a.dot.eval(&a.star.eval(x, y)?, &a.alpha.apply(z)?)?;
    let second = a.star.eval(&a.alpha.apply(x)?, &a.dot.eval(y, z)?)?;
    Ok(first.sub(&second))
}

/// `(x . y) * a(z) - a(x) * (y . z)`, the associator whose vanishing makes
/// the bracket of the commutator algebra a Hom-Poisson structure.
pub fn left_hom_associator(
    a: &DoubleHomAlgebra,
    x: &Vector,
    y: &Vector,
    z: &Vector,
) -> Result<Vector, Error> {
    let first = a.star.eval(&a.dot.eval(x, y)?, &a.alpha.apply(z)?)?;
    let second = a.star.eval(&a.alpha.apply(x)?, &a.dot.eval(y, z)?)?;
    Ok(first.sub(&second))
}

/// The commutator `(x, y) -> op(x, y) - op(y, x)`.
pub fn commutator_op(op: &BilinearOp) -> BilinearOp {
    BilinearOp::from_fn(op.dim(), |i, j, k| op.coeff(i, j, k) - op.coeff(j, i, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn trunc_product(n: usize) -> BilinearOp {
        BilinearOp::from_fn(n, |i, j, k| if i + j == k { int(1) } else { int(0) })
    }

    fn ddx(n: usize) -> LinearMap {
        LinearMap::from_fn(n, |i, j| if j == i + 1 { int(j as i64) } else { int(0) })
    }

    #[test]
    fn constructors_validate_dimensions() {
        assert!(HomAlgebra::new(trunc_product(3), LinearMap::identity(3)).is_ok());
        assert!(matches!(
            HomAlgebra::new(trunc_product(3), LinearMap::identity(4)),
            Err(Error::DimensionMismatch { expected: 3, found: 4 })
        ));
        assert!(matches!(
            DoubleHomAlgebra::new(trunc_product(3), BilinearOp::zero(2), LinearMap::identity(3)),
            Err(Error::DimensionMismatch { expected: 3, found: 2 })
        ));
    }

    #[test]
    fn hom_associator_vanishes_on_associative_product() {
        let a = HomAlgebra::new(trunc_product(4), LinearMap::identity(4)).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    let v = hom_associator(
                        &a,
                        &Vector::basis(4, i),
                        &Vector::basis(4, j),
                        &Vector::basis(4, k),
                    )
                    .unwrap();
                    assert!(v.is_zero(), "nonzero associator at ({i}, {j}, {k})");
                }
            }
        }
    }

    #[test]
    fn left_hom_associator_detects_the_derivative_star() {
        // star(f, g) = f * dg/dx on {1, x, x^2, x^3}, alpha = Id:
        // as_left(1, x, 1) = (1.x) * 1 - 1 * (x.1) = x*1 - 1*x = 0 - 1 = -1.
        let mu = trunc_product(4);
        let star = mu.precompose(&LinearMap::identity(4), &ddx(4)).unwrap();
        let a = DoubleHomAlgebra::new(mu, star, LinearMap::identity(4)).unwrap();
        let one = Vector::basis(4, 0);
        let x = Vector::basis(4, 1);
        let got = left_hom_associator(&a, &one, &x, &one).unwrap();
        assert_eq!(got, one.scale(&int(-1)));
    }

    #[test]
    fn commutator_of_derivative_star() {
        // On {1, x, x^2} with star(f, g) = f * dg/dx: [x, x^2] = 2x^2 - x^2 = x^2.
        let mu = trunc_product(3);
        let star = mu.precompose(&LinearMap::identity(3), &ddx(3)).unwrap();
        let bracket = commutator_op(&star);
        assert_eq!(bracket.basis_product(1, 2), Vector::basis(3, 2));
        // antisymmetry on the table itself
        assert_eq!(bracket.opposite(), commutator_op(&star.opposite()));
        assert_eq!(commutator_op(&mu), BilinearOp::zero(3));
    }
}
