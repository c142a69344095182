//! Error values shared by the whole toolkit.
//!
//! Construction preconditions fail with a variant naming the violated
//! hypothesis, so callers (and the CLI) can report exactly which assumption
//! broke rather than a generic refusal.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// A twisting candidate fails to preserve one of the two products.
    #[error("the map is not a weak morphism: it fails to preserve both products")]
    NotWeakMorphism,

    /// The algebra's own twisting map fails to preserve one of its products.
    #[error("the algebra is not multiplicative: \u{3b1} does not preserve its products")]
    NotMultiplicative,

    /// An input required to be Hom-Novikov-Poisson is not; carries the first
    /// failing sub-identity.
    #[error("the input is not a Hom-Novikov-Poisson algebra: {identity} fails")]
    NotHomNovikovPoisson { identity: &'static str },

    #[error("fixed-point hypothesis \u{3b1}\u{b2}(a)=a violated")]
    FixedPointA,

    #[error("fixed-point hypothesis \u{3b1}\u{2074}(b)=b violated")]
    FixedPointB,

    #[error("the product is not commutative")]
    NotCommutative,

    #[error("the product is not associative")]
    NotAssociative,

    #[error("the map is not a derivation of the product")]
    NotDerivation,

    #[error("the twisting map is not an algebra morphism of the product")]
    NotAlgebraMorphism,

    #[error("the twisting map does not commute with the derivation")]
    DerivationDoesNotCommute,

    #[error("the map is not nilpotent within {dim} iterations")]
    NotNilpotent { dim: usize },

    /// Precondition of the right-multiplication equivalence check.
    #[error("the first product is not commutative")]
    DotNotCommutative,

    /// Truncated polynomial algebras need at least the basis {1, x}.
    #[error("truncated polynomial algebra needs degree at least 2, found {found}")]
    TruncationTooSmall { found: usize },
}
