//! Exact verification and construction kit for finite-dimensional algebras
//! with one commutative and one auxiliary product, both twisted by a linear
//! self-map (Hom-Novikov-Poisson algebras and their relatives), presented by
//! rational structure constants.
//!
//! Everything is computed in exact rational arithmetic. Identity checkers
//! sweep full basis ranges and report deterministic first-failure witnesses;
//! constructors validate the hypotheses of the structure theorems they
//! implement; the verification suite replays those theorems over a seeded
//! fixture catalog.

pub mod algebra;
pub mod checks;
pub mod constructions;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod linalg;
pub mod scalar;
pub mod sweep;
pub mod verify;

pub use algebra::{
    commutator_op, hom_associator, left_hom_associator, mixed_hom_associator, DoubleHomAlgebra,
    HomAlgebra,
};
pub use checks::{
    check_commutative, check_derivation, check_hom_associative, check_hom_lie,
    check_hom_novikov, check_hom_novikov_poisson, check_hom_poisson,
    check_left_hom_associative, check_morphism, check_multiplicative,
    check_rightmult_equivalence, check_weak_morphism, CheckReport, IdentityId, Witness,
};
pub use constructions::{
    commutator_minus, derivation_perturbation, exp_nilpotent, from_derivation, is_admissible,
    nth_twist, perturb_combined, perturb_diamond, perturb_times, tensor_product, twist,
};
pub use error::Error;
pub use fixtures::{
    build_fixture, fixture_catalog, monomial_derivation, monomial_derivations,
    tensor_subcatalog, tensor_subcatalog_names, three_dim_admissible, truncated_poly,
    two_var_nilpotent, unit_line, zero_star, CatalogEntry, FixtureDescriptor, NamedMorphism,
};
pub use io::{
    algebra_to_file, canonical_json, file_to_algebra, parse_algebra_json, parse_matrix_json,
    parse_vector_arg, report_to_json, witness_to_json, AlgebraFile, FileError, FORMAT_VERSION,
};
pub use linalg::{BilinearOp, LinearMap, Vector};
pub use verify::{run_suite, FailureRecord, SuiteReport, TheoremStat};
pub use scalar::{format_rational, int, parse_rational, rat, Rational};
