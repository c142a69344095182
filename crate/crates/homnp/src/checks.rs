//! Identity checkers over structure constants.
//!
//! Every checker sweeps the full basis range for its identity (pairs for
//! binary identities, triples for ternary ones), never short-circuiting
//! across sub-identities, and reports the first failure in lexicographic
//! order of the swept indices. Multilinearity makes the basis verdict
//! equivalent to the identity holding on all vectors.

use crate::algebra::{DoubleHomAlgebra, HomAlgebra};
use crate::error::Error;
use crate::linalg::{BilinearOp, LinearMap, Vector};
use crate::sweep;

/// Tag for a single identity or a named conjunction of identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityId {
    Commutativity,
    MultiplicativityDot,
    MultiplicativityStar,
    Multiplicativity,
    HomAssociativity,
    CommutativeHomAssociativity,
    NovikovLeftSymmetry,
    NovikovRightMultiplication,
    HomNovikov,
    MixedLeftSymmetry,
    MixedRightMultiplication,
    RightMultExchange,
    RightMultEquivalence,
    HomNovikovPoisson,
    AntiSymmetry,
    HomJacobi,
    HomLie,
    HomLeibniz,
    HomPoisson,
    ProductPreservationDot,
    ProductPreservationStar,
    WeakMorphism,
    TwistIntertwining,
    Morphism,
    DerivationLeibniz,
    LeftHomAssociativity,
    Admissibility,
}

impl IdentityId {
    /// Stable kebab-case tag used in machine-readable output.
    pub fn name(self) -> &'static str {
        use IdentityId::*;
        match self {
            Commutativity => "commutativity",
            MultiplicativityDot => "multiplicativity-dot",
            MultiplicativityStar => "multiplicativity-star",
            Multiplicativity => "multiplicativity",
            HomAssociativity => "hom-associativity",
            CommutativeHomAssociativity => "commutative-hom-associativity",
            NovikovLeftSymmetry => "novikov-left-symmetry",
            NovikovRightMultiplication => "novikov-right-multiplication",
            HomNovikov => "hom-novikov",
            MixedLeftSymmetry => "mixed-left-symmetry",
            MixedRightMultiplication => "mixed-right-multiplication",
            RightMultExchange => "right-mult-exchange",
            RightMultEquivalence => "right-mult-equivalence",
            HomNovikovPoisson => "hom-novikov-poisson",
            AntiSymmetry => "anti-symmetry",
            HomJacobi => "hom-jacobi",
            HomLie => "hom-lie",
            HomLeibniz => "hom-leibniz",
            HomPoisson => "hom-poisson",
            ProductPreservationDot => "product-preservation-dot",
            ProductPreservationStar => "product-preservation-star",
            WeakMorphism => "weak-morphism",
            TwistIntertwining => "twist-intertwining",
            Morphism => "morphism",
            DerivationLeibniz => "derivation-leibniz",
            LeftHomAssociativity => "left-hom-associativity",
            Admissibility => "admissibility",
        }
    }

    /// The identity in human-readable form.
    pub fn describe(self) -> &'static str {
        use IdentityId::*;
        match self {
            Commutativity => "x\u{b7}y = y\u{b7}x",
            MultiplicativityDot => "\u{3b1}(x\u{b7}y) = \u{3b1}(x)\u{b7}\u{3b1}(y)",
            MultiplicativityStar => "\u{3b1}(x\u{2217}y) = \u{3b1}(x)\u{2217}\u{3b1}(y)",
            Multiplicativity => "\u{3b1} preserves both products",
            HomAssociativity => "(x\u{b7}y)\u{b7}\u{3b1}(z) = \u{3b1}(x)\u{b7}(y\u{b7}z)",
            CommutativeHomAssociativity => "\u{b7} is commutative and Hom-associative",
            NovikovLeftSymmetry => "as(x,y,z) = as(y,x,z) for the \u{2217}-associator",
            NovikovRightMultiplication => "(x\u{2217}y)\u{2217}\u{3b1}(z) = (x\u{2217}z)\u{2217}\u{3b1}(y)",
            HomNovikov => "(A, \u{2217}, \u{3b1}) is Hom-Novikov",
            MixedLeftSymmetry => "as(x,y,z) = as(y,x,z) for the mixed associator",
            MixedRightMultiplication => "(x\u{b7}y)\u{2217}\u{3b1}(z) = (x\u{2217}z)\u{b7}\u{3b1}(y)",
            RightMultExchange => "(x\u{b7}y)\u{2217}\u{3b1}(z) = \u{3b1}(x)\u{b7}(y\u{2217}z)",
            RightMultEquivalence => "the two right-multiplication identities hold or fail together",
            HomNovikovPoisson => "(A, \u{b7}, \u{2217}, \u{3b1}) is Hom-Novikov-Poisson",
            AntiSymmetry => "[x,y] = -[y,x]",
            HomJacobi => "[[x,y],\u{3b1}(z)] + [[z,x],\u{3b1}(y)] + [[y,z],\u{3b1}(x)] = 0",
            HomLie => "(A, [,], \u{3b1}) is Hom-Lie",
            HomLeibniz => "[\u{3b1}(x), y\u{b7}z] = [x,y]\u{b7}\u{3b1}(z) + \u{3b1}(y)\u{b7}[x,z]",
            HomPoisson => "(A, \u{b7}, [,], \u{3b1}) is Hom-Poisson",
            ProductPreservationDot => "f(x\u{b7}y) = f(x)\u{b7}f(y)",
            ProductPreservationStar => "f(x\u{2217}y) = f(x)\u{2217}f(y)",
            WeakMorphism => "f preserves both products",
            TwistIntertwining => "f\u{3b1} = \u{3b1}'f",
            Morphism => "f preserves both products and intertwines the twisting maps",
            DerivationLeibniz => "d(x\u{b7}y) = d(x)\u{b7}y + x\u{b7}d(y)",
            LeftHomAssociativity => "(x\u{b7}y)\u{2217}\u{3b1}(z) = \u{3b1}(x)\u{2217}(y\u{b7}z)",
            Admissibility => "the commutator algebra is Hom-Poisson",
        }
    }
}

impl std::fmt::Display for IdentityId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// First failing instance of an identity: the basis indices swept (three for
/// ternary identities, two for binary ones, one for map intertwining) and the
/// two sides of the identity evaluated there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub identity: IdentityId,
    pub indices: Vec<usize>,
    pub lhs: Vector,
    pub rhs: Vector,
}

/// Outcome of one checker run. `passed()` holds exactly when there is no
/// witness; composite reports expose per-sub-identity verdicts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    identity: IdentityId,
    passed: bool,
    witness: Option<Witness>,
    checked: usize,
    sub_reports: Vec<CheckReport>,
}

impl CheckReport {
    pub(crate) fn leaf(identity: IdentityId, checked: usize, witness: Option<Witness>) -> Self {
        CheckReport { identity, passed: witness.is_none(), witness, checked, sub_reports: Vec::new() }
    }

    pub(crate) fn composite(identity: IdentityId, sub_reports: Vec<CheckReport>) -> Self {
        let passed = sub_reports.iter().all(|r| r.passed);
        let witness = sub_reports.iter().find_map(|r| r.witness.clone());
        let checked = sub_reports.iter().map(|r| r.checked).sum();
        CheckReport { identity, passed, witness, checked, sub_reports }
    }

    pub fn identity(&self) -> IdentityId {
        self.identity
    }

    pub fn passed(&self) -> bool {
        self.passed
    }

    pub fn witness(&self) -> Option<&Witness> {
        self.witness.as_ref()
    }

    /// Number of basis tuples swept: dim^3 for a ternary leaf, dim^2 for a
    /// binary one, dim for intertwining; the sum over leaves for composites.
    pub fn triples_checked(&self) -> usize {
        self.checked
    }

    pub fn sub_reports(&self) -> &[CheckReport] {
        &self.sub_reports
    }

    /// The report for `id` in this tree, if present.
    pub fn find(&self, id: IdentityId) -> Option<&CheckReport> {
        if self.identity == id {
            return Some(self);
        }
        self.sub_reports.iter().find_map(|r| r.find(id))
    }

    /// Tag of the first failing leaf, for error messages.
    pub fn first_failing_identity(&self) -> Option<IdentityId> {
        self.witness.as_ref().map(|w| w.identity)
    }
}

fn ev(op: &BilinearOp, u: &Vector, v: &Vector) -> Vector {
    op.eval(u, v).expect("operands sized by the owning algebra")
}

fn pair_of(dim: usize, idx: usize) -> (usize, usize) {
    (idx / dim, idx % dim)
}

fn triple_of(dim: usize, idx: usize) -> (usize, usize, usize) {
    (idx / (dim * dim), (idx / dim) % dim, idx % dim)
}

/// Sweeps all pairs, failing where `sides` returns two different vectors.
fn binary_sweep(
    identity: IdentityId,
    dim: usize,
    sides: impl Fn(usize, usize) -> (Vector, Vector) + Sync,
) -> CheckReport {
    let witness = sweep::find_first(dim * dim, |idx| {
        let (i, j) = pair_of(dim, idx);
        let (lhs, rhs) = sides(i, j);
        (lhs != rhs).then(|| Witness { identity, indices: vec![i, j], lhs, rhs })
    });
    CheckReport::leaf(identity, dim * dim, witness)
}

/// Sweeps all triples, failing where `sides` returns two different vectors.
fn ternary_sweep(
    identity: IdentityId,
    dim: usize,
    sides: impl Fn(usize, usize, usize) -> (Vector, Vector) + Sync,
) -> CheckReport {
    let witness = sweep::find_first(dim * dim * dim, |idx| {
        let (i, j, k) = triple_of(dim, idx);
        let (lhs, rhs) = sides(i, j, k);
        (lhs != rhs).then(|| Witness { identity, indices: vec![i, j, k], lhs, rhs })
    });
    CheckReport::leaf(identity, dim * dim * dim, witness)
}

/// Commutativity of a single product, swept over basis pairs.
pub fn check_commutative(op: &BilinearOp) -> CheckReport {
    binary_sweep(IdentityId::Commutativity, op.dim(), |i, j| {
        (op.basis_product(i, j), op.basis_product(j, i))
    })
}

/// Hom-associativity `(x y) a(z) = a(x) (y z)`, swept over basis triples.
pub fn check_hom_associative(a: &HomAlgebra) -> CheckReport {
    let (mu, alpha) = (a.mu(), a.alpha());
    ternary_sweep(IdentityId::HomAssociativity, a.dim(), |i, j, k| {
        (
            ev(mu, &mu.basis_product(i, j), &alpha.column(k)),
            ev(mu, &alpha.column(i), &mu.basis_product(j, k)),
        )
    })
}

fn product_preservation_leaf(
    identity: IdentityId,
    f: &LinearMap,
    op_src: &BilinearOp,
    op_dst: &BilinearOp,
) -> CheckReport {
    binary_sweep(identity, op_src.dim(), |i, j| {
        (
            f.apply(&op_src.basis_product(i, j)).expect("dimension validated"),
            ev(op_dst, &f.column(i), &f.column(j)),
        )
    })
}

/// Multiplicativity of the algebra's own twisting map, for both products.
pub fn check_multiplicative(a: &DoubleHomAlgebra) -> CheckReport {
    CheckReport::composite(
        IdentityId::Multiplicativity,
        vec![
            product_preservation_leaf(IdentityId::MultiplicativityDot, a.alpha(), a.dot(), a.dot()),
            product_preservation_leaf(
                IdentityId::MultiplicativityStar,
                a.alpha(),
                a.star(),
                a.star(),
            ),
        ],
    )
}

fn hom_associator_basis(mu: &BilinearOp, alpha: &LinearMap, i: usize, j: usize, k: usize) -> Vector {
    ev(mu, &mu.basis_product(i, j), &alpha.column(k))
        .sub(&ev(mu, &alpha.column(i), &mu.basis_product(j, k)))
}

/// The two Hom-Novikov identities of `(A, mu, alpha)`: left-symmetry of the
/// Hom-associator and the right-multiplication exchange.
pub fn check_hom_novikov(a: &HomAlgebra) -> CheckReport {
    let (mu, alpha) = (a.mu(), a.alpha());
    let left_symmetry = ternary_sweep(IdentityId::NovikovLeftSymmetry, a.dim(), |i, j, k| {
        (hom_associator_basis(mu, alpha, i, j, k), hom_associator_basis(mu, alpha, j, i, k))
    });
    let right_mult = ternary_sweep(IdentityId::NovikovRightMultiplication, a.dim(), |i, j, k| {
        (
            ev(mu, &mu.basis_product(i, j), &alpha.column(k)),
            ev(mu, &mu.basis_product(i, k), &alpha.column(j)),
        )
    });
    CheckReport::composite(IdentityId::HomNovikov, vec![left_symmetry, right_mult])
}

fn mixed_associator_basis(a: &DoubleHomAlgebra, i: usize, j: usize, k: usize) -> Vector {
    ev(a.dot(), &a.star().basis_product(i, j), &a.alpha().column(k))
        .sub(&ev(a.star(), &a.alpha().column(i), &a.dot().basis_product(j, k)))
}

/// The four defining clauses, all evaluated: commutative Hom-associativity of
/// dot, the Hom-Novikov identities of star, left-symmetry of the mixed
/// associator, and the dot/star right-multiplication exchange.
pub fn check_hom_novikov_poisson(a: &DoubleHomAlgebra) -> CheckReport {
    let commutative_hom_associative = CheckReport::composite(
        IdentityId::CommutativeHomAssociativity,
        vec![check_commutative(a.dot()), check_hom_associative(&a.dot_algebra())],
    );
    let hom_novikov = check_hom_novikov(&a.star_algebra());
    let mixed_left_symmetry = ternary_sweep(IdentityId::MixedLeftSymmetry, a.dim(), |i, j, k| {
        (mixed_associator_basis(a, i, j, k), mixed_associator_basis(a, j, i, k))
    });
    let right_mult = ternary_sweep(IdentityId::MixedRightMultiplication, a.dim(), |i, j, k| {
        (
            ev(a.star(), &a.dot().basis_product(i, j), &a.alpha().column(k)),
            ev(a.dot(), &a.star().basis_product(i, k), &a.alpha().column(j)),
        )
    });
    CheckReport::composite(
        IdentityId::HomNovikovPoisson,
        vec![commutative_hom_associative, hom_novikov, mixed_left_symmetry, right_mult],
    )
}

/// For a commutative dot, the identities `(x.y)*a(z) = (x*z).a(y)` and
/// `(x.y)*a(z) = a(x).(y*z)` are equivalent as universally quantified
/// statements; this checks that their verdicts agree, and on a
/// Hom-Novikov-Poisson input additionally that both hold (the three-way
/// equality).
pub fn check_rightmult_equivalence(a: &DoubleHomAlgebra) -> Result<CheckReport, Error> {
    if !check_commutative(a.dot()).passed() {
        return Err(Error::DotNotCommutative);
    }
    let swap_form = ternary_sweep(IdentityId::MixedRightMultiplication, a.dim(), |i, j, k| {
        (
            ev(a.star(), &a.dot().basis_product(i, j), &a.alpha().column(k)),
            ev(a.dot(), &a.star().basis_product(i, k), &a.alpha().column(j)),
        )
    });
    let exchange_form = ternary_sweep(IdentityId::RightMultExchange, a.dim(), |i, j, k| {
        (
            ev(a.star(), &a.dot().basis_product(i, j), &a.alpha().column(k)),
            ev(a.dot(), &a.alpha().column(i), &a.star().basis_product(j, k)),
        )
    });
    let mut passed = swap_form.passed() == exchange_form.passed();
    if passed && check_hom_novikov_poisson(a).passed() {
        passed = swap_form.passed() && exchange_form.passed();
    }
    let witness = if passed {
        None
    } else {
        swap_form.witness().or(exchange_form.witness()).cloned()
    };
    let checked = swap_form.triples_checked() + exchange_form.triples_checked();
    Ok(CheckReport {
        identity: IdentityId::RightMultEquivalence,
        passed,
        witness,
        checked,
        sub_reports: vec![swap_form, exchange_form],
    })
}

/// Anti-symmetry and the Hom-Jacobi identity for the product read as a bracket.
pub fn check_hom_lie(a: &HomAlgebra) -> CheckReport {
    let (bracket, alpha) = (a.mu(), a.alpha());
    let anti_symmetry = binary_sweep(IdentityId::AntiSymmetry, a.dim(), |i, j| {
        (bracket.basis_product(i, j), bracket.basis_product(j, i).neg())
    });
    let jacobi = ternary_sweep(IdentityId::HomJacobi, a.dim(), |i, j, k| {
        let term_ij = ev(bracket, &bracket.basis_product(i, j), &alpha.column(k));
        let term_ki = ev(bracket, &bracket.basis_product(k, i), &alpha.column(j));
        let term_jk = ev(bracket, &bracket.basis_product(j, k), &alpha.column(i));
        (term_ij.add(&term_ki).add(&term_jk), Vector::zero(a.dim()))
    });
    CheckReport::composite(IdentityId::HomLie, vec![anti_symmetry, jacobi])
}

/// Hom-Poisson axioms with `star` read as the bracket: commutative
/// Hom-associative dot, Hom-Lie bracket, and the Hom-Leibniz compatibility.
pub fn check_hom_poisson(a: &DoubleHomAlgebra) -> CheckReport {
    let leibniz = ternary_sweep(IdentityId::HomLeibniz, a.dim(), |i, j, k| {
        let lhs = ev(a.star(), &a.alpha().column(i), &a.dot().basis_product(j, k));
        let rhs = ev(a.dot(), &a.star().basis_product(i, j), &a.alpha().column(k))
            .add(&ev(a.dot(), &a.alpha().column(j), &a.star().basis_product(i, k)));
        (lhs, rhs)
    });
    CheckReport::composite(
        IdentityId::HomPoisson,
        vec![
            check_commutative(a.dot()),
            check_hom_associative(&a.dot_algebra()),
            check_hom_lie(&a.star_algebra()),
            leibniz,
        ],
    )
}

/// Whether `f` preserves both products of `a` into `b` (no compatibility with
/// the twisting maps required).
pub fn check_weak_morphism(
    f: &LinearMap,
    a: &DoubleHomAlgebra,
    b: &DoubleHomAlgebra,
) -> Result<CheckReport, Error> {
    if b.dim() != a.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), found: b.dim() });
    }
    if f.dim() != a.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), found: f.dim() });
    }
    Ok(CheckReport::composite(
        IdentityId::WeakMorphism,
        vec![
            product_preservation_leaf(IdentityId::ProductPreservationDot, f, a.dot(), b.dot()),
            product_preservation_leaf(IdentityId::ProductPreservationStar, f, a.star(), b.star()),
        ],
    ))
}

/// Weak morphism plus intertwining of the twisting maps, `f alpha_A = alpha_B f`.
pub fn check_morphism(
    f: &LinearMap,
    a: &DoubleHomAlgebra,
    b: &DoubleHomAlgebra,
) -> Result<CheckReport, Error> {
    let weak = check_weak_morphism(f, a, b)?;
    let dim = a.dim();
    let intertwining_witness = sweep::find_first(dim, |j| {
        let lhs = f.apply(&a.alpha().column(j)).expect("dimension validated");
        let rhs = b.alpha().apply(&f.column(j)).expect("dimension validated");
        (lhs != rhs).then(|| Witness {
            identity: IdentityId::TwistIntertwining,
            indices: vec![j],
            lhs,
            rhs,
        })
    });
    let intertwining = CheckReport::leaf(IdentityId::TwistIntertwining, dim, intertwining_witness);
    let mut subs = weak.sub_reports;
    subs.push(intertwining);
    Ok(CheckReport::composite(IdentityId::Morphism, subs))
}

/// Leibniz rule for `d` over the product, swept over basis pairs.
pub fn check_derivation(d: &LinearMap, mu: &BilinearOp) -> Result<CheckReport, Error> {
    if d.dim() != mu.dim() {
        return Err(Error::DimensionMismatch { expected: mu.dim(), found: d.dim() });
    }
    Ok(binary_sweep(IdentityId::DerivationLeibniz, mu.dim(), |i, j| {
        let lhs = d.apply(&mu.basis_product(i, j)).expect("dimension validated");
        let rhs = ev(mu, &d.column(i), &Vector::basis(mu.dim(), j))
            .add(&ev(mu, &Vector::basis(mu.dim(), i), &d.column(j)));
        (lhs, rhs)
    }))
}

/// Left-Hom-associativity `(x.y)*a(z) = a(x)*(y.z)`, swept over basis triples.
pub fn check_left_hom_associative(a: &DoubleHomAlgebra) -> CheckReport {
    ternary_sweep(IdentityId::LeftHomAssociativity, a.dim(), |i, j, k| {
        (
            ev(a.star(), &a.dot().basis_product(i, j), &a.alpha().column(k)),
            ev(a.star(), &a.alpha().column(i), &a.dot().basis_product(j, k)),
        )
    })
}
