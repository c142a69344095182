//! Seeded theorem-verification suite: replays every structure theorem the
//! constructions implement over the fixture catalog and a deterministic
//! closure of derived algebras, counting instances per theorem and capturing
//! serialized offending algebras for any failure.
//!
//! The suite is deterministic for a fixed `(seed, depth)`: the catalog, the
//! derived closure, the random vector triples, and the perturbation elements
//! are all driven by counter-derived ChaCha streams and fixed iteration
//! order.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{commutator_op, DoubleHomAlgebra, HomAlgebra};
use crate::checks::{
    check_hom_lie, check_hom_novikov, check_hom_novikov_poisson, check_hom_poisson,
    check_morphism, check_multiplicative, check_rightmult_equivalence, check_weak_morphism,
    CheckReport,
};
use crate::constructions::{
    commutator_minus, is_admissible, nth_twist, perturb_combined, perturb_diamond, perturb_times,
    tensor_product, twist,
};
use crate::fixtures::{fixture_catalog, tensor_subcatalog_names, CatalogEntry, NamedMorphism};
use crate::io::{algebra_to_file, canonical_json};
use crate::linalg::{BilinearOp, LinearMap, Vector};
use crate::scalar::{rat, Rational};

/// Instance and failure counts for one theorem.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremStat {
    /// Stable theorem tag, e.g. `"twist-closure"`.
    pub name: String,
    /// How many concrete instances were checked.
    pub instances: usize,
    /// How many of them failed.
    pub failures: usize,
}

/// One failed theorem instance, with enough data to reproduce it offline.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FailureRecord {
    /// Theorem tag the instance belongs to.
    pub theorem: String,
    /// Name of the subject algebra (catalog name plus construction suffixes).
    pub subject: String,
    /// Dimension of the subject algebra.
    pub dim: usize,
    /// Human-readable reason, usually a failing identity and witness triple.
    pub detail: String,
    /// The offending algebra, serialized in the CLI document format.
    pub algebra_json: String,
}

/// Outcome of a full suite run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    /// Seed the catalog and all random draws were derived from.
    pub seed: u64,
    /// Construction-composition depth (at least 1).
    pub depth: u32,
    /// Per-theorem instance and failure counts, in first-touch order.
    pub stats: Vec<TheoremStat>,
    /// Every failed instance, in discovery order.
    pub failures: Vec<FailureRecord>,
}

impl SuiteReport {
    /// Total number of theorem instances checked.
    pub fn total_instances(&self) -> usize {
        self.stats.iter().map(|s| s.instances).sum()
    }

    /// Total number of failures across all theorems.
    pub fn total_failures(&self) -> usize {
        self.stats.iter().map(|s| s.failures).sum()
    }

    /// True when every instance passed.
    pub fn passed(&self) -> bool {
        self.total_failures() == 0
    }

    /// The failing instance with the smallest algebra (then earliest found):
    /// the one worth reading first.
    pub fn minimal_failure(&self) -> Option<&FailureRecord> {
        self.failures.iter().min_by_key(|f| f.dim)
    }
}

/// An algebra moving through the suite: the catalog data plus everything the
/// battery needs to decide which theorems apply to it.
struct Subject {
    name: String,
    algebra: DoubleHomAlgebra,
    morphisms: Vec<NamedMorphism>,
    hnp: bool,
    multiplicative: bool,
    admissible: bool,
}

impl Subject {
    fn assess(name: String, algebra: DoubleHomAlgebra, morphisms: Vec<NamedMorphism>) -> Subject {
        let hnp = check_hom_novikov_poisson(&algebra).passed();
        let multiplicative = check_multiplicative(&algebra).passed();
        let admissible = hnp
            && is_admissible(&algebra)
                .map(|r| r.passed())
                .unwrap_or(false);
        Subject {
            name,
            algebra,
            morphisms,
            hnp,
            multiplicative,
            admissible,
        }
    }

    fn from_entry(entry: &CatalogEntry) -> Subject {
        Subject::assess(
            entry.name.clone(),
            entry.algebra.clone(),
            entry.weak_morphisms.clone(),
        )
    }

    fn dim(&self) -> usize {
        self.algebra.dim()
    }
}

struct Suite {
    stats: Vec<TheoremStat>,
    failures: Vec<FailureRecord>,
}

impl Suite {
    fn new() -> Suite {
        Suite {
            stats: Vec::new(),
            failures: Vec::new(),
        }
    }

    fn record(
        &mut self,
        theorem: &str,
        subject: &str,
        algebra: &DoubleHomAlgebra,
        outcome: Result<(), String>,
    ) {
        let stat = match self.stats.iter_mut().find(|s| s.name == theorem) {
            Some(s) => s,
            None => {
                self.stats.push(TheoremStat {
                    name: theorem.to_string(),
                    instances: 0,
                    failures: 0,
                });
                self.stats.last_mut().expect("just pushed")
            }
        };
        stat.instances += 1;
        if let Err(detail) = outcome {
            stat.failures += 1;
            self.failures.push(FailureRecord {
                theorem: theorem.to_string(),
                subject: subject.to_string(),
                dim: algebra.dim(),
                detail,
                algebra_json: canonical_json(&algebra_to_file(algebra, None)),
            });
        }
    }
}

/// Summarize a report as pass/fail with the first failing identity and
/// witness triple.
fn verdict(report: &CheckReport) -> Result<(), String> {
    if report.passed() {
        return Ok(());
    }
    match report.witness() {
        Some(w) => Err(format!(
            "{} fails at {:?}",
            report
                .first_failing_identity()
                .unwrap_or(report.identity())
                .name(),
            w.indices
        )),
        None => Err(format!("{} fails", report.identity().name())),
    }
}

fn require(condition: bool, message: &str) -> Result<(), String> {
    if condition {
        Ok(())
    } else {
        Err(message.to_string())
    }
}

/// Random vector with small rational coordinates.
fn random_vector(rng: &mut ChaCha8Rng, dim: usize) -> Vector {
    Vector::new(
        (0..dim)
            .map(|_| {
                let num = rng.gen_range(-3i64..=3);
                let den = if rng.gen_bool(0.5) { 1 } else { 2 };
                rat(num, den)
            })
            .collect(),
    )
}

/// Direct evaluation of all six defining identities at one vector triple.
/// Any multilinear identity that holds on every basis triple must hold on
/// arbitrary vectors; this is the soundness cross-check for the basis sweeps.
fn identities_hold_at(
    a: &DoubleHomAlgebra,
    x: &Vector,
    y: &Vector,
    z: &Vector,
) -> Result<(), String> {
    let dot = a.dot();
    let star = a.star();
    let alpha = a.alpha();
    let ad = |v: &Vector| alpha.apply(v).expect("dimensions agree");
    let ev = |op: &BilinearOp, u: &Vector, v: &Vector| op.eval(u, v).expect("dimensions agree");

    if ev(dot, x, y) != ev(dot, y, x) {
        return Err("commutativity fails on a random triple".into());
    }
    if ev(dot, &ev(dot, x, y), &ad(z)) != ev(dot, &ad(x), &ev(dot, y, z)) {
        return Err("Hom-associativity fails on a random triple".into());
    }
    let star_assoc = |u: &Vector, v: &Vector, w: &Vector| {
        ev(star, &ev(star, u, v), &ad(w)).sub(&ev(star, &ad(u), &ev(star, v, w)))
    };
    if star_assoc(x, y, z) != star_assoc(y, x, z) {
        return Err("left-symmetry of the second product fails on a random triple".into());
    }
    if ev(star, &ev(star, x, y), &ad(z)) != ev(star, &ev(star, x, z), &ad(y)) {
        return Err("right-multiplication identity fails on a random triple".into());
    }
    let mixed = |u: &Vector, v: &Vector, w: &Vector| {
        ev(dot, &ev(star, u, v), &ad(w)).sub(&ev(star, &ad(u), &ev(dot, v, w)))
    };
    if mixed(x, y, z) != mixed(y, x, z) {
        return Err("left-symmetry of the mixed associator fails on a random triple".into());
    }
    if ev(star, &ev(dot, x, y), &ad(z)) != ev(dot, &ev(star, x, z), &ad(y)) {
        return Err("mixed right-multiplication identity fails on a random triple".into());
    }
    Ok(())
}

/// For a commutative Hom-associative product the triple product
/// `(e_i . e_j) . alpha(e_k)` is invariant under all six permutations of
/// `(i, j, k)`; verify that on every basis triple.
fn six_permutation_invariance(dot: &BilinearOp, alpha: &LinearMap) -> Result<(), String> {
    let dim = dot.dim();
    let triple = |i: usize, j: usize, k: usize| -> Vector {
        let alpha_k = alpha.column(k);
        dot.eval(&dot.basis_product(i, j), &alpha_k)
            .expect("dimensions agree")
    };
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                let base = triple(i, j, k);
                for (a, b, c) in [
                    (i, k, j),
                    (j, i, k),
                    (j, k, i),
                    (k, i, j),
                    (k, j, i),
                ] {
                    if triple(a, b, c) != base {
                        return Err(format!(
                            "triple product not permutation-invariant at ({i}, {j}, {k})"
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Admissibility verdict must agree with the Hom-Poisson check of the
/// commutator algebra — both directions of the characterization theorem.
fn admissibility_biconditional(a: &DoubleHomAlgebra) -> Result<(), String> {
    let left = is_admissible(a)
        .map(|r| r.passed())
        .map_err(|e| format!("admissibility precondition failed: {e}"))?;
    let right = check_hom_poisson(&commutator_minus(a)).passed();
    require(
        left == right,
        &format!("is_admissible says {left} but the commutator check says {right}"),
    )
}

/// Left associator of the twist equals beta^2 applied to the left associator
/// of the original, on every basis triple.
fn twist_left_associator_identity(
    a: &DoubleHomAlgebra,
    beta: &LinearMap,
    twisted: &DoubleHomAlgebra,
) -> Result<(), String> {
    let dim = a.dim();
    let beta2 = beta.pow(2);
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                let original = crate::algebra::left_hom_associator(
                    a,
                    &Vector::basis(dim, i),
                    &Vector::basis(dim, j),
                    &Vector::basis(dim, k),
                )
                .expect("dimensions agree");
                let of_twist = crate::algebra::left_hom_associator(
                    twisted,
                    &Vector::basis(dim, i),
                    &Vector::basis(dim, j),
                    &Vector::basis(dim, k),
                )
                .expect("dimensions agree");
                if of_twist != beta2.apply(&original).expect("dimensions agree") {
                    return Err(format!(
                        "left associator of the twist differs from the pushed-forward one at ({i}, {j}, {k})"
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Deterministic perturbation elements: each fixed-subspace basis vector and
/// their sum (capped), so every run exercises the same small menu.
fn perturbation_elements(fixed: &[Vector], dim: usize) -> Vec<Vector> {
    let mut out = vec![Vector::zero(dim)];
    for v in fixed.iter().take(2) {
        out.push(v.clone());
    }
    if fixed.len() >= 2 {
        out.push(fixed[0].add(&fixed[1]));
    }
    out
}

/// Carry a parent's verified morphisms onto a derived algebra, keeping only
/// the ones that still verify (and re-deciding fullness).
fn carry_morphisms(parent: &[NamedMorphism], algebra: &DoubleHomAlgebra) -> Vec<NamedMorphism> {
    parent
        .iter()
        .filter_map(|m| {
            if m.map.dim() != algebra.dim() {
                return None;
            }
            let weak = check_weak_morphism(&m.map, algebra, algebra).ok()?;
            if !weak.passed() {
                return None;
            }
            let full = m.full
                && check_morphism(&m.map, algebra, algebra)
                    .map(|r| r.passed())
                    .unwrap_or(false);
            Some(NamedMorphism {
                name: m.name.clone(),
                map: m.map.clone(),
                full,
            })
        })
        .collect()
}

/// Corrupt one structure constant of the dot table: the designated
/// negative-control hook.  Breaks commutativity at the basis pair (0, 1)
/// whenever the dimension is at least 2.
fn corrupt(algebra: &DoubleHomAlgebra) -> DoubleHomAlgebra {
    let dim = algebra.dim();
    let one = Rational::from_integer(1.into());
    let dot = BilinearOp::from_fn(dim, |i, j, k| {
        let base = algebra.dot().coeff(i, j, k).clone();
        if dim >= 2 && (i, j, k) == (0, 1, 0) {
            base + &one
        } else if dim == 1 && (i, j, k) == (0, 0, 0) {
            base + &one
        } else {
            base
        }
    });
    DoubleHomAlgebra::new(dot, algebra.star().clone(), algebra.alpha().clone())
        .expect("dimensions agree")
}

/// Maximum dimension of subjects that spawn further derived algebras, and of
/// tensor products admitted into the derived pool.  Larger tensors are still
/// checked by the tensor battery, they just do not propagate.
const MAX_PARENT_DIM: usize = 8;
const MAX_POOL_DIM: usize = 9;
/// Hard cap on the derived pool per level, as a runtime guard.
const MAX_LEVEL_SUBJECTS: usize = 400;

/// Run the full theorem battery.
///
/// `depth` (at least 1) is how many construction applications are composed on
/// top of the catalog: depth 1 checks the catalog and every singly-derived
/// algebra, depth 2 also derives from the derived ones, and so on.
///
/// `inject_fault` is the negative-control hook: `Some(i)` corrupts one dot
/// structure constant of the catalog member at index `i` (modulo the catalog
/// size; indices of one-dimensional members fall through to the next member,
/// whose corruption is guaranteed to be detectable).  The suite must then
/// report failures.
pub fn run_suite(seed: u64, depth: u32, inject_fault: Option<usize>) -> SuiteReport {
    assert!(depth >= 1, "depth must be at least 1");
    let catalog = fixture_catalog(seed);
    let mut suite = Suite::new();

    let mut level: Vec<Subject> = catalog.iter().map(Subject::from_entry).collect();
    if let Some(raw) = inject_fault {
        let mut idx = raw % level.len();
        while level[idx].dim() < 2 {
            idx = (idx + 1) % level.len();
        }
        let name = format!("{}!corrupted", level[idx].name);
        let corrupted = corrupt(&level[idx].algebra);
        let morphisms = vec![
            NamedMorphism {
                name: "id".to_string(),
                map: LinearMap::identity(corrupted.dim()),
                full: true,
            },
        ];
        level[idx] = Subject::assess(name, corrupted, morphisms);
    }

    // --- Per-member axiom battery (catalog level only). ---
    for (idx, s) in level.iter().enumerate() {
        suite.record(
            "catalog-soundness",
            &s.name,
            &s.algebra,
            verdict(&check_hom_novikov_poisson(&s.algebra)),
        );

        // Soundness against general vectors: 200 seeded random triples.
        let mut rng =
            ChaCha8Rng::seed_from_u64(seed ^ (0x9E37_79B9_7F4A_7C15u64.wrapping_mul(idx as u64 + 1)));
        let mut agree = Ok(());
        if s.hnp {
            for _ in 0..200 {
                let x = random_vector(&mut rng, s.dim());
                let y = random_vector(&mut rng, s.dim());
                let z = random_vector(&mut rng, s.dim());
                if let Err(e) = identities_hold_at(&s.algebra, &x, &y, &z) {
                    agree = Err(format!("basis sweep passed but {e}"));
                    break;
                }
            }
        } else {
            // The basis sweep failed; spot-check that random evaluation
            // agrees by finding at least one violating random triple.
            let mut found = false;
            for _ in 0..200 {
                let x = random_vector(&mut rng, s.dim());
                let y = random_vector(&mut rng, s.dim());
                let z = random_vector(&mut rng, s.dim());
                if identities_hold_at(&s.algebra, &x, &y, &z).is_err() {
                    found = true;
                    break;
                }
            }
            if !found {
                agree = Err("basis sweep failed but no random triple violates the identities".into());
            }
        }
        suite.record("random-triple-agreement", &s.name, &s.algebra, agree);

        // Doubling the commutative Hom-associative first product is closed.
        let double = DoubleHomAlgebra::new(
            s.algebra.dot().clone(),
            s.algebra.dot().clone(),
            s.algebra.alpha().clone(),
        )
        .expect("dimensions agree");
        let double_report = check_hom_novikov_poisson(&double);
        let double_ok = if s.hnp {
            verdict(&double_report)
        } else {
            Ok(()) // corrupted members are exempt: their dot is not Hom-associative
        };
        suite.record("double-closure", &s.name, &double, double_ok);
        if s.hnp && double_report.passed() {
            suite.record(
                "double-admissible",
                &s.name,
                &double,
                is_admissible(&double)
                    .map_err(|e| e.to_string())
                    .and_then(|r| verdict(&r)),
            );
        }

        // Six-permutation invariance of the commutative triple product.
        if s.hnp {
            suite.record(
                "commutative-six-permutations",
                &s.name,
                &s.algebra,
                six_permutation_invariance(s.algebra.dot(), s.algebra.alpha()),
            );

            // Three-way right-multiplication equivalence on verified members.
            let rm = check_rightmult_equivalence(&s.algebra);
            let rm_ok = match rm {
                Err(e) => Err(format!("equivalence check refused: {e}")),
                Ok(report) => {
                    let both = report.sub_reports().iter().all(CheckReport::passed);
                    verdict(&report).and_then(|()| {
                        require(both, "a right-multiplication form fails on a verified member")
                    })
                }
            };
            suite.record("rightmult-three-way", &s.name, &s.algebra, rm_ok);

            // The commutator of the second product is a Hom-Lie bracket.
            let bracket = commutator_op(s.algebra.star());
            let lie = HomAlgebra::new(bracket, s.algebra.alpha().clone())
                .expect("dimensions agree");
            suite.record(
                "novikov-commutator-hom-lie",
                &s.name,
                &s.algebra,
                verdict(&check_hom_lie(&lie)),
            );

            // Admissibility biconditional on the member itself.
            suite.record(
                "admissibility-biconditional",
                &s.name,
                &s.algebra,
                admissibility_biconditional(&s.algebra),
            );
        } else {
            // Negative control still exercises the biconditional surface:
            // non-eligible inputs must be refused, not misjudged.
            suite.record(
                "admissibility-biconditional",
                &s.name,
                &s.algebra,
                match is_admissible(&s.algebra) {
                    Err(_) => Ok(()),
                    Ok(_) => Err("non-eligible input was not refused".into()),
                },
            );
        }
    }

    // --- Tensor battery over the designated sub-catalog. ---
    let designated: Vec<&Subject> = tensor_subcatalog_names()
        .iter()
        .filter_map(|n| level.iter().find(|s| s.name == *n))
        .collect();
    let mut tensor_pool: Vec<Subject> = Vec::new();
    for left in &designated {
        for right in &designated {
            let name = format!("{}(x){}", left.name, right.name);
            let product = tensor_product(&left.algebra, &right.algebra);
            suite.record(
                "tensor-closure",
                &name,
                &product,
                verdict(&check_hom_novikov_poisson(&product)),
            );
            if left.multiplicative && right.multiplicative {
                suite.record(
                    "tensor-multiplicative",
                    &name,
                    &product,
                    verdict(&check_multiplicative(&product)),
                );
                for n in 1..=2u32 {
                    let outcome = match (
                        nth_twist(&product, n),
                        nth_twist(&left.algebra, n),
                        nth_twist(&right.algebra, n),
                    ) {
                        (Ok(whole), Ok(l), Ok(r)) => require(
                            whole == tensor_product(&l, &r),
                            "power twist does not commute with the tensor product",
                        ),
                        (w, l, r) => Err(format!(
                            "power twist refused: {:?} / {:?} / {:?}",
                            w.err(),
                            l.err(),
                            r.err()
                        )),
                    };
                    suite.record("power-twist-tensor-commute", &name, &product, outcome);
                }
            }
            // Twist/tensor commutation over a small morphism menu.
            let menu = |s: &Subject| -> Vec<NamedMorphism> {
                let mut picks = Vec::new();
                if let Some(first) = s.morphisms.first() {
                    picks.push(first.clone());
                }
                if s.morphisms.len() > 1 {
                    picks.push(s.morphisms.last().expect("nonempty").clone());
                }
                picks
            };
            for m1 in menu(left) {
                for m2 in menu(right) {
                    let beta = m1.map.tensor(&m2.map);
                    let outcome = match (
                        twist(&product, &beta),
                        twist(&left.algebra, &m1.map),
                        twist(&right.algebra, &m2.map),
                    ) {
                        (Ok(whole), Ok(l), Ok(r)) => require(
                            whole == tensor_product(&l, &r),
                            "twist does not commute with the tensor product",
                        ),
                        (w, l, r) => Err(format!(
                            "twist refused: {:?} / {:?} / {:?}",
                            w.err(),
                            l.err(),
                            r.err()
                        )),
                    };
                    suite.record(
                        "twist-tensor-commute",
                        &format!("{name} via {}(x){}", m1.name, m2.name),
                        &product,
                        outcome,
                    );
                }
            }
            // The tensor bracket splits into the two partial brackets.
            let bracket = commutator_minus(&product);
            let left_bracket = commutator_minus(&left.algebra);
            let right_bracket = commutator_minus(&right.algebra);
            let expected = left_bracket
                .star()
                .tensor(right.algebra.dot())
                .add(&left.algebra.dot().tensor(right_bracket.star()))
                .expect("dimensions agree");
            suite.record(
                "tensor-bracket-formula",
                &name,
                &product,
                require(
                    *bracket.star() == expected,
                    "tensor bracket does not split into the partial brackets",
                ),
            );
            if left.admissible && right.admissible {
                suite.record(
                    "tensor-preserves-admissibility",
                    &name,
                    &product,
                    is_admissible(&product)
                        .map_err(|e| e.to_string())
                        .and_then(|r| verdict(&r)),
                );
            }
            if product.dim() <= MAX_POOL_DIM {
                let morphisms = vec![NamedMorphism {
                    name: "id".to_string(),
                    map: LinearMap::identity(product.dim()),
                    full: true,
                }];
                tensor_pool.push(Subject::assess(name, product, morphisms));
            }
        }
    }

    // --- Derived closure: twists and perturbations, level by level. ---
    for current_depth in 1..=depth {
        let mut next: Vec<Subject> = Vec::new();
        for s in &level {
            if s.dim() > MAX_PARENT_DIM {
                continue;
            }

            // Twist by every cataloged weak morphism.
            for m in &s.morphisms {
                let twisted = match twist(&s.algebra, &m.map) {
                    Ok(t) => t,
                    Err(e) => {
                        suite.record(
                            "twist-closure",
                            &format!("{}~tw-{}", s.name, m.name),
                            &s.algebra,
                            if s.hnp {
                                Err(format!("twist refused: {e}"))
                            } else {
                                Ok(()) // refusing a corrupted input is correct
                            },
                        );
                        continue;
                    }
                };
                let tname = format!("{}~tw-{}", s.name, m.name);
                suite.record(
                    "twist-closure",
                    &tname,
                    &twisted,
                    verdict(&check_hom_novikov_poisson(&twisted)),
                );
                if s.multiplicative && m.full {
                    suite.record(
                        "twist-multiplicative",
                        &tname,
                        &twisted,
                        verdict(&check_multiplicative(&twisted)),
                    );
                }
                suite.record(
                    "twist-left-associator-pushforward",
                    &tname,
                    &twisted,
                    twist_left_associator_identity(&s.algebra, &m.map, &twisted),
                );
                let twisted_bracket = commutator_minus(&twisted);
                let pushed = commutator_minus(&s.algebra)
                    .star()
                    .postcompose(&m.map)
                    .expect("dimensions agree");
                suite.record(
                    "twist-bracket-pushforward",
                    &tname,
                    &twisted,
                    require(
                        *twisted_bracket.star() == pushed,
                        "twisted bracket is not the pushed-forward bracket",
                    ),
                );
                if s.admissible {
                    suite.record(
                        "twist-preserves-admissibility",
                        &tname,
                        &twisted,
                        is_admissible(&twisted)
                            .map_err(|e| e.to_string())
                            .and_then(|r| verdict(&r)),
                    );
                }
                let interesting = m.name != "id" && m.name != "zero" && !m.map.is_zero();
                if interesting && twisted.dim() <= MAX_POOL_DIM && next.len() < MAX_LEVEL_SUBJECTS {
                    let carried = carry_morphisms(&s.morphisms, &twisted);
                    next.push(Subject::assess(tname, twisted, carried));
                }
            }

            // Single power twist by the algebra's own twisting map.
            if s.multiplicative {
                let tname = format!("{}~pw1", s.name);
                match nth_twist(&s.algebra, 1) {
                    Ok(t) => {
                        suite.record(
                            "power-twist-closure",
                            &tname,
                            &t,
                            verdict(&check_hom_novikov_poisson(&t)),
                        );
                        if s.admissible {
                            suite.record(
                                "power-twist-preserves-admissibility",
                                &tname,
                                &t,
                                is_admissible(&t)
                                    .map_err(|e| e.to_string())
                                    .and_then(|r| verdict(&r)),
                            );
                        }
                        if next.len() < MAX_LEVEL_SUBJECTS {
                            let carried = carry_morphisms(&s.morphisms, &t);
                            next.push(Subject::assess(tname, t, carried));
                        }
                    }
                    Err(e) => {
                        suite.record(
                            "power-twist-closure",
                            &tname,
                            &s.algebra,
                            Err(format!("power twist refused: {e}")),
                        );
                    }
                }
            }

            // Perturbation theorems on multiplicative subjects.
            if s.multiplicative && s.hnp {
                let fixed2 = s.algebra.alpha().pow(2).fixed_subspace();
                let fixed4 = s.algebra.alpha().pow(4).fixed_subspace();
                let elements_a = perturbation_elements(&fixed2, s.dim());
                let elements_b = perturbation_elements(&fixed4, s.dim());

                for (ai, a) in elements_a.iter().enumerate() {
                    let pname = format!("{}~dia{ai}", s.name);
                    match perturb_diamond(&s.algebra, a) {
                        Ok(p) => {
                            let hnp_report = check_hom_novikov_poisson(&p);
                            suite.record(
                                "perturb-diamond-closure",
                                &pname,
                                &p,
                                verdict(&hnp_report).and_then(|()| {
                                    verdict(&check_multiplicative(&p))
                                }),
                            );
                            if s.admissible {
                                suite.record(
                                    "perturb-diamond-preserves-admissibility",
                                    &pname,
                                    &p,
                                    is_admissible(&p)
                                        .map_err(|e| e.to_string())
                                        .and_then(|r| verdict(&r)),
                                );
                            }
                            if ai == 0 {
                                // a = 0: the rescaled product collapses and
                                // the twisted second product survives.
                                let expected_star = s
                                    .algebra
                                    .star()
                                    .postcompose(s.algebra.alpha())
                                    .expect("dimensions agree");
                                suite.record(
                                    "perturb-diamond-zero-element",
                                    &pname,
                                    &p,
                                    require(
                                        p.dot().is_zero() && *p.star() == expected_star,
                                        "zero-element perturbation has the wrong products",
                                    ),
                                );
                            } else if ai == 1 && next.len() < MAX_LEVEL_SUBJECTS {
                                next.push(Subject::assess(pname, p, carry_morphisms(&[], &s.algebra)));
                            }
                        }
                        Err(e) => {
                            suite.record(
                                "perturb-diamond-closure",
                                &pname,
                                &s.algebra,
                                Err(format!("perturbation refused: {e}")),
                            );
                        }
                    }
                }

                for (ai, a) in elements_a.iter().enumerate() {
                    let pname = format!("{}~times{ai}", s.name);
                    match perturb_times(&s.algebra, a) {
                        Ok(p) => {
                            suite.record(
                                "perturb-times-closure",
                                &pname,
                                &p,
                                verdict(&check_hom_novikov_poisson(&p)).and_then(|()| {
                                    verdict(&check_multiplicative(&p))
                                }),
                            );
                            // The single perturbed product with the squared
                            // twisting map is itself a valid one-product
                            // structure.
                            let single = HomAlgebra::new(
                                p.star().clone(),
                                s.algebra.alpha().pow(2),
                            )
                            .expect("dimensions agree");
                            suite.record(
                                "perturb-times-single-product",
                                &pname,
                                &p,
                                verdict(&check_hom_novikov(&single)),
                            );
                            if ai == 0 {
                                let outcome = match nth_twist(&s.algebra, 1) {
                                    Ok(pw) => require(
                                        p == pw,
                                        "zero-element perturbation is not the single power twist",
                                    ),
                                    Err(e) => Err(format!("power twist refused: {e}")),
                                };
                                suite.record(
                                    "perturb-times-zero-element",
                                    &pname,
                                    &p,
                                    outcome,
                                );
                            }
                        }
                        Err(e) => {
                            suite.record(
                                "perturb-times-closure",
                                &pname,
                                &s.algebra,
                                Err(format!("perturbation refused: {e}")),
                            );
                        }
                    }
                }

                // Combined perturbation: closure plus exact factorization.
                for (ai, a) in elements_a.iter().enumerate().take(2) {
                    for (bi, b) in elements_b.iter().enumerate().take(2) {
                        let pname = format!("{}~comb{ai}{bi}", s.name);
                        let outcome = match perturb_combined(&s.algebra, a, b) {
                            Ok(p) => {
                                let closure = verdict(&check_hom_novikov_poisson(&p))
                                    .and_then(|()| verdict(&check_multiplicative(&p)));
                                let factored = perturb_times(&s.algebra, a)
                                    .and_then(|bar| perturb_diamond(&bar, b))
                                    .map_err(|e| format!("factor construction refused: {e}"))
                                    .and_then(|composed| {
                                        require(
                                            p == composed,
                                            "combined perturbation differs from its factorization",
                                        )
                                    });
                                closure.and(factored)
                            }
                            Err(e) => Err(format!("perturbation refused: {e}")),
                        };
                        suite.record("perturb-combined-factorization", &pname, &s.algebra, outcome);
                    }
                }
            }
        }

        if current_depth == 1 {
            next.extend(tensor_pool.drain(..));
        }

        // Every derived algebra feeds the admissibility biconditional.
        for t in &next {
            if t.hnp {
                suite.record(
                    "admissibility-biconditional",
                    &t.name,
                    &t.algebra,
                    admissibility_biconditional(&t.algebra),
                );
            }
        }
        level = next;
    }

    SuiteReport {
        seed,
        depth,
        stats: suite.stats,
        failures: suite.failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_algebra_json;

    #[test]
    fn default_suite_is_green_with_enough_instances() {
        let report = run_suite(0, 2, None);
        assert!(
            report.passed(),
            "suite failed: {:?}",
            report.minimal_failure().map(|f| (&f.theorem, &f.subject, &f.detail))
        );
        assert!(report.total_instances() >= 200, "only {} instances", report.total_instances());
        assert!(report.stats.len() >= 15);
        for stat in &report.stats {
            assert_eq!(stat.failures, 0, "{} has failures", stat.name);
            assert!(stat.instances > 0, "{} ran no instances", stat.name);
        }
        assert_eq!(report.seed, 0);
        assert_eq!(report.depth, 2);
    }

    #[test]
    fn suite_is_deterministic_for_fixed_inputs() {
        let a = run_suite(7, 1, None);
        let b = run_suite(7, 1, None);
        assert_eq!(a, b);
    }

    #[test]
    fn injected_fault_is_detected_and_reported() {
        let report = run_suite(0, 1, Some(1));
        assert!(!report.passed());
        let soundness = report
            .stats
            .iter()
            .find(|s| s.name == "catalog-soundness")
            .expect("stat exists");
        assert!(soundness.failures >= 1);
        let failure = report.minimal_failure().expect("at least one failure");
        assert!(failure.dim >= 2);
        // The serialized offending algebra must itself be loadable.
        let (algebra, _) = parse_algebra_json(&failure.algebra_json).expect("valid document");
        assert_eq!(algebra.dim(), failure.dim);
    }

    #[test]
    #[should_panic(expected = "depth must be at least 1")]
    fn depth_zero_is_rejected() {
        run_suite(0, 0, None);
    }
}
