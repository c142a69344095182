//! Compares the parallel and sequential basis sweeps, and times the full
//! axiom check, on a 16-dimensional tensor-product fixture.

use criterion::{criterion_group, criterion_main, Criterion};
use homnp::sweep;
use homnp::{
    check_hom_novikov_poisson, from_derivation, int, tensor_product, BilinearOp,
    DoubleHomAlgebra, LinearMap,
};
use std::hint::black_box;

fn trunc_product(n: usize) -> BilinearOp {
    BilinearOp::from_fn(n, |i, j, k| if i + j == k { int(1) } else { int(0) })
}

fn monomial_map(n: usize, k: usize) -> LinearMap {
    LinearMap::from_fn(n, |row, col| {
        if col >= 1 && col + k - 1 == row {
            int(col as i64)
        } else {
            int(0)
        }
    })
}

fn dim16() -> DoubleHomAlgebra {
    let a = from_derivation(
        &trunc_product(4),
        &monomial_map(4, 2),
        &LinearMap::identity(4),
    )
    .unwrap();
    tensor_product(&a, &a)
}

/// Mixed-associator left-symmetry probe at one basis triple; never matches
/// on this fixture, so every sweep covers the full range.
fn mixed_probe(a: &DoubleHomAlgebra, idx: usize) -> Option<usize> {
    let d = a.dim();
    let (i, j, k) = (idx / (d * d), (idx / d) % d, idx % d);
    let lhs = a
        .dot()
        .eval(&a.star().basis_product(i, j), &a.alpha().column(k))
        .unwrap();
    let rhs = a
        .star()
        .eval(&a.alpha().column(i), &a.dot().basis_product(j, k))
        .unwrap();
    (lhs != rhs).then_some(idx)
}

fn bench_sweeps(c: &mut Criterion) {
    let a = dim16();
    let count = a.dim() * a.dim() * a.dim();

    c.bench_function("check-hnp/tensor-dim-16", |b| {
        b.iter(|| black_box(check_hom_novikov_poisson(black_box(&a))))
    });

    let mut group = c.benchmark_group("mixed-associator-sweep");
    group.bench_function("sequential", |b| {
        b.iter(|| black_box(sweep::find_first_seq(count, |idx| mixed_probe(&a, idx))))
    });
    #[cfg(feature = "parallel")]
    group.bench_function("parallel", |b| {
        b.iter(|| black_box(sweep::find_first_par(count, |idx| mixed_probe(&a, idx))))
    });
    group.finish();
}

criterion_group!(benches, bench_sweeps);
criterion_main!(benches);
