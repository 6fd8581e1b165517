use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use csl_core::{
    enumerate_soc_z2, lattice_intersection, snf, soc_factorize, soc_matrix, sos_decompose,
    GaussInt, IntMatrix, RatMatrix,
};

fn snf_bench(c: &mut Criterion) {
    let mut group = c.benchmark_group("snf");
    let cases = [
        ("3x3", IntMatrix::from_i64(&[[2, 4, 4], [-6, 6, 12], [10, -4, -16]])),
        (
            "5x5",
            IntMatrix::from_i64(&[
                [9, -3, 7, 1, 4],
                [2, 8, -5, 6, -1],
                [-7, 4, 3, -9, 2],
                [5, -6, 1, 2, 8],
                [3, 7, -2, -4, 6],
            ]),
        ),
    ];
    for (name, m) in cases {
        group.bench_with_input(BenchmarkId::from_parameter(name), &m, |b, m| {
            b.iter(|| snf(black_box(m)).expect("nonsingular"))
        });
    }
    group.finish();
}

fn coincidence_index_bench(c: &mut Criterion) {
    let rotations: Vec<_> = enumerate_soc_z2(200)
        .into_iter()
        .filter(|f| f.index() > 100.into())
        .take(8)
        .map(|f| soc_matrix(&f.reconstruct()).expect("rotation").into_similarity())
        .collect();
    c.bench_function("coincidence_index/z2_sigma_gt_100", |b| {
        b.iter(|| {
            for s in &rotations {
                black_box(s.coincidence_index().expect("commensurate"));
            }
        })
    });
    let b1 = RatMatrix::identity(3);
    let b2 = RatMatrix::from_rows(vec![
        vec![(2, 3), (-2, 3), (1, 3)],
        vec![(1, 3), (2, 3), (2, 3)],
        vec![(-2, 3), (-1, 3), (2, 3)],
    ]
    .into_iter()
    .map(|r| r.into_iter().map(|(p, q)| csl_core::scalar::rat(p, q)).collect())
    .collect())
    .expect("square");
    c.bench_function("lattice_intersection/z3_rotation", |b| {
        b.iter(|| lattice_intersection(black_box(&b1), black_box(&b2)).expect("commensurate"))
    });
}

fn gaussian_bench(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_soc_z2");
    for max in [25u64, 100, 1000] {
        group.bench_with_input(BenchmarkId::from_parameter(max), &max, |b, &max| {
            b.iter(|| enumerate_soc_z2(black_box(max)))
        });
    }
    group.finish();
    let z = GaussInt::new(-637, 916);
    c.bench_function("sos_decompose", |b| b.iter(|| sos_decompose(black_box(&z)).expect("nonzero")));
    let q = csl_core::GaussRational::ratio(&z, &z.conj()).expect("nonzero");
    c.bench_function("soc_factorize", |b| b.iter(|| soc_factorize(black_box(&q)).expect("unit modulus")));
}

criterion_group!(benches, snf_bench, coincidence_index_bench, gaussian_bench);
criterion_main!(benches);
