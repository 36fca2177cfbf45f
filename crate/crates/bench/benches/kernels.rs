use std::hint::black_box;
use std::time::Duration;

use bforms::linalg::{bareiss_det, cofactor_det};
use bforms::{discriminant_symbolic, resultant_symbolic, scan_disc_quotient, scan_quotient, Integers, PolyRing, Rationals};
use bforms_bench::{entry_table, poly_matrix, rational_matrix};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn determinants(c: &mut Criterion) {
    let mut group = c.benchmark_group("determinant");
    for dim in [4, 8, 12] {
        let m = rational_matrix(dim);
        group.bench_with_input(BenchmarkId::new("bareiss_rational", dim), &m, |b, m| {
            b.iter(|| bareiss_det(&Rationals, black_box(m)).unwrap())
        });
    }
    let ring = PolyRing::new(Rationals, entry_table());
    for dim in [3, 5] {
        let m = poly_matrix(dim);
        group.bench_with_input(BenchmarkId::new("bareiss_poly", dim), &m, |b, m| {
            b.iter(|| bareiss_det(&ring, black_box(m)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("cofactor_poly", dim), &m, |b, m| {
            b.iter(|| cofactor_det(&ring, black_box(m)).unwrap())
        });
    }
    group.finish();
}

fn symbolic(c: &mut Criterion) {
    let mut group = c.benchmark_group("symbolic");
    group.bench_function("resultant_3_3", |b| b.iter(|| resultant_symbolic(&Integers, 3, 3).unwrap()));
    group.bench_function("discriminant_4", |b| b.iter(|| discriminant_symbolic(&Integers, 4).unwrap()));
    group.bench_function("discriminant_5", |b| b.iter(|| discriminant_symbolic(&Integers, 5).unwrap()));
    group.finish();
}

fn scans(c: &mut Criterion) {
    let mut group = c.benchmark_group("scan");
    group.sample_size(10);
    group.bench_function("quotient_5_2_2", |b| b.iter(|| scan_quotient(5, 2, 2).unwrap()));
    group.bench_function("disc_quotient_7_3", |b| b.iter(|| scan_disc_quotient(7, 3).unwrap()));
    group.finish();
}

criterion_group! {
    name = benches;
    config = Criterion::default().warm_up_time(Duration::from_millis(500)).measurement_time(Duration::from_secs(2));
    targets = determinants, symbolic, scans
}
criterion_main!(benches);
