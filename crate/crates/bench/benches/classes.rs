use criterion::{criterion_group, criterion_main, Criterion};
use hitchin_core::cover::{classify_family, multiplicity_audit, SpectralFamily};
use hitchin_core::picard::{derive_hodge_hat, derive_strata_classes, identity_suite};
use std::hint::black_box;

fn picard(c: &mut Criterion) {
    c.bench_function("strata_classes", |b| b.iter(derive_strata_classes));
    c.bench_function("hodge_hat", |b| b.iter(derive_hodge_hat));
    c.bench_function("identity_suite", |b| b.iter(identity_suite));
}

fn cover(c: &mut Criterion) {
    let maxwell = SpectralFamily::parse(&["-2", "1 - 2*z", "2*z", "z^2 - z"], Some(2)).unwrap();
    let mixed = SpectralFamily::parse(&["0", "0", "z^2 - z^3"], None).unwrap();
    let irrational = SpectralFamily::parse(&["0", "0", "2 - z^2"], None).unwrap();
    c.bench_function("classify/maxwell", |b| {
        b.iter(|| classify_family(black_box(&maxwell)).unwrap())
    });
    c.bench_function("classify/mixed", |b| {
        b.iter(|| classify_family(black_box(&mixed)).unwrap())
    });
    c.bench_function("classify/irrational", |b| {
        b.iter(|| classify_family(black_box(&irrational)).unwrap())
    });
    c.bench_function("audit/maxwell", |b| {
        b.iter(|| multiplicity_audit(black_box(&maxwell)).unwrap())
    });
}

criterion_group!(benches, picard, cover);
criterion_main!(benches);
