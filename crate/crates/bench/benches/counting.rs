use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use critline_core::{backlund_count, scan_sign_changes, verify_equality, ScanConfig};

fn counting(c: &mut Criterion) {
    let cfg = ScanConfig::default();
    c.bench_function("backlund_count T=1000", |b| {
        b.iter(|| backlund_count(black_box(1000.0)))
    });
    c.bench_function("scan_sign_changes [0,200]", |b| {
        b.iter(|| scan_sign_changes(0.0, black_box(200.0), &cfg))
    });
    let mut group = c.benchmark_group("verify_equality");
    group.sample_size(10);
    group.bench_function("T=1000", |b| {
        b.iter(|| verify_equality(black_box(1000.0), &cfg))
    });
    group.finish();
}

criterion_group!(benches, counting);
criterion_main!(benches);
