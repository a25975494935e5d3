use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use hopfwind::descent::descend;
use hopfwind::fd::catalog::taft;
use hopfwind::homology::{bar_resolution, fd_hochschild_homology, hochschild_homology, resolution_for, FdTwist, TwistSpec};
use hopfwind::hopf::builders::{laurent, quantum_sl_chain};
use hopfwind::hopf::verify_hopf_axioms;
use hopfwind_bench::{lcg_matrix, oq_sl, reversed_word};

fn rref(c: &mut Criterion) {
    let mut g = c.benchmark_group("rref");
    for n in [8, 16, 32] {
        let m = lcg_matrix(n, 7);
        g.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| b.iter(|| black_box(m.rank())));
    }
    g.finish();
}

fn normal_form(c: &mut Criterion) {
    let h = oq_sl(3);
    let sys = h.algebra.as_rules().expect("rules").clone();
    let mut g = c.benchmark_group("normal_form_oq_sl3");
    for len in [4, 6, 8] {
        let w = reversed_word(&h, len);
        g.bench_with_input(BenchmarkId::from_parameter(len), &w, |b, w| b.iter(|| black_box(sys.normal_form(w))));
    }
    g.finish();
}

fn quantum(c: &mut Criterion) {
    let h2 = oq_sl(2);
    c.bench_function("axioms_oq_sl2", |b| b.iter(|| black_box(verify_hopf_axioms(&h2, 6))));
    let h3 = oq_sl(3);
    let chain = quantum_sl_chain(3);
    c.bench_function("descent_oq_sl3", |b| b.iter(|| black_box(descend(&h3, &chain).expect("descends"))));
}

fn truncated_homology(c: &mut Criterion) {
    let h = laurent(2);
    let res = resolution_for(&h).expect("tower");
    let spec = TwistSpec::identity(&h);
    let mut g = c.benchmark_group("hochschild_kz2");
    g.sample_size(10);
    for n in [4, 6] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| b.iter(|| black_box(hochschild_homology(&h, &res, &spec, n, 2).expect("computes"))));
    }
    g.finish();
}

fn fd(c: &mut Criterion) {
    let h = taft(3).expect("taft");
    let id = FdTwist::identity(h.dim());
    let mut g = c.benchmark_group("fd_taft3");
    g.sample_size(10);
    g.bench_function("hochschild_deg2", |b| b.iter(|| black_box(fd_hochschild_homology(&h, &id, 2))));
    g.bench_function("bar_resolution_3", |b| b.iter(|| black_box(bar_resolution(&h, 3).expect("bar"))));
    g.finish();
}

criterion_group!(kernels, rref, normal_form, quantum, truncated_homology, fd);
criterion_main!(kernels);
