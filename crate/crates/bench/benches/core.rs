use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use graphsep_core::linalg::char_poly;
use graphsep_core::separability::star_witness;
use graphsep_core::{
    classify, complete_graph, decompose_tensor_product, density_matrix, partial_transpose, Graph,
    Subsystem, TripartiteDims,
};

fn dims(m: usize, p: usize, q: usize) -> TripartiteDims {
    TripartiteDims::new(m, p, q).unwrap()
}

fn bench_char_poly(c: &mut Criterion) {
    let mut group = c.benchmark_group("char_poly");
    for d in [dims(2, 2, 2), dims(3, 2, 2), dims(3, 3, 2), dims(3, 3, 3)] {
        let rho = density_matrix(&complete_graph(d)).unwrap();
        let pt = partial_transpose(&rho, Subsystem::A);
        group.bench_with_input(BenchmarkId::from_parameter(d.n()), &pt, |b, m| {
            b.iter(|| char_poly(black_box(m)))
        });
    }
    group.finish();
}

fn bench_classify(c: &mut Criterion) {
    let k12 = complete_graph(dims(3, 2, 2));
    c.bench_function("classify/K_12", |b| {
        b.iter(|| classify(black_box(&k12)).unwrap())
    });
}

fn bench_star(c: &mut Criterion) {
    c.bench_function("star_witness/27", |b| {
        b.iter(|| star_witness(black_box(27), dims(3, 3, 3)).unwrap())
    });
}

fn bench_tensor(c: &mut Criterion) {
    let k3 = complete_graph(TripartiteDims::flat(3).unwrap());
    let path = Graph::new(TripartiteDims::flat(3).unwrap(), [(1, 2), (2, 3)]).unwrap();
    c.bench_function("decompose_tensor_product/K3xP3xK3", |b| {
        b.iter(|| decompose_tensor_product(black_box(&k3), &path, &k3).unwrap())
    });
}

criterion_group!(
    benches,
    bench_char_poly,
    bench_classify,
    bench_star,
    bench_tensor
);
criterion_main!(benches);
