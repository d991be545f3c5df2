//! Sequential against rayon execution for the Brauer checks. Without the
//! `parallel` feature both variants run sequentially.

use std::hint::black_box;
use std::time::Duration;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use scott_brauer::brauer::{is_brauer_indecomposable_definition_with, BrauerOptions};
use scott_brauer::decomp::scott_module;
use scott_brauer::exec::Exec;
use scott_brauer::fflinalg::Field;
use scott_brauer::fixtures::{catalog, dihedral_times_a4};
use scott_brauer::permgroup::Group;
use scott_brauer::repmod::Module;

const STRATEGIES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn options(exec: Exec) -> BrauerOptions {
    BrauerOptions {
        exec,
        ..BrauerOptions::default()
    }
}

fn definition_check(c: &mut Criterion) {
    let fx = dihedral_times_a4().unwrap();
    let x = fx.x();
    let cases: Vec<(&str, Group)> = vec![
        ("D8xA4, P = <y,z,ab>", fx.subgroup(&[&fx.y, &fx.z, &x])),
        ("D8xA4, P = D8x<b>", fx.subgroup(&[&fx.a, &fx.y, &fx.z, &fx.b])),
    ];
    let mut group = c.benchmark_group("definition");
    group.sample_size(10).measurement_time(Duration::from_secs(5));
    for (name, p) in &cases {
        let m = scott_module(&fx.g, p, &Field::new(2, 1).unwrap()).unwrap();
        for (label, exec) in STRATEGIES {
            group.bench_with_input(BenchmarkId::new(label, name), &(&m, p), |b, (m, p)| {
                b.iter(|| is_brauer_indecomposable_definition_with(black_box(m), p, &options(exec)).unwrap())
            });
        }
    }
    group.finish();
}

fn catalog_sweep(c: &mut Criterion) {
    // the larger entries dominate; keep the sweep to modules of dimension <= 24
    let modules: Vec<(Module, Group)> = catalog()
        .into_iter()
        .filter(|e| e.g.order() / e.p.order() <= 24)
        .map(|e| (scott_module(&e.g, &e.p, &e.field).unwrap(), e.p))
        .collect();
    let mut group = c.benchmark_group("catalog_sweep");
    group.sample_size(10).measurement_time(Duration::from_secs(5));
    for (label, exec) in STRATEGIES {
        group.bench_function(label, |b| {
            b.iter(|| {
                exec.map(&modules, |(m, p)| {
                    is_brauer_indecomposable_definition_with(m, p, &options(Exec::Sequential))
                        .unwrap()
                        .overall
                })
            })
        });
    }
    group.finish();
}

criterion_group!(benches, definition_check, catalog_sweep);
criterion_main!(benches);
