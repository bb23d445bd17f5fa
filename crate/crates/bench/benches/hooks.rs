use criterion::{black_box, criterion_group, criterion_main, Criterion};

use cylindric_core::hooks::{hk, hook_values, window_closure, ModifiedOrder, OrderKind};
use cylindric_core::CylindricDiagram;

fn fixture() -> CylindricDiagram {
    CylindricDiagram::from_parts(4, 5, &[5, 3, 3, 1]).unwrap()
}

fn hooks(c: &mut Criterion) {
    let d = fixture();
    let x = d.cell(2, -4);
    c.bench_function("hk single cell", |b| b.iter(|| hk(&d, black_box(x)).unwrap()));
    c.bench_function("hook_values depth 3", |b| b.iter(|| hook_values(&d, black_box(3))));
}

fn orders(c: &mut Criterion) {
    let d = fixture();
    let roots: Vec<_> = hook_values(&d, 2).into_iter().map(|h| h.root).collect();
    let order = ModifiedOrder::new(&d);
    c.bench_function("modified order all pairs depth 2", |b| {
        b.iter(|| roots.iter().flat_map(|a| roots.iter().map(move |b| (a, b))).filter(|(a, b)| order.leq(a, b)).count())
    });
    for kind in [OrderKind::Diagram, OrderKind::Heap] {
        c.bench_function(&format!("window closure {kind} depth 2"), |b| b.iter(|| window_closure(&d, 2, kind)));
    }
}

criterion_group!(benches, hooks, orders);
criterion_main!(benches);
