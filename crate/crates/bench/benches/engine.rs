use criterion::{criterion_group, criterion_main, Criterion};

use mtmorph::corpus::bundled_grammar;
use mtmorph::engine::{generate, recognize};
use mtmorph::features::FeatureStructure;
use mtmorph::select::select_entries;
use mtmorph::tapes::parse_surface;

fn bench_generate(c: &mut Criterion) {
    let g = bundled_grammar();
    let goal = FeatureStructure::build(&g.schema, &[("measure", &["10"])]).unwrap();
    let selections = select_entries(
        &g,
        &[Some("smsmsx"), Some("ktb"), Some("ui"), Some("stV")],
        &goal,
    )
    .unwrap();
    c.bench_function("generate measure 10", |b| {
        b.iter(|| {
            for sel in &selections {
                std::hint::black_box(generate(&g, sel, &goal));
            }
        })
    });
}

fn bench_recognize(c: &mut Criterion) {
    let g = bundled_grammar();
    let surface = parse_surface(&g, "tukuttib").unwrap();
    c.bench_function("recognize tukuttib", |b| {
        b.iter(|| std::hint::black_box(recognize(&g, &surface)))
    });
}

criterion_group!(benches, bench_generate, bench_recognize);
criterion_main!(benches);
