//! Skein evaluation with the sequential and the data-parallel engine, cache off so every
//! iteration does the full recursion.

use std::path::Path;

use annulus::data::load_fixtures;
use annulus::invariants::Engine;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn skein(c: &mut Criterion) {
    let dir = Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures"));
    let fx = load_fixtures(dir).expect("fixtures");
    let mut group = c.benchmark_group("skein");
    group.sample_size(10);
    let subjects: Vec<(&str, &annulus::diagram::Diagram)> = ["7_4", "8_16", "8_18"]
        .iter()
        .map(|n| (*n, fx.knot(n).expect("fixture knot")))
        .chain(fx.beta_links.iter().filter(|b| b.name == "8_9").map(|b| ("8_9+beta", &b.link)))
        .collect();
    for (name, d) in subjects {
        for (mode, parallel) in [("sequential", false), ("parallel", true)] {
            group.bench_with_input(BenchmarkId::new(format!("q/{mode}"), name), d, |b, d| {
                b.iter(|| Engine::new(false, parallel).q_poly(d).unwrap())
            });
            group.bench_with_input(BenchmarkId::new(format!("jones/{mode}"), name), d, |b, d| {
                b.iter(|| Engine::new(false, parallel).jones(d))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, skein);
criterion_main!(benches);
