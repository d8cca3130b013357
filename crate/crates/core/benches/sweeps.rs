use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use t2weights::constructors::{enumerate_legal, EnumerationBounds};
use t2weights::localmodels::{gluing_matrix, space_of_directions};
use t2weights::par;
use t2weights::surgery::{decompose, reassemble};
use t2weights::{canonical_form, EquivalenceMode, Pair, WeightSystem};

fn census(bounds: EnumerationBounds, take: usize) -> Vec<WeightSystem> {
    enumerate_legal(&bounds).unwrap().take(take).collect()
}

fn strict_sweep(items: &[WeightSystem], parallel: bool) -> usize {
    let key = |w: &WeightSystem| canonical_form(w, EquivalenceMode::Strict).map(|f| f.cycles.len()).unwrap_or(0);
    if parallel {
        #[cfg(feature = "parallel")]
        return par::parallel::map(items, key).into_iter().sum();
    }
    par::sequential::map(items, key).into_iter().sum()
}

fn weak_sweep(items: &[WeightSystem], parallel: bool) -> usize {
    let key = |w: &WeightSystem| canonical_form(w, EquivalenceMode::Weak).map(|f| f.circles.len()).unwrap_or(0);
    if parallel {
        #[cfg(feature = "parallel")]
        return par::parallel::map(items, key).into_iter().sum();
    }
    par::sequential::map(items, key).into_iter().sum()
}

fn round_trip_sweep(items: &[WeightSystem], parallel: bool) -> usize {
    let ok = |w: &WeightSystem| decompose(w).and_then(|d| reassemble(&d)).is_ok();
    if parallel {
        #[cfg(feature = "parallel")]
        return par::parallel::failures(items, ok).len();
    }
    par::sequential::failures(items, ok).len()
}

fn local_model_sweep(items: &[(Pair, Pair)], parallel: bool) -> usize {
    let ok = |&(a, b): &(Pair, Pair)| space_of_directions(a, b).is_ok() && gluing_matrix(a, b).is_ok();
    if parallel {
        #[cfg(feature = "parallel")]
        return par::parallel::failures(items, ok).len();
    }
    par::sequential::failures(items, ok).len()
}

fn modes() -> Vec<(&'static str, bool)> {
    let mut modes = vec![("sequential", false)];
    if cfg!(feature = "parallel") {
        modes.push(("parallel", true));
    }
    modes
}

fn bench_sweeps(c: &mut Criterion) {
    let big = EnumerationBounds { max_weight_entry: 3, max_cycle_length: 4, max_cycles: 2, ..Default::default() };
    let small = EnumerationBounds { max_weight_entry: 2, max_cycle_length: 3, max_circles: 1, ..Default::default() };
    let strict_items = census(big, 20_000);
    let weak_items = census(small, 300);
    let pairs: Vec<(Pair, Pair)> = (1..=50)
        .flat_map(|m| (-50..=50).map(move |n| (Pair::new(1, 0), Pair::new(m, n))))
        .filter(|(_, p)| p.is_coprime() && p.n != 0)
        .collect();

    let mut group = c.benchmark_group("sweeps");
    group.sample_size(10);
    for (name, parallel) in modes() {
        group.bench_with_input(BenchmarkId::new("strict_census", name), &strict_items, |b, items| {
            b.iter(|| strict_sweep(black_box(items), parallel))
        });
        group.bench_with_input(BenchmarkId::new("weak_canonical", name), &weak_items, |b, items| {
            b.iter(|| weak_sweep(black_box(items), parallel))
        });
        group.bench_with_input(BenchmarkId::new("decompose_round_trip", name), &strict_items, |b, items| {
            b.iter(|| round_trip_sweep(black_box(items), parallel))
        });
        group.bench_with_input(BenchmarkId::new("local_models", name), &pairs, |b, items| {
            b.iter(|| local_model_sweep(black_box(items), parallel))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_sweeps);
criterion_main!(benches);
