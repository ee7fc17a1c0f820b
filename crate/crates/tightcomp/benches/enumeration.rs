use std::sync::Arc;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use tightcomp::action::{enumerate_actions, equivariant_maps, Variance};
use tightcomp::cuts::enumerate_cuts;
use tightcomp::fincat::FinCategory;
use tightcomp::groups::{FinMonoid, GAction};
use tightcomp::isbell::lan;
use tightcomp::poset::FinPoset;
use tightcomp::{Execution, Limits};

fn modes() -> [(&'static str, Limits); 2] {
    let base = Limits::default();
    [
        ("sequential", Limits { exec: Execution::Sequential, ..base }),
        ("parallel", Limits { exec: Execution::Parallel, ..base }),
    ]
}

fn bench(c: &mut Criterion) {
    let z4 = FinMonoid::cyclic(4);
    let cat = z4.category("o").unwrap();
    let two = GAction::free(&z4, Variance::Left, 2).to_action(&cat).unwrap();
    let l2 = lan(&two, Limits::default()).unwrap().action;
    let diamond = Arc::new(
        FinPoset::new(
            ["b", "l", "r", "t"].iter().map(|s| s.to_string()).collect(),
            &[(0, 1), (0, 2), (1, 3), (2, 3)],
        )
        .unwrap()
        .thin_category(),
    );
    let chain: Arc<FinCategory> = Arc::new(FinPoset::chain(4).thin_category());

    let mut g = c.benchmark_group("enumeration");
    g.sample_size(10);
    for (name, limits) in modes() {
        g.bench_with_input(BenchmarkId::new("endomaps_lan_z4_two_orbits", name), &limits, |b, &l| {
            b.iter(|| equivariant_maps(&l2, &l2, l).unwrap().len())
        });
        g.bench_with_input(BenchmarkId::new("cuts_z4_cap4", name), &limits, |b, &l| {
            b.iter(|| enumerate_cuts(&cat, 4, l).unwrap().len())
        });
        g.bench_with_input(BenchmarkId::new("actions_chain4_cap2", name), &limits, |b, &l| {
            b.iter(|| enumerate_actions(&chain, Variance::Left, 2, l).unwrap().len())
        });
        g.bench_with_input(BenchmarkId::new("cuts_diamond_cap1", name), &limits, |b, &l| {
            b.iter(|| enumerate_cuts(&diamond, 1, l).unwrap().len())
        });
    }
    g.finish();
}

criterion_group!(benches, bench);
criterion_main!(benches);
