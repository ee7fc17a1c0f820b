mod common;

use common::brute_dm;
use std::sync::Arc;
use tightcomp::cuts::{
    absolute_to_simple, check_absolute_cut, check_full_cut, check_interval, check_simple_cut, cut_homs, enumerate_cuts,
    full_to_simple, interval_of, jay_scan, simple_to_absolute, simple_to_full,
};
use tightcomp::poset::FinPoset;
use tightcomp::{samples, Limits};

#[test]
fn lattice_cut_counts_match_brute_force_completion() {
    let l = Limits::default();
    for (name, p) in samples::lattices().into_iter().chain([("crown", samples::crown()), ("anti3", FinPoset::antichain(3))]) {
        let c = Arc::new(p.thin_category());
        let cuts = enumerate_cuts(&c, 1, l).unwrap();
        assert_eq!(cuts.len(), brute_dm(&p).len(), "{name}");
    }
}

#[test]
fn round_trips_on_lattices_and_z4() {
    let l = Limits::default();
    let mut cats: Vec<(String, tightcomp::fincat::Cat, usize)> =
        samples::lattices().into_iter().map(|(n, p)| (n.to_string(), Arc::new(p.thin_category()), 1)).collect();
    cats.push(("z4".into(), samples::cyclic(4), 4));
    for (name, c, cap) in cats {
        for abs in enumerate_cuts(&c, cap, l).unwrap() {
            let s = absolute_to_simple(&abs, l).unwrap();
            assert!(check_simple_cut(&s, l).unwrap().pass(), "{name}");
            assert_eq!(simple_to_absolute(&s, l).unwrap(), abs, "{name}");
            let f = simple_to_full(&s, l).unwrap();
            assert_eq!(full_to_simple(&f), s, "{name}");
            let fc = check_full_cut(&f, l).unwrap();
            assert_eq!(fc.eq71, fc.eq72, "{name}");
            assert!(fc.report.pass(), "{name}");
            assert!(check_interval(&interval_of(&f), l).unwrap().pass(), "{name}");
            assert!(check_absolute_cut(&abs, l).unwrap().pass(), "{name}");
            assert!(jay_scan(&s, l).unwrap().implication_holds(), "{name}");
        }
    }
}

#[test]
fn posetal_cut_order_is_the_completion() {
    let l = Limits::default();
    for (name, p) in [("crown", samples::crown()), ("anti2", FinPoset::antichain(2)), ("n5", samples::n5())] {
        let c = Arc::new(p.thin_category());
        let cuts = enumerate_cuts(&c, 1, l).unwrap();
        let n = cuts.len();
        let rel: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !cut_homs(&cuts[i], &cuts[j], l).unwrap().is_empty())
            .collect();
        let q = FinPoset::new((0..n).map(|i| format!("k{i}")).collect(), &rel).unwrap();
        let dm = p.dm_completion().as_poset();
        assert!(tightcomp::poset::order_isomorphism(&q, &dm).is_some(), "{name}");
    }
}

#[test]
fn z4_cuts() {
    let cuts = enumerate_cuts(&samples::cyclic(4), 4, Limits::default()).unwrap();
    let shapes: Vec<(usize, usize)> = cuts.iter().map(|c| (c.left.total(), c.right.total())).collect();
    assert_eq!(shapes, vec![(0, 1), (1, 0), (4, 4)]);
}
