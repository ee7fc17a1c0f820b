mod common;

use common::{brute_dm, brute_order_iso, inclusion_matrix, leq_matrix};
use proptest::prelude::*;
use tightcomp::poset::{enumerate_posets, order_isomorphism, FinPoset};

fn random_poset() -> impl Strategy<Value = FinPoset> {
    (1usize..=7)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)))
        .prop_map(|(n, bits)| {
            // Edges only go up in index order, so the closure is antisymmetric.
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
            let rel: Vec<(usize, usize)> = pairs.into_iter().zip(bits).filter(|(_, b)| *b).map(|(p, _)| p).collect();
            FinPoset::new((0..n).map(|i| format!("p{i}")).collect(), &rel).unwrap()
        })
}

fn lowers(p: &FinPoset) -> Vec<Vec<bool>> {
    p.dm_completion().cuts.iter().map(|c| (0..p.len()).map(|i| c.lower.0.contains(i)).collect()).collect()
}

#[test]
fn exhaustive_small_posets_match_brute_force() {
    for n in 0..=4 {
        for p in enumerate_posets(n) {
            let mut ours = lowers(&p);
            let mut brute = brute_dm(&p);
            ours.sort();
            brute.sort();
            assert_eq!(ours, brute);
        }
    }
}

#[test]
fn poset_counts() {
    let counts: Vec<usize> = (0..=4).map(|n| enumerate_posets(n).len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 5, 16]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn completion_matches_brute_force(p in random_poset()) {
        let ours = lowers(&p);
        let brute = brute_dm(&p);
        prop_assert!(brute_order_iso(&inclusion_matrix(&ours), &inclusion_matrix(&brute)));
        prop_assert_eq!(ours.len(), brute.len());
    }

    #[test]
    fn completion_is_idempotent(p in random_poset()) {
        let d = p.dm_completion().as_poset();
        let dd = d.dm_completion().as_poset();
        prop_assert!(order_isomorphism(&d, &dd).is_some());
        prop_assert!(brute_order_iso(&leq_matrix(&d), &leq_matrix(&dd)));
        prop_assert!(d.is_complete_lattice());
    }

    #[test]
    fn embedding_preserves_existing_joins_and_meets(p in random_poset()) {
        let dm = p.dm_completion();
        let q = dm.as_poset();
        for x in 0..p.len() {
            for y in 0..p.len() {
                prop_assert_eq!(p.leq(x, y), q.leq(dm.embedding[x], dm.embedding[y]));
                if let Some(j) = p.join(x, y) {
                    prop_assert_eq!(q.join(dm.embedding[x], dm.embedding[y]), Some(dm.embedding[j]));
                }
                if let Some(m) = p.meet(x, y) {
                    prop_assert_eq!(q.meet(dm.embedding[x], dm.embedding[y]), Some(dm.embedding[m]));
                }
            }
        }
    }

    #[test]
    fn closure_is_a_closure(p in random_poset(), bits in proptest::collection::vec(any::<bool>(), 7)) {
        let mut s = p.empty_set();
        for (i, b) in bits.iter().take(p.len()).enumerate() {
            s.set(i, *b);
        }
        let once = p.lower_bounds(&p.upper_bounds(&s).0).0;
        let twice = p.lower_bounds(&p.upper_bounds(&once).0).0;
        prop_assert!(s.is_subset(&once));
        prop_assert_eq!(once, twice);
    }
}
