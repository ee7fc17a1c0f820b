mod common;

use common::{brute_gap_count, brute_kan, brute_kan_sizes, brute_maps_into_kan};
use tightcomp::action::{enumerate_actions, equivariant_maps, find_isomorphism, yoneda_left, yoneda_right, Variance};
use tightcomp::isbell::{
    check_algebra, check_coalgebra, check_triangle, counit, free_algebra, gap_from_lower, gap_transpose, gaps_enumerate, lan, lan_map,
    nucleus_to_coalgebra, ran, ran_map, unit,
};
use tightcomp::{samples, Limits};

#[test]
fn kan_sizes_match_brute_force() {
    let l = Limits::default();
    for (name, c) in samples::small_categories() {
        for a in enumerate_actions(&c, Variance::Left, 2, l).unwrap() {
            let la = lan(&a, l).unwrap();
            assert_eq!(Some(la.action.sizes().to_vec()), brute_kan_sizes(&a), "{name}");
        }
        for b in enumerate_actions(&c, Variance::Right, 2, l).unwrap() {
            let rb = ran(&b, l).unwrap();
            assert_eq!(Some(rb.action.sizes().to_vec()), brute_kan_sizes(&b), "{name}");
        }
    }
}

#[test]
fn three_counts_agree() {
    let l = Limits::default();
    for (name, c) in samples::small_categories() {
        let lefts = enumerate_actions(&c, Variance::Left, 2, l).unwrap();
        let rights = enumerate_actions(&c, Variance::Right, 2, l).unwrap();
        for a in lefts.iter() {
            let la = lan(a, l).unwrap();
            let bla = brute_kan(a).unwrap();
            for b in rights.iter() {
                let rb = ran(b, l).unwrap();
                let gaps = gaps_enumerate(a, b, l).unwrap().len();
                let lower = equivariant_maps(a, &rb.action, l).unwrap().len();
                let upper = equivariant_maps(b, &la.action, l).unwrap().len();
                assert_eq!(gaps, lower, "{name}");
                assert_eq!(gaps, upper, "{name}");
                assert_eq!(Some(gaps), brute_gap_count(a, b), "{name}");
                assert_eq!(Some(gaps), brute_maps_into_kan(b, &bla, a), "{name}");
            }
        }
    }
}

#[test]
fn transposition_round_trips() {
    let l = Limits::default();
    let c = samples::split_idempotent();
    let lefts = enumerate_actions(&c, Variance::Left, 2, l).unwrap();
    let rights = enumerate_actions(&c, Variance::Right, 2, l).unwrap();
    for a in &lefts {
        let la = lan(a, l).unwrap();
        for b in &rights {
            let rb = ran(b, l).unwrap();
            for g in gaps_enumerate(a, b, l).unwrap() {
                let (lower, _) = gap_transpose(&g, &rb, &la);
                assert_eq!(gap_from_lower(a, &rb, &lower).phi, g.phi);
            }
        }
    }
}

#[test]
fn triangle_identities() {
    let l = Limits::default();
    for (name, c) in samples::small_categories() {
        for a in enumerate_actions(&c, Variance::Left, 2, l).unwrap() {
            // Λη_A ∘ ε_{ΛA} = id on ΛA.
            let u = unit(&a, l).unwrap();
            let co = counit(&u.lan.action, l).unwrap();
            let lrla = lan(&u.ran_lan.action, l).unwrap();
            let l_eta = lan_map(&u.map, &u.lan, &lrla);
            assert_eq!(co.map.then(&l_eta), tightcomp::action::EquivariantMap::identity(&u.lan.action), "{name}");
        }
        for b in enumerate_actions(&c, Variance::Right, 2, l).unwrap() {
            // Ρε_B ∘ η_{ΡB} = id on ΡB.
            let co = counit(&b, l).unwrap();
            let u = unit(&co.ran.action, l).unwrap();
            let rlrb = ran(&co.lan_ran.action, l).unwrap();
            let r_eps = ran_map(&co.map, &co.ran, &rlrb);
            assert_eq!(u.map.then(&r_eps), tightcomp::action::EquivariantMap::identity(&co.ran.action), "{name}");
        }
    }
}

#[test]
fn componentwise_triangles() {
    let l = Limits::default();
    for (name, c) in samples::small_categories() {
        for v in [Variance::Left, Variance::Right] {
            for a in enumerate_actions(&c, v, 3, l).unwrap() {
                assert!(check_triangle(&a, l).unwrap().pass(), "{name}");
            }
        }
    }
}

#[test]
fn yoneda_and_kan() {
    let l = Limits::default();
    for (name, c) in samples::small_categories() {
        for x in 0..c.num_objects() {
            let nabla = yoneda_left(&c, x).unwrap();
            let delta = yoneda_right(&c, x).unwrap();
            assert!(find_isomorphism(&lan(&nabla, l).unwrap().action, &delta, l).unwrap().is_some(), "{name}");
            assert!(find_isomorphism(&ran(&delta, l).unwrap().action, &nabla, l).unwrap().is_some(), "{name}");
        }
    }
}

#[test]
fn nucleus_structures_are_lawful() {
    let l = Limits::default();
    for (name, c) in samples::small_categories() {
        for a in enumerate_actions(&c, Variance::Left, 1, l).unwrap() {
            let alg = free_algebra(&a, l).unwrap();
            assert!(check_algebra(&alg, l).unwrap().pass(), "{name}");
            let co = nucleus_to_coalgebra(&alg, l).unwrap();
            assert!(check_coalgebra(&co, l).unwrap().pass(), "{name}");
        }
    }
}
