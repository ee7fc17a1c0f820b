use proptest::prelude::*;
use tightcomp::action::{enumerate_actions, find_isomorphism, Variance};
use tightcomp::groups::{
    group_lan, group_ran, is_free, kleisli_compose, kleisli_compose_right, kleisli_lan, kleisli_monad, monoid_lan,
    normalize_ray, orbits, FinMonoid, GAction, KleisliMorphism,
};
use tightcomp::isbell::{lan, monad_square};
use tightcomp::Limits;

/// Kleisli composite through the monad `G × -`: `μ ∘ T(m2) ∘ m1` on explicit pairs.
fn compose_via_monad(g: &FinMonoid, m1: &KleisliMorphism, m2: &KleisliMorphism) -> KleisliMorphism {
    let t_m2 = |(a, b): (usize, usize)| (a, (m2.alpha[b], m2.f[b]));
    let mu = |(a, (b, c)): (usize, (usize, usize))| (g.op(a, b), c);
    let pairs: Vec<(usize, usize)> = (0..m1.source).map(|x| mu(t_m2((m1.alpha[x], m1.f[x])))).collect();
    KleisliMorphism {
        source: m1.source,
        target: m2.target,
        f: pairs.iter().map(|p| p.1).collect(),
        alpha: pairs.iter().map(|p| p.0).collect(),
    }
}

fn groups() -> Vec<FinMonoid> {
    vec![
        FinMonoid::cyclic(1),
        FinMonoid::cyclic(2),
        FinMonoid::cyclic(3),
        FinMonoid::cyclic(4),
        FinMonoid::cyclic(5),
        FinMonoid::cyclic(6),
        FinMonoid::symmetric3(),
    ]
}

fn morphism(g: usize, n: usize, m: usize) -> impl Strategy<Value = KleisliMorphism> {
    (proptest::collection::vec(0..m, n), proptest::collection::vec(0..g, n))
        .prop_map(move |(f, alpha)| KleisliMorphism { source: n, target: m, f, alpha })
}

/// Every left action of a cyclic group with at most `max` points, as disjoint unions of coset actions.
fn cyclic_actions(g: &FinMonoid, max: usize) -> Vec<GAction> {
    let n = g.len();
    let divisors: Vec<usize> = (1..=n).filter(|d| n % d == 0).collect();
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = vec![vec![]];
    while let Some(orbs) = stack.pop() {
        let size: usize = orbs.iter().sum();
        if size > 0 {
            let mut act = vec![vec![0; size]; n];
            let mut base = 0;
            for &d in &orbs {
                for (a, row) in act.iter_mut().enumerate() {
                    for x in 0..d {
                        row[base + x] = base + (x + a) % d;
                    }
                }
                base += d;
            }
            out.push(GAction::new(g.clone(), Variance::Left, size, act).unwrap());
        }
        for &d in &divisors {
            if size + d <= max && orbs.last().is_none_or(|&l| d >= l) {
                let mut next = orbs.clone();
                next.push(d);
                stack.push(next);
            }
        }
    }
    out
}

#[test]
fn group_lan_agrees_with_generic_lan() {
    let l = Limits::default();
    for n in 2..=4 {
        let g = FinMonoid::cyclic(n);
        let cat = g.category("o").unwrap();
        for x in cyclic_actions(&g, 8) {
            let a = x.to_action(&cat).unwrap();
            let ours = group_lan(&x).unwrap().to_action(&cat).unwrap();
            assert!(find_isomorphism(&ours, &lan(&a, l).unwrap().action, l).unwrap().is_some());
            let (_, ml) = monoid_lan(&x, l).unwrap();
            assert!(find_isomorphism(&ml.to_action(&cat).unwrap(), &ours, l).unwrap().is_some());
        }
        for b in enumerate_actions(&cat, Variance::Right, 4, l).unwrap() {
            let y = GAction::from_action(&g, &b).unwrap();
            let ours = group_ran(&y).unwrap().to_action(&cat).unwrap();
            assert!(find_isomorphism(&ours, &tightcomp::isbell::ran(&b, l).unwrap().action, l).unwrap().is_some());
        }
    }
}

#[test]
fn free_actions_decompose() {
    let g = FinMonoid::cyclic(4);
    for n in 1..=3 {
        let x = GAction::free(&g, Variance::Left, n);
        let d = tightcomp::groups::decompose_free(&x).unwrap();
        let mut all: Vec<usize> = d.concat();
        all.sort_unstable();
        assert_eq!(all, (0..4 * n).collect::<Vec<_>>());
        assert_eq!(orbits(&x).len(), n);
        assert!(is_free(&x).free);
    }
}

#[test]
fn double_dual_matches_monad_square() {
    let l = Limits::default();
    let g = FinMonoid::cyclic(4);
    let cat = g.category("o").unwrap();
    for n in 1..=2 {
        let x = GAction::free(&g, Variance::Left, n).to_action(&cat).unwrap();
        let sq = GAction::from_action(&g, &monad_square(&x, l).unwrap()).unwrap();
        let id = KleisliMorphism::identity(&g, n);
        assert_eq!(kleisli_monad(&g, &id, l).unwrap().source, orbits(&sq).len());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn kleisli_laws((gi, m1, m2, m3) in (0usize..7, 1usize..4, 1usize..4, 1usize..4, 1usize..4).prop_flat_map(|(gi, a, b, c, d)| {
        let k = groups()[gi].len();
        (Just(gi), morphism(k, a, b), morphism(k, b, c), morphism(k, c, d))
    })) {
        let g = &groups()[gi];
        let (a, b) = (m1.source, m1.target);
        let left = kleisli_compose(g, &kleisli_compose(g, &m1, &m2).unwrap(), &m3).unwrap();
        let right = kleisli_compose(g, &m1, &kleisli_compose(g, &m2, &m3).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(kleisli_compose(g, &m1, &m2).unwrap(), compose_via_monad(g, &m1, &m2));
        prop_assert_eq!(kleisli_compose(g, &KleisliMorphism::identity(g, a), &m1).unwrap(), m1.clone());
        prop_assert_eq!(kleisli_compose(g, &m1, &KleisliMorphism::identity(g, b)).unwrap(), m1.clone());
        let l2 = kleisli_compose_right(g, &kleisli_compose_right(g, &m1, &m2).unwrap(), &m3).unwrap();
        let r2 = kleisli_compose_right(g, &m1, &kleisli_compose_right(g, &m2, &m3).unwrap()).unwrap();
        prop_assert_eq!(l2, r2);
    }

    #[test]
    fn star_is_contravariant(gi in 0usize..4, m1 in morphism(4, 2, 3), m2 in morphism(4, 3, 2)) {
        let g = &groups()[gi + 1];
        let k = g.len();
        let fix = |m: &KleisliMorphism| KleisliMorphism { alpha: m.alpha.iter().map(|&a| a % k).collect(), ..m.clone() };
        let (m1, m2) = (fix(&m1), fix(&m2));
        let l = Limits::default();
        let lhs = kleisli_lan(g, &kleisli_compose(g, &m1, &m2).unwrap(), l).unwrap();
        let rhs = kleisli_compose(g, &kleisli_lan(g, &m2, l).unwrap(), &kleisli_lan(g, &m1, l).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        let id = KleisliMorphism::identity(g, 3);
        prop_assert_eq!(kleisli_lan(g, &id, l).unwrap(), KleisliMorphism::identity(g, kleisli_lan(g, &id, l).unwrap().source));
    }

    #[test]
    fn ray_normalization_is_a_section(v in proptest::collection::vec(0usize..6, 1..5), a in 0usize..6) {
        let g = FinMonoid::symmetric3();
        let r = normalize_ray(&g, &v);
        prop_assert_eq!(normalize_ray(&g, &r.0), r.clone());
        let w: Vec<usize> = v.iter().map(|&c| g.op(c, a)).collect();
        prop_assert_eq!(normalize_ray(&g, &w), r);
    }

    #[test]
    fn monoid_lan_is_equivariant(n in 1usize..4, seed in 0usize..64) {
        let m = FinMonoid::new(vec!["i".into(), "e".into()], 0, vec![vec![0, 1], vec![1, 1]]).unwrap();
        // e acts as an idempotent self-map of n points.
        let target: Vec<usize> = (0..n).map(|x| (seed >> x) % (x + 1)).collect();
        let mut e_row: Vec<usize> = target.clone();
        for x in 0..n {
            e_row[x] = target[target[x]];
        }
        let e_row: Vec<usize> = (0..n).map(|x| e_row[x]).collect();
        let idem: Vec<usize> = (0..n).map(|x| e_row[e_row[x]]).collect();
        prop_assume!(idem == e_row);
        let x = GAction::new(m.clone(), Variance::Left, n, vec![(0..n).collect(), e_row]).unwrap();
        let (carrier, _) = monoid_lan(&x, Limits::default()).unwrap();
        for h in carrier {
            for a in 0..2 {
                for p in 0..n {
                    prop_assert_eq!(h[x.apply(a, p)], m.op(a, h[p]));
                }
            }
        }
    }
}
