use std::sync::Arc;

use tightcomp::action::{enumerate_actions, find_isomorphism, yoneda_left, Variance};
use tightcomp::cuts::{cut_coalgebra_of, enumerate_cuts, CutCoalgebra};
use tightcomp::poset::FinPoset;
use tightcomp::tight::{
    certify_tight_colimit, certify_tight_limit, check_tight_diagram, enumerate_right_tight_diagrams,
    enumerate_tight_diagrams, representable_generation_check, tight_colimit, tight_colimit_via_split, tight_limit,
    tight_limit_via_split, tight_preservation_check, LeftTightDiagram,
};
use tightcomp::{samples, Error, Limits};

#[test]
fn lattices_are_tight_complete() {
    let l = Limits::default();
    for (name, p) in samples::lattices() {
        let c = Arc::new(p.thin_category());
        for d in enumerate_tight_diagrams(&c, 1, l).unwrap() {
            let t = tight_colimit(&d, l).unwrap().unwrap_or_else(|| panic!("{name}"));
            assert!(certify_tight_colimit(&d, &t, l).unwrap());
            assert_eq!(tight_colimit_via_split(&d, l).unwrap(), t, "{name}");
        }
        for d in enumerate_right_tight_diagrams(&c, 1, l).unwrap() {
            let t = tight_limit(&d, l).unwrap().unwrap_or_else(|| panic!("{name}"));
            assert!(certify_tight_limit(&d, &t, l).unwrap());
            assert_eq!(tight_limit_via_split(&d, l).unwrap(), t, "{name}");
        }
    }
}

#[test]
fn loose_colimits_give_tight_ones() {
    let l = Limits::default();
    for (name, c) in samples::small_categories() {
        for d in enumerate_tight_diagrams(&c, 2, l).unwrap() {
            match tight_colimit_via_split(&d, l) {
                Ok(t) => {
                    let found = tight_colimit(&d, l).unwrap().expect(name);
                    assert_eq!(found.0, t.0, "{name}");
                    assert!(certify_tight_colimit(&d, &t, l).unwrap(), "{name}");
                }
                Err(Error::NoLooseColimit) | Err(Error::NotSplittable) => {}
                Err(e) => panic!("{name}: {e}"),
            }
        }
    }
}

#[test]
fn shrinking_idempotent_is_rejected() {
    let l = Limits::default();
    let m = samples::idempotent_category();
    let d0 = yoneda_left(&m, 0).unwrap();
    let lm = tightcomp::isbell::lan(&d0, l).unwrap();
    let e = tightcomp::action::EquivariantMap { components: vec![(0..2).map(|i| lm.action.act(1, i) as u32).collect()] };
    let d = LeftTightDiagram { diagram: d0, phi: e };
    assert!(matches!(check_tight_diagram(&d, l), Err(Error::SplitMismatch(_))));
}

#[test]
fn point_is_not_a_tight_colimit_over_z4() {
    let l = Limits::default();
    let c = samples::cyclic(4);
    let point = enumerate_actions(&c, Variance::Left, 1, l).unwrap().into_iter().find(|a| a.total() == 1).unwrap();
    for d in enumerate_tight_diagrams(&c, 4, l).unwrap() {
        if let Some((a, _)) = tight_colimit(&d, l).unwrap() {
            assert!(find_isomorphism(&yoneda_left(&c, a).unwrap(), &point, l).unwrap().is_none());
        }
    }
}

#[test]
fn generation_and_preservation_on_lattices() {
    let l = Limits::default();
    for (name, p) in samples::lattices().into_iter().chain([("anti2", FinPoset::antichain(2))]) {
        let c = Arc::new(p.thin_category());
        let cuts = enumerate_cuts(&c, 1, l).unwrap();
        let tests: Vec<CutCoalgebra> = cuts.iter().map(cut_coalgebra_of).collect();
        for cut in &cuts {
            assert!(representable_generation_check(cut, &tests, l).unwrap().pass(), "{name}");
        }
        if p.is_complete_lattice() {
            for d in enumerate_tight_diagrams(&c, 1, l).unwrap() {
                assert!(tight_preservation_check(&c, &d, &tests, l).unwrap().pass(), "{name}");
            }
        }
    }
}
