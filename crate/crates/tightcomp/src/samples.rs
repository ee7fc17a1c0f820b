//! Small named categories and posets used by tests, benches and the CLI corpus.

use std::sync::Arc;

use crate::fincat::{validate_category, Cat, FinCategory, RawCategory};
use crate::groups::FinMonoid;
use crate::poset::FinPoset;

fn raw(objects: &[&str], morphisms: &[(&str, &str, &str)], compose: &[(&str, &str, &str)]) -> Cat {
    let s = |v: &str| v.to_string();
    let r = RawCategory {
        objects: objects.iter().map(|o| s(o)).collect(),
        morphisms: morphisms.iter().map(|&(f, d, c)| (s(f), s(d), s(c))).collect(),
        compose: compose.iter().map(|&(f, g, h)| (s(f), s(g), s(h))).collect(),
        explicit_identities: false,
    };
    Arc::new(validate_category(&r).expect("sample category"))
}

pub fn terminal() -> Cat {
    Arc::new(FinCategory::terminal())
}

pub fn discrete2() -> Cat {
    Arc::new(FinCategory::discrete(&["a", "b"]))
}

pub fn chain(n: usize) -> Cat {
    Arc::new(FinPoset::chain(n).thin_category())
}

/// `a → b`, `a → c`.
pub fn span() -> Cat {
    raw(&["a", "b", "c"], &[("f", "a", "b"), ("g", "a", "c")], &[])
}

/// `b → a`, `c → a`.
pub fn cospan() -> Cat {
    raw(&["a", "b", "c"], &[("f", "b", "a"), ("g", "c", "a")], &[])
}

/// Two parallel arrows `f, g: a → b`.
pub fn parallel_pair() -> Cat {
    raw(&["a", "b"], &[("f", "a", "b"), ("g", "a", "b")], &[])
}

/// An idempotent `e = q then i` on `a` split through `r`.
pub fn split_idempotent() -> Cat {
    raw(
        &["a", "r"],
        &[("e", "a", "a"), ("q", "a", "r"), ("i", "r", "a")],
        &[("e", "e", "e"), ("e", "q", "q"), ("q", "i", "e"), ("i", "q", "id_r"), ("i", "e", "i")],
    )
}

pub fn cyclic(n: usize) -> Cat {
    FinMonoid::cyclic(n).category("o").expect("cyclic group")
}

/// `{ι, e}` with `e ⊙ e = e`.
pub fn idempotent_monoid() -> FinMonoid {
    FinMonoid::new(vec!["i".into(), "e".into()], 0, vec![vec![0, 1], vec![1, 1]]).expect("monoid")
}

/// The one-object category of [`idempotent_monoid`]: `e` does not split.
pub fn idempotent_category() -> Cat {
    idempotent_monoid().category("o").expect("monoid")
}

/// Categories with at most three objects and eight morphisms.
pub fn small_categories() -> Vec<(&'static str, Cat)> {
    vec![
        ("terminal", terminal()),
        ("discrete2", discrete2()),
        ("chain2", chain(2)),
        ("chain3", chain(3)),
        ("span", span()),
        ("cospan", cospan()),
        ("parallel", parallel_pair()),
        ("split", split_idempotent()),
        ("z2", cyclic(2)),
        ("z3", cyclic(3)),
        ("idem", idempotent_category()),
    ]
}

/// `b < l, r < t`.
pub fn diamond() -> FinPoset {
    FinPoset::new(["b", "l", "r", "t"].iter().map(|s| s.to_string()).collect(), &[(0, 1), (0, 2), (1, 3), (2, 3)])
        .expect("diamond")
}

/// `a, b < c, d`.
pub fn crown() -> FinPoset {
    FinPoset::new(["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect(), &[(0, 2), (0, 3), (1, 2), (1, 3)])
        .expect("crown")
}

/// `0 < a, b, c < 1`.
pub fn m3() -> FinPoset {
    let names = ["0", "a", "b", "c", "1"].iter().map(|s| s.to_string()).collect();
    FinPoset::new(names, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).expect("m3")
}

/// `0 < a < b < 1`, `0 < c < 1`.
pub fn n5() -> FinPoset {
    let names = ["0", "a", "b", "c", "1"].iter().map(|s| s.to_string()).collect();
    FinPoset::new(names, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).expect("n5")
}

/// Complete finite lattices.
pub fn lattices() -> Vec<(&'static str, FinPoset)> {
    vec![
        ("chain1", FinPoset::chain(1)),
        ("chain2", FinPoset::chain(2)),
        ("chain3", FinPoset::chain(3)),
        ("diamond", diamond()),
        ("m3", m3()),
        ("n5", n5()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        for (name, c) in small_categories() {
            assert!(c.num_objects() <= 3 && c.num_morphisms() <= 8, "{name}");
        }
        assert_eq!(split_idempotent().num_morphisms(), 5);
        for (name, p) in lattices() {
            assert!(p.is_complete_lattice(), "{name}");
        }
    }
}
