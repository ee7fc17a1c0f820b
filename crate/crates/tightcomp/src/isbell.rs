//! The adjunction `Λ ⊣ Ρ` between left and right actions.
//!
//! `ΛA` is the right action of cocones over `A`; `ΡB` the left action of
//! cones under `B`. Right-action maps are kept covariant, so the counit and
//! coalgebra structures appear as maps `B → ΛΡB` and `ΛΡB → B`.

use std::collections::HashMap;

use crate::action::{check_equivariant, equivariant_maps, hom_families, Action, EquivariantMap, Variance};
use crate::error::{Error, Result};
use crate::fincat::{Mor, Obj};
use crate::report::{Checker, Report};
use crate::search::{Limits, Problem, NONE};

/// `ΛA` or `ΡB` together with the family behind each element.
#[derive(Clone, Debug)]
pub struct Kan {
    pub action: Action,
    pub source: Action,
    /// `data[c][i]` lists one morphism per flat element of `source`.
    pub data: Vec<Vec<Vec<Mor>>>,
    lookup: Vec<HashMap<Vec<Mor>, u32>>,
}

impl Kan {
    pub fn family(&self, c: Obj, i: usize) -> &[Mor] {
        &self.data[c][i]
    }

    pub fn index(&self, c: Obj, family: &[Mor]) -> Option<usize> {
        self.lookup[c].get(family).map(|&i| i as usize)
    }
}

fn kan(source: &Action, limits: Limits) -> Result<Kan> {
    let cat = source.category().clone();
    let n = cat.num_objects();
    let data: Vec<Vec<Vec<Mor>>> = (0..n).map(|c| hom_families(source, c, limits)).collect::<Result<_>>()?;
    let lookup: Vec<HashMap<Vec<Mor>, u32>> =
        data.iter().map(|v| v.iter().enumerate().map(|(i, f)| (f.clone(), i as u32)).collect()).collect();
    let variance = source.variance().flip();
    let mut trans = Vec::with_capacity(cat.num_morphisms());
    for f in 0..cat.num_morphisms() {
        // Right result: src = dom f; left result: src = cod f.
        let (src, tgt) = match variance {
            Variance::Right => (cat.dom(f), cat.cod(f)),
            Variance::Left => (cat.cod(f), cat.dom(f)),
        };
        let table = data[src]
            .iter()
            .map(|fam| {
                let img: Vec<Mor> = fam
                    .iter()
                    .map(|&m| match variance {
                        Variance::Right => cat.comp(m, f),
                        Variance::Left => cat.comp(f, m),
                    })
                    .collect();
                lookup[tgt][&img]
            })
            .collect();
        trans.push(table);
    }
    let names = |fam: &Vec<Mor>| {
        let parts: Vec<&str> = fam.iter().map(|&m| cat.morphism_name(m)).collect();
        format!("[{}]", parts.join(","))
    };
    let labels = data.iter().map(|v| v.iter().map(names).collect()).collect();
    let action = Action::from_tables(cat.clone(), variance, data.iter().map(|v| v.len()).collect(), trans)?
        .with_labels(labels);
    Ok(Kan { action, source: source.clone(), data, lookup })
}

/// `ΛA`: cocones over `A`, acted on by postcomposition.
pub fn lan(a: &Action, limits: Limits) -> Result<Kan> {
    if a.variance() != Variance::Left {
        return Err(Error::VarianceMismatch("lan takes a left action".into()));
    }
    kan(a, limits)
}

/// `ΡB`: cones under `B`, acted on by precomposition.
pub fn ran(b: &Action, limits: Limits) -> Result<Kan> {
    if b.variance() != Variance::Right {
        return Err(Error::VarianceMismatch("ran takes a right action".into()));
    }
    kan(b, limits)
}

/// Contravariant action on maps: `h: X → X'` gives `K X' → K X`, `δ ↦ δ∘h`.
pub fn kan_map(h: &EquivariantMap, from: &Kan, to: &Kan) -> EquivariantMap {
    let src = &from.source;
    let components = (0..to.data.len())
        .map(|c| {
            to.data[c]
                .iter()
                .map(|fam| {
                    let pulled: Vec<Mor> = (0..src.total())
                        .map(|e| {
                            let (x, i) = src.unflat(e);
                            fam[to.source.flat(x, h.apply(x, i))]
                        })
                        .collect();
                    from.lookup[c][&pulled]
                })
                .collect()
        })
        .collect();
    EquivariantMap { components }
}

/// `Λh: ΛA' → ΛA` for `h: A → A'`, with `la = ΛA` and `la2 = ΛA'`.
pub fn lan_map(h: &EquivariantMap, la: &Kan, la2: &Kan) -> EquivariantMap {
    kan_map(h, la, la2)
}

/// `Ρk: ΡB' → ΡB` for `k: B → B'`.
pub fn ran_map(k: &EquivariantMap, rb: &Kan, rb2: &Kan) -> EquivariantMap {
    kan_map(k, rb, rb2)
}

/// Evaluation `X → K'(K X)`, `x ↦ (δ ↦ δ_x)`: the unit when `K = Λ`, the
/// counit when `K = Ρ`.
pub fn evaluation(inner: &Kan, outer: &Kan) -> EquivariantMap {
    let x = &inner.source;
    let components = (0..x.sizes().len())
        .map(|a| (0..x.size(a)).map(|i| outer.lookup[a][&evaluation_family(inner, x.flat(a, i))]).collect())
        .collect();
    EquivariantMap { components }
}

/// The family `δ ↦ δ_e` over all flat elements of `K X`, for a flat element `e` of `X`.
pub fn evaluation_family(inner: &Kan, e: usize) -> Vec<Mor> {
    let kx = &inner.action;
    (0..kx.total())
        .map(|d| {
            let (c, j) = kx.unflat(d);
            inner.data[c][j][e]
        })
        .collect()
}

/// Both triangle identities at once, element by element, without building
/// the third iterate: for `x ∈ K X`, the family `ev(x)` restricted along the
/// evaluation `X → K'K X` must be `x` itself. With `K = Λ` this is
/// `Λη ∘ ε_{ΛA} = id`; with `K = Ρ` it is `Ρε ∘ η_{ΡB} = id`.
pub fn check_triangle(x: &Action, limits: Limits) -> Result<Report> {
    let inner = match x.variance() {
        Variance::Left => lan(x, limits)?,
        Variance::Right => ran(x, limits)?,
    };
    let outer = match x.variance() {
        Variance::Left => ran(&inner.action, limits)?,
        Variance::Right => lan(&inner.action, limits)?,
    };
    let ev = evaluation(&inner, &outer);
    let mut ck = Checker::new();
    for c in 0..inner.data.len() {
        for (j, fam) in inner.data[c].iter().enumerate() {
            let top = evaluation_family(&outer, inner.action.flat(c, j));
            let ok = (0..x.total()).all(|e| {
                let (a, i) = x.unflat(e);
                top[outer.action.flat(a, ev.apply(a, i))] == fam[e]
            });
            if !ck.require(ok, "triangle", || format!("element {j} over {}", x.category().object_name(c))) {
                return Ok(ck.finish());
            }
        }
    }
    Ok(ck.finish())
}

/// `A`, `ΛA`, `ΡΛA` and the unit `η: A → ΡΛA`.
#[derive(Clone, Debug)]
pub struct Unit {
    pub lan: Kan,
    pub ran_lan: Kan,
    pub map: EquivariantMap,
}

/// `B`, `ΡB`, `ΛΡB` and the counit `ε: B → ΛΡB`.
#[derive(Clone, Debug)]
pub struct Counit {
    pub ran: Kan,
    pub lan_ran: Kan,
    pub map: EquivariantMap,
}

pub fn unit(a: &Action, limits: Limits) -> Result<Unit> {
    let l = lan(a, limits)?;
    let rl = ran(&l.action, limits)?;
    let map = evaluation(&l, &rl);
    Ok(Unit { lan: l, ran_lan: rl, map })
}

pub fn counit(b: &Action, limits: Limits) -> Result<Counit> {
    let r = ran(b, limits)?;
    let lr = lan(&r.action, limits)?;
    let map = evaluation(&r, &lr);
    Ok(Counit { ran: r, lan_ran: lr, map })
}

/// `ΡΛA`.
pub fn monad_square(a: &Action, limits: Limits) -> Result<Action> {
    Ok(ran(&lan(a, limits)?.action, limits)?.action)
}

/// `ΛΡB`.
pub fn comonad_square(b: &Action, limits: Limits) -> Result<Action> {
    Ok(lan(&ran(b, limits)?.action, limits)?.action)
}

/// Everything needed for the monad on `A` up to `ΡΛΡΛA`.
#[derive(Clone, Debug)]
pub struct Monad {
    pub unit: Unit,
    /// `ΛΡΛA` and `ΡΛΡΛA`.
    pub lan2: Kan,
    pub ran_lan2: Kan,
    /// `μ = Ρε_{ΛA}: ΡΛΡΛA → ΡΛA`.
    pub mult: EquivariantMap,
    /// `η_{ΡΛA}: ΡΛA → ΡΛΡΛA`.
    pub unit2: EquivariantMap,
}

pub fn monad(a: &Action, limits: Limits) -> Result<Monad> {
    let u = unit(a, limits)?;
    let lan2 = lan(&u.ran_lan.action, limits)?;
    let ran_lan2 = ran(&lan2.action, limits)?;
    let eps = evaluation(&u.ran_lan, &lan2);
    let mult = ran_map(&eps, &u.ran_lan, &ran_lan2);
    let unit2 = evaluation(&lan2, &ran_lan2);
    Ok(Monad { unit: u, lan2, ran_lan2, mult, unit2 })
}

/// Carrier `A` with `α: ΡΛA → A`.
#[derive(Clone, Debug)]
pub struct Algebra {
    pub carrier: Action,
    pub structure: EquivariantMap,
}

/// Carrier `B` with `β: ΛΡB → B` (covariant form).
#[derive(Clone, Debug)]
pub struct Coalgebra {
    pub carrier: Action,
    pub structure: EquivariantMap,
}

/// Unit law `α∘η = id` and multiplication law `α∘ΡΛα = α∘μ`.
pub fn check_algebra(alg: &Algebra, limits: Limits) -> Result<Report> {
    let a = &alg.carrier;
    if a.variance() != Variance::Left {
        return Err(Error::VarianceMismatch("algebras live on left actions".into()));
    }
    let m = monad(a, limits)?;
    let mut ck = Checker::new();
    if !ck.absorb(check_equivariant(&m.unit.ran_lan.action, a, &alg.structure)) {
        return Ok(ck.finish());
    }
    ck.require(m.unit.map.then(&alg.structure) == EquivariantMap::identity(a), "unit (η)", || {
        "structure map is not a retraction of η".into()
    });
    let l_alpha = lan_map(&alg.structure, &m.lan2, &m.unit.lan);
    let rl_alpha = ran_map(&l_alpha, &m.ran_lan2, &m.unit.ran_lan);
    ck.require(
        rl_alpha.then(&alg.structure) == m.mult.then(&alg.structure),
        "multiplication (μ)",
        || "α∘ΡΛα differs from α∘μ".into(),
    );
    Ok(ck.finish())
}

/// Counit law `β∘ε = id` and comultiplication law `β∘ΛΡβ = β∘Λη_{ΡB}`.
pub fn check_coalgebra(co: &Coalgebra, limits: Limits) -> Result<Report> {
    let b = &co.carrier;
    if b.variance() != Variance::Right {
        return Err(Error::VarianceMismatch("coalgebras live on right actions".into()));
    }
    let e = counit(b, limits)?;
    let ck_rlr = ran(&e.lan_ran.action, limits)?;
    let lrlr = lan(&ck_rlr.action, limits)?;
    let mut ck = Checker::new();
    if !ck.absorb(check_equivariant(&e.lan_ran.action, b, &co.structure)) {
        return Ok(ck.finish());
    }
    ck.require(e.map.then(&co.structure) == EquivariantMap::identity(b), "counit (ε)", || {
        "structure map is not a retraction of ε".into()
    });
    let r_beta = ran_map(&co.structure, &e.ran, &ck_rlr);
    let lr_beta = lan_map(&r_beta, &e.lan_ran, &lrlr);
    let eta_rb = evaluation(&e.lan_ran, &ck_rlr);
    let l_eta = lan_map(&eta_rb, &e.lan_ran, &lrlr);
    ck.require(
        lr_beta.then(&co.structure) == l_eta.then(&co.structure),
        "comultiplication",
        || "β∘ΛΡβ differs from β∘Λη".into(),
    );
    Ok(ck.finish())
}

/// Free algebra `(ΡΛA, μ)`.
pub fn free_algebra(a: &Action, limits: Limits) -> Result<Algebra> {
    let m = monad(a, limits)?;
    Ok(Algebra { carrier: m.unit.ran_lan.action, structure: m.mult })
}

/// `Σα = (ΛA, Λη_A)`.
pub fn nucleus_to_coalgebra(alg: &Algebra, limits: Limits) -> Result<Coalgebra> {
    let u = unit(&alg.carrier, limits)?;
    let lrl = lan(&u.ran_lan.action, limits)?;
    let structure = lan_map(&u.map, &u.lan, &lrl);
    Ok(Coalgebra { carrier: u.lan.action, structure })
}

/// `Νβ = (ΡB, Ρε_B)`.
pub fn nucleus_to_algebra(co: &Coalgebra, limits: Limits) -> Result<Algebra> {
    let e = counit(&co.carrier, limits)?;
    let rlr = ran(&e.lan_ran.action, limits)?;
    let structure = ran_map(&e.map, &e.ran, &rlr);
    Ok(Algebra { carrier: e.ran.action, structure })
}

/// Algebra morphisms `h: A1 → A2` with `h∘α1 = α2∘ΡΛh`.
pub fn algebra_homs(a1: &Algebra, a2: &Algebra, limits: Limits) -> Result<Vec<EquivariantMap>> {
    let l1 = lan(&a1.carrier, limits)?;
    let l2 = lan(&a2.carrier, limits)?;
    let rl1 = ran(&l1.action, limits)?;
    let rl2 = ran(&l2.action, limits)?;
    let mut out = Vec::new();
    for h in equivariant_maps(&a1.carrier, &a2.carrier, limits)? {
        let lh = lan_map(&h, &l1, &l2);
        let rlh = ran_map(&lh, &rl1, &rl2);
        if a1.structure.then(&h) == rlh.then(&a2.structure) {
            out.push(h);
        }
    }
    Ok(out)
}

/// Coalgebra morphisms `B1 → B2`, given covariantly as maps `k: B2 → B1`
/// with `k∘β2 = β1∘ΛΡk`.
pub fn coalgebra_homs(b1: &Coalgebra, b2: &Coalgebra, limits: Limits) -> Result<Vec<EquivariantMap>> {
    let r1 = ran(&b1.carrier, limits)?;
    let r2 = ran(&b2.carrier, limits)?;
    let lr1 = lan(&r1.action, limits)?;
    let lr2 = lan(&r2.action, limits)?;
    let mut out = Vec::new();
    for k in equivariant_maps(&b2.carrier, &b1.carrier, limits)? {
        let rk = ran_map(&k, &r2, &r1);
        let lrk = lan_map(&rk, &lr2, &lr1);
        if b2.structure.then(&k) == lrk.then(&b1.structure) {
            out.push(k);
        }
    }
    Ok(out)
}

/// Gap between a left and a right action: `phi[s][u]: a → b` for `s ∈ A(a)`, `u ∈ B(b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gap {
    pub left: Action,
    pub right: Action,
    pub phi: Vec<Vec<Mor>>,
}

fn gap_problem(a: &Action, b: &Action) -> Problem {
    let cat = a.category();
    let nb = b.total();
    let var = |s: usize, u: usize| s * nb + u;
    let mut domains = Vec::with_capacity(a.total() * nb);
    for s in 0..a.total() {
        let x = a.unflat(s).0;
        for u in 0..nb {
            let y = b.unflat(u).0;
            domains.push(cat.hom(x, y).iter().map(|&m| m as u32).collect());
        }
    }
    let mut p = Problem::new(domains);
    for &g in cat.generators() {
        let post: Vec<u32> =
            (0..cat.num_morphisms()).map(|m| cat.compose(m, g).map_or(NONE, |r| r as u32)).collect();
        let pre: Vec<u32> =
            (0..cat.num_morphisms()).map(|m| cat.compose(g, m).map_or(NONE, |r| r as u32)).collect();
        let tpost = p.add_table(post);
        let tpre = p.add_table(pre);
        // Cone in u: phi(s, u!g) = phi(s, u) then g.
        for s in 0..a.total() {
            for i in 0..b.size(cat.dom(g)) {
                let u = b.flat(cat.dom(g), i);
                let ug = b.flat(cat.cod(g), b.act(g, i));
                p.add_edge(var(s, u), var(s, ug), tpost);
            }
        }
        // Cocone in s: phi(g∗s, u) = g then phi(s, u).
        for i in 0..a.size(cat.cod(g)) {
            let s = a.flat(cat.cod(g), i);
            let gs = a.flat(cat.dom(g), a.act(g, i));
            for u in 0..nb {
                p.add_edge(var(s, u), var(gs, u), tpre);
            }
        }
    }
    p
}

fn check_gap_kinds(a: &Action, b: &Action) -> Result<()> {
    if a.variance() != Variance::Left || b.variance() != Variance::Right {
        return Err(Error::VarianceMismatch("a gap runs from a left to a right action".into()));
    }
    if a.category() != b.category() {
        return Err(Error::TypeMismatch("actions over different categories".into()));
    }
    Ok(())
}

/// All gaps `A ⇸ B` in canonical order.
pub fn gaps_enumerate(a: &Action, b: &Action, limits: Limits) -> Result<Vec<Gap>> {
    check_gap_kinds(a, b)?;
    let nb = b.total();
    let sols = gap_problem(a, b).solve_all(limits)?;
    Ok(sols
        .into_iter()
        .map(|s| Gap {
            left: a.clone(),
            right: b.clone(),
            phi: (0..a.total()).map(|i| s[i * nb..(i + 1) * nb].iter().map(|&m| m as Mor).collect()).collect(),
        })
        .collect())
}

pub fn check_gap(g: &Gap) -> Report {
    let (a, b) = (&g.left, &g.right);
    let cat = a.category();
    let mut ck = Checker::new();
    for s in 0..a.total() {
        let x = a.unflat(s).0;
        for u in 0..b.total() {
            let y = b.unflat(u).0;
            let m = g.phi[s][u];
            if !ck.require(cat.dom(m) == x && cat.cod(m) == y, "typing", || format!("phi({s},{u}) has the wrong type")) {
                return ck.finish();
            }
        }
    }
    for f in 0..cat.num_morphisms() {
        for s in 0..a.total() {
            for i in 0..b.size(cat.dom(f)) {
                let u = b.flat(cat.dom(f), i);
                let uf = b.flat(cat.cod(f), b.act(f, i));
                ck.require(g.phi[s][uf] == cat.comp(g.phi[s][u], f), "cone condition", || {
                    format!("phi({s}, u!{}) for u = {u}", cat.morphism_name(f))
                });
            }
        }
        for i in 0..a.size(cat.cod(f)) {
            let s = a.flat(cat.cod(f), i);
            let fs = a.flat(cat.dom(f), a.act(f, i));
            for u in 0..b.total() {
                ck.require(g.phi[fs][u] == cat.comp(f, g.phi[s][u]), "cocone condition", || {
                    format!("phi({}∗s, {u}) for s = {s}", cat.morphism_name(f))
                });
            }
        }
    }
    ck.finish()
}

/// `(⃖g: A → ΡB, ⃗g: B → ΛA)` for `rb = ΡB` and `la = ΛA`.
pub fn gap_transpose(g: &Gap, rb: &Kan, la: &Kan) -> (EquivariantMap, EquivariantMap) {
    let (a, b) = (&g.left, &g.right);
    let lower = (0..a.sizes().len())
        .map(|x| (0..a.size(x)).map(|i| rb.lookup[x][&g.phi[a.flat(x, i)]]).collect())
        .collect();
    let upper = (0..b.sizes().len())
        .map(|y| {
            (0..b.size(y))
                .map(|j| {
                    let u = b.flat(y, j);
                    let fam: Vec<Mor> = (0..a.total()).map(|s| g.phi[s][u]).collect();
                    la.lookup[y][&fam]
                })
                .collect()
        })
        .collect();
    (EquivariantMap { components: lower }, EquivariantMap { components: upper })
}

/// Gap read off a map `A → ΡB`.
pub fn gap_from_lower(a: &Action, rb: &Kan, lower: &EquivariantMap) -> Gap {
    let phi = (0..a.total())
        .map(|s| {
            let (x, i) = a.unflat(s);
            rb.data[x][lower.apply(x, i)].clone()
        })
        .collect();
    Gap { left: a.clone(), right: rb.source.clone(), phi }
}

/// Gap read off a covariant map `B → ΛA`.
pub fn gap_from_upper(b: &Action, la: &Kan, upper: &EquivariantMap) -> Gap {
    let a = &la.source;
    let mut phi = vec![vec![0; b.total()]; a.total()];
    for u in 0..b.total() {
        let (y, j) = b.unflat(u);
        let fam = &la.data[y][upper.apply(y, j)];
        for s in 0..a.total() {
            phi[s][u] = fam[s];
        }
    }
    Gap { left: a.clone(), right: b.clone(), phi }
}

/// Gap morphism `(⃖f: A1 → A2, ⃗f: B2 → B1)` from `g1` to `g2`: the primal
/// square `⃖g2∘⃖f = Ρ⃗f∘⃖g1` must hold and agree with the dual square
/// `⃗g1∘⃗f = Λ⃖f∘⃗g2`.
pub fn check_gap_morphism(
    f_lower: &EquivariantMap,
    f_upper: &EquivariantMap,
    g1: &Gap,
    g2: &Gap,
    limits: Limits,
) -> Result<Report> {
    let mut ck = Checker::new();
    if !ck.absorb(check_equivariant(&g1.left, &g2.left, f_lower))
        || !ck.absorb(check_equivariant(&g2.right, &g1.right, f_upper))
    {
        return Ok(ck.finish());
    }
    let (rb1, rb2) = (ran(&g1.right, limits)?, ran(&g2.right, limits)?);
    let (la1, la2) = (lan(&g1.left, limits)?, lan(&g2.left, limits)?);
    let (low1, up1) = gap_transpose(g1, &rb1, &la1);
    let (low2, up2) = gap_transpose(g2, &rb2, &la2);
    let primal = f_lower.then(&low2) == low1.then(&ran_map(f_upper, &rb2, &rb1));
    let dual = f_upper.then(&up1) == up2.then(&lan_map(f_lower, &la1, &la2));
    ck.require(primal == dual, "square equivalence", || {
        format!("primal square {} but dual square {}", verdict(primal), verdict(dual))
    });
    ck.require(primal, "primal square", || "⃖g2∘⃖f differs from Ρ⃗f∘⃖g1".into());
    Ok(ck.finish())
}

fn verdict(b: bool) -> &'static str {
    if b {
        "holds"
    } else {
        "fails"
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::{find_isomorphism, yoneda_left, yoneda_right};
    use crate::fincat::{FinCategory, validate_category, RawCategory, Cat};
    use std::sync::Arc;

    fn z4() -> Cat {
        let els: Vec<String> = (0..4).map(|i| i.to_string()).collect();
        let table: Vec<Vec<usize>> = (0..4).map(|a| (0..4).map(|b| (a + b) % 4).collect()).collect();
        Arc::new(FinCategory::from_monoid("o", &els, 0, &table).unwrap())
    }

    fn walking_arrow() -> Cat {
        Arc::new(
            validate_category(&RawCategory {
                objects: vec!["a".into(), "b".into()],
                morphisms: vec![("f".into(), "a".into(), "b".into())],
                ..Default::default()
            })
            .unwrap(),
        )
    }

    #[test]
    fn lan_of_empty_is_terminal() {
        let w = walking_arrow();
        let l = lan(&Action::empty(w.clone(), Variance::Left), Limits::default()).unwrap();
        assert_eq!(l.action.sizes(), &[1, 1]);
    }

    #[test]
    fn lan_of_representable() {
        let w = walking_arrow();
        for x in 0..2 {
            let l = lan(&yoneda_left(&w, x).unwrap(), Limits::default()).unwrap();
            let d = yoneda_right(&w, x).unwrap();
            assert!(find_isomorphism(&l.action, &d, Limits::default()).unwrap().is_some());
        }
    }

    #[test]
    fn z4_lan_kills_trivial_action() {
        let z = z4();
        let pt = Action::terminal(z.clone(), Variance::Left);
        assert_eq!(lan(&pt, Limits::default()).unwrap().action.total(), 0);
        assert_eq!(monad_square(&pt, Limits::default()).unwrap().total(), 1);
    }

    #[test]
    fn free_algebra_passes() {
        let w = walking_arrow();
        let a = yoneda_left(&w, 1).unwrap();
        let alg = free_algebra(&a, Limits::default()).unwrap();
        assert!(check_algebra(&alg, Limits::default()).unwrap().pass());
    }

    #[test]
    fn gaps_between_representables() {
        let w = walking_arrow();
        for x in 0..2 {
            for y in 0..2 {
                let g = gaps_enumerate(&yoneda_left(&w, x).unwrap(), &yoneda_right(&w, y).unwrap(), Limits::default())
                    .unwrap();
                assert_eq!(g.len(), w.hom(x, y).len());
                assert!(g.iter().all(|g| check_gap(g).pass()));
            }
        }
    }
}
