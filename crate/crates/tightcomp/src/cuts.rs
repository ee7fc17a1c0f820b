//! Intervals, full, simple and absolute cuts, and cut-(co)algebras.
//!
//! Maps out of right actions are covariant: `⃗g: B → ΛA` and `⃗j: ΛA → B`.
//! An absolute cut is the storage format; simple and full cuts are views.

use crate::action::{
    check_equivariant, enumerate_actions, equivariant_maps, equivariant_maps_pinned, find_isomorphism,
    fixed_points, isomorphisms, Action, EquivariantMap, Variance,
};
use crate::error::{Error, Result};
use crate::fincat::{Cat, Mor};
use crate::isbell::{
    check_algebra, check_coalgebra, evaluation, kan_map, gap_from_lower, gap_from_upper, gap_transpose, lan, lan_map, ran, ran_map, Algebra,
    Coalgebra, Kan,
};
use crate::report::{Checker, Report};
use crate::search::Limits;

/// `ΡB`, `ΛA`, `ΡΛA`, `ΛΡB` with the unit `η_A` and counit `ε_B`.
#[derive(Clone, Debug)]
pub struct CutSpaces {
    pub rb: Kan,
    pub la: Kan,
    pub rla: Kan,
    pub lrb: Kan,
    pub eta: EquivariantMap,
    pub eps: EquivariantMap,
}

impl CutSpaces {
    pub fn new(a: &Action, b: &Action, limits: Limits) -> Result<CutSpaces> {
        if a.variance() != Variance::Left || b.variance() != Variance::Right {
            return Err(Error::VarianceMismatch("a cut pairs a left action with a right action".into()));
        }
        if a.category() != b.category() {
            return Err(Error::TypeMismatch("actions over different categories".into()));
        }
        let la = lan(a, limits)?;
        let rb = ran(b, limits)?;
        let rla = ran(&la.action, limits)?;
        let lrb = lan(&rb.action, limits)?;
        let eta = evaluation(&la, &rla);
        let eps = evaluation(&rb, &lrb);
        Ok(CutSpaces { rb, la, rla, lrb, eta, eps })
    }

    /// `⃗g` from `⃖g`.
    pub fn upper_transpose(&self, a: &Action, g_lower: &EquivariantMap) -> EquivariantMap {
        gap_transpose(&gap_from_lower(a, &self.rb, g_lower), &self.rb, &self.la).1
    }

    /// `⃖g` from `⃗g`.
    pub fn lower_transpose(&self, b: &Action, g_upper: &EquivariantMap) -> EquivariantMap {
        gap_transpose(&gap_from_upper(b, &self.la, g_upper), &self.rb, &self.la).0
    }

    /// `Ρk: ΡB → ΡΛA` for `k: ΛA → B`.
    pub fn ran_of_upper(&self, k: &EquivariantMap) -> EquivariantMap {
        ran_map(k, &self.rla, &self.rb)
    }

    /// `Ρk: ΡΛA → ΡB` for `k: B → ΛA`.
    pub fn ran_of_upper_rev(&self, k: &EquivariantMap) -> EquivariantMap {
        ran_map(k, &self.rb, &self.rla)
    }

    /// `Λh: ΛA → ΛΡB` for `h: ΡB → A`.
    pub fn lan_of_lower(&self, h: &EquivariantMap) -> EquivariantMap {
        lan_map(h, &self.lrb, &self.la)
    }

    /// `Λh: ΛΡB → ΛA` for `h: A → ΡB`.
    pub fn lan_of_lower_rev(&self, h: &EquivariantMap) -> EquivariantMap {
        lan_map(h, &self.la, &self.lrb)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleCut {
    pub left: Action,
    pub right: Action,
    /// `A → ΡB`.
    pub g_lower: EquivariantMap,
    /// `B → ΛA`.
    pub g_upper: EquivariantMap,
    /// `ΡB → A`.
    pub j_lower: EquivariantMap,
    /// `ΛA → B`.
    pub j_upper: EquivariantMap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FullCut {
    pub left: Action,
    pub right: Action,
    pub g_lower: EquivariantMap,
    pub g_upper: EquivariantMap,
    /// `ΡΛA → A`.
    pub alg: EquivariantMap,
    /// `ΛΡB → B`.
    pub coalg: EquivariantMap,
    /// `ΡB → ΡΛA`.
    pub j_bullet_lower: EquivariantMap,
    /// `ΛA → ΛΡB`.
    pub j_bullet_upper: EquivariantMap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbsoluteCut {
    pub left: Action,
    pub right: Action,
    /// Idempotent on `ΡB`.
    pub a_lower: EquivariantMap,
    /// Idempotent on `ΛA`.
    pub a_upper: EquivariantMap,
    /// Idempotent on `ΡΛA`.
    pub phi_lower: EquivariantMap,
    /// Idempotent on `ΛΡB`.
    pub phi_upper: EquivariantMap,
}

/// `(⃖α on A, ⃗α on B, ⃖ɟ_•: ΡB → ΡΛA, ⃗ɟ^•: ΛA → ΛΡB)`.
#[derive(Clone, Debug)]
pub struct Interval {
    pub alg: Algebra,
    pub coalg: Coalgebra,
    pub j_lower: EquivariantMap,
    pub j_upper: EquivariantMap,
}

fn identity_on(a: &Action) -> EquivariantMap {
    EquivariantMap::identity(a)
}

fn fibers_fit(small: &Action, big: &Action) -> bool {
    small.sizes().iter().zip(big.sizes()).all(|(s, b)| s <= b)
}

/// Transposition, retractions, and the two coherence equations.
pub fn check_simple_cut(s: &SimpleCut, limits: Limits) -> Result<Report> {
    let sp = CutSpaces::new(&s.left, &s.right, limits)?;
    check_simple_cut_in(s, &sp, limits)
}

pub fn check_simple_cut_in(s: &SimpleCut, sp: &CutSpaces, limits: Limits) -> Result<Report> {
    let (a, b) = (&s.left, &s.right);
    if !fibers_fit(a, &sp.rb.action) || !fibers_fit(b, &sp.la.action) {
        return Err(Error::RetractionFailure("a fiber is larger than the fiber it must embed into".into()));
    }
    let mut ck = Checker::new();
    let typed = ck.absorb(check_equivariant(a, &sp.rb.action, &s.g_lower))
        && ck.absorb(check_equivariant(b, &sp.la.action, &s.g_upper))
        && ck.absorb(check_equivariant(&sp.rb.action, a, &s.j_lower))
        && ck.absorb(check_equivariant(&sp.la.action, b, &s.j_upper));
    if !typed {
        return Ok(ck.finish());
    }
    ck.require(sp.upper_transpose(a, &s.g_lower) == s.g_upper, "transposition", || {
        "⃖g and ⃗g are not transposes".into()
    });
    ck.require(s.g_lower.then(&s.j_lower) == identity_on(a), "retraction (left)", || "⃖ɟ∘⃖g is not the identity".into());
    ck.require(s.g_upper.then(&s.j_upper) == identity_on(b), "retraction (right)", || {
        "⃗ɟ∘⃗g is not the identity".into()
    });
    if !ck.ok() {
        return Ok(ck.finish());
    }
    // î = Λ⃖ɟ∘⃗g: B → ΛΡB, compared through Ρ with ε_B.
    let i_hat = s.g_upper.then(&sp.lan_of_lower(&s.j_lower));
    let rlrb = ran(&sp.lrb.action, limits)?;
    let r_eps = ran_map(&sp.eps, &sp.rb, &rlrb);
    let r_ihat = ran_map(&i_hat, &sp.rb, &rlrb);
    ck.require(r_eps.then(&s.j_lower) == r_ihat.then(&s.j_lower), "coherence (left)", || {
        "⃖ɟ∘Ρε differs from ⃖ɟ∘Ρî".into()
    });
    // ĥ = Ρ⃗ɟ∘⃖g: A → ΡΛA, compared through Λ with η_A.
    let h_hat = s.g_lower.then(&sp.ran_of_upper(&s.j_upper));
    let lrla = lan(&sp.rla.action, limits)?;
    let l_eta = lan_map(&sp.eta, &sp.la, &lrla);
    let l_hhat = lan_map(&h_hat, &sp.la, &lrla);
    ck.require(l_hhat.then(&s.j_upper) == l_eta.then(&s.j_upper), "coherence (right)", || {
        "⃗ɟ∘Λĥ differs from ⃗ɟ∘Λη".into()
    });
    Ok(ck.finish())
}

pub fn simple_to_full(s: &SimpleCut, limits: Limits) -> Result<FullCut> {
    let sp = CutSpaces::new(&s.left, &s.right, limits)?;
    Ok(simple_to_full_in(s, &sp))
}

pub fn simple_to_full_in(s: &SimpleCut, sp: &CutSpaces) -> FullCut {
    FullCut {
        left: s.left.clone(),
        right: s.right.clone(),
        g_lower: s.g_lower.clone(),
        g_upper: s.g_upper.clone(),
        alg: sp.ran_of_upper_rev(&s.g_upper).then(&s.j_lower),
        coalg: sp.lan_of_lower_rev(&s.g_lower).then(&s.j_upper),
        j_bullet_lower: sp.ran_of_upper(&s.j_upper),
        j_bullet_upper: sp.lan_of_lower(&s.j_lower),
    }
}

pub fn full_to_simple(f: &FullCut) -> SimpleCut {
    SimpleCut {
        left: f.left.clone(),
        right: f.right.clone(),
        g_lower: f.g_lower.clone(),
        g_upper: f.g_upper.clone(),
        j_lower: f.j_bullet_lower.then(&f.alg),
        j_upper: f.j_bullet_upper.then(&f.coalg),
    }
}

/// Outcome of the full-cut checker, with both equation pairs recorded.
#[derive(Clone, Debug)]
pub struct FullCutCheck {
    pub report: Report,
    pub eq71: bool,
    pub eq72: bool,
}

/// Checks a full cut. With `⃖ɟ = ⃖α∘ɟ_•` and `⃗ɟ = ⃗α∘ɟ^•`, the first pair is
/// `⃖ɟ∘⃖g = id, ⃗ɟ∘Λ⃖g = ⃗α` and the second `⃖ɟ∘Ρ⃗g = ⃖α, ⃗ɟ∘⃗g = id`.
pub fn check_full_cut(f: &FullCut, limits: Limits) -> Result<FullCutCheck> {
    let sp = CutSpaces::new(&f.left, &f.right, limits)?;
    let (a, b) = (&f.left, &f.right);
    let mut ck = Checker::new();
    let typed = ck.absorb(check_equivariant(a, &sp.rb.action, &f.g_lower))
        && ck.absorb(check_equivariant(b, &sp.la.action, &f.g_upper))
        && ck.absorb(check_equivariant(&sp.rla.action, a, &f.alg))
        && ck.absorb(check_equivariant(&sp.lrb.action, b, &f.coalg))
        && ck.absorb(check_equivariant(&sp.rb.action, &sp.rla.action, &f.j_bullet_lower))
        && ck.absorb(check_equivariant(&sp.la.action, &sp.lrb.action, &f.j_bullet_upper));
    if !typed {
        return Ok(FullCutCheck { report: ck.finish(), eq71: false, eq72: false });
    }
    let s = full_to_simple(f);
    let eq71 = f.g_lower.then(&s.j_lower) == identity_on(a)
        && sp.lan_of_lower_rev(&f.g_lower).then(&s.j_upper) == f.coalg;
    let eq72 = sp.ran_of_upper_rev(&f.g_upper).then(&s.j_lower) == f.alg && f.g_upper.then(&s.j_upper) == identity_on(b);
    ck.require(eq71 == eq72, "equation pairs agree", || format!("first pair {eq71}, second pair {eq72}"));
    ck.require(eq71 && eq72, "equation pairs", || "the retraction equations fail".into());
    ck.require(f.j_bullet_lower == sp.ran_of_upper(&s.j_upper), "interval (lower)", || {
        "ɟ_• is not Ρ⃗ɟ".into()
    });
    ck.require(f.j_bullet_upper == sp.lan_of_lower(&s.j_lower), "interval (upper)", || {
        "ɟ^• is not Λ⃖ɟ".into()
    });
    if ck.ok() {
        ck.absorb(check_simple_cut_in(&s, &sp, limits)?);
    }
    Ok(FullCutCheck { report: ck.finish(), eq71, eq72 })
}

/// The interval carried by a full cut.
pub fn interval_of(f: &FullCut) -> Interval {
    Interval {
        alg: Algebra { carrier: f.left.clone(), structure: f.alg.clone() },
        coalg: Coalgebra { carrier: f.right.clone(), structure: f.coalg.clone() },
        j_lower: f.j_bullet_lower.clone(),
        j_upper: f.j_bullet_upper.clone(),
    }
}

/// Both pointwise interval equations, their closed form, and the algebra laws.
pub fn check_interval(i: &Interval, limits: Limits) -> Result<Report> {
    let (a, b) = (&i.alg.carrier, &i.coalg.carrier);
    let sp = CutSpaces::new(a, b, limits)?;
    let mut ck = Checker::new();
    let typed = ck.absorb(check_equivariant(&sp.rla.action, a, &i.alg.structure))
        && ck.absorb(check_equivariant(&sp.lrb.action, b, &i.coalg.structure))
        && ck.absorb(check_equivariant(&sp.rb.action, &sp.rla.action, &i.j_lower))
        && ck.absorb(check_equivariant(&sp.la.action, &sp.lrb.action, &i.j_upper));
    if !typed {
        return Ok(ck.finish());
    }
    let (la, rb) = (&sp.la.action, &sp.rb.action);
    // ɟ_•(ρ)_δ = ρ_{⃗α(ɟ^•(δ))} and ɟ^•(δ)_ρ = δ_{⃖α(ɟ_•(ρ))}.
    'outer: for r in 0..rb.total() {
        let (c, ri) = rb.unflat(r);
        let jr = sp.rla.family(c, i.j_lower.apply(c, ri));
        let rho = sp.rb.family(c, ri);
        for d in 0..la.total() {
            let (y, di) = la.unflat(d);
            let jd = i.j_upper.apply(y, di);
            let beta = i.coalg.structure.apply(y, jd);
            let want = rho[b.flat(y, beta)];
            if !ck.require(jr[d] == want, "interval equation (lower)", || {
                format!("ɟ_•({})_{} differs", rb.label(c, ri), la.label(y, di))
            }) {
                break 'outer;
            }
            let delta = sp.la.family(y, di);
            let alpha = i.alg.structure.apply(c, i.j_lower.apply(c, ri));
            let want2 = delta[a.flat(c, alpha)];
            let got2 = sp.lrb.family(y, jd)[r];
            if !ck.require(got2 == want2, "interval equation (upper)", || {
                format!("ɟ^•({})_{} differs", la.label(y, di), rb.label(c, ri))
            }) {
                break 'outer;
            }
        }
    }
    if ck.ok() {
        // Closed form: ɟ_•(ρ)_δ = ρ_{⃗α(ρ' ↦ δ_{⃖α(ɟ_•(ρ'))})}.
        for d in 0..la.total() {
            let (y, di) = la.unflat(d);
            let delta = sp.la.family(y, di);
            let fam: Vec<Mor> = (0..rb.total())
                .map(|r2| {
                    let (c2, ri2) = rb.unflat(r2);
                    delta[a.flat(c2, i.alg.structure.apply(c2, i.j_lower.apply(c2, ri2)))]
                })
                .collect();
            let Some(k) = sp.lrb.index(y, &fam) else {
                ck.require(false, "closed form", || "the composite family is not a cocone".into());
                break;
            };
            let beta = i.coalg.structure.apply(y, k);
            for r in 0..rb.total() {
                let (c, ri) = rb.unflat(r);
                let jr = sp.rla.family(c, i.j_lower.apply(c, ri));
                ck.require(jr[d] == sp.rb.family(c, ri)[b.flat(y, beta)], "closed form", || {
                    format!("closed form differs at {}", la.label(y, di))
                });
            }
        }
    }
    if ck.ok() {
        ck.absorb(check_algebra(&i.alg, limits)?);
    }
    if ck.ok() {
        ck.absorb(check_coalgebra(&i.coalg, limits)?);
    }
    Ok(ck.finish())
}

pub fn simple_to_absolute(s: &SimpleCut, limits: Limits) -> Result<AbsoluteCut> {
    let sp = CutSpaces::new(&s.left, &s.right, limits)?;
    Ok(simple_to_absolute_in(s, &sp))
}

pub fn simple_to_absolute_in(s: &SimpleCut, sp: &CutSpaces) -> AbsoluteCut {
    let a_lower = s.j_lower.then(&s.g_lower);
    let a_upper = s.j_upper.then(&s.g_upper);
    let phi_lower = sp.ran_of_upper_rev(&s.g_upper).then(&a_lower).then(&sp.ran_of_upper(&s.j_upper));
    let phi_upper = sp.lan_of_lower_rev(&s.g_lower).then(&a_upper).then(&sp.lan_of_lower(&s.j_lower));
    AbsoluteCut { left: s.left.clone(), right: s.right.clone(), a_lower, a_upper, phi_lower, phi_upper }
}

/// Index of each element inside a subset, and the subset's members.
fn positions(keep: &[Vec<bool>]) -> Vec<Vec<u32>> {
    keep.iter()
        .map(|k| {
            let mut n = 0;
            k.iter()
                .map(|&b| {
                    if b {
                        n += 1;
                        n - 1
                    } else {
                        u32::MAX
                    }
                })
                .collect()
        })
        .collect()
}

/// Splits the idempotents pointwise and reads off a simple cut.
pub fn absolute_to_simple(c: &AbsoluteCut, limits: Limits) -> Result<SimpleCut> {
    let sp = CutSpaces::new(&c.left, &c.right, limits)?;
    absolute_to_simple_in(c, &sp, limits)
}

pub fn absolute_to_simple_in(c: &AbsoluteCut, sp: &CutSpaces, limits: Limits) -> Result<SimpleCut> {
    let (a, b) = (&c.left, &c.right);
    if !c.a_lower.is_idempotent() || !c.a_upper.is_idempotent() {
        return Err(Error::NotIdempotent("cut idempotents".into()));
    }
    let fix_l = fixed_points(&c.a_lower);
    let fix_u = fixed_points(&c.a_upper);
    let (img_l, incl_l) = sp.rb.action.subaction(&fix_l)?;
    if img_l.sizes() != a.sizes() {
        return Err(Error::SplitMismatch("image of ⃖a has the wrong fiber sizes".into()));
    }
    let img_u_sizes: Vec<usize> = fix_u.iter().map(|v| v.iter().filter(|&&x| x).count()).collect();
    if img_u_sizes != b.sizes() {
        return Err(Error::SplitMismatch("image of ⃗a has the wrong fiber sizes".into()));
    }
    let pos_l = positions(&fix_l);
    let q_l = EquivariantMap {
        components: c.a_lower.components.iter().enumerate().map(|(x, v)| v.iter().map(|&r| pos_l[x][r as usize]).collect()).collect(),
    };
    for theta in isomorphisms(a, &img_l, limits)? {
        let g_lower = theta.then(&incl_l);
        let g_upper = sp.upper_transpose(a, &g_lower);
        if !g_upper.is_injective() || g_upper.image(&sp.la.action) != fix_u {
            continue;
        }
        let inv_g = invert_onto(&g_upper, &sp.la.action);
        let j_upper = EquivariantMap {
            components: c
                .a_upper
                .components
                .iter()
                .enumerate()
                .map(|(y, v)| v.iter().map(|&d| inv_g[y][d as usize]).collect())
                .collect(),
        };
        let j_lower = q_l.then(&theta.inverse().expect("isomorphism"));
        let s = SimpleCut { left: a.clone(), right: b.clone(), g_lower, g_upper, j_lower, j_upper };
        if simple_to_absolute_in(&s, sp) == *c && check_simple_cut_in(&s, sp, limits)?.pass() {
            return Ok(s);
        }
    }
    Err(Error::SplitMismatch("no splitting of the idempotents matches the declared actions".into()))
}

/// Partial inverse of an injective map, indexed by target elements.
fn invert_onto(h: &EquivariantMap, target: &Action) -> Vec<Vec<u32>> {
    h.components
        .iter()
        .enumerate()
        .map(|(x, v)| {
            let mut inv = vec![u32::MAX; target.size(x)];
            for (i, &t) in v.iter().enumerate() {
                inv[t as usize] = i as u32;
            }
            inv
        })
        .collect()
}

/// Idempotency, joint splitting onto the declared actions, and reproduction
/// of all four idempotents.
pub fn check_absolute_cut(c: &AbsoluteCut, limits: Limits) -> Result<Report> {
    let sp = CutSpaces::new(&c.left, &c.right, limits)?;
    let mut ck = Checker::new();
    let typed = ck.absorb(check_equivariant(&sp.rb.action, &sp.rb.action, &c.a_lower))
        && ck.absorb(check_equivariant(&sp.la.action, &sp.la.action, &c.a_upper))
        && ck.absorb(check_equivariant(&sp.rla.action, &sp.rla.action, &c.phi_lower))
        && ck.absorb(check_equivariant(&sp.lrb.action, &sp.lrb.action, &c.phi_upper));
    if !typed {
        return Ok(ck.finish());
    }
    for (name, m) in [("⃖a", &c.a_lower), ("⃗a", &c.a_upper), ("⃖φ", &c.phi_lower), ("⃗φ", &c.phi_upper)] {
        ck.require(m.is_idempotent(), "idempotency", || format!("{name} is not idempotent"));
    }
    if !ck.ok() {
        return Ok(ck.finish());
    }
    match absolute_to_simple_in(c, &sp, limits) {
        Ok(_) => {
            ck.require(true, "joint splitting", String::new);
        }
        Err(Error::SizeLimit(n)) => return Err(Error::SizeLimit(n)),
        Err(e) => {
            ck.require(false, "joint splitting", || e.to_string());
        }
    }
    Ok(ck.finish())
}

/// Cut morphism `(⃖f: A1 → A2, ⃗f: B2 → B1)`: both idempotent squares and
/// the mutual determination `⃗f = ⃗ɟ1∘Λ⃖f∘⃗g2`, `⃖f = ⃖ɟ2∘Ρ⃗f∘⃖g1`.
pub fn cut_morphism_check(
    f_lower: &EquivariantMap,
    f_upper: &EquivariantMap,
    c1: &AbsoluteCut,
    c2: &AbsoluteCut,
    limits: Limits,
) -> Result<Report> {
    let sp1 = CutSpaces::new(&c1.left, &c1.right, limits)?;
    let sp2 = CutSpaces::new(&c2.left, &c2.right, limits)?;
    cut_morphism_check_in(f_lower, f_upper, c1, c2, &sp1, &sp2, limits)
}

pub fn cut_morphism_check_in(
    f_lower: &EquivariantMap,
    f_upper: &EquivariantMap,
    c1: &AbsoluteCut,
    c2: &AbsoluteCut,
    sp1: &CutSpaces,
    sp2: &CutSpaces,
    limits: Limits,
) -> Result<Report> {
    let mut ck = Checker::new();
    if !ck.absorb(check_equivariant(&c1.left, &c2.left, f_lower))
        || !ck.absorb(check_equivariant(&c2.right, &c1.right, f_upper))
    {
        return Ok(ck.finish());
    }
    let r_fu = ran_map(f_upper, &sp2.rb, &sp1.rb); // ΡB1 → ΡB2
    let l_fl = lan_map(f_lower, &sp1.la, &sp2.la); // ΛA2 → ΛA1
    ck.require(c1.a_lower.then(&r_fu) == r_fu.then(&c2.a_lower), "lower idempotent square", || {
        "Ρ⃗f does not intertwine ⃖a1 and ⃖a2".into()
    });
    ck.require(c2.a_upper.then(&l_fl) == l_fl.then(&c1.a_upper), "upper idempotent square", || {
        "Λ⃖f does not intertwine ⃗a2 and ⃗a1".into()
    });
    if !ck.ok() {
        return Ok(ck.finish());
    }
    let s1 = absolute_to_simple_in(c1, sp1, limits)?;
    let s2 = absolute_to_simple_in(c2, sp2, limits)?;
    ck.require(s2.g_upper.then(&l_fl).then(&s1.j_upper) == *f_upper, "determination (upper)", || {
        "⃗f is not ⃗ɟ1∘Λ⃖f∘⃗g2".into()
    });
    ck.require(s1.g_lower.then(&r_fu).then(&s2.j_lower) == *f_lower, "determination (lower)", || {
        "⃖f is not ⃖ɟ2∘Ρ⃗f∘⃖g1".into()
    });
    Ok(ck.finish())
}

/// The unique `⃗f` compatible with a given `⃖f`: `⃗ɟ1∘Λ⃖f∘⃗g2`.
pub fn reconstruct_upper(f_lower: &EquivariantMap, c1: &AbsoluteCut, c2: &AbsoluteCut, limits: Limits) -> Result<EquivariantMap> {
    let sp1 = CutSpaces::new(&c1.left, &c1.right, limits)?;
    let sp2 = CutSpaces::new(&c2.left, &c2.right, limits)?;
    let s1 = absolute_to_simple_in(c1, &sp1, limits)?;
    let s2 = absolute_to_simple_in(c2, &sp2, limits)?;
    Ok(s2.g_upper.then(&lan_map(f_lower, &sp1.la, &sp2.la)).then(&s1.j_upper))
}

/// All cut morphisms `c1 → c2`, listed by their left component.
pub fn cut_homs(c1: &AbsoluteCut, c2: &AbsoluteCut, limits: Limits) -> Result<Vec<(EquivariantMap, EquivariantMap)>> {
    let sp1 = CutSpaces::new(&c1.left, &c1.right, limits)?;
    let sp2 = CutSpaces::new(&c2.left, &c2.right, limits)?;
    let s1 = absolute_to_simple_in(c1, &sp1, limits)?;
    let s2 = absolute_to_simple_in(c2, &sp2, limits)?;
    let mut out = Vec::new();
    for fl in equivariant_maps(&c1.left, &c2.left, limits)? {
        let l_fl = lan_map(&fl, &sp1.la, &sp2.la);
        let fu = s2.g_upper.then(&l_fl).then(&s1.j_upper);
        if cut_morphism_check_in(&fl, &fu, c1, c2, &sp1, &sp2, limits)?.pass() {
            out.push((fl, fu));
        }
    }
    Ok(out)
}

fn simple_from_parts(
    a: &Action,
    b: &Action,
    g_lower: EquivariantMap,
    g_upper: EquivariantMap,
    j_lower: EquivariantMap,
    j_upper: EquivariantMap,
) -> SimpleCut {
    SimpleCut { left: a.clone(), right: b.clone(), g_lower, g_upper, j_lower, j_upper }
}

/// `η(B, β)`: the cut `(ΡB, B)` with `⃖g = ⃖ɟ = id`, `⃗g = ε_B`, `⃗ɟ = β`.
pub fn coalgebra_to_cut(co: &Coalgebra, limits: Limits) -> Result<AbsoluteCut> {
    let b = &co.carrier;
    let a = ran(b, limits)?.action;
    // Here ΛA is ΛΡB, so ε_B already lands in it.
    let sp = CutSpaces::new(&a, b, limits)?;
    let id = identity_on(&a);
    let s = simple_from_parts(&a, b, id.clone(), sp.eps.clone(), id, co.structure.clone());
    Ok(simple_to_absolute_in(&s, &sp))
}

/// `ε(A, α)`: the cut `(A, ΛA)` with `⃖g = η_A`, `⃗g = ⃗ɟ = id`, `⃖ɟ = α`.
pub fn algebra_to_cut(alg: &Algebra, limits: Limits) -> Result<AbsoluteCut> {
    let a = &alg.carrier;
    let b = lan(a, limits)?.action;
    let sp = CutSpaces::new(a, &b, limits)?;
    let id = identity_on(&b);
    let s = simple_from_parts(a, &b, sp.eta.clone(), id.clone(), alg.structure.clone(), id);
    Ok(simple_to_absolute_in(&s, &sp))
}

/// `Cod`: the algebra `(A, ⃖ɟ∘Ρ⃗g)`.
pub fn cut_to_algebra(c: &AbsoluteCut, limits: Limits) -> Result<Algebra> {
    let sp = CutSpaces::new(&c.left, &c.right, limits)?;
    let s = absolute_to_simple_in(c, &sp, limits)?;
    Ok(Algebra { carrier: c.left.clone(), structure: sp.ran_of_upper_rev(&s.g_upper).then(&s.j_lower) })
}

/// `Dom`: the coalgebra `(B, ⃗ɟ∘Λ⃖g)`.
pub fn cut_to_coalgebra(c: &AbsoluteCut, limits: Limits) -> Result<Coalgebra> {
    let sp = CutSpaces::new(&c.left, &c.right, limits)?;
    let s = absolute_to_simple_in(c, &sp, limits)?;
    Ok(Coalgebra { carrier: c.right.clone(), structure: sp.lan_of_lower_rev(&s.g_lower).then(&s.j_upper) })
}

/// Right action `⃗A` with an idempotent `κ` on `Ρ⃗A`.
#[derive(Clone, Debug)]
pub struct CutAlgebra {
    pub carrier: Action,
    pub kappa: EquivariantMap,
}

/// Left action `⃖A` with an idempotent `φ` on `Λ⃖A`.
#[derive(Clone, Debug)]
pub struct CutCoalgebra {
    pub carrier: Action,
    pub phi: EquivariantMap,
}

/// Idempotency of `κ`, splitting of `Λκ` onto `⃗A`, and bijectivity of the
/// canonical comparison `u ↦ (R ↦ R_u)` from `⃗A` to cocones on the image of `κ`.
pub fn check_cut_algebra(k: &CutAlgebra, limits: Limits) -> Result<Report> {
    check_cut_structure(&k.carrier, &k.kappa, Variance::Right, limits)
}

/// Dual of [`check_cut_algebra`].
pub fn check_cut_coalgebra(k: &CutCoalgebra, limits: Limits) -> Result<Report> {
    check_cut_structure(&k.carrier, &k.phi, Variance::Left, limits)
}

fn check_cut_structure(x: &Action, idem: &EquivariantMap, variance: Variance, limits: Limits) -> Result<Report> {
    if x.variance() != variance {
        return Err(Error::VarianceMismatch(format!("expected a {} action", variance.name())));
    }
    let k1 = kan_of(x, limits)?;
    let mut ck = Checker::new();
    if !ck.absorb(check_equivariant(&k1.action, &k1.action, idem)) {
        return Ok(ck.finish());
    }
    if !idem.is_idempotent() {
        return Err(Error::NotIdempotent("structure idempotent".into()));
    }
    ck.require(true, "idempotency", String::new);
    let k2 = kan_of(&k1.action, limits)?;
    // K(idem) on K K X, and its fixed part.
    let k_idem = kan_map(idem, &k2, &k2);
    let (fix, _) = k2.action.subaction(&fixed_points(&k_idem))?;
    if find_isomorphism(&fix, x, limits)?.is_none() {
        return Err(Error::SplitMismatch("the fixed part of the transposed idempotent is not isomorphic to the carrier".into()));
    }
    ck.require(true, "splitting", String::new);
    // Canonical comparison into cocones/cones on the image.
    let (img, incl) = k1.action.subaction(&fixed_points(idem))?;
    let k_img = kan_of(&img, limits)?;
    let eval = evaluation(&k1, &k2);
    let restrict = kan_map(&incl, &k_img, &k2);
    let psi = eval.then(&restrict);
    ck.require(
        psi.is_injective() && psi.is_surjective_onto(&k_img.action),
        "canonical comparison",
        || "the carrier does not match the (co)cones on the image".into(),
    );
    Ok(ck.finish())
}

fn kan_of(x: &Action, limits: Limits) -> Result<Kan> {
    match x.variance() {
        Variance::Left => lan(x, limits),
        Variance::Right => ran(x, limits),
    }
}

/// Cut-coalgebra morphism `f: A → X` between `(A, φ)` and `(X, ξ)`:
/// `φ(δ∘f) = ξ(δ)∘f` for every cocone `δ` over `X`.
pub fn is_cut_coalgebra_morphism(f: &EquivariantMap, la: &Kan, phi: &EquivariantMap, lx: &Kan, xi: &EquivariantMap) -> bool {
    let lf = lan_map(f, la, lx);
    lf.then(phi) == xi.then(&lf)
}

/// The cut-coalgebra `(A, ⃗a)` of an absolute cut.
pub fn cut_coalgebra_of(c: &AbsoluteCut) -> CutCoalgebra {
    CutCoalgebra { carrier: c.left.clone(), phi: c.a_upper.clone() }
}

/// The cut-algebra `(B, ⃖a)` of an absolute cut.
pub fn cut_algebra_of(c: &AbsoluteCut) -> CutAlgebra {
    CutAlgebra { carrier: c.right.clone(), kappa: c.a_lower.clone() }
}

/// Absolute cuts whose two actions have every fiber of size at most `cap`:
/// one per left action up to isomorphism and per compatible structure.
pub fn enumerate_cuts(c: &Cat, cap: usize, limits: Limits) -> Result<Vec<AbsoluteCut>> {
    let mut out = Vec::new();
    for a in enumerate_actions(c, Variance::Left, cap, limits)? {
        out.extend(cuts_on(&a, cap, limits)?);
    }
    Ok(out)
}

/// Absolute cuts with left action `a` and right fibers at most `cap`.
pub fn cuts_on(a: &Action, cap: usize, limits: Limits) -> Result<Vec<AbsoluteCut>> {
    let la = lan(a, limits)?;
    let mut out = Vec::new();
    for a_upper in equivariant_maps(&la.action, &la.action, limits)? {
        if !a_upper.is_idempotent() {
            continue;
        }
        let fix = fixed_points(&a_upper);
        let (b, g_upper) = la.action.subaction(&fix)?;
        if b.sizes().iter().any(|&s| s > cap) {
            continue;
        }
        let sp = CutSpaces::new(a, &b, limits)?;
        let g_lower = sp.lower_transpose(&b, &g_upper);
        if !g_lower.is_injective() {
            continue;
        }
        let pos = positions(&fix);
        let j_upper = EquivariantMap {
            components: a_upper.components.iter().enumerate().map(|(y, v)| v.iter().map(|&d| pos[y][d as usize]).collect()).collect(),
        };
        // Pin ⃖ɟ on the image of ⃖g so that ⃖ɟ∘⃖g = id.
        let rb = &sp.rb.action;
        let mut pins = vec![None; rb.total()];
        for x in 0..a.sizes().len() {
            for i in 0..a.size(x) {
                pins[rb.flat(x, g_lower.apply(x, i))] = Some(a.flat(x, i));
            }
        }
        for j_lower in equivariant_maps_pinned(rb, a, &pins, limits)? {
            let s = SimpleCut {
                left: a.clone(),
                right: b.clone(),
                g_lower: g_lower.clone(),
                g_upper: g_upper.clone(),
                j_lower,
                j_upper: j_upper.clone(),
            };
            if check_simple_cut_in(&s, &sp, limits)?.pass() {
                out.push(simple_to_absolute_in(&s, &sp));
            }
        }
    }
    Ok(out)
}

/// Observation on one cut: whether `ɟ_•` and `ɟ^•` agree as gap tables
/// between `ΡB` and `ΛA`, and whether `⃖ɟ` and `⃗ɟ` are isomorphisms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct JayScan {
    pub bullets_agree: bool,
    pub js_invertible: bool,
}

impl JayScan {
    /// Agreement of the bullets forces both `ɟ`s to be invertible.
    pub fn implication_holds(&self) -> bool {
        !self.bullets_agree || self.js_invertible
    }
}

pub fn jay_scan(s: &SimpleCut, limits: Limits) -> Result<JayScan> {
    let sp = CutSpaces::new(&s.left, &s.right, limits)?;
    let full = simple_to_full_in(s, &sp);
    let (rb, la) = (&sp.rb.action, &sp.la.action);
    let mut agree = true;
    'outer: for r in 0..rb.total() {
        let (c, ri) = rb.unflat(r);
        let lower = sp.rla.family(c, full.j_bullet_lower.apply(c, ri));
        for d in 0..la.total() {
            let (y, di) = la.unflat(d);
            let upper = sp.lrb.family(y, full.j_bullet_upper.apply(y, di));
            if lower[d] != upper[r] {
                agree = false;
                break 'outer;
            }
        }
    }
    let inv = s.j_lower.inverse().is_some() && s.j_upper.inverse().is_some();
    Ok(JayScan { bullets_agree: agree, js_invertible: inv })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::{yoneda_left, yoneda_right};
    use crate::fincat::FinCategory;
    use crate::poset::FinPoset;
    use std::sync::Arc;

    fn z4() -> Cat {
        let els: Vec<String> = (0..4).map(|i| i.to_string()).collect();
        let table: Vec<Vec<usize>> = (0..4).map(|a| (0..4).map(|b| (a + b) % 4).collect()).collect();
        Arc::new(FinCategory::from_monoid("o", &els, 0, &table).unwrap())
    }

    fn representable_cut(c: &Cat, x: usize) -> SimpleCut {
        let a = yoneda_left(c, x).unwrap();
        let b = yoneda_right(c, x).unwrap();
        let sp = CutSpaces::new(&a, &b, Limits::default()).unwrap();
        let g_lower = crate::action::find_isomorphism(&a, &sp.rb.action, Limits::default()).unwrap().unwrap();
        let g_upper = sp.upper_transpose(&a, &g_lower);
        let j_lower = g_lower.inverse().unwrap();
        let j_upper = g_upper.inverse().unwrap();
        SimpleCut { left: a, right: b, g_lower, g_upper, j_lower, j_upper }
    }

    #[test]
    fn representable_cut_passes() {
        let c = Arc::new(FinPoset::chain(3).thin_category());
        for x in 0..3 {
            let s = representable_cut(&c, x);
            assert!(check_simple_cut(&s, Limits::default()).unwrap().pass());
            let f = simple_to_full(&s, Limits::default()).unwrap();
            assert_eq!(full_to_simple(&f), s);
            let abs = simple_to_absolute(&s, Limits::default()).unwrap();
            assert_eq!(absolute_to_simple(&abs, Limits::default()).unwrap(), s);
        }
    }

    #[test]
    fn z4_has_three_cuts() {
        let cuts = enumerate_cuts(&z4(), 4, Limits::default()).unwrap();
        let shapes: Vec<(usize, usize)> = cuts.iter().map(|c| (c.left.total(), c.right.total())).collect();
        assert_eq!(shapes, vec![(0, 1), (1, 0), (4, 4)]);
    }

    #[test]
    fn lattice_cuts_match_completion() {
        let p = FinPoset::antichain(2);
        let c = Arc::new(p.thin_category());
        assert_eq!(enumerate_cuts(&c, 1, Limits::default()).unwrap().len(), p.dm_completion().cuts.len());
    }

    fn all_views_agree(c: &Cat, cap: usize) -> usize {
        let l = Limits::default();
        let cuts = enumerate_cuts(c, cap, l).unwrap();
        for abs in &cuts {
            assert!(check_absolute_cut(abs, l).unwrap().pass());
            let s = absolute_to_simple(abs, l).unwrap();
            let f = simple_to_full(&s, l).unwrap();
            let fc = check_full_cut(&f, l).unwrap();
            assert!(fc.report.pass() && fc.eq71 && fc.eq72, "{:?}", fc.report);
            assert!(check_interval(&interval_of(&f), l).unwrap().pass());
            assert!(jay_scan(&s, l).unwrap().implication_holds());
            assert!(check_cut_coalgebra(&cut_coalgebra_of(abs), l).unwrap().pass());
            assert!(check_cut_algebra(&cut_algebra_of(abs), l).unwrap().pass());
            let alg = cut_to_algebra(abs, l).unwrap();
            assert!(check_algebra(&alg, l).unwrap().pass());
            let co = cut_to_coalgebra(abs, l).unwrap();
            assert!(check_coalgebra(&co, l).unwrap().pass());
            let homs = cut_homs(abs, abs, l).unwrap();
            assert!(homs.iter().any(|(fl, _)| *fl == EquivariantMap::identity(&abs.left)));
        }
        cuts.len()
    }

    #[test]
    fn views_agree_on_small_posets() {
        for p in [FinPoset::chain(3), FinPoset::antichain(3)] {
            let c = Arc::new(p.thin_category());
            assert_eq!(all_views_agree(&c, 1), p.dm_completion().cuts.len());
        }
        all_views_agree(&z4(), 2);
    }

    #[test]
    fn algebra_and_coalgebra_cuts() {
        let l = Limits::default();
        let c = Arc::new(FinPoset::chain(2).thin_category());
        let a = yoneda_left(&c, 0).unwrap();
        let free = crate::isbell::free_algebra(&a, l).unwrap();
        let cut = algebra_to_cut(&free, l).unwrap();
        assert!(check_absolute_cut(&cut, l).unwrap().pass());
        let co = crate::isbell::nucleus_to_coalgebra(&free, l).unwrap();
        let cut2 = coalgebra_to_cut(&co, l).unwrap();
        assert!(check_absolute_cut(&cut2, l).unwrap().pass());
    }

    #[test]
    fn broken_cut_is_rejected() {
        let c = Arc::new(FinPoset::chain(3).thin_category());
        let mut abs = simple_to_absolute(&representable_cut(&c, 1), Limits::default()).unwrap();
        abs.right = Action::empty(c.clone(), Variance::Right);
        assert!(!check_absolute_cut(&abs, Limits::default()).unwrap().pass());
        let mut abs = simple_to_absolute(&representable_cut(&c, 1), Limits::default()).unwrap();
        abs.left = yoneda_left(&c, 2).unwrap();
        assert!(!check_absolute_cut(&abs, Limits::default()).unwrap().pass());
    }
}
