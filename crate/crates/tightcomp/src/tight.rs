//! Tight diagrams and their colimits and limits.

use crate::action::{
    check_equivariant, enumerate_actions, equivariant_maps, find_isomorphism, fixed_points, loose_colimit, loose_limit,
    yoneda_left, yoneda_right, Action, EquivariantMap, Variance,
};
use crate::cuts::{AbsoluteCut, CutCoalgebra, CutSpaces};
use crate::error::{Error, Result};
use crate::fincat::{split_idempotent, Cat, Mor, Obj};
use crate::isbell::{kan_map, lan, ran, Kan};
use crate::report::{Checker, Report};
use crate::search::Limits;

/// `⟨⃖D, φ⟩` with `φ` an idempotent on the cocones `Λ⃖D`.
#[derive(Clone, Debug)]
pub struct LeftTightDiagram {
    pub diagram: Action,
    pub phi: EquivariantMap,
}

/// `⟨⃗D, κ⟩` with `κ` an idempotent on the cones `Ρ⃗D`.
#[derive(Clone, Debug)]
pub struct RightTightDiagram {
    pub diagram: Action,
    pub kappa: EquivariantMap,
}

impl LeftTightDiagram {
    /// `(∇x, id)`.
    pub fn representable(c: &Cat, x: Obj, limits: Limits) -> Result<LeftTightDiagram> {
        let diagram = yoneda_left(c, x)?;
        let phi = EquivariantMap::identity(&lan(&diagram, limits)?.action);
        Ok(LeftTightDiagram { diagram, phi })
    }

    pub fn identity(diagram: Action, limits: Limits) -> Result<LeftTightDiagram> {
        let phi = EquivariantMap::identity(&lan(&diagram, limits)?.action);
        Ok(LeftTightDiagram { diagram, phi })
    }
}

impl RightTightDiagram {
    /// `(Δx, id)`.
    pub fn representable(c: &Cat, x: Obj, limits: Limits) -> Result<RightTightDiagram> {
        let diagram = yoneda_right(c, x)?;
        let kappa = EquivariantMap::identity(&ran(&diagram, limits)?.action);
        Ok(RightTightDiagram { diagram, kappa })
    }

    pub fn identity(diagram: Action, limits: Limits) -> Result<RightTightDiagram> {
        let kappa = EquivariantMap::identity(&ran(&diagram, limits)?.action);
        Ok(RightTightDiagram { diagram, kappa })
    }
}

fn kan_of(x: &Action, limits: Limits) -> Result<Kan> {
    match x.variance() {
        Variance::Left => lan(x, limits),
        Variance::Right => ran(x, limits),
    }
}

/// Typing, idempotency, and the split image of the transposed idempotent.
fn check_tight(x: &Action, idem: &EquivariantMap, variance: Variance, limits: Limits) -> Result<Report> {
    if x.variance() != variance {
        return Err(Error::VarianceMismatch(format!("expected a {} diagram", variance.name())));
    }
    let k1 = kan_of(x, limits)?;
    let mut ck = Checker::new();
    if !ck.absorb(check_equivariant(&k1.action, &k1.action, idem)) {
        return Ok(ck.finish());
    }
    if !idem.is_idempotent() {
        return Err(Error::NotIdempotent("diagram idempotent".into()));
    }
    let k2 = kan_of(&k1.action, limits)?;
    let k_idem = kan_map(idem, &k2, &k2);
    let (fix, _) = k2.action.subaction(&fixed_points(&k_idem))?;
    if find_isomorphism(&fix, x, limits)?.is_none() {
        return Err(Error::SplitMismatch(format!(
            "fixed part has fibers {:?}, the diagram has {:?}",
            fix.sizes(),
            x.sizes()
        )));
    }
    ck.require(true, "split image", String::new);
    Ok(ck.finish())
}

pub fn check_tight_diagram(d: &LeftTightDiagram, limits: Limits) -> Result<Report> {
    check_tight(&d.diagram, &d.phi, Variance::Left, limits)
}

pub fn check_right_tight_diagram(d: &RightTightDiagram, limits: Limits) -> Result<Report> {
    check_tight(&d.diagram, &d.kappa, Variance::Right, limits)
}

/// Cocones at `c` fixed by `φ`, as families over the diagram's elements.
pub fn fixed_cocones(d: &LeftTightDiagram, c: Obj, limits: Limits) -> Result<Vec<Vec<Mor>>> {
    let la = lan(&d.diagram, limits)?;
    Ok(fixed_in(&la, &d.phi, c))
}

/// Cones at `c` fixed by `κ`.
pub fn fixed_cones(d: &RightTightDiagram, c: Obj, limits: Limits) -> Result<Vec<Vec<Mor>>> {
    let rb = ran(&d.diagram, limits)?;
    Ok(fixed_in(&rb, &d.kappa, c))
}

fn fixed_in(k: &Kan, idem: &EquivariantMap, c: Obj) -> Vec<Vec<Mor>> {
    (0..k.action.size(c)).filter(|&i| idem.apply(c, i) == i).map(|i| k.family(c, i).to_vec()).collect()
}

/// `(apex, universal family)` of a tight colimit or limit.
pub type TightCone = (Obj, Vec<Mor>);

/// Whether `f ↦ u·f` is a bijection from the homs at `a` onto the fixed
/// elements, at every object.
fn represents(k: &Kan, idem: &EquivariantMap, a: Obj, u: usize) -> bool {
    let act = &k.action;
    let cat = act.category();
    (0..cat.num_objects()).all(|c| {
        let hom = match act.variance() {
            Variance::Right => cat.hom(a, c),
            Variance::Left => cat.hom(c, a),
        };
        let fixed = (0..act.size(c)).filter(|&i| idem.apply(c, i) == i).count();
        if hom.len() != fixed {
            return false;
        }
        let mut seen = vec![false; act.size(c)];
        hom.iter().all(|&f| {
            let v = act.act(f, u);
            idem.apply(c, v) == v && !std::mem::replace(&mut seen[v], true)
        })
    })
}

fn representing(k: &Kan, idem: &EquivariantMap) -> Option<TightCone> {
    let cat = k.action.category();
    for a in 0..cat.num_objects() {
        for u in 0..k.action.size(a) {
            if idem.apply(a, u) == u && represents(k, idem, a, u) {
                return Some((a, k.family(a, u).to_vec()));
            }
        }
    }
    None
}

/// First `(a, u)` in canonical order representing the fixed cocones.
pub fn tight_colimit(d: &LeftTightDiagram, limits: Limits) -> Result<Option<TightCone>> {
    let la = lan(&d.diagram, limits)?;
    Ok(representing(&la, &d.phi))
}

/// First `(a, u)` in canonical order representing the fixed cones.
pub fn tight_limit(d: &RightTightDiagram, limits: Limits) -> Result<Option<TightCone>> {
    let rb = ran(&d.diagram, limits)?;
    Ok(representing(&rb, &d.kappa))
}

/// Verifies that `(a, u)` is fixed and represents the fixed cocones.
pub fn certify_tight_colimit(d: &LeftTightDiagram, witness: &TightCone, limits: Limits) -> Result<bool> {
    let la = lan(&d.diagram, limits)?;
    Ok(match la.index(witness.0, &witness.1) {
        Some(u) => d.phi.apply(witness.0, u) == u && represents(&la, &d.phi, witness.0, u),
        None => false,
    })
}

pub fn certify_tight_limit(d: &RightTightDiagram, witness: &TightCone, limits: Limits) -> Result<bool> {
    let rb = ran(&d.diagram, limits)?;
    Ok(match rb.index(witness.0, &witness.1) {
        Some(u) => d.kappa.apply(witness.0, u) == u && represents(&rb, &d.kappa, witness.0, u),
        None => false,
    })
}

/// Moves `φ` to an idempotent on the loose colimit and splits it in `C`.
pub fn tight_colimit_via_split(d: &LeftTightDiagram, limits: Limits) -> Result<TightCone> {
    let la = lan(&d.diagram, limits)?;
    let cat = d.diagram.category().clone();
    let (l, lambda) = loose_colimit(&d.diagram, limits)?.ok_or(Error::NoLooseColimit)?;
    let li = la.index(l, &lambda).expect("colimit cocone");
    let target = d.phi.apply(l, li);
    let e = *cat.hom(l, l).iter().find(|&&f| la.action.act(f, li) == target).expect("colimit bijection");
    let s = split_idempotent(&cat, e)?.ok_or(Error::NotSplittable)?;
    let u = la.action.act(s.q, li);
    Ok((s.object, la.family(s.object, u).to_vec()))
}

/// Dual of [`tight_colimit_via_split`].
pub fn tight_limit_via_split(d: &RightTightDiagram, limits: Limits) -> Result<TightCone> {
    let rb = ran(&d.diagram, limits)?;
    let cat = d.diagram.category().clone();
    let (l, lambda) = loose_limit(&d.diagram, limits)?.ok_or(Error::NoLooseLimit)?;
    let li = rb.index(l, &lambda).expect("limit cone");
    let target = d.kappa.apply(l, li);
    let e = *cat.hom(l, l).iter().find(|&&f| rb.action.act(f, li) == target).expect("limit bijection");
    let s = split_idempotent(&cat, e)?.ok_or(Error::NotSplittable)?;
    let u = rb.action.act(s.i, li);
    Ok((s.object, rb.family(s.object, u).to_vec()))
}

/// Left tight diagrams with fibers at most `cap`, one per diagram up to
/// isomorphism and per admissible idempotent.
pub fn enumerate_tight_diagrams(c: &Cat, cap: usize, limits: Limits) -> Result<Vec<LeftTightDiagram>> {
    let mut out = Vec::new();
    for d in enumerate_actions(c, Variance::Left, cap, limits)? {
        let la = lan(&d, limits)?;
        for phi in equivariant_maps(&la.action, &la.action, limits)? {
            if !phi.is_idempotent() {
                continue;
            }
            let td = LeftTightDiagram { diagram: d.clone(), phi };
            match check_tight_diagram(&td, limits) {
                Ok(r) if r.pass() => out.push(td),
                Ok(_) | Err(Error::SplitMismatch(_)) => {}
                Err(e) => return Err(e),
            }
        }
    }
    Ok(out)
}

/// Right tight diagrams with fibers at most `cap`.
pub fn enumerate_right_tight_diagrams(c: &Cat, cap: usize, limits: Limits) -> Result<Vec<RightTightDiagram>> {
    let mut out = Vec::new();
    for d in enumerate_actions(c, Variance::Right, cap, limits)? {
        let rb = ran(&d, limits)?;
        for kappa in equivariant_maps(&rb.action, &rb.action, limits)? {
            if !kappa.is_idempotent() {
                continue;
            }
            let td = RightTightDiagram { diagram: d.clone(), kappa };
            match check_right_tight_diagram(&td, limits) {
                Ok(r) if r.pass() => out.push(td),
                Ok(_) | Err(Error::SplitMismatch(_)) => {}
                Err(e) => return Err(e),
            }
        }
    }
    Ok(out)
}

/// `⋈x`: the cut `(∇x, Δx)` with identity idempotents.
pub fn embed_object(c: &Cat, x: Obj, limits: Limits) -> Result<AbsoluteCut> {
    if x >= c.num_objects() {
        return Err(Error::UnknownObject(x.to_string()));
    }
    let left = yoneda_left(c, x)?;
    let right = yoneda_right(c, x)?;
    let sp = CutSpaces::new(&left, &right, limits)?;
    Ok(AbsoluteCut {
        a_lower: EquivariantMap::identity(&sp.rb.action),
        a_upper: EquivariantMap::identity(&sp.la.action),
        phi_lower: EquivariantMap::identity(&sp.rla.action),
        phi_upper: EquivariantMap::identity(&sp.lrb.action),
        left,
        right,
    })
}

/// `(∇x, id)` as a cut-coalgebra.
pub fn representable_coalgebra(c: &Cat, x: Obj, limits: Limits) -> Result<CutCoalgebra> {
    let carrier = yoneda_left(c, x)?;
    let phi = EquivariantMap::identity(&lan(&carrier, limits)?.action);
    Ok(CutCoalgebra { carrier, phi })
}

/// A cut-coalgebra with its cocones precomputed.
struct Node<'a> {
    co: &'a CutCoalgebra,
    la: Kan,
}

impl<'a> Node<'a> {
    fn new(co: &'a CutCoalgebra, limits: Limits) -> Result<Node<'a>> {
        Ok(Node { co, la: lan(&co.carrier, limits)? })
    }

    /// `δ ↦ δ∘h` as a map `ΛX → ΛS`, for `h: S → X`.
    fn pull(&self, h: &EquivariantMap, source: &Kan) -> EquivariantMap {
        kan_map(h, source, &self.la)
    }

    /// Elements on which every cocone agrees with its `ξ`-image, i.e. the
    /// points `∇x → X` that are cut-coalgebra morphisms.
    fn stable(&self, x: Obj, t: usize) -> bool {
        let e = self.co.carrier.flat(x, t);
        let la = &self.la;
        (0..la.action.total()).all(|d| {
            let (y, i) = la.action.unflat(d);
            la.family(y, i)[e] == la.family(y, self.co.phi.apply(y, i))[e]
        })
    }
}

/// Tight cocones from `⟨D, φ⟩` into `(X, ξ)` inside cut-coalgebras: maps
/// `γ: D → X` with cut-coalgebra components such that `φ(δ∘γ) = δ∘γ` for
/// every `ξ`-fixed `δ`.
fn tight_cocones(d: &Action, ld: &Kan, phi: &EquivariantMap, x: &Node, limits: Limits) -> Result<Vec<EquivariantMap>> {
    let mut out = Vec::new();
    for g in equivariant_maps(d, &x.co.carrier, limits)? {
        let components_ok =
            (0..d.total()).all(|e| {
                let (y, i) = d.unflat(e);
                x.stable(y, g.apply(y, i))
            });
        if components_ok && is_tight(&g, ld, phi, x) {
            out.push(g);
        }
    }
    Ok(out)
}

fn is_tight(g: &EquivariantMap, ld: &Kan, phi: &EquivariantMap, x: &Node) -> bool {
    let pulled = x.pull(g, ld);
    (0..x.la.action.sizes().len()).all(|c| {
        (0..x.la.action.size(c)).all(|i| x.co.phi.apply(c, i) != i || {
            let v = pulled.apply(c, i);
            phi.apply(c, v) == v
        })
    })
}

fn coalgebra_homs(y: &Node, x: &Node, limits: Limits) -> Result<Vec<EquivariantMap>> {
    Ok(equivariant_maps(&y.co.carrier, &x.co.carrier, limits)?
        .into_iter()
        .filter(|h| crate::cuts::is_cut_coalgebra_morphism(h, &y.la, &y.co.phi, &x.la, &x.co.phi))
        .collect())
}

/// Universal property of `γ0: ⟨D, φ⟩ → (Y, ψ)` tested against each object
/// of `tests`: `h ↦ γ0;h` must biject coalgebra maps `Y → X` with tight cocones.
fn check_tight_cocone_against(
    d: &Action,
    phi: &EquivariantMap,
    apex: &CutCoalgebra,
    gamma0: &EquivariantMap,
    tests: &[CutCoalgebra],
    limits: Limits,
    ck: &mut Checker,
) -> Result<()> {
    let ld = lan(d, limits)?;
    let y = Node::new(apex, limits)?;
    let fine = (0..d.total()).all(|e| {
        let (c, i) = d.unflat(e);
        y.stable(c, gamma0.apply(c, i))
    });
    ck.require(fine, "cocone components", || "a component is not a cut-coalgebra morphism".into());
    ck.require(is_tight(gamma0, &ld, phi, &y), "cocone fixed", || "the cocone is not fixed by the idempotent".into());
    if !ck.ok() {
        return Ok(());
    }
    for (n, t) in tests.iter().enumerate() {
        let x = Node::new(t, limits)?;
        let mut cocones = tight_cocones(d, &ld, phi, &x, limits)?;
        let mut induced: Vec<EquivariantMap> =
            coalgebra_homs(&y, &x, limits)?.iter().map(|h| gamma0.then(h)).collect();
        let count = induced.len();
        induced.sort_by(|a, b| a.components.cmp(&b.components));
        induced.dedup();
        cocones.sort_by(|a, b| a.components.cmp(&b.components));
        if !ck.require(induced.len() == count && induced == cocones, "universality", || {
            format!("test object {n}: {count} maps against {} tight cocones", cocones.len())
        }) {
            break;
        }
    }
    Ok(())
}

/// The cut-coalgebra `(A, ⃗a)` of a cut is the tight colimit of
/// `⟨∇⃖A, ∇⃗a⟩`, with the identity as cocone, against every test object.
pub fn representable_generation_check(cut: &AbsoluteCut, tests: &[CutCoalgebra], limits: Limits) -> Result<Report> {
    let mut ck = Checker::new();
    let a = &cut.left;
    let phi = &cut.a_upper;
    let apex = CutCoalgebra { carrier: a.clone(), phi: phi.clone() };
    ck.absorb(crate::cuts::check_cut_coalgebra(&apex, limits)?);
    if !ck.ok() {
        return Ok(ck.finish());
    }
    let mut all = tests.to_vec();
    all.push(apex.clone());
    check_tight_cocone_against(a, phi, &apex, &EquivariantMap::identity(a), &all, limits, &mut ck)?;
    Ok(ck.finish())
}

/// `⋈` sends the tight colimit `(a, u)` of `d` to a tight colimit of the
/// image diagram, tested against `tests` and the representables.
pub fn tight_preservation_check(c: &Cat, d: &LeftTightDiagram, tests: &[CutCoalgebra], limits: Limits) -> Result<Report> {
    let mut ck = Checker::new();
    let Some((a, u)) = tight_colimit(d, limits)? else {
        ck.require(false, "tight colimit exists", || "the diagram has no tight colimit".into());
        return Ok(ck.finish());
    };
    let apex = representable_coalgebra(c, a, limits)?;
    // γ0: D → ∇a sends an element to its leg of the universal cocone.
    let ya = &apex.carrier;
    let dd = &d.diagram;
    let gamma0 = EquivariantMap {
        components: (0..dd.sizes().len())
            .map(|x| {
                (0..dd.size(x))
                    .map(|i| {
                        let m = u[dd.flat(x, i)];
                        (0..ya.size(x)).find(|&j| yoneda_morphism(c, a, x, j) == m).expect("leg") as u32
                    })
                    .collect()
            })
            .collect(),
    };
    let mut all = tests.to_vec();
    for x in 0..c.num_objects() {
        all.push(representable_coalgebra(c, x, limits)?);
    }
    check_tight_cocone_against(dd, &d.phi, &apex, &gamma0, &all, limits, &mut ck)?;
    Ok(ck.finish())
}

/// The morphism `x → a` behind element `j` of `∇a` at `x`.
fn yoneda_morphism(c: &Cat, a: Obj, x: Obj, j: usize) -> Mor {
    c.hom(x, a)[j]
}
