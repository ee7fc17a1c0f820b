//! Finite groups and monoids acting on finite sets.
//!
//! Elements are indices into `FinMonoid::elements`; `table[a][b] = a ⊙ b`.

use std::sync::Arc;

use crate::action::{enumerate_actions, find_isomorphism, Action, Variance};
use crate::error::{Error, Result};
use crate::fincat::{Cat, FinCategory, UnionFind};
use crate::isbell::{lan, monad_square};
use crate::search::{Limits, Problem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinMonoid {
    pub elements: Vec<String>,
    pub unit: usize,
    pub table: Vec<Vec<usize>>,
}

impl FinMonoid {
    pub fn new(elements: Vec<String>, unit: usize, table: Vec<Vec<usize>>) -> Result<FinMonoid> {
        let n = elements.len();
        if unit >= n {
            return Err(Error::UnknownElement(unit.to_string()));
        }
        if table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&v| v >= n)) {
            return Err(Error::TypeMismatch(format!("operation table must be {n}×{n} over the elements")));
        }
        for a in 0..n {
            if table[unit][a] != a || table[a][unit] != a {
                return Err(Error::UnitViolation(elements[a].clone()));
            }
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::AssociativityViolation(
                            elements[a].clone(),
                            elements[b].clone(),
                            elements[c].clone(),
                        ));
                    }
                }
            }
        }
        Ok(FinMonoid { elements, unit, table })
    }

    /// `ℤ_n` with unit `0`.
    pub fn cyclic(n: usize) -> FinMonoid {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FinMonoid { elements: (0..n).map(|i| i.to_string()).collect(), unit: 0, table }
    }

    /// `S₃` as permutations of `{0,1,2}`, `a ⊙ b = a after b`.
    pub fn symmetric3() -> FinMonoid {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
        let idx = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
        let table = perms.iter().map(|a| perms.iter().map(|b| idx([a[b[0]], a[b[1]], a[b[2]]])).collect()).collect();
        let names = perms.iter().map(|p| format!("{}{}{}", p[0], p[1], p[2])).collect();
        FinMonoid { elements: names, unit: 0, table }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> Option<usize> {
        (0..self.len()).find(|&b| self.table[a][b] == self.unit && self.table[b][a] == self.unit)
    }

    pub fn is_group(&self) -> bool {
        (0..self.len()).all(|a| self.inverse(a).is_some())
    }

    pub fn require_group(&self) -> Result<()> {
        match (0..self.len()).find(|&a| self.inverse(a).is_none()) {
            Some(a) => Err(Error::NotAGroup(format!("{} has no inverse", self.elements[a]))),
            None => Ok(()),
        }
    }

    pub fn category(&self, object: &str) -> Result<Cat> {
        Ok(Arc::new(FinCategory::from_monoid(object, &self.elements, self.unit, &self.table)?))
    }
}

/// A monoid action on `{0, …, size-1}`: `act[a][x]` is `a∗x` (left) or `x!a` (right).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GAction {
    pub monoid: FinMonoid,
    pub variance: Variance,
    pub size: usize,
    pub act: Vec<Vec<usize>>,
}

impl GAction {
    pub fn new(monoid: FinMonoid, variance: Variance, size: usize, act: Vec<Vec<usize>>) -> Result<GAction> {
        let m = &monoid;
        if act.len() != m.len() || act.iter().any(|r| r.len() != size || r.iter().any(|&v| v >= size)) {
            return Err(Error::TypeMismatch("action table must have one row per element".into()));
        }
        for x in 0..size {
            if act[m.unit][x] != x {
                return Err(Error::FunctorialityViolation(format!("unit moves {x}")));
            }
            for a in 0..m.len() {
                for b in 0..m.len() {
                    let ab = m.op(a, b);
                    let want = match variance {
                        Variance::Left => act[a][act[b][x]],
                        Variance::Right => act[b][act[a][x]],
                    };
                    if act[ab][x] != want {
                        return Err(Error::FunctorialityViolation(format!(
                            "({} ⊙ {}) at {x}",
                            m.elements[a], m.elements[b]
                        )));
                    }
                }
            }
        }
        Ok(GAction { monoid, variance, size, act })
    }

    /// The monoid acting on itself by multiplication.
    pub fn regular(m: &FinMonoid, variance: Variance) -> GAction {
        let act = (0..m.len())
            .map(|a| {
                (0..m.len())
                    .map(|x| match variance {
                        Variance::Left => m.op(a, x),
                        Variance::Right => m.op(x, a),
                    })
                    .collect()
            })
            .collect();
        GAction { monoid: m.clone(), variance, size: m.len(), act }
    }

    /// `n` disjoint copies of the regular action; element `(k, a)` sits at `k·|M| + a`.
    pub fn free(m: &FinMonoid, variance: Variance, n: usize) -> GAction {
        let r = GAction::regular(m, variance);
        let k = m.len();
        let act = (0..k).map(|a| (0..n * k).map(|x| (x / k) * k + r.act[a][x % k]).collect()).collect();
        GAction { monoid: m.clone(), variance, size: n * k, act }
    }

    /// `M` acting trivially on `n` points.
    pub fn trivial(m: &FinMonoid, variance: Variance, n: usize) -> GAction {
        GAction { monoid: m.clone(), variance, size: n, act: vec![(0..n).collect(); m.len()] }
    }

    pub fn apply(&self, a: usize, x: usize) -> usize {
        self.act[a][x]
    }

    /// Reads an action over the one-object category of `m`.
    pub fn from_action(m: &FinMonoid, a: &Action) -> Result<GAction> {
        if a.sizes().len() != 1 {
            return Err(Error::TypeMismatch("expected a one-object base".into()));
        }
        let act = (0..m.len()).map(|e| a.table(FinCategory::monoid_morphism(m.unit, e)).iter().map(|&v| v as usize).collect()).collect();
        GAction::new(m.clone(), a.variance(), a.size(0), act)
    }

    /// The same action over the one-object category of the monoid.
    pub fn to_action(&self, cat: &Cat) -> Result<Action> {
        let m = &self.monoid;
        let tables = (0..m.len())
            .map(|f| self.act[FinCategory::monoid_element(m.unit, f)].iter().map(|&v| v as u32).collect())
            .collect();
        Action::from_tables(cat.clone(), self.variance, vec![self.size], tables)
    }
}

/// Orbit partition (connected components), classes sorted by least element.
pub fn orbits(x: &GAction) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::new(x.size);
    for row in &x.act {
        for (p, &q) in row.iter().enumerate() {
            uf.union(p, q);
        }
    }
    uf.classes()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FreenessWitness {
    /// `a ≠ ι` fixes `x`.
    Stabilizer { a: usize, x: usize },
    /// `a∗x = b∗x` with `a ≠ b`.
    NotCancellable { a: usize, b: usize, x: usize },
    /// The orbit has no element generating it freely.
    NoGenerator { orbit: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Freeness {
    pub free: bool,
    pub witness: Option<FreenessWitness>,
}

/// Freeness with a witness when it fails: stabilizers first, then
/// cancellability, then existence of a generator in each orbit.
pub fn is_free(x: &GAction) -> Freeness {
    let m = &x.monoid;
    let fail = |w| Freeness { free: false, witness: Some(w) };
    for p in 0..x.size {
        for a in 0..m.len() {
            if a != m.unit && x.apply(a, p) == p {
                return fail(FreenessWitness::Stabilizer { a, x: p });
            }
        }
    }
    for p in 0..x.size {
        for a in 0..m.len() {
            for b in a + 1..m.len() {
                if x.apply(a, p) == x.apply(b, p) {
                    return fail(FreenessWitness::NotCancellable { a, b, x: p });
                }
            }
        }
    }
    for (k, orbit) in orbits(x).iter().enumerate() {
        let generates = |g: usize| {
            let mut hit = vec![false; x.size];
            (0..m.len()).for_each(|a| hit[x.apply(a, g)] = true);
            orbit.iter().all(|&p| hit[p]) && orbit.len() == m.len()
        };
        if !orbit.iter().any(|&g| generates(g)) {
            return fail(FreenessWitness::NoGenerator { orbit: k });
        }
    }
    Freeness { free: true, witness: None }
}

/// Least generator of each orbit of a free action.
fn generators(x: &GAction) -> Vec<usize> {
    let m = &x.monoid;
    orbits(x)
        .iter()
        .map(|o| {
            *o.iter()
                .find(|&&g| {
                    let mut img: Vec<usize> = (0..m.len()).map(|a| x.apply(a, g)).collect();
                    img.sort_unstable();
                    img.dedup();
                    img.len() == o.len()
                })
                .expect("free orbit")
        })
        .collect()
}

/// Tuples in `M^n` in mixed-radix order, first coordinate most significant.
fn tuples(k: usize, n: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = k.checked_pow(n as u32).unwrap_or(usize::MAX);
    (0..total).map(move |mut i| {
        let mut v = vec![0; n];
        for slot in v.iter_mut().rev() {
            *slot = i % k;
            i /= k;
        }
        v
    })
}

fn index_of(k: usize, v: &[usize]) -> usize {
    v.iter().fold(0, |acc, &d| acc * k + d)
}

fn power_size(k: usize, n: usize, limits: Limits) -> Result<usize> {
    match k.checked_pow(n as u32) {
        Some(t) if t <= limits.node_cap => Ok(t),
        _ => Err(Error::SizeLimit(limits.node_cap)),
    }
}

/// `G^{X_o}` with `(h!a)_o = h_o ⊙ a` when `x` is free; empty otherwise.
pub fn group_lan(x: &GAction) -> Result<GAction> {
    group_kan(x, Variance::Left, Limits::default())
}

/// `G^{Y_o}` with `(a∗h)_o = a ⊙ h_o` when `y` is free; empty otherwise.
pub fn group_ran(y: &GAction) -> Result<GAction> {
    group_kan(y, Variance::Right, Limits::default())
}

fn group_kan(x: &GAction, expect: Variance, limits: Limits) -> Result<GAction> {
    let m = &x.monoid;
    m.require_group()?;
    if x.variance != expect {
        return Err(Error::VarianceMismatch(format!("expected a {} action", expect.name())));
    }
    let out_var = expect.flip();
    if !is_free(x).free {
        return Ok(GAction { monoid: m.clone(), variance: out_var, size: 0, act: vec![Vec::new(); m.len()] });
    }
    let n = orbits(x).len();
    let k = m.len();
    let size = power_size(k, n, limits)?;
    let act = (0..k)
        .map(|a| {
            tuples(k, n)
                .map(|h| {
                    let moved: Vec<usize> = h
                        .iter()
                        .map(|&v| match out_var {
                            Variance::Right => m.op(v, a),
                            Variance::Left => m.op(a, v),
                        })
                        .collect();
                    index_of(k, &moved)
                })
                .collect()
        })
        .collect();
    Ok(GAction { monoid: m.clone(), variance: out_var, size, act })
}

/// The free-action decomposition `X ≅ G × X_o`: `(a, o) ↦ a∗•_o`.
pub fn decompose_free(x: &GAction) -> Result<Vec<Vec<usize>>> {
    let f = is_free(x);
    if !f.free {
        return Err(Error::NotFree(format!("{:?}", f.witness)));
    }
    let m = &x.monoid;
    Ok(generators(x).iter().map(|&g| (0..m.len()).map(|a| x.apply(a, g)).collect()).collect())
}

/// Homogeneous coordinates of a ray.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ray(pub Vec<usize>);

/// Canonical representative of `v` modulo right scalar multiplication:
/// the first coordinate becomes `ι`.
pub fn normalize_ray(g: &FinMonoid, v: &[usize]) -> Ray {
    match v.first() {
        None => Ray(Vec::new()),
        Some(&v0) => {
            let inv = g.inverse(v0).expect("group element");
            Ray(v.iter().map(|&c| g.op(c, inv)).collect())
        }
    }
}

/// Dual normalization modulo left scalar multiplication.
pub fn normalize_ray_left(g: &FinMonoid, v: &[usize]) -> Ray {
    match v.first() {
        None => Ray(Vec::new()),
        Some(&v0) => {
            let inv = g.inverse(v0).expect("group element");
            Ray(v.iter().map(|&c| g.op(inv, c)).collect())
        }
    }
}

/// `G^n` modulo right scalar multiplication, in canonical order.
pub fn rays(g: &FinMonoid, n: usize, limits: Limits) -> Result<Vec<Ray>> {
    g.require_group()?;
    if n == 0 {
        return Ok(vec![Ray(Vec::new())]);
    }
    power_size(g.len(), n - 1, limits)?;
    Ok(tuples(g.len(), n - 1)
        .map(|t| {
            let mut v = vec![g.unit];
            v.extend(t);
            Ray(v)
        })
        .collect())
}

/// Rays of a free left action, one per orbit coordinate.
pub fn projective_rays(x: &GAction) -> Result<Vec<Ray>> {
    let f = is_free(x);
    if !f.free {
        return Err(Error::NotFree(format!("{:?}", f.witness)));
    }
    rays(&x.monoid, orbits(x).len(), Limits::default())
}

/// Rays over a monoid as whole classes of the equivalence generated by
/// `v ~ v ⊙ a`, each sorted, listed by least member.
pub fn monoid_ray_classes(m: &FinMonoid, n: usize, limits: Limits) -> Result<Vec<Vec<Vec<usize>>>> {
    let k = m.len();
    let total = power_size(k, n, limits)?;
    let all: Vec<Vec<usize>> = tuples(k, n).collect();
    let mut uf = UnionFind::new(total);
    for (i, v) in all.iter().enumerate() {
        for a in 0..k {
            let w: Vec<usize> = v.iter().map(|&c| m.op(c, a)).collect();
            uf.union(i, index_of(k, &w));
        }
    }
    Ok(uf.classes().into_iter().map(|c| c.into_iter().map(|i| all[i].clone()).collect()).collect())
}

/// `A → G×B` as `x ↦ (alpha[x], f[x])`, or `A → B×G` as `x ↦ (f[x], alpha[x])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KleisliMorphism {
    pub source: usize,
    pub target: usize,
    pub f: Vec<usize>,
    pub alpha: Vec<usize>,
}

impl KleisliMorphism {
    /// `⟨const ι, id⟩`.
    pub fn identity(g: &FinMonoid, n: usize) -> KleisliMorphism {
        KleisliMorphism { source: n, target: n, f: (0..n).collect(), alpha: vec![g.unit; n] }
    }

    pub fn new(source: usize, target: usize, f: Vec<usize>, alpha: Vec<usize>) -> Result<KleisliMorphism> {
        if f.len() != source || alpha.len() != source || f.iter().any(|&y| y >= target) {
            return Err(Error::TypeMismatch("Kleisli morphism components".into()));
        }
        Ok(KleisliMorphism { source, target, f, alpha })
    }
}

/// `⟨φ,f⟩ ⊡ ⟨ψ,g⟩ = ⟨φ ⊙ (f•ψ), f•g⟩` for `(G×)`.
pub fn kleisli_compose(g: &FinMonoid, m1: &KleisliMorphism, m2: &KleisliMorphism) -> Result<KleisliMorphism> {
    if m1.target != m2.source {
        return Err(Error::TypeMismatch(format!("{} ≠ {}", m1.target, m2.source)));
    }
    let f = m1.f.iter().map(|&y| m2.f[y]).collect();
    let alpha = (0..m1.source).map(|x| g.op(m1.alpha[x], m2.alpha[m1.f[x]])).collect();
    Ok(KleisliMorphism { source: m1.source, target: m2.target, f, alpha })
}

/// `⟨t,β⟩ ⊡ ⟨u,γ⟩ = ⟨t•u, (t•γ) ⊙ β⟩` for `(×G)`.
pub fn kleisli_compose_right(g: &FinMonoid, m1: &KleisliMorphism, m2: &KleisliMorphism) -> Result<KleisliMorphism> {
    if m1.target != m2.source {
        return Err(Error::TypeMismatch(format!("{} ≠ {}", m1.target, m2.source)));
    }
    let f = m1.f.iter().map(|&y| m2.f[y]).collect();
    let alpha = (0..m1.source).map(|x| g.op(m2.alpha[m1.f[x]], m1.alpha[x])).collect();
    Ok(KleisliMorphism { source: m1.source, target: m2.target, f, alpha })
}

/// The `⊛` functor on `(G×)`-morphisms: `A → G×B` becomes `B^⊛ → A^⊛`,
/// `⟦k⟧ ↦ ⟦α_x ⊙ k_{f(x)}⟧_x`, with trivial group part.
pub fn kleisli_lan(g: &FinMonoid, m: &KleisliMorphism, limits: Limits) -> Result<KleisliMorphism> {
    let src = rays(g, m.target, limits)?;
    let tgt = rays(g, m.source, limits)?;
    let f = src
        .iter()
        .map(|k| {
            let v: Vec<usize> = (0..m.source).map(|x| g.op(m.alpha[x], k.0[m.f[x]])).collect();
            let r = normalize_ray(g, &v);
            tgt.binary_search(&r).expect("normalized ray")
        })
        .collect();
    Ok(KleisliMorphism { source: src.len(), target: tgt.len(), f, alpha: vec![g.unit; src.len()] })
}

/// The `⊛` functor on `(×G)`-morphisms: `⟦k⟧ ↦ ⟦k_{t(x)} ⊙ β_x⟧_x`.
pub fn kleisli_ran(g: &FinMonoid, m: &KleisliMorphism, limits: Limits) -> Result<KleisliMorphism> {
    let src = rays(g, m.target, limits)?;
    let tgt = rays(g, m.source, limits)?;
    let f = src
        .iter()
        .map(|k| {
            let v: Vec<usize> = (0..m.source).map(|x| g.op(k.0[m.f[x]], m.alpha[x])).collect();
            let r = normalize_ray_left(g, &v);
            tgt.binary_search(&r).expect("normalized ray")
        })
        .collect();
    Ok(KleisliMorphism { source: src.len(), target: tgt.len(), f, alpha: vec![g.unit; src.len()] })
}

/// `A ↦ A^⊛⊛` on `(G×)`-morphisms: `⊛` applied twice, covariant.
pub fn kleisli_monad(g: &FinMonoid, m: &KleisliMorphism, limits: Limits) -> Result<KleisliMorphism> {
    let once = kleisli_lan(g, m, limits)?;
    kleisli_lan(g, &once, limits)
}

/// `X^⊛ = {h ∈ M^X | h_{a∗x} = a ⊙ h_x}` with `(h!b)_x = h_x ⊙ b`; elements
/// listed lexicographically, the table indexed the same way.
pub fn monoid_lan(x: &GAction, limits: Limits) -> Result<(Vec<Vec<usize>>, GAction)> {
    let m = &x.monoid;
    if x.variance != Variance::Left {
        return Err(Error::VarianceMismatch("monoid_lan takes a left action".into()));
    }
    let k = m.len();
    let mut p = Problem::new(vec![(0..k as u32).collect(); x.size]);
    for a in 0..k {
        let t = p.add_table((0..k).map(|v| m.op(a, v) as u32).collect());
        for y in 0..x.size {
            p.add_edge(y, x.apply(a, y), t);
        }
    }
    let carrier: Vec<Vec<usize>> =
        p.solve_all(limits)?.into_iter().map(|s| s.into_iter().map(|v| v as usize).collect()).collect();
    let pos = |h: &Vec<usize>| carrier.binary_search(h).expect("closed under the action");
    let act = (0..k)
        .map(|b| carrier.iter().map(|h| pos(&h.iter().map(|&v| m.op(v, b)).collect())).collect())
        .collect();
    let out = GAction { monoid: m.clone(), variance: Variance::Right, size: carrier.len(), act };
    Ok((carrier, out))
}

/// `a∗x ↦ x!a⁻¹`: left and right group actions correspond.
pub fn twist(x: &GAction) -> Result<GAction> {
    let g = &x.monoid;
    g.require_group()?;
    let act = (0..g.len()).map(|a| x.act[g.inverse(a).unwrap()].clone()).collect();
    Ok(GAction { monoid: g.clone(), variance: x.variance.flip(), size: x.size, act })
}

/// One row of the closed-form table for `n` free orbits over ℤ₄.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeRow {
    pub orbits: usize,
    pub lan_size: usize,
    pub lan_orbits: usize,
    pub expected_size: usize,
    pub expected_orbits: usize,
    pub square_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Z4Demo {
    pub free_rows: Vec<FreeRow>,
    /// Non-free actions with at most six points, all with empty `Λ`.
    pub non_free_checked: usize,
    pub non_free_lan_empty: bool,
    /// `ΡΛ` of every non-free action is the one-point action.
    pub non_free_square_terminal: bool,
    /// Left and right actions with at most six points, and whether the
    /// inverse twist matches them up bijectively.
    pub left_actions: usize,
    pub right_actions: usize,
    pub twist_bijective: bool,
    /// `group_lan` agrees with the generic `Λ` on every action checked.
    pub group_lan_agrees: bool,
}

impl Z4Demo {
    pub fn pass(&self) -> bool {
        self.free_rows
            .iter()
            .all(|r| r.lan_size == r.expected_size && r.lan_orbits == r.expected_orbits)
            && self.non_free_lan_empty
            && self.non_free_square_terminal
            && self.twist_bijective
            && self.group_lan_agrees
    }
}

/// The ℤ₄ computations: closed forms for `Λ` of free actions, `Λ` and `ΡΛ`
/// of non-free ones, and the left/right correspondence by inversion.
pub fn z4_demo(limits: Limits) -> Result<Z4Demo> {
    let g = FinMonoid::cyclic(4);
    let cat = g.category("o")?;
    let mut free_rows = Vec::new();
    for n in 1..=3 {
        let x = GAction::free(&g, Variance::Left, n);
        let la = lan(&x.to_action(&cat)?, limits)?;
        let lx = GAction::from_action(&g, &la.action)?;
        let square = if n <= 2 { monad_square(&x.to_action(&cat)?, limits)?.total() } else { 0 };
        free_rows.push(FreeRow {
            orbits: n,
            lan_size: lx.size,
            lan_orbits: orbits(&lx).len(),
            expected_size: 4usize.pow(n as u32),
            expected_orbits: 4usize.pow(n as u32 - 1),
            square_size: square,
        });
    }
    let lefts = enumerate_actions(&cat, Variance::Left, 6, limits)?;
    let rights = enumerate_actions(&cat, Variance::Right, 6, limits)?;
    let (mut non_free_checked, mut empty, mut terminal, mut agrees) = (0, true, true, true);
    for a in &lefts {
        let x = GAction::from_action(&g, a)?;
        let la = lan(a, limits)?;
        let gl = group_lan(&x)?.to_action(&cat)?;
        agrees &= find_isomorphism(&gl, &la.action, limits)?.is_some();
        if !is_free(&x).free {
            non_free_checked += 1;
            empty &= la.action.total() == 0;
            terminal &= monad_square(a, limits)?.total() == 1;
        }
    }
    // Each left action twists to exactly one right action up to isomorphism.
    let mut hit = vec![false; rights.len()];
    let mut bijective = lefts.len() == rights.len();
    for a in &lefts {
        let t = twist(&GAction::from_action(&g, a)?)?.to_action(&cat)?;
        let matches: Vec<usize> =
            (0..rights.len()).filter(|&j| find_isomorphism(&t, &rights[j], limits).ok().flatten().is_some()).collect();
        bijective &= matches.len() == 1 && !std::mem::replace(&mut hit[matches[0]], true);
    }
    Ok(Z4Demo {
        free_rows,
        non_free_checked,
        non_free_lan_empty: empty,
        non_free_square_terminal: terminal,
        left_actions: lefts.len(),
        right_actions: rights.len(),
        twist_bijective: bijective,
        group_lan_agrees: agrees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parity() -> GAction {
        let g = FinMonoid::cyclic(4);
        GAction::new(g, Variance::Left, 2, (0..4).map(|a| (0..2).map(|x| (x + a) % 2).collect()).collect()).unwrap()
    }

    #[test]
    fn freeness_witnesses() {
        let g = FinMonoid::cyclic(4);
        let reg = GAction::regular(&g, Variance::Left);
        assert_eq!(orbits(&reg).len(), 1);
        assert!(is_free(&reg).free);
        let pt = GAction::trivial(&g, Variance::Left, 1);
        assert_eq!(is_free(&pt).witness, Some(FreenessWitness::Stabilizer { a: 1, x: 0 }));
        let p = parity();
        assert_eq!(orbits(&p).len(), 1);
        assert_eq!(is_free(&p).witness, Some(FreenessWitness::Stabilizer { a: 2, x: 0 }));
    }

    #[test]
    fn lan_sizes() {
        let g = FinMonoid::cyclic(4);
        assert_eq!(group_lan(&GAction::regular(&g, Variance::Left)).unwrap().size, 4);
        assert_eq!(group_lan(&GAction::free(&g, Variance::Left, 2)).unwrap().size, 16);
        assert_eq!(group_lan(&parity()).unwrap().size, 0);
        assert_eq!(group_ran(&GAction::free(&g, Variance::Right, 2)).unwrap().size, 16);
    }

    #[test]
    fn ray_counts() {
        let g = FinMonoid::cyclic(4);
        assert_eq!(projective_rays(&GAction::regular(&g, Variance::Left)).unwrap().len(), 1);
        assert_eq!(projective_rays(&GAction::free(&g, Variance::Left, 2)).unwrap().len(), 4);
        assert!(matches!(projective_rays(&parity()), Err(Error::NotFree(_))));
        let v = vec![3, 1, 2];
        for a in 0..4 {
            let w: Vec<usize> = v.iter().map(|&c| g.op(c, a)).collect();
            assert_eq!(normalize_ray(&g, &w), normalize_ray(&g, &v));
        }
    }

    #[test]
    fn monoid_lan_examples() {
        let m = FinMonoid::new(vec!["i".into(), "e".into()], 0, vec![vec![0, 1], vec![1, 1]]).unwrap();
        let pt = GAction::trivial(&m, Variance::Left, 1);
        assert_eq!(monoid_lan(&pt, Limits::default()).unwrap().0, vec![vec![1]]);
        let reg = GAction::regular(&m, Variance::Left);
        assert_eq!(monoid_lan(&reg, Limits::default()).unwrap().1.size, 2);
        assert_eq!(monoid_ray_classes(&m, 1, Limits::default()).unwrap().len(), 1);
    }

    #[test]
    fn kleisli_sizes() {
        let g = FinMonoid::cyclic(4);
        let l = Limits::default();
        let id1 = KleisliMorphism::identity(&g, 1);
        assert_eq!(kleisli_monad(&g, &id1, l).unwrap().source, 1);
        let id2 = KleisliMorphism::identity(&g, 2);
        let once = kleisli_lan(&g, &id2, l).unwrap();
        assert_eq!(once.source, 4);
        assert_eq!(once.f, vec![0, 1, 2, 3]);
        assert_eq!(kleisli_monad(&g, &id2, l).unwrap().source, 64);
    }

    #[test]
    fn demo_passes() {
        let d = z4_demo(Limits::default()).unwrap();
        assert!(d.pass(), "{d:?}");
        assert_eq!(d.free_rows[0].square_size, 4);
        assert_eq!(d.free_rows[1].square_size, 4usize.pow(4));
    }
}
