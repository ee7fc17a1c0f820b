//! Left and right actions of a finite category, stored as transition tables.
//!
//! Every morphism `f` has a table between two fibers. For a left action the
//! table runs from the fiber over `cod f` to the fiber over `dom f`
//! (`s ↦ f∗s`); for a right action it runs from `dom f` to `cod f`
//! (`u ↦ u!f`). A right action of `C` is the same data as a left action of
//! `C^op`.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::{Cat, FinCategory, Functor, Mor, Obj, UnionFind};
use crate::report::{Checker, Report};
use crate::search::{Limits, Problem, NONE};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variance {
    Left,
    Right,
}

impl Variance {
    pub fn flip(self) -> Variance {
        match self {
            Variance::Left => Variance::Right,
            Variance::Right => Variance::Left,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Variance::Left => "left",
            Variance::Right => "right",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Action {
    category: Cat,
    variance: Variance,
    sizes: Vec<usize>,
    offsets: Vec<usize>,
    trans: Vec<Vec<u32>>,
    labels: Option<Vec<Vec<String>>>,
}

pub type LeftAction = Action;
pub type RightAction = Action;

impl PartialEq for Action {
    fn eq(&self, other: &Self) -> bool {
        self.category == other.category
            && self.variance == other.variance
            && self.sizes == other.sizes
            && self.trans == other.trans
    }
}

impl Eq for Action {}

impl Action {
    /// Builds an action from tables for every morphism and checks functoriality.
    pub fn from_tables(category: Cat, variance: Variance, sizes: Vec<usize>, trans: Vec<Vec<u32>>) -> Result<Action> {
        let a = Action::unchecked(category, variance, sizes, trans)?;
        a.check_functorial()?;
        Ok(a)
    }

    /// Extends tables given on the generators of the base to all morphisms.
    pub fn from_generators(
        category: Cat,
        variance: Variance,
        sizes: Vec<usize>,
        gen_tables: &[Vec<u32>],
    ) -> Result<Action> {
        let trans = extend_generators(&category, variance, &sizes, gen_tables);
        Action::from_tables(category, variance, sizes, trans)
    }

    fn unchecked(category: Cat, variance: Variance, sizes: Vec<usize>, trans: Vec<Vec<u32>>) -> Result<Action> {
        if sizes.len() != category.num_objects() || trans.len() != category.num_morphisms() {
            return Err(Error::FiberMismatch("tables do not match the base category".into()));
        }
        let mut offsets = Vec::with_capacity(sizes.len() + 1);
        let mut acc = 0;
        for &s in &sizes {
            offsets.push(acc);
            acc += s;
        }
        offsets.push(acc);
        let a = Action { category, variance, sizes, offsets, trans, labels: None };
        for f in 0..a.category.num_morphisms() {
            let (src, tgt) = (a.src_obj(f), a.tgt_obj(f));
            let t = &a.trans[f];
            if t.len() != a.sizes[src] || t.iter().any(|&v| v as usize >= a.sizes[tgt]) {
                return Err(Error::FiberMismatch(format!(
                    "table of {} does not map the fiber over {} into the fiber over {}",
                    a.category.morphism_name(f),
                    a.category.object_name(src),
                    a.category.object_name(tgt)
                )));
            }
        }
        Ok(a)
    }

    fn check_functorial(&self) -> Result<()> {
        let c = &self.category;
        for x in 0..c.num_objects() {
            let t = &self.trans[c.identity(x)];
            if t.iter().enumerate().any(|(i, &v)| v as usize != i) {
                return Err(Error::FunctorialityViolation(format!("identity at {} acts non-trivially", c.object_name(x))));
            }
        }
        for f in 0..c.num_morphisms() {
            for g in c.out_of(c.cod(f)) {
                let fg = c.comp(f, g);
                let (first, second) = match self.variance {
                    Variance::Left => (g, f),
                    Variance::Right => (f, g),
                };
                let ok = (0..self.sizes[self.src_obj(first)])
                    .all(|s| self.trans[second][self.trans[first][s] as usize] == self.trans[fg][s]);
                if !ok {
                    return Err(Error::FunctorialityViolation(format!(
                        "action of {} differs from the composite of {} and {}",
                        c.morphism_name(fg),
                        c.morphism_name(f),
                        c.morphism_name(g)
                    )));
                }
            }
        }
        Ok(())
    }

    /// The action with every fiber empty.
    pub fn empty(category: Cat, variance: Variance) -> Action {
        let sizes = vec![0; category.num_objects()];
        let trans = vec![Vec::new(); category.num_morphisms()];
        Action::unchecked(category, variance, sizes, trans).expect("empty action")
    }

    /// The action with a single point over every object.
    pub fn terminal(category: Cat, variance: Variance) -> Action {
        let sizes = vec![1; category.num_objects()];
        let trans = vec![vec![0]; category.num_morphisms()];
        Action::unchecked(category, variance, sizes, trans).expect("terminal action")
    }

    pub fn with_labels(mut self, labels: Vec<Vec<String>>) -> Action {
        debug_assert!(labels.iter().zip(&self.sizes).all(|(l, &s)| l.len() == s));
        self.labels = Some(labels);
        self
    }

    pub fn category(&self) -> &Cat {
        &self.category
    }

    pub fn variance(&self) -> Variance {
        self.variance
    }

    pub fn size(&self, x: Obj) -> usize {
        self.sizes[x]
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn total(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    pub fn offset(&self, x: Obj) -> usize {
        self.offsets[x]
    }

    pub fn flat(&self, x: Obj, i: usize) -> usize {
        self.offsets[x] + i
    }

    /// Object and local index of a flat element.
    pub fn unflat(&self, e: usize) -> (Obj, usize) {
        let x = self.offsets.partition_point(|&o| o <= e) - 1;
        (x, e - self.offsets[x])
    }

    /// Object whose fiber is the domain of the table of `f`.
    pub fn src_obj(&self, f: Mor) -> Obj {
        match self.variance {
            Variance::Left => self.category.cod(f),
            Variance::Right => self.category.dom(f),
        }
    }

    pub fn tgt_obj(&self, f: Mor) -> Obj {
        match self.variance {
            Variance::Left => self.category.dom(f),
            Variance::Right => self.category.cod(f),
        }
    }

    pub fn table(&self, f: Mor) -> &[u32] {
        &self.trans[f]
    }

    pub fn tables(&self) -> &[Vec<u32>] {
        &self.trans
    }

    /// `f∗i` for a left action, `i!f` for a right action.
    pub fn act(&self, f: Mor, i: usize) -> usize {
        self.trans[f][i] as usize
    }

    pub fn labels(&self) -> Option<&Vec<Vec<String>>> {
        self.labels.as_ref()
    }

    pub fn label(&self, x: Obj, i: usize) -> String {
        match &self.labels {
            Some(l) => l[x][i].clone(),
            None => i.to_string(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.total() == 0
    }

    /// The same data read as an action of the opposite category.
    pub fn over_opposite(&self, op: &Cat) -> Action {
        Action {
            category: op.clone(),
            variance: self.variance.flip(),
            sizes: self.sizes.clone(),
            offsets: self.offsets.clone(),
            trans: self.trans.clone(),
            labels: self.labels.clone(),
        }
    }

    /// Flat encoding of sizes and tables; equal encodings mean equal actions.
    pub fn encode(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self.sizes.iter().map(|&s| s as u32).collect();
        for t in &self.trans {
            out.extend_from_slice(t);
        }
        out
    }

    /// Closed subset as a sub-action together with its inclusion.
    pub fn subaction(&self, keep: &[Vec<bool>]) -> Result<(Action, EquivariantMap)> {
        let mut index: Vec<Vec<u32>> = Vec::with_capacity(self.sizes.len());
        let mut incl: Vec<Vec<u32>> = Vec::with_capacity(self.sizes.len());
        for (x, k) in keep.iter().enumerate() {
            let mut idx = vec![NONE; self.sizes[x]];
            let mut inc = Vec::new();
            for i in 0..self.sizes[x] {
                if k[i] {
                    idx[i] = inc.len() as u32;
                    inc.push(i as u32);
                }
            }
            index.push(idx);
            incl.push(inc);
        }
        let mut trans = Vec::with_capacity(self.trans.len());
        for f in 0..self.trans.len() {
            let (src, tgt) = (self.src_obj(f), self.tgt_obj(f));
            let mut t = Vec::with_capacity(incl[src].len());
            for &i in &incl[src] {
                let j = index[tgt][self.trans[f][i as usize] as usize];
                if j == NONE {
                    return Err(Error::FiberMismatch("subset is not closed under the action".into()));
                }
                t.push(j);
            }
            trans.push(t);
        }
        let sizes = incl.iter().map(|v| v.len()).collect();
        let mut sub = Action::unchecked(self.category.clone(), self.variance, sizes, trans)?;
        if let Some(l) = &self.labels {
            sub.labels = Some(incl.iter().enumerate().map(|(x, v)| v.iter().map(|&i| l[x][i as usize].clone()).collect()).collect());
        }
        Ok((sub, EquivariantMap { components: incl }))
    }
}

fn extend_generators(cat: &FinCategory, variance: Variance, sizes: &[usize], gen_tables: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let gens = cat.generators();
    let mut trans = Vec::with_capacity(cat.num_morphisms());
    for f in 0..cat.num_morphisms() {
        let word = &cat.words()[f];
        let start = match variance {
            Variance::Left => cat.cod(f),
            Variance::Right => cat.dom(f),
        };
        let mut t: Vec<u32> = (0..sizes[start] as u32).collect();
        // Left: (g1;...;gk)∗s = g1∗(...(gk∗s)); right: apply g1 first.
        let steps: Box<dyn Iterator<Item = &Mor>> = match variance {
            Variance::Left => Box::new(word.iter().rev()),
            Variance::Right => Box::new(word.iter()),
        };
        for &g in steps {
            let gi = gens.iter().position(|&h| h == g).unwrap();
            let gt = &gen_tables[gi];
            for v in t.iter_mut() {
                *v = gt.get(*v as usize).copied().unwrap_or(NONE);
                if *v == NONE {
                    break;
                }
            }
        }
        trans.push(t);
    }
    trans
}

/// Action as supplied by a user, with named elements.
#[derive(Clone, Debug)]
pub struct RawAction {
    pub variance: Variance,
    /// Elements per object; objects missing here have empty fibers.
    pub fibers: Vec<(String, Vec<String>)>,
    /// For each non-identity morphism, its table as `(element, image)` pairs.
    pub maps: Vec<(String, Vec<(String, String)>)>,
}

pub fn validate_action(category: &Cat, raw: &RawAction) -> Result<Action> {
    let c = category;
    let mut names: Vec<Vec<String>> = vec![Vec::new(); c.num_objects()];
    let mut given = vec![false; c.num_objects()];
    for (o, elems) in &raw.fibers {
        let x = c.object_index(o).ok_or_else(|| Error::UnknownObject(o.clone()))?;
        if given[x] {
            return Err(Error::DuplicateId(o.clone()));
        }
        given[x] = true;
        let mut seen = HashSet::new();
        for e in elems {
            if !seen.insert(e) {
                return Err(Error::DuplicateId(e.clone()));
            }
        }
        names[x] = elems.clone();
    }
    let sizes: Vec<usize> = names.iter().map(|v| v.len()).collect();
    let mut trans: Vec<Option<Vec<u32>>> = vec![None; c.num_morphisms()];
    for x in 0..c.num_objects() {
        trans[c.identity(x)] = Some((0..sizes[x] as u32).collect());
    }
    let src_of = |f: Mor| match raw.variance {
        Variance::Left => (c.cod(f), c.dom(f)),
        Variance::Right => (c.dom(f), c.cod(f)),
    };
    for (m, pairs) in &raw.maps {
        let f = c.morphism_index(m).ok_or_else(|| Error::UnknownReference(m.clone()))?;
        if c.is_identity(f) {
            return Err(Error::FiberMismatch(format!("identity {m} must not be given a table")));
        }
        if trans[f].is_some() {
            return Err(Error::DuplicateId(m.clone()));
        }
        let (src, tgt) = src_of(f);
        let mut t = vec![NONE; sizes[src]];
        for (a, b) in pairs {
            let i = names[src].iter().position(|n| n == a).ok_or_else(|| Error::UnknownElement(a.clone()))?;
            let j = names[tgt].iter().position(|n| n == b).ok_or_else(|| Error::UnknownElement(b.clone()))?;
            if t[i] != NONE {
                return Err(Error::FiberMismatch(format!("{m} assigns {a} twice")));
            }
            t[i] = j as u32;
        }
        if let Some(i) = t.iter().position(|&v| v == NONE) {
            return Err(Error::FiberMismatch(format!("{m} has no image for {}", names[src][i])));
        }
        trans[f] = Some(t);
    }
    let mut out = Vec::with_capacity(trans.len());
    for (f, t) in trans.into_iter().enumerate() {
        match t {
            Some(t) => out.push(t),
            None if sizes[src_of(f).0] == 0 => out.push(Vec::new()),
            None => {
                return Err(Error::FiberMismatch(format!("no table for {}", c.morphism_name(f))));
            }
        }
    }
    Ok(Action::from_tables(c.clone(), raw.variance, sizes, out)?.with_labels(names))
}

pub fn validate_left_action(category: &Cat, raw: &RawAction) -> Result<LeftAction> {
    if raw.variance != Variance::Left {
        return Err(Error::VarianceMismatch("expected a left action".into()));
    }
    validate_action(category, raw)
}

pub fn validate_right_action(category: &Cat, raw: &RawAction) -> Result<RightAction> {
    if raw.variance != Variance::Right {
        return Err(Error::VarianceMismatch("expected a right action".into()));
    }
    validate_action(category, raw)
}

fn representable(c: &Cat, x: Obj, variance: Variance) -> Action {
    let n = c.num_objects();
    let fibers: Vec<Vec<Mor>> = (0..n)
        .map(|a| match variance {
            Variance::Left => c.hom(a, x).to_vec(),
            Variance::Right => c.hom(x, a).to_vec(),
        })
        .collect();
    let pos: Vec<HashMap<Mor, u32>> =
        fibers.iter().map(|v| v.iter().enumerate().map(|(i, &m)| (m, i as u32)).collect()).collect();
    let trans = (0..c.num_morphisms())
        .map(|f| match variance {
            Variance::Left => fibers[c.cod(f)].iter().map(|&m| pos[c.dom(f)][&c.comp(f, m)]).collect(),
            Variance::Right => fibers[c.dom(f)].iter().map(|&m| pos[c.cod(f)][&c.comp(m, f)]).collect(),
        })
        .collect();
    let labels = fibers.iter().map(|v| v.iter().map(|&m| c.morphism_name(m).to_string()).collect()).collect();
    Action::unchecked(c.clone(), variance, fibers.iter().map(|v| v.len()).collect(), trans)
        .expect("representable")
        .with_labels(labels)
}

/// `∇x`: the fiber over `a` is `hom(a, x)`, restricted by precomposition.
pub fn yoneda_left(c: &Cat, x: Obj) -> Result<LeftAction> {
    if x >= c.num_objects() {
        return Err(Error::UnknownObject(x.to_string()));
    }
    Ok(representable(c, x, Variance::Left))
}

/// `Δx`: the fiber over `a` is `hom(x, a)`, acted on by postcomposition.
pub fn yoneda_right(c: &Cat, x: Obj) -> Result<RightAction> {
    if x >= c.num_objects() {
        return Err(Error::UnknownObject(x.to_string()));
    }
    Ok(representable(c, x, Variance::Right))
}

/// Map between two actions of the same base and variance, by local indices per object.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EquivariantMap {
    pub components: Vec<Vec<u32>>,
}

impl EquivariantMap {
    pub fn identity(a: &Action) -> EquivariantMap {
        EquivariantMap { components: a.sizes.iter().map(|&s| (0..s as u32).collect()).collect() }
    }

    pub fn from_flat(source: &Action, target: &Action, flat: &[u32]) -> EquivariantMap {
        let components = (0..source.sizes.len())
            .map(|x| {
                let o = source.offsets[x];
                (0..source.sizes[x]).map(|i| flat[o + i] - target.offsets[x] as u32).collect()
            })
            .collect();
        EquivariantMap { components }
    }

    pub fn apply(&self, x: Obj, i: usize) -> usize {
        self.components[x][i] as usize
    }

    /// First `self`, then `other`.
    pub fn then(&self, other: &EquivariantMap) -> EquivariantMap {
        EquivariantMap {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.iter().map(|&i| b[i as usize]).collect())
                .collect(),
        }
    }

    pub fn is_injective(&self) -> bool {
        self.components.iter().all(|c| {
            let mut seen = HashSet::new();
            c.iter().all(|v| seen.insert(*v))
        })
    }

    pub fn is_surjective_onto(&self, target: &Action) -> bool {
        self.components.iter().enumerate().all(|(x, c)| {
            let img: HashSet<u32> = c.iter().copied().collect();
            img.len() == target.size(x)
        })
    }

    pub fn inverse(&self) -> Option<EquivariantMap> {
        let mut out = Vec::with_capacity(self.components.len());
        for c in &self.components {
            let mut inv = vec![NONE; c.len()];
            for (i, &v) in c.iter().enumerate() {
                if (v as usize) >= inv.len() || inv[v as usize] != NONE {
                    return None;
                }
                inv[v as usize] = i as u32;
            }
            out.push(inv);
        }
        Some(EquivariantMap { components: out })
    }

    /// Elements of the target hit by the map.
    pub fn image(&self, target: &Action) -> Vec<Vec<bool>> {
        self.components
            .iter()
            .enumerate()
            .map(|(x, c)| {
                let mut v = vec![false; target.size(x)];
                for &i in c {
                    v[i as usize] = true;
                }
                v
            })
            .collect()
    }

    pub fn is_idempotent(&self) -> bool {
        self.then(self) == *self
    }
}

/// Typing and equivariance of a candidate map.
pub fn check_equivariant(source: &Action, target: &Action, h: &EquivariantMap) -> Report {
    let mut ck = Checker::new();
    if !ck.require(
        source.category == target.category && source.variance == target.variance,
        "typing",
        || "source and target are not actions of the same kind".into(),
    ) {
        return ck.finish();
    }
    let shape = h.components.len() == source.sizes.len()
        && h.components.iter().enumerate().all(|(x, c)| {
            c.len() == source.sizes[x] && c.iter().all(|&v| (v as usize) < target.sizes[x])
        });
    if !ck.require(shape, "typing", || "components do not match the fibers".into()) {
        return ck.finish();
    }
    let cat = &source.category;
    for f in 0..cat.num_morphisms() {
        let (src, tgt) = (source.src_obj(f), source.tgt_obj(f));
        for s in 0..source.sizes[src] {
            let lhs = h.components[tgt][source.trans[f][s] as usize];
            let rhs = target.trans[f][h.components[src][s] as usize];
            if !ck.require(lhs == rhs, "equivariance", || {
                format!(
                    "map does not commute with {} at {} over {}",
                    cat.morphism_name(f),
                    source.label(src, s),
                    cat.object_name(src)
                )
            }) {
                return ck.finish();
            }
        }
    }
    ck.finish()
}

fn map_problem(a: &Action, b: &Action, distinct: bool) -> Problem {
    let mut p = Problem::new(
        (0..a.total())
            .map(|e| {
                let (x, _) = a.unflat(e);
                let o = b.offsets[x] as u32;
                (o..o + b.sizes[x] as u32).collect()
            })
            .collect(),
    );
    let cat = &a.category;
    for &f in cat.generators() {
        let (src, tgt) = (a.src_obj(f), a.tgt_obj(f));
        if a.sizes[src] == 0 {
            continue;
        }
        // Flat table of b for f, defined on the fiber over src only.
        let mut table = vec![NONE; b.total()];
        for i in 0..b.sizes[src] {
            table[b.offsets[src] + i] = (b.offsets[tgt] as u32) + b.trans[f][i];
        }
        let t = p.add_table(table);
        for s in 0..a.sizes[src] {
            p.add_edge(a.offsets[src] + s, a.offsets[tgt] + a.trans[f][s] as usize, t);
        }
    }
    if distinct {
        p.distinct = Some((0..a.total()).map(|e| a.unflat(e).0 as u32).collect());
    }
    p
}

fn same_kind(a: &Action, b: &Action) -> Result<()> {
    if a.category != b.category {
        return Err(Error::TypeMismatch("actions over different categories".into()));
    }
    if a.variance != b.variance {
        return Err(Error::VarianceMismatch("actions of different variance".into()));
    }
    Ok(())
}

/// All equivariant maps `a → b` in canonical (lexicographic) order.
pub fn equivariant_maps(a: &Action, b: &Action, limits: Limits) -> Result<Vec<EquivariantMap>> {
    same_kind(a, b)?;
    let sols = map_problem(a, b, false).solve_all(limits)?;
    Ok(sols.iter().map(|s| EquivariantMap::from_flat(a, b, s)).collect())
}

/// Equivariant maps `a → b` sending flat element `e` to `pins[e]` wherever a pin is given.
pub fn equivariant_maps_pinned(a: &Action, b: &Action, pins: &[Option<usize>], limits: Limits) -> Result<Vec<EquivariantMap>> {
    same_kind(a, b)?;
    let mut p = map_problem(a, b, false);
    for (e, pin) in pins.iter().enumerate() {
        if let Some(t) = pin {
            let t = *t as u32;
            if !p.domains[e].contains(&t) {
                return Ok(Vec::new());
            }
            p.domains[e] = vec![t];
        }
    }
    let sols = p.solve_all(limits)?;
    Ok(sols.iter().map(|s| EquivariantMap::from_flat(a, b, s)).collect())
}

/// All isomorphisms `a ≅ b` in canonical order.
pub fn isomorphisms(a: &Action, b: &Action, limits: Limits) -> Result<Vec<EquivariantMap>> {
    same_kind(a, b)?;
    if a.sizes != b.sizes {
        return Ok(Vec::new());
    }
    let sols = map_problem(a, b, true).solve_all(limits)?;
    Ok(sols.iter().map(|s| EquivariantMap::from_flat(a, b, s)).collect())
}

/// Elements fixed by an endomap.
pub fn fixed_points(h: &EquivariantMap) -> Vec<Vec<bool>> {
    h.components.iter().map(|c| c.iter().enumerate().map(|(i, &v)| v as usize == i).collect()).collect()
}

/// First isomorphism `a ≅ b` in canonical order, if any.
pub fn find_isomorphism(a: &Action, b: &Action, limits: Limits) -> Result<Option<EquivariantMap>> {
    same_kind(a, b)?;
    if a.sizes != b.sizes {
        return Ok(None);
    }
    let sol = map_problem(a, b, true).solve_first(limits)?;
    Ok(sol.map(|s| EquivariantMap::from_flat(a, b, &s)))
}

/// Families of morphisms indexed by the elements of `a` and compatible with
/// the action: cocones into `c` for a left action, cones out of `c` for a
/// right action. Each family lists a morphism per flat element.
pub fn hom_families(a: &Action, c: Obj, limits: Limits) -> Result<Vec<Vec<Mor>>> {
    let cat = &a.category;
    let mut p = Problem::new(
        (0..a.total())
            .map(|e| {
                let (x, _) = a.unflat(e);
                let hom = match a.variance {
                    Variance::Left => cat.hom(x, c),
                    Variance::Right => cat.hom(c, x),
                };
                hom.iter().map(|&m| m as u32).collect()
            })
            .collect(),
    );
    for &f in cat.generators() {
        let (src, tgt) = (a.src_obj(f), a.tgt_obj(f));
        if a.sizes[src] == 0 {
            continue;
        }
        let table = (0..cat.num_morphisms())
            .map(|m| {
                let r = match a.variance {
                    Variance::Left => cat.compose(f, m),
                    Variance::Right => cat.compose(m, f),
                };
                r.map_or(NONE, |r| r as u32)
            })
            .collect();
        let t = p.add_table(table);
        for s in 0..a.sizes[src] {
            p.add_edge(a.offsets[src] + s, a.offsets[tgt] + a.trans[f][s] as usize, t);
        }
    }
    let sols = p.solve_all(limits)?;
    Ok(sols.into_iter().map(|s| s.into_iter().map(|m| m as Mor).collect()).collect())
}

/// Cocones over a left action with apex `c`.
pub fn cocones(a: &LeftAction, c: Obj, limits: Limits) -> Result<Vec<Vec<Mor>>> {
    if a.variance != Variance::Left {
        return Err(Error::VarianceMismatch("cocones need a left action".into()));
    }
    hom_families(a, c, limits)
}

/// Cones from `c` into a right action.
pub fn cones(c: Obj, b: &RightAction, limits: Limits) -> Result<Vec<Vec<Mor>>> {
    if b.variance != Variance::Right {
        return Err(Error::VarianceMismatch("cones need a right action".into()));
    }
    hom_families(b, c, limits)
}

/// Category of elements with its projection. For a left action the
/// projection is a discrete fibration, for a right action an opfibration.
pub fn grothendieck(a: &Action) -> (Cat, Functor) {
    let cat = &a.category;
    let mut objects = Vec::new();
    let mut base_obj = Vec::new();
    for x in 0..cat.num_objects() {
        for i in 0..a.sizes[x] {
            objects.push(format!("{}:{}", cat.object_name(x), a.label(x, i)));
            base_obj.push(x);
        }
    }
    let mut mors: Vec<(String, Obj, Obj)> = Vec::new();
    let mut base_mor = Vec::new();
    let mut lookup: HashMap<(usize, Mor), Mor> = HashMap::new();
    for f in 0..cat.num_morphisms() {
        let (src, tgt) = (a.src_obj(f), a.tgt_obj(f));
        for s in 0..a.sizes[src] {
            let from = a.offsets[src] + s;
            let to = a.offsets[tgt] + a.trans[f][s] as usize;
            // A left action's table runs against the arrow.
            let (d, c) = match a.variance {
                Variance::Left => (to, from),
                Variance::Right => (from, to),
            };
            lookup.insert((d, f), mors.len());
            mors.push((format!("{}@{}", cat.morphism_name(f), objects[d]), d, c));
            base_mor.push(f);
        }
    }
    let identity: Vec<Mor> = (0..objects.len()).map(|e| lookup[&(e, cat.identity(base_obj[e]))]).collect();
    let doms: Vec<Obj> = mors.iter().map(|m| m.1).collect();
    let total = Arc::new(
        FinCategory::assemble(objects, mors, identity, |m, n| {
            let h = cat.compose(base_mor[m], base_mor[n])?;
            lookup.get(&(doms[m], h)).copied()
        })
        .expect("category of elements"),
    );
    let proj = Functor { source: total.clone(), target: cat.clone(), obj_map: base_obj, mor_map: base_mor };
    (total, proj)
}

/// First object `c` and cocone `u` such that `f ↦ u then f` is a bijection
/// `hom(c, c') → cocones(a, c')` for every `c'`.
pub fn loose_colimit(a: &LeftAction, limits: Limits) -> Result<Option<(Obj, Vec<Mor>)>> {
    if a.variance != Variance::Left {
        return Err(Error::VarianceMismatch("colimits are taken of left actions".into()));
    }
    representing_family(a, limits)
}

/// First object `c` and cone `ρ` such that `f ↦ f then ρ` is a bijection
/// `hom(c', c) → cones(c', b)` for every `c'`.
pub fn loose_limit(b: &RightAction, limits: Limits) -> Result<Option<(Obj, Vec<Mor>)>> {
    if b.variance != Variance::Right {
        return Err(Error::VarianceMismatch("limits are taken of right actions".into()));
    }
    representing_family(b, limits)
}

fn representing_family(a: &Action, limits: Limits) -> Result<Option<(Obj, Vec<Mor>)>> {
    let cat = &a.category;
    let all: Vec<Vec<Vec<Mor>>> =
        (0..cat.num_objects()).map(|c| hom_families(a, c, limits)).collect::<Result<_>>()?;
    let sets: Vec<HashSet<&Vec<Mor>>> = all.iter().map(|v| v.iter().collect()).collect();
    for c in 0..cat.num_objects() {
        for u in &all[c] {
            if is_universal(a, c, u, &sets) {
                return Ok(Some((c, u.clone())));
            }
        }
    }
    Ok(None)
}

/// Universality of a family against precomputed family sets, one per object.
pub(crate) fn is_universal(a: &Action, c: Obj, u: &[Mor], sets: &[HashSet<&Vec<Mor>>]) -> bool {
    let cat = &a.category;
    (0..cat.num_objects()).all(|d| {
        let hom = match a.variance {
            Variance::Left => cat.hom(c, d),
            Variance::Right => cat.hom(d, c),
        };
        if hom.len() != sets[d].len() {
            return false;
        }
        let mut seen = HashSet::new();
        hom.iter().all(|&f| {
            let image: Vec<Mor> = u
                .iter()
                .map(|&m| match a.variance {
                    Variance::Left => cat.comp(m, f),
                    Variance::Right => cat.comp(f, m),
                })
                .collect();
            sets[d].contains(&image) && seen.insert(image)
        })
    })
}

/// Cocones over a functor `D: 𝔻 → C` with apex `c`: one morphism `D j → c`
/// per object of `𝔻`, with `D u then m_k = m_j` for `u: j → k`.
pub fn diagram_cocones(d: &Functor, c: Obj, limits: Limits) -> Result<Vec<Vec<Mor>>> {
    let (dd, cat) = (&d.source, &d.target);
    let mut p = Problem::new(
        (0..dd.num_objects()).map(|j| cat.hom(d.obj_map[j], c).iter().map(|&m| m as u32).collect()).collect(),
    );
    for u in dd.non_identities() {
        let du = d.mor_map[u];
        let table = (0..cat.num_morphisms()).map(|m| cat.compose(du, m).map_or(NONE, |r| r as u32)).collect();
        let t = p.add_table(table);
        p.add_edge(dd.cod(u), dd.dom(u), t);
    }
    let sols = p.solve_all(limits)?;
    Ok(sols.into_iter().map(|s| s.into_iter().map(|m| m as Mor).collect()).collect())
}

/// Colimit of a functor by representability search over its cocones.
pub fn diagram_colimit(d: &Functor, limits: Limits) -> Result<Option<(Obj, Vec<Mor>)>> {
    let cat = &d.target;
    let all: Vec<Vec<Vec<Mor>>> =
        (0..cat.num_objects()).map(|c| diagram_cocones(d, c, limits)).collect::<Result<_>>()?;
    for c in 0..cat.num_objects() {
        'cand: for u in &all[c] {
            for e in 0..cat.num_objects() {
                let set: HashSet<&Vec<Mor>> = all[e].iter().collect();
                if set.len() != cat.hom(c, e).len() {
                    continue 'cand;
                }
                let mut seen = HashSet::new();
                for &f in cat.hom(c, e) {
                    let img: Vec<Mor> = u.iter().map(|&m| cat.comp(m, f)).collect();
                    if !set.contains(&img) || !seen.insert(img) {
                        continue 'cand;
                    }
                }
            }
            return Ok(Some((c, u.clone())));
        }
    }
    Ok(None)
}

/// Orbits of the elements under the action, in the sense of connected
/// components of the category of elements. Returns flat elements per class.
pub fn components(a: &Action) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::new(a.total());
    for f in 0..a.category.num_morphisms() {
        let (src, tgt) = (a.src_obj(f), a.tgt_obj(f));
        for s in 0..a.sizes[src] {
            uf.union(a.offsets[src] + s, a.offsets[tgt] + a.trans[f][s] as usize);
        }
    }
    uf.classes()
}

/// Minimal encoding over all relabelings of the fibers, when the number of
/// relabelings stays below `max_perms`.
pub fn canonical_form(a: &Action, max_perms: usize) -> Option<Vec<u32>> {
    let count = a.sizes.iter().try_fold(1usize, |acc, &s| acc.checked_mul((1..=s).product::<usize>()))?;
    if count > max_perms {
        return None;
    }
    let perms: Vec<Vec<Vec<u32>>> = a.sizes.iter().map(|&s| permutations(s)).collect();
    let mut best: Option<Vec<u32>> = None;
    let mut choice = vec![0usize; a.sizes.len()];
    loop {
        // perm[x][i] = new label of old element i.
        let relabeled: Vec<Vec<u32>> = a
            .trans
            .iter()
            .enumerate()
            .map(|(f, t)| {
                let (src, tgt) = (a.src_obj(f), a.tgt_obj(f));
                let (ps, pt) = (&perms[src][choice[src]], &perms[tgt][choice[tgt]]);
                let mut out = vec![0; t.len()];
                for (i, &v) in t.iter().enumerate() {
                    out[ps[i] as usize] = pt[v as usize];
                }
                out
            })
            .collect();
        let mut enc: Vec<u32> = a.sizes.iter().map(|&s| s as u32).collect();
        for t in &relabeled {
            enc.extend_from_slice(t);
        }
        if best.as_ref().map_or(true, |b| enc < *b) {
            best = Some(enc);
        }
        let mut k = 0;
        loop {
            if k == choice.len() {
                return best;
            }
            choice[k] += 1;
            if choice[k] < perms[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = (0..n as u32).collect();
    heap_permute(n, &mut cur, &mut out);
    out.sort();
    out
}

fn heap_permute(k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if k <= 1 {
        out.push(cur.clone());
        return;
    }
    for i in 0..k {
        heap_permute(k - 1, cur, out);
        if k % 2 == 0 {
            cur.swap(i, k - 1);
        } else {
            cur.swap(0, k - 1);
        }
    }
}

/// All actions with the given fiber sizes, as labeled tables (no iso reduction).
pub fn actions_with_sizes(cat: &Cat, variance: Variance, sizes: &[usize], limits: Limits) -> Result<Vec<Action>> {
    let gens = cat.generators().to_vec();
    let (src, tgt): (Vec<Obj>, Vec<Obj>) = gens
        .iter()
        .map(|&g| match variance {
            Variance::Left => (cat.cod(g), cat.dom(g)),
            Variance::Right => (cat.dom(g), cat.cod(g)),
        })
        .unzip();
    // One variable per (generator, source element); values are target elements.
    let mut domains = Vec::new();
    let mut owner = Vec::new();
    for (k, _) in gens.iter().enumerate() {
        for _ in 0..sizes[src[k]] {
            domains.push((0..sizes[tgt[k]] as u32).collect::<Vec<u32>>());
            owner.push(k);
        }
    }
    let raw = Problem::new(domains).solve_all(limits)?;
    let mut out = Vec::new();
    for sol in raw {
        let mut tables: Vec<Vec<u32>> = vec![Vec::new(); gens.len()];
        for (v, &k) in sol.iter().zip(&owner) {
            tables[k].push(*v);
        }
        if let Ok(a) = Action::from_generators(cat.clone(), variance, sizes.to_vec(), &tables) {
            out.push(a);
        }
    }
    Ok(out)
}

/// All actions with every fiber of size at most `cap`, one per isomorphism
/// class, ordered by total size and then by canonical encoding.
pub fn enumerate_actions(cat: &Cat, variance: Variance, cap: usize, limits: Limits) -> Result<Vec<Action>> {
    let n = cat.num_objects();
    let mut size_vectors = Vec::new();
    let mut cur = vec![0usize; n];
    loop {
        size_vectors.push(cur.clone());
        let mut k = 0;
        loop {
            if k == n {
                break;
            }
            cur[k] += 1;
            if cur[k] <= cap {
                break;
            }
            cur[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
    }
    size_vectors.sort_by_key(|v| (v.iter().sum::<usize>(), v.clone()));
    let mut out: Vec<(Vec<u32>, Action)> = Vec::new();
    for sizes in size_vectors {
        let mut reps: Vec<(Vec<u32>, Action)> = Vec::new();
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        for a in actions_with_sizes(cat, variance, &sizes, limits)? {
            match canonical_form(&a, 5040) {
                Some(code) => {
                    if seen.insert(code.clone()) {
                        reps.push((code, a));
                    }
                }
                None => {
                    let mut fresh = true;
                    for (_, r) in &reps {
                        if find_isomorphism(&a, r, limits)?.is_some() {
                            fresh = false;
                            break;
                        }
                    }
                    if fresh {
                        reps.push((a.encode(), a));
                    }
                }
            }
        }
        reps.sort_by(|x, y| x.0.cmp(&y.0));
        out.extend(reps);
    }
    Ok(out.into_iter().map(|(_, a)| a).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{validate_category, RawCategory};

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
    fn regular_z4_action() {
        let z = z4();
        let reg = yoneda_left(&z, 0).unwrap();
        assert_eq!(reg.sizes(), &[4]);
        let maps = equivariant_maps(&reg, &reg, Limits::default()).unwrap();
        assert_eq!(maps.len(), 4);
        assert!(maps.contains(&EquivariantMap::identity(&reg)));
    }

    #[test]
    fn trivial_z4_action_has_no_cocones() {
        let z = z4();
        let pt = Action::terminal(z.clone(), Variance::Left);
        assert!(cocones(&pt, 0, Limits::default()).unwrap().is_empty());
    }

    #[test]
    fn empty_action_has_one_cocone() {
        let w = walking_arrow();
        let e = Action::empty(w, Variance::Left);
        assert_eq!(cocones(&e, 1, Limits::default()).unwrap(), vec![Vec::<Mor>::new()]);
    }

    #[test]
    fn raw_action_functoriality() {
        let w = walking_arrow();
        let raw = RawAction {
            variance: Variance::Left,
            fibers: vec![("a".into(), vec!["p".into()]), ("b".into(), vec!["q".into(), "r".into()])],
            maps: vec![("f".into(), vec![("q".into(), "p".into()), ("r".into(), "p".into())])],
        };
        let a = validate_left_action(&w, &raw).unwrap();
        assert_eq!(a.table(2), &[0, 0]);
        assert!(matches!(validate_right_action(&w, &raw), Err(Error::VarianceMismatch(_))));
        let bad = RawAction { maps: vec![("f".into(), vec![("q".into(), "p".into())])], ..raw };
        assert!(matches!(validate_action(&w, &bad), Err(Error::FiberMismatch(_))));
    }

    #[test]
    fn unflat_round_trip() {
        let w = walking_arrow();
        let a = Action::from_tables(w, Variance::Left, vec![2, 3], vec![vec![0, 1], vec![0, 1, 2], vec![0, 1, 0]])
            .unwrap();
        for e in 0..a.total() {
            let (x, i) = a.unflat(e);
            assert_eq!(a.flat(x, i), e);
        }
    }

    #[test]
    fn loose_colimit_of_representable() {
        let w = walking_arrow();
        for x in 0..2 {
            let r = yoneda_left(&w, x).unwrap();
            let (c, u) = loose_colimit(&r, Limits::default()).unwrap().unwrap();
            assert_eq!(c, x);
            assert_eq!(u, r_identity_cocone(&w, &r, x));
        }
    }

    fn r_identity_cocone(c: &Cat, r: &Action, x: Obj) -> Vec<Mor> {
        (0..r.total()).map(|e| {
            let (a, i) = r.unflat(e);
            c.hom(a, x)[i]
        }).collect()
    }

    #[test]
    fn z4_actions_up_to_iso() {
        // Z4-sets with at most 2 points: 1 empty, 1 point, 2 points
        // trivial, 2 points parity.
        let acts = enumerate_actions(&z4(), Variance::Left, 2, Limits::default()).unwrap();
        assert_eq!(acts.len(), 4);
    }

    #[test]
    fn components_of_regular_action() {
        let reg = yoneda_left(&z4(), 0).unwrap();
        assert_eq!(components(&reg).len(), 1);
    }
}
