//! Finite categories given by a total composition table.
//!
//! Objects and morphisms are indices into declared lists. Composition is
//! stored in geometric order: `compose(f, g)` is "first `f`, then `g`".

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use crate::action::{Action, Variance};
use crate::error::{Error, Result};
use crate::report::{Checker, Report};

pub type Obj = usize;
pub type Mor = usize;
pub type Cat = Arc<FinCategory>;

const NO: usize = usize::MAX;

#[derive(Clone, PartialEq, Eq)]
pub struct FinCategory {
    objects: Vec<String>,
    morphisms: Vec<String>,
    dom: Vec<Obj>,
    cod: Vec<Obj>,
    identity: Vec<Mor>,
    table: Vec<Mor>,
    homs: Vec<Vec<Mor>>,
    gens: Vec<Mor>,
    words: Vec<Vec<Mor>>,
}

impl fmt::Debug for FinCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinCategory({} objects, {} morphisms)", self.objects.len(), self.morphisms.len())
    }
}

/// Category as supplied by a user: identities are implicit and reserved as `id_<object>`.
#[derive(Clone, Debug, Default)]
pub struct RawCategory {
    pub objects: Vec<String>,
    /// `(id, dom, cod)` for every non-identity morphism.
    pub morphisms: Vec<(String, String, String)>,
    /// `(f, g, h)` meaning `h = f then g`.
    pub compose: Vec<(String, String, String)>,
    /// When set, entries involving identities are not filled in automatically.
    pub explicit_identities: bool,
}

pub fn identity_name(object: &str) -> String {
    format!("id_{object}")
}

impl FinCategory {
    /// Builds a category from parts and checks totality, units and associativity.
    pub fn assemble(
        objects: Vec<String>,
        morphisms: Vec<(String, Obj, Obj)>,
        identity: Vec<Mor>,
        compose: impl Fn(Mor, Mor) -> Option<Mor>,
    ) -> Result<FinCategory> {
        let n = morphisms.len();
        let mut table = vec![NO; n * n];
        let (names, (dom, cod)): (Vec<String>, (Vec<Obj>, Vec<Obj>)) =
            morphisms.into_iter().map(|(s, d, c)| (s, (d, c))).unzip();
        for f in 0..n {
            for g in 0..n {
                if cod[f] == dom[g] {
                    match compose(f, g) {
                        Some(h) => table[f * n + g] = h,
                        None => return Err(Error::MissingComposite(names[f].clone(), names[g].clone())),
                    }
                }
            }
        }
        let cat = FinCategory::from_table(objects, names, dom, cod, identity, table)?;
        cat.check_laws()?;
        Ok(cat)
    }

    fn from_table(
        objects: Vec<String>,
        morphisms: Vec<String>,
        dom: Vec<Obj>,
        cod: Vec<Obj>,
        identity: Vec<Mor>,
        table: Vec<Mor>,
    ) -> Result<FinCategory> {
        let no = objects.len();
        let mut homs = vec![Vec::new(); no * no];
        for f in 0..morphisms.len() {
            homs[dom[f] * no + cod[f]].push(f);
        }
        let mut cat =
            FinCategory { objects, morphisms, dom, cod, identity, table, homs, gens: Vec::new(), words: Vec::new() };
        let n = cat.morphisms.len();
        for f in 0..n {
            for g in 0..n {
                let h = cat.table[f * n + g];
                if h != NO && (cat.dom[h] != cat.dom[f] || cat.cod[h] != cat.cod[g]) {
                    return Err(Error::TypeMismatch(format!(
                        "composite of {} and {} is {}, which has the wrong type",
                        cat.morphisms[f], cat.morphisms[g], cat.morphisms[h]
                    )));
                }
            }
        }
        let (gens, words) = cat.compute_generators();
        cat.gens = gens;
        cat.words = words;
        Ok(cat)
    }

    fn check_laws(&self) -> Result<()> {
        for x in 0..self.num_objects() {
            let i = self.identity[x];
            if self.dom[i] != x || self.cod[i] != x {
                return Err(Error::UnitViolation(self.morphisms[i].clone()));
            }
        }
        for f in 0..self.num_morphisms() {
            if self.comp(self.identity[self.dom[f]], f) != f || self.comp(f, self.identity[self.cod[f]]) != f {
                return Err(Error::UnitViolation(self.morphisms[f].clone()));
            }
        }
        for f in 0..self.num_morphisms() {
            for g in self.out_of(self.cod[f]) {
                let fg = self.comp(f, g);
                for h in self.out_of(self.cod[g]) {
                    if self.comp(fg, h) != self.comp(f, self.comp(g, h)) {
                        return Err(Error::AssociativityViolation(
                            self.morphisms[f].clone(),
                            self.morphisms[g].clone(),
                            self.morphisms[h].clone(),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_morphisms(&self) -> usize {
        self.morphisms.len()
    }

    pub fn object_name(&self, x: Obj) -> &str {
        &self.objects[x]
    }

    pub fn morphism_name(&self, f: Mor) -> &str {
        &self.morphisms[f]
    }

    pub fn object_names(&self) -> &[String] {
        &self.objects
    }

    pub fn morphism_names(&self) -> &[String] {
        &self.morphisms
    }

    pub fn object_index(&self, name: &str) -> Option<Obj> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn morphism_index(&self, name: &str) -> Option<Mor> {
        self.morphisms.iter().position(|m| m == name)
    }

    pub fn dom(&self, f: Mor) -> Obj {
        self.dom[f]
    }

    pub fn cod(&self, f: Mor) -> Obj {
        self.cod[f]
    }

    pub fn identity(&self, x: Obj) -> Mor {
        self.identity[x]
    }

    pub fn is_identity(&self, f: Mor) -> bool {
        self.identity[self.dom[f]] == f
    }

    pub fn compose(&self, f: Mor, g: Mor) -> Option<Mor> {
        let h = self.table[f * self.num_morphisms() + g];
        (h != NO).then_some(h)
    }

    /// Composite of a composable pair; panics otherwise.
    pub fn comp(&self, f: Mor, g: Mor) -> Mor {
        let h = self.table[f * self.num_morphisms() + g];
        assert!(h != NO, "{} and {} are not composable", self.morphisms[f], self.morphisms[g]);
        h
    }

    pub fn hom(&self, x: Obj, y: Obj) -> &[Mor] {
        &self.homs[x * self.num_objects() + y]
    }

    pub fn out_of(&self, x: Obj) -> impl Iterator<Item = Mor> + '_ {
        (0..self.num_morphisms()).filter(move |&f| self.dom[f] == x)
    }

    pub fn into_obj(&self, x: Obj) -> impl Iterator<Item = Mor> + '_ {
        (0..self.num_morphisms()).filter(move |&f| self.cod[f] == x)
    }

    pub fn non_identities(&self) -> impl Iterator<Item = Mor> + '_ {
        (0..self.num_morphisms()).filter(move |&f| !self.is_identity(f))
    }

    /// Number of composable triples, i.e. the size of the associativity check.
    pub fn composable_triples(&self) -> usize {
        let mut n = 0;
        for f in 0..self.num_morphisms() {
            for g in self.out_of(self.cod[f]) {
                n += self.out_of(self.cod[g]).count();
            }
        }
        n
    }

    /// Greedy generating set: a non-identity morphism is added when it is not
    /// yet a composite of earlier generators.
    pub fn generators(&self) -> &[Mor] {
        &self.gens
    }

    /// For every morphism, a word of generators whose composite it is.
    pub fn words(&self) -> &[Vec<Mor>] {
        &self.words
    }

    fn compute_generators(&self) -> (Vec<Mor>, Vec<Vec<Mor>>) {
        let n = self.num_morphisms();
        let mut words: Vec<Option<Vec<Mor>>> = vec![None; n];
        for x in 0..self.num_objects() {
            words[self.identity[x]] = Some(Vec::new());
        }
        let mut gens = Vec::new();
        for f in 0..n {
            if words[f].is_some() {
                continue;
            }
            gens.push(f);
            words[f] = Some(vec![f]);
            loop {
                let mut changed = false;
                for a in 0..n {
                    let Some(wa) = words[a].clone() else { continue };
                    for &g in &gens {
                        if let Some(h) = self.compose(a, g) {
                            if words[h].is_none() {
                                let mut w = wa.clone();
                                w.push(g);
                                words[h] = Some(w);
                                changed = true;
                            }
                        }
                    }
                }
                if !changed {
                    break;
                }
            }
        }
        (gens, words.into_iter().map(|w| w.unwrap()).collect())
    }

    pub fn terminal() -> FinCategory {
        FinCategory::assemble(vec!["*".into()], vec![(identity_name("*"), 0, 0)], vec![0], |_, _| Some(0))
            .expect("terminal category")
    }

    pub fn discrete(names: &[&str]) -> FinCategory {
        let mors = names.iter().enumerate().map(|(i, n)| (identity_name(n), i, i)).collect();
        FinCategory::assemble(
            names.iter().map(|s| s.to_string()).collect(),
            mors,
            (0..names.len()).collect(),
            |f, g| (f == g).then_some(f),
        )
        .expect("discrete category")
    }

    /// One-object category of a monoid with `table[a][b] = a ⊙ b`, composed as `f then g = f ⊙ g`.
    pub fn from_monoid(object: &str, elements: &[String], unit: usize, table: &[Vec<usize>]) -> Result<FinCategory> {
        let n = elements.len();
        let mut order: Vec<usize> = vec![unit];
        order.extend((0..n).filter(|&a| a != unit));
        let pos: Vec<usize> = {
            let mut p = vec![0; n];
            for (i, &a) in order.iter().enumerate() {
                p[a] = i;
            }
            p
        };
        let names: Vec<(String, Obj, Obj)> = order
            .iter()
            .map(|&a| if a == unit { (identity_name(object), 0, 0) } else { (elements[a].clone(), 0, 0) })
            .collect();
        FinCategory::assemble(vec![object.to_string()], names, vec![0], |f, g| {
            Some(pos[table[order[f]][order[g]]])
        })
    }

    /// Morphism of a one-object monoid category corresponding to element `a` (see `from_monoid`).
    pub fn monoid_morphism(unit: usize, a: usize) -> Mor {
        if a == unit {
            0
        } else if a < unit {
            a + 1
        } else {
            a
        }
    }

    /// Inverse of [`FinCategory::monoid_morphism`].
    pub fn monoid_element(unit: usize, f: Mor) -> usize {
        if f == 0 {
            unit
        } else if f <= unit {
            f - 1
        } else {
            f
        }
    }

    pub fn opposite(&self) -> FinCategory {
        let n = self.num_morphisms();
        let mut table = vec![NO; n * n];
        for f in 0..n {
            for g in 0..n {
                table[f * n + g] = self.table[g * n + f];
            }
        }
        FinCategory::from_table(
            self.objects.clone(),
            self.morphisms.clone(),
            self.cod.clone(),
            self.dom.clone(),
            self.identity.clone(),
            table,
        )
        .expect("opposite of a valid category")
    }

    pub fn product(&self, other: &FinCategory) -> FinCategory {
        let no2 = other.num_objects();
        let nm2 = other.num_morphisms();
        let mut objects = Vec::new();
        for x in &self.objects {
            for y in &other.objects {
                objects.push(format!("({x},{y})"));
            }
        }
        let mut mors = Vec::new();
        for f in 0..self.num_morphisms() {
            for g in 0..nm2 {
                mors.push((
                    format!("({},{})", self.morphisms[f], other.morphisms[g]),
                    self.dom[f] * no2 + other.dom[g],
                    self.cod[f] * no2 + other.cod[g],
                ));
            }
        }
        let identity =
            (0..objects.len()).map(|p| self.identity[p / no2] * nm2 + other.identity[p % no2]).collect();
        FinCategory::assemble(objects, mors, identity, |a, b| {
            let f = self.compose(a / nm2, b / nm2)?;
            let g = other.compose(a % nm2, b % nm2)?;
            Some(f * nm2 + g)
        })
        .expect("product of valid categories")
    }
}

/// Validates a user category: synthesizes identities and checks all laws.
pub fn validate_category(raw: &RawCategory) -> Result<FinCategory> {
    let mut seen = HashSet::new();
    for o in &raw.objects {
        if !seen.insert(o.clone()) {
            return Err(Error::DuplicateId(o.clone()));
        }
    }
    let obj = |name: &str| {
        raw.objects.iter().position(|o| o == name).ok_or_else(|| Error::UnknownObject(name.to_string()))
    };
    let mut names: Vec<String> = raw.objects.iter().map(|o| identity_name(o)).collect();
    let mut dom: Vec<Obj> = (0..raw.objects.len()).collect();
    let mut cod: Vec<Obj> = (0..raw.objects.len()).collect();
    let mut ids: HashSet<String> = names.iter().cloned().collect();
    for (id, d, c) in &raw.morphisms {
        if !ids.insert(id.clone()) {
            return Err(Error::DuplicateId(id.clone()));
        }
        names.push(id.clone());
        dom.push(obj(d)?);
        cod.push(obj(c)?);
    }
    let index: HashMap<&str, Mor> = names.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
    let mor = |name: &str| index.get(name).copied().ok_or_else(|| Error::UnknownReference(name.to_string()));
    let n = names.len();
    let no = raw.objects.len();
    let mut table = vec![NO; n * n];
    for (f, g, h) in &raw.compose {
        let (f, g, h) = (mor(f)?, mor(g)?, mor(h)?);
        if cod[f] != dom[g] {
            return Err(Error::TypeMismatch(format!("{} and {} are not composable", names[f], names[g])));
        }
        if dom[h] != dom[f] || cod[h] != cod[g] {
            return Err(Error::TypeMismatch(format!(
                "{} cannot be the composite of {} and {}",
                names[h], names[f], names[g]
            )));
        }
        let slot = &mut table[f * n + g];
        if *slot != NO && *slot != h {
            return Err(Error::TypeMismatch(format!("conflicting composites for ({}, {})", names[f], names[g])));
        }
        *slot = h;
    }
    if !raw.explicit_identities {
        for f in 0..n {
            let fill = [(dom[f], f, true), (cod[f], f, false)];
            for (x, f, left) in fill {
                let (a, b) = if left { (x, f) } else { (f, x) };
                let slot = &mut table[a * n + b];
                if *slot != NO && *slot != f {
                    return Err(Error::UnitViolation(names[f].clone()));
                }
                *slot = f;
            }
        }
    }
    for f in 0..n {
        for g in 0..n {
            if cod[f] == dom[g] && table[f * n + g] == NO {
                return Err(Error::MissingComposite(names[f].clone(), names[g].clone()));
            }
        }
    }
    let cat = FinCategory::from_table(raw.objects.clone(), names, dom, cod, (0..no).collect(), table)?;
    cat.check_laws()?;
    Ok(cat)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functor {
    pub source: Cat,
    pub target: Cat,
    pub obj_map: Vec<Obj>,
    pub mor_map: Vec<Mor>,
}

impl Functor {
    pub fn identity(c: &Cat) -> Functor {
        Functor {
            source: c.clone(),
            target: c.clone(),
            obj_map: (0..c.num_objects()).collect(),
            mor_map: (0..c.num_morphisms()).collect(),
        }
    }

    /// Functor from the terminal category picking out `x`.
    pub fn constant(target: &Cat, x: Obj) -> Functor {
        Functor {
            source: Arc::new(FinCategory::terminal()),
            target: target.clone(),
            obj_map: vec![x],
            mor_map: vec![target.identity(x)],
        }
    }
}

pub fn check_functor(f: &Functor) -> Report {
    let (s, t) = (&f.source, &f.target);
    let mut ck = Checker::new();
    if !ck.require(
        f.obj_map.len() == s.num_objects() && f.mor_map.len() == s.num_morphisms(),
        "shape",
        || "object or morphism map has the wrong length".into(),
    ) {
        return ck.finish();
    }
    for m in 0..s.num_morphisms() {
        let fm = f.mor_map[m];
        ck.require(
            t.dom(fm) == f.obj_map[s.dom(m)] && t.cod(fm) == f.obj_map[s.cod(m)],
            "dom/cod",
            || format!("image of {} has the wrong type", s.morphism_name(m)),
        );
    }
    for x in 0..s.num_objects() {
        ck.require(t.identity(f.obj_map[x]) == f.mor_map[s.identity(x)], "identity", || {
            format!("identity of {} is not preserved", s.object_name(x))
        });
    }
    for a in 0..s.num_morphisms() {
        for b in s.out_of(s.cod(a)) {
            ck.require(
                f.mor_map[s.comp(a, b)] == t.comp(f.mor_map[a], f.mor_map[b]),
                "composition",
                || format!("composite of {} and {} is not preserved", s.morphism_name(a), s.morphism_name(b)),
            );
        }
    }
    ck.finish()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NatTransform {
    pub source: Functor,
    pub target: Functor,
    pub components: Vec<Mor>,
}

pub fn check_nat_transform(n: &NatTransform) -> Report {
    let (f, g) = (&n.source, &n.target);
    let mut ck = Checker::new();
    if !ck.require(f.source == g.source && f.target == g.target, "parallel", || {
        "functors are not parallel".into()
    }) {
        return ck.finish();
    }
    let (s, t) = (&f.source, &f.target);
    if !ck.require(n.components.len() == s.num_objects(), "shape", || "wrong number of components".into()) {
        return ck.finish();
    }
    for x in 0..s.num_objects() {
        let c = n.components[x];
        ck.require(t.dom(c) == f.obj_map[x] && t.cod(c) == g.obj_map[x], "component type", || {
            format!("component at {} has the wrong type", s.object_name(x))
        });
    }
    if !ck.ok() {
        return ck.finish();
    }
    for m in 0..s.num_morphisms() {
        let (x, y) = (s.dom(m), s.cod(m));
        let left = t.comp(f.mor_map[m], n.components[y]);
        let right = t.comp(n.components[x], g.mor_map[m]);
        ck.require(left == right, "naturality", || {
            format!(
                "square at {}: {} then {} differs from {} then {}",
                s.morphism_name(m),
                t.morphism_name(f.mor_map[m]),
                t.morphism_name(n.components[y]),
                t.morphism_name(n.components[x]),
                t.morphism_name(g.mor_map[m])
            )
        });
    }
    ck.finish()
}

/// Comma category with its two projections and the triple behind each object.
#[derive(Clone, Debug)]
pub struct Comma {
    pub category: Cat,
    pub dom_proj: Functor,
    pub cod_proj: Functor,
    /// `(a, b, φ: F a → G b)` per object.
    pub objects: Vec<(Obj, Obj, Mor)>,
}

pub fn comma(f: &Functor, g: &Functor) -> Result<Comma> {
    if f.target != g.target {
        return Err(Error::TypeMismatch("comma of functors with different targets".into()));
    }
    let c = &f.target;
    let (a_cat, b_cat) = (&f.source, &g.source);
    let mut objs = Vec::new();
    for a in 0..a_cat.num_objects() {
        for b in 0..b_cat.num_objects() {
            for &phi in c.hom(f.obj_map[a], g.obj_map[b]) {
                objs.push((a, b, phi));
            }
        }
    }
    let mut mors: Vec<(String, Obj, Obj)> = Vec::new();
    let mut pairs: Vec<(Mor, Mor)> = Vec::new();
    let mut lookup: HashMap<(Obj, Mor, Mor), Mor> = HashMap::new();
    for (i, &(a, b, phi)) in objs.iter().enumerate() {
        for (j, &(a2, b2, psi)) in objs.iter().enumerate() {
            for &u in a_cat.hom(a, a2) {
                for &v in b_cat.hom(b, b2) {
                    if c.comp(f.mor_map[u], psi) == c.comp(phi, g.mor_map[v]) {
                        lookup.insert((i, u, v), mors.len());
                        mors.push((
                            format!("({},{})@{}", a_cat.morphism_name(u), b_cat.morphism_name(v), i),
                            i,
                            j,
                        ));
                        pairs.push((u, v));
                    }
                }
            }
        }
    }
    let identity: Vec<Mor> = objs
        .iter()
        .enumerate()
        .map(|(i, &(a, b, _))| lookup[&(i, a_cat.identity(a), b_cat.identity(b))])
        .collect();
    let names: Vec<String> = objs
        .iter()
        .map(|&(a, b, phi)| format!("({},{},{})", a_cat.object_name(a), b_cat.object_name(b), c.morphism_name(phi)))
        .collect();
    let srcs: Vec<Obj> = mors.iter().map(|m| m.1).collect();
    let category = Arc::new(FinCategory::assemble(names, mors, identity, |x, y| {
        let (u, v) = pairs[x];
        let (u2, v2) = pairs[y];
        lookup.get(&(srcs[x], a_cat.comp(u, u2), b_cat.comp(v, v2))).copied()
    })?);
    let dom_proj = Functor {
        source: category.clone(),
        target: a_cat.clone(),
        obj_map: objs.iter().map(|o| o.0).collect(),
        mor_map: pairs.iter().map(|p| p.0).collect(),
    };
    let cod_proj = Functor {
        source: category.clone(),
        target: b_cat.clone(),
        obj_map: objs.iter().map(|o| o.1).collect(),
        mor_map: pairs.iter().map(|p| p.1).collect(),
    };
    Ok(Comma { category, dom_proj, cod_proj, objects: objs })
}

/// Twisted arrow category: objects are the morphisms of `C`; a morphism
/// `x → y` is a pair `(t, t')` with `x = t then y then t'`. The projection
/// lands in `C × C^op` and sends `x` to `(dom x, cod x)`.
pub fn twisted_arrow(c: &Cat) -> (Cat, Functor) {
    let n = c.num_morphisms();
    let mut mors: Vec<(String, Obj, Obj)> = Vec::new();
    let mut pairs: Vec<(Mor, Mor)> = Vec::new();
    let mut lookup: HashMap<(Obj, Mor, Mor), Mor> = HashMap::new();
    for x in 0..n {
        for y in 0..n {
            for &t in c.hom(c.dom(x), c.dom(y)) {
                for &t2 in c.hom(c.cod(y), c.cod(x)) {
                    if c.comp(c.comp(t, y), t2) == x {
                        lookup.insert((x, t, t2), mors.len());
                        mors.push((format!("({},{})@{}", c.morphism_name(t), c.morphism_name(t2), x), x, y));
                        pairs.push((t, t2));
                    }
                }
            }
        }
    }
    let identity: Vec<Mor> =
        (0..n).map(|x| lookup[&(x, c.identity(c.dom(x)), c.identity(c.cod(x)))]).collect();
    let srcs: Vec<Obj> = mors.iter().map(|m| m.1).collect();
    let tw = Arc::new(
        FinCategory::assemble(c.morphism_names().to_vec(), mors, identity, |a, b| {
            let (t, t2) = pairs[a];
            let (s, s2) = pairs[b];
            lookup.get(&(srcs[a], c.comp(t, s), c.comp(s2, t2))).copied()
        })
        .expect("twisted arrow category"),
    );
    let op = c.opposite();
    let base = Arc::new(c.product(&op));
    let no = c.num_objects();
    let proj = Functor {
        source: tw.clone(),
        target: base,
        obj_map: (0..n).map(|x| c.dom(x) * no + c.cod(x)).collect(),
        mor_map: pairs.iter().map(|&(t, t2)| t * n + t2).collect(),
    };
    (tw, proj)
}

/// Checks that every morphism into `P(e)` has exactly one lift with codomain `e`.
pub fn check_discrete_fibration(p: &Functor) -> Report {
    check_lifting(p, true)
}

/// Checks that every morphism out of `P(e)` has exactly one lift with domain `e`.
pub fn check_discrete_opfibration(p: &Functor) -> Report {
    check_lifting(p, false)
}

fn check_lifting(p: &Functor, fibration: bool) -> Report {
    let (e, b) = (&p.source, &p.target);
    let mut ck = Checker::new();
    for x in 0..e.num_objects() {
        let px = p.obj_map[x];
        for f in 0..b.num_morphisms() {
            let anchored = if fibration { b.cod(f) == px } else { b.dom(f) == px };
            if !anchored {
                continue;
            }
            let lifts = (0..e.num_morphisms())
                .filter(|&m| p.mor_map[m] == f && if fibration { e.cod(m) == x } else { e.dom(m) == x })
                .count();
            ck.require(lifts == 1, "unique lifting", || {
                format!("{} lifts of {} at {}", lifts, b.morphism_name(f), e.object_name(x))
            });
        }
    }
    ck.finish()
}

/// Equivalence classes of objects connected by zig-zags of arrows, ordered by least member.
pub fn connected_components(c: &FinCategory) -> Vec<Vec<Obj>> {
    let mut uf = UnionFind::new(c.num_objects());
    for f in 0..c.num_morphisms() {
        uf.union(c.dom(f), c.cod(f));
    }
    uf.classes()
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    pub fn classes(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut by_root: HashMap<usize, Vec<usize>> = HashMap::new();
        for x in 0..n {
            let r = self.find(x);
            by_root.entry(r).or_default().push(x);
        }
        let mut out: Vec<Vec<usize>> = by_root.into_values().collect();
        out.sort();
        out
    }
}

/// Left and right actions obtained from a diagram by quotienting the comma
/// categories `C/D` and `D/C` by their connected components.
pub fn comprehensive_factorization(d: &Functor) -> (Action, Action) {
    let (dd, c) = (&d.source, &d.target);
    let no = c.num_objects();
    // Left: elements over x are classes of (j, α: x → D j).
    let mut left_elems: Vec<Vec<(Obj, Mor)>> = vec![Vec::new(); no];
    let mut right_elems: Vec<Vec<(Obj, Mor)>> = vec![Vec::new(); no];
    for x in 0..no {
        for j in 0..dd.num_objects() {
            for &a in c.hom(x, d.obj_map[j]) {
                left_elems[x].push((j, a));
            }
            for &b in c.hom(d.obj_map[j], x) {
                right_elems[x].push((j, b));
            }
        }
    }
    let classify = |elems: &Vec<(Obj, Mor)>, left: bool| -> (Vec<usize>, usize) {
        let idx: HashMap<(Obj, Mor), usize> = elems.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut uf = UnionFind::new(elems.len());
        for (i, &(j, a)) in elems.iter().enumerate() {
            for u in dd.out_of(j) {
                let k = dd.cod(u);
                let du = d.mor_map[u];
                if left {
                    uf.union(i, idx[&(k, c.comp(a, du))]);
                }
            }
            if !left {
                for u in dd.into_obj(j) {
                    let k = dd.dom(u);
                    let du = d.mor_map[u];
                    uf.union(i, idx[&(k, c.comp(du, a))]);
                }
            }
        }
        let classes = uf.classes();
        let mut cls = vec![0; elems.len()];
        for (ci, members) in classes.iter().enumerate() {
            for &m in members {
                cls[m] = ci;
            }
        }
        (cls, classes.len())
    };
    let lc: Vec<(Vec<usize>, usize)> = left_elems.iter().map(|e| classify(e, true)).collect();
    let rc: Vec<(Vec<usize>, usize)> = right_elems.iter().map(|e| classify(e, false)).collect();
    let pos = |elems: &Vec<(Obj, Mor)>, e: (Obj, Mor)| elems.iter().position(|&x| x == e).unwrap();
    let mut ltables = Vec::with_capacity(c.num_morphisms());
    let mut rtables = Vec::with_capacity(c.num_morphisms());
    for f in 0..c.num_morphisms() {
        let (x, y) = (c.dom(f), c.cod(f));
        // Left: classes over y restrict along f to classes over x.
        let mut lt = vec![u32::MAX; lc[y].1];
        for (i, &(j, a)) in left_elems[y].iter().enumerate() {
            let img = lc[x].0[pos(&left_elems[x], (j, c.comp(f, a)))];
            lt[lc[y].0[i]] = img as u32;
        }
        ltables.push(lt);
        let mut rt = vec![u32::MAX; rc[x].1];
        for (i, &(j, b)) in right_elems[x].iter().enumerate() {
            let img = rc[y].0[pos(&right_elems[y], (j, c.comp(b, f)))];
            rt[rc[x].0[i]] = img as u32;
        }
        rtables.push(rt);
    }
    let label = |elems: &Vec<(Obj, Mor)>, cls: &(Vec<usize>, usize)| -> Vec<String> {
        let mut out = vec![String::new(); cls.1];
        for (i, &(j, m)) in elems.iter().enumerate() {
            let k = cls.0[i];
            if out[k].is_empty() {
                out[k] = format!("[{}:{}]", dd.object_name(j), c.morphism_name(m));
            }
        }
        out
    };
    let llabels = (0..no).map(|x| label(&left_elems[x], &lc[x])).collect();
    let rlabels = (0..no).map(|x| label(&right_elems[x], &rc[x])).collect();
    let left = Action::from_tables(c.clone(), Variance::Left, lc.iter().map(|p| p.1).collect(), ltables)
        .expect("left factor is an action")
        .with_labels(llabels);
    let right = Action::from_tables(c.clone(), Variance::Right, rc.iter().map(|p| p.1).collect(), rtables)
        .expect("right factor is an action")
        .with_labels(rlabels);
    (left, right)
}

/// Splitting `q: dom e → r`, `i: r → dom e` with `q then i = e` and `i then q = id_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Splitting {
    pub object: Obj,
    pub q: Mor,
    pub i: Mor,
}

pub fn split_idempotent(c: &FinCategory, e: Mor) -> Result<Option<Splitting>> {
    let x = c.dom(e);
    if c.cod(e) != x || c.comp(e, e) != e {
        return Err(Error::NotIdempotent(c.morphism_name(e).to_string()));
    }
    for r in 0..c.num_objects() {
        for &q in c.hom(x, r) {
            for &i in c.hom(r, x) {
                if c.comp(q, i) == e && c.comp(i, q) == c.identity(r) {
                    return Ok(Some(Splitting { object: r, q, i }));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn walking_arrow() -> FinCategory {
        validate_category(&RawCategory {
            objects: vec!["a".into(), "b".into()],
            morphisms: vec![("f".into(), "a".into(), "b".into())],
            ..Default::default()
        })
        .unwrap()
    }

    fn z4() -> FinCategory {
        let els: Vec<String> = (0..4).map(|i| i.to_string()).collect();
        let table: Vec<Vec<usize>> = (0..4).map(|a| (0..4).map(|b| (a + b) % 4).collect()).collect();
        FinCategory::from_monoid("o", &els, 0, &table).unwrap()
    }

    #[test]
    fn walking_arrow_has_three_morphisms() {
        let w = walking_arrow();
        assert_eq!(w.num_morphisms(), 3);
        assert_eq!(w.morphism_name(0), "id_a");
        assert_eq!(w.hom(0, 1).len(), 1);
        assert!(w.hom(1, 0).is_empty());
    }

    #[test]
    fn explicit_table_without_unit_entry_is_missing_composite() {
        let mut compose = vec![
            ("id_a".to_string(), "id_a".to_string(), "id_a".to_string()),
            ("id_b".into(), "id_b".into(), "id_b".into()),
            ("id_a".into(), "f".into(), "f".into()),
            ("f".into(), "id_b".into(), "f".into()),
        ];
        let mut raw = RawCategory {
            objects: vec!["a".into(), "b".into()],
            morphisms: vec![("f".into(), "a".into(), "b".into())],
            compose: compose.clone(),
            explicit_identities: true,
        };
        assert!(validate_category(&raw).is_ok());
        compose.remove(2);
        raw.compose = compose;
        assert_eq!(validate_category(&raw), Err(Error::MissingComposite("id_a".into(), "f".into())));
    }

    #[test]
    fn z4_has_64_associativity_triples() {
        let z = z4();
        assert_eq!(z.num_morphisms(), 4);
        assert_eq!(z.composable_triples(), 64);
    }

    #[test]
    fn duplicate_and_reserved_ids() {
        let raw = RawCategory {
            objects: vec!["a".into()],
            morphisms: vec![("id_a".into(), "a".into(), "a".into())],
            ..Default::default()
        };
        assert_eq!(validate_category(&raw), Err(Error::DuplicateId("id_a".into())));
    }

    #[test]
    fn non_associative_table_is_rejected() {
        // Endomorphisms e, z of one object with e;e = z, z;e = e, e;z = z, z;z = z.
        let raw = RawCategory {
            objects: vec!["o".into()],
            morphisms: vec![("e".into(), "o".into(), "o".into()), ("z".into(), "o".into(), "o".into())],
            compose: vec![
                ("e".into(), "e".into(), "z".into()),
                ("e".into(), "z".into(), "z".into()),
                ("z".into(), "e".into(), "e".into()),
                ("z".into(), "z".into(), "z".into()),
            ],
            explicit_identities: false,
        };
        assert!(matches!(validate_category(&raw), Err(Error::AssociativityViolation(..))));
    }

    #[test]
    fn opposite_is_an_involution() {
        let w = walking_arrow();
        let op = w.opposite();
        assert_eq!(op.dom(2), 1);
        assert_eq!(op.cod(2), 0);
        assert_eq!(op.opposite(), w);
    }

    #[test]
    fn generators_of_z4() {
        let z = z4();
        let (gens, words) = (z.generators(), z.words());
        assert_eq!(gens, &[1]);
        assert_eq!(words[3], vec![1, 1, 1]);
    }

    #[test]
    fn components() {
        assert_eq!(connected_components(&FinCategory::discrete(&["a", "b", "c"])).len(), 3);
        assert_eq!(connected_components(&walking_arrow()), vec![vec![0, 1]]);
    }

    #[test]
    fn identity_splits_through_itself() {
        let w = walking_arrow();
        assert_eq!(split_idempotent(&w, 0).unwrap(), Some(Splitting { object: 0, q: 0, i: 0 }));
        let z = z4();
        for g in 1..4 {
            assert!(matches!(split_idempotent(&z, g), Err(Error::NotIdempotent(_))));
        }
    }

    #[test]
    fn identity_functor_and_transformation() {
        let w = Arc::new(walking_arrow());
        let id = Functor::identity(&w);
        assert!(check_functor(&id).pass());
        let n = NatTransform { source: id.clone(), target: id.clone(), components: vec![0, 1] };
        assert!(check_nat_transform(&n).pass());
    }
}
