use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde_json::{json, Map, Value};
use tightcomp::action::{equivariant_maps, find_isomorphism, Action, Variance};
use tightcomp::cuts::{
    check_absolute_cut, check_full_cut, check_simple_cut, cut_homs, enumerate_cuts, jay_scan, simple_to_absolute,
    simple_to_full, AbsoluteCut,
};
use tightcomp::fincat::Cat;
use tightcomp::groups::{group_lan, is_free, orbits, z4_demo, FinMonoid, FreenessWitness, GAction};
use tightcomp::isbell::{comonad_square, gaps_enumerate, lan, monad_square, ran, unit};
use tightcomp::poset::{order_isomorphism, DmCompletion, FinPoset};
use tightcomp::tight::{
    certify_tight_colimit, certify_tight_limit, check_right_tight_diagram, check_tight_diagram, embed_object,
    tight_colimit, tight_colimit_via_split, tight_limit, tight_limit_via_split,
};
use tightcomp::Limits;

use crate::corpus::{self, CorpusConfig};
use crate::error::CliError;
use crate::input::{CutItem, Item, Loader, TightItem};
use crate::output;

/// Default largest poset `dm-oracle` scans the powerset of.
pub const ORACLE_MAX_ELEMENTS: usize = 20;

#[derive(Clone, Debug)]
pub enum Command {
    Validate(PathBuf),
    Dm(PathBuf),
    DmOracle(PathBuf),
    Lan(PathBuf),
    Ran(PathBuf),
    Square(PathBuf),
    Gaps(PathBuf, PathBuf),
    CheckCut(PathBuf),
    CutsEnum { category: PathBuf, cap: usize },
    TightColim(PathBuf),
    TightLim(PathBuf),
    Embed { category: PathBuf, object: String },
    GroupLan { group: PathBuf, action: PathBuf },
    Z4Demo,
    CorpusVerify(CorpusConfig),
}

/// Exit status and the JSON document to print.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub code: i32,
    pub value: Value,
}

impl Outcome {
    fn verdict(pass: bool, mut value: Value) -> Outcome {
        value["status"] = Value::from(if pass { "pass" } else { "fail" });
        Outcome { code: if pass { 0 } else { 1 }, value }
    }
}

pub fn run(cmd: &Command, limits: Limits) -> Outcome {
    match dispatch(cmd, limits) {
        Ok(o) => o,
        Err(e) => Outcome { code: e.exit_code(), value: output::error(&e) },
    }
}

/// Loads `path`, accepting `file#name` to select a workspace item.
fn load(loader: &mut Loader, path: &Path) -> Result<Item, CliError> {
    let s = path.to_string_lossy();
    match s.rsplit_once('#') {
        Some((file, name)) if !name.contains('/') => loader.load(Path::new(file), Some(name)),
        _ => loader.load(path, None),
    }
}

fn expect_poset(item: Item) -> Result<FinPoset, CliError> {
    match item {
        Item::Poset(p) => Ok(p),
        other => Err(CliError::Parse(format!("expected a poset, found a {}", other.kind()))),
    }
}

fn expect_action(item: Item) -> Result<Action, CliError> {
    match item {
        Item::Action(a) => Ok(a),
        other => Err(CliError::Parse(format!("expected an action, found a {}", other.kind()))),
    }
}

fn expect_category(item: Item) -> Result<Cat, CliError> {
    match item {
        Item::Category(c) | Item::Group(_, c) => Ok(c),
        Item::Poset(p) => Ok(Arc::new(p.thin_category())),
        other => Err(CliError::Parse(format!("expected a category, found a {}", other.kind()))),
    }
}

fn dispatch(cmd: &Command, limits: Limits) -> Result<Outcome, CliError> {
    let mut loader = Loader::new(limits);
    let l = limits;
    match cmd {
        Command::Validate(path) => validate(&mut loader, path),
        Command::Dm(path) => {
            let p = expect_poset(load(&mut loader, path)?)?;
            Ok(Outcome::verdict(true, dm_json(&p, &p.dm_completion())))
        }
        Command::DmOracle(path) => {
            let p = expect_poset(load(&mut loader, path)?)?;
            let oracle = DmCompletion { cuts: p.oracle_dm(ORACLE_MAX_ELEMENTS)?, embedding: Vec::new() };
            let dm = p.dm_completion();
            let agrees = order_isomorphism(&dm.as_poset(), &oracle.as_poset()).is_some();
            let v = json!({
                "kind": "dm_oracle",
                "count": oracle.cuts.len(),
                "cuts": oracle.cuts.iter().map(|c| output::poset_cut(&p, c)).collect::<Vec<_>>(),
                "completion_count": dm.cuts.len(),
                "agrees": agrees,
            });
            Ok(Outcome::verdict(agrees, v))
        }
        Command::Lan(path) | Command::Ran(path) => {
            let a = expect_action(load(&mut loader, path)?)?;
            let is_lan = matches!(cmd, Command::Lan(_));
            let k = if is_lan { lan(&a, l)? } else { ran(&a, l)? };
            let v = json!({
                "kind": if is_lan { "lan" } else { "ran" },
                "source": output::action(&a),
                "result": output::action(&k.action),
            });
            Ok(Outcome::verdict(true, v))
        }
        Command::Square(path) => {
            let a = expect_action(load(&mut loader, path)?)?;
            let v = match a.variance() {
                Variance::Left => {
                    let u = unit(&a, l)?;
                    json!({
                        "kind": "square",
                        "source": output::action(&a),
                        "result": output::action(&monad_square(&a, l)?),
                        "unit": output::map(&u.map, &u.ran_lan.action),
                    })
                }
                Variance::Right => json!({
                    "kind": "square",
                    "source": output::action(&a),
                    "result": output::action(&comonad_square(&a, l)?),
                }),
            };
            Ok(Outcome::verdict(true, v))
        }
        Command::Gaps(pa, pb) => {
            let a = expect_action(load(&mut loader, pa)?)?;
            let b = expect_action(load(&mut loader, pb)?)?;
            let gaps = gaps_enumerate(&a, &b, l)?;
            let rb = ran(&b, l)?;
            let la = lan(&a, l)?;
            let lower = equivariant_maps(&a, &rb.action, l)?.len();
            let upper = equivariant_maps(&b, &la.action, l)?.len();
            let c = a.category();
            let tables: Vec<Value> = gaps
                .iter()
                .map(|g| {
                    Value::Array(
                        g.phi
                            .iter()
                            .map(|row| row.iter().map(|&m| Value::from(c.morphism_name(m))).collect())
                            .collect(),
                    )
                })
                .collect();
            let agree = gaps.len() == lower && gaps.len() == upper;
            let v = json!({
                "kind": "gaps",
                "count": gaps.len(),
                "maps_into_ran": lower,
                "maps_into_lan": upper,
                "agree": agree,
                "gaps": tables,
            });
            Ok(Outcome::verdict(agree, v))
        }
        Command::CheckCut(path) => match load(&mut loader, path)? {
            Item::Cut(CutItem::Simple(s)) => {
                let r = check_simple_cut(&s, l)?;
                let mut v = json!({"kind": "check_cut", "form": "simple", "report": output::report(&r)});
                if r.pass() {
                    let full = check_full_cut(&simple_to_full(&s, l)?, l)?;
                    let scan = jay_scan(&s, l)?;
                    v["full"] = json!({
                        "report": output::report(&full.report),
                        "coherence_pair_one": full.eq71,
                        "coherence_pair_two": full.eq72,
                    });
                    v["bullets_agree"] = Value::from(scan.bullets_agree);
                    v["retractions_invertible"] = Value::from(scan.js_invertible);
                    let abs = simple_to_absolute(&s, l)?;
                    v["absolute"] = output::report(&check_absolute_cut(&abs, l)?);
                    let pass = full.report.pass() && full.eq71 == full.eq72 && scan.implication_holds();
                    return Ok(Outcome::verdict(pass, v));
                }
                Ok(Outcome::verdict(false, v))
            }
            Item::Cut(CutItem::Absolute(c)) => {
                let r = check_absolute_cut(&c, l)?;
                Ok(Outcome::verdict(r.pass(), json!({"kind": "check_cut", "form": "absolute", "report": output::report(&r)})))
            }
            other => Err(CliError::Parse(format!("expected a cut, found a {}", other.kind()))),
        },
        Command::CutsEnum { category, cap } => {
            let c = expect_category(load(&mut loader, category)?)?;
            let cuts = enumerate_cuts(&c, *cap, l)?;
            let list = cuts.iter().map(|k| cut_json(k, l)).collect::<Result<Vec<_>, CliError>>()?;
            Ok(Outcome::verdict(true, json!({"kind": "cuts", "cap": cap, "count": cuts.len(), "cuts": list})))
        }
        Command::TightColim(path) | Command::TightLim(path) => tight(&mut loader, path, matches!(cmd, Command::TightColim(_))),
        Command::Embed { category, object } => {
            let c = expect_category(load(&mut loader, category)?)?;
            let x = c.object_index(object).ok_or_else(|| CliError::Lib(tightcomp::Error::UnknownObject(object.clone())))?;
            let ex = embed_object(&c, x, l)?;
            let check = check_absolute_cut(&ex, l)?;
            let mut counts = Map::new();
            let mut faithful = true;
            for y in 0..c.num_objects() {
                let ey = embed_object(&c, y, l)?;
                let homs = cut_homs(&ex, &ey, l)?.len();
                let hom = c.hom(x, y).len();
                faithful &= homs == hom;
                counts.insert(c.object_name(y).to_string(), json!({"hom": hom, "cut_homs": homs}));
            }
            let v = json!({
                "kind": "embed",
                "object": object,
                "left": output::action(&ex.left),
                "right": output::action(&ex.right),
                "report": output::report(&check),
                "hom_counts": counts,
                "full_and_faithful": faithful,
            });
            Ok(Outcome::verdict(check.pass() && faithful, v))
        }
        Command::GroupLan { group, action } => {
            let (m, cat) = match load(&mut loader, group)? {
                Item::Group(m, c) => (m, c),
                other => return Err(CliError::Parse(format!("expected a group, found a {}", other.kind()))),
            };
            let a = expect_action(load(&mut loader, action)?)?;
            group_lan_json(&m, &cat, &a, l)
        }
        Command::Z4Demo => {
            let d = z4_demo(l)?;
            let rows: Vec<Value> = d
                .free_rows
                .iter()
                .map(|r| {
                    let mut row = json!({
                        "orbits": r.orbits,
                        "lan_size": r.lan_size,
                        "lan_orbits": r.lan_orbits,
                        "expected_size": r.expected_size,
                        "expected_orbits": r.expected_orbits,
                    });
                    if r.square_size > 0 {
                        row["square_size"] = Value::from(r.square_size);
                    }
                    row
                })
                .collect();
            let v = json!({
                "kind": "z4_demo",
                "free": rows,
                "non_free_checked": d.non_free_checked,
                "non_free_lan_empty": d.non_free_lan_empty,
                "non_free_square_terminal": d.non_free_square_terminal,
                "left_actions": d.left_actions,
                "right_actions": d.right_actions,
                "twist_bijective": d.twist_bijective,
                "group_lan_agrees": d.group_lan_agrees,
            });
            Ok(Outcome::verdict(d.pass(), v))
        }
        Command::CorpusVerify(cfg) => {
            let summary = corpus::verify(cfg, l);
            Ok(Outcome::verdict(summary.pass(), summary.to_json()))
        }
    }
}

fn validate(loader: &mut Loader, path: &Path) -> Result<Outcome, CliError> {
    let l = loader.limits;
    let s = path.to_string_lossy().into_owned();
    let items = match s.rsplit_once('#') {
        Some((file, name)) => vec![(name.to_string(), loader.load(Path::new(file), Some(name))?)],
        None => loader.load_all(path)?,
    };
    let mut pass = true;
    let mut out = Vec::new();
    for (name, item) in items {
        let mut v = json!({"name": name, "item": item.kind()});
        match &item {
            Item::Category(c) | Item::Group(_, c) => {
                v["objects"] = Value::from(c.num_objects());
                v["morphisms"] = Value::from(c.num_morphisms());
                v["composable_triples"] = Value::from(c.composable_triples());
            }
            Item::Poset(p) => {
                v["elements"] = Value::from(p.len());
                v["complete_lattice"] = Value::from(p.is_complete_lattice());
            }
            Item::Action(a) => {
                v["variance"] = Value::from(output::variance(a.variance()));
                v["size"] = Value::from(a.total());
            }
            Item::Cut(CutItem::Simple(c)) => {
                let r = check_simple_cut(c, l)?;
                pass &= r.pass();
                v["report"] = output::report(&r);
            }
            Item::Cut(CutItem::Absolute(c)) => {
                let r = check_absolute_cut(c, l)?;
                pass &= r.pass();
                v["report"] = output::report(&r);
            }
            Item::Tight(t) => {
                let r = match t {
                    TightItem::Left(d) => check_tight_diagram(d, l),
                    TightItem::Right(d) => check_right_tight_diagram(d, l),
                };
                match r {
                    Ok(r) => {
                        pass &= r.pass();
                        v["report"] = output::report(&r);
                    }
                    Err(e) if CliError::Lib(e.clone()).exit_code() == 1 => {
                        pass = false;
                        v["report"] = output::report(&tightcomp::Report::failed(e.kind(), e.to_string()));
                    }
                    Err(e) => return Err(e.into()),
                }
            }
        }
        out.push(v);
    }
    Ok(Outcome::verdict(pass, json!({"kind": "validate", "items": out})))
}

pub fn dm_json(p: &FinPoset, dm: &DmCompletion) -> Value {
    let n = dm.cuts.len();
    let order: Vec<[usize; 2]> = (0..n)
        .flat_map(|i| (0..n).map(move |j| [i, j]))
        .filter(|&[i, j]| i != j && dm.cuts[i].leq(&dm.cuts[j]))
        .collect();
    let mut embedding = Map::new();
    for (x, &k) in dm.embedding.iter().enumerate() {
        embedding.insert(p.name(x).to_string(), Value::from(k));
    }
    json!({
        "kind": "dm",
        "elements": p.len(),
        "count": n,
        "cuts": dm.cuts.iter().map(|c| output::poset_cut(p, c)).collect::<Vec<_>>(),
        "order": order,
        "embedding": embedding,
    })
}

fn cut_json(k: &AbsoluteCut, l: Limits) -> Result<Value, CliError> {
    let rb = ran(&k.right, l)?;
    let la = lan(&k.left, l)?;
    Ok(json!({
        "kind": "cut",
        "form": "absolute",
        "left": output::action(&k.left),
        "right": output::action(&k.right),
        "a_lower": output::map(&k.a_lower, &rb.action),
        "a_upper": output::map(&k.a_upper, &la.action),
    }))
}

fn tight(loader: &mut Loader, path: &Path, colimit: bool) -> Result<Outcome, CliError> {
    let l = loader.limits;
    let item = match load(loader, path)? {
        Item::Tight(t) => t,
        other => return Err(CliError::Parse(format!("expected a tight diagram, found a {}", other.kind()))),
    };
    let (check, found, split, certified, cat) = match (&item, colimit) {
        (TightItem::Left(d), true) => {
            let check = check_tight_diagram(d, l)?;
            let found = if check.pass() { tight_colimit(d, l)? } else { None };
            let certified = match &found {
                Some(t) => certify_tight_colimit(d, t, l)?,
                None => true,
            };
            let split = if check.pass() { Some(tight_colimit_via_split(d, l)) } else { None };
            (check, found, split, certified, d.diagram.category().clone())
        }
        (TightItem::Right(d), false) => {
            let check = check_right_tight_diagram(d, l)?;
            let found = if check.pass() { tight_limit(d, l)? } else { None };
            let certified = match &found {
                Some(t) => certify_tight_limit(d, t, l)?,
                None => true,
            };
            let split = if check.pass() { Some(tight_limit_via_split(d, l)) } else { None };
            (check, found, split, certified, d.diagram.category().clone())
        }
        (TightItem::Left(_), false) => return Err(CliError::Usage("tight-lim takes a right tight diagram".into())),
        (TightItem::Right(_), true) => return Err(CliError::Usage("tight-colim takes a left tight diagram".into())),
    };
    let result = match &found {
        Some((x, legs)) => output::cone(&cat, *x, legs),
        None => Value::Null,
    };
    let split_json = match &split {
        None => Value::Null,
        Some(Ok((x, legs))) => output::cone(&cat, *x, legs),
        Some(Err(e)) if e.kind() == "SizeLimit" => return Err(e.clone().into()),
        Some(Err(e)) => json!({"error": e.kind()}),
    };
    let split_agrees = match (&split, &found) {
        (Some(Ok(s)), Some(f)) => s == f,
        (Some(Ok(_)), None) => false,
        _ => true,
    };
    let v = json!({
        "kind": if colimit { "tight_colimit" } else { "tight_limit" },
        "report": output::report(&check),
        "result": result,
        "via_split": split_json,
        "certified": certified,
    });
    Ok(Outcome::verdict(check.pass() && certified && split_agrees, v))
}

fn group_lan_json(m: &FinMonoid, cat: &Cat, a: &Action, l: Limits) -> Result<Outcome, CliError> {
    if a.category().num_objects() != 1 || a.category().num_morphisms() != m.len() {
        return Err(CliError::Lib(tightcomp::Error::TypeMismatch("the action is not over this group".into())));
    }
    let a = Action::from_tables(cat.clone(), a.variance(), a.sizes().to_vec(), a.tables().to_vec())?;
    let x = GAction::from_action(m, &a)?;
    let fr = is_free(&x);
    let gl = group_lan(&x)?;
    let generic = lan(&a, l)?;
    let agrees = find_isomorphism(&gl.to_action(cat)?, &generic.action, l)?.is_some();
    let name = |a: usize| m.elements[a].clone();
    let witness = match &fr.witness {
        None => Value::Null,
        Some(FreenessWitness::Stabilizer { a, x: p }) => json!({"stabilizer": name(*a), "point": p}),
        Some(FreenessWitness::NotCancellable { a, b, x: p }) => json!({"collide": [name(*a), name(*b)], "point": p}),
        Some(FreenessWitness::NoGenerator { orbit }) => json!({"orbit_without_generator": orbit}),
    };
    let v = json!({
        "kind": "group_lan",
        "size": x.size,
        "orbits": orbits(&x).len(),
        "free": fr.free,
        "witness": witness,
        "lan_size": gl.size,
        "lan_orbits": orbits(&gl).len(),
        "generic_agrees": agrees,
        "lan": output::action(&generic.action),
    });
    Ok(Outcome::verdict(agrees, v))
}
