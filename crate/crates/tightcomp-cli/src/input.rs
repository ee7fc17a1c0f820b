//! Loading of JSON descriptions.
//!
//! Every file is one JSON object with a `"kind"` field. A `"workspace"` file
//! bundles named items under `"items"`. Wherever an item is expected, a value
//! may be given inline, as the name of an item in the enclosing workspace, or
//! as a path relative to the file that mentions it (`path` or `path#name`).

use std::collections::{BTreeMap, HashMap};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde_json::{Map, Value};
use tightcomp::action::{validate_action, Action, EquivariantMap, RawAction, Variance};
use tightcomp::cuts::{AbsoluteCut, SimpleCut};
use tightcomp::fincat::{validate_category, Cat, RawCategory};
use tightcomp::groups::FinMonoid;
use tightcomp::isbell::{lan, ran, Kan};
use tightcomp::poset::FinPoset;
use tightcomp::tight::{LeftTightDiagram, RightTightDiagram};
use tightcomp::Limits;

use crate::error::CliError;

/// Object name of the one-object category of a group or monoid.
pub const MONOID_OBJECT: &str = "*";

#[derive(Clone, Debug)]
pub enum Item {
    Category(Cat),
    Group(FinMonoid, Cat),
    Poset(FinPoset),
    Action(Action),
    Cut(CutItem),
    Tight(TightItem),
}

impl Item {
    pub fn kind(&self) -> &'static str {
        match self {
            Item::Category(_) => "category",
            Item::Group(..) => "group",
            Item::Poset(_) => "poset",
            Item::Action(_) => "action",
            Item::Cut(_) => "cut",
            Item::Tight(_) => "tight_diagram",
        }
    }
}

#[derive(Clone, Debug)]
pub enum CutItem {
    Simple(SimpleCut),
    Absolute(AbsoluteCut),
}

#[derive(Clone, Debug)]
pub enum TightItem {
    Left(LeftTightDiagram),
    Right(RightTightDiagram),
}

/// Loads files on demand and caches parsed documents by path.
pub struct Loader {
    pub limits: Limits,
    docs: HashMap<PathBuf, Value>,
}

struct Scope<'a> {
    dir: PathBuf,
    names: Option<&'a Map<String, Value>>,
}

impl Loader {
    pub fn new(limits: Limits) -> Self {
        Loader { limits, docs: HashMap::new() }
    }

    fn document(&mut self, path: &Path) -> Result<Value, CliError> {
        if let Some(v) = self.docs.get(path) {
            return Ok(v.clone());
        }
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::UnknownReference(format!("{}: {e}", path.display())))?;
        let v: Value =
            serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
        self.docs.insert(path.to_path_buf(), v.clone());
        Ok(v)
    }

    /// Loads the item in a file. A workspace file yields its only item, or the one named `name`.
    pub fn load(&mut self, path: &Path, name: Option<&str>) -> Result<Item, CliError> {
        let doc = self.document(path)?;
        let dir = path.parent().map(Path::to_path_buf).unwrap_or_default();
        self.item_in_document(&doc, dir, name, &path.display().to_string())
    }

    /// Loads every item of a file; a plain file counts as one item named by its stem.
    pub fn load_all(&mut self, path: &Path) -> Result<Vec<(String, Item)>, CliError> {
        let doc = self.document(path)?;
        let dir = path.parent().map(Path::to_path_buf).unwrap_or_default();
        if kind_of(&doc)? == "workspace" {
            let items = items_of(&doc)?;
            let mut out = Vec::new();
            for name in items.keys() {
                out.push((name.clone(), self.item_in_document(&doc, dir.clone(), Some(name), name)?));
            }
            Ok(out)
        } else {
            let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            Ok(vec![(stem, self.parse(&doc, &Scope { dir, names: None })?)])
        }
    }

    fn item_in_document(&mut self, doc: &Value, dir: PathBuf, name: Option<&str>, what: &str) -> Result<Item, CliError> {
        if kind_of(doc)? != "workspace" {
            if let Some(n) = name {
                return Err(CliError::UnknownReference(format!("{what}#{n}")));
            }
            return self.parse(doc, &Scope { dir, names: None });
        }
        let items = items_of(doc)?;
        let key = match name {
            Some(n) => n.to_string(),
            None if items.len() == 1 => items.keys().next().cloned().unwrap_or_default(),
            None => return Err(CliError::Usage(format!("{what} holds several items; pick one with {what}#name"))),
        };
        let v = items.get(&key).ok_or_else(|| CliError::UnknownReference(format!("{what}#{key}")))?;
        self.parse(v, &Scope { dir, names: Some(items) })
    }

    fn resolve(&mut self, v: &Value, scope: &Scope) -> Result<Item, CliError> {
        match v {
            Value::Object(_) => self.parse(v, scope),
            Value::String(r) => {
                if let Some(found) = scope.names.and_then(|n| n.get(r)) {
                    let found = found.clone();
                    return self.parse(&found, scope);
                }
                let (file, name) = match r.split_once('#') {
                    Some((f, n)) => (f, Some(n)),
                    None => (r.as_str(), None),
                };
                let path = scope.dir.join(file);
                if !path.is_file() {
                    return Err(CliError::UnknownReference(r.clone()));
                }
                self.load(&path, name)
            }
            _ => Err(CliError::Parse("a reference must be a string or an object".into())),
        }
    }

    fn category_ref(&mut self, v: &Value, scope: &Scope) -> Result<Cat, CliError> {
        match self.resolve(v, scope)? {
            Item::Category(c) | Item::Group(_, c) => Ok(c),
            Item::Poset(p) => Ok(Arc::new(p.thin_category())),
            other => Err(CliError::Parse(format!("expected a category, found a {}", other.kind()))),
        }
    }

    fn action_ref(&mut self, v: &Value, scope: &Scope) -> Result<Action, CliError> {
        match self.resolve(v, scope)? {
            Item::Action(a) => Ok(a),
            other => Err(CliError::Parse(format!("expected an action, found a {}", other.kind()))),
        }
    }

    fn parse(&mut self, v: &Value, scope: &Scope) -> Result<Item, CliError> {
        match kind_of(v)? {
            "category" => Ok(Item::Category(Arc::new(validate_category(&raw_category(v)?)?))),
            "group" | "monoid" => {
                let m = parse_monoid(v)?;
                if kind_of(v)? == "group" {
                    m.require_group()?;
                }
                let c = m.category(MONOID_OBJECT)?;
                Ok(Item::Group(m, c))
            }
            "poset" => {
                let elements = strings(field(v, "elements")?)?;
                let leq = pairs(v.get("leq").unwrap_or(&Value::Array(vec![])))?;
                Ok(Item::Poset(FinPoset::from_names(elements, &leq)?))
            }
            "action" => {
                let cat = self.category_ref(field(v, "category")?, scope)?;
                let raw = raw_action(v)?;
                Ok(Item::Action(validate_action(&cat, &raw)?))
            }
            "cut" => self.parse_cut(v, scope),
            "tight_diagram" => self.parse_tight(v, scope),
            "workspace" => Err(CliError::Parse("a workspace cannot be nested".into())),
            k => Err(CliError::Parse(format!("unknown kind {k}"))),
        }
    }

    fn parse_cut(&mut self, v: &Value, scope: &Scope) -> Result<Item, CliError> {
        let left = self.action_ref(field(v, "left")?, scope)?;
        let right = self.action_ref(field(v, "right")?, scope)?;
        let l = self.limits;
        let la = lan(&left, l)?;
        let rb = ran(&right, l)?;
        let form = v.get("form").and_then(Value::as_str).unwrap_or("simple");
        match form {
            "simple" => {
                let s = SimpleCut {
                    g_lower: parse_map(field(v, "g_lower")?, &left, &rb.action)?,
                    g_upper: parse_map(field(v, "g_upper")?, &right, &la.action)?,
                    j_lower: parse_map(field(v, "j_lower")?, &rb.action, &left)?,
                    j_upper: parse_map(field(v, "j_upper")?, &la.action, &right)?,
                    left,
                    right,
                };
                Ok(Item::Cut(CutItem::Simple(s)))
            }
            "absolute" => {
                let rla = ran(&la.action, l)?;
                let lrb = lan(&rb.action, l)?;
                let c = AbsoluteCut {
                    a_lower: parse_map(field(v, "a_lower")?, &rb.action, &rb.action)?,
                    a_upper: parse_map(field(v, "a_upper")?, &la.action, &la.action)?,
                    phi_lower: parse_map(field(v, "phi_lower")?, &rla.action, &rla.action)?,
                    phi_upper: parse_map(field(v, "phi_upper")?, &lrb.action, &lrb.action)?,
                    left,
                    right,
                };
                Ok(Item::Cut(CutItem::Absolute(c)))
            }
            f => Err(CliError::Parse(format!("unknown cut form {f}"))),
        }
    }

    fn parse_tight(&mut self, v: &Value, scope: &Scope) -> Result<Item, CliError> {
        let d = self.action_ref(field(v, "diagram")?, scope)?;
        let l = self.limits;
        let kan: Kan = match d.variance() {
            Variance::Left => lan(&d, l)?,
            Variance::Right => ran(&d, l)?,
        };
        let e = match v.get("idempotent") {
            Some(m) => parse_map(m, &kan.action, &kan.action)?,
            None => EquivariantMap::identity(&kan.action),
        };
        Ok(Item::Tight(match d.variance() {
            Variance::Left => TightItem::Left(LeftTightDiagram { diagram: d, phi: e }),
            Variance::Right => TightItem::Right(RightTightDiagram { diagram: d, kappa: e }),
        }))
    }
}

pub fn kind_of(v: &Value) -> Result<&str, CliError> {
    v.get("kind").and_then(Value::as_str).ok_or_else(|| CliError::Parse("missing \"kind\"".into()))
}

fn items_of(doc: &Value) -> Result<&Map<String, Value>, CliError> {
    field(doc, "items")?.as_object().ok_or_else(|| CliError::Parse("\"items\" must be an object".into()))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value, CliError> {
    v.get(key).ok_or_else(|| CliError::Parse(format!("missing \"{key}\"")))
}

fn string(v: &Value) -> Result<String, CliError> {
    v.as_str().map(str::to_string).ok_or_else(|| CliError::Parse(format!("expected a string, found {v}")))
}

fn strings(v: &Value) -> Result<Vec<String>, CliError> {
    v.as_array().ok_or_else(|| CliError::Parse(format!("expected an array, found {v}")))?.iter().map(string).collect()
}

fn tuple(v: &Value, n: usize) -> Result<Vec<String>, CliError> {
    let s = strings(v)?;
    if s.len() != n {
        return Err(CliError::Parse(format!("expected {n} entries in {v}")));
    }
    Ok(s)
}

fn pairs(v: &Value) -> Result<Vec<(String, String)>, CliError> {
    let arr = v.as_array().ok_or_else(|| CliError::Parse("expected an array of pairs".into()))?;
    arr.iter().map(|p| tuple(p, 2).map(|t| (t[0].clone(), t[1].clone()))).collect()
}

fn raw_category(v: &Value) -> Result<RawCategory, CliError> {
    let objects = strings(field(v, "objects")?)?;
    let empty = Value::Array(vec![]);
    let morphisms = v
        .get("morphisms")
        .unwrap_or(&empty)
        .as_array()
        .ok_or_else(|| CliError::Parse("\"morphisms\" must be an array".into()))?
        .iter()
        .map(|m| tuple(m, 3).map(|t| (t[0].clone(), t[1].clone(), t[2].clone())))
        .collect::<Result<_, _>>()?;
    let compose = v
        .get("compose")
        .unwrap_or(&empty)
        .as_array()
        .ok_or_else(|| CliError::Parse("\"compose\" must be an array".into()))?
        .iter()
        .map(|m| tuple(m, 3).map(|t| (t[0].clone(), t[1].clone(), t[2].clone())))
        .collect::<Result<_, _>>()?;
    Ok(RawCategory { objects, morphisms, compose, explicit_identities: false })
}

fn parse_monoid(v: &Value) -> Result<FinMonoid, CliError> {
    let elements = strings(field(v, "elements")?)?;
    let idx = |s: &str| {
        elements.iter().position(|e| e == s).ok_or_else(|| CliError::Lib(tightcomp::Error::UnknownElement(s.into())))
    };
    let unit = idx(&string(field(v, "unit")?)?)?;
    let rows = field(v, "table")?.as_array().ok_or_else(|| CliError::Parse("\"table\" must be an array".into()))?;
    let table = rows
        .iter()
        .map(|r| strings(r)?.iter().map(|s| idx(s)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FinMonoid::new(elements, unit, table)?)
}

fn raw_action(v: &Value) -> Result<RawAction, CliError> {
    let variance = match field(v, "variance")?.as_str() {
        Some("left") => Variance::Left,
        Some("right") => Variance::Right,
        _ => return Err(CliError::Parse("\"variance\" must be \"left\" or \"right\"".into())),
    };
    let fibers = field(v, "fibers")?
        .as_object()
        .ok_or_else(|| CliError::Parse("\"fibers\" must be an object".into()))?
        .iter()
        .map(|(k, e)| Ok((k.clone(), strings(e)?)))
        .collect::<Result<_, CliError>>()?;
    let empty = Map::new();
    let maps = match v.get("maps") {
        Some(m) => m.as_object().ok_or_else(|| CliError::Parse("\"maps\" must be an object".into()))?,
        None => &empty,
    };
    let maps = maps
        .iter()
        .map(|(k, t)| {
            let t = t.as_object().ok_or_else(|| CliError::Parse(format!("table of {k} must be an object")))?;
            Ok((k.clone(), t.iter().map(|(a, b)| Ok((a.clone(), string(b)?))).collect::<Result<_, CliError>>()?))
        })
        .collect::<Result<_, CliError>>()?;
    Ok(RawAction { variance, fibers, maps })
}

/// Reads an equivariant map `{object: [image, ...]}` listing images in the
/// source fiber's order; an image is a target label or a target index.
pub fn parse_map(v: &Value, source: &Action, target: &Action) -> Result<EquivariantMap, CliError> {
    let obj = v.as_object().ok_or_else(|| CliError::Parse("a map must be an object".into()))?;
    let cat = source.category();
    let mut components: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
    for (o, imgs) in obj {
        let x = cat.object_index(o).ok_or_else(|| CliError::Lib(tightcomp::Error::UnknownObject(o.clone())))?;
        let imgs = imgs.as_array().ok_or_else(|| CliError::Parse(format!("component at {o} must be an array")))?;
        if imgs.len() != source.size(x) {
            return Err(CliError::Lib(tightcomp::Error::FiberMismatch(format!(
                "component at {o} has {} entries for {} elements",
                imgs.len(),
                source.size(x)
            ))));
        }
        let mut comp = Vec::with_capacity(imgs.len());
        for img in imgs {
            let j = match img {
                Value::Number(n) => n.as_u64().map(|n| n as usize).filter(|&n| n < target.size(x)),
                Value::String(s) => (0..target.size(x)).find(|&j| target.label(x, j) == *s),
                _ => None,
            }
            .ok_or_else(|| CliError::Lib(tightcomp::Error::UnknownElement(img.to_string())))?;
            comp.push(j as u32);
        }
        components.insert(x, comp);
    }
    let mut out = Vec::with_capacity(cat.num_objects());
    for x in 0..cat.num_objects() {
        match components.remove(&x) {
            Some(c) => out.push(c),
            None if source.size(x) == 0 => out.push(Vec::new()),
            None => {
                return Err(CliError::Lib(tightcomp::Error::FiberMismatch(format!(
                    "no component at {}",
                    cat.object_name(x)
                ))))
            }
        }
    }
    Ok(EquivariantMap { components: out })
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn parse(v: Value) -> Result<Item, CliError> {
        Loader::new(Limits::default()).parse(&v, &Scope { dir: PathBuf::new(), names: None })
    }

    #[test]
    fn inline_category_and_action() {
        let v = json!({
            "kind": "action",
            "variance": "left",
            "category": {"kind": "category", "objects": ["a", "b"], "morphisms": [["f", "a", "b"]]},
            "fibers": {"a": ["x", "y"], "b": ["z"]},
            "maps": {"f": {"z": "y"}},
        });
        let Item::Action(a) = parse(v).unwrap() else { panic!("not an action") };
        assert_eq!(a.sizes(), &[2, 1]);
        let m = parse_map(&json!({"a": ["y", 0], "b": [0]}), &a, &a).unwrap();
        assert_eq!(m.components, vec![vec![1, 0], vec![0]]);
        assert!(parse_map(&json!({"a": ["w", 0], "b": [0]}), &a, &a).is_err());
        assert!(parse_map(&json!({"a": [0]}), &a, &a).is_err());
    }

    #[test]
    fn group_kind_rejects_monoids() {
        let m = json!({"kind": "group", "elements": ["1", "e"], "unit": "1", "table": [["1", "e"], ["e", "e"]]});
        assert!(matches!(parse(m.clone()), Err(CliError::Lib(tightcomp::Error::NotAGroup(_)))));
        let mut m = m;
        m["kind"] = json!("monoid");
        assert!(matches!(parse(m), Ok(Item::Group(..))));
    }

    #[test]
    fn unknown_names_are_reported() {
        assert!(matches!(parse(json!({"kind": "widget"})), Err(CliError::Parse(_))));
        assert!(matches!(parse(json!({"elements": []})), Err(CliError::Parse(_))));
        let v = json!({"kind": "action", "category": "nowhere", "variance": "left", "fibers": {}});
        assert!(matches!(parse(v), Err(CliError::UnknownReference(_))));
    }
}
