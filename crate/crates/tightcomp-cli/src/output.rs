//! JSON renderings. Objects are `serde_json::Map`s, which keep keys sorted.

use serde_json::{json, Map, Value};
use tightcomp::action::{Action, EquivariantMap, Variance};
use tightcomp::fincat::{Cat, Mor, Obj};
use tightcomp::poset::{FinPoset, PosetCut};
use tightcomp::Report;

use crate::error::CliError;

pub fn report(r: &Report) -> Value {
    let failure = match &r.failure {
        Some(v) => json!({"rule": v.rule, "detail": v.detail}),
        None => Value::Null,
    };
    json!({"pass": r.pass(), "checks": r.checks, "failure": failure})
}

pub fn error(e: &CliError) -> Value {
    json!({"kind": "error", "error": e.kind(), "detail": e.to_string()})
}

pub fn variance(v: Variance) -> &'static str {
    match v {
        Variance::Left => "left",
        Variance::Right => "right",
    }
}

/// An action in the input format, with elements named by their labels.
pub fn action(a: &Action) -> Value {
    let c = a.category();
    let mut fibers = Map::new();
    for x in 0..c.num_objects() {
        fibers.insert(c.object_name(x).to_string(), (0..a.size(x)).map(|i| Value::from(a.label(x, i))).collect());
    }
    let mut maps = Map::new();
    for f in c.non_identities() {
        let (src, tgt) = (a.src_obj(f), a.tgt_obj(f));
        if a.size(src) == 0 {
            continue;
        }
        let mut t = Map::new();
        for i in 0..a.size(src) {
            t.insert(a.label(src, i), Value::from(a.label(tgt, a.act(f, i))));
        }
        maps.insert(c.morphism_name(f).to_string(), Value::Object(t));
    }
    json!({
        "kind": "action",
        "variance": variance(a.variance()),
        "size": a.total(),
        "fibers": fibers,
        "maps": maps,
    })
}

/// A map `{object: [image label, ...]}` in the source fiber order.
pub fn map(h: &EquivariantMap, target: &Action) -> Value {
    let c = target.category();
    let mut m = Map::new();
    for (x, comp) in h.components.iter().enumerate() {
        if !comp.is_empty() {
            m.insert(c.object_name(x).to_string(), comp.iter().map(|&j| Value::from(target.label(x, j as usize))).collect());
        }
    }
    Value::Object(m)
}

pub fn cone(c: &Cat, apex: Obj, legs: &[Mor]) -> Value {
    json!({
        "object": c.object_name(apex),
        "legs": legs.iter().map(|&m| c.morphism_name(m)).collect::<Vec<_>>(),
    })
}

pub fn poset_cut(p: &FinPoset, cut: &PosetCut) -> Value {
    json!({
        "lower": cut.lower.0.ones().map(|x| p.name(x)).collect::<Vec<_>>(),
        "upper": cut.upper.0.ones().map(|x| p.name(x)).collect::<Vec<_>>(),
    })
}

/// Renders a value as indented `key: value` lines.
pub fn text(v: &Value) -> String {
    let mut out = String::new();
    write_text(v, 0, &mut out);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            Some(a.iter().map(|x| scalar(x).unwrap_or_default()).collect::<Vec<_>>().join(" "))
        }
        _ => None,
    }
}

fn write_text(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        write_text(x, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}[{i}]\n"));
                        write_text(x, depth + 1, out);
                    }
                }
            }
        }
        _ => out.push_str(&format!("{pad}{}\n", scalar(v).unwrap_or_default())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_come_out_sorted() {
        let v = json!({"zeta": 1, "alpha": 2, "mid": {"y": 1, "b": 2}});
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"{"alpha":2,"mid":{"b":2,"y":1},"zeta":1}"#);
    }

    #[test]
    fn text_rendering() {
        let v = json!({"a": [1, 2], "b": {"c": null}, "d": [{"e": true}]});
        assert_eq!(text(&v), "a: 1 2\nb:\n  c: -\nd:\n  [0]\n    e: true\n");
    }

    #[test]
    fn actions_round_trip_through_labels() {
        let c = tightcomp::samples::chain(2);
        let a = tightcomp::action::yoneda_left(&c, 1).unwrap();
        let v = action(&a);
        assert_eq!(v["size"], 2);
        assert_eq!(v["variance"], "left");
    }
}
