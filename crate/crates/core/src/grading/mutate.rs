//! Systematic single-field corruptions of a certificate.

use serde_json::Value;

use crate::borel::BorelSubset;
use crate::relroot::RelativeRootSystem;

use super::certificate::StrongGradingCertificate;
use super::verify::verify_certificate;

/// Every certificate obtained by changing exactly one field of the JSON
/// form: numbers ±1, strings extended, booleans flipped, array elements
/// removed, duplicated or swapped with their successor, object keys
/// removed. Each is labelled by a path and the change.
pub fn single_field_mutations(cert: &StrongGradingCertificate) -> Vec<(String, Value)> {
    let root = serde_json::to_value(cert).expect("certificates serialize");
    let mut out = Vec::new();
    walk(&root, &mut Vec::new(), &root, &mut out);
    out
}

#[derive(Clone)]
enum Key {
    Index(usize),
    Field(String),
}

fn path_string(path: &[Key]) -> String {
    let mut s = String::new();
    for k in path {
        match k {
            Key::Index(i) => s.push_str(&format!("[{i}]")),
            Key::Field(f) => {
                s.push('.');
                s.push_str(f);
            }
        }
    }
    s
}

fn at_mut<'a>(v: &'a mut Value, path: &[Key]) -> &'a mut Value {
    path.iter().fold(v, |v, k| match k {
        Key::Index(i) => &mut v[*i],
        Key::Field(f) => &mut v[f.as_str()],
    })
}

fn with(root: &Value, path: &[Key], f: impl FnOnce(&mut Value)) -> Value {
    let mut copy = root.clone();
    f(at_mut(&mut copy, path));
    copy
}

fn walk(node: &Value, path: &mut Vec<Key>, root: &Value, out: &mut Vec<(String, Value)>) {
    let here = path_string(path);
    match node {
        Value::Number(n) => {
            if let Some(x) = n.as_i64() {
                for d in [1i64, -1] {
                    out.push((format!("{here} {x}→{}", x + d), with(root, path, |v| *v = Value::from(x + d))));
                }
            } else if let Some(x) = n.as_u64() {
                out.push((format!("{here} +1"), with(root, path, |v| *v = Value::from(x.wrapping_add(1)))));
            }
        }
        Value::String(s) => {
            let t = format!("{s}x");
            out.push((format!("{here} string"), with(root, path, |v| *v = Value::String(t))));
        }
        Value::Bool(b) => {
            let b = !*b;
            out.push((format!("{here} flip"), with(root, path, |v| *v = Value::Bool(b))));
        }
        Value::Null => {}
        Value::Array(items) => {
            for i in 0..items.len() {
                out.push((format!("{here}[{i}] removed"), with(root, path, |v| {
                    v.as_array_mut().expect("array").remove(i);
                })));
                out.push((format!("{here}[{i}] duplicated"), with(root, path, |v| {
                    let a = v.as_array_mut().expect("array");
                    let x = a[i].clone();
                    a.insert(i, x);
                })));
                if i + 1 < items.len() && items[i] != items[i + 1] {
                    out.push((format!("{here}[{i}] swapped"), with(root, path, |v| {
                        v.as_array_mut().expect("array").swap(i, i + 1);
                    })));
                }
            }
            for (i, item) in items.iter().enumerate() {
                path.push(Key::Index(i));
                walk(item, path, root, out);
                path.pop();
            }
        }
        Value::Object(map) => {
            for key in map.keys() {
                let k = key.clone();
                out.push((format!("{here}.{k} removed"), with(root, path, |v| {
                    v.as_object_mut().expect("object").remove(&k);
                })));
            }
            for (key, item) in map {
                path.push(Key::Field(key.clone()));
                walk(item, path, root, out);
                path.pop();
            }
        }
    }
}

/// Tally of a mutation run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MutationReport {
    pub total: usize,
    /// Rejected because the mutated document is not a certificate.
    pub rejected_by_schema: usize,
    pub rejected_by_verifier: usize,
    /// Labels of mutations that were accepted.
    pub accepted: Vec<String>,
}

impl MutationReport {
    pub fn all_rejected(&self) -> bool {
        self.accepted.is_empty()
    }
}

/// Applies every single-field mutation and checks that each one is
/// rejected, either by the schema or by [`verify_certificate`].
pub fn mutation_report(
    cert: &StrongGradingCertificate,
    rel: &RelativeRootSystem,
    all: &[BorelSubset],
) -> MutationReport {
    let mut report = MutationReport::default();
    for (label, value) in single_field_mutations(cert) {
        report.total += 1;
        match serde_json::from_value::<StrongGradingCertificate>(value) {
            Err(_) => report.rejected_by_schema += 1,
            Ok(m) if verify_certificate(&m, rel, all).is_err() => report.rejected_by_verifier += 1,
            Ok(_) => report.accepted.push(label),
        }
    }
    report
}
