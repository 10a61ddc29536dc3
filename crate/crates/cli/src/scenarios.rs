//! Named scenarios replayed against stored fixtures.
//!
//! A fixture is the pretty-printed payload of the scenario, written only by
//! `--regenerate`. Comparison is on parsed JSON, so whitespace is not
//! significant but every value is.

use std::path::{Path, PathBuf};

use brpic::autoeq::{complete_extensions, from_bv, generate_group, partial_dualization, standard_generators, GENERATE_CAP};
use brpic::center::Double;
use brpic::cohom::h2_classes;
use brpic::fpn::{all_generators, generate_matrix_group, group_order_oracle, MATRIX_GROUP_CAP};
use brpic::groups::{abelian_normal_subgroups, named_group, outer_classes, semidirect_decompositions, GroupMorphism};
use clap::ValueEnum;
use serde_json::{json, Value};

use crate::commands::autoeq_json;
use crate::report::{pretty, usage, Failure, Header, Outcome, Report, Step};
use crate::Global;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Scenario {
    /// Partial dualization of S3 and the group it generates.
    S3Reflection,
    /// The cocycle twist of S4 exchanging two transposition objects.
    S4BvSwap,
    /// Generated orders of the matrix model against brute force.
    FpnOrders,
    /// A5 has no abelian normal subgroups to dualize.
    A5Rigidity,
}

impl Scenario {
    pub fn name(self) -> &'static str {
        match self {
            Scenario::S3Reflection => "s3-reflection",
            Scenario::S4BvSwap => "s4-bv-swap",
            Scenario::FpnOrders => "fpn-orders",
            Scenario::A5Rigidity => "a5-rigidity",
        }
    }

    /// The payload, computed with the default cap and modulus so that
    /// fixtures do not depend on command-line flags.
    pub fn payload(self) -> brpic::Result<Value> {
        match self {
            Scenario::S3Reflection => s3_reflection(),
            Scenario::S4BvSwap => s4_bv_swap(),
            Scenario::FpnOrders => fpn_orders(),
            Scenario::A5Rigidity => a5_rigidity(),
        }
    }
}

fn double(name: &str) -> brpic::Result<Double> {
    Double::new(&named_group(name)?, brpic::groups::DEFAULT_ORDER_CAP)
}

fn labels(d: &Double) -> Vec<String> {
    (0..d.len()).map(|i| d.center.label(i)).collect()
}

fn s3_reflection() -> brpic::Result<Value> {
    let d = double("S3")?;
    let (n, q) = semidirect_decompositions(d.group())
        .into_iter()
        .find(|(n, _)| n.order() == 3)
        .expect("S3 = Z/3 : Z/2");
    let partial = partial_dualization(&d, &n, &q, None)?;
    let completions = complete_extensions(&d, &partial)?;
    let gens = standard_generators(&d, true, None, brpic::groups::DEFAULT_ORDER_CAP)?;
    let generated = generate_group(d.len(), &gens.generators, GENERATE_CAP)?;
    Ok(json!({
        "objects": labels(&d),
        "vacuum_pairs": partial.domain().map(|i| [d.center.label(i), d.center.label(partial.get(i).expect("domain"))]).collect::<Vec<_>>(),
        "completions": completions.iter().map(|f| autoeq_json(&d, f)).collect::<Vec<_>>(),
        "generated_order": generated.elements.len(),
    }))
}

fn s4_bv_swap() -> brpic::Result<Value> {
    let d = double("S4")?;
    let g = d.group();
    let h = h2_classes(g, g.exponent() as u64)?;
    let mu = &h.representatives()[1];
    let f = from_bv(&d, &GroupMorphism::identity(g.order()), mu)?;
    Ok(json!({
        "h2_classes": h.class_count(),
        "autoeq": autoeq_json(&d, &f),
        "preserves_modular_data": f.preserves_modular_data(&d).is_ok(),
    }))
}

const FPN_CASES: [(u64, usize); 5] = [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2)];

fn fpn_orders() -> brpic::Result<Value> {
    let mut rows = Vec::new();
    for (p, n) in FPN_CASES {
        let generated = generate_matrix_group(p, 2 * n, &all_generators(p, n)?, MATRIX_GROUP_CAP)?.len();
        rows.push(json!({ "p": p, "n": n, "oracle": group_order_oracle(p, n)?, "generated": generated }));
    }
    Ok(json!({ "cases": rows }))
}

fn a5_rigidity() -> brpic::Result<Value> {
    let d = double("A5")?;
    let g = d.group();
    let cap = brpic::groups::DEFAULT_ORDER_CAP;
    let gens = standard_generators(&d, true, None, cap)?;
    let generated = generate_group(d.len(), &gens.generators, GENERATE_CAP)?;
    Ok(json!({
        "objects": d.len(),
        "abelian_normal_subgroup_orders": abelian_normal_subgroups(g).iter().map(|s| s.order()).collect::<Vec<_>>(),
        "semidirect_decompositions": semidirect_decompositions(g).iter().map(|(n, q)| [n.order(), q.order()]).collect::<Vec<_>>(),
        "outer_classes": outer_classes(g, cap)?.len(),
        "h2_classes": h2_classes(g, g.exponent() as u64)?.class_count(),
        "generator_counts": { "v": gens.count("v"), "bv": gens.count("bv"), "ev": gens.count("ev"), "rprime": gens.count("rprime") },
        "generated_order": generated.elements.len(),
    }))
}

pub fn default_fixture_dir() -> PathBuf {
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures"))
}

/// JSON pointers at which two values differ.
pub fn differences(expected: &Value, actual: &Value) -> Vec<String> {
    fn walk(a: &Value, b: &Value, at: String, out: &mut Vec<String>) {
        match (a, b) {
            (Value::Object(x), Value::Object(y)) => {
                let keys: std::collections::BTreeSet<&String> = x.keys().chain(y.keys()).collect();
                for k in keys {
                    match (x.get(k), y.get(k)) {
                        (Some(u), Some(v)) => walk(u, v, format!("{at}/{k}"), out),
                        _ => out.push(format!("{at}/{k}")),
                    }
                }
            }
            (Value::Array(x), Value::Array(y)) if x.len() == y.len() => {
                for (i, (u, v)) in x.iter().zip(y).enumerate() {
                    walk(u, v, format!("{at}/{i}"), out);
                }
            }
            _ if a == b => {}
            _ => out.push(if at.is_empty() { "/".into() } else { at }),
        }
    }
    let mut out = Vec::new();
    walk(expected, actual, String::new(), &mut out);
    out
}

fn load(path: &Path) -> Result<Value, Step> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read fixture {}: {e} (run with --regenerate to create it)", path.display())))?;
    serde_json::from_str(&text).map_err(|e| usage(format!("fixture {} is not valid JSON: {e}", path.display())))
}

pub fn run(_global: &Global, scenario: Scenario, regenerate: bool, dir: Option<PathBuf>) -> Result<Report, Failure> {
    let input = json!({ "name": scenario.name(), "regenerate": regenerate });
    Header::new("examples", input).run(|| {
        let path = dir.unwrap_or_else(default_fixture_dir).join(format!("{}.json", scenario.name()));
        let payload = scenario.payload()?;
        if regenerate {
            std::fs::write(&path, pretty(&payload) + "\n")
                .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
            return Ok(Outcome::new(json!({ "status": "REGENERATED", "payload": payload })));
        }
        let expected = load(&path)?;
        let diff = differences(&expected, &payload);
        let status = if diff.is_empty() { "PASS" } else { "FAIL" };
        let mut out = Outcome::new(json!({ "status": status, "differences": diff, "payload": payload }));
        out.failed = !diff.is_empty();
        Ok(out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn differences_point_at_changed_leaves() {
        let a = json!({ "x": [1, 2], "y": { "z": true } });
        let b = json!({ "x": [1, 3], "y": { "z": true }, "w": 0 });
        assert_eq!(differences(&a, &b), vec!["/w".to_string(), "/x/1".to_string()]);
        assert!(differences(&a, &a).is_empty());
        assert_eq!(differences(&json!(1), &json!(2)), vec!["/".to_string()]);
    }
}
