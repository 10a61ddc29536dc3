//! One function per subcommand, each returning a finished report.

use std::path::Path;

use brpic::autoeq::{
    bimodule_data, complete_extensions, from_bv, from_ev_lazy, from_hopf_auto, generate_group, partial_dualization,
    preserves_modular_data, standard_generators, BraidedAutoeq, PartialBrEq, Provenance, GENERATE_CAP,
};
use brpic::center::{modular_data, Center, Double};
use brpic::chars::character_table;
use brpic::cohom::h2_classes;
use brpic::fpn::{
    all_generators, bruhat_factorize, cell_census, double_cosets_separated, generate_matrix_group, group_order_oracle,
    subgroup_generators, Family, FpMatrix, MATRIX_GROUP_CAP,
};
use brpic::groups::{automorphisms, named_group, semidirect_decompositions, FiniteGroup, Subgroup};
use serde_json::{json, Value};

use crate::report::{usage, Failure, Header, Outcome, Report, Step};
use crate::{AutoeqCommand, FpnCommand, Global};

fn group_input(global: &Global, group: &str) -> Value {
    json!({ "group": group, "cap": global.cap, "modulus": global.modulus })
}

fn pick<'a, T>(items: &'a [T], index: usize, what: &str) -> Result<&'a T, Step> {
    items.get(index).ok_or_else(|| usage(format!("{what} index {index} out of range (0..{})", items.len())))
}

fn read_json(path: &Path) -> Result<Value, Step> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| usage(format!("{} is not valid JSON: {e}", path.display())))
}

fn field<'a>(v: &'a Value, key: &str, path: &Path) -> Result<&'a Value, Step> {
    v.get(key).ok_or_else(|| usage(format!("{} has no \"{key}\" field", path.display())))
}

fn parse<T: serde::de::DeserializeOwned>(v: &Value, what: &str) -> Result<T, Step> {
    serde_json::from_value(v.clone()).map_err(|e| usage(format!("malformed {what}: {e}")))
}

pub fn chartable(global: &Global, group: &str) -> Result<Report, Failure> {
    Header::new("chartable", group_input(global, group)).run(|| {
        let g = named_group(group)?;
        let table = character_table(&g, global.cap)?;
        let classes = table.classes();
        let result = json!({
            "order": g.order(),
            "classes": (0..classes.len()).map(|c| json!({
                "rep": classes.reps[c],
                "name": g.name(classes.reps[c]),
                "size": classes.size(c),
            })).collect::<Vec<_>>(),
            "degrees": table.degrees(),
            "characters": table.characters().iter().map(|chi| chi.values()).collect::<Vec<_>>(),
        });
        Ok(Outcome::new(result).note("values are exact elements of cyclotomic fields"))
    })
}

pub fn h2(global: &Global, group: &str) -> Result<Report, Failure> {
    Header::new("h2", group_input(global, group)).run(|| {
        let g = named_group(group)?;
        g.check_order_cap(global.cap)?;
        let m = global.modulus.unwrap_or(g.exponent() as u64);
        let h = h2_classes(&g, m)?;
        let result = json!({
            "modulus": m,
            "class_count": h.class_count(),
            "divisors": h.divisors(),
            "representatives": h.representatives().iter().map(|c| c.rows()).collect::<Vec<_>>(),
        });
        Ok(Outcome::new(result).note("cocycle entries k stand for exp(2 pi i k / modulus)"))
    })
}

fn objects_json(center: &Center) -> Vec<Value> {
    center
        .objects()
        .iter()
        .enumerate()
        .map(|(i, o)| {
            json!({
                "index": i,
                "label": center.label(i),
                "class_rep": o.class_rep,
                "char_index": o.char_index,
                "qdim": o.qdim,
            })
        })
        .collect()
}

pub fn center(global: &Global, group: &str, modular: bool) -> Result<Report, Failure> {
    let mut input = group_input(global, group);
    input["modular"] = json!(modular);
    Header::new("center", input).run(|| {
        let g = named_group(group)?;
        let center = Center::new(&g, global.cap)?;
        let mut result = json!({ "count": center.len(), "objects": objects_json(&center) });
        let mut out = Outcome::new(Value::Null);
        if modular {
            let md = modular_data(&center);
            result["s"] = json!(md.s());
            result["t"] = json!(md.t());
            out = out.note("S is normalized so that its unit row is the quantum dimensions");
        }
        out.result = result;
        Ok(out)
    })
}

pub fn autoeq_json(d: &Double, f: &BraidedAutoeq) -> Value {
    let moved: Vec<[String; 2]> = (0..f.len())
        .filter(|&i| f.apply(i) != i)
        .map(|i| [d.center.label(i), d.center.label(f.apply(i))])
        .collect();
    json!({
        "mapping": f.mapping(),
        "order": f.order(),
        "moved": moved,
        "provenance": f.provenance(),
    })
}

fn partial_json(d: &Double, p: &PartialBrEq, completions: &[BraidedAutoeq]) -> Value {
    let pairs: Vec<[String; 2]> =
        p.domain().map(|i| [d.center.label(i), d.center.label(p.get(i).expect("in domain"))]).collect();
    json!({
        "partial": { "mapping": p.mapping(), "pairs": pairs, "provenance": p.provenance() },
        "completions": completions.iter().map(|f| autoeq_json(d, f)).collect::<Vec<_>>(),
    })
}

fn double(global: &Global, group: &str) -> Result<Double, Step> {
    Ok(Double::new(&named_group(group)?, global.cap)?)
}

/// Elements given by index or by name.
fn subgroup(g: &FiniteGroup, elems: &[String]) -> Result<Subgroup, Step> {
    let resolve = |s: &String| -> Result<usize, Step> {
        let s = s.trim();
        match s.parse::<usize>() {
            Ok(x) if x < g.order() => Ok(x),
            Ok(x) => Err(usage(format!("element {x} out of range for a group of order {}", g.order()))),
            Err(_) => g.elements().find(|&x| g.name(x) == s).ok_or_else(|| usage(format!("no element named {s:?}"))),
        }
    };
    let ids = elems.iter().map(resolve).collect::<Result<Vec<_>, _>>()?;
    Ok(Subgroup::new(g, ids)?)
}

pub fn autoeq(global: &Global, command: AutoeqCommand) -> Result<Report, Failure> {
    match command {
        AutoeqCommand::V { group, auto } => {
            let mut input = group_input(global, &group);
            input["auto"] = json!(auto);
            Header::new("autoeq v", input).run(|| {
                let d = double(global, &group)?;
                let autos = automorphisms(d.group(), global.cap)?;
                let f = from_hopf_auto(&d, pick(&autos, auto, "automorphism")?)?;
                Ok(Outcome::new(autoeq_json(&d, &f)))
            })
        }
        AutoeqCommand::Bv { group, auto, cocycle } => {
            let mut input = group_input(global, &group);
            input["auto"] = json!(auto);
            input["cocycle"] = json!(cocycle);
            Header::new("autoeq bv", input).run(|| {
                let d = double(global, &group)?;
                let g = d.group();
                let autos = automorphisms(g, global.cap)?;
                let h = h2_classes(g, global.modulus.unwrap_or(g.exponent() as u64))?;
                let mu = pick(h.representatives(), cocycle, "cocycle class")?;
                let f = from_bv(&d, pick(&autos, auto, "automorphism")?, mu)?;
                Ok(Outcome::new(autoeq_json(&d, &f)))
            })
        }
        AutoeqCommand::Ev { group, subgroup: elems, cocycle } => {
            let mut input = group_input(global, &group);
            input["subgroup"] = json!(elems);
            input["cocycle"] = json!(cocycle);
            Header::new("autoeq ev", input).run(|| {
                let d = double(global, &group)?;
                let s = subgroup(d.group(), &elems)?;
                let local = s.embed(d.group()).group;
                let h = h2_classes(&local, global.modulus.unwrap_or(local.exponent() as u64))?;
                let eta = pick(h.representatives(), cocycle, "cocycle class")?;
                let partial = from_ev_lazy(&d, &s, eta)?;
                let found = complete_extensions(&d, &partial)?;
                Ok(Outcome::new(partial_json(&d, &partial, &found))
                    .note("only the vacuum sector is given by the construction; the rest is found by search"))
            })
        }
        AutoeqCommand::Rprime { group, normal } => {
            let mut input = group_input(global, &group);
            input["normal"] = json!(normal);
            Header::new("autoeq rprime", input).run(|| {
                let d = double(global, &group)?;
                let n = subgroup(d.group(), &normal)?;
                let (n, q) = semidirect_decompositions(d.group())
                    .into_iter()
                    .find(|(m, _)| *m == n)
                    .ok_or(brpic::Error::NoComplement)?;
                let partial = partial_dualization(&d, &n, &q, None)?;
                let found = complete_extensions(&d, &partial)?;
                let mut result = partial_json(&d, &partial, &found);
                result["complement"] = json!(q.elements());
                Ok(Outcome::new(result)
                    .note("only the vacuum sector is given by the construction; the rest is found by search"))
            })
        }
        AutoeqCommand::Generate { group, all_subgroups } => {
            let mut input = group_input(global, &group);
            input["all_subgroups"] = json!(all_subgroups);
            Header::new("autoeq generate", input).run(|| {
                let d = double(global, &group)?;
                let gens = standard_generators(&d, all_subgroups, global.modulus, global.cap)?;
                let generated = generate_group(d.len(), &gens.generators, GENERATE_CAP)?;
                let result = json!({
                    "objects": d.len(),
                    "generator_counts": {
                        "v": gens.count("v"),
                        "bv": gens.count("bv"),
                        "ev": gens.count("ev"),
                        "rprime": gens.count("rprime"),
                    },
                    "generators": gens.generators.iter().map(|f| autoeq_json(&d, f)).collect::<Vec<_>>(),
                    "skipped": gens.skipped,
                    "group_order": generated.elements.len(),
                });
                Ok(Outcome::new(result).note("the generated group is a subgroup of all braided autoequivalences"))
            })
        }
        AutoeqCommand::Verify { mapping } => {
            let input = json!({ "file": mapping.display().to_string(), "cap": global.cap });
            Header::new("autoeq verify", input).run(|| {
                let v = read_json(&mapping)?;
                let group: String = parse(field(&v, "group", &mapping)?, "group")?;
                let map: Vec<usize> = parse(field(&v, "mapping", &mapping)?, "mapping")?;
                let d = double(global, &group)?;
                let verdict = preserves_modular_data(&map, &d);
                let result = json!({
                    "group": group,
                    "braided": verdict.is_ok(),
                    "violation": verdict.as_ref().err(),
                    "message": verdict.as_ref().err().map(ToString::to_string),
                });
                let mut out = Outcome::new(result);
                out.failed = verdict.is_err();
                Ok(out)
            })
        }
        AutoeqCommand::Bimodule { construction } => {
            let input = json!({ "file": construction.display().to_string(), "cap": global.cap });
            Header::new("autoeq bimodule", input).run(|| {
                let v = read_json(&construction)?;
                let group: String = parse(field(&v, "group", &construction)?, "group")?;
                let prov: Provenance = parse(field(&v, "construction", &construction)?, "construction")?;
                let g = named_group(&group)?;
                g.check_order_cap(global.cap)?;
                let data = bimodule_data(&g, &prov)?;
                Ok(Outcome::new(json!(data)))
            })
        }
    }
}

fn family_name(f: Family) -> &'static str {
    match f {
        Family::V => "v",
        Family::Bv => "bv",
        Family::Ev => "ev",
        Family::R => "r",
    }
}

const FAMILIES: [Family; 4] = [Family::V, Family::Bv, Family::Ev, Family::R];

pub fn fpn(_global: &Global, p: u64, n: usize, command: FpnCommand) -> Result<Report, Failure> {
    let base = json!({ "p": p, "n": n });
    match command {
        FpnCommand::Orders => Header::new("fpn orders", base).run(|| {
            let oracle = group_order_oracle(p, n)?;
            let generated = generate_matrix_group(p, 2 * n, &all_generators(p, n)?, MATRIX_GROUP_CAP)?.len() as u64;
            let mut out = Outcome::new(json!({ "oracle": oracle, "generated": generated, "equal": oracle == generated }))
                .note("oracle: count of all form-preserving matrices by exhaustive column search");
            out.failed = oracle != generated;
            Ok(out)
        }),
        FpnCommand::Generate => Header::new("fpn generate", base).run(|| {
            let mut families = serde_json::Map::new();
            for f in FAMILIES {
                let gens = subgroup_generators(p, n, f)?;
                families.insert(family_name(f).into(), json!(gens.iter().map(FpMatrix::rows).collect::<Vec<_>>()));
            }
            let order = generate_matrix_group(p, 2 * n, &all_generators(p, n)?, MATRIX_GROUP_CAP)?.len();
            Ok(Outcome::new(json!({ "generators": families, "group_order": order })))
        }),
        FpnCommand::Bruhat { all: true, .. } => Header::new("fpn bruhat --all", base).run(|| {
            let elements = generate_matrix_group(p, 2 * n, &all_generators(p, n)?, MATRIX_GROUP_CAP)?;
            let census = cell_census(p, n, &elements)?;
            let mut out = Outcome::new(json!({
                "census": census,
                "nonempty_cells": census.nonempty_cells(),
                "reflections_separated": double_cosets_separated(p, n)?,
            }));
            out.failed = census.failures > 0;
            Ok(out)
        }),
        FpnCommand::Bruhat { matrix, .. } => {
            let path = matrix.expect("clap requires --all or --matrix");
            let mut input = base;
            input["matrix"] = json!(path.display().to_string());
            Header::new("fpn bruhat --matrix", input).run(|| {
                let v = read_json(&path)?;
                let rows: Vec<Vec<u64>> = parse(field(&v, "rows", &path)?, "rows")?;
                let mp: u64 = match v.get("p") {
                    Some(x) => parse(x, "p")?,
                    None => p,
                };
                if mp != p || rows.len() != 2 * n {
                    return Err(usage(format!("matrix must be {0}x{0} over F_{p}", 2 * n)));
                }
                let m = FpMatrix::new(p, rows)?;
                let cell = bruhat_factorize(&m)?;
                Ok(Outcome::new(json!({
                    "d": cell.d,
                    "b": cell.b.rows(),
                    "r": cell.r.rows(),
                    "e": cell.e.rows(),
                })))
            })
        }
    }
}
