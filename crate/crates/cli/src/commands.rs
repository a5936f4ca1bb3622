use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::time::Instant;

use cycle_endo::enumerate::{cardinality, enumerate_monoid, Monoid};
use cycle_endo::green::{self, ClassSummary, Relation};
use cycle_endo::rank::{monoid_rank_with, verify_generating_set, RankResult, Selection};
use cycle_endo::verify::{self, reference_value, Level, Limits};
use cycle_endo::{is_member, CycleContext, DihedralElement, MonoidKind, Transformation};
use serde_json::{json, Value};

use crate::input::{parse_map, read_maps};
use crate::{Command, Failure, Format, LevelArg};

const SCHEMA: u32 = 1;

type Out<'a> = &'a mut dyn Write;

pub fn run(command: Command, cap: usize, out: Out) -> Result<(), Failure> {
    match command {
        Command::Enumerate { target, format } => enumerate(target.kind.into(), target.n, format, out),
        Command::Count { target, check } => count(target.kind.into(), target.n, check, out),
        Command::Member { target, maps } => member(target.kind.into(), target.n, &maps, out),
        Command::Regular { target, maps, list_nonregular } => {
            regular(target.kind.into(), target.n, &maps, list_nonregular, out)
        }
        Command::Green { target, relation, summary, a, b } => {
            let kind = target.kind.into();
            match (a, b) {
                (Some(a), Some(b)) => green_pair(kind, target.n, relation.into(), &a, &b, out),
                _ => green_classes(kind, target.n, relation.into(), summary, cap, out),
            }
        }
        Command::Rank { target, emit_gens, verify_closure, seed, timing } => {
            let started = Instant::now();
            let result = monoid_rank_with(target.kind.into(), target.n, selection(seed))?;
            if let Some(path) = emit_gens {
                fs::write(&path, lines(&result.generators))
                    .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
            }
            let verified = if verify_closure { Some(verify_generating_set(&result, cap)?) } else { None };
            let mut doc = rank_json(&result);
            if let Some(v) = verified {
                doc["verified"] = json!(v);
            }
            if timing {
                doc["wall_time_ms"] = json!(started.elapsed().as_millis() as u64);
            }
            emit(out, &doc)?;
            match verified {
                Some(false) => Err(Failure::check("generators do not produce the whole monoid")),
                _ => Ok(()),
            }
        }
        Command::Gens { target, seed } => {
            let result = monoid_rank_with(target.kind.into(), target.n, selection(seed))?;
            out.write_all(lines(&result.generators).as_bytes())?;
            Ok(())
        }
        Command::Table { max_n, format } => table(max_n, format, out),
        Command::Verify { level, max_n } => {
            let level = match level {
                LevelArg::Quick => Level::Quick,
                LevelArg::Full => Level::Full,
            };
            if max_n < 3 {
                return Err(Failure::usage("--max-n must be at least 3"));
            }
            let reports = verify::run_all(&Limits { level, max_n });
            let passed = reports.iter().all(|r| r.passed);
            emit(
                out,
                &json!({ "schema": SCHEMA, "level": level, "max_n": max_n, "passed": passed, "checks": reports }),
            )?;
            if passed {
                Ok(())
            } else {
                Err(Failure::check("some invariant checks failed"))
            }
        }
    }
}

fn selection(seed: Option<u64>) -> Selection {
    seed.map_or(Selection::Lexicographic, Selection::Seeded)
}

fn emit(out: Out, doc: &Value) -> Result<(), Failure> {
    serde_json::to_writer_pretty(&mut *out, doc).map_err(|e| Failure::usage(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

fn lines(maps: &[Transformation]) -> String {
    maps.iter().map(|t| format!("{t}\n")).collect()
}

fn require_end_or_wend(kind: MonoidKind) -> Result<(), Failure> {
    match kind {
        MonoidKind::End | MonoidKind::WEnd => Ok(()),
        other => Err(cycle_endo::Error::UnsupportedKind(other).into()),
    }
}

fn enumerate(kind: MonoidKind, n: usize, format: Format, out: Out) -> Result<(), Failure> {
    let stream = enumerate_monoid(kind, n)?;
    match format {
        Format::Text => {
            for t in stream {
                writeln!(out, "{t}")?;
            }
        }
        Format::Csv => {
            for t in stream {
                let row: Vec<String> = t.images().iter().map(usize::to_string).collect();
                writeln!(out, "{}", row.join(","))?;
            }
        }
        Format::Json => {
            let elements: Vec<Vec<usize>> = stream.map(|t| t.images()).collect();
            emit(out, &json!({ "schema": SCHEMA, "kind": kind.as_str(), "n": n, "elements": elements }))?;
        }
    }
    Ok(())
}

fn count(kind: MonoidKind, n: usize, check: bool, out: Out) -> Result<(), Failure> {
    let enumerated = enumerate_monoid(kind, n)?.count() as u128;
    let formula = cardinality(kind, n)?;
    let reference = reference_value(kind, n).map(|(size, _)| size);
    let consistent = enumerated == formula && reference.is_none_or(|r| r == formula);
    emit(
        out,
        &json!({
            "schema": SCHEMA,
            "kind": kind.as_str(),
            "n": n,
            "enumerated": enumerated as u64,
            "formula": formula as u64,
            "reference": reference.map(|r| r as u64),
            "consistent": consistent,
        }),
    )?;
    if check && !consistent {
        return Err(Failure::check(format!("{kind}(C_{n}): counts disagree")));
    }
    Ok(())
}

fn member(kind: MonoidKind, n: usize, maps_arg: &crate::Maps, out: Out) -> Result<(), Failure> {
    let ctx = CycleContext::new(n)?;
    let maps = read_maps(&ctx, maps_arg)?.ok_or_else(|| Failure::usage("member needs --map or --in"))?;
    let results: Vec<Value> =
        maps.iter().map(|(text, t)| json!({ "map": text, "member": is_member(t, kind) })).collect();
    let mut doc = json!({ "schema": SCHEMA, "kind": kind.as_str(), "n": n });
    match results.as_slice() {
        [single] if maps_arg.input.is_none() => {
            doc["map"] = single["map"].clone();
            doc["member"] = single["member"].clone();
        }
        _ => doc["results"] = Value::Array(results),
    }
    emit(out, &doc)
}

fn regular(kind: MonoidKind, n: usize, maps: &crate::Maps, list_nonregular: bool, out: Out) -> Result<(), Failure> {
    require_end_or_wend(kind)?;
    let ctx = CycleContext::new(n)?;
    if list_nonregular {
        for t in enumerate_monoid(kind, n)? {
            if green::full_sublist_witness(&t).is_none() {
                writeln!(out, "{t}")?;
            }
        }
        return Ok(());
    }
    match read_maps(&ctx, maps)? {
        Some(maps) => {
            let results = maps
                .iter()
                .map(|(text, t)| {
                    let regular = green::is_regular(t, kind)?;
                    let witness = green::full_sublist_witness(t);
                    Ok(json!({
                        "map": text,
                        "regular": regular,
                        "witness": witness.map(|w| json!({ "start": w.start, "direction": w.direction, "rank": w.rank })),
                        "inverse": witness.map(|w| w.inverse(t).to_string()),
                    }))
                })
                .collect::<Result<Vec<Value>, Failure>>()?;
            emit(out, &json!({ "schema": SCHEMA, "kind": kind.as_str(), "n": n, "results": results }))
        }
        None => {
            let total = cardinality(kind, n)?;
            let nonregular =
                enumerate_monoid(kind, n)?.filter(|t| green::full_sublist_witness(t).is_none()).count() as u64;
            emit(
                out,
                &json!({
                    "schema": SCHEMA,
                    "kind": kind.as_str(),
                    "n": n,
                    "elements": total as u64,
                    "regular": total as u64 - nonregular,
                    "nonregular": nonregular,
                }),
            )
        }
    }
}

fn green_pair(kind: MonoidKind, n: usize, relation: Relation, a: &str, b: &str, out: Out) -> Result<(), Failure> {
    require_end_or_wend(kind)?;
    let ctx = CycleContext::new(n)?;
    let (ta, tb) = (parse_map(&ctx, a)?, parse_map(&ctx, b)?);
    for t in [&ta, &tb] {
        if !is_member(t, kind) {
            return Err(cycle_endo::Error::NotMember(kind).into());
        }
    }
    let mut doc = json!({ "schema": SCHEMA, "kind": kind.as_str(), "n": n, "relation": relation, "a": ta.to_string(), "b": tb.to_string() });
    match relation {
        Relation::R => {
            let related = green::r_related(&ta, &tb);
            doc["related"] = json!(related);
            doc["factor"] = json!(green::factor(&ta, &tb).ok().map(|s| s.to_string()));
        }
        Relation::L => {
            let r = green::l_related(&ta, &tb, kind)?;
            doc["related"] = json!(r.related);
            doc["witness"] = json!(r.witness.map(|w| json!({
                "arc": w.arc.vertices(n),
                "sigma": w.sigma.to_string(),
                "eps1": w.eps1.to_string(),
                "eps2": w.eps2.to_string(),
            })));
        }
        Relation::D => {
            doc["related"] = json!(green::d_related(&ta, &tb, kind)?);
        }
    }
    emit(out, &doc)
}

fn green_classes(
    kind: MonoidKind,
    n: usize,
    relation: Relation,
    summary: bool,
    cap: usize,
    out: Out,
) -> Result<(), Failure> {
    require_end_or_wend(kind)?;
    let monoid = Monoid::load(kind, n, cap)?;
    let classes = green::classes(&monoid, relation)?;
    let s = ClassSummary::of(relation, &classes);
    let sizes: BTreeMap<String, usize> = s.sizes.iter().map(|(k, v)| (k.to_string(), *v)).collect();
    let mut doc = json!({
        "schema": SCHEMA,
        "kind": kind.as_str(),
        "n": n,
        "relation": relation,
        "classes": s.classes,
        "sizes": sizes,
    });
    if !summary {
        let members: Vec<Vec<String>> =
            classes.iter().map(|c| c.iter().map(|&i| monoid.elements()[i].to_string()).collect()).collect();
        doc["members"] = json!(members);
    }
    emit(out, &doc)
}

fn generator_name(t: &Transformation) -> Option<String> {
    DihedralElement::recognize(t).map(|s| s.to_string())
}

pub fn rank_json(result: &RankResult) -> Value {
    let by_rank: Vec<Value> =
        result.generator_count_by_rank.iter().map(|(rank, count)| json!({ "rank": rank, "count": count })).collect();
    let generators: Vec<Value> = result
        .generators
        .iter()
        .map(|g| match generator_name(g) {
            Some(name) => json!({ "map": g.to_string(), "rank": g.rank(), "name": name }),
            None => json!({ "map": g.to_string(), "rank": g.rank() }),
        })
        .collect();
    let strata: Vec<Value> =
        result.strata.iter().map(|s| json!({ "rank": s.rank, "candidates": s.candidates, "kept": s.kept })).collect();
    json!({
        "schema": SCHEMA,
        "kind": result.kind.as_str(),
        "n": result.n,
        "rank": result.rank,
        "generator_count_by_rank": by_rank,
        "generators": generators,
        "strata": strata,
    })
}

fn table(max_n: usize, format: Format, out: Out) -> Result<(), Failure> {
    if max_n < 3 {
        return Err(Failure::usage("--max-n must be at least 3"));
    }
    let rows = cycle_endo::rank::results_table(max_n)?;
    match format {
        Format::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|r| json!({ "n": r.n, "kind": r.kind.as_str(), "size": r.size as u64, "rank": r.rank }))
                .collect();
            emit(out, &json!({ "schema": SCHEMA, "max_n": max_n, "rows": rows }))
        }
        Format::Csv => {
            writeln!(out, "n,kind,size,rank")?;
            for r in &rows {
                writeln!(out, "{},{},{},{}", r.n, r.kind.as_str(), r.size, r.rank)?;
            }
            Ok(())
        }
        Format::Text => {
            let header: Vec<String> = MonoidKind::ALL.iter().map(|k| format!("{:>14}", k.to_string())).collect();
            writeln!(out, "{:>3} {}", "n", header.join(" "))?;
            for chunk in rows.chunks(MonoidKind::ALL.len()) {
                let cells: Vec<String> =
                    chunk.iter().map(|r| format!("{:>14}", format!("{}/{}", r.size, r.rank))).collect();
                writeln!(out, "{:>3} {}", chunk[0].n, cells.join(" "))?;
            }
            Ok(())
        }
    }
}
