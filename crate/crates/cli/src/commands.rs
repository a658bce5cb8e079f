use std::io::Write;
use std::path::Path;

use rayon::prelude::*;
use serde_json::json;

use metaparts::algorithms::AlgorithmId;
use metaparts::taxonomy::{self, Tag};

use crate::error::CliError;
use crate::experiment::{
    parse_algorithm, parse_benchmark, parse_param, parse_seeds, ExperimentConfig, Summary,
};
use crate::output::{csv_string, float, text_table, trace_csv, trace_json, trace_stem};
use crate::{CompareArgs, Format, RunArgs, Shared};

fn emit(out: &mut dyn Write, s: &str) -> Result<(), CliError> {
    out.write_all(s.as_bytes())
        .map_err(|e| CliError::Runtime(format!("writing output: {e}")))
}

fn emit_json(out: &mut dyn Write, v: &serde_json::Value) -> Result<(), CliError> {
    emit(
        out,
        &(serde_json::to_string_pretty(v).expect("json values serialize") + "\n"),
    )
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|e| CliError::io("cannot write", path, e))
}

fn create_dir(dir: &Path) -> Result<(), CliError> {
    std::fs::create_dir_all(dir).map_err(|e| CliError::io("cannot create directory", dir, e))
}

fn overrides(shared: &Shared) -> Result<Vec<(String, f64)>, CliError> {
    shared.params.iter().map(|kv| parse_param(kv)).collect()
}

pub(crate) fn list(format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    let meta = taxonomy::export_metadata();
    let rows: Vec<Vec<String>> = AlgorithmId::ALL
        .iter()
        .zip(&meta)
        .map(|(id, m)| {
            vec![
                id.to_string(),
                m.year.to_string(),
                m.citations.clone(),
                id.summary().to_string(),
            ]
        })
        .collect();
    let header = ["acronym", "year", "citations", "summary"];
    match format {
        Format::Text => emit(out, &text_table(&header, &rows)),
        Format::Csv => emit(out, &csv_string(&header, &rows)),
        Format::Json => emit_json(
            out,
            &json!(rows
                .iter()
                .map(
                    |r| json!({"acronym": r[0], "year": meta_year(&r[1]), "citations": r[2], "summary": r[3]})
                )
                .collect::<Vec<_>>()),
        ),
    }
}

fn meta_year(s: &str) -> u16 {
    s.parse().expect("years are written by this module")
}

pub(crate) fn run(args: &RunArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let ext = match args.format {
        Format::Csv => "csv",
        Format::Json => "json",
        Format::Text => return Err(CliError::Usage("run writes csv or json traces, not text".into())),
    };
    let cfg = ExperimentConfig::new(
        parse_algorithm(&args.algo)?,
        parse_benchmark(&args.shared.benchmark)?,
        args.shared.dims,
        args.budget,
        parse_seeds(&args.seeds)?,
        &overrides(&args.shared)?,
    )?;
    create_dir(&args.out)?;
    let traces = cfg.run_all()?;
    for (seed, trace) in &traces {
        let path = args.out.join(format!("{}.{ext}", trace_stem(&cfg, *seed)));
        let body = match args.format {
            Format::Json => {
                serde_json::to_string_pretty(&trace_json(&cfg, *seed, trace)).expect("json values serialize")
                    + "\n"
            }
            _ => trace_csv(&cfg, *seed, trace),
        };
        write_file(&path, &body)?;
        emit(
            out,
            &format!(
                "seed {seed}: best {} after {} evaluations -> {}\n",
                float(trace.final_best().expect("non-empty trace")),
                trace.evals_used(),
                path.display()
            ),
        )?;
    }
    Ok(())
}

struct CompareRow {
    name: String,
    summary: Summary,
    beats_oracle: Option<bool>,
}

pub(crate) fn compare(args: &CompareArgs, out: &mut dyn Write) -> Result<(), CliError> {
    if args.algo.is_empty() {
        return Err(CliError::Usage("compare needs at least one --algo".into()));
    }
    let mut ids = Vec::new();
    for name in &args.algo {
        if name == "all" {
            ids.extend(AlgorithmId::ALL);
        } else {
            ids.push(parse_algorithm(name.trim())?);
        }
    }
    let mut seen = std::collections::HashSet::new();
    ids.retain(|id| seen.insert(*id));

    let benchmark = parse_benchmark(&args.shared.benchmark)?;
    let seeds = parse_seeds(&args.seeds)?;
    let params = overrides(&args.shared)?;
    let configs = ids
        .iter()
        .map(|id| {
            ExperimentConfig::new(
                *id,
                benchmark,
                args.shared.dims,
                args.budget,
                seeds.clone(),
                &params,
            )
        })
        .collect::<Result<Vec<_>, _>>()?;

    let oracle = Summary::of(&configs[0].oracle_finals()?);
    let finals = configs
        .par_iter()
        .map(|cfg| {
            let traces = cfg.run_all()?;
            Ok(traces
                .iter()
                .map(|(_, t)| t.final_best().expect("non-empty trace"))
                .collect::<Vec<f64>>())
        })
        .collect::<Result<Vec<_>, CliError>>()?;

    let mut rows: Vec<CompareRow> = ids
        .iter()
        .zip(&finals)
        .map(|(id, f)| {
            let summary = Summary::of(f);
            CompareRow {
                name: id.to_string(),
                summary,
                beats_oracle: Some(summary.median < oracle.median),
            }
        })
        .collect();
    rows.push(CompareRow {
        name: "random-search".into(),
        summary: oracle,
        beats_oracle: None,
    });

    let header = ["algorithm", "median", "q1", "q3", "iqr", "beats_oracle"];
    let cells = |fmt: &dyn Fn(f64) -> String| -> Vec<Vec<String>> {
        rows.iter()
            .map(|r| {
                vec![
                    r.name.clone(),
                    fmt(r.summary.median),
                    fmt(r.summary.q1),
                    fmt(r.summary.q3),
                    fmt(r.summary.iqr()),
                    r.beats_oracle.map_or(String::new(), |b| b.to_string()),
                ]
            })
            .collect()
    };
    let (body, ext) = match args.format {
        Format::Text => {
            let mut s = format!(
                "{} d={} budget={} seeds={}\n",
                benchmark,
                args.shared.dims,
                args.budget,
                seeds.len()
            );
            s.push_str(&text_table(&header, &cells(&|v| format!("{v:.4e}"))));
            (s, "txt")
        }
        Format::Csv => (csv_string(&header, &cells(&float)), "csv"),
        Format::Json => {
            let v = json!({
                "benchmark": benchmark.name(),
                "dims": args.shared.dims,
                "budget": args.budget,
                "seeds": seeds,
                "rows": rows.iter().map(|r| json!({
                    "algorithm": r.name,
                    "median": r.summary.median,
                    "q1": r.summary.q1,
                    "q3": r.summary.q3,
                    "iqr": r.summary.iqr(),
                    "beats_oracle": r.beats_oracle,
                })).collect::<Vec<_>>(),
            });
            (
                serde_json::to_string_pretty(&v).expect("json values serialize") + "\n",
                "json",
            )
        }
    };
    emit(out, &body)?;
    if let Some(dir) = &args.out {
        create_dir(dir)?;
        let path = dir.join(format!(
            "compare_{benchmark}_d{}_b{}.{ext}",
            args.shared.dims, args.budget
        ));
        write_file(&path, &body)?;
    }
    Ok(())
}

fn tag_kind(t: Tag) -> &'static str {
    match t {
        Tag::Concept(_) => "concept",
        Tag::Feature(_) => "feature",
    }
}

fn joined(ids: &[AlgorithmId]) -> String {
    ids.iter().map(|id| id.as_str()).collect::<Vec<_>>().join(",")
}

pub(crate) fn manifest(id: &str, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    let ids: Vec<AlgorithmId> = if id == "all" {
        AlgorithmId::ALL.to_vec()
    } else {
        vec![parse_algorithm(id)?]
    };
    let index: Vec<(Tag, Vec<AlgorithmId>)> = if id == "all" {
        Tag::all()
            .into_iter()
            .map(|t| (t, taxonomy::algorithms_with(t)))
            .collect()
    } else {
        Vec::new()
    };
    match format {
        Format::Text => {
            let mut s = String::new();
            for id in &ids {
                let m = taxonomy::manifest_of(*id);
                let c: Vec<String> = m.concepts.iter().map(|t| t.to_string()).collect();
                let f: Vec<String> = m.features.iter().map(|t| t.to_string()).collect();
                s.push_str(&format!(
                    "{id}\n  concepts: {}\n  features: {}\n  boundary: {}\n",
                    c.join(", "),
                    f.join(", "),
                    m.boundary
                ));
            }
            if !index.is_empty() {
                s.push('\n');
                let rows: Vec<Vec<String>> = index
                    .iter()
                    .map(|(t, m)| vec![t.to_string(), tag_kind(*t).to_string(), joined(m)])
                    .collect();
                s.push_str(&text_table(&["tag", "kind", "algorithms"], &rows));
            }
            emit(out, &s)
        }
        Format::Csv => {
            let mut s = taxonomy::manifests_csv(&ids);
            if !index.is_empty() {
                let rows: Vec<Vec<String>> = index
                    .iter()
                    .map(|(t, m)| vec![t.to_string(), tag_kind(*t).to_string(), joined(m)])
                    .collect();
                s.push('\n');
                s.push_str(&csv_string(&["tag", "kind", "algorithms"], &rows));
            }
            emit(out, &s)
        }
        Format::Json => {
            let manifests = taxonomy::manifests_json(&ids);
            let v = if index.is_empty() {
                manifests[0].clone()
            } else {
                json!({
                    "manifests": manifests,
                    "index": index.iter().map(|(t, m)| json!({
                        "tag": t.as_str(),
                        "kind": tag_kind(*t),
                        "algorithms": m.iter().map(|id| id.as_str()).collect::<Vec<_>>(),
                    })).collect::<Vec<_>>(),
                })
            };
            emit_json(out, &v)
        }
    }
}

pub(crate) fn metadata(format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    let meta = taxonomy::export_metadata();
    match format {
        Format::Text => {
            let rows: Vec<Vec<String>> = meta
                .iter()
                .map(|m| {
                    vec![
                        m.acronym.clone(),
                        m.year.to_string(),
                        m.citations.clone(),
                        m.name.clone(),
                    ]
                })
                .collect();
            emit(out, &text_table(&["acronym", "year", "citations", "name"], &rows))
        }
        Format::Csv => emit(out, &taxonomy::metadata_csv()),
        Format::Json => emit_json(out, &serde_json::to_value(&meta).expect("records serialize")),
    }
}
