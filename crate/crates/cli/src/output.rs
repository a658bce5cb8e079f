use std::fmt::Write as _;

use serde_json::{json, Value};

use metaparts::engine::RunTrace;

use crate::experiment::ExperimentConfig;

pub const TRACE_COLUMNS: [&str; 5] = ["iteration", "evals", "best", "mean", "spread"];

/// 17 significant digits: enough for every f64 to round-trip.
pub fn float(v: f64) -> String {
    format!("{v:.16e}")
}

/// File stem shared by the CSV and JSON variants of one trace.
pub fn trace_stem(cfg: &ExperimentConfig, seed: u64) -> String {
    format!(
        "{}_{}_d{}_b{}_s{seed}",
        cfg.algorithm.id(),
        cfg.benchmark,
        cfg.dims,
        cfg.budget
    )
}

fn seed_list(seeds: &[u64]) -> String {
    seeds.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

fn params_line(cfg: &ExperimentConfig) -> String {
    let p = cfg.algorithm.params();
    let mut s = format!("population_size={}", p.population_size);
    for (k, v) in &p.values {
        let _ = write!(s, " {k}={v}");
    }
    s
}

/// CSV trace: `#` header lines with the full configuration, then the
/// column header and one row per record.
pub fn trace_csv(cfg: &ExperimentConfig, seed: u64, trace: &RunTrace) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "# metaparts {}", metaparts::VERSION);
    let _ = writeln!(s, "# algorithm: {}", cfg.algorithm.id());
    let _ = writeln!(s, "# benchmark: {}", cfg.benchmark);
    let _ = writeln!(s, "# dims: {}", cfg.dims);
    let _ = writeln!(s, "# budget: {}", cfg.budget);
    let _ = writeln!(s, "# seed: {seed}");
    let _ = writeln!(s, "# seeds: {}", seed_list(&cfg.seeds));
    let _ = writeln!(s, "# params: {}", params_line(cfg));
    s.push_str(&TRACE_COLUMNS.join(","));
    s.push('\n');
    for r in &trace.records {
        let _ = writeln!(
            s,
            "{},{},{},{},{}",
            r.iteration,
            r.evals,
            float(r.best),
            float(r.mean),
            float(r.spread)
        );
    }
    s
}

/// JSON mirror of [`trace_csv`]: the same header fields under `config`,
/// and `rows` holding the CSV rows as arrays in column order.
pub fn trace_json(cfg: &ExperimentConfig, seed: u64, trace: &RunTrace) -> Value {
    let p = cfg.algorithm.params();
    let mut params = serde_json::Map::new();
    params.insert("population_size".into(), json!(p.population_size));
    for (k, v) in &p.values {
        params.insert(k.clone(), json!(v));
    }
    json!({
        "metaparts": metaparts::VERSION,
        "config": {
            "algorithm": cfg.algorithm.id().as_str(),
            "benchmark": cfg.benchmark.name(),
            "dims": cfg.dims,
            "budget": cfg.budget,
            "seed": seed,
            "seeds": cfg.seeds,
            "params": params,
        },
        "columns": TRACE_COLUMNS,
        "rows": trace
            .records
            .iter()
            .map(|r| json!([r.iteration, r.evals, r.best, r.mean, r.spread]))
            .collect::<Vec<_>>(),
    })
}

/// Fixed-width, left-aligned text table.
pub fn text_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (i, (c, w)) in cells.iter().zip(&widths).enumerate() {
            if i > 0 {
                s.push_str("  ");
            }
            let _ = write!(s, "{c:<w$}");
        }
        s.trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}

pub fn csv_string(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}
