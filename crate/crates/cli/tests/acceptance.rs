//! Release acceptance suite. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.
//!
//! `cargo test -p metaparts-cli --test acceptance`

use std::collections::BTreeMap;
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;

use metaparts::algorithms::{AlgorithmId, AlgorithmInstance};
use metaparts::benchmarks::{random_search, Benchmark};
use metaparts::components::vector::{distance, squared_distance};
use metaparts::components::{
    gaussian_sample, hypersphere_sample, kmeans, levy_step, probabilistic_accept, within_cluster_ss,
};
use metaparts::engine::{run, Budget, Candidate, Optimizer, RngStream};
use metaparts::taxonomy::{algorithms_with_name, export_metadata, manifest_of, ConceptTag};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn median(v: &[f64]) -> f64 {
    let mut v = v.to_vec();
    v.sort_by(f64::total_cmp);
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    }
}

fn roster_completeness() -> Outcome {
    let start = Instant::now();
    let space = Benchmark::Sphere.space(2).unwrap();
    let failures: Vec<String> = AlgorithmId::ALL
        .par_iter()
        .flat_map(|&id| {
            let alg = AlgorithmInstance::with_defaults(id);
            (0..30u64)
                .filter_map(|seed| {
                    match run(&alg, &Benchmark::Sphere, &space, 2000, &mut RngStream::new(seed)) {
                        Ok(r) if r.trace.is_monotone() && r.trace.evals_used() <= 2000 => None,
                        Ok(_) => Some(format!("{id}/seed {seed}: trace not monotone")),
                        Err(e) => Some(format!("{id}/seed {seed}: {e}")),
                    }
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let secs = start.elapsed().as_secs_f64();
    let pass = failures.is_empty() && secs < 60.0;
    let detail = if failures.is_empty() {
        format!("34 algorithms x 30 seeds at budget 2000 in {secs:.1}s (limit 60s)")
    } else {
        format!("{} failing runs, first: {}", failures.len(), failures[0])
    };
    outcome(pass, detail)
}

fn oracle_gate() -> Outcome {
    let space = Benchmark::Sphere.space(2).unwrap();
    let oracle = median(
        &(0..30u64)
            .map(|s| {
                random_search(&Benchmark::Sphere, &space, 5000, &mut RngStream::new(s))
                    .unwrap()
                    .final_best()
                    .unwrap()
            })
            .collect::<Vec<_>>(),
    );
    let medians: Vec<(AlgorithmId, f64)> = AlgorithmId::ALL
        .par_iter()
        .map(|&id| {
            let alg = AlgorithmInstance::with_defaults(id);
            let finals: Vec<f64> = (0..30u64)
                .map(|s| {
                    run(&alg, &Benchmark::Sphere, &space, 5000, &mut RngStream::new(s))
                        .unwrap()
                        .best
                        .cost()
                })
                .collect();
            (id, median(&finals))
        })
        .collect();
    let failing: Vec<String> = medians
        .iter()
        .filter(|(_, m)| m.is_nan() || *m >= oracle)
        .map(|(id, m)| format!("{id}={m:.3e}"))
        .collect();
    let (worst_id, worst) = medians.iter().max_by(|a, b| a.1.total_cmp(&b.1)).unwrap();
    outcome(
        failing.is_empty(),
        if failing.is_empty() {
            format!("all 34 medians below oracle median {oracle:.3e}; weakest {worst_id}={worst:.3e}")
        } else {
            format!("oracle median {oracle:.3e}; not below: {}", failing.join(" "))
        },
    )
}

const GOLDEN: [(&str, &str); 17] = [
    ("restarts", "ABC,BFO,BeA,CS,SFLA"),
    ("sa-like-acceptance", "BA,CRO"),
    ("random-walk-diversification", "ALO,BFO,CS,GSO,KH,MBO"),
    ("spiral-trajectory", "GWO,MFO,WOA"),
    ("es-like", "BeA,HS,IWO"),
    ("ea-like", "BBO,BSO,COA,ICA,SFLA,SCA"),
    ("inverse-square-attraction", "CSS,FA,GSA"),
    ("uses-historical-bests", "PSO,KH,MFO"),
    ("time-dependent-move-size", "ABC,ALO,BB-BC,CSS,IWO,MBO"),
    ("distance-dependent-move-size", "CSS,FA,GSA"),
    ("region-based-sampling", "ALO,BA,BeA,BB-BC,FWA,GWO,WOA"),
    ("local-search-hybrid", "CSO,CRO,COA,FWA,IWO,MBO,WCA"),
    ("target-population-best-only", "BA,CSO,FOA"),
    ("target-fitness-informed", "GwSO,WCA,GWO,COA"),
    ("target-summarized", "KH,BB-BC"),
    ("target-time-varying", "MFO,WOA"),
    (
        "pso-like",
        "ABC,BeA,BA,COA,CSO,CSS,FA,FOA,FPA,GSA,GSO,GWO,GwSO,KH,MFO,TLBO,WCA,WOA",
    ),
];

fn golden_taxonomy() -> Outcome {
    let mut bad = Vec::new();
    for (tag, expected) in GOLDEN {
        let got: Vec<&str> = algorithms_with_name(tag)
            .unwrap()
            .iter()
            .map(|id| id.as_str())
            .collect();
        if got.join(",") != expected {
            bad.push(format!("{tag}: got {}", got.join(",")));
        }
    }
    let universal = [
        ConceptTag::HillClimbing,
        ConceptTag::AdaptiveMemory,
        ConceptTag::PopulationBased,
    ];
    let missing = AlgorithmId::ALL
        .iter()
        .filter(|id| !universal.iter().all(|t| manifest_of(**id).has(*t)))
        .count();
    outcome(
        bad.is_empty() && missing == 0,
        if bad.is_empty() && missing == 0 {
            "17/17 golden sets exact; universal tags in 34/34 manifests".to_string()
        } else {
            format!(
                "mismatches: {}; manifests missing universal tags: {missing}",
                bad.join("; ")
            )
        },
    )
}

fn state_consistency() -> Outcome {
    let space = Benchmark::Sphere.space(2).unwrap();
    let mut vel = Vec::new();
    let mut hist = Vec::new();
    for id in AlgorithmId::ALL {
        let alg = AlgorithmInstance::with_defaults(id);
        let budget = Budget::new(&Benchmark::Sphere, &space, 1_000_000);
        let mut rng = RngStream::new(0);
        let mut state = alg.initialize(&budget, &mut rng).unwrap();
        alg.step(&mut state, &budget, &mut rng).unwrap();
        if state.velocities.is_some() {
            vel.push(id.as_str());
        }
        if state.historical_bests.is_some() {
            hist.push(id.as_str());
        }
    }
    let (vel, hist) = (vel.join(","), hist.join(","));
    outcome(
        vel == "PSO,CSS,GSA" && hist == "PSO,KH,MFO",
        format!("velocities: {{{vel}}}; historical bests: {{{hist}}}"),
    )
}

/// Hill estimate of the tail index from the `k` largest of `xs`.
fn hill_tail_index(xs: &mut [f64], k: usize) -> f64 {
    xs.sort_by(|a, b| b.total_cmp(a));
    let threshold = xs[k].ln();
    let mean_excess = xs[..k].iter().map(|x| x.ln() - threshold).sum::<f64>() / k as f64;
    1.0 / mean_excess
}

fn component_statistics() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;

    // Levy: survival of step lengths decays like s^-1.5.
    let mut rng = RngStream::new(20);
    let mut lengths: Vec<f64> = (0..100_000)
        .map(|_| levy_step(1, 1.0, 1.5, &mut rng).unwrap()[0].abs())
        .collect();
    let slope = -hill_tail_index(&mut lengths, 1000);
    let ok = (slope + 1.5).abs() <= 0.3;
    pass &= ok;
    notes.push(format!("levy slope {slope:.3}"));

    // Gaussian: mean, variance, skewness and excess kurtosis within 3 SE.
    let n = 100_000;
    let (mu, sigma) = (1.5, 2.0);
    let mut rng = RngStream::new(21);
    let xs: Vec<f64> = (0..n)
        .map(|_| gaussian_sample(&[mu], sigma, &mut rng).unwrap()[0])
        .collect();
    let nf = n as f64;
    let mean = xs.iter().sum::<f64>() / nf;
    let m = |p: i32| xs.iter().map(|x| (x - mean).powi(p)).sum::<f64>() / nf;
    let var = m(2) * nf / (nf - 1.0);
    let skew = m(3) / m(2).powf(1.5);
    let kurt = m(4) / (m(2) * m(2)) - 3.0;
    let z = [
        (mean - mu) / (sigma / nf.sqrt()),
        (var - sigma * sigma) / (sigma * sigma * (2.0 / (nf - 1.0)).sqrt()),
        skew / (6.0 / nf).sqrt(),
        kurt / (24.0 / nf).sqrt(),
    ];
    let zmax = z.iter().fold(0.0f64, |a, b| a.max(b.abs()));
    pass &= zmax <= 3.0;
    notes.push(format!("gaussian max |z| {zmax:.2}"));

    // Probabilistic acceptance of a worsening move.
    let mut rng = RngStream::new(22);
    let mut worst_gap = 0.0f64;
    for p in [0.1, 0.3, 0.5, 0.9] {
        let old = Candidate::evaluated(vec![0.0], 1.0);
        let new = Candidate::evaluated(vec![1.0], 2.0);
        let hits = (0..10_000)
            .filter(|_| {
                probabilistic_accept(old.clone(), new.clone(), p, &mut rng)
                    .unwrap()
                    .value
                    == Some(2.0)
            })
            .count();
        worst_gap = worst_gap.max((hits as f64 / 1e4 - p).abs());
    }
    pass &= worst_gap <= 0.02;
    notes.push(format!("accept max gap {worst_gap:.4}"));

    // Hypersphere containment.
    let mut rng = RngStream::new(23);
    let center = [0.3, -1.0, 2.0, 0.0, 5.0];
    let outside = (0..100_000)
        .filter(|i| {
            let r = 0.01 + (*i % 7) as f64;
            distance(&hypersphere_sample(&center, r, &mut rng).unwrap(), &center) > r * (1.0 + 1e-12)
        })
        .count();
    pass &= outside == 0;
    notes.push(format!("hypersphere escapes {outside}/100000"));

    outcome(pass, notes.join("; "))
}

fn greedy_invariant() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    for id in [
        AlgorithmId::Abc,
        AlgorithmId::Bea,
        AlgorithmId::Fwa,
        AlgorithmId::Tlbo,
    ] {
        let alg = AlgorithmInstance::with_defaults(id);
        let mut violations = 0;
        let mut steps = 0;
        // 50 random starts x 20 steps, alternating benchmarks.
        for seed in 0..50u64 {
            let bench = [Benchmark::Rastrigin, Benchmark::Rosenbrock, Benchmark::Ackley][seed as usize % 3];
            let space = bench.space(3).unwrap();
            let budget = Budget::new(&bench, &space, usize::MAX);
            let mut rng = RngStream::new(1000 + seed);
            let mut state = alg.initialize(&budget, &mut rng).unwrap();
            for _ in 0..20 {
                let before = state.population.values();
                alg.step(&mut state, &budget, &mut rng).unwrap();
                steps += 1;
                violations += before
                    .iter()
                    .zip(state.population.values())
                    .filter(|(a, b)| b > *a)
                    .count();
            }
        }
        pass &= violations == 0;
        notes.push(format!("{id} {violations} increases in {steps} steps"));
    }
    outcome(pass, notes.join("; "))
}

fn read_dir_bytes(dir: &Path) -> BTreeMap<String, Vec<u8>> {
    std::fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let e = e.unwrap();
            (
                e.file_name().to_string_lossy().into_owned(),
                std::fs::read(e.path()).unwrap(),
            )
        })
        .collect()
}

fn cli_run(algo: &str, format: &str, dir: &Path) -> i32 {
    let dir = dir.to_str().unwrap();
    let args = [
        "metaparts",
        "run",
        "--algo",
        algo,
        "--benchmark",
        "sphere",
        "--dims",
        "2",
        "--budget",
        "2000",
        "--seeds",
        "0,7",
        "--format",
        format,
        "--out",
        dir,
    ];
    metaparts_cli::main_with(args, &mut std::io::sink(), &mut std::io::stderr())
}

fn determinism() -> Outcome {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let codes: Vec<i32> = AlgorithmId::ALL
        .par_iter()
        .flat_map(|id| {
            ["csv", "json"]
                .iter()
                .flat_map(|fmt| {
                    [
                        cli_run(id.as_str(), fmt, a.path()),
                        cli_run(id.as_str(), fmt, b.path()),
                    ]
                })
                .collect::<Vec<_>>()
        })
        .collect();
    if codes.iter().any(|c| *c != 0) {
        return outcome(false, "a run exited non-zero");
    }
    let (fa, fb) = (read_dir_bytes(a.path()), read_dir_bytes(b.path()));
    let expected = 34 * 2 * 2;
    let pass = fa.len() == expected && fa == fb;
    outcome(
        pass,
        format!("{} trace files per pass, identical: {}", fa.len(), fa == fb),
    )
}

/// Optimal within-cluster sum of squares over all assignments using all
/// `k` labels.
fn brute_force_wcss(points: &[Vec<f64>], k: usize) -> f64 {
    let n = points.len();
    let mut best = f64::INFINITY;
    let mut labels = vec![0usize; n];
    'outer: loop {
        if (0..k).all(|c| labels.contains(&c)) {
            let mut total = 0.0;
            for c in 0..k {
                let members: Vec<&Vec<f64>> = points
                    .iter()
                    .zip(&labels)
                    .filter(|(_, l)| **l == c)
                    .map(|(p, _)| p)
                    .collect();
                let dims = members[0].len();
                let centroid: Vec<f64> = (0..dims)
                    .map(|d| members.iter().map(|p| p[d]).sum::<f64>() / members.len() as f64)
                    .collect();
                total += members
                    .iter()
                    .map(|p| squared_distance(p, &centroid))
                    .sum::<f64>();
            }
            best = best.min(total);
        }
        for l in labels.iter_mut() {
            *l += 1;
            if *l < k {
                continue 'outer;
            }
            *l = 0;
        }
        break;
    }
    best
}

fn kmeans_oracle() -> Outcome {
    let mut rng = RngStream::new(40);
    let mut worst_ratio = 0.0f64;
    let mut failures = 0;
    let instances = 2000;
    for _ in 0..instances {
        let n = 3 + rng.index(6);
        let k = 1 + rng.index(3.min(n));
        let dims = 1 + rng.index(3);
        let points: Vec<Vec<f64>> = (0..n)
            .map(|_| (0..dims).map(|_| rng.range(-1.0, 1.0)).collect())
            .collect();
        let opt = brute_force_wcss(&points, k);
        let clusters = kmeans(&points, k, &mut rng).unwrap();
        let got = within_cluster_ss(&points, &clusters);
        let ratio = if opt > 0.0 { got / opt } else { 1.0 };
        worst_ratio = worst_ratio.max(ratio);
        if got > 1.05 * opt + 1e-12 {
            failures += 1;
        }
    }
    outcome(
        failures == 0,
        format!("{failures}/{instances} instances above 1.05x optimum; worst ratio {worst_ratio:.4}"),
    )
}

const BANDS: [(&str, &str); 34] = [
    ("GA", ">60000 citations"),
    ("PSO", ">50000 citations"),
    ("ALO", ">300 citations"),
    ("ABC", ">4500 citations"),
    ("BFO", ">2500 citations"),
    ("BA", ">600 citations"),
    ("BeA", ">1000 citations"),
    ("BB-BC", ">600 citations"),
    ("BBO", "~2000 citations"),
    ("BSO", ">300 citations"),
    ("CSO", "~300 citations"),
    ("CSS", "~600 citations"),
    ("CRO", ">300 citations"),
    ("COA", "~500 citations"),
    ("CS", "~3000 citations"),
    ("FA", ">2000 citations"),
    ("FWA", ">300 citations"),
    ("FPA", ">500 citations"),
    ("FOA", ">600 citations"),
    ("GwSO", ">600 citations"),
    ("GSA", ">2500 citations"),
    ("GWO", ">1000 citations"),
    ("GSO", ">500 citations"),
    ("HS", "~4000 citations"),
    ("ICA", "~1500 citations"),
    ("IWO", ">750 citations"),
    ("KH", ">600 citations"),
    ("MBO", "~400 citations"),
    ("MFO", "~250 citations"),
    ("SFLA", ">1000 citations"),
    ("SCA", ">300 citations"),
    ("TLBO", ">1000 citations"),
    ("WCA", "~250 citations"),
    ("WOA", "~250 citations"),
];

fn metadata_fidelity() -> Outcome {
    let recs = export_metadata();
    let wrong: Vec<&str> = BANDS
        .iter()
        .filter(|(a, band)| !recs.iter().any(|r| r.acronym == *a && r.citations == *band))
        .map(|(a, _)| *a)
        .collect();
    let pass = recs.len() == 34 && wrong.is_empty();
    outcome(
        pass,
        if pass {
            "34/34 citation bands verbatim".to_string()
        } else {
            format!("{} records; wrong bands: {}", recs.len(), wrong.join(","))
        },
    )
}

fn main() {
    type Check = fn() -> Outcome;
    let criteria: [(&str, Check); 9] = [
        ("roster completeness", roster_completeness),
        ("oracle gate", oracle_gate),
        ("golden taxonomy", golden_taxonomy),
        ("state/manifest consistency", state_consistency),
        ("component statistics", component_statistics),
        ("greedy-acceptance invariant", greedy_invariant),
        ("determinism", determinism),
        ("kmeans oracle equivalence", kmeans_oracle),
        ("metadata fidelity", metadata_fidelity),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let o = check();
        println!("{} {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        failed += usize::from(!o.pass);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
