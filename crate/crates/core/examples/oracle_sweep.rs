//! Median final best of every roster algorithm against random search.
//!
//! `cargo run --release -p metaparts --example oracle_sweep -- [benchmark] [dims] [budget] [seeds] [algorithm]`

use metaparts::algorithms::{AlgorithmId, AlgorithmInstance};
use metaparts::benchmarks::{random_search, Benchmark};
use metaparts::engine::{run, RngStream};

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(f64::total_cmp);
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    }
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let bench: Benchmark = args
        .first()
        .map_or("sphere", String::as_str)
        .parse()
        .expect("benchmark");
    let dims: usize = args.get(1).map_or(2, |s| s.parse().expect("dims"));
    let budget: usize = args.get(2).map_or(5000, |s| s.parse().expect("budget"));
    let seeds: u64 = args.get(3).map_or(30, |s| s.parse().expect("seeds"));
    let only: Option<AlgorithmId> = args.get(4).map(|s| s.parse().expect("algorithm"));
    let space = bench.space(dims).expect("space");

    let oracle = median(
        (0..seeds)
            .map(|s| {
                random_search(&bench, &space, budget, &mut RngStream::new(s))
                    .expect("random search")
                    .final_best()
                    .expect("non-empty trace")
            })
            .collect(),
    );
    println!("{:<8} {:>12.4e}", "oracle", oracle);
    for id in AlgorithmId::ALL
        .into_iter()
        .filter(|id| only.is_none_or(|o| o == *id))
    {
        let alg = AlgorithmInstance::with_defaults(id);
        let start = std::time::Instant::now();
        let finals: Vec<f64> = (0..seeds)
            .map(|s| {
                run(&alg, &bench, &space, budget, &mut RngStream::new(s))
                    .expect("run")
                    .best
                    .cost()
            })
            .collect();
        let m = median(finals);
        println!(
            "{:<8} {:>12.4e} {} {:>6.0}ms",
            id.as_str(),
            m,
            if m < oracle { "ok  " } else { "FAIL" },
            start.elapsed().as_secs_f64() * 1e3
        );
    }
}
