use rayon::prelude::*;

use metaparts::algorithms::{
    default_params, make_algorithm, AlgorithmId, AlgorithmInstance, AlgorithmParams,
};
use metaparts::benchmarks::{random_search, Benchmark};
use metaparts::engine::{run, RngStream, RunTrace, SearchSpace};

use crate::error::CliError;

/// Expands `"0..30"`, `"42"` or `"1,2,5..8"` into an explicit seed list.
/// Ranges exclude their end.
pub fn parse_seeds(spec: &str) -> Result<Vec<u64>, CliError> {
    let bad = |why: &str| CliError::Usage(format!("bad seed list `{spec}`: {why}"));
    let mut seeds = Vec::new();
    for part in spec.split(',').map(str::trim) {
        if part.is_empty() {
            return Err(bad("empty entry"));
        }
        if let Some((a, b)) = part.split_once("..") {
            let a: u64 = a.trim().parse().map_err(|_| bad("range start is not a number"))?;
            let b: u64 = b.trim().parse().map_err(|_| bad("range end is not a number"))?;
            if a >= b {
                return Err(bad("range is empty"));
            }
            seeds.extend(a..b);
        } else {
            seeds.push(part.parse().map_err(|_| bad("not a number"))?);
        }
    }
    let mut sorted = seeds.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != seeds.len() {
        return Err(bad("repeated seed"));
    }
    Ok(seeds)
}

/// Parses `key=value` with a numeric value.
pub fn parse_param(kv: &str) -> Result<(String, f64), CliError> {
    let (k, v) = kv
        .split_once('=')
        .ok_or_else(|| CliError::Usage(format!("--param `{kv}` is not key=value")))?;
    let v: f64 = v
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("--param `{kv}`: value is not a number")))?;
    Ok((k.trim().to_string(), v))
}

pub fn parse_algorithm(name: &str) -> Result<AlgorithmId, CliError> {
    name.parse().map_err(|_| {
        CliError::Usage(format!(
            "unknown algorithm `{name}` (valid: {})",
            AlgorithmId::valid_names()
        ))
    })
}

pub fn parse_benchmark(name: &str) -> Result<Benchmark, CliError> {
    name.parse().map_err(|_| {
        let valid: Vec<&str> = Benchmark::ALL.iter().map(|b| b.name()).collect();
        CliError::Usage(format!(
            "unknown benchmark `{name}` (valid: {})",
            valid.join(", ")
        ))
    })
}

/// One fully resolved experiment: everything needed to reproduce its traces.
#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub algorithm: AlgorithmInstance,
    pub benchmark: Benchmark,
    pub dims: usize,
    pub budget: usize,
    pub seeds: Vec<u64>,
    space: SearchSpace,
}

impl ExperimentConfig {
    /// Resolves overrides against the algorithm's defaults and checks that
    /// the budget covers the initial population.
    pub fn new(
        algorithm: AlgorithmId,
        benchmark: Benchmark,
        dims: usize,
        budget: usize,
        seeds: Vec<u64>,
        overrides: &[(String, f64)],
    ) -> Result<Self, CliError> {
        let mut params: AlgorithmParams = default_params(algorithm);
        for (k, v) in overrides {
            params.set(k, *v);
        }
        let algorithm = make_algorithm(algorithm, &params).map_err(CliError::from_config)?;
        let space = benchmark.space(dims).map_err(CliError::from_config)?;
        if seeds.is_empty() {
            return Err(CliError::Usage("no seeds given".into()));
        }
        let n = algorithm.params().population_size;
        if budget < n {
            return Err(CliError::Usage(format!(
                "budget {budget} is smaller than the {} population of {n}",
                algorithm.id()
            )));
        }
        Ok(Self {
            algorithm,
            benchmark,
            dims,
            budget,
            seeds,
            space,
        })
    }

    pub fn space(&self) -> &SearchSpace {
        &self.space
    }

    pub fn run_seed(&self, seed: u64) -> Result<RunTrace, CliError> {
        let res = run(
            &self.algorithm,
            &self.benchmark,
            &self.space,
            self.budget,
            &mut RngStream::new(seed),
        )
        .map_err(CliError::from_run)?;
        Ok(res.trace)
    }

    /// Every seed's trace, in seed-list order. Seeds run in parallel.
    pub fn run_all(&self) -> Result<Vec<(u64, RunTrace)>, CliError> {
        self.seeds
            .par_iter()
            .map(|&s| self.run_seed(s).map(|t| (s, t)))
            .collect()
    }

    /// Random-search traces under the same benchmark, budget and seeds.
    pub fn oracle_finals(&self) -> Result<Vec<f64>, CliError> {
        oracle_finals(self.benchmark, &self.space, self.budget, &self.seeds)
    }
}

pub fn oracle_finals(
    benchmark: Benchmark,
    space: &SearchSpace,
    budget: usize,
    seeds: &[u64],
) -> Result<Vec<f64>, CliError> {
    seeds
        .par_iter()
        .map(|&s| {
            let t = random_search(&benchmark, space, budget, &mut RngStream::new(s))
                .map_err(CliError::from_run)?;
            Ok(t.final_best().expect("non-empty trace"))
        })
        .collect()
}

/// Median and quartiles by linear interpolation between order statistics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Summary {
    pub median: f64,
    pub q1: f64,
    pub q3: f64,
}

impl Summary {
    pub fn of(values: &[f64]) -> Self {
        assert!(!values.is_empty(), "summary of nothing");
        let mut v = values.to_vec();
        v.sort_by(f64::total_cmp);
        let q = |p: f64| {
            let h = p * (v.len() - 1) as f64;
            let (lo, hi) = (h.floor() as usize, h.ceil() as usize);
            v[lo] + (h - lo as f64) * (v[hi] - v[lo])
        };
        Self {
            median: q(0.5),
            q1: q(0.25),
            q3: q(0.75),
        }
    }

    pub fn iqr(&self) -> f64 {
        self.q3 - self.q1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seed_syntax() {
        assert_eq!(parse_seeds("0..3").unwrap(), vec![0, 1, 2]);
        assert_eq!(parse_seeds("42").unwrap(), vec![42]);
        assert_eq!(parse_seeds("1, 5..7").unwrap(), vec![1, 5, 6]);
        for bad in ["", "3..3", "a", "1,1", "0..2,1", "1,,2"] {
            assert!(parse_seeds(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn param_syntax() {
        assert_eq!(parse_param("inertia=0.5").unwrap(), ("inertia".into(), 0.5));
        assert!(parse_param("inertia").is_err());
        assert!(parse_param("inertia=x").is_err());
    }

    #[test]
    fn summary_matches_hand_quartiles() {
        let s = Summary::of(&[4.0, 1.0, 3.0, 2.0, 5.0]);
        assert_eq!((s.q1, s.median, s.q3), (2.0, 3.0, 4.0));
        let s = Summary::of(&[1.0, 2.0, 3.0, 4.0]);
        assert_eq!((s.q1, s.median, s.q3), (1.75, 2.5, 3.25));
        assert_eq!(Summary::of(&[7.0]).iqr(), 0.0);
    }

    #[test]
    fn config_validation() {
        let ok = ExperimentConfig::new(AlgorithmId::Pso, Benchmark::Sphere, 2, 1000, vec![0], &[]);
        assert!(ok.is_ok());
        let small = ExperimentConfig::new(AlgorithmId::Pso, Benchmark::Sphere, 2, 10, vec![0], &[]);
        assert!(matches!(small, Err(CliError::Usage(_))));
        let dims = ExperimentConfig::new(AlgorithmId::Pso, Benchmark::Rosenbrock, 1, 1000, vec![0], &[]);
        assert!(matches!(dims, Err(CliError::Usage(_))));
        let param = ExperimentConfig::new(
            AlgorithmId::Pso,
            Benchmark::Sphere,
            2,
            1000,
            vec![0],
            &[("inertia".into(), 9.0)],
        );
        assert!(matches!(param, Err(CliError::Usage(_))));
    }
}
