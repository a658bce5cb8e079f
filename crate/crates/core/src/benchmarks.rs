//! Standard test functions and the random-search baseline.

use std::f64::consts::{E, PI};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::engine::{
    init_population, run, uniform_point, Budget, Objective, Optimizer, Population, RngStream, RunTrace,
    SearchSpace, StepError, StepOutcome,
};
use crate::error::{check_len, invalid, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Benchmark {
    Sphere,
    Rosenbrock,
    Rastrigin,
    Ackley,
    Griewank,
}

impl Benchmark {
    pub const ALL: [Benchmark; 5] = [
        Benchmark::Sphere,
        Benchmark::Rosenbrock,
        Benchmark::Rastrigin,
        Benchmark::Ackley,
        Benchmark::Griewank,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Benchmark::Sphere => "sphere",
            Benchmark::Rosenbrock => "rosenbrock",
            Benchmark::Rastrigin => "rastrigin",
            Benchmark::Ackley => "ackley",
            Benchmark::Griewank => "griewank",
        }
    }

    /// Canonical per-coordinate domain.
    pub fn domain(self) -> (f64, f64) {
        match self {
            Benchmark::Sphere | Benchmark::Rastrigin => (-5.12, 5.12),
            Benchmark::Rosenbrock => (-5.0, 10.0),
            Benchmark::Ackley => (-32.768, 32.768),
            Benchmark::Griewank => (-600.0, 600.0),
        }
    }

    pub fn min_dims(self) -> usize {
        match self {
            Benchmark::Rosenbrock => 2,
            _ => 1,
        }
    }

    pub fn space(self, dims: usize) -> Result<SearchSpace> {
        self.check_dims(dims)?;
        let (lo, hi) = self.domain();
        SearchSpace::cube(dims, lo, hi)
    }

    /// Known minimizer and minimum.
    pub fn optimum(self, dims: usize) -> (Vec<f64>, f64) {
        let x = match self {
            Benchmark::Rosenbrock => vec![1.0; dims],
            _ => vec![0.0; dims],
        };
        (x, 0.0)
    }

    fn check_dims(self, dims: usize) -> Result<()> {
        if dims < self.min_dims() {
            return Err(invalid(format!(
                "{} needs at least {} dimension(s), got {dims}",
                self.name(),
                self.min_dims()
            )));
        }
        Ok(())
    }

    /// Value at `x`. Panics on fewer than [`min_dims`](Self::min_dims)
    /// coordinates; use [`evaluate_benchmark`] for a checked call.
    pub fn value(self, x: &[f64]) -> f64 {
        match self {
            Benchmark::Sphere => x.iter().map(|v| v * v).sum(),
            Benchmark::Rosenbrock => {
                assert!(x.len() >= 2, "rosenbrock needs at least two coordinates");
                x.windows(2)
                    .map(|w| 100.0 * (w[1] - w[0] * w[0]).powi(2) + (1.0 - w[0]).powi(2))
                    .sum()
            }
            Benchmark::Rastrigin => {
                10.0 * x.len() as f64 + x.iter().map(|v| v * v - 10.0 * (2.0 * PI * v).cos()).sum::<f64>()
            }
            Benchmark::Ackley => {
                let n = x.len() as f64;
                let sq = x.iter().map(|v| v * v).sum::<f64>() / n;
                let cs = x.iter().map(|v| (2.0 * PI * v).cos()).sum::<f64>() / n;
                let v = -20.0 * (-0.2 * sq.sqrt()).exp() - cs.exp() + 20.0 + E;
                // Rounding leaves about 4e-16 at the optimum.
                v.max(0.0)
            }
            Benchmark::Griewank => {
                let sum = x.iter().map(|v| v * v).sum::<f64>() / 4000.0;
                let prod: f64 = x
                    .iter()
                    .enumerate()
                    .map(|(i, v)| (v / ((i + 1) as f64).sqrt()).cos())
                    .product();
                sum - prod + 1.0
            }
        }
    }
}

impl Objective for Benchmark {
    fn evaluate(&self, x: &[f64]) -> f64 {
        self.value(x)
    }
}

impl fmt::Display for Benchmark {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Benchmark {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Benchmark::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::UnknownBenchmark(s.to_string()))
    }
}

/// Evaluates a benchmark by name, checking the dimension.
pub fn evaluate_benchmark(name: &str, x: &[f64]) -> Result<f64> {
    let b: Benchmark = name.parse()?;
    if x.is_empty() {
        return Err(invalid("benchmark input is empty"));
    }
    b.check_dims(x.len())?;
    Ok(b.value(x))
}

/// Evaluates `x` after checking it matches `dims`.
pub fn evaluate_checked(b: Benchmark, dims: usize, x: &[f64]) -> Result<f64> {
    check_len(b.name(), dims, x.len())?;
    evaluate_benchmark(b.name(), x)
}

/// Uniform i.i.d. sampling, one evaluation per step. The population holds
/// the single best point found.
#[derive(Debug, Clone, Copy, Default)]
pub struct RandomSearch;

impl Optimizer for RandomSearch {
    type State = Population;

    fn label(&self) -> String {
        "random-search".to_string()
    }

    fn initial_population_size(&self) -> usize {
        1
    }

    fn initialize(&self, budget: &Budget<'_>, rng: &mut RngStream) -> Result<Population> {
        init_population(budget, 1, rng)
    }

    fn step(
        &self,
        pop: &mut Population,
        budget: &Budget<'_>,
        rng: &mut RngStream,
    ) -> Result<StepOutcome, StepError> {
        let c = budget.evaluate(pop, uniform_point(budget.space(), rng))?;
        if c.cost() < pop.members[0].cost() {
            pop.members[0] = c;
        }
        Ok(StepOutcome::Continue)
    }

    fn population<'s>(&self, state: &'s Population) -> &'s Population {
        state
    }
}

/// Trace of `budget` uniform samples.
pub fn random_search(
    objective: &dyn Objective,
    space: &SearchSpace,
    budget: usize,
    rng: &mut RngStream,
) -> Result<RunTrace> {
    if budget == 0 {
        return Err(invalid("random search needs a budget of at least 1"));
    }
    Ok(run(&RandomSearch, objective, space, budget, rng)?.trace)
}
