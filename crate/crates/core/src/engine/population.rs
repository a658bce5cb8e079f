use std::fmt;

use serde::{Deserialize, Serialize};

use super::{RngStream, SearchSpace};
use crate::error::{invalid, Result};

/// A function to minimize.
pub trait Objective {
    fn evaluate(&self, x: &[f64]) -> f64;
}

impl<F> Objective for F
where
    F: Fn(&[f64]) -> f64,
{
    fn evaluate(&self, x: &[f64]) -> f64 {
        self(x)
    }
}

/// Raised by [`Budget::evaluate`] once the evaluation budget is spent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BudgetExhausted;

impl fmt::Display for BudgetExhausted {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("evaluation budget exhausted")
    }
}

impl std::error::Error for BudgetExhausted {}

/// A point of the search space and, once evaluated, its objective value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Candidate {
    pub position: Vec<f64>,
    pub value: Option<f64>,
}

impl Candidate {
    pub fn unevaluated(position: Vec<f64>) -> Self {
        Self {
            position,
            value: None,
        }
    }

    pub fn evaluated(position: Vec<f64>, value: f64) -> Self {
        Self {
            position,
            value: Some(value),
        }
    }

    pub fn is_evaluated(&self) -> bool {
        self.value.is_some()
    }

    /// Objective value, or `+inf` when not evaluated yet.
    pub fn cost(&self) -> f64 {
        self.value.unwrap_or(f64::INFINITY)
    }
}

/// Objective, search space and evaluation budget of one run.
///
/// Every evaluation goes through [`Budget::evaluate`], which clamps the point
/// into the space, counts the call, and keeps the best-ever archive current.
pub struct Budget<'a> {
    objective: &'a dyn Objective,
    space: &'a SearchSpace,
    limit: usize,
}

impl<'a> Budget<'a> {
    pub fn new(objective: &'a dyn Objective, space: &'a SearchSpace, limit: usize) -> Self {
        Self {
            objective,
            space,
            limit,
        }
    }

    pub fn space(&self) -> &SearchSpace {
        self.space
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    pub fn remaining(&self, pop: &Population) -> usize {
        self.limit.saturating_sub(pop.evals_used)
    }

    /// Fraction of the budget consumed, in `[0, 1]`. Time-dependent
    /// schedules are driven by this rather than by iteration counts.
    pub fn progress(&self, pop: &Population) -> f64 {
        (pop.evals_used as f64 / self.limit as f64).min(1.0)
    }

    /// Evaluates `position` after clamping it into the space.
    pub fn evaluate(
        &self,
        pop: &mut Population,
        mut position: Vec<f64>,
    ) -> Result<Candidate, BudgetExhausted> {
        if pop.evals_used >= self.limit {
            return Err(BudgetExhausted);
        }
        self.space.clamp_in_place(&mut position);
        let value = self.objective.evaluate(&position);
        pop.evals_used += 1;
        let cand = Candidate::evaluated(position, value);
        pop.offer(&cand);
        Ok(cand)
    }

    pub fn evaluate_many(
        &self,
        pop: &mut Population,
        positions: Vec<Vec<f64>>,
    ) -> Result<Vec<Candidate>, BudgetExhausted> {
        positions.into_iter().map(|p| self.evaluate(pop, p)).collect()
    }
}

/// Ordered collection of candidates with an elitist archive and an
/// evaluation counter.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Population {
    pub members: Vec<Candidate>,
    best_ever: Option<Candidate>,
    evals_used: usize,
}

impl Population {
    pub fn empty() -> Self {
        Self {
            members: Vec::new(),
            best_ever: None,
            evals_used: 0,
        }
    }

    /// Builds a population from already-evaluated members without touching
    /// the evaluation counter. Intended for tests and operator-level use.
    pub fn from_members(members: Vec<Candidate>) -> Self {
        let mut pop = Self {
            members,
            best_ever: None,
            evals_used: 0,
        };
        for i in 0..pop.members.len() {
            let c = pop.members[i].clone();
            pop.offer(&c);
        }
        pop
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn evals_used(&self) -> usize {
        self.evals_used
    }

    pub fn best_ever(&self) -> Option<&Candidate> {
        self.best_ever.as_ref()
    }

    pub fn best_value(&self) -> f64 {
        self.best_ever.as_ref().map_or(f64::INFINITY, Candidate::cost)
    }

    fn offer(&mut self, cand: &Candidate) {
        if let Some(v) = cand.value {
            if v < self.best_value() || (self.best_ever.is_none() && !v.is_nan()) {
                self.best_ever = Some(cand.clone());
            }
        }
    }

    pub fn values(&self) -> Vec<f64> {
        self.members.iter().map(Candidate::cost).collect()
    }

    pub fn positions(&self) -> Vec<Vec<f64>> {
        self.members.iter().map(|c| c.position.clone()).collect()
    }

    /// Index of the best current member; ties go to the lower index.
    pub fn best_index(&self) -> usize {
        let mut best = 0;
        for (i, c) in self.members.iter().enumerate() {
            if c.cost() < self.members[best].cost() {
                best = i;
            }
        }
        best
    }

    /// Index of the worst current member; ties go to the lower index.
    pub fn worst_index(&self) -> usize {
        let mut worst = 0;
        for (i, c) in self.members.iter().enumerate() {
            if c.cost() > self.members[worst].cost() {
                worst = i;
            }
        }
        worst
    }

    /// Member indices ordered best first, ties by index.
    pub fn ranking(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.members.len()).collect();
        idx.sort_by(|&a, &b| {
            self.members[a]
                .cost()
                .total_cmp(&self.members[b].cost())
                .then(a.cmp(&b))
        });
        idx
    }

    /// Mean and standard deviation of current member values.
    pub fn value_stats(&self) -> (f64, f64) {
        let n = self.members.len();
        if n == 0 {
            return (f64::NAN, f64::NAN);
        }
        let vals = self.values();
        let mean = vals.iter().sum::<f64>() / n as f64;
        let var = vals.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n as f64;
        (mean, var.sqrt())
    }
}

/// Samples `n` points uniformly from the space and evaluates them.
pub fn init_population(budget: &Budget<'_>, n: usize, rng: &mut RngStream) -> Result<Population> {
    if n == 0 {
        return Err(invalid("population size must be at least 1"));
    }
    if n > budget.limit() {
        return Err(invalid(format!(
            "budget {} is smaller than the initial population {n}",
            budget.limit()
        )));
    }
    let mut pop = Population::empty();
    for _ in 0..n {
        let x = uniform_point(budget.space(), rng);
        let c = budget
            .evaluate(&mut pop, x)
            .expect("initial population fits in the budget");
        pop.members.push(c);
    }
    Ok(pop)
}

pub(crate) fn uniform_point(space: &SearchSpace, rng: &mut RngStream) -> Vec<f64> {
    space
        .lower()
        .iter()
        .zip(space.upper())
        .map(|(l, u)| rng.range(*l, *u))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sphere(x: &[f64]) -> f64 {
        x.iter().map(|v| v * v).sum()
    }

    #[test]
    fn init_rejects_empty_population() {
        let space = SearchSpace::cube(2, -5.0, 5.0).unwrap();
        let budget = Budget::new(&sphere, &space, 10);
        let mut rng = RngStream::new(0);
        assert!(init_population(&budget, 0, &mut rng).is_err());
    }

    #[test]
    fn init_samples_inside_bounds_and_counts() {
        let space = SearchSpace::cube(2, -5.0, 5.0).unwrap();
        let budget = Budget::new(&sphere, &space, 100);
        let mut rng = RngStream::new(42);
        let pop = init_population(&budget, 4, &mut rng).unwrap();
        assert_eq!(pop.len(), 4);
        assert_eq!(pop.evals_used(), 4);
        for c in &pop.members {
            assert!(space.contains(&c.position));
            assert_eq!(c.value, Some(sphere(&c.position)));
        }
        let best = pop
            .members
            .iter()
            .map(Candidate::cost)
            .fold(f64::INFINITY, f64::min);
        assert_eq!(pop.best_value(), best);
    }

    #[test]
    fn init_mean_matches_uniform_moments() {
        // Uniform on [-5, 5]: mean 0, sd 10/sqrt(12). Three standard errors.
        let n = 10_000;
        let space = SearchSpace::cube(10, -5.0, 5.0).unwrap();
        let budget = Budget::new(&sphere, &space, n);
        let mut rng = RngStream::new(9);
        let pop = init_population(&budget, n, &mut rng).unwrap();
        let se = 10.0 / 12f64.sqrt() / (n as f64).sqrt();
        for d in 0..10 {
            let mean = pop.members.iter().map(|c| c.position[d]).sum::<f64>() / n as f64;
            assert!(mean.abs() < 3.0 * se, "dim {d}: mean {mean}");
        }
    }

    #[test]
    fn evaluate_clamps_and_refuses_past_budget() {
        let space = SearchSpace::cube(2, -1.0, 1.0).unwrap();
        let budget = Budget::new(&sphere, &space, 1);
        let mut pop = Population::empty();
        let c = budget.evaluate(&mut pop, vec![3.0, -0.5]).unwrap();
        assert_eq!(c.position, vec![1.0, -0.5]);
        assert_eq!(pop.evals_used(), 1);
        assert_eq!(budget.evaluate(&mut pop, vec![0.0, 0.0]), Err(BudgetExhausted));
        assert_eq!(pop.evals_used(), 1);
    }

    #[test]
    fn ranking_breaks_ties_by_index() {
        let pop = Population::from_members(vec![
            Candidate::evaluated(vec![0.0], 2.0),
            Candidate::evaluated(vec![0.0], 1.0),
            Candidate::evaluated(vec![0.0], 1.0),
        ]);
        assert_eq!(pop.ranking(), vec![1, 2, 0]);
        assert_eq!(pop.best_index(), 1);
        assert_eq!(pop.worst_index(), 0);
    }
}
