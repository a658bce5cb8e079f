use serde::{Deserialize, Serialize};

use super::Population;

/// One row of a run trace, written after each completed iteration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TraceRecord {
    pub iteration: usize,
    pub evals: usize,
    pub best: f64,
    pub mean: f64,
    pub spread: f64,
}

/// Per-iteration history of a run. Iteration 0 is the initial population.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct RunTrace {
    pub records: Vec<TraceRecord>,
}

impl RunTrace {
    pub fn push_population(&mut self, iteration: usize, pop: &Population) {
        let (mean, spread) = pop.value_stats();
        self.records.push(TraceRecord {
            iteration,
            evals: pop.evals_used(),
            best: pop.best_value(),
            mean,
            spread,
        });
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn final_best(&self) -> Option<f64> {
        self.records.last().map(|r| r.best)
    }

    pub fn evals_used(&self) -> usize {
        self.records.last().map_or(0, |r| r.evals)
    }

    /// Whether the best column never increases and the evals column never
    /// decreases.
    pub fn is_monotone(&self) -> bool {
        self.records
            .windows(2)
            .all(|w| w[1].best <= w[0].best && w[1].evals >= w[0].evals)
    }
}
