use serde::{Deserialize, Serialize};

use super::params::StateLayout;
use crate::engine::{init_population, Budget, Candidate, Population, RngStream};
use crate::error::Result;

/// Per-member bookkeeping. Each algorithm uses the fields it needs.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct MemberCounters {
    /// Consecutive iterations without improvement.
    pub stagnation: usize,
    /// Improvements made so far.
    pub improvements: usize,
    /// Worsening moves accepted so far.
    pub accepted_worse: usize,
    /// Decaying summary of recent progress.
    pub progress: f64,
    /// Adaptive neighbourhood or scan radius.
    pub radius: f64,
}

/// Success statistics of one operator in an adaptive pool.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct OperatorStats {
    pub trials: usize,
    pub successes: usize,
}

impl OperatorStats {
    /// Success rate with Laplace smoothing.
    pub fn rate(&self) -> f64 {
        (self.successes as f64 + 1.0) / (self.trials as f64 + 2.0)
    }
}

/// Everything that changes during a run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlgorithmState {
    pub population: Population,
    pub velocities: Option<Vec<Vec<f64>>>,
    /// Best point each member has visited.
    pub historical_bests: Option<Vec<Candidate>>,
    pub counters: Option<Vec<MemberCounters>>,
    /// Unit headings.
    pub directions: Option<Vec<Vec<f64>>>,
    /// Sub-populations as member index lists.
    pub groups: Option<Vec<Vec<usize>>>,
    pub operator_stats: Option<Vec<OperatorStats>>,
    /// Elite memory kept apart from the population.
    pub archive: Option<Vec<Candidate>>,
    pub iteration: usize,
}

impl AlgorithmState {
    /// Uniform population plus empty optional fields per `layout`: zero
    /// velocities, historical bests equal to the initial members, default
    /// counters, random headings, and empty groups, stats and archive.
    pub(crate) fn standard(
        layout: &StateLayout,
        n: usize,
        budget: &Budget<'_>,
        rng: &mut RngStream,
    ) -> Result<Self> {
        let population = init_population(budget, n, rng)?;
        let dims = budget.space().dims();
        Ok(Self {
            velocities: layout.velocities.then(|| vec![vec![0.0; dims]; n]),
            historical_bests: layout.historical_bests.then(|| population.members.clone()),
            counters: layout.counters.then(|| vec![MemberCounters::default(); n]),
            directions: layout
                .directions
                .then(|| (0..n).map(|_| rng.unit_vector(dims)).collect()),
            groups: layout.groups.then(Vec::new),
            operator_stats: layout.operator_stats.then(Vec::new),
            archive: layout.archive.then(Vec::new),
            population,
            iteration: 0,
        })
    }

    /// The layout this state actually carries.
    pub fn layout(&self) -> StateLayout {
        StateLayout {
            velocities: self.velocities.is_some(),
            historical_bests: self.historical_bests.is_some(),
            counters: self.counters.is_some(),
            directions: self.directions.is_some(),
            groups: self.groups.is_some(),
            operator_stats: self.operator_stats.is_some(),
            archive: self.archive.is_some(),
        }
    }

    pub(crate) fn counters_mut(&mut self) -> &mut Vec<MemberCounters> {
        self.counters.as_mut().expect("layout declares counters")
    }

    pub(crate) fn velocities_mut(&mut self) -> &mut Vec<Vec<f64>> {
        self.velocities.as_mut().expect("layout declares velocities")
    }

    pub(crate) fn historical_bests_mut(&mut self) -> &mut Vec<Candidate> {
        self.historical_bests
            .as_mut()
            .expect("layout declares historical bests")
    }

    /// Offers `cand` as member `i`'s historical best.
    pub(crate) fn remember(&mut self, i: usize, cand: &Candidate) {
        let hist = self.historical_bests_mut();
        if cand.cost() < hist[i].cost() {
            hist[i] = cand.clone();
        }
    }
}
