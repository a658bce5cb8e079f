use super::{Budget, BudgetExhausted, Candidate, Objective, Population, RngStream, RunTrace, SearchSpace};
use crate::error::{invalid, Error, Result};

/// Why a step stopped early.
#[derive(Debug, Clone, PartialEq)]
pub enum StepError {
    /// The evaluation budget ran out part way through the step.
    Exhausted,
    /// An operator rejected its arguments.
    Operator(Error),
}

impl From<BudgetExhausted> for StepError {
    fn from(_: BudgetExhausted) -> Self {
        StepError::Exhausted
    }
}

impl From<Error> for StepError {
    fn from(e: Error) -> Self {
        StepError::Operator(e)
    }
}

/// What a step reports back to the run loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepOutcome {
    Continue,
    /// The optimizer has reached its own stopping condition.
    Terminated,
}

/// A population-based optimizer driven by [`run`].
///
/// The optimizer value holds configuration only; everything that changes
/// during a run lives in `State`.
pub trait Optimizer {
    type State;

    fn label(&self) -> String;

    /// Number of evaluations spent on initialization.
    fn initial_population_size(&self) -> usize;

    fn initialize(&self, budget: &Budget<'_>, rng: &mut RngStream) -> Result<Self::State>;

    /// One synchronous iteration. Returns [`StepError::Exhausted`] if the
    /// budget ran out part way through.
    fn step(
        &self,
        state: &mut Self::State,
        budget: &Budget<'_>,
        rng: &mut RngStream,
    ) -> Result<StepOutcome, StepError>;

    fn population<'s>(&self, state: &'s Self::State) -> &'s Population;
}

#[derive(Debug, Clone)]
pub struct RunResult<S> {
    pub trace: RunTrace,
    pub best: Candidate,
    /// True when the optimizer stopped itself before the budget ran out.
    pub terminated: bool,
    pub state: S,
}

/// Runs `optimizer` until `max_evals` evaluations are spent or it terminates.
///
/// The trace gets a record for the initial population and one per iteration.
/// An iteration cut short by the budget still gets its record, so the last
/// record always carries the best-ever value.
pub fn run<O: Optimizer + ?Sized>(
    optimizer: &O,
    objective: &dyn Objective,
    space: &SearchSpace,
    max_evals: usize,
    rng: &mut RngStream,
) -> Result<RunResult<O::State>> {
    let n0 = optimizer.initial_population_size();
    if max_evals < n0 {
        return Err(invalid(format!(
            "budget {max_evals} is smaller than the initial population {n0}"
        )));
    }
    let budget = Budget::new(objective, space, max_evals);
    let mut state = optimizer.initialize(&budget, rng)?;
    let mut trace = RunTrace::default();
    trace.push_population(0, optimizer.population(&state));

    let mut iteration = 0;
    let mut terminated = false;
    while budget.remaining(optimizer.population(&state)) > 0 {
        let before = optimizer.population(&state).evals_used();
        iteration += 1;
        let outcome = optimizer.step(&mut state, &budget, rng);
        let pop = optimizer.population(&state);
        match outcome {
            Ok(StepOutcome::Continue) => {
                if pop.evals_used() == before {
                    return Err(Error::Stalled(optimizer.label()));
                }
                trace.push_population(iteration, pop);
            }
            Ok(StepOutcome::Terminated) => {
                if pop.evals_used() > before {
                    trace.push_population(iteration, pop);
                }
                terminated = true;
                break;
            }
            Err(StepError::Exhausted) => {
                trace.push_population(iteration, pop);
                break;
            }
            Err(StepError::Operator(e)) => return Err(e),
        }
    }

    let best = optimizer
        .population(&state)
        .best_ever()
        .cloned()
        .expect("initialized population has an archive");
    Ok(RunResult {
        trace,
        best,
        terminated,
        state,
    })
}
