use super::{standard_init, AlgorithmParams, AlgorithmState, ParamSpec, Profile, StateLayout};
use crate::components::vector::chebyshev_distance;
use crate::components::{hypercube_sample, spiral_move, DecaySchedule};
use crate::engine::{Budget, RngStream, StepError, StepOutcome};
use crate::error::Result;

pub(super) const PROFILE: Profile = Profile {
    summary: "Whale optimization: shrinking-cube sampling or a spiral toward a target that is random early and the best later.",
    population: 30,
    min_population: 2,
    population_doc: "customary size for this method",
    layout: StateLayout::NONE,
    params: &[
        ParamSpec::real("a_start", 2.0, 0.0, 10.0, "cube half-width, in distances to the target, at the start"),
        ParamSpec::real("a_end", 0.0, 0.0, 10.0, "zero: full intensification at the horizon"),
        ParamSpec::real("spiral_prob", 0.5, 0.0, 1.0, "chance of the spiral move"),
        ParamSpec::real("turns", 1.0, 0.0, 10.0, "spiral revolutions"),
        ParamSpec::real("explore_start", 0.5, 0.0, 1.0, "chance of a random target at the start"),
        ParamSpec::real("explore_end", 0.0, 0.0, 1.0, "chance of a random target at the end"),
    ],
    check: None,
};

pub(super) fn init(p: &AlgorithmParams, budget: &Budget<'_>, rng: &mut RngStream) -> Result<AlgorithmState> {
    standard_init(&PROFILE, p, budget, rng)
}

pub(super) fn step(
    p: &AlgorithmParams,
    s: &mut AlgorithmState,
    budget: &Budget<'_>,
    rng: &mut RngStream,
) -> Result<StepOutcome, StepError> {
    let n = s.population.len();
    let tau = budget.progress(&s.population);
    let a = DecaySchedule::linear(p.get("a_start"), p.get("a_end")).at(tau);
    let explore = DecaySchedule::linear(p.get("explore_start"), p.get("explore_end")).at(tau);
    let snapshot = s.population.members.clone();
    let best = s.population.best_index();

    for i in 0..n {
        let target = if rng.bernoulli(explore) {
            rng.index_except(n, i)
        } else {
            best
        };
        let target = &snapshot[target].position;
        let x = &snapshot[i].position;
        let y = if rng.bernoulli(p.get("spiral_prob")) {
            spiral_move(x, target, p.get("turns"), rng.uniform())?
        } else {
            let half = 0.5 * a * chebyshev_distance(x, target);
            hypercube_sample(target, half, false, rng)?
        };
        s.population.members[i] = budget.evaluate(&mut s.population, y)?;
    }
    Ok(StepOutcome::Continue)
}
