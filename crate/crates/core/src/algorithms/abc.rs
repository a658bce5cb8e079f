use super::{standard_init, AlgorithmParams, AlgorithmState, ParamSpec, Profile, StateLayout};
use crate::components::{greedy_accept, move_toward, proportional_select, restart, DecaySchedule};
use crate::engine::{Budget, RngStream, StepError, StepOutcome};
use crate::error::Result;

pub(super) const PROFILE: Profile = Profile {
    summary: "Artificial bee colony: greedy trial moves toward random members, fitness-proportional extra trials, stagnation restarts.",
    population: 50,
    min_population: 2,
    population_doc: "common baseline size",
    layout: StateLayout {
        counters: true,
        ..StateLayout::NONE
    },
    params: &[
        ParamSpec::real("step_start", 2.0, 0.0, 4.0, "largest move fraction at the start; allows overshooting the partner"),
        ParamSpec::real("step_end", 1.0, 0.0, 4.0, "largest move fraction at the end"),
        ParamSpec::int("limit", 20.0, 1.0, 10000.0, "failed trials before a member is restarted"),
    ],
    check: None,
};

pub(super) fn init(p: &AlgorithmParams, budget: &Budget<'_>, rng: &mut RngStream) -> Result<AlgorithmState> {
    standard_init(&PROFILE, p, budget, rng)
}

fn trial(
    i: usize,
    max_step: f64,
    s: &mut AlgorithmState,
    budget: &Budget<'_>,
    rng: &mut RngStream,
) -> Result<(), StepError> {
    let n = s.population.len();
    let k = rng.index_except(n, i);
    let old = s.population.members[i].clone();
    let target = s.population.members[k].position.clone();
    let x = move_toward(&old.position, &target, rng.range(0.0, max_step), 0.0, rng)?;
    let cand = budget.evaluate(&mut s.population, x)?;
    let improved = cand.cost() < old.cost();
    s.population.members[i] = greedy_accept(old, cand)?;
    let c = &mut s.counters_mut()[i];
    c.stagnation = if improved { 0 } else { c.stagnation + 1 };
    Ok(())
}

pub(super) fn step(
    p: &AlgorithmParams,
    s: &mut AlgorithmState,
    budget: &Budget<'_>,
    rng: &mut RngStream,
) -> Result<StepOutcome, StepError> {
    let n = s.population.len();
    let max_step =
        DecaySchedule::linear(p.get("step_start"), p.get("step_end")).at(budget.progress(&s.population));

    for i in 0..n {
        trial(i, max_step, s, budget, rng)?;
    }
    for _ in 0..n {
        let i = proportional_select(&s.population.members, rng)?;
        trial(i, max_step, s, budget, rng)?;
    }
    // Scouts: a fresh uniform point, kept only if it does not worsen the member.
    let limit = p.count("limit");
    for i in 0..n {
        if s.counters_mut()[i].stagnation > limit {
            let fresh = restart(budget.space(), rng);
            let cand = budget.evaluate(&mut s.population, fresh.position)?;
            let old = s.population.members[i].clone();
            s.population.members[i] = greedy_accept(old, cand)?;
            s.counters_mut()[i].stagnation = 0;
        }
    }
    Ok(StepOutcome::Continue)
}
