use super::{standard_init, AlgorithmParams, AlgorithmState, ParamSpec, Profile, StateLayout};
use crate::components::{greedy_accept, levy_step, move_toward, scaled_move_toward};
use crate::engine::{Budget, RngStream, StepError, StepOutcome};
use crate::error::Result;

pub(super) const PROFILE: Profile = Profile {
    summary: "Flower pollination: Levy-scaled moves toward the best or moves toward a random member, greedy.",
    population: 30,
    min_population: 2,
    population_doc: "customary size for this method",
    layout: StateLayout::NONE,
    params: &[
        ParamSpec::real("switch_prob", 0.8, 0.0, 1.0, "chance of the global (Levy) move"),
        ParamSpec::real(
            "levy_scale",
            0.5,
            1e-9,
            100.0,
            "scale of the per-coordinate Levy factors",
        ),
        ParamSpec::real("tail_index", 1.5, 0.1, 1.99, "customary Levy exponent"),
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
    let dims = budget.space().dims();
    let snapshot = s.population.members.clone();
    let best = snapshot[s.population.best_index()].position.clone();

    for i in 0..n {
        let x = &snapshot[i].position;
        let cand = if rng.bernoulli(p.get("switch_prob")) {
            let factors = levy_step(dims, p.get("levy_scale"), p.get("tail_index"), rng)?;
            scaled_move_toward(x, &best, &factors)?
        } else {
            let j = rng.index_except(n, i);
            move_toward(x, &snapshot[j].position, rng.uniform(), 0.0, rng)?
        };
        let cand = budget.evaluate(&mut s.population, cand)?;
        s.population.members[i] = greedy_accept(snapshot[i].clone(), cand)?;
    }
    Ok(StepOutcome::Continue)
}
