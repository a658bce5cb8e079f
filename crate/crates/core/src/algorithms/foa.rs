use super::{coord_scale, standard_init, AlgorithmParams, AlgorithmState, ParamSpec, Profile, StateLayout};
use crate::components::move_toward;
use crate::engine::{Budget, RngStream, StepError, StepOutcome};
use crate::error::Result;

// The method's own description leaves the move unspecified; this is the
// minimal reading, a jittered move toward the population best.
pub(super) const PROFILE: Profile = Profile {
    summary: "Fruit fly: every member moves toward the population best with jitter (minimal reading of an underspecified method).",
    population: 30,
    min_population: 1,
    population_doc: "customary size for this method",
    layout: StateLayout::NONE,
    params: &[
        ParamSpec::real("max_fraction", 1.0, 0.0, 4.0, "move fraction toward the best drawn from [0, this]"),
        ParamSpec::real("jitter", 1.0, 0.0, 10.0, "jitter amplitude as a fraction of the population spread"),
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
    let best = s.population.members[s.population.best_index()].position.clone();
    let jitter = p.get("jitter") * coord_scale(&s.population, budget);
    for i in 0..s.population.len() {
        let x = s.population.members[i].position.clone();
        let x = move_toward(&x, &best, rng.range(0.0, p.get("max_fraction")), jitter, rng)?;
        s.population.members[i] = budget.evaluate(&mut s.population, x)?;
    }
    Ok(StepOutcome::Continue)
}
