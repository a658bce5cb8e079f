use super::{coord_scale, standard_init, AlgorithmParams, AlgorithmState, ParamSpec, Profile, StateLayout};
use crate::components::{gaussian_sample, move_toward};
use crate::engine::{Budget, RngStream, StepError, StepOutcome};
use crate::error::Result;

pub(super) const PROFILE: Profile = Profile {
    summary: "Cat swarm: each member either samples a few nearby points and keeps the best, or moves toward the population best.",
    population: 20,
    min_population: 1,
    population_doc: "seeking mode multiplies evaluations, so a smaller population",
    layout: StateLayout::NONE,
    params: &[
        ParamSpec::real("mixture_ratio", 0.2, 0.0, 1.0, "share of members in tracing mode"),
        ParamSpec::int("seeking_samples", 4.0, 1.0, 100.0, "local samples in seeking mode"),
        ParamSpec::real("seeking_scale", 0.5, 0.0, 10.0, "local sample deviation as a fraction of the population spread"),
        ParamSpec::real("tracing_max", 1.5, 0.0, 4.0, "tracing move fraction drawn from [0, this]"),
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
    let sigma = p.get("seeking_scale") * coord_scale(&s.population, budget);

    for i in 0..s.population.len() {
        let x = s.population.members[i].position.clone();
        if rng.bernoulli(p.get("mixture_ratio")) {
            let x = move_toward(&x, &best, rng.range(0.0, p.get("tracing_max")), 0.0, rng)?;
            s.population.members[i] = budget.evaluate(&mut s.population, x)?;
        } else {
            for _ in 0..p.count("seeking_samples") {
                let cand = budget.evaluate(&mut s.population, gaussian_sample(&x, sigma, rng)?)?;
                if cand.cost() < s.population.members[i].cost() {
                    s.population.members[i] = cand;
                }
            }
        }
    }
    Ok(StepOutcome::Continue)
}
