use super::{standard_init, AlgorithmParams, AlgorithmState, ParamSpec, Profile, StateLayout};
use crate::components::{gaussian_sample, weighted_centroid, DecaySchedule};
use crate::engine::{Budget, RngStream, StepError, StepOutcome};
use crate::error::Result;

pub(super) const PROFILE: Profile = Profile {
    summary: "Big bang-big crunch: resample the whole population around its value-weighted centroid with shrinking width.",
    population: 50,
    min_population: 1,
    population_doc: "common baseline size",
    layout: StateLayout::NONE,
    params: &[
        ParamSpec::real("sigma_start", 0.3, 1e-9, 2.0, "sampling deviation of width at the start"),
        ParamSpec::real("sigma_end", 1e-7, 1e-12, 2.0, "sampling deviation of width at the end"),
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
    let centre = weighted_centroid(&s.population.members)?;
    let sigma = DecaySchedule::exponential(p.get("sigma_start"), p.get("sigma_end"))?
        .at(budget.progress(&s.population))
        * budget.space().mean_width();
    for i in 0..s.population.len() {
        let x = gaussian_sample(&centre, sigma, rng)?;
        s.population.members[i] = budget.evaluate(&mut s.population, x)?;
    }
    Ok(StepOutcome::Continue)
}
