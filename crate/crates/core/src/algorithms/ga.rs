use super::{coord_scale, standard_init, AlgorithmParams, AlgorithmState, ParamSpec, Profile, StateLayout};
use crate::components::{move_toward, recombine, truncation_select};
use crate::engine::{Budget, RngStream, StepError, StepOutcome};
use crate::error::Result;

pub(super) const PROFILE: Profile = Profile {
    summary:
        "Genetic algorithm: truncation mating pool, uniform crossover, jitter mutation, worst replacement.",
    population: 50,
    min_population: 2,
    population_doc: "common baseline size",
    layout: StateLayout::NONE,
    params: &[
        ParamSpec::real(
            "offspring_fraction",
            0.5,
            0.02,
            1.0,
            "half the population replaced per generation at most",
        ),
        ParamSpec::real(
            "mutation_scale",
            0.3,
            0.0,
            10.0,
            "jitter amplitude as a fraction of the population spread",
        ),
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
    let parents = s.population.members.clone();
    let pool = truncation_select(&parents, (n / 2).max(2))?;
    let jitter = p.get("mutation_scale") * coord_scale(&s.population, budget);
    let n_offspring = ((p.get("offspring_fraction") * n as f64).round() as usize).max(1);

    let mut merged = parents.clone();
    for _ in 0..n_offspring {
        let a = rng.index(pool.len());
        let b = rng.index_except(pool.len(), a);
        let child = recombine(&parents[pool[a]].position, &parents[pool[b]].position, rng)?;
        let child = move_toward(&child, &child, 0.0, jitter, rng)?;
        merged.push(budget.evaluate(&mut s.population, child)?);
    }
    let keep = truncation_select(&merged, n)?;
    s.population.members = keep.into_iter().map(|i| merged[i].clone()).collect();
    Ok(StepOutcome::Continue)
}
