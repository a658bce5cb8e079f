use super::{coord_scale, standard_init, AlgorithmParams, AlgorithmState, ParamSpec, Profile, StateLayout};
use crate::components::{fitness_weights, gaussian_sample, roulette};
use crate::engine::{Budget, RngStream, StepError, StepOutcome};
use crate::error::Result;

pub(super) const PROFILE: Profile = Profile {
    summary: "Biogeography-based: worse members import coordinates from fitter donors, with rank-dependent mutation.",
    population: 50,
    min_population: 2,
    population_doc: "common baseline size",
    layout: StateLayout::NONE,
    params: &[
        ParamSpec::int("elites", 2.0, 0.0, 1000.0, "best members left untouched each iteration"),
        ParamSpec::real("mutation_prob", 0.3, 0.0, 1.0, "mutation chance of the worst member; scales with rank"),
        ParamSpec::real("mutation_scale", 1.0, 0.0, 10.0, "mutation deviation as a fraction of the population spread"),
    ],
    check: Some(|p| {
        if p.count("elites") < p.population_size {
            Ok(())
        } else {
            Err("elites must be smaller than the population".into())
        }
    }),
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
    let snapshot = s.population.members.clone();
    let order = s.population.ranking();
    let mut rank = vec![0; n];
    for (r, &i) in order.iter().enumerate() {
        rank[i] = r;
    }
    let donors = fitness_weights(&s.population.values());
    let sigma = p.get("mutation_scale") * coord_scale(&s.population, budget);

    for i in 0..n {
        if rank[i] < p.count("elites") {
            continue;
        }
        // Immigration rises linearly from the best rank to the worst.
        let immigration = (rank[i] + 1) as f64 / n as f64;
        let mut x = snapshot[i].position.clone();
        for d in 0..x.len() {
            if rng.bernoulli(immigration) {
                x[d] = snapshot[roulette(&donors, rng)?].position[d];
            }
        }
        if rng.bernoulli(p.get("mutation_prob") * immigration) {
            x = gaussian_sample(&x, sigma, rng)?;
        }
        s.population.members[i] = budget.evaluate(&mut s.population, x)?;
    }
    Ok(StepOutcome::Continue)
}
