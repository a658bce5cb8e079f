use super::{standard_init, AlgorithmParams, AlgorithmState, ParamSpec, Profile, StateLayout};
use crate::components::{gaussian_sample, truncation_select, DecaySchedule};
use crate::engine::{Budget, RngStream, StepError, StepOutcome};
use crate::error::Result;

pub(super) const PROFILE: Profile = Profile {
    summary: "Invasive weed: seed counts by relative fitness, Gaussian dispersal narrowing non-linearly, truncation to a cap.",
    population: 10,
    min_population: 1,
    population_doc: "initial colony; grows up to max_population",
    layout: StateLayout::NONE,
    params: &[
        ParamSpec::int("max_population", 30.0, 1.0, 10000.0, "population cap after reproduction"),
        ParamSpec::int("seeds_min", 0.0, 0.0, 1000.0, "seeds of the worst member"),
        ParamSpec::int("seeds_max", 5.0, 1.0, 1000.0, "seeds of the best member"),
        ParamSpec::real("sigma_start", 0.2, 0.0, 2.0, "dispersal deviation of width at the start"),
        ParamSpec::real("sigma_end", 1e-6, 0.0, 2.0, "dispersal deviation of width at the end"),
        ParamSpec::real("modulation", 3.0, 0.1, 10.0, "customary non-linear modulation exponent"),
    ],
    check: Some(|p| {
        if p.count("seeds_min") > p.count("seeds_max") {
            Err("seeds_min exceeds seeds_max".into())
        } else if p.count("max_population") < p.population_size {
            Err("max_population is below the initial population".into())
        } else {
            Ok(())
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
    let values = s.population.values();
    let best = values.iter().copied().fold(f64::INFINITY, f64::min);
    let worst = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let (lo, hi) = (p.get("seeds_min"), p.get("seeds_max"));
    let sigma = DecaySchedule::power(p.get("sigma_start"), p.get("sigma_end"), p.get("modulation"))?
        .at(budget.progress(&s.population))
        * budget.space().mean_width();

    let parents = s.population.members.clone();
    let mut merged = parents.clone();
    for (parent, v) in parents.iter().zip(&values) {
        let seeds = if worst > best {
            (lo + (hi - lo) * (worst - v) / (worst - best)).floor() as usize
        } else {
            hi as usize
        };
        for _ in 0..seeds {
            let x = gaussian_sample(&parent.position, sigma, rng)?;
            merged.push(budget.evaluate(&mut s.population, x)?);
        }
    }
    let cap = p.count("max_population").min(merged.len());
    let keep = truncation_select(&merged, cap)?;
    s.population.members = keep.into_iter().map(|i| merged[i].clone()).collect();
    Ok(StepOutcome::Continue)
}
