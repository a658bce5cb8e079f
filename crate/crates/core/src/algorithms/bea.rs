use super::{standard_init, AlgorithmParams, AlgorithmState, ParamSpec, Profile, StateLayout};
use crate::components::{greedy_accept, hypersphere_sample, restart, DecaySchedule};
use crate::engine::{Budget, RngStream, StepError, StepOutcome};
use crate::error::Result;

pub(super) const PROFILE: Profile = Profile {
    summary:
        "Bees algorithm: recruits sample shrinking neighbourhoods of the best sites, scouts restart the rest.",
    population: 30,
    min_population: 2,
    population_doc: "sites plus scouts; recruits add most of the evaluations",
    layout: StateLayout::NONE,
    params: &[
        ParamSpec::int(
            "sites",
            8.0,
            1.0,
            1000.0,
            "best members whose neighbourhoods are searched",
        ),
        ParamSpec::int("recruits", 4.0, 1.0, 1000.0, "samples per site per iteration"),
        ParamSpec::real(
            "radius_start",
            0.2,
            1e-9,
            2.0,
            "neighbourhood radius of width at the start",
        ),
        ParamSpec::real(
            "radius_end",
            1e-7,
            1e-12,
            2.0,
            "neighbourhood radius of width at the end",
        ),
    ],
    check: Some(|p| {
        if p.count("sites") < p.population_size {
            Ok(())
        } else {
            Err("sites must be smaller than the population".into())
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
    let order = s.population.ranking();
    let sites = p.count("sites");
    let radius = DecaySchedule::exponential(p.get("radius_start"), p.get("radius_end"))?
        .at(budget.progress(&s.population))
        * budget.space().mean_width();

    for &i in &order[..sites] {
        let site = s.population.members[i].position.clone();
        for _ in 0..p.count("recruits") {
            let x = hypersphere_sample(&site, radius, rng)?;
            let cand = budget.evaluate(&mut s.population, x)?;
            let old = s.population.members[i].clone();
            s.population.members[i] = greedy_accept(old, cand)?;
        }
    }
    // Scouts explore uniformly; a member only moves if the scout is better.
    for &i in &order[sites..] {
        let fresh = restart(budget.space(), rng);
        let cand = budget.evaluate(&mut s.population, fresh.position)?;
        let old = s.population.members[i].clone();
        s.population.members[i] = greedy_accept(old, cand)?;
    }
    Ok(StepOutcome::Continue)
}
