use super::{standard_init, AlgorithmParams, AlgorithmState, ParamSpec, Profile, StateLayout};
use crate::components::vector::chebyshev_distance;
use crate::components::{hypercube_sample, move_toward, weighted_mean, DecaySchedule};
use crate::engine::{Budget, RngStream, StepError, StepOutcome};
use crate::error::Result;

pub(super) const PROFILE: Profile = Profile {
    summary: "Grey wolf: targets drawn inside the triangle of the three best, then sampled on the edge of a shrinking cube.",
    population: 30,
    min_population: 3,
    population_doc: "customary size for this method; needs three leaders",
    layout: StateLayout::NONE,
    params: &[
        ParamSpec::real("a_start", 2.0, 0.0, 10.0, "cube half-width, in distances to the target, at the start"),
        ParamSpec::real("a_end", 0.0, 0.0, 10.0, "zero: full intensification at the horizon"),
        ParamSpec::real("jitter", 0.1, 0.0, 10.0, "extra jitter as a fraction of the cube half-width"),
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
    let order = s.population.ranking();
    let leaders: Vec<Vec<f64>> = order[..3]
        .iter()
        .map(|&i| s.population.members[i].position.clone())
        .collect();
    let a = DecaySchedule::linear(p.get("a_start"), p.get("a_end")).at(budget.progress(&s.population));

    for i in 0..s.population.len() {
        // Uniform point of the simplex: normalized exponential weights.
        let w: Vec<f64> = (0..3).map(|_| -(1.0 - rng.uniform()).ln()).collect();
        let target = weighted_mean(&leaders, &w)?;
        let x = &s.population.members[i].position;
        let half = 0.5 * a * rng.uniform() * chebyshev_distance(x, &target);
        let y = hypercube_sample(&target, half, true, rng)?;
        let y = move_toward(&y, &y, 0.0, p.get("jitter") * half, rng)?;
        s.population.members[i] = budget.evaluate(&mut s.population, y)?;
    }
    Ok(StepOutcome::Continue)
}
