use super::{standard_init, AlgorithmParams, AlgorithmState, ParamSpec, Profile, StateLayout};
use crate::components::vector::coordinate_spread;
use crate::engine::{Budget, RngStream, StepError, StepOutcome};
use crate::error::Result;

pub(super) const PROFILE: Profile = Profile {
    summary: "Harmony search: one new point per iteration, coordinates copied with jitter or drawn fresh; replaces the worst if better.",
    population: 20,
    min_population: 1,
    population_doc: "customary harmony memory size",
    layout: StateLayout::NONE,
    params: &[
        ParamSpec::real("memory_rate", 0.9, 0.0, 1.0, "chance a coordinate is copied from memory"),
        ParamSpec::real("bandwidth", 0.5, 0.0, 10.0, "copy jitter as a fraction of that coordinate's spread"),
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
    let space = budget.space();
    let n = s.population.len();
    let spread = coordinate_spread(&s.population.positions());
    let x: Vec<f64> = (0..space.dims())
        .map(|d| {
            if rng.bernoulli(p.get("memory_rate")) {
                let j = rng.index(n);
                let bw = p.get("bandwidth") * spread[d].max(1e-12 * space.mean_width());
                s.population.members[j].position[d] + bw * rng.range(-1.0, 1.0)
            } else {
                rng.range(space.lower()[d], space.upper()[d])
            }
        })
        .collect();
    let cand = budget.evaluate(&mut s.population, x)?;
    let worst = s.population.worst_index();
    if cand.cost() < s.population.members[worst].cost() {
        s.population.members[worst] = cand;
    }
    Ok(StepOutcome::Continue)
}
