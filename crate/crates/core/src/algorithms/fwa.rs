use super::{coord_scale, standard_init, AlgorithmParams, AlgorithmState, ParamSpec, Profile, StateLayout};
use crate::components::{fitness_weights, gaussian_sample, greedy_accept};
use crate::engine::{Budget, RngStream, StepError, StepOutcome};
use crate::error::Result;

pub(super) const PROFILE: Profile = Profile {
    summary: "Fireworks: better members emit more sparks in tighter Gaussian clouds; each keeps its best spark if it improves.",
    population: 8,
    min_population: 1,
    population_doc: "a handful of fireworks; sparks carry most of the evaluations",
    layout: StateLayout::NONE,
    params: &[
        ParamSpec::int("sparks", 40.0, 1.0, 10000.0, "sparks shared out per iteration"),
        ParamSpec::real("amplitude", 1.0, 0.0, 100.0, "cloud width of a member with average value gap, in population spreads"),
        ParamSpec::real("min_amplitude", 0.05, 0.0, 100.0, "cloud width floor, in population spreads"),
        ParamSpec::real("max_amplitude", 3.0, 0.0, 100.0, "cloud width cap, in population spreads"),
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
    let values = s.population.values();
    let best = values.iter().copied().fold(f64::INFINITY, f64::min);
    let mean_gap = values.iter().map(|v| v - best).sum::<f64>() / n as f64;
    let weights = fitness_weights(&values);
    let total_weight: f64 = weights.iter().sum();
    let scale = coord_scale(&s.population, budget);

    for i in 0..n {
        let count = ((p.get("sparks") * weights[i] / total_weight).round() as usize).max(1);
        let gap = if mean_gap > 0.0 {
            (values[i] - best) / mean_gap
        } else {
            1.0
        };
        let width = (p.get("amplitude") * gap).clamp(
            p.get("min_amplitude"),
            p.get("max_amplitude").max(p.get("min_amplitude")),
        );
        let centre = s.population.members[i].position.clone();
        for _ in 0..count {
            let spark = budget.evaluate(&mut s.population, gaussian_sample(&centre, width * scale, rng)?)?;
            let old = s.population.members[i].clone();
            s.population.members[i] = greedy_accept(old, spark)?;
        }
    }
    Ok(StepOutcome::Continue)
}
