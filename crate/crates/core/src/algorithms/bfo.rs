use super::{coord_scale, standard_init, AlgorithmParams, AlgorithmState, ParamSpec, Profile, StateLayout};
use crate::components::vector::axpy;
use crate::components::{crowding_term, restart, CrowdingKernel};
use crate::engine::{Budget, RngStream, StepError, StepOutcome};
use crate::error::Result;

pub(super) const PROFILE: Profile = Profile {
    summary: "Bacterial foraging: swim while improving, tumble otherwise, crowding-adjusted comparisons, reproduction and dispersal.",
    population: 50,
    min_population: 2,
    population_doc: "common baseline size",
    layout: StateLayout {
        counters: true,
        directions: true,
        ..StateLayout::NONE
    },
    params: &[
        ParamSpec::real("step_scale", 0.5, 1e-6, 5.0, "swim length as a fraction of the population spread"),
        ParamSpec::int("reproduction_interval", 4.0, 1.0, 1000.0, "iterations between copying the best half over the worst"),
        ParamSpec::real("dispersal_prob", 0.02, 0.0, 1.0, "per-member restart chance each iteration"),
        ParamSpec::real("attract_depth", 0.1, 0.0, 10.0, "classic swarming kernel depth"),
        ParamSpec::real("attract_width", 0.2, 0.0, 1000.0, "classic swarming kernel width, in normalized coordinates"),
        ParamSpec::real("repel_height", 0.1, 0.0, 10.0, "classic repulsion height"),
        ParamSpec::real("repel_width", 10.0, 0.0, 1000.0, "classic repulsion width, in normalized coordinates"),
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
    let space = budget.space();
    let length = p.get("step_scale") * coord_scale(&s.population, budget) * (space.dims() as f64).sqrt();
    let kernel = CrowdingKernel {
        attract_depth: p.get("attract_depth"),
        attract_width: p.get("attract_width"),
        repel_height: p.get("repel_height"),
        repel_width: p.get("repel_width"),
    };
    let (_, value_sd) = s.population.value_stats();
    let crowd_scale = if value_sd.is_finite() { value_sd } else { 0.0 };
    let normalized: Vec<Vec<f64>> = s
        .population
        .members
        .iter()
        .map(|c| space.normalize(&c.position))
        .collect();
    let adjusted = |i: usize, x: &[f64], v: f64| {
        let others: Vec<&[f64]> = (0..n)
            .filter(|&j| j != i)
            .map(|j| normalized[j].as_slice())
            .collect();
        v + crowd_scale * crowding_term(&space.normalize(x), &others, &kernel)
    };

    for i in 0..n {
        let old = s.population.members[i].clone();
        let swimming = s.counters_mut()[i].stagnation == 0;
        let dir = if swimming {
            s.directions.as_ref().expect("layout declares directions")[i].clone()
        } else {
            rng.unit_vector(space.dims())
        };
        let mut x = old.position.clone();
        axpy(&mut x, length, &dir);
        let cand = budget.evaluate(&mut s.population, x)?;
        let improved = adjusted(i, &cand.position, cand.cost()) < adjusted(i, &old.position, old.cost());
        // A swim only continues while it pays off; a tumble is always taken.
        if improved || !swimming {
            s.population.members[i] = cand;
            s.directions.as_mut().expect("layout declares directions")[i] = dir;
        }
        s.counters_mut()[i].stagnation = usize::from(!improved);
    }

    if s.iteration.is_multiple_of(p.count("reproduction_interval")) {
        let order = s.population.ranking();
        let half = n / 2;
        for r in 0..half {
            let (good, bad) = (order[r], order[n - 1 - r]);
            s.population.members[bad] = s.population.members[good].clone();
            let d = s.directions.as_ref().expect("layout declares directions")[good].clone();
            s.directions.as_mut().expect("layout declares directions")[bad] = d;
            let c = s.counters_mut()[good];
            s.counters_mut()[bad] = c;
        }
    }

    let best = s.population.best_index();
    for i in 0..n {
        if i != best && rng.bernoulli(p.get("dispersal_prob")) {
            let fresh = restart(space, rng);
            s.population.members[i] = budget.evaluate(&mut s.population, fresh.position)?;
            s.counters_mut()[i].stagnation = 1;
        }
    }
    Ok(StepOutcome::Continue)
}
