use super::{standard_init, AlgorithmParams, AlgorithmState, ParamSpec, Profile, StateLayout};
use crate::components::{
    gaussian_sample, hypersphere_sample, project_to_ball, proportional_select, random_walk_within,
    DecaySchedule,
};
use crate::engine::{Budget, RngStream, StepError, StepOutcome};
use crate::error::Result;

pub(super) const PROFILE: Profile = Profile {
    summary: "Ant lion: non-elites restart in shrinking spheres around elites and random-walk inside them.",
    population: 50,
    min_population: 2,
    population_doc: "common baseline size",
    layout: StateLayout::NONE,
    params: &[
        ParamSpec::real(
            "elite_fraction",
            0.2,
            0.01,
            0.99,
            "a fifth of the population act as sphere centres",
        ),
        ParamSpec::int(
            "walk_steps",
            2.0,
            0.0,
            50.0,
            "short walks keep most evaluations near the elites",
        ),
        ParamSpec::real(
            "radius_start",
            0.5,
            1e-9,
            2.0,
            "sphere radius of width at the start; covers the box",
        ),
        ParamSpec::real(
            "radius_end",
            1e-7,
            1e-12,
            2.0,
            "sphere radius of width at the end",
        ),
        ParamSpec::real(
            "walk_scale",
            0.3,
            0.0,
            2.0,
            "walk step standard deviation as a fraction of the radius",
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
    let order = s.population.ranking();
    let n_elite = ((p.get("elite_fraction") * n as f64).round() as usize).clamp(1, n - 1);
    let elites: Vec<_> = order[..n_elite]
        .iter()
        .map(|&i| s.population.members[i].clone())
        .collect();
    let radius = DecaySchedule::exponential(p.get("radius_start"), p.get("radius_end"))?
        .at(budget.progress(&s.population))
        * budget.space().mean_width();
    let step_sigma = p.get("walk_scale") * radius / (budget.space().dims() as f64).sqrt();
    let dims = budget.space().dims();

    let mut others: Vec<usize> = order[n_elite..].to_vec();
    others.sort_unstable();
    for i in others {
        let centre = elites[proportional_select(&elites, rng)?].position.clone();
        let start = hypersphere_sample(&centre, radius, rng)?;
        let path = random_walk_within(
            &start,
            p.count("walk_steps"),
            |x| project_to_ball(x, &centre, radius),
            |r| gaussian_sample(&vec![0.0; dims], step_sigma, r),
            rng,
        )?;
        let mut best: Option<crate::engine::Candidate> = None;
        for point in path {
            let c = budget.evaluate(&mut s.population, point)?;
            if best.as_ref().is_none_or(|b| c.cost() < b.cost()) {
                best = Some(c);
            }
            s.population.members[i] = best.clone().expect("just set");
        }
    }
    Ok(StepOutcome::Continue)
}
