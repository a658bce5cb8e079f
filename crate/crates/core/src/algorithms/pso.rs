use super::{AlgorithmParams, AlgorithmState, ParamSpec, Profile, StateLayout};
use crate::components::vector::add;
use crate::components::velocity_update;
use crate::engine::{Budget, RngStream, StepError, StepOutcome};
use crate::error::Result;

pub(super) const PROFILE: Profile = Profile {
    summary: "Particle swarm: inertia-weighted velocities pulled toward personal and global bests.",
    population: 50,
    min_population: 1,
    population_doc: "common baseline size",
    layout: StateLayout {
        velocities: true,
        historical_bests: true,
        ..StateLayout::NONE
    },
    params: &[
        ParamSpec::real(
            "inertia",
            0.7,
            0.0,
            1.5,
            "canonical constriction-equivalent inertia",
        ),
        ParamSpec::real("cognitive", 1.4, 0.0, 4.0, "canonical personal-best weight"),
        ParamSpec::real("social", 1.4, 0.0, 4.0, "canonical informant-best weight"),
        ParamSpec::real(
            "max_speed",
            0.2,
            1e-6,
            1.0,
            "speed cap as a fraction of each side length; stops early blow-up",
        ),
        ParamSpec::real(
            "initial_speed",
            0.1,
            0.0,
            1.0,
            "initial velocities uniform within this fraction of each side",
        ),
    ],
    check: None,
};

pub(super) fn init(p: &AlgorithmParams, budget: &Budget<'_>, rng: &mut RngStream) -> Result<AlgorithmState> {
    let mut s = AlgorithmState::standard(&PROFILE.layout, p.population_size, budget, rng)?;
    let widths = budget.space().widths();
    let v0 = p.get("initial_speed");
    for v in s.velocities_mut() {
        for (vd, w) in v.iter_mut().zip(&widths) {
            *vd = rng.range(-v0 * w, v0 * w);
        }
    }
    Ok(s)
}

pub(super) fn step(
    p: &AlgorithmParams,
    s: &mut AlgorithmState,
    budget: &Budget<'_>,
    rng: &mut RngStream,
) -> Result<StepOutcome, StepError> {
    let widths = budget.space().widths();
    let vmax = p.get("max_speed");
    let hist = s
        .historical_bests
        .clone()
        .expect("layout declares historical bests");
    let informant = crate::engine::Population::from_members(hist.clone());
    let gbest = hist[informant.best_index()].position.clone();

    for i in 0..s.population.len() {
        let x = s.population.members[i].position.clone();
        let mut v = velocity_update(
            &s.velocities_mut()[i],
            &x,
            &hist[i].position,
            &gbest,
            p.get("inertia"),
            p.get("cognitive"),
            p.get("social"),
            rng,
        )?;
        for (vd, w) in v.iter_mut().zip(&widths) {
            *vd = vd.clamp(-vmax * w, vmax * w);
        }
        let cand = budget.evaluate(&mut s.population, add(&x, &v))?;
        s.remember(i, &cand);
        s.population.members[i] = cand;
        s.velocities_mut()[i] = v;
    }
    Ok(StepOutcome::Continue)
}
