use std::f64::consts::{FRAC_PI_4, PI};

use super::{coord_scale, AlgorithmParams, AlgorithmState, ParamSpec, Profile, StateLayout};
use crate::components::vector::{axpy, scale};
use crate::components::{cone_direction, move_toward, random_walk};
use crate::engine::{Budget, RngStream, StepError, StepOutcome};
use crate::error::Result;

pub(super) const PROFILE: Profile = Profile {
    summary: "Group search: producers scan a cone ahead of them, scroungers follow the producer, rangers walk at random.",
    population: 50,
    min_population: 2,
    population_doc: "common baseline size",
    layout: StateLayout {
        counters: true,
        directions: true,
        ..StateLayout::NONE
    },
    params: &[
        ParamSpec::int("producers", 1.0, 1.0, 1000.0, "best members that scan"),
        ParamSpec::real("scrounger_fraction", 0.8, 0.0, 1.0, "share of the rest that follow the producer"),
        ParamSpec::real("max_turn", FRAC_PI_4, 0.0, PI, "widest scan angle, in radians (an eighth of a turn)"),
        ParamSpec::int("scan_points", 3.0, 1.0, 100.0, "points probed per producer scan"),
        ParamSpec::real("scan_radius", 0.2, 1e-9, 10.0, "initial scan distance of width; also its cap"),
        ParamSpec::real("ranger_scale", 1.0, 0.0, 100.0, "ranger step length as a fraction of the population spread"),
    ],
    check: Some(|p| {
        if p.count("producers") < p.population_size {
            Ok(())
        } else {
            Err("producers must be fewer than the population".into())
        }
    }),
};

pub(super) fn init(p: &AlgorithmParams, budget: &Budget<'_>, rng: &mut RngStream) -> Result<AlgorithmState> {
    let mut s = AlgorithmState::standard(&PROFILE.layout, p.population_size, budget, rng)?;
    let r0 = p.get("scan_radius") * budget.space().mean_width();
    s.counters_mut().iter_mut().for_each(|c| c.radius = r0);
    Ok(s)
}

pub(super) fn step(
    p: &AlgorithmParams,
    s: &mut AlgorithmState,
    budget: &Budget<'_>,
    rng: &mut RngStream,
) -> Result<StepOutcome, StepError> {
    let order = s.population.ranking();
    let n_prod = p.count("producers");
    let max_turn = p.get("max_turn");
    let r_max = p.get("scan_radius") * budget.space().mean_width();
    let leader = s.population.members[order[0]].position.clone();
    let ranger_len =
        p.get("ranger_scale") * coord_scale(&s.population, budget) * (budget.space().dims() as f64).sqrt();

    let mut producer = vec![false; order.len()];
    for &i in &order[..n_prod] {
        producer[i] = true;
        let x = s.population.members[i].position.clone();
        let heading = s.directions.as_ref().expect("layout declares directions")[i].clone();
        let r = s.counters_mut()[i].radius;
        let mut found: Option<(crate::engine::Candidate, Vec<f64>)> = None;
        for _ in 0..p.count("scan_points") {
            let dir = cone_direction(&heading, max_turn, rng)?;
            let mut y = x.clone();
            axpy(&mut y, r, &dir);
            let c = budget.evaluate(&mut s.population, y)?;
            if found.as_ref().is_none_or(|(b, _)| c.cost() < b.cost()) {
                found = Some((c, dir));
            }
        }
        let (best, dir) = found.expect("at least one scan point");
        if best.cost() < s.population.members[i].cost() {
            s.population.members[i] = best;
            s.directions.as_mut().expect("layout declares directions")[i] = dir;
            s.counters_mut()[i].radius = (r * 1.5).min(r_max);
        } else {
            s.directions.as_mut().expect("layout declares directions")[i] =
                cone_direction(&heading, max_turn, rng)?;
            s.counters_mut()[i].radius = (r * 0.6).max(1e-12 * r_max);
        }
    }

    for i in 0..order.len() {
        if producer[i] {
            continue;
        }
        let x = s.population.members[i].position.clone();
        if rng.bernoulli(p.get("scrounger_fraction")) {
            let y = move_toward(&x, &leader, rng.uniform(), 0.0, rng)?;
            s.population.members[i] = budget.evaluate(&mut s.population, y)?;
        } else {
            let heading = s.directions.as_ref().expect("layout declares directions")[i].clone();
            let mut new_heading = heading.clone();
            let path = random_walk(
                &x,
                1,
                budget.space(),
                |r| {
                    new_heading = cone_direction(&heading, max_turn, r)?;
                    Ok(scale(&new_heading, ranger_len))
                },
                rng,
            )?;
            s.population.members[i] = budget.evaluate(&mut s.population, path[1].clone())?;
            s.directions.as_mut().expect("layout declares directions")[i] = new_heading;
        }
    }
    Ok(StepOutcome::Continue)
}
