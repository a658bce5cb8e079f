use super::{coord_scale, standard_init, AlgorithmParams, AlgorithmState, ParamSpec, Profile, StateLayout};
use crate::components::{hypersphere_sample, kmeans, move_toward};
use crate::engine::{Budget, RngStream, StepError, StepOutcome};
use crate::error::Result;

pub(super) const PROFILE: Profile = Profile {
    summary: "Cuckoo optimization: lay eggs within a radius and keep the best, cluster, migrate toward the best-mean cluster.",
    population: 20,
    min_population: 2,
    population_doc: "egg laying multiplies evaluations, so a smaller population",
    layout: StateLayout::NONE,
    params: &[
        ParamSpec::int("eggs", 3.0, 1.0, 100.0, "samples per member per iteration"),
        ParamSpec::real("lay_radius", 1.0, 0.0, 10.0, "laying radius as a fraction of the population spread"),
        ParamSpec::int("clusters", 3.0, 1.0, 100.0, "habitat groups"),
        ParamSpec::real("migration_max", 1.0, 0.0, 4.0, "migration fraction drawn from [0, this]"),
        ParamSpec::real("jitter", 0.2, 0.0, 10.0, "migration jitter as a fraction of the population spread"),
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
    let scale = coord_scale(&s.population, budget);
    let radius = p.get("lay_radius") * scale * (budget.space().dims() as f64).sqrt();

    for i in 0..n {
        let x = s.population.members[i].position.clone();
        for _ in 0..p.count("eggs") {
            let egg = budget.evaluate(&mut s.population, hypersphere_sample(&x, radius, rng)?)?;
            if egg.cost() < s.population.members[i].cost() {
                s.population.members[i] = egg;
            }
        }
    }

    let clusters = kmeans(&s.population.positions(), p.count("clusters").min(n), rng)?;
    let mean_value = |c: &crate::components::Cluster| {
        c.members
            .iter()
            .map(|&j| s.population.members[j].cost())
            .sum::<f64>()
            / c.members.len() as f64
    };
    let mut best_cluster = 0;
    for (k, c) in clusters.iter().enumerate() {
        if mean_value(c) < mean_value(&clusters[best_cluster]) {
            best_cluster = k;
        }
    }
    let goal_index = *clusters[best_cluster]
        .members
        .iter()
        .min_by(|&&a, &&b| {
            s.population.members[a]
                .cost()
                .total_cmp(&s.population.members[b].cost())
                .then(a.cmp(&b))
        })
        .expect("clusters are non-empty");
    let goal = s.population.members[goal_index].position.clone();
    let jitter = p.get("jitter") * coord_scale(&s.population, budget);

    for (k, c) in clusters.iter().enumerate() {
        if k == best_cluster {
            continue;
        }
        for &i in &c.members {
            let x = s.population.members[i].position.clone();
            let x = move_toward(&x, &goal, rng.range(0.0, p.get("migration_max")), jitter, rng)?;
            s.population.members[i] = budget.evaluate(&mut s.population, x)?;
        }
    }
    Ok(StepOutcome::Continue)
}
