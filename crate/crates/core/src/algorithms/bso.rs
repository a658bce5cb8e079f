use super::{coord_scale, standard_init, AlgorithmParams, AlgorithmState, ParamSpec, Profile, StateLayout};
use crate::components::{gaussian_sample, greedy_accept, kmeans, recombine, restart, roulette, Cluster};
use crate::engine::{Budget, Candidate, RngStream, StepError, StepOutcome};
use crate::error::Result;

pub(super) const PROFILE: Profile = Profile {
    summary: "Brain storm: k-means clusters, challengers from cluster-biased perturbation or recombination, keep the better.",
    population: 50,
    min_population: 2,
    population_doc: "common baseline size",
    layout: StateLayout::NONE,
    params: &[
        ParamSpec::int("clusters", 5.0, 1.0, 100.0, "customary cluster count"),
        ParamSpec::real("p_random", 0.05, 0.0, 1.0, "chance a challenger is a fresh uniform point"),
        ParamSpec::real("p_single", 0.8, 0.0, 1.0, "chance a challenger comes from one cluster rather than two"),
        ParamSpec::real("p_centre", 0.4, 0.0, 1.0, "chance the base point is the cluster best rather than a random member"),
        ParamSpec::real("step_scale", 0.5, 0.0, 10.0, "perturbation deviation as a fraction of the population spread"),
    ],
    check: None,
};

pub(super) fn init(p: &AlgorithmParams, budget: &Budget<'_>, rng: &mut RngStream) -> Result<AlgorithmState> {
    standard_init(&PROFILE, p, budget, rng)
}

fn pick(cluster: &Cluster, members: &[Candidate], p_centre: f64, rng: &mut RngStream) -> Vec<f64> {
    let i = if rng.bernoulli(p_centre) {
        *cluster
            .members
            .iter()
            .min_by(|&&a, &&b| members[a].cost().total_cmp(&members[b].cost()).then(a.cmp(&b)))
            .expect("clusters are non-empty")
    } else {
        cluster.members[rng.index(cluster.members.len())]
    };
    members[i].position.clone()
}

pub(super) fn step(
    p: &AlgorithmParams,
    s: &mut AlgorithmState,
    budget: &Budget<'_>,
    rng: &mut RngStream,
) -> Result<StepOutcome, StepError> {
    let n = s.population.len();
    let snapshot = s.population.members.clone();
    let clusters = kmeans(&s.population.positions(), p.count("clusters").min(n), rng)?;
    let sizes: Vec<f64> = clusters.iter().map(|c| c.members.len() as f64).collect();
    let sigma = p.get("step_scale") * coord_scale(&s.population, budget);
    let p_centre = p.get("p_centre");

    for i in 0..n {
        let x = if rng.bernoulli(p.get("p_random")) {
            restart(budget.space(), rng).position
        } else if clusters.len() == 1 || rng.bernoulli(p.get("p_single")) {
            let c = &clusters[roulette(&sizes, rng)?];
            gaussian_sample(&pick(c, &snapshot, p_centre, rng), sigma, rng)?
        } else {
            let a = rng.index(clusters.len());
            let b = rng.index_except(clusters.len(), a);
            let xa = pick(&clusters[a], &snapshot, p_centre, rng);
            let xb = pick(&clusters[b], &snapshot, p_centre, rng);
            gaussian_sample(&recombine(&xa, &xb, rng)?, sigma, rng)?
        };
        let cand = budget.evaluate(&mut s.population, x)?;
        s.population.members[i] = greedy_accept(snapshot[i].clone(), cand)?;
    }
    Ok(StepOutcome::Continue)
}
