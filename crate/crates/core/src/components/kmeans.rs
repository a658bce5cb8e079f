use super::vector::{mean_position, squared_distance};
use crate::engine::RngStream;
use crate::error::{invalid, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Cluster {
    pub members: Vec<usize>,
    pub centroid: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KMeansOptions {
    /// Lloyd iteration cap per restart.
    pub max_iter: usize,
    /// Independent initializations; the lowest within-cluster sum of squares
    /// wins, ties to the earliest.
    pub restarts: usize,
    /// Finish with single-point transfer sweeps that move a point whenever
    /// doing so lowers the total sum of squares.
    pub refine: bool,
}

impl Default for KMeansOptions {
    fn default() -> Self {
        Self {
            max_iter: 100,
            restarts: 12,
            refine: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct KMeansResult {
    pub clusters: Vec<Cluster>,
    pub assignment: Vec<usize>,
    pub wcss: f64,
    /// Sum of squares after every Lloyd iteration and refinement sweep of
    /// the winning restart.
    pub history: Vec<f64>,
}

/// Sum over points of the squared distance to their cluster centroid.
pub fn within_cluster_ss<P: AsRef<[f64]>>(points: &[P], clusters: &[Cluster]) -> f64 {
    clusters
        .iter()
        .flat_map(|c| {
            c.members
                .iter()
                .map(move |&i| squared_distance(points[i].as_ref(), &c.centroid))
        })
        .sum()
}

/// k-means with [`KMeansOptions::default`].
pub fn kmeans<P: AsRef<[f64]>>(points: &[P], k: usize, rng: &mut RngStream) -> Result<Vec<Cluster>> {
    Ok(kmeans_with(points, k, KMeansOptions::default(), rng)?.clusters)
}

/// Partitions `points` into `k` non-empty clusters.
///
/// Each restart seeds the centroids with `k` distinct points drawn from
/// `rng` (k-means++ weighting), then alternates nearest-centroid assignment (ties to the lower
/// cluster index) and centroid updates until the assignment stops changing.
/// A cluster left empty is reseeded with the point farthest from its
/// centroid.
pub fn kmeans_with<P: AsRef<[f64]>>(
    points: &[P],
    k: usize,
    options: KMeansOptions,
    rng: &mut RngStream,
) -> Result<KMeansResult> {
    if k == 0 || k > points.len() {
        return Err(invalid(format!(
            "kmeans: k = {k} must lie in 1..={}",
            points.len()
        )));
    }
    let dims = points[0].as_ref().len();
    if points.iter().any(|p| p.as_ref().len() != dims) {
        return Err(invalid("kmeans: points differ in length"));
    }
    let mut best: Option<KMeansResult> = None;
    for _ in 0..options.restarts.max(1) {
        let mut run = lloyd(points, k, options.max_iter, rng);
        if options.refine {
            refine(points, &mut run);
        }
        if best.as_ref().is_none_or(|b| run.wcss < b.wcss) {
            best = Some(run);
        }
    }
    Ok(best.expect("at least one restart"))
}

fn centroids_of<P: AsRef<[f64]>>(points: &[P], assignment: &[usize], k: usize) -> Vec<Cluster> {
    let mut members = vec![Vec::new(); k];
    for (i, &c) in assignment.iter().enumerate() {
        members[c].push(i);
    }
    members
        .into_iter()
        .map(|m| {
            let pts: Vec<&[f64]> = m.iter().map(|&i| points[i].as_ref()).collect();
            Cluster {
                centroid: mean_position(&pts),
                members: m,
            }
        })
        .collect()
}

fn nearest(x: &[f64], centroids: &[Vec<f64>]) -> usize {
    let mut best = 0;
    let mut best_d = f64::INFINITY;
    for (j, c) in centroids.iter().enumerate() {
        let d = squared_distance(x, c);
        if d < best_d {
            best = j;
            best_d = d;
        }
    }
    best
}

/// k-means++ seeding: the first seed uniform, each further seed drawn with
/// probability proportional to its squared distance from the nearest seed so
/// far. Seeds are always distinct members.
fn seed_centroids<P: AsRef<[f64]>>(points: &[P], k: usize, rng: &mut RngStream) -> Vec<Vec<f64>> {
    let n = points.len();
    let mut chosen = vec![rng.index(n)];
    let mut d2: Vec<f64> = points
        .iter()
        .map(|p| squared_distance(p.as_ref(), points[chosen[0]].as_ref()))
        .collect();
    while chosen.len() < k {
        let weights: Vec<f64> = (0..n)
            .map(|i| if chosen.contains(&i) { 0.0 } else { d2[i] })
            .collect();
        let total: f64 = weights.iter().sum();
        let next = if total > 0.0 {
            let mut target = rng.uniform() * total;
            let mut pick = None;
            for (i, w) in weights.iter().enumerate() {
                if *w > 0.0 {
                    pick = Some(i);
                    if target < *w {
                        break;
                    }
                    target -= w;
                }
            }
            pick.expect("positive total weight")
        } else {
            // Every remaining point coincides with a seed.
            let free: Vec<usize> = (0..n).filter(|i| !chosen.contains(i)).collect();
            free[rng.index(free.len())]
        };
        chosen.push(next);
        for (i, p) in points.iter().enumerate() {
            d2[i] = d2[i].min(squared_distance(p.as_ref(), points[next].as_ref()));
        }
    }
    chosen.iter().map(|&i| points[i].as_ref().to_vec()).collect()
}

fn lloyd<P: AsRef<[f64]>>(points: &[P], k: usize, max_iter: usize, rng: &mut RngStream) -> KMeansResult {
    let mut centroids = seed_centroids(points, k, rng);
    let mut assignment: Vec<usize> = Vec::new();
    let mut clusters = Vec::new();
    let mut history = Vec::new();

    for _ in 0..max_iter.max(1) {
        let mut next: Vec<usize> = points.iter().map(|p| nearest(p.as_ref(), &centroids)).collect();
        repair_empty(points, &mut next, &centroids, k);
        let changed = next != assignment;
        assignment = next;
        clusters = centroids_of(points, &assignment, k);
        centroids = clusters.iter().map(|c| c.centroid.clone()).collect();
        history.push(within_cluster_ss(points, &clusters));
        if !changed {
            break;
        }
    }
    KMeansResult {
        wcss: *history.last().expect("at least one iteration"),
        clusters,
        assignment,
        history,
    }
}

fn repair_empty<P: AsRef<[f64]>>(points: &[P], assignment: &mut [usize], centroids: &[Vec<f64>], k: usize) {
    loop {
        let mut sizes = vec![0usize; k];
        for &c in assignment.iter() {
            sizes[c] += 1;
        }
        let Some(empty) = sizes.iter().position(|&s| s == 0) else {
            return;
        };
        let mut far = None;
        let mut far_d = -1.0;
        for (i, p) in points.iter().enumerate() {
            let c = assignment[i];
            if sizes[c] < 2 {
                continue;
            }
            let d = squared_distance(p.as_ref(), &centroids[c]);
            if d > far_d {
                far_d = d;
                far = Some(i);
            }
        }
        let i = far.expect("k <= n leaves a cluster with two or more points");
        assignment[i] = empty;
    }
}

fn refine<P: AsRef<[f64]>>(points: &[P], run: &mut KMeansResult) {
    let k = run.clusters.len();
    loop {
        let mut moved = false;
        for i in 0..points.len() {
            let x = points[i].as_ref();
            let a = run.assignment[i];
            let na = run.clusters[a].members.len();
            if na < 2 {
                continue;
            }
            let cost_out = na as f64 / (na - 1) as f64 * squared_distance(x, &run.clusters[a].centroid);
            let mut target = None;
            let mut best_delta = -1e-12 * cost_out.max(1e-300);
            for b in (0..k).filter(|&b| b != a) {
                let nb = run.clusters[b].members.len();
                let cost_in = nb as f64 / (nb + 1) as f64 * squared_distance(x, &run.clusters[b].centroid);
                let delta = cost_in - cost_out;
                if delta < best_delta {
                    best_delta = delta;
                    target = Some(b);
                }
            }
            if let Some(b) = target {
                run.assignment[i] = b;
                run.clusters = centroids_of(points, &run.assignment, k);
                moved = true;
            }
        }
        let wcss = within_cluster_ss(points, &run.clusters);
        if moved {
            run.history.push(wcss);
        }
        run.wcss = wcss;
        if !moved {
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Exact optimum by enumerating every labelling with no empty cluster.
    fn brute_force_wcss(points: &[Vec<f64>], k: usize) -> f64 {
        let n = points.len();
        let total = k.pow(n as u32);
        let mut best = f64::INFINITY;
        for code in 0..total {
            let mut labels = vec![0usize; n];
            let mut c = code;
            for l in labels.iter_mut() {
                *l = c % k;
                c /= k;
            }
            let mut ok = vec![false; k];
            labels.iter().for_each(|&l| ok[l] = true);
            if ok.iter().any(|o| !o) {
                continue;
            }
            let mut ss = 0.0;
            for j in 0..k {
                let pts: Vec<&Vec<f64>> = (0..n).filter(|&i| labels[i] == j).map(|i| &points[i]).collect();
                let m = mean_position(&pts);
                ss += pts.iter().map(|p| squared_distance(p, &m)).sum::<f64>();
            }
            best = best.min(ss);
        }
        best
    }

    #[test]
    fn k_equals_n_gives_singletons() {
        let pts = vec![vec![0.0], vec![5.0], vec![9.0], vec![-3.0]];
        let mut rng = RngStream::new(0);
        let clusters = kmeans(&pts, 4, &mut rng).unwrap();
        assert!(clusters.iter().all(|c| c.members.len() == 1));
        assert_eq!(within_cluster_ss(&pts, &clusters), 0.0);
    }

    #[test]
    fn k_one_is_global_mean() {
        let pts = vec![vec![0.0, 0.0], vec![2.0, 0.0], vec![4.0, 6.0]];
        let mut rng = RngStream::new(0);
        let clusters = kmeans(&pts, 1, &mut rng).unwrap();
        assert_eq!(clusters[0].centroid, vec![2.0, 2.0]);
        assert_eq!(clusters[0].members, vec![0, 1, 2]);
    }

    #[test]
    fn rejects_bad_k() {
        let pts = vec![vec![0.0]];
        let mut rng = RngStream::new(0);
        assert!(kmeans(&pts, 2, &mut rng).is_err());
        assert!(kmeans(&pts, 0, &mut rng).is_err());
    }

    #[test]
    fn separates_two_blobs() {
        let mut rng = RngStream::new(5);
        let mut pts = Vec::new();
        for i in 0..40 {
            let c = if i < 20 { -10.0 } else { 10.0 };
            pts.push(vec![c + 0.3 * rng.normal(), 0.3 * rng.normal()]);
        }
        let clusters = kmeans(&pts, 2, &mut rng).unwrap();
        for c in &clusters {
            let left = c.members.iter().all(|&i| i < 20);
            let right = c.members.iter().all(|&i| i >= 20);
            assert!(left || right);
            assert_eq!(c.members.len(), 20);
        }
    }

    #[test]
    fn history_is_non_increasing_and_fixed_point_is_nearest_centroid() {
        let mut rng = RngStream::new(8);
        for _ in 0..50 {
            let pts: Vec<Vec<f64>> = (0..30).map(|_| vec![rng.normal(), rng.normal()]).collect();
            let res = kmeans_with(
                &pts,
                4,
                KMeansOptions {
                    restarts: 1,
                    ..Default::default()
                },
                &mut rng,
            )
            .unwrap();
            assert!(
                res.history.windows(2).all(|w| w[1] <= w[0] + 1e-12),
                "{:?}",
                res.history
            );
            let cents: Vec<Vec<f64>> = res.clusters.iter().map(|c| c.centroid.clone()).collect();
            for (i, p) in pts.iter().enumerate() {
                let own = squared_distance(p, &cents[res.assignment[i]]);
                let min = cents
                    .iter()
                    .map(|c| squared_distance(p, c))
                    .fold(f64::INFINITY, f64::min);
                assert!(own <= min + 1e-12);
            }
            // Clusters partition the points and centroids are cluster means.
            let mut seen: Vec<usize> = res.clusters.iter().flat_map(|c| c.members.clone()).collect();
            seen.sort();
            assert_eq!(seen, (0..30).collect::<Vec<_>>());
        }
    }

    #[test]
    fn near_optimal_on_small_instances() {
        let mut rng = RngStream::new(123);
        for trial in 0..300 {
            let n = 3 + trial % 6;
            let k = 1 + trial % 3;
            let pts: Vec<Vec<f64>> = (0..n)
                .map(|_| vec![rng.range(-1.0, 1.0), rng.range(-1.0, 1.0)])
                .collect();
            let got = within_cluster_ss(&pts, &kmeans(&pts, k, &mut rng).unwrap());
            let opt = brute_force_wcss(&pts, k);
            assert!(got <= 1.05 * opt + 1e-12, "trial {trial}: {got} vs {opt}");
        }
    }
}
