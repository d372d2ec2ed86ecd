use crate::error::{Error, Result};
use crate::kernel::{build_kernel_matrix, KernelConfig, KernelMatrix};
use crate::mixture::SampleSet;
use ndarray::Array2;

/// Positions of all points at one iteration.
#[derive(Debug, Clone)]
pub struct SystemState {
    pub positions: Array2<f64>,
    pub iteration: usize,
}

/// Full record of an iterated contraction: one snapshot per iteration
/// (including the initial state), with per-snapshot diagnostics.
#[derive(Debug, Clone)]
pub struct Trajectory {
    pub snapshots: Vec<SystemState>,
    /// Largest pairwise distance at each snapshot.
    pub diameters: Vec<f64>,
    /// Euclidean norm of the centroid at each snapshot.
    pub centroid_norms: Vec<f64>,
    /// Cluster labels at each snapshot, relative to that snapshot's own
    /// diameter.
    pub cluster_labels: Vec<Vec<usize>>,
}

fn diameter(positions: &Array2<f64>) -> f64 {
    let n = positions.nrows();
    let mut best = 0.0f64;
    for i in 0..n {
        for j in (i + 1)..n {
            let mut s = 0.0;
            for k in 0..positions.ncols() {
                let d = positions[[i, k]] - positions[[j, k]];
                s += d * d;
            }
            best = best.max(s.sqrt());
        }
    }
    best
}

fn centroid_norm(positions: &Array2<f64>) -> f64 {
    let n = positions.nrows() as f64;
    let mut s = 0.0;
    for k in 0..positions.ncols() {
        let mean = positions.column(k).sum() / n;
        s += mean * mean;
    }
    s.sqrt()
}

/// One application of the similarity matrix to the position block.
pub fn step(kernel: &KernelMatrix, positions: &Array2<f64>) -> Result<Array2<f64>> {
    if positions.nrows() != kernel.n {
        return Err(Error::Input(format!(
            "positions have {} rows, kernel couples {} points",
            positions.nrows(),
            kernel.n
        )));
    }
    Ok(kernel.entries.dot(positions))
}

/// Iterate the similarity matrix on the positions. The matrix is built once
/// from the samples and held fixed; positions contract toward the origin
/// along its eigenvector hierarchy.
pub fn run(
    samples: &SampleSet,
    initial_positions: &Array2<f64>,
    config: &KernelConfig,
    iters: usize,
    tau: f64,
) -> Result<Trajectory> {
    if initial_positions.nrows() != samples.n() {
        return Err(Error::Input(format!(
            "initial positions have {} rows for {} samples",
            initial_positions.nrows(),
            samples.n()
        )));
    }
    let kernel = build_kernel_matrix(samples, config)?;
    let mut snapshots = Vec::with_capacity(iters + 1);
    let mut diameters = Vec::with_capacity(iters + 1);
    let mut centroid_norms = Vec::with_capacity(iters + 1);
    let mut cluster_labels = Vec::with_capacity(iters + 1);

    let mut current = initial_positions.clone();
    for iteration in 0..=iters {
        diameters.push(diameter(&current));
        centroid_norms.push(centroid_norm(&current));
        cluster_labels.push(detect_clusters(&current, tau)?);
        snapshots.push(SystemState {
            positions: current.clone(),
            iteration,
        });
        if iteration < iters {
            current = step(&kernel, &current)?;
        }
    }
    Ok(Trajectory {
        snapshots,
        diameters,
        centroid_norms,
        cluster_labels,
    })
}

/// Single-linkage clusters at threshold `tau * diameter`: points closer than
/// the threshold (strictly) are joined transitively. A zero-diameter state is
/// one cluster. Labels are assigned in order of each cluster's lowest member
/// index, so label 0 always contains point 0.
pub fn detect_clusters(positions: &Array2<f64>, tau: f64) -> Result<Vec<usize>> {
    if positions.nrows() == 0 {
        return Err(Error::Input("no points to cluster".into()));
    }
    if !(tau > 0.0) || !tau.is_finite() {
        return Err(Error::Input(format!("tau must be finite and > 0, got {tau}")));
    }
    let n = positions.nrows();
    let diam = diameter(positions);
    if diam == 0.0 {
        return Ok(vec![0; n]);
    }
    let threshold = tau * diam;

    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let mut s = 0.0;
            for k in 0..positions.ncols() {
                let d = positions[[i, k]] - positions[[j, k]];
                s += d * d;
            }
            if s.sqrt() < threshold {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri.max(rj)] = ri.min(rj);
                }
            }
        }
    }
    let mut labels = vec![usize::MAX; n];
    let mut next = 0;
    for i in 0..n {
        let root = find(&mut parent, i);
        if labels[root] == usize::MAX {
            labels[root] = next;
            next += 1;
        }
        labels[i] = labels[root];
    }
    Ok(labels)
}

/// Participation-ratio rank `(sum lambda)^2 / sum lambda^2` of a
/// non-increasing, non-negative spectrum.
pub fn effective_rank(eigenvalues: &[f64]) -> Result<f64> {
    if eigenvalues.is_empty() {
        return Err(Error::Input("empty spectrum".into()));
    }
    for w in eigenvalues.windows(2) {
        if w[0] < w[1] {
            return Err(Error::Input("spectrum is not non-increasing".into()));
        }
    }
    if eigenvalues.iter().any(|&x| x < 0.0 || !x.is_finite()) {
        return Err(Error::Input(
            "effective rank needs non-negative finite eigenvalues".into(),
        ));
    }
    let sum: f64 = eigenvalues.iter().sum();
    let sq: f64 = eigenvalues.iter().map(|x| x * x).sum();
    if sq == 0.0 {
        return Err(Error::Input("all-zero spectrum has no rank".into()));
    }
    Ok(sum * sum / sq)
}

/// Evenly spaced points along straight segments: `counts[s]` points from
/// `segments[s].0` to `segments[s].1` inclusive (a single point sits at the
/// segment start). Useful as a structured initial condition.
pub fn line_layout(segments: &[(Vec<f64>, Vec<f64>)], counts: &[usize]) -> Result<Array2<f64>> {
    if segments.is_empty() || segments.len() != counts.len() {
        return Err(Error::Input(format!(
            "{} segments with {} counts",
            segments.len(),
            counts.len()
        )));
    }
    let dim = segments[0].0.len();
    if dim == 0 {
        return Err(Error::Input("segments need at least one coordinate".into()));
    }
    let total: usize = counts.iter().sum();
    if total == 0 {
        return Err(Error::Input("layout needs at least one point".into()));
    }
    for (start, end) in segments {
        if start.len() != dim || end.len() != dim {
            return Err(Error::Input(
                "all segment endpoints must share one dimension".into(),
            ));
        }
    }
    let mut out = Array2::zeros((total, dim));
    let mut row = 0;
    for (s, &(ref start, ref end)) in segments.iter().enumerate() {
        let c = counts[s];
        for j in 0..c {
            let t = if c == 1 { 0.0 } else { j as f64 / (c - 1) as f64 };
            for k in 0..dim {
                out[[row, k]] = start[k] + t * (end[k] - start[k]);
            }
            row += 1;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mixture::{GaussianComponent, MixtureModel};
    use crate::spectra::eigendecompose;

    fn set_from(points: Vec<Vec<f64>>) -> SampleSet {
        let n = points.len();
        let l = points[0].len();
        let mut arr = Array2::zeros((n, l));
        for (i, p) in points.iter().enumerate() {
            for (k, &v) in p.iter().enumerate() {
                arr[[i, k]] = v;
            }
        }
        SampleSet {
            points: arr,
            labels: vec![0; n],
            seed: 0,
        }
    }

    fn table1_samples(n: usize, seed: u64) -> SampleSet {
        MixtureModel::new(
            vec![
                GaussianComponent::univariate(-10.0, 1.0).unwrap(),
                GaussianComponent::univariate(15.0, 1.0).unwrap(),
            ],
            vec![0.98, 0.02],
        )
        .unwrap()
        .sample(n, seed)
        .unwrap()
    }

    #[test]
    fn coincident_points_average_in_one_step() {
        let samples = set_from(vec![vec![3.0], vec![3.0]]);
        let kernel = build_kernel_matrix(&samples, &KernelConfig::standard(1.0)).unwrap();
        let positions = Array2::from_shape_vec((2, 2), vec![1.0, 0.0, 0.0, 1.0]).unwrap();
        let next = step(&kernel, &positions).unwrap();
        for i in 0..2 {
            for k in 0..2 {
                assert_eq!(next[[i, k]], 0.5);
            }
        }
    }

    #[test]
    fn step_is_a_contraction_with_rate_lambda_max() {
        let samples = table1_samples(30, 5);
        let kernel = build_kernel_matrix(&samples, &KernelConfig::standard(1.0)).unwrap();
        let lambda_max = eigendecompose(&kernel.entries, 1e-13).unwrap().eigenvalues[0];
        assert!(lambda_max < 1.0);
        let y = Array2::from_shape_fn((30, 2), |(i, k)| ((i * 7 + k * 3) % 11) as f64 - 5.0);
        let yp = Array2::from_shape_fn((30, 2), |(i, k)| ((i * 5 + k) % 13) as f64 - 6.0);
        let frob = |m: &Array2<f64>| m.iter().map(|x| x * x).sum::<f64>().sqrt();
        let before = frob(&(&y - &yp));
        let after = frob(&(&step(&kernel, &y).unwrap() - &step(&kernel, &yp).unwrap()));
        assert!(after <= lambda_max * before + 1e-12);
    }

    #[test]
    fn origin_is_fixed() {
        let samples = table1_samples(10, 2);
        let kernel = build_kernel_matrix(&samples, &KernelConfig::standard(1.0)).unwrap();
        let zero = Array2::zeros((10, 3));
        let next = step(&kernel, &zero).unwrap();
        assert!(next.iter().all(|&x| x == 0.0));
    }

    #[test]
    fn zero_iterations_still_record_the_initial_state() {
        let samples = table1_samples(8, 3);
        let init = samples.points.clone();
        let traj = run(&samples, &init, &KernelConfig::standard(1.0), 0, 0.05).unwrap();
        assert_eq!(traj.snapshots.len(), 1);
        assert_eq!(traj.diameters.len(), 1);
        assert_eq!(traj.cluster_labels.len(), 1);
        assert_eq!(traj.snapshots[0].iteration, 0);
        assert_eq!(traj.snapshots[0].positions, init);
    }

    #[test]
    fn far_blocks_evolve_independently() {
        // Cross-block kernel entries underflow, so iterating the full system
        // must match iterating each block alone.
        let block_a = vec![vec![-10.3], vec![-9.9], vec![-10.1]];
        let block_b = vec![vec![14.8], vec![15.2]];
        let mut all = block_a.clone();
        all.extend(block_b.clone());
        let config = KernelConfig::standard(1.0);

        let full = run(&set_from(all.clone()), &set_from(all).points, &config, 4, 0.05).unwrap();
        let sub_a = run(
            &set_from(block_a.clone()),
            &set_from(block_a).points,
            &config,
            4,
            0.05,
        )
        .unwrap();
        let sub_b = run(
            &set_from(block_b.clone()),
            &set_from(block_b).points,
            &config,
            4,
            0.05,
        )
        .unwrap();

        // The full system's 1/n is 1/5 against 1/3 and 1/2 in the blocks, so
        // rescale iteration k by (n_block / n_full)^k to compare.
        for k in 0..=4 {
            let scale_a = (3.0f64 / 5.0).powi(k as i32);
            for i in 0..3 {
                let got = full.snapshots[k].positions[[i, 0]];
                let expect = sub_a.snapshots[k].positions[[i, 0]] * scale_a;
                assert!((got - expect).abs() < 1e-12, "block a, iter {k}, point {i}");
            }
            let scale_b = (2.0f64 / 5.0).powi(k as i32);
            for i in 0..2 {
                let got = full.snapshots[k].positions[[3 + i, 0]];
                let expect = sub_b.snapshots[k].positions[[i, 0]] * scale_b;
                assert!((got - expect).abs() < 1e-12, "block b, iter {k}, point {i}");
            }
        }
    }

    #[test]
    fn trajectory_is_permutation_equivariant() {
        let samples = table1_samples(12, 9);
        let config = KernelConfig::standard(1.0);
        let perm: Vec<usize> = vec![5, 0, 11, 3, 7, 1, 9, 2, 10, 4, 8, 6];
        let mut permuted_points = Array2::zeros((12, 1));
        for (i, &p) in perm.iter().enumerate() {
            permuted_points[[i, 0]] = samples.points[[p, 0]];
        }
        let permuted = SampleSet {
            points: permuted_points.clone(),
            labels: perm.iter().map(|&p| samples.labels[p]).collect(),
            seed: samples.seed,
        };
        let t1 = run(&samples, &samples.points.clone(), &config, 5, 0.05).unwrap();
        let t2 = run(&permuted, &permuted_points, &config, 5, 0.05).unwrap();
        for k in 0..=5 {
            for (i, &p) in perm.iter().enumerate() {
                let a = t2.snapshots[k].positions[[i, 0]];
                let b = t1.snapshots[k].positions[[p, 0]];
                assert!((a - b).abs() < 1e-12);
            }
            assert!((t1.diameters[k] - t2.diameters[k]).abs() < 1e-12);
        }
    }

    #[test]
    fn exact_threshold_distance_stays_split() {
        let positions = Array2::from_shape_vec((3, 1), vec![0.0, 1.0, 2.0]).unwrap();
        // Diameter 2, tau 0.5: the threshold is exactly 1, and unit-distance
        // neighbors must not be joined under the strict comparison.
        let labels = detect_clusters(&positions, 0.5).unwrap();
        assert_eq!(labels, vec![0, 1, 2]);
        // Nudging tau up joins the chain into one cluster transitively.
        let labels = detect_clusters(&positions, 0.51).unwrap();
        assert_eq!(labels, vec![0, 0, 0]);
    }

    #[test]
    fn coincident_points_form_one_cluster() {
        let positions = Array2::from_elem((4, 2), 1.5);
        assert_eq!(detect_clusters(&positions, 0.05).unwrap(), vec![0, 0, 0, 0]);
    }

    #[test]
    fn cluster_labels_follow_lowest_member_order() {
        let positions =
            Array2::from_shape_vec((5, 1), vec![10.0, 0.0, 10.1, 0.1, 20.0]).unwrap();
        let labels = detect_clusters(&positions, 0.02).unwrap();
        assert_eq!(labels, vec![0, 1, 0, 1, 2]);
    }

    #[test]
    fn effective_rank_counts_flat_directions() {
        assert_eq!(effective_rank(&[1.0, 0.0, 0.0]).unwrap(), 1.0);
        assert_eq!(effective_rank(&[1.0, 1.0, 0.0]).unwrap(), 2.0);
        assert!((effective_rank(&[2.0, 1.0]).unwrap() - 1.8).abs() < 1e-15);
        assert!(effective_rank(&[]).is_err());
        assert!(effective_rank(&[0.5, 1.0]).is_err());
        assert!(effective_rank(&[1.0, -0.1]).is_err());
        assert!(effective_rank(&[0.0, 0.0]).is_err());
    }

    #[test]
    fn positions_contract_at_the_spectral_rate() {
        let samples = table1_samples(40, 13);
        let config = KernelConfig::standard(1.0);
        let kernel = build_kernel_matrix(&samples, &config).unwrap();
        let lambda_max = eigendecompose(&kernel.entries, 1e-13).unwrap().eigenvalues[0];
        let init = samples.points.clone();
        let traj = run(&samples, &init, &config, 8, 0.05).unwrap();
        let frob = |m: &Array2<f64>| m.iter().map(|x| x * x).sum::<f64>().sqrt();
        let base = frob(&init);
        for k in 0..=8 {
            let norm = frob(&traj.snapshots[k].positions);
            assert!(
                norm <= lambda_max.powi(k as i32) * base + 1e-9,
                "iteration {k}: {norm} vs rate {}",
                lambda_max.powi(k as i32) * base
            );
        }
    }

    #[test]
    fn iterates_align_with_the_top_eigenvector() {
        let samples = table1_samples(50, 4);
        let config = KernelConfig::standard(1.0);
        let kernel = build_kernel_matrix(&samples, &config).unwrap();
        let top = eigendecompose(&kernel.entries, 1e-13).unwrap();
        let v0: Vec<f64> = (0..50).map(|i| top.eigenvectors[[i, 0]]).collect();
        let traj = run(&samples, &samples.points.clone(), &config, 10, 0.05).unwrap();
        let angle = |positions: &Array2<f64>| {
            let mut dot = 0.0;
            let mut norm = 0.0;
            for i in 0..50 {
                dot += positions[[i, 0]] * v0[i];
                norm += positions[[i, 0]] * positions[[i, 0]];
            }
            (dot.abs() / norm.sqrt()).min(1.0).acos()
        };
        let mut prev = angle(&traj.snapshots[3].positions);
        for k in 4..=10 {
            let cur = angle(&traj.snapshots[k].positions);
            assert!(cur <= prev + 1e-12, "angle grew at iteration {k}");
            prev = cur;
        }
    }

    #[test]
    fn line_layout_places_evenly_spaced_points() {
        let segments = vec![
            (vec![0.0, 0.0], vec![1.0, 0.0]),
            (vec![5.0, 5.0], vec![5.0, 5.0]),
        ];
        let pts = line_layout(&segments, &[3, 1]).unwrap();
        assert_eq!(pts.nrows(), 4);
        assert_eq!(pts[[0, 0]], 0.0);
        assert_eq!(pts[[1, 0]], 0.5);
        assert_eq!(pts[[2, 0]], 1.0);
        assert_eq!(pts[[3, 0]], 5.0);
        assert!(line_layout(&segments, &[3]).is_err());
        assert!(line_layout(&[], &[]).is_err());
        assert!(line_layout(&[(vec![0.0], vec![1.0, 2.0])], &[2]).is_err());
    }

    #[test]
    fn per_snapshot_labels_use_that_snapshots_diameter() {
        // Two tight groups: as iteration shrinks everything toward zero, the
        // relative geometry is preserved, so labels stay [0, 0, 1, 1] when
        // computed against each snapshot's own diameter.
        let samples = set_from(vec![vec![-10.0], vec![-10.2], vec![15.0], vec![15.1]]);
        let traj = run(
            &samples,
            &samples.points.clone(),
            &KernelConfig::standard(1.0),
            3,
            0.05,
        )
        .unwrap();
        for k in 0..=3 {
            assert_eq!(traj.cluster_labels[k], vec![0, 0, 1, 1], "iteration {k}");
        }
    }
}
