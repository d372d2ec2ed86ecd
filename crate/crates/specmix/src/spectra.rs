use crate::error::{Error, Result};
use crate::kernel::{build_centered_kernel, KernelConfig, KernelVariant};
use crate::mixture::MixtureModel;
use ndarray::Array2;

/// Full eigendecomposition of a symmetric matrix.
///
/// `eigenvalues` are sorted in non-increasing order; column `k` of
/// `eigenvectors` is the unit eigenvector paired with `eigenvalues[k]`,
/// with the sign fixed so the entry of largest magnitude is positive.
/// `residual` is `max_k ||M v_k - lambda_k v_k||_2` against the input.
#[derive(Debug, Clone)]
pub struct SpectralSummary {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Array2<f64>,
    pub residual: f64,
}

fn off_diag_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let v = a[i * n + j];
                s += v * v;
            }
        }
    }
    s.sqrt()
}

// Replays the rotations a row has not yet absorbed. By symmetry this yields
// exactly the values the mirrored column writes of an in-place sweep would
// have stored there, one contiguous row at a time.
fn catch_up(a: &mut [f64], n: usize, row: usize, log: &[(u32, u32, f64, f64)], synced: &mut [usize]) {
    let start = synced[row];
    if start < log.len() {
        let r = &mut a[row * n..row * n + n];
        for &(p, q, c, s) in &log[start..] {
            let x = r[p as usize];
            let y = r[q as usize];
            r[p as usize] = c * x - s * y;
            r[q as usize] = s * x + c * y;
        }
    }
    synced[row] = log.len();
}

/// Cyclic Jacobi eigendecomposition.
///
/// Deterministic: rotations are applied in a fixed row-cyclic order, so the
/// result is bit-identical across runs for identical input. Stops once the
/// off-diagonal Frobenius norm falls below `tol * ||M||_F` (the off-diagonal
/// norm of the rotated matrix equals the reconstruction error of the
/// truncated decomposition, by orthogonal invariance). Entries below
/// `tol * ||M||_F / n` are flushed to exact zero before sweeping; their
/// combined mass sits below the stopping threshold, and the flush lets the
/// sweeps skip the far field of strongly localized kernels. Fails with a
/// numeric error if 50 sweeps do not converge.
pub fn eigendecompose(matrix: &Array2<f64>, tol: f64) -> Result<SpectralSummary> {
    let n = matrix.nrows();
    if n == 0 || matrix.ncols() != n {
        return Err(Error::Input(format!(
            "expected a nonempty square matrix, got {}x{}",
            n,
            matrix.ncols()
        )));
    }
    if !(tol >= 1e-14) {
        return Err(Error::Input(format!(
            "tolerance must be at least 1e-14, got {tol}"
        )));
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let gap = (matrix[[i, j]] - matrix[[j, i]]).abs();
            if !(gap <= 1e-12) {
                return Err(Error::Input(format!(
                    "matrix is not symmetric: entries ({i},{j}) differ by {gap}"
                )));
            }
        }
    }

    let mut a: Vec<f64> = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            a.push(matrix[[i, j]]);
        }
    }
    // Eigenvectors accumulate as rows of `w` (the transpose of the usual
    // column convention) so every rotation touches two contiguous runs.
    let mut w = vec![0.0; n * n];
    for i in 0..n {
        w[i * n + i] = 1.0;
    }

    let frob = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let threshold = tol * frob;
    // Entries this small carry less total mass than the convergence
    // threshold itself; flushing them to exact zero up front lets the sweep
    // skip the far field instead of grinding through negligible rotations.
    let trunc = threshold / n as f64;
    for x in a.iter_mut() {
        if x.abs() < trunc {
            *x = 0.0;
        }
    }
    // Mirror writes are deferred: every rotation is logged, and a row is
    // brought current by replaying the rotations it has not yet absorbed
    // just before it participates. Symmetry makes the replay reproduce the
    // exact values the mirrored column writes would have produced, while
    // keeping all traffic inside two contiguous rows. Diagonal entries are
    // always current because only a row's own rotations touch them.
    let mut log: Vec<(u32, u32, f64, f64)> = Vec::new();
    let mut synced = vec![0usize; n];
    let mut converged = false;
    for sweep in 0..50 {
        for row in 0..n {
            catch_up(&mut a, n, row, &log, &mut synced);
        }
        log.clear();
        synced.iter_mut().for_each(|x| *x = 0);
        let off = off_diag_norm(&a, n);
        if off <= threshold {
            converged = true;
            break;
        }
        for p in 0..n.saturating_sub(1) {
            catch_up(&mut a, n, p, &log, &mut synced);
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                // Once the process has settled, an entry too small to
                // perturb either diagonal value can be dropped outright.
                // Row q may lag, so only the current row's copy is cleared;
                // the stale mirror is orders below the stopping threshold.
                if sweep >= 4 && app.abs() + 100.0 * apq.abs() == app.abs()
                    && aqq.abs() + 100.0 * apq.abs() == aqq.abs()
                {
                    a[p * n + q] = 0.0;
                    continue;
                }
                if apq.abs() <= f64::MIN_POSITIVE {
                    continue;
                }
                catch_up(&mut a, n, q, &log, &mut synced);
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                // Rows p and q carry the column values by symmetry, so the
                // whole rotation reads and writes contiguous memory.
                {
                    let (head, tail) = a.split_at_mut(q * n);
                    let rp = &mut head[p * n..p * n + n];
                    let rq = &mut tail[..n];
                    for (x, y) in rp.iter_mut().zip(rq.iter_mut()) {
                        let xp = *x;
                        let yq = *y;
                        *x = c * xp - s * yq;
                        *y = s * xp + c * yq;
                    }
                    rp[p] = app - t * apq;
                    rq[q] = aqq + t * apq;
                    rp[q] = 0.0;
                    rq[p] = 0.0;
                }
                log.push((p as u32, q as u32, c, s));
                // Both rows already reflect their own rotation.
                synced[p] = log.len();
                synced[q] = log.len();

                let (head, tail) = w.split_at_mut(q * n);
                let wp = &mut head[p * n..p * n + n];
                let wq = &mut tail[..n];
                for (x, y) in wp.iter_mut().zip(wq.iter_mut()) {
                    let xp = *x;
                    let yq = *y;
                    *x = c * xp - s * yq;
                    *y = s * xp + c * yq;
                }
            }
        }
    }
    if !converged {
        for row in 0..n {
            catch_up(&mut a, n, row, &log, &mut synced);
        }
        if off_diag_norm(&a, n) > threshold {
            return Err(Error::Numeric(
                "eigendecomposition did not converge within 50 sweeps".into(),
            ));
        }
    }

    let raw: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    let mut order: Vec<usize> = (0..n).collect();
    // Stable sort: equal eigenvalues keep their pre-sort column order.
    order.sort_by(|&i, &j| raw[j].partial_cmp(&raw[i]).expect("finite eigenvalues"));

    let eigenvalues: Vec<f64> = order.iter().map(|&i| raw[i]).collect();
    let mut eigenvectors = Array2::zeros((n, n));
    for (col, &src) in order.iter().enumerate() {
        let row = &w[src * n..src * n + n];
        let mut lead = 0usize;
        let mut lead_abs = -1.0;
        for (r, x) in row.iter().enumerate() {
            if x.abs() > lead_abs {
                lead_abs = x.abs();
                lead = r;
            }
        }
        let flip = row[lead] < 0.0;
        for (r, x) in row.iter().enumerate() {
            eigenvectors[[r, col]] = if flip { -x } else { *x };
        }
    }

    let mv = matrix.dot(&eigenvectors);
    let mut residual = 0.0f64;
    for k in 0..n {
        let mut s = 0.0;
        for r in 0..n {
            let d = mv[[r, k]] - eigenvalues[k] * eigenvectors[[r, k]];
            s += d * d;
        }
        residual = residual.max(s.sqrt());
    }

    Ok(SpectralSummary {
        eigenvalues,
        eigenvectors,
        residual,
    })
}

fn check_non_increasing(name: &str, xs: &[f64]) -> Result<()> {
    for x in xs {
        if !x.is_finite() {
            return Err(Error::Input(format!("{name} contains a non-finite value")));
        }
    }
    for w in xs.windows(2) {
        if w[0] < w[1] {
            return Err(Error::Input(format!(
                "{name} is not non-increasing ({} precedes {})",
                w[0], w[1]
            )));
        }
    }
    Ok(())
}

/// l2 distance between two non-increasing sequences after zero-padding the
/// shorter to the longer's length and re-sorting.
///
/// The re-sort matters when a sequence has negative entries: the padded
/// zeros belong between the positive and negative parts, and by the
/// rearrangement inequality the sorted pairing is the one that minimizes
/// the distance over all pairings.
pub fn delta2(a: &[f64], b: &[f64]) -> Result<f64> {
    check_non_increasing("first sequence", a)?;
    check_non_increasing("second sequence", b)?;
    let len = a.len().max(b.len());
    let pad = |xs: &[f64]| -> Vec<f64> {
        let mut v = xs.to_vec();
        v.resize(len, 0.0);
        v.sort_by(|x, y| y.partial_cmp(x).expect("finite"));
        v
    };
    let pa = pad(a);
    let pb = pad(b);
    let mut s = 0.0;
    for k in 0..len {
        let d = pa[k] - pb[k];
        s += d * d;
    }
    Ok(s.sqrt())
}

/// Spectrum of the integral operator for a mixture, computed by density-
/// weighted discretization on a uniform grid.
///
/// The grid spans `[min mu - 10 max sigma, max mu + 10 max sigma]` with
/// trapezoid weights, and the symmetrized matrix
/// `B_ij = sqrt(d_i) k(z_i, z_j) sqrt(d_j)` (with `d_j` the density times the
/// trapezoid weight, and `k` the operator-bandwidth kernel) shares the
/// operator's eigenvalues up to discretization error.
#[derive(Debug, Clone)]
pub struct OperatorSpectrum {
    /// All grid eigenvalues, non-increasing.
    pub eigenvalues: Vec<f64>,
    pub grid_nodes: Vec<f64>,
    /// Measure weights `d_j` (density times trapezoid weight).
    pub grid_weights: Vec<f64>,
    /// Orthonormal eigenvectors of the symmetrized matrix, one per column.
    pub eigenvectors: Array2<f64>,
    omega: f64,
}

impl OperatorSpectrum {
    /// Evaluate eigenfunction `k` at an arbitrary point by kernel extension:
    /// `phi(x) = (1/lambda) sum_j k(x, z_j) sqrt(d_j) u_j`. The result is
    /// normalized to unit norm in the mixture measure because the discrete
    /// eigenvector is unit-norm.
    pub fn eigenfunction_value(&self, k: usize, x: f64) -> Result<f64> {
        if k >= self.eigenvalues.len() {
            return Err(Error::Input(format!(
                "eigenfunction index {k} out of range for {} eigenvalues",
                self.eigenvalues.len()
            )));
        }
        let lambda = self.eigenvalues[k];
        if lambda <= 1e-12 {
            return Err(Error::Input(format!(
                "eigenfunction extension needs a positive eigenvalue, got {lambda}"
            )));
        }
        let two_w2 = 2.0 * self.omega * self.omega;
        let mut s = 0.0;
        for (j, &z) in self.grid_nodes.iter().enumerate() {
            let d = x - z;
            s += (-(d * d) / two_w2).exp() * self.grid_weights[j].sqrt() * self.eigenvectors[[j, k]];
        }
        Ok(s / lambda)
    }
}

pub fn nystrom_spectrum(
    model: &MixtureModel,
    config: &KernelConfig,
    grid_points: usize,
) -> Result<OperatorSpectrum> {
    if model.dim() != 1 {
        return Err(Error::Config(
            "operator spectra are computed for univariate mixtures only".into(),
        ));
    }
    config.validate(1)?;
    if config.variant != KernelVariant::Standard {
        return Err(Error::Config(
            "operator spectra are defined for the standard kernel variant".into(),
        ));
    }
    if grid_points < 64 {
        return Err(Error::Config(format!(
            "grid needs at least 64 points, got {grid_points}"
        )));
    }

    let mut mu_lo = f64::INFINITY;
    let mut mu_hi = f64::NEG_INFINITY;
    let mut sig_max: f64 = 0.0;
    for comp in model.components() {
        mu_lo = mu_lo.min(comp.mu[0]);
        mu_hi = mu_hi.max(comp.mu[0]);
        sig_max = sig_max.max(comp.sigma[0]);
    }
    let lo = mu_lo - 10.0 * sig_max;
    let hi = mu_hi + 10.0 * sig_max;
    let m = grid_points;
    let h = (hi - lo) / (m - 1) as f64;

    let mut grid_nodes = Vec::with_capacity(m);
    let mut grid_weights = Vec::with_capacity(m);
    for j in 0..m {
        let z = lo + h * j as f64;
        let w = if j == 0 || j == m - 1 { h / 2.0 } else { h };
        grid_nodes.push(z);
        grid_weights.push(model.density(&[z])? * w);
    }

    let omega = config.operator_bandwidth();
    let two_w2 = 2.0 * omega * omega;
    let sqrt_d: Vec<f64> = grid_weights.iter().map(|d| d.sqrt()).collect();
    let mut b = Array2::zeros((m, m));
    for i in 0..m {
        b[[i, i]] = grid_weights[i];
        for j in (i + 1)..m {
            let diff = grid_nodes[i] - grid_nodes[j];
            let v = sqrt_d[i] * (-(diff * diff) / two_w2).exp() * sqrt_d[j];
            b[[i, j]] = v;
            b[[j, i]] = v;
        }
    }

    let summary = eigendecompose(&b, 1e-14)?;
    if let Some(&min) = summary.eigenvalues.last() {
        if min < -1e-10 {
            return Err(Error::Numeric(format!(
                "discretized operator has eigenvalue {min}, below the positivity floor"
            )));
        }
    }
    Ok(OperatorSpectrum {
        eigenvalues: summary.eigenvalues,
        grid_nodes,
        grid_weights,
        eigenvectors: summary.eigenvectors,
        omega,
    })
}

/// Spectrum-approximation rate `R (xi + 1) / sqrt(n)`.
pub fn bk_bound(r: f64, n: usize, xi: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::Input(format!("rate constant must be > 0, got {r}")));
    }
    if n == 0 {
        return Err(Error::Input("sample size must be at least 1".into()));
    }
    if !(xi >= 0.0) {
        return Err(Error::Input(format!("xi must be >= 0, got {xi}")));
    }
    Ok(r * (xi + 1.0) / (n as f64).sqrt())
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergencePoint {
    pub n: usize,
    pub median_delta2: f64,
    pub bk_bound: f64,
}

/// For each sample size, the median over seeds of the spectral distance
/// between the centered sample matrix and the integral operator, next to the
/// `2/sqrt(n)` reference rate.
///
/// The operator spectrum is truncated at 1e-12 before comparison (the grid
/// tail below that level is discretization noise); the sample spectra are
/// compared whole, including the negative eigenvalues the centering
/// introduces.
pub fn convergence_experiment(
    model: &MixtureModel,
    config: &KernelConfig,
    ns: &[usize],
    seeds: usize,
    base_seed: u64,
) -> Result<Vec<ConvergencePoint>> {
    if ns.is_empty() {
        return Err(Error::Input("need at least one sample size".into()));
    }
    if seeds == 0 {
        return Err(Error::Input("need at least one seed".into()));
    }
    let operator = nystrom_spectrum(model, config, 512)?;
    let op_truncated: Vec<f64> = operator
        .eigenvalues
        .iter()
        .copied()
        .filter(|&x| x >= 1e-12)
        .collect();

    let mut out = Vec::with_capacity(ns.len());
    for &n in ns {
        if n == 0 {
            return Err(Error::Input("sample sizes must be at least 1".into()));
        }
        let mut distances = Vec::with_capacity(seeds);
        for s in 0..seeds {
            let sample = model.sample(n, base_seed + s as u64)?;
            let centered = build_centered_kernel(&sample, config)?;
            let summary = eigendecompose(&centered, 1e-13)?;
            distances.push(delta2(&summary.eigenvalues, &op_truncated)?);
        }
        distances.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
        let mid = distances.len() / 2;
        let median = if distances.len() % 2 == 1 {
            distances[mid]
        } else {
            0.5 * (distances[mid - 1] + distances[mid])
        };
        out.push(ConvergencePoint {
            n,
            median_delta2: median,
            bk_bound: bk_bound(1.0, n, 1.0)?,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{build_kernel_matrix, BandwidthConvention};
    use crate::mixture::{GaussianComponent, MixtureModel, SampleSet};
    use crate::rng::SeedStream;

    fn random_symmetric(n: usize, seed: u64) -> Array2<f64> {
        let mut rng = SeedStream::new(seed);
        let mut m = Array2::zeros((n, n));
        for i in 0..n {
            for j in i..n {
                let v = 2.0 * rng.uniform() - 1.0;
                m[[i, j]] = v;
                m[[j, i]] = v;
            }
        }
        m
    }

    #[test]
    fn identity_spectrum_is_all_ones() {
        let m = Array2::eye(3);
        let s = eigendecompose(&m, 1e-12).unwrap();
        assert_eq!(s.eigenvalues, vec![1.0, 1.0, 1.0]);
        assert_eq!(s.residual, 0.0);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(s.eigenvectors[[i, j]], if i == j { 1.0 } else { 0.0 });
            }
        }
    }

    #[test]
    fn rank_one_two_point_matrix() {
        let m = Array2::from_shape_vec((2, 2), vec![0.5, 0.5, 0.5, 0.5]).unwrap();
        let s = eigendecompose(&m, 1e-14).unwrap();
        assert!((s.eigenvalues[0] - 1.0).abs() < 1e-15);
        assert!(s.eigenvalues[1].abs() < 1e-15);
        let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
        assert!((s.eigenvectors[[0, 0]] - inv_sqrt2).abs() < 1e-12);
        assert!((s.eigenvectors[[1, 0]] - inv_sqrt2).abs() < 1e-12);
    }

    #[test]
    fn two_points_at_distance_omega() {
        let mut points = Array2::zeros((2, 1));
        points[[1, 0]] = 1.0;
        let samples = SampleSet {
            points,
            labels: vec![0, 0],
            seed: 0,
        };
        let config = KernelConfig {
            convention: BandwidthConvention::Matrix,
            ..KernelConfig::standard(1.0)
        };
        let k = build_kernel_matrix(&samples, &config).unwrap();
        let s = eigendecompose(&k.entries, 1e-14).unwrap();
        let e1 = (-1.0f64).exp();
        assert!((s.eigenvalues[0] - (1.0 + e1) / 2.0).abs() < 1e-14);
        assert!((s.eigenvalues[1] - (1.0 - e1) / 2.0).abs() < 1e-14);
    }

    #[test]
    fn eigenvalues_are_permutation_invariant() {
        let n = 10;
        let m = random_symmetric(n, 42);
        let perm: Vec<usize> = vec![3, 0, 7, 1, 9, 5, 2, 8, 4, 6];
        let mut pm = Array2::zeros((n, n));
        for i in 0..n {
            for j in 0..n {
                pm[[i, j]] = m[[perm[i], perm[j]]];
            }
        }
        let s1 = eigendecompose(&m, 1e-14).unwrap();
        let s2 = eigendecompose(&pm, 1e-14).unwrap();
        for k in 0..n {
            assert!((s1.eigenvalues[k] - s2.eigenvalues[k]).abs() < 1e-12);
        }
    }

    #[test]
    fn eigenvectors_are_orthonormal_with_small_residual() {
        let m = random_symmetric(12, 7);
        let s = eigendecompose(&m, 1e-14).unwrap();
        let gram = s.eigenvectors.t().dot(&s.eigenvectors);
        for i in 0..12 {
            for j in 0..12 {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((gram[[i, j]] - expect).abs() < 1e-10);
            }
        }
        assert!(s.residual < 1e-11);
    }

    #[test]
    fn eigendecompose_rejects_bad_input() {
        let m = Array2::eye(3);
        assert!(matches!(eigendecompose(&m, 1e-15), Err(Error::Input(_))));
        let mut asym = Array2::eye(2);
        asym[[0, 1]] = 1e-3;
        assert!(matches!(eigendecompose(&asym, 1e-12), Err(Error::Input(_))));
        let rect = Array2::zeros((2, 3));
        assert!(matches!(eigendecompose(&rect, 1e-12), Err(Error::Input(_))));
    }

    #[test]
    fn delta2_examples() {
        assert_eq!(delta2(&[0.6, 0.2], &[0.6, 0.2]).unwrap(), 0.0);
        assert_eq!(delta2(&[1.0], &[]).unwrap(), 1.0);
        let d = delta2(&[3.0, 1.0], &[2.0, 2.0]).unwrap();
        assert!((d - std::f64::consts::SQRT_2).abs() < 1e-15);
        assert!(matches!(delta2(&[0.1, 0.2], &[1.0]), Err(Error::Input(_))));
    }

    #[test]
    fn delta2_pads_zeros_between_signs() {
        // (0.5, -0.2) vs (0.4): the pad zero pairs with -0.2 only if the
        // padded sequence is re-sorted; the optimal matching distance is
        // sqrt(0.1^2 + 0.2^2).
        let d = delta2(&[0.5, -0.2], &[0.4]).unwrap();
        assert!((d - 0.05f64.sqrt()).abs() < 1e-15);
    }

    fn permutations(k: usize) -> Vec<Vec<usize>> {
        fn heap(xs: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
            if k <= 1 {
                out.push(xs.clone());
                return;
            }
            for i in 0..k {
                heap(xs, k - 1, out);
                if k % 2 == 0 {
                    xs.swap(i, k - 1);
                } else {
                    xs.swap(0, k - 1);
                }
            }
        }
        let mut xs: Vec<usize> = (0..k).collect();
        let mut out = Vec::new();
        heap(&mut xs, k, &mut out);
        out
    }

    #[test]
    fn delta2_matches_brute_force_optimal_matching() {
        let cases: Vec<(Vec<f64>, Vec<f64>)> = vec![
            (vec![0.9, 0.4, -0.1], vec![0.8, 0.2]),
            (vec![1.5, 0.0, -0.3, -0.9], vec![1.0, 0.5]),
            (vec![0.7, 0.6, 0.5], vec![0.65, 0.55, 0.45, -0.2]),
            (vec![2.0, -1.0], vec![0.5, 0.25, -0.5, -2.0]),
        ];
        for (a, b) in cases {
            let len = a.len().max(b.len());
            let mut pa = a.clone();
            pa.resize(len, 0.0);
            let mut pb = b.clone();
            pb.resize(len, 0.0);
            let mut best = f64::INFINITY;
            for perm in permutations(len) {
                let mut s = 0.0;
                for (i, &p) in perm.iter().enumerate() {
                    let d = pa[i] - pb[p];
                    s += d * d;
                }
                best = best.min(s.sqrt());
            }
            let got = delta2(&a, &b).unwrap();
            assert!(
                (got - best).abs() < 1e-12,
                "delta2 {got} vs brute force {best}"
            );
        }
    }

    #[test]
    fn near_coincident_sample_is_spectrally_rank_one() {
        let model =
            MixtureModel::single(GaussianComponent::univariate(5.0, 1e-6).unwrap());
        let samples = model.sample(20, 7).unwrap();
        let k = build_kernel_matrix(&samples, &KernelConfig::standard(1.0)).unwrap();
        let s = eigendecompose(&k.entries, 1e-14).unwrap();
        let d = delta2(&s.eigenvalues, &[1.0]).unwrap();
        assert!(d < 1e-6, "distance to rank-one spectrum was {d}");
    }

    #[test]
    fn nystrom_standard_normal_leading_eigenvalues() {
        let model = MixtureModel::single(GaussianComponent::univariate(0.0, 1.0).unwrap());
        let spec = nystrom_spectrum(&model, &KernelConfig::standard(1.0), 256).unwrap();
        // With sigma = omega = 1 the leading eigenvalue is the golden-ratio
        // reciprocal and the ladder decays geometrically.
        assert!((spec.eigenvalues[0] - 0.6180339887498949).abs() < 1e-6);
        let ratio = spec.eigenvalues[1] / spec.eigenvalues[0];
        assert!((ratio - 0.3819660112501051).abs() < 1e-6);
        assert!(*spec.eigenvalues.last().unwrap() > -1e-10);
    }

    #[test]
    fn nystrom_rejects_bad_configs() {
        let model = MixtureModel::single(GaussianComponent::univariate(0.0, 1.0).unwrap());
        assert!(matches!(
            nystrom_spectrum(&model, &KernelConfig::standard(1.0), 32),
            Err(Error::Config(_))
        ));
        let weighted = KernelConfig {
            omega: 1.0,
            variant: KernelVariant::Weighted,
            alphas: Some(vec![1.0]),
            sigma_max: None,
            convention: BandwidthConvention::Operator,
        };
        assert!(matches!(
            nystrom_spectrum(&model, &weighted, 128),
            Err(Error::Config(_))
        ));
        let bivariate = MixtureModel::single(
            GaussianComponent::new(vec![0.0, 0.0], vec![1.0, 1.0]).unwrap(),
        );
        assert!(matches!(
            nystrom_spectrum(&bivariate, &KernelConfig::standard(1.0), 128),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn extended_eigenfunction_is_unit_norm_in_the_mixture() {
        let model = MixtureModel::single(GaussianComponent::univariate(0.0, 1.0).unwrap());
        let spec = nystrom_spectrum(&model, &KernelConfig::standard(1.0), 256).unwrap();
        assert!(spec.eigenfunction_value(0, 0.0).unwrap() > 0.0);
        let norm2 = crate::quad::integrate(
            &|x: f64| {
                let phi = spec.eigenfunction_value(0, x).unwrap();
                phi * phi * model.density(&[x]).unwrap()
            },
            -10.0,
            10.0,
            1e-10,
        );
        assert!((norm2 - 1.0).abs() < 1e-6, "norm^2 was {norm2}");
    }

    #[test]
    fn bk_bound_arithmetic() {
        assert!((bk_bound(1.0, 100, 1.0).unwrap() - 0.2).abs() < 1e-15);
        assert!((bk_bound(1.0, 400, 1.0).unwrap() - 0.1).abs() < 1e-15);
        assert!((bk_bound(1.0, 10_000, 2.0).unwrap() - 0.03).abs() < 1e-15);
        assert!(matches!(bk_bound(0.0, 10, 1.0), Err(Error::Input(_))));
        assert!(matches!(bk_bound(1.0, 0, 1.0), Err(Error::Input(_))));
        assert!(matches!(bk_bound(1.0, 10, -0.5), Err(Error::Input(_))));
    }

    #[test]
    fn convergence_experiment_tracks_the_rate_columns() {
        let model = MixtureModel::single(GaussianComponent::univariate(0.0, 1.0).unwrap());
        let config = KernelConfig::standard(1.0);
        let points = convergence_experiment(&model, &config, &[10, 40], 3, 11).unwrap();
        assert_eq!(points.len(), 2);
        assert_eq!(points[0].n, 10);
        assert!((points[0].bk_bound - 2.0 / 10f64.sqrt()).abs() < 1e-15);
        assert!((points[1].bk_bound - 2.0 / 40f64.sqrt()).abs() < 1e-15);
        assert!(points[0].median_delta2 > 0.0);
        assert!(points[1].median_delta2 < points[0].median_delta2);
    }
}
