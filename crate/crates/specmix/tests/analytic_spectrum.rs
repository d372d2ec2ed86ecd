//! Cross-validation of the closed-form spectrum against the grid-discretized
//! operator: eigenvalue ladders, traces, grid refinement, and the product
//! structure of multivariate spectra.

use approx::assert_abs_diff_eq;
use specmix::{
    analytic_eigenvalue, multivariate_spectrum, nystrom_spectrum, GaussianComponent, KernelConfig,
    MixtureModel,
};

fn standard_normal() -> MixtureModel {
    MixtureModel::single(GaussianComponent::univariate(0.0, 1.0).unwrap())
}

fn table1_mixture() -> MixtureModel {
    MixtureModel::new(
        vec![
            GaussianComponent::univariate(-10.0, 1.0).unwrap(),
            GaussianComponent::univariate(15.0, 1.0).unwrap(),
        ],
        vec![0.98, 0.02],
    )
    .unwrap()
}

#[test]
fn single_gaussian_ladder_matches_grid_operator() {
    let model = standard_normal();
    let config = KernelConfig::standard(1.0);
    let spectrum = nystrom_spectrum(&model, &config, 512).unwrap();
    for i in 0..8 {
        let closed = analytic_eigenvalue(i, 2.0).unwrap();
        assert!(
            (spectrum.eigenvalues[i] - closed).abs() < 1e-8,
            "eigenvalue {i}: grid {} vs closed form {}",
            spectrum.eigenvalues[i],
            closed
        );
    }
}

#[test]
fn grid_refinement_is_converged() {
    let config = KernelConfig::standard(1.0);
    for model in [standard_normal(), table1_mixture()] {
        let coarse = nystrom_spectrum(&model, &config, 256).unwrap();
        let fine = nystrom_spectrum(&model, &config, 512).unwrap();
        for i in 0..5 {
            assert!(
                (coarse.eigenvalues[i] - fine.eigenvalues[i]).abs() < 1e-6,
                "eigenvalue {i} moved between grids: {} vs {}",
                coarse.eigenvalues[i],
                fine.eigenvalues[i]
            );
        }
    }
}

#[test]
fn operator_trace_equals_kernel_diagonal_mass() {
    // k(x, x) = 1 pointwise, so the spectrum must sum to one for any mixture.
    let config = KernelConfig::standard(1.0);
    for model in [standard_normal(), table1_mixture()] {
        let spectrum = nystrom_spectrum(&model, &config, 512).unwrap();
        let trace: f64 = spectrum.eigenvalues.iter().filter(|v| **v > 0.0).sum();
        assert_abs_diff_eq!(trace, 1.0, epsilon = 1e-6);
    }
}

#[test]
fn separated_mixture_spectrum_is_weighted_union_of_component_ladders() {
    // With components this far apart the operator nearly block-diagonalizes,
    // so its top eigenvalues are the weight-scaled single-component ladders.
    let config = KernelConfig::standard(1.0);
    let spectrum = nystrom_spectrum(&table1_mixture(), &config, 512).unwrap();
    let mut expected: Vec<f64> = (0..=8)
        .flat_map(|i| {
            let g = analytic_eigenvalue(i, 2.0).unwrap();
            [0.98 * g, 0.02 * g]
        })
        .collect();
    expected.sort_by(|a, b| b.partial_cmp(a).unwrap());
    expected.truncate(5);
    for (i, want) in expected.iter().enumerate() {
        assert!(
            (spectrum.eigenvalues[i] - want).abs() < 1e-9,
            "eigenvalue {i}: grid {} vs weighted ladder {}",
            spectrum.eigenvalues[i],
            want
        );
    }
}

#[test]
fn multivariate_lattice_search_matches_direct_enumeration() {
    let mus = [0.3, -1.0];
    let sigmas = [1.0, 0.7];
    let omega = 0.9;
    let found = multivariate_spectrum(&mus, &sigmas, omega, 12).unwrap();

    let beta = |s: f64| 2.0 * s * s / (omega * omega);
    let mut direct = Vec::new();
    for i in 0..=20usize {
        for j in 0..=20usize {
            let v = analytic_eigenvalue(i, beta(sigmas[0])).unwrap()
                * analytic_eigenvalue(j, beta(sigmas[1])).unwrap();
            direct.push(v);
        }
    }
    direct.sort_by(|a, b| b.partial_cmp(a).unwrap());

    assert_eq!(found.len(), 12);
    for (k, pair) in found.iter().enumerate() {
        assert!(
            (pair.eigenvalue - direct[k]).abs() < 1e-15,
            "rank {k}: lattice search {} vs direct enumeration {}",
            pair.eigenvalue,
            direct[k]
        );
        if k > 0 {
            assert!(pair.eigenvalue <= found[k - 1].eigenvalue);
        }
    }
}
