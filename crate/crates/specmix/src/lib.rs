//! Spectral analysis of Gaussian-kernel similarity operators on Gaussian
//! mixtures: sampling, kernel matrices, eigensolvers, closed-form spectra,
//! certified eigenvalue enclosures, and the contraction dynamics they drive.

pub mod analytic;
pub mod bounds;
pub mod dynamics;
pub mod error;
pub mod kernel;
pub mod mixture;
pub mod quad;
pub mod rng;
pub mod spectra;

pub use analytic::{
    analytic_eigenfunction, analytic_eigenvalue, hermite, multivariate_spectrum,
    AnalyticEigenpair, MultiIndexEigenpair,
};
pub use bounds::{
    closed_form_oracle_residuals, quadrature_oracle, second_eigenvalue_interval, BoundReport,
    Interval, OracleQuantity, TwoComponentMixture,
};
pub use dynamics::{
    detect_clusters, effective_rank, line_layout, run, step, SystemState, Trajectory,
};
pub use error::{Error, Result};
pub use kernel::{
    build_centered_kernel, build_kernel_matrix, kernel_value, row_sum_bounds,
    BandwidthConvention, KernelConfig, KernelMatrix, KernelVariant,
};
pub use mixture::{GaussianComponent, MixtureModel, SampleSet};
pub use rng::SeedStream;
pub use spectra::{
    bk_bound, convergence_experiment, delta2, eigendecompose, nystrom_spectrum, ConvergencePoint,
    OperatorSpectrum, SpectralSummary,
};
