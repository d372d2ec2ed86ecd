use crate::error::{Error, Result};
use crate::rng::SeedStream;
use ndarray::Array2;

/// Axis-aligned Gaussian: per-dimension mean and standard deviation.
/// Covariance is diagonal by construction; every closed form downstream is
/// stated per axis, so this is the whole supported family.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianComponent {
    pub mu: Vec<f64>,
    pub sigma: Vec<f64>,
}

impl GaussianComponent {
    pub fn new(mu: Vec<f64>, sigma: Vec<f64>) -> Result<Self> {
        if mu.is_empty() || mu.len() != sigma.len() {
            return Err(Error::Input(format!(
                "component mean and sigma must have equal positive length, got {} and {}",
                mu.len(),
                sigma.len()
            )));
        }
        if sigma.iter().any(|&s| !(s > 0.0)) {
            return Err(Error::Input("component sigma entries must be > 0".into()));
        }
        Ok(Self { mu, sigma })
    }

    /// Convenience constructor for the univariate case.
    pub fn univariate(mu: f64, sigma: f64) -> Result<Self> {
        Self::new(vec![mu], vec![sigma])
    }

    pub fn dim(&self) -> usize {
        self.mu.len()
    }
}

/// Finite Gaussian mixture P = sum_g pi_g P^g.
///
/// Weights are nonnegative and sum to 1 within 1e-12; zero weights are
/// permitted so degenerate limits (a component switched off) can be studied
/// without changing the component list.
#[derive(Debug, Clone)]
pub struct MixtureModel {
    components: Vec<GaussianComponent>,
    weights: Vec<f64>,
}

impl MixtureModel {
    pub fn new(components: Vec<GaussianComponent>, weights: Vec<f64>) -> Result<Self> {
        if components.is_empty() || components.len() != weights.len() {
            return Err(Error::Input(format!(
                "need matching nonempty component/weight lists, got {} and {}",
                components.len(),
                weights.len()
            )));
        }
        let dim = components[0].dim();
        if components.iter().any(|c| c.dim() != dim) {
            return Err(Error::Input("all components must share one dimension".into()));
        }
        if weights.iter().any(|&w| !(w >= 0.0)) {
            return Err(Error::Input("weights must be nonnegative".into()));
        }
        let total: f64 = weights.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::Input(format!("weights must sum to 1, got {total}")));
        }
        if weights.iter().all(|&w| w == 0.0) {
            return Err(Error::Input("at least one weight must be positive".into()));
        }
        Ok(Self { components, weights })
    }

    /// Single standard block: one component with weight 1.
    pub fn single(component: GaussianComponent) -> Self {
        Self {
            components: vec![component],
            weights: vec![1.0],
        }
    }

    pub fn dim(&self) -> usize {
        self.components[0].dim()
    }

    pub fn n_components(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[GaussianComponent] {
        &self.components
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Mixture density p(x) = sum_g pi_g prod_k N(x_k; mu_gk, sigma_gk^2).
    pub fn density(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.dim() {
            return Err(Error::Input(format!(
                "density input has dimension {}, model has {}",
                x.len(),
                self.dim()
            )));
        }
        let mut total = 0.0;
        for (comp, &w) in self.components.iter().zip(&self.weights) {
            if w == 0.0 {
                continue;
            }
            let mut dens = 1.0;
            for k in 0..x.len() {
                let s = comp.sigma[k];
                let t = (x[k] - comp.mu[k]) / s;
                dens *= (-0.5 * t * t).exp() / (s * (2.0 * std::f64::consts::PI).sqrt());
            }
            total += w * dens;
        }
        Ok(total)
    }

    /// Draw n labeled points. Per point: one categorical draw for the label,
    /// then one normal draw per coordinate, in axis order. This fixed draw
    /// schedule is part of the reproducibility contract.
    pub fn sample(&self, n: usize, seed: u64) -> Result<SampleSet> {
        if n == 0 {
            return Err(Error::Input("sample size must be at least 1".into()));
        }
        let l = self.dim();
        let mut stream = SeedStream::new(seed);
        let mut points = Array2::zeros((n, l));
        let mut labels = Vec::with_capacity(n);
        for i in 0..n {
            let g = stream.categorical(&self.weights);
            labels.push(g);
            let comp = &self.components[g];
            for k in 0..l {
                points[[i, k]] = comp.mu[k] + comp.sigma[k] * stream.normal();
            }
        }
        Ok(SampleSet {
            points,
            labels,
            seed,
        })
    }
}

/// A seeded draw from a mixture: points row-major (one row per point), one
/// component label per point. Same (model, n, seed) reproduces this
/// bit-identically.
#[derive(Debug, Clone)]
pub struct SampleSet {
    pub points: Array2<f64>,
    pub labels: Vec<usize>,
    pub seed: u64,
}

impl SampleSet {
    pub fn n(&self) -> usize {
        self.points.nrows()
    }

    pub fn dim(&self) -> usize {
        self.points.ncols()
    }
}
