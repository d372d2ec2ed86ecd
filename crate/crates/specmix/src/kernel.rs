use crate::error::{Error, Result};
use crate::mixture::SampleSet;
use ndarray::Array2;
use serde::{Deserialize, Serialize};

/// Which bandwidth symbol a config's `omega` denotes.
///
/// The similarity matrix is exp(-d^2/w_m^2)/n for a matrix-side bandwidth
/// w_m, while the integral-operator spectra are stated for a kernel
/// exp(-d^2/(2 w_o^2)). Both describe the same kernel exactly when
/// w_m^2 = 2 w_o^2, so a single omega can be interpreted on either side and
/// bridged to the other. `Operator` is the default because the reference
/// values reproduced by this crate (the 0.618/0.236/0.090 eigenvalue ladder,
/// the sandwich and interval endpoints, the empirical spectra) all treat the
/// configured omega as the operator-side symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BandwidthConvention {
    /// `omega` is the matrix-side bandwidth: entries exp(-d^2/omega^2)/n.
    Matrix,
    /// `omega` is the operator-side bandwidth: entries exp(-d^2/(2 omega^2))/n.
    #[default]
    Operator,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KernelVariant {
    /// exp(-||dx||^2 / w_m^2) / n
    Standard,
    /// exp(-sum_k alpha_k dx_k^2) / n; feature weights taken verbatim
    /// (they carry their own per-feature scale, so no convention bridging).
    Weighted,
    /// exp(-||dx||^2 / (sigma_max * n * w_m^2)) / n
    Rescaled,
}

/// Similarity kernel parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KernelConfig {
    pub omega: f64,
    pub variant: KernelVariant,
    /// Per-feature weights; required by (and only by) the weighted variant.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alphas: Option<Vec<f64>>,
    /// Largest component standard deviation; required by (and only by) the
    /// rescaled variant.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma_max: Option<f64>,
    #[serde(default)]
    pub convention: BandwidthConvention,
}

impl KernelConfig {
    pub fn standard(omega: f64) -> Self {
        Self {
            omega,
            variant: KernelVariant::Standard,
            alphas: None,
            sigma_max: None,
            convention: BandwidthConvention::Operator,
        }
    }

    /// Bandwidth at which matrix entries are evaluated.
    pub fn matrix_bandwidth(&self) -> f64 {
        match self.convention {
            BandwidthConvention::Matrix => self.omega,
            BandwidthConvention::Operator => std::f64::consts::SQRT_2 * self.omega,
        }
    }

    /// Bandwidth at which operator-side spectra are evaluated.
    pub fn operator_bandwidth(&self) -> f64 {
        match self.convention {
            BandwidthConvention::Matrix => self.omega / std::f64::consts::SQRT_2,
            BandwidthConvention::Operator => self.omega,
        }
    }

    /// Check the variant/field pairing against the feature dimension `l`.
    pub fn validate(&self, l: usize) -> Result<()> {
        if !(self.omega > 0.0) {
            return Err(Error::Config(format!("omega must be > 0, got {}", self.omega)));
        }
        match self.variant {
            KernelVariant::Standard => {
                if self.alphas.is_some() || self.sigma_max.is_some() {
                    return Err(Error::Config(
                        "standard variant takes neither alphas nor sigma_max".into(),
                    ));
                }
            }
            KernelVariant::Weighted => {
                let alphas = self
                    .alphas
                    .as_ref()
                    .ok_or_else(|| Error::Config("weighted variant requires alphas".into()))?;
                if alphas.len() != l {
                    return Err(Error::Config(format!(
                        "alphas has length {}, features have dimension {l}",
                        alphas.len()
                    )));
                }
                if alphas.iter().any(|&a| !(a > 0.0)) {
                    return Err(Error::Config("alphas must be positive".into()));
                }
                if self.sigma_max.is_some() {
                    return Err(Error::Config("weighted variant takes no sigma_max".into()));
                }
            }
            KernelVariant::Rescaled => {
                let sm = self
                    .sigma_max
                    .ok_or_else(|| Error::Config("rescaled variant requires sigma_max".into()))?;
                if !(sm > 0.0) {
                    return Err(Error::Config("sigma_max must be > 0".into()));
                }
                if self.alphas.is_some() {
                    return Err(Error::Config("rescaled variant takes no alphas".into()));
                }
            }
        }
        Ok(())
    }
}

/// Symmetric n x n similarity matrix with 1/n normalization.
///
/// Invariants: exactly symmetric (each unordered pair computed once),
/// diagonal exactly 1/n, entries in (0, 1/n] up to floating-point underflow
/// at extreme separations.
#[derive(Debug, Clone)]
pub struct KernelMatrix {
    pub entries: Array2<f64>,
    pub config: KernelConfig,
    pub n: usize,
}

/// One kernel entry, 1/n factor included.
pub fn kernel_value(xi: &[f64], xj: &[f64], config: &KernelConfig, n: usize) -> Result<f64> {
    if xi.len() != xj.len() {
        return Err(Error::Input(format!(
            "points have dimensions {} and {}",
            xi.len(),
            xj.len()
        )));
    }
    if n == 0 {
        return Err(Error::Input("n must be at least 1".into()));
    }
    config.validate(xi.len())?;
    let inv_n = 1.0 / n as f64;
    let exponent = match config.variant {
        KernelVariant::Standard => {
            let wm = config.matrix_bandwidth();
            -sq_dist(xi, xj) / (wm * wm)
        }
        KernelVariant::Rescaled => {
            let wm = config.matrix_bandwidth();
            let sm = config.sigma_max.expect("validated");
            -sq_dist(xi, xj) / (sm * n as f64 * wm * wm)
        }
        KernelVariant::Weighted => {
            let alphas = config.alphas.as_ref().expect("validated");
            let mut s = 0.0;
            for k in 0..xi.len() {
                let d = xi[k] - xj[k];
                s += alphas[k] * d * d;
            }
            -s
        }
    };
    Ok(inv_n * exponent.exp())
}

fn sq_dist(a: &[f64], b: &[f64]) -> f64 {
    let mut s = 0.0;
    for k in 0..a.len() {
        let d = a[k] - b[k];
        s += d * d;
    }
    s
}

/// Build the full similarity matrix from a sample set. Each unordered pair is
/// evaluated once and mirrored, so the result is exactly symmetric; the
/// diagonal is 1/n exactly for every variant.
pub fn build_kernel_matrix(samples: &SampleSet, config: &KernelConfig) -> Result<KernelMatrix> {
    let n = samples.n();
    config.validate(samples.dim())?;
    let mut entries = Array2::zeros((n, n));
    let inv_n = 1.0 / n as f64;
    for i in 0..n {
        entries[[i, i]] = inv_n;
        let xi = samples.points.row(i);
        for j in (i + 1)..n {
            let v = kernel_value(
                xi.as_slice().expect("row-major"),
                samples.points.row(j).as_slice().expect("row-major"),
                config,
                n,
            )?;
            entries[[i, j]] = v;
            entries[[j, i]] = v;
        }
    }
    Ok(KernelMatrix {
        entries,
        config: config.clone(),
        n,
    })
}

/// The centered variant: same matrix with the diagonal zeroed (the kernel is
/// 1 at zero distance, so centering subtracts 1/n Kronecker deltas).
pub fn build_centered_kernel(samples: &SampleSet, config: &KernelConfig) -> Result<Array2<f64>> {
    let k = build_kernel_matrix(samples, config)?;
    let mut entries = k.entries;
    for i in 0..samples.n() {
        entries[[i, i]] = 0.0;
    }
    Ok(entries)
}

/// Extreme row sums, which bracket the leading eigenvalue of a positive
/// symmetric matrix (Perron bound).
pub fn row_sum_bounds(k: &KernelMatrix) -> (f64, f64) {
    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    for i in 0..k.n {
        let s: f64 = k.entries.row(i).sum();
        min = min.min(s);
        max = max.max(s);
    }
    (min, max)
}
