use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::collections::{BTreeSet, BinaryHeap};

const MAX_INDEX: usize = 60;

/// Probabilists' Hermite polynomial He_i(x), by the three-term recurrence
/// He_{i+1}(x) = x He_i(x) - i He_{i-1}(x).
pub fn hermite(i: usize, x: f64) -> Result<f64> {
    if i > MAX_INDEX {
        return Err(Error::Input(format!(
            "polynomial degree {i} exceeds the supported maximum {MAX_INDEX}"
        )));
    }
    let mut prev = 1.0;
    if i == 0 {
        return Ok(prev);
    }
    let mut cur = x;
    for k in 1..i {
        let next = x * cur - k as f64 * prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// i-th eigenvalue of the Gaussian-kernel operator over a single Gaussian,
/// in terms of beta = 2 sigma^2 / omega^2:
/// lambda_i = sqrt(2) / sqrt(D) * (beta / D)^i with D = 1 + beta + sqrt(1 + 2 beta).
///
/// The ladder is geometric with ratio q = beta / D in (0, 1), and its total
/// mass sums to exactly 1 (sqrt(D) = (1 + sqrt(1 + 2 beta)) / sqrt(2)).
pub fn analytic_eigenvalue(i: usize, beta: f64) -> Result<f64> {
    if !(beta >= 0.0) || !beta.is_finite() {
        return Err(Error::Input(format!("beta must be finite and >= 0, got {beta}")));
    }
    let d = 1.0 + beta + (1.0 + 2.0 * beta).sqrt();
    let q = beta / d;
    let lead = std::f64::consts::SQRT_2 / d.sqrt();
    if i == 0 {
        return Ok(lead);
    }
    Ok(lead * q.powi(i as i32))
}

/// Eigenpair of the Gaussian-kernel operator over N(mu, sigma^2).
///
/// The eigenfunction is
/// phi_i(x) = Q^{1/8} / sqrt(i!) * exp(-(x - mu)^2 (sqrt(Q) - 1) / (4 sigma^2))
///            * He_i(Q^{1/4} (x - mu) / sigma)
/// with Q = 1 + 2 beta; the family is orthonormal in L^2(N(mu, sigma^2)).
#[derive(Debug, Clone, PartialEq)]
pub struct AnalyticEigenpair {
    pub index: usize,
    pub eigenvalue: f64,
    pub beta: f64,
    pub mu: f64,
    pub sigma: f64,
    pub omega: f64,
}

impl AnalyticEigenpair {
    pub fn eval(&self, x: f64) -> f64 {
        let q_big = 1.0 + 2.0 * self.beta;
        // Log-domain prefactor: ln(Q^{1/8}) - ln(sqrt(i!)) stays finite far
        // past the point where i! itself would overflow.
        let mut lnpre = 0.125 * q_big.ln();
        for k in 1..=self.index {
            lnpre -= 0.5 * (k as f64).ln();
        }
        let dx = x - self.mu;
        let decay = -dx * dx * (q_big.sqrt() - 1.0) / (4.0 * self.sigma * self.sigma);
        let arg = q_big.powf(0.25) * dx / self.sigma;
        let he = hermite(self.index, arg).expect("index capped at construction");
        (lnpre + decay).exp() * he
    }
}

pub fn analytic_eigenfunction(
    index: usize,
    mu: f64,
    sigma: f64,
    omega: f64,
) -> Result<AnalyticEigenpair> {
    if index > MAX_INDEX {
        return Err(Error::Input(format!(
            "eigenfunction index {index} exceeds the supported maximum {MAX_INDEX}"
        )));
    }
    if !(sigma > 0.0) {
        return Err(Error::Input(format!("sigma must be > 0, got {sigma}")));
    }
    if !(omega > 0.0) {
        return Err(Error::Input(format!("omega must be > 0, got {omega}")));
    }
    let beta = 2.0 * sigma * sigma / (omega * omega);
    Ok(AnalyticEigenpair {
        index,
        eigenvalue: analytic_eigenvalue(index, beta)?,
        beta,
        mu,
        sigma,
        omega,
    })
}

/// Product eigenpair for an axis-aligned multivariate Gaussian: one index
/// per coordinate, eigenvalue the product of the per-coordinate ladder.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiIndexEigenpair {
    pub indices: Vec<usize>,
    pub eigenvalue: f64,
    pub factors: Vec<AnalyticEigenpair>,
}

impl MultiIndexEigenpair {
    pub fn eval(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.factors.len() {
            return Err(Error::Input(format!(
                "point has dimension {}, eigenfunction has {}",
                x.len(),
                self.factors.len()
            )));
        }
        Ok(self
            .factors
            .iter()
            .zip(x)
            .map(|(f, &xi)| f.eval(xi))
            .product())
    }
}

struct Candidate {
    value: f64,
    indices: Vec<usize>,
}

impl PartialEq for Candidate {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Candidate {}
impl PartialOrd for Candidate {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Candidate {
    fn cmp(&self, other: &Self) -> Ordering {
        // Max-heap priority: larger eigenvalue first; on ties the
        // lexicographically smaller multi-index wins.
        self.value
            .partial_cmp(&other.value)
            .expect("eigenvalues are finite")
            .then_with(|| other.indices.cmp(&self.indices))
    }
}

/// Top `count` product eigenpairs over an axis-aligned Gaussian, enumerated
/// by best-first lattice search (eigenvalues are non-increasing along every
/// coordinate, so the frontier always contains the next-largest entry).
/// Ties are reported in lexicographically ascending index order.
pub fn multivariate_spectrum(
    mus: &[f64],
    sigmas: &[f64],
    omega: f64,
    count: usize,
) -> Result<Vec<MultiIndexEigenpair>> {
    if mus.is_empty() || mus.len() != sigmas.len() {
        return Err(Error::Input(format!(
            "means and sigmas must be nonempty and equal length, got {} and {}",
            mus.len(),
            sigmas.len()
        )));
    }
    if count == 0 {
        return Err(Error::Input("count must be at least 1".into()));
    }
    let dim = mus.len();
    let pair = |k: usize, idx: usize| analytic_eigenfunction(idx, mus[k], sigmas[k], omega);
    let value_of = |indices: &[usize]| -> Result<f64> {
        let mut v = 1.0;
        for (k, &idx) in indices.iter().enumerate() {
            let beta = 2.0 * sigmas[k] * sigmas[k] / (omega * omega);
            v *= analytic_eigenvalue(idx, beta)?;
        }
        Ok(v)
    };

    let mut heap = BinaryHeap::new();
    let mut seen = BTreeSet::new();
    let origin = vec![0usize; dim];
    heap.push(Candidate {
        value: value_of(&origin)?,
        indices: origin.clone(),
    });
    seen.insert(origin);

    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let Some(top) = heap.pop() else { break };
        let mut factors = Vec::with_capacity(dim);
        for (k, &idx) in top.indices.iter().enumerate() {
            factors.push(pair(k, idx)?);
        }
        for k in 0..dim {
            let mut next = top.indices.clone();
            next[k] += 1;
            if next[k] <= MAX_INDEX && !seen.contains(&next) {
                heap.push(Candidate {
                    value: value_of(&next)?,
                    indices: next.clone(),
                });
                seen.insert(next);
            }
        }
        out.push(MultiIndexEigenpair {
            indices: top.indices,
            eigenvalue: top.value,
            factors,
        });
    }
    Ok(out)
}
