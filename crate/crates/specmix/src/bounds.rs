//! Certified enclosure of the second eigenvalue of the mixture operator.
//!
//! Every constant entering the interval has two independent routes: a closed
//! form implemented here, and a quadrature oracle (`quadrature_oracle`) that
//! integrates the defining expression numerically. The tests keep the two
//! routes pinned together; the pipeline itself uses only the closed forms
//! plus one cheap one-dimensional quadrature.

use crate::analytic::{analytic_eigenfunction, analytic_eigenvalue};
use crate::error::{Error, Result};
use crate::kernel::{KernelConfig, KernelVariant};
use crate::mixture::{GaussianComponent, MixtureModel};
use crate::quad::GaussLegendre;
use crate::spectra::nystrom_spectrum;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::f64::consts::{PI, SQRT_2};

fn ser_f64<S: Serializer>(v: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    if v.is_finite() {
        s.serialize_f64(*v)
    } else if v.is_nan() {
        s.serialize_str("NaN")
    } else if *v > 0.0 {
        s.serialize_str("Infinity")
    } else {
        s.serialize_str("-Infinity")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Interval {
    #[serde(serialize_with = "ser_f64")]
    pub lower: f64,
    #[serde(serialize_with = "ser_f64")]
    pub upper: f64,
}

impl Interval {
    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lower <= x && x <= self.upper
    }
}

/// Two-component univariate Gaussian mixture, ordered so `pi1 > pi2`, with
/// `omega` the operator-side kernel bandwidth.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoComponentMixture {
    pub pi1: f64,
    pub pi2: f64,
    pub mu1: f64,
    pub mu2: f64,
    pub sigma1: f64,
    pub sigma2: f64,
    pub omega: f64,
}

fn gauss_density(x: f64, mu: f64, sigma: f64) -> f64 {
    let z = (x - mu) / sigma;
    (-0.5 * z * z).exp() / (sigma * (2.0 * PI).sqrt())
}

impl TwoComponentMixture {
    pub fn new(
        pi1: f64,
        pi2: f64,
        mu1: f64,
        mu2: f64,
        sigma1: f64,
        sigma2: f64,
        omega: f64,
    ) -> Result<Self> {
        for (name, v) in [
            ("pi1", pi1),
            ("pi2", pi2),
            ("mu1", mu1),
            ("mu2", mu2),
            ("sigma1", sigma1),
            ("sigma2", sigma2),
            ("omega", omega),
        ] {
            if !v.is_finite() {
                return Err(Error::Input(format!("{name} must be finite, got {v}")));
            }
        }
        if (pi1 + pi2 - 1.0).abs() > 1e-12 {
            return Err(Error::Input(format!(
                "weights must sum to 1, got {pi1} + {pi2}"
            )));
        }
        if pi2 < 0.0 {
            return Err(Error::Input(format!("pi2 must be >= 0, got {pi2}")));
        }
        if !(pi1 > pi2) {
            return Err(Error::Input(format!(
                "the first component must carry strictly more weight ({pi1} vs {pi2})"
            )));
        }
        if !(sigma1 > 0.0) || !(sigma2 > 0.0) {
            return Err(Error::Input("sigmas must be > 0".into()));
        }
        if !(omega > 0.0) {
            return Err(Error::Input(format!("omega must be > 0, got {omega}")));
        }
        Ok(Self {
            pi1,
            pi2,
            mu1,
            mu2,
            sigma1,
            sigma2,
            omega,
        })
    }

    /// Adopt a two-component model, ordering components by weight and
    /// bridging the kernel config's bandwidth to the operator side.
    pub fn from_model(model: &MixtureModel, config: &KernelConfig) -> Result<Self> {
        if model.dim() != 1 {
            return Err(Error::Input(
                "eigenvalue bounds are defined for univariate mixtures".into(),
            ));
        }
        if model.n_components() != 2 {
            return Err(Error::Input(format!(
                "eigenvalue bounds need exactly two components, got {}",
                model.n_components()
            )));
        }
        config.validate(1)?;
        if config.variant != KernelVariant::Standard {
            return Err(Error::Config(
                "eigenvalue bounds are defined for the standard kernel variant".into(),
            ));
        }
        let w = model.weights();
        let comps = model.components();
        let (big, small) = if w[0] > w[1] {
            (0, 1)
        } else if w[1] > w[0] {
            (1, 0)
        } else {
            return Err(Error::Input(
                "components must have distinct weights so the dominant one is unambiguous".into(),
            ));
        };
        Self::new(
            w[big],
            w[small],
            comps[big].mu[0],
            comps[small].mu[0],
            comps[big].sigma[0],
            comps[small].sigma[0],
            config.operator_bandwidth(),
        )
    }

    fn beta1(&self) -> f64 {
        2.0 * self.sigma1 * self.sigma1 / (self.omega * self.omega)
    }

    fn beta2(&self) -> f64 {
        2.0 * self.sigma2 * self.sigma2 / (self.omega * self.omega)
    }

    pub fn mixture_density(&self, x: f64) -> f64 {
        self.pi1 * gauss_density(x, self.mu1, self.sigma1)
            + self.pi2 * gauss_density(x, self.mu2, self.sigma2)
    }

    fn union_box(&self) -> (f64, f64) {
        let s = self.sigma1.max(self.sigma2);
        (
            self.mu1.min(self.mu2) - 12.0 * s,
            self.mu1.max(self.mu2) + 12.0 * s,
        )
    }

    fn length_scale(&self) -> f64 {
        self.sigma1.min(self.sigma2).min(self.omega)
    }

    /// Interaction radius between the components:
    /// r^2 = pi1 pi2 * integral of k(x, y)^2 dP1(x) dP2(y)
    /// for the squared-exponential k(x, y) = exp(-(x - y)^2 / omega^2).
    pub fn interaction_radius(&self) -> f64 {
        let den = 4.0 * self.sigma1 * self.sigma1 + 4.0 * self.sigma2 * self.sigma2
            + self.omega * self.omega;
        let dm = self.mu1 - self.mu2;
        let r2 =
            self.pi1 * self.pi2 * (self.omega / den.sqrt()) * (-2.0 * dm * dm / den).exp();
        r2.sqrt()
    }

    /// Squared operator norm of the kernel restricted to P2 x P:
    /// integral of k(x, y)^2 dP2(x) dP(y), same kernel as the interaction
    /// radius.
    pub fn norm_k_p2xp_squared(&self) -> f64 {
        let w2 = self.omega * self.omega;
        let d1 = 4.0 * self.sigma1 * self.sigma1 + 4.0 * self.sigma2 * self.sigma2 + w2;
        let d2 = 8.0 * self.sigma2 * self.sigma2 + w2;
        let dm = self.mu1 - self.mu2;
        self.pi1 * (self.omega / d1.sqrt()) * (-2.0 * dm * dm / d1).exp()
            + self.pi2 * (self.omega / d2.sqrt())
    }

    /// Operator norm of the kernel restricted to P1 x P1.
    pub fn norm_k_p1xp1(&self) -> f64 {
        let w2 = self.omega * self.omega;
        (self.omega / (8.0 * self.sigma1 * self.sigma1 + w2).sqrt()).sqrt()
    }

    /// Squared P2-norm of the first component's second eigenfunction.
    pub fn phi11_norm_p2_squared(&self) -> f64 {
        let q = 1.0 + 2.0 * self.beta1();
        let s1 = self.sigma1;
        let s2 = self.sigma2;
        let a1 = (q.sqrt() - 1.0) / (2.0 * s1 * s1);
        let a3 = 1.0 / (2.0 * s2 * s2);
        let a = a1 + a3;
        let b = (a1 * self.mu1 + a3 * self.mu2) / a;
        let c = -b * b + (a1 * self.mu1 * self.mu1 + a3 * self.mu2 * self.mu2) / a;
        let big_r = a * s1 * s1 / q.sqrt();
        let xt = q.powf(0.25) * (b - self.mu1) / s1;
        s1 * (-a * c).exp() * PI.sqrt() * (2.0 * big_r * xt * xt + 1.0)
            / (2.0 * big_r.powf(1.5) * (2.0 * PI).sqrt() * s2)
    }

    fn f01_parts(&self) -> (f64, f64, f64, f64) {
        let q = 1.0 + 2.0 * self.beta1();
        let b2 = (q.sqrt() - 1.0) / (4.0 * self.sigma1 * self.sigma1);
        let b5 = 1.0 / (2.0 * self.sigma2 * self.sigma2);
        let u = 2.0 * b2 + b5;
        let v = (2.0 * b2 * self.mu1 + b5 * self.mu2) / u;
        let w = -v * v + (2.0 * b2 * self.mu1 * self.mu1 + b5 * self.mu2 * self.mu2) / u;
        (q, u, v, w)
    }

    /// Squared P2-norm of the first component's leading eigenfunction.
    pub fn phi01_norm_p2_squared(&self) -> f64 {
        let (q, u, v, w) = self.f01_parts();
        let _ = v;
        let b5 = 1.0 / (2.0 * self.sigma2 * self.sigma2);
        q.powf(0.25) * (b5 / u).sqrt() * (-u * w).exp()
    }

    /// Signed mixed term `lambda0 pi2 <phi11, phi01>_{P2}`.
    pub fn cross_term(&self, lambda0: f64) -> f64 {
        let (q, u, v, w) = self.f01_parts();
        lambda0 * self.pi2 * q.sqrt() * (v - self.mu1) * (-u * w).exp()
            / (SQRT_2 * self.sigma1 * self.sigma2 * u.sqrt())
    }
}

fn panels_for(len: f64, scale: f64) -> usize {
    ((len / scale).ceil() as usize).clamp(8, 512)
}

/// Quantities whose closed forms have an independent quadrature route.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleQuantity {
    /// pi1 pi2 * double integral of k^2 over P1 x P2.
    RSquared,
    /// Double integral of k^2 over P2 x P.
    NormKP2xPSquared,
    /// Integral of phi11^2 dP2.
    NormPhi11P2Squared,
    /// Integral of phi01^2 dP2.
    NormPhi01P2Squared,
    /// lambda0 pi2 * integral of phi11 phi01 dP2 (signed; needs `aux` = lambda0).
    CrossTerm,
    /// Integral over P of (pi2 * integral of k(., y) phi01(y) dP2(y))^2,
    /// with the operator-bandwidth kernel.
    EpsilonSquared,
    /// Integral of phi11 (phi01 - phi0) dP, with phi0 the mixture operator's
    /// leading eigenfunction (grid-extended, sign-aligned to phi01).
    E,
    /// Integral of phi11^2 dP.
    NormPhi11PSquared,
    /// Integral of phi01^2 dP.
    NormPhi01PSquared,
}

/// Numerical route for the closed forms above. `aux` carries lambda0 for the
/// cross term and is rejected elsewhere.
pub fn quadrature_oracle(
    quantity: OracleQuantity,
    mix: &TwoComponentMixture,
    aux: Option<f64>,
) -> Result<f64> {
    if aux.is_some() && quantity != OracleQuantity::CrossTerm {
        return Err(Error::Input(
            "only the cross term takes an auxiliary value".into(),
        ));
    }
    let rule = GaussLegendre::new(24);
    let (lo, hi) = mix.union_box();
    let panels = panels_for(hi - lo, mix.length_scale());
    let phi0 = analytic_eigenfunction(0, mix.mu1, mix.sigma1, mix.omega)?;
    let phi1 = analytic_eigenfunction(1, mix.mu1, mix.sigma1, mix.omega)?;
    let p1d = |x: f64| gauss_density(x, mix.mu1, mix.sigma1);
    let p2d = |x: f64| gauss_density(x, mix.mu2, mix.sigma2);
    let pmix = |x: f64| mix.mixture_density(x);
    let w2 = mix.omega * mix.omega;
    // Squared-exponential kernel entering the operator-norm integrals.
    let ka2 = move |x: f64, y: f64| (-2.0 * (x - y) * (x - y) / w2).exp();
    // Operator-bandwidth kernel.
    let ko = move |x: f64, y: f64| (-(x - y) * (x - y) / (2.0 * w2)).exp();

    let value = match quantity {
        OracleQuantity::RSquared => {
            mix.pi1
                * mix.pi2
                * rule.integrate_panels(
                    &|x: f64| {
                        p1d(x) * rule.integrate_panels(&|y: f64| ka2(x, y) * p2d(y), lo, hi, panels)
                    },
                    lo,
                    hi,
                    panels,
                )
        }
        OracleQuantity::NormKP2xPSquared => rule.integrate_panels(
            &|x: f64| p2d(x) * rule.integrate_panels(&|y: f64| ka2(x, y) * pmix(y), lo, hi, panels),
            lo,
            hi,
            panels,
        ),
        OracleQuantity::NormPhi11P2Squared => rule.integrate_panels(
            &|y: f64| {
                let p = phi1.eval(y);
                p * p * p2d(y)
            },
            lo,
            hi,
            panels,
        ),
        OracleQuantity::NormPhi01P2Squared => rule.integrate_panels(
            &|y: f64| {
                let p = phi0.eval(y);
                p * p * p2d(y)
            },
            lo,
            hi,
            panels,
        ),
        OracleQuantity::CrossTerm => {
            let lambda0 = aux.ok_or_else(|| {
                Error::Input("the cross term needs lambda0 as its auxiliary value".into())
            })?;
            lambda0
                * mix.pi2
                * rule.integrate_panels(&|y: f64| phi1.eval(y) * phi0.eval(y) * p2d(y), lo, hi, panels)
        }
        OracleQuantity::EpsilonSquared => {
            let g = |y: f64| {
                mix.pi2
                    * rule.integrate_panels(&|x: f64| ko(y, x) * phi0.eval(x) * p2d(x), lo, hi, panels)
            };
            rule.integrate_panels(
                &|y: f64| {
                    let gy = g(y);
                    gy * gy * pmix(y)
                },
                lo,
                hi,
                panels,
            )
        }
        OracleQuantity::E => {
            let model = MixtureModel::new(
                vec![
                    GaussianComponent::univariate(mix.mu1, mix.sigma1)?,
                    GaussianComponent::univariate(mix.mu2, mix.sigma2)?,
                ],
                vec![mix.pi1, mix.pi2],
            )?;
            let spectrum = nystrom_spectrum(&model, &KernelConfig::standard(mix.omega), 384)?;
            let align = rule.integrate_panels(
                &|x: f64| {
                    phi0.eval(x) * spectrum.eigenfunction_value(0, x).unwrap_or(0.0) * pmix(x)
                },
                lo,
                hi,
                panels,
            );
            let sign = if align < 0.0 { -1.0 } else { 1.0 };
            rule.integrate_panels(
                &|x: f64| {
                    let top = sign * spectrum.eigenfunction_value(0, x).unwrap_or(0.0);
                    phi1.eval(x) * (phi0.eval(x) - top) * pmix(x)
                },
                lo,
                hi,
                panels,
            )
        }
        OracleQuantity::NormPhi11PSquared => rule.integrate_panels(
            &|x: f64| {
                let p = phi1.eval(x);
                p * p * pmix(x)
            },
            lo,
            hi,
            panels,
        ),
        OracleQuantity::NormPhi01PSquared => rule.integrate_panels(
            &|x: f64| {
                let p = phi0.eval(x);
                p * p * pmix(x)
            },
            lo,
            hi,
            panels,
        ),
    };
    Ok(value)
}

/// Relative (or, for values below 1e-8, absolute) disagreement between each
/// closed form and its quadrature oracle.
pub fn closed_form_oracle_residuals(
    mix: &TwoComponentMixture,
    lambda0: f64,
) -> Result<BTreeMap<String, f64>> {
    let residual = |closed: f64, oracle: f64| {
        if closed.abs() > 1e-8 {
            (closed - oracle).abs() / closed.abs()
        } else {
            (closed - oracle).abs()
        }
    };
    let r = mix.interaction_radius();
    let mut out = BTreeMap::new();
    out.insert(
        "r_squared".to_string(),
        residual(r * r, quadrature_oracle(OracleQuantity::RSquared, mix, None)?),
    );
    out.insert(
        "norm_k_p2xp_squared".to_string(),
        residual(
            mix.norm_k_p2xp_squared(),
            quadrature_oracle(OracleQuantity::NormKP2xPSquared, mix, None)?,
        ),
    );
    out.insert(
        "phi11_norm_p2_squared".to_string(),
        residual(
            mix.phi11_norm_p2_squared(),
            quadrature_oracle(OracleQuantity::NormPhi11P2Squared, mix, None)?,
        ),
    );
    out.insert(
        "phi01_norm_p2_squared".to_string(),
        residual(
            mix.phi01_norm_p2_squared(),
            quadrature_oracle(OracleQuantity::NormPhi01P2Squared, mix, None)?,
        ),
    );
    out.insert(
        "cross_term".to_string(),
        residual(
            mix.cross_term(lambda0),
            quadrature_oracle(OracleQuantity::CrossTerm, mix, Some(lambda0))?,
        ),
    );
    Ok(out)
}

/// Everything the interval pipeline computes, in evaluation order.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    #[serde(serialize_with = "ser_f64")]
    pub pi1: f64,
    #[serde(serialize_with = "ser_f64")]
    pub pi2: f64,
    #[serde(serialize_with = "ser_f64")]
    pub mu1: f64,
    #[serde(serialize_with = "ser_f64")]
    pub mu2: f64,
    #[serde(serialize_with = "ser_f64")]
    pub sigma1: f64,
    #[serde(serialize_with = "ser_f64")]
    pub sigma2: f64,
    #[serde(serialize_with = "ser_f64")]
    pub omega: f64,
    #[serde(serialize_with = "ser_f64")]
    pub r: f64,
    #[serde(serialize_with = "ser_f64")]
    pub norm_k_p2xp: f64,
    #[serde(serialize_with = "ser_f64")]
    pub norm_k_p1xp1: f64,
    #[serde(serialize_with = "ser_f64")]
    pub phi11_norm_p2_squared: f64,
    #[serde(serialize_with = "ser_f64")]
    pub phi01_norm_p2_squared: f64,
    #[serde(serialize_with = "ser_f64")]
    pub gamma0: f64,
    #[serde(serialize_with = "ser_f64")]
    pub gamma1: f64,
    #[serde(serialize_with = "ser_f64")]
    pub nu0: f64,
    /// Enclosure of the leading eigenvalue.
    pub sandwich: Interval,
    #[serde(serialize_with = "ser_f64")]
    pub lambda0_used: f64,
    #[serde(serialize_with = "ser_f64")]
    pub t: f64,
    #[serde(serialize_with = "ser_f64")]
    pub epsilon: f64,
    #[serde(serialize_with = "ser_f64")]
    pub delta_norm: f64,
    #[serde(serialize_with = "ser_f64")]
    pub e_abs: f64,
    #[serde(rename = "Delta", serialize_with = "ser_f64")]
    pub big_delta: f64,
    #[serde(rename = "A", serialize_with = "ser_f64")]
    pub big_a: f64,
    #[serde(serialize_with = "ser_f64")]
    pub lambda1_lower: f64,
    #[serde(serialize_with = "ser_f64")]
    pub lambda1_upper: f64,
    /// Looser alternative assembly of the upper bound, kept as a cross-check.
    #[serde(serialize_with = "ser_f64")]
    pub lambda1_upper_proof_form: f64,
    /// Enclosure of the second eigenvalue.
    pub interval: Interval,
    pub certified: bool,
    pub reasons: Vec<String>,
    pub oracle_residuals: BTreeMap<String, f64>,
}

/// Compute the certified enclosure of the mixture operator's second
/// eigenvalue. `t_override` replaces the spectral-gap threshold when the
/// caller has a sharper one.
pub fn second_eigenvalue_interval(
    mix: &TwoComponentMixture,
    t_override: Option<f64>,
) -> Result<BoundReport> {
    let p1 = mix.pi1;
    let p2 = mix.pi2;
    let gamma0 = analytic_eigenvalue(0, mix.beta1())?;
    let gamma1 = analytic_eigenvalue(1, mix.beta1())?;
    let nu0 = analytic_eigenvalue(0, mix.beta2())?;
    let r = mix.interaction_radius();
    let k2p = mix.norm_k_p2xp_squared().sqrt();
    let k11 = mix.norm_k_p1xp1();
    let f11 = mix.phi11_norm_p2_squared();
    let f01 = mix.phi01_norm_p2_squared();

    let lo = (p1 * gamma0).max(p2 * nu0);
    let sandwich = Interval {
        lower: lo,
        upper: lo + r,
    };
    let lambda0_used = 0.5 * (sandwich.lower + sandwich.upper);
    let t = t_override.unwrap_or(lo - (p1 * gamma1 + r));
    let epsilon = if p2 == 0.0 { 0.0 } else { p2 * k2p * f01.sqrt() };

    let mut reasons = Vec::new();
    if t <= epsilon {
        reasons.push(format!(
            "perturbation series diverges: t = {t} is not above epsilon = {epsilon}"
        ));
    }
    if r >= t {
        reasons.push(format!(
            "interaction radius r = {r} reaches the spectral gap t = {t}"
        ));
    }
    if epsilon + r >= t {
        reasons.push(format!(
            "combined perturbation epsilon + r = {} reaches t = {t}",
            epsilon + r
        ));
    }
    let certified = reasons.is_empty();

    // Delta only needs the closed forms, so it survives the uncertified path.
    let big_delta =
        (1.0 / p1 - 1.0) * (p1 + p2 * f01).sqrt() + (p2.sqrt() / p1) * f01.sqrt();

    let (delta_norm, e_abs, big_a, lambda1_lower, lambda1_upper, upper_proof, interval) =
        if t <= epsilon {
            (
                f64::INFINITY,
                f64::INFINITY,
                f64::INFINITY,
                f64::NEG_INFINITY,
                f64::INFINITY,
                f64::INFINITY,
                Interval {
                    lower: f64::NEG_INFINITY,
                    upper: f64::INFINITY,
                },
            )
        } else {
            let delta_norm = epsilon / (t - epsilon);
            let cross_integral = if p2 == 0.0 {
                0.0
            } else {
                let rule = GaussLegendre::new(24);
                let (blo, bhi) = mix.union_box();
                let panels = panels_for(bhi - blo, mix.length_scale());
                let phi0 = analytic_eigenfunction(0, mix.mu1, mix.sigma1, mix.omega)?;
                let phi1 = analytic_eigenfunction(1, mix.mu1, mix.sigma1, mix.omega)?;
                rule.integrate_panels(
                    &|y: f64| phi1.eval(y) * phi0.eval(y) * gauss_density(y, mix.mu2, mix.sigma2),
                    blo,
                    bhi,
                    panels,
                )
            };
            let e_abs = delta_norm * (p1 + p2 * f11).sqrt() + p2 * cross_integral.abs();
            let big_a = {
                let s = delta_norm + big_delta;
                s * s
            };

            let upper = p1 * p1 * gamma1 * (1.0 / p1 + 2.0 * big_a / p1.sqrt() + big_a)
                + 2.0 * p1 * p1 * k11 * (1.0 / p1.sqrt() + big_a) * big_a
                + p1 * p1 * k11 * big_a * big_a
                + r;
            let f = big_a.sqrt();
            let base = 1.0 / p1.sqrt() + f;
            let upper_proof = p1 * p1 * gamma1 * base * base
                + 2.0 * p1 * p1 * k11 * base * f
                + p1 * p1 * k11 * f * f
                + r;

            let phi11_p = (p1 + p2 * f11).sqrt();
            let cross = mix.cross_term(lambda0_used);
            let e2 = e_abs * e_abs;
            let num = p1 * p1 * gamma1 + gamma1 * p1 * p2 * f11
                - p2 * phi11_p * f11.sqrt() * k2p
                - 2.0 * e_abs * (lambda0_used * delta_norm * phi11_p + cross).abs()
                - e2 * lambda0_used;
            let d1 = p1
                + 2.0 * e_abs * p1 * delta_norm
                + e2
                + 2.0 * e2 * p1 * delta_norm
                + e2 * p1 * delta_norm * delta_norm;
            let d2 = p2 * f11
                + 2.0 * e_abs * p2 * delta_norm * f11.sqrt()
                + e2 * p2 * f01
                + 2.0 * e2 * p2 * delta_norm * f01.sqrt()
                + e2 * p2 * delta_norm * delta_norm;
            let lower = num / (d1 + d2);
            (
                delta_norm,
                e_abs,
                big_a,
                lower,
                upper,
                upper_proof,
                Interval { lower, upper },
            )
        };

    Ok(BoundReport {
        pi1: p1,
        pi2: p2,
        mu1: mix.mu1,
        mu2: mix.mu2,
        sigma1: mix.sigma1,
        sigma2: mix.sigma2,
        omega: mix.omega,
        r,
        norm_k_p2xp: k2p,
        norm_k_p1xp1: k11,
        phi11_norm_p2_squared: f11,
        phi01_norm_p2_squared: f01,
        gamma0,
        gamma1,
        nu0,
        sandwich,
        lambda0_used,
        t,
        epsilon,
        delta_norm,
        e_abs,
        big_delta,
        big_a,
        lambda1_lower,
        lambda1_upper,
        lambda1_upper_proof_form: upper_proof,
        interval,
        certified,
        reasons,
        oracle_residuals: BTreeMap::new(),
    })
}
