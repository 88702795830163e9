//! Per-hop and end-to-end SNR statistics for the dual-hop DF link.
//!
//! The end-to-end SNR is λ_e = min(λ₁, λ₂) with λ₁ the THz-hop and λ₂ the
//! RF-hop instantaneous SNR. With the composite THz envelope CDF written
//! through a Meijer-G and the Nakagami-m hop through an upper incomplete
//! gamma, the e2e CDF takes the product form
//!
//!   F(λ) = 1 − ℬ · G^{3,0}_{2,3}[μ(𝒜λ)^{α/2} | 1, φ/α+1; μ, 0, φ/α] · Γ(m, 𝒞λ)
//!
//! with 𝒜 = N₁/(P_s h_d1² h_a1² Ω² S₀²), 𝒞 = m N₂/(P_r h_d2² Ω_m) and
//! ℬ = φ/(α Γ(μ) Γ(m)). The MGF of λ_e is a bivariate Fox-H; its kernel and
//! the trivariate kernel used by the ASER closed forms are both assembled
//! here so every consumer shares one parameterization.

use crate::channel::{
    self, AbsorptionModel, AlphaMuFading, ChannelError, NakagamiFading, PointingError, PowerNoise,
    RfHopConfig, ThzHopConfig,
};
use crate::specfun::{
    fox_h_bivariate, fox_h_trivariate, gamma_upper_reg, ln_gamma, ln_gamma_sign, meijer_g_scaled,
    ContourConfig, CouplingGamma, FoxHSpec, FoxHVariable, MeijerGSpec, SpecFunError,
};
use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum LinkStatsError {
    #[error(transparent)]
    Channel(#[from] ChannelError),
    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("asymptotic form is singular: {0} (enable pole perturbation to proceed)")]
    PoleWarning(String),
    #[error("result failed its range check: {0}")]
    RangeViolation(String),
}

/// What to do when the asymptotic split degenerates (φ = αμ, or μ − φ/α a
/// non-positive integer). The exact expressions stay finite there; only the
/// asymptotic decomposition is singular.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PolePolicy {
    /// Refuse with [`LinkStatsError::PoleWarning`].
    #[default]
    Strict,
    /// Log a warning and perturb φ by 1e-6 relative.
    Perturb,
}

/// Immutable end-to-end SNR model with its derived constants.
///
/// Constants are computed once at construction; every `with_*` rebuilder
/// returns a fresh model with everything recomputed, so no cached value can
/// go stale.
#[derive(Debug, Clone)]
pub struct SnrModel {
    thz: ThzHopConfig,
    alpha_mu: AlphaMuFading,
    pointing: PointingError,
    rf: RfHopConfig,
    nakagami: NakagamiFading,
    power: PowerNoise,
    pole_policy: PolePolicy,
    contour: ContourConfig,
    // Resolved/derived quantities.
    kappa_alpha: f64,
    h_d1: f64,
    h_a1: f64,
    h_d2: f64,
    a_const: f64,
    c_const: f64,
    ln_b_const: f64,
}

impl SnrModel {
    /// Build a model, resolving the absorption coefficient from the config
    /// override or the supplied model.
    pub fn new(
        thz: ThzHopConfig,
        alpha_mu: AlphaMuFading,
        pointing: PointingError,
        rf: RfHopConfig,
        nakagami: NakagamiFading,
        power: PowerNoise,
        absorption: Option<&dyn AbsorptionModel>,
    ) -> Result<Self, LinkStatsError> {
        thz.validate()?;
        alpha_mu.validate()?;
        pointing.validate()?;
        rf.validate()?;
        nakagami.validate()?;
        power.validate()?;
        let kappa_alpha = channel::resolve_kappa(&thz, absorption)?;
        let mut model = Self {
            thz,
            alpha_mu,
            pointing,
            rf,
            nakagami,
            power,
            pole_policy: PolePolicy::default(),
            contour: ContourConfig::default(),
            kappa_alpha,
            h_d1: 0.0,
            h_a1: 0.0,
            h_d2: 0.0,
            a_const: 0.0,
            c_const: 0.0,
            ln_b_const: 0.0,
        };
        model.recompute()?;
        Ok(model)
    }

    fn recompute(&mut self) -> Result<(), LinkStatsError> {
        self.h_d1 = channel::friis_gain_thz(&self.thz)?;
        self.h_a1 = (-0.5 * self.kappa_alpha * self.thz.distance_m).exp();
        self.h_d2 = channel::friis_gain_rf(&self.rf)?;
        let (am, p, nk, pw) = (&self.alpha_mu, &self.pointing, &self.nakagami, &self.power);
        self.a_const = pw.n0
            / (pw.p_s * self.h_d1.powi(2) * self.h_a1.powi(2) * am.omega.powi(2) * p.s0.powi(2));
        self.c_const = nk.m * pw.n0 / (pw.p_r * self.h_d2.powi(2) * nk.omega_m);
        self.ln_b_const = (p.phi / am.alpha).ln() - ln_gamma(am.mu) - ln_gamma(nk.m);
        Ok(())
    }

    // -- Rebuilders ----------------------------------------------------------

    pub fn with_power(&self, power: PowerNoise) -> Result<Self, LinkStatsError> {
        power.validate()?;
        let mut m = self.clone();
        m.power = power;
        m.recompute()?;
        Ok(m)
    }

    /// Tie both transmit powers to one average transmit SNR λ̄₀ (dB).
    pub fn with_avg_snr_db(&self, snr_db: f64) -> Result<Self, LinkStatsError> {
        self.with_power(PowerNoise::from_avg_snr_db(snr_db, self.power.n0))
    }

    pub fn with_distances(&self, d_sr: f64, d_rd: f64) -> Result<Self, LinkStatsError> {
        let mut m = self.clone();
        m.thz.distance_m = d_sr;
        m.rf.distance_m = d_rd;
        m.thz.validate()?;
        m.rf.validate()?;
        m.recompute()?;
        Ok(m)
    }

    pub fn with_pole_policy(&self, policy: PolePolicy) -> Self {
        let mut m = self.clone();
        m.pole_policy = policy;
        m
    }

    pub fn with_contour(&self, contour: ContourConfig) -> Result<Self, LinkStatsError> {
        contour.validate()?;
        let mut m = self.clone();
        m.contour = contour;
        Ok(m)
    }

    // -- Accessors -----------------------------------------------------------

    pub fn thz(&self) -> &ThzHopConfig {
        &self.thz
    }
    pub fn rf(&self) -> &RfHopConfig {
        &self.rf
    }
    pub fn alpha_mu(&self) -> &AlphaMuFading {
        &self.alpha_mu
    }
    pub fn pointing(&self) -> &PointingError {
        &self.pointing
    }
    pub fn nakagami(&self) -> &NakagamiFading {
        &self.nakagami
    }
    pub fn power(&self) -> &PowerNoise {
        &self.power
    }
    pub fn contour(&self) -> &ContourConfig {
        &self.contour
    }
    pub fn kappa_alpha(&self) -> f64 {
        self.kappa_alpha
    }
    /// Deterministic amplitude gains (h_d1, h_a1, h_d2).
    pub fn gains(&self) -> (f64, f64, f64) {
        (self.h_d1, self.h_a1, self.h_d2)
    }
    /// 𝒜 = N₁/(P_s h_d1² h_a1² Ω² S₀²).
    pub fn a_const(&self) -> f64 {
        self.a_const
    }
    /// ℬ = φ/(α Γ(μ) Γ(m)).
    pub fn b_const(&self) -> f64 {
        self.ln_b_const.exp()
    }
    /// 𝒞 = m N₂/(P_r h_d2² Ω_m).
    pub fn c_const(&self) -> f64 {
        self.c_const
    }

    /// ℛ = φ μ^μ 𝒜^{αμ/2}/((φ−αμ) Γ(μ+1)), singular at φ = αμ.
    pub fn r_const(&self) -> Result<f64, LinkStatsError> {
        let (alpha, mu) = (self.alpha_mu.alpha, self.alpha_mu.mu);
        let phi = self.effective_phi()?;
        Ok(phi * mu.powf(mu) * self.a_const.powf(alpha * mu / 2.0)
            / ((phi - alpha * mu) * ln_gamma(mu + 1.0).exp()))
    }

    /// 𝒯 = μ^{φ/α} Γ(μ−φ/α) 𝒜^{φ/2}/Γ(μ), singular when μ−φ/α is a
    /// non-positive integer.
    pub fn t_const(&self) -> Result<f64, LinkStatsError> {
        let (alpha, mu) = (self.alpha_mu.alpha, self.alpha_mu.mu);
        let phi = self.effective_phi()?;
        let (ln_g, sign) = ln_gamma_sign(mu - phi / alpha);
        Ok(sign
            * ((phi / alpha) * mu.ln() + ln_g + (phi / 2.0) * self.a_const.ln() - ln_gamma(mu))
                .exp())
    }

    /// φ adjusted by the pole policy for the asymptotic decomposition.
    fn effective_phi(&self) -> Result<f64, LinkStatsError> {
        let (alpha, mu, phi) = (self.alpha_mu.alpha, self.alpha_mu.mu, self.pointing.phi);
        let gap = mu - phi / alpha;
        let degenerate = (phi - alpha * mu).abs() <= 1e-9 * (alpha * mu)
            || ((gap - gap.round()).abs() <= 1e-9 && gap.round() <= 0.0);
        if !degenerate {
            return Ok(phi);
        }
        match self.pole_policy {
            PolePolicy::Strict => Err(LinkStatsError::PoleWarning(format!(
                "phi = {phi}, alpha*mu = {}: asymptotic split has a pole",
                alpha * mu
            ))),
            PolePolicy::Perturb => {
                log::warn!(
                    "asymptotic pole at phi = {phi} (alpha*mu = {}); perturbing phi by 1e-6 relative",
                    alpha * mu
                );
                Ok(phi * (1.0 + 1e-6))
            }
        }
    }

    // -- CDFs ------------------------------------------------------------------

    /// Meijer-G parameter set shared by the THz SNR CDF terms.
    pub fn thz_meijer_spec(&self) -> MeijerGSpec {
        channel::composite_cdf_spec(&self.alpha_mu, &self.pointing)
    }

    /// Complementary THz factor (φ/α)/Γ(μ)·G[μ(𝒜λ)^{α/2}] = 1 − F_{λ₁}(λ).
    fn thz_ccdf(&self, lambda: f64) -> Result<f64, LinkStatsError> {
        let arg = self.alpha_mu.mu * (self.a_const * lambda).powf(self.alpha_mu.alpha / 2.0);
        let log_scale = (self.pointing.phi / self.alpha_mu.alpha).ln() - ln_gamma(self.alpha_mu.mu);
        Ok(meijer_g_scaled(
            &self.thz_meijer_spec(),
            arg,
            &self.contour,
            log_scale,
        )?)
    }

    /// CDF of the THz-hop instantaneous SNR λ₁.
    pub fn snr_cdf_thz(&self, lambda: f64) -> Result<f64, LinkStatsError> {
        non_negative(lambda)?;
        if lambda == 0.0 {
            return Ok(0.0);
        }
        Ok((1.0 - self.thz_ccdf(lambda)?).clamp(0.0, 1.0))
    }

    /// CDF of the RF-hop instantaneous SNR λ₂: 1 − Γ(m, 𝒞λ)/Γ(m).
    pub fn snr_cdf_rf(&self, lambda: f64) -> Result<f64, LinkStatsError> {
        non_negative(lambda)?;
        if lambda == 0.0 {
            return Ok(0.0);
        }
        Ok(1.0 - gamma_upper_reg(self.nakagami.m, self.c_const * lambda)?)
    }

    /// End-to-end CDF in the closed product form
    /// F(λ) = 1 − ℬ·G[μ(𝒜λ)^{α/2}]·Γ(m, 𝒞λ).
    pub fn snr_cdf_e2e(&self, lambda: f64) -> Result<f64, LinkStatsError> {
        non_negative(lambda)?;
        if lambda == 0.0 {
            return Ok(0.0);
        }
        let thz_tail = self.thz_ccdf(lambda)?;
        let rf_tail = gamma_upper_reg(self.nakagami.m, self.c_const * lambda)?;
        Ok((1.0 - thz_tail * rf_tail).clamp(0.0, 1.0))
    }

    /// The min-combination form F₁ + F₂ − F₁F₂; algebraically identical to
    /// [`Self::snr_cdf_e2e`] and kept callable as its cross-check.
    pub fn snr_cdf_e2e_combination(&self, lambda: f64) -> Result<f64, LinkStatsError> {
        let f1 = self.snr_cdf_thz(lambda)?;
        let f2 = self.snr_cdf_rf(lambda)?;
        Ok(f1 + f2 - f1 * f2)
    }

    // -- Fox-H assembly ---------------------------------------------------------

    /// Variable block of the THz Meijer-G factor inside the Fox-H kernels.
    fn foxh_thz_block(&self, argument: f64) -> FoxHVariable {
        let c = self.pointing.phi / self.alpha_mu.alpha;
        FoxHVariable {
            argument,
            num_lower: vec![(self.alpha_mu.mu, 1.0), (0.0, 1.0), (c, 1.0)],
            num_upper: vec![],
            den_upper: vec![(1.0, 1.0), (c + 1.0, 1.0)],
            den_lower: vec![],
        }
    }

    /// Variable block of the Γ(m, ·) factor inside the Fox-H kernels.
    fn foxh_rf_block(&self, argument: f64) -> FoxHVariable {
        FoxHVariable {
            argument,
            num_lower: vec![(self.nakagami.m, 1.0), (0.0, 1.0)],
            num_upper: vec![],
            den_upper: vec![(1.0, 1.0)],
            den_lower: vec![],
        }
    }

    /// Variable block of the damped-Kummer factor e^{−z}₁F₁(1;3/2;z) (as the
    /// Mellin kernel Γ(r)Γ(1/2−r)/Γ(3/2−r), which carries a factor 2).
    fn foxh_kummer_block(&self, argument: f64) -> FoxHVariable {
        FoxHVariable {
            argument,
            num_lower: vec![(0.0, 1.0)],
            num_upper: vec![(0.5, 1.0)],
            den_upper: vec![],
            den_lower: vec![(-0.5, 1.0)],
        }
    }

    /// ℬ·H[z₁, z₂] for the bivariate kernel family: coupling
    /// Γ(1 − a − (α/2)s − t) with the THz block on s and the RF block on t.
    /// `coupling_offset` is −χ₁ in the integral-solution notation (0 for the
    /// MGF, 1/2 for the half-order ASER terms).
    pub fn foxh_b_h2(&self, coupling_offset: f64, z1: f64, z2: f64) -> Result<f64, LinkStatsError> {
        let spec = FoxHSpec::new(
            CouplingGamma {
                offset: coupling_offset,
                weights: vec![self.alpha_mu.alpha / 2.0, 1.0],
            },
            vec![self.foxh_thz_block(z1), self.foxh_rf_block(z2)],
            self.contour.clone(),
        )?
        .with_log_prefactor(self.ln_b_const);
        Ok(fox_h_bivariate(&spec)?)
    }

    /// ℬ·H[z₁, z₂, z₃] for the trivariate kernel: damped-Kummer block on r,
    /// THz block on s, RF block on t, coupling Γ(1 − r − (α/2)s − t).
    pub fn foxh_b_h3(&self, z1: f64, z2: f64, z3: f64) -> Result<f64, LinkStatsError> {
        let spec = FoxHSpec::new(
            CouplingGamma {
                offset: 0.0,
                weights: vec![1.0, self.alpha_mu.alpha / 2.0, 1.0],
            },
            vec![
                self.foxh_kummer_block(z1),
                self.foxh_thz_block(z2),
                self.foxh_rf_block(z3),
            ],
            self.contour.clone(),
        )?
        .with_log_prefactor(self.ln_b_const);
        Ok(fox_h_trivariate(&spec)?)
    }

    /// Fox-H arguments (z₁, z₂) of the MGF at Laplace variable s:
    /// z₁ = μ(𝒜/s)^{α/2}, z₂ = 𝒞/s.
    pub fn mgf_foxh_arguments(&self, s: f64) -> (f64, f64) {
        (
            self.alpha_mu.mu * (self.a_const / s).powf(self.alpha_mu.alpha / 2.0),
            self.c_const / s,
        )
    }

    /// MGF of the end-to-end SNR, ℳ(s) = E[e^{−sλ_e}] = 1 − ℬ·H[μ(𝒜/s)^{α/2}, 𝒞/s].
    pub fn mgf_e2e(&self, s: f64) -> Result<f64, LinkStatsError> {
        if !(s > 0.0) {
            return Err(LinkStatsError::InvalidInput(format!(
                "MGF requires s > 0, got {s}"
            )));
        }
        let (z1, z2) = self.mgf_foxh_arguments(s);
        let value = 1.0 - self.foxh_b_h2(0.0, z1, z2)?;
        if !(-1e-6..=1.0 + 1e-6).contains(&value) {
            return Err(LinkStatsError::RangeViolation(format!(
                "MGF({s}) = {value} outside [0, 1]"
            )));
        }
        Ok(value.clamp(0.0, 1.0))
    }

    // -- Asymptotics -------------------------------------------------------------

    /// High-SNR (λ̄₀ → ∞) three-term approximation of the e2e CDF:
    /// ℛ·λ^{αμ/2} + 𝒯·λ^{φ/2} + (𝒞λ)^m/Γ(m+1).
    pub fn snr_cdf_asymptotic(&self, lambda: f64) -> Result<f64, LinkStatsError> {
        non_negative(lambda)?;
        if lambda == 0.0 {
            return Ok(0.0);
        }
        let (alpha, mu) = (self.alpha_mu.alpha, self.alpha_mu.mu);
        let phi = self.effective_phi()?;
        let m = self.nakagami.m;
        Ok(self.r_const()? * lambda.powf(alpha * mu / 2.0)
            + self.t_const()? * lambda.powf(phi / 2.0)
            + (m * (self.c_const * lambda).ln() - ln_gamma(m + 1.0)).exp())
    }

    /// Diversity order min(αμ/2, φ/2, m).
    pub fn diversity_order(&self) -> f64 {
        (self.alpha_mu.alpha * self.alpha_mu.mu / 2.0)
            .min(self.pointing.phi / 2.0)
            .min(self.nakagami.m)
    }
}

fn non_negative(lambda: f64) -> Result<(), LinkStatsError> {
    if lambda >= 0.0 {
        Ok(())
    } else {
        Err(LinkStatsError::InvalidInput(format!(
            "SNR argument must be >= 0, got {lambda}"
        )))
    }
}

#[cfg(test)]
mod tests;
