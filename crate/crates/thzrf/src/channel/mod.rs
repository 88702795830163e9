//! Per-hop channel model: deterministic link-budget gains and the fading
//! distributions of both hops, including the composite THz envelope
//! (multipath × pointing error) CDF/PDF.

mod absorption;

pub use absorption::{AbsorptionModel, WindowAbsorptionModel};

use crate::specfun::{
    self, gamma_upper_ext, gamma_upper_reg, ln_gamma, meijer_g_scaled, ContourConfig, MeijerGSpec,
    SpecFunError,
};
use thiserror::Error;

/// Speed of light in vacuum, m/s.
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

#[derive(Debug, Clone, Error)]
pub enum ChannelError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("no absorption coefficient available: {0}")]
    AbsorptionUnavailable(String),
    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
}

fn require(cond: bool, what: &str) -> Result<(), ChannelError> {
    if cond {
        Ok(())
    } else {
        Err(ChannelError::InvalidConfig(what.to_string()))
    }
}

/// Deterministic THz-hop link budget inputs.
#[derive(Debug, Clone, PartialEq)]
pub struct ThzHopConfig {
    /// Carrier frequency f_sr, Hz.
    pub carrier_hz: f64,
    /// Source-relay distance d_sr, m.
    pub distance_m: f64,
    /// Transmit antenna gain, dBi.
    pub tx_gain_db: f64,
    /// Receive antenna gain, dBi.
    pub rx_gain_db: f64,
    /// Path-loss exponent η₁ (2 in free space).
    pub path_loss_exp: f64,
    /// Absolute temperature, K.
    pub temperature_k: f64,
    /// Atmospheric pressure, hPa.
    pub pressure_hpa: f64,
    /// Relative humidity, percent.
    pub rel_humidity_pct: f64,
    /// Absorption coefficient κ_α override, 1/m. When absent the pluggable
    /// absorption model supplies κ_α from (f, T, P, ψ).
    pub absorption_override: Option<f64>,
}

impl ThzHopConfig {
    pub fn validate(&self) -> Result<(), ChannelError> {
        require(self.carrier_hz > 0.0, "carrier_hz must be > 0")?;
        require(self.distance_m > 0.0, "distance_m must be > 0")?;
        require(self.path_loss_exp >= 2.0, "path_loss_exp must be >= 2")?;
        require(
            (0.0..=100.0).contains(&self.rel_humidity_pct),
            "rel_humidity_pct must lie in [0, 100]",
        )?;
        if let Some(k) = self.absorption_override {
            require(k >= 0.0, "absorption_override must be >= 0")?;
        }
        Ok(())
    }
}

/// Deterministic RF-hop link budget inputs.
#[derive(Debug, Clone, PartialEq)]
pub struct RfHopConfig {
    /// Carrier frequency f_rd, Hz.
    pub carrier_hz: f64,
    /// Relay-destination distance d_rd, m.
    pub distance_m: f64,
    pub tx_gain_db: f64,
    pub rx_gain_db: f64,
    /// Path-loss exponent; defaults to the THz hop's value upstream.
    pub path_loss_exp: f64,
}

impl RfHopConfig {
    pub fn validate(&self) -> Result<(), ChannelError> {
        require(self.carrier_hz > 0.0, "carrier_hz must be > 0")?;
        require(self.distance_m > 0.0, "distance_m must be > 0")?;
        Ok(())
    }
}

/// Alpha-mu multipath fading parameters (THz hop).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaMuFading {
    /// Nonlinearity parameter α > 0.
    pub alpha: f64,
    /// Clustering parameter μ ≥ 1/2.
    pub mu: f64,
    /// α-root mean value Ω > 0 (E[h^α] = Ω^α).
    pub omega: f64,
}

impl AlphaMuFading {
    pub fn validate(&self) -> Result<(), ChannelError> {
        require(self.alpha > 0.0, "alpha must be > 0")?;
        require(self.mu >= 0.5, "mu must be >= 1/2")?;
        require(self.omega > 0.0, "omega must be > 0")?;
        Ok(())
    }
}

/// Antenna-misalignment (pointing error) fading parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointingError {
    /// Beam-width to jitter ratio φ > 0.
    pub phi: f64,
    /// Maximum collected power fraction S₀ ∈ (0, 1].
    pub s0: f64,
}

impl PointingError {
    pub fn validate(&self) -> Result<(), ChannelError> {
        require(self.phi > 0.0, "phi must be > 0")?;
        require(self.s0 > 0.0 && self.s0 <= 1.0, "s0 must lie in (0, 1]")?;
        Ok(())
    }
}

/// Nakagami-m fading parameters (RF hop).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NakagamiFading {
    /// Shape m ≥ 1/2.
    pub m: f64,
    /// Spread Ω_m > 0 (E[h²] = Ω_m).
    pub omega_m: f64,
}

impl NakagamiFading {
    pub fn validate(&self) -> Result<(), ChannelError> {
        require(self.m >= 0.5, "m must be >= 1/2")?;
        require(self.omega_m > 0.0, "omega_m must be > 0")?;
        Ok(())
    }
}

/// Transmit powers and noise variance. N₁ = N₂ is assumed throughout the
/// end-to-end statistics; sweeps tie p_s = p_r to one average transmit SNR.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerNoise {
    /// Source power P_s, W.
    pub p_s: f64,
    /// Relay power P_r, W.
    pub p_r: f64,
    /// Noise variance N₁ = N₂.
    pub n0: f64,
}

impl PowerNoise {
    pub fn validate(&self) -> Result<(), ChannelError> {
        require(self.p_s > 0.0, "p_s must be > 0")?;
        require(self.p_r > 0.0, "p_r must be > 0")?;
        require(self.n0 > 0.0, "n0 must be > 0")?;
        Ok(())
    }

    /// Both powers tied to one average transmit SNR λ̄₀ = P/N (dB).
    pub fn from_avg_snr_db(snr_db: f64, n0: f64) -> Self {
        let p = n0 * 10f64.powf(snr_db / 10.0);
        Self { p_s: p, p_r: p, n0 }
    }

    pub fn avg_snr_db(&self) -> f64 {
        10.0 * (self.p_s / self.n0).log10()
    }
}

fn dbi_to_linear(g: f64) -> f64 {
    10f64.powf(g / 10.0)
}

enum HopView<'a> {
    Thz(&'a ThzHopConfig),
    Rf(&'a RfHopConfig),
}

fn friis_of(view: HopView<'_>) -> f64 {
    let (f, d, gt, gr, eta) = match view {
        HopView::Thz(c) => (
            c.carrier_hz,
            c.distance_m,
            c.tx_gain_db,
            c.rx_gain_db,
            c.path_loss_exp,
        ),
        HopView::Rf(c) => (
            c.carrier_hz,
            c.distance_m,
            c.tx_gain_db,
            c.rx_gain_db,
            c.path_loss_exp,
        ),
    };
    let gains = (dbi_to_linear(gt) * dbi_to_linear(gr)).sqrt();
    SPEED_OF_LIGHT * gains / (4.0 * std::f64::consts::PI * f) * d.powf(-0.5 * eta)
}

/// Free-space amplitude gain h_d = c·√(G_t G_r)/(4π f) · d^{−η₁/2} for the
/// THz hop.
pub fn friis_gain_thz(cfg: &ThzHopConfig) -> Result<f64, ChannelError> {
    cfg.validate()?;
    Ok(friis_of(HopView::Thz(cfg)))
}

/// Free-space amplitude gain for the RF hop.
pub fn friis_gain_rf(cfg: &RfHopConfig) -> Result<f64, ChannelError> {
    cfg.validate()?;
    Ok(friis_of(HopView::Rf(cfg)))
}

/// Molecular-absorption amplitude gain h_a = exp(−κ_α·d/2).
///
/// κ_α comes from the config override when present, otherwise from the
/// supplied absorption model; with neither, this is an error.
pub fn absorption_gain(
    cfg: &ThzHopConfig,
    model: Option<&dyn AbsorptionModel>,
) -> Result<f64, ChannelError> {
    cfg.validate()?;
    let kappa = resolve_kappa(cfg, model)?;
    Ok((-0.5 * kappa * cfg.distance_m).exp())
}

/// The κ_α actually in effect for a config (override else model).
pub fn resolve_kappa(
    cfg: &ThzHopConfig,
    model: Option<&dyn AbsorptionModel>,
) -> Result<f64, ChannelError> {
    match (cfg.absorption_override, model) {
        (Some(k), _) => Ok(k),
        (None, Some(m)) => m.kappa(
            cfg.carrier_hz,
            cfg.temperature_k,
            cfg.pressure_hpa,
            cfg.rel_humidity_pct,
        ),
        (None, None) => Err(ChannelError::AbsorptionUnavailable(
            "no override set and no absorption model configured".into(),
        )),
    }
}

/// Alpha-mu envelope CDF: F(x) = 1 − Γ(μ, μ x^α/Ω^α)/Γ(μ).
pub fn alpha_mu_cdf(f: &AlphaMuFading, x: f64) -> Result<f64, ChannelError> {
    f.validate()?;
    require(x >= 0.0, "x must be >= 0")?;
    if x == 0.0 {
        return Ok(0.0);
    }
    let arg = f.mu * (x / f.omega).powf(f.alpha);
    Ok(1.0 - gamma_upper_reg(f.mu, arg)?)
}

/// Alpha-mu envelope PDF.
pub fn alpha_mu_pdf(f: &AlphaMuFading, x: f64) -> Result<f64, ChannelError> {
    f.validate()?;
    require(x >= 0.0, "x must be >= 0")?;
    if x == 0.0 {
        return Ok(if f.alpha * f.mu > 1.0 {
            0.0
        } else {
            f64::INFINITY
        });
    }
    let log = (f.alpha * f.mu - 1.0) * x.ln() + f.mu * f.mu.ln()
        - f.alpha * f.mu * f.omega.ln()
        - ln_gamma(f.mu)
        - f.mu * (x / f.omega).powf(f.alpha);
    Ok(f.alpha.ln().exp() * log.exp())
}

/// Pointing-error PDF: φ x^{φ−1}/S₀^φ on [0, S₀].
pub fn pointing_pdf(p: &PointingError, x: f64) -> Result<f64, ChannelError> {
    p.validate()?;
    if !(0.0..=p.s0).contains(&x) {
        return Ok(0.0);
    }
    Ok(p.phi * x.powf(p.phi - 1.0) / p.s0.powf(p.phi))
}

/// Pointing-error CDF: (x/S₀)^φ, clamped to [0, 1].
pub fn pointing_cdf(p: &PointingError, x: f64) -> Result<f64, ChannelError> {
    p.validate()?;
    if x <= 0.0 {
        return Ok(0.0);
    }
    if x >= p.s0 {
        return Ok(1.0);
    }
    Ok((x / p.s0).powf(p.phi))
}

/// Meijer-G parameter set of the composite THz CDF:
/// G^{3,0}_{2,3}[· | 1, φ/α+1; μ, 0, φ/α].
pub fn composite_cdf_spec(f: &AlphaMuFading, p: &PointingError) -> MeijerGSpec {
    let c = p.phi / f.alpha;
    MeijerGSpec {
        a_top: vec![],
        a_bot: vec![1.0, c + 1.0],
        b_top: vec![f.mu, 0.0, c],
        b_bot: vec![],
    }
}

/// CDF of the composite THz envelope h₁ = h_f·h_p:
/// F(x) = 1 − (φ/α)/Γ(μ) · G^{3,0}_{2,3}[μ x^α/(Ω S₀)^α | ...].
pub fn composite_thz_cdf(
    f: &AlphaMuFading,
    p: &PointingError,
    x: f64,
    contour: &ContourConfig,
) -> Result<f64, ChannelError> {
    f.validate()?;
    p.validate()?;
    require(x >= 0.0, "x must be >= 0")?;
    if x == 0.0 {
        return Ok(0.0);
    }
    let arg = f.mu * (x / (f.omega * p.s0)).powf(f.alpha);
    let spec = composite_cdf_spec(f, p);
    let log_scale = (p.phi / f.alpha).ln() - ln_gamma(f.mu);
    let tail = meijer_g_scaled(&spec, arg, contour, log_scale)?;
    Ok((1.0 - tail).clamp(0.0, 1.0))
}

/// PDF of the composite THz envelope:
/// f(x) = φ μ^{φ/α} x^{φ−1} / ((Ω S₀)^φ Γ(μ)) · Γ((αμ−φ)/α, μ x^α/(Ω S₀)^α).
///
/// For αμ < φ the first argument of the upper incomplete gamma is negative;
/// that extension is evaluated through the downward recurrence
/// Γ(a, x) = (Γ(a+1, x) − x^a e^{−x})/a.
pub fn composite_thz_pdf(f: &AlphaMuFading, p: &PointingError, x: f64) -> Result<f64, ChannelError> {
    f.validate()?;
    p.validate()?;
    require(x >= 0.0, "x must be >= 0")?;
    if x == 0.0 {
        return Ok(if p.phi > 1.0 { 0.0 } else { f64::INFINITY });
    }
    let os = f.omega * p.s0;
    let a = (f.alpha * f.mu - p.phi) / f.alpha;
    let arg = f.mu * (x / os).powf(f.alpha);
    let log_front = p.phi.ln() + (p.phi / f.alpha) * f.mu.ln() + (p.phi - 1.0) * x.ln()
        - p.phi * os.ln()
        - ln_gamma(f.mu);
    Ok(log_front.exp() * gamma_upper_ext(a, arg)?)
}

/// Nakagami-m envelope CDF: 1 − Γ(m, m x²/Ω_m)/Γ(m).
pub fn nakagami_cdf(f: &NakagamiFading, x: f64) -> Result<f64, ChannelError> {
    f.validate()?;
    require(x >= 0.0, "x must be >= 0")?;
    if x == 0.0 {
        return Ok(0.0);
    }
    Ok(1.0 - gamma_upper_reg(f.m, f.m * x * x / f.omega_m)?)
}

/// Nakagami-m envelope PDF.
pub fn nakagami_pdf(f: &NakagamiFading, x: f64) -> Result<f64, ChannelError> {
    f.validate()?;
    require(x >= 0.0, "x must be >= 0")?;
    if x == 0.0 {
        return Ok(if f.m > 0.5 {
            0.0
        } else {
            2.0 / (std::f64::consts::PI * f.omega_m).sqrt()
        });
    }
    let log = f.m * (f.m / f.omega_m).ln() + (2.0 * f.m - 1.0) * x.ln()
        - ln_gamma(f.m)
        - f.m * x * x / f.omega_m;
    Ok(2.0 * log.exp())
}

/// Default contour for channel-level Meijer-G evaluations.
pub fn default_contour() -> ContourConfig {
    specfun::ContourConfig::default()
}

#[cfg(test)]
mod tests;
