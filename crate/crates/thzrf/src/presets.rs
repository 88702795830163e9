//! Ready-made configurations: the headline simulation parameter set used
//! throughout the examples, and a unit-gain link for controlled experiments.

use crate::channel::{
    AlphaMuFading, NakagamiFading, PointingError, PowerNoise, RfHopConfig, ThzHopConfig,
    SPEED_OF_LIGHT,
};
use crate::linkstats::{LinkStatsError, SnrModel};

/// Headline THz hop: 275 GHz, 300 m, 52 dBi antennas, 296 K, 1013.25 hPa,
/// 50 % relative humidity.
pub fn default_thz() -> ThzHopConfig {
    ThzHopConfig {
        carrier_hz: 275e9,
        distance_m: 300.0,
        tx_gain_db: 52.0,
        rx_gain_db: 52.0,
        path_loss_exp: 2.0,
        temperature_k: 296.0,
        pressure_hpa: 1013.25,
        rel_humidity_pct: 50.0,
        absorption_override: None,
    }
}

/// Headline RF hop: 8 GHz, 800 m, 52 dBi antennas.
pub fn default_rf() -> RfHopConfig {
    RfHopConfig {
        carrier_hz: 8e9,
        distance_m: 800.0,
        tx_gain_db: 52.0,
        rx_gain_db: 52.0,
        path_loss_exp: 2.0,
    }
}

/// Midpoint fading parameters of the headline ranges.
pub fn default_fading() -> (AlphaMuFading, PointingError, NakagamiFading) {
    (
        AlphaMuFading {
            alpha: 2.0,
            mu: 1.5,
            omega: 1.0,
        },
        PointingError { phi: 4.0, s0: 0.61 },
        NakagamiFading {
            m: 2.0,
            omega_m: 1.0,
        },
    )
}

/// The headline model at a given average transmit SNR (dB), with κ_α fixed
/// by override so results don't depend on the bundled absorption model.
pub fn default_model(snr_db: f64) -> Result<SnrModel, LinkStatsError> {
    let thz = ThzHopConfig {
        absorption_override: Some(2.23e-3),
        ..default_thz()
    };
    let (am, pe, nk) = default_fading();
    SnrModel::new(
        thz,
        am,
        pe,
        default_rf(),
        nk,
        PowerNoise::from_avg_snr_db(snr_db, 1.0),
        None,
    )
}

/// A hop with all deterministic gains equal to one (0 dBi antennas,
/// f = c/4π, 1 m, κ_α = 0), so 𝒜 = N/(P_s Ω² S₀²) and 𝒞 = m N/(P_r Ω_m)
/// exactly.
pub fn unit_thz() -> ThzHopConfig {
    ThzHopConfig {
        carrier_hz: SPEED_OF_LIGHT / (4.0 * std::f64::consts::PI),
        distance_m: 1.0,
        tx_gain_db: 0.0,
        rx_gain_db: 0.0,
        path_loss_exp: 2.0,
        temperature_k: 296.0,
        pressure_hpa: 1013.25,
        rel_humidity_pct: 50.0,
        absorption_override: Some(0.0),
    }
}

/// RF counterpart of [`unit_thz`].
pub fn unit_rf() -> RfHopConfig {
    RfHopConfig {
        carrier_hz: SPEED_OF_LIGHT / (4.0 * std::f64::consts::PI),
        distance_m: 1.0,
        tx_gain_db: 0.0,
        rx_gain_db: 0.0,
        path_loss_exp: 2.0,
    }
}

/// Unit-gain model for controlled numerical experiments.
#[allow(clippy::too_many_arguments)]
pub fn unit_model(
    alpha: f64,
    mu: f64,
    omega: f64,
    phi: f64,
    s0: f64,
    m: f64,
    omega_m: f64,
    snr_db: f64,
) -> Result<SnrModel, LinkStatsError> {
    SnrModel::new(
        unit_thz(),
        AlphaMuFading { alpha, mu, omega },
        PointingError { phi, s0 },
        unit_rf(),
        NakagamiFading { m, omega_m },
        PowerNoise::from_avg_snr_db(snr_db, 1.0),
        None,
    )
}
