//! Pluggable molecular-absorption coefficient models.
//!
//! The absorption coefficient κ_α(f, T, P, ψ) feeds the deterministic gain
//! exp(−κ_α d/2). Link analyses that need exact reproducibility should set
//! the per-config override instead of relying on a bundled model; the model
//! here exists so sweeps have sensible environmental behavior out of the
//! box.

use super::ChannelError;

/// Source of the molecular absorption coefficient κ_α (1/m).
pub trait AbsorptionModel: Send + Sync {
    /// κ_α for a carrier (Hz), absolute temperature (K), pressure (hPa) and
    /// relative humidity (percent). Errors when the carrier is outside the
    /// model's validity window.
    fn kappa(
        &self,
        carrier_hz: f64,
        temperature_k: f64,
        pressure_hpa: f64,
        rel_humidity_pct: f64,
    ) -> Result<f64, ChannelError>;
}

/// Empirical water-vapor absorption fit for the 275-400 GHz transmission
/// window.
///
/// Two pressure-broadened resonance terms (the 325.15 GHz water line and
/// the window-edge 380.2 GHz line) ride on a continuum that grows
/// quadratically with frequency; all terms scale with the water-vapor
/// volume mixing ratio derived from the saturation vapor pressure
/// (Arden Buck form over water, 1996 coefficients). Accuracy is of the
/// "link budget" class (tens of percent), which is why overrides take
/// precedence everywhere correctness matters.
#[derive(Debug, Clone, Default)]
pub struct WindowAbsorptionModel;

impl WindowAbsorptionModel {
    pub const F_MIN_HZ: f64 = 275e9;
    pub const F_MAX_HZ: f64 = 400e9;

    /// Saturation water-vapor pressure over water, hPa (Buck, 1996).
    fn saturation_pressure_hpa(temperature_k: f64) -> f64 {
        let tc = temperature_k - 273.15;
        6.1121 * ((18.678 - tc / 234.5) * tc / (257.14 + tc)).exp()
    }

    /// Water-vapor volume mixing ratio from relative humidity.
    fn mixing_ratio(temperature_k: f64, pressure_hpa: f64, rel_humidity_pct: f64) -> f64 {
        let e_s = Self::saturation_pressure_hpa(temperature_k);
        (rel_humidity_pct / 100.0) * e_s / pressure_hpa
    }
}

impl AbsorptionModel for WindowAbsorptionModel {
    fn kappa(
        &self,
        carrier_hz: f64,
        temperature_k: f64,
        pressure_hpa: f64,
        rel_humidity_pct: f64,
    ) -> Result<f64, ChannelError> {
        if !(Self::F_MIN_HZ..=Self::F_MAX_HZ).contains(&carrier_hz) {
            return Err(ChannelError::AbsorptionUnavailable(format!(
                "carrier {:.1} GHz outside the bundled 275-400 GHz window",
                carrier_hz / 1e9
            )));
        }
        if temperature_k <= 0.0 || pressure_hpa <= 0.0 {
            return Err(ChannelError::AbsorptionUnavailable(
                "temperature and pressure must be positive".into(),
            ));
        }
        let v = Self::mixing_ratio(temperature_k, pressure_hpa, rel_humidity_pct);
        let f_ghz = carrier_hz / 1e9;

        // Pressure-broadened resonances, centers in GHz, widths grow with
        // humidity; amplitudes scale with the mixing ratio.
        let line = |center: f64, amp: f64, width0: f64| -> f64 {
            let w = width0 * (1.0 + 18.0 * v);
            amp * v * w * w / ((f_ghz - center).powi(2) + w * w)
        };
        let y1 = line(325.15, 0.32, 2.6);
        let y2 = line(380.20, 0.60, 2.9);
        // Slowly varying continuum across the window.
        let g = v * (1.3e-3 + 2.0e-7 * (f_ghz - 275.0).powi(2)) + 2.0e-4 * (f_ghz / 275.0).powi(2);
        Ok(y1 + y2 + g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const T: f64 = 296.0;
    const P: f64 = 1013.25;

    #[test]
    fn in_window_positive_and_sane() {
        let m = WindowAbsorptionModel;
        for f_ghz in [275.0, 300.0, 350.0, 400.0] {
            let k = m.kappa(f_ghz * 1e9, T, P, 50.0).unwrap();
            assert!(k > 0.0 && k < 1.0, "kappa({f_ghz} GHz) = {k}");
        }
    }

    #[test]
    fn increases_with_humidity() {
        let m = WindowAbsorptionModel;
        let dry = m.kappa(300e9, T, P, 10.0).unwrap();
        let wet = m.kappa(300e9, T, P, 90.0).unwrap();
        assert!(wet > dry);
    }

    #[test]
    fn line_center_peaks_over_window_floor() {
        let m = WindowAbsorptionModel;
        let window = m.kappa(300e9, T, P, 50.0).unwrap();
        let peak = m.kappa(325.15e9, T, P, 50.0).unwrap();
        assert!(peak > 3.0 * window, "peak {peak} vs window {window}");
    }

    #[test]
    fn out_of_band_is_unavailable() {
        let m = WindowAbsorptionModel;
        assert!(m.kappa(8e9, T, P, 50.0).is_err());
        assert!(m.kappa(500e9, T, P, 50.0).is_err());
    }

    #[test]
    fn buck_saturation_reference_point() {
        // e_s(20 °C) ≈ 23.39 hPa.
        let e = WindowAbsorptionModel::saturation_pressure_hpa(293.15);
        assert!((e - 23.39).abs() < 0.05, "{e}");
    }
}
