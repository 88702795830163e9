use super::*;
use crate::specfun::quad::{integrate, integrate_half_line};

fn table_thz() -> ThzHopConfig {
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

// -- Friis gain --------------------------------------------------------------

#[test]
fn friis_halves_when_distance_doubles() {
    let near = table_thz();
    let far = ThzHopConfig {
        distance_m: 600.0,
        ..near.clone()
    };
    let a = friis_gain_thz(&near).unwrap();
    let b = friis_gain_thz(&far).unwrap();
    assert!((a / b - 2.0).abs() < 1e-12);
}

#[test]
fn friis_unit_case() {
    // 0 dBi gains, f = c/(4π), d = 1 m: every factor is unity.
    let cfg = ThzHopConfig {
        carrier_hz: SPEED_OF_LIGHT / (4.0 * std::f64::consts::PI),
        distance_m: 1.0,
        tx_gain_db: 0.0,
        rx_gain_db: 0.0,
        ..table_thz()
    };
    assert!((friis_gain_thz(&cfg).unwrap() - 1.0).abs() < 1e-12);
}

#[test]
fn friis_reference_link_budget_pinned() {
    // 275 GHz, 300 m, 52 dBi both ends, η₁ = 2. Regression-pinned after the
    // first computation of c·√(G_t·G_r)/(4π f)·d^{−1}.
    let h = friis_gain_thz(&table_thz()).unwrap();
    assert!((h - 4.583074219246619e-2).abs() < 1e-15, "{h:e}");
}

#[test]
fn friis_scale_invariance_eta2() {
    // f → k f, d → d/k leaves h_d unchanged for η₁ = 2 (k = 3).
    let base = table_thz();
    let scaled = ThzHopConfig {
        carrier_hz: base.carrier_hz * 3.0,
        distance_m: base.distance_m / 3.0,
        ..base.clone()
    };
    let a = friis_gain_thz(&base).unwrap();
    let b = friis_gain_thz(&scaled).unwrap();
    assert!((a - b).abs() < 1e-12 * a);
}

#[test]
fn friis_rf_hop() {
    let cfg = RfHopConfig {
        carrier_hz: 8e9,
        distance_m: 800.0,
        tx_gain_db: 52.0,
        rx_gain_db: 52.0,
        path_loss_exp: 2.0,
    };
    let h = friis_gain_rf(&cfg).unwrap();
    assert!(h > 0.0);
    // RF hop sees far less path loss than the THz hop at these parameters.
    assert!(h > 10.0 * friis_gain_thz(&table_thz()).unwrap());
}

// -- Absorption gain ---------------------------------------------------------

#[test]
fn absorption_override_zero_is_unity() {
    let cfg = ThzHopConfig {
        absorption_override: Some(0.0),
        ..table_thz()
    };
    assert_eq!(absorption_gain(&cfg, None).unwrap(), 1.0);
}

#[test]
fn absorption_override_reference() {
    // κ = 0.01 /m over 300 m: exp(−1.5).
    let cfg = ThzHopConfig {
        absorption_override: Some(0.01),
        ..table_thz()
    };
    let h = absorption_gain(&cfg, None).unwrap();
    assert!((h - (-1.5f64).exp()).abs() < 1e-15);
}

#[test]
fn absorption_decreasing_in_distance() {
    let mut prev = 1.0;
    for d in [100.0, 200.0, 400.0, 800.0] {
        let cfg = ThzHopConfig {
            distance_m: d,
            absorption_override: Some(0.004),
            ..table_thz()
        };
        let h = absorption_gain(&cfg, None).unwrap();
        assert!(h < prev);
        prev = h;
    }
}

#[test]
fn absorption_unavailable_without_model() {
    let cfg = table_thz();
    assert!(matches!(
        absorption_gain(&cfg, None),
        Err(ChannelError::AbsorptionUnavailable(_))
    ));
    let model = WindowAbsorptionModel;
    assert!(absorption_gain(&cfg, Some(&model)).unwrap() > 0.0);
}

// -- Alpha-mu ----------------------------------------------------------------

#[test]
fn alpha_mu_rayleigh_reduction() {
    // α = 2, μ = 1, Ω = 1 is Rayleigh with F(1) = 1 − e^{−1}.
    let f = AlphaMuFading {
        alpha: 2.0,
        mu: 1.0,
        omega: 1.0,
    };
    let got = alpha_mu_cdf(&f, 1.0).unwrap();
    assert!((got - (1.0 - (-1.0f64).exp())).abs() < 1e-14);
    assert_eq!(alpha_mu_cdf(&f, 0.0).unwrap(), 0.0);
}

#[test]
fn alpha_mu_cdf_vs_pdf_quadrature() {
    let f = AlphaMuFading {
        alpha: 1.6,
        mu: 2.5,
        omega: 1.5,
    };
    let x = 1.2;
    let (by_quadrature, _) =
        integrate(|t| alpha_mu_pdf(&f, t).unwrap(), 0.0, x, 1e-11, 1e-13).unwrap();
    let closed = alpha_mu_cdf(&f, x).unwrap();
    assert!(
        (closed - by_quadrature).abs() < 1e-8,
        "{closed} vs {by_quadrature}"
    );
}

// -- Composite THz envelope ---------------------------------------------------

fn default_fp() -> (AlphaMuFading, PointingError) {
    (
        AlphaMuFading {
            alpha: 2.0,
            mu: 1.0,
            omega: 1.0,
        },
        PointingError { phi: 4.0, s0: 0.7 },
    )
}

#[test]
fn composite_cdf_zero_at_origin() {
    let f = AlphaMuFading {
        alpha: 2.0,
        mu: 1.5,
        omega: 1.0,
    };
    let p = PointingError { phi: 4.0, s0: 0.7 };
    let ctr = default_contour();
    assert_eq!(composite_thz_cdf(&f, &p, 0.0, &ctr).unwrap(), 0.0);
    // Just above the origin the Meijer-G tail must still cancel to < 1e-8.
    let near = composite_thz_cdf(&f, &p, 1e-6, &ctr).unwrap();
    assert!(near < 1e-8, "F(1e-6) = {near:e}");
}

#[test]
fn composite_cdf_matches_composition_integral() {
    // Oracle: F(x) = ∫₀^{S₀} F_αμ(x/y)·f_p(y) dy by adaptive quadrature.
    let (f, p) = default_fp();
    let ctr = default_contour();
    for &x in &[0.1, 0.3, 0.5, 0.9, 1.5] {
        let (oracle, _) = integrate(
            |y| alpha_mu_cdf(&f, x / y).unwrap() * pointing_pdf(&p, y).unwrap(),
            0.0,
            p.s0,
            1e-10,
            1e-13,
        )
        .unwrap();
        let closed = composite_thz_cdf(&f, &p, x, &ctr).unwrap();
        assert!(
            (closed - oracle).abs() < 1e-6 * oracle.max(1e-3),
            "x={x}: closed {closed} vs oracle {oracle}"
        );
    }
}

#[test]
fn composite_cdf_degenerates_without_misalignment() {
    // φ → ∞ with S₀ = 1 concentrates the pointing loss at 1.
    let (f, _) = default_fp();
    let p = PointingError { phi: 500.0, s0: 1.0 };
    let ctr = default_contour();
    for &x in &[0.2, 0.4, 0.55] {
        let composite = composite_thz_cdf(&f, &p, x, &ctr).unwrap();
        let plain = alpha_mu_cdf(&f, x).unwrap();
        assert!(
            (composite - plain).abs() < 1e-3,
            "x={x}: {composite} vs {plain}"
        );
    }
}

#[test]
fn composite_pdf_normalizes() {
    let f = AlphaMuFading {
        alpha: 2.0,
        mu: 1.5,
        omega: 1.0,
    };
    let p = PointingError { phi: 4.0, s0: 0.7 };
    let (total, _) =
        integrate_half_line(|x| composite_thz_pdf(&f, &p, x).unwrap(), 1e-10, 1e-12).unwrap();
    assert!((total - 1.0).abs() < 1e-6, "∫pdf = {total}");
}

#[test]
fn composite_pdf_matches_cdf_derivative() {
    let (f, p) = default_fp();
    let ctr = default_contour();
    let x = 0.8;
    let h = 1e-5;
    let fd = (composite_thz_cdf(&f, &p, x + h, &ctr).unwrap()
        - composite_thz_cdf(&f, &p, x - h, &ctr).unwrap())
        / (2.0 * h);
    let pdf = composite_thz_pdf(&f, &p, x).unwrap();
    assert!((fd - pdf).abs() < 1e-5, "fd {fd} vs pdf {pdf}");
}

#[test]
fn composite_pdf_zero_at_origin_when_phi_gt_one() {
    let (f, p) = default_fp();
    assert_eq!(composite_thz_pdf(&f, &p, 0.0).unwrap(), 0.0);
}

#[test]
fn composite_pdf_negative_gamma_argument_branch() {
    // αμ < φ exercises the Γ(a, x) extension with a < 0; cross-check the
    // value against direct quadrature of the mixture density
    // f(x) = ∫ f_αμ(x/y) f_p(y) dy / y.
    let f = AlphaMuFading {
        alpha: 2.0,
        mu: 1.0,
        omega: 1.0,
    };
    let p = PointingError { phi: 4.0, s0: 0.7 };
    let x = 0.5;
    let (oracle, _) = integrate(
        |y| alpha_mu_pdf(&f, x / y).unwrap() * pointing_pdf(&p, y).unwrap() / y,
        1e-9,
        p.s0,
        1e-10,
        1e-13,
    )
    .unwrap();
    let closed = composite_thz_pdf(&f, &p, x).unwrap();
    assert!((closed - oracle).abs() < 1e-7 * oracle, "{closed} vs {oracle}");
}

// -- Nakagami-m ---------------------------------------------------------------

#[test]
fn nakagami_rayleigh_reduction() {
    let f = NakagamiFading {
        m: 1.0,
        omega_m: 1.0,
    };
    let got = nakagami_cdf(&f, 1.0).unwrap();
    assert!((got - (1.0 - (-1.0f64).exp())).abs() < 1e-14);
    assert_eq!(nakagami_cdf(&f, 0.0).unwrap(), 0.0);
}

#[test]
fn nakagami_cdf_vs_pdf_quadrature() {
    let f = NakagamiFading {
        m: 2.1,
        omega_m: 0.04,
    };
    let x = 0.1;
    let (oracle, _) = integrate(|t| nakagami_pdf(&f, t).unwrap(), 0.0, x, 1e-11, 1e-14).unwrap();
    let closed = nakagami_cdf(&f, x).unwrap();
    assert!((closed - oracle).abs() < 1e-9, "{closed} vs {oracle}");
}

// -- Shared CDF properties -----------------------------------------------------

#[test]
fn cdfs_monotone_and_bounded_on_grids() {
    let am = AlphaMuFading {
        alpha: 2.7,
        mu: 1.25,
        omega: 1.8,
    };
    let nk = NakagamiFading {
        m: 1.6,
        omega_m: 0.5,
    };
    let (f, p) = default_fp();
    let ctr = default_contour();
    let mut prev = (0.0, 0.0, 0.0);
    for i in 0..60 {
        let x = 0.05 * i as f64;
        let a = alpha_mu_cdf(&am, x).unwrap();
        let n = nakagami_cdf(&nk, x).unwrap();
        let c = composite_thz_cdf(&f, &p, x, &ctr).unwrap();
        for (v, pv) in [(a, prev.0), (n, prev.1), (c, prev.2)] {
            assert!((0.0..=1.0).contains(&v));
            assert!(v >= pv - 1e-12, "CDF decreased at x={x}");
        }
        prev = (a, n, c);
    }
}
