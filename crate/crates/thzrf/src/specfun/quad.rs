//! Adaptive quadrature used by the oracle integrals.
//!
//! Globally adaptive Gauss-Kronrod (G7, K15) with deterministic interval
//! selection, plus a half-line integrator that applies the u = λ/(1+λ)
//! compactification with an endpoint-weighted first chart so integrands with
//! a 1/√λ singularity at the origin are handled at full order.

use super::SpecFunError;

/// 15-point Kronrod nodes on [-1, 1] (positive half; symmetric).
const XK: [f64; 8] = [
    0.0,
    0.207784955007898467600689403773245,
    0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,
    0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,
    0.949107912342758524526189684047851,
    0.991455371120812639206854697526329,
];

/// Kronrod weights matching `XK`.
const WK: [f64; 8] = [
    0.209482141084727828012999174891714,
    0.204432940075298892414161999234649,
    0.190350578064785409913256402421014,
    0.169004726639267902826583426598550,
    0.140653259715525918745189590510238,
    0.104790010322250183839876322541518,
    0.063092092629978553290700663189204,
    0.022935322010529224963732008058970,
];

/// 7-point Gauss weights for the nodes XK[0], XK[2], XK[4], XK[6].
const WG: [f64; 4] = [
    0.417959183673469387755102040816327,
    0.381830050505118944950369775488975,
    0.279705391489276667901467771423780,
    0.129484966168869693270611432679082,
];

/// One G7K15 panel: returns (kronrod, |kronrod − gauss|, ∫|f|).
fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let f0 = f(c);
    let mut kron = WK[0] * f0;
    let mut resabs = WK[0] * f0.abs();
    let mut gauss = WG[0] * f0;
    for j in 1..8 {
        let x = h * XK[j];
        let f1 = f(c - x);
        let f2 = f(c + x);
        kron += WK[j] * (f1 + f2);
        resabs += WK[j] * (f1.abs() + f2.abs());
        if j % 2 == 0 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    ((kron * h), (kron - gauss).abs() * h.abs(), resabs * h.abs())
}

/// Globally adaptive integration of f over [a, b].
///
/// Splits the interval with the largest error estimate until the total
/// estimated error falls below `tol_rel·|I| + tol_abs` or the panel budget
/// runs out (in which case the partial value and achieved bound are
/// reported inside the error).
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    tol_rel: f64,
    tol_abs: f64,
) -> Result<(f64, f64), SpecFunError> {
    const MAX_PANELS: usize = 4096;
    let (v, e, _) = gk15(&f, a, b);
    let mut panels = vec![(a, b, v, e)];
    loop {
        let total: f64 = panels.iter().map(|p| p.2).sum();
        let err: f64 = panels.iter().map(|p| p.3).sum();
        if err <= tol_rel * total.abs() + tol_abs {
            return Ok((total, err));
        }
        if panels.len() >= MAX_PANELS {
            return Err(SpecFunError::NoConvergence {
                value: total,
                bound: err,
                iterations: panels.len(),
            });
        }
        // Deterministic: split the worst panel; ties resolved by index.
        let (idx, _) = panels
            .iter()
            .enumerate()
            .max_by(|(_, x), (_, y)| x.3.partial_cmp(&y.3).unwrap_or(std::cmp::Ordering::Equal))
            .expect("non-empty panel list");
        let (pa, pb, _, _) = panels.swap_remove(idx);
        let mid = 0.5 * (pa + pb);
        let (v1, e1, _) = gk15(&f, pa, mid);
        let (v2, e2, _) = gk15(&f, mid, pb);
        panels.push((pa, mid, v1, e1));
        panels.push((mid, pb, v2, e2));
    }
}

/// ∫₀^∞ f(λ) dλ for integrands that decay at infinity and may carry an
/// integrable λ^{−1/2} singularity at the origin.
///
/// Uses u = λ/(1+λ). The chart u ∈ [0, ½] (λ ∈ [0, 1]) is re-parameterized
/// by u = v² so the endpoint singularity integrates at full order; the chart
/// u ∈ [½, 1) is walked as t = 1−u with g(t) = f((1−t)/t)/t², which tends to
/// zero with t for any integrand decaying faster than λ^{−2}.
pub fn integrate_half_line<F: Fn(f64) -> f64>(
    f: F,
    tol_rel: f64,
    tol_abs: f64,
) -> Result<(f64, f64), SpecFunError> {
    // Chart A: λ = v²/(1−v²), dλ/du · du/dv = 1/(1−u)² · 2v
    let head = integrate(
        |v| {
            let u = v * v;
            let om = 1.0 - u;
            f(u / om) * 2.0 * v / (om * om)
        },
        0.0,
        0.5f64.sqrt(),
        tol_rel,
        0.5 * tol_abs,
    )?;
    // Chart B: t = 1−u, λ = (1−t)/t
    let tail = integrate(
        |t| {
            if t <= 0.0 {
                0.0
            } else {
                f((1.0 - t) / t) / (t * t)
            }
        },
        0.0,
        0.5,
        tol_rel,
        0.5 * tol_abs,
    )?;
    Ok((head.0 + tail.0, head.1 + tail.1))
}
