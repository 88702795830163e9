//! Bromwich-line configuration shared by the Meijer-G and Fox-H evaluators.

use super::SpecFunError;

/// How a contour quadrature decides it is done.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Refinement {
    /// Single pass at the configured resolution.
    Fixed,
    /// Halve the step until two successive estimates agree to the tolerance.
    HalvingUntilTolerance,
}

/// Numerical realization of a (multi-)contour Mellin-Barnes integral:
/// vertical lines `offset_k + i·v`, truncated to |v| ≤ half_length (extended
/// automatically until the integrand tail falls below 1e-16 of its peak),
/// trapezoid rule with `nodes_per_axis` initial nodes per line.
#[derive(Debug, Clone, PartialEq)]
pub struct ContourConfig {
    /// Real part of each vertical line; `None` selects offsets automatically
    /// between the left and right pole families of the integrand.
    pub offsets: Option<Vec<f64>>,
    /// Initial truncation T of the imaginary range [−T, T].
    pub half_length: f64,
    /// Initial trapezoid node count per axis (refinement may double it).
    pub nodes_per_axis: usize,
    /// Refinement policy.
    pub refinement: Refinement,
    /// Relative tolerance for the refinement loop.
    pub tolerance: f64,
}

impl Default for ContourConfig {
    fn default() -> Self {
        Self {
            offsets: None,
            half_length: 24.0,
            nodes_per_axis: 512,
            refinement: Refinement::HalvingUntilTolerance,
            tolerance: 1e-10,
        }
    }
}

impl ContourConfig {
    /// Validate the structural invariants (positive truncation, at least 64
    /// nodes, positive tolerance).
    pub fn validate(&self) -> Result<(), SpecFunError> {
        if !(self.half_length > 0.0) {
            return Err(SpecFunError::Contour(format!(
                "half_length must be > 0, got {}",
                self.half_length
            )));
        }
        if self.nodes_per_axis < 64 {
            return Err(SpecFunError::Contour(format!(
                "nodes_per_axis must be >= 64, got {}",
                self.nodes_per_axis
            )));
        }
        if !(self.tolerance > 0.0) {
            return Err(SpecFunError::Contour(format!(
                "tolerance must be > 0, got {}",
                self.tolerance
            )));
        }
        Ok(())
    }

    /// A tighter default for accuracy-critical closed forms.
    pub fn precise() -> Self {
        Self {
            nodes_per_axis: 1024,
            tolerance: 1e-12,
            ..Self::default()
        }
    }
}

/// Shared accuracy gate: results of these contour integrals are
/// mathematically real, so a large imaginary residue flags a broken contour
/// or insufficient resolution rather than a usable value.
pub(crate) fn check_imaginary_residue(re: f64, im: f64) -> Result<f64, SpecFunError> {
    if im.abs() <= 1e-8 * re.abs() + 1e-12 {
        Ok(re)
    } else {
        Err(SpecFunError::Accuracy(format!(
            "imaginary residue {im:e} too large for real part {re:e}"
        )))
    }
}
