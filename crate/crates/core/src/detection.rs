//! Read-out by hologram and single-mode fiber.
//!
//! The fiber passes only the `m = 0` mode and the photon counter is blind to
//! polarization, so a hologram of `Δm = −m` followed by the fiber measures the
//! population of OAM mode `m`. Fiber coupling of the converted mode is taken
//! as perfect.

use crate::distribution::Distribution;
use crate::elements::{apply_hologram, Hologram};
use crate::error::{Error, Result};
use crate::state::{SpinOrbitState, Spinor};

/// Counting probability with hologram `delta_m` in place.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DetectionResult {
    pub delta_m: i64,
    pub probability: f64,
}

/// Population transmitted by the fiber, `|a_R(0)|² + |a_L(0)|²`.
pub fn smf_probability(state: &SpinOrbitState) -> f64 {
    state.spinor(0).population()
}

/// Fiber transmission resolved by polarization, `(|a_R(0)|², |a_L(0)|²)`.
pub fn smf_probability_resolved(state: &SpinOrbitState) -> (f64, f64) {
    let Spinor { r, l } = state.spinor(0);
    (r.norm_sqr(), l.norm_sqr())
}

pub fn detect(state: &SpinOrbitState, delta_m: i64) -> DetectionResult {
    let shifted = apply_hologram(state, Hologram { delta_m });
    DetectionResult {
        delta_m,
        probability: smf_probability(&shifted),
    }
}

/// Reconstructs the OAM distribution on `[m_min, m_max]` by swapping in the
/// hologram `Δm = −m` for every `m` in the window.
///
/// The result keeps the captured mass as is; it is flagged normalized only
/// when the window holds all of it.
pub fn hologram_scan(state: &SpinOrbitState, m_min: i64, m_max: i64) -> Result<Distribution> {
    if m_min > m_max {
        return Err(Error::InvertedRange { min: m_min, max: m_max });
    }
    Ok(Distribution::new(
        (m_min..=m_max).map(|m| (m, detect(state, -m).probability)),
    ))
}
