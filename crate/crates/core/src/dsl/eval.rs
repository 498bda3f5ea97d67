use super::{Circuit, Source};
use crate::detection::hologram_scan;
use crate::distribution::Distribution;
use crate::elements::apply_element;
use crate::error::Result;
use crate::state::{Spin, SpinOrbitState};

#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation {
    pub state: SpinOrbitState,
    /// Hologram scan over the measure window, when the circuit has one.
    pub distribution: Option<Distribution>,
}

pub fn initial_state(source: &Source) -> Result<SpinOrbitState> {
    match *source {
        Source::Basis { spin, m } => Ok(SpinOrbitState::basis_state(spin, m)),
        Source::Superposition { r, l, m } => SpinOrbitState::superpose(&[(r, Spin::R, m), (l, Spin::L, m)]),
    }
}

/// Prepares the source, sends it through the unrolled element chain and scans
/// the measure window.
pub fn evaluate(circuit: &Circuit) -> Result<Evaluation> {
    let mut state = initial_state(&circuit.source)?;
    for element in circuit.flatten() {
        state = apply_element(&state, &element.to_optical()?);
    }
    let distribution = circuit
        .measure
        .map(|w| hologram_scan(&state, w.m_min, w.m_max))
        .transpose()?;
    Ok(Evaluation { state, distribution })
}
