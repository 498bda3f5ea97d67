//! Optical elements acting on a [`SpinOrbitState`].
//!
//! A tuned q-plate of charge `q` flips circular polarization and moves OAM by
//! `2q` in the direction set by the incoming spin: `|L, m⟩ → |R, m + 2q⟩` and
//! `|R, m⟩ → |L, m − 2q⟩`. The plate's axis offset is taken as zero, so the
//! conversion carries no extra phase. Holograms shift OAM for both spins alike
//! with unit efficiency.

use crate::error::{Error, Result};
use crate::polarization::{CoinOperator, WavePlate};
use crate::state::{Spin, SpinOrbitState};

/// A tuned q-plate. The charge is stored as `2q`, which must be a positive integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QPlate {
    twice_charge: u32,
}

impl QPlate {
    pub fn new(charge: f64) -> Result<Self> {
        let twice = 2.0 * charge;
        if !twice.is_finite() || twice < 1.0 || twice.fract() != 0.0 || twice > f64::from(u32::MAX) {
            return Err(Error::InvalidCharge(charge));
        }
        Ok(Self {
            twice_charge: twice as u32,
        })
    }

    pub fn from_twice_charge(twice_charge: u32) -> Result<Self> {
        if twice_charge == 0 {
            return Err(Error::InvalidCharge(0.0));
        }
        Ok(Self { twice_charge })
    }

    pub fn charge(&self) -> f64 {
        f64::from(self.twice_charge) / 2.0
    }

    /// OAM exchanged per pass, `2q`.
    pub fn oam_exchange(&self) -> i64 {
        i64::from(self.twice_charge)
    }
}

/// A computer-generated hologram adding `delta_m` to the OAM index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Hologram {
    pub delta_m: i64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OpticalElement {
    WavePlate(WavePlate),
    QPlate(QPlate),
    Hologram(Hologram),
    /// A HWP at 0°, written as the bare `R ↔ L` swap.
    SpinFlip,
    /// A coin applied directly, bypassing wave-plate conventions.
    AbstractCoin(CoinOperator),
}

pub fn apply_qplate(state: &SpinOrbitState, plate: QPlate) -> SpinOrbitState {
    let dm = plate.oam_exchange();
    state.permuted(|spin, m| match spin {
        Spin::L => (Spin::R, m + dm),
        Spin::R => (Spin::L, m - dm),
    })
}

pub fn apply_spinflip(state: &SpinOrbitState) -> SpinOrbitState {
    state.permuted(|spin, m| (spin.flipped(), m))
}

pub fn apply_hologram(state: &SpinOrbitState, hologram: Hologram) -> SpinOrbitState {
    if hologram.delta_m == 0 {
        return state.clone();
    }
    state.permuted(|spin, m| (spin, m + hologram.delta_m))
}

pub fn apply_element(state: &SpinOrbitState, element: &OpticalElement) -> SpinOrbitState {
    match element {
        OpticalElement::WavePlate(plate) => state.apply_coin(&plate.coin()),
        OpticalElement::QPlate(plate) => apply_qplate(state, *plate),
        OpticalElement::Hologram(holo) => apply_hologram(state, *holo),
        OpticalElement::SpinFlip => apply_spinflip(state),
        OpticalElement::AbstractCoin(coin) => state.apply_coin(coin),
    }
}

/// Applies `elements` in traversal order.
pub fn apply_all<'a>(
    state: &SpinOrbitState,
    elements: impl IntoIterator<Item = &'a OpticalElement>,
) -> SpinOrbitState {
    elements
        .into_iter()
        .fold(state.clone(), |s, e| apply_element(&s, e))
}
