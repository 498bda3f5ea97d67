//! Exact simulation of one-dimensional discrete-time quantum walks on the
//! joint spin/orbital-angular-momentum space of a single photon.
//!
//! The polarization (spin) of the photon is the two-level coin, written in the
//! circular {R, L} basis, and the OAM index `m` of the helical phase
//! `exp(i m φ)` is the walker's position. One walk step is a coin toss followed
//! by a spin-conditional OAM shift. Optically the step is realized without an
//! interferometer by a quarter-wave plate, a half-wave plate, a q-plate of
//! charge 1/2 and a spin-flipping half-wave plate; read-out is a hologram that
//! moves the wanted OAM mode to `m = 0` followed by a single-mode fiber.
//!
//! Modules, bottom-up:
//!
//! * [`polarization`]: Jones matrices, the circular basis and coin operators.
//! * [`state`]: the sparse spin-orbit state and the abstract walk primitives.
//! * [`elements`]: q-plates, holograms, spin flips, wave plates acting on states.
//! * [`walk`]: the walk operator, n-step evolution and the gray-box equivalence.
//! * [`detection`]: hologram + fiber measurement and full hologram scans.
//! * [`classical`]: the classical random walk, exact and Monte Carlo.
//! * [`analysis`]: moments, total variation and spread-scaling fits.
//! * [`dsl`]: the `.qwc` circuit language.

pub mod analysis;
pub mod classical;
pub mod detection;
pub mod distribution;
pub mod dsl;
pub mod elements;
mod error;
pub mod polarization;
pub mod state;
pub mod walk;

pub use num_complex::Complex64;

pub use crate::distribution::Distribution;
pub use crate::error::{Error, Result};
pub use crate::polarization::{CoinOperator, JonesMatrix, PlateKind, WavePlate};
pub use crate::state::{Spin, SpinOrbitState, Spinor};
