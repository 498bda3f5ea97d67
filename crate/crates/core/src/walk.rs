//! The walk operator `Û = S · C` and its n-step iteration.
//!
//! `C` is a coin on polarization and `S` the spin-conditional OAM shift
//! (`R` steps down, `L` steps up). In the physical gray box the coin is a
//! QWP at 0° followed by a HWP at 22.5°, and `S` is a q-plate of charge
//! `stride/2` followed by a spin-flipping HWP at 0°:
//!
//! ```text
//! |R, m⟩ --qp--> |L, m − stride⟩ --flip--> |R, m − stride⟩
//! |L, m⟩ --qp--> |R, m + stride⟩ --flip--> |L, m + stride⟩
//! ```
//!
//! The wave-plate coin equals the Hadamard coin only up to diagonal phases,
//! `C = D1 · H · D2`. Those phases are removed by a diagonal gauge
//! `V|s, m⟩ = e^{iφm} g_s |s, m⟩` with `V (S·C) V† = e^{iγ} (S·H)`, so the
//! physical walk started from `V†|ψ⟩` reproduces the Hadamard walk from `|ψ⟩`
//! up to the same diagonal phases, and hence the same OAM distribution.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::distribution::{Distribution, NORMALIZATION_TOLERANCE};
use crate::elements::{apply_all, OpticalElement, QPlate};
use crate::error::{Error, Result};
use crate::polarization::{
    balanced_decomposition, hadamard_rl, BalancedDecomposition, CoinOperator, WavePlate,
};
use crate::state::{Spin, SpinOrbitState};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CoinMode {
    AbstractHadamard,
    PhysicalGraybox,
    Custom(CoinOperator),
}

#[derive(Debug, Clone, PartialEq)]
pub struct WalkConfig {
    pub coin_mode: CoinMode,
    pub steps: usize,
    pub stride: u32,
    pub initial: SpinOrbitState,
    /// Drop amplitudes with `|a|² <` this value after every step.
    pub prune_eps: Option<f64>,
}

impl WalkConfig {
    /// Hadamard walk with stride 1 and no pruning.
    pub fn new(initial: SpinOrbitState, steps: usize) -> Self {
        Self {
            coin_mode: CoinMode::AbstractHadamard,
            steps,
            stride: 1,
            initial,
            prune_eps: None,
        }
    }

    pub fn with_coin(mut self, coin_mode: CoinMode) -> Self {
        self.coin_mode = coin_mode;
        self
    }

    pub fn with_stride(mut self, stride: u32) -> Self {
        self.stride = stride;
        self
    }

    pub fn with_prune(mut self, eps: Option<f64>) -> Self {
        self.prune_eps = eps;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.stride == 0 {
            return Err(Error::ZeroStride);
        }
        let mass = self.initial.norm_sqr();
        if (mass - 1.0).abs() > NORMALIZATION_TOLERANCE {
            return Err(Error::Unnormalized { mass });
        }
        Ok(())
    }
}

/// The four elements of one gray box, in traversal order.
pub fn graybox_elements(stride: u32) -> Result<[OpticalElement; 4]> {
    Ok([
        OpticalElement::WavePlate(WavePlate::quarter(0.0)?),
        OpticalElement::WavePlate(WavePlate::half(PI / 8.0)?),
        OpticalElement::QPlate(QPlate::from_twice_charge(stride).map_err(|_| Error::ZeroStride)?),
        OpticalElement::SpinFlip,
    ])
}

/// One application of `Û`.
pub fn walk_step(state: &SpinOrbitState, config: &WalkConfig) -> Result<SpinOrbitState> {
    let next = match &config.coin_mode {
        CoinMode::AbstractHadamard => state
            .apply_coin(&hadamard_rl())
            .conditional_shift(config.stride)?,
        CoinMode::Custom(coin) => state.apply_coin(coin).conditional_shift(config.stride)?,
        CoinMode::PhysicalGraybox => apply_all(state, &graybox_elements(config.stride)?),
    };
    Ok(match config.prune_eps {
        Some(eps) => next.pruned(eps),
        None => next,
    })
}

/// States after 0, 1, …, n steps.
pub fn evolve(config: &WalkConfig) -> Result<Vec<SpinOrbitState>> {
    config.validate()?;
    let mut states = Vec::with_capacity(config.steps + 1);
    states.push(config.initial.clone());
    for _ in 0..config.steps {
        let next = walk_step(states.last().unwrap(), config)?;
        states.push(next);
    }
    Ok(states)
}

/// `Ûⁿ |ψ_in⟩`.
pub fn run_walk(config: &WalkConfig) -> Result<SpinOrbitState> {
    config.validate()?;
    let mut state = config.initial.clone();
    for _ in 0..config.steps {
        state = walk_step(&state, config)?;
    }
    Ok(state)
}

/// OAM marginal after each of 0, 1, …, n steps.
pub fn trajectory(config: &WalkConfig) -> Result<Vec<Distribution>> {
    Ok(evolve(config)?.iter().map(SpinOrbitState::oam_marginal).collect())
}

/// Diagonal gauge `V|s, m⟩ = e^{i·oam_phase·m} e^{i·spin_phase(s)} |s, m⟩` with
/// `V (S·C) V† = e^{i·global_phase} (S·H)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HadamardGauge {
    /// Phase on `L` relative to `R`.
    pub spin_phase_l: f64,
    /// Phase per unit OAM.
    pub oam_phase: f64,
    pub global_phase: f64,
}

impl HadamardGauge {
    fn factor(&self, spin: Spin, m: i64) -> Complex64 {
        let spin_phase = match spin {
            Spin::R => 0.0,
            Spin::L => self.spin_phase_l,
        };
        Complex64::cis(self.oam_phase * m as f64 + spin_phase)
    }

    /// `V|ψ⟩`.
    pub fn apply(&self, state: &SpinOrbitState) -> SpinOrbitState {
        state.with_phases(|s, m| self.factor(s, m))
    }

    /// `V†|ψ⟩`: the initial state under which the gauged walk reproduces the
    /// Hadamard walk started from `|ψ⟩`.
    pub fn adjust_initial(&self, state: &SpinOrbitState) -> SpinOrbitState {
        state.with_phases(|s, m| self.factor(s, m).conj())
    }
}

/// Gauge mapping the walk with a balanced `coin` onto the Hadamard walk.
pub fn hadamard_gauge(coin: &CoinOperator, stride: u32) -> Result<(BalancedDecomposition, HadamardGauge)> {
    if stride == 0 {
        return Err(Error::ZeroStride);
    }
    let dec = balanced_decomposition(coin).ok_or(Error::NotBalanced)?;
    let [a, b] = dec.d1;
    let [c, d] = dec.d2;
    // Need e^{2iφ·stride} = e^{i(a + c − b − d)} and g_L = e^{i(d − c)}.
    let oam_phase = (a + c - b - d) / (2.0 * f64::from(stride));
    let gauge = HadamardGauge {
        spin_phase_l: d - c,
        oam_phase,
        global_phase: a + c - oam_phase * f64::from(stride),
    };
    Ok((dec, gauge))
}

/// Outcome of checking the gray-box walk against the Hadamard walk.
#[derive(Debug, Clone, PartialEq)]
pub struct EquivalenceReport {
    pub steps: usize,
    pub decomposition: BalancedDecomposition,
    pub gauge: HadamardGauge,
    pub adjusted_initial: SpinOrbitState,
    pub physical: Distribution,
    pub hadamard: Distribution,
    pub max_distribution_discrepancy: f64,
    /// Distance between the physical final state and `e^{inγ} V† Ûₕⁿ |ψ⟩`.
    pub max_amplitude_discrepancy: f64,
}

/// Runs the physical gray box from the phase-adjusted initial state and the
/// Hadamard walk from `initial`, and compares them.
pub fn physical_abstract_equivalence(
    initial: &SpinOrbitState,
    steps: usize,
    stride: u32,
) -> Result<EquivalenceReport> {
    let coin = crate::polarization::graybox_coin();
    let (decomposition, gauge) = hadamard_gauge(&coin, stride)?;
    let adjusted_initial = gauge.adjust_initial(initial);

    let abstract_cfg = WalkConfig::new(initial.clone(), steps).with_stride(stride);
    let physical_cfg = WalkConfig::new(adjusted_initial.clone(), steps)
        .with_stride(stride)
        .with_coin(CoinMode::PhysicalGraybox);
    let hadamard_state = run_walk(&abstract_cfg)?;
    let physical_state = run_walk(&physical_cfg)?;

    let global = Complex64::cis(gauge.global_phase * steps as f64);
    let predicted = gauge
        .adjust_initial(&hadamard_state)
        .with_phases(|_, _| global);
    let max_amplitude_discrepancy = physical_state.max_amplitude_distance(&predicted);

    let physical = physical_state.oam_marginal();
    let hadamard = hadamard_state.oam_marginal();
    Ok(EquivalenceReport {
        steps,
        decomposition,
        gauge,
        adjusted_initial,
        max_distribution_discrepancy: physical.max_abs_difference(&hadamard),
        physical,
        hadamard,
        max_amplitude_discrepancy,
    })
}
