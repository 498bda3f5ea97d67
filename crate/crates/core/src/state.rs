//! Sparse pure states over polarization ⊗ OAM.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_complex::Complex64;

use crate::distribution::Distribution;
use crate::error::{Error, Result};
use crate::polarization::CoinOperator;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Circular polarization of the photon. `L` carries spin `+ħ` (↑), `R` carries `−ħ` (↓).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Spin {
    R,
    L,
}

impl Spin {
    /// Spin z-component in units of ħ.
    pub fn sz(self) -> i64 {
        match self {
            Spin::R => -1,
            Spin::L => 1,
        }
    }

    pub fn flipped(self) -> Spin {
        match self {
            Spin::R => Spin::L,
            Spin::L => Spin::R,
        }
    }
}

/// Amplitudes on `R` and `L` at a single OAM index.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Spinor {
    pub r: Complex64,
    pub l: Complex64,
}

impl Spinor {
    pub fn new(r: Complex64, l: Complex64) -> Self {
        Self { r, l }
    }

    pub fn get(&self, spin: Spin) -> Complex64 {
        match spin {
            Spin::R => self.r,
            Spin::L => self.l,
        }
    }

    fn get_mut(&mut self, spin: Spin) -> &mut Complex64 {
        match spin {
            Spin::R => &mut self.r,
            Spin::L => &mut self.l,
        }
    }

    /// Polarization-summed population `|a_R|² + |a_L|²`.
    pub fn population(&self) -> f64 {
        self.r.norm_sqr() + self.l.norm_sqr()
    }

    pub fn is_zero(&self) -> bool {
        self.r == ZERO && self.l == ZERO
    }
}

/// A pure state `Σ_m (a_R(m)|R, m⟩ + a_L(m)|L, m⟩)` stored sparsely by `m`.
///
/// Sites whose spinor is exactly zero are never stored. Operations return new
/// states; no amplitude is ever dropped unless [`SpinOrbitState::pruned`] is
/// called explicitly.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SpinOrbitState {
    amps: BTreeMap<i64, Spinor>,
}

impl SpinOrbitState {
    /// `|spin, m⟩`.
    pub fn basis_state(spin: Spin, m: i64) -> Self {
        let mut spinor = Spinor::default();
        *spinor.get_mut(spin) = Complex64::new(1.0, 0.0);
        Self {
            amps: BTreeMap::from([(m, spinor)]),
        }
    }

    /// Normalized linear combination of basis kets. Repeated kets add up.
    pub fn superpose(terms: &[(Complex64, Spin, i64)]) -> Result<Self> {
        let mut state = Self::from_terms(terms.iter().copied());
        let norm = state.norm();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::ZeroSuperposition);
        }
        state.scale(1.0 / norm);
        Ok(state)
    }

    /// Unnormalized state from raw terms.
    pub fn from_terms(terms: impl IntoIterator<Item = (Complex64, Spin, i64)>) -> Self {
        let mut amps: BTreeMap<i64, Spinor> = BTreeMap::new();
        for (coeff, spin, m) in terms {
            *amps.entry(m).or_default().get_mut(spin) += coeff;
        }
        amps.retain(|_, s| !s.is_zero());
        Self { amps }
    }

    fn scale(&mut self, factor: f64) {
        for s in self.amps.values_mut() {
            s.r *= factor;
            s.l *= factor;
        }
    }

    pub fn amplitude(&self, spin: Spin, m: i64) -> Complex64 {
        self.amps.get(&m).map_or(ZERO, |s| s.get(spin))
    }

    pub fn spinor(&self, m: i64) -> Spinor {
        self.amps.get(&m).copied().unwrap_or_default()
    }

    /// Sites in ascending `m`.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &Spinor)> + '_ {
        self.amps.iter().map(|(&m, s)| (m, s))
    }

    /// Number of stored OAM sites.
    pub fn support_len(&self) -> usize {
        self.amps.len()
    }

    pub fn support_bounds(&self) -> Option<(i64, i64)> {
        let lo = *self.amps.keys().next()?;
        let hi = *self.amps.keys().next_back()?;
        Some((lo, hi))
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.values().map(Spinor::population).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// `⟨self|other⟩`, antilinear in `self`.
    pub fn inner_product(&self, other: &SpinOrbitState) -> Complex64 {
        self.amps
            .iter()
            .filter_map(|(m, a)| other.amps.get(m).map(|b| a.r.conj() * b.r + a.l.conj() * b.l))
            .sum()
    }

    /// Applies `coin` to the spinor at every site; OAM is untouched.
    pub fn apply_coin(&self, coin: &CoinOperator) -> SpinOrbitState {
        let amps = self
            .amps
            .iter()
            .filter_map(|(&m, s)| {
                let (r, l) = coin.apply(s.r, s.l);
                let out = Spinor::new(r, l);
                (!out.is_zero()).then_some((m, out))
            })
            .collect();
        Self { amps }
    }

    /// Relabels every basis ket `|s, m⟩` as `f(s, m)`, carrying its amplitude.
    /// `f` must be injective.
    pub(crate) fn permuted(&self, f: impl Fn(Spin, i64) -> (Spin, i64)) -> SpinOrbitState {
        let mut amps: BTreeMap<i64, Spinor> = BTreeMap::new();
        for (&m, s) in &self.amps {
            for spin in [Spin::R, Spin::L] {
                let a = s.get(spin);
                if a != ZERO {
                    let (spin2, m2) = f(spin, m);
                    *amps.entry(m2).or_default().get_mut(spin2) = a;
                }
            }
        }
        Self { amps }
    }

    /// The walk's spin-conditional translation: `|R, m⟩ → |R, m − stride⟩`,
    /// `|L, m⟩ → |L, m + stride⟩`.
    pub fn conditional_shift(&self, stride: u32) -> Result<SpinOrbitState> {
        if stride == 0 {
            return Err(Error::ZeroStride);
        }
        let s = i64::from(stride);
        Ok(self.permuted(|spin, m| (spin, m + s * spin.sz())))
    }

    /// Inverse of [`conditional_shift`](Self::conditional_shift).
    pub fn reverse_conditional_shift(&self, stride: u32) -> Result<SpinOrbitState> {
        if stride == 0 {
            return Err(Error::ZeroStride);
        }
        let s = i64::from(stride);
        Ok(self.permuted(|spin, m| (spin, m - s * spin.sz())))
    }

    /// Multiplies each amplitude by `phase(spin, m)`, a unit-modulus factor.
    pub fn with_phases(&self, phase: impl Fn(Spin, i64) -> Complex64) -> SpinOrbitState {
        let amps = self
            .amps
            .iter()
            .map(|(&m, s)| (m, Spinor::new(s.r * phase(Spin::R, m), s.l * phase(Spin::L, m))))
            .collect();
        Self { amps }
    }

    /// Polarization-summed OAM populations.
    pub fn oam_marginal(&self) -> Distribution {
        Distribution::new(self.amps.iter().map(|(&m, s)| (m, s.population())))
    }

    /// Drops amplitudes with `|a|² < eps`.
    pub fn pruned(&self, eps: f64) -> SpinOrbitState {
        let keep = |a: Complex64| if a.norm_sqr() < eps { ZERO } else { a };
        let amps = self
            .amps
            .iter()
            .map(|(&m, s)| (m, Spinor::new(keep(s.r), keep(s.l))))
            .filter(|(_, s)| !s.is_zero())
            .collect();
        Self { amps }
    }

    /// Largest `|a − b|` over all kets of either state.
    pub fn max_amplitude_distance(&self, other: &SpinOrbitState) -> f64 {
        self.amps
            .keys()
            .chain(other.amps.keys())
            .flat_map(|&m| {
                let (a, b) = (self.spinor(m), other.spinor(m));
                [(a.r - b.r).norm(), (a.l - b.l).norm()]
            })
            .fold(0.0, f64::max)
    }

    /// Debug dump: one line `m a_R.re a_R.im a_L.re a_L.im` per site, `m` ascending.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (m, s) in &self.amps {
            writeln!(out, "{} {:e} {:e} {:e} {:e}", m, s.r.re, s.r.im, s.l.re, s.l.im).unwrap();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polarization::hadamard_rl;
    use proptest::prelude::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn basis_states() {
        let s = SpinOrbitState::basis_state(Spin::R, 0);
        assert_eq!(s.amplitude(Spin::R, 0), c(1.0, 0.0));
        assert_eq!(s.norm(), 1.0);
        let s = SpinOrbitState::basis_state(Spin::L, -5);
        assert_eq!(s.amplitude(Spin::L, -5), c(1.0, 0.0));
        assert_eq!(s.amplitude(Spin::R, -5), ZERO);
        assert_eq!(s.support_len(), 1);
    }

    #[test]
    fn horizontal_polarization_superposition() {
        let h = SpinOrbitState::superpose(&[(c(1.0, 0.0), Spin::R, 0), (c(1.0, 0.0), Spin::L, 0)]).unwrap();
        assert!((h.amplitude(Spin::R, 0) - c(FRAC_1_SQRT_2, 0.0)).norm() < 1e-15);
        assert!((h.amplitude(Spin::L, 0) - c(FRAC_1_SQRT_2, 0.0)).norm() < 1e-15);

        let sym = SpinOrbitState::superpose(&[(c(1.0, 0.0), Spin::R, 0), (c(0.0, 1.0), Spin::L, 0)]).unwrap();
        assert!((sym.norm() - 1.0).abs() < 1e-15);
        assert!((sym.amplitude(Spin::L, 0) - c(0.0, FRAC_1_SQRT_2)).norm() < 1e-15);

        let r1 = SpinOrbitState::superpose(&[(c(2.0, 0.0), Spin::R, 1)]).unwrap();
        assert_eq!(r1, SpinOrbitState::basis_state(Spin::R, 1));
    }

    #[test]
    fn zero_superposition_rejected() {
        assert_eq!(SpinOrbitState::superpose(&[]), Err(Error::ZeroSuperposition));
        assert_eq!(
            SpinOrbitState::superpose(&[(ZERO, Spin::R, 0), (ZERO, Spin::L, 3)]),
            Err(Error::ZeroSuperposition)
        );
    }

    #[test]
    fn coin_splits_r() {
        let out = SpinOrbitState::basis_state(Spin::R, 0).apply_coin(&hadamard_rl());
        let h = SpinOrbitState::superpose(&[(c(1.0, 0.0), Spin::R, 0), (c(1.0, 0.0), Spin::L, 0)]).unwrap();
        assert!(out.max_amplitude_distance(&h) < 1e-15);
        assert_eq!(h.apply_coin(&CoinOperator::identity()), h);
    }

    #[test]
    fn coin_on_step_one_state() {
        let step1 = SpinOrbitState::superpose(&[(c(1.0, 0.0), Spin::R, -1), (c(1.0, 0.0), Spin::L, 1)]).unwrap();
        let out = step1.apply_coin(&hadamard_rl());
        let expected = SpinOrbitState::from_terms([
            (c(0.5, 0.0), Spin::R, -1),
            (c(0.5, 0.0), Spin::L, -1),
            (c(0.5, 0.0), Spin::R, 1),
            (c(-0.5, 0.0), Spin::L, 1),
        ]);
        assert!(out.max_amplitude_distance(&expected) < 1e-15);
    }

    #[test]
    fn shift_moves_r_down_and_l_up() {
        let h = SpinOrbitState::superpose(&[(c(1.0, 0.0), Spin::R, 0), (c(1.0, 0.0), Spin::L, 0)]).unwrap();
        let shifted = h.conditional_shift(1).unwrap();
        assert_eq!(shifted.amplitude(Spin::R, -1), h.amplitude(Spin::R, 0));
        assert_eq!(shifted.amplitude(Spin::L, 1), h.amplitude(Spin::L, 0));
        assert!((shifted.amplitude(Spin::R, -1) - c(FRAC_1_SQRT_2, 0.0)).norm() < 1e-15);
        assert_eq!(shifted.support_len(), 2);

        let l = SpinOrbitState::basis_state(Spin::L, 3).conditional_shift(2).unwrap();
        assert_eq!(l, SpinOrbitState::basis_state(Spin::L, 5));
        assert_eq!(h.conditional_shift(0), Err(Error::ZeroStride));
    }

    #[test]
    fn inner_products() {
        let r = SpinOrbitState::basis_state(Spin::R, 0);
        let l = SpinOrbitState::basis_state(Spin::L, 0);
        assert_eq!(r.inner_product(&l), ZERO);
        assert_eq!(r.inner_product(&r), c(1.0, 0.0));
        let a = SpinOrbitState::from_terms([(c(0.0, 1.0), Spin::R, 2)]);
        assert_eq!(a.inner_product(&a), c(1.0, 0.0));
        assert_eq!(a.inner_product(&SpinOrbitState::basis_state(Spin::R, 2)), c(0.0, -1.0));
    }

    #[test]
    fn dump_format() {
        let s = SpinOrbitState::from_terms([(c(0.5, -0.25), Spin::R, 1), (c(1.0, 0.0), Spin::L, -2)]);
        assert_eq!(s.dump(), "-2 0e0 0e0 1e0 0e0\n1 5e-1 -2.5e-1 0e0 0e0\n");
    }

    #[test]
    fn prune_drops_tiny_amplitudes() {
        let s = SpinOrbitState::from_terms([(c(1.0, 0.0), Spin::R, 0), (c(1e-20, 0.0), Spin::L, 7)]);
        assert_eq!(s.pruned(1e-50), s);
        assert_eq!(s.pruned(1e-30), SpinOrbitState::basis_state(Spin::R, 0));
    }

    fn any_state() -> impl Strategy<Value = SpinOrbitState> {
        proptest::collection::vec(((-1.0f64..1.0, -1.0f64..1.0), any::<bool>(), -20i64..20), 1..12)
            .prop_filter_map("nonzero", |terms| {
                let terms: Vec<_> = terms
                    .into_iter()
                    .map(|((re, im), r, m)| (c(re, im), if r { Spin::R } else { Spin::L }, m))
                    .collect();
                SpinOrbitState::superpose(&terms).ok()
            })
    }

    proptest! {
        #[test]
        fn shift_is_invertible_and_norm_preserving(state in any_state(), stride in 1u32..5) {
            let shifted = state.conditional_shift(stride).unwrap();
            prop_assert!((shifted.norm() - 1.0).abs() < 1e-12);
            prop_assert_eq!(shifted.reverse_conditional_shift(stride).unwrap(), state);
        }

        #[test]
        fn coin_preserves_norm(state in any_state(), theta in -3.0f64..3.0) {
            let coin = crate::polarization::WavePlate::quarter(theta).unwrap().coin();
            prop_assert!((state.apply_coin(&coin).norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn long_alternation_keeps_norm() {
        let mut s = SpinOrbitState::basis_state(Spin::R, 0);
        let h = hadamard_rl();
        for _ in 0..1000 {
            s = s.apply_coin(&h).conditional_shift(1).unwrap();
        }
        assert!((s.norm() - 1.0).abs() < 1e-10);
    }
}
