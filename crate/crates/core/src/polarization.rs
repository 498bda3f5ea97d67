//! Jones calculus for ideal wave plates and the coin operators they realize.
//!
//! Linear-basis matrices act on `(H, V)` amplitudes. Coins act on `(R, L)`
//! amplitudes, with the circular states written in the linear basis as
//! `|R⟩ = (1, −i)/√2` and `|L⟩ = (1, +i)/√2`. The quarter-wave plate puts its
//! `+i` retardance on the slow axis and every global phase is dropped, so
//! operator equality is only meaningful up to a global phase (see
//! [`equal_up_to_phase`]).

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Row-major 2×2 complex matrix.
pub type Mat2 = [[Complex64; 2]; 2];

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// Maximum entry deviation accepted when validating user supplied operators.
pub const UNITARITY_TOLERANCE: f64 = 1e-9;

/// Tolerance on `|entry|² = 1/2` for a coin to count as balanced.
pub const BALANCE_TOLERANCE: f64 = 1e-10;

pub(crate) fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out = [[ZERO; 2]; 2];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

pub(crate) fn adjoint(a: &Mat2) -> Mat2 {
    [
        [a[0][0].conj(), a[1][0].conj()],
        [a[0][1].conj(), a[1][1].conj()],
    ]
}

fn identity() -> Mat2 {
    [[ONE, ZERO], [ZERO, ONE]]
}

fn max_entry_distance(a: &Mat2, b: &Mat2) -> f64 {
    a.iter()
        .flatten()
        .zip(b.iter().flatten())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Max entry norm of `A†A − I`.
pub fn unitarity_deviation(a: &Mat2) -> f64 {
    max_entry_distance(&mat_mul(&adjoint(a), a), &identity())
}

/// Phase-insensitive overlap `|tr(A†B)| / 2`; equals 1 iff `B = e^{iγ} A` for unitaries.
pub fn fidelity(a: &Mat2, b: &Mat2) -> f64 {
    let prod = mat_mul(&adjoint(a), b);
    (prod[0][0] + prod[1][1]).norm() / 2.0
}

/// Operator equality up to a global phase, at fidelity `1 − 1e−12`.
pub fn equal_up_to_phase(a: &Mat2, b: &Mat2) -> bool {
    fidelity(a, b) >= 1.0 - 1e-12
}

fn rotation(theta: f64) -> Mat2 {
    let (s, c) = theta.sin_cos();
    [
        [Complex64::new(c, 0.0), Complex64::new(-s, 0.0)],
        [Complex64::new(s, 0.0), Complex64::new(c, 0.0)],
    ]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PlateKind {
    Half,
    Quarter,
}

/// An ideal wave plate with its fast axis at `angle` radians from horizontal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WavePlate {
    kind: PlateKind,
    angle: f64,
}

impl WavePlate {
    pub fn new(kind: PlateKind, angle: f64) -> Result<Self> {
        if !angle.is_finite() {
            return Err(Error::NonFiniteAngle(angle));
        }
        Ok(Self { kind, angle })
    }

    pub fn half(angle: f64) -> Result<Self> {
        Self::new(PlateKind::Half, angle)
    }

    pub fn quarter(angle: f64) -> Result<Self> {
        Self::new(PlateKind::Quarter, angle)
    }

    pub fn from_degrees(kind: PlateKind, degrees: f64) -> Result<Self> {
        Self::new(kind, degrees.to_radians())
    }

    pub fn kind(&self) -> PlateKind {
        self.kind
    }

    /// Fast-axis angle in radians, as constructed.
    pub fn angle(&self) -> f64 {
        self.angle
    }

    /// The plate as a coin on circular polarization.
    pub fn coin(&self) -> CoinOperator {
        to_circular(&jones_linear(self)).expect("ideal wave plates are unitary")
    }
}

/// A 2×2 Jones matrix in the linear `(H, V)` basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JonesMatrix(Mat2);

impl JonesMatrix {
    pub fn new(entries: Mat2) -> Self {
        Self(entries)
    }

    pub fn entries(&self) -> &Mat2 {
        &self.0
    }
}

/// A unitary coin on the circular `(R, L)` basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoinOperator(Mat2);

impl CoinOperator {
    /// Wraps `entries`, rejecting matrices whose unitarity deviation reaches
    /// [`UNITARITY_TOLERANCE`].
    pub fn new(entries: Mat2) -> Result<Self> {
        let deviation = unitarity_deviation(&entries);
        if deviation.is_nan() || deviation >= UNITARITY_TOLERANCE {
            return Err(Error::NonUnitary { deviation });
        }
        Ok(Self(entries))
    }

    pub fn identity() -> Self {
        Self(identity())
    }

    pub fn entries(&self) -> &Mat2 {
        &self.0
    }

    pub fn adjoint(&self) -> Self {
        Self(adjoint(&self.0))
    }

    /// `self · [r, l]ᵀ`.
    pub fn apply(&self, r: Complex64, l: Complex64) -> (Complex64, Complex64) {
        let m = &self.0;
        (m[0][0] * r + m[0][1] * l, m[1][0] * r + m[1][1] * l)
    }

    pub fn equal_up_to_phase(&self, other: &CoinOperator) -> bool {
        equal_up_to_phase(&self.0, &other.0)
    }

    /// True when every `|entry|²` is within `tol` of 1/2.
    pub fn is_balanced(&self, tol: f64) -> bool {
        self.0.iter().flatten().all(|z| (z.norm_sqr() - 0.5).abs() < tol)
    }
}

/// Linear-basis Jones matrix of an ideal plate. The angle is reduced to
/// `[0, π)` first since both plate kinds are π-periodic.
pub fn jones_linear(plate: &WavePlate) -> JonesMatrix {
    let theta = plate.angle.rem_euclid(PI);
    let entries = match plate.kind {
        PlateKind::Half => {
            let (s, c) = (2.0 * theta).sin_cos();
            [
                [Complex64::new(c, 0.0), Complex64::new(s, 0.0)],
                [Complex64::new(s, 0.0), Complex64::new(-c, 0.0)],
            ]
        }
        PlateKind::Quarter => {
            let retarder = [[ONE, ZERO], [ZERO, I]];
            mat_mul(&mat_mul(&rotation(theta), &retarder), &rotation(-theta))
        }
    };
    JonesMatrix(entries)
}

/// Columns are `|R⟩` and `|L⟩` in the linear basis.
fn circular_basis() -> Mat2 {
    let s = FRAC_1_SQRT_2;
    [
        [Complex64::new(s, 0.0), Complex64::new(s, 0.0)],
        [Complex64::new(0.0, -s), Complex64::new(0.0, s)],
    ]
}

/// Changes a linear-basis operator into the circular basis, `T†·M·T`.
pub fn to_circular(op: &JonesMatrix) -> Result<CoinOperator> {
    let deviation = unitarity_deviation(&op.0);
    if deviation.is_nan() || deviation >= UNITARITY_TOLERANCE {
        return Err(Error::NonUnitary { deviation });
    }
    let t = circular_basis();
    Ok(CoinOperator(mat_mul(&mat_mul(&adjoint(&t), &op.0), &t)))
}

/// The Hadamard coin `(1/√2)[[1, 1], [1, −1]]` on `(R, L)`.
pub fn hadamard_rl() -> CoinOperator {
    let h = Complex64::new(FRAC_1_SQRT_2, 0.0);
    CoinOperator([[h, h], [h, -h]])
}

fn product_in_traversal_order<'a>(mats: impl Iterator<Item = &'a Mat2>) -> Option<Mat2> {
    mats.fold(None, |acc, m| Some(acc.map_or(*m, |a| mat_mul(m, &a))))
}

/// Product of coins in the order light meets them; `ops[0]` acts first.
pub fn compose(ops: &[CoinOperator]) -> Result<CoinOperator> {
    product_in_traversal_order(ops.iter().map(|c| &c.0))
        .map(CoinOperator)
        .ok_or(Error::EmptyComposition)
}

/// Linear-basis counterpart of [`compose`].
pub fn compose_jones(ops: &[JonesMatrix]) -> Result<JonesMatrix> {
    product_in_traversal_order(ops.iter().map(|j| &j.0))
        .map(JonesMatrix)
        .ok_or(Error::EmptyComposition)
}

/// Coin of the gray box: a QWP at 0° followed by a HWP at 22.5°.
pub fn graybox_coin() -> CoinOperator {
    let qwp = WavePlate::quarter(0.0).unwrap();
    let hwp = WavePlate::half(PI / 8.0).unwrap();
    to_circular(&compose_jones(&[jones_linear(&qwp), jones_linear(&hwp)]).unwrap()).unwrap()
}

/// Phases of a Hadamard-equivalent coin `D1 · H · D2`, with
/// `D1 = diag(e^{i·d1[0]}, e^{i·d1[1]})`, `D2 = diag(e^{i·d2[0]}, e^{i·d2[1]})`.
///
/// `d1[0]` is pinned to zero, which fixes the one remaining gauge freedom
/// (a phase moved from `D2` into `D1`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BalancedDecomposition {
    pub d1: [f64; 2],
    pub d2: [f64; 2],
    /// Max entry deviation of `D1·H·D2` from the decomposed operator.
    pub residual: f64,
}

impl BalancedDecomposition {
    /// The four phases `[d1_R, d1_L, d2_R, d2_L]`.
    pub fn phases(&self) -> [f64; 4] {
        [self.d1[0], self.d1[1], self.d2[0], self.d2[1]]
    }

    pub fn d1_diagonal(&self) -> [Complex64; 2] {
        self.d1.map(Complex64::cis)
    }

    pub fn d2_diagonal(&self) -> [Complex64; 2] {
        self.d2.map(Complex64::cis)
    }

    /// Rebuilds `D1 · H · D2`.
    pub fn reconstruct(&self) -> Mat2 {
        let h = hadamard_rl();
        let (a, b) = (self.d1_diagonal(), self.d2_diagonal());
        let mut out = *h.entries();
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell *= a[i] * b[j];
            }
        }
        out
    }
}

/// Writes a balanced coin as `D1 · H · D2`, or `None` when some `|entry|²`
/// differs from 1/2 by at least [`BALANCE_TOLERANCE`] or the residual is too large.
pub fn balanced_decomposition(op: &CoinOperator) -> Option<BalancedDecomposition> {
    if !op.is_balanced(BALANCE_TOLERANCE) {
        return None;
    }
    let m = op.entries();
    // With d1_R = 0: m00 ∝ e^{i d2_R}, m01 ∝ e^{i d2_L}, m10 ∝ e^{i (d1_L + d2_R)}.
    let d2_r = m[0][0].arg();
    let d2_l = m[0][1].arg();
    let d1_l = (m[1][0] * Complex64::cis(-d2_r)).arg();
    let mut decomposition = BalancedDecomposition {
        d1: [0.0, d1_l],
        d2: [d2_r, d2_l],
        residual: 0.0,
    };
    decomposition.residual = max_entry_distance(&decomposition.reconstruct(), m);
    (decomposition.residual < BALANCE_TOLERANCE).then_some(decomposition)
}
