//! Brute-force reference: the walk operator as an explicit dense matrix on a
//! truncated OAM lattice, built from Kronecker/permutation pieces and applied
//! by plain matrix-vector products. Shares nothing with the sparse engine
//! beyond the 2×2 coin entries.

#![allow(dead_code)]

use num_complex::Complex64;
use qwalk::polarization::Mat2;
use qwalk::{Spin, SpinOrbitState};

pub type Matrix = Vec<Vec<Complex64>>;

pub struct DenseLattice {
    pub m_min: i64,
    pub m_max: i64,
}

impl DenseLattice {
    pub fn new(m_min: i64, m_max: i64) -> Self {
        Self { m_min, m_max }
    }

    pub fn sites(&self) -> usize {
        (self.m_max - self.m_min + 1) as usize
    }

    pub fn dim(&self) -> usize {
        2 * self.sites()
    }

    pub fn index(&self, spin: Spin, m: i64) -> Option<usize> {
        if m < self.m_min || m > self.m_max {
            return None;
        }
        let s = match spin {
            Spin::R => 0,
            Spin::L => 1,
        };
        Some(2 * (m - self.m_min) as usize + s)
    }

    fn zeros(&self) -> Matrix {
        vec![vec![Complex64::new(0.0, 0.0); self.dim()]; self.dim()]
    }

    /// `I_sites ⊗ coin`.
    pub fn coin_matrix(&self, coin: &Mat2) -> Matrix {
        let mut out = self.zeros();
        for site in 0..self.sites() {
            for a in 0..2 {
                for b in 0..2 {
                    out[2 * site + a][2 * site + b] = coin[a][b];
                }
            }
        }
        out
    }

    /// R moves down by `stride`, L moves up; amplitude leaving the lattice is lost.
    pub fn shift_matrix(&self, stride: i64) -> Matrix {
        let mut out = self.zeros();
        for m in self.m_min..=self.m_max {
            for (spin, dm) in [(Spin::R, -stride), (Spin::L, stride)] {
                let from = self.index(spin, m).unwrap();
                if let Some(to) = self.index(spin, m + dm) {
                    out[to][from] = Complex64::new(1.0, 0.0);
                }
            }
        }
        out
    }

    pub fn step_matrix(&self, coin: &Mat2, stride: i64) -> Matrix {
        matmul(&self.shift_matrix(stride), &self.coin_matrix(coin))
    }

    pub fn vector(&self, state: &SpinOrbitState) -> Vec<Complex64> {
        let mut v = vec![Complex64::new(0.0, 0.0); self.dim()];
        for (m, s) in state.iter() {
            v[self.index(Spin::R, m).expect("state outside lattice")] = s.r;
            v[self.index(Spin::L, m).expect("state outside lattice")] = s.l;
        }
        v
    }

    pub fn amplitude(&self, v: &[Complex64], spin: Spin, m: i64) -> Complex64 {
        v[self.index(spin, m).unwrap()]
    }

    /// Max |dense − sparse| over the whole lattice, plus sparse mass outside it.
    pub fn max_deviation(&self, v: &[Complex64], state: &SpinOrbitState) -> f64 {
        let mut worst: f64 = 0.0;
        for m in self.m_min..=self.m_max {
            for spin in [Spin::R, Spin::L] {
                worst = worst.max((self.amplitude(v, spin, m) - state.amplitude(spin, m)).norm());
            }
        }
        for (m, s) in state.iter() {
            if m < self.m_min || m > self.m_max {
                worst = worst.max(s.population().sqrt());
            }
        }
        worst
    }
}

pub fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let mut out = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i][k];
            if aik == Complex64::new(0.0, 0.0) {
                continue;
            }
            for j in 0..n {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

pub fn matvec(a: &Matrix, v: &[Complex64]) -> Vec<Complex64> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

/// `Uⁿ v` by repeated products.
pub fn evolve(u: &Matrix, v: &[Complex64], steps: usize) -> Vec<Complex64> {
    (0..steps).fold(v.to_vec(), |acc, _| matvec(u, &acc))
}

/// `Σ_s |v(s, m)|²` per site, with `σ` of that distribution.
pub fn sigma(lattice: &DenseLattice, v: &[Complex64]) -> f64 {
    let probs: Vec<(f64, f64)> = (lattice.m_min..=lattice.m_max)
        .map(|m| {
            let p = lattice.amplitude(v, Spin::R, m).norm_sqr() + lattice.amplitude(v, Spin::L, m).norm_sqr();
            (m as f64, p)
        })
        .collect();
    let mean: f64 = probs.iter().map(|(x, p)| x * p).sum();
    probs.iter().map(|(x, p)| (x - mean).powi(2) * p).sum::<f64>().sqrt()
}
