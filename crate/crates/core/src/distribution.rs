use std::collections::BTreeMap;

/// Mass deviation from 1 tolerated by [`Distribution::is_normalized`].
pub const NORMALIZATION_TOLERANCE: f64 = 1e-9;

/// Probabilities over integer positions (OAM indices for the quantum walk,
/// lattice sites for the classical one). Zero-probability sites are absent.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Distribution {
    probs: BTreeMap<i64, f64>,
    normalized: bool,
}

impl Distribution {
    /// Builds a distribution, dropping zero entries and flagging whether the
    /// total mass is 1 within [`NORMALIZATION_TOLERANCE`].
    ///
    /// Panics if any probability is negative or not finite.
    pub fn new(probs: impl IntoIterator<Item = (i64, f64)>) -> Self {
        let probs: BTreeMap<i64, f64> = probs.into_iter().filter(|&(_, p)| p != 0.0).collect();
        assert!(
            probs.values().all(|p| p.is_finite() && *p >= 0.0),
            "probabilities must be finite and non-negative"
        );
        let mass: f64 = probs.values().sum();
        Self {
            probs,
            normalized: (mass - 1.0).abs() <= NORMALIZATION_TOLERANCE,
        }
    }

    pub fn point(x: i64) -> Self {
        Self::new([(x, 1.0)])
    }

    pub fn get(&self, x: i64) -> f64 {
        self.probs.get(&x).copied().unwrap_or(0.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, f64)> + '_ {
        self.probs.iter().map(|(&x, &p)| (x, p))
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    pub fn total_mass(&self) -> f64 {
        self.probs.values().sum()
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    /// Smallest and largest position carrying mass.
    pub fn support_bounds(&self) -> Option<(i64, i64)> {
        let lo = *self.probs.keys().next()?;
        let hi = *self.probs.keys().next_back()?;
        Some((lo, hi))
    }

    pub fn as_map(&self) -> &BTreeMap<i64, f64> {
        &self.probs
    }

    /// Largest pointwise difference over the union of supports.
    pub fn max_abs_difference(&self, other: &Distribution) -> f64 {
        self.probs
            .keys()
            .chain(other.probs.keys())
            .map(|&x| (self.get(x) - other.get(x)).abs())
            .fold(0.0, f64::max)
    }
}
