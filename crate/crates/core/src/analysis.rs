//! Moments, distances and the linear-spread fit used to contrast ballistic
//! quantum spreading with diffusive classical spreading.

use crate::distribution::Distribution;
use crate::error::{Error, Result};

fn require_normalized(d: &Distribution) -> Result<()> {
    if d.is_normalized() {
        Ok(())
    } else {
        Err(Error::Unnormalized { mass: d.total_mass() })
    }
}

pub fn mean(d: &Distribution) -> Result<f64> {
    require_normalized(d)?;
    Ok(d.iter().map(|(x, p)| x as f64 * p).sum())
}

/// Central second moment.
pub fn variance(d: &Distribution) -> Result<f64> {
    let mu = mean(d)?;
    Ok(d.iter().map(|(x, p)| (x as f64 - mu).powi(2) * p).sum())
}

pub fn stddev(d: &Distribution) -> Result<f64> {
    variance(d).map(f64::sqrt)
}

/// `½ Σ_x |a(x) − b(x)|` over the union of supports.
pub fn total_variation(a: &Distribution, b: &Distribution) -> Result<f64> {
    require_normalized(a)?;
    require_normalized(b)?;
    let mut sum = 0.0;
    for (x, p) in a.iter() {
        sum += (p - b.get(x)).abs();
    }
    for (x, q) in b.iter() {
        if a.get(x) == 0.0 {
            sum += q;
        }
    }
    Ok((0.5 * sum).min(1.0))
}

/// Least-squares line through the origin, `σ ≈ slope · n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpreadFit {
    pub slope: f64,
    /// `1 − SS_res / SS_tot`, with `SS_tot` taken about the mean of σ.
    pub r_squared: f64,
}

pub fn spread_fit(sigma_by_n: &[(f64, f64)]) -> Result<SpreadFit> {
    if sigma_by_n.len() < 3 {
        return Err(Error::TooFewPoints(sigma_by_n.len()));
    }
    if sigma_by_n.windows(2).any(|w| w[1].0 <= w[0].0) {
        return Err(Error::NonIncreasingSteps);
    }
    let sxy: f64 = sigma_by_n.iter().map(|(n, s)| n * s).sum();
    let sxx: f64 = sigma_by_n.iter().map(|(n, _)| n * n).sum();
    let slope = sxy / sxx;
    let mean_sigma = sigma_by_n.iter().map(|(_, s)| s).sum::<f64>() / sigma_by_n.len() as f64;
    let ss_res: f64 = sigma_by_n.iter().map(|(n, s)| (s - slope * n).powi(2)).sum();
    let ss_tot: f64 = sigma_by_n.iter().map(|(_, s)| (s - mean_sigma).powi(2)).sum();
    let r_squared = if ss_tot == 0.0 {
        if ss_res == 0.0 { 1.0 } else { 0.0 }
    } else {
        1.0 - ss_res / ss_tot
    };
    Ok(SpreadFit { slope, r_squared })
}
