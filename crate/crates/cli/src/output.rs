//! Output records and text renderers.
//!
//! JSON goes through `serde_json`, whose float formatting is the shortest
//! representation that parses back to the identical `f64`.

use std::fmt::Write as _;

use clap::ValueEnum;
use qwalk::Distribution;
use serde::Serialize;

pub const HISTOGRAM_WIDTH: usize = 60;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Serialize)]
pub struct Entry {
    pub m: i64,
    pub p: f64,
}

pub fn entries(d: &Distribution) -> Vec<Entry> {
    d.iter().map(|(m, p)| Entry { m, p }).collect()
}

#[derive(Debug, Serialize)]
pub struct WalkReport {
    pub steps: usize,
    pub coin: &'static str,
    pub init: String,
    pub distribution: Vec<Entry>,
    pub mean: f64,
    pub stddev: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trajectory: Option<Vec<Vec<Entry>>>,
}

#[derive(Debug, Serialize)]
pub struct CircuitReport {
    pub circuit: String,
    pub window: [i64; 2],
    pub normalized: bool,
    pub captured_mass: f64,
    pub distribution: Vec<Entry>,
    pub mean: Option<f64>,
    pub stddev: Option<f64>,
}

#[derive(Debug, Serialize)]
pub struct ClassicalReport {
    pub steps: u32,
    pub method: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub distribution: Vec<Entry>,
    pub mean: f64,
    pub stddev: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub total_variation_to_exact: Option<f64>,
}

#[derive(Debug, Serialize)]
pub struct CompareRow {
    pub n: usize,
    pub sigma_q: f64,
    pub sigma_c: f64,
    pub ratio: f64,
}

#[derive(Debug, Serialize)]
pub struct FitReport {
    pub slope: f64,
    pub r_squared: f64,
}

#[derive(Debug, Serialize)]
pub struct CompareReport {
    pub init: String,
    pub coin: &'static str,
    pub rows: Vec<CompareRow>,
    pub qrw_fit: Option<FitReport>,
    pub crw_fit: Option<FitReport>,
    /// Slope quoted for the quantum spread, √2/2.
    pub reference_slope: f64,
}

impl CompareReport {
    pub fn csv(&self) -> String {
        let mut out = String::from("n,sigma_q,sigma_c,ratio\n");
        for r in &self.rows {
            writeln!(out, "{},{},{},{}", r.n, r.sigma_q, r.sigma_c, r.ratio).unwrap();
        }
        out
    }

    pub fn fit_summary(&self) -> String {
        let mut out = String::new();
        for (name, fit) in [("qrw", &self.qrw_fit), ("crw", &self.crw_fit)] {
            match fit {
                Some(f) => writeln!(out, "{name}_fit slope={} r_squared={}", f.slope, f.r_squared).unwrap(),
                None => writeln!(out, "{name}_fit unavailable (need at least 3 step counts)").unwrap(),
            }
        }
        writeln!(out, "reference_slope={}", self.reference_slope).unwrap();
        out
    }
}

pub fn distribution_csv(d: &Distribution) -> String {
    let mut out = String::from("m,p\n");
    for (m, p) in d.iter() {
        writeln!(out, "{m},{p}").unwrap();
    }
    out
}

pub fn trajectory_csv(steps: &[Distribution]) -> String {
    let mut out = String::from("step,m,p\n");
    for (k, d) in steps.iter().enumerate() {
        for (m, p) in d.iter() {
            writeln!(out, "{k},{m},{p}").unwrap();
        }
    }
    out
}

/// One row per OAM index from the lowest to the highest occupied one; the
/// most probable row spans [`HISTOGRAM_WIDTH`] columns.
pub fn ascii_histogram(d: &Distribution) -> String {
    let mut out = String::new();
    let Some((lo, hi)) = d.support_bounds() else {
        return out;
    };
    let peak = d.iter().map(|(_, p)| p).fold(0.0, f64::max);
    for m in lo..=hi {
        let p = d.get(m);
        let len = ((p / peak) * HISTOGRAM_WIDTH as f64).round() as usize;
        writeln!(out, "{m:>6} |{:<width$}| {p:.6}", "#".repeat(len), width = HISTOGRAM_WIDTH).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn histogram_scales_to_width() {
        let d = Distribution::new([(-1, 0.25), (1, 0.75)]);
        let h = ascii_histogram(&d);
        let lines: Vec<&str> = h.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[2].matches('#').count(), HISTOGRAM_WIDTH);
        assert_eq!(lines[0].matches('#').count(), 20);
        assert_eq!(lines[1].matches('#').count(), 0);
        assert_eq!(ascii_histogram(&Distribution::default()), "");
    }

    #[test]
    fn csv_layout() {
        let d = Distribution::new([(2, 0.25), (-2, 0.25), (0, 0.5)]);
        assert_eq!(distribution_csv(&d), "m,p\n-2,0.25\n0,0.5\n2,0.25\n");
    }

    #[test]
    fn json_entries() {
        let d = Distribution::new([(-1, 0.625), (0, 1.0 - 0.625)]);
        let s = serde_json::to_string(&entries(&d)).unwrap();
        assert_eq!(s, r#"[{"m":-1,"p":0.625},{"m":0,"p":0.375}]"#);
    }
}
